//! Naive reference arithmetic, written without the library.
//!
//! Ideals of a numerical semigroup ring are kept as row-reduced spans of
//! their images in `F_p[s]/(s^N)`. Shifts are added only below the tail
//! the span already contains, which keeps the spans small.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// A sparse series `sum c_d s^d`, coefficients in `[0, p)`.
pub type Sparse = BTreeMap<usize, u64>;
/// Polynomial in `t` with sparse series coefficients.
pub type Poly = Vec<Sparse>;

pub fn sparse(p: u64, terms: &[(usize, i64)]) -> Sparse {
    let mut out = Sparse::new();
    for &(d, c) in terms {
        let c = c.rem_euclid(p as i64) as u64;
        let e = out.entry(d).or_insert(0);
        *e = (*e + c) % p;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn poly(p: u64, coeffs: &[&[(usize, i64)]]) -> Poly {
    coeffs.iter().map(|c| sparse(p, c)).collect()
}

fn inv(p: u64, a: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub struct Naive {
    pub p: u64,
    pub n: usize,
    member: Vec<bool>,
}

/// Row-reduced basis keyed by pivot (lowest degree with nonzero coefficient).
#[derive(Clone, Debug)]
pub struct Span {
    rows: BTreeMap<usize, Vec<u64>>,
}

impl Naive {
    pub fn new(p: u64, gens: &[usize], n: usize) -> Naive {
        let mut member = vec![false; n];
        member[0] = true;
        for d in 1..n {
            member[d] = gens.iter().any(|&g| g <= d && member[d - g]);
        }
        Naive { p, n, member }
    }

    pub fn in_s(&self, d: usize) -> bool {
        self.member[d]
    }

    /// Least `c` with every degree from `c` up (inside the window) in S.
    pub fn conductor(&self) -> usize {
        (0..self.n).rev().find(|&d| !self.member[d]).map_or(0, |d| d + 1)
    }

    pub fn mul(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&da, &ca) in a {
            for (&db, &cb) in b {
                let e = out.entry(da + db).or_insert(0);
                *e = (*e + ca * cb) % self.p;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn poly_mul(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = vec![Sparse::new(); (f.len() + g.len()).saturating_sub(1)];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                for (d, c) in self.mul(a, b) {
                    let e = out[i + j].entry(d).or_insert(0);
                    *e = (*e + c) % self.p;
                }
            }
        }
        for c in &mut out {
            c.retain(|_, v| *v != 0);
        }
        while out.last().is_some_and(|c| c.is_empty()) {
            out.pop();
        }
        out
    }

    fn dense(&self, x: &Sparse, shift: usize) -> Option<Vec<u64>> {
        let mut v = vec![0; self.n];
        let mut any = false;
        for (&d, &c) in x {
            if d + shift < self.n {
                v[d + shift] = c;
                any = true;
            }
        }
        any.then_some(v)
    }

    fn insert(&self, span: &mut Span, mut v: Vec<u64>) {
        let p = self.p;
        loop {
            let Some(lead) = v.iter().position(|&c| c != 0) else { return };
            match span.rows.get(&lead) {
                Some(row) => {
                    let c = v[lead];
                    for (x, r) in v.iter_mut().zip(row) {
                        *x = (*x + p - c * r % p) % p;
                    }
                }
                None => {
                    let s = inv(p, v[lead]);
                    for x in v.iter_mut() {
                        *x = *x * s % p;
                    }
                    span.rows.insert(lead, v);
                    return;
                }
            }
        }
    }

    /// Smallest `t` such that the span has a pivot at every degree of S in `[t, n)`.
    fn tail(&self, span: &Span) -> usize {
        let mut t = self.n;
        while t > 0 && (!self.member[t - 1] || span.rows.contains_key(&(t - 1))) {
            t -= 1;
        }
        t
    }

    /// The ideal generated by `gens`, as seen in the window.
    pub fn ideal(&self, gens: &[Sparse]) -> Span {
        let mut span = Span { rows: BTreeMap::new() };
        let mut gens: Vec<&Sparse> = gens.iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by_key(|g| g.keys().next().copied());
        for a in 0..self.n {
            if !self.member[a] {
                continue;
            }
            let t = self.tail(&span);
            let mut added = false;
            for g in &gens {
                let o = *g.keys().next().unwrap();
                if a + o < t {
                    if let Some(v) = self.dense(g, a) {
                        self.insert(&mut span, v);
                        added = true;
                    }
                }
            }
            if !added && gens.iter().all(|g| a + g.keys().next().unwrap() >= t) {
                break;
            }
        }
        span
    }

    pub fn monomial_ideal(&self, exps: &[usize]) -> Span {
        let gens: Vec<Sparse> = exps.iter().map(|&d| sparse(self.p, &[(d, 1)])).collect();
        self.ideal(&gens)
    }

    fn as_sparse(&self, v: &[u64]) -> Sparse {
        v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(d, c)| (d, *c)).collect()
    }

    /// Rows whose pivot is a minimal element of the value set, plus the tail.
    /// Any element reduces to zero against these by cancelling leading terms.
    pub fn generators(&self, a: &Span) -> Vec<Sparse> {
        let t = self.tail(a);
        let minimal = |d: usize| !a.rows.keys().any(|&d2| d2 < d && self.member[d - d2]);
        let mut out: Vec<Sparse> = a
            .rows
            .iter()
            .filter(|(k, _)| **k < t && minimal(**k))
            .map(|(_, v)| self.as_sparse(v))
            .collect();
        // d = (d - e) + e covers every tail degree whose predecessor by e is in the tail
        let e = (1..self.n).find(|&d| self.member[d]).unwrap_or(self.n);
        for d in t..self.n {
            if self.member[d] && !(d >= t + e && self.member[d - e]) {
                out.push(sparse(self.p, &[(d, 1)]));
            }
        }
        out
    }

    pub fn product(&self, a: &Span, b: &Span) -> Span {
        let ga = self.generators(a);
        let gb = self.generators(b);
        let mut prods = Vec::new();
        for x in &ga {
            for y in &gb {
                prods.push(self.mul(x, y));
            }
        }
        self.ideal(&prods)
    }

    pub fn power(&self, a: &Span, k: usize) -> Span {
        let mut out = self.monomial_ideal(&[0]);
        for _ in 0..k {
            out = self.product(&out, a);
        }
        out
    }

    pub fn content(&self, f: &Poly) -> Span {
        self.ideal(f)
    }

    /// `dim I/mI`.
    pub fn mu(&self, a: &Span) -> usize {
        let gens: Vec<usize> = (1..self.n).filter(|&d| self.member[d]).collect();
        let m = self.monomial_ideal(&gens);
        a.rows.len() - self.product(a, &m).rows.len()
    }

    pub fn min_order(&self, a: &Span) -> Option<usize> {
        a.rows.keys().next().copied()
    }

    pub fn value_set(&self, a: &Span) -> Vec<usize> {
        a.rows.keys().copied().collect()
    }

    /// Offsets `1 <= i < e` above the least order realized by the ideal.
    pub fn gamma(&self, a: &Span, e: usize) -> Vec<usize> {
        let n = self.min_order(a).unwrap();
        (1..e).filter(|i| a.rows.contains_key(&(n + i))).collect()
    }

    /// Closure in a ring whose normalization is `F[[s]]`: orders at least the least order.
    pub fn closure(&self, a: &Span) -> Span {
        let n = self.min_order(a).unwrap();
        let exps: Vec<usize> = (n..self.n).filter(|&d| self.member[d]).collect();
        self.monomial_ideal(&exps)
    }

    fn contains(&self, span: &Span, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        let p = self.p;
        loop {
            let Some(lead) = v.iter().position(|&c| c != 0) else { return true };
            let Some(row) = span.rows.get(&lead) else { return false };
            let c = v[lead];
            for (x, r) in v.iter_mut().zip(row) {
                *x = (*x + p - c * r % p) % p;
            }
        }
    }

    pub fn le(&self, a: &Span, b: &Span) -> bool {
        a.rows.values().all(|v| self.contains(b, v))
    }

    pub fn eq(&self, a: &Span, b: &Span) -> bool {
        a.rows.len() == b.rows.len() && self.le(a, b)
    }

    /// Smallest `k >= 1` with `c(fg) c(f)^(k-1) = c(f)^k c(g)`.
    pub fn k_min(&self, f: &Poly, g: &Poly) -> usize {
        let cf = self.content(f);
        let cg = self.content(g);
        let cfg = self.content(&self.poly_mul(f, g));
        let mut pw = self.monomial_ideal(&[0]);
        for k in 1..=g.len() {
            let lhs = self.product(&cfg, &pw);
            pw = self.product(&pw, &cf);
            let rhs = self.product(&pw, &cg);
            if self.eq(&lhs, &rhs) {
                return k;
            }
        }
        g.len()
    }
}
