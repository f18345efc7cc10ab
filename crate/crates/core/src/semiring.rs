//! Numerical semigroup rings `R = F_p[[s^a_1, ..., s^a_k]]` inside the DVR `F_p[[s]]`.
//!
//! Elements of `R` are stored exactly as finite power series ([`Series`]); ideals
//! are stored as subspaces of a valuation window. A nonzero ideal `I` with
//! `I R̄ = s^n R̄` contains every series of order `>= n + c`, so all of its
//! structure lives in degrees `[n, n + c)`. [`IdealVS`] keeps the coordinates
//! `S ∩ [n, hi)` with `hi >= n + c + e + 1`, which is enough to certify
//! equality, products, minimal generators and the value set exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{PrimeField, Subspace};

/// How far past the valuation of an ideal its coordinates are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Precision {
    /// Each ideal of order `n` is kept on `[n, n + c + e + 1 + margin)`.
    Auto { margin: usize },
    /// A single global truncation `N`; computations needing more are refused.
    Fixed(usize),
}

impl Default for Precision {
    fn default() -> Self {
        Precision::Auto { margin: 0 }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemigroupRing {
    field: PrimeField,
    gens: Vec<usize>,
    multiplicity: usize,
    conductor: usize,
    /// Membership of `0..conductor` in the semigroup; everything above is in.
    table: Vec<bool>,
    precision: Precision,
}

impl SemigroupRing {
    pub fn new(field: PrimeField, gens: &[usize]) -> Result<Self> {
        let mut gens: Vec<usize> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("no generators".into()));
        }
        if gens[0] == 0 {
            return Err(Error::InvalidSemigroup("generators must be positive".into()));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("gcd of generators is {g}, not 1")));
        }
        let e = gens[0];
        // Once e consecutive integers are members, everything after is too.
        let mut member = vec![true];
        let mut run = 1usize;
        let mut d = 0usize;
        while run < e {
            d += 1;
            let m = gens.iter().any(|&a| a <= d && member[d - a]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let conductor = d + 1 - run;
        member.truncate(conductor);
        Ok(SemigroupRing {
            field,
            gens,
            multiplicity: e,
            conductor,
            table: member,
            precision: Precision::default(),
        })
    }

    /// Same ring with a different truncation policy.
    pub fn with_precision(mut self, precision: Precision) -> Result<Self> {
        if let Precision::Fixed(n) = precision {
            if n <= self.conductor {
                return Err(Error::PrecisionTooLow {
                    needed: self.conductor + 1,
                    available: n,
                });
            }
        }
        self.precision = precision;
        Ok(self)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// `e = min(S \ {0})`.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Least `c` with `[c, inf) ⊆ S`.
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn contains_degree(&self, d: usize) -> bool {
        d >= self.conductor || self.table[d]
    }

    pub fn gaps(&self) -> Vec<usize> {
        (0..self.conductor).filter(|&d| !self.table[d]).collect()
    }

    /// `S ∩ [lo, hi)` in increasing order.
    pub fn degrees(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..hi).filter(|&d| self.contains_degree(d)).collect()
    }

    /// Upper end of the coordinate window for an ideal of order `lo`.
    pub fn window_hi(&self, lo: usize) -> Result<usize> {
        let needed = lo + self.conductor + self.multiplicity + 1;
        match self.precision {
            Precision::Auto { margin } => Ok(needed + margin),
            Precision::Fixed(n) if n >= needed => Ok(n),
            Precision::Fixed(n) => Err(Error::PrecisionTooLow { needed, available: n }),
        }
    }

    // ---- elements ----

    pub fn zero(&self) -> Series {
        Series { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Series {
        Series { coeffs: vec![1] }
    }

    pub fn monomial(&self, degree: usize, coeff: i64) -> Result<Series> {
        self.series(&[(degree, coeff)])
    }

    /// Builds `sum c * s^d`; every exponent must lie in the semigroup.
    pub fn series(&self, terms: &[(usize, i64)]) -> Result<Series> {
        let mut coeffs = Vec::new();
        for &(d, c) in terms {
            if !self.contains_degree(d) {
                return Err(Error::InvalidSemigroup(format!(
                    "exponent {d} is not in the semigroup generated by {:?}",
                    self.gens
                )));
            }
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] = self.field.add(coeffs[d], self.field.reduce(c));
        }
        Ok(Series::trimmed(coeffs))
    }

    pub fn add(&self, a: &Series, b: &Series) -> Series {
        let f = self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|d| f.add(a.coeff(d), b.coeff(d))).collect();
        Series::trimmed(coeffs)
    }

    pub fn sub(&self, a: &Series, b: &Series) -> Series {
        let f = self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|d| f.sub(a.coeff(d), b.coeff(d))).collect();
        Series::trimmed(coeffs)
    }

    pub fn neg(&self, a: &Series) -> Series {
        let f = self.field;
        Series::trimmed(a.coeffs.iter().map(|&x| f.neg(x)).collect())
    }

    pub fn scale(&self, c: u32, a: &Series) -> Series {
        let f = self.field;
        Series::trimmed(a.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Cauchy product. Exact: elements are finite series.
    pub fn mul(&self, a: &Series, b: &Series) -> Series {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = self.field;
        let mut out = vec![0u32; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(x, y));
                }
            }
        }
        Series::trimmed(out)
    }

    // ---- window coordinates ----

    /// Coordinates of `x` in the window `[lo, hi)`; terms at or above `hi` are dropped.
    /// Terms below `lo` must be zero.
    fn to_window(&self, x: &Series, lo: usize, hi: usize) -> Vec<u32> {
        debug_assert!(x.ord().is_none_or(|o| o >= lo));
        self.degrees(lo, hi).iter().map(|&d| x.coeff(d)).collect()
    }

    fn series_from_window(&self, v: &[u32], lo: usize, hi: usize) -> Series {
        let mut coeffs = vec![0u32; hi];
        for (&d, &c) in self.degrees(lo, hi).iter().zip(v) {
            coeffs[d] = c;
        }
        Series::trimmed(coeffs)
    }

    /// Product of a window vector with a series, truncated into another window.
    fn mul_into(&self, x: &Series, v: &[u32], lo: usize, hi: usize, out_lo: usize, out_hi: usize) -> Vec<u32> {
        let f = self.field;
        let degs = self.degrees(lo, hi);
        let mut dense = vec![0u32; out_hi.saturating_sub(out_lo)];
        for (&d, &c) in degs.iter().zip(v) {
            if c == 0 {
                continue;
            }
            for (i, &a) in x.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let t = i + d;
                if t >= out_hi {
                    break;
                }
                debug_assert!(t >= out_lo);
                dense[t - out_lo] = f.add(dense[t - out_lo], f.mul(a, c));
            }
        }
        self.degrees(out_lo, out_hi).iter().map(|&d| dense[d - out_lo]).collect()
    }

    fn ideal_from_rows(&self, lo: usize, hi: usize, rows: Vec<Vec<u32>>) -> IdealVS {
        let n = self.degrees(lo, hi).len();
        let space = Subspace::from_residue_vectors(self.field, n, rows).expect("rows have window length");
        debug_assert!(space.pivots().first() == Some(&0));
        IdealVS {
            min_order: Some(lo),
            hi,
            space,
        }
    }

    /// Re-expresses a nonzero ideal on the window `[lo, hi)`, `lo <= min_order`.
    fn embed(&self, a: &IdealVS, lo: usize, hi: usize) -> Vec<Vec<u32>> {
        let (a_lo, a_hi) = a.window().expect("nonzero ideal");
        debug_assert!(lo <= a_lo);
        let src = self.degrees(a_lo, a_hi);
        let dst = self.degrees(lo, hi);
        let index = |d: usize| dst.binary_search(&d).ok();
        let mut rows = Vec::new();
        for row in a.space.basis_vectors() {
            let mut v = vec![0u32; dst.len()];
            for (&d, &c) in src.iter().zip(&row) {
                if let Some(i) = index(d) {
                    v[i] = c;
                }
            }
            rows.push(v);
        }
        // The ideal contains every monomial from its own window end onward.
        for d in a_hi.max(lo)..hi {
            if let Some(i) = index(d) {
                let mut v = vec![0u32; dst.len()];
                v[i] = 1;
                rows.push(v);
            }
        }
        rows
    }

    // ---- ideals ----

    pub fn zero_ideal(&self) -> IdealVS {
        IdealVS {
            min_order: None,
            hi: 0,
            space: Subspace::zero(self.field, 0),
        }
    }

    pub fn unit_ideal(&self) -> Result<IdealVS> {
        self.ideal_span(&[self.one()])
    }

    /// Ideal generated by the monomials `s^d`, `d` in `exponents`.
    pub fn monomial_ideal(&self, exponents: &[usize]) -> Result<IdealVS> {
        let gens = exponents
            .iter()
            .map(|&d| self.monomial(d, 1))
            .collect::<Result<Vec<_>>>()?;
        self.ideal_span(&gens)
    }

    /// The ideal `(s^d : d in S, d >= n)`, i.e. `s^n R̄ ∩ R`.
    pub fn order_ideal(&self, n: usize) -> Result<IdealVS> {
        let lo = (n..).find(|&d| self.contains_degree(d)).expect("S is cofinite");
        let hi = self.window_hi(lo)?;
        Ok(IdealVS {
            min_order: Some(lo),
            hi,
            space: Subspace::full(self.field, self.degrees(lo, hi).len()),
        })
    }

    /// Smallest ideal containing `gens`. Zero generators are ignored.
    pub fn ideal_span(&self, gens: &[Series]) -> Result<IdealVS> {
        let gens: Vec<&Series> = gens.iter().filter(|g| !g.is_zero()).collect();
        let Some(lo) = gens.iter().filter_map(|g| g.ord()).min() else {
            return Ok(self.zero_ideal());
        };
        let hi = self.window_hi(lo)?;
        let mut rows = Vec::new();
        for g in gens {
            let o = g.ord().unwrap();
            for d in self.degrees(0, hi.saturating_sub(o)) {
                rows.push(self.to_window(&self.mul(g, &Series::monomial_unchecked(d)), lo, hi));
            }
        }
        Ok(self.ideal_from_rows(lo, hi, rows))
    }

    /// `m I`, expressed on the window of `I`.
    fn maximal_times(&self, a: &IdealVS) -> Subspace {
        let (lo, hi) = a.window().expect("nonzero ideal");
        let n = a.space.ambient_dim();
        let mut rows = Vec::new();
        for &g in &self.gens {
            let x = Series::monomial_unchecked(g);
            for row in a.space.basis_vectors() {
                rows.push(self.mul_into(&x, &row, lo, hi, lo, hi));
            }
        }
        Subspace::from_residue_vectors(self.field, n, rows).expect("window length")
    }

    /// Minimal number of generators, `dim I / m I`.
    pub fn mu(&self, a: &IdealVS) -> usize {
        if a.is_zero() {
            return 0;
        }
        a.space.dim() - self.maximal_times(a).dim()
    }

    /// A minimal generating set, chosen among the canonical basis rows.
    pub fn minimal_generators(&self, a: &IdealVS) -> Vec<Series> {
        let Some((lo, hi)) = a.window() else {
            return Vec::new();
        };
        let mut acc = self.maximal_times(a);
        let mut out = Vec::new();
        for row in a.space.basis_vectors() {
            if !acc.contains(&row).unwrap() {
                acc = acc
                    .sum(&Subspace::from_residue_vectors(self.field, row.len(), vec![row.clone()]).unwrap())
                    .unwrap();
                out.push(self.series_from_window(&row, lo, hi));
            }
        }
        out
    }

    pub fn ideal_product(&self, a: &IdealVS, b: &IdealVS) -> Result<IdealVS> {
        let (Some((a_lo, _)), Some((b_lo, b_hi))) = (a.window(), b.window()) else {
            return Ok(self.zero_ideal());
        };
        let lo = a_lo + b_lo;
        let hi = self.window_hi(lo)?;
        let mut rows = Vec::new();
        for x in self.minimal_generators(a) {
            for row in b.space.basis_vectors() {
                rows.push(self.mul_into(&x, &row, b_lo, b_hi, lo, hi));
            }
        }
        Ok(self.ideal_from_rows(lo, hi, rows))
    }

    pub fn ideal_power(&self, a: &IdealVS, k: usize) -> Result<IdealVS> {
        let mut acc = self.unit_ideal()?;
        for _ in 0..k {
            acc = self.ideal_product(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn ideal_sum(&self, a: &IdealVS, b: &IdealVS) -> Result<IdealVS> {
        let lo = match (a.min_order, b.min_order) {
            (None, _) => return Ok(b.clone()),
            (_, None) => return Ok(a.clone()),
            (Some(x), Some(y)) => x.min(y),
        };
        let hi = self.window_hi(lo)?;
        let mut rows = self.embed(a, lo, hi);
        rows.extend(self.embed(b, lo, hi));
        Ok(self.ideal_from_rows(lo, hi, rows))
    }

    /// Exact set equality of ideals.
    pub fn ideal_eq(&self, a: &IdealVS, b: &IdealVS) -> bool {
        match (a.window(), b.window()) {
            (None, None) => true,
            (Some((alo, ahi)), Some((blo, bhi))) if alo == blo => {
                if ahi == bhi {
                    a.space == b.space
                } else {
                    let hi = ahi.min(bhi);
                    let n = self.degrees(alo, hi).len();
                    let sa = Subspace::from_residue_vectors(self.field, n, self.embed(a, alo, hi)).unwrap();
                    let sb = Subspace::from_residue_vectors(self.field, n, self.embed(b, alo, hi)).unwrap();
                    sa == sb
                }
            }
            _ => false,
        }
    }

    /// `a ⊆ b`.
    pub fn ideal_le(&self, a: &IdealVS, b: &IdealVS) -> bool {
        match (a.window(), b.window()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((alo, _)), Some((blo, bhi))) => {
                if alo < blo {
                    return false;
                }
                self.embed(a, blo, bhi).iter().all(|r| b.space.contains(r).unwrap())
            }
        }
    }

    pub fn ideal_member(&self, x: &Series, a: &IdealVS) -> bool {
        let Some(o) = x.ord() else { return true };
        match a.window() {
            None => false,
            Some((lo, hi)) => o >= lo && a.space.contains(&self.to_window(x, lo, hi)).unwrap(),
        }
    }

    /// `I R̄ ∩ R`: all monomials of order at least the valuation of `I`.
    pub fn integral_closure(&self, a: &IdealVS) -> IdealVS {
        match a.window() {
            None => self.zero_ideal(),
            Some((lo, hi)) => IdealVS {
                min_order: Some(lo),
                hi,
                space: Subspace::full(self.field, a.space.ambient_dim()),
            },
        }
    }

    pub fn is_integrally_closed(&self, a: &IdealVS) -> bool {
        a.is_zero() || a.space.dim() == a.space.ambient_dim()
    }

    /// Orders realized by nonzero elements of the ideal (within its window).
    pub fn value_set(&self, a: &IdealVS) -> Vec<usize> {
        let Some((lo, hi)) = a.window() else {
            return Vec::new();
        };
        let degs = self.degrees(lo, hi);
        a.space.pivots().iter().map(|&i| degs[i]).collect()
    }

    /// `{ i : 1 <= i < e, n + i is the order of some element of I }`.
    pub fn gamma(&self, a: &IdealVS) -> Result<Vec<usize>> {
        let n = a.min_order.ok_or(Error::ZeroIdeal("gamma"))?;
        let values = self.value_set(a);
        Ok((1..self.multiplicity)
            .filter(|i| values.binary_search(&(n + i)).is_ok())
            .collect())
    }

    /// `N - (n + c)` for the ideal's window.
    pub fn sufficiency_margin(&self, a: &IdealVS) -> Option<usize> {
        a.window().map(|(lo, hi)| hi - (lo + self.conductor))
    }

    /// Basis vectors of the ideal's window space, as series.
    pub fn basis_series(&self, a: &IdealVS) -> Vec<Series> {
        match a.window() {
            None => Vec::new(),
            Some((lo, hi)) => a.space.basis_vectors().iter().map(|r| self.series_from_window(r, lo, hi)).collect(),
        }
    }

    pub fn display_series(&self, x: &Series) -> String {
        x.display(self.field, "s")
    }
}

/// A finite power series in `s` supported on the semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Series {
    coeffs: Vec<u32>,
}

impl Series {
    fn trimmed(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Series { coeffs }
    }

    fn monomial_unchecked(d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        Series { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation in `F_p[[s]]`; `None` for zero.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn coeff(&self, d: usize) -> u32 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Highest degree carrying a nonzero coefficient.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(d, &c)| (d, c))
    }

    pub fn display(&self, field: PrimeField, var: &str) -> String {
        format_terms(field, self.terms(), var)
    }
}

/// Formats `sum c * var^d` with coefficients shown in the balanced range.
pub(crate) fn format_terms(field: PrimeField, terms: impl Iterator<Item = (usize, u32)>, var: &str) -> String {
    let p = field.p() as i64;
    let mut out = String::new();
    for (d, c) in terms {
        let mut c = c as i64;
        if c > p / 2 {
            c -= p;
        }
        let neg = c < 0;
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match d {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{d}"),
        };
        match (a, mono.is_empty()) {
            (_, true) => out.push_str(&a.to_string()),
            (1, false) => out.push_str(&mono),
            (_, false) => out.push_str(&format!("{a}*{mono}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An ideal of a semigroup ring stored on its valuation window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealVS {
    min_order: Option<usize>,
    hi: usize,
    space: Subspace,
}

impl IdealVS {
    pub fn is_zero(&self) -> bool {
        self.min_order.is_none()
    }

    /// `n` with `I R̄ = s^n R̄`; `None` for the zero ideal.
    pub fn min_order(&self) -> Option<usize> {
        self.min_order
    }

    /// `[lo, hi)` degree window of the stored coordinates.
    pub fn window(&self) -> Option<(usize, usize)> {
        self.min_order.map(|lo| (lo, self.hi))
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Dimension of `I / (s^hi R̄ ∩ R)`.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

impl fmt::Display for IdealVS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.window() {
            None => write!(f, "(0)"),
            Some((lo, hi)) => write!(f, "ideal[order {lo}, window {lo}..{hi}, dim {}]", self.space.dim()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(gens: &[usize]) -> SemigroupRing {
        SemigroupRing::new(PrimeField::new(101).unwrap(), gens).unwrap()
    }

    fn mono(r: &SemigroupRing, d: usize) -> Series {
        r.monomial(d, 1).unwrap()
    }

    #[test]
    fn multiplicity_and_conductor() {
        let r = ring(&[3, 4]);
        assert_eq!((r.multiplicity(), r.conductor()), (3, 6));
        let r = ring(&[3, 5]);
        assert_eq!((r.multiplicity(), r.conductor()), (3, 8));
        assert_eq!(r.degrees(0, 10), vec![0, 3, 5, 6, 8, 9]);
        for e in 3..9 {
            let r = ring(&[e, e + 1]);
            assert_eq!(r.conductor(), (e - 1) * e);
        }
        let r = ring(&[5, 6, 7, 8, 9]);
        assert_eq!(r.conductor(), 5);
    }

    #[test]
    fn invalid_semigroups() {
        let f = PrimeField::new(101).unwrap();
        assert!(matches!(SemigroupRing::new(f, &[4, 6]), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(SemigroupRing::new(f, &[]), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(
            ring(&[3, 4]).with_precision(Precision::Fixed(6)),
            Err(Error::PrecisionTooLow { .. })
        ));
    }

    #[test]
    fn series_products_and_orders() {
        let r = ring(&[3, 4]);
        assert_eq!(r.mul(&mono(&r, 6), &mono(&r, 7)), mono(&r, 13));
        let a = r.series(&[(6, 1), (7, -1)]).unwrap();
        let b = r.series(&[(6, 1), (7, 1)]).unwrap();
        assert_eq!(r.mul(&a, &b), r.series(&[(12, 1), (14, -1)]).unwrap());
        assert_eq!(r.zero().ord(), None);
        assert_eq!(a.ord(), Some(6));
        assert!(r.monomial(5, 1).is_err());
    }

    #[test]
    fn span_of_example_content() {
        let r = ring(&[3, 4]);
        let i = r.monomial_ideal(&[6, 7, 8]).unwrap();
        assert_eq!(i.min_order(), Some(6));
        let (lo, hi) = i.window().unwrap();
        assert_eq!(r.value_set(&i), r.degrees(lo, hi));
        assert_eq!(r.gamma(&i).unwrap(), vec![1, 2]);
        assert_eq!(r.mu(&i), 3);
        assert!(r.is_integrally_closed(&i));
    }

    #[test]
    fn footnote_ideal_in_3_5() {
        let r = ring(&[3, 5]);
        let i = r.monomial_ideal(&[9, 11, 13]).unwrap();
        assert!(!r.value_set(&i).contains(&10));
        assert_eq!(r.gamma(&i).unwrap(), vec![2]);
        assert_eq!(r.mu(&i), 3);
        let m = r.monomial_ideal(&[3, 5]).unwrap();
        assert!(r.ideal_eq(&r.ideal_power(&m, 3).unwrap(), &i));
        let cl = r.integral_closure(&i);
        assert!(r.ideal_member(&mono(&r, 10), &cl));
        assert!(!r.ideal_member(&mono(&r, 10), &i));
        assert!(!r.is_integrally_closed(&i));
    }

    #[test]
    fn zero_ideal_conventions() {
        let r = ring(&[3, 4]);
        let z = r.ideal_span(&[r.zero()]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.min_order(), None);
        assert_eq!(r.mu(&z), 0);
        assert_eq!(r.gamma(&z), Err(Error::ZeroIdeal("gamma")));
        assert!(r.integral_closure(&z).is_zero());
    }

    #[test]
    fn products_from_counterexample_data() {
        let r = ring(&[3, 4]);
        let s12 = r.monomial_ideal(&[12]).unwrap();
        let cf = r.monomial_ideal(&[6, 7]).unwrap();
        let expected = r.monomial_ideal(&[18, 19]).unwrap();
        assert!(r.ideal_eq(&r.ideal_product(&s12, &cf).unwrap(), &expected));
        let cg = r.monomial_ideal(&[6, 7, 8]).unwrap();
        let lhs = r.ideal_product(&r.ideal_power(&cf, 2).unwrap(), &cg).unwrap();
        assert!(r.ideal_eq(&lhs, &r.monomial_ideal(&[18, 19, 20]).unwrap()));
        let unit = r.unit_ideal().unwrap();
        assert!(r.ideal_eq(&r.ideal_product(&cf, &unit).unwrap(), &cf));
    }

    #[test]
    fn closure_of_binomial_ideal() {
        let r = ring(&[3, 4]);
        let i = r.monomial_ideal(&[12, 15]).unwrap();
        let cl = r.integral_closure(&i);
        assert!(r.ideal_eq(&cl, &r.monomial_ideal(&[12, 13, 14]).unwrap()));
        assert!(r.ideal_le(&i, &cl));
        let unit = r.unit_ideal().unwrap();
        assert!(r.ideal_eq(&r.integral_closure(&unit), &unit));
    }

    #[test]
    fn principal_ideals() {
        let r = ring(&[3, 4]);
        let p = r.monomial_ideal(&[6]).unwrap();
        assert_eq!(r.mu(&p), 1);
        // s generates no ideal of R; take a principal ideal of a unit times s^3
        let q = r.monomial_ideal(&[3]).unwrap();
        assert!(r.gamma(&q).unwrap().is_empty());
    }

    #[test]
    fn fixed_precision_refuses_and_accepts() {
        let r = ring(&[3, 4]).with_precision(Precision::Fixed(20)).unwrap();
        assert!(r.monomial_ideal(&[6, 7, 8]).is_ok());
        let big = r.monomial_ideal(&[12]);
        assert!(matches!(big, Err(Error::PrecisionTooLow { needed: 22, available: 20 })));
        let cf = r.monomial_ideal(&[6, 7]).unwrap();
        assert!(r.ideal_product(&cf, &cf).is_err());
    }

    #[test]
    fn sum_and_containment() {
        let r = ring(&[3, 4]);
        let a = r.monomial_ideal(&[6]).unwrap();
        let b = r.monomial_ideal(&[7]).unwrap();
        let s = r.ideal_sum(&a, &b).unwrap();
        assert!(r.ideal_eq(&s, &r.monomial_ideal(&[6, 7]).unwrap()));
        assert!(r.ideal_le(&a, &s) && r.ideal_le(&b, &s));
        assert!(!r.ideal_le(&s, &a));
    }

    #[test]
    fn display_series() {
        let r = ring(&[3, 4]);
        let x = r.series(&[(6, 1), (7, -1), (8, 3)]).unwrap();
        assert_eq!(r.display_series(&x), "s^6 - s^7 + 3*s^8");
    }
}
