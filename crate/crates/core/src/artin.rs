//! Finite-dimensional local algebras over `F_p` given by structure constants.
//!
//! Basis element `b_0` is the identity and `b_1, ..., b_{D-1}` span the maximal
//! ideal. Bases produced here are ordered by filtration degree, so the maximal
//! ideal is always the coordinate complement of `b_0`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{left_kernel, PrimeField, Subspace};
use crate::semiring::{format_terms, IdealVS, SemigroupRing, Series};

/// Coordinates of an algebra element against the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgElem(pub Vec<u32>);

impl AlgElem {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.0.first().is_some_and(|&c| c != 0)
    }
}

/// An ideal of an [`ArtinianAlgebra`], stored as a canonical subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubIdeal {
    space: Subspace,
}

impl SubIdeal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    degrees: Vec<usize>,
    /// `table[(i * D + j) * D + k]` is the `b_k` coordinate of `b_i b_j`.
    table: Vec<u32>,
    socle: Subspace,
}

impl ArtinianAlgebra {
    /// Validated construction from user-supplied structure constants.
    ///
    /// `products[i][j]` is the coordinate vector of `b_i b_j`. Checks the
    /// identity, commutativity, associativity (every triple up to dimension 64,
    /// a seeded sample of triples above) and nilpotency of `b_1, ..., b_{D-1}`.
    pub fn from_structure_constants(
        field: PrimeField,
        labels: Vec<String>,
        degrees: Vec<usize>,
        products: &[Vec<Vec<i64>>],
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        if degrees.len() != d || products.len() != d {
            return Err(Error::InvalidAlgebra("basis, degree and table sizes disagree".into()));
        }
        let mut table = vec![0u32; d * d * d];
        for (i, row) in products.iter().enumerate() {
            if row.len() != d {
                return Err(Error::InvalidAlgebra(format!("row {i} of the table has {} entries", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != d {
                    return Err(Error::InvalidAlgebra(format!("product b_{i} b_{j} has {} coordinates", v.len())));
                }
                for (k, &c) in v.iter().enumerate() {
                    table[(i * d + j) * d + k] = field.reduce(c);
                }
            }
        }
        let alg = Self::from_table(field, labels, degrees, table);
        alg.validate()?;
        Ok(alg)
    }

    /// Trusted construction for tables derived from a commutative local ring.
    fn from_table(field: PrimeField, labels: Vec<String>, degrees: Vec<usize>, table: Vec<u32>) -> Self {
        let d = labels.len();
        let mut alg = ArtinianAlgebra {
            field,
            labels,
            degrees,
            table,
            socle: Subspace::zero(field, d),
        };
        let m = alg.maximal_ideal();
        alg.socle = alg.ann(&m).space;
        alg
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let one = self.basis(0);
        for i in 0..d {
            let bi = self.basis(i);
            if self.mul(&one, &bi) != bi || self.mul(&bi, &one) != bi {
                return Err(Error::InvalidAlgebra(format!("b_0 does not act as identity on b_{i}")));
            }
            for j in 0..i {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Error::InvalidAlgebra(format!("b_{i} b_{j} != b_{j} b_{i}")));
                }
            }
        }
        let assoc = |i: usize, j: usize, k: usize| -> Result<()> {
            let l = self.mul(&AlgElem(self.basis_product(i, j)), &self.basis(k));
            let r = self.mul(&self.basis(i), &AlgElem(self.basis_product(j, k)));
            if l != r {
                return Err(Error::InvalidAlgebra(format!("(b_{i} b_{j}) b_{k} != b_{i} (b_{j} b_{k})")));
            }
            Ok(())
        };
        if d <= 64 {
            for i in 1..d {
                for j in 1..d {
                    for k in 1..d {
                        assoc(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
            for _ in 0..20_000 {
                assoc(rng.gen_range(1..d), rng.gen_range(1..d), rng.gen_range(1..d))?;
            }
        }
        // The span of b_1.. must be a nilpotent ideal.
        let mut power = self.maximal_ideal();
        for i in 1..d {
            for j in 1..d {
                if self.basis_product(i, j)[0] != 0 {
                    return Err(Error::InvalidAlgebra(format!("b_{i} b_{j} has a unit component")));
                }
            }
        }
        for _ in 0..d {
            if power.is_zero() {
                return Ok(());
            }
            power = self.ideal_product(&power, &self.maximal_ideal());
        }
        if power.is_zero() {
            Ok(())
        } else {
            Err(Error::InvalidAlgebra("maximal ideal is not nilpotent".into()))
        }
    }

    /// `F_p[x_1..x_r] / (monomials)`. Each variable needs a pure power among the relations.
    pub fn monomial(field: PrimeField, vars: &[&str], relations: &[Vec<usize>]) -> Result<Self> {
        let r = vars.len();
        if relations.iter().any(|m| m.len() != r) {
            return Err(Error::InvalidAlgebra("relation exponent vector has the wrong length".into()));
        }
        let mut bounds = Vec::with_capacity(r);
        for v in 0..r {
            let pure = relations
                .iter()
                .filter(|m| m.iter().enumerate().all(|(w, &x)| w == v || x == 0))
                .map(|m| m[v])
                .min();
            match pure {
                Some(b) => bounds.push(b),
                None => {
                    return Err(Error::InvalidAlgebra(format!(
                        "no pure power of {} among the relations; the quotient is infinite-dimensional",
                        vars[v]
                    )))
                }
            }
        }
        if bounds.contains(&0) {
            return Err(Error::UnitIdeal);
        }
        let divides = |m: &[usize], e: &[usize]| m.iter().zip(e).all(|(a, b)| a <= b);
        let in_ideal = |e: &[usize]| relations.iter().any(|m| divides(m, e));
        let mut monos: Vec<Vec<usize>> = vec![Vec::new()];
        for &b in &bounds {
            monos = monos
                .into_iter()
                .flat_map(|m| {
                    (0..b).map(move |x| {
                        let mut m = m.clone();
                        m.push(x);
                        m
                    })
                })
                .collect();
        }
        monos.retain(|m| !in_ideal(m));
        // graded, then lexicographic with the first variable largest
        monos.sort_by(|a, b| {
            let da: usize = a.iter().sum();
            let db: usize = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let d = monos.len();
        let mut table = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let e: Vec<usize> = monos[i].iter().zip(&monos[j]).map(|(a, b)| a + b).collect();
                if !in_ideal(&e) {
                    if let Some(k) = monos.iter().position(|m| *m == e) {
                        table[(i * d + j) * d + k] = 1;
                    }
                }
            }
        }
        let labels = monos.iter().map(|m| monomial_label(vars, m)).collect();
        let degrees = monos.iter().map(|m| m.iter().sum()).collect();
        Ok(Self::from_table(field, labels, degrees, table))
    }

    /// `R / q` for a nonzero ideal `q` of a semigroup ring, with the reduction map.
    pub fn from_quotient(ring: &SemigroupRing, q: &IdealVS) -> Result<SemigroupQuotient> {
        let Some((lo, hi)) = q.window() else {
            return Err(Error::NotMPrimary("the zero ideal of a one-dimensional domain".into()));
        };
        if lo == 0 {
            return Err(Error::UnitIdeal);
        }
        let window = ring.degrees(lo, hi);
        let mut basis_degrees = ring.degrees(0, lo);
        basis_degrees.extend(q.space().non_pivot_columns().into_iter().map(|i| window[i]));
        let quotient = SemigroupQuotient {
            field: ring.field(),
            window_lo: lo,
            window_hi: hi,
            window,
            q: q.space().clone(),
            basis_degrees: basis_degrees.clone(),
            algebra: None,
        };
        let d = basis_degrees.len();
        let mut table = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let v = quotient.reduce_degree(basis_degrees[i] + basis_degrees[j]);
                table[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&v);
            }
        }
        let labels = basis_degrees.iter().map(|&k| format_terms(ring.field(), [(k, 1)].into_iter(), "s")).collect();
        let algebra = Self::from_table(ring.field(), labels, basis_degrees, table);
        Ok(SemigroupQuotient {
            algebra: Some(algebra),
            ..quotient
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn basis(&self, i: usize) -> AlgElem {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        AlgElem(v)
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let d = self.dim();
        self.table[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem(vec![0; self.dim()])
    }

    pub fn one(&self) -> AlgElem {
        self.basis(0)
    }

    pub fn element(&self, coords: &[i64]) -> Result<AlgElem> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        Ok(AlgElem(coords.iter().map(|&c| self.field.reduce(c)).collect()))
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        AlgElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.add(x, y)).collect())
    }

    pub fn sub(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        AlgElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.field.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &AlgElem) -> AlgElem {
        AlgElem(a.0.iter().map(|&x| self.field.neg(x)).collect())
    }

    pub fn scale(&self, c: u32, a: &AlgElem) -> AlgElem {
        AlgElem(a.0.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        AlgElem(self.mul_vec(&a.0, &b.0))
    }

    fn mul_vec(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let d = self.dim();
        let f = self.field;
        let mut out = vec![0u32; d];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                let base = (i * d + j) * d;
                f.axpy(&mut out, c, &self.table[base..base + d]);
            }
        }
        out
    }

    pub fn display_elem(&self, a: &AlgElem) -> String {
        let p = self.field.p() as i64;
        let mut out = String::new();
        for (i, &c) in a.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut c = c as i64;
            if c > p / 2 {
                c -= p;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let a = c.abs();
            match (a, i) {
                (_, 0) => out.push_str(&a.to_string()),
                (1, _) => out.push_str(&self.labels[i]),
                _ => out.push_str(&format!("{a}*{}", self.labels[i])),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    // ---- ideals ----

    fn ideal_from_rows(&self, rows: Vec<Vec<u32>>) -> SubIdeal {
        SubIdeal {
            space: Subspace::from_residue_vectors(self.field, self.dim(), rows).expect("algebra coordinates"),
        }
    }

    pub fn zero_ideal(&self) -> SubIdeal {
        SubIdeal {
            space: Subspace::zero(self.field, self.dim()),
        }
    }

    pub fn unit_ideal(&self) -> SubIdeal {
        SubIdeal {
            space: Subspace::full(self.field, self.dim()),
        }
    }

    pub fn maximal_ideal(&self) -> SubIdeal {
        self.ideal_from_rows((1..self.dim()).map(|i| self.basis(i).0).collect())
    }

    pub fn socle(&self) -> SubIdeal {
        SubIdeal {
            space: self.socle.clone(),
        }
    }

    pub fn socle_dim(&self) -> usize {
        self.socle.dim()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dim() == 1
    }

    pub fn ideal_span(&self, gens: &[AlgElem]) -> SubIdeal {
        let mut rows = Vec::new();
        for g in gens {
            for i in 0..self.dim() {
                rows.push(self.mul_vec(&g.0, &self.basis(i).0));
            }
        }
        self.ideal_from_rows(rows)
    }

    /// Wraps a subspace after checking it is closed under multiplication.
    pub fn ideal_from_subspace(&self, space: Subspace) -> Result<SubIdeal> {
        if space.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: space.ambient_dim(),
            });
        }
        for v in space.basis_vectors() {
            for i in 1..self.dim() {
                if !space.contains(&self.mul_vec(&v, &self.basis(i).0))? {
                    return Err(Error::InvalidAlgebra("subspace is not an ideal".into()));
                }
            }
        }
        Ok(SubIdeal { space })
    }

    pub fn ideal_product(&self, a: &SubIdeal, b: &SubIdeal) -> SubIdeal {
        let mut rows = Vec::new();
        let bb = b.space.basis_vectors();
        for x in a.space.basis_vectors() {
            for y in &bb {
                rows.push(self.mul_vec(&x, y));
            }
        }
        self.ideal_from_rows(rows)
    }

    pub fn ideal_sum(&self, a: &SubIdeal, b: &SubIdeal) -> SubIdeal {
        SubIdeal {
            space: a.space.sum(&b.space).expect("same algebra"),
        }
    }

    pub fn ideal_le(&self, a: &SubIdeal, b: &SubIdeal) -> bool {
        a.space.is_subspace_of(&b.space).expect("same algebra")
    }

    pub fn ideal_member(&self, x: &AlgElem, a: &SubIdeal) -> bool {
        a.space.contains(&x.0).expect("same algebra")
    }

    fn check(&self, a: &SubIdeal) -> Result<()> {
        if a.space.ambient_dim() != self.dim() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `(a : b) = { r : r b ⊆ a }`.
    pub fn colon(&self, a: &SubIdeal, b: &SubIdeal) -> SubIdeal {
        let d = self.dim();
        let kept = a.space.non_pivot_columns();
        let gens = b.space.basis_vectors();
        if gens.is_empty() {
            return self.unit_ideal();
        }
        let rows: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let bi = self.basis(i).0;
                let mut row = Vec::with_capacity(kept.len() * gens.len());
                for y in &gens {
                    let r = a.space.reduce(&self.mul_vec(&bi, y)).unwrap();
                    row.extend(kept.iter().map(|&c| r[c]));
                }
                row
            })
            .collect();
        let cols = kept.len() * gens.len();
        if cols == 0 {
            return self.unit_ideal();
        }
        SubIdeal {
            space: left_kernel(self.field, cols, rows).unwrap(),
        }
    }

    pub fn try_colon(&self, a: &SubIdeal, b: &SubIdeal) -> Result<SubIdeal> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.colon(a, b))
    }

    /// `(0 : a)`.
    pub fn ann(&self, a: &SubIdeal) -> SubIdeal {
        self.colon(&self.zero_ideal(), a)
    }

    pub fn mu(&self, a: &SubIdeal) -> usize {
        a.dim() - self.ideal_product(&self.maximal_ideal(), a).dim()
    }

    /// Whether `dim soc(A / (0 : a)) = mu(a)`; requires a Gorenstein algebra.
    pub fn duality_check(&self, a: &SubIdeal) -> Result<bool> {
        self.check(a)?;
        if !self.is_gorenstein() {
            return Err(Error::NotGorenstein {
                socle_dim: self.socle_dim(),
            });
        }
        let ann = self.ann(a);
        let mu = self.mu(a);
        if ann.dim() == self.dim() {
            // a = 0: the quotient is the zero ring, with empty socle
            return Ok(mu == 0);
        }
        let q = self.quotient(&ann)?;
        Ok(q.algebra().socle_dim() == mu)
    }

    /// `A / a` on the complement of the pivot coordinates of `a`.
    pub fn quotient(&self, a: &SubIdeal) -> Result<Quotient> {
        self.check(a)?;
        if a.space.contains(&self.one().0)? {
            return Err(Error::UnitIdeal);
        }
        let kept = a.space.non_pivot_columns();
        debug_assert_eq!(kept.first(), Some(&0));
        let d = kept.len();
        let mut table = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let prod = self.basis_product(kept[i], kept[j]);
                let r = a.space.reduce(&prod)?;
                for (k, &c) in kept.iter().enumerate() {
                    table[(i * d + j) * d + k] = r[c];
                }
            }
        }
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let degrees = kept.iter().map(|&i| self.degrees[i]).collect();
        Ok(Quotient {
            algebra: Self::from_table(self.field, labels, degrees, table),
            ideal: a.space.clone(),
            kept,
        })
    }

    /// All `p^D` elements, in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<AlgElem> {
        let p = self.field.p();
        let d = self.dim();
        let total = (p as usize).pow(d as u32);
        (0..total)
            .map(|mut n| {
                let mut v = vec![0u32; d];
                for c in v.iter_mut() {
                    *c = (n % p as usize) as u32;
                    n /= p as usize;
                }
                AlgElem(v)
            })
            .collect()
    }
}

impl fmt::Display for ArtinianAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}<{}>", self.field.p(), self.labels.join(", "))
    }
}

fn monomial_label(vars: &[&str], e: &[usize]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &x)| x > 0)
        .map(|(v, &x)| if x == 1 { v.to_string() } else { format!("{v}^{x}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `A / a` with its projection and coordinate section.
#[derive(Clone, Debug)]
pub struct Quotient {
    algebra: ArtinianAlgebra,
    ideal: Subspace,
    kept: Vec<usize>,
}

impl Quotient {
    pub fn algebra(&self) -> &ArtinianAlgebra {
        &self.algebra
    }

    pub fn project(&self, x: &AlgElem) -> AlgElem {
        let r = self.ideal.reduce(&x.0).expect("parent coordinates");
        AlgElem(self.kept.iter().map(|&c| r[c]).collect())
    }

    /// The canonical preimage supported on the kept coordinates.
    pub fn lift(&self, x: &AlgElem) -> AlgElem {
        let mut v = vec![0u32; self.ideal.ambient_dim()];
        for (&c, &val) in self.kept.iter().zip(&x.0) {
            v[c] = val;
        }
        AlgElem(v)
    }

    pub fn project_ideal(&self, a: &SubIdeal) -> SubIdeal {
        let rows = a.space.basis_vectors().into_iter().map(|v| self.project(&AlgElem(v)).0).collect();
        self.algebra.ideal_from_rows(rows)
    }

    /// Full preimage of an ideal of the quotient.
    pub fn preimage_ideal(&self, a: &SubIdeal) -> SubIdeal {
        let mut rows: Vec<Vec<u32>> = a.space.basis_vectors().into_iter().map(|v| self.lift(&AlgElem(v)).0).collect();
        rows.extend(self.ideal.basis_vectors());
        SubIdeal {
            space: Subspace::from_residue_vectors(self.ideal.field(), self.ideal.ambient_dim(), rows).unwrap(),
        }
    }
}

/// `R / q` for a semigroup ring `R`, with reduction of series into the algebra.
#[derive(Clone, Debug)]
pub struct SemigroupQuotient {
    field: PrimeField,
    window_lo: usize,
    window_hi: usize,
    window: Vec<usize>,
    q: Subspace,
    basis_degrees: Vec<usize>,
    algebra: Option<ArtinianAlgebra>,
}

impl SemigroupQuotient {
    pub fn algebra(&self) -> &ArtinianAlgebra {
        self.algebra.as_ref().expect("built")
    }

    pub fn into_algebra(self) -> ArtinianAlgebra {
        self.algebra.expect("built")
    }

    /// Degrees `d` of the monomials `s^d` forming the algebra basis.
    pub fn basis_degrees(&self) -> &[usize] {
        &self.basis_degrees
    }

    fn reduce_window(&self, v: &[u32], low: &[(usize, u32)]) -> Vec<u32> {
        let r = self.q.reduce(v).expect("window coordinates");
        let mut out = vec![0u32; self.basis_degrees.len()];
        for &(d, c) in low {
            let i = self.basis_degrees.binary_search(&d).expect("low degree is a basis degree");
            out[i] = self.field.add(out[i], c);
        }
        for (i, &d) in self.window.iter().enumerate() {
            if r[i] != 0 {
                let k = self.basis_degrees.binary_search(&d).expect("non-pivot degree is a basis degree");
                out[k] = self.field.add(out[k], r[i]);
            }
        }
        out
    }

    fn reduce_degree(&self, d: usize) -> Vec<u32> {
        if d < self.window_lo {
            return self.reduce_window(&vec![0; self.window.len()], &[(d, 1)]);
        }
        let mut v = vec![0u32; self.window.len()];
        if d < self.window_hi {
            v[self.window.binary_search(&d).expect("semigroup degree")] = 1;
        }
        self.reduce_window(&v, &[])
    }

    pub fn reduce(&self, x: &Series) -> AlgElem {
        let low: Vec<(usize, u32)> = x.terms().filter(|&(d, _)| d < self.window_lo).collect();
        let v: Vec<u32> = self.window.iter().map(|&d| x.coeff(d)).collect();
        AlgElem(self.reduce_window(&v, &low))
    }

    /// Image in the algebra of an ideal of the semigroup ring.
    pub fn reduce_ideal(&self, ring: &SemigroupRing, a: &IdealVS) -> SubIdeal {
        let gens: Vec<AlgElem> = ring.minimal_generators(a).iter().map(|x| self.reduce(x)).collect();
        self.algebra().ideal_span(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn xy_squares(p: u32) -> ArtinianAlgebra {
        ArtinianAlgebra::monomial(field(p), &["x", "y"], &[vec![2, 0], vec![0, 2]]).unwrap()
    }

    fn elem(a: &ArtinianAlgebra, label: &str) -> AlgElem {
        a.basis(a.labels().iter().position(|l| l == label).unwrap())
    }

    #[test]
    fn chain_algebra() {
        let a = ArtinianAlgebra::monomial(field(101), &["x"], &[vec![3]]).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.socle_dim(), 1);
        assert!(a.is_gorenstein());
    }

    #[test]
    fn xy_squares_is_gorenstein() {
        let a = xy_squares(101);
        assert_eq!(a.labels(), &["1", "x", "y", "x*y"]);
        assert_eq!(a.socle(), a.ideal_span(&[elem(&a, "x*y")]));
        assert!(a.is_gorenstein());
    }

    #[test]
    fn square_of_maximal_ideal_is_not_gorenstein() {
        let a = ArtinianAlgebra::monomial(field(101), &["x", "y"], &[vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.socle(), a.maximal_ideal());
        assert_eq!(a.socle_dim(), 2);
        assert!(!a.is_gorenstein());
    }

    #[test]
    fn infinite_monomial_quotient_rejected() {
        let e = ArtinianAlgebra::monomial(field(101), &["x", "y"], &[vec![2, 0]]);
        assert!(matches!(e, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn annihilators_and_colons() {
        let a = xy_squares(101);
        let m = a.maximal_ideal();
        let xy = a.ideal_span(&[elem(&a, "x*y")]);
        assert_eq!(a.ann(&m), xy);
        assert_eq!(a.ann(&a.unit_ideal()), a.zero_ideal());
        assert_eq!(a.colon(&xy, &m), m);
    }

    #[test]
    fn minimal_generators() {
        let a = xy_squares(101);
        let xy_ideal = a.ideal_span(&[elem(&a, "x"), elem(&a, "y")]);
        assert_eq!(a.mu(&xy_ideal), 2);
        assert_eq!(a.mu(&a.unit_ideal()), 1);
        assert_eq!(a.mu(&a.zero_ideal()), 0);
    }

    #[test]
    fn duality_examples() {
        let a = xy_squares(101);
        let m = a.maximal_ideal();
        assert!(a.duality_check(&m).unwrap());
        assert!(a.duality_check(&a.unit_ideal()).unwrap());
        let xy = a.ideal_span(&[elem(&a, "x*y")]);
        assert!(a.duality_check(&xy).unwrap());
        let q = a.quotient(&a.ann(&m)).unwrap();
        assert_eq!(q.algebra().socle_dim(), 2);
        let flat = ArtinianAlgebra::monomial(field(101), &["x", "y"], &[vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
        assert!(matches!(
            flat.duality_check(&flat.maximal_ideal()),
            Err(Error::NotGorenstein { socle_dim: 2 })
        ));
    }

    #[test]
    fn quotients() {
        let a = ArtinianAlgebra::monomial(field(101), &["x"], &[vec![3]]).unwrap();
        let same = a.quotient(&a.zero_ideal()).unwrap();
        assert_eq!(same.algebra(), &a);
        let x2 = a.ideal_span(&[elem(&a, "x^2")]);
        let q = a.quotient(&x2).unwrap();
        let expected = ArtinianAlgebra::monomial(field(101), &["x"], &[vec![2]]).unwrap();
        assert_eq!(q.algebra(), &expected);
        assert_eq!(q.algebra().dim(), a.dim() - x2.dim());
        assert_eq!(a.quotient(&a.unit_ideal()).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn semigroup_quotients() {
        let f = field(101);
        let r = SemigroupRing::new(f, &[3, 4]).unwrap();
        let q = r.order_ideal(12).unwrap();
        let sq = ArtinianAlgebra::from_quotient(&r, &q).unwrap();
        assert_eq!(sq.algebra().dim(), 9);
        assert_eq!(sq.basis_degrees(), &[0, 3, 4, 6, 7, 8, 9, 10, 11]);
        let q3 = r.order_ideal(3).unwrap();
        assert_eq!(ArtinianAlgebra::from_quotient(&r, &q3).unwrap().algebra().dim(), 1);
        assert!(matches!(
            ArtinianAlgebra::from_quotient(&r, &r.zero_ideal()),
            Err(Error::NotMPrimary(_))
        ));
        assert_eq!(
            ArtinianAlgebra::from_quotient(&r, &r.unit_ideal().unwrap()).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn principal_quotient_of_gorenstein_semigroup_ring() {
        let f = field(101);
        let r = SemigroupRing::new(f, &[3, 4]).unwrap();
        let q = r.monomial_ideal(&[9]).unwrap();
        let sq = ArtinianAlgebra::from_quotient(&r, &q).unwrap();
        assert_eq!(sq.algebra().dim(), 9);
        assert!(sq.algebra().is_gorenstein());
    }

    #[test]
    fn validated_structure_constants() {
        let f = field(5);
        // F[x]/(x^2) with basis 1, x
        let ok = ArtinianAlgebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into()],
            vec![0, 1],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        );
        assert!(ok.is_ok());
        // x^2 = 1 is not local
        let bad = ArtinianAlgebra::from_structure_constants(
            f,
            vec!["1".into(), "x".into()],
            vec![0, 1],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]],
        );
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn element_enumeration() {
        let a = ArtinianAlgebra::monomial(field(2), &["x"], &[vec![2]]).unwrap();
        assert_eq!(a.elements().len(), 4);
    }
}
