//! Dense linear algebra over a prime field.
//!
//! Every ideal in this crate is ultimately a [`Subspace`] of some coordinate
//! space over `F_p`. Subspaces are kept in reduced row echelon form, so two
//! subspaces are equal as sets exactly when their bases are identical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The field `F_p` for a prime `p`. Elements are plain `u32` residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub const DEFAULT_PRIME: u32 = 101;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn scalar(&self, x: i64) -> FieldScalar {
        FieldScalar {
            value: self.reduce(x),
            field: *self,
        }
    }

    /// `acc += c * v`, entrywise.
    pub fn axpy(&self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            if x != 0 {
                *a = self.add(*a, self.mul(c, x));
            }
        }
    }
}

/// A single element of `F_p` carrying its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    field: PrimeField,
}

impl FieldScalar {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn inv(&self) -> FieldScalar {
        FieldScalar {
            value: self.field.inv(self.value),
            field: self.field,
        }
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> Self {
        FieldScalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from rows of (not necessarily reduced) integers.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(DenseMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from already-reduced residue rows.
    pub fn from_residue_rows(field: PrimeField, cols: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.into_iter().map(|x| x % field.p()));
        }
        Ok(DenseMatrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Reduced row echelon form with zero rows removed, together with the pivot columns.
    fn rref_with_pivots(&self) -> (DenseMatrix, Vec<usize>) {
        let f = self.field;
        let cols = self.cols;
        let mut rows: Vec<Vec<u32>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(next, found);
            let inv = f.inv(rows[next][col]);
            for x in rows[next][col..].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let pivot_row = std::mem::take(&mut rows[next]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next {
                    continue;
                }
                let factor = row[col];
                if factor != 0 {
                    let neg = f.neg(factor);
                    for c in col..cols {
                        if pivot_row[c] != 0 {
                            row[c] = f.add(row[c], f.mul(neg, pivot_row[c]));
                        }
                    }
                }
            }
            rows[next] = pivot_row;
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        (
            DenseMatrix {
                field: f,
                rows: n,
                cols,
                data,
            },
            pivots,
        )
    }

    /// The unique reduced row echelon form, zero rows dropped.
    pub fn rref(&self) -> DenseMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Kernel `{x : M x = 0}` as a canonical subspace of `F_p^cols`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % f.p();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            vecs.push(v);
        }
        Subspace::from_residue_vectors(f, self.cols, vecs)
            .expect("nullspace vectors have ambient length")
    }
}

/// A subspace of `F_p^ambient`, stored by its canonical RREF basis.
///
/// Derived equality is set equality because the basis is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: DenseMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_matrix(m: &DenseMatrix) -> Self {
        let (basis, pivots) = m.rref_with_pivots();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn from_residue_vectors(field: PrimeField, ambient: usize, vecs: Vec<Vec<u32>>) -> Result<Self> {
        let m = DenseMatrix::from_residue_rows(field, ambient, vecs)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn span<R: AsRef<[i64]>>(field: PrimeField, ambient: usize, vecs: &[R]) -> Result<Self> {
        let m = DenseMatrix::from_rows(field, ambient, vecs)?;
        Ok(Self::from_matrix(&m))
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &DenseMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    /// Pivot column of each basis row, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: pivot coordinates cleared.
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.check_len(v.len())?;
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c != 0 {
                f.axpy(&mut out, f.neg(c), self.basis.row(i));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Coordinates of `v` against the basis rows, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        self.check_len(v.len())?;
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let f = self.field();
        let mut rebuilt = vec![0u32; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            f.axpy(&mut rebuilt, c, self.basis.row(i));
        }
        Ok(if rebuilt == v { Some(coords) } else { None })
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_residue_vectors(self.field(), self.ambient, rows)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient)?;
        for r in 0..self.basis.rows() {
            if !other.contains(self.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        // x = sum a_i u_i = sum b_j w_j  <=>  (a, -b) in the left kernel of [U; W]
        let f = self.field();
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = DenseMatrix::from_residue_rows(f, self.ambient, rows)?;
        let kernel = stacked.transpose().nullspace();
        let k = self.dim();
        let mut out = Vec::new();
        for coeffs in kernel.basis_vectors() {
            let mut v = vec![0u32; self.ambient];
            for (i, &c) in coeffs[..k].iter().enumerate() {
                f.axpy(&mut v, c, self.basis.row(i));
            }
            out.push(v);
        }
        Subspace::from_residue_vectors(f, self.ambient, out)
    }

    /// Columns that are not pivots; a canonical complement basis of coordinate vectors.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

/// `{r : sum_i r_i rows_i = 0}`: the left kernel of the matrix whose rows are given.
pub fn left_kernel(field: PrimeField, cols: usize, rows: Vec<Vec<u32>>) -> Result<Subspace> {
    let n = rows.len();
    if n == 0 {
        return Ok(Subspace::zero(field, 0));
    }
    let m = DenseMatrix::from_residue_rows(field, cols, rows)?;
    let k = m.transpose().nullspace();
    debug_assert_eq!(k.ambient_dim(), n);
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn scalar_arithmetic() {
        let f = f5();
        let a = f.scalar(3);
        let b = f.scalar(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((-a).value(), 2);
        assert_eq!((a * a.inv()).value(), 1);
        assert_eq!(f.scalar(-1).value(), 4);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = DenseMatrix::identity(f5(), 2);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_zero_matrix_has_rank_zero() {
        let z = DenseMatrix::zeros(f5(), 3, 3);
        let r = z.rref();
        assert_eq!(r.rows(), 0);
        assert_eq!(z.rank(), 0);
    }

    #[test]
    fn rref_hand_example() {
        let m = DenseMatrix::from_rows(f5(), 2, &[[2, 4], [1, 2]]).unwrap();
        let expected = DenseMatrix::from_rows(f5(), 2, &[[1, 2]]).unwrap();
        assert_eq!(m.rref(), expected);
    }

    #[test]
    fn nullspace_of_identity_is_zero() {
        for n in 1..5 {
            assert!(DenseMatrix::identity(f5(), n).nullspace().is_zero());
        }
    }

    #[test]
    fn nullspace_hand_example() {
        let m = DenseMatrix::from_rows(f5(), 2, &[[1, 1]]).unwrap();
        let k = m.nullspace();
        let expected = Subspace::span(f5(), 2, &[[1, 4]]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn subspace_lattice_examples() {
        let f = f5();
        let v = Subspace::span(f, 3, &[[1, 2, 0], [0, 1, 1]]).unwrap();
        assert_eq!(v.sum(&Subspace::zero(f, 3)).unwrap(), v);
        let e1 = Subspace::span(f, 2, &[[1, 0]]).unwrap();
        let e1x2 = Subspace::span(f, 2, &[[2, 0]]).unwrap();
        assert_eq!(e1, e1x2);
        let s = Subspace::span(f, 2, &[[1, 0], [1, 1]]).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let f = f5();
        let a = Subspace::zero(f, 2);
        let b = Subspace::zero(f, 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(a.contains(&[1, 2, 3]).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let f = PrimeField::new(7).unwrap();
        let a = Subspace::span(f, 3, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let b = Subspace::span(f, 3, &[[0, 1, 0], [0, 0, 1]]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::span(f, 3, &[[0, 1, 0]]).unwrap());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let a = Subspace::span(f, 3, &[[1, 2, 3], [0, 1, 4]]).unwrap();
        let v = vec![2, 1, 6];
        let c = a.coordinates(&v).unwrap();
        if a.contains(&v).unwrap() {
            assert!(c.is_some());
        } else {
            assert!(c.is_none());
        }
        let w: Vec<u32> = a.basis().row(0).iter().zip(a.basis().row(1)).map(|(&x, &y)| f.add(f.mul(3, x), y)).collect();
        assert_eq!(a.coordinates(&w).unwrap(), Some(vec![3, 1]));
    }
}
