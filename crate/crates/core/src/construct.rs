//! Explicit polynomial constructions over Artinian local algebras.
//!
//! [`AnnihilatorInstance`] builds, for `g` of degree `n` and an ideal `J` with
//! `I = (0 : c(g)) ⊆ J ⊆ (I : m)`, a polynomial `f` of degree at most `m` with
//! `c(f) ⊆ J`, `fg = 0` and `c(f) c(g) ≠ 0`. The condition `fg = 0` becomes a
//! homogeneous system over the residue field with `(m+1) r` unknowns and
//! `(n+m+1) s` equations, where `r = dim J/I` and `s` is the socle dimension.
//!
//! [`separating_polynomial`] uses that construction on `A / (0 : P)` to produce
//! `h` with `P c(h) c(g) ≠ 0` while `B c(h) = 0 = c(hg) P`.

use crate::artin::{AlgElem, ArtinianAlgebra, SubIdeal};
use crate::content::{content, poly_mul, RingPoly};
use crate::error::{Error, Result};
use crate::exactla::{DenseMatrix, Subspace};

/// Smallest `m >= 0` with `(m+1) r > (n+m+1) s`.
pub fn min_degree_m(r: usize, s: usize, n: usize) -> Result<usize> {
    if r <= s {
        return Err(Error::Precondition(format!("need dim(J/I) = {r} > socle dimension {s}")));
    }
    // (m+1)(r-s) > n s
    Ok((n * s) / (r - s))
}

#[derive(Clone, Debug)]
pub struct AnnihilatorInstance<'a> {
    algebra: &'a ArtinianAlgebra,
    g: RingPoly<AlgElem>,
    j: SubIdeal,
    i: SubIdeal,
    r: usize,
    s: usize,
    n: usize,
    m: usize,
}

#[derive(Clone, Debug)]
pub struct AnnihilatorSolution {
    pub f: RingPoly<AlgElem>,
    pub equations: usize,
    pub unknowns: usize,
    pub nullity: usize,
}

impl<'a> AnnihilatorInstance<'a> {
    /// Validates the hypotheses; `m` defaults to [`min_degree_m`].
    pub fn new(algebra: &'a ArtinianAlgebra, g: &RingPoly<AlgElem>, j: &SubIdeal, m: Option<usize>) -> Result<Self> {
        let n = g
            .degree()
            .ok_or_else(|| Error::Precondition("g must be nonzero".into()))?;
        if j.space().ambient_dim() != algebra.dim() {
            return Err(Error::RingMismatch);
        }
        let i = algebra.ann(&content(algebra, g)?);
        if !algebra.ideal_le(&i, j) {
            return Err(Error::Precondition("(0 : c(g)) is not contained in J".into()));
        }
        if !algebra.ideal_le(j, &algebra.colon(&i, &algebra.maximal_ideal())) {
            return Err(Error::Precondition("J is not contained in ((0 : c(g)) : m)".into()));
        }
        let r = j.dim() - i.dim();
        let s = algebra.socle_dim();
        let least = min_degree_m(r, s, n)?;
        let m = m.unwrap_or(least);
        if (m + 1) * r <= (n + m + 1) * s {
            return Err(Error::Precondition(format!(
                "(m+1) r = {} does not exceed (n+m+1) s = {}",
                (m + 1) * r,
                (n + m + 1) * s
            )));
        }
        Ok(AnnihilatorInstance {
            algebra,
            g: g.clone(),
            j: j.clone(),
            i,
            r,
            s,
            n,
            m,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn annihilator(&self) -> &SubIdeal {
        &self.i
    }

    /// Lifts of a basis of `J / I`, chosen greedily from the canonical basis of `J`.
    fn complement_lifts(&self) -> Vec<Vec<u32>> {
        let field = self.algebra.field();
        let mut acc = self.i.space().clone();
        let mut xs = Vec::new();
        for v in self.j.space().basis_vectors() {
            if !acc.contains(&v).unwrap() {
                let line = Subspace::from_residue_vectors(field, v.len(), vec![v.clone()]).unwrap();
                acc = acc.sum(&line).unwrap();
                xs.push(v);
            }
        }
        debug_assert_eq!(xs.len(), self.r);
        xs
    }

    /// The residue-field system in the unknowns `z[i][j]` (column `i * r + j`).
    /// Also returns the lifts `x_j`.
    pub fn system(&self) -> Result<(DenseMatrix, Vec<Vec<u32>>)> {
        let alg = self.algebra;
        let field = alg.field();
        let xs = self.complement_lifts();
        let socle = alg.socle();
        let (n, m, r, s) = (self.n, self.m, self.r, self.s);
        // c[i][l][k]: a_i x_l = sum_k c[i][l][k] y_k
        let mut c = vec![vec![vec![0u32; s]; r]; n + 1];
        for (i, a) in self.g.coeffs().iter().enumerate() {
            for (l, x) in xs.iter().enumerate() {
                let prod = alg.mul(a, &AlgElem(x.clone()));
                let coords = socle.space().coordinates(&prod.0)?.ok_or_else(|| {
                    Error::Internal(format!("a_{i} x_{l} does not lie in the socle"))
                })?;
                c[i][l] = coords;
            }
        }
        let mut mat = DenseMatrix::zeros(field, (n + m + 1) * s, (m + 1) * r);
        for d in 0..=n + m {
            for k in 0..s {
                for jf in 0..=m.min(d) {
                    let i = d - jf;
                    if i > n {
                        continue;
                    }
                    for l in 0..r {
                        let v = c[i][l][k];
                        if v != 0 {
                            let (row, col) = (d * s + k, jf * r + l);
                            let cur = mat.get(row, col);
                            mat.set(row, col, field.add(cur, v));
                        }
                    }
                }
            }
        }
        Ok((mat, xs))
    }

    /// Builds `f` from the first canonical nullspace vector and verifies it.
    pub fn construct(&self) -> Result<AnnihilatorSolution> {
        let alg = self.algebra;
        let field = alg.field();
        let (mat, xs) = self.system()?;
        let kernel = mat.nullspace();
        let nullity = kernel.dim();
        let bound = (self.m + 1) * self.r - (self.n + self.m + 1) * self.s;
        if nullity < bound {
            return Err(Error::Internal(format!("nullity {nullity} below the rank bound {bound}")));
        }
        let e = kernel
            .basis_vectors()
            .into_iter()
            .next()
            .ok_or_else(|| Error::Internal("empty nullspace".into()))?;
        let coeffs = (0..=self.m)
            .map(|jf| {
                let mut b = vec![0u32; alg.dim()];
                for (l, x) in xs.iter().enumerate() {
                    field.axpy(&mut b, e[jf * self.r + l], x);
                }
                AlgElem(b)
            })
            .collect();
        let f = RingPoly::new(alg, coeffs);
        verify_annihilator(alg, &f, &self.g, &self.j)?;
        Ok(AnnihilatorSolution {
            f,
            equations: mat.rows(),
            unknowns: mat.cols(),
            nullity,
        })
    }
}

/// Checks `c(f) ⊆ J`, `fg = 0` and `c(f) c(g) ≠ 0`.
pub fn verify_annihilator(alg: &ArtinianAlgebra, f: &RingPoly<AlgElem>, g: &RingPoly<AlgElem>, j: &SubIdeal) -> Result<()> {
    let cf = content(alg, f)?;
    if !alg.ideal_le(&cf, j) {
        return Err(Error::Internal("c(f) is not contained in J".into()));
    }
    if !poly_mul(alg, f, g).is_zero() {
        return Err(Error::Internal("fg is not zero".into()));
    }
    if alg.ideal_product(&cf, &content(alg, g)?).is_zero() {
        return Err(Error::Internal("c(f) c(g) is zero".into()));
    }
    Ok(())
}

/// Convenience form: `f` for `(A, g, J, m)`.
pub fn thm31_construct(
    algebra: &ArtinianAlgebra,
    g: &RingPoly<AlgElem>,
    j: &SubIdeal,
    m: Option<usize>,
) -> Result<RingPoly<AlgElem>> {
    Ok(AnnihilatorInstance::new(algebra, g, j, m)?.construct()?.f)
}

#[derive(Clone, Debug)]
pub struct SeparatingSolution {
    pub h: RingPoly<AlgElem>,
    /// `P = prod c(f_i)`.
    pub product: SubIdeal,
    /// `B = sum_i c(f_i g) prod_{j != i} c(f_j)`.
    pub mixed: SubIdeal,
    /// `dim P c(g) / (m P c(g) + B)`.
    pub quotient_dim: usize,
    pub mu_product: usize,
}

/// `P` and `B` for the family `fs`.
pub fn product_and_mixed(alg: &ArtinianAlgebra, fs: &[RingPoly<AlgElem>], g: &RingPoly<AlgElem>) -> Result<(SubIdeal, SubIdeal)> {
    let contents = fs.iter().map(|f| content(alg, f)).collect::<Result<Vec<_>>>()?;
    let mut product = alg.unit_ideal();
    for c in &contents {
        product = alg.ideal_product(&product, c);
    }
    let mut mixed = alg.zero_ideal();
    for (i, f) in fs.iter().enumerate() {
        let mut term = content(alg, &poly_mul(alg, f, g))?;
        for (j, c) in contents.iter().enumerate() {
            if j != i {
                term = alg.ideal_product(&term, c);
            }
        }
        mixed = alg.ideal_sum(&mixed, &term);
    }
    Ok((product, mixed))
}

/// `h` with `P c(h) c(g) ≠ 0` and `B c(h) = 0 = c(hg) P`, for a Gorenstein algebra
/// satisfying `dim P c(g) / (m P c(g) + B) >= mu(P) + 1`.
pub fn separating_polynomial(alg: &ArtinianAlgebra, g: &RingPoly<AlgElem>, fs: &[RingPoly<AlgElem>]) -> Result<SeparatingSolution> {
    if !alg.is_gorenstein() {
        return Err(Error::NotGorenstein {
            socle_dim: alg.socle_dim(),
        });
    }
    if fs.is_empty() {
        return Err(Error::InvalidParameter("at least one polynomial f_i is required".into()));
    }
    let (product, mixed) = product_and_mixed(alg, fs, g)?;
    let cg = content(alg, g)?;
    let pcg = alg.ideal_product(&product, &cg);
    let denom = alg.ideal_sum(&alg.ideal_product(&alg.maximal_ideal(), &pcg), &mixed);
    let quotient_dim = alg.ideal_sum(&pcg, &denom).dim() - denom.dim();
    let mu_product = alg.mu(&product);
    if quotient_dim < mu_product + 1 {
        return Err(Error::DimensionHypothesis {
            quotient_dim,
            required: mu_product + 1,
        });
    }
    let j = alg.ann(&denom);
    let ann_p = alg.ann(&product);
    let q = alg.quotient(&ann_p)?;
    let qa = q.algebra();
    let gq = g.map(qa, |c| q.project(c));
    let jq = q.project_ideal(&j);
    let fq = AnnihilatorInstance::new(qa, &gq, &jq, None)?.construct()?.f;
    let h = fq.map(alg, |c| q.lift(c));
    verify_separating(alg, &h, g, &product, &mixed)?;
    Ok(SeparatingSolution {
        h,
        product,
        mixed,
        quotient_dim,
        mu_product,
    })
}

/// Convenience form: `h` for `(A, g, fs)`.
pub fn thm33_construct(algebra: &ArtinianAlgebra, g: &RingPoly<AlgElem>, fs: &[RingPoly<AlgElem>]) -> Result<RingPoly<AlgElem>> {
    Ok(separating_polynomial(algebra, g, fs)?.h)
}

/// Checks `P c(h) c(g) ≠ 0`, `B c(h) = 0` and `c(hg) P = 0`.
pub fn verify_separating(
    alg: &ArtinianAlgebra,
    h: &RingPoly<AlgElem>,
    g: &RingPoly<AlgElem>,
    product: &SubIdeal,
    mixed: &SubIdeal,
) -> Result<()> {
    let ch = content(alg, h)?;
    let cg = content(alg, g)?;
    if alg.ideal_product(&alg.ideal_product(product, &ch), &cg).is_zero() {
        return Err(Error::Internal("P c(h) c(g) is zero".into()));
    }
    if !alg.ideal_product(mixed, &ch).is_zero() {
        return Err(Error::Internal("B c(h) is not zero".into()));
    }
    if !alg.ideal_product(&content(alg, &poly_mul(alg, h, g))?, product).is_zero() {
        return Err(Error::Internal("c(hg) P is not zero".into()));
    }
    Ok(())
}
