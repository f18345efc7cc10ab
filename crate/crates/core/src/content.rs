//! Polynomials over a coefficient ring and the calculus of their content ideals.
//!
//! The Dedekind-Mertens identity for `f, g` at exponent `k` is
//! `c(fg) c(f)^(k-1) = c(f)^k c(g)`; its polarized form for `f_1, ..., f_k` is
//! `sum_i c(f_i g) prod_{j != i} c(f_j) = prod_j c(f_j) c(g)`. Both are decided
//! here by exact ideal arithmetic.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::artin::{AlgElem, ArtinianAlgebra, SubIdeal};
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::semiring::{IdealVS, SemigroupRing, Series};

/// Knobs for drawing random ring elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SamplerConfig {
    /// Inclusive lower bound on the `s`-degree of sampled monomials.
    pub min_degree: usize,
    /// Exclusive bound on the `s`-degree of sampled monomials; `None` means `c + 2e`.
    pub max_degree: Option<usize>,
    /// Maximum number of monomial terms per coefficient.
    pub max_terms: usize,
    /// Probability (in percent) that a non-leading coefficient is zero.
    pub zero_percent: u32,
    /// Probability (in percent) that a polynomial draws all coefficients from one
    /// narrow band of orders, see [`CoefficientRing::banded`].
    pub band_percent: u32,
    /// Draw scalars from `{1, -1}` only, which makes cancellations likely.
    pub sign_scalars: bool,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            min_degree: 0,
            max_degree: None,
            max_terms: 2,
            zero_percent: 25,
            band_percent: 50,
            sign_scalars: false,
        }
    }
}

/// A commutative coefficient ring with exact ideal arithmetic.
pub trait CoefficientRing: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;
    type Ideal: Clone + fmt::Debug + Send + Sync;

    fn field(&self) -> PrimeField;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn display_elem(&self, a: &Self::Elem) -> String;

    fn span(&self, gens: &[Self::Elem]) -> Result<Self::Ideal>;
    fn unit_ideal(&self) -> Result<Self::Ideal>;
    fn ideal_mul(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_add(&self, a: &Self::Ideal, b: &Self::Ideal) -> Result<Self::Ideal>;
    fn ideal_eq(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool;
    /// `a ⊆ b`.
    fn ideal_le(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool;
    fn ideal_is_zero(&self, a: &Self::Ideal) -> bool;
    fn mu(&self, a: &Self::Ideal) -> usize;

    fn random_elem(&self, rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> Self::Elem;
    /// A narrowed sampler used for a whole polynomial. The default keeps `cfg`.
    fn banded(&self, _rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> SamplerConfig {
        *cfg
    }
    /// Every element, when the ring is finite.
    fn finite_elements(&self) -> Option<Vec<Self::Elem>>;
}

impl CoefficientRing for SemigroupRing {
    type Elem = Series;
    type Ideal = IdealVS;

    fn field(&self) -> PrimeField {
        SemigroupRing::field(self)
    }
    fn zero(&self) -> Series {
        SemigroupRing::zero(self)
    }
    fn one(&self) -> Series {
        SemigroupRing::one(self)
    }
    fn is_zero(&self, a: &Series) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Series, b: &Series) -> Series {
        SemigroupRing::add(self, a, b)
    }
    fn neg(&self, a: &Series) -> Series {
        SemigroupRing::neg(self, a)
    }
    fn mul(&self, a: &Series, b: &Series) -> Series {
        SemigroupRing::mul(self, a, b)
    }
    fn display_elem(&self, a: &Series) -> String {
        self.display_series(a)
    }
    fn span(&self, gens: &[Series]) -> Result<IdealVS> {
        self.ideal_span(gens)
    }
    fn unit_ideal(&self) -> Result<IdealVS> {
        SemigroupRing::unit_ideal(self)
    }
    fn ideal_mul(&self, a: &IdealVS, b: &IdealVS) -> Result<IdealVS> {
        self.ideal_product(a, b)
    }
    fn ideal_add(&self, a: &IdealVS, b: &IdealVS) -> Result<IdealVS> {
        self.ideal_sum(a, b)
    }
    fn ideal_eq(&self, a: &IdealVS, b: &IdealVS) -> bool {
        SemigroupRing::ideal_eq(self, a, b)
    }
    fn ideal_le(&self, a: &IdealVS, b: &IdealVS) -> bool {
        SemigroupRing::ideal_le(self, a, b)
    }
    fn ideal_is_zero(&self, a: &IdealVS) -> bool {
        a.is_zero()
    }
    fn mu(&self, a: &IdealVS) -> usize {
        SemigroupRing::mu(self, a)
    }

    fn random_elem(&self, rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> Series {
        let bound = cfg
            .max_degree
            .unwrap_or(self.conductor() + 2 * self.multiplicity());
        let mut degrees = self.degrees(cfg.min_degree, bound.max(1));
        if degrees.is_empty() {
            degrees = self.degrees(0, bound.max(1));
        }
        let p = self.field().p();
        let n = rng.gen_range(1..=cfg.max_terms.max(1));
        let terms: Vec<(usize, i64)> = (0..n)
            .map(|_| {
                let d = degrees[rng.gen_range(0..degrees.len())];
                let c = if cfg.sign_scalars {
                    if rng.gen_bool(0.5) { 1 } else { -1 }
                } else {
                    rng.gen_range(1..p) as i64
                };
                (d, c)
            })
            .collect();
        self.series(&terms).expect("sampled degrees are in the semigroup")
    }

    /// Orders in `[lo, lo + e)` for a random `lo` below `c + e` with scalars `±1`:
    /// the identity fails at small exponents through cancellations among
    /// coefficients of comparable order.
    fn banded(&self, rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> SamplerConfig {
        let e = self.multiplicity();
        let starts = self.degrees(0, self.conductor() + e);
        let lo = starts[rng.gen_range(0..starts.len())];
        SamplerConfig {
            min_degree: lo,
            max_degree: Some(lo + e),
            sign_scalars: true,
            ..*cfg
        }
    }

    fn finite_elements(&self) -> Option<Vec<Series>> {
        None
    }
}

impl CoefficientRing for ArtinianAlgebra {
    type Elem = AlgElem;
    type Ideal = SubIdeal;

    fn field(&self) -> PrimeField {
        ArtinianAlgebra::field(self)
    }
    fn zero(&self) -> AlgElem {
        ArtinianAlgebra::zero(self)
    }
    fn one(&self) -> AlgElem {
        ArtinianAlgebra::one(self)
    }
    fn is_zero(&self, a: &AlgElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        ArtinianAlgebra::add(self, a, b)
    }
    fn neg(&self, a: &AlgElem) -> AlgElem {
        ArtinianAlgebra::neg(self, a)
    }
    fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        ArtinianAlgebra::mul(self, a, b)
    }
    fn display_elem(&self, a: &AlgElem) -> String {
        ArtinianAlgebra::display_elem(self, a)
    }
    fn span(&self, gens: &[AlgElem]) -> Result<SubIdeal> {
        Ok(self.ideal_span(gens))
    }
    fn unit_ideal(&self) -> Result<SubIdeal> {
        Ok(ArtinianAlgebra::unit_ideal(self))
    }
    fn ideal_mul(&self, a: &SubIdeal, b: &SubIdeal) -> Result<SubIdeal> {
        Ok(self.ideal_product(a, b))
    }
    fn ideal_add(&self, a: &SubIdeal, b: &SubIdeal) -> Result<SubIdeal> {
        Ok(self.ideal_sum(a, b))
    }
    fn ideal_eq(&self, a: &SubIdeal, b: &SubIdeal) -> bool {
        a == b
    }
    fn ideal_le(&self, a: &SubIdeal, b: &SubIdeal) -> bool {
        ArtinianAlgebra::ideal_le(self, a, b)
    }
    fn ideal_is_zero(&self, a: &SubIdeal) -> bool {
        a.is_zero()
    }
    fn mu(&self, a: &SubIdeal) -> usize {
        ArtinianAlgebra::mu(self, a)
    }

    /// A uniform combination of the basis elements at or above a random filtration level.
    fn random_elem(&self, rng: &mut ChaCha8Rng, _cfg: &SamplerConfig) -> AlgElem {
        let degrees = self.degrees();
        let top = degrees.iter().copied().max().unwrap_or(0);
        let level = rng.gen_range(0..=top);
        let p = self.field().p();
        AlgElem(
            degrees
                .iter()
                .map(|&d| if d >= level { rng.gen_range(0..p) } else { 0 })
                .collect(),
        )
    }

    fn finite_elements(&self) -> Option<Vec<AlgElem>> {
        Some(self.elements())
    }
}

/// A polynomial in `t` with coefficients in a [`CoefficientRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> RingPoly<E> {
    pub fn new<R: CoefficientRing<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        RingPoly { coeffs }
    }

    pub fn zero() -> Self {
        RingPoly { coeffs: Vec::new() }
    }

    pub fn constant<R: CoefficientRing<Elem = E>>(ring: &R, c: E) -> Self {
        Self::new(ring, vec![c])
    }
}

impl<E> RingPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn map<F, R: CoefficientRing<Elem = F>>(&self, ring: &R, f: impl Fn(&E) -> F) -> RingPoly<F>
    where
        F: Clone,
    {
        RingPoly::new(ring, self.coeffs.iter().map(f).collect())
    }

    pub fn display<R: CoefficientRing<Elem = E>>(&self, ring: &R) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let mut s = ring.display_elem(c);
            // a single negative term reads as a subtraction
            let negative = s.starts_with('-') && !s[1..].contains([' ', '+', '-']);
            if negative {
                s.remove(0);
            }
            if i > 0 {
                if s.contains(' ') {
                    s = format!("({s})");
                }
                s = if s == "1" { String::new() } else { format!("{s}*") };
                s.push_str(&if i == 1 { "t".to_string() } else { format!("t^{i}") });
            }
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&s);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

pub fn poly_add<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>, g: &RingPoly<R::Elem>) -> RingPoly<R::Elem> {
    let n = f.coeffs.len().max(g.coeffs.len());
    let zero = ring.zero();
    let coeffs = (0..n)
        .map(|i| ring.add(f.coeffs.get(i).unwrap_or(&zero), g.coeffs.get(i).unwrap_or(&zero)))
        .collect();
    RingPoly::new(ring, coeffs)
}

/// `a * t^shift * f`.
pub fn poly_scale_shift<R: CoefficientRing>(ring: &R, a: &R::Elem, shift: usize, f: &RingPoly<R::Elem>) -> RingPoly<R::Elem> {
    let mut coeffs = vec![ring.zero(); shift];
    coeffs.extend(f.coeffs.iter().map(|c| ring.mul(a, c)));
    RingPoly::new(ring, coeffs)
}

/// Cauchy product in `R[t]`.
pub fn poly_mul<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>, g: &RingPoly<R::Elem>) -> RingPoly<R::Elem> {
    if f.is_zero() || g.is_zero() {
        return RingPoly::zero();
    }
    let mut out = vec![ring.zero(); f.coeffs.len() + g.coeffs.len() - 1];
    for (i, a) in f.coeffs.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in g.coeffs.iter().enumerate() {
            if !ring.is_zero(b) {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
    }
    RingPoly::new(ring, out)
}

/// The ideal generated by the coefficients.
pub fn content<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>) -> Result<R::Ideal> {
    ring.span(&f.coeffs)
}

fn ideal_pow<R: CoefficientRing>(ring: &R, a: &R::Ideal, k: usize) -> Result<R::Ideal> {
    let mut acc = ring.unit_ideal()?;
    for _ in 0..k {
        acc = ring.ideal_mul(&acc, a)?;
    }
    Ok(acc)
}

/// Decides `c(fg) c(f)^(k-1) = c(f)^k c(g)`.
pub fn dm_identity<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>, g: &RingPoly<R::Elem>, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let cf = content(ring, f)?;
    let cg = content(ring, g)?;
    let cfg = content(ring, &poly_mul(ring, f, g))?;
    let pow = ideal_pow(ring, &cf, k - 1)?;
    let lhs = ring.ideal_mul(&cfg, &pow)?;
    let rhs = ring.ideal_mul(&ring.ideal_mul(&pow, &cf)?, &cg)?;
    Ok(ring.ideal_eq(&lhs, &rhs))
}

/// `min(deg g + 1, mu(c(g)))`, the exponent at which the identity must hold.
pub fn dm_upper_bound<R: CoefficientRing>(ring: &R, g: &RingPoly<R::Elem>) -> Result<usize> {
    let deg = g
        .degree()
        .ok_or_else(|| Error::Precondition("g must be nonzero".into()))?;
    Ok((deg + 1).min(ring.mu(&content(ring, g)?)).max(1))
}

/// Least `k` with the Dedekind-Mertens identity for `(f, g)`.
pub fn dm_k_witness<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>, g: &RingPoly<R::Elem>) -> Result<usize> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("f and g must be nonzero".into()));
    }
    min_exponent(ring, f, g)
}

/// As [`dm_k_witness`], with the zero polynomial allowed (it satisfies every identity).
fn min_exponent<R: CoefficientRing>(ring: &R, f: &RingPoly<R::Elem>, g: &RingPoly<R::Elem>) -> Result<usize> {
    if f.is_zero() {
        return Ok(1);
    }
    let bound = dm_upper_bound(ring, g)?;
    let cf = content(ring, f)?;
    let cg = content(ring, g)?;
    let mut lhs = content(ring, &poly_mul(ring, f, g))?;
    let mut rhs = ring.ideal_mul(&cf, &cg)?;
    for k in 1..=bound {
        if ring.ideal_eq(&lhs, &rhs) {
            return Ok(k);
        }
        if k < bound {
            lhs = ring.ideal_mul(&lhs, &cf)?;
            rhs = ring.ideal_mul(&rhs, &cf)?;
        }
    }
    Err(Error::Internal(format!(
        "Dedekind-Mertens identity fails at the guaranteed exponent {bound}"
    )))
}

/// Decides `sum_i c(f_i g) prod_{j != i} c(f_j) = prod_j c(f_j) c(g)`.
pub fn polarized_identity<R: CoefficientRing>(ring: &R, fs: &[RingPoly<R::Elem>], g: &RingPoly<R::Elem>) -> Result<bool> {
    if fs.is_empty() {
        return Err(Error::InvalidParameter("at least one polynomial f_i is required".into()));
    }
    let contents = fs.iter().map(|f| content(ring, f)).collect::<Result<Vec<_>>>()?;
    let cg = content(ring, g)?;
    let mut rhs = cg;
    for c in &contents {
        rhs = ring.ideal_mul(&rhs, c)?;
    }
    // prefix[i] = c(f_0)...c(f_{i-1}), suffix[i] = c(f_i)...c(f_{k-1})
    let k = fs.len();
    let mut prefix = vec![ring.unit_ideal()?];
    for c in &contents {
        let next = ring.ideal_mul(prefix.last().unwrap(), c)?;
        prefix.push(next);
    }
    let mut suffix = vec![ring.unit_ideal()?; k + 1];
    for i in (0..k).rev() {
        suffix[i] = ring.ideal_mul(&suffix[i + 1], &contents[i])?;
    }
    let mut lhs: Option<R::Ideal> = None;
    for (i, f) in fs.iter().enumerate() {
        let cfg = content(ring, &poly_mul(ring, f, g))?;
        let term = ring.ideal_mul(&ring.ideal_mul(&cfg, &prefix[i])?, &suffix[i + 1])?;
        lhs = Some(match lhs {
            None => term,
            Some(acc) => ring.ideal_add(&acc, &term)?,
        });
    }
    Ok(ring.ideal_eq(&lhs.unwrap(), &rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Strategy {
    Exhaustive { deg_bound: usize },
    Random { seed: u64, samples: usize, deg_bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Certificate {
    /// Every polynomial of degree `<= deg_bound` was checked.
    Exhaustive { deg_bound: usize, candidates: u128 },
    /// A seeded sample; the bound is a lower bound only.
    Sampled,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Maximum number of candidates an exhaustive search may enumerate.
    pub budget: u128,
    pub sampler: SamplerConfig,
}

pub const DEFAULT_BUDGET: u128 = 1 << 20;

impl SearchConfig {
    pub fn random(seed: u64, samples: usize, deg_bound: usize) -> Self {
        SearchConfig {
            strategy: Strategy::Random {
                seed,
                samples,
                deg_bound,
            },
            budget: DEFAULT_BUDGET,
            sampler: SamplerConfig::default(),
        }
    }

    pub fn exhaustive(deg_bound: usize) -> Self {
        SearchConfig {
            strategy: Strategy::Exhaustive { deg_bound },
            budget: DEFAULT_BUDGET,
            sampler: SamplerConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness<E> {
    pub f: RingPoly<E>,
    pub k_min: usize,
}

/// Evidence about the Dedekind-Mertens number of `g`.
#[derive(Clone, Debug)]
pub struct DMReport<E> {
    pub g: RingPoly<E>,
    pub mu_content: usize,
    pub strategy: Strategy,
    /// Sorted by `k_min` descending, ties in candidate order.
    pub witness_table: Vec<Witness<E>>,
    pub dm_lower_bound: usize,
    pub certificate: Certificate,
}

impl<E> DMReport<E> {
    /// Number of witnesses at each `k_min`, indexed from 1.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.dm_lower_bound];
        for w in &self.witness_table {
            h[w.k_min - 1] += 1;
        }
        h
    }
}

/// Deterministic candidate stream: candidate `i` depends only on `(seed, i)`.
fn candidate_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// A random polynomial: degree uniform in `[0, deg_bound]`, nonzero leading coefficient.
pub fn random_poly<R: CoefficientRing>(
    ring: &R,
    rng: &mut ChaCha8Rng,
    deg_bound: usize,
    cfg: &SamplerConfig,
) -> RingPoly<R::Elem> {
    let deg = rng.gen_range(0..=deg_bound);
    let banded;
    let cfg = if rng.gen_range(0..100) < cfg.band_percent {
        banded = ring.banded(rng, cfg);
        &banded
    } else {
        cfg
    };
    let mut coeffs = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        if i < deg && rng.gen_range(0..100) < cfg.zero_percent {
            coeffs.push(ring.zero());
            continue;
        }
        let mut c = ring.random_elem(rng, cfg);
        if i == deg {
            let mut tries = 0;
            while ring.is_zero(&c) && tries < 64 {
                c = ring.random_elem(rng, cfg);
                tries += 1;
            }
        }
        coeffs.push(c);
    }
    RingPoly::new(ring, coeffs)
}

fn exhaustive_candidates<R: CoefficientRing>(ring: &R, deg_bound: usize, tuple: usize, budget: u128) -> Result<(Vec<R::Elem>, u128)> {
    let elems = ring
        .finite_elements()
        .ok_or_else(|| Error::Unsupported("exhaustive search needs a finite coefficient ring".into()))?;
    let per_poly = (elems.len() as u128)
        .checked_pow((deg_bound + 1) as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    let needed = per_poly.checked_pow(tuple as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok((elems, per_poly))
}

fn nth_poly<R: CoefficientRing>(ring: &R, elems: &[R::Elem], deg_bound: usize, mut index: u128) -> RingPoly<R::Elem> {
    let n = elems.len() as u128;
    let coeffs = (0..=deg_bound)
        .map(|_| {
            let c = elems[(index % n) as usize].clone();
            index /= n;
            c
        })
        .collect();
    RingPoly::new(ring, coeffs)
}

/// Collects per-witness minimal exponents for `g`.
pub fn dm_search<R: CoefficientRing>(ring: &R, g: &RingPoly<R::Elem>, cfg: &SearchConfig) -> Result<DMReport<R::Elem>> {
    if g.is_zero() {
        return Err(Error::Precondition("g must be nonzero".into()));
    }
    let mu_content = ring.mu(&content(ring, g)?);
    let (candidates, certificate): (Vec<RingPoly<R::Elem>>, Certificate) = match cfg.strategy {
        Strategy::Exhaustive { deg_bound } => {
            let (elems, total) = exhaustive_candidates(ring, deg_bound, 1, cfg.budget)?;
            let polys = (0..total).map(|i| nth_poly(ring, &elems, deg_bound, i)).collect();
            (
                polys,
                Certificate::Exhaustive {
                    deg_bound,
                    candidates: total,
                },
            )
        }
        Strategy::Random {
            seed,
            samples,
            deg_bound,
        } => {
            let polys = (0..samples)
                .map(|i| random_poly(ring, &mut candidate_rng(seed, i), deg_bound, &cfg.sampler))
                .collect();
            (polys, Certificate::Sampled)
        }
    };
    let ks = candidates
        .par_iter()
        .map(|f| min_exponent(ring, f, g))
        .collect::<Result<Vec<usize>>>()?;
    let mut witness_table: Vec<Witness<R::Elem>> = candidates
        .into_iter()
        .zip(ks)
        .map(|(f, k_min)| Witness { f, k_min })
        .collect();
    witness_table.sort_by_key(|w| std::cmp::Reverse(w.k_min));
    let dm_lower_bound = witness_table.first().map_or(1, |w| w.k_min);
    Ok(DMReport {
        g: g.clone(),
        mu_content,
        strategy: cfg.strategy,
        witness_table,
        dm_lower_bound,
        certificate,
    })
}

/// Evidence about the polarized identity for `tuple`-sized families.
#[derive(Clone, Debug)]
pub struct PolarizedReport<E> {
    pub g: RingPoly<E>,
    pub tuple: usize,
    pub strategy: Strategy,
    pub checked: usize,
    pub violations: Vec<Vec<RingPoly<E>>>,
    pub certificate: Certificate,
}

/// Checks the polarized identity on `tuple`-sized families of witnesses.
pub fn polarized_search<R: CoefficientRing>(
    ring: &R,
    g: &RingPoly<R::Elem>,
    tuple: usize,
    cfg: &SearchConfig,
) -> Result<PolarizedReport<R::Elem>> {
    if tuple == 0 {
        return Err(Error::InvalidParameter("tuple size must be positive".into()));
    }
    let (families, certificate): (Vec<Vec<RingPoly<R::Elem>>>, Certificate) = match cfg.strategy {
        Strategy::Exhaustive { deg_bound } => {
            let (elems, per_poly) = exhaustive_candidates(ring, deg_bound, tuple, cfg.budget)?;
            let total = per_poly.pow(tuple as u32);
            let fams = (0..total)
                .map(|mut i| {
                    (0..tuple)
                        .map(|_| {
                            let f = nth_poly(ring, &elems, deg_bound, i % per_poly);
                            i /= per_poly;
                            f
                        })
                        .collect()
                })
                .collect();
            (
                fams,
                Certificate::Exhaustive {
                    deg_bound,
                    candidates: total,
                },
            )
        }
        Strategy::Random {
            seed,
            samples,
            deg_bound,
        } => {
            let fams = (0..samples)
                .map(|i| {
                    let mut rng = candidate_rng(seed, i);
                    (0..tuple)
                        .map(|_| random_poly(ring, &mut rng, deg_bound, &cfg.sampler))
                        .collect()
                })
                .collect();
            (fams, Certificate::Sampled)
        }
    };
    let verdicts = families
        .par_iter()
        .map(|fs| polarized_identity(ring, fs, g))
        .collect::<Result<Vec<bool>>>()?;
    let checked = families.len();
    let violations = families
        .into_iter()
        .zip(verdicts)
        .filter(|(_, ok)| !ok)
        .map(|(fs, _)| fs)
        .collect();
    Ok(PolarizedReport {
        g: g.clone(),
        tuple,
        strategy: cfg.strategy,
        checked,
        violations,
        certificate,
    })
}

fn degree_or_zero<E>(f: &RingPoly<E>) -> usize {
    f.degree().unwrap_or(0)
}

/// Exponents `N_1 < N_2 < ...` placing the blocks `f_i t^(N_(i-1))` and their products
/// with `g` on disjoint degree ranges.
pub fn gap_exponents<R: CoefficientRing>(ring: &R, fs: &[RingPoly<R::Elem>], g: &RingPoly<R::Elem>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(fs.len());
    for f in fs {
        let width = degree_or_zero(f).max(degree_or_zero(&poly_mul(ring, f, g)));
        let prev = out.last().copied().unwrap_or(0);
        out.push(width + prev + 1);
    }
    out
}

/// `f = a_1 f_1 + sum_{i >= 2} a_i f_i t^(N_(i-1))` with the gap exponents for `g`.
pub fn gap_concat<R: CoefficientRing>(
    ring: &R,
    fs: &[RingPoly<R::Elem>],
    weights: &[R::Elem],
    g: &RingPoly<R::Elem>,
) -> Result<RingPoly<R::Elem>> {
    if fs.len() != weights.len() {
        return Err(Error::InvalidParameter(format!(
            "{} polynomials but {} weights",
            fs.len(),
            weights.len()
        )));
    }
    if weights.iter().any(|a| ring.is_zero(a)) {
        return Err(Error::InvalidParameter("weights must be nonzero".into()));
    }
    let exps = gap_exponents(ring, fs, g);
    let mut acc = RingPoly::zero();
    for (i, (f, a)) in fs.iter().zip(weights).enumerate() {
        let shift = if i == 0 { 0 } else { exps[i - 1] };
        acc = poly_add(ring, &acc, &poly_scale_shift(ring, a, shift, f));
    }
    Ok(acc)
}

/// Premise and conclusion of a checked implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub premise: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

fn require_nonzero<E>(f: &RingPoly<E>, g: &RingPoly<E>) -> Result<()> {
    if f.is_zero() || g.is_zero() {
        Err(Error::Precondition("f and g must be nonzero".into()))
    } else {
        Ok(())
    }
}

/// Whether `c(f) c(g)` lies in the integral closure of `c(fg)`.
pub fn closure_containment_check(ring: &SemigroupRing, f: &RingPoly<Series>, g: &RingPoly<Series>) -> Result<bool> {
    require_nonzero(f, g)?;
    let prod = ring.ideal_product(&content(ring, f)?, &content(ring, g)?)?;
    let cfg = content(ring, &poly_mul(ring, f, g))?;
    Ok(ring.ideal_le(&prod, &ring.integral_closure(&cfg)))
}

/// Whether `c(fg)` and `c(f) c(g)` have the same integral closure.
pub fn closures_agree(ring: &SemigroupRing, f: &RingPoly<Series>, g: &RingPoly<Series>) -> Result<bool> {
    require_nonzero(f, g)?;
    let prod = ring.ideal_product(&content(ring, f)?, &content(ring, g)?)?;
    let cfg = content(ring, &poly_mul(ring, f, g))?;
    Ok(ring.ideal_eq(&ring.integral_closure(&prod), &ring.integral_closure(&cfg)))
}

/// The identity at `k` over `R` implies the identity at `k` over `R / q`.
pub fn quotient_monotonicity_check(
    ring: &SemigroupRing,
    f: &RingPoly<Series>,
    g: &RingPoly<Series>,
    q: &IdealVS,
    k: usize,
) -> Result<Implication> {
    let sq = ArtinianAlgebra::from_quotient(ring, q)?;
    let alg = sq.algebra();
    let fb = f.map(alg, |c| sq.reduce(c));
    let gb = g.map(alg, |c| sq.reduce(c));
    Ok(Implication {
        premise: dm_identity(ring, f, g, k)?,
        conclusion: dm_identity(alg, &fb, &gb, k)?,
    })
}

/// Which valuation-offset lemma to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaLemma {
    /// `{1..m} ∩ γ(c(f)) = ∅` and `{1..m} ⊆ γ(c(g))` imply `{1..m} ⊆ γ(c(fg))`; `1 <= m < e`.
    AbsentOffsets,
    /// For the staggered `g = s^(c+1) + s^c t + s^(c+2) t^2 + ...`: `{1..m} ⊆ γ(c(f))` and
    /// `m+1 ∉ γ(c(f))` imply `{1..m+1} ∩ γ(c(fg)) ≠ ∅`; `1 <= m < e - 1`.
    Staggered,
}

pub fn gamma_lemma_check(
    ring: &SemigroupRing,
    f: &RingPoly<Series>,
    g: &RingPoly<Series>,
    m: usize,
    lemma: GammaLemma,
) -> Result<Implication> {
    require_nonzero(f, g)?;
    let e = ring.multiplicity();
    let upper = match lemma {
        GammaLemma::AbsentOffsets => e,
        GammaLemma::Staggered => e.saturating_sub(1),
    };
    if m == 0 || m >= upper {
        return Err(Error::InvalidParameter(format!("m = {m} must satisfy 1 <= m < {upper}")));
    }
    let gf = ring.gamma(&content(ring, f)?)?;
    let gg = ring.gamma(&content(ring, g)?)?;
    let gfg = ring.gamma(&content(ring, &poly_mul(ring, f, g))?)?;
    let low = 1..=m;
    Ok(match lemma {
        GammaLemma::AbsentOffsets => Implication {
            premise: low.clone().all(|i| !gf.contains(&i)) && low.clone().all(|i| gg.contains(&i)),
            conclusion: low.clone().all(|i| gfg.contains(&i)),
        },
        GammaLemma::Staggered => Implication {
            premise: low.clone().all(|i| gf.contains(&i)) && !gf.contains(&(m + 1)),
            conclusion: (1..=m + 1).any(|i| gfg.contains(&i)),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r34() -> SemigroupRing {
        SemigroupRing::new(PrimeField::new(101).unwrap(), &[3, 4]).unwrap()
    }

    fn poly(r: &SemigroupRing, coeffs: &[&[(usize, i64)]]) -> RingPoly<Series> {
        RingPoly::new(r, coeffs.iter().map(|t| r.series(t).unwrap()).collect())
    }

    #[test]
    fn counterexample_product() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(7, -1)]]);
        let g = poly(&r, &[&[(6, 1)], &[(7, 1)], &[(8, 1)]]);
        let expected = poly(&r, &[&[(12, 1)], &[], &[], &[(15, -1)]]);
        assert_eq!(poly_mul(&r, &f, &g), expected);
        let one = RingPoly::constant(&r, r.one());
        assert_eq!(poly_mul(&r, &f, &one), f);
    }

    #[test]
    fn content_of_zero() {
        let r = r34();
        assert!(content(&r, &RingPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn counterexample_identity() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(7, -1)]]);
        let g = poly(&r, &[&[(6, 1)], &[(7, 1)], &[(8, 1)]]);
        assert!(!dm_identity(&r, &f, &g, 2).unwrap());
        assert!(dm_identity(&r, &f, &g, 3).unwrap());
        assert_eq!(dm_k_witness(&r, &f, &g).unwrap(), 3);
        assert!(dm_identity(&r, &f, &g, 0).is_err());
    }

    #[test]
    fn principal_content_is_gaussian() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(9, 2)]]);
        let g = poly(&r, &[&[(7, 1)], &[(6, 1)], &[(8, 1)]]);
        assert!(dm_identity(&r, &f, &g, 1).unwrap());
        assert_eq!(dm_k_witness(&r, &f, &g).unwrap(), 1);
    }

    #[test]
    fn polarized_degenerate_cases() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(7, -1)]]);
        let g = poly(&r, &[&[(6, 1)], &[(7, 1)], &[(8, 1)]]);
        assert_eq!(polarized_identity(&r, std::slice::from_ref(&f), &g).unwrap(), dm_identity(&r, &f, &g, 1).unwrap());
        assert_eq!(
            polarized_identity(&r, &[f.clone(), f.clone()], &g).unwrap(),
            dm_identity(&r, &f, &g, 2).unwrap()
        );
        assert!(polarized_identity(&r, &[], &g).is_err());
    }

    #[test]
    fn gap_exponents_examples() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(7, -1)]]);
        let g = poly(&r, &[&[(7, 1)], &[(6, 1)], &[(8, 1)]]);
        assert_eq!(gap_exponents(&r, std::slice::from_ref(&f), &g), vec![4]);
        let c = RingPoly::constant(&r, r.monomial(3, 1).unwrap());
        let gc = RingPoly::constant(&r, r.monomial(4, 1).unwrap());
        assert_eq!(gap_exponents(&r, &[c.clone(), c.clone(), c], &gc), vec![1, 2, 3]);
        let single = gap_concat(&r, std::slice::from_ref(&f), &[r.one()], &g).unwrap();
        assert_eq!(single, f);
    }

    #[test]
    fn gamma_lemma_range_errors() {
        let r = r34();
        let f = poly(&r, &[&[(6, 1)], &[(8, 1)]]);
        let g = poly(&r, &[&[(7, 1)], &[(6, 1)], &[(8, 1)]]);
        assert!(gamma_lemma_check(&r, &f, &g, 0, GammaLemma::AbsentOffsets).is_err());
        assert!(gamma_lemma_check(&r, &f, &g, 3, GammaLemma::AbsentOffsets).is_err());
        assert!(gamma_lemma_check(&r, &f, &g, 2, GammaLemma::Staggered).is_err());
        let v = gamma_lemma_check(&r, &f, &g, 1, GammaLemma::AbsentOffsets).unwrap();
        assert!(v.premise && v.conclusion);
    }

    #[test]
    fn exhaustive_needs_finite_ring() {
        let r = r34();
        let g = poly(&r, &[&[(7, 1)], &[(6, 1)]]);
        assert!(matches!(dm_search(&r, &g, &SearchConfig::exhaustive(1)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn exhaustive_budget() {
        let a = ArtinianAlgebra::monomial(PrimeField::new(3).unwrap(), &["x"], &[vec![3]]).unwrap();
        let g = RingPoly::new(&a, vec![a.one(), a.basis(1)]);
        let mut cfg = SearchConfig::exhaustive(3);
        cfg.budget = 1000;
        assert!(matches!(dm_search(&a, &g, &cfg), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn random_search_is_deterministic() {
        let r = r34();
        let g = poly(&r, &[&[(7, 1)], &[(6, 1)], &[(8, 1)]]);
        let cfg = SearchConfig::random(7, 40, 3);
        let a = dm_search(&r, &g, &cfg).unwrap();
        let b = dm_search(&r, &g, &cfg).unwrap();
        assert_eq!(a.witness_table, b.witness_table);
        assert!(a.witness_table.windows(2).all(|w| w[0].k_min >= w[1].k_min));
    }
}
