//! Reproductions of the worked examples, property runners and the two
//! construction demos. Each command returns a [`ReproReport`].

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::artin::{AlgElem, ArtinianAlgebra, SubIdeal};
use crate::construct::{min_degree_m, separating_polynomial, AnnihilatorInstance};
use crate::content::{
    closure_containment_check, content, dm_identity, dm_k_witness, dm_search, dm_upper_bound, gamma_lemma_check, gap_concat,
    poly_mul, polarized_search, quotient_monotonicity_check, random_poly, CoefficientRing, DMReport, GammaLemma, RingPoly,
    SamplerConfig, SearchConfig,
};
use crate::dsl::{self, Session};
use crate::error::{Error, Result};
use crate::exactla::{PrimeField, Subspace};
use crate::report::{Findings, ReproReport, SessionConfig};
use crate::semiring::{IdealVS, SemigroupRing, Series};

/// Families used by the `example5.4` reproduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Coefficients `s^c, s^(c+1), ..., s^(c+e-1)` in order.
    GPrime,
    /// The first two coefficients swapped.
    G,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gprime" | "g'" => Ok(Variant::GPrime),
            "g" => Ok(Variant::G),
            other => Err(Error::InvalidParameter(format!("unknown variant `{other}` (expected gprime or g)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Example51,
    Remark52,
    Footnote53,
    Example54 { e: usize, variant: Variant },
    Remark55 { part: u8, e: Option<usize> },
    PropsSetup53,
    PropsContent,
    Thm31Demo,
    Thm33Demo,
    Stability,
    /// Analysis of user-supplied input text.
    Analyze { text: String },
}

pub const E_RANGE: std::ops::RangeInclusive<usize> = 3..=8;

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Example51 => "example5.1".into(),
            Command::Remark52 => "remark5.2".into(),
            Command::Footnote53 => "footnote5.3".into(),
            Command::Example54 { e, variant } => {
                let v = match variant {
                    Variant::GPrime => "gprime",
                    Variant::G => "g",
                };
                format!("example5.4 --e {e} --variant {v}")
            }
            Command::Remark55 { part, e } => match e {
                Some(e) => format!("remark5.5 --part {part} --e {e}"),
                None => format!("remark5.5 --part {part}"),
            },
            Command::PropsSetup53 => "props-setup5.3".into(),
            Command::PropsContent => "props-content".into(),
            Command::Thm31Demo => "thm31-demo".into(),
            Command::Thm33Demo => "thm33-demo".into(),
            Command::Stability => "stability".into(),
            Command::Analyze { .. } => "analyze".into(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Command::Example54 { e, .. } | Command::Remark55 { e: Some(e), part: 1 } if !E_RANGE.contains(e) => {
                Err(Error::InvalidParameter(format!("e = {e} is outside 3..=8")))
            }
            Command::Remark55 { part, e } => match (part, e) {
                (1, _) | (3, None) | (3, Some(5)) => Ok(()),
                (3, Some(e)) => Err(Error::InvalidParameter(format!("part 3 is stated for e = 5, not {e}"))),
                _ => Err(Error::InvalidParameter(format!("part {part} is not reproducible (expected 1 or 3)"))),
            },
            _ => Ok(()),
        }
    }
}

/// Runs one command.
pub fn run(cmd: &Command, cfg: &SessionConfig) -> Result<ReproReport> {
    cmd.validate()?;
    cfg.field()?;
    let start = Instant::now();
    let mut f = Findings::default();
    let inputs = match cmd {
        Command::Example51 => example51(cfg, &mut f)?,
        Command::Remark52 => remark52(cfg, &mut f)?,
        Command::Footnote53 => footnote53(cfg, &mut f)?,
        Command::Example54 { e, variant } => example54(cfg, *e, *variant, &mut f)?,
        Command::Remark55 { part: 1, e } => remark55_part1(cfg, e.unwrap_or(5), &mut f)?,
        Command::Remark55 { .. } => remark55_part3(cfg, &mut f)?,
        Command::PropsSetup53 => props_setup(cfg, &mut f)?,
        Command::PropsContent => props_content(cfg, &mut f)?,
        Command::Thm31Demo => thm31_demo(cfg, &mut f)?,
        Command::Thm33Demo => thm33_demo(cfg, &mut f)?,
        Command::Stability => stability(cfg, &mut f)?,
        Command::Analyze { text } => analyze(cfg, text, &mut f)?,
    };
    let millis = start.elapsed().as_millis() as u64;
    Ok(ReproReport::new(&cmd.name(), cfg, inputs, f, millis))
}

fn load(text: &str, cfg: &SessionConfig) -> Result<Session> {
    dsl::parse_input(text, cfg.field()?, cfg.precision())
}

fn search_cfg(cfg: &SessionConfig, samples: usize, stream: u64) -> SearchConfig {
    let mut s = SearchConfig::random(cfg.seed.wrapping_add(stream), samples, cfg.deg_bound);
    s.budget = cfg.budget;
    s
}

/// `c s^a t^i` terms rendered as input text.
fn poly_text(terms: &[(i64, usize, usize)]) -> String {
    let mut out = String::new();
    for (n, &(c, a, i)) in terms.iter().enumerate() {
        let mono = match i {
            0 => format!("s^{a}"),
            1 => format!("s^{a}*t"),
            _ => format!("s^{a}*t^{i}"),
        };
        let mag = c.unsigned_abs();
        let body = if mag == 1 { mono } else { format!("{mag}*{mono}") };
        if n == 0 {
            out.push_str(if c < 0 { "-" } else { "" });
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Minimal generator orders when the ideal is monomial, else displayed generators.
fn describe(r: &SemigroupRing, a: &IdealVS) -> Value {
    let gens = r.minimal_generators(a);
    let mut orders: Vec<usize> = gens.iter().filter_map(|g| g.ord()).collect();
    orders.sort_unstable();
    orders.dedup();
    let monomial = r.monomial_ideal(&orders).map(|m| r.ideal_eq(&m, a)).unwrap_or(false);
    if monomial && orders.len() == gens.len() {
        json!(orders)
    } else {
        json!(gens.iter().map(|g| r.display_series(g)).collect::<Vec<_>>())
    }
}

fn describe_alg(a: &ArtinianAlgebra, i: &SubIdeal) -> Value {
    let basis: Vec<String> = i
        .space()
        .basis_vectors()
        .into_iter()
        .map(|v| a.display_elem(&AlgElem(v)))
        .collect();
    json!(basis)
}

fn check_ideal(f: &mut Findings, name: &str, r: &SemigroupRing, actual: &IdealVS, expected: &[usize]) -> Result<bool> {
    let exp = r.monomial_ideal(expected)?;
    let ok = r.ideal_eq(actual, &exp);
    f.exact_with(name, expected, describe(r, actual), ok);
    Ok(ok)
}

fn check_poly(f: &mut Findings, name: &str, r: &SemigroupRing, actual: &RingPoly<Series>, expected: &[(i64, usize, usize)]) -> Result<()> {
    let top = expected.iter().map(|t| t.2).max().unwrap_or(0);
    let mut coeffs = vec![Vec::new(); top + 1];
    for &(c, a, i) in expected {
        coeffs[i].push((a, c));
    }
    let coeffs = coeffs.iter().map(|t| r.series(t)).collect::<Result<Vec<_>>>()?;
    let exp = RingPoly::new(r, coeffs);
    f.exact_with(name, exp.display(r), actual.display(r), &exp == actual);
    Ok(())
}

fn dm_summary<R: CoefficientRing>(ring: &R, rep: &DMReport<R::Elem>) -> Value {
    let top = rep.witness_table.first();
    json!({
        "candidates": rep.witness_table.len(),
        "dm_lower_bound": rep.dm_lower_bound,
        "histogram": rep.histogram(),
        "top_witness": top.map(|w| json!({"f": w.f.display(ring), "k_min": w.k_min})),
        "certificate": rep.certificate,
    })
}

const POLARIZED_PAIRS: usize = 200;

fn example51(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let text = "ring R = semigroup(3,4);\ng = s^7 + s^6*t + s^8*t^2;\nf = s^6 - s^8*t;\n";
    let s = load(text, cfg)?;
    let (r, g) = s.semigroup_poly("g")?;
    let (_, w) = s.semigroup_poly("f")?;
    let cg = content(r, g)?;
    check_ideal(f, "c(g)", r, &cg, &[6, 7, 8])?;
    let mu = r.mu(&cg);
    f.value("mu_content", mu);
    f.exact("mu(c(g))", 3, mu);
    let k = dm_k_witness(r, w, g)?;
    f.value("witness", json!({"f": w.display(r), "k_min": k}));
    f.exact("k_min(f, g) for f = s^6 - s^8 t", 2, k);
    let rep = dm_search(r, g, &search_cfg(cfg, cfg.samples, 0))?;
    f.value("dm_lower_bound", rep.dm_lower_bound);
    f.value("search", dm_summary(r, &rep));
    f.evidence("sampled dm_lower_bound", 2, rep.dm_lower_bound);
    let pol = polarized_search(r, g, 2, &search_cfg(cfg, POLARIZED_PAIRS, 1))?;
    f.value("polarized", json!({"pairs": pol.checked, "violations": pol.violations.len()}));
    f.evidence("sampled pairs violating the polarized identity at k = 2", 0, pol.violations.len());
    Ok(s.program.normalized())
}

fn remark52(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let text = "ring R = semigroup(3,4);\ng' = s^6 + s^7*t + s^8*t^2;\nf = s^6 - s^7*t;\ng = s^7 + s^6*t + s^8*t^2;\n";
    let s = load(text, cfg)?;
    let (r, gp) = s.semigroup_poly("g'")?;
    let (_, w) = s.semigroup_poly("f")?;
    let (_, g) = s.semigroup_poly("g")?;
    let prod = poly_mul(r, w, gp);
    f.value("fg'", prod.display(r));
    check_poly(f, "fg'", r, &prod, &[(1, 12, 0), (-1, 15, 3)])?;
    let cfg_ = content(r, &prod)?;
    let cf = content(r, w)?;
    let cgp = content(r, gp)?;
    check_ideal(f, "c(fg')", r, &cfg_, &[12])?;
    let lhs = r.ideal_product(&cfg_, &cf)?;
    let rhs = r.ideal_product(&r.ideal_power(&cf, 2)?, &cgp)?;
    check_ideal(f, "c(fg')c(f)", r, &lhs, &[18, 19])?;
    check_ideal(f, "c(f)^2 c(g')", r, &rhs, &[18, 19, 20])?;
    let strict = r.ideal_le(&lhs, &rhs) && !r.ideal_eq(&lhs, &rhs);
    f.exact("strict inclusion", true, strict);
    let same = r.ideal_eq(&cgp, &content(r, g)?);
    f.exact("c(g') = c(g)", true, same);
    let k = dm_k_witness(r, w, gp)?;
    f.value("k_min", k);
    f.exact("k_min(f, g')", 3, k);
    let upper = dm_upper_bound(r, gp)?;
    f.exact("upper bound min(deg g' + 1, mu(c(g')))", 3, upper);
    f.value("dm_number", if k == upper { json!(k) } else { json!([k, upper]) });
    Ok(s.program.normalized())
}

fn footnote53(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let text = "ring R = semigroup(3,5);\nh = s^9 + s^11*t + s^13*t^2;\nx = s^3 + s^5*t;\n";
    let s = load(text, cfg)?;
    let (r, h) = s.semigroup_poly("h")?;
    let (_, x) = s.semigroup_poly("x")?;
    let i = content(r, h)?;
    check_ideal(f, "I = c(h)", r, &i, &[9, 11, 13])?;
    let cube = r.ideal_power(&content(r, x)?, 3)?;
    f.exact("I = (s^3, s^5)^3", true, r.ideal_eq(&cube, &i));
    let mu = r.mu(&i);
    let gamma = r.gamma(&i)?;
    let closed = r.is_integrally_closed(&i);
    f.value("mu", mu);
    f.value("gamma", json!(gamma));
    f.value("integrally_closed", closed);
    f.exact("mu(I)", 3, mu);
    f.exact("gamma(I)", vec![2], gamma);
    f.exact("integrally closed", false, closed);
    let closure = r.integral_closure(&i);
    let n = i.min_order().unwrap_or(0);
    let added: Vec<usize> = r
        .degrees(n, n + r.conductor() + r.multiplicity())
        .into_iter()
        .filter(|&d| {
            let m = r.monomial(d, 1).expect("degree in S");
            r.ideal_member(&m, &closure) && !r.ideal_member(&m, &i)
        })
        .collect();
    f.value("closure_adds", json!(added));
    f.exact("monomials in the closure but not in I", vec![10], added);
    let expected = r.ideal_sum(&i, &r.monomial_ideal(&[10])?)?;
    f.exact("closure = I + (s^10)", true, r.ideal_eq(&closure, &expected));
    Ok(s.program.normalized())
}

/// Ring, `g'`, `g` and `f = s^c - s^(c+1) t` for multiplicity `e`.
fn family_text(e: usize) -> String {
    let c = (e - 1) * e;
    let gp: Vec<(i64, usize, usize)> = (0..e).map(|i| (1, c + i, i)).collect();
    let mut g = gp.clone();
    g[0].1 = c + 1;
    g[1].1 = c;
    format!(
        "ring R = semigroup({e},{});\ng' = {};\ng = {};\nf = {};\n",
        e + 1,
        poly_text(&gp),
        poly_text(&g),
        poly_text(&[(1, c, 0), (-1, c + 1, 1)])
    )
}

fn example54(cfg: &SessionConfig, e: usize, variant: Variant, f: &mut Findings) -> Result<String> {
    let s = load(&family_text(e), cfg)?;
    let (r, gp) = s.semigroup_poly("g'")?;
    let (_, g) = s.semigroup_poly("g")?;
    let (_, w) = s.semigroup_poly("f")?;
    let c = (e - 1) * e;
    f.value("conductor", r.conductor());
    f.exact("conductor (e-1)e", c, r.conductor());
    let cgp = content(r, gp)?;
    f.exact("c(g') = s^c R-bar", true, r.ideal_eq(&cgp, &r.order_ideal(c)?));
    match variant {
        Variant::GPrime => {
            let prod = poly_mul(r, w, gp);
            f.value("fg'", prod.display(r));
            check_poly(f, "fg'", r, &prod, &[(1, 2 * c, 0), (-1, 2 * c + e, e)])?;
            check_ideal(f, "c(fg')", r, &content(r, &prod)?, &[2 * c])?;
            let mu = r.mu(&cgp);
            f.value("mu_content", mu);
            f.exact("mu(c(g'))", e, mu);
            let k = dm_k_witness(r, w, gp)?;
            f.value("k_min", k);
            f.exact("k_min(f, g')", e, k);
            f.exact("upper bound mu(c(g'))", e, dm_upper_bound(r, gp)?);
            f.value("dm_number", k);
        }
        Variant::G => {
            let cg = content(r, g)?;
            f.exact("c(g) = c(g')", true, r.ideal_eq(&cg, &cgp));
            let mu = r.mu(&cg);
            f.value("mu_content", mu);
            f.exact("mu(c(g))", e, mu);
            let cfg_ = content(r, &poly_mul(r, w, g))?;
            check_ideal(f, "c(fg)", r, &cfg_, &[2 * c, 2 * c + 1, 2 * c + 2])?;
            let k = dm_k_witness(r, w, g)?;
            f.value("k_min", k);
            f.exact("k_min(f, g)", e - 2, k);
            let rep = dm_search(r, g, &search_cfg(cfg, cfg.samples, e as u64))?;
            f.value("search", dm_summary(r, &rep));
            f.value("dm_lower_bound", rep.dm_lower_bound);
            f.evidence_with(
                "sampled k_min never exceeds e - 1",
                e - 1,
                rep.dm_lower_bound,
                rep.dm_lower_bound < e,
            );
        }
    }
    Ok(s.program.normalized())
}

fn remark55_part1(cfg: &SessionConfig, e: usize, f: &mut Findings) -> Result<String> {
    let s = load(&family_text(e), cfg)?;
    let (r, g) = s.semigroup_poly("g")?;
    let (_, w) = s.semigroup_poly("f")?;
    let c = (e - 1) * e;
    let cf = content(r, w)?;
    let cg = content(r, g)?;
    let cfg_ = content(r, &poly_mul(r, w, g))?;
    check_ideal(f, "c(fg)", r, &cfg_, &[2 * c, 2 * c + 1, 2 * c + 2])?;
    f.exact("gamma(c(f))", vec![1], r.gamma(&cf)?);
    let expected_gamma: Vec<usize> = (1..=2).filter(|&i| i < e).collect();
    f.exact("gamma(c(fg))", expected_gamma, r.gamma(&cfg_)?);
    // closedness of c(fg) c(f)^(k-1) and the identity at k agree, with threshold e - 2
    let mut closed_from = None;
    let mut agree = true;
    for k in 1..=e {
        let lhs = r.ideal_product(&cfg_, &r.ideal_power(&cf, k - 1)?)?;
        let rhs = r.ideal_product(&r.ideal_power(&cf, k)?, &cg)?;
        let closed = r.is_integrally_closed(&lhs);
        agree &= closed == r.ideal_eq(&lhs, &rhs) && closed == (k >= e - 2);
        if closed && closed_from.is_none() {
            closed_from = Some(k);
        }
    }
    f.exact("identity at k holds iff c(fg)c(f)^(k-1) is closed iff k >= e - 2", true, agree);
    f.exact("first closed k", Some(e.saturating_sub(2).max(1)), closed_from);
    let rep = dm_search(r, g, &search_cfg(cfg, cfg.samples, e as u64))?;
    f.value("search", dm_summary(r, &rep));
    f.value("bracket", json!([e - 2, e - 1]));
    f.evidence_with(
        "sampled k_min within {e-2, e-1} upper end",
        e - 1,
        rep.dm_lower_bound,
        rep.dm_lower_bound < e,
    );
    Ok(s.program.normalized())
}

fn remark55_part3(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let e = 5;
    let c = (e - 1) * e;
    let g = poly_text(&[(1, c + 1, 0), (1, c, 1), (1, c + 2, 2), (1, c + 4, 3), (1, c + 3, 4)]);
    let text = format!("ring R = semigroup({e},{});\ng = {g};\n", e + 1);
    let s = load(&text, cfg)?;
    let (r, g) = s.semigroup_poly("g")?;
    let mu = r.mu(&content(r, g)?);
    f.value("mu_content", mu);
    f.exact("mu(c(g))", 5, mu);
    let rep = dm_search(r, g, &search_cfg(cfg, cfg.samples, 35))?;
    f.value("search", dm_summary(r, &rep));
    f.value("dm_lower_bound", rep.dm_lower_bound);
    f.evidence_with("sampled k_min never exceeds 3", 3, rep.dm_lower_bound, rep.dm_lower_bound <= 3);
    // the new case: gamma(c(f)) = {1} forces offsets from {1,2} and {3,4} into gamma(c(fg))
    let mut new_case = 0;
    let mut new_case_ok = true;
    for w in &rep.witness_table {
        if w.f.is_zero() {
            continue;
        }
        if r.gamma(&content(r, &w.f)?)? == vec![1] {
            new_case += 1;
            let gfg = r.gamma(&content(r, &poly_mul(r, &w.f, g))?)?;
            let hits = |a: usize, b: usize| gfg.contains(&a) || gfg.contains(&b);
            new_case_ok &= hits(1, 2) && hits(3, 4);
        }
    }
    f.value("samples_with_gamma_1", new_case);
    f.evidence("gamma(c(fg)) meets {1,2} and {3,4} when gamma(c(f)) = {1}", true, new_case_ok);
    Ok(s.program.normalized())
}

fn rng_for(seed: u64, stream: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    rng.set_stream(index as u64);
    rng
}

fn nonzero_elem<R: CoefficientRing>(ring: &R, rng: &mut ChaCha8Rng, cfg: &SamplerConfig) -> R::Elem {
    loop {
        let x = ring.random_elem(rng, cfg);
        if !ring.is_zero(&x) {
            return x;
        }
    }
}

fn random_ideal<R: CoefficientRing>(ring: &R, rng: &mut ChaCha8Rng) -> Result<R::Ideal> {
    let cfg = SamplerConfig::default();
    let n = rng.gen_range(1..=3);
    let gens: Vec<R::Elem> = (0..n).map(|_| nonzero_elem(ring, rng, &cfg)).collect();
    ring.span(&gens)
}

fn random_nonzero_poly<R: CoefficientRing>(ring: &R, rng: &mut ChaCha8Rng, deg: usize) -> RingPoly<R::Elem> {
    loop {
        let p = random_poly(ring, rng, deg, &SamplerConfig::default());
        if !p.is_zero() {
            return p;
        }
    }
}

/// Tallies property outcomes by name.
#[derive(Default)]
struct Tally {
    rows: Vec<(&'static str, usize, usize)>,
    first_failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let row = match self.rows.iter_mut().find(|r| r.0 == name) {
            Some(r) => r,
            None => {
                self.rows.push((name, 0, 0));
                self.rows.last_mut().unwrap()
            }
        };
        row.1 += 1;
        if !ok {
            row.2 += 1;
            if self.first_failures.len() < 5 {
                self.first_failures.push(format!("{name}: {}", detail()));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        for (name, n, bad) in other.rows {
            match self.rows.iter_mut().find(|r| r.0 == name) {
                Some(r) => {
                    r.1 += n;
                    r.2 += bad;
                }
                None => self.rows.push((name, n, bad)),
            }
        }
        for f in other.first_failures {
            if self.first_failures.len() < 5 {
                self.first_failures.push(f);
            }
        }
    }

    fn finish(self, f: &mut Findings) {
        let table: Vec<Value> = self
            .rows
            .iter()
            .map(|(name, n, bad)| json!({"property": name, "instances": n, "failures": bad}))
            .collect();
        f.value("properties", json!(table));
        if !self.first_failures.is_empty() {
            f.value("first_failures", json!(self.first_failures));
        }
        for (name, n, bad) in &self.rows {
            f.evidence_with(&format!("{name} ({n} instances)"), 0, bad, *bad == 0);
        }
    }
}

fn setup_rings(field: PrimeField, cfg: &SessionConfig) -> Result<Vec<SemigroupRing>> {
    [&[3, 4][..], &[3, 5], &[4, 5], &[5, 6, 7, 8, 9]]
        .iter()
        .map(|g| SemigroupRing::new(field, g)?.with_precision(cfg.precision()))
        .collect()
}

/// `g` with `c(g) = s^c R-bar`, coefficients `s^(c+i)` in a shuffled order.
fn full_gamma_poly(r: &SemigroupRing, rng: &mut ChaCha8Rng) -> Result<RingPoly<Series>> {
    let (c, e) = (r.conductor(), r.multiplicity());
    let mut offs: Vec<usize> = (0..e).collect();
    for i in (1..offs.len()).rev() {
        offs.swap(i, rng.gen_range(0..=i));
    }
    let coeffs = offs.iter().map(|&o| r.monomial(c + o, 1)).collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::new(r, coeffs))
}

/// `f` whose coefficients have orders `n0 + e k`, so `gamma(c(f))` is empty.
fn sparse_gamma_poly(r: &SemigroupRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<RingPoly<Series>> {
    let e = r.multiplicity();
    let degs = r.degrees(0, r.conductor() + e);
    let n0 = degs[rng.gen_range(0..degs.len())];
    let p = r.field().p();
    let coeffs = (0..=rng.gen_range(0..=deg))
        .map(|_| r.monomial(n0 + e * rng.gen_range(0..3), rng.gen_range(1..p) as i64))
        .collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::new(r, coeffs))
}

fn staggered_poly(r: &SemigroupRing) -> Result<RingPoly<Series>> {
    let (c, e) = (r.conductor(), r.multiplicity());
    let mut exps: Vec<usize> = (0..e).map(|i| c + i).collect();
    exps.swap(0, 1);
    let coeffs = exps.iter().map(|&a| r.monomial(a, 1)).collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::new(r, coeffs))
}

fn setup_instance(r: &SemigroupRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let (c, e) = (r.conductor(), r.multiplicity());
    let name = format!("{:?}", r.generators());
    let i = if rng.gen_bool(0.3) {
        // (x) plus everything of larger order: gamma is full exactly when
        // ord x + 1, ..., ord x + e - 1 all lie in S
        let x = nonzero_elem(r, rng, &SamplerConfig::default());
        let o = x.ord().unwrap_or(0);
        r.ideal_sum(&r.span(&[x])?, &r.order_ideal(o + 1)?)?
    } else {
        random_ideal(r, rng)?
    };
    let j = random_ideal(r, rng)?;
    let n = i.min_order().unwrap_or(0);
    let gi = r.gamma(&i)?;
    let full: Vec<usize> = (1..e).collect();
    // (1)
    let rbar_ideal = n >= c && r.ideal_eq(&i, &r.order_ideal(n)?);
    t.record("full gamma iff I = I R-bar", (gi == full) == rbar_ideal, || format!("{name} gamma {gi:?}"));
    if gi == full {
        t.record("full gamma implies closed and inside the conductor", r.is_integrally_closed(&i) && n >= c, || {
            format!("{name} order {n}")
        });
    }
    // (2)
    let mu = r.mu(&i);
    t.record("mu(I) <= e", mu <= e, || format!("{name} mu {mu}"));
    t.record("mu(I) >= 1 + |gamma(I)|", mu > gi.len(), || format!("{name} mu {mu} gamma {gi:?}"));
    let k = r.integral_closure(&r.ideal_product(&i, &r.order_ideal(c)?)?);
    let gk = r.gamma(&k)?;
    t.record("closed ideal inside the conductor has full gamma and mu = e", gk == full && r.mu(&k) == e, || {
        format!("{name} gamma {gk:?}")
    });
    // (3)
    let gj = r.gamma(&j)?;
    let gij = r.gamma(&r.ideal_product(&i, &j)?)?;
    let mut need: Vec<usize> = gi.iter().chain(&gj).copied().collect();
    for a in &gi {
        for b in &gj {
            if a + b < e {
                need.push(a + b);
            }
        }
    }
    t.record("gamma(IJ) contains gamma(I), gamma(J) and sums", need.iter().all(|x| gij.contains(x)), || {
        format!("{name} {gi:?} {gj:?} -> {gij:?}")
    });
    // (4), with inputs biased towards the premise
    let f = if rng.gen_bool(0.5) {
        sparse_gamma_poly(r, rng, deg)?
    } else {
        random_nonzero_poly(r, rng, deg)
    };
    let g = if rng.gen_bool(0.5) {
        full_gamma_poly(r, rng)?
    } else {
        random_nonzero_poly(r, rng, deg)
    };
    let m = rng.gen_range(1..e);
    let imp = gamma_lemma_check(r, &f, &g, m, GammaLemma::AbsentOffsets)?;
    t.record("offsets absent from c(f) and present in c(g) pass to c(fg)", imp.holds(), || {
        format!("{name} f = {} g = {} m = {m}", f.display(r), g.display(r))
    });
    if e >= 3 {
        let stag = staggered_poly(r)?;
        let m = rng.gen_range(1..e - 1);
        let imp = gamma_lemma_check(r, &f, &stag, m, GammaLemma::Staggered)?;
        t.record("staggered g: gamma(c(fg)) meets {1..m+1}", imp.holds(), || {
            format!("{name} f = {} m = {m}", f.display(r))
        });
    }
    Ok(t)
}

fn props_setup(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let rings = setup_rings(cfg.field()?, cfg)?;
    let deg = cfg.deg_bound.min(3);
    let tallies = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let r = &rings[i % rings.len()];
            setup_instance(r, &mut rng_for(cfg.seed, 53, i), deg)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    f.value("instances", cfg.samples);
    total.finish(f);
    Ok(rings.iter().map(|r| format!("ring R = semigroup({});\n", join(r.generators()))).collect())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Identity at `deg g + 1`, the witness bound, monotonicity in `k` and the
/// content decomposition of a gap concatenation.
fn generic_content_props<R: CoefficientRing>(ring: &R, rng: &mut ChaCha8Rng, deg: usize, label: &str) -> Result<Tally> {
    let mut t = Tally::default();
    let f = random_poly(ring, rng, deg, &SamplerConfig::default());
    let g = random_nonzero_poly(ring, rng, deg);
    let n = g.degree().unwrap_or(0);
    let show = || format!("{label} f = {} g = {}", f.display(ring), g.display(ring));
    t.record("identity at k = deg g + 1", dm_identity(ring, &f, &g, n + 1)?, show);
    let bound = ring.mu(&content(ring, &g)?);
    let k = dm_k_witness(ring, &f, &g);
    t.record("k_min(f, g) <= mu(c(g))", matches!(k, Ok(k) if k <= bound), show);
    let mut monotone = true;
    let mut prev = false;
    for k in 1..=n + 2 {
        let now = dm_identity(ring, &f, &g, k)?;
        monotone &= !prev || now;
        prev = now;
    }
    t.record("identity is monotone in k", monotone, show);
    let parts: Vec<RingPoly<R::Elem>> = (0..rng.gen_range(2..=3)).map(|_| random_nonzero_poly(ring, rng, deg)).collect();
    let weights: Vec<R::Elem> = parts
        .iter()
        .map(|_| nonzero_elem(ring, rng, &SamplerConfig::default()))
        .collect();
    let cat = gap_concat(ring, &parts, &weights, &g)?;
    let mut cf = ring.span(&[])?;
    let mut cfg_ = ring.span(&[])?;
    for (p, a) in parts.iter().zip(&weights) {
        let wa = ring.span(std::slice::from_ref(a))?;
        cf = ring.ideal_add(&cf, &ring.ideal_mul(&wa, &content(ring, p)?)?)?;
        cfg_ = ring.ideal_add(&cfg_, &ring.ideal_mul(&wa, &content(ring, &poly_mul(ring, p, &g))?)?)?;
    }
    let ok = ring.ideal_eq(&content(ring, &cat)?, &cf) && ring.ideal_eq(&content(ring, &poly_mul(ring, &cat, &g))?, &cfg_);
    t.record("gap concatenation splits c(f) and c(fg)", ok, || format!("{label} g = {}", g.display(ring)));
    Ok(t)
}

fn semigroup_content_props(r: &SemigroupRing, rng: &mut ChaCha8Rng, deg: usize) -> Result<Tally> {
    let label = format!("{:?}", r.generators());
    let mut t = generic_content_props(r, rng, deg, &label)?;
    let f = random_nonzero_poly(r, rng, deg);
    let g = random_nonzero_poly(r, rng, deg);
    let show = || format!("{label} f = {} g = {}", f.display(r), g.display(r));
    t.record("c(f)c(g) inside the closure of c(fg)", closure_containment_check(r, &f, &g)?, show);
    let q = if rng.gen_bool(0.5) {
        r.order_ideal(rng.gen_range(r.conductor()..=r.conductor() + 12))?
    } else {
        // generators of positive order, so the quotient is never the zero ring
        let cfg = SamplerConfig { min_degree: 1, ..Default::default() };
        let gens: Vec<Series> = (0..rng.gen_range(1..=3)).map(|_| nonzero_elem(r, rng, &cfg)).collect();
        r.span(&gens)?
    };
    let k = rng.gen_range(1..=3);
    let imp = quotient_monotonicity_check(r, &f, &g, &q, k)?;
    t.record("identity over R passes to R/q", imp.holds(), show);
    Ok(t)
}

fn content_algebras(field: PrimeField, cfg: &SessionConfig) -> Result<Vec<(String, ArtinianAlgebra)>> {
    let specs = [
        "ring R = semigroup(3,4);\nring A = quotient(R, (s^9));",
        "ring R = semigroup(3,5);\nring A = quotient(R, ord>=12);",
        "ring R = semigroup(4,5);\nring A = quotient(R, (s^12, s^13));",
        "ring A = monomial(x, y; x^2, y^2);",
        "ring A = monomial(x, y; x^3, x*y, y^2);",
        "ring A = monomial(x; x^5);",
    ];
    specs
        .iter()
        .map(|text| {
            let s = dsl::parse_input(text, field, cfg.precision())?;
            let (name, ring) = s.rings.last().unwrap();
            let a = ring
                .algebra()
                .ok_or_else(|| Error::Internal(format!("`{name}` is not an algebra")))?
                .clone();
            Ok((s.program.normalized(), a))
        })
        .collect()
}

fn gorenstein_algebras(field: PrimeField, cfg: &SessionConfig) -> Result<Vec<(String, ArtinianAlgebra)>> {
    let specs = [
        "ring R = semigroup(3,4);\nring A = quotient(R, (s^9));",
        "ring R = semigroup(3,4);\nring A = quotient(R, (s^12));",
        "ring R = semigroup(3,5);\nring A = quotient(R, (s^10));",
        "ring R = semigroup(4,5);\nring A = quotient(R, (s^8));",
        "ring A = monomial(x, y; x^2, y^2);",
        "ring A = monomial(x, y; x^3, y^2);",
        "ring A = monomial(x, y; x^3, y^3);",
        "ring A = monomial(x; x^5);",
    ];
    let out: Vec<(String, ArtinianAlgebra)> = specs
        .iter()
        .map(|text| {
            let s = dsl::parse_input(text, field, cfg.precision())?;
            let a = s.rings.last().and_then(|(_, r)| r.algebra()).cloned().unwrap();
            Ok((s.program.normalized(), a))
        })
        .collect::<Result<_>>()?;
    if let Some((text, _)) = out.iter().find(|(_, a)| !a.is_gorenstein()) {
        return Err(Error::Internal(format!("expected a Gorenstein algebra: {text}")));
    }
    Ok(out)
}

fn props_content(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let field = cfg.field()?;
    let rings = setup_rings(field, cfg)?;
    let algebras = content_algebras(field, cfg)?;
    let gor = gorenstein_algebras(field, cfg)?;
    let deg = cfg.deg_bound.min(3);
    let n = cfg.samples;
    let semi = (0..n)
        .into_par_iter()
        .map(|i| semigroup_content_props(&rings[i % rings.len()], &mut rng_for(cfg.seed, 101, i), deg))
        .collect::<Result<Vec<_>>>()?;
    let alg = (0..n)
        .into_par_iter()
        .map(|i| {
            let (label, a) = &algebras[i % algebras.len()];
            generic_content_props(a, &mut rng_for(cfg.seed, 102, i), deg, label.trim())
        })
        .collect::<Result<Vec<_>>>()?;
    let dual = (0..n.max(200))
        .into_par_iter()
        .map(|i| {
            let (label, a) = &gor[i % gor.len()];
            let mut rng = rng_for(cfg.seed, 103, i);
            let ideal = random_ideal(a, &mut rng)?;
            let mut t = Tally::default();
            let show = || format!("{} ideal {}", label.trim(), describe_alg(a, &ideal));
            t.record("Gorenstein duality: socle of A/(0:I) has dim mu(I)", a.duality_check(&ideal)?, show);
            t.record("(0 : (0 : I)) = I", a.ann(&a.ann(&ideal)) == ideal, show);
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = Tally::default();
    for t in semi.into_iter().chain(alg).chain(dual) {
        total.merge(t);
    }
    f.value("instances", json!({"semigroup": n, "algebra": n, "gorenstein_ideals": n.max(200)}));
    total.finish(f);
    let mut inputs: String = rings.iter().map(|r| format!("ring R = semigroup({});\n", join(r.generators()))).collect();
    for (text, _) in algebras.iter().chain(&gor) {
        inputs.push_str(text);
    }
    Ok(inputs)
}

/// All `f = b_0 + b_1 t` with `b_i` in the maximal ideal of `F_p[x,y]/(x^2,y^2)`
/// such that `fg = 0` and `c(f)c(g) ≠ 0`, for `g = x + y t`.
fn brute_force_thm31(p: u32) -> Result<(ArtinianAlgebra, RingPoly<AlgElem>, Vec<RingPoly<AlgElem>>)> {
    let field = PrimeField::new(p)?;
    let s = dsl::parse_input("ring A = monomial(x, y; x^2, y^2);\ng = x + y*t;", field, Default::default())?;
    let (a, g) = s.algebra_poly("g")?;
    let cg = content(a, g)?;
    let m_elems: Vec<AlgElem> = a.elements().into_iter().filter(|x| x.coords()[0] == 0).collect();
    let mut sols = Vec::new();
    for b0 in &m_elems {
        for b1 in &m_elems {
            let f = RingPoly::new(a, vec![b0.clone(), b1.clone()]);
            if poly_mul(a, &f, g).is_zero() && !a.ideal_product(&content(a, &f)?, &cg).is_zero() {
                sols.push(f);
            }
        }
    }
    Ok((a.clone(), g.clone(), sols))
}

fn random_m_elem(a: &ArtinianAlgebra, rng: &mut ChaCha8Rng) -> AlgElem {
    let mut x = a.random_elem(rng, &SamplerConfig::default());
    x.0[0] = 0;
    x
}

fn thm31_algebras(field: PrimeField) -> Result<Vec<ArtinianAlgebra>> {
    let specs = [
        "ring A = monomial(x, y; x^2, y^2);",
        "ring A = monomial(x, y; x^3, y^2);",
        "ring A = monomial(x, y; x^3, y^3);",
        "ring A = monomial(x, y; x^2, x*y, y^2);",
        "ring A = monomial(x, y; x^3, x*y, y^3);",
        "ring A = monomial(x, y, z; x^2, y^2, z^2);",
        "ring R = semigroup(3,4);\nring A = quotient(R, (s^10));",
        "ring R = semigroup(3,5);\nring A = quotient(R, ord>=11);",
    ];
    specs
        .iter()
        .map(|t| {
            let s = dsl::parse_input(t, field, Default::default())?;
            Ok(s.rings.last().and_then(|(_, r)| r.algebra()).cloned().unwrap())
        })
        .collect()
}

/// Algebra index, `g`, `J` and `m`.
type Thm31Instance = (usize, RingPoly<AlgElem>, SubIdeal, usize);

fn random_thm31_instance(algebras: &[ArtinianAlgebra], rng: &mut ChaCha8Rng) -> Result<Option<Thm31Instance>> {
    let ai = rng.gen_range(0..algebras.len());
    let a = &algebras[ai];
    let deg = rng.gen_range(1..=2);
    let g = RingPoly::new(a, (0..=deg).map(|_| random_m_elem(a, rng)).collect());
    if g.is_zero() {
        return Ok(None);
    }
    let i = a.ann(&content(a, &g)?);
    let top = a.colon(&i, &a.maximal_ideal());
    let mut rows = i.space().basis_vectors();
    for v in top.space().basis_vectors() {
        if rng.gen_bool(0.7) {
            rows.push(v);
        }
    }
    let j = a.ideal_from_subspace(Subspace::from_residue_vectors(a.field(), a.dim(), rows)?)?;
    let r = j.dim() - i.dim();
    let s = a.socle_dim();
    if r <= s {
        return Ok(None);
    }
    let n = g.degree().unwrap_or(0);
    let m = min_degree_m(r, s, n)? + rng.gen_range(0..=1);
    Ok(Some((ai, g, j, m)))
}

fn thm31_demo(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let text = "ring A = monomial(x, y; x^2, y^2);\ng = x + y*t;\n";
    let s = load(text, cfg)?;
    let (a, g) = s.algebra_poly("g")?;
    let j = a.maximal_ideal();
    let inst = AnnihilatorInstance::new(a, g, &j, Some(1))?;
    f.exact("(n, r, s, m)", [1, 2, 1, 1], [inst.n(), inst.r(), inst.s(), inst.m()]);
    let sol = inst.construct()?;
    f.value("f", sol.f.display(a));
    f.exact("system size (equations, unknowns)", [3, 4], [sol.equations, sol.unknowns]);
    f.exact_with("nullity >= (m+1)r - (n+m+1)s = 1", 1, sol.nullity, sol.nullity >= 1);
    let cf = content(a, &sol.f)?;
    f.exact("fg = 0", true, poly_mul(a, &sol.f, g).is_zero());
    f.exact("c(f) inside J", true, a.ideal_le(&cf, &j));
    f.exact("c(f)c(g) nonzero", true, !a.ideal_product(&cf, &content(a, g)?).is_zero());
    let mut oracle = Vec::new();
    for p in [2u32, 3] {
        let (ap, gp, sols) = brute_force_thm31(p)?;
        let fp = AnnihilatorInstance::new(&ap, &gp, &ap.maximal_ideal(), Some(1))?.construct()?.f;
        let found = sols.contains(&fp);
        oracle.push(json!({"p": p, "solutions": sols.len(), "constructed": fp.display(&ap)}));
        f.exact(&format!("constructed f is a brute-force solution at p = {p}"), true, found);
    }
    f.value("oracle", json!(oracle));
    // random valid instances
    let field = cfg.field()?;
    let algebras = thm31_algebras(field)?;
    let target = 50;
    let mut rng = rng_for(cfg.seed, 31, 0);
    let mut done = 0;
    let mut failures = Vec::new();
    let mut attempts = 0;
    while done < target && attempts < 20_000 {
        attempts += 1;
        let Some((ai, gg, jj, m)) = random_thm31_instance(&algebras, &mut rng)? else {
            continue;
        };
        let alg = &algebras[ai];
        done += 1;
        let out = AnnihilatorInstance::new(alg, &gg, &jj, Some(m)).and_then(|i| i.construct());
        let ok = match &out {
            Ok(sol) => {
                let cf = content(alg, &sol.f)?;
                sol.f.degree().is_none_or(|d| d <= m)
                    && alg.ideal_le(&cf, &jj)
                    && poly_mul(alg, &sol.f, &gg).is_zero()
                    && !alg.ideal_product(&cf, &content(alg, &gg)?).is_zero()
            }
            Err(_) => false,
        };
        if !ok && failures.len() < 5 {
            failures.push(format!("g = {} ({:?})", gg.display(alg), out.err()));
        }
    }
    f.value("random_instances", json!({"valid": done, "attempts": attempts}));
    if !failures.is_empty() {
        f.value("random_failures", json!(failures));
    }
    f.exact("random valid instances", target, done);
    f.exact("random instances violating (a), (b) or (c)", 0, failures.len());
    Ok(s.program.normalized())
}

fn thm33_demo(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let field = cfg.field()?;
    // seeded search over principal (hence Gorenstein) quotients of the (3,4) ring
    let base = "ring R = semigroup(3,4);\ng = s^7 + s^6*t + s^8*t^2;\ng' = s^6 + s^7*t + s^8*t^2;\n";
    let s = load(base, cfg)?;
    let (r, g1) = s.semigroup_poly("g")?;
    let (_, g2) = s.semigroup_poly("g'")?;
    let degs = r.degrees(1, 16);
    let mut candidates = 0usize;
    let mut best_gap: Option<i64> = None;
    let mut found: Option<Value> = None;
    let per = (cfg.samples / 8).max(10);
    for n in 9..=16 {
        let q = r.monomial_ideal(&[n])?;
        let sq = crate::artin::ArtinianAlgebra::from_quotient(r, &q)?;
        let a = sq.algebra();
        for g in [g1, g2] {
            let gb = g.map(a, |c| sq.reduce(c));
            let mut rng = rng_for(cfg.seed, 33, n);
            for _ in 0..per {
                candidates += 1;
                let fs: Vec<RingPoly<AlgElem>> = (0..rng.gen_range(1..=2))
                    .map(|_| {
                        let coeffs = (0..=rng.gen_range(1..=2))
                            .map(|_| {
                                let terms: Vec<(usize, i64)> = (0..rng.gen_range(1..=2))
                                    .map(|_| (degs[rng.gen_range(0..degs.len())], rng.gen_range(1..field.p()) as i64))
                                    .collect();
                                r.series(&terms).map(|x| sq.reduce(&x))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(RingPoly::new(a, coeffs))
                    })
                    .collect::<Result<_>>()?;
                match separating_polynomial(a, &gb, &fs) {
                    Ok(sol) => {
                        if found.is_none() {
                            found = Some(json!({
                                "quotient": format!("(s^{n})"),
                                "g": gb.display(a),
                                "fs": fs.iter().map(|p| p.display(a)).collect::<Vec<_>>(),
                                "h": sol.h.display(a),
                            }));
                        }
                    }
                    Err(Error::DimensionHypothesis { quotient_dim, required }) => {
                        let gap = quotient_dim as i64 - required as i64;
                        best_gap = Some(best_gap.map_or(gap, |b| b.max(gap)));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    f.value(
        "semigroup_quotient_search",
        json!({"candidates": candidates, "best_gap": best_gap, "instance": found}),
    );
    // a monomial complete intersection where the hypothesis holds
    let text = "ring A = monomial(x, y; x^5, y^5);\ng = x^3 + x^2*y*t + x*y^2*t^2 + y^3*t^3;\nf = x - y*t;\n";
    let s2 = load(text, cfg)?;
    let (a, g) = s2.algebra_poly("g")?;
    let (_, w) = s2.algebra_poly("f")?;
    f.exact("A is Gorenstein", true, a.is_gorenstein());
    let sol = separating_polynomial(a, g, std::slice::from_ref(w))?;
    f.value("h", sol.h.display(a));
    f.exact_with(
        "dim P c(g) / (m P c(g) + B) >= mu(P) + 1",
        sol.mu_product + 1,
        sol.quotient_dim,
        sol.quotient_dim > sol.mu_product,
    );
    let ch = content(a, &sol.h)?;
    let cg = content(a, g)?;
    let ok_a = !a.ideal_product(&a.ideal_product(&sol.product, &ch), &cg).is_zero();
    let ok_b = a.ideal_product(&sol.mixed, &ch).is_zero();
    let ok_c = a.ideal_product(&content(a, &poly_mul(a, &sol.h, g))?, &sol.product).is_zero();
    f.exact("P c(h) c(g) nonzero", true, ok_a);
    f.exact("B c(h) = 0", true, ok_b);
    f.exact("c(hg) P = 0", true, ok_c);
    Ok(format!("{}{}", s.program.normalized(), s2.program.normalized()))
}

/// Everything the example reproductions compute, for comparison across precisions.
fn stability_commands() -> Vec<Command> {
    let mut cmds = vec![Command::Example51, Command::Remark52, Command::Footnote53];
    for e in 3..=5 {
        cmds.push(Command::Example54 { e, variant: Variant::GPrime });
        cmds.push(Command::Example54 { e, variant: Variant::G });
    }
    cmds.push(Command::Remark55 { part: 1, e: None });
    cmds.push(Command::Remark55 { part: 3, e: None });
    cmds
}

fn stability(cfg: &SessionConfig, f: &mut Findings) -> Result<String> {
    let wide = cfg.widened(10);
    let mut rows = Vec::new();
    for cmd in stability_commands() {
        let a = run(&cmd, cfg)?;
        let b = run(&cmd, &wide)?;
        let same = a.results == b.results;
        rows.push(json!({"command": cmd.name(), "verdict": a.verdict, "unchanged": same}));
        f.exact(&format!("{} unchanged at precision + 10", cmd.name()), true, same);
    }
    f.value("runs", json!(rows));
    Ok(String::new())
}

fn analyze(cfg: &SessionConfig, text: &str, f: &mut Findings) -> Result<String> {
    let s = load(text, cfg)?;
    let mut polys = Vec::new();
    for b in &s.polys {
        let v = match &b.value {
            dsl::PolyValue::Semigroup(p) => {
                let r = s.ring(&b.ring).and_then(|r| r.semigroup()).unwrap();
                let c = content(r, p)?;
                json!({
                    "name": b.name, "ring": b.ring, "poly": p.display(r),
                    "content": describe(r, &c), "mu_content": r.mu(&c),
                    "gamma": if c.is_zero() { json!(null) } else { json!(r.gamma(&c)?) },
                    "integrally_closed": r.is_integrally_closed(&c),
                })
            }
            dsl::PolyValue::Algebra(p) => {
                let a = s.ring(&b.ring).and_then(|r| r.algebra()).unwrap();
                let c = content(a, p)?;
                json!({
                    "name": b.name, "ring": b.ring, "poly": p.display(a),
                    "content_basis": describe_alg(a, &c), "mu_content": a.mu(&c),
                })
            }
        };
        polys.push(v);
    }
    f.value("polynomials", json!(polys));
    // with both f and g over one ring, report the witness exponent; with g alone, search
    let pair = match (s.binding("f"), s.binding("g")) {
        (Some(bf), Some(bg)) if bf.ring == bg.ring => Some(true),
        (_, Some(_)) => Some(false),
        _ => None,
    };
    match pair {
        Some(true) => {
            if let (Ok((r, fp)), Ok((_, gp))) = (s.semigroup_poly("f"), s.semigroup_poly("g")) {
                f.value("k_min", dm_k_witness(r, fp, gp)?);
            } else {
                let (a, fp) = s.algebra_poly("f")?;
                let (_, gp) = s.algebra_poly("g")?;
                f.value("k_min", dm_k_witness(a, fp, gp)?);
            }
        }
        Some(false) => {
            let sc = search_cfg(cfg, cfg.samples, 0);
            if let Ok((r, gp)) = s.semigroup_poly("g") {
                f.value("search", dm_summary(r, &dm_search(r, gp, &sc)?));
            } else {
                let (a, gp) = s.algebra_poly("g")?;
                f.value("search", dm_summary(a, &dm_search(a, gp, &sc)?));
            }
        }
        None => {}
    }
    Ok(s.program.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_text_matches_hand_written_input() {
        assert_eq!(
            family_text(3),
            "ring R = semigroup(3,4);\ng' = s^6 + s^7*t + s^8*t^2;\ng = s^7 + s^6*t + s^8*t^2;\nf = s^6 - s^7*t;\n"
        );
    }

    #[test]
    fn parameter_ranges() {
        let cfg = SessionConfig::default();
        for e in [2, 9] {
            let cmd = Command::Example54 { e, variant: Variant::G };
            assert!(matches!(run(&cmd, &cfg), Err(Error::InvalidParameter(_))));
        }
        assert!(run(&Command::Remark55 { part: 2, e: None }, &cfg).is_err());
        assert!(run(&Command::Remark55 { part: 3, e: Some(4) }, &cfg).is_err());
    }

    #[test]
    fn footnote_passes() {
        let r = run(&Command::Footnote53, &SessionConfig::default()).unwrap();
        assert_eq!(r.verdict, crate::report::Verdict::Pass, "{:#?}", r.checks());
    }

    #[test]
    fn remark_passes() {
        let r = run(&Command::Remark52, &SessionConfig::default()).unwrap();
        assert_eq!(r.verdict, crate::report::Verdict::Pass, "{:#?}", r.checks());
    }
}
