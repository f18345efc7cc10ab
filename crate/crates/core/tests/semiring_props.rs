//! Library ideal arithmetic against the naive windowed oracle.

mod common;

use common::{Naive, Sparse};
use dmkit::{IdealVS, PrimeField, SemigroupRing, Series};
use proptest::prelude::*;

const P: u64 = 101;
const SEMIGROUPS: [&[usize]; 4] = [&[3, 4], &[3, 5], &[4, 5], &[5, 6, 7, 8, 9]];

/// Terms `(degree, coefficient)` with degrees pushed up into S.
fn element(gens: &'static [usize]) -> impl Strategy<Value = Vec<(usize, i64)>> {
    let o = Naive::new(P, gens, 64);
    prop::collection::vec((0usize..24, 1i64..P as i64), 1..=3).prop_map(move |ts| {
        ts.into_iter().map(|(d, c)| ((d..).find(|&x| o.in_s(x)).unwrap(), c)).collect()
    })
}

type Gens = Vec<Vec<(usize, i64)>>;

fn case() -> impl Strategy<Value = (usize, Gens, Gens)> {
    (0..SEMIGROUPS.len()).prop_flat_map(|i| {
        let g = SEMIGROUPS[i];
        (
            Just(i),
            prop::collection::vec(element(g), 1..=3),
            prop::collection::vec(element(g), 1..=3),
        )
    })
}

fn lib_ideal(r: &SemigroupRing, gens: &Gens) -> IdealVS {
    let xs: Vec<Series> = gens.iter().map(|t| r.series(t).unwrap()).collect();
    r.ideal_span(&xs).unwrap()
}

fn oracle_ideal(o: &Naive, gens: &Gens) -> common::Span {
    let xs: Vec<Sparse> = gens.iter().map(|t| common::sparse(P, t)).collect();
    o.ideal(&xs)
}

/// Values below `limit`, where neither window has been cut.
fn below(v: Vec<usize>, limit: usize) -> Vec<usize> {
    v.into_iter().filter(|&d| d < limit).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn invariants_match_oracle((i, a, _b) in case()) {
        let gens = SEMIGROUPS[i];
        let r = SemigroupRing::new(PrimeField::new(P as u32).unwrap(), gens).unwrap();
        let o = Naive::new(P, gens, 120);
        let x = lib_ideal(&r, &a);
        let y = oracle_ideal(&o, &a);
        let e = r.multiplicity();
        prop_assert_eq!(x.min_order(), o.min_order(&y));
        prop_assert_eq!(r.mu(&x), o.mu(&y));
        prop_assert_eq!(r.gamma(&x).unwrap(), o.gamma(&y, e));
        let limit = x.min_order().unwrap() + r.conductor() + e;
        prop_assert_eq!(below(r.value_set(&x), limit), below(o.value_set(&y), limit));
        let closed = below(o.value_set(&o.closure(&y)), limit) == below(o.value_set(&y), limit);
        prop_assert_eq!(r.is_integrally_closed(&x), closed);
    }

    #[test]
    fn products_and_sums_match_oracle((i, a, b) in case()) {
        let gens = SEMIGROUPS[i];
        let r = SemigroupRing::new(PrimeField::new(P as u32).unwrap(), gens).unwrap();
        let o = Naive::new(P, gens, 160);
        let (xa, xb) = (lib_ideal(&r, &a), lib_ideal(&r, &b));
        let (ya, yb) = (oracle_ideal(&o, &a), oracle_ideal(&o, &b));
        let xp = r.ideal_product(&xa, &xb).unwrap();
        let yp = o.product(&ya, &yb);
        let limit = xp.min_order().unwrap() + r.conductor() + r.multiplicity();
        prop_assert_eq!(r.mu(&xp), o.mu(&yp));
        prop_assert_eq!(below(r.value_set(&xp), limit), below(o.value_set(&yp), limit));
        let xs = r.ideal_sum(&xa, &xb).unwrap();
        prop_assert!(r.ideal_le(&xa, &xs) && r.ideal_le(&xb, &xs));
        prop_assert!(r.ideal_le(&xp, &xa) && r.ideal_le(&xp, &xb));
        prop_assert!(r.ideal_eq(&xp, &r.ideal_product(&xb, &xa).unwrap()));
    }

    /// Setup facts: mu(I) <= e, mu(I) >= 1 + |gamma(I)|, full gamma iff I = s^n R-bar.
    #[test]
    fn setup_facts((i, a, _b) in case()) {
        let gens = SEMIGROUPS[i];
        let r = SemigroupRing::new(PrimeField::new(P as u32).unwrap(), gens).unwrap();
        let x = lib_ideal(&r, &a);
        let e = r.multiplicity();
        let g = r.gamma(&x).unwrap();
        prop_assert!(r.mu(&x) <= e);
        prop_assert!(r.mu(&x) > g.len());
        let n = x.min_order().unwrap();
        let rbar = n >= r.conductor() && r.ideal_eq(&x, &r.order_ideal(n).unwrap());
        prop_assert_eq!(g.len() == e - 1, rbar);
        let cl = r.integral_closure(&x);
        prop_assert!(r.ideal_le(&x, &cl));
        prop_assert!(r.is_integrally_closed(&cl));
    }
}

#[test]
fn conductor_and_multiplicity() {
    let f = PrimeField::new(P as u32).unwrap();
    for gens in SEMIGROUPS {
        let r = SemigroupRing::new(f, gens).unwrap();
        let o = Naive::new(P, gens, 80);
        assert_eq!(r.conductor(), o.conductor(), "{gens:?}");
        assert_eq!(r.multiplicity(), gens[0]);
    }
    assert!(SemigroupRing::new(f, &[2, 4]).is_err());
}
