//! Content identities over semigroup rings, checked against the naive oracle.

mod common;

use common::{Naive, Poly};
use dmkit::{content, dm_identity, dm_k_witness, poly_mul, PrimeField, RingPoly, SemigroupRing};
use proptest::prelude::*;

const P: u64 = 101;

type Terms = Vec<Vec<(usize, i64)>>;

/// Polynomials of degree at most 2 over `<3,4>` with short coefficients of order below 16.
fn poly34() -> impl Strategy<Value = Terms> {
    let o = Naive::new(P, &[3, 4], 40);
    let term = (0usize..16, prop_oneof![Just(1i64), Just(-1), 1i64..P as i64]);
    prop::collection::vec(prop::collection::vec(term, 0..=2), 1..=3).prop_map(move |cs| {
        cs.into_iter()
            .map(|ts| ts.into_iter().map(|(d, c)| ((d..).find(|&x| o.in_s(x)).unwrap(), c)).collect())
            .collect()
    })
}

fn nonzero(t: &Terms) -> bool {
    !naive(t).is_empty()
}

fn lib(r: &SemigroupRing, t: &Terms) -> RingPoly<dmkit::Series> {
    RingPoly::new(r, t.iter().map(|c| r.series(c).unwrap()).collect())
}

fn naive(t: &Terms) -> Poly {
    let mut p: Poly = t.iter().map(|c| common::sparse(P, c)).collect();
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
    p
}

fn ring() -> SemigroupRing {
    SemigroupRing::new(PrimeField::new(P as u32).unwrap(), &[3, 4]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn k_min_matches_oracle(f in poly34(), g in poly34()) {
        prop_assume!(nonzero(&f) && nonzero(&g));
        let r = ring();
        let (lf, lg) = (lib(&r, &f), lib(&r, &g));
        let o = Naive::new(P, &[3, 4], 140);
        prop_assert_eq!(dm_k_witness(&r, &lf, &lg).unwrap(), o.k_min(&naive(&f), &naive(&g)));
    }

    #[test]
    fn identity_at_deg_plus_one_and_bounded_by_mu(f in poly34(), g in poly34()) {
        prop_assume!(nonzero(&f) && nonzero(&g));
        let r = ring();
        let (lf, lg) = (lib(&r, &f), lib(&r, &g));
        let n = lg.degree().unwrap();
        prop_assert!(dm_identity(&r, &lf, &lg, n + 1).unwrap());
        let k = dm_k_witness(&r, &lf, &lg).unwrap();
        prop_assert!(k <= r.mu(&content(&r, &lg).unwrap()));
        for j in k..=n + 1 {
            prop_assert!(dm_identity(&r, &lf, &lg, j).unwrap());
        }
    }

    #[test]
    fn product_content_matches_oracle(f in poly34(), g in poly34()) {
        let r = ring();
        let (lf, lg) = (lib(&r, &f), lib(&r, &g));
        let o = Naive::new(P, &[3, 4], 80);
        let prod = poly_mul(&r, &lf, &lg);
        let np = o.poly_mul(&naive(&f), &naive(&g));
        prop_assert_eq!(prod.is_zero(), np.is_empty());
        if !prod.is_zero() {
            let c = content(&r, &prod).unwrap();
            prop_assert_eq!(r.mu(&c), o.mu(&o.content(&np)));
            prop_assert_eq!(c.min_order(), o.min_order(&o.content(&np)));
        }
    }
}

#[test]
fn gaussian_when_content_is_principal() {
    let r = ring();
    let g = lib(&r, &vec![vec![(3, 1)], vec![(6, 1), (7, 2)]]);
    let f = lib(&r, &vec![vec![(4, 1)], vec![(3, 5)], vec![(8, 1)]]);
    assert_eq!(dm_k_witness(&r, &f, &g).unwrap(), 1);
}
