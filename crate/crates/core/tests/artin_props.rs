use dmkit::{AlgElem, ArtinianAlgebra, PrimeField, SubIdeal};
use proptest::prelude::*;

/// `F_p[x,y]/(x^a, y^b)`, a complete intersection and so Gorenstein.
fn algebra(a: usize, b: usize) -> ArtinianAlgebra {
    ArtinianAlgebra::monomial(PrimeField::new(5).unwrap(), &["x", "y"], &[vec![a, 0], vec![0, b]]).unwrap()
}

fn elem(alg: &ArtinianAlgebra, coords: &[i64]) -> AlgElem {
    let mut c: Vec<i64> = coords.iter().copied().take(alg.dim()).collect();
    c.resize(alg.dim(), 0);
    c[0] = 0;
    alg.element(&c).unwrap()
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (2usize..=3, 2usize..=3).prop_flat_map(|(a, b)| {
        let d = a * b;
        (
            Just(a),
            Just(b),
            prop::collection::vec(prop::collection::vec(0i64..5, d), 1..=2),
            prop::collection::vec(prop::collection::vec(0i64..5, d), 1..=2),
        )
    })
}

fn ideal(alg: &ArtinianAlgebra, gens: &[Vec<i64>]) -> SubIdeal {
    let xs: Vec<AlgElem> = gens.iter().map(|c| elem(alg, c)).collect();
    alg.ideal_span(&xs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gorenstein_duality_and_double_annihilator((a, b, i, _j) in case()) {
        let alg = algebra(a, b);
        prop_assert!(alg.is_gorenstein());
        let i = ideal(&alg, &i);
        prop_assert!(alg.duality_check(&i).unwrap());
        prop_assert_eq!(alg.ann(&alg.ann(&i)), i.clone());
        prop_assert_eq!(alg.ann(&i).dim() + i.dim(), alg.dim());
    }

    #[test]
    fn colon_laws((a, b, i, j) in case()) {
        let alg = algebra(a, b);
        let (i, j) = (ideal(&alg, &i), ideal(&alg, &j));
        let col = alg.colon(&i, &j);
        prop_assert!(alg.ideal_le(&alg.ideal_product(&col, &j), &i));
        prop_assert!(alg.ideal_le(&i, &col));
        let ij = alg.ideal_product(&i, &j);
        prop_assert_eq!(ij.clone(), alg.ideal_product(&j, &i));
        prop_assert!(alg.ideal_le(&ij, &i) && alg.ideal_le(&ij, &alg.ideal_sum(&i, &j)));
        prop_assert!(alg.mu(&i) <= i.dim());
    }

    #[test]
    fn multiplication_is_associative((a, b, i, j) in case()) {
        let alg = algebra(a, b);
        let x = elem(&alg, &i[0]);
        let y = elem(&alg, &j[0]);
        let z = alg.add(&x, &alg.one());
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        prop_assert_eq!(alg.mul(&x, &y), alg.mul(&y, &x));
    }
}

#[test]
fn socle_dimensions() {
    assert_eq!(algebra(2, 3).socle_dim(), 1);
    let mxy = ArtinianAlgebra::monomial(PrimeField::new(3).unwrap(), &["x", "y"], &[vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
    assert_eq!(mxy.socle_dim(), 2);
    assert!(!mxy.is_gorenstein());
}
