use dmkit::{DenseMatrix, PrimeField, Subspace};
use proptest::prelude::*;

fn matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..4, cols), 0..=max_rows)
}

fn field() -> PrimeField {
    PrimeField::new(7).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_plus_nullity_is_width(rows in matrix(6, 5)) {
        let m = DenseMatrix::from_rows(field(), 5, &rows).unwrap();
        prop_assert_eq!(m.rank() + m.nullspace().dim(), 5);
    }

    #[test]
    fn nullspace_is_annihilated(rows in matrix(6, 5)) {
        let m = DenseMatrix::from_rows(field(), 5, &rows).unwrap();
        for v in m.nullspace().basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_is_idempotent_and_keeps_rank(rows in matrix(6, 5)) {
        let m = DenseMatrix::from_rows(field(), 5, &rows).unwrap();
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn sum_and_intersection_dimensions(a in matrix(4, 5), b in matrix(4, 5)) {
        let f = field();
        let u = Subspace::span(f, 5, &a).unwrap();
        let w = Subspace::span(f, 5, &b).unwrap();
        let s = u.sum(&w).unwrap();
        let i = u.intersection(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&s).unwrap() && w.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn spanning_vectors_are_members(a in matrix(4, 5)) {
        let f = field();
        let u = Subspace::span(f, 5, &a).unwrap();
        for v in &a {
            let v: Vec<u32> = v.iter().map(|&x| f.reduce(x)).collect();
            prop_assert!(u.contains(&v).unwrap());
            prop_assert!(u.reduce(&v).unwrap().iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn field_inverse(a in 1u32..101) {
        let f = PrimeField::new(101).unwrap();
        prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.pow(a, 100), 1);
    }
}

#[test]
fn rejects_composite_modulus() {
    assert!(PrimeField::new(91).is_err());
    assert!(PrimeField::new(1).is_err());
}
