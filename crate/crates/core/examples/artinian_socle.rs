//! Socle, colon ideals and Gorenstein duality in finite-dimensional local algebras.

use dmkit::{ArtinianAlgebra, PrimeField, SemigroupRing};

fn main() -> dmkit::Result<()> {
    let f = PrimeField::new(5)?;
    let a = ArtinianAlgebra::monomial(f, &["x", "y"], &[vec![2, 0], vec![0, 3]])?;
    println!("F_5[x,y]/(x^2, y^3): basis {:?}", a.labels());
    println!("  socle dim {}, Gorenstein {}", a.socle_dim(), a.is_gorenstein());

    let x = a.basis(a.labels().iter().position(|l| l == "x").unwrap());
    let i = a.ideal_span(&[x]);
    let ann = a.ann(&i);
    println!("  dim (x) = {}, dim (0 : x) = {}", i.dim(), ann.dim());
    println!("  (0 : (0 : (x))) = (x): {}", a.ann(&ann) == i);
    println!("  duality check on (x): {}", a.duality_check(&i)?);

    let b = ArtinianAlgebra::monomial(f, &["x", "y"], &[vec![2, 0], vec![1, 1], vec![0, 2]])?;
    println!("F_5[x,y]/(x,y)^2: socle dim {}, Gorenstein {}", b.socle_dim(), b.is_gorenstein());

    // a quotient of a semigroup ring by s^9
    let r = SemigroupRing::new(f, &[3, 4])?;
    let q = ArtinianAlgebra::from_quotient(&r, &r.ideal_span(&[r.monomial(9, 1)?])?)?;
    let qa = q.algebra();
    println!("F_5[[s^3,s^4]]/(s^9): dim {}, basis degrees {:?}, Gorenstein {}", qa.dim(), q.basis_degrees(), qa.is_gorenstein());
    Ok(())
}
