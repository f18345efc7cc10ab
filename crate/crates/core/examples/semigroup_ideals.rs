//! Ideals of F_p[[s^3, s^5]]: generators, gamma and integral closure.

use dmkit::{PrimeField, SemigroupRing};

fn main() -> dmkit::Result<()> {
    let r = SemigroupRing::new(PrimeField::new(101)?, &[3, 5])?;
    println!("S = <3,5>: multiplicity {}, conductor {}, gaps {:?}", r.multiplicity(), r.conductor(), r.gaps());

    let i = r.monomial_ideal(&[9, 11, 13])?;
    println!("I = (s^9, s^11, s^13)");
    println!("  mu(I) = {}", r.mu(&i));
    println!("  gamma(I) = {:?}", r.gamma(&i)?);
    println!("  value set {:?}", r.value_set(&i));
    println!("  integrally closed: {}", r.is_integrally_closed(&i));

    let closure = r.integral_closure(&i);
    let added: Vec<usize> = r.value_set(&closure).into_iter().filter(|d| !r.value_set(&i).contains(d)).collect();
    println!("  closure adds {added:?}");

    // a non-monomial ideal: (s^3 + s^5) has the same closure as (s^3)
    let x = r.series(&[(3, 1), (5, 1)])?;
    let j = r.ideal_span(&[x])?;
    let sq = r.ideal_power(&j, 2)?;
    println!("(s^3 + s^5)^2: mu {}, gamma {:?}", r.mu(&sq), r.gamma(&sq)?);
    Ok(())
}
