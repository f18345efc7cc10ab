//! Exhaustive search over a finite coefficient ring certifies the number exactly.

use dmkit::content::{dm_search, SearchConfig};
use dmkit::{ArtinianAlgebra, PrimeField, RingPoly};

fn main() -> dmkit::Result<()> {
    let a = ArtinianAlgebra::monomial(PrimeField::new(2)?, &["x"], &[vec![2]])?;
    let g = RingPoly::new(&a, vec![a.one(), a.basis(1)]);
    let rep = dm_search(&a, &g, &SearchConfig::exhaustive(2))?;
    println!("g = {} over F_2[x]/(x^2)", g.display(&a));
    println!("certificate {:?}", rep.certificate);
    println!("Dedekind-Mertens number {}", rep.dm_lower_bound);

    let h = RingPoly::new(&a, vec![a.basis(1), a.basis(1)]);
    let rep = dm_search(&a, &h, &SearchConfig::exhaustive(2))?;
    println!("h = {}: number {} ({:?})", h.display(&a), rep.dm_lower_bound, rep.certificate);
    Ok(())
}
