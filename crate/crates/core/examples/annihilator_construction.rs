//! A polynomial f with fg = 0, c(f) inside J and c(f)c(g) nonzero, from a linear system.

use dmkit::construct::{min_degree_m, AnnihilatorInstance};
use dmkit::{content, poly_mul, ArtinianAlgebra, PrimeField, RingPoly};

fn main() -> dmkit::Result<()> {
    let a = ArtinianAlgebra::monomial(PrimeField::new(101)?, &["x", "y"], &[vec![2, 0], vec![0, 2]])?;
    let x = a.basis(1);
    let y = a.basis(2);
    let g = RingPoly::new(&a, vec![x, y]);
    let j = a.maximal_ideal();

    let inst = AnnihilatorInstance::new(&a, &g, &j, None)?;
    println!("g = {}, J = m", g.display(&a));
    println!("n = {}, r = {}, s = {}, least m = {}", inst.n(), inst.r(), inst.s(), min_degree_m(inst.r(), inst.s(), inst.n())?);

    let sol = inst.construct()?;
    println!("{} equations in {} unknowns, nullity {}", sol.equations, sol.unknowns, sol.nullity);
    println!("f = {}", sol.f.display(&a));
    println!("fg = {}", poly_mul(&a, &sol.f, &g).display(&a));
    let prod = a.ideal_product(&content(&a, &sol.f)?, &content(&a, &g)?);
    println!("dim c(f)c(g) = {}", prod.dim());
    Ok(())
}
