//! A polynomial h separating the two sides of the polarized identity in a Gorenstein algebra.

use dmkit::construct::{separating_polynomial, thm33_construct};
use dmkit::{dsl, PrimeField};

fn main() -> dmkit::Result<()> {
    let text = "ring A = monomial(x, y; x^5, y^5);\ng = x^3 + x^2*y*t + x*y^2*t^2 + y^3*t^3;\nf = x - y*t;\n";
    let s = dsl::parse_input(text, PrimeField::new(101)?, Default::default())?;
    let (a, g) = s.algebra_poly("g")?;
    let (_, f) = s.algebra_poly("f")?;
    let sol = separating_polynomial(a, g, std::slice::from_ref(f))?;
    println!("g = {}\nf = {}", g.display(a), f.display(a));
    println!("dim P c(g) / (m P c(g) + B) = {}, mu(P) = {}", sol.quotient_dim, sol.mu_product);
    println!("h = {}", sol.h.display(a));
    assert_eq!(thm33_construct(a, g, std::slice::from_ref(f))?, sol.h);

    // the same request in a non-Gorenstein algebra is refused
    let t = "ring B = monomial(x, y; x^2, x*y, y^2);\ng = x + y*t;\nf = x;\n";
    let s = dsl::parse_input(t, PrimeField::new(101)?, Default::default())?;
    let (b, g) = s.algebra_poly("g")?;
    let (_, f) = s.algebra_poly("f")?;
    match separating_polynomial(b, g, std::slice::from_ref(f)) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("B: {e}"),
    }
    Ok(())
}
