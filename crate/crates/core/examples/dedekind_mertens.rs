//! The content identity c(fg) c(f)^(k-1) = c(f)^k c(g) over F_101[[s^3, s^4]].

use dmkit::content::{dm_search, SearchConfig};
use dmkit::{content, dm_identity, dm_k_witness, poly_mul, PrimeField, RingPoly, SemigroupRing};

fn main() -> dmkit::Result<()> {
    let r = SemigroupRing::new(PrimeField::new(101)?, &[3, 4])?;
    let g = RingPoly::new(&r, vec![r.monomial(6, 1)?, r.monomial(7, 1)?, r.monomial(8, 1)?]);
    let f = RingPoly::new(&r, vec![r.monomial(6, 1)?, r.monomial(7, -1)?]);

    let fg = poly_mul(&r, &f, &g);
    println!("g = {}\nf = {}\nfg = {}", g.display(&r), f.display(&r), fg.display(&r));
    println!("mu(c(g)) = {}", r.mu(&content(&r, &g)?));
    for k in 1..=3 {
        println!("identity at k = {k}: {}", dm_identity(&r, &f, &g, k)?);
    }
    println!("k_min(f, g) = {}", dm_k_witness(&r, &f, &g)?);

    // sampled lower bound for the Dedekind-Mertens number of a rearranged g
    let h = RingPoly::new(&r, vec![r.monomial(7, 1)?, r.monomial(6, 1)?, r.monomial(8, 1)?]);
    let rep = dm_search(&r, &h, &SearchConfig::random(20_000_601, 300, 3))?;
    println!(
        "h = {}: {} samples, lower bound {}, histogram {:?}",
        h.display(&r),
        rep.witness_table.len(),
        rep.dm_lower_bound,
        rep.histogram()
    );
    if let Some(w) = rep.witness_table.first() {
        println!("  top witness {} with k_min {}", w.f.display(&r), w.k_min);
    }
    Ok(())
}
