//! Row reduction and kernels over F_p.

use dmkit::{DenseMatrix, PrimeField, Subspace};

fn main() -> dmkit::Result<()> {
    let f = PrimeField::new(7)?;
    let m = DenseMatrix::from_rows(f, 4, &[[1, 2, 3, 4], [2, 4, 6, 1], [0, 1, 1, 1]])?;
    println!("rank {} over F_{}", m.rank(), f.p());
    let ker = m.nullspace();
    for v in ker.basis_vectors() {
        println!("kernel vector {v:?}, image {:?}", m.mul_vec(&v)?);
    }

    let u = Subspace::span(f, 4, &[[1, 0, 0, 0], [0, 1, 0, 0]])?;
    let w = Subspace::span(f, 4, &[[1, 1, 0, 0], [0, 0, 1, 0]])?;
    println!(
        "dim U = {}, dim W = {}, dim U+W = {}, dim U∩W = {}",
        u.dim(),
        w.dim(),
        u.sum(&w)?.dim(),
        u.intersection(&w)?.dim()
    );
    Ok(())
}
