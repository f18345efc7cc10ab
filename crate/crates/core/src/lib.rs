//! Content ideals of polynomials over numerical semigroup rings and Artinian
//! local algebras, with exact linear algebra over prime fields.
//!
//! The entry points are [`semiring::SemigroupRing`], [`artin::ArtinianAlgebra`]
//! and the generic routines in [`content`], which work over either through the
//! [`content::CoefficientRing`] trait.

pub mod artin;
pub mod construct;
pub mod content;
pub mod dsl;
pub mod error;
pub mod exactla;
pub mod report;
pub mod repro;
pub mod semiring;

pub use artin::{AlgElem, ArtinianAlgebra, SemigroupQuotient, SubIdeal};
pub use content::{content, dm_identity, dm_k_witness, poly_mul, CoefficientRing, RingPoly};
pub use error::{Error, Result};
pub use exactla::{DenseMatrix, PrimeField, Subspace};
pub use semiring::{IdealVS, Precision, SemigroupRing, Series};
