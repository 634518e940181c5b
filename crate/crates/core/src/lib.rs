//! Triangular matrix algebras `Λ = [[A, M], [0, B]]` over exact fields.
//!
//! The library is generic over the scalar field (see [`exactla::Field`]);
//! the aliases below cover the fields used by the bundled examples.

pub mod algebra;
pub mod bimtri;
pub mod exactla;
pub mod monocat;
pub mod repmod;
pub mod rss;
pub mod stablerec;

#[cfg(test)]
mod fixtures;

pub use exactla::{BaseField, Field, Fp, Matrix, One, Subspace, Zero};

/// The field with two elements, the default for example computations.
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
/// The rationals with arbitrary-precision numerator and denominator.
pub type Q = num_rational::BigRational;
