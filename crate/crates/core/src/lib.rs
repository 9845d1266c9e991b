//! Exact verification kernel for Hopf quasigroups and the braided crossed
//! category of their `(α, β)`-Yetter-Drinfeld quasimodules.
//!
//! Everything is generic over a [`Scalar`] field; the aliases at the crate
//! root fix it to arbitrary-precision rationals, which is what every suite
//! and the CLI use.

pub mod error;
pub mod exactlin;
pub mod hopfq;
pub mod io;
pub mod loops;
pub mod report;
pub mod scalar;
pub mod ydq;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals in lowest terms.
pub type Rational = num_rational::BigRational;

pub type Matrix = exactlin::LinearMap<Rational>;
pub type Hqg = hopfq::HopfQuasigroup<Rational>;
pub type Coquasigroup = hopfq::HopfCoquasigroup<Rational>;
pub type Automorphism = hopfq::HqgAutomorphism<Rational>;
pub type Element = ydq::GElement<Rational>;
pub type Module = ydq::YdqModule<Rational>;
