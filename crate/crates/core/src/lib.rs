//! Irreducible, prime and absolutely irreducible elements in explicitly
//! presented monoids and in a few concrete rings.
//!
//! * [`abgroup`]: finitely generated abelian groups and integer linear algebra.
//! * [`zsm`]: zero-sum sequences, block monoids, atoms and factorizations.
//! * [`krull`]: absolute-irreducibility criteria for Krull monoids and the
//!   eight-way existence classification.
//! * [`nummon`]: numerical monoids.
//! * [`ivpoly`]: integer-valued polynomials over ℚ.
//! * [`quadratic`]: imaginary quadratic orders `ℤ[√d]`.
//!
//! Everything is generic over an exact integer [`Scalar`]; the aliases below
//! fix it to arbitrary precision.

pub mod abgroup;
pub mod error;
pub mod hilbert;
pub mod ivpoly;
pub mod krull;
pub mod nummon;
pub mod quadratic;
pub mod scalar;
pub mod zsm;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use num_bigint::BigInt;

/// Arbitrary-precision integer used by all concrete aliases.
pub type Int = BigInt;
pub type IntMatrix = abgroup::Matrix<Int>;
pub type Group = abgroup::FinGenAbelianGroup<Int>;
pub type Element = abgroup::GroupElement<Int>;
pub type Classes = zsm::ClassSet<Int>;
pub type Atoms = zsm::AtomSet<Int>;
pub type Spec = krull::KrullSpec<Int>;
pub type RatPoly = ivpoly::Poly<Int>;
pub type QuadInt = quadratic::QuadInt<Int>;
pub type QuadRing = quadratic::QuadRing<Int>;
