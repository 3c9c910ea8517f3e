//! Mechanical re-execution of the computational steps behind the classification
//! of cyclic isogeny degrees over quadratic fields for non-CM elliptic curves
//! with rational j-invariant.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rationals, real/imaginary quadratic fields, univariate
//!   polynomials over ℚ and 𝔽ₚ, and factorization over ℚ.
//! * [`gl2`]: matrices and realized subgroups of GL₂(ℤ/mℤ), orbit analysis on
//!   cyclic subgroups and points, conjugacy search.
//! * [`lift`]: enumeration of subgroups of GL₂(ℤ/p²ℤ) with prescribed mod-p
//!   reduction, and their classification.
//! * [`jmatch`]: j-invariant families and elimination polynomials.
//! * [`modpoly`]: classical modular polynomial ingestion and factor-degree
//!   certificates.
//! * [`x091`]: the explicit model of X₀(91) and its genus-2 quotient.
//! * [`pipeline`]: the check registry, configuration and report emission.

pub mod error;
pub mod exact;
pub mod gl2;
pub mod jmatch;
pub mod lift;
pub mod modpoly;
pub mod pipeline;
pub mod x091;

pub use error::{Error, Result};
