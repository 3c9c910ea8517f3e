//! The ten-quadric model of X₀(91) and the genus-2 quotient X₀(91)/w₉₁.
//!
//! [`model`] checks points on the canonical model and the action of the
//! Atkin–Lehner involutions; [`hyper`] counts points on the quotient curve and
//! derives Jacobian orders from its zeta function.

pub mod hyper;
pub mod model;

pub use hyper::{count_points, jacobian_order, jacobian_order_by_enumeration, torsion_multiple, HypCurve, ZetaData};
pub use model::{atkin_lehner, involution_consistency, verify_model_point, ModelReport, ProjPoint, Quadric, QuadricModel};
