//! Subgroups of GL₂(ℤ/p²ℤ) with prescribed reduction mod p, and their
//! classification.

pub mod brute;
pub mod classify;
pub mod enumerate;
pub mod kernel;

pub use brute::{brute_force_subgroups, brute_force_subgroups_raw};
pub use classify::{analyze_lift, classify_lift, LiftAnalysis, Outcome};
pub use enumerate::{lift_subgroups, normalizer, stable_subspaces, LiftClass, LiftEnumeration};

use crate::error::Result;
use crate::gl2::group::group_closure;
use crate::gl2::{Mat, MatrixGroup};

/// Full preimage of G under GL₂(ℤ/p²ℤ) → GL₂(𝔽ₚ).
pub fn preimage(g: &MatrixGroup, p: u32) -> Result<MatrixGroup> {
    let mut gens: Vec<Mat> = g.generators().iter().map(|x| Mat { m: p * p, a: x.a, b: x.b, c: x.c, d: x.d }).collect();
    for i in 0..4 {
        let mut v = [0u32; 4];
        v[i] = 1;
        gens.push(kernel::kernel_element(p, &v));
    }
    group_closure(&gens, p * p)
}

/// Lifts of all subgroups of G (reduction into G rather than onto), up to
/// conjugacy: the sum over conjugacy classes of subgroups of G of the onto
/// enumeration.
pub fn lift_subgroups_into(g: &MatrixGroup, p: u32) -> Result<Vec<(MatrixGroup, LiftEnumeration)>> {
    let subs = brute_force_subgroups(g)?;
    subs.into_iter()
        .map(|s| {
            let e = lift_subgroups(&s, p)?;
            Ok((s, e))
        })
        .collect()
}
