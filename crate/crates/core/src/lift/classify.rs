//! Three-way classification of lifts to level p².

use serde::Serialize;

use super::enumerate::LiftClass;
use crate::error::Result;
use crate::gl2::{conjugate_into, cyclic_subgroup_orbits, standard_group, Mat, OrbitReport, StandardName};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    /// Fewer than p scalars ≡ 1 (mod p).
    ScalarFail {
        scalars: usize,
    },
    ConjugateIntoSplitNormalizer {
        witness: [[u32; 2]; 2],
    },
    OrbitBound {
        orbits: Vec<usize>,
    },
    Unclassified,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::ScalarFail { .. } => "ScalarFail",
            Outcome::ConjugateIntoSplitNormalizer { .. } => "ConjugateIntoSplitNormalizer",
            Outcome::OrbitBound { .. } => "OrbitBound",
            Outcome::Unclassified => "Unclassified",
        }
    }
}

/// All three invariants of a lift, independent of the decision ladder.
#[derive(Clone, Debug, Serialize)]
pub struct LiftAnalysis {
    pub order: usize,
    pub kernel_dim: usize,
    pub scalar_count: usize,
    pub conjugate_into_split_normalizer: Option<[[u32; 2]; 2]>,
    pub orbits: OrbitReport,
    pub outcome: Outcome,
}

fn split_normalizer(p: u32) -> Result<crate::gl2::MatrixGroup> {
    standard_group(StandardName::SplitCartanNormalizer, p * p)
}

/// Decision ladder: scalar test, then conjugation into N_s(p²), then orbits.
pub fn classify_lift(h: &LiftClass, p: u32) -> Result<Outcome> {
    let g = &h.representative;
    let scalars = g.scalar_count(p)?;
    if scalars < p as usize {
        return Ok(Outcome::ScalarFail { scalars });
    }
    if let Some(w) = conjugate_into(g, &split_normalizer(p)?)? {
        return Ok(Outcome::ConjugateIntoSplitNormalizer { witness: w.entries() });
    }
    Ok(Outcome::OrbitBound { orbits: cyclic_subgroup_orbits(g).lengths })
}

pub fn analyze_lift(h: &LiftClass, p: u32) -> Result<LiftAnalysis> {
    let g = &h.representative;
    let into: Option<Mat> = conjugate_into(g, &split_normalizer(p)?)?;
    Ok(LiftAnalysis {
        order: h.order,
        kernel_dim: h.kernel_dim,
        scalar_count: g.scalar_count(p)?,
        conjugate_into_split_normalizer: into.map(|w| w.entries()),
        orbits: cyclic_subgroup_orbits(g),
        outcome: classify_lift(h, p)?,
    })
}
