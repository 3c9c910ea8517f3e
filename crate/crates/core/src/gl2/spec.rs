//! JSON generator format shared with the pipeline configuration:
//! `{"modulus": m, "generators": [[[a, b], [c, d]], ...]}`.

use serde::{Deserialize, Serialize};

use super::group::{group_closure, MatrixGroup};
use super::mat::Mat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub modulus: u32,
    pub generators: Vec<[[i64; 2]; 2]>,
}

impl GroupSpec {
    pub fn matrices(&self) -> Vec<Mat> {
        self.generators.iter().map(|[[a, b], [c, d]]| Mat::new(self.modulus, *a, *b, *c, *d)).collect()
    }

    /// Validates every generator and realizes the group. `path` prefixes the
    /// location reported in errors.
    pub fn realize(&self, path: &str) -> Result<MatrixGroup> {
        for (i, g) in self.matrices().iter().enumerate() {
            if !g.is_invertible() {
                return Err(Error::Config {
                    path: format!("{path}.generators[{i}]"),
                    msg: format!("matrix {g} has non-unit determinant {}", g.det()),
                });
            }
        }
        group_closure(&self.matrices(), self.modulus).map_err(|e| Error::Config { path: path.to_string(), msg: e.to_string() })
    }

    pub fn from_group(g: &MatrixGroup) -> Self {
        GroupSpec {
            modulus: g.modulus(),
            generators: g.generators().iter().map(|h| [[h.a as i64, h.b as i64], [h.c as i64, h.d as i64]]).collect(),
        }
    }
}
