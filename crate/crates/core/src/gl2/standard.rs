//! Standard subgroups of GL₂(ℤ/mℤ): the full group, Borel, Cartan subgroups
//! and their normalizers, and scalars.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::group::{group_closure, MatrixGroup};
use super::mat::{gcd, Mat};
use crate::error::{Error, Result};
use crate::exact::factor_small;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardName {
    Full,
    Borel,
    SplitCartan,
    SplitCartanNormalizer,
    NonsplitCartan,
    NonsplitCartanNormalizer,
    Scalars,
}

impl FromStr for StandardName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "full" => StandardName::Full,
            "borel" => StandardName::Borel,
            "split_cartan" => StandardName::SplitCartan,
            "split_cartan_normalizer" => StandardName::SplitCartanNormalizer,
            "nonsplit_cartan" => StandardName::NonsplitCartan,
            "nonsplit_cartan_normalizer" => StandardName::NonsplitCartanNormalizer,
            "scalars" => StandardName::Scalars,
            _ => return Err(Error::invalid(format!("unknown standard group {s:?}"))),
        })
    }
}

fn units(m: u32) -> Vec<u32> {
    (1..m).filter(|&u| gcd(u, m) == 1).collect()
}

/// A generating set of (ℤ/mℤ)^×, chosen greedily in increasing order.
fn unit_generators(m: u32) -> Vec<u32> {
    let mut reached = vec![false; m as usize];
    reached[1 % m as usize] = true;
    let mut gens = Vec::new();
    for u in units(m) {
        if reached[u as usize] {
            continue;
        }
        gens.push(u);
        // Re-close the reached set under multiplication by all generators.
        let mut stack: Vec<u32> = (0..m).filter(|&x| reached[x as usize]).collect();
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = x * g % m;
                if !reached[y as usize] {
                    reached[y as usize] = true;
                    stack.push(y);
                }
            }
        }
    }
    gens
}

/// Least positive quadratic non-residue modulo the odd prime `p`.
pub fn least_nonresidue(p: u32) -> u32 {
    (2..p)
        .find(|&e| crate::exact::pow_mod(e as u64, ((p - 1) / 2) as u64, p as u64) == (p - 1) as u64)
        .expect("odd prime has a non-residue")
}

fn prime_of(m: u32) -> Result<u32> {
    match factor_small(m as u64).as_slice() {
        [(p, _)] => Ok(*p as u32),
        _ => Err(Error::UnsupportedModulus { modulus: m as u64, reason: "Cartan subgroups need a prime-power modulus" }),
    }
}

/// Realizes a subgroup from its full element list, picking generators
/// greedily in code order.
pub(crate) fn from_element_set(m: u32, mut mats: Vec<Mat>) -> Result<MatrixGroup> {
    mats.sort_by_key(Mat::code);
    let mut gens = Vec::new();
    let mut h = MatrixGroup::trivial(m)?;
    for g in &mats {
        if !h.contains(g) {
            gens.push(*g);
            h = group_closure(&gens, m)?;
        }
    }
    if h.order() != mats.len() {
        return Err(Error::Integrity(format!("element set of size {} generates a group of order {}", mats.len(), h.order())));
    }
    Ok(h)
}

fn nonsplit_elements(m: u32, p: u32) -> Vec<Mat> {
    let eps = least_nonresidue(p) as i64;
    let mut out = Vec::new();
    for a in 0..m as i64 {
        for b in 0..m as i64 {
            if a % p as i64 != 0 || b % p as i64 != 0 {
                out.push(Mat::new(m, a, b * eps, b, a));
            }
        }
    }
    out
}

/// The standard representative of the named subgroup.
///
/// Split Cartan: diagonal matrices; its normalizer adds the antidiagonal
/// coset. Nonsplit Cartan: `[[a, bε], [b, a]]` with ε the least positive
/// non-residue; its normalizer adds the coset of `diag(1, −1)`.
pub fn standard_group(name: StandardName, m: u32) -> Result<MatrixGroup> {
    let ug = unit_generators(m);
    match name {
        StandardName::Full => {
            let mut gens: Vec<Mat> = ug.iter().map(|&u| Mat::diag(m, u as i64, 1)).collect();
            gens.push(Mat::new(m, 1, 1, 0, 1));
            gens.push(Mat::new(m, 1, 0, 1, 1));
            group_closure(&gens, m)
        }
        StandardName::Borel => {
            let mut gens: Vec<Mat> = ug.iter().map(|&u| Mat::diag(m, u as i64, 1)).collect();
            gens.extend(ug.iter().map(|&u| Mat::diag(m, 1, u as i64)));
            gens.push(Mat::new(m, 1, 1, 0, 1));
            group_closure(&gens, m)
        }
        StandardName::SplitCartan | StandardName::SplitCartanNormalizer => {
            prime_of(m)?;
            let mut gens: Vec<Mat> = ug.iter().map(|&u| Mat::diag(m, u as i64, 1)).collect();
            gens.extend(ug.iter().map(|&u| Mat::diag(m, 1, u as i64)));
            if name == StandardName::SplitCartanNormalizer {
                gens.push(Mat::new(m, 0, 1, 1, 0));
            }
            group_closure(&gens, m)
        }
        StandardName::NonsplitCartan | StandardName::NonsplitCartanNormalizer => {
            let p = prime_of(m)?;
            if p == 2 {
                return Err(Error::UnsupportedModulus { modulus: m as u64, reason: "nonsplit Cartan needs an odd prime" });
            }
            let mut els = nonsplit_elements(m, p);
            if name == StandardName::NonsplitCartanNormalizer {
                let c = Mat::diag(m, 1, -1);
                let coset: Vec<Mat> = els.iter().map(|g| c.mul(g)).collect();
                els.extend(coset);
            }
            from_element_set(m, els)
        }
        StandardName::Scalars => {
            let gens: Vec<Mat> = ug.iter().map(|&u| Mat::scalar(m, u as i64)).collect();
            group_closure(&gens, m)
        }
    }
}
