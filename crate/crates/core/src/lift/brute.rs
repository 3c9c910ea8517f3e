//! Exhaustive subgroup enumeration for small groups; an independent oracle
//! for the lifting engine.

use std::collections::HashSet;

use rayon::prelude::*;

use super::enumerate::{dedupe, LiftClass};
use crate::error::{Error, Result};
use crate::gl2::group::MatrixGroup;
use crate::gl2::Mat;

pub const BRUTE_FORCE_CAP: usize = 5000;

type Bits = Vec<u64>;

struct Table {
    mats: Vec<Mat>,
    mul: Vec<u16>,
    n: usize,
}

impl Table {
    fn new(a: &MatrixGroup) -> Self {
        let mats: Vec<Mat> = a.elements().collect();
        let n = mats.len();
        let pos = |m: &Mat| mats.binary_search_by_key(&m.code(), Mat::code).unwrap() as u16;
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = pos(&mats[i].mul(&mats[j]));
            }
        }
        Table { mats, mul, n }
    }

    /// Closure of a subgroup `seed` (generated by `seed_gens`) together with `g`.
    fn join(&self, seed: &Bits, seed_gens: &[u16], g: u16) -> Bits {
        let mut bits = seed.clone();
        let mut gens = seed_gens.to_vec();
        gens.push(g);
        let mut stack: Vec<u16> = (0..self.n as u16).filter(|&i| get(&bits, i)).collect();
        while let Some(x) = stack.pop() {
            for &y in &gens {
                let z = self.mul[x as usize * self.n + y as usize];
                if !get(&bits, z) {
                    set(&mut bits, z);
                    stack.push(z);
                }
            }
        }
        bits
    }
}

fn get(b: &Bits, i: u16) -> bool {
    b[i as usize / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: u16) {
    b[i as usize / 64] |= 1 << (i % 64);
}

/// Every subgroup (bitset, generators), without deduplication.
fn all_subgroups(t: &Table) -> Vec<(Bits, Vec<u16>)> {
    let words = t.n.div_ceil(64);
    let mut trivial = vec![0u64; words];
    let id = t.mats.iter().position(Mat::is_identity).unwrap() as u16;
    set(&mut trivial, id);
    let mut cyclic: Vec<(Bits, Vec<u16>)> = Vec::new();
    let mut seen: HashSet<Bits> = HashSet::new();
    for x in 0..t.n as u16 {
        let c = t.join(&trivial, &[], x);
        if seen.insert(c.clone()) {
            cyclic.push((c, vec![x]));
        }
    }
    let mut out = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let next: Vec<(Bits, Vec<u16>)> = frontier
            .par_iter()
            .flat_map_iter(|(s, gens)| {
                cyclic
                    .iter()
                    .filter(|(_, cg)| !get(s, cg[0]))
                    .map(|(_, cg)| {
                        let mut g2 = gens.clone();
                        g2.push(cg[0]);
                        (t.join(s, gens, cg[0]), g2)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = Vec::new();
        for (s, g) in next {
            if seen.insert(s.clone()) {
                out.push((s.clone(), g.clone()));
                frontier.push((s, g));
            }
        }
    }
    out.sort();
    out
}

fn to_group(t: &Table, m: u32, b: &Bits, gens: &[u16]) -> MatrixGroup {
    let codes: Vec<u32> = (0..t.n as u16).filter(|&i| get(b, i)).map(|i| t.mats[i as usize].code()).collect();
    let gens = gens.iter().map(|&i| t.mats[i as usize]).collect();
    MatrixGroup::from_elements(m, gens, &codes)
}

/// All subgroups of `a`, without deduplication.
pub fn brute_force_subgroups_raw(a: &MatrixGroup) -> Result<Vec<MatrixGroup>> {
    if a.order() > BRUTE_FORCE_CAP {
        return Err(Error::SizeLimit(BRUTE_FORCE_CAP));
    }
    let t = Table::new(a);
    Ok(all_subgroups(&t).iter().map(|(b, g)| to_group(&t, a.modulus(), b, g)).collect())
}

/// All subgroups of `a` up to GL₂(ℤ/mℤ)-conjugacy, sorted by order.
pub fn brute_force_subgroups(a: &MatrixGroup) -> Result<Vec<MatrixGroup>> {
    let subs = brute_force_subgroups_raw(a)?;
    Ok(dedupe_groups(subs).into_iter().map(|c| c.representative).collect())
}

/// Deduplicates by conjugacy; kernel dimension is not tracked here.
pub(crate) fn dedupe_groups(mut subs: Vec<MatrixGroup>) -> Vec<LiftClass> {
    subs.par_iter().for_each(|h| {
        h.fingerprint();
    });
    subs.sort_by(|a, b| (a.fingerprint(), a.codes()).cmp(&(b.fingerprint(), b.codes())));
    dedupe(subs.into_iter().map(|h| (h, 0)).collect())
}
