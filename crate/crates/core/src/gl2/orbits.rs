//! Orbits of matrix groups on cyclic subgroups and on points of exact order m.

use std::collections::HashMap;

use serde::Serialize;

use super::group::MatrixGroup;
use super::mat::{gcd, inv_u32, Mat};
use crate::exact::factor_small;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub group_order: usize,
    pub acted_on: usize,
    /// Orbit lengths, ascending.
    pub lengths: Vec<usize>,
}

impl OrbitReport {
    pub fn min_length(&self) -> Option<usize> {
        self.lengths.first().copied()
    }

    /// Distinct lengths, ascending.
    pub fn distinct(&self) -> Vec<usize> {
        let mut d = self.lengths.clone();
        d.dedup();
        d
    }
}

/// A cyclic subgroup of order m in (ℤ/mℤ)², named by its canonical generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicSubgroupRep {
    pub modulus: u32,
    pub generator: (u32, u32),
}

/// `ψ(m) = m ∏_{p|m} (1 + 1/p)`.
pub fn psi(m: u64) -> u64 {
    factor_small(m).iter().fold(m, |acc, &(p, _)| acc / p * (p + 1))
}

fn prime_power(m: u32) -> Option<u32> {
    match factor_small(m as u64).as_slice() {
        [(p, _)] => Some(*p as u32),
        _ => None,
    }
}

/// Whether `v` has additive order exactly `m`.
pub fn has_full_order(m: u32, v: (u32, u32)) -> bool {
    gcd(gcd(v.0, v.1), m) == 1
}

/// Canonical generator of `⟨v⟩` for `v` of order m.
///
/// For prime powers: `(1, y)` when the first coordinate is a unit, otherwise
/// `(x, 1)` with `x ≡ 0 mod p`. For other moduli the lexicographically least
/// unit multiple is used.
pub fn canonical_cyclic(m: u32, v: (u32, u32)) -> (u32, u32) {
    debug_assert!(has_full_order(m, v));
    if let Some(p) = prime_power(m) {
        if v.0 % p != 0 {
            let u = inv_u32(v.0, m).unwrap();
            return (1 % m, v.1 * u % m);
        }
        let u = inv_u32(v.1, m).unwrap();
        return (v.0 * u % m, 1 % m);
    }
    (1..m).filter(|&u| gcd(u, m) == 1).map(|u| (v.0 * u % m, v.1 * u % m)).min().unwrap()
}

/// All cyclic subgroups of order m, in canonical order.
pub fn cyclic_subgroup_reps(m: u32) -> Vec<CyclicSubgroupRep> {
    let mut gens = Vec::new();
    if let Some(p) = prime_power(m) {
        gens.extend((0..m).map(|y| (1 % m, y)));
        gens.extend((0..m).step_by(p as usize).map(|x| (x, 1 % m)));
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..m {
            for y in 0..m {
                if has_full_order(m, (x, y)) {
                    seen.insert(canonical_cyclic(m, (x, y)));
                }
            }
        }
        gens.extend(seen);
    }
    gens.into_iter().map(|generator| CyclicSubgroupRep { modulus: m, generator }).collect()
}

fn orbit_lengths<T: Copy + Eq + std::hash::Hash>(items: &[T], gens: &[Mat], act: impl Fn(&Mat, T) -> T) -> Vec<usize> {
    let index: HashMap<T, usize> = items.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut lengths = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut len = 0;
        while let Some(i) = stack.pop() {
            len += 1;
            for g in gens {
                let j = index[&act(g, items[i])];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// Orbits of `G` on the ψ(m) cyclic subgroups of order m.
pub fn cyclic_subgroup_orbits(g: &MatrixGroup) -> OrbitReport {
    let m = g.modulus();
    let reps: Vec<(u32, u32)> = cyclic_subgroup_reps(m).iter().map(|r| r.generator).collect();
    let lengths = orbit_lengths(&reps, g.generators(), |h, v| canonical_cyclic(m, h.apply(v)));
    OrbitReport { group_order: g.order(), acted_on: reps.len(), lengths }
}

/// Orbits of `G` on vectors of exact order m.
pub fn point_orbits(g: &MatrixGroup) -> OrbitReport {
    let m = g.modulus();
    let pts: Vec<(u32, u32)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&v| has_full_order(m, v)).collect();
    let lengths = orbit_lengths(&pts, g.generators(), |h, v| h.apply(v));
    OrbitReport { group_order: g.order(), acted_on: pts.len(), lengths }
}

/// Pairs `(point orbit length, length of the cyclic-subgroup orbit below it)`.
pub fn point_over_line_lengths(g: &MatrixGroup) -> Vec<(usize, usize)> {
    let m = g.modulus();
    let gens = g.generators();
    let pts: Vec<(u32, u32)> = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).filter(|&v| has_full_order(m, v)).collect();
    let mut out = Vec::new();
    let mut done = std::collections::HashSet::new();
    for &v in &pts {
        if done.contains(&v) {
            continue;
        }
        let orbit = orbit_set(v, gens, |h, w| h.apply(w));
        let line = canonical_cyclic(m, v);
        let lorbit = orbit_set(line, gens, |h, w| canonical_cyclic(m, h.apply(w)));
        out.push((orbit.len(), lorbit.len()));
        done.extend(orbit);
    }
    out.sort_unstable();
    out
}

fn orbit_set(start: (u32, u32), gens: &[Mat], act: impl Fn(&Mat, (u32, u32)) -> (u32, u32)) -> Vec<(u32, u32)> {
    let mut seen = std::collections::HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for g in gens {
            let w = act(g, v);
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_counts_match_psi() {
        for m in [2u32, 3, 4, 5, 7, 8, 9, 12, 25, 27, 49] {
            assert_eq!(cyclic_subgroup_reps(m).len() as u64, psi(m as u64), "m = {m}");
        }
        assert_eq!(psi(49), 56);
        assert_eq!(psi(2), 3);
        assert_eq!(psi(27), 36);
    }

    #[test]
    fn canonical_form_is_unit_invariant() {
        let m = 25;
        for x in 0..m {
            for y in 0..m {
                if !has_full_order(m, (x, y)) {
                    continue;
                }
                let c = canonical_cyclic(m, (x, y));
                assert_eq!(canonical_cyclic(m, (2 * x % m, 2 * y % m)), c);
            }
        }
    }
}
