//! Enumeration of subgroups of GL₂(ℤ/p²ℤ) reducing onto a given G ≤ GL₂(𝔽ₚ).
//!
//! A lift H is determined by K = H ∩ V (a G-stable subspace) and images
//! `g̃ᵢ(I + pAᵢ)` of a fixed generating tuple of G with `Aᵢ ∈ V/K`.
//! Tuples are taken up to conjugation by V, which acts by
//! `Aᵢ ↦ Aᵢ + gᵢ⁻¹Cgᵢ − C`, and filtered by the order relation
//! `h_i^{ord gᵢ} ∈ I + pK` before any closure is attempted. Subspaces K are
//! taken up to the normalizer of G.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::kernel::{self, all_subspaces, Subspace, Vector};
use crate::error::{Error, Result};
use crate::gl2::group::{group_closure_capped, MatrixGroup};
use crate::gl2::{is_conjugate, Fingerprint, Mat};

/// G-stable subspaces of V under `A ↦ gAg⁻¹`.
pub fn stable_subspaces(g: &MatrixGroup, p: u32) -> Result<Vec<Subspace>> {
    if g.modulus() != p {
        return Err(Error::ModulusMismatch { expected: p, found: g.modulus() });
    }
    Ok(all_subspaces(p).into_iter().filter(|k| g.generators().iter().all(|h| k.is_stable_under(h))).collect())
}

/// Normalizer of G in GL₂(𝔽ₚ), by exhaustive search.
pub fn normalizer(g: &MatrixGroup) -> Vec<Mat> {
    let m = g.modulus();
    (0..m.pow(4))
        .map(|c| Mat::from_code(m, c))
        .filter(|n| n.is_invertible())
        .filter(|n| {
            let ni = n.inv();
            g.generators().iter().all(|h| g.contains(&n.mul(h).mul(&ni)))
        })
        .collect()
}

/// Lifting `x ∈ GL₂(𝔽ₚ)` to GL₂(ℤ/p²ℤ) with the same entries.
fn naive_lift(p: u32, x: &Mat) -> Mat {
    Mat { m: p * p, a: x.a, b: x.b, c: x.c, d: x.d }
}

struct Generator {
    lift: Mat,
    inv: Mat,
    order: u64,
}

/// All lifts with kernel intersection exactly `k`, one per V-conjugacy class
/// of generator tuples.
fn lifts_for_kernel(g: &MatrixGroup, p: u32, k: &Subspace) -> Result<Vec<(MatrixGroup, usize)>> {
    let n = g.order() as u64;
    let factors = crate::exact::factor_small(n);
    let gens: Vec<Generator> =
        g.generators().iter().map(|x| Generator { lift: naive_lift(p, x), inv: x.inv(), order: x.order_dividing(n, &factors) }).collect();
    let reps = k.quotient_reps();
    // Candidate images per generator satisfying the order relation.
    let candidates: Vec<Vec<Vector>> = gens
        .iter()
        .map(|gen| {
            reps.iter()
                .copied()
                .filter(|a| {
                    let h = gen.lift.mul(&kernel::kernel_element(p, a));
                    kernel::kernel_vector(p, &h.pow(gen.order)).is_some_and(|v| k.contains(&v))
                })
                .collect()
        })
        .collect();
    let all_v: Vec<Vector> = (0..p.pow(4)).map(|i| kernel::from_index(p, i)).collect();
    let mut tuples = Vec::new();
    extend_tuples(p, k, &gens, &candidates, 0, all_v, &mut Vec::new(), &mut tuples);

    let target = g.order() * k.size();
    let kernel_gens: Vec<Mat> = k.basis.iter().map(|v| kernel::kernel_element(p, v)).collect();
    let mut out = Vec::new();
    for tuple in tuples {
        let mut hs: Vec<Mat> = gens.iter().zip(&tuple).map(|(gen, a)| gen.lift.mul(&kernel::kernel_element(p, a))).collect();
        hs.extend(kernel_gens.iter().copied());
        match group_closure_capped(&hs, p * p, target) {
            Ok(h) if h.order() == target => out.push((h, k.dim())),
            Ok(_) | Err(Error::SizeLimit(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Chooses `Aᵢ` up to the translation action of the current stabilizer in V.
#[allow(clippy::too_many_arguments)]
fn extend_tuples(
    p: u32,
    k: &Subspace,
    gens: &[Generator],
    candidates: &[Vec<Vector>],
    i: usize,
    stab: Vec<Vector>,
    chosen: &mut Vec<Vector>,
    out: &mut Vec<Vec<Vector>>,
) {
    if i == gens.len() {
        out.push(chosen.clone());
        return;
    }
    let gi = &gens[i];
    // D(C) = gᵢ⁻¹ C gᵢ − C, reduced mod K.
    let shift = |c: &Vector| {
        let conj = kernel::conjugate(p, &gi.inv, c);
        k.reduce(&kernel::add(p, &conj, &kernel::neg(p, c)))
    };
    let shifts: BTreeSet<Vector> = stab.iter().map(shift).collect();
    let mut seen = BTreeSet::new();
    let mut orbit_reps = Vec::new();
    for a in &candidates[i] {
        if seen.contains(a) {
            continue;
        }
        let orbit: Vec<Vector> = shifts.iter().map(|s| k.reduce(&kernel::add(p, a, s))).collect();
        let rep = *orbit.iter().min_by_key(|v| kernel::index(p, v)).unwrap();
        seen.extend(orbit);
        orbit_reps.push(rep);
    }
    orbit_reps.sort_by_key(|v| kernel::index(p, v));
    let next_stab: Vec<Vector> = stab.into_iter().filter(|c| shift(c) == [0; 4]).collect();
    for rep in orbit_reps {
        chosen.push(rep);
        extend_tuples(p, k, gens, candidates, i + 1, next_stab.clone(), chosen, out);
        chosen.pop();
    }
}

/// One conjugacy class of lifts.
#[derive(Clone, Debug)]
pub struct LiftClass {
    pub representative: MatrixGroup,
    pub order: usize,
    /// dim of H ∩ V.
    pub kernel_dim: usize,
}

#[derive(Clone, Debug)]
pub struct LiftEnumeration {
    pub prime: u32,
    pub target_order: usize,
    pub stable_subspaces: usize,
    pub kernel_orbits: usize,
    /// Lifts found before conjugacy deduplication.
    pub candidates: usize,
    pub classes: Vec<LiftClass>,
}

/// Subgroups H ≤ GL₂(ℤ/p²ℤ) with reduction exactly G, up to conjugacy.
pub fn lift_subgroups(g: &MatrixGroup, p: u32) -> Result<LiftEnumeration> {
    if !matches!(p, 3 | 5 | 7) {
        return Err(Error::UnsupportedModulus { modulus: p as u64, reason: "lifting is supported for p ∈ {3, 5, 7}" });
    }
    let stable = stable_subspaces(g, p)?;
    let norm = normalizer(g);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for k in &stable {
        if seen.contains(k) {
            continue;
        }
        for n in &norm {
            seen.insert(k.conjugate(n));
        }
        reps.push(k.clone());
    }
    let found: Vec<Vec<(MatrixGroup, usize)>> = reps.par_iter().map(|k| lifts_for_kernel(g, p, k)).collect::<Result<_>>()?;
    let mut all: Vec<(MatrixGroup, usize)> = found.into_iter().flatten().collect();
    let candidates = all.len();
    all.par_iter().for_each(|(h, _)| {
        h.fingerprint();
    });
    all.sort_by(|a, b| key(a).cmp(&key(b)));
    let classes = dedupe(all);
    Ok(LiftEnumeration {
        prime: p,
        target_order: g.order(),
        stable_subspaces: stable.len(),
        kernel_orbits: reps.len(),
        candidates,
        classes,
    })
}

fn key(x: &(MatrixGroup, usize)) -> (usize, Fingerprint, &[u32]) {
    (x.1, x.0.fingerprint().clone(), x.0.codes())
}

/// Keeps one representative per conjugacy class; input sorted by fingerprint.
pub(crate) fn dedupe(sorted: Vec<(MatrixGroup, usize)>) -> Vec<LiftClass> {
    let mut classes: Vec<LiftClass> = Vec::new();
    let mut block_start = 0;
    for (h, kd) in sorted {
        if classes.last().is_some_and(|c| c.kernel_dim != kd || c.representative.fingerprint() != h.fingerprint()) {
            block_start = classes.len();
        }
        let dup = classes[block_start..].par_iter().any(|c| is_conjugate(&h, &c.representative).is_some());
        if !dup {
            classes.push(LiftClass { order: h.order(), kernel_dim: kd, representative: h });
        }
    }
    classes.sort_by(|a, b| {
        (a.order, a.kernel_dim, a.representative.fingerprint()).cmp(&(b.order, b.kernel_dim, b.representative.fingerprint()))
    });
    classes
}
