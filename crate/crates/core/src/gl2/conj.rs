//! Conjugacy in GL₂(ℤ/mℤ) by filtered exhaustive search.
//!
//! For a prime-power modulus `p^k` the search climbs the tower
//! `p, p², …, p^k`: a conjugator modulo `p^k` reduces to one modulo `p^(k-1)`,
//! so only lifts of lower-level solutions are tried. The scan order (lower
//! level solutions in code order, then lifts in code order) is fixed, and the
//! first witness in that order is returned regardless of thread scheduling.

use rayon::prelude::*;

use super::group::{MatrixGroup, REALIZATION_CAP};
use super::mat::{gl2_order, Mat};
use crate::error::{Error, Result};
use crate::exact::factor_small;

fn conjugates_into(g: &Mat, gens: &[Mat], target: &MatrixGroup) -> bool {
    let gi = g.inv();
    gens.iter().all(|h| target.contains(&g.mul(h).mul(&gi)))
}

fn all_invertible(m: u32) -> impl ParallelIterator<Item = Mat> {
    (0..m.pow(4)).into_par_iter().map(move |c| Mat::from_code(m, c)).filter(|g| g.is_invertible())
}

/// Lifts of `g` from modulus `m` to `m·p`, in code order of the correction.
fn lifts(g: &Mat, m: u32, p: u32) -> impl Iterator<Item = Mat> + '_ {
    let big = m * p;
    (0..p.pow(4)).map(move |e| {
        let (e0, e1, e2, e3) = (e % p, e / p % p, e / (p * p) % p, e / (p * p * p));
        Mat { m: big, a: g.a + m * e0, b: g.b + m * e1, c: g.c + m * e2, d: g.d + m * e3 }
    })
}

/// Every conjugator modulo `p^level` of the reduced generators into the
/// reduced target, in scan order.
fn all_solutions(gens: &[Mat], target: &MatrixGroup, p: u32, level: u32) -> Vec<Mat> {
    let m = p.pow(level);
    let tr = target.reduce_mod(m).expect("divisor");
    let gr: Vec<Mat> = gens.iter().map(|h| h.reduce(m)).collect();
    if level == 1 {
        let mut v: Vec<Mat> = all_invertible(m).filter(|g| conjugates_into(g, &gr, &tr)).collect();
        v.sort_by_key(Mat::code);
        return v;
    }
    let lower = all_solutions(gens, target, p, level - 1);
    let pm = p.pow(level - 1);
    lower.par_iter().flat_map_iter(|g| lifts(g, pm, p).filter(|h| conjugates_into(h, &gr, &tr)).collect::<Vec<_>>()).collect()
}

fn find_conjugator(gens: &[Mat], target: &MatrixGroup) -> Option<Mat> {
    let m = target.modulus();
    // The identity is tried before the scan proper.
    if gens.is_empty() || conjugates_into(&Mat::identity(m), gens, target) {
        return Some(Mat::identity(m));
    }
    match factor_small(m as u64).as_slice() {
        [(p, k)] if *k >= 2 => {
            let p = *p as u32;
            let lower = all_solutions(gens, target, p, k - 1);
            let pm = p.pow(k - 1);
            lower.par_iter().find_map_first(|g| lifts(g, pm, p).find(|h| conjugates_into(h, gens, target)))
        }
        _ => all_invertible(m).find_first(|g| conjugates_into(g, gens, target)),
    }
}

/// A witness `g` with `g G₁ g⁻¹ = G₂`, if the groups are conjugate.
pub fn is_conjugate(g1: &MatrixGroup, g2: &MatrixGroup) -> Option<Mat> {
    if g1.modulus() != g2.modulus() || g1.order() != g2.order() {
        return None;
    }
    if g1.fingerprint() != g2.fingerprint() {
        return None;
    }
    find_conjugator(g1.generators(), g2)
}

/// A witness `g` with `g G g⁻¹ ⊆ T`, or `None` when no conjugate of `G` lies in `T`.
pub fn conjugate_into(g: &MatrixGroup, t: &MatrixGroup) -> Result<Option<Mat>> {
    if g.modulus() != t.modulus() {
        return Err(Error::ModulusMismatch { expected: t.modulus(), found: g.modulus() });
    }
    if gl2_order(t.modulus()) > REALIZATION_CAP as u64 {
        return Err(Error::SizeLimit(REALIZATION_CAP));
    }
    if t.order() % g.order() != 0 {
        return Ok(None);
    }
    let ht = &t.fingerprint().order_histogram;
    for (k, c) in &g.fingerprint().order_histogram {
        let ct = ht.iter().find(|(kt, _)| kt == k).map_or(0, |x| x.1);
        if *c > ct {
            return Ok(None);
        }
    }
    Ok(find_conjugator(g.generators(), t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl2::group::group_closure;
    use crate::gl2::standard::{standard_group, StandardName};

    #[test]
    fn reflexive_and_swap() {
        let b = standard_group(StandardName::Borel, 7).unwrap();
        assert!(is_conjugate(&b, &b).is_some());
        let diag = group_closure(&[Mat::diag(5, 2, 1)], 5).unwrap();
        let w = Mat::new(5, 0, 1, 1, 0);
        let anti = diag.conjugate(&w);
        assert_ne!(diag, anti);
        let g = is_conjugate(&diag, &anti).unwrap();
        assert_eq!(diag.conjugate(&g), anti);
    }

    #[test]
    fn into_examples() {
        let sc = standard_group(StandardName::Scalars, 49).unwrap();
        let ns = standard_group(StandardName::SplitCartanNormalizer, 49).unwrap();
        assert_eq!(conjugate_into(&sc, &ns).unwrap(), Some(Mat::identity(49)));
        let full = standard_group(StandardName::Full, 7).unwrap();
        let b = standard_group(StandardName::Borel, 7).unwrap();
        assert_eq!(conjugate_into(&full, &b).unwrap(), None);
    }

    #[test]
    fn nonsplit_choices_are_conjugate() {
        // Replacing ε by another non-residue gives a conjugate group.
        let m = 7;
        let els: Vec<Mat> = (0..7)
            .flat_map(|a| (0..7).map(move |b| (a, b)))
            .filter(|&(a, b)| a != 0 || b != 0)
            .map(|(a, b)| Mat::new(m, a, 5 * b, b, a))
            .collect();
        let other = crate::gl2::standard::from_element_set(m, els).unwrap();
        let std = standard_group(StandardName::NonsplitCartan, 7).unwrap();
        assert!(is_conjugate(&other, &std).is_some());
    }
}
