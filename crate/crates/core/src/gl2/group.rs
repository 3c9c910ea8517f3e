//! Realized subgroups of GL₂(ℤ/mℤ).

use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use super::mat::{gl2_order, Mat, MAX_MODULUS};
use crate::error::{Error, Result};
use crate::exact::factor_small;

/// Default refusal threshold for explicit realization.
pub const REALIZATION_CAP: usize = 10_000_000;

/// Conjugation-invariant summary used to reject conjugacy queries cheaply.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub order_histogram: Vec<(u64, usize)>,
    pub scalar_order: usize,
    /// Sorted orbit lengths on cyclic subgroups of order m.
    pub orbit_signature: Vec<usize>,
}

/// A subgroup of GL₂(ℤ/mℤ) stored as a membership bitset over matrix codes.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    modulus: u32,
    generators: Vec<Mat>,
    bits: Vec<u64>,
    elements: Vec<u32>,
    fingerprint: OnceLock<Fingerprint>,
}

impl PartialEq for MatrixGroup {
    fn eq(&self, o: &Self) -> bool {
        self.modulus == o.modulus && self.elements == o.elements
    }
}

impl Eq for MatrixGroup {}

fn check_generator(g: &Mat, m: u32) -> Result<()> {
    if g.m != m {
        return Err(Error::ModulusMismatch { expected: m, found: g.m });
    }
    if !g.is_invertible() {
        return Err(Error::InvalidGenerator { matrix: g.to_string(), reason: format!("determinant {} is not a unit", g.det()) });
    }
    Ok(())
}

fn check_modulus(m: u32) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&m) {
        return Err(Error::UnsupportedModulus { modulus: m as u64, reason: "modulus must lie in 2..=255" });
    }
    Ok(())
}

/// Breadth-first closure of `gens` modulo `m`.
pub fn group_closure(gens: &[Mat], m: u32) -> Result<MatrixGroup> {
    group_closure_capped(gens, m, REALIZATION_CAP)
}

/// As [`group_closure`], refusing groups with more than `cap` elements.
pub fn group_closure_capped(gens: &[Mat], m: u32, cap: usize) -> Result<MatrixGroup> {
    check_modulus(m)?;
    for g in gens {
        check_generator(g, m)?;
    }
    let words = (m as usize).pow(4).div_ceil(64);
    let mut bits = vec![0u64; words];
    let id = Mat::identity(m);
    let mut queue = VecDeque::from([id]);
    let mut count = 1;
    set(&mut bits, id.code());
    let gens: Vec<Mat> = gens.iter().copied().filter(|g| !g.is_identity()).collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.mul(g);
            let c = y.code();
            if !get(&bits, c) {
                set(&mut bits, c);
                count += 1;
                if count > cap {
                    return Err(Error::SizeLimit(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(MatrixGroup::from_bits(m, gens, bits))
}

#[inline]
fn get(bits: &[u64], c: u32) -> bool {
    bits[(c >> 6) as usize] >> (c & 63) & 1 == 1
}

#[inline]
fn set(bits: &mut [u64], c: u32) {
    bits[(c >> 6) as usize] |= 1 << (c & 63);
}

impl MatrixGroup {
    fn from_bits(modulus: u32, generators: Vec<Mat>, bits: Vec<u64>) -> Self {
        let mut elements = Vec::new();
        for (w, &word) in bits.iter().enumerate() {
            let mut x = word;
            while x != 0 {
                let t = x.trailing_zeros();
                elements.push((w as u32) * 64 + t);
                x &= x - 1;
            }
        }
        MatrixGroup { modulus, generators, bits, elements, fingerprint: OnceLock::new() }
    }

    /// Builds a group from an element list already known to be a subgroup.
    pub(crate) fn from_elements(modulus: u32, generators: Vec<Mat>, codes: &[u32]) -> Self {
        let words = (modulus as usize).pow(4).div_ceil(64);
        let mut bits = vec![0u64; words];
        for &c in codes {
            set(&mut bits, c);
        }
        Self::from_bits(modulus, generators, bits)
    }

    pub fn trivial(m: u32) -> Result<Self> {
        group_closure(&[], m)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    /// Element codes in ascending order.
    pub fn codes(&self) -> &[u32] {
        &self.elements
    }

    pub fn elements(&self) -> impl Iterator<Item = Mat> + '_ {
        let m = self.modulus;
        self.elements.iter().map(move |&c| Mat::from_code(m, c))
    }

    pub fn contains(&self, g: &Mat) -> bool {
        g.m == self.modulus && get(&self.bits, g.code())
    }

    pub fn contains_code(&self, c: u32) -> bool {
        get(&self.bits, c)
    }

    pub fn is_subgroup_of(&self, o: &MatrixGroup) -> bool {
        self.modulus == o.modulus
            && self.order() <= o.order()
            && o.order() % self.order() == 0
            && self.generators.iter().all(|g| o.contains(g))
    }

    /// Entrywise reduction to a divisor `m2` of the modulus.
    pub fn reduce_mod(&self, m2: u32) -> Result<MatrixGroup> {
        if m2 < 2 || self.modulus % m2 != 0 {
            return Err(Error::invalid(format!("{m2} does not divide the modulus {}", self.modulus)));
        }
        if m2 == self.modulus {
            return Ok(self.clone());
        }
        let gens: Vec<Mat> = self.generators.iter().map(|g| g.reduce(m2)).collect();
        let words = (m2 as usize).pow(4).div_ceil(64);
        let mut bits = vec![0u64; words];
        for g in self.elements() {
            set(&mut bits, g.reduce(m2).code());
        }
        Ok(MatrixGroup::from_bits(m2, gens, bits))
    }

    /// Number of scalars `λI` in the group with `λ ≡ 1 (mod p)`.
    pub fn scalar_count(&self, p: u32) -> Result<usize> {
        let m = self.modulus;
        if p == 0 || m % p != 0 {
            return Err(Error::invalid(format!("{p} does not divide the modulus {m}")));
        }
        Ok((0..m / p).filter(|k| self.contains(&Mat::scalar(m, (1 + k * p) as i64))).count())
    }

    /// Number of scalar matrices in the group.
    pub fn scalar_order(&self) -> usize {
        let m = self.modulus;
        (1..m).filter(|&l| self.contains(&Mat::scalar(m, l as i64))).count()
    }

    /// Histogram of element orders.
    pub fn order_histogram(&self) -> Vec<(u64, usize)> {
        let n = self.order() as u64;
        let factors = factor_small(n);
        let mut hist = BTreeMap::new();
        for g in self.elements() {
            *hist.entry(g.order_dividing(n, &factors)).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    pub fn fingerprint(&self) -> &Fingerprint {
        self.fingerprint.get_or_init(|| {
            let orbits = super::orbits::cyclic_subgroup_orbits(self);
            let mut sig = orbits.lengths;
            sig.sort_unstable();
            Fingerprint {
                order: self.order(),
                order_histogram: self.order_histogram(),
                scalar_order: self.scalar_order(),
                orbit_signature: sig,
            }
        })
    }

    /// Index of the group in GL₂(ℤ/mℤ).
    pub fn index_in_gl2(&self) -> u64 {
        gl2_order(self.modulus) / self.order() as u64
    }

    /// The conjugate `g G g⁻¹`.
    pub fn conjugate(&self, g: &Mat) -> MatrixGroup {
        let gi = g.inv();
        let gens = self.generators.iter().map(|h| g.mul(h).mul(&gi)).collect();
        let codes: Vec<u32> = self.elements().map(|h| g.mul(&h).mul(&gi).code()).collect();
        MatrixGroup::from_elements(self.modulus, gens, &codes)
    }

    /// All subgroups of index 2: the kernels of the nontrivial homomorphisms
    /// to {±1}, sorted by element codes.
    pub fn index_two_subgroups(&self) -> Result<Vec<MatrixGroup>> {
        let m = self.modulus;
        // The squares generate a normal subgroup S with G/S elementary abelian
        // of exponent 2; collect a minimal generating set while closing.
        let mut sgens = Vec::new();
        let mut s = MatrixGroup::trivial(m)?;
        for x in self.elements() {
            let sq = x.mul(&x);
            if !s.contains(&sq) {
                sgens.push(sq);
                s = group_closure(&sgens, m)?;
            }
        }
        let mut basis: Vec<Mat> = Vec::new();
        let mut gens = sgens.clone();
        let mut cur = s;
        for x in self.elements() {
            if !cur.contains(&x) {
                basis.push(x);
                gens.push(x);
                cur = group_closure(&gens, m)?;
            }
        }
        let mut out = Vec::new();
        for c in 1u32..(1 << basis.len()) {
            let pivot = c.trailing_zeros() as usize;
            let mut kgens = sgens.clone();
            for (i, b) in basis.iter().enumerate() {
                if c >> i & 1 == 0 {
                    kgens.push(*b);
                } else if i != pivot {
                    kgens.push(basis[pivot].mul(b));
                }
            }
            let h = group_closure(&kgens, m)?;
            if h.order() * 2 != self.order() {
                return Err(Error::Integrity(format!("kernel of order {} in a group of order {}", h.order(), self.order())));
            }
            out.push(h);
        }
        out.sort_by(|a, b| a.codes().cmp(b.codes()));
        Ok(out)
    }

    /// Whether the group contains every scalar.
    pub fn contains_all_scalars(&self) -> bool {
        self.scalar_order() == super::mat::unit_count(self.modulus) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_closures() {
        let g = group_closure(&[Mat::new(5, 0, 1, 1, 0)], 5).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(group_closure(&[], 9).unwrap().order(), 1);
        // SL₂(𝔽₇) from the two elementary unipotents.
        let sl = group_closure(&[Mat::new(7, 1, 1, 0, 1), Mat::new(7, 1, 0, 1, 1)], 7).unwrap();
        assert_eq!(sl.order(), 7 * 48);
        assert!(sl.elements().all(|h| h.det() == 1));
    }

    #[test]
    fn closure_errors() {
        assert!(matches!(group_closure(&[Mat::new(9, 3, 0, 0, 1)], 9), Err(Error::InvalidGenerator { .. })));
        assert!(matches!(group_closure(&[Mat::new(5, 1, 1, 0, 1)], 7), Err(Error::ModulusMismatch { expected: 7, found: 5 })));
        let full7 = [Mat::new(7, 3, 0, 0, 1), Mat::new(7, 1, 1, 0, 1), Mat::new(7, 1, 0, 1, 1)];
        assert!(matches!(group_closure_capped(&full7, 7, 100), Err(Error::SizeLimit(100))));
    }

    #[test]
    fn index_two_subgroups() {
        // GL₂(𝔽₃) has abelianization of order 2; its unique index-2 subgroup is SL₂(𝔽₃).
        let gl3 = group_closure(&[Mat::new(3, 2, 0, 0, 1), Mat::new(3, 1, 1, 0, 1), Mat::new(3, 1, 0, 1, 1)], 3).unwrap();
        assert_eq!(gl3.order(), 48);
        let subs = gl3.index_two_subgroups().unwrap();
        assert_eq!(subs.len(), 1);
        assert!(subs[0].elements().all(|h| h.det() == 1));
        // Klein four-group of diagonal signs mod 5: three index-2 subgroups.
        let v4 = group_closure(&[Mat::diag(5, -1, 1), Mat::diag(5, 1, -1)], 5).unwrap();
        assert_eq!(v4.index_two_subgroups().unwrap().len(), 3);
        // Odd order: none.
        let c3 = group_closure(&[Mat::new(7, 2, 0, 0, 1)], 7).unwrap();
        assert!(c3.index_two_subgroups().unwrap().is_empty());
    }

    #[test]
    fn scalar_counts() {
        let t = MatrixGroup::trivial(49).unwrap();
        assert_eq!(t.scalar_count(7).unwrap(), 1);
        assert!(t.scalar_count(5).is_err());
        let s = group_closure(&[Mat::scalar(9, 2)], 9).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s.reduce_mod(3).unwrap().order(), 2);
        assert!(s.reduce_mod(4).is_err());
    }
}
