//! Factorization over ℚ: squarefree decomposition, factorization modulo a
//! good prime, multifactor Hensel lifting and Zassenhaus recombination.
//! Also degree-pattern certificates that bound factor degrees from mod-p data
//! alone.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly_fp::{factor_mod_p, PolyFp};
use super::poly_q::PolyQ;
use super::primes_from;
use super::rational::{squarefree_part, Rational};
use super::zpoly::{self, ZPoly};
use crate::error::{Error, Result};

/// How an irreducible factor was shown to be irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Irreducibility {
    Linear,
    /// Irreducible modulo a prime that preserves its degree.
    ModPIrreducible {
        p: u64,
    },
    /// No proper subset of the lifted modular factors gave a divisor.
    Zassenhaus {
        p: u64,
        lifted_to: u32,
    },
    /// Mod-p degree patterns at these primes admit no proper factor degree.
    DegreePatterns {
        primes: Vec<u64>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorQ {
    /// Primitive integer polynomial with positive leading coefficient.
    pub poly: PolyQ,
    pub multiplicity: u32,
    pub certificate: Irreducibility,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationQ {
    pub content: Rational,
    pub factors: Vec<FactorQ>,
}

impl FactorizationQ {
    /// `content × ∏ factor^multiplicity`.
    pub fn reconstruct(&self) -> PolyQ {
        self.factors.iter().fold(PolyQ::constant(self.content.clone()), |acc, f| &acc * &f.poly.pow(f.multiplicity))
    }

    /// Factor degrees with multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.factors.iter().flat_map(|f| std::iter::repeat_n(f.poly.deg(), f.multiplicity as usize)).collect();
        out.sort_unstable();
        out
    }
}

/// Squarefree decomposition of a primitive integer polynomial (Yun over ℚ).
/// Every returned part is primitive with positive leading coefficient.
fn squarefree_parts(f: &PolyQ) -> Vec<(ZPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    // Squarefree modulo a prime not dividing the leading coefficient implies
    // squarefree over ℚ, which spares the rational gcd on large inputs.
    let g = f.primitive_part().1;
    if primes_from(5).take(SQUAREFREE_PROBES).any(|p| good_for(&g, p).is_some()) {
        out.push((g, 1));
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let mut d = &df.div_rem(&a0).0 - &b.derivative();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &nb.derivative();
        if a.deg() > 0 {
            out.push((a.primitive_part().1, i));
        }
        b = nb;
        i += 1;
    }
    out
}

fn good_for(g: &[BigInt], p: u64) -> Option<PolyFp> {
    let fp = PolyFp::from_bigints(p, g);
    (fp.deg() == zpoly::deg(g) && fp.is_squarefree()).then_some(fp)
}

/// Subset sums of a degree pattern (as a set).
fn subset_sums(pattern: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in pattern {
        let more: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(more);
    }
    sums
}

/// Primes tried by the modular squarefree test before falling back to Yun.
const SQUAREFREE_PROBES: usize = 30;
/// Good primes compared when choosing the Zassenhaus prime.
const LIFT_CANDIDATES: usize = 6;

/// Lifting data for one squarefree part.
struct Lifted {
    p: u64,
    exponent: u32,
    modulus: BigInt,
    factors: Vec<ZPoly>,
}

fn fp_to_z(f: &PolyFp) -> ZPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` to the
/// same relations modulo `m²`. `f`, `g`, `h` monic.
fn hensel_step(f: &[BigInt], g: &[BigInt], h: &[BigInt], s: &[BigInt], t: &[BigInt], m2: &BigInt) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = zpoly::reduce_mod(&zpoly::sub(f, &zpoly::mul(g, h)), m2);
    let (q, r) = zpoly::div_rem_monic_mod(&zpoly::mul(s, &e), h, m2);
    let g2 = zpoly::reduce_mod(
        &zpoly::sub(&zpoly::add_mod(g, &zpoly::mul(t, &e), m2), &zpoly::scale(&zpoly::mul(&q, g), &BigInt::from(-1))),
        m2,
    );
    let h2 = zpoly::add_mod(h, &r, m2);
    let b = zpoly::reduce_mod(&zpoly::sub(&zpoly::add_mod(&zpoly::mul(s, &g2), &zpoly::mul(t, &h2), m2), &[BigInt::one()]), m2);
    let (c, d) = zpoly::div_rem_monic_mod(&zpoly::mul(s, &b), &h2, m2);
    let s2 = zpoly::reduce_mod(&zpoly::sub(s, &d), m2);
    let t2 = zpoly::reduce_mod(&zpoly::sub(&zpoly::sub(t, &zpoly::mul(t, &b)), &zpoly::mul(&c, &g2)), m2);
    (g2, h2, s2, t2)
}

/// Lifts a factorization of the monic `f` (mod p) into monic factors modulo
/// `p^(2^steps)`, using a balanced factor tree.
fn multifactor_lift(f: &[BigInt], factors: &[PolyFp], p: u64, steps: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(1u32 << steps);
        return vec![zpoly::reduce_mod(f, &m)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[PolyFp]| fs.iter().fold(PolyFp::one(p), |a, b| a.mul(b));
    let (u, w) = (prod(left), prod(right));
    let (one, s, t) = u.xgcd(&w);
    debug_assert!(one.is_one());
    let (mut g, mut h, mut s, mut t) = (fp_to_z(&u), fp_to_z(&w), fp_to_z(&s), fp_to_z(&t));
    let mut m = BigInt::from(p);
    for _ in 0..steps {
        m = &m * &m;
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
    }
    let mut out = multifactor_lift(&g, left, p, steps);
    out.extend(multifactor_lift(&h, right, p, steps));
    out
}

fn lift_factors(g: &[BigInt], p: u64, modular: &[PolyFp]) -> Lifted {
    // Any integer factor of lc·(factor) has coefficients bounded by
    // |lc| 2^n ‖g‖₂; lift beyond twice that.
    let n = zpoly::deg(g);
    let lc = g.last().unwrap().abs();
    let bound = &lc * (BigInt::one() << n) * zpoly::norm2_ceil(g);
    let target = bound * 2u32;
    let mut steps = 0;
    let mut m = BigInt::from(p);
    while m <= target {
        m = &m * &m;
        steps += 1;
    }
    let bp = BigInt::from(p);
    let modulus = bp.pow(1u32 << steps);
    let lc_inv = mod_inverse(g.last().unwrap(), &modulus);
    let monic = zpoly::reduce_mod(&zpoly::scale(g, &lc_inv), &modulus);
    let factors = multifactor_lift(&monic, modular, p, steps);
    Lifted { p, exponent: 1u32 << steps, modulus, factors }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    use num_integer::Integer;
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "non-invertible leading coefficient");
    e.x.mod_floor(m)
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), first: true }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] != i + self.n - k {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
        None
    }
}

/// Degree-pattern data for a squarefree integer polynomial at several primes.
struct Patterns {
    primes: Vec<u64>,
    allowed: BTreeSet<usize>,
}

fn patterns(g: &[BigInt], count: usize, skip: u64) -> Patterns {
    let n = zpoly::deg(g);
    let mut allowed: BTreeSet<usize> = (0..=n).collect();
    let mut primes = Vec::new();
    for p in primes_from(5) {
        if primes.len() == count || p > 5000 {
            break;
        }
        if p == skip {
            continue;
        }
        if let Some(fp) = good_for(g, p) {
            let sums = subset_sums(&fp.degree_pattern());
            allowed = allowed.intersection(&sums).copied().collect();
            primes.push(p);
        }
    }
    Patterns { primes, allowed }
}

/// Factors one primitive squarefree part. With `max_degree` set, only factors
/// of at most that degree are searched for and returned.
fn zassenhaus(g: &[BigInt], max_degree: Option<usize>) -> Vec<(ZPoly, Irreducibility)> {
    let n = zpoly::deg(g);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![(g.to_vec(), Irreducibility::Linear)];
    }
    // Among the first few good primes, lift at the one with fewest local
    // factors (ties go to the smaller prime).
    let (p, modular) = primes_from(5)
        .filter_map(|p| good_for(g, p).map(|fp| (p, fp)))
        .take(LIFT_CANDIDATES)
        .map(|(p, fp)| {
            let fs: Vec<PolyFp> = factor_mod_p(&fp).expect("odd prime").into_iter().map(|(h, _)| h).collect();
            (p, fs)
        })
        .min_by_key(|(p, fs)| (fs.len(), *p))
        .expect("a squarefree polynomial has a good prime");
    if modular.len() == 1 {
        return if max_degree.is_none_or(|d| n <= d) { vec![(g.to_vec(), Irreducibility::ModPIrreducible { p })] } else { Vec::new() };
    }
    let pats = patterns(g, 5, p);
    if pats.allowed.iter().all(|&d| d == 0 || d == n) {
        return if max_degree.is_none_or(|d| n <= d) {
            vec![(g.to_vec(), Irreducibility::DegreePatterns { primes: pats.primes })]
        } else {
            Vec::new()
        };
    }
    let lifted = lift_factors(g, p, &modular);
    recombine(g, &lifted, &pats.allowed, max_degree)
}

fn recombine(g: &[BigInt], lifted: &Lifted, allowed: &BTreeSet<usize>, max_degree: Option<usize>) -> Vec<(ZPoly, Irreducibility)> {
    let cert = Irreducibility::Zassenhaus { p: lifted.p, lifted_to: lifted.exponent };
    let mut rest = g.to_vec();
    let mut pool: Vec<ZPoly> = lifted.factors.clone();
    let mut found = Vec::new();
    let m = &lifted.modulus;
    let mut k = 1;
    'outer: while 2 * k <= pool.len() || (max_degree.is_some() && k <= pool.len()) {
        for subset in Combinations::new(pool.len(), k) {
            let d: usize = subset.iter().map(|&i| zpoly::deg(&pool[i])).sum();
            if max_degree.is_some_and(|md| d > md) {
                continue;
            }
            if !allowed.contains(&d) {
                continue;
            }
            let lc = rest.last().unwrap().clone();
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = zpoly::mul_mod(&cand, &pool[i], m);
            }
            let cand = zpoly::primitive(&zpoly::symmetric_mod(&cand, m));
            if let Some(q) = zpoly::div_exact(&rest, &cand) {
                let c = if zpoly::deg(&cand) == 1 { Irreducibility::Linear } else { cert.clone() };
                found.push((cand, c));
                rest = q;
                let chosen: HashSet<usize> = subset.into_iter().collect();
                pool = pool.into_iter().enumerate().filter(|(i, _)| !chosen.contains(i)).map(|(_, f)| f).collect();
                continue 'outer;
            }
        }
        k += 1;
    }
    let rd = zpoly::deg(&rest);
    if rd > 0 && max_degree.is_none_or(|md| rd <= md) && !pool.is_empty() {
        let c = if rd == 1 { Irreducibility::Linear } else { cert };
        found.push((zpoly::primitive(&rest), c));
    }
    found
}

fn sort_factors(factors: &mut [FactorQ]) {
    factors.sort_by(|a, b| (a.poly.deg(), a.poly.coeffs()).cmp(&(b.poly.deg(), b.poly.coeffs())));
}

/// Complete factorization over ℚ into primitive integer irreducibles.
///
/// A constant input yields a content-only factorization; the zero polynomial
/// yields content 0 and no factors.
pub fn factor_over_q(f: &PolyQ) -> FactorizationQ {
    let (content, prim) = f.primitive_part();
    let prim = PolyQ::from_bigints(&prim);
    let mut factors = Vec::new();
    for (part, e) in squarefree_parts(&prim) {
        for (g, certificate) in zassenhaus(&part, None) {
            factors.push(FactorQ { poly: PolyQ::from_bigints(&g), multiplicity: e, certificate });
        }
    }
    sort_factors(&mut factors);
    FactorizationQ { content, factors }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowDegreeFactor {
    pub factor: FactorQ,
    /// The rational root of a linear factor.
    pub root: Option<Rational>,
    /// Discriminant of a quadratic factor.
    pub discriminant: Option<BigInt>,
    /// Squarefree `d` with the quadratic factor splitting over ℚ(√d).
    pub field_d: Option<BigInt>,
}

/// The irreducible factors of degree at most `dmax`, found by partial
/// recombination (subsets of small total degree only).
pub fn low_degree_factors(f: &PolyQ, dmax: usize) -> Vec<LowDegreeFactor> {
    let (_, prim) = f.primitive_part();
    let prim = PolyQ::from_bigints(&prim);
    let mut factors = Vec::new();
    for (part, e) in squarefree_parts(&prim) {
        for (g, certificate) in zassenhaus(&part, Some(dmax)) {
            factors.push(FactorQ { poly: PolyQ::from_bigints(&g), multiplicity: e, certificate });
        }
    }
    sort_factors(&mut factors);
    factors
        .into_iter()
        .map(|factor| {
            let c = factor.poly.coeffs();
            let (mut root, mut discriminant, mut field_d) = (None, None, None);
            match factor.poly.deg() {
                1 => root = Some(-&c[0] / &c[1]),
                2 => {
                    let (a, b, cc) = (c[2].to_integer(), c[1].to_integer(), c[0].to_integer());
                    let disc = &b * &b - BigInt::from(4) * a * cc;
                    field_d = Some(squarefree_part(&disc).0);
                    discriminant = Some(disc);
                }
                _ => {}
            }
            LowDegreeFactor { factor, root, discriminant, field_d }
        })
        .collect()
}

/// Outcome of degree-pattern certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCertificate {
    pub primes: Vec<u64>,
    /// Mod-p factor degree pattern per prime, ascending.
    pub patterns: Vec<Vec<usize>>,
    /// Degrees that every pattern can realize as a subset sum.
    pub allowed_degrees: Vec<usize>,
    /// Finest degree multisets compatible with every pattern.
    pub feasible: BTreeSet<Vec<usize>>,
    /// Set when the partition search hit its cap; `feasible` is then partial.
    pub truncated: bool,
}

impl DegreeCertificate {
    pub fn singleton(&self) -> Option<&Vec<usize>> {
        (!self.truncated && self.feasible.len() == 1).then(|| self.feasible.iter().next().unwrap())
    }
}

const PARTITION_CAP: usize = 200_000;

/// Certifies possible ℚ-factor degree multisets from mod-p degree patterns.
///
/// A multiset is feasible when its parts are allowed degrees and every
/// pattern can be grouped to produce it. Only the finest feasible multisets
/// are returned: the true factor degrees are always a grouping of one of them
/// and, when the set is a singleton whose parts are realized by actual
/// factors, they are the true degrees.
pub fn certify_factor_degrees(f: &PolyQ, primes: &[u64]) -> Result<DegreeCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.primitive_part().1;
    let n = zpoly::deg(&g);
    let mut pats = Vec::new();
    for &p in primes {
        let fp = PolyFp::from_bigints(p, &g);
        if p == 2 {
            return Err(Error::UnsupportedModulus { modulus: 2, reason: "characteristic 2 is not supported" });
        }
        if fp.deg() != n || !fp.is_squarefree() {
            return Err(Error::BadPrime(p));
        }
        pats.push(fp.degree_pattern());
    }
    let mut allowed: BTreeSet<usize> = (0..=n).collect();
    for pat in &pats {
        allowed = allowed.intersection(&subset_sums(pat)).copied().collect();
    }
    let parts: Vec<usize> = allowed.iter().copied().filter(|&d| d > 0).rev().collect();
    let mut feasible = Vec::new();
    let mut truncated = false;
    let mut current = Vec::new();
    enumerate_partitions(n, &parts, 0, &mut current, &mut |cand| {
        if pats.iter().all(|pat| refines(pat, cand)) {
            feasible.push(cand.to_vec());
        }
        if feasible.len() >= PARTITION_CAP {
            truncated = true;
            return false;
        }
        true
    });
    let finest: BTreeSet<Vec<usize>> = feasible
        .iter()
        .filter(|a| !feasible.iter().any(|b| b != *a && b.len() > a.len() && refines(b, a)))
        .map(|a| {
            let mut a = a.clone();
            a.sort_unstable();
            a
        })
        .collect();
    Ok(DegreeCertificate {
        primes: primes.to_vec(),
        patterns: pats,
        allowed_degrees: allowed.into_iter().collect(),
        feasible: finest,
        truncated,
    })
}

/// Partitions of `n` into parts from `parts` (descending), non-increasing.
/// The callback returns `false` to stop.
fn enumerate_partitions(n: usize, parts: &[usize], start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if n == 0 {
        return visit(cur);
    }
    for i in start..parts.len() {
        let d = parts[i];
        if d <= n {
            cur.push(d);
            let go_on = enumerate_partitions(n - d, parts, i, cur, visit);
            cur.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// Whether the multiset `fine` can be grouped into blocks summing to the
/// parts of `coarse`.
pub(crate) fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    if fine.iter().sum::<usize>() != coarse.iter().sum::<usize>() {
        return false;
    }
    let maxd = fine.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; maxd + 1];
    for &d in fine {
        counts[d] += 1;
    }
    let mut targets = coarse.to_vec();
    targets.sort_unstable_by(|a, b| b.cmp(a));
    let mut failed = HashSet::new();
    fill(&mut counts, &targets, 0, &mut failed)
}

fn fill(counts: &mut Vec<u32>, targets: &[usize], t: usize, failed: &mut HashSet<(usize, Vec<u32>)>) -> bool {
    if t == targets.len() {
        return counts.iter().all(|&c| c == 0);
    }
    if failed.contains(&(t, counts.clone())) {
        return false;
    }
    let ok = pick(counts, targets, t, targets[t], counts.len() - 1, failed);
    if !ok {
        failed.insert((t, counts.clone()));
    }
    ok
}

/// Chooses a sub-multiset summing to `need` using degrees ≤ `top`, then moves
/// on to the next target.
fn pick(counts: &mut Vec<u32>, targets: &[usize], t: usize, need: usize, top: usize, failed: &mut HashSet<(usize, Vec<u32>)>) -> bool {
    if need == 0 {
        return fill(counts, targets, t + 1, failed);
    }
    let mut d = top.min(need);
    while d >= 1 {
        if counts[d] > 0 {
            counts[d] -= 1;
            let ok = pick(counts, targets, t, need - d, d, failed);
            counts[d] += 1;
            if ok {
                return true;
            }
        }
        d -= 1;
    }
    false
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &PolyQ) -> Vec<Rational> {
    let mut roots: Vec<Rational> = low_degree_factors(f, 1).into_iter().filter_map(|l| l.root).collect();
    roots.sort();
    roots
}

/// Brute-force rational root search over ±(divisors of a₀)/(divisors of aₙ).
/// Independent of the factorization engine; used as a test oracle.
pub fn rational_roots_bruteforce(f: &PolyQ) -> Vec<Rational> {
    let g = f.primitive_part().1;
    let mut roots = BTreeSet::new();
    let mut g = g;
    // Strip powers of x so that a₀ ≠ 0.
    if g.first().is_some_and(Zero::is_zero) {
        roots.insert(Rational::zero());
        while g.first().is_some_and(Zero::is_zero) {
            g.remove(0);
        }
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    if g.len() > 1 {
        for a in divisors(&g[0]) {
            for b in divisors(g.last().unwrap()) {
                for s in [1i32, -1] {
                    let r = Rational::new(&a * BigInt::from(s), b.clone());
                    let v = PolyQ::from_bigints(&g).eval(&r);
                    if v.is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
    }
    roots.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_ints(cs)
    }

    #[test]
    fn difference_of_squares() {
        let fz = factor_over_q(&p(&[-1, 0, 1]));
        assert_eq!(fz.factors.len(), 2);
        assert_eq!(fz.factors[0].poly, p(&[-1, 1]));
        assert_eq!(fz.factors[1].poly, p(&[1, 1]));
        assert_eq!(fz.reconstruct(), p(&[-1, 0, 1]));
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        // Reducible modulo every prime, so only recombination can certify it.
        let fz = factor_over_q(&p(&[1, 0, 0, 0, 1]));
        assert_eq!(fz.degrees(), vec![4]);
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (x² − 2)(x² − 3)(x² − 5)(x − 7)^2 · 6/5
        let f = p(&[-2, 0, 1]) * p(&[-3, 0, 1]) * p(&[-5, 0, 1]) * p(&[-7, 1]).pow(2);
        let f = f.scale(&rat(6, 5));
        let fz = factor_over_q(&f);
        assert_eq!(fz.reconstruct(), f);
        assert_eq!(fz.degrees(), vec![1, 1, 2, 2, 2]);
        assert_eq!(fz.content, rat(6, 5));
    }

    #[test]
    fn constant_and_zero_inputs() {
        let fz = factor_over_q(&PolyQ::constant(rat(-3, 7)));
        assert!(fz.factors.is_empty());
        assert_eq!(fz.content, rat(-3, 7));
        assert_eq!(factor_over_q(&PolyQ::zero()).content, int(0));
    }

    #[test]
    fn low_degree_examples() {
        let l = low_degree_factors(&p(&[-2, 0, 1]), 2);
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].field_d, Some(BigInt::from(2)));
        let l = low_degree_factors(&p(&[1849, 0, 1]), 2);
        assert_eq!(l[0].discriminant, Some(BigInt::from(-7396)));
        assert_eq!(l[0].field_d, Some(BigInt::from(-1)));
        assert!(low_degree_factors(&p(&[9317, 0, 0, 1]), 2).is_empty());
    }

    #[test]
    fn cubic_is_irreducible_per_root_oracle() {
        let f = p(&[9317, 0, 0, 1]);
        assert!(rational_roots_bruteforce(&f).is_empty());
        let fz = factor_over_q(&f);
        assert_eq!(fz.degrees(), vec![3]);
    }

    #[test]
    fn degree_certificates() {
        let c = certify_factor_degrees(&p(&[-1, 0, 1]), &[5, 7]).unwrap();
        assert_eq!(c.feasible, BTreeSet::from([vec![1, 1]]));
        let c = certify_factor_degrees(&p(&[1, 0, 0, 0, 1]), &[3, 5, 7, 11, 13]).unwrap();
        assert!(c.feasible.contains(&vec![2, 2]));
        assert!(c.feasible.iter().all(|m| !m.contains(&1)));
        assert!(matches!(certify_factor_degrees(&p(&[-1, 0, 1]), &[3, 2]), Err(Error::UnsupportedModulus { .. })));
        // x² − 5 is not squarefree mod 5.
        assert!(matches!(certify_factor_degrees(&p(&[-5, 0, 1]), &[5]), Err(Error::BadPrime(5))));
    }

    #[test]
    fn refinement() {
        assert!(refines(&[1, 1, 2], &[2, 2]));
        assert!(refines(&[1, 1, 2], &[4]));
        assert!(!refines(&[3, 3], &[2, 4]));
        assert!(refines(&[7, 7, 14, 28], &[14, 42]));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=50).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn reconstruction(cs in prop::collection::vec(small_rational(), 1..=13)) {
            let f = PolyQ::new(cs);
            prop_assume!(!f.is_zero());
            let fz = factor_over_q(&f);
            prop_assert_eq!(fz.reconstruct(), f);
        }

        #[test]
        fn planted_products(a in prop::collection::vec(-9i64..=9, 2..5),
                            b in prop::collection::vec(-9i64..=9, 2..5),
                            c in prop::collection::vec(-9i64..=9, 2..4)) {
            let f = &(&p(&a) * &p(&b)) * &p(&c);
            prop_assume!(!f.is_zero());
            let fz = factor_over_q(&f);
            prop_assert_eq!(fz.reconstruct(), f.clone());
            for fac in &fz.factors {
                // Irreducible factors of degree ≤ 3 have no rational root
                // unless linear.
                if fac.poly.deg() >= 2 && fac.poly.deg() <= 3 {
                    prop_assert!(rational_roots_bruteforce(&fac.poly).is_empty());
                }
            }
        }

        #[test]
        fn linear_factors_match_root_oracle(cs in prop::collection::vec(-30i64..=30, 1..7),
                                            roots in prop::collection::vec((-6i64..=6, 1i64..=4), 0..3)) {
            let mut f = p(&cs);
            prop_assume!(!f.is_zero());
            for (n, d) in roots {
                f = &f * &p(&[-n, d]);
            }
            prop_assert_eq!(rational_roots(&f), rational_roots_bruteforce(&f));
        }
    }
}
