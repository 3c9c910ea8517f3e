use isogate_core::modpoly::{psi, ModularPolynomial};
use isogate_modgen::series::{j_series, Laurent};
use isogate_modgen::{classical_modpoly, modular_polynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Φ(j(q), j(q^n)) as a q-series.
fn along_isogeny(phi: &ModularPolynomial, n: i64, prec: i64) -> Laurent {
    let d = phi.degree();
    let j = j_series(prec);
    let jn = j.inflate(n);
    let big = 1i64 << 40;
    let mut xp = vec![Laurent::one(big)];
    let mut yp = vec![Laurent::one(big)];
    for k in 1..=d {
        xp.push(xp[k - 1].mul(&j));
        yp.push(yp[k - 1].mul(&jn));
    }
    let mut total = Laurent::zero(big);
    for (i, x) in xp.iter().enumerate() {
        for (k, y) in yp.iter().enumerate() {
            let c = phi.coeff(i, k);
            if !c.is_zero() {
                total = total.add(&x.mul(y).scale(&c));
            }
        }
    }
    total
}

#[test]
fn kronecker_congruence() {
    // Φ_ℓ(X, Y) ≡ (X^ℓ − Y)(X − Y^ℓ) mod ℓ.
    for ell in [3u64, 5, 7, 11] {
        let phi = classical_modpoly(ell).unwrap();
        let l = ell as usize;
        let m = BigInt::from(ell);
        for i in 0..=l + 1 {
            for k in 0..=l + 1 {
                let want: i64 = match (i, k) {
                    (a, 0) if a == l + 1 => 1,
                    (0, b) if b == l + 1 => 1,
                    (a, b) if a == l && b == l => -1,
                    (1, 1) => -1,
                    _ => 0,
                };
                let got = phi.coeff(i, k).mod_floor(&m);
                assert_eq!(got, BigInt::from(want).mod_floor(&m), "ℓ = {ell}, X^{i}Y^{k}");
            }
        }
    }
}

#[test]
fn prime_levels_vanish_on_q_expansions() {
    for ell in [2u64, 3, 5] {
        let phi = classical_modpoly(ell).unwrap();
        let s = along_isogeny(&phi, ell as i64, 60);
        assert!(s.prec > 0 && s.is_zero(), "ℓ = {ell}");
    }
}

#[test]
fn square_levels_vanish_on_q_expansions() {
    for ell in [2u64, 3] {
        let phi = modular_polynomial(ell * ell).unwrap();
        assert_eq!(phi.degree() as u64, psi(ell * ell));
        let n = (ell * ell) as i64;
        let s = along_isogeny(&phi, n, n * phi.degree() as i64 + 10);
        assert!(s.prec > 0 && s.is_zero(), "ℓ² = {n}");
    }
}

#[test]
fn text_output_round_trips() {
    let phi = modular_polynomial(9).unwrap();
    assert_eq!(ModularPolynomial::parse(9, &phi.to_text()).unwrap(), phi);
}

#[test]
fn unsupported_levels() {
    assert!(modular_polynomial(6).is_err());
    assert!(modular_polynomial(8).is_err());
}
