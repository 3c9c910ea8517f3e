//! Generation of classical modular polynomial files: Φ_ℓ for prime ℓ from
//! q-expansions of j, and Φ_{ℓ²} from Φ_ℓ by resultants.

pub mod classical;
pub mod compose;
pub mod series;

pub use classical::classical_modpoly;
pub use compose::square_level;

use isogate_core::exact::{factor_small, is_prime};
use isogate_core::modpoly::ModularPolynomial;
use isogate_core::{Error, Result};

/// Φ_N for N prime or the square of a prime.
pub fn modular_polynomial(level: u64) -> Result<ModularPolynomial> {
    if is_prime(level) {
        return classical_modpoly(level);
    }
    match factor_small(level).as_slice() {
        [(p, 2)] => square_level(&classical_modpoly(*p)?),
        _ => Err(Error::Invalid(format!("level {level} is neither a prime nor a prime square"))),
    }
}
