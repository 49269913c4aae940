//! Exact linear algebra over the rationals, the integers and prime fields.
//!
//! Everything is arbitrary precision except the prime field layer, whose
//! entries are residues in `0..p` with products taken in `u128`.
//! Pivot selection is deterministic so repeated runs eliminate identically.

mod integer;
mod prime;
mod rational;

pub use integer::{hermite_normal_form, smith_normal_form, IntegerMatrix, SmithForm};
pub use prime::{is_prime, mod_inv, mod_pow, prime_field_rank, rank_mod_p_in_place, PrimeFieldMatrix};
pub use rational::{nullspace_rational, rational_rank, RationalMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational from two machine integers.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an exact integral rational.
pub fn qi(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}
