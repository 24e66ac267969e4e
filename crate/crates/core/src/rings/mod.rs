//! Exact arithmetic for the rationals and their subrings `G_F`.

mod gf;
mod primes;
mod rat;

pub use gf::{
    finite_sums, in_gf, in_scaled_gf, pigeonhole_length, pigeonhole_subset, PigeonholeSubset,
    PrimeSet, MAX_FINITE_SUMS_LEN,
};
pub use primes::{
    factorize, factorize_u64, first_primes, is_prime, padic_valuation, Primes, Valuation,
};
pub use rat::Rat;
