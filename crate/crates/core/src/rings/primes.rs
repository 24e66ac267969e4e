use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Rat;
use crate::{Error, Result};

/// Deterministic trial division. Adequate for the prime lists users type in.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d: u64 = 5;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factors of `n` with multiplicity, in nondecreasing order. Empty for 1.
pub fn factorize_u64(mut n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "factorize input",
            detail: "0 has no factorization".into(),
        });
    }
    let mut out = Vec::new();
    for p in [2u64, 3] {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
    }
    // 6k +- 1 wheel
    let mut d: u64 = 5;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        for p in [d, d + 2] {
            while n.is_multiple_of(p) {
                out.push(p);
                n /= p;
            }
        }
        d += 6;
    }
    if n > 1 {
        out.push(n);
    }
    Ok(out)
}

/// Like [`factorize_u64`] for arbitrary-precision input. Rejects `n <= 0`
/// and anything that does not fit in 64 bits.
pub fn factorize(n: &BigInt) -> Result<Vec<u64>> {
    if n.sign() != Sign::Plus {
        return Err(Error::OutOfRange {
            what: "factorize input",
            detail: format!("{n} is not positive"),
        });
    }
    let small = n.to_u64().ok_or_else(|| Error::OutOfRange {
        what: "factorize input",
        detail: format!("{n} is not below 2^64"),
    })?;
    factorize_u64(small)
}

/// Iterator over the primes in increasing order: 2, 3, 5, 7, ...
#[derive(Debug, Clone, Default)]
pub struct Primes {
    found: Vec<u64>,
}

impl Primes {
    pub fn new() -> Primes {
        Primes::default()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mut c = match self.found.last() {
            None => 2,
            Some(2) => 3,
            Some(&p) => p + 2,
        };
        loop {
            let composite = self
                .found
                .iter()
                .take_while(|&&p| p * p <= c)
                .any(|&p| c % p == 0);
            if !composite {
                self.found.push(c);
                return Some(c);
            }
            c += 2;
        }
    }
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    Primes::new().take(count).collect()
}

/// A p-adic valuation. Zero has valuation `+inf`, which orders above every
/// finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Multiplicity of `p` in a nonzero magnitude.
fn multiplicity(n: &BigUint, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    if p == 2 {
        return n.trailing_zeros().unwrap_or(0);
    }
    let p = BigUint::from(p);
    let mut count = 0;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

/// Exponent of `p` in the numerator of `x` minus its exponent in the
/// denominator; [`Valuation::Infinity`] for zero.
///
/// # Panics
///
/// If `p < 2`. `p` is meant to be prime; for composite `p` the result is the
/// multiplicity of `p` itself, which is rarely what callers want.
pub fn padic_valuation(x: &Rat, p: u64) -> Valuation {
    assert!(p >= 2, "valuation base must be at least 2");
    if x.is_zero() {
        return Valuation::Infinity;
    }
    let num = multiplicity(x.numer().magnitude(), p) as i64;
    let den = multiplicity(x.denom().magnitude(), p) as i64;
    Valuation::Finite(num - den)
}
