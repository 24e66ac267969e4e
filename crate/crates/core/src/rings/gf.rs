use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::is_prime;
use super::Rat;
use crate::{Error, Result};

/// A set `F` of primes, used to name the subring `G_F` of the rationals.
/// Infinite sets are described by their complement, so membership is always a
/// finite test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimeSet {
    /// `G_F` is the integers.
    Empty,
    /// `G_F` is all of the rationals.
    All,
    /// Sorted, distinct primes.
    Finite(Vec<u64>),
    /// Every prime except these (sorted, distinct).
    CoFinite(Vec<u64>),
}

fn normalize(primes: impl IntoIterator<Item = u64>) -> Result<Vec<u64>> {
    let mut ps: Vec<u64> = primes.into_iter().collect();
    if let Some(&bad) = ps.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(bad));
    }
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

impl PrimeSet {
    /// `{p_1, ..., p_n}`. An empty list gives [`PrimeSet::Empty`].
    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Result<PrimeSet> {
        let ps = normalize(primes)?;
        Ok(if ps.is_empty() {
            PrimeSet::Empty
        } else {
            PrimeSet::Finite(ps)
        })
    }

    /// All primes except the listed ones. An empty list gives [`PrimeSet::All`].
    pub fn all_except(excluded: impl IntoIterator<Item = u64>) -> Result<PrimeSet> {
        let ps = normalize(excluded)?;
        Ok(if ps.is_empty() {
            PrimeSet::All
        } else {
            PrimeSet::CoFinite(ps)
        })
    }

    /// Membership of a prime. For non-primes the answer is meaningless.
    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Empty => false,
            PrimeSet::All => true,
            PrimeSet::Finite(ps) => ps.binary_search(&p).is_ok(),
            PrimeSet::CoFinite(ex) => ex.binary_search(&p).is_err(),
        }
    }

    /// Whether every prime factor of the positive integer `d` lies in the set.
    pub fn admits_denominator(&self, d: &BigUint) -> bool {
        match self {
            PrimeSet::Empty => d.is_one(),
            PrimeSet::All => true,
            PrimeSet::Finite(ps) => {
                let mut rest = d.clone();
                for &p in ps {
                    let p = BigUint::from(p);
                    loop {
                        let (q, r) = rest.div_rem(&p);
                        if !r.is_zero() {
                            break;
                        }
                        rest = q;
                    }
                }
                rest.is_one()
            }
            PrimeSet::CoFinite(ex) => ex.iter().all(|&p| !(d % p).is_zero()),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, ps: &[u64]| {
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            Ok(())
        };
        match self {
            PrimeSet::Empty => f.write_str("{}"),
            PrimeSet::All => f.write_str("all"),
            PrimeSet::Finite(ps) => list(f, ps),
            PrimeSet::CoFinite(ex) => {
                f.write_str("all-except:")?;
                list(f, ex)
            }
        }
    }
}

/// Whether `x` lies in `G_F`, i.e. every prime factor of its reduced
/// denominator is in `F`.
pub fn in_gf(x: &Rat, f: &PrimeSet) -> bool {
    f.admits_denominator(x.denom().magnitude())
}

/// Whether `x` lies in `m * G_F`, i.e. `x / m` is in `G_F`.
///
/// # Panics
///
/// If `m == 0`.
pub fn in_scaled_gf(x: &Rat, m: u64, f: &PrimeSet) -> bool {
    assert!(m >= 1, "scale must be positive");
    let scaled = x / &Rat::from(m);
    in_gf(&scaled, f)
}

/// A nonempty index set whose sum lands in `m * G_F`, with the bookkeeping
/// used to find it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigeonholeSubset {
    /// Zero-based, increasing.
    pub indices: Vec<usize>,
    /// `s`, the lcm of the denominators; `xs[n] = y_n / s` with `y_n` integral.
    pub common_denominator: BigInt,
    /// The shared residue of the `y_n` modulo `m` when a residue class with at
    /// least `m` members supplied the answer; `None` when the prefix-sum
    /// fallback was needed.
    pub residue: Option<u64>,
}

/// Length the sequence must have for [`pigeonhole_subset`]: `(m-1)^2 + 1`.
pub fn pigeonhole_length(m: u64) -> Result<usize> {
    let bound = m
        .checked_sub(1)
        .and_then(|k| k.checked_mul(k))
        .and_then(|k| k.checked_add(1))
        .and_then(|k| usize::try_from(k).ok());
    match (m, bound) {
        (0, _) | (_, None) => Err(Error::OutOfRange {
            what: "modulus m",
            detail: format!("{m}"),
        }),
        (_, Some(b)) => Ok(b),
    }
}

/// Finds `H != {}` with `sum_{n in H} xs[n] in m * G_F`.
///
/// All terms are written over the lcm `s` of their denominators as `y_n / s`.
/// If some residue class modulo `m` holds at least `m` of the `y_n`, the
/// smallest such residue is chosen and `H` is its `m` lowest indices. Otherwise
/// two of the prefix sums `y_0 + ... + y_{j-1}` (`j = 0..=m`) agree modulo `m`
/// and `H` is the block between them; this always exists since the sequence
/// has at least `m` terms.
pub fn pigeonhole_subset(m: u64, f: &PrimeSet, xs: &[Rat]) -> Result<PigeonholeSubset> {
    let needed = pigeonhole_length(m)?;
    if xs.len() < needed {
        return Err(Error::OutOfRange {
            what: "sequence length",
            detail: format!("{} < (m-1)^2 + 1 = {needed}", xs.len()),
        });
    }
    if let Some(bad) = xs.iter().find(|x| !in_gf(x, f)) {
        return Err(Error::NotInRing(format!("{bad}")));
    }

    let s = xs
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let modulus = BigInt::from(m);
    let residues: Vec<u64> = xs
        .iter()
        .map(|x| {
            let y = x.numer() * (&s / x.denom());
            y.mod_floor(&modulus).to_u64().expect("residue below m")
        })
        .collect();

    // Residue classes, bounded so huge m does not allocate a huge table.
    let mut classes: alloc::collections::BTreeMap<u64, Vec<usize>> = Default::default();
    for (i, &r) in residues.iter().enumerate() {
        classes.entry(r).or_default().push(i);
    }
    if let Some((&h, members)) = classes.iter().find(|(_, v)| v.len() as u64 >= m) {
        return Ok(PigeonholeSubset {
            indices: members[..m as usize].to_vec(),
            common_denominator: s,
            residue: Some(h),
        });
    }

    let mut seen = alloc::collections::BTreeMap::new();
    seen.insert(0u64, 0usize);
    let mut prefix = 0u64;
    for (j, &r) in residues.iter().enumerate() {
        prefix = ((prefix as u128 + r as u128) % m as u128) as u64;
        if let Some(&i) = seen.get(&prefix) {
            return Ok(PigeonholeSubset {
                indices: (i..=j).collect(),
                common_denominator: s,
                residue: None,
            });
        }
        seen.insert(prefix, j + 1);
    }
    unreachable!("m + 1 prefix sums modulo m always collide")
}

pub const MAX_FINITE_SUMS_LEN: usize = 20;

/// `{ sum_{n in H} xs[n] : H nonempty }`, deduplicated and ordered.
pub fn finite_sums(xs: &[Rat]) -> Result<BTreeSet<Rat>> {
    if xs.is_empty() || xs.len() > MAX_FINITE_SUMS_LEN {
        return Err(Error::OutOfRange {
            what: "sequence length",
            detail: format!("{} not in 1..={MAX_FINITE_SUMS_LEN}", xs.len()),
        });
    }
    // sums[mask] built from sums[mask without lowest bit]
    let mut sums = vec![Rat::zero(); 1 << xs.len()];
    let mut out = BTreeSet::new();
    for mask in 1usize..1 << xs.len() {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &xs[low];
        out.insert(sums[mask].clone());
    }
    Ok(out)
}
