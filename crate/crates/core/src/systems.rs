//! Truncations of the infinite system
//!
//! ```text
//! x_{n,1} + x_{n,2} + ... + x_{n,n} + d_{n,1} y_1 + ... + d_{n,a} y_a = z_n    (n >= 2)
//! ```
//!
//! together with the coefficient schedules that separate subrings of the
//! rationals, the stacked `(I; A; B)` matrix whose first entries are all 1,
//! and the denominator test that rules out solutions over `G_F`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::rings::{first_primes, in_gf, is_prime, PrimeSet};
use crate::search::SolutionAssignment;
use crate::{Error, Rat, RatMatrix, Result};

/// How the coefficients `d_{n,i}` are generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSchedule {
    /// `d_{n,1} = 1/q^n`.
    QPow(u64),
    /// `d_{n,1} = prod_{t=1}^{n} 1/p_t^n` with `p_1 = 2, p_2 = 3, ...`.
    AllPrimesProd,
    /// `(d_{n,1}, d_{n,2}) = (-1/q^n, 2/q^n)`.
    QPowPair(u64),
    /// `(d_{n,1}, d_{n,2}) = (-P_n, 2 P_n)` with `P_n = prod_{t=1}^{n} 1/p_t^n`.
    AllPrimesProdPair,
    /// `table[n - 2][i - 1] = d_{n,i}`; rectangular and nonempty.
    Explicit(Vec<Vec<Rat>>),
}

impl CoefficientSchedule {
    pub fn qpow(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(CoefficientSchedule::QPow(q))
    }

    pub fn qpow_pair(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(CoefficientSchedule::QPowPair(q))
    }

    /// Rows are equations `n = 2, 3, ...`, columns are `i = 1..=alpha`.
    pub fn explicit(table: Vec<Vec<Rat>>) -> Result<Self> {
        let width = table.first().map_or(0, Vec::len);
        if width == 0 {
            return Err(Error::Invalid("explicit schedule needs at least one nonempty row".into()));
        }
        if let Some(row) = table.iter().find(|r| r.len() != width) {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: row.len(),
            });
        }
        Ok(CoefficientSchedule::Explicit(table))
    }

    /// Number of `y` variables the schedule feeds.
    pub fn arity(&self) -> usize {
        match self {
            CoefficientSchedule::QPow(_) | CoefficientSchedule::AllPrimesProd => 1,
            CoefficientSchedule::QPowPair(_) | CoefficientSchedule::AllPrimesProdPair => 2,
            CoefficientSchedule::Explicit(t) => t[0].len(),
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(
            self,
            CoefficientSchedule::QPowPair(_) | CoefficientSchedule::AllPrimesProdPair
        )
    }

    /// Largest `n` the schedule defines, if bounded.
    pub fn max_equation(&self) -> Option<usize> {
        match self {
            CoefficientSchedule::Explicit(t) => Some(t.len() + 1),
            _ => None,
        }
    }

    /// `(d_{n,1}, ..., d_{n,alpha})`.
    pub fn values(&self, n: usize) -> Result<Vec<Rat>> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "equation index n",
                detail: format!("{n} < 2"),
            });
        }
        let exp = u32::try_from(n).map_err(|_| Error::OutOfRange {
            what: "equation index n",
            detail: format!("{n}"),
        })?;
        let power_recip = |q: u64| Rat::new(1, BigInt::from(q).pow(exp)).expect("nonzero");
        Ok(match self {
            CoefficientSchedule::QPow(q) => vec![power_recip(*q)],
            CoefficientSchedule::QPowPair(q) => {
                let d = power_recip(*q);
                vec![-&d, &d * &Rat::from(2)]
            }
            CoefficientSchedule::AllPrimesProd => vec![all_primes_product(n, exp)],
            CoefficientSchedule::AllPrimesProdPair => {
                let d = all_primes_product(n, exp);
                vec![-&d, &d * &Rat::from(2)]
            }
            CoefficientSchedule::Explicit(t) => t
                .get(n - 2)
                .ok_or_else(|| Error::OutOfRange {
                    what: "equation index n",
                    detail: format!("explicit schedule defines n = 2..={}, asked for {n}", t.len() + 1),
                })?
                .clone(),
        })
    }

    /// `d_{n,i}` with `i` counted from 1.
    pub fn value(&self, n: usize, i: usize) -> Result<Rat> {
        let alpha = self.arity();
        if i == 0 || i > alpha {
            return Err(Error::OutOfRange {
                what: "coefficient index i",
                detail: format!("{i} not in 1..={alpha}"),
            });
        }
        Ok(self.values(n)?.swap_remove(i - 1))
    }
}

/// `prod_{t=1}^{n} 1/p_t^n`.
fn all_primes_product(n: usize, exp: u32) -> Rat {
    let den = first_primes(n)
        .into_iter()
        .fold(BigInt::one(), |acc, p| acc * BigInt::from(p).pow(exp));
    Rat::new(1, den).expect("nonzero")
}

impl fmt::Display for CoefficientSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSchedule::QPow(q) => write!(f, "qpow:{q}"),
            CoefficientSchedule::AllPrimesProd => f.write_str("allprimes"),
            CoefficientSchedule::QPowPair(q) => write!(f, "qpowpair:{q}"),
            CoefficientSchedule::AllPrimesProdPair => f.write_str("allprimespair"),
            CoefficientSchedule::Explicit(t) => write!(f, "explicit({}x{})", t.len(), t[0].len()),
        }
    }
}

/// A variable of the truncated system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    /// `x_{n,j}`, `1 <= j <= n`.
    X(usize, usize),
    Y(usize),
    Z(usize),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X(n, j) => write!(f, "x_{n}_{j}"),
            Variable::Y(i) => write!(f, "y_{i}"),
            Variable::Z(n) => write!(f, "z_{n}"),
        }
    }
}

/// The system truncated after equation `n = depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    alpha: usize,
    depth: usize,
    schedule: CoefficientSchedule,
}

impl SystemSpec {
    pub fn new(alpha: usize, depth: usize, schedule: CoefficientSchedule) -> Result<SystemSpec> {
        if depth < 2 {
            return Err(Error::OutOfRange {
                what: "depth",
                detail: format!("{depth} < 2"),
            });
        }
        if alpha != schedule.arity() {
            return Err(Error::DimensionMismatch {
                expected: schedule.arity(),
                found: alpha,
            });
        }
        if let Some(max) = schedule.max_equation() {
            if max < depth {
                return Err(Error::OutOfRange {
                    what: "depth",
                    detail: format!("explicit schedule stops at n = {max}, depth is {depth}"),
                });
            }
        }
        Ok(SystemSpec {
            alpha,
            depth,
            schedule,
        })
    }

    /// Uses the schedule's arity for `alpha`.
    pub fn with_schedule(depth: usize, schedule: CoefficientSchedule) -> Result<SystemSpec> {
        SystemSpec::new(schedule.arity(), depth, schedule)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn schedule(&self) -> &CoefficientSchedule {
        &self.schedule
    }

    /// `2 + 3 + ... + depth`, the number of `x` variables.
    pub fn x_count(&self) -> usize {
        (2..=self.depth).sum()
    }

    pub fn variable_count(&self) -> usize {
        self.x_count() + self.alpha + (self.depth - 1)
    }

    /// Column order: `x_{2,1}, x_{2,2}, x_{3,1}, ..., x_{k,k}`, then
    /// `y_1..y_alpha`, then `z_2..z_k`.
    pub fn variables(&self) -> Vec<Variable> {
        let xs = (2..=self.depth).flat_map(|n| (1..=n).map(move |j| Variable::X(n, j)));
        let ys = (1..=self.alpha).map(Variable::Y);
        let zs = (2..=self.depth).map(Variable::Z);
        xs.chain(ys).chain(zs).collect()
    }

    pub fn variable_index(&self, var: Variable) -> Option<usize> {
        let k = self.depth;
        match var {
            Variable::X(n, j) if (2..=k).contains(&n) && (1..=n).contains(&j) => {
                Some(b_offset(n - 1) + j - 1)
            }
            Variable::Y(i) if (1..=self.alpha).contains(&i) => Some(self.x_count() + i - 1),
            Variable::Z(n) if (2..=k).contains(&n) => Some(self.x_count() + self.alpha + n - 2),
            _ => None,
        }
    }
}

/// `b_j` for `j >= 1`: `b_1 = 0`, `b_j = b_{j-1} + j`.
fn b_offset(j: usize) -> usize {
    debug_assert!(j >= 1);
    (2..=j).sum()
}

/// `[b_1, ..., b_k]`.
pub fn offsets(k: usize) -> Vec<usize> {
    (1..=k).map(b_offset).collect()
}

/// The `(k - 1) x V` coefficient matrix of the truncated system. Row `n - 2`
/// encodes `x_{n,1} + ... + x_{n,n} + sum_i d_{n,i} y_i - z_n = 0`.
pub fn build_truncated_system(spec: &SystemSpec) -> Result<RatMatrix> {
    let k = spec.depth;
    let mut m = RatMatrix::zeros(k - 1, spec.variable_count());
    let y0 = spec.x_count();
    for n in 2..=k {
        let row = n - 2;
        for j in 0..n {
            m.set(row, b_offset(n - 1) + j, Rat::one());
        }
        for (i, d) in spec.schedule.values(n)?.into_iter().enumerate() {
            m.set(row, y0 + i, d);
        }
        m.set(row, y0 + spec.alpha + row, -Rat::one());
    }
    Ok(m)
}

/// The `(k - 1) x (b_k + alpha)` block `A`: row `i` has ones in columns
/// `b_i + 1 ..= b_{i+1}` and `d_{i+1,t}` in column `b_k + t` (one-based).
pub fn build_a_block(spec: &SystemSpec) -> Result<RatMatrix> {
    let k = spec.depth;
    let bk = b_offset(k);
    let mut a = RatMatrix::zeros(k - 1, bk + spec.alpha);
    for i in 1..k {
        for col in b_offset(i)..b_offset(i + 1) {
            a.set(i - 1, col, Rat::one());
        }
        for (t, d) in spec.schedule.values(i + 1)?.into_iter().enumerate() {
            a.set(i - 1, bk + t, d);
        }
    }
    Ok(a)
}

/// One row per pair `b_k < i < j <= b_k + alpha` (in lexicographic order)
/// with `1` at `i` and `-1` at `j`. Empty when `alpha = 1`.
pub fn build_b_block(spec: &SystemSpec) -> RatMatrix {
    let bk = b_offset(spec.depth);
    let alpha = spec.alpha;
    let mut rows = Vec::new();
    for i in 0..alpha {
        for j in i + 1..alpha {
            let mut row = vec![Rat::zero(); bk + alpha];
            row[bk + i] = Rat::one();
            row[bk + j] = -Rat::one();
            rows.push(row);
        }
    }
    let mut b = RatMatrix::from_rows(rows).expect("rows have equal width");
    if b.rows() == 0 {
        b = RatMatrix::zeros(0, bk + alpha);
    }
    b
}

/// `(I; A; B)` with `I` the identity of size `b_k + alpha`.
pub fn build_iab(spec: &SystemSpec) -> Result<RatMatrix> {
    let a = build_a_block(spec)?;
    let b = build_b_block(spec);
    let id = RatMatrix::identity(a.cols());
    RatMatrix::vstack(&[&id, &a, &b])
}

/// A positive-integer solution of the truncated system for a pair
/// schedule: `y = (2, 1)`, every `x_{n,j} = 1` and `z_n = n`. The `y` terms
/// cancel in every equation, so this is exact.
pub fn nat_solution_witness(spec: &SystemSpec) -> Result<SolutionAssignment> {
    if !spec.schedule.is_pair() {
        return Err(Error::Invalid(format!(
            "positive-integer witness needs a pair schedule, got {}",
            spec.schedule
        )));
    }
    let values = spec
        .variables()
        .into_iter()
        .map(|var| match var {
            Variable::X(..) => Rat::one(),
            Variable::Y(1) => Rat::from(2),
            Variable::Y(_) => Rat::one(),
            Variable::Z(n) => Rat::from(n),
        })
        .collect();
    Ok(SolutionAssignment::new(values))
}

/// The least `n` in `2..=n_max` with `sum_i d_{n,i} y_i` outside `G_F`.
///
/// Any solution over `G_F` that extends `y` has
/// `sum_i d_{n,i} y_i = z_n - x_{n,1} - ... - x_{n,n}` in `G_F` for every `n`,
/// so a returned index proves there is none. `None` means every equation up to
/// `n_max` passes this necessary test; it is not a proof of solvability.
pub fn refute_over_gf(
    schedule: &CoefficientSchedule,
    f: &PrimeSet,
    y: &[Rat],
    n_max: usize,
) -> Result<Option<usize>> {
    if y.len() != schedule.arity() {
        return Err(Error::DimensionMismatch {
            expected: schedule.arity(),
            found: y.len(),
        });
    }
    if let Some(bad) = y.iter().find(|v| !in_gf(v, f)) {
        return Err(Error::NotInRing(format!("{bad}")));
    }
    for n in 2..=n_max {
        let combo: Rat = schedule
            .values(n)?
            .iter()
            .zip(y)
            .map(|(d, yi)| d * yi)
            .sum();
        if !in_gf(&combo, f) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
