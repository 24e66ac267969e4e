//! Finite colouring machinery: the doubling-separating colouring by the
//! parity of `floor(log2 |x|)`, monochromatic solution search over finite
//! ground sets, and Rado numbers of `{1, ..., N}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::{Error, Rat, RatMatrix, Result};

/// Values for the variables of a system, indexed like its columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionAssignment {
    values: Vec<Rat>,
}

impl SolutionAssignment {
    pub fn new(values: Vec<Rat>) -> SolutionAssignment {
        SolutionAssignment { values }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// `A x`, one entry per equation.
    pub fn residuals(&self, a: &RatMatrix) -> Result<Vec<Rat>> {
        a.mul_vec(&self.values)
    }

    pub fn satisfies(&self, a: &RatMatrix) -> Result<bool> {
        Ok(self.residuals(a)?.iter().all(Rat::is_zero))
    }
}

/// `floor(log2 |x|)`: the unique `e` with `2^e <= |x| < 2^(e+1)`, found by
/// exact integer comparison.
pub fn log2_floor(x: &Rat) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Invalid("log2 of zero".into()));
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let e = num.bits() as i64 - den.bits() as i64;
    // 2^(e-1) < |x| < 2^(e+1); settle which side of 2^e
    let at_least = if e >= 0 {
        num >= &(den << e as u64)
    } else {
        &(num << (-e) as u64) >= den
    };
    Ok(if at_least { e } else { e - 1 })
}

/// Colour of `x` under the parity of `floor(log2 |x|)`. Doubling `x` always
/// changes the colour.
pub fn log2_parity_colour(x: &Rat) -> Result<u32> {
    Ok(log2_floor(x)?.rem_euclid(2) as u32)
}

/// An explicit colouring of finitely many nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableColouring {
    colours: BTreeMap<Rat, u32>,
    count: u32,
}

impl TableColouring {
    /// `count` defaults to one more than the largest colour used.
    pub fn new(pairs: impl IntoIterator<Item = (Rat, u32)>, count: Option<u32>) -> Result<TableColouring> {
        let mut colours = BTreeMap::new();
        for (x, c) in pairs {
            if x.is_zero() {
                return Err(Error::Invalid("zero cannot be coloured".into()));
            }
            if colours.insert(x.clone(), c).is_some() {
                return Err(Error::Invalid(format!("{x} is coloured twice")));
            }
        }
        let used = colours.values().max().map_or(0, |&c| c + 1);
        let count = count.unwrap_or(used);
        if used > count {
            return Err(Error::OutOfRange {
                what: "colour",
                detail: format!("colour {} with only {count} colours", used - 1),
            });
        }
        Ok(TableColouring { colours, count })
    }

    pub fn get(&self, x: &Rat) -> Option<u32> {
        self.colours.get(x).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rat, u32)> + '_ {
        self.colours.iter().map(|(x, &c)| (x, c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colouring {
    Table(TableColouring),
    /// Two colours on all nonzero rationals; see [`log2_parity_colour`].
    Log2Parity,
}

impl Colouring {
    /// `None` for zero and for values a table does not cover.
    pub fn colour(&self, x: &Rat) -> Option<u32> {
        match self {
            Colouring::Table(t) => t.get(x),
            Colouring::Log2Parity => log2_parity_colour(x).ok(),
        }
    }

    pub fn colour_count(&self) -> u32 {
        match self {
            Colouring::Table(t) => t.count,
            Colouring::Log2Parity => 2,
        }
    }
}

/// A finite set of distinct nonzero rationals, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    elements: Vec<Rat>,
}

impl GroundSet {
    pub fn new(elements: impl IntoIterator<Item = Rat>) -> Result<GroundSet> {
        let mut elements: Vec<Rat> = elements.into_iter().collect();
        if elements.iter().any(Rat::is_zero) {
            return Err(Error::Invalid("ground set may not contain 0".into()));
        }
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("{} appears twice in ground set", w[0])));
        }
        Ok(GroundSet { elements })
    }

    /// `{ a/den : 1 <= a <= num_bound }`, plus the negatives when `signed`,
    /// with duplicates after reduction removed. A finite slice of `G_F`
    /// whenever every prime factor of `den` is in `F`.
    pub fn slice(num_bound: u64, den: u64, signed: bool) -> Result<GroundSet> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let mut set = BTreeSet::new();
        for a in 1..=num_bound {
            let x = Rat::new(a, den)?;
            if signed {
                set.insert(-&x);
            }
            set.insert(x);
        }
        Ok(GroundSet {
            elements: set.into_iter().collect(),
        })
    }

    /// `{1, ..., n}`.
    pub fn range(n: u64) -> GroundSet {
        GroundSet {
            elements: (1..=n).map(Rat::from).collect(),
        }
    }

    pub fn elements(&self) -> &[Rat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

/// Whether `x` and `2x` get different colours for every `x` in `g` whose
/// double is in scope: any nonzero rational for [`Colouring::Log2Parity`],
/// and `g` itself (and coloured) for tables.
pub fn doubling_distinct(c: &Colouring, g: &GroundSet) -> bool {
    let two = Rat::from(2);
    g.elements.iter().all(|x| {
        let doubled = x * &two;
        match c {
            Colouring::Log2Parity => c.colour(x) != c.colour(&doubled),
            Colouring::Table(_) => {
                if !g.contains(&doubled) {
                    return true;
                }
                match (c.colour(x), c.colour(&doubled)) {
                    (Some(a), Some(b)) => a != b,
                    _ => true,
                }
            }
        }
    })
}

/// Default cap on the number of candidate tuples a search may visit.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Require pairwise distinct variable values.
    pub distinct: bool,
    pub budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            distinct: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// For each column, the rows whose last nonzero entry sits there. Such a
/// column's value is forced by the earlier ones.
fn rows_ending_at<T>(rows: &[Vec<T>], v: usize, is_zero: impl Fn(&T) -> bool) -> Vec<Vec<usize>> {
    let mut ending = vec![Vec::new(); v];
    for (i, row) in rows.iter().enumerate() {
        if let Some(j) = row.iter().rposition(|x| !is_zero(x)) {
            ending[j].push(i);
        }
    }
    ending
}

/// Number of candidate tuples an exhaustive search over `g` enumerates for
/// `a`: `|g|` to the power of the number of variables not forced by an
/// equation.
pub fn search_space_size(a: &RatMatrix, g: &GroundSet) -> u128 {
    let rows: Vec<Vec<Rat>> = a.row_iter().map(<[Rat]>::to_vec).collect();
    let ending = rows_ending_at(&rows, a.cols(), Rat::is_zero);
    let free = ending.iter().filter(|e| e.is_empty()).count() as u32;
    (g.len() as u128).checked_pow(free).unwrap_or(u128::MAX)
}

struct RatSearch<'a> {
    rows: Vec<Vec<Rat>>,
    ending: Vec<Vec<usize>>,
    class: &'a [Rat],
    distinct: bool,
}

impl RatSearch<'_> {
    fn run(&self, j: usize, values: &mut Vec<Rat>, sums: &mut Vec<Rat>) -> bool {
        if j == self.ending.len() {
            return true;
        }
        let candidates: Vec<Rat> = match self.ending[j].first() {
            Some(&row) => {
                let x = -&sums[row] / &self.rows[row][j];
                if self.class.binary_search(&x).is_ok() {
                    vec![x]
                } else {
                    vec![]
                }
            }
            None => self.class.to_vec(),
        };
        for x in candidates {
            if self.distinct && values.contains(&x) {
                continue;
            }
            for (s, row) in sums.iter_mut().zip(&self.rows) {
                *s += &(&row[j] * &x);
            }
            if self.ending[j].iter().all(|&r| sums[r].is_zero()) {
                values.push(x.clone());
                if self.run(j + 1, values, sums) {
                    return true;
                }
                values.pop();
            }
            for (s, row) in sums.iter_mut().zip(&self.rows) {
                *s -= &(&row[j] * &x);
            }
        }
        false
    }
}

/// Searches `g` for a solution of `A x = 0` with every variable in one colour
/// class.
///
/// Classes are tried in increasing colour order and tuples in lexicographic
/// order of `g`, so the answer is deterministic. Returns
/// [`Error::BudgetExceeded`] instead of searching when the candidate space
/// (see [`search_space_size`]) is larger than `opts.budget`; `Ok(None)` is
/// only returned after an exhaustive search.
pub fn mono_solutions(
    a: &RatMatrix,
    c: &Colouring,
    g: &GroundSet,
    opts: SearchOptions,
) -> Result<Option<SolutionAssignment>> {
    if a.cols() == 0 {
        return Err(Error::Invalid("system has no variables".into()));
    }
    let needed = search_space_size(a, g);
    if needed > opts.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    let mut classes: BTreeMap<u32, Vec<Rat>> = BTreeMap::new();
    for x in &g.elements {
        let colour = c
            .colour(x)
            .ok_or_else(|| Error::Invalid(format!("{x} has no colour")))?;
        classes.entry(colour).or_default().push(x.clone());
    }
    let rows: Vec<Vec<Rat>> = a.row_iter().map(<[Rat]>::to_vec).collect();
    let ending = rows_ending_at(&rows, a.cols(), Rat::is_zero);
    // all-zero rows never constrain
    for class in classes.values() {
        let search = RatSearch {
            rows: rows.clone(),
            ending: ending.clone(),
            class,
            distinct: opts.distinct,
        };
        let mut values = Vec::with_capacity(a.cols());
        let mut sums = vec![Rat::zero(); rows.len()];
        if search.run(0, &mut values, &mut sums) {
            return Ok(Some(SolutionAssignment::new(values)));
        }
    }
    Ok(None)
}

/// Independent check of a claimed monochromatic solution.
pub fn verify_mono_solution(
    a: &RatMatrix,
    c: &Colouring,
    sol: &SolutionAssignment,
    distinct: bool,
) -> Result<bool> {
    if !sol.satisfies(a)? {
        return Ok(false);
    }
    let colours: Option<BTreeSet<u32>> = sol.values.iter().map(|x| c.colour(x)).collect();
    if colours.is_none_or(|cs| cs.len() != 1) {
        return Ok(false);
    }
    if distinct {
        let unique: BTreeSet<&Rat> = sol.values.iter().collect();
        if unique.len() != sol.values.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const MAX_RADO_COLOURS: u32 = 4;
pub const MAX_RADO_N: usize = 64;

/// Result of [`min_rado_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadoOutcome {
    /// Every colouring of `{1, ..., n}` has a monochromatic solution.
    /// `witness[i]` colours `i + 1` for a colouring of `{1, ..., n - 1}` with
    /// none.
    Found { n: usize, witness: Vec<u32> },
    /// A colouring of `{1, ..., n_max}` without monochromatic solutions.
    Survivor { colouring: Vec<u32> },
}

/// Integer form of a system, each row cleared of denominators.
struct IntSystem {
    rows: Vec<Vec<i64>>,
    ending: Vec<Vec<usize>>,
}

impl IntSystem {
    fn new(a: &RatMatrix) -> Result<IntSystem> {
        let mut rows = Vec::with_capacity(a.rows());
        for row in a.row_iter() {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Option<Vec<i64>> = row
                .iter()
                .map(|x| (x.numer() * (&l / x.denom())).to_i64())
                .collect();
            let ints = ints.ok_or_else(|| Error::OutOfRange {
                what: "coefficient",
                detail: "cleared coefficients must fit in 64 bits".into(),
            })?;
            if ints.iter().any(|x| x.abs() > 1 << 40) {
                return Err(Error::OutOfRange {
                    what: "coefficient",
                    detail: "cleared coefficients must be below 2^40".into(),
                });
            }
            rows.push(ints);
        }
        let ending = rows_ending_at(&rows, a.cols(), |x| *x == 0);
        Ok(IntSystem { rows, ending })
    }

    /// A solution using only values whose bits are set in `allowed` (bit
    /// `x - 1` for value `x`), with variable `pin.0` equal to `pin.1`.
    fn solvable(&self, allowed: u64, pin: (usize, i64)) -> bool {
        let mut sums = vec![0i64; self.rows.len()];
        self.step(0, allowed, pin, &mut sums)
    }

    fn step(&self, j: usize, allowed: u64, pin: (usize, i64), sums: &mut [i64]) -> bool {
        if j == self.ending.len() {
            return true;
        }
        let try_value = |x: i64, sums: &mut [i64]| -> bool {
            for (s, row) in sums.iter_mut().zip(&self.rows) {
                *s += row[j] * x;
            }
            let ok = self.ending[j].iter().all(|&r| sums[r] == 0) && self.step(j + 1, allowed, pin, sums);
            for (s, row) in sums.iter_mut().zip(&self.rows) {
                *s -= row[j] * x;
            }
            ok
        };
        let allowed_value = |x: i64| (1..=64).contains(&x) && allowed >> (x - 1) & 1 == 1;
        if let Some(&r) = self.ending[j].first() {
            let coef = self.rows[r][j];
            if sums[r] % coef != 0 {
                return false;
            }
            let x = -sums[r] / coef;
            if !allowed_value(x) || (pin.0 == j && pin.1 != x) {
                return false;
            }
            return try_value(x, sums);
        }
        if pin.0 == j {
            return try_value(pin.1, sums);
        }
        let mut bits = allowed;
        while bits != 0 {
            let x = bits.trailing_zeros() as i64 + 1;
            bits &= bits - 1;
            if try_value(x, sums) {
                return true;
            }
        }
        false
    }
}

struct RadoSearch {
    system: IntSystem,
    colours: u32,
    n_max: usize,
    best: Vec<u32>,
}

impl RadoSearch {
    /// Whether colouring `t` with class mask `members` (already containing
    /// `t`) completes a monochromatic solution that uses `t`.
    fn completes_solution(&self, members: u64, t: usize) -> bool {
        (0..self.system.ending.len()).any(|p| self.system.solvable(members, (p, t as i64)))
    }

    /// Extends `colouring` of `{1..len}`; returns true once `n_max` is reached.
    fn extend(&mut self, colouring: &mut Vec<u32>, classes: &mut [u64]) -> bool {
        if colouring.len() > self.best.len() {
            self.best = colouring.clone();
        }
        if colouring.len() == self.n_max {
            return true;
        }
        let t = colouring.len() + 1;
        // value symmetry: colour t may open at most one new class
        let opened = colouring.iter().max().map_or(0, |&c| c + 1);
        for c in 0..self.colours.min(opened + 1) {
            let members = classes[c as usize] | 1u64 << (t - 1);
            if self.completes_solution(members, t) {
                continue;
            }
            classes[c as usize] = members;
            colouring.push(c);
            if self.extend(colouring, classes) {
                return true;
            }
            colouring.pop();
            classes[c as usize] &= !(1u64 << (t - 1));
        }
        false
    }
}

/// The least `N <= n_max` such that every `r`-colouring of `{1, ..., N}` has
/// a monochromatic solution of `A x = 0`, by backtracking over colourings of
/// `1, 2, 3, ...` in order with colour classes opened in order.
///
/// Solutions may repeat values. Requires `1 <= r <= 4` and
/// `1 <= n_max <= 64`.
pub fn min_rado_number(a: &RatMatrix, r: u32, n_max: usize) -> Result<RadoOutcome> {
    if !(1..=MAX_RADO_COLOURS).contains(&r) {
        return Err(Error::OutOfRange {
            what: "colour count",
            detail: format!("{r} not in 1..={MAX_RADO_COLOURS}"),
        });
    }
    if !(1..=MAX_RADO_N).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            detail: format!("{n_max} not in 1..={MAX_RADO_N}"),
        });
    }
    if a.cols() == 0 {
        return Err(Error::Invalid("system has no variables".into()));
    }
    let mut search = RadoSearch {
        system: IntSystem::new(a)?,
        colours: r,
        n_max,
        best: Vec::new(),
    };
    let mut colouring = Vec::new();
    let mut classes = vec![0u64; r as usize];
    if search.extend(&mut colouring, &mut classes) {
        return Ok(RadoOutcome::Survivor { colouring });
    }
    Ok(RadoOutcome::Found {
        n: search.best.len() + 1,
        witness: search.best,
    })
}

/// A [`Colouring::Table`] of `{1, ..., len}` from a colour list.
pub fn colouring_of_range(colours: &[u32], count: u32) -> Result<Colouring> {
    let pairs = colours
        .iter()
        .enumerate()
        .map(|(i, &c)| (Rat::from(i + 1), c));
    Ok(Colouring::Table(TableColouring::new(pairs, Some(count))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn table(pairs: &[(i64, u32)]) -> Colouring {
        Colouring::Table(TableColouring::new(pairs.iter().map(|&(x, c)| (Rat::from(x), c)), None).unwrap())
    }

    /// Brackets |x| between consecutive powers of two by repeated exact
    /// doubling and halving.
    fn log2_floor_reference(x: &Rat) -> i64 {
        let mut y = x.abs();
        let two = Rat::from(2);
        let mut e = 0;
        while y >= two {
            y = &y / &two;
            e += 1;
        }
        while y < Rat::one() {
            y = &y * &two;
            e -= 1;
        }
        e
    }

    #[test]
    fn log2_parity_examples() {
        assert_eq!(log2_parity_colour(&r("1")).unwrap(), 0);
        assert_eq!(log2_parity_colour(&r("2")).unwrap(), 1);
        assert_eq!(log2_floor(&r("1/3")).unwrap(), -2);
        assert_eq!(log2_parity_colour(&r("1/3")).unwrap(), 0);
        assert_eq!(log2_parity_colour(&r("-3")).unwrap(), 1);
        assert_eq!(log2_parity_colour(&r("1/2")).unwrap(), 1);
        assert!(log2_parity_colour(&Rat::zero()).is_err());
        for s in ["7/8", "1/1024", "1023/1024", "1025/1024", "-4", "5/3", "3/5"] {
            assert_eq!(log2_floor(&r(s)).unwrap(), log2_floor_reference(&r(s)), "{s}");
        }
    }

    #[test]
    fn doubling_examples() {
        let g = GroundSet::slice(40, 6, true).unwrap();
        assert!(doubling_distinct(&Colouring::Log2Parity, &g));
        let g = GroundSet::range(2);
        assert!(!doubling_distinct(&table(&[(1, 0), (2, 0)]), &g));
        // pairs (1,2) and (2,4) both change colour; 3 has no double in the set
        let g = GroundSet::range(4);
        assert!(doubling_distinct(&table(&[(1, 0), (2, 1), (3, 0), (4, 0)]), &g));
        assert!(!doubling_distinct(&table(&[(1, 0), (2, 1), (3, 0), (4, 1)]), &g));
    }

    #[test]
    fn ground_sets() {
        assert!(GroundSet::new([r("1"), r("0")]).is_err());
        assert!(GroundSet::new([r("1"), r("2/2")]).is_err());
        let g = GroundSet::slice(4, 2, false).unwrap();
        assert_eq!(g.elements(), &[r("1/2"), r("1"), r("3/2"), r("2")]);
        assert_eq!(GroundSet::slice(3, 1, true).unwrap().len(), 6);
        assert!(GroundSet::slice(3, 0, true).is_err());
    }

    #[test]
    fn table_colouring_validation() {
        assert!(TableColouring::new([(r("1"), 0), (r("1"), 1)], None).is_err());
        assert!(TableColouring::new([(r("0"), 0)], None).is_err());
        assert!(TableColouring::new([(r("1"), 2)], Some(2)).is_err());
        assert_eq!(TableColouring::new([(r("1"), 2)], None).unwrap().count, 3);
    }

    #[test]
    fn mono_solution_examples() {
        let schur = m(&[&[1, 1, -1]]);
        let one_colour = table(&[(1, 0), (2, 0), (3, 0), (4, 0)]);
        let sol = mono_solutions(&schur, &one_colour, &GroundSet::range(4), SearchOptions::default())
            .unwrap()
            .unwrap();
        assert_eq!(sol.values(), &[r("1"), r("1"), r("2")]);

        let good = table(&[(1, 0), (4, 0), (2, 1), (3, 1)]);
        assert_eq!(
            mono_solutions(&schur, &good, &GroundSet::range(4), SearchOptions::default()).unwrap(),
            None
        );

        let opts = SearchOptions { distinct: true, ..Default::default() };
        let one_colour = table(&[(1, 0), (2, 0), (3, 0)]);
        let sol = mono_solutions(&schur, &one_colour, &GroundSet::range(3), opts).unwrap().unwrap();
        assert_eq!(sol.values(), &[r("1"), r("2"), r("3")]);
        assert!(verify_mono_solution(&schur, &one_colour, &sol, true).unwrap());
    }

    #[test]
    fn mono_search_budget_and_coverage() {
        let wide = m(&[&[1, 1, 1, 1, 1, -1]]);
        let g = GroundSet::range(100);
        let opts = SearchOptions { distinct: false, budget: 1000 };
        assert!(matches!(
            mono_solutions(&wide, &Colouring::Log2Parity, &g, opts),
            Err(Error::BudgetExceeded { .. })
        ));
        let uncovered = table(&[(1, 0)]);
        assert!(mono_solutions(&m(&[&[1, -1]]), &uncovered, &GroundSet::range(2), SearchOptions::default()).is_err());
    }

    #[test]
    fn log2_parity_has_no_monochromatic_doubles() {
        // y = 2x is never monochromatic under the parity colouring
        let a = m(&[&[2, -1]]);
        let g = GroundSet::slice(60, 12, true).unwrap();
        assert_eq!(mono_solutions(&a, &Colouring::Log2Parity, &g, SearchOptions::default()).unwrap(), None);
        // y = 4x is
        let a = m(&[&[4, -1]]);
        let sol = mono_solutions(&a, &Colouring::Log2Parity, &g, SearchOptions::default()).unwrap().unwrap();
        assert!(verify_mono_solution(&a, &Colouring::Log2Parity, &sol, false).unwrap());
    }

    #[test]
    fn verify_rejects() {
        let schur = m(&[&[1, 1, -1]]);
        let c = table(&[(1, 0), (2, 1), (3, 0)]);
        let bad_sum = SolutionAssignment::new(vec![r("1"), r("1"), r("3")]);
        assert!(!verify_mono_solution(&schur, &c, &bad_sum, false).unwrap());
        let two_colours = SolutionAssignment::new(vec![r("1"), r("1"), r("2")]);
        assert!(!verify_mono_solution(&schur, &c, &two_colours, false).unwrap());
        let one_colour = table(&[(1, 0), (2, 0)]);
        assert!(verify_mono_solution(&schur, &one_colour, &two_colours, false).unwrap());
        assert!(!verify_mono_solution(&schur, &one_colour, &two_colours, true).unwrap());
    }

    #[test]
    fn schur_numbers() {
        let schur = m(&[&[1, 1, -1]]);
        let out = min_rado_number(&schur, 2, 10).unwrap();
        assert_eq!(out, RadoOutcome::Found { n: 5, witness: vec![0, 1, 1, 0] });
        assert_eq!(min_rado_number(&schur, 1, 10).unwrap(), RadoOutcome::Found { n: 2, witness: vec![0] });
        // S(3) = 13
        match min_rado_number(&schur, 3, 20).unwrap() {
            RadoOutcome::Found { n, witness } => {
                assert_eq!(n, 14);
                let c = colouring_of_range(&witness, 3).unwrap();
                assert_eq!(mono_solutions(&schur, &c, &GroundSet::range(13), SearchOptions::default()).unwrap(), None);
            }
            other => panic!("{other:?}"),
        }
        // too small a window to reach the answer
        assert!(matches!(min_rado_number(&schur, 2, 4).unwrap(), RadoOutcome::Survivor { .. }));
    }

    #[test]
    fn generalized_schur_and_irregular() {
        // x + y + z = w: 2-colour Rado number m^2 - m - 1 = 11 for m = 4
        let a = m(&[&[1, 1, 1, -1]]);
        assert!(matches!(min_rado_number(&a, 2, 20).unwrap(), RadoOutcome::Found { n: 11, .. }));
        // x + y = 2z is solved by x = y = z
        let a = m(&[&[1, 1, -2]]);
        assert_eq!(min_rado_number(&a, 3, 10).unwrap(), RadoOutcome::Found { n: 1, witness: vec![] });
        // x + y = 3z fails the columns condition yet is 2-regular: exhaustive
        // enumeration of all 2^9 colourings of {1..9} finds no survivor
        let a = m(&[&[1, 1, -3]]);
        assert!(matches!(min_rado_number(&a, 2, 12).unwrap(), RadoOutcome::Found { n: 9, .. }));
        // ... but four colours avoid it on {1..64}
        match min_rado_number(&a, 4, 64).unwrap() {
            RadoOutcome::Survivor { colouring } => {
                let c = colouring_of_range(&colouring, 4).unwrap();
                assert_eq!(mono_solutions(&a, &c, &GroundSet::range(64), SearchOptions::default()).unwrap(), None);
            }
            other => panic!("{other:?}"),
        }
        // x = 2y is avoided by the log2 parity colouring
        let a = m(&[&[1, -2]]);
        match min_rado_number(&a, 2, 64).unwrap() {
            RadoOutcome::Survivor { colouring } => {
                assert_eq!(colouring.len(), 64);
                let c = colouring_of_range(&colouring, 2).unwrap();
                assert_eq!(mono_solutions(&a, &c, &GroundSet::range(64), SearchOptions::default()).unwrap(), None);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rado_bounds() {
        let schur = m(&[&[1, 1, -1]]);
        assert!(min_rado_number(&schur, 0, 10).is_err());
        assert!(min_rado_number(&schur, 5, 10).is_err());
        assert!(min_rado_number(&schur, 2, 0).is_err());
        assert!(min_rado_number(&schur, 2, 65).is_err());
        // rational coefficients are cleared row by row
        let halves = RatMatrix::from_rows(vec![vec![r("1/2"), r("1/2"), r("-1/2")]]).unwrap();
        assert_eq!(min_rado_number(&halves, 2, 10).unwrap(), min_rado_number(&schur, 2, 10).unwrap());
    }
}
