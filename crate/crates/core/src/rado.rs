//! Rado's columns condition and the first entries conditions.
//!
//! A matrix with columns `c_1, ..., c_v` satisfies the columns condition when
//! its column indices split into ordered blocks `I_1, ..., I_m` such that the
//! columns in `I_1` sum to zero and, for `t >= 2`, the columns in `I_t` sum to a
//! rational combination of the columns in `I_1 u ... u I_{t-1}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{in_span, ColumnSpace};
use crate::{Error, Rat, RatMatrix, Result};

/// Largest column count [`columns_condition`] accepts; the search is
/// exponential in it.
pub const MAX_CC_COLUMNS: usize = 20;

/// A witness that a matrix satisfies the columns condition.
///
/// Column indices are zero-based and each block is sorted. `witnesses[t - 1]`
/// belongs to `blocks[t]` and holds one coefficient per column of the earlier
/// blocks, taken in increasing column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcCertificate {
    pub blocks: Vec<Vec<usize>>,
    pub witnesses: Vec<Vec<Rat>>,
}

impl CcCertificate {
    /// Sorted columns of `blocks[..t]`.
    pub fn earlier_columns(&self, t: usize) -> Vec<usize> {
        let mut cols: Vec<usize> = self.blocks[..t].iter().flatten().copied().collect();
        cols.sort_unstable();
        cols
    }
}

fn columns(a: &RatMatrix) -> Vec<Vec<Rat>> {
    (0..a.cols()).map(|j| a.column(j)).collect()
}

fn column_sum(cols: &[Vec<Rat>], dim: usize, mask: u32) -> Vec<Rat> {
    let mut sum = vec![Rat::zero(); dim];
    for (j, c) in cols.iter().enumerate() {
        if mask >> j & 1 == 1 {
            for (s, x) in sum.iter_mut().zip(c) {
                *s += x;
            }
        }
    }
    sum
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|j| mask >> j & 1 == 1).collect()
}

struct Search<'a> {
    cols: &'a [Vec<Rat>],
    dim: usize,
    full: u32,
    // used sets from which the full set cannot be reached
    dead: BTreeSet<u32>,
}

impl Search<'_> {
    /// Appends blocks to `chain` until every column is used. Returns false
    /// (leaving `chain` as it was) if that is impossible from `used`.
    fn extend(&mut self, used: u32, chain: &mut Vec<u32>) -> bool {
        if used == self.full {
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        let mut space = ColumnSpace::new(self.dim);
        for j in mask_indices(used) {
            space.insert(&self.cols[j]);
        }
        let unused = self.full & !used;
        // nonempty submasks of `unused` in increasing numeric order
        let mut block = 0u32;
        loop {
            block = (block | !unused).wrapping_add(1) & unused;
            if block == 0 {
                break;
            }
            if !space.contains(&column_sum(self.cols, self.dim, block)) {
                continue;
            }
            chain.push(block);
            if self.extend(used | block, chain) {
                return true;
            }
            chain.pop();
            // An admissible block never hurts: every later block stays
            // admissible once `block` is used, minus the columns it took.
            // So if this one fails, all of them do.
            break;
        }
        self.dead.insert(used);
        false
    }
}

/// Decides the columns condition, returning a certificate when it holds.
///
/// First blocks are tried in increasing bitmask order, later blocks
/// smallest-bitmask first, so the certificate is the one with the
/// lexicographically least sequence of block masks.
pub fn columns_condition(a: &RatMatrix) -> Result<Option<CcCertificate>> {
    let v = a.cols();
    if v > MAX_CC_COLUMNS {
        return Err(Error::OutOfRange {
            what: "column count",
            detail: format!("{v} columns, the columns condition search allows at most {MAX_CC_COLUMNS}"),
        });
    }
    if v == 0 {
        return Ok(None);
    }
    let cols = columns(a);
    let mut search = Search {
        cols: &cols,
        dim: a.rows(),
        full: (1u32 << v) - 1,
        dead: BTreeSet::new(),
    };
    for first in 1..=search.full {
        if !column_sum(&cols, a.rows(), first).iter().all(Rat::is_zero) {
            continue;
        }
        let mut chain = vec![first];
        if search.extend(first, &mut chain) {
            return Ok(Some(certificate(&cols, a.rows(), &chain)));
        }
    }
    Ok(None)
}

fn certificate(cols: &[Vec<Rat>], dim: usize, chain: &[u32]) -> CcCertificate {
    let mut witnesses = Vec::with_capacity(chain.len().saturating_sub(1));
    let mut used = chain[0];
    for &block in &chain[1..] {
        let earlier: Vec<Vec<Rat>> = mask_indices(used).into_iter().map(|j| cols[j].clone()).collect();
        let target = column_sum(cols, dim, block);
        let w = in_span(&earlier, &target)
            .expect("dimensions agree")
            .expect("admissible block lies in the span");
        witnesses.push(w);
        used |= block;
    }
    CcCertificate {
        blocks: chain.iter().map(|&m| mask_indices(m)).collect(),
        witnesses,
    }
}

/// Checks a certificate against `a` by exact recomputation.
///
/// Out-of-range column indices are an error; every other defect (overlap,
/// missing columns, empty blocks, wrong sums, malformed witnesses) makes the
/// answer `false`.
pub fn verify_cc_certificate(a: &RatMatrix, cert: &CcCertificate) -> Result<bool> {
    let v = a.cols();
    if let Some(&bad) = cert.blocks.iter().flatten().find(|&&j| j >= v) {
        return Err(Error::OutOfRange {
            what: "certificate column",
            detail: format!("index {bad} with {v} columns"),
        });
    }
    let mut seen = vec![false; v];
    for &j in cert.blocks.iter().flatten() {
        if core::mem::replace(&mut seen[j], true) {
            return Ok(false);
        }
    }
    if cert.blocks.is_empty()
        || cert.blocks.iter().any(Vec::is_empty)
        || !seen.iter().all(|&s| s)
        || cert.witnesses.len() != cert.blocks.len() - 1
    {
        return Ok(false);
    }
    let block_sum = |block: &[usize]| -> Vec<Rat> {
        (0..a.rows())
            .map(|i| block.iter().map(|&j| a.get(i, j)).sum())
            .collect()
    };
    if !block_sum(&cert.blocks[0]).iter().all(Rat::is_zero) {
        return Ok(false);
    }
    for (t, w) in cert.witnesses.iter().enumerate() {
        let earlier = cert.earlier_columns(t + 1);
        if w.len() != earlier.len() {
            return Ok(false);
        }
        let combo: Vec<Rat> = (0..a.rows())
            .map(|i| earlier.iter().zip(w).map(|(&j, l)| a.get(i, j) * l).sum())
            .collect();
        if combo != block_sum(&cert.blocks[t + 1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The leftmost nonzero entry of a row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstEntry {
    pub row: usize,
    pub col: usize,
    pub value: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstEntryReport {
    /// One per nonzero row, in row order.
    pub entries: Vec<FirstEntry>,
    pub zero_rows: Vec<usize>,
    /// Whether first entries sharing a column are equal.
    pub all_equal: bool,
    /// The single value of every first entry, when there is one.
    pub common_value: Option<Rat>,
}

pub fn first_entries(a: &RatMatrix) -> FirstEntryReport {
    let mut entries = Vec::new();
    let mut zero_rows = Vec::new();
    for (i, row) in a.row_iter().enumerate() {
        match row.iter().position(|x| !x.is_zero()) {
            Some(j) => entries.push(FirstEntry {
                row: i,
                col: j,
                value: row[j].clone(),
            }),
            None => zero_rows.push(i),
        }
    }
    let all_equal = entries.iter().all(|e| {
        entries
            .iter()
            .filter(|f| f.col == e.col)
            .all(|f| f.value == e.value)
    });
    let common_value = match entries.first() {
        Some(e0) if entries.iter().all(|e| e.value == e0.value) => Some(e0.value.clone()),
        _ => None,
    };
    FirstEntryReport {
        entries,
        zero_rows,
        all_equal,
        common_value,
    }
}

/// No zero rows, and first entries in a common column are equal.
pub fn weak_first_entries_condition(a: &RatMatrix) -> bool {
    let report = first_entries(a);
    report.zero_rows.is_empty() && report.all_equal
}

/// No zero rows, and every first entry equals one constant, which is
/// returned.
pub fn first_entries_condition_strict(a: &RatMatrix) -> Option<Rat> {
    let report = first_entries(a);
    if report.zero_rows.is_empty() {
        report.common_value
    } else {
        None
    }
}
