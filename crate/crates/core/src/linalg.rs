//! Dense exact linear algebra over the rationals.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Rat, Result};

/// A dense `rows x cols` rational matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<RatMatrix> {
        let expected = rows.checked_mul(cols).ok_or_else(|| Error::OutOfRange {
            what: "matrix shape",
            detail: format!("{rows} x {cols}"),
        })?;
        if entries.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: entries.len(),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. No rows gives the `0 x 0` matrix.
    pub fn from_rows<T: Into<Rat>>(rows: impl IntoIterator<Item = Vec<T>>) -> Result<RatMatrix> {
        let mut entries = Vec::new();
        let mut cols = None;
        let mut count = 0;
        for row in rows {
            let width = *cols.get_or_insert(row.len());
            if row.len() != width {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    found: row.len(),
                });
            }
            entries.extend(row.into_iter().map(Into::into));
            count += 1;
        }
        Ok(RatMatrix {
            rows: count,
            cols: cols.unwrap_or(0),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rat]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Multiplies row `i` by `factor`.
    pub fn scale_row(&mut self, i: usize, factor: &Rat) {
        let cols = self.cols;
        for e in &mut self.entries[i * cols..(i + 1) * cols] {
            *e *= factor;
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&RatMatrix]) -> Result<RatMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut out = RatMatrix::zeros(0, cols);
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: b.cols,
                });
            }
            out.entries.extend_from_slice(&b.entries);
            out.rows += b.rows;
        }
        Ok(out)
    }

    /// The product `M x`.
    pub fn mul_vec(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Reduced row echelon form and the (zero-based, increasing) pivot columns.
    ///
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row; exact arithmetic needs no magnitude pivoting.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip().expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let delta = &factor * m.get(r, j);
                    m.entries[i * m.cols + j] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("]")
    }
}

/// Coefficients `l` with `sum_j l[j] * vectors[j] = target`, or `None` when the
/// target is outside the span. Free variables are set to zero, so the witness
/// is deterministic.
pub fn in_span(vectors: &[Vec<Rat>], target: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let dim = target.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.len(),
        });
    }
    let n = vectors.len();
    // augmented [v_1 ... v_n | target]
    let mut entries = Vec::with_capacity(dim * (n + 1));
    for i in 0..dim {
        entries.extend(vectors.iter().map(|v| v[i].clone()));
        entries.push(target[i].clone());
    }
    let aug = RatMatrix::new(dim, n + 1, entries)?;
    let (reduced, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut coeffs = vec![Rat::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        coeffs[c] = reduced.get(row, n).clone();
    }
    Ok(Some(coeffs))
}

/// An incrementally grown column space, kept as vectors in echelon form so
/// that membership is a single reduction pass.
#[derive(Debug, Clone)]
pub struct ColumnSpace {
    dim: usize,
    // (pivot index, vector with 1 at pivot)
    basis: Vec<(usize, Vec<Rat>)>,
}

impl ColumnSpace {
    pub fn new(dim: usize) -> ColumnSpace {
        ColumnSpace {
            dim,
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim, "vector dimension");
        let mut v = v.to_vec();
        for (p, b) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let factor = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero");
        for x in &mut r {
            *x *= &inv;
        }
        // keep earlier basis vectors reduced at the new pivot
        for (_, b) in &mut self.basis {
            if b[p].is_zero() {
                continue;
            }
            let factor = b[p].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                *x -= &(&factor * y);
            }
        }
        self.basis.push((p, r));
        true
    }
}
