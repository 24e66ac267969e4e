//! Exact machinery for partition regularity of linear systems over subrings
//! of the rationals.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`rings`]: canonical rationals, prime sets and the localized subrings
//!   `G_F = { a/b : every prime factor of b lies in F }`, p-adic valuations
//!   and the constructive pigeonhole for `m * G_F`.
//! * [`linalg`]: dense exact matrices, reduced row echelon form and span
//!   membership with witness coefficients.
//! * [`rado`]: a certifying decision procedure for Rado's columns condition
//!   and the (weak) first entries condition.
//! * [`systems`]: coefficient schedules, truncations of the infinite system
//!   `x_{n,1} + ... + x_{n,n} + sum_i d_{n,i} y_i = z_n` (n >= 2), the stacked
//!   `(I; A; B)` first-entries matrix and the denominator obstruction.
//! * [`search`]: colourings, monochromatic solution search and Rado numbers.
#![no_std]
#[cfg(test)]
extern crate std;

extern crate alloc;

mod error;
pub mod linalg;
pub mod rado;
pub mod rings;
pub mod search;
pub mod systems;

pub use error::{Error, Result};
pub use linalg::RatMatrix;
pub use rings::{PrimeSet, Rat, Valuation};
