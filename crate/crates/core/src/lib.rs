//! Exact closed forms for repeated derivatives of `tan`, `sec`, `sech`,
//! `arctan`, `arccos` and related functions, together with the polynomial
//! families behind them and an independent Taylor-jet oracle.

pub mod aux;
pub mod checks;
pub mod combinatorics;
pub mod dpolys;
pub mod engine;
pub mod error;
pub mod ext;
pub mod jet;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod series;
pub mod tables;

pub use error::{Error, Result};
pub use ext::{ExtElem, Sigma};
pub use poly::Poly;
pub use scalar::{ComplexF, Rational, Scalar};
pub use series::SeriesInT;
