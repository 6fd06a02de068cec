//! Coefficient tables for every polynomial family, in exact rationals.
//!
//! Two-variable families (`hermite`, `pnxy`, `pnnu`) are listed by power of
//! `x`: entry `k` is the coefficient of `x^k y^{(n−k)/2}` (zero when `n − k`
//! is odd).

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::aux::{chebyshev_u_poly, hermite2_coeffs, pn_coeffs, pn_nu_coeffs, pn_one_var_poly};
use crate::combinatorics::{shared_table, touchard};
use crate::dpolys::{delta_elem, lambda_elem, pi_poly, q_poly};
use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Stirling2,
    Touchard,
    Hermite,
    PnXy,
    PnNu,
    PnZ,
    Chebyshev,
    Pi,
    Q,
    Lambda,
    Delta,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Stirling2,
        Family::Touchard,
        Family::Hermite,
        Family::PnXy,
        Family::PnNu,
        Family::PnZ,
        Family::Chebyshev,
        Family::Pi,
        Family::Q,
        Family::Lambda,
        Family::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling2 => "stirling2",
            Family::Touchard => "touchard",
            Family::Hermite => "hermite",
            Family::PnXy => "pnxy",
            Family::PnNu => "pnnu",
            Family::PnZ => "pnz",
            Family::Chebyshev => "chebyshev",
            Family::Pi => "pi",
            Family::Q => "q",
            Family::Lambda => "lambda",
            Family::Delta => "delta",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

/// One row: order `n` and its coefficients, low power first.
#[derive(Clone, Debug, PartialEq)]
pub struct TableEntry {
    pub n: usize,
    pub coefficients: Vec<Rational>,
    /// Coefficients of the `s`-part (only for `delta`).
    pub s_coefficients: Option<Vec<Rational>>,
}

impl TableEntry {
    fn plain(n: usize, coefficients: Vec<Rational>) -> Self {
        TableEntry {
            n,
            coefficients,
            s_coefficients: None,
        }
    }
}

fn by_x_power(n: usize, r_coeffs: Vec<Rational>) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (r, c) in r_coeffs.into_iter().enumerate() {
        out[n - 2 * r] = c;
    }
    out
}

fn ints(v: Vec<num_bigint::BigInt>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_integer).collect()
}

/// Rows `0..=n_max` of a family. `lambda`/`delta` need `j`, `pnnu` needs `nu`.
pub fn table(
    family: Family,
    n_max: usize,
    j: Option<usize>,
    nu: Option<&Rational>,
) -> Result<Vec<TableEntry>> {
    let need_j = || j.ok_or(Error::MissingParameter("j"));
    match family {
        Family::Stirling2 => {
            let t = shared_table(n_max);
            Ok((0..=n_max)
                .map(|n| TableEntry::plain(n, ints(t.row(n).unwrap().to_vec())))
                .collect())
        }
        Family::Touchard => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, touchard(n).poly.into_coeffs()))
            .collect()),
        Family::Hermite => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, by_x_power(n, ints(hermite2_coeffs(n)))))
            .collect()),
        Family::PnXy => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, by_x_power(n, ints(pn_coeffs(n)))))
            .collect()),
        Family::PnNu => {
            let nu = nu.ok_or(Error::MissingParameter("nu"))?;
            (0..=n_max)
                .map(|n| Ok(TableEntry::plain(n, by_x_power(n, pn_nu_coeffs(n, nu)?))))
                .collect()
        }
        Family::PnZ => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, pn_one_var_poly(n).into_coeffs()))
            .collect()),
        Family::Chebyshev => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, chebyshev_u_poly(n).into_coeffs()))
            .collect()),
        Family::Pi => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, pi_poly(n).p.into_coeffs()))
            .collect()),
        Family::Q => Ok((0..=n_max)
            .map(|n| TableEntry::plain(n, q_poly(n).q.into_coeffs()))
            .collect()),
        Family::Lambda => {
            let j = need_j()?;
            Ok((0..=n_max)
                .map(|m| TableEntry::plain(m, lambda_elem(m, j).poly().coeffs().to_vec()))
                .collect())
        }
        Family::Delta => {
            let j = need_j()?;
            Ok((0..=n_max)
                .map(|m| {
                    let e = delta_elem(m, j).carrier;
                    TableEntry {
                        n: m,
                        coefficients: e.a.into_coeffs(),
                        s_coefficients: Some(e.b.into_coeffs()),
                    }
                })
                .collect())
        }
    }
}
