//! Stirling numbers of the second kind, Touchard polynomials and the
//! normal-ordered expansion of `(ξ ∂_ξ)^m`.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{binomial, factorial, Scalar};

/// Triangle of `S₂(n, k)` for `0 ≤ k ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut table = StirlingTable {
            rows: vec![vec![BigInt::one()]],
        };
        table.extend_to(n_max);
        table
    }

    fn extend_to(&mut self, n_max: usize) {
        for n in self.rows.len()..=n_max {
            let prev = &self.rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let stay = prev
                        .get(k)
                        .map_or_else(BigInt::zero, |v| v * BigInt::from(k));
                    let join = if k == 0 {
                        BigInt::zero()
                    } else {
                        prev[k - 1].clone()
                    };
                    stay + join
                })
                .collect();
            self.rows.push(row);
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S₂(n, k)`, zero for `k > n`; `None` when `n` is beyond the table.
    pub fn get(&self, n: usize, k: usize) -> Option<BigInt> {
        let row = self.rows.get(n)?;
        Some(row.get(k).cloned().unwrap_or_else(BigInt::zero))
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }
}

static SHARED: RwLock<Option<Arc<StirlingTable>>> = RwLock::new(None);

/// Process-wide memoized table covering at least `n_max` rows.
pub fn shared_table(n_max: usize) -> Arc<StirlingTable> {
    if let Some(t) = SHARED.read().unwrap().as_ref() {
        if t.n_max() >= n_max {
            return Arc::clone(t);
        }
    }
    let mut guard = SHARED.write().unwrap();
    let mut table = match guard.as_ref() {
        Some(t) if t.n_max() >= n_max => return Arc::clone(t),
        Some(t) => (**t).clone(),
        None => StirlingTable::new(0),
    };
    table.extend_to(n_max);
    let table = Arc::new(table);
    *guard = Some(Arc::clone(&table));
    table
}

/// `S₂(n, k)` by the triangle recurrence; `k > n` gives 0.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    shared_table(n).get(n, k).expect("table covers n")
}

/// `S₂(n, k) = (1/k!) Σ_j (−1)^{k−j} C(k, j) j^n`, evaluated directly.
pub fn stirling2_explicit(n: usize, k: usize) -> BigInt {
    let sum = (0..=k).fold(BigInt::zero(), |acc, j| {
        let term = binomial(k, j) * num_traits::pow(BigInt::from(j), n);
        if (k - j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    });
    sum / factorial(k)
}

/// `T_n(x) = Σ_k S₂(n, k) x^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TouchardPoly {
    pub n: usize,
    pub poly: Poly,
}

impl TouchardPoly {
    /// `T_n(1)`, the n-th Bell number.
    pub fn at_one(&self) -> BigInt {
        self.poly.coeffs().iter().map(|c| c.to_integer()).sum()
    }
}

pub fn touchard(n: usize) -> TouchardPoly {
    let table = shared_table(n);
    TouchardPoly {
        n,
        poly: Poly::from_bigints(table.row(n).expect("table covers n")),
    }
}

/// Bell numbers `B_0 ..= B_{n_max}` from `B_{n+1} = Σ_k C(n, k) B_k`.
pub fn bell_numbers(n_max: usize) -> Vec<BigInt> {
    let mut bell = vec![BigInt::one()];
    for n in 0..n_max {
        let next = (0..=n).map(|k| binomial(n, k) * &bell[k]).sum();
        bell.push(next);
    }
    bell
}

/// Apply `(ξ∂_ξ)^m = Σ_r S₂(m, r) ξ^r ∂_ξ^r` given `derivs[r] = f^{(r)}(ξ)`.
pub fn xd_expand_apply<S: Scalar>(m: usize, derivs: &[S], xi: &S) -> Result<S> {
    if derivs.len() != m + 1 {
        return Err(Error::LengthMismatch {
            expected: m + 1,
            got: derivs.len(),
        });
    }
    let table = shared_table(m);
    let row = table.row(m).expect("table covers m");
    let mut power = S::one();
    let mut acc = S::zero();
    for (s2, d) in row.iter().zip(derivs) {
        if !s2.is_zero() {
            acc = acc + S::from_int(s2) * power.clone() * d.clone();
        }
        power = power * xi.clone();
    }
    Ok(acc)
}
