//! Truncated formal power series in `t` with ring-valued coefficients.

use std::fmt::Debug;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ext::ExtElem;
use crate::poly::Poly;
use crate::scalar::{factorial, Rational};

/// Commutative Q-algebra operations needed by [`SeriesInT`].
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_scale(&self, c: &Rational) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for ExtElem {
    fn zero_like(&self) -> Self {
        ExtElem::zero(self.sigma)
    }
    fn one_like(&self) -> Self {
        ExtElem::one(self.sigma)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// `Σ_{k ≤ order} c_k t^k`; every operation truncates at `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesInT<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> SeriesInT<C> {
    /// Series whose coefficients are `unit · scalars[k]`.
    pub fn from_scalars(scalars: &[Rational], unit: &C, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| match scalars.get(k) {
                Some(c) => unit.ring_scale(c),
                None => unit.zero_like(),
            })
            .collect();
        SeriesInT { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c · t^k`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        SeriesInT { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    /// `k! · c_k`, the k-th entry of an exponential generating function.
    pub fn egf_coeff(&self, k: usize) -> C {
        self.coeffs[k].ring_scale(&Rational::from_integer(factorial(k)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncated at different orders"
        );
        SeriesInT {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer(BigInt::from(-1))))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SeriesInT {
            coeffs: self.coeffs.iter().map(|a| a.ring_scale(c)).collect(),
        }
    }

    /// Multiply every coefficient by a ring element.
    pub fn mul_elem(&self, e: &C) -> Self {
        SeriesInT {
            coeffs: self.coeffs.iter().map(|a| a.ring_mul(e)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncated at different orders"
        );
        let n = self.order();
        let mut coeffs: Vec<C> = (0..=n).map(|_| self.coeffs[0].zero_like()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.ring_is_zero() {
                    coeffs[i + j] = coeffs[i + j].ring_add(&a.ring_mul(b));
                }
            }
        }
        SeriesInT { coeffs }
    }

    pub fn pow(&self, n: usize) -> Self {
        let one = SeriesInT::constant(self.coeffs[0].one_like(), self.order());
        (0..n).fold(one, |acc, _| acc.mul(self))
    }

    /// `1 / (1 − self) = Σ_k self^k`; requires a vanishing constant term.
    pub fn geometric(&self) -> Result<Self> {
        if !self.coeffs[0].ring_is_zero() {
            return Err(Error::Domain(
                "geometric series needs a zero constant term".into(),
            ));
        }
        let order = self.order();
        let mut acc = SeriesInT::constant(self.coeffs[0].one_like(), order);
        let mut term = acc.clone();
        for _ in 1..=order {
            term = term.mul(self);
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Scalar Maclaurin coefficients lifted into `Poly` constants.
pub fn scalar_series(scalars: &[Rational], order: usize) -> SeriesInT<Poly> {
    SeriesInT::from_scalars(scalars, &Poly::one(), order)
}

/// True when every coefficient is zero.
pub fn is_zero_series<C: Ring>(s: &SeriesInT<C>) -> bool {
    s.coeffs().iter().all(Ring::ring_is_zero)
}
