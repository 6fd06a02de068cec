//! The quadratic extension `Q[ξ][s] / (s² − σ(ξ))` used to keep
//! radical-bearing derivatives exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

/// The defining relation `s² = σ(ξ)` of the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sigma {
    /// `s = √(1 + ξ²)`, the `ξ = tan x` substitution.
    OnePlusSquare,
    /// `s = √(1 − ξ²)`, the `ξ = cos x` substitution.
    OneMinusSquare,
}

impl Sigma {
    pub fn poly(self) -> Poly {
        match self {
            Sigma::OnePlusSquare => Poly::from_ints(&[1, 0, 1]),
            Sigma::OneMinusSquare => Poly::from_ints(&[1, 0, -1]),
        }
    }
}

/// `a(ξ) + b(ξ)·s` with `s² = σ(ξ)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    pub a: Poly,
    pub b: Poly,
    pub sigma: Sigma,
}

/// The coefficient multiplying `∂_ξ` in a first-order operator.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    Poly(Poly),
    /// The ring generator `s` itself.
    Radical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl ExtElem {
    pub fn new(a: Poly, b: Poly, sigma: Sigma) -> Self {
        ExtElem { a, b, sigma }
    }

    pub fn from_poly(a: Poly, sigma: Sigma) -> Self {
        ExtElem::new(a, Poly::zero(), sigma)
    }

    pub fn zero(sigma: Sigma) -> Self {
        ExtElem::from_poly(Poly::zero(), sigma)
    }

    pub fn one(sigma: Sigma) -> Self {
        ExtElem::from_poly(Poly::one(), sigma)
    }

    /// The generator `s`.
    pub fn s(sigma: Sigma) -> Self {
        ExtElem::new(Poly::zero(), Poly::one(), sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_ring(&self, other: &ExtElem) {
        assert_eq!(
            self.sigma, other.sigma,
            "mixing elements of different rings"
        );
    }

    pub fn add(&self, other: &ExtElem) -> ExtElem {
        self.check_ring(other);
        ExtElem::new(&self.a + &other.a, &self.b + &other.b, self.sigma)
    }

    pub fn sub(&self, other: &ExtElem) -> ExtElem {
        self.check_ring(other);
        ExtElem::new(&self.a - &other.a, &self.b - &other.b, self.sigma)
    }

    pub fn neg(&self) -> ExtElem {
        ExtElem::new(-&self.a, -&self.b, self.sigma)
    }

    pub fn mul(&self, other: &ExtElem) -> ExtElem {
        self.check_ring(other);
        let sigma = self.sigma.poly();
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &sigma);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        ExtElem::new(a, b, self.sigma)
    }

    pub fn scale(&self, c: &Rational) -> ExtElem {
        ExtElem::new(self.a.scale(c), self.b.scale(c), self.sigma)
    }

    pub fn mul_poly(&self, p: &Poly) -> ExtElem {
        ExtElem::new(&self.a * p, &self.b * p, self.sigma)
    }

    pub fn pow(&self, n: usize) -> ExtElem {
        (0..n).fold(ExtElem::one(self.sigma), |acc, _| acc.mul(self))
    }

    /// Evaluate with explicit values for `ξ` and `s`; the caller picks the branch of `s`.
    pub fn eval<S: Scalar>(&self, xi: &S, s: &S) -> S {
        self.a.eval(xi) + self.b.eval(xi) * s.clone()
    }

    /// One application of `sign · weight(ξ) · ∂_ξ`, using `∂_ξ s = σ'/(2s)`.
    ///
    /// Fails when the image leaves the ring, i.e. when `weight · b · σ'`
    /// is not divisible by `2σ` for a polynomial weight.
    pub fn apply_d(&self, weight: &Weight, sign: Sign) -> Result<ExtElem> {
        let sigma = self.sigma.poly();
        let dsigma = sigma.derive();
        let half = Rational::new(1.into(), 2.into());
        let (a, b) = match weight {
            Weight::Poly(w) => {
                // w·∂(a + b s) = w a' + (w b' + w b σ' / (2σ)) s
                let (quot, rem) = (&(w * &self.b) * &dsigma).div_rem(&sigma);
                if !rem.is_zero() {
                    return Err(Error::Configuration(format!(
                        "({w})·d/dξ does not preserve the ring s² = {sigma}"
                    )));
                }
                (
                    w * &self.a.derive(),
                    &(w * &self.b.derive()) + &quot.scale(&half),
                )
            }
            // s·∂(a + b s) = (b' σ + b σ' / 2) + a' s
            Weight::Radical => (
                &(&self.b.derive() * &sigma) + &(&self.b * &dsigma).scale(&half),
                self.a.derive(),
            ),
        };
        let out = ExtElem::new(a, b, self.sigma);
        Ok(match sign {
            Sign::Plus => out,
            Sign::Minus => out.neg(),
        })
    }
}

/// `ext_apply_D`: free-function form of [`ExtElem::apply_d`].
pub fn ext_apply_d(e: &ExtElem, weight: &Weight, sign: Sign) -> Result<ExtElem> {
    e.apply_d(weight, sign)
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElem({self})")
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sigma {
            Sigma::OnePlusSquare => "√(1+x^2)",
            Sigma::OneMinusSquare => "√(1-x^2)",
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b == Poly::one() => write!(f, "{s}"),
            (true, false) => write!(f, "({})·{s}", self.b),
            (false, false) => write!(f, "{} + ({})·{s}", self.a, self.b),
        }
    }
}
