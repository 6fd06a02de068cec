use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact coefficient field shared by every polynomial in the crate.
pub type Rational = BigRational;

/// Complex pair used for `e^{ix}` intermediates.
pub type ComplexF = Complex64;

/// Scalars that polynomials can be evaluated over.
///
/// Implemented for [`Rational`] (exact), `f64` and [`ComplexF`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }

    /// True for 0, -1, -2, ...: the poles of the Gamma function.
    fn is_nonpositive_integer(&self) -> bool;

    fn pow_usize(&self, n: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && *self.numer() <= BigInt::zero()
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn is_nonpositive_integer(&self) -> bool {
        *self <= 0.0 && self.fract() == 0.0
    }
}

impl Scalar for ComplexF {
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }

    fn is_nonpositive_integer(&self) -> bool {
        self.im == 0.0 && self.re.is_nonpositive_integer()
    }
}

/// Nearest `f64`, falling back to a scaled quotient when either part overflows.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact rational value of a finite float (every finite `f64` is a dyadic rational).
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Parse `"p/q"`, an integer, or a decimal such as `-2.5e-3` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Domain(format!("not a rational number: {text:?}"));
    if t.contains('/') {
        let r: Rational = t.parse().map_err(|_| bad())?;
        return Ok(r);
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = int_part.trim_start_matches(['+', '-']);
    if digits.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !digits
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
        || int_part.len() > digits.len() + 1
    {
        return Err(bad());
    }
    let whole: BigInt = format!("{digits}{frac_part}").parse().map_err(|_| bad())?;
    let whole = if int_part.starts_with('-') {
        -whole
    } else {
        whole
    };
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let r = if scale >= 0 {
        Rational::from_integer(whole * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(whole, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(r)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `nu (nu - 1) ... (nu - k + 1)`; equal to 1 for `k = 0`.
pub fn falling_factorial<S: Scalar>(nu: &S, k: usize) -> S {
    (0..k).fold(S::one(), |acc, i| {
        acc * (nu.clone() - S::from_i64(i as i64))
    })
}

/// Rising factorial `nu (nu + 1) ... (nu + k - 1)`, i.e. `Γ(nu + k) / Γ(nu)`.
pub fn rising_factorial<S: Scalar>(nu: &S, k: usize) -> S {
    (0..k).fold(S::one(), |acc, i| {
        acc * (nu.clone() + S::from_i64(i as i64))
    })
}
