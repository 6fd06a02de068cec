//! Truncated Taylor series ("jets") used as the independent derivative oracle.
//!
//! A jet of order `N` at `x₀` stores `f^{(k)}(x₀)/k!` for `k = 0..=N`.
//! Every target function is assembled from seeded elementary jets with jet
//! arithmetic, so no closed form under test is reused here.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, rational_from_f64, Rational, Scalar};

/// Functions the oracle knows how to expand.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Sec,
    Cot,
    Exp,
    Sinh,
    Cosh,
    Sech,
    /// `sech(x)^ν`
    SechPow {
        nu: f64,
    },
    Arctan,
    Arccos,
    /// `1/(1+x²)`
    Lorentz,
    /// `(1+x²)^{−ν}`
    LorentzPow {
        nu: f64,
    },
    /// `cos(x)^j`
    CosPow {
        j: usize,
    },
    /// `e^{−x²}`
    Gaussian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

/// Magnitude below which a divisor's constant term counts as a pole.
pub const POLE_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet<S> {
    coeffs: Vec<S>,
    base: S,
}

impl<S: Scalar> Jet<S> {
    pub fn from_coeffs(coeffs: Vec<S>, base: S) -> Self {
        assert!(!coeffs.is_empty(), "a jet carries at least its value");
        Jet { coeffs, base }
    }

    pub fn constant(c: S, base: S, order: usize) -> Self {
        let mut coeffs = vec![S::zero(); order + 1];
        coeffs[0] = c;
        Jet { coeffs, base }
    }

    /// The identity function `x` expanded at `base`.
    pub fn variable(base: S, order: usize) -> Self {
        let mut jet = Jet::constant(base.clone(), base, order);
        if order >= 1 {
            jet.coeffs[1] = S::one();
        }
        jet
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    /// `f^{(k)}(x₀) = k! · coeffs[k]`.
    pub fn derivative(&self, k: usize) -> S {
        S::from_int(&factorial(k)) * self.coeffs[k].clone()
    }

    fn zip_with(&self, other: &Jet<S>, f: impl Fn(S, S) -> S) -> Jet<S> {
        assert_eq!(
            self.order(),
            other.order(),
            "jets truncated at different orders"
        );
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
            base: self.base.clone(),
        }
    }

    pub fn add(&self, other: &Jet<S>) -> Jet<S> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Jet<S>) -> Jet<S> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &S) -> Jet<S> {
        Jet {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            base: self.base.clone(),
        }
    }

    pub fn add_constant(&self, c: &S) -> Jet<S> {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].clone() + c.clone();
        out
    }

    pub fn neg(&self) -> Jet<S> {
        self.scale(&-S::one())
    }

    pub fn mul(&self, other: &Jet<S>) -> Jet<S> {
        assert_eq!(
            self.order(),
            other.order(),
            "jets truncated at different orders"
        );
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(S::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * other.coeffs[k - i].clone()
                })
            })
            .collect();
        Jet {
            coeffs,
            base: self.base.clone(),
        }
    }

    pub fn pow_int(&self, n: usize) -> Jet<S> {
        let one = Jet::constant(S::one(), self.base.clone(), self.order());
        (0..n).fold(one, |acc, _| acc.mul(self))
    }

    /// Series division; a (near-)vanishing constant term in `other` is a pole.
    pub fn div(&self, other: &Jet<S>, is_pole: impl Fn(&S) -> bool) -> Result<Jet<S>> {
        assert_eq!(
            self.order(),
            other.order(),
            "jets truncated at different orders"
        );
        let d0 = other.coeffs[0].clone();
        if is_pole(&d0) {
            return Err(Error::Domain(format!(
                "jet division by a series with vanishing constant term {d0:?}"
            )));
        }
        let mut q: Vec<S> = Vec::with_capacity(self.coeffs.len());
        for k in 0..self.coeffs.len() {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc = acc - other.coeffs[i].clone() * q[k - i].clone();
            }
            q.push(acc / d0.clone());
        }
        Ok(Jet {
            coeffs: q,
            base: self.base.clone(),
        })
    }

    /// Antiderivative with the given value at the base point; the top coefficient drops off.
    pub fn integrate(&self, value_at_base: S) -> Jet<S> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(value_at_base);
        for k in 1..self.coeffs.len() {
            coeffs.push(self.coeffs[k - 1].clone() / S::from_i64(k as i64));
        }
        Jet {
            coeffs,
            base: self.base.clone(),
        }
    }

    /// `self^α`, given `c₀^α` for the constant term `c₀ ≠ 0`.
    ///
    /// From `f g' = α f' g`:
    /// `g_k = (1/(k f₀)) Σ_{j=1..k} (α j − (k − j)) f_j g_{k−j}`.
    pub fn pow_real(&self, alpha: &S, c0_pow: S) -> Result<Jet<S>> {
        let f0 = self.coeffs[0].clone();
        if f0.is_zero() {
            return Err(Error::Domain(
                "real power of a jet with zero constant term".into(),
            ));
        }
        let mut g = vec![c0_pow];
        for k in 1..self.coeffs.len() {
            let mut acc = S::zero();
            for j in 1..=k {
                let w = alpha.clone() * S::from_i64(j as i64) - S::from_i64((k - j) as i64);
                acc = acc + w * self.coeffs[j].clone() * g[k - j].clone();
            }
            g.push(acc / (S::from_i64(k as i64) * f0.clone()));
        }
        Ok(Jet {
            coeffs: g,
            base: self.base.clone(),
        })
    }

    /// `e^{self}`, given `e^{c₀}`; from `g' = f' g`.
    pub fn exp_with(&self, exp_c0: S) -> Jet<S> {
        let mut g = vec![exp_c0];
        for k in 1..self.coeffs.len() {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + S::from_i64(j as i64) * self.coeffs[j].clone() * g[k - j].clone();
            }
            g.push(acc / S::from_i64(k as i64));
        }
        Jet {
            coeffs: g,
            base: self.base.clone(),
        }
    }

    /// `(sin, cos)` expanded at the base given their values there.
    pub fn sin_cos(sin0: S, cos0: S, base: S, order: usize) -> (Jet<S>, Jet<S>) {
        let cycle_sin = [sin0.clone(), cos0.clone(), -sin0.clone(), -cos0.clone()];
        let cycle_cos = [cos0.clone(), -sin0, -cos0.clone(), cycle_sin[0].clone()];
        let build = |cycle: &[S; 4]| {
            (0..=order)
                .map(|k| cycle[k % 4].clone() / S::from_int(&factorial(k)))
                .collect::<Vec<_>>()
        };
        (
            Jet::from_coeffs(build(&cycle_sin), base.clone()),
            Jet::from_coeffs(build(&cycle_cos), base),
        )
    }

    /// `(sinh, cosh)` expanded at the base given their values there.
    pub fn sinh_cosh(sinh0: S, cosh0: S, base: S, order: usize) -> (Jet<S>, Jet<S>) {
        let build = |even: &S, odd: &S| {
            (0..=order)
                .map(|k| if k % 2 == 0 { even.clone() } else { odd.clone() } / S::from_int(&factorial(k)))
                .collect::<Vec<_>>()
        };
        (
            Jet::from_coeffs(build(&sinh0, &cosh0), base.clone()),
            Jet::from_coeffs(build(&cosh0, &sinh0), base),
        )
    }

    /// Re-expand the truncated polynomial about `base + h`.
    pub fn shifted(&self, h: &S) -> Jet<S> {
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (k..=n).fold(S::zero(), |acc, j| {
                    acc + S::from_int(&binomial(j, k)) * self.coeffs[j].clone() * h.pow_usize(j - k)
                })
            })
            .collect();
        Jet {
            coeffs,
            base: self.base.clone() + h.clone(),
        }
    }

    /// Value of the truncated polynomial at `base + h`.
    pub fn eval_offset(&self, h: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * h.clone() + c.clone())
    }
}

/// Values of the elementary functions at the base point.
trait Seeds<S: Scalar> {
    fn base(&self) -> S;
    fn sin_cos(&self) -> Result<(S, S)>;
    fn exp(&self, at: &S) -> Result<S>;
    fn sinh_cosh(&self) -> Result<(S, S)>;
    fn atan(&self) -> Result<S>;
    fn acos(&self) -> Result<S>;
    fn real(&self, v: f64) -> Result<S>;
    /// `base^alpha` for a positive base.
    fn powf(&self, base: &S, alpha: &S) -> Result<S>;
    fn is_pole(&self, c0: &S) -> bool;
}

struct FloatSeeds(f64);

impl Seeds<f64> for FloatSeeds {
    fn base(&self) -> f64 {
        self.0
    }
    fn sin_cos(&self) -> Result<(f64, f64)> {
        Ok(self.0.sin_cos())
    }
    fn exp(&self, at: &f64) -> Result<f64> {
        Ok(at.exp())
    }
    fn sinh_cosh(&self) -> Result<(f64, f64)> {
        Ok((self.0.sinh(), self.0.cosh()))
    }
    fn atan(&self) -> Result<f64> {
        Ok(self.0.atan())
    }
    fn acos(&self) -> Result<f64> {
        Ok(self.0.acos())
    }
    fn real(&self, v: f64) -> Result<f64> {
        Ok(v)
    }
    fn powf(&self, base: &f64, alpha: &f64) -> Result<f64> {
        if *base <= 0.0 {
            return Err(Error::Domain(format!(
                "real power of non-positive base {base}"
            )));
        }
        Ok(base.powf(*alpha))
    }
    fn is_pole(&self, c0: &f64) -> bool {
        c0.abs() < POLE_TOL
    }
}

/// Expansions at 0 with rational coefficients.
struct ExactSeeds;

impl ExactSeeds {
    fn not_rational(what: &str) -> Error {
        Error::Domain(format!(
            "{what} at 0 is not rational; exact mode unavailable"
        ))
    }
}

impl Seeds<Rational> for ExactSeeds {
    fn base(&self) -> Rational {
        Rational::zero()
    }
    fn sin_cos(&self) -> Result<(Rational, Rational)> {
        Ok((Rational::zero(), Rational::one()))
    }
    fn exp(&self, at: &Rational) -> Result<Rational> {
        if at.is_zero() {
            Ok(Rational::one())
        } else {
            Err(ExactSeeds::not_rational("exp of a nonzero constant"))
        }
    }
    fn sinh_cosh(&self) -> Result<(Rational, Rational)> {
        Ok((Rational::zero(), Rational::one()))
    }
    fn atan(&self) -> Result<Rational> {
        Ok(Rational::zero())
    }
    fn acos(&self) -> Result<Rational> {
        Err(ExactSeeds::not_rational("arccos"))
    }
    fn real(&self, v: f64) -> Result<Rational> {
        rational_from_f64(v).ok_or_else(|| Error::Domain(format!("{v} is not finite")))
    }
    fn powf(&self, base: &Rational, _alpha: &Rational) -> Result<Rational> {
        if base.is_one() {
            Ok(Rational::one())
        } else {
            Err(ExactSeeds::not_rational("real power"))
        }
    }
    fn is_pole(&self, c0: &Rational) -> bool {
        c0.is_zero()
    }
}

fn build<S: Scalar>(f: &Function, seeds: &dyn Seeds<S>, order: usize) -> Result<Jet<S>> {
    let base = seeds.base();
    let x = Jet::variable(base.clone(), order);
    let one = |c: S| Jet::constant(c, base.clone(), order);
    let trig = || -> Result<(Jet<S>, Jet<S>)> {
        let (s, c) = seeds.sin_cos()?;
        Ok(Jet::sin_cos(s, c, base.clone(), order))
    };
    let hyp = || -> Result<(Jet<S>, Jet<S>)> {
        let (s, c) = seeds.sinh_cosh()?;
        Ok(Jet::sinh_cosh(s, c, base.clone(), order))
    };
    let pole = |c: &S| seeds.is_pole(c);
    let one_plus_sq = x.mul(&x).add_constant(&S::one());
    match *f {
        Function::Sin => Ok(trig()?.0),
        Function::Cos => Ok(trig()?.1),
        Function::Tan => {
            let (s, c) = trig()?;
            s.div(&c, pole)
        }
        Function::Sec => one(S::one()).div(&trig()?.1, pole),
        Function::Cot => {
            let (s, c) = trig()?;
            c.div(&s, pole)
        }
        Function::Exp => Ok(x.exp_with(seeds.exp(&base)?)),
        Function::Sinh => Ok(hyp()?.0),
        Function::Cosh => Ok(hyp()?.1),
        Function::Sech => one(S::one()).div(&hyp()?.1, pole),
        Function::SechPow { nu } => {
            let cosh = hyp()?.1;
            let alpha = -seeds.real(nu)?;
            let c0_pow = seeds.powf(cosh.coeff(0), &alpha)?;
            cosh.pow_real(&alpha, c0_pow)
        }
        Function::Lorentz => one(S::one()).div(&one_plus_sq, pole),
        Function::LorentzPow { nu } => {
            let alpha = -seeds.real(nu)?;
            let c0_pow = seeds.powf(one_plus_sq.coeff(0), &alpha)?;
            one_plus_sq.pow_real(&alpha, c0_pow)
        }
        Function::Arctan => {
            let d = one(S::one()).div(&one_plus_sq, pole)?;
            Ok(d.integrate(seeds.atan()?))
        }
        Function::Arccos => {
            let one_minus_sq = x.mul(&x).neg().add_constant(&S::one());
            let alpha = -S::one() / S::from_i64(2);
            let c0_pow = seeds.powf(one_minus_sq.coeff(0), &alpha)?;
            let d = one_minus_sq.pow_real(&alpha, c0_pow)?.neg();
            Ok(d.integrate(seeds.acos()?))
        }
        Function::CosPow { j } => Ok(trig()?.1.pow_int(j)),
        Function::Gaussian => {
            let arg = x.mul(&x).neg();
            let e0 = seeds.exp(arg.coeff(0))?;
            Ok(arg.exp_with(e0))
        }
    }
}

/// Float-mode jet of `f` at `x0`.
pub fn jet_of(f: &Function, x0: f64, order: usize) -> Result<Jet<f64>> {
    if !x0.is_finite() {
        return Err(Error::Domain(format!("non-finite expansion point {x0}")));
    }
    if matches!(f, Function::Arccos) && x0.abs() >= 1.0 {
        return Err(Error::Domain(format!("arccos is not analytic at {x0}")));
    }
    build(f, &FloatSeeds(x0), order)
}

/// Exact-mode jet of `f` at 0. Functions whose value at 0 is irrational
/// (arccos) or whose parameter is not a finite float are rejected.
pub fn jet_of_exact(f: &Function, order: usize) -> Result<Jet<Rational>> {
    build(f, &ExactSeeds, order)
}

/// `jet_of` with a mode switch; exact mode requires `x0 = 0`.
pub fn jet_in_mode(f: &Function, x0: f64, order: usize, mode: Mode) -> Result<JetAny> {
    match mode {
        Mode::Float => jet_of(f, x0, order).map(JetAny::Float),
        Mode::Exact if x0 == 0.0 => jet_of_exact(f, order).map(JetAny::Exact),
        Mode::Exact => Err(Error::Domain(format!(
            "exact jets are only available at 0, not {x0}"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum JetAny {
    Float(Jet<f64>),
    Exact(Jet<Rational>),
}

/// `f^{(n)}(x0)` from a float jet.
pub fn nth_derivative(f: &Function, n: usize, x0: f64) -> Result<f64> {
    Ok(jet_of(f, x0, n)?.derivative(n))
}

/// Exact Maclaurin coefficients of `f` up to `t^order`.
pub fn rational_series(f: &Function, order: usize) -> Result<Vec<Rational>> {
    Ok(jet_of_exact(f, order)?.coeffs().to_vec())
}
