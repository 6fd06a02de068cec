//! Derivative polynomials for `tan` and `sec` (`Π_n`, `Q_n`), the
//! `cos^j` families `Λ_{m,j}` and `Δ_{m,j}`, their generating functions,
//! the Lie-flow identity and the Hoppe-formula route for `sec`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::engine::{check_cos, TOL_SINGULAR};
use crate::error::{Error, Result};
use crate::ext::{ExtElem, Sigma, Sign, Weight};
use crate::jet::{rational_series, Function};
use crate::poly::Poly;
use crate::report::{GfReport, Mismatch};
use crate::scalar::{binomial, Rational};
use crate::series::{scalar_series, SeriesInT};

/// `Π_n` with `∂_x^n tan x = Π_n(tan x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiPoly {
    pub n: usize,
    pub p: Poly,
}

/// `Q_n` with `∂_x^n sec x = sec x · Q_n(tan x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly {
    pub n: usize,
    pub q: Poly,
}

/// `[(1+ξ²)∂_ξ]^m (1+ξ²)^{−j/2}`, stored as `λ(ξ) · s^{s_power}` with `s = √(1+ξ²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaElem {
    pub m: usize,
    pub j: usize,
    /// `λ(ξ)`, always with a zero `s` part.
    pub carrier: ExtElem,
    /// Exponent of `s` multiplying the carrier; equals `−j`.
    pub s_power: i64,
}

/// `(−√(1−ξ²) ∂_ξ)^m ξ^j` in the ring with `s² = 1 − ξ²`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaElem {
    pub m: usize,
    pub j: usize,
    pub carrier: ExtElem,
}

/// Prefactor relating `∂_x^m cos^j x` to `Λ_{m,j}(tan x)` or `Δ_{m,j}(cos x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// No prefactor.
    Unsigned,
    /// `(−1)^j`.
    NegOnePowJ,
    /// `(−1)^m`.
    NegOnePowM,
}

impl SignConvention {
    pub fn factor(self, m: usize, j: usize) -> f64 {
        let odd = match self {
            SignConvention::Unsigned => false,
            SignConvention::NegOnePowJ => j % 2 == 1,
            SignConvention::NegOnePowM => m % 2 == 1,
        };
        if odd {
            -1.0
        } else {
            1.0
        }
    }
}

/// The convention under which `∂_x^m cos^j x = Λ_{m,j}(tan x)` holds (for `cos x > 0`).
pub const LAMBDA_CONVENTION: SignConvention = SignConvention::Unsigned;
/// The convention under which `∂_x^m cos^j x = Δ_{m,j}(cos x)` holds with `s = sin x`.
pub const DELTA_CONVENTION: SignConvention = SignConvention::Unsigned;

/// Monotonically growing cache of a recurrence-defined family.
struct FamilyCache {
    entries: RwLock<Vec<Poly>>,
    step: fn(&Poly) -> Poly,
}

impl FamilyCache {
    const fn new(step: fn(&Poly) -> Poly) -> Self {
        FamilyCache {
            entries: RwLock::new(Vec::new()),
            step,
        }
    }

    fn get(&self, n: usize, seed: impl FnOnce() -> Poly) -> Poly {
        if let Some(p) = self.entries.read().unwrap().get(n) {
            return p.clone();
        }
        let mut entries = self.entries.write().unwrap();
        if entries.is_empty() {
            entries.push(seed());
        }
        while entries.len() <= n {
            let next = (self.step)(entries.last().unwrap());
            entries.push(next);
        }
        entries[n].clone()
    }
}

fn one_plus_sq() -> Poly {
    Poly::from_ints(&[1, 0, 1])
}

fn pi_step(p: &Poly) -> Poly {
    &one_plus_sq() * &p.derive()
}

fn q_step(q: &Poly) -> Poly {
    &(&one_plus_sq() * &q.derive()) + &(&Poly::x() * q)
}

static PI_CACHE: FamilyCache = FamilyCache::new(pi_step);
static Q_CACHE: FamilyCache = FamilyCache::new(q_step);

/// `Π_0 = ξ`, `Π_{k+1} = (1+ξ²) Π_k'`.
pub fn pi_poly(n: usize) -> PiPoly {
    PiPoly {
        n,
        p: PI_CACHE.get(n, Poly::x),
    }
}

/// `Q_0 = 1`, `Q_{k+1} = (1+ξ²) Q_k' + ξ Q_k`.
pub fn q_poly(n: usize) -> QPoly {
    QPoly {
        n,
        q: Q_CACHE.get(n, Poly::one),
    }
}

/// `λ_0 = 1`, `λ_{k+1} = (1+ξ²) λ_k' − j ξ λ_k`.
pub fn lambda_elem(m: usize, j: usize) -> LambdaElem {
    let jq = Rational::from_integer(BigInt::from(j));
    let j_xi = Poly::monomial(jq, 1);
    let mut lambda = Poly::one();
    for _ in 0..m {
        lambda = &(&one_plus_sq() * &lambda.derive()) - &(&j_xi * &lambda);
    }
    LambdaElem {
        m,
        j,
        carrier: ExtElem::from_poly(lambda, Sigma::OnePlusSquare),
        s_power: -(j as i64),
    }
}

impl LambdaElem {
    pub fn poly(&self) -> &Poly {
        &self.carrier.a
    }

    /// `Λ_{m,j}(ξ) = λ(ξ) (1+ξ²)^{−j/2}` at a real point.
    pub fn eval(&self, xi: f64) -> f64 {
        self.poly().eval(&xi) * (1.0 + xi * xi).powf(-(self.j as f64) / 2.0)
    }

    /// `∂_x^m cos^j x` via `ξ = tan x`; `cos^j x = sgn(cos x)^j (1+ξ²)^{−j/2}`.
    pub fn derivative_of_cos_pow(&self, x: f64, convention: SignConvention) -> Result<f64> {
        let c = check_cos("cos^j via tan", x)?;
        let branch = if c < 0.0 && self.j % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        Ok(convention.factor(self.m, self.j) * branch * self.eval(x.tan()))
    }
}

/// `m` applications of `−s ∂_ξ` (with `s² = 1 − ξ²`) to `ξ^j`.
pub fn delta_elem(m: usize, j: usize) -> DeltaElem {
    let mut carrier = ExtElem::from_poly(Poly::monomial(Rational::one(), j), Sigma::OneMinusSquare);
    for _ in 0..m {
        carrier = carrier
            .apply_d(&Weight::Radical, Sign::Minus)
            .expect("s·∂ always closes the ring");
    }
    DeltaElem { m, j, carrier }
}

impl DeltaElem {
    /// `∂_x^m cos^j x`, evaluating the carrier at `ξ = cos x`, `s = sin x`.
    pub fn derivative_of_cos_pow(&self, x: f64, convention: SignConvention) -> f64 {
        let (s, c) = x.sin_cos();
        convention.factor(self.m, self.j) * self.carrier.eval(&c, &s)
    }
}

fn compare<C: PartialEq + std::fmt::Display>(
    family: String,
    n_max: usize,
    expected: impl Fn(usize) -> C,
    got: impl Fn(usize) -> C,
) -> GfReport {
    let mut report = GfReport {
        family,
        orders_checked: 0,
        first_mismatch: None,
    };
    for n in 0..=n_max {
        let (e, g) = (expected(n), got(n));
        report.orders_checked += 1;
        if e != g {
            report.first_mismatch = Some(Mismatch {
                order: n,
                expected: e.to_string(),
                got: g.to_string(),
            });
            break;
        }
    }
    report
}

fn tan_series(order: usize) -> SeriesInT<Poly> {
    scalar_series(
        &rational_series(&Function::Tan, order).expect("exact tan"),
        order,
    )
}

fn sec_series(order: usize) -> SeriesInT<Poly> {
    scalar_series(
        &rational_series(&Function::Sec, order).expect("exact sec"),
        order,
    )
}

fn cos_series(order: usize) -> SeriesInT<Poly> {
    scalar_series(
        &rational_series(&Function::Cos, order).expect("exact cos"),
        order,
    )
}

/// `Σ t^n/n! Π_n(ξ) = (ξ + tan t) / (1 − ξ tan t)`.
pub fn gf_check_pi(n_max: usize) -> GfReport {
    let tan = tan_series(n_max);
    let xi = SeriesInT::constant(Poly::x(), n_max);
    let series = xi.add(&tan).mul(
        &tan.mul_elem(&Poly::x())
            .geometric()
            .expect("ξ tan t vanishes at 0"),
    );
    compare(
        "Pi_n".into(),
        n_max,
        |n| pi_poly(n).p,
        |n| series.egf_coeff(n),
    )
}

/// `Σ t^n/n! Q_n(ξ) = sec t / (1 − ξ tan t)`.
pub fn gf_check_q(n_max: usize) -> GfReport {
    let series = sec_series(n_max).mul(
        &tan_series(n_max)
            .mul_elem(&Poly::x())
            .geometric()
            .expect("ξ tan t vanishes at 0"),
    );
    compare(
        "Q_n".into(),
        n_max,
        |n| q_poly(n).q,
        |n| series.egf_coeff(n),
    )
}

/// `Σ t^m/m! Λ_{m,j} = (1 − ξ tan t)^j / [(1+ξ²)(1+tan² t)]^{j/2}`.
///
/// Both sides carry `(1+ξ²)^{−j/2}`; stripping it and writing
/// `(1+tan² t)^{−j/2} = cos^j t` leaves a series with polynomial coefficients.
pub fn gf_check_lambda(m_max: usize, j: usize) -> GfReport {
    let one = SeriesInT::constant(Poly::one(), m_max);
    let base = one.sub(&tan_series(m_max).mul_elem(&Poly::x()));
    let series = base.pow(j).mul(&cos_series(m_max).pow(j));
    compare(
        format!("Lambda_m,{j}"),
        m_max,
        |m| lambda_elem(m, j).carrier,
        |m| ExtElem::from_poly(series.egf_coeff(m), Sigma::OnePlusSquare),
    )
}

/// `Σ t^m/m! Δ_{m,j} = (ξ − √(1−ξ²) tan t)^j cos^j t` over `s² = 1 − ξ²`.
pub fn gf_check_delta(m_max: usize, j: usize) -> GfReport {
    let sigma = Sigma::OneMinusSquare;
    let unit = ExtElem::one(sigma);
    let xi = SeriesInT::constant(ExtElem::from_poly(Poly::x(), sigma), m_max);
    let tan = rational_series(&Function::Tan, m_max).expect("exact tan");
    let cos = rational_series(&Function::Cos, m_max).expect("exact cos");
    let s_tan = SeriesInT::from_scalars(&tan, &ExtElem::s(sigma), m_max);
    let cos = SeriesInT::from_scalars(&cos, &unit, m_max);
    let series = xi.sub(&s_tan).pow(j).mul(&cos.pow(j));
    compare(
        format!("Delta_m,{j}"),
        m_max,
        |m| delta_elem(m, j).carrier,
        |m| series.egf_coeff(m),
    )
}

/// Functions the Lie-flow identity is checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowFunction {
    /// `f(ξ) = ξ`, whose flow coefficients are `Π_n`.
    Identity,
    /// `f(ξ) = √(1+ξ²)`, whose flow coefficients are `Q_n √(1+ξ²)`.
    SqrtOnePlusSquare,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowStatus {
    Match,
    Mismatch,
    /// `|t|` is not inside the radius of convergence; nothing is asserted.
    OutsideRadius,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieFlowReport {
    pub partial_sum: f64,
    pub closed_form: f64,
    pub tolerance: f64,
    pub radius: f64,
    pub status: FlowStatus,
}

/// Compare `Σ_{n≤N} t^n/n! [(1+ξ²)∂]^n f(ξ)` with `f((ξ cos t + sin t)/(cos t − ξ sin t))`.
pub fn lie_flow_check(t: f64, xi: f64, f: FlowFunction, n_terms: usize) -> Result<LieFlowReport> {
    let (sin_t, cos_t) = t.sin_cos();
    let denom = cos_t - xi * sin_t;
    if denom.abs() < TOL_SINGULAR {
        return Err(Error::Domain(format!(
            "flow leaves the real line: cos t − ξ sin t = {denom:e}"
        )));
    }
    let w = (xi * cos_t + sin_t) / denom;
    let root = (1.0 + xi * xi).sqrt();
    let (closed_form, term): (f64, Box<dyn Fn(usize) -> f64>) = match f {
        FlowFunction::Identity => (w, Box::new(|n| pi_poly(n).p.eval(&xi))),
        FlowFunction::SqrtOnePlusSquare => (
            (1.0 + w * w).sqrt(),
            Box::new(move |n| q_poly(n).q.eval(&xi) * root),
        ),
    };
    // The flow is tan(t + arctan ξ) in disguise: poles at t = ±π/2 − arctan ξ.
    let radius = std::f64::consts::FRAC_PI_2 - xi.atan().abs();
    let mut partial_sum = 0.0;
    let mut weight = 1.0;
    let mut last = 0.0;
    for n in 0..=n_terms {
        if n > 0 {
            weight *= t / n as f64;
        }
        last = weight * term(n);
        partial_sum += last;
    }
    let ratio = t.abs() / radius;
    if ratio >= 1.0 {
        return Ok(LieFlowReport {
            partial_sum,
            closed_form,
            tolerance: f64::INFINITY,
            radius,
            status: FlowStatus::OutsideRadius,
        });
    }
    let tail = last.abs() * ratio / (1.0 - ratio);
    let tolerance = 1e-12 * closed_form.abs().max(1.0) + tail;
    let status = if (partial_sum - closed_form).abs() <= tolerance {
        FlowStatus::Match
    } else {
        FlowStatus::Mismatch
    };
    Ok(LieFlowReport {
        partial_sum,
        closed_form,
        tolerance,
        radius,
        status,
    })
}

/// `A_{m,k} = Σ_j C(k,j) (−1)^{k−j} ξ^{k−j} ∂_x^m(cos^j x)` with `g = cos`,
/// as an element of the `ξ = cos x`, `s = sin x` ring.
pub fn hoppe_a(m: usize, k: usize) -> ExtElem {
    let sigma = Sigma::OneMinusSquare;
    (0..=k).fold(ExtElem::zero(sigma), |acc, j| {
        let mut c = Rational::from_integer(binomial(k, j));
        if (k - j) % 2 == 1 {
            c = -c;
        }
        let term = delta_elem(m, j).carrier.mul_poly(&Poly::monomial(c, k - j));
        acc.add(&term)
    })
}

/// `∂_x^m sec x = Σ_k (−1)^k sec^{k+1}(x) A_{m,k}` (Hoppe with `f = 1/σ`, `g = cos`).
pub fn hoppe_sec(m: usize, x: f64) -> Result<f64> {
    let c = check_cos("sec (Hoppe)", x)?;
    let s = x.sin();
    let sec = 1.0 / c;
    let mut acc = 0.0;
    let mut sec_pow = sec;
    for k in 0..=m {
        let a = hoppe_a(m, k).eval(&c, &s);
        acc += if k % 2 == 0 { a } else { -a } * sec_pow;
        sec_pow *= sec;
    }
    Ok(acc)
}

/// `∂_x^m tan x = Π_m(tan x)`.
pub fn dp_eval_tan(m: usize, x: f64) -> Result<f64> {
    check_cos("tan (DP)", x)?;
    Ok(pi_poly(m).p.eval(&x.tan()))
}

/// `∂_x^m sec x = sec x · Q_m(tan x)`.
pub fn dp_eval_sec(m: usize, x: f64) -> Result<f64> {
    let c = check_cos("sec (DP)", x)?;
    Ok(q_poly(m).q.eval(&x.tan()) / c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::nth_derivative;
    use num_traits::Zero;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_poly(0).p, Poly::x());
        assert_eq!(pi_poly(1).p, Poly::from_ints(&[1, 0, 1]));
        assert_eq!(pi_poly(2).p, Poly::from_ints(&[0, 2, 0, 2]));
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_poly(0).q, Poly::one());
        assert_eq!(q_poly(1).q, Poly::x());
        assert_eq!(q_poly(2).q, Poly::from_ints(&[1, 0, 2]));
    }

    #[test]
    fn q_matches_operator_definition() {
        // Q_n s = [(1+ξ²)∂]^n s in the σ = 1+ξ² ring
        let w = Weight::Poly(one_plus_sq());
        let mut e = ExtElem::s(Sigma::OnePlusSquare);
        for n in 0..=10 {
            assert_eq!(e.a, Poly::zero());
            assert_eq!(e.b, q_poly(n).q, "n = {n}");
            e = e.apply_d(&w, Sign::Plus).unwrap();
        }
    }

    #[test]
    fn pi_matches_operator_definition() {
        let w = Weight::Poly(one_plus_sq());
        let mut e = ExtElem::from_poly(Poly::x(), Sigma::OnePlusSquare);
        for n in 0..=10 {
            assert_eq!(e.a, pi_poly(n).p, "n = {n}");
            e = e.apply_d(&w, Sign::Plus).unwrap();
        }
    }

    #[test]
    fn degree_and_parity() {
        for n in 0..=30 {
            let p = pi_poly(n).p;
            assert_eq!(p.degree(), Some(n + 1));
            assert!(p.has_parity((n + 1) % 2 == 1));
            assert!(p.leading().unwrap() > &Rational::zero());
            let q = q_poly(n).q;
            assert_eq!(q.degree(), Some(n));
            assert!(q.has_parity(n % 2 == 1));
        }
    }

    #[test]
    fn euler_numbers() {
        let euler = [1, 1, 5, 61, 1385];
        for (n, e) in euler.iter().enumerate() {
            assert_eq!(
                q_poly(2 * n).q.coeff(0),
                Rational::from_integer((*e).into())
            );
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_elem(0, 3).poly(), &Poly::one());
        assert_eq!(lambda_elem(0, 3).s_power, -3);
        assert_eq!(lambda_elem(1, 1).poly(), &Poly::from_ints(&[0, -1]));
        // Λ_{m,0} = δ_{m,0}
        assert!(lambda_elem(2, 0).poly().is_zero());
    }

    #[test]
    fn delta_examples() {
        let sigma = Sigma::OneMinusSquare;
        assert_eq!(
            delta_elem(0, 4).carrier,
            ExtElem::from_poly(Poly::monomial(Rational::one(), 4), sigma)
        );
        assert_eq!(
            delta_elem(1, 1).carrier,
            ExtElem::new(Poly::zero(), Poly::from_ints(&[-1]), sigma)
        );
        assert_eq!(
            delta_elem(2, 1).carrier,
            ExtElem::from_poly(Poly::from_ints(&[0, -1]), sigma)
        );
    }

    #[test]
    fn generating_functions_small() {
        assert!(gf_check_pi(0).passed());
        assert!(gf_check_pi(2).passed());
        assert!(gf_check_q(2).passed());
        assert!(gf_check_lambda(5, 0).passed());
        assert!(gf_check_lambda(10, 1).passed());
        assert!(gf_check_lambda(10, 3).passed());
        assert!(gf_check_delta(5, 0).passed());
        assert!(gf_check_delta(12, 1).passed());
        assert!(gf_check_delta(12, 2).passed());
    }

    #[test]
    fn lie_flow_examples() {
        for f in [FlowFunction::Identity, FlowFunction::SqrtOnePlusSquare] {
            let r = lie_flow_check(0.0, 0.2, f, 5).unwrap();
            assert_eq!(r.partial_sum, r.closed_form);
            let r = lie_flow_check(0.1, 0.2, f, 25).unwrap();
            assert_eq!(r.status, FlowStatus::Match);
            assert!((r.partial_sum - r.closed_form).abs() < 1e-12);
        }
        let far = lie_flow_check(1.5, 0.2, FlowFunction::Identity, 25).unwrap();
        assert_eq!(far.status, FlowStatus::OutsideRadius);
    }

    #[test]
    fn hoppe_structure() {
        // A_{m,k} vanishes for k > m and A_{m,0} = δ_{m,0}
        for m in 0..=6 {
            for k in (m + 1)..=(m + 2) {
                assert!(hoppe_a(m, k).is_zero(), "A_{m},{k}");
            }
            assert_eq!(hoppe_a(m, 0).is_zero(), m > 0);
        }
    }

    #[test]
    fn routes_against_oracle() {
        for &x in &[0.3, 0.5, -1.1] {
            for m in 0..=8 {
                let sec = nth_derivative(&Function::Sec, m, x).unwrap();
                let tan = nth_derivative(&Function::Tan, m, x).unwrap();
                assert!(close(dp_eval_sec(m, x).unwrap(), sec, 1e-11));
                assert!(close(hoppe_sec(m, x).unwrap(), sec, 1e-10));
                assert!(close(dp_eval_tan(m, x).unwrap(), tan, 1e-11));
            }
        }
        assert!(close(
            dp_eval_sec(2, 0.7).unwrap(),
            (1.0 + 2.0 * 0.7f64.tan().powi(2)) / 0.7f64.cos(),
            1e-14
        ));
        assert!(dp_eval_tan(1, std::f64::consts::FRAC_PI_2).is_err());
    }
}
