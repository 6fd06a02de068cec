//! Closed-form n-th derivatives built from Stirling numbers and the
//! auxiliary polynomials `P_n(x, y)`, `P_n^ν(x, y)`.
//!
//! The circular routes work with `ξ = e^{ix}` and return the real part of a
//! complex sum; the imaginary part is kept as a residual and must vanish to
//! within [`TOL_IM`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::aux::{pn, pn_nu, pn_signed};
use crate::combinatorics::shared_table;
use crate::dpolys::{self, delta_elem, lambda_elem, DELTA_CONVENTION, LAMBDA_CONVENTION};
use crate::error::{Error, Result};
use crate::jet::{self, Function};
use crate::scalar::{binomial, falling_factorial, ComplexF, Scalar};

/// Closed forms are refused when `|cos x|` (or `|sin x|`) falls below this.
pub const TOL_SINGULAR: f64 = 1e-8;
/// Largest admissible `|imaginary residual| / max(|value|, 1)`.
pub const TOL_IM: f64 = 1e-9;

pub(crate) fn check_cos(function: &'static str, x: f64) -> Result<f64> {
    let c = x.cos();
    if c.abs() < TOL_SINGULAR {
        return Err(Error::Singularity {
            function,
            x,
            guard: "cos x",
            magnitude: c.abs(),
        });
    }
    Ok(c)
}

fn check_sin(function: &'static str, x: f64) -> Result<f64> {
    let s = x.sin();
    if s.abs() < TOL_SINGULAR {
        return Err(Error::Singularity {
            function,
            x,
            guard: "sin x",
            magnitude: s.abs(),
        });
    }
    Ok(s)
}

/// `|a − b| / max(|a|, |b|, 1)`.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FnId {
    Arctan,
    Lorentz,
    LorentzPow,
    Arccos,
    Sech,
    SechPow,
    Sec,
    Tan,
    Cot,
    CosPow,
}

impl FnId {
    pub const ALL: [FnId; 10] = [
        FnId::Arctan,
        FnId::Lorentz,
        FnId::LorentzPow,
        FnId::Arccos,
        FnId::Sech,
        FnId::SechPow,
        FnId::Sec,
        FnId::Tan,
        FnId::Cot,
        FnId::CosPow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FnId::Arctan => "arctan",
            FnId::Lorentz => "lorentz",
            FnId::LorentzPow => "lorentz_pow",
            FnId::Arccos => "arccos",
            FnId::Sech => "sech",
            FnId::SechPow => "sech_pow",
            FnId::Sec => "sec",
            FnId::Tan => "tan",
            FnId::Cot => "cot",
            FnId::CosPow => "cos_pow",
        }
    }

    /// Routes implemented for this function, closed form first.
    pub fn methods(self) -> &'static [Method] {
        match self {
            FnId::Sec => &[
                Method::ClosedForm,
                Method::Dp,
                Method::Hoppe,
                Method::Oracle,
            ],
            FnId::Tan => &[
                Method::ClosedForm,
                Method::ClosedLeibniz,
                Method::Dp,
                Method::Oracle,
            ],
            FnId::CosPow => &[Method::ClosedForm, Method::Dp, Method::Oracle],
            _ => &[Method::ClosedForm, Method::Oracle],
        }
    }
}

impl fmt::Display for FnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FnId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FnId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown function {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Stirling/`P_n` closed form (for `tan`, the direct `e^{ix}` formula;
    /// for `cos^j`, the `Δ_{m,j}` operator route).
    ClosedForm,
    /// `tan = sin · sec` expanded with the Leibniz rule.
    ClosedLeibniz,
    /// Derivative polynomials `Π_m`, `Q_m`, or `Λ_{m,j}` for `cos^j`.
    Dp,
    Oracle,
    Hoppe,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::ClosedLeibniz => "closed_leibniz",
            Method::Dp => "dp",
            Method::Oracle => "oracle",
            Method::Hoppe => "hoppe",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivRequest {
    pub fn_id: FnId,
    pub order: usize,
    pub x: f64,
    pub nu: Option<f64>,
    pub j: Option<usize>,
}

impl DerivRequest {
    pub fn new(fn_id: FnId, order: usize, x: f64) -> Self {
        DerivRequest {
            fn_id,
            order,
            x,
            nu: None,
            j: None,
        }
    }

    pub fn with_nu(mut self, nu: f64) -> Self {
        self.nu = Some(nu);
        self
    }

    pub fn with_j(mut self, j: usize) -> Self {
        self.j = Some(j);
        self
    }

    fn nu(&self) -> Result<f64> {
        self.nu
            .ok_or_else(|| Error::Domain(format!("{} needs a power ν", self.fn_id)))
    }

    fn j(&self) -> Result<usize> {
        self.j
            .ok_or_else(|| Error::Domain(format!("{} needs a power j", self.fn_id)))
    }

    /// The oracle's description of the same function.
    pub fn oracle_function(&self) -> Result<Function> {
        Ok(match self.fn_id {
            FnId::Arctan => Function::Arctan,
            FnId::Lorentz => Function::Lorentz,
            FnId::LorentzPow => Function::LorentzPow { nu: self.nu()? },
            FnId::Arccos => Function::Arccos,
            FnId::Sech => Function::Sech,
            FnId::SechPow => Function::SechPow { nu: self.nu()? },
            FnId::Sec => Function::Sec,
            FnId::Tan => Function::Tan,
            FnId::Cot => Function::Cot,
            FnId::CosPow => Function::CosPow { j: self.j()? },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivResult {
    pub value: f64,
    pub method: Method,
    /// Imaginary part left by a complex-intermediate route; zero otherwise.
    pub residual_im: f64,
}

/// Real value of a complex-intermediate route plus its imaginary residual.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RouteValue {
    pub value: f64,
    pub residual_im: f64,
}

impl RouteValue {
    fn from_complex(z: ComplexF) -> Self {
        RouteValue {
            value: z.re,
            residual_im: z.im,
        }
    }

    fn checked(self, function: &'static str, order: usize) -> Result<Self> {
        if self.residual_im.abs() > TOL_IM * self.value.abs().max(1.0) {
            return Err(Error::Consistency {
                function,
                order,
                value: self.value,
                residual: self.residual_im,
            });
        }
        Ok(self)
    }
}

/// `K_n(x) = ∂_x^n 1/(1+x²) = 1/(1+x²) · P_n(−2x/(1+x²), −1/(1+x²))`.
pub fn d_lorentz<S: Scalar>(n: usize, x: &S) -> S {
    let u = S::one() / (S::one() + x.clone() * x.clone());
    let arg_x = -(S::from_i64(2) * x.clone() * u.clone());
    let arg_y = -u.clone();
    u * pn(n, &arg_x, &arg_y)
}

/// `∂_x^n arctan x = K_{n−1}(x)` for `n ≥ 1`.
pub fn d_arctan<S: Scalar>(n: usize, x: &S) -> Result<S> {
    match n {
        0 => Err(Error::Domain(
            "order 0 of arctan is the function value, not a closed-form derivative".into(),
        )),
        _ => Ok(d_lorentz(n - 1, x)),
    }
}

/// `K_n^ν(x) = (1+x²)^{−ν} P_n^ν(−2x/(1+x²), −1/(1+x²))`.
pub fn d_lorentz_pow(n: usize, nu: f64, x: f64) -> Result<f64> {
    let u = 1.0 / (1.0 + x * x);
    Ok(u.powf(nu) * pn_nu(n, &nu, &(-2.0 * x * u), &-u)?)
}

/// `∂_x^n arccos x = −(1−x²)^{−1/2} P_{n−1}^{1/2}(2x/(1−x²), 1/(1−x²))`.
pub fn d_arccos(n: usize, x: f64) -> Result<f64> {
    if x.abs() >= 1.0 {
        return Err(Error::Domain(format!(
            "arccos derivatives need |x| < 1, got {x}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain(
            "order 0 of arccos is the function value, not a closed-form derivative".into(),
        ));
    }
    let v = 1.0 / (1.0 - x * x);
    Ok(-v.sqrt() * pn_nu(n - 1, &0.5, &(2.0 * x * v), &v)?)
}

/// `∂_x^m sech x = sech x Σ_k S₂(m,k) e^{(k−1)x} [e^x P_k + k P_{k−1}]`,
/// with both `P` evaluated at `(−sech x, −sech x / (2e^x))`.
///
/// Evaluated at `−|x|` with the parity sign `(−1)^m`: for `x > 0` the factors
/// `e^{kx}` multiply alternating `P_k` sums and cancellation swamps `f64`.
pub fn d_sech(m: usize, x: f64) -> f64 {
    if x > 0.0 {
        return parity_sign(m) * d_sech(m, -x);
    }
    let table = shared_table(m);
    let sech = 1.0 / x.cosh();
    let ex = x.exp();
    let (px, py) = (-sech, -sech / (2.0 * ex));
    let mut acc = 0.0;
    for (k, s2) in table.row(m).unwrap().iter().enumerate() {
        if s2.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let bracket = ex * pn(k, &px, &py) + k as f64 * pn_signed(k as isize - 1, &px, &py);
        acc += f64::from_int(s2) * ((k as f64 - 1.0) * x).exp() * bracket;
    }
    sech * acc
}

/// `∂_x^m sech^ν x = sech^ν x Σ_r S₂(m,r) e^{xr} Σ_s C(r,s) (ν)_{r−s} e^{−x(r−s)} P_s^ν(−sech x, −sech x/(2e^x))`
/// where `(ν)_k` is the falling factorial.
///
/// Reflected to `−|x|` like [`d_sech`].
pub fn d_sech_pow(m: usize, nu: f64, x: f64) -> Result<f64> {
    if nu.is_nonpositive_integer() {
        return Err(Error::Domain(format!("P_n^ν undefined at ν = {nu}")));
    }
    if x > 0.0 {
        return Ok(parity_sign(m) * d_sech_pow(m, nu, -x)?);
    }
    let table = shared_table(m);
    let sech = 1.0 / x.cosh();
    let ex = x.exp();
    let (px, py) = (-sech, -sech / (2.0 * ex));
    let p_nu: Vec<f64> = (0..=m)
        .map(|s| pn_nu(s, &nu, &px, &py))
        .collect::<Result<_>>()?;
    let mut acc = 0.0;
    for (r, s2) in table.row(m).unwrap().iter().enumerate() {
        if s2.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let inner: f64 = (0..=r)
            .map(|s| {
                f64::from_int(&binomial(r, s))
                    * falling_factorial(&nu, r - s)
                    * (-x * (r - s) as f64).exp()
                    * p_nu[s]
            })
            .sum();
        acc += f64::from_int(s2) * (x * r as f64).exp() * inner;
    }
    Ok(sech.powf(nu) * acc)
}

fn parity_sign(m: usize) -> f64 {
    if m.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn i_pow(k: usize) -> ComplexF {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `i^m sec Σ_r S₂(m,r) ξ^{r−1} [ξ P_r + r P_{r−1}]` at `(−sec, −sec/(2ξ))`,
/// given `sec` and `ξ = e^{ix}` of the (possibly shifted) argument.
fn sec_route(m: usize, sec: f64, xi: ComplexF) -> ComplexF {
    let table = shared_table(m);
    let px = Complex64::new(-sec, 0.0);
    let py = -sec / (2.0 * xi);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut xi_pow = 1.0 / xi;
    for (r, s2) in table.row(m).unwrap().iter().enumerate() {
        if s2.sign() != num_bigint::Sign::NoSign {
            let bracket = xi * pn(r, &px, &py)
                + ComplexF::from_i64(r as i64) * pn_signed(r as isize - 1, &px, &py);
            acc += ComplexF::from_int(s2) * xi_pow * bracket;
        }
        xi_pow *= xi;
    }
    i_pow(m) * sec * acc
}

/// `∂_x^m sec x` through the `ξ = e^{ix}` closed form; returns the real part and the residual.
pub fn d_sec(m: usize, x: f64) -> Result<RouteValue> {
    let c = check_cos("sec", x)?;
    let xi = Complex64::new(c, x.sin());
    RouteValue::from_complex(sec_route(m, 1.0 / c, xi)).checked("sec", m)
}

/// `sin(x + kπ/2)` by quadrant case split.
pub fn sin_quarter_shift(x: f64, k: usize) -> f64 {
    match k % 4 {
        0 => x.sin(),
        1 => x.cos(),
        2 => -x.sin(),
        _ => -x.cos(),
    }
}

/// `cos(x + kπ/2)` by quadrant case split.
pub fn cos_quarter_shift(x: f64, k: usize) -> f64 {
    match k % 4 {
        0 => x.cos(),
        1 => -x.sin(),
        2 => -x.cos(),
        _ => x.sin(),
    }
}

/// `∂_x^m tan x = Σ_s C(m,s) sin(x + (m−s)π/2) ∂_x^s sec x`.
pub fn d_tan_leibniz(m: usize, x: f64) -> Result<RouteValue> {
    check_cos("tan", x)?;
    let mut out = RouteValue {
        value: 0.0,
        residual_im: 0.0,
    };
    for s in 0..=m {
        let w = f64::from_int(&binomial(m, s)) * sin_quarter_shift(x, m - s);
        let sec = d_sec(s, x)?;
        out.value += w * sec.value;
        out.residual_im += w * sec.residual_im;
    }
    out.checked("tan", m)
}

/// `∂_x^m tan x = i^{m+1} [sec x Σ_r S₂(m,r) e^{ix(r−1)} P_r(−sec x, −sec x/(2e^{ix})) − δ_{m,0}]`.
pub fn d_tan_direct(m: usize, x: f64) -> Result<RouteValue> {
    let c = check_cos("tan", x)?;
    let sec = 1.0 / c;
    let xi = Complex64::new(c, x.sin());
    let table = shared_table(m);
    let px = Complex64::new(-sec, 0.0);
    let py = -sec / (2.0 * xi);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut xi_pow = 1.0 / xi;
    for (r, s2) in table.row(m).unwrap().iter().enumerate() {
        if s2.sign() != num_bigint::Sign::NoSign {
            acc += ComplexF::from_int(s2) * xi_pow * pn(r, &px, &py);
        }
        xi_pow *= xi;
    }
    let mut z = sec * acc;
    if m == 0 {
        z -= 1.0;
    }
    RouteValue::from_complex(i_pow(m + 1) * z).checked("tan", m)
}

/// `∂_x^m cot x = Σ_s C(m,s) cos(x + (m−s)π/2) ∂^s sec(x − π/2)`.
///
/// The shifted secant uses `sec(x − π/2) = 1/sin x` and
/// `e^{i(x−π/2)} = sin x − i cos x` exactly.
pub fn d_cot(m: usize, x: f64) -> Result<RouteValue> {
    let s = check_sin("cot", x)?;
    let xi_shifted = Complex64::new(s, -x.cos());
    let mut out = RouteValue {
        value: 0.0,
        residual_im: 0.0,
    };
    for k in 0..=m {
        let w = f64::from_int(&binomial(m, k)) * cos_quarter_shift(x, m - k);
        let sec = RouteValue::from_complex(sec_route(k, 1.0 / s, xi_shifted)).checked("cot", m)?;
        out.value += w * sec.value;
        out.residual_im += w * sec.residual_im;
    }
    out.checked("cot", m)
}

fn real(value: f64, method: Method) -> DerivResult {
    DerivResult {
        value,
        method,
        residual_im: 0.0,
    }
}

fn complex(route: RouteValue, method: Method) -> DerivResult {
    DerivResult {
        value: route.value,
        method,
        residual_im: route.residual_im,
    }
}

/// Evaluate one route. Order 0 of `arctan`/`arccos` returns the host-math function value.
pub fn evaluate(req: &DerivRequest, method: Method) -> Result<DerivResult> {
    if !req.fn_id.methods().contains(&method) {
        return Err(Error::Domain(format!(
            "method {method} is not available for {}",
            req.fn_id
        )));
    }
    let (m, x) = (req.order, req.x);
    if method == Method::Oracle {
        let f = req.oracle_function()?;
        if matches!(f, Function::Tan | Function::Sec) {
            check_cos(req.fn_id.name(), x)?;
        }
        if matches!(f, Function::Cot) {
            check_sin("cot", x)?;
        }
        return Ok(real(jet::nth_derivative(&f, m, x)?, method));
    }
    Ok(match (req.fn_id, method) {
        (FnId::Arctan, _) if m == 0 => real(x.atan(), method),
        (FnId::Arctan, _) => real(d_arctan(m, &x)?, method),
        (FnId::Lorentz, _) => real(d_lorentz(m, &x), method),
        (FnId::LorentzPow, _) => real(d_lorentz_pow(m, req.nu()?, x)?, method),
        (FnId::Arccos, _) if m == 0 && x.abs() < 1.0 => real(x.acos(), method),
        (FnId::Arccos, _) => real(d_arccos(m, x)?, method),
        (FnId::Sech, _) => real(d_sech(m, x), method),
        (FnId::SechPow, _) => real(d_sech_pow(m, req.nu()?, x)?, method),
        (FnId::Sec, Method::ClosedForm) => complex(d_sec(m, x)?, method),
        (FnId::Sec, Method::Dp) => real(dpolys::dp_eval_sec(m, x)?, method),
        (FnId::Sec, Method::Hoppe) => real(dpolys::hoppe_sec(m, x)?, method),
        (FnId::Tan, Method::ClosedForm) => complex(d_tan_direct(m, x)?, method),
        (FnId::Tan, Method::ClosedLeibniz) => complex(d_tan_leibniz(m, x)?, method),
        (FnId::Tan, Method::Dp) => real(dpolys::dp_eval_tan(m, x)?, method),
        (FnId::Cot, _) => complex(d_cot(m, x)?, method),
        (FnId::CosPow, Method::ClosedForm) => real(
            delta_elem(m, req.j()?).derivative_of_cos_pow(x, DELTA_CONVENTION),
            method,
        ),
        (FnId::CosPow, Method::Dp) => real(
            lambda_elem(m, req.j()?).derivative_of_cos_pow(x, LAMBDA_CONVENTION)?,
            method,
        ),
        (f, m) => unreachable!("{m} listed for {f} but not dispatched"),
    })
}

/// Every route available for the function, in [`FnId::methods`] order.
pub fn evaluate_all(req: &DerivRequest) -> Result<Vec<DerivResult>> {
    req.fn_id
        .methods()
        .iter()
        .map(|&method| evaluate(req, method))
        .collect()
}

/// Largest [`rel_diff`] over all pairs of results.
pub fn max_pairwise_deviation(results: &[DerivResult]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in results.iter().enumerate() {
        for b in &results[i + 1..] {
            worst = worst.max(rel_diff(a.value, b.value));
        }
    }
    worst
}
