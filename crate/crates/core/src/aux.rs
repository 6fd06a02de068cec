//! Auxiliary two-variable polynomials: Kampé de Fériet–Hermite `H_n(x, y)`,
//! the Legendre-like `P_n(x, y)` and `P_n^ν(x, y)`, the one-variable
//! reduction `P_n(z)` and Chebyshev `U_n`.
//!
//! Two-variable families are stored by their `r`-indexed coefficients:
//! the coefficient of `x^{n−2r} y^r`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::report::{GfReport, Mismatch};
use crate::scalar::{factorial, rising_factorial, Rational, Scalar};
use crate::series::SeriesInT;

/// `n! / ((n−2r)! r!)` for `r = 0..=⌊n/2⌋`.
pub fn hermite2_coeffs(n: usize) -> Vec<BigInt> {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|r| &nf / (factorial(n - 2 * r) * factorial(r)))
        .collect()
}

/// `n! (n−r)! / ((n−2r)! r!)` for `r = 0..=⌊n/2⌋`.
pub fn pn_coeffs(n: usize) -> Vec<BigInt> {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|r| &nf * factorial(n - r) / (factorial(n - 2 * r) * factorial(r)))
        .collect()
}

/// `P_n` coefficients obtained from those of `H_n` by the Laplace moment map.
///
/// `H_n(xσ, yσ)` carries `σ^{n−r}` on the `x^{n−2r} y^r` term, and
/// `∫₀^∞ e^{−σ} σ^k dσ = k!` replaces that power.
pub fn pn_coeffs_via_laplace(n: usize) -> Vec<Rational> {
    let hermite = hermite2_coeffs(n);
    hermite
        .iter()
        .enumerate()
        .map(|(r, h)| {
            let sigma_power = (n - 2 * r) + r;
            Rational::from_integer(h * laplace_moment(sigma_power))
        })
        .collect()
}

fn laplace_moment(k: usize) -> BigInt {
    factorial(k)
}

fn eval_two_var<S: Scalar>(n: usize, coeffs: &[S], x: &S, y: &S) -> S {
    coeffs.iter().enumerate().fold(S::zero(), |acc, (r, c)| {
        acc + c.clone() * x.pow_usize(n - 2 * r) * y.pow_usize(r)
    })
}

pub fn hermite2<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    let coeffs: Vec<S> = hermite2_coeffs(n).iter().map(S::from_int).collect();
    eval_two_var(n, &coeffs, x, y)
}

pub fn pn<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    let coeffs: Vec<S> = pn_coeffs(n).iter().map(S::from_int).collect();
    eval_two_var(n, &coeffs, x, y)
}

/// `P_n`, extended by `P_{−1} ≡ 0`.
pub fn pn_signed<S: Scalar>(n: isize, x: &S, y: &S) -> S {
    match usize::try_from(n) {
        Ok(n) => pn(n, x, y),
        Err(_) => S::zero(),
    }
}

/// `P_n^ν(x, y) = n!/Γ(ν) Σ_r x^{n−2r} y^r Γ(ν+n−r) / ((n−2r)! r!)`.
///
/// The Gamma ratio is the rising factorial `ν (ν+1) ⋯ (ν+n−r−1)`.
pub fn pn_nu<S: Scalar>(n: usize, nu: &S, x: &S, y: &S) -> Result<S> {
    if nu.is_nonpositive_integer() {
        return Err(Error::Domain(format!("P_n^ν undefined at ν = {nu:?}")));
    }
    let coeffs: Vec<S> = hermite2_coeffs(n)
        .iter()
        .enumerate()
        .map(|(r, h)| S::from_int(h) * rising_factorial(nu, n - r))
        .collect();
    Ok(eval_two_var(n, &coeffs, x, y))
}

/// Exact `r`-indexed coefficients of `P_n^ν` for rational `ν`.
pub fn pn_nu_coeffs(n: usize, nu: &Rational) -> Result<Vec<Rational>> {
    if nu.is_nonpositive_integer() {
        return Err(Error::Domain(format!("P_n^ν undefined at ν = {nu}")));
    }
    Ok(hermite2_coeffs(n)
        .into_iter()
        .enumerate()
        .map(|(r, h)| Rational::from_integer(h) * rising_factorial(nu, n - r))
        .collect())
}

/// `P_n(z) = P_n(z, −1)` as a polynomial in `z`.
pub fn pn_one_var_poly(n: usize) -> Poly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (r, c) in pn_coeffs(n).into_iter().enumerate() {
        coeffs[n - 2 * r] = if r % 2 == 0 { c } else { -c };
    }
    Poly::from_bigints(&coeffs)
}

pub fn pn_one_var<S: Scalar>(n: usize, z: &S) -> S {
    pn(n, z, &S::from_i64(-1))
}

/// `P_n(c·x, y)` as a polynomial in `x` for fixed rational `c`, `y`.
pub fn pn_scaled_poly(n: usize, x_scale: &Rational, y: &Rational) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (r, c) in pn_coeffs(n).into_iter().enumerate() {
        let k = n - 2 * r;
        coeffs[k] = Rational::from_integer(c) * x_scale.pow_usize(k) * y.pow_usize(r);
    }
    Poly::from_coeffs(coeffs)
}

/// `U_n(x)` from `U_{n+1} = 2x U_n − U_{n−1}`.
pub fn chebyshev_u<S: Scalar>(n: usize, x: &S) -> S {
    let two_x = S::from_i64(2) * x.clone();
    let (mut prev, mut cur) = (S::one(), two_x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = two_x.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

pub fn chebyshev_u_poly(n: usize) -> Poly {
    let two_x = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::one(), two_x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Expand `1/(1 − tz + t²)` exactly and compare `n!·[t^n]` with `P_n(z)`.
pub fn pn_gf_check(n_max: usize) -> GfReport {
    let z_t = SeriesInT::monomial(Poly::x(), 1, n_max);
    let t_sq = SeriesInT::monomial(Poly::one(), 2, n_max);
    let series = z_t
        .sub(&t_sq)
        .geometric()
        .expect("tz − t² has no constant term");
    let mut report = GfReport {
        family: "P_n(z)".into(),
        orders_checked: 0,
        first_mismatch: None,
    };
    for n in 0..=n_max {
        let got = series.egf_coeff(n);
        let expected = pn_one_var_poly(n);
        report.orders_checked += 1;
        if got != expected {
            report.first_mismatch = Some(Mismatch {
                order: n,
                expected: expected.to_string(),
                got: got.to_string(),
            });
            break;
        }
    }
    report
}
