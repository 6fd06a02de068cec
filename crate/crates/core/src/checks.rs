//! Identity-check suites shared by the CLI and the acceptance tests.

use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::aux::{chebyshev_u_poly, pn_gf_check, pn_scaled_poly};
use crate::combinatorics::{
    bell_numbers, stirling2, stirling2_explicit, touchard, xd_expand_apply,
};
use crate::dpolys::{
    delta_elem, dp_eval_sec, dp_eval_tan, gf_check_delta, gf_check_lambda, gf_check_pi, gf_check_q,
    hoppe_sec, lambda_elem, q_poly, DELTA_CONVENTION, LAMBDA_CONVENTION,
};
use crate::engine::{
    d_arccos, d_arctan, d_cot, d_lorentz, d_lorentz_pow, d_sec, d_sech, d_sech_pow, d_tan_direct,
    d_tan_leibniz, rel_diff, RouteValue, TOL_IM,
};
use crate::error::{Error, Result};
use crate::jet::{nth_derivative, Function};
use crate::report::CheckReport;
use crate::scalar::{factorial, Rational};

/// Default relative tolerance for floating-point suites.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Tighter tolerance for closed forms that involve no radicals.
pub const RADICAL_FREE_TOL: f64 = 1e-10;
/// Highest `j` used by the `Λ`/`Δ` suites.
pub const J_MAX: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Gf,
    Oracle,
    Chebyshev,
    Bell,
    Stirling,
    Operator,
    Routes,
    Euler,
    Signs,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Gf,
        Suite::Oracle,
        Suite::Chebyshev,
        Suite::Bell,
        Suite::Stirling,
        Suite::Operator,
        Suite::Routes,
        Suite::Euler,
        Suite::Signs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gf => "gf",
            Suite::Oracle => "oracle",
            Suite::Chebyshev => "chebyshev",
            Suite::Bell => "bell",
            Suite::Stirling => "stirling",
            Suite::Operator => "operator",
            Suite::Routes => "routes",
            Suite::Euler => "euler",
            Suite::Signs => "signs",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// `n` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// 20 points in `(−π/2, π/2)` at least 0.1 from the poles of `tan`/`sec`.
pub fn trig_grid() -> Vec<f64> {
    linspace(-1.45, 1.45, 20)
}

/// 20 points in `(0, π)` at least 0.1 from the poles of `cot`.
pub fn cot_grid() -> Vec<f64> {
    linspace(0.12, std::f64::consts::PI - 0.12, 20)
}

pub fn run(suite: Suite, n_max: usize, tol: f64) -> CheckReport {
    let start = Instant::now();
    let mut report = match suite {
        Suite::Gf => gf_suite(n_max),
        Suite::Oracle => oracle_suite(n_max, tol),
        Suite::Chebyshev => chebyshev_suite(n_max),
        Suite::Bell => bell_suite(n_max),
        Suite::Stirling => stirling_suite(n_max),
        Suite::Operator => operator_suite(n_max, 6),
        Suite::Routes => routes_suite(n_max, tol),
        Suite::Euler => euler_suite(n_max),
        Suite::Signs => signs_suite(n_max, tol),
    };
    report.elapsed = start.elapsed();
    report
}

/// Π, Q, Λ_{·,j}, Δ_{·,j} (j ≤ 4) and one-variable P_n against their generating functions.
pub fn gf_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("gf");
    report.absorb_gf(&gf_check_pi(n_max));
    report.absorb_gf(&gf_check_q(n_max));
    for j in 0..=J_MAX {
        report.absorb_gf(&gf_check_lambda(n_max, j));
        report.absorb_gf(&gf_check_delta(n_max, j));
    }
    report.absorb_gf(&pn_gf_check(n_max));
    report
}

/// `P_n(2x, −1) / n! = U_n(x)` as polynomials.
pub fn chebyshev_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("chebyshev");
    let two = Rational::from_integer(2.into());
    let minus_one = -Rational::one();
    for n in 0..=n_max {
        let inv_fact = Rational::new(BigInt::one(), factorial(n));
        let lhs = pn_scaled_poly(n, &two, &minus_one).scale(&inv_fact);
        let rhs = chebyshev_u_poly(n);
        report.case(lhs == rhs, format!("U_{n}"), &rhs, &lhs, "P_n(2x,-1)/n!");
    }
    report
}

/// `T_n(1)` against Bell numbers from their binomial recurrence.
pub fn bell_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("bell");
    let bell = bell_numbers(n_max);
    for (n, b) in bell.iter().enumerate() {
        let got = touchard(n).at_one();
        report.case(&got == b, format!("B_{n}"), b, &got, "T_n(1)");
    }
    report
}

/// Triangle recurrence against the explicit alternating sum.
pub fn stirling_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("stirling");
    for n in 0..=n_max {
        for k in 0..=n {
            let (rec, sum) = (stirling2(n, k), stirling2_explicit(n, k));
            report.case(
                rec == sum,
                format!("S2({n},{k})"),
                &sum,
                &rec,
                "recurrence vs sum",
            );
        }
    }
    report
}

/// `(ξ∂)^n ξ^p = p^n ξ^p` through the Stirling expansion, exactly.
pub fn operator_suite(n_max: usize, p_max: usize) -> CheckReport {
    let mut report = CheckReport::new("operator");
    let xi = Rational::new(3.into(), 7.into());
    for p in 0..=p_max {
        // r-th derivative of ξ^p at ξ: p!/(p−r)! ξ^{p−r}
        let monomial_derivs = |n: usize| -> Vec<Rational> {
            (0..=n)
                .map(|r| {
                    if r > p {
                        Rational::from_integer(0.into())
                    } else {
                        Rational::from_integer(factorial(p) / factorial(p - r))
                            * num_traits::pow(xi.clone(), p - r)
                    }
                })
                .collect()
        };
        for n in 0..=n_max {
            let got = xd_expand_apply(n, &monomial_derivs(n), &xi).expect("lengths agree");
            let want = Rational::from_integer(num_traits::pow(BigInt::from(p), n))
                * num_traits::pow(xi.clone(), p);
            report.case(
                got == want,
                format!("(x d)^{n} x^{p}"),
                &want,
                &got,
                "xi = 3/7",
            );
        }
    }
    report
}

/// `Q_{2n}(0)` against `(2n)!` times the Maclaurin coefficients of sec.
pub fn euler_suite(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new("euler");
    let sec = crate::jet::rational_series(&Function::Sec, 2 * n_max).expect("exact sec");
    for n in 0..=n_max {
        let want = &sec[2 * n] * Rational::from_integer(factorial(2 * n));
        let got = q_poly(2 * n).q.coeff(0);
        report.case(got == want, format!("E_{}", 2 * n), &want, &got, "Q_2n(0)");
    }
    report
}

fn compare_float(
    report: &mut CheckReport,
    id: String,
    want: f64,
    got: Result<f64>,
    tol: f64,
    context: &str,
) {
    match got {
        Ok(g) => report.case(rel_diff(g, want) <= tol, id, want, g, context),
        Err(e) => report.case(false, id, want, e, context),
    }
}

fn oracle(f: Function, m: usize, x: f64) -> f64 {
    nth_derivative(&f, m, x).expect("grid avoids poles")
}

/// Closed-form evaluators of arctan, Lorentzians, arccos, sech and sech^ν vs the jet oracle.
pub fn oracle_suite(m_max: usize, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("oracle");
    let strict = tol.min(RADICAL_FREE_TOL);
    for x in linspace(-2.0, 2.0, 20) {
        for m in 0..=m_max {
            let ctx = format!("x = {x}");
            compare_float(
                &mut report,
                format!("lorentz m={m}"),
                oracle(Function::Lorentz, m, x),
                Ok(d_lorentz(m, &x)),
                strict,
                &ctx,
            );
            if m >= 1 {
                compare_float(
                    &mut report,
                    format!("arctan m={m}"),
                    oracle(Function::Arctan, m, x),
                    d_arctan(m, &x),
                    strict,
                    &ctx,
                );
            }
            for nu in [0.5, 2.0, 3.7] {
                compare_float(
                    &mut report,
                    format!("lorentz_pow nu={nu} m={m}"),
                    oracle(Function::LorentzPow { nu }, m, x),
                    d_lorentz_pow(m, nu, x),
                    tol,
                    &ctx,
                );
            }
        }
    }
    for x in linspace(-0.9, 0.9, 20) {
        for m in 1..=m_max {
            compare_float(
                &mut report,
                format!("arccos m={m}"),
                oracle(Function::Arccos, m, x),
                d_arccos(m, x),
                tol,
                &format!("x = {x}"),
            );
        }
    }
    for x in linspace(-3.0, 3.0, 20) {
        for m in 0..=m_max {
            let ctx = format!("x = {x}");
            compare_float(
                &mut report,
                format!("sech m={m}"),
                oracle(Function::Sech, m, x),
                Ok(d_sech(m, x)),
                strict,
                &ctx,
            );
            for nu in [0.5, 2.0, 2.5] {
                compare_float(
                    &mut report,
                    format!("sech_pow nu={nu} m={m}"),
                    oracle(Function::SechPow { nu }, m, x),
                    d_sech_pow(m, nu, x),
                    tol,
                    &ctx,
                );
            }
        }
    }
    report
}

fn compare_route(
    report: &mut CheckReport,
    id: String,
    want: f64,
    got: Result<RouteValue>,
    tol: f64,
    ctx: &str,
) {
    match got {
        Ok(r) => {
            report.case(
                rel_diff(r.value, want) <= tol,
                id.clone(),
                want,
                r.value,
                ctx,
            );
            let scaled = r.residual_im.abs() / r.value.abs().max(1.0);
            report.case(
                scaled <= TOL_IM,
                format!("{id} residual"),
                0.0,
                r.residual_im,
                ctx,
            );
        }
        Err(e) => report.case(false, id, want, e, ctx),
    }
}

/// Every route for tan, sec and cot against the jet oracle.
pub fn routes_suite(m_max: usize, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("routes");
    for x in trig_grid() {
        let ctx = format!("x = {x}");
        for m in 0..=m_max {
            let sec = oracle(Function::Sec, m, x);
            let tan = oracle(Function::Tan, m, x);
            compare_route(
                &mut report,
                format!("sec closed m={m}"),
                sec,
                d_sec(m, x),
                tol,
                &ctx,
            );
            compare_float(
                &mut report,
                format!("sec dp m={m}"),
                sec,
                dp_eval_sec(m, x),
                tol,
                &ctx,
            );
            compare_float(
                &mut report,
                format!("sec hoppe m={m}"),
                sec,
                hoppe_sec(m, x),
                tol,
                &ctx,
            );
            compare_route(
                &mut report,
                format!("tan direct m={m}"),
                tan,
                d_tan_direct(m, x),
                tol,
                &ctx,
            );
            compare_route(
                &mut report,
                format!("tan leibniz m={m}"),
                tan,
                d_tan_leibniz(m, x),
                tol,
                &ctx,
            );
            compare_float(
                &mut report,
                format!("tan dp m={m}"),
                tan,
                dp_eval_tan(m, x),
                tol,
                &ctx,
            );
        }
    }
    for x in cot_grid() {
        for m in 0..=m_max {
            let cot = oracle(Function::Cot, m, x);
            compare_route(
                &mut report,
                format!("cot m={m}"),
                cot,
                d_cot(m, x),
                tol,
                &format!("x = {x}"),
            );
        }
    }
    report
}

/// `∂^m cos^j` through `Λ_{m,j}(tan x)` and `Δ_{m,j}(cos x)` under the adopted sign conventions.
pub fn signs_suite(m_max: usize, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("signs");
    for x in linspace(-1.4, 1.4, 15) {
        for j in 0..=J_MAX {
            for m in 0..=m_max {
                let want = oracle(Function::CosPow { j }, m, x);
                let ctx = format!("x = {x}");
                let lambda = lambda_elem(m, j).derivative_of_cos_pow(x, LAMBDA_CONVENTION);
                compare_float(
                    &mut report,
                    format!("Lambda m={m} j={j}"),
                    want,
                    lambda,
                    tol,
                    &ctx,
                );
                let delta = delta_elem(m, j).derivative_of_cos_pow(x, DELTA_CONVENTION);
                compare_float(
                    &mut report,
                    format!("Delta m={m} j={j}"),
                    want,
                    Ok(delta),
                    tol,
                    &ctx,
                );
            }
        }
    }
    report
}
