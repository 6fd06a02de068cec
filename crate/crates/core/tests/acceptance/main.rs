//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod oracles;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use repdiff::aux::{chebyshev_u_poly, pn_one_var_poly, pn_scaled_poly};
use repdiff::checks::{self, cot_grid, linspace, trig_grid, Suite, DEFAULT_TOL, J_MAX};
use repdiff::combinatorics::{
    bell_numbers, stirling2, stirling2_explicit, touchard, xd_expand_apply,
};
use repdiff::dpolys::{
    delta_elem, lambda_elem, pi_poly, q_poly, SignConvention, DELTA_CONVENTION, LAMBDA_CONVENTION,
};
use repdiff::engine::{
    d_arctan, d_lorentz, evaluate_all, max_pairwise_deviation, rel_diff, DerivRequest, FnId, TOL_IM,
};
use repdiff::jet::{nth_derivative, Function};
use repdiff::report::CheckReport;
use repdiff::Rational;

use oracles::{frac, q, trim, Generating, RatFn};

const GF_ORDER: usize = 20;
const M_MAX: usize = 12;

type Criterion = (&'static str, fn() -> Tally);

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, report: CheckReport) {
        self.cases += report.cases_run;
        self.failures.extend(report.failures.into_iter().map(|f| {
            format!(
                "{}: {}: expected {}, got {} ({})",
                report.suite, f.identifier, f.expected, f.got, f.context
            )
        }));
    }
}

fn c1_generating_functions() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Gf, GF_ORDER, 0.0));

    let g = Generating::new(GF_ORDER);
    let (pi, qs) = (g.pi(), g.q());
    for n in 0..=GF_ORDER {
        let (p, _) = pi.egf(n).trimmed();
        t.check(p == pi_poly(n).p.coeffs(), || format!("Pi_{n}: {p:?}"));
        let (qq, _) = qs.egf(n).trimmed();
        t.check(qq == q_poly(n).q.coeffs(), || format!("Q_{n}: {qq:?}"));
    }
    for j in 0..=J_MAX {
        let (lam, del) = (g.lambda(j), g.delta(j));
        for m in 0..=GF_ORDER {
            let (a, b) = lam.egf(m).trimmed();
            let lib = lambda_elem(m, j);
            t.check(b.is_empty() && a == lib.poly().coeffs(), || {
                format!("Lambda_{m},{j}")
            });
            let (a, b) = del.egf(m).trimmed();
            let lib = delta_elem(m, j).carrier;
            t.check(a == lib.a.coeffs() && b == lib.b.coeffs(), || {
                format!("Delta_{m},{j}")
            });
        }
    }
    for (n, p) in oracles::pn_one_var(GF_ORDER).into_iter().enumerate() {
        t.check(p == pn_one_var_poly(n).coeffs(), || format!("P_{n}(z)"));
    }
    t
}

fn c2_chebyshev() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Chebyshev, 50, 0.0));
    for (n, u) in oracles::chebyshev_u(50).into_iter().enumerate() {
        let want = trim(
            u.into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        );
        let inv_fact = Rational::new(1.into(), oracles::factorial(n));
        let got = pn_scaled_poly(n, &q(2), &q(-1)).scale(&inv_fact);
        t.check(got.coeffs() == want, || {
            format!("P_{n}(2x,-1)/{n}! = {got}")
        });
        t.check(chebyshev_u_poly(n).coeffs() == want, || format!("U_{n}"));
    }
    t
}

fn c3_stirling_touchard() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Stirling, 25, 0.0));
    t.absorb(checks::run(Suite::Operator, 15, 0.0));
    t.absorb(checks::run(Suite::Bell, 20, 0.0));

    for (n, row) in oracles::stirling_triangle(25).into_iter().enumerate() {
        for (k, s) in row.into_iter().enumerate() {
            let s = BigInt::from(s);
            t.check(
                stirling2(n, k) == s && stirling2_explicit(n, k) == s,
                || format!("S({n},{k})"),
            );
        }
    }

    // (ξ∂)^n ξ^p = p^n ξ^p at a few rational points
    for xi in [frac(3, 7), frac(-5, 2), q(2)] {
        for p in 0..=6usize {
            for n in 0..=15usize {
                let derivs: Vec<Rational> = (0..=n)
                    .map(|r| {
                        if r > p {
                            q(0)
                        } else {
                            let falling: i64 = ((p - r + 1)..=p).map(|v| v as i64).product();
                            q(falling) * num_traits::pow(xi.clone(), p - r)
                        }
                    })
                    .collect();
                let got = xd_expand_apply(n, &derivs, &xi).unwrap();
                let want = q((p as i64).pow(n as u32)) * num_traits::pow(xi.clone(), p);
                t.check(got == want, || format!("(x d)^{n} x^{p} at {xi}"));
            }
        }
    }

    let peirce = oracles::bell_peirce(20);
    let lib = bell_numbers(20);
    for n in 0..=20 {
        let b = BigInt::from(peirce[n]);
        t.check(touchard(n).at_one() == b && lib[n] == b, || {
            format!("B_{n}")
        });
        if n <= 10 {
            t.check(BigInt::from(oracles::bell_brute(n)) == b, || {
                format!("partitions of {n}")
            });
        }
    }
    t
}

fn c4_three_routes() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Routes, M_MAX, DEFAULT_TOL));
    let half_pi = std::f64::consts::FRAC_PI_2;
    let grid = trig_grid();
    t.check(
        grid.len() == 20 && grid.iter().all(|x| half_pi - x.abs() >= 0.1),
        || "grid keeps 0.1 from the poles".into(),
    );
    t.check(
        cot_grid().iter().all(|x| x.sin().abs() >= 0.1f64.sin()),
        || "cot grid".into(),
    );
    for f in [FnId::Tan, FnId::Sec] {
        for &x in &grid {
            for m in 0..=M_MAX {
                match evaluate_all(&DerivRequest::new(f, m, x)) {
                    Ok(results) => {
                        let dev = max_pairwise_deviation(&results);
                        t.check(dev <= DEFAULT_TOL, || {
                            format!("{f} m={m} x={x}: spread {dev:e}")
                        });
                        for r in &results {
                            let scaled = r.residual_im.abs() / r.value.abs().max(1.0);
                            t.check(scaled <= TOL_IM, || {
                                format!(
                                    "{f} {} m={m} x={x}: residual {:e}",
                                    r.method, r.residual_im
                                )
                            });
                        }
                    }
                    Err(e) => t.check(false, || format!("{f} m={m} x={x}: {e}")),
                }
            }
        }
    }
    t
}

fn c5_closed_forms() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Oracle, M_MAX, DEFAULT_TOL));

    // exact quotient-rule differentiation of 1/(1+x²)
    let points = [q(0), frac(1, 2), frac(-3, 4), q(2), frac(5, 3), q(-7)];
    let mut f = RatFn::lorentzian();
    for m in 0..=8 {
        for x in &points {
            let want = f.eval(x);
            let got = d_lorentz(m, x);
            t.check(got == want, || {
                format!("K_{m}({x}) = {got}, quotient rule {want}")
            });
            let at = d_arctan(m + 1, x).unwrap();
            t.check(at == want, || format!("arctan^({}) at {x}", m + 1));
        }
        f = f.derive();
    }

    // spot values straight from the oracle at the strict tolerance
    for x in linspace(-2.0, 2.0, 7) {
        for m in 0..=M_MAX {
            let want = nth_derivative(&Function::Lorentz, m, x).unwrap();
            let got = d_lorentz(m, &x);
            t.check(rel_diff(got, want) <= checks::RADICAL_FREE_TOL, || {
                format!("lorentz m={m} x={x}")
            });
        }
    }
    t
}

fn c6_euler() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Euler, 4, 0.0));
    for (n, e) in [1, 1, 5, 61, 1385].into_iter().enumerate() {
        let got = q_poly(2 * n).q.coeff(0);
        t.check(got == q(e), || format!("Q_{}(0) = {got}", 2 * n));
    }
    t
}

/// Does `∂^m cos^j` match the oracle on the whole grid under `conv`?
fn convention_holds(conv: SignConvention, use_delta: bool) -> bool {
    linspace(-1.4, 1.4, 15).into_iter().all(|x| {
        (0..=J_MAX).all(|j| {
            (0..=M_MAX).all(|m| {
                let want = nth_derivative(&Function::CosPow { j }, m, x).unwrap();
                let got = if use_delta {
                    delta_elem(m, j).derivative_of_cos_pow(x, conv)
                } else {
                    lambda_elem(m, j).derivative_of_cos_pow(x, conv).unwrap()
                };
                rel_diff(got, want) <= DEFAULT_TOL
            })
        })
    })
}

fn c7_sign_conventions() -> Tally {
    let mut t = Tally::new();
    t.absorb(checks::run(Suite::Signs, M_MAX, DEFAULT_TOL));
    let all = [
        SignConvention::Unsigned,
        SignConvention::NegOnePowJ,
        SignConvention::NegOnePowM,
    ];
    for (name, use_delta, chosen) in [
        ("Lambda", false, LAMBDA_CONVENTION),
        ("Delta", true, DELTA_CONVENTION),
    ] {
        let passing: Vec<_> = all
            .into_iter()
            .filter(|&c| convention_holds(c, use_delta))
            .collect();
        t.check(passing == [chosen], || {
            format!("{name}: conventions passing {passing:?}, chosen {chosen:?}")
        });
        t.check(chosen == SignConvention::Unsigned, || {
            format!("{name}: chosen {chosen:?}")
        });
    }
    t
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "generating functions, order 20, exact",
            c1_generating_functions,
        ),
        ("Chebyshev identity, n <= 50, exact", c2_chebyshev),
        (
            "Stirling, operator and Bell identities, exact",
            c3_stirling_touchard,
        ),
        ("tan/sec route agreement, m <= 12, 1e-9", c4_three_routes),
        ("closed-form evaluators vs oracle, m <= 12", c5_closed_forms),
        ("Euler numbers Q_2n(0), exact", c6_euler),
        ("sign conventions for cos^j", c7_sign_conventions),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let tally = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if tally.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{verdict} [{}] {name} ({} cases, {} failures, {secs:.2} s)",
            i + 1,
            tally.cases,
            tally.failures.len()
        );
        for f in tally.failures.iter().take(10) {
            println!("    {f}");
        }
        if !tally.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
