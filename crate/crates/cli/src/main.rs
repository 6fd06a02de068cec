use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use repdiff::checks::{self, Suite};
use repdiff::engine::{self, DerivRequest, FnId, Method};
use repdiff::scalar::{parse_rational, rational_to_f64};
use repdiff::tables::{self, Family};
use repdiff::Error;

mod render;

/// Environment variable that overrides the default check tolerance.
const TOL_ENV: &str = "REPDIFF_TOL";

#[derive(Parser)]
#[command(
    name = "repdiff",
    version,
    about = "Repeated derivatives via exact closed forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact coefficient tables of a polynomial family.
    Table {
        /// stirling2, touchard, hermite, pnxy, pnnu, pnz, chebyshev, pi, q, lambda, delta
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_max: usize,
        /// Power j (lambda, delta).
        #[arg(long)]
        j: Option<usize>,
        /// Real parameter ν (pnnu), as "p/q" or a decimal; kept exact.
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Evaluate the m-th derivative of a function at a point by one or all routes.
    Deriv {
        /// arctan, lorentz, lorentz_pow, arccos, sech, sech_pow, sec, tan, cot, cos_pow
        #[arg(long = "fn")]
        function: FnId,
        #[arg(long)]
        order: usize,
        #[arg(long, allow_negative_numbers = true)]
        at: f64,
        /// Power ν (lorentz_pow, sech_pow).
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<String>,
        /// Power j (cos_pow).
        #[arg(long)]
        j: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Run an identity-check suite.
    Check {
        /// gf, oracle, chebyshev, bell, stirling, operator, routes, euler, signs
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n_max: usize,
        /// Relative tolerance for floating-point suites [default: 1e-9, or $REPDIFF_TOL].
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Closed,
    #[value(name = "closed_leibniz")]
    ClosedLeibniz,
    Dp,
    Hoppe,
    Oracle,
    All,
}

impl MethodArg {
    fn method(self) -> Option<Method> {
        match self {
            MethodArg::Closed => Some(Method::ClosedForm),
            MethodArg::ClosedLeibniz => Some(Method::ClosedLeibniz),
            MethodArg::Dp => Some(Method::Dp),
            MethodArg::Hoppe => Some(Method::Hoppe),
            MethodArg::Oracle => Some(Method::Oracle),
            MethodArg::All => None,
        }
    }
}

enum Failure {
    /// Bad or missing arguments (exit 2).
    Usage(String),
    /// A failed check, singularity or consistency error (exit 1).
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MissingParameter(_) | Error::Configuration(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("repdiff: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            if !msg.is_empty() {
                eprintln!("repdiff: {msg}");
            }
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Table {
            family,
            n_max,
            j,
            nu,
            format,
        } => {
            let nu = nu.as_deref().map(parse_nu).transpose()?;
            let rows = tables::table(family, n_max, j, nu.as_ref())?;
            let text = match format {
                TableFormat::Csv => render::table_csv(&rows),
                TableFormat::Json => render::table_json(family, &rows),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Deriv {
            function,
            order,
            at,
            nu,
            j,
            method,
            format,
        } => {
            let mut req = DerivRequest::new(function, order, at);
            if matches!(function, FnId::LorentzPow | FnId::SechPow) {
                let nu = nu.ok_or_else(|| Failure::from(Error::MissingParameter("nu")))?;
                req = req.with_nu(rational_to_f64(&parse_nu(&nu)?));
            }
            if function == FnId::CosPow {
                req = req.with_j(j.ok_or_else(|| Failure::from(Error::MissingParameter("j")))?);
            }
            let results = match method.method() {
                Some(m) if !function.methods().contains(&m) => {
                    let names: Vec<_> = function.methods().iter().map(|m| m.name()).collect();
                    return Err(Failure::Usage(format!(
                        "method {m} is not available for {function} (have: {})",
                        names.join(", ")
                    )));
                }
                Some(m) => vec![engine::evaluate(&req, m)?],
                None => engine::evaluate_all(&req)?,
            };
            let deviation =
                (method == MethodArg::All).then(|| engine::max_pairwise_deviation(&results));
            let text = match format {
                TextFormat::Text => render::deriv_text(&req, &results, deviation),
                TextFormat::Json => render::deriv_json(&req, &results, deviation),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Check {
            suite,
            n_max,
            tol,
            format,
        } => {
            let tol = match tol {
                Some(t) => t,
                None => tol_from_env()?,
            };
            if !(tol.is_finite() && tol > 0.0) {
                return Err(Failure::Usage(format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
            let report = checks::run(suite, n_max, tol);
            let text = match format {
                TextFormat::Text => render::report_text(&report),
                TextFormat::Json => render::report_json(&report, tol),
            };
            out.write_all(text.as_bytes())?;
            if !report.passed() {
                return Err(Failure::Run(format!(
                    "{} of {} cases failed",
                    report.failures.len(),
                    report.cases_run
                )));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn parse_nu(text: &str) -> Result<repdiff::Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("--nu: {e}")))
}

fn tol_from_env() -> Result<f64, Failure> {
    match std::env::var(TOL_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{TOL_ENV}={v:?} is not a number"))),
        Err(_) => Ok(checks::DEFAULT_TOL),
    }
}
