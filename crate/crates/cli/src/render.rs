//! Text, CSV and JSON output. The JSON layouts are described in `docs/output-format.md`.

use std::fmt::Write;
use std::str::FromStr;

use repdiff::engine::{DerivRequest, DerivResult};
use repdiff::report::CheckReport;
use repdiff::tables::{Family, TableEntry};
use repdiff::Rational;
use serde_json::{json, Number, Value};

fn big(n: &impl ToString) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn pair(r: &Rational) -> Value {
    Value::Array(vec![big(r.numer()), big(r.denom())])
}

fn pairs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(pair).collect())
}

fn float(x: f64) -> Value {
    // NaN and infinities have no JSON form
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn table_csv(rows: &[TableEntry]) -> String {
    let width = rows
        .iter()
        .flat_map(|r| std::iter::once(&r.coefficients).chain(r.s_coefficients.as_ref()))
        .map(Vec::len)
        .max()
        .unwrap_or(0)
        .max(1);
    let split = rows.iter().any(|r| r.s_coefficients.is_some());

    let mut out = String::from("n");
    if split {
        out.push_str(",part");
    }
    for k in 0..width {
        write!(out, ",c{k}").unwrap();
    }
    out.push('\n');

    let mut line = |n: usize, part: Option<&str>, coeffs: &[Rational]| {
        write!(out, "{n}").unwrap();
        if let Some(p) = part {
            write!(out, ",{p}").unwrap();
        }
        for k in 0..width {
            match coeffs.get(k) {
                Some(c) => write!(out, ",{c}").unwrap(),
                None => out.push_str(",0"),
            }
        }
        out.push('\n');
    };
    for r in rows {
        match &r.s_coefficients {
            Some(s) => {
                line(r.n, Some("a"), &r.coefficients);
                line(r.n, Some("b"), s);
            }
            None => line(r.n, None, &r.coefficients),
        }
    }
    out
}

pub fn table_json(family: Family, rows: &[TableEntry]) -> String {
    let entries: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut e = json!({ "n": r.n, "coefficients": pairs(&r.coefficients) });
            if let Some(s) = &r.s_coefficients {
                e["s_coefficients"] = pairs(s);
            }
            e
        })
        .collect();
    let doc = json!({ "family": family.name(), "entries": entries });
    format!("{doc}\n")
}

pub fn deriv_text(req: &DerivRequest, results: &[DerivResult], deviation: Option<f64>) -> String {
    let mut out = String::new();
    writeln!(out, "fn={} m={} x={:?}", req.fn_id, req.order, req.x).unwrap();
    for r in results {
        writeln!(
            out,
            "{:<15} {:>25?}  residual_im={:?}",
            r.method.name(),
            r.value,
            r.residual_im
        )
        .unwrap();
    }
    if let Some(d) = deviation {
        writeln!(out, "max_rel_deviation {d:?}").unwrap();
    }
    out
}

pub fn deriv_json(req: &DerivRequest, results: &[DerivResult], deviation: Option<f64>) -> String {
    let records: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "fn": req.fn_id.name(),
                "m": req.order,
                "x": float(req.x),
                "method": r.method.name(),
                "value": float(r.value),
                "residual_im": float(r.residual_im),
            })
        })
        .collect();
    let mut doc = json!({ "results": records });
    if let Some(d) = deviation {
        doc["max_rel_deviation"] = float(d);
    }
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}

pub fn report_text(report: &CheckReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "suite {}: {} cases, {} failures ({:.3} s)",
        report.suite,
        report.cases_run,
        report.failures.len(),
        report.elapsed.as_secs_f64()
    )
    .unwrap();
    for f in &report.failures {
        writeln!(
            out,
            "FAIL {}: expected {}, got {} [{}]",
            f.identifier, f.expected, f.got, f.context
        )
        .unwrap();
    }
    out
}

pub fn report_json(report: &CheckReport, tol: f64) -> String {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "identifier": f.identifier,
                "expected": f.expected,
                "got": f.got,
                "context": f.context,
            })
        })
        .collect();
    let doc = json!({
        "suite": report.suite,
        "tol": float(tol),
        "cases_run": report.cases_run,
        "passed": report.passed(),
        "elapsed_seconds": float(report.elapsed.as_secs_f64()),
        "failures": failures,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
}
