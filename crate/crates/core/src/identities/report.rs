//! Report serialization: line-delimited JSON, CSV, and plain text.
//!
//! The JSON form is the canonical machine-readable output: one object per
//! tuple with keys in the fixed order `id`, `params`, then either
//! `residual` + `pass` (evaluated tuples) or `skipped` (rejected tuples),
//! followed by one trailing summary object. Rationals and polynomials use
//! their canonical text forms, so the output is bit-stable across runs.
//!
//! The CSV form flattens the same fields in the column order
//! `id,params,residual,status,detail` — `status` is `pass`, `fail`,
//! `skipped`, or `summary`; `detail` carries the skip reason or, on the
//! summary row, the aggregate counts and any correction outcome.
//!
//! The text form is for terminals: one line per tuple plus a summary block.

use std::fmt::Write as _;

use crate::identities::correction::CorrectionOutcome;
use crate::identities::{IdentityReport, TupleOutcome, TuplePoint};
use crate::rational::format_rational;

/// One JSON object per tuple, then one trailing summary object.
pub fn to_json_lines(report: &IdentityReport) -> Vec<String> {
    let id = report.id.name();
    let mut lines = Vec::with_capacity(report.results.len() + 1);
    for result in &report.results {
        let mut line = String::new();
        let _ = write!(
            line,
            "{{\"id\":{},\"params\":{}",
            json_string(id),
            params_object(&result.point)
        );
        match &result.outcome {
            TupleOutcome::Checked { residual } => {
                let _ = write!(
                    line,
                    ",\"residual\":{},\"pass\":{}}}",
                    json_string(&residual.to_string()),
                    residual.is_zero()
                );
            }
            TupleOutcome::Skipped { reason } => {
                let _ = write!(line, ",\"skipped\":{}}}", json_string(reason));
            }
        }
        lines.push(line);
    }
    let mut tail = String::new();
    let _ = write!(
        tail,
        "{{\"id\":{},\"tuples\":{},\"pass\":{},\"fail\":{},\"skipped\":{},\"max_residual_degree\":{}",
        json_string(id),
        report.results.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.skipped,
        match report.summary.max_residual_degree {
            Some(d) => d.to_string(),
            None => "null".to_string(),
        }
    );
    if let Some(outcome) = &report.corrections {
        let _ = write!(tail, ",\"corrections\":{}", corrections_json(outcome));
    }
    tail.push('}');
    lines.push(tail);
    lines
}

/// Header, one row per tuple, one trailing summary row.
pub fn to_csv(report: &IdentityReport) -> String {
    let mut out = String::from("id,params,residual,status,detail\n");
    let id = report.id.name();
    for result in &report.results {
        let params = result.point.params_string();
        let (residual, status, detail) = match &result.outcome {
            TupleOutcome::Checked { residual } => (
                residual.to_string(),
                if residual.is_zero() { "pass" } else { "fail" },
                String::new(),
            ),
            TupleOutcome::Skipped { reason } => (String::new(), "skipped", reason.clone()),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            csv_field(id),
            csv_field(&params),
            csv_field(&residual),
            status,
            csv_field(&detail)
        );
    }
    let counts = format!(
        "tuples={} pass={} fail={} skipped={}",
        report.results.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.skipped
    );
    let mut detail = match report.summary.max_residual_degree {
        Some(d) => format!("max_residual_degree={d}"),
        None => String::new(),
    };
    if let Some(outcome) = &report.corrections {
        if !detail.is_empty() {
            detail.push(' ');
        }
        let _ = write!(detail, "corrections={}", corrections_text(outcome));
    }
    let _ = writeln!(
        out,
        "{},{},,summary,{}",
        csv_field(id),
        csv_field(&counts),
        csv_field(&detail)
    );
    out
}

/// Terminal-friendly rendering.
pub fn to_text(report: &IdentityReport) -> String {
    let mut out = String::new();
    let id = report.id.name();
    for result in &report.results {
        let params = result.point.params_string();
        match &result.outcome {
            TupleOutcome::Checked { residual } if residual.is_zero() => {
                let _ = writeln!(out, "{id} {params}: pass");
            }
            TupleOutcome::Checked { residual } => {
                let _ = writeln!(out, "{id} {params}: FAIL residual {residual}");
            }
            TupleOutcome::Skipped { reason } => {
                let _ = writeln!(out, "{id} {params}: skipped ({reason})");
            }
        }
    }
    let _ = writeln!(
        out,
        "{id}: {} tuples, {} pass, {} fail, {} skipped",
        report.results.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.skipped
    );
    if let Some(d) = report.summary.max_residual_degree {
        let _ = writeln!(out, "{id}: max residual degree {d}");
    }
    if let Some(outcome) = &report.corrections {
        let _ = writeln!(out, "{id}: corrections — {}", corrections_text(outcome));
    }
    out
}

/// `params` object with fixed key order `n,k,m,p,y,a,x`; integers are JSON
/// numbers, rationals and vectors are canonical strings.
fn params_object(point: &TuplePoint) -> String {
    let mut body = format!("{{\"n\":{}", point.n);
    if let Some(k) = point.k {
        let _ = write!(body, ",\"k\":{k}");
    }
    if let Some(m) = point.m {
        let _ = write!(body, ",\"m\":{m}");
    }
    if let Some(p) = point.p {
        let _ = write!(body, ",\"p\":{p}");
    }
    if let Some(y) = &point.y {
        let _ = write!(body, ",\"y\":{}", json_string(&format_rational(y)));
    }
    if let Some(a) = &point.a {
        let _ = write!(body, ",\"a\":{}", json_string(&a.to_string()));
    }
    if let Some(xs) = &point.xs {
        let joined = xs.iter().map(format_rational).collect::<Vec<_>>().join(";");
        let _ = write!(body, ",\"x\":{}", json_string(&joined));
    }
    body.push('}');
    body
}

fn corrections_json(outcome: &CorrectionOutcome) -> String {
    match outcome {
        CorrectionOutcome::Found(descriptors) => {
            let items: Vec<String> = descriptors.iter().map(|d| json_string(d)).collect();
            format!("[{}]", items.join(","))
        }
        CorrectionOutcome::NoneFound => json_string("none found"),
        CorrectionOutcome::NotApplicable => json_string("not applicable"),
    }
}

fn corrections_text(outcome: &CorrectionOutcome) -> String {
    match outcome {
        CorrectionOutcome::Found(descriptors) => descriptors.join("; "),
        CorrectionOutcome::NoneFound => "none found".to_string(),
        CorrectionOutcome::NotApplicable => "not applicable".to_string(),
    }
}

/// Minimal JSON string escaping — the content is ASCII generated in this
/// crate, but quotes/backslashes/control bytes are escaped regardless.
fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// RFC-4180 quoting: fields containing commas, quotes, or newlines are
/// quoted, inner quotes doubled.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{Grid, IdentityId};

    #[test]
    fn json_lines_have_stable_shape() {
        let grid = Grid {
            n_max: 2,
            ..Grid::default_for(IdentityId::CancellationB)
        };
        let report = crate::identities::verify(IdentityId::CancellationB, &grid);
        let lines = to_json_lines(&report);
        assert_eq!(lines.len(), 4); // n = 0, 1, 2 plus summary
        assert_eq!(
            lines[0],
            "{\"id\":\"CANCELLATION_B\",\"params\":{\"n\":0},\"residual\":\"[]\",\"pass\":true}"
        );
        assert_eq!(
            lines[3],
            "{\"id\":\"CANCELLATION_B\",\"tuples\":3,\"pass\":3,\"fail\":0,\"skipped\":0,\"max_residual_degree\":null}"
        );
    }

    #[test]
    fn skipped_tuples_surface_their_reason_in_every_format() {
        let grid = Grid {
            n_max: 2,
            k_max: 2,
            ..Grid::default_for(IdentityId::EulerSignLemma)
        };
        let report = crate::identities::verify(IdentityId::EulerSignLemma, &grid);
        let lines = to_json_lines(&report);
        assert!(
            lines.iter().any(|l| l.contains("\"skipped\":\"side condition")),
            "json lost the skip reason: {lines:?}"
        );
        let csv = to_csv(&report);
        assert!(csv.contains(",skipped,"), "csv lost the skip: {csv}");
        let text = to_text(&report);
        assert!(text.contains("skipped (side condition"), "text lost the skip: {text}");
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        assert_eq!(csv_field("a=2,-1/3"), "\"a=2,-1/3\"");
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn json_escaping_is_safe() {
        assert_eq!(json_string("a\"b\\c"), "\"a\\\"b\\\\c\"");
        assert_eq!(json_string("line\nbreak"), "\"line\\nbreak\"");
    }

    #[test]
    fn every_json_line_is_parseable_by_a_naive_brace_check() {
        let grid = Grid {
            n_max: 4,
            ..Grid::default_for(IdentityId::BernNum3Case)
        };
        let report = crate::identities::verify(IdentityId::BernNum3Case, &grid);
        for line in to_json_lines(&report) {
            assert!(line.starts_with('{') && line.ends_with('}'), "{line}");
            assert_eq!(
                line.matches('{').count(),
                line.matches('}').count(),
                "{line}"
            );
        }
    }
}
