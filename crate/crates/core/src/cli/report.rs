use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::Format;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::zeta::{BiPoly, Route, ZetaQuery};

/// One `(query, route)` evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: u64,
    pub m: u64,
    pub s: i64,
    pub q: String,
    pub star: bool,
    pub route: String,
    pub value: Option<String>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// The route does not apply here, as opposed to failing.
    #[serde(skip)]
    pub not_applicable: bool,
    #[serde(skip)]
    route_rank: usize,
}

impl Row {
    pub fn new(query: &ZetaQuery, route: Route, outcome: Result<Rational>) -> Self {
        let (value, error, not_applicable) = match outcome {
            Ok(v) => (Some(v.to_string()), None, false),
            Err(e) => {
                let na = matches!(e, Error::OutOfValidityRange { .. });
                (None, Some(e.to_string()), na)
            }
        };
        Row {
            n: query.n,
            m: query.m,
            s: query.s,
            q: query.q.to_string(),
            star: query.star,
            route: route.name().to_string(),
            value,
            agree: false,
            error,
            not_applicable,
            route_rank: Route::ALL
                .iter()
                .position(|&r| r == route)
                .unwrap_or(usize::MAX),
        }
    }

    /// Deterministic report order: `(n, m, s, star, route)`.
    pub fn order(a: &Row, b: &Row) -> Ordering {
        (a.n, a.m, a.s, a.star, a.route_rank).cmp(&(b.n, b.m, b.s, b.star, b.route_rank))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone)]
enum View {
    Rows,
    Fit { star: bool, m: u64, s: i64 },
    Fpoly(BiPoly),
}

/// Top-level report: `{config, rows, result?, summary}`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: Value,
    pub rows: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub summary: Summary,
    #[serde(skip)]
    view: View,
}

impl Report {
    pub(super) fn rows(config: Value, rows: Vec<Row>, summary: Summary) -> Self {
        Report {
            config,
            rows,
            result: None,
            summary,
            view: View::Rows,
        }
    }

    pub(super) fn fit(
        config: Value,
        result: Value,
        summary: Summary,
        star: bool,
        m: u64,
        s: i64,
    ) -> Self {
        Report {
            config,
            rows: Vec::new(),
            result: Some(result),
            summary,
            view: View::Fit { star, m, s },
        }
    }

    pub(super) fn fpoly(config: Value, result: Value, f: &BiPoly) -> Self {
        Report {
            config,
            rows: Vec::new(),
            result: Some(result),
            summary: Summary { pass: 1, fail: 0 },
            view: View::Fpoly(f.clone()),
        }
    }

    pub(super) fn with_result(mut self, result: Value) -> Self {
        self.result = Some(result);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    fn result_str(&self, key: &str) -> String {
        match self.result.as_ref().and_then(|r| r.get(key)) {
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
            None => String::new(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.view {
            View::Rows => {
                w.write_record([
                    "n", "m", "s", "q", "star", "route", "value", "agree", "error",
                ])
                .expect("in-memory write");
                for r in &self.rows {
                    w.write_record([
                        r.n.to_string(),
                        r.m.to_string(),
                        r.s.to_string(),
                        r.q.clone(),
                        r.star.to_string(),
                        r.route.clone(),
                        r.value.clone().unwrap_or_default(),
                        r.agree.to_string(),
                        r.error.clone().unwrap_or_default(),
                    ])
                    .expect("in-memory write");
                }
            }
            View::Fit { .. } => {
                w.write_record(["power", "coefficient"])
                    .expect("in-memory write");
                let coeffs = self
                    .result
                    .as_ref()
                    .and_then(|r| r.get("coefficients"))
                    .and_then(Value::as_array)
                    .cloned()
                    .unwrap_or_default();
                for (i, c) in coeffs.iter().enumerate() {
                    w.write_record([i.to_string(), c.as_str().unwrap_or_default().to_string()])
                        .expect("in-memory write");
                }
            }
            View::Fpoly(f) => {
                w.write_record(["x_power", "y_power", "coefficient"])
                    .expect("in-memory write");
                for (i, row) in f.grid().iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        w.write_record([i.to_string(), j.to_string(), c.to_string()])
                            .expect("in-memory write");
                    }
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        match &self.view {
            View::Rows => {
                let header = ["n", "m", "s", "q", "kind", "route", "value", "status"];
                let body: Vec<[String; 8]> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let status = match (&r.value, &r.error) {
                            (Some(_), _) if r.agree => "ok".to_string(),
                            (Some(_), _) => "MISMATCH".to_string(),
                            (None, Some(e)) if r.not_applicable => format!("n/a: {e}"),
                            (None, Some(e)) => format!("ERROR: {e}"),
                            (None, None) => "ERROR".to_string(),
                        };
                        [
                            r.n.to_string(),
                            r.m.to_string(),
                            r.s.to_string(),
                            r.q.clone(),
                            if r.star { "star" } else { "plain" }.to_string(),
                            r.route.clone(),
                            r.value.clone().unwrap_or_else(|| "-".into()),
                            status,
                        ]
                    })
                    .collect();
                let mut widths = header.map(str::len);
                for line in &body {
                    for (w, cell) in widths.iter_mut().zip(line) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let mut emit = |cells: &[&str]| {
                    let mut line = String::new();
                    for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
                        if k + 1 == cells.len() {
                            line.push_str(cell);
                        } else {
                            let _ = write!(line, "{cell:<w$}  ");
                        }
                    }
                    out.push_str(line.trim_end());
                    out.push('\n');
                };
                emit(&header);
                for line in &body {
                    emit(&line.each_ref().map(String::as_str));
                }
                if self.result.is_some() {
                    let _ = writeln!(out, "verdict: {}", self.result_str("verdict"));
                }
                let _ = writeln!(
                    out,
                    "summary: pass {}, fail {}",
                    self.summary.pass, self.summary.fail
                );
            }
            View::Fit { star, m, s } => {
                let name = if *star { "z*" } else { "z" };
                let _ = writeln!(
                    out,
                    "{name}_n(zeta_n; {m}, {s}) = {}",
                    self.result_str("polynomial")
                );
                let _ = writeln!(
                    out,
                    "degree {}, sampled by {}",
                    self.result_str("degree"),
                    self.result_str("route")
                );
                if let Some(r) = self.result.as_ref().and_then(|r| r.get("reference")) {
                    let ok = r.get("match").and_then(Value::as_bool).unwrap_or(false);
                    let _ = writeln!(
                        out,
                        "reference {}: {}",
                        r.get("label").and_then(Value::as_str).unwrap_or_default(),
                        if ok { "MATCH" } else { "MISMATCH" }
                    );
                }
            }
            View::Fpoly(f) => {
                let s = self.result_str("s");
                let l = self.result_str("l");
                let _ = writeln!(out, "F_{{{s},{l}}}(X, Y) = {f}");
                let _ = writeln!(out, "coefficients (row i: X^i, column j: Y^j):");
                for row in f.grid() {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "  {}", cells.join(" "));
                }
            }
        }
        out
    }
}
