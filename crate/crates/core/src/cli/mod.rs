//! Command-line front end: single values, grids, cross-route verification,
//! polynomial fitting and F-polynomials.
//!
//! [`run`] does all the work and returns the exit status together with the
//! text destined for stdout and stderr, so the binary is a thin wrapper and
//! tests can drive the CLI in-process.

mod reference;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::zeta::{compute, f_poly, fit_npoly, routes_for, FitConfig, QDesc, Route, ZetaQuery};

pub use reference::{load_references, ReferencePoly, ReferenceSet};
pub use report::{Report, Row, Summary};

/// Exit status: every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit status: at least one identity failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: bad configuration or a validity violation.
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "qzeta",
    version,
    about = "Exact q-multiple zeta and zeta-star values"
)]
struct Cli {
    #[command(subcommand)]
    #[serde(flatten)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase", tag = "command")]
enum Command {
    /// Compute one value by every selected route and compare.
    Value(ValueArgs),
    /// Compute values over a grid with one route per cell.
    Table(TableArgs),
    /// Check that all valid routes agree over a grid.
    Verify(VerifyArgs),
    /// Reconstruct a value as a polynomial in n.
    Fit(FitArgs),
    /// Print F_{s,l}(X, Y).
    Fpoly(FpolyArgs),
}

#[derive(Debug, Args, Serialize)]
struct ValueArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
    /// `zeta`, `zeta^a` or a rational number.
    #[arg(long, default_value = "zeta", allow_hyphen_values = true)]
    q: String,
    /// Zeta-star (weakly increasing indices) instead of strictly increasing.
    #[arg(long)]
    star: bool,
    /// `all` or a comma-separated list of route names.
    #[arg(long, default_value = "all")]
    routes: String,
    #[arg(long, hide = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    corrupt_route: Option<String>,
}

#[derive(Debug, Args, Serialize)]
struct TableArgs {
    /// Values of n: `a`, `a..b` (inclusive) or a comma-separated list of those.
    #[arg(long)]
    n: String,
    #[arg(long)]
    m: String,
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, default_value = "zeta", allow_hyphen_values = true)]
    q: String,
    #[arg(long)]
    star: bool,
    /// A route name, or `auto` for the fastest applicable one.
    #[arg(long, default_value = "auto")]
    route: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Star,
    Plain,
    Both,
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    #[arg(long)]
    n: String,
    #[arg(long)]
    m: String,
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, default_value = "zeta", allow_hyphen_values = true)]
    q: String,
    /// Which family of values to check.
    #[arg(long, value_enum, default_value_t = Kind::Both)]
    kind: Kind,
    #[arg(long, default_value = "all")]
    routes: String,
    #[arg(long, hide = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    corrupt_route: Option<String>,
}

#[derive(Debug, Args, Serialize)]
struct FitArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    s: i64,
    #[arg(long)]
    star: bool,
    /// Sampling route; defaults to `genfun` for star values, `newton` otherwise.
    #[arg(long)]
    route: Option<String>,
    /// First sampled n.
    #[arg(long)]
    n_start: Option<u64>,
    #[arg(long, default_value_t = 40)]
    max_degree: usize,
    /// Extra samples that must leave the interpolant unchanged.
    #[arg(long, default_value_t = 2)]
    confirm: usize,
    /// JSON file of reference polynomials to compare against.
    #[arg(long)]
    reference: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
struct FpolyArgs {
    #[arg(long)]
    s: u64,
    #[arg(long)]
    l: u64,
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (code, report) = match execute(&cli) {
        Ok(x) => x,
        Err(e) => {
            return Outcome {
                code: EXIT_CONFIG,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_CONFIG,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}

fn execute(cli: &Cli) -> Result<(i32, Report)> {
    let config = serde_json::to_value(cli).expect("arguments serialize");
    match &cli.command {
        Command::Value(a) => cmd_value(a, config),
        Command::Table(a) => cmd_table(a, config),
        Command::Verify(a) => cmd_verify(a, config),
        Command::Fit(a) => cmd_fit(a, config),
        Command::Fpoly(a) => cmd_fpoly(a, config),
    }
}

/// Parse `a`, `a..b` (inclusive) or comma-separated lists of those into a
/// sorted, deduplicated list.
pub fn parse_range(text: &str) -> Result<Vec<i64>> {
    let bad = || Error::InvalidArgument(format!("bad range {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .map_err(|_| bad())?;
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyRange);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_unsigned_range(text: &str, name: &str) -> Result<Vec<u64>> {
    parse_range(text)?
        .into_iter()
        .map(|v| {
            u64::try_from(v)
                .map_err(|_| Error::InvalidArgument(format!("{name} must be nonnegative, got {v}")))
        })
        .collect()
}

/// `None` selects every route.
fn parse_routes(text: &str) -> Result<Option<Vec<Route>>> {
    if text.trim() == "all" {
        return Ok(None);
    }
    let routes = text
        .split(',')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Route>>>()?;
    if routes.is_empty() {
        return Err(Error::InvalidArgument("no routes selected".into()));
    }
    Ok(Some(routes))
}

fn parse_corrupt(text: &Option<String>) -> Result<Option<Route>> {
    text.as_deref().map(str::parse).transpose()
}

fn row(query: &ZetaQuery, route: Route, outcome: Result<Rational>, corrupt: Option<Route>) -> Row {
    let outcome = outcome.map(|v| {
        if corrupt == Some(route) {
            v + int(1)
        } else {
            v
        }
    });
    Row::new(query, route, outcome)
}

/// Mark each row as agreeing with the reference value of its cell: the
/// brute-force value if present, else the first value computed.
fn settle_agreement(rows: &mut [Row]) {
    let reference = rows
        .iter()
        .find(|r| r.route == Route::Brute.name() && r.value.is_some())
        .or_else(|| rows.iter().find(|r| r.value.is_some()))
        .and_then(|r| r.value.clone());
    for r in rows {
        r.agree = r.value.is_some() && r.value == reference;
    }
}

fn cmd_value(a: &ValueArgs, config: serde_json::Value) -> Result<(i32, Report)> {
    let query = ZetaQuery::at(a.n, a.m, a.s, a.q.parse()?, a.star);
    query.validate()?;
    let corrupt = parse_corrupt(&a.corrupt_route)?;
    let routes = parse_routes(&a.routes)?.unwrap_or_else(|| routes_for(&query));
    let mut rows: Vec<Row> = routes
        .par_iter()
        .map(|&r| row(&query, r, compute(&query, r).map(|v| v.value), corrupt))
        .collect();
    rows.sort_by(Row::order);
    settle_agreement(&mut rows);
    let computed = rows.iter().filter(|r| r.value.is_some()).count();
    // Routes that are merely not applicable are reported but do not fail.
    let hard_errors = rows
        .iter()
        .filter(|r| r.value.is_none() && !r.not_applicable)
        .count();
    let disagree = rows
        .iter()
        .filter(|r| r.value.is_some() && !r.agree)
        .count();
    let code = if computed == 0 {
        EXIT_CONFIG
    } else if disagree + hard_errors > 0 {
        EXIT_FAIL
    } else {
        EXIT_OK
    };
    let verdict = if code == EXIT_OK { "AGREE" } else { "DISAGREE" };
    let summary = Summary {
        pass: computed - disagree,
        fail: disagree + hard_errors,
    };
    Ok((
        code,
        Report::rows(config, rows, summary).with_result(json!({ "verdict": verdict })),
    ))
}

fn grid(n: &str, m: &str, s: &str) -> Result<(Vec<u64>, Vec<u64>, Vec<i64>)> {
    Ok((
        parse_unsigned_range(n, "n")?,
        parse_unsigned_range(m, "m")?,
        parse_range(s)?,
    ))
}

/// Valid queries over the grid, skipping cells such as `m > n-1` for
/// strictly increasing sums.
fn grid_cells(ns: &[u64], ms: &[u64], ss: &[i64], q: &QDesc, kinds: &[bool]) -> Vec<ZetaQuery> {
    let mut cells = Vec::new();
    for &n in ns {
        for &m in ms {
            for &s in ss {
                for &star in kinds {
                    let query = ZetaQuery::at(n, m, s, q.clone(), star);
                    if query.validate().is_ok() {
                        cells.push(query);
                    }
                }
            }
        }
    }
    cells
}

fn auto_route(query: &ZetaQuery) -> Route {
    match (query.q.is_root() && query.s >= 1, query.star) {
        (true, true) => Route::GenFun,
        (true, false) => Route::Newton,
        (false, _) => Route::Brute,
    }
}

fn cmd_table(a: &TableArgs, config: serde_json::Value) -> Result<(i32, Report)> {
    let (ns, ms, ss) = grid(&a.n, &a.m, &a.s)?;
    let q: QDesc = a.q.parse()?;
    let fixed = if a.route == "auto" {
        None
    } else {
        Some(a.route.parse::<Route>()?)
    };
    let cells = grid_cells(&ns, &ms, &ss, &q, &[a.star]);
    if cells.is_empty() {
        return Err(Error::EmptyRange);
    }
    let mut rows: Vec<Row> = cells
        .par_iter()
        .map(|query| {
            let route = fixed.unwrap_or_else(|| auto_route(query));
            row(query, route, compute(query, route).map(|v| v.value), None)
        })
        .collect();
    rows.sort_by(Row::order);
    let failed = rows.iter().filter(|r| r.value.is_none()).count();
    for r in &mut rows {
        r.agree = r.value.is_some();
    }
    let summary = Summary {
        pass: rows.len() - failed,
        fail: failed,
    };
    let code = if failed > 0 { EXIT_CONFIG } else { EXIT_OK };
    Ok((code, Report::rows(config, rows, summary)))
}

/// Evaluate every selected, valid route on every cell of the grid.
fn verify_rows(
    cells: &[ZetaQuery],
    routes: &Option<Vec<Route>>,
    corrupt: Option<Route>,
) -> Vec<Row> {
    let mut rows: Vec<Row> = cells
        .par_iter()
        .flat_map_iter(|query| {
            let mut cell: Vec<Row> = routes_for(query)
                .into_iter()
                .filter(|r| routes.as_ref().is_none_or(|sel| sel.contains(r)))
                .map(|r| row(query, r, compute(query, r).map(|v| v.value), corrupt))
                .collect();
            settle_agreement(&mut cell);
            cell
        })
        .collect();
    rows.sort_by(Row::order);
    rows
}

fn cmd_verify(a: &VerifyArgs, config: serde_json::Value) -> Result<(i32, Report)> {
    let (ns, ms, ss) = grid(&a.n, &a.m, &a.s)?;
    let q: QDesc = a.q.parse()?;
    let routes = parse_routes(&a.routes)?;
    let corrupt = parse_corrupt(&a.corrupt_route)?;
    let kinds: &[bool] = match a.kind {
        Kind::Star => &[true],
        Kind::Plain => &[false],
        Kind::Both => &[true, false],
    };
    let cells = grid_cells(&ns, &ms, &ss, &q, kinds);
    if cells.is_empty() {
        return Err(Error::EmptyRange);
    }
    let rows = verify_rows(&cells, &routes, corrupt);
    let fail = rows.iter().filter(|r| !r.agree).count();
    let summary = Summary {
        pass: rows.len() - fail,
        fail,
    };
    let code = if fail > 0 { EXIT_FAIL } else { EXIT_OK };
    Ok((code, Report::rows(config, rows, summary)))
}

fn cmd_fit(a: &FitArgs, config: serde_json::Value) -> Result<(i32, Report)> {
    let mut cfg = FitConfig::default_for(a.m, a.star);
    if let Some(r) = &a.route {
        cfg.route = r.parse()?;
    }
    if let Some(n0) = a.n_start {
        cfg.n_start = n0;
    }
    cfg.max_degree = a.max_degree;
    cfg.confirm = a.confirm;
    let poly = fit_npoly(a.m, a.s, a.star, &cfg)?;
    let coefficients: Vec<String> = poly.poly().coeffs().iter().map(|c| c.to_string()).collect();
    let mut result = json!({
        "polynomial": poly.to_string(),
        "coefficients": coefficients,
        "degree": poly.degree(),
        "route": cfg.route.name(),
    });
    let mut code = EXIT_OK;
    let mut summary = Summary { pass: 1, fail: 0 };
    if let Some(path) = &a.reference {
        let set = load_references(path)?;
        let entry = set.find(a.m, a.s, a.star).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{} has no reference for m={}, s={}, star={}",
                path.display(),
                a.m,
                a.s,
                a.star
            ))
        })?;
        let matches = entry.npoly()? == poly;
        result["reference"] = json!({
            "label": entry.label,
            "factored": entry.factored,
            "match": matches,
        });
        if !matches {
            code = EXIT_FAIL;
            summary = Summary { pass: 0, fail: 1 };
        }
    }
    Ok((code, Report::fit(config, result, summary, a.star, a.m, a.s)))
}

fn cmd_fpoly(a: &FpolyArgs, config: serde_json::Value) -> Result<(i32, Report)> {
    let f = f_poly(a.s, a.l)?;
    let grid: Vec<Vec<String>> = f
        .grid()
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect();
    let result = json!({ "s": a.s, "l": a.l, "polynomial": f.to_string(), "grid": grid });
    Ok((EXIT_OK, Report::fpoly(config, result, &f)))
}
