//! q-multiple zeta and zeta-star values over finite index ranges.
//!
//! For `n >= 2`, `m >= 0` and nonzero `s`,
//!
//! ```text
//! z_n(q; m, s)  = Σ_{1 <= i_1 <  … <  i_m <= n-1} Π (1 - q^{i_j})^{-s}
//! z*_n(q; m, s) = Σ_{1 <= i_1 <= … <= i_m <= n-1} Π (1 - q^{i_j})^{-s}
//! ```
//!
//! At `q = ζ_n` these are rational numbers. Every [`Route`] computes the same
//! value by a different method; agreement between routes is the main check
//! of correctness.

mod brute;
mod closed;
mod fit;
mod fpoly;
mod genfun;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::One;

use crate::cyclotomic::{as_rational, zeta_power};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Field, Rational};

pub use brute::{z_brute, z_star_brute, z_star_via_stirling, z_via_stirling};
pub use closed::{
    z_root_closed_s1, z_root_closed_s2, z_root_general, z_root_m1_det, z_star_root_bell,
    z_star_root_rec, z_star_root_sum_rule, ClosedS2Variant,
};
pub use fit::{fit_npoly, FitConfig, NPoly};
pub use fpoly::{f_poly, BiPoly, MAX_FPOLY_S};
pub use genfun::{genfun_denominator, z_star_root_genfun};

/// The value of `q`: a primitive `n`-th root of unity `ζ_n^exponent`, or a
/// rational number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QDesc {
    RootOfUnity { exponent: u64 },
    Value(Rational),
}

impl QDesc {
    pub fn root() -> Self {
        QDesc::RootOfUnity { exponent: 1 }
    }

    pub fn is_root(&self) -> bool {
        matches!(self, QDesc::RootOfUnity { .. })
    }
}

impl fmt::Display for QDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QDesc::RootOfUnity { exponent: 1 } => write!(f, "zeta"),
            QDesc::RootOfUnity { exponent } => write!(f, "zeta^{exponent}"),
            QDesc::Value(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for QDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "zeta" {
            return Ok(QDesc::root());
        }
        if let Some(e) = t.strip_prefix("zeta^") {
            let exponent = e.parse().map_err(|_| {
                Error::InvalidArgument(format!("bad root-of-unity exponent in {s:?}"))
            })?;
            return Ok(QDesc::RootOfUnity { exponent });
        }
        parse_rational(t).map(QDesc::Value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZetaQuery {
    pub n: u64,
    pub m: u64,
    pub s: i64,
    pub q: QDesc,
    pub star: bool,
}

impl ZetaQuery {
    /// Query at `q = ζ_n`.
    pub fn root(n: u64, m: u64, s: i64, star: bool) -> Self {
        ZetaQuery {
            n,
            m,
            s,
            q: QDesc::root(),
            star,
        }
    }

    pub fn at(n: u64, m: u64, s: i64, q: QDesc, star: bool) -> Self {
        ZetaQuery { n, m, s, q, star }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidArgument(format!(
                "n must be at least 2, got {}",
                self.n
            )));
        }
        if self.s == 0 {
            return Err(Error::InvalidArgument("s must be nonzero".into()));
        }
        if !self.star && self.m > self.n - 1 {
            return Err(Error::OutOfValidityRange {
                route: "strict sum",
                bound: format!("m <= n-1 = {}", self.n - 1),
                got: format!("m = {}", self.m),
            });
        }
        match &self.q {
            QDesc::RootOfUnity { exponent } => {
                if *exponent == 0 || exponent.gcd(&self.n) != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "zeta^{exponent} is not a primitive {}-th root of unity",
                        self.n
                    )));
                }
            }
            QDesc::Value(q) => {
                let mut p = Rational::one();
                for i in 1..self.n {
                    p *= q;
                    if p.is_one() {
                        return Err(Error::DegenerateQ(format!(
                            "q = {q} satisfies q^{i} = 1, so a summand is singular"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A method of computing a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// Literal sum over index tuples.
    Brute,
    /// Quotient of q-Stirling numbers.
    Stirling,
    /// `binom(n-1, m)/(m+1)`, for `s = 1`.
    ClosedS1,
    /// Two-binomial closed form, for `s = 2`.
    ClosedS2Binomial,
    /// r-Stirling closed form, for `s = 2`.
    ClosedS2RStirling,
    /// Hessenberg determinant of binomials, for `m = 1`.
    M1Det,
    /// Newton's identities on the `m = 1` values.
    Newton,
    /// Complete Bell polynomial of the `m = 1` values, checked against the
    /// equivalent determinant.
    Bell,
    /// `z*(2, s) = z(2, s) + z(1, 2s)`.
    SumRule,
    /// The linear recurrences in `m` for `s = 1, 2, 3`.
    Recurrence,
    /// Power-series expansion of the generating function.
    GenFun,
}

impl Route {
    pub const ALL: [Route; 11] = [
        Route::Brute,
        Route::Stirling,
        Route::ClosedS1,
        Route::ClosedS2Binomial,
        Route::ClosedS2RStirling,
        Route::M1Det,
        Route::Newton,
        Route::Bell,
        Route::SumRule,
        Route::Recurrence,
        Route::GenFun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Brute => "brute",
            Route::Stirling => "stirling",
            Route::ClosedS1 => "closed-s1",
            Route::ClosedS2Binomial => "closed-s2-binomial",
            Route::ClosedS2RStirling => "closed-s2-r-stirling",
            Route::M1Det => "m1-det",
            Route::Newton => "newton",
            Route::Bell => "bell",
            Route::SumRule => "sum-rule",
            Route::Recurrence => "recurrence",
            Route::GenFun => "genfun",
        }
    }

    /// Whether this route can compute `query`; the error says why not.
    pub fn check(self, query: &ZetaQuery) -> Result<()> {
        query.validate()?;
        let (n, m, s, star) = (query.n, query.m, query.s, query.star);
        let refuse = |bound: String, got: String| {
            Err(Error::OutOfValidityRange {
                route: self.name(),
                bound,
                got,
            })
        };
        if matches!(self, Route::Brute | Route::Stirling) {
            return Ok(());
        }
        if !query.q.is_root() {
            return refuse(
                "q a primitive n-th root of unity".into(),
                format!("q = {}", query.q),
            );
        }
        if s < 1 {
            return refuse("s >= 1".into(), format!("s = {s}"));
        }
        let kind = |want_star: bool| {
            if star == want_star {
                Ok(())
            } else {
                refuse(
                    format!("{} values", if want_star { "star" } else { "non-star" }),
                    format!("{} query", if star { "star" } else { "non-star" }),
                )
            }
        };
        match self {
            Route::ClosedS1 | Route::ClosedS2Binomial | Route::ClosedS2RStirling => {
                kind(false)?;
                let want = if self == Route::ClosedS1 { 1 } else { 2 };
                if s != want {
                    return refuse(format!("s = {want}"), format!("s = {s}"));
                }
                Ok(())
            }
            Route::Newton => kind(false),
            Route::M1Det => {
                if m != 1 {
                    return refuse("m = 1".into(), format!("m = {m}"));
                }
                Ok(())
            }
            Route::Bell | Route::GenFun => kind(true),
            Route::SumRule => {
                kind(true)?;
                if m != 2 {
                    return refuse("m = 2".into(), format!("m = {m}"));
                }
                Ok(())
            }
            Route::Recurrence => {
                kind(true)?;
                closed::rec_bound(n, m, s)
            }
            Route::Brute | Route::Stirling => unreachable!(),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueRecord {
    pub query: ZetaQuery,
    pub route: Route,
    pub value: Rational,
}

/// All routes able to compute `query`.
pub fn routes_for(query: &ZetaQuery) -> Vec<Route> {
    Route::ALL
        .into_iter()
        .filter(|r| r.check(query).is_ok())
        .collect()
}

pub fn compute(query: &ZetaQuery, route: Route) -> Result<ValueRecord> {
    route.check(query)?;
    let (n, m, s) = (query.n, query.m, query.s);
    let value = match route {
        Route::Brute if query.star => z_star_brute(query)?,
        Route::Brute => z_brute(query)?,
        Route::Stirling if query.star => z_star_via_stirling(query)?,
        Route::Stirling => z_via_stirling(query)?,
        Route::ClosedS1 => z_root_closed_s1(n, m)?,
        Route::ClosedS2Binomial => z_root_closed_s2(n, m, ClosedS2Variant::Binomial)?,
        Route::ClosedS2RStirling => z_root_closed_s2(n, m, ClosedS2Variant::RStirling)?,
        Route::M1Det => z_root_m1_det(n, s as u64)?,
        Route::Newton => z_root_general(n, m, s as u64)?,
        Route::Bell => z_star_root_bell(n, m, s as u64)?,
        Route::SumRule => z_star_root_sum_rule(n, m, s as u64)?,
        Route::Recurrence => z_star_root_rec(n, m, s as u64)?,
        Route::GenFun => z_star_root_genfun(n, m, s as u64)?
            .pop()
            .expect("m+1 coefficients"),
    };
    Ok(ValueRecord {
        query: query.clone(),
        route,
        value,
    })
}

/// Evaluate `f` at the query's `q`, in `Q(ζ_n)` or in `Q`, and return the
/// rational result.
fn eval_at_q<R>(query: &ZetaQuery, f: R) -> Result<Rational>
where
    R: AtQ,
{
    match &query.q {
        QDesc::RootOfUnity { exponent } => {
            let q = zeta_power(query.n, *exponent as i64);
            as_rational(&f.run(q)?)
        }
        QDesc::Value(v) => f.run(v.clone()),
    }
}

/// A computation generic over the field containing `q`.
trait AtQ {
    fn run<F: Field>(&self, q: F) -> Result<F>;
}
