use super::{eval_at_q, AtQ, ZetaQuery};
use crate::enumerate::{strict_sum, weak_sum};
use crate::error::{Error, Result};
use crate::exact::{Field, Rational};
use crate::qstirling::QContext;

/// `w_i = (1 - q^i)^{-s}` for `1 <= i <= n-1`.
fn weights<F: Field>(q: &F, n: u64, s: i64) -> Result<Vec<F>> {
    let mut out = Vec::with_capacity(n as usize - 1);
    let mut qi = q.one_like();
    for i in 1..n {
        qi = qi * q.clone();
        let base = q.one_like() - qi.clone();
        if base.is_zero_like() {
            return Err(Error::DegenerateQ(format!(
                "q^{i} = 1, so a summand is singular"
            )));
        }
        out.push(base.powi(-s)?);
    }
    Ok(out)
}

struct Brute {
    n: u64,
    m: u64,
    s: i64,
    star: bool,
}

impl AtQ for Brute {
    fn run<F: Field>(&self, q: F) -> Result<F> {
        let w = weights(&q, self.n, self.s)?;
        Ok(if self.star {
            weak_sum(&w, self.m as usize, &q)
        } else {
            strict_sum(&w, self.m as usize, &q)
        })
    }
}

/// Literal sum over weakly increasing index tuples.
pub fn z_star_brute(query: &ZetaQuery) -> Result<Rational> {
    let query = &ZetaQuery {
        star: true,
        ..query.clone()
    };
    query.validate()?;
    eval_at_q(
        query,
        Brute {
            n: query.n,
            m: query.m,
            s: query.s,
            star: true,
        },
    )
}

/// Literal sum over strictly increasing index tuples.
pub fn z_brute(query: &ZetaQuery) -> Result<Rational> {
    let query = &ZetaQuery {
        star: false,
        ..query.clone()
    };
    query.validate()?;
    eval_at_q(
        query,
        Brute {
            n: query.n,
            m: query.m,
            s: query.s,
            star: false,
        },
    )
}

struct ViaStirling {
    n: u64,
    m: u64,
    s: i64,
    star: bool,
}

impl AtQ for ViaStirling {
    fn run<F: Field>(&self, q: F) -> Result<F> {
        let (n, m, s) = (self.n, self.m, self.s);
        let ctx = QContext::new(q.clone());
        let one_minus_q = q.one_like() - q;
        let ms = m as i64 * s;
        if self.star {
            let num = ctx.stirling2(n + m - 1, n - 1, 1, -s)?;
            Ok(num * one_minus_q.powi(-ms)?)
        } else {
            let num = ctx.stirling1(n, m + 1, 1, s)?;
            let den = one_minus_q.powi(ms)? * ctx.qfactorial(n - 1).powi(s)?;
            Ok(num * den.inverse()?)
        }
    }
}

/// `⎡n, m+1⎤^{(1,s)} / ((1-q)^{ms} ([n-1]_q!)^s)`.
pub fn z_via_stirling(query: &ZetaQuery) -> Result<Rational> {
    let query = &ZetaQuery {
        star: false,
        ..query.clone()
    };
    query.validate()?;
    eval_at_q(
        query,
        ViaStirling {
            n: query.n,
            m: query.m,
            s: query.s,
            star: false,
        },
    )
}

/// `⎧n+m-1, n-1⎫^{(1,-s)} / (1-q)^{ms}`.
pub fn z_star_via_stirling(query: &ZetaQuery) -> Result<Rational> {
    let query = &ZetaQuery {
        star: true,
        ..query.clone()
    };
    query.validate()?;
    eval_at_q(
        query,
        ViaStirling {
            n: query.n,
            m: query.m,
            s: query.s,
            star: true,
        },
    )
}
