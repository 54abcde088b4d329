use std::fmt;

use super::{compute, Route, ZetaQuery};
use crate::error::{Error, Result};
use crate::exact::{int, Rational, UniPoly};

/// A polynomial in the indeterminate `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NPoly(pub UniPoly);

impl NPoly {
    pub fn poly(&self) -> &UniPoly {
        &self.0
    }

    pub fn eval(&self, n: i64) -> Rational {
        self.0.eval(&int(n))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display_var("n"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitConfig {
    /// Route used to sample values at `q = ζ_n`.
    pub route: Route,
    /// First sampled `n`.
    pub n_start: u64,
    /// Give up once the interpolant's degree exceeds this.
    pub max_degree: usize,
    /// Number of consecutive extra samples that must leave the interpolant
    /// unchanged.
    pub confirm: usize,
}

impl FitConfig {
    /// Generating-function sampler from `n = 2` for star values, Newton's
    /// identities from the first `n` with `m <= n-1` otherwise.
    pub fn default_for(m: u64, star: bool) -> Self {
        FitConfig {
            route: if star { Route::GenFun } else { Route::Newton },
            n_start: if star { 2 } else { (m + 1).max(2) },
            max_degree: 40,
            confirm: 2,
        }
    }
}

/// Reconstruct `z_n(ζ_n; m, s)` or `z*_n(ζ_n; m, s)` as a polynomial in `n`
/// by interpolating ever more samples until the interpolant stops changing.
pub fn fit_npoly(m: u64, s: i64, star: bool, cfg: &FitConfig) -> Result<NPoly> {
    let mut points: Vec<(Rational, Rational)> = Vec::new();
    let mut prev: Option<UniPoly> = None;
    let mut unchanged = 0;
    for n in cfg.n_start.max(2).. {
        let value = compute(&ZetaQuery::root(n, m, s, star), cfg.route)?.value;
        points.push((int(n as i64), value));
        let p = UniPoly::interpolate(&points)?;
        if prev.as_ref() == Some(&p) {
            unchanged += 1;
            if unchanged >= cfg.confirm.max(1) {
                return Ok(NPoly(p));
            }
        } else {
            unchanged = 0;
        }
        if p.degree().unwrap_or(0) > cfg.max_degree {
            return Err(Error::NoStabilization {
                cap: cfg.max_degree,
            });
        }
        prev = Some(p);
    }
    unreachable!("the sampling loop only exits by returning")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// `c · Π (n - r)` times the integer polynomial `tail` (ascending).
    fn product(c: Rational, roots: &[i64], tail: &[i64]) -> UniPoly {
        roots
            .iter()
            .fold(UniPoly::from_ints(tail).scale(&c), |acc, &r| {
                acc * UniPoly::from_ints(&[-r, 1])
            })
    }

    #[test]
    fn star_m2_s1() {
        let got = fit_npoly(2, 1, true, &FitConfig::default_for(2, true)).unwrap();
        assert_eq!(
            got.poly(),
            &UniPoly::new(vec![rat(-1, 12), int(0), rat(1, 12)])
        );
        assert_eq!(got.to_string(), "1/12*n^2 - 1/12");
    }

    #[test]
    fn star_m4_s2() {
        let want = product(
            rat(1, 3628800),
            &[-1, 1],
            &[103669, -41250, -21071, 9150, 181, -300, 21],
        );
        assert_eq!(
            fit_npoly(4, 2, true, &FitConfig::default_for(4, true))
                .unwrap()
                .0,
            want
        );
    }

    #[test]
    fn nonstar_m2_s1_is_closed_form() {
        let got = fit_npoly(2, 1, false, &FitConfig::default_for(2, false)).unwrap();
        // binom(n-1, 2)/3 = (n-1)(n-2)/6
        assert_eq!(got.0, product(rat(1, 6), &[1, 2], &[1]));
    }

    #[test]
    fn non_polynomial_data_does_not_stabilize() {
        let cfg = FitConfig {
            max_degree: 3,
            ..FitConfig::default_for(5, true)
        };
        assert_eq!(
            fit_npoly(5, 3, true, &cfg),
            Err(Error::NoStabilization { cap: 3 })
        );
    }
}
