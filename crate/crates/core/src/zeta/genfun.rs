//! The generating function
//!
//! ```text
//! Σ_m z*_n(ζ_n; m, s) X^m = n^s Π_{j=1}^{n-1} ((1 - ζ_n^j)^s - X)^{-1}
//!                         = -n^s X / Π_{i=1}^s (α_i^n - 1)
//! ```
//!
//! where `α_1, …, α_s` are the roots in `Y` of `(1 - Y)^s - X`. The product
//! over the roots is a determinant of the companion matrix, so the whole
//! series is computed in `Q[X]/(X^T)` without ever naming the roots.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial_q, int, sign, Rational, Ring, RingMatrix, TruncSeries, UniPoly};

/// Coefficients `c_0, …, c_{s-1}` of the monic polynomial
/// `(-1)^s ((1 - Y)^s - X) = Y^s + Σ_k c_k Y^k`, as polynomials in `X`.
pub(crate) fn monic_root_poly(s: u64) -> Vec<UniPoly> {
    let si = s as i64;
    (0..si)
        .map(|k| {
            let c = sign(si - k) * binomial_q(si, k);
            if k == 0 {
                UniPoly::new(vec![c, -sign(si)])
            } else {
                UniPoly::constant(c)
            }
        })
        .collect()
}

/// Companion matrix of `Y^s + Σ c_k Y^k`: ones on the subdiagonal and
/// `-c_k` down the last column.
pub(crate) fn companion<R: Ring>(coeffs: &[R], template: &R) -> RingMatrix<R> {
    let s = coeffs.len();
    RingMatrix::from_fn(s, |i, j| {
        if j == s - 1 {
            -coeffs[i].clone()
        } else if i == j + 1 {
            template.one_like()
        } else {
            template.zero_like()
        }
    })
}

/// `D(X) = Π_i (α_i^n - 1) = (-1)^s det(I - C^n)`, truncated to `order`.
pub fn genfun_denominator(n: u64, s: u64, order: usize) -> Result<TruncSeries> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let template = TruncSeries::one(order);
    let coeffs: Vec<TruncSeries> = monic_root_poly(s)
        .into_iter()
        .map(|p| TruncSeries::new(p, order))
        .collect();
    let c = companion(&coeffs, &template);
    let cn = c.pow(n);
    let i_minus = RingMatrix::identity(s as usize, &template).sub(&cn)?;
    let det = i_minus.det_fl();
    Ok(if s % 2 == 1 { -det } else { det })
}

/// `z*_n(ζ_n; m, s)` for `m = 0..=m_max`, read off the generating function.
pub fn z_star_root_genfun(n: u64, m_max: u64, s: u64) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let order = m_max as usize + 2;
    let d = genfun_denominator(n, s, order)?;
    let ns = Ring::pow(&int(n as i64), s);
    if !d.coeff(0).is_zero() || d.coeff(1) != -ns.clone() {
        return Err(Error::Valuation(format!(
            "denominator {d} should start with -{ns}*X (n={n}, s={s})"
        )));
    }
    let quotient = TruncSeries::new(d.poly().shift_down(1), order - 1);
    let series = quotient.inverse()?.scale(&-ns);
    Ok((0..=m_max as usize).map(|m| series.coeff(m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::zeta::{z_star_brute, ZetaQuery};

    #[test]
    fn s1_n4_series() {
        assert_eq!(
            z_star_root_genfun(4, 3, 1).unwrap(),
            vec![int(1), rat(3, 2), rat(5, 4), rat(5, 8)]
        );
    }

    #[test]
    fn s2_n5_m1_vanishes() {
        assert_eq!(z_star_root_genfun(5, 1, 2).unwrap()[1], int(0));
    }

    #[test]
    fn s4_matches_brute_force() {
        let v = z_star_root_genfun(5, 2, 4).unwrap();
        assert_eq!(v[2], z_star_brute(&ZetaQuery::root(5, 2, 4, true)).unwrap());
    }

    #[test]
    fn denominator_valuation() {
        for n in 2..16u64 {
            for s in 1..6u64 {
                let d = genfun_denominator(n, s, 4).unwrap();
                assert!(d.coeff(0).is_zero());
                assert_eq!(d.coeff(1), -Ring::pow(&int(n as i64), s));
            }
        }
    }

    #[test]
    fn beyond_n_minus_one_matches_closed_form() {
        // (n+1)(n-1)(n-3)(n-7)/240 at n = 2
        assert_eq!(z_star_root_genfun(2, 2, 2).unwrap()[2], rat(1, 16));
        assert_eq!(
            z_star_brute(&ZetaQuery::root(2, 2, 2, true)).unwrap(),
            rat(1, 16)
        );
    }

    #[test]
    fn root_poly_is_monic_form() {
        // s = 2: (1-Y)^2 - X = Y^2 - 2Y + 1 - X
        let c = monic_root_poly(2);
        assert_eq!(c[0], UniPoly::from_ints(&[1, -1]));
        assert_eq!(c[1], UniPoly::from_ints(&[-2]));
        // s = 1: -(1 - Y - X) = Y - 1 + X
        assert_eq!(monic_root_poly(1)[0], UniPoly::from_ints(&[-1, 1]));
    }
}
