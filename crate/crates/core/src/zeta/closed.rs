//! Rational formulas valid at `q = ζ_n`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_q, factorial_q, int, rat, sign, Rational};
use crate::qstirling::r_stirling1_q1;
use crate::symfun::{
    bell_complete_partition, e_from_powersums, gotrudi, hessenberg_det, SeqView, TrudiForm,
};

fn out_of_range(route: &'static str, bound: String, got: String) -> Error {
    Error::OutOfValidityRange { route, bound, got }
}

fn need_m_below_n(route: &'static str, n: u64, m: u64) -> Result<()> {
    if m + 1 > n {
        return Err(out_of_range(
            route,
            format!("m <= n-1 = {}", n - 1),
            format!("m = {m}"),
        ));
    }
    Ok(())
}

fn need_s_positive(route: &'static str, s: u64) -> Result<()> {
    if s == 0 {
        return Err(out_of_range(route, "s >= 1".into(), "s = 0".into()));
    }
    Ok(())
}

fn b(n: u64, k: u64) -> Rational {
    binomial_q(n as i64, k as i64)
}

/// `z_n(ζ_n; m, 1) = binom(n-1, m)/(m+1)`.
pub fn z_root_closed_s1(n: u64, m: u64) -> Result<Rational> {
    need_m_below_n("closed-s1", n, m)?;
    Ok(b(n - 1, m) / int(m as i64 + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedS2Variant {
    /// `(binom(n-1, m) + (-1)^m binom(n-1, 2m+1)) / (n(m+1))`.
    Binomial,
    /// `2 m!/(2m+2)! binom(n-1, m) Σ_k ⎡2m+2, m+k+2⎤_{m+1} (-n)^k`.
    RStirling,
}

/// `z_n(ζ_n; m, 2)`.
pub fn z_root_closed_s2(n: u64, m: u64, variant: ClosedS2Variant) -> Result<Rational> {
    need_m_below_n("closed-s2", n, m)?;
    let mi = m as i64;
    match variant {
        ClosedS2Variant::Binomial => {
            let num = b(n - 1, m) + sign(mi) * b(n - 1, 2 * m + 1);
            Ok(num / int(n as i64 * (mi + 1)))
        }
        ClosedS2Variant::RStirling => {
            let minus_n = int(-(n as i64));
            let mut sum = Rational::zero();
            let mut pw = Rational::one();
            for k in 0..=m {
                sum += r_stirling1_q1(2 * m + 2, m + k + 2, m + 1) * &pw;
                pw *= &minus_n;
            }
            Ok(int(2) * factorial_q(m) / factorial_q(2 * m + 2) * b(n - 1, m) * sum)
        }
    }
}

/// `z_n(ζ_n; 1, s)` as an `s × s` lower Hessenberg determinant with first
/// column `(j/(j+1)) binom(n-1, j)`, band `binom(n-1, d+1)/(d+2)` at distance
/// `d` below the diagonal, and unit superdiagonal.
pub fn z_root_m1_det(n: u64, s: u64) -> Result<Rational> {
    need_s_positive("m1-det", s)?;
    let first_col: Vec<Rational> = (1..=s)
        .map(|j| rat(j as i64, j as i64 + 1) * b(n - 1, j))
        .collect();
    let band: Vec<Rational> = (0..s)
        .map(|d| b(n - 1, d + 1) / int(d as i64 + 2))
        .collect();
    let sup = vec![Rational::one(); s as usize];
    hessenberg_det(&first_col, &sup, &band)
}

/// `g_j = z_n(ζ_n; 1, j s)` for `j = 1..=m`.
fn m1_values(n: u64, m: u64, s: u64) -> Result<Vec<Rational>> {
    (1..=m).map(|j| z_root_m1_det(n, j * s)).collect()
}

/// `z_n(ζ_n; m, s)` from the `m = 1` values by Newton's identities.
pub fn z_root_general(n: u64, m: u64, s: u64) -> Result<Rational> {
    need_m_below_n("newton", n, m)?;
    need_s_positive("newton", s)?;
    e_from_powersums(&m1_values(n, m, s)?, m as usize)
}

/// `z*_n(ζ_n; m, s) = Y_m(g_1, 1! g_2, 2! g_3, …)/m!`, evaluated both as a
/// partition sum and as a Hessenberg determinant; the two must agree.
pub fn z_star_root_bell(n: u64, m: u64, s: u64) -> Result<Rational> {
    need_s_positive("bell", s)?;
    let g = m1_values(n, m, s)?;
    let xs: Vec<Rational> = g
        .iter()
        .enumerate()
        .map(|(j, gj)| gj * factorial_q(j as u64))
        .collect();
    let by_partitions = bell_complete_partition(&xs, m as usize)? / factorial_q(m);
    let by_det = gotrudi(TrudiForm::Determinant, &SeqView::power_sums(g), m as usize)?;
    if by_partitions != by_det {
        return Err(Error::RouteMismatch(format!(
            "Bell partition sum {by_partitions} != determinant {by_det} at n={n}, m={m}, s={s}"
        )));
    }
    Ok(by_det)
}

/// `z*_n(ζ_n; 2, s) = z_n(ζ_n; 2, s) + z_n(ζ_n; 1, 2s)`.
pub fn z_star_root_sum_rule(n: u64, m: u64, s: u64) -> Result<Rational> {
    if m != 2 {
        return Err(out_of_range("sum-rule", "m = 2".into(), format!("m = {m}")));
    }
    need_s_positive("sum-rule", s)?;
    let strict = if n >= 3 {
        z_root_general(n, 2, s)?
    } else {
        Rational::zero()
    };
    Ok(strict + z_root_m1_det(n, 2 * s)?)
}

/// Range in which the recurrence for the given `s` is established.
pub(crate) fn rec_bound(n: u64, m: u64, s: i64) -> Result<()> {
    let max = match s {
        1 => n - 1,
        2 => (n / 2).saturating_sub(1),
        3 => (n / 3).saturating_sub(1),
        _ => {
            return Err(out_of_range(
                "recurrence",
                "s in {1, 2, 3}".into(),
                format!("s = {s}"),
            ))
        }
    };
    if m > max {
        let bound = match s {
            1 => format!("m <= n-1 = {max}"),
            2 => format!("m <= floor(n/2)-1 = {max}"),
            _ => format!("m <= floor(n/3)-1 = {max}"),
        };
        return Err(out_of_range("recurrence", bound, format!("m = {m}")));
    }
    Ok(())
}

/// Coefficient `P_d` of `z*(m-d)` in the recurrence `z*(m) = Σ_{d=1}^m P_d z*(m-d)`.
fn rec_coefficient(n: u64, d: u64, s: u64) -> Rational {
    let (ni, di) = (n as i64, d as i64);
    let inv_n2 = rat(1, ni * ni);
    match s {
        1 => sign(di + 1) / int(di + 1) * b(n - 1, d),
        2 => -(int(2) * b(n, 2 * d + 2) + sign(di) * b(n, d + 1)) * inv_n2,
        _ => {
            let mut triple = Rational::zero();
            for l in 0..=(di + 1) / 2 {
                let top = di - l + 1;
                for k in l..=top {
                    let c =
                        Rational::from_integer(num_bigint::BigInt::from(3).pow((top - k) as u32))
                            * Rational::from_integer(
                                num_bigint::BigInt::from(-2).pow((k - l) as u32),
                            )
                            / int(top);
                    triple += c
                        * binomial_q(top, k)
                        * binomial_q(k, l)
                        * binomial_q(ni + di - l - k, 3 * di - 3 * l + 2);
                }
            }
            let tail = (b(n - 1, 3 * d + 2) + b(n - 1, d)) * sign(di) / int(di + 1);
            -(triple + tail) * inv_n2
        }
    }
}

/// `z*_n(ζ_n; m, s)` for `s ∈ {1, 2, 3}` by the linear recurrence in `m`,
/// inside the range where it is established.
pub fn z_star_root_rec(n: u64, m: u64, s: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    rec_bound(n, m, s as i64)?;
    let p: Vec<Rational> = (0..=m)
        .map(|d| {
            if d == 0 {
                Rational::zero()
            } else {
                rec_coefficient(n, d, s)
            }
        })
        .collect();
    let mut z = vec![Rational::one()];
    for mm in 1..=m as usize {
        let v: Rational = (0..mm).map(|j| &p[mm - j] * &z[j]).sum();
        z.push(v);
    }
    Ok(z.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_s1_examples() {
        assert_eq!(z_root_closed_s1(5, 2).unwrap(), int(2));
        assert_eq!(z_root_closed_s1(9, 0).unwrap(), int(1));
        assert_eq!(z_root_closed_s1(3, 1).unwrap(), int(1));
        assert!(z_root_closed_s1(3, 3).is_err());
    }

    #[test]
    fn closed_s2_examples_and_agreement() {
        use ClosedS2Variant::*;
        assert_eq!(z_root_closed_s2(5, 1, Binomial).unwrap(), int(0));
        assert_eq!(z_root_closed_s2(7, 1, Binomial).unwrap(), int(-1));
        for n in 2..=40u64 {
            for m in 0..=6u64.min(n - 1) {
                assert_eq!(
                    z_root_closed_s2(n, m, Binomial).unwrap(),
                    z_root_closed_s2(n, m, RStirling).unwrap(),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn m1_det_examples() {
        for n in 2..12u64 {
            assert_eq!(z_root_m1_det(n, 1).unwrap(), rat(n as i64 - 1, 2));
            let ni = n as i64;
            assert_eq!(z_root_m1_det(n, 2).unwrap(), rat(-(ni - 1) * (ni - 5), 12));
            assert_eq!(z_root_m1_det(n, 3).unwrap(), rat(-(ni - 1) * (ni - 3), 8));
        }
        assert_eq!(z_root_m1_det(5, 2).unwrap(), int(0));
        assert_eq!(z_root_m1_det(3, 3).unwrap(), int(0));
    }

    #[test]
    fn newton_m2_is_the_two_term_formula() {
        for n in 3..15u64 {
            for s in 1..4u64 {
                let g1 = z_root_m1_det(n, s).unwrap();
                let g2 = z_root_m1_det(n, 2 * s).unwrap();
                let want = (&g1 * &g1 - g2) / int(2);
                assert_eq!(z_root_general(n, 2, s).unwrap(), want);
            }
            assert_eq!(
                z_root_general(n, 1, 3).unwrap(),
                z_root_m1_det(n, 3).unwrap()
            );
        }
    }

    #[test]
    fn bell_examples() {
        for n in 2..15u64 {
            let ni = n as i64;
            for s in 1..4u64 {
                let g1 = z_root_m1_det(n, s).unwrap();
                let g2 = z_root_m1_det(n, 2 * s).unwrap();
                assert_eq!(
                    z_star_root_bell(n, 2, s).unwrap(),
                    (&g1 * &g1 + g2) / int(2)
                );
            }
            let want = rat(
                -(ni + 1) * (ni - 1) * (ni.pow(4) - 650 * ni * ni + 3780 * ni - 5291),
                12 * 5040,
            );
            assert_eq!(z_star_root_bell(n, 2, 3).unwrap(), want);
            assert_eq!(z_star_root_bell(n, 0, 2).unwrap(), int(1));
        }
    }

    #[test]
    fn sum_rule_examples() {
        assert_eq!(z_star_root_sum_rule(5, 2, 1).unwrap(), int(2));
        assert_eq!(z_star_root_sum_rule(3, 2, 2).unwrap(), int(0));
        for n in 2..15u64 {
            assert_eq!(
                z_star_root_sum_rule(n, 2, 3).unwrap(),
                z_star_root_bell(n, 2, 3).unwrap()
            );
        }
        assert!(z_star_root_sum_rule(5, 3, 1).is_err());
    }

    #[test]
    fn recurrence_examples() {
        for n in 7..30i64 {
            let want = rat(
                (n + 1) * (n - 1) * (2 * n.pow(4) - 145 * n * n + 863),
                60480,
            );
            assert_eq!(z_star_root_rec(n as u64, 6, 1).unwrap(), want);
        }
        for n in 8..30i64 {
            let poly = 10 * n.pow(4) - 126 * n.pow(3) + 241 * n * n + 1134 * n - 2699;
            let want = rat(-(n + 1) * (n - 1) * poly, 12 * 5040);
            assert_eq!(z_star_root_rec(n as u64, 3, 2).unwrap(), want);
        }
        for n in 6..30i64 {
            assert_eq!(
                z_star_root_rec(n as u64, 1, 3).unwrap(),
                rat(-(n - 1) * (n - 3), 8)
            );
        }
        assert_eq!(z_star_root_rec(5, 0, 3).unwrap(), int(1));
    }

    #[test]
    fn recurrence_refuses_outside_its_range() {
        assert!(matches!(
            z_star_root_rec(7, 3, 2),
            Err(Error::OutOfValidityRange { .. })
        ));
        assert!(matches!(
            z_star_root_rec(5, 1, 3),
            Err(Error::OutOfValidityRange { .. })
        ));
        assert!(matches!(
            z_star_root_rec(5, 5, 1),
            Err(Error::OutOfValidityRange { .. })
        ));
        assert!(z_star_root_rec(6, 1, 4).is_err());
    }
}
