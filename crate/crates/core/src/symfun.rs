//! Complete Bell polynomials, Newton-type transforms between power sums and
//! elementary / complete homogeneous symmetric values, and the lower
//! Hessenberg (Trudi-type) determinants tying them together.
//!
//! Sequences are 1-indexed in the mathematical sense: `xs[0]` holds `x_1`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial_q, int, Rational};

/// Which side of the power-sum transform a sequence represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqRole {
    /// `a_1, a_2, …`: power sums.
    PowerSums,
    /// `b_1, b_2, …` with implicit `b_0 = 1`: complete homogeneous values.
    Target,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeqView {
    pub role: SeqRole,
    pub values: Vec<Rational>,
}

impl SeqView {
    pub fn power_sums(values: Vec<Rational>) -> Self {
        Self {
            role: SeqRole::PowerSums,
            values,
        }
    }

    pub fn target(values: Vec<Rational>) -> Self {
        Self {
            role: SeqRole::Target,
            values,
        }
    }
}

/// The five equivalent ways of passing between `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrudiForm {
    /// `b_m` as a sum over partitions of `m`.
    PartitionSum,
    /// `b_m` as `1/m!` times a Hessenberg determinant in `a`.
    Determinant,
    /// `a_n` as a signed Hessenberg determinant in `b`.
    InverseDeterminant,
    /// `m b_m = Σ_{i=1}^m a_i b_{m-i}`.
    Recurrence,
    /// `a_n = n b_n - Σ_{j=1}^{n-1} b_j a_{n-j}`.
    InverseRecurrence,
}

impl TrudiForm {
    pub const ALL: [TrudiForm; 5] = [
        TrudiForm::PartitionSum,
        TrudiForm::Determinant,
        TrudiForm::InverseDeterminant,
        TrudiForm::Recurrence,
        TrudiForm::InverseRecurrence,
    ];

    fn input_role(self) -> SeqRole {
        match self {
            TrudiForm::InverseDeterminant | TrudiForm::InverseRecurrence => SeqRole::Target,
            _ => SeqRole::PowerSums,
        }
    }
}

/// Lower Hessenberg matrix given by its first column, a Toeplitz band for
/// the remaining columns, and its superdiagonal.
///
/// Entry `(i, 1)` is `first_col[i-1]`; entry `(i, j)` for `2 <= j <= i` is
/// `band[i-j]`; entry `(i, i+1)` is `super_diag[i-1]`; all other entries are
/// zero (1-based indices).
#[derive(Debug, Clone)]
pub struct LowerHessenberg {
    pub first_col: Vec<Rational>,
    pub band: Vec<Rational>,
    pub super_diag: Vec<Rational>,
}

impl LowerHessenberg {
    pub fn dim(&self) -> usize {
        self.first_col.len()
    }

    fn entry(&self, i: usize, j: usize) -> Rational {
        match (i, j) {
            (_, 1) => self.first_col[i - 1].clone(),
            _ if j == i + 1 => self.super_diag[i - 1].clone(),
            _ if j <= i => self.band[i - j].clone(),
            _ => Rational::zero(),
        }
    }

    /// Determinant by expansion along the last row, `O(dim^2)`:
    /// `D_k = Σ_{j=1}^k (-1)^(k-j) H(k,j) Π_{l=j}^{k-1} H(l,l+1) D_{j-1}`.
    pub fn det(&self) -> Result<Rational> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(Rational::one());
        }
        if self.band.len() + 1 < dim || self.super_diag.len() + 1 < dim {
            return Err(Error::DimensionMismatch(format!(
                "Hessenberg matrix of size {dim} needs {} band and superdiagonal entries",
                dim - 1
            )));
        }
        let mut d = vec![Rational::one()];
        for k in 1..=dim {
            let mut acc = Rational::zero();
            let mut chain = Rational::one();
            for j in (1..=k).rev() {
                if j < k {
                    chain *= self.entry(j, j + 1);
                    if chain.is_zero() {
                        break;
                    }
                }
                let term = self.entry(k, j) * &chain * &d[j - 1];
                if (k - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            d.push(acc);
        }
        Ok(d.pop().expect("nonempty"))
    }
}

pub fn hessenberg_det(
    first_col: &[Rational],
    super_diag: &[Rational],
    band: &[Rational],
) -> Result<Rational> {
    LowerHessenberg {
        first_col: first_col.to_vec(),
        band: band.to_vec(),
        super_diag: super_diag.to_vec(),
    }
    .det()
}

fn need(len: usize, m: usize) -> Result<()> {
    if len >= m {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "sequence of length {len} is too short for index {m}"
        )))
    }
}

/// All multiplicity vectors `(i_1, …, i_m)` with `Σ j i_j = m`.
fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(part: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for mult in 0..=left / part {
            cur[part - 1] = mult;
            go(part - 1, left - mult * part, cur, out);
        }
        cur[part - 1] = 0;
    }
    let mut out = Vec::new();
    go(m, m, &mut vec![0; m], &mut out);
    out
}

/// `Σ_{i_1 + 2 i_2 + … = m} Π_j (c_j)^{i_j} / i_j!`.
fn partition_sum(c: &[Rational], m: usize) -> Rational {
    partitions(m)
        .into_iter()
        .map(|mults| {
            mults
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .fold(Rational::one(), |acc, (j, &k)| {
                    acc * num_traits::pow(c[j].clone(), k) / factorial_q(k as u64)
                })
        })
        .sum()
}

/// Complete exponential Bell polynomial `Y_m(x_1, …, x_m)` as the Hessenberg
/// determinant with Toeplitz entries `x_j/(j-1)!` and superdiagonal
/// `-1, -2, …`.
pub fn bell_complete(xs: &[Rational], m: usize) -> Result<Rational> {
    need(xs.len(), m)?;
    let a: Vec<Rational> = xs[..m]
        .iter()
        .enumerate()
        .map(|(j, x)| x / factorial_q(j as u64))
        .collect();
    Ok(trudi_determinant(&a, m)? * factorial_q(m as u64))
}

/// Complete exponential Bell polynomial by the explicit partition sum
/// `Σ m!/(i_1! i_2! …) Π (x_j/j!)^{i_j}`.
pub fn bell_complete_partition(xs: &[Rational], m: usize) -> Result<Rational> {
    need(xs.len(), m)?;
    let c: Vec<Rational> = xs[..m]
        .iter()
        .enumerate()
        .map(|(j, x)| x / factorial_q(j as u64 + 1))
        .collect();
    Ok(factorial_q(m as u64) * partition_sum(&c, m))
}

/// Complete homogeneous value `h_K` of a multiset from its power sums
/// `g_1, g_2, …`, via `K! h_K = Y_K(g_1, 1! g_2, 2! g_3, …)`.
pub fn h_from_powersums(g: &[Rational], k: usize) -> Result<Rational> {
    need(g.len(), k)?;
    let xs: Vec<Rational> = g[..k]
        .iter()
        .enumerate()
        .map(|(j, gj)| gj * factorial_q(j as u64))
        .collect();
    Ok(bell_complete(&xs, k)? / factorial_q(k as u64))
}

/// Elementary value `e_K` from power sums by Newton's identities
/// `K e_K = Σ_{i=1}^K (-1)^(i-1) g_i e_{K-i}`.
pub fn e_from_powersums(g: &[Rational], k: usize) -> Result<Rational> {
    need(g.len(), k)?;
    let mut e = vec![Rational::one()];
    for kk in 1..=k {
        let mut acc = Rational::zero();
        for i in 1..=kk {
            let t = &g[i - 1] * &e[kk - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push(acc / int(kk as i64));
    }
    Ok(e.pop().expect("nonempty"))
}

/// `b_m = (1/m!) det[[a_1, -1, 0, …], [a_2, a_1, -2, …], …]`.
fn trudi_determinant(a: &[Rational], m: usize) -> Result<Rational> {
    let h = LowerHessenberg {
        first_col: a[..m].to_vec(),
        band: a[..m.saturating_sub(1)].to_vec(),
        super_diag: (1..m).map(|i| int(-(i as i64))).collect(),
    };
    Ok(h.det()? / factorial_q(m as u64))
}

/// Evaluate one of the five equivalent power-sum transforms.
///
/// Forms `PartitionSum`, `Determinant` and `Recurrence` take the power sums
/// `a` and return `b_m`; `InverseDeterminant` and `InverseRecurrence` take
/// `b` and return `a_m`.
pub fn gotrudi(form: TrudiForm, input: &SeqView, m: usize) -> Result<Rational> {
    if input.role != form.input_role() {
        return Err(Error::InvalidArgument(format!(
            "{form:?} expects a {:?} sequence, got {:?}",
            form.input_role(),
            input.role
        )));
    }
    let x = &input.values;
    need(x.len(), m)?;
    if m == 0 {
        return Ok(match form.input_role() {
            SeqRole::PowerSums => Rational::one(),
            SeqRole::Target => Rational::zero(),
        });
    }
    match form {
        TrudiForm::PartitionSum => {
            let c: Vec<Rational> = x[..m]
                .iter()
                .enumerate()
                .map(|(j, a)| a / int(j as i64 + 1))
                .collect();
            Ok(partition_sum(&c, m))
        }
        TrudiForm::Determinant => trudi_determinant(x, m),
        TrudiForm::Recurrence => {
            let mut b = vec![Rational::one()];
            for mm in 1..=m {
                let acc: Rational = (1..=mm).map(|i| &x[i - 1] * &b[mm - i]).sum();
                b.push(acc / int(mm as i64));
            }
            Ok(b.pop().expect("nonempty"))
        }
        TrudiForm::InverseDeterminant => {
            let h = LowerHessenberg {
                first_col: (1..=m).map(|i| &x[i - 1] * int(i as i64)).collect(),
                band: x[..m - 1].to_vec(),
                super_diag: vec![Rational::one(); m - 1],
            };
            let d = h.det()?;
            Ok(if m % 2 == 1 { d } else { -d })
        }
        TrudiForm::InverseRecurrence => {
            let mut a: Vec<Rational> = Vec::with_capacity(m);
            for n in 1..=m {
                let mut v = &x[n - 1] * int(n as i64);
                for j in 1..n {
                    v -= &x[j - 1] * &a[n - j - 1];
                }
                a.push(v);
            }
            Ok(a.pop().expect("nonempty"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn power_sums(set: &[Rational], k: usize) -> Vec<Rational> {
        (1..=k)
            .map(|j| set.iter().map(|a| num_traits::pow(a.clone(), j)).sum())
            .collect()
    }

    /// Direct enumeration of e_K (strict) or h_K (weak) over index tuples.
    fn enumerate_sym(set: &[Rational], k: usize, weak: bool) -> Rational {
        fn go(set: &[Rational], start: usize, left: usize, weak: bool, acc: Rational) -> Rational {
            if left == 0 {
                return acc;
            }
            (start..set.len())
                .map(|i| {
                    let next = if weak { i } else { i + 1 };
                    go(set, next, left - 1, weak, &acc * &set[i])
                })
                .sum()
        }
        go(set, 0, k, weak, Rational::one())
    }

    #[test]
    fn bell_small_cases() {
        let x = [rat(2, 3), rat(-5, 7), rat(11, 2)];
        assert_eq!(bell_complete(&x, 0).unwrap(), int(1));
        assert_eq!(bell_complete(&x, 1).unwrap(), x[0].clone());
        assert_eq!(bell_complete(&x, 2).unwrap(), &x[0] * &x[0] + &x[1]);
        let y3 = &x[0] * &x[0] * &x[0] + int(3) * &x[0] * &x[1] + &x[2];
        assert_eq!(bell_complete(&x, 3).unwrap(), y3);
        assert_eq!(bell_complete_partition(&x, 3).unwrap(), y3);
        assert!(bell_complete(&x, 4).is_err());
    }

    #[test]
    fn h_and_e_of_one_two() {
        let g = ints(&[3, 5]);
        assert_eq!(h_from_powersums(&g, 2).unwrap(), int(7));
        assert_eq!(h_from_powersums(&g, 0).unwrap(), int(1));
        assert_eq!(h_from_powersums(&g, 1).unwrap(), int(3));
        assert_eq!(e_from_powersums(&g, 2).unwrap(), int(2));
    }

    #[test]
    fn newton_low_degree_shapes() {
        let g = [rat(3, 2), rat(-1, 3), rat(7, 5)];
        let (g1, g2, g3) = (&g[0], &g[1], &g[2]);
        assert_eq!(e_from_powersums(&g, 2).unwrap(), (g1 * g1 - g2) / int(2));
        assert_eq!(
            e_from_powersums(&g, 3).unwrap(),
            (g1 * g1 * g1 - int(3) * g1 * g2 + int(2) * g3) / int(6)
        );
    }

    #[test]
    fn hessenberg_small() {
        let a = rat(3, 4);
        assert_eq!(
            hessenberg_det(std::slice::from_ref(&a), &[], &[]).unwrap(),
            a
        );
        let (a1, a2) = (rat(2, 3), rat(-7, 5));
        let two_by_two = hessenberg_det(
            &[a1.clone(), a2.clone()],
            &[int(-1)],
            std::slice::from_ref(&a1),
        )
        .unwrap();
        assert_eq!(two_by_two / int(2), (&a1 * &a1 + &a2) / int(2));
        let (b1, b2) = (rat(5, 3), rat(1, 7));
        let d = hessenberg_det(
            &[b1.clone(), int(2) * &b2],
            &[int(1)],
            std::slice::from_ref(&b1),
        )
        .unwrap();
        assert_eq!(-d, int(2) * &b2 - &b1 * &b1);
    }

    #[test]
    fn trudi_forms_on_one_two() {
        let a = SeqView::power_sums(ints(&[3, 5, 9]));
        for form in [
            TrudiForm::PartitionSum,
            TrudiForm::Determinant,
            TrudiForm::Recurrence,
        ] {
            let b: Vec<_> = (1..=3).map(|m| gotrudi(form, &a, m).unwrap()).collect();
            assert_eq!(b, ints(&[3, 7, 15]), "{form:?}");
        }
        let b = SeqView::target(ints(&[3, 7, 15]));
        assert_eq!(
            gotrudi(TrudiForm::InverseRecurrence, &b, 2).unwrap(),
            int(5)
        );
        assert_eq!(
            gotrudi(TrudiForm::InverseDeterminant, &b, 2).unwrap(),
            int(5)
        );
        assert_eq!(
            gotrudi(TrudiForm::InverseDeterminant, &b, 3).unwrap(),
            int(9)
        );
    }

    #[test]
    fn trudi_rejects_wrong_role() {
        let a = SeqView::power_sums(ints(&[1, 2]));
        assert!(matches!(
            gotrudi(TrudiForm::InverseRecurrence, &a, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn first_index_agrees_for_all_forms() {
        let a = SeqView::power_sums(vec![rat(-4, 9)]);
        let b = SeqView::target(vec![rat(-4, 9)]);
        for form in TrudiForm::ALL {
            let input = if form.input_role() == SeqRole::PowerSums {
                &a
            } else {
                &b
            };
            assert_eq!(gotrudi(form, input, 1).unwrap(), rat(-4, 9));
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    fn arb_rationals(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::vec((-30i64..30, 1i64..9), len)
            .prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
    }

    proptest! {
        #[test]
        fn bell_routes_agree(xs in arb_rationals(8..9)) {
            for m in 0..=8 {
                prop_assert_eq!(bell_complete(&xs, m).unwrap(), bell_complete_partition(&xs, m).unwrap());
            }
        }

        #[test]
        fn symmetric_values_match_enumeration(set in arb_rationals(1..6)) {
            let g = power_sums(&set, 5);
            for k in 0..=5 {
                prop_assert_eq!(h_from_powersums(&g, k).unwrap(), enumerate_sym(&set, k, true));
                prop_assert_eq!(e_from_powersums(&g, k).unwrap(), enumerate_sym(&set, k, false));
            }
        }

        #[test]
        fn e_h_duality(set in arb_rationals(1..6)) {
            let g = power_sums(&set, 6);
            for k in 1..=6 {
                let mut acc = int(0);
                for j in 0..=k {
                    let t = e_from_powersums(&g, j).unwrap() * h_from_powersums(&g, k - j).unwrap();
                    if j % 2 == 0 { acc += t } else { acc -= t }
                }
                prop_assert_eq!(acc, int(0));
            }
        }
    }
}
