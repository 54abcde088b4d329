use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::owned_binop;
use super::{Rational, Ring, UniPoly};
use crate::error::{Error, Result};

/// Element of `Q[X]/(X^order)`.
///
/// Binary operations between series of different orders land in the smaller
/// quotient ring.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    poly: UniPoly,
    order: usize,
}

impl TruncSeries {
    /// Panics if `order == 0`.
    pub fn new(poly: UniPoly, order: usize) -> Self {
        assert!(order > 0, "truncation order must be positive");
        Self {
            poly: poly.truncate(order),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(UniPoly::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(UniPoly::one(), order)
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.poly.coeff(i)
    }

    /// `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.poly.valuation()
    }

    /// Multiplicative inverse in `Q[X]/(X^order)`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.poly.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0_inv = c0.recip();
        let d = self.poly.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order);
        out.push(c0_inv.clone());
        for t in 1..self.order {
            let mut acc = Rational::zero();
            for (i, di) in d.iter().enumerate().take(t + 1).skip(1) {
                acc += di * &out[t - i];
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Self::new(UniPoly::new(out), self.order))
    }
}

pub fn series_inverse(d: &TruncSeries) -> Result<TruncSeries> {
    d.inverse()
}

impl Ring for TruncSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.order)
    }
    fn one_like(&self) -> Self {
        Self::one(self.order)
    }
    fn is_zero_like(&self) -> bool {
        self.poly.is_zero()
    }
    fn scale(&self, c: &Rational) -> Self {
        Self {
            poly: self.poly.scale(c),
            order: self.order,
        }
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries::new(&self.poly + &rhs.poly, self.order.min(rhs.order))
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries::new(&self.poly - &rhs.poly, self.order.min(rhs.order))
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let a = self.poly.coeffs();
        let b = rhs.poly.coeffs();
        let mut c = vec![Rational::zero(); order.min((a.len() + b.len()).saturating_sub(1))];
        for (i, ai) in a.iter().enumerate().take(c.len()) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(c.len() - i) {
                c[i + j] += ai * bj;
            }
        }
        TruncSeries {
            poly: UniPoly::new(c),
            order,
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            poly: -&self.poly,
            order: self.order,
        }
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

owned_binop!(TruncSeries, Add, add);
owned_binop!(TruncSeries, Sub, sub);
owned_binop!(TruncSeries, Mul, mul);

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(X^{})", self.poly, self.order)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl From<(UniPoly, usize)> for TruncSeries {
    fn from((p, order): (UniPoly, usize)) -> Self {
        Self::new(p, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn s(c: &[i64], order: usize) -> TruncSeries {
        TruncSeries::new(UniPoly::from_ints(c), order)
    }

    #[test]
    fn geometric_series() {
        assert_eq!(s(&[1, -1], 4).inverse().unwrap(), s(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn inverse_of_one() {
        for order in 1..5 {
            assert_eq!(s(&[1], order).inverse().unwrap(), s(&[1], order));
        }
    }

    #[test]
    fn inverse_of_square() {
        let d = s(&[1, -2, 1], 3);
        let inv = d.inverse().unwrap();
        assert_eq!(inv, s(&[1, 2, 3], 3));
        assert_eq!(&d * &inv, s(&[1], 3));
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert_eq!(s(&[0, 1], 3).inverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn mixed_orders_use_smaller_ring() {
        let a = s(&[1, 1, 1, 1], 4);
        let b = s(&[1, 1], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(&a * &b, s(&[1, 2], 2));
    }

    fn arb_series() -> impl Strategy<Value = (Vec<(i64, i64)>, usize)> {
        (prop::collection::vec((-9i64..9, 1i64..5), 0..8), 1usize..7)
    }

    fn build(v: &[(i64, i64)]) -> UniPoly {
        UniPoly::new(v.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_one((v, order) in arb_series(), c0 in 1i64..7) {
            let mut p = build(&v).into_coeffs();
            if p.is_empty() { p.push(rat(c0, 1)); } else { p[0] = rat(c0, 2); }
            let d = TruncSeries::new(UniPoly::new(p), order);
            prop_assert_eq!(&d * &d.inverse().unwrap(), TruncSeries::one(order));
        }

        #[test]
        fn truncation_commutes((a, order) in arb_series(), b in prop::collection::vec((-9i64..9, 1i64..5), 0..8)) {
            let (pa, pb) = (build(&a), build(&b));
            let (sa, sb) = (TruncSeries::new(pa.clone(), order), TruncSeries::new(pb.clone(), order));
            prop_assert_eq!(&sa * &sb, TruncSeries::new(&pa * &pb, order));
            prop_assert_eq!(&sa + &sb, TruncSeries::new(&pa + &pb, order));
        }
    }
}
