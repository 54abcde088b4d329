use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_signed_terms, Rational, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[i]` is the coefficient of `X^i`. The zero polynomial has no
/// coefficients and no other polynomial carries a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Drop every term of degree `>= order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect())
    }

    /// Divide by `X^k`, discarding the terms below `X^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = b.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &rem[i + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divrem(b)?.1)
    }

    /// The unique polynomial of degree `< points.len()` through `points`,
    /// via Newton divided differences.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        let k = points.len();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..k {
            for i in (level..k).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                if dx.is_zero() {
                    return Err(Error::InvalidArgument(
                        "interpolation nodes must be distinct".into(),
                    ));
                }
                dd[i] = (&dd[i] - &dd[i - 1]) / dx;
            }
        }
        let mut acc = Self::zero();
        for i in (0..k).rev() {
            let lin = Self::new(vec![-points[i].0.clone(), Rational::one()]);
            acc = &(&acc * &lin) + &Self::constant(dd[i].clone());
        }
        Ok(acc)
    }

    /// Display wrapper using `var` as the indeterminate name.
    pub fn display_var<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

/// Extended Euclid: returns `(g, u, v)` with `g = u*a + v*b` and `g` monic.
pub fn ext_gcd(a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (UniPoly::one(), UniPoly::zero());
    let (mut v0, mut v1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let u2 = &u0 - &(&q * &u1);
        let v2 = &v0 - &(&q * &v1);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    let lc = r0.leading().expect("nonzero gcd").recip();
    Ok((r0.scale(&lc), u0.scale(&lc), v0.scale(&lc)))
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero_like(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, c: &Rational) -> Self {
        UniPoly::scale(self, c)
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UniPoly::new(c)
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
pub(crate) use owned_binop;

owned_binop!(UniPoly, Add, add);
owned_binop!(UniPoly, Sub, sub);
owned_binop!(UniPoly, Mul, mul);

pub struct PolyDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var;
        let terms = self.poly.coeffs.iter().enumerate().rev().map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            (c.clone(), mono)
        });
        fmt_signed_terms(f, terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var("X").fmt(f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn sixth_cyclotomic_by_long_division() {
        // (Y-1)(Y+1)(Y^2+Y+1) = Y^4 + Y^3 - Y - 1
        let d = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[1, 1, 1]);
        assert_eq!(d, p(&[-1, -1, 0, 1, 1]));
        let (q, r) = p(&[-1, 0, 0, 0, 0, 0, 1]).divrem(&d).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_by_zero_fails() {
        assert_eq!(
            p(&[1, 2]).divrem(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn divrem_remainder_degree() {
        let (q, r) = p(&[3, 0, 2, 5]).divrem(&p(&[1, 0, 2])).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &p(&[1, 0, 2])) + &r, p(&[3, 0, 2, 5]));
    }

    #[test]
    fn gcd_examples() {
        let (g, u, v) = ext_gcd(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!((g, u, v), (p(&[1]), p(&[1]), p(&[0, -1])));

        let (g, u, v) = ext_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!((g, u, v), (p(&[-1, 1]), UniPoly::zero(), p(&[1])));

        let phi5 = p(&[1, 1, 1, 1, 1]);
        let lin = p(&[-1, 1]);
        let (g, u, v) = ext_gcd(&phi5, &lin).unwrap();
        assert_eq!(g, UniPoly::one());
        assert_eq!(&(&u * &phi5) + &(&v * &lin), UniPoly::one());

        assert_eq!(
            ext_gcd(&UniPoly::zero(), &UniPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = UniPoly::new(vec![rat(-1, 12), int(0), rat(1, 12)]);
        let pts: Vec<_> = (2..6).map(|n| (int(n), target.eval(&int(n)))).collect();
        assert_eq!(UniPoly::interpolate(&pts).unwrap(), target);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0, 1]).to_string(), "X^3 - 2*X + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(
            UniPoly::new(vec![rat(-1, 12), int(0), rat(1, 12)])
                .display_var("n")
                .to_string(),
            "1/12*n^2 - 1/12"
        );
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|v| UniPoly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn divrem_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert!(r.is_zero() || r.degree() < b.degree());
            prop_assert_eq!(&(&q * &b) + &r, a);
        }

        #[test]
        fn bezout_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (g, u, v) = ext_gcd(&a, &b).unwrap();
            prop_assert_eq!(&(&u * &a) + &(&v * &b), g.clone());
            prop_assert!(g.leading().unwrap().is_one());
            if !a.is_zero() { prop_assert!(a.rem(&g).unwrap().is_zero()); }
            if !b.is_zero() { prop_assert!(b.rem(&g).unwrap().is_zero()); }
        }
    }
}
