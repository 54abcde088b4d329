//! Exact arithmetic in the cyclotomic field `Q(ζ_n) = Q[X]/(Φ_n)`.
//!
//! `ζ_n` is the residue class of `X`. Elements are stored in the power basis
//! `1, ζ, …, ζ^(φ(n)-1)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{ext_gcd, Field, Rational, Ring, UniPoly};

fn cache() -> &'static RwLock<HashMap<u64, Arc<UniPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<UniPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn phi_arc(n: u64) -> Arc<UniPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cache lock").get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = -crate::exact::int(1);
    num[n as usize] = crate::exact::int(1);
    let mut acc = UniPoly::new(num);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = acc.divrem(&phi_arc(d)).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        acc = q;
    }
    let mut guard = cache().write().expect("cache lock");
    Arc::clone(guard.entry(n).or_insert_with(|| Arc::new(acc)))
}

/// The `n`-th cyclotomic polynomial. Cached per process.
pub fn cyclotomic_poly(n: u64) -> UniPoly {
    (*phi_arc(n)).clone()
}

/// Euler's totient, i.e. `deg Φ_n`.
pub fn totient(n: u64) -> u64 {
    let (mut m, mut out, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct CycloElem {
    n: u64,
    repr: UniPoly,
    phi: Arc<UniPoly>,
}

impl CycloElem {
    /// Reduce an arbitrary polynomial in `ζ` into `Q(ζ_n)`.
    pub fn from_poly(n: u64, p: &UniPoly) -> Self {
        let phi = phi_arc(n);
        let repr = p.rem(&phi).expect("nonzero modulus");
        Self { n, repr, phi }
    }

    pub fn from_rational(n: u64, c: Rational) -> Self {
        Self::from_poly(n, &UniPoly::constant(c))
    }

    pub fn zero(n: u64) -> Self {
        Self::from_poly(n, &UniPoly::zero())
    }

    pub fn one(n: u64) -> Self {
        Self::from_poly(n, &UniPoly::one())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Coefficient vector of length `φ(n)` in the power basis.
    pub fn coeffs(&self) -> Vec<Rational> {
        let deg = self.phi.degree().unwrap_or(0);
        (0..deg).map(|i| self.repr.coeff(i)).collect()
    }

    pub fn as_poly(&self) -> &UniPoly {
        &self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::MixedModulus(self.n, other.n))
        }
    }

    fn with_repr(&self, p: UniPoly) -> Self {
        Self {
            n: self.n,
            repr: p,
            phi: Arc::clone(&self.phi),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_repr(&self.repr + &other.repr))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_repr(&self.repr - &other.repr))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.with_repr(UniPoly::zero()));
        }
        // Work over a common denominator so the inner loops avoid gcds.
        // Φ_n is monic with integer coefficients, so reduction stays in Z.
        let (a, da) = integral(&self.repr);
        let (b, db) = integral(&other.repr);
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let phi: Vec<BigInt> = self.phi.coeffs().iter().map(|c| c.to_integer()).collect();
        let d = phi.len() - 1;
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, p) in phi[..d].iter().enumerate() {
                prod[k - d + j] -= &c * p;
            }
        }
        prod.truncate(d);
        let den = da * db;
        let coeffs = prod
            .into_iter()
            .map(|c| Rational::new(c, den.clone()))
            .collect();
        Ok(self.with_repr(UniPoly::new(coeffs)))
    }

    /// Field inverse via the Bézout identity `u*a + v*Φ_n = 1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, u, _) = ext_gcd(&self.repr, &self.phi)?;
        debug_assert_eq!(g, UniPoly::one());
        Ok(self.with_repr(u.rem(&self.phi)?))
    }

    /// The rational value of this element, if it lies in `Q`.
    pub fn as_rational(&self) -> Result<Rational> {
        match self.repr.degree() {
            None => Ok(Rational::zero()),
            Some(0) => Ok(self.repr.coeff(0)),
            Some(_) => Err(Error::NonRational(self.coeffs())),
        }
    }
}

/// Integer numerators of `p` over the lcm of its denominators.
fn integral(p: &UniPoly) -> (Vec<BigInt>, BigInt) {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

/// `ζ_n^k`, with `k` taken modulo `n`.
pub fn zeta_power(n: u64, k: i64) -> CycloElem {
    let e = k.rem_euclid(n as i64) as usize;
    CycloElem::from_poly(n, &UniPoly::monomial(crate::exact::int(1), e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Sub,
    Mul,
}

pub fn cyclo_arith(a: &CycloElem, b: &CycloElem, op: CycloOp) -> Result<CycloElem> {
    match op {
        CycloOp::Add => a.try_add(b),
        CycloOp::Sub => a.try_sub(b),
        CycloOp::Mul => a.try_mul(b),
    }
}

pub fn cyclo_inverse(a: &CycloElem) -> Result<CycloElem> {
    a.inverse()
}

pub fn as_rational(a: &CycloElem) -> Result<Rational> {
    a.as_rational()
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.repr == other.repr
    }
}

impl Eq for CycloElem {}

// The std operators panic on mixed moduli; use the `try_*` methods when the
// operands are not known to share `n`.
impl Add for CycloElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("cyclotomic operands share n")
    }
}

impl Sub for CycloElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("cyclotomic operands share n")
    }
}

impl Mul for CycloElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("cyclotomic operands share n")
    }
}

impl Neg for CycloElem {
    type Output = Self;
    fn neg(self) -> Self {
        let r = -&self.repr;
        self.with_repr(r)
    }
}

impl Ring for CycloElem {
    fn zero_like(&self) -> Self {
        self.with_repr(UniPoly::zero())
    }
    fn one_like(&self) -> Self {
        self.with_repr(UniPoly::one())
    }
    fn is_zero_like(&self) -> bool {
        self.is_zero()
    }
    fn scale(&self, c: &Rational) -> Self {
        self.with_repr(self.repr.scale(c))
    }
}

impl Field for CycloElem {
    fn inverse(&self) -> Result<Self> {
        CycloElem::inverse(self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr.display_var("ζ"))
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[n={}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), UniPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn factorization_of_x_n_minus_one() {
        for n in 1..=60u64 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(UniPoly::one(), |acc, d| &acc * &cyclotomic_poly(d));
            let mut target = vec![int(0); n as usize + 1];
            target[0] = int(-1);
            target[n as usize] = int(1);
            assert_eq!(prod, UniPoly::new(target), "n = {n}");
            let phi = cyclotomic_poly(n);
            assert_eq!(phi.degree().unwrap() as u64, totient(n));
            assert!(phi.coeff(0) == int(1) || phi.coeff(0) == int(-1));
        }
    }

    #[test]
    fn zeta_powers() {
        assert_eq!(zeta_power(7, 0), CycloElem::one(7));
        assert_eq!(zeta_power(4, 1).coeffs(), vec![int(0), int(1)]);
        assert_eq!(zeta_power(3, 2).coeffs(), vec![int(-1), int(-1)]);
        assert_eq!(zeta_power(5, -1), zeta_power(5, 4));
    }

    #[test]
    fn roots_of_unity_relations() {
        for n in 1..=60u64 {
            let z = zeta_power(n, 1);
            assert_eq!(z.pow(n), CycloElem::one(n));
            if n >= 2 {
                let sum = (0..n as i64).fold(CycloElem::zero(n), |acc, k| acc + zeta_power(n, k));
                assert!(sum.is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn norm_of_one_minus_zeta() {
        for n in 2..=40u64 {
            let one = CycloElem::one(n);
            let prod =
                (1..n as i64).fold(one.clone(), |acc, j| acc * (one.clone() - zeta_power(n, j)));
            assert_eq!(prod.as_rational().unwrap(), int(n as i64), "n = {n}");
        }
    }

    #[test]
    fn inverse_examples() {
        let one = CycloElem::one(2);
        let x = (one - zeta_power(2, 1)).inverse().unwrap();
        assert_eq!(x.as_rational().unwrap(), rat(1, 2));

        let one = CycloElem::one(3);
        let a = one.clone() - zeta_power(3, 1);
        let b = one - zeta_power(3, 2);
        assert_eq!((a.clone() * b.clone()).as_rational().unwrap(), int(3));
        let s = a.inverse().unwrap() + b.inverse().unwrap();
        assert_eq!(s.as_rational().unwrap(), int(1));

        assert_eq!(CycloElem::zero(5).inverse(), Err(Error::ZeroInverse));
    }

    #[test]
    fn non_rational_detected() {
        assert_eq!(CycloElem::one(9).as_rational().unwrap(), int(1));
        match zeta_power(5, 1).as_rational() {
            Err(Error::NonRational(v)) => assert_eq!(v, vec![int(0), int(1), int(0), int(0)]),
            other => panic!("expected NonRational, got {other:?}"),
        }
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = CycloElem::one(3);
        let b = CycloElem::one(4);
        assert_eq!(
            cyclo_arith(&a, &b, CycloOp::Add),
            Err(Error::MixedModulus(3, 4))
        );
        assert_eq!(
            cyclo_arith(&a, &b, CycloOp::Mul),
            Err(Error::MixedModulus(3, 4))
        );
        assert!(cyclo_arith(&a, &a, CycloOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn concurrent_cache_fill_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| (61..=90u64).map(cyclotomic_poly).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    proptest! {
        #[test]
        fn inverse_is_field_inverse(n in 2u64..25, v in prop::collection::vec((-6i64..6, 1i64..4), 1..12)) {
            let p = UniPoly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect());
            let a = CycloElem::from_poly(n, &p);
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.clone() * a.inverse().unwrap(), CycloElem::one(n));
        }

        #[test]
        fn product_matches_polynomial_remainder(
            n in 2u64..40,
            u in prop::collection::vec((-9i64..9, 1i64..7), 0..20),
            v in prop::collection::vec((-9i64..9, 1i64..7), 0..20),
        ) {
            let pu = UniPoly::new(u.into_iter().map(|(a, b)| rat(a, b)).collect());
            let pv = UniPoly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect());
            let want = (&pu * &pv).rem(&cyclotomic_poly(n)).unwrap();
            let got = CycloElem::from_poly(n, &pu) * CycloElem::from_poly(n, &pv);
            prop_assert_eq!(got.as_poly(), &want);
        }
    }
}
