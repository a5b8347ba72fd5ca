//! Exact scalars: rationals, optionally adjoined with a single square root.
//!
//! A value is `base + ext·√d` where `d` is a squarefree integer that is not a
//! perfect square. Rational values carry no discriminant at all; mixing two
//! different discriminants in one operation is a logic error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    base: BigRational,
    ext: BigRational,
    disc: Option<i64>,
}

fn join(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, d) | (d, None) => d,
        (Some(x), Some(y)) if x == y => Some(x),
        (Some(x), Some(y)) => panic!("second quadratic extension: sqrt({x}) and sqrt({y}) mixed"),
    }
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        ExactScalar { base: q, ext: BigRational::zero(), disc: None }
    }

    /// `a + b·√d`. `d` must be squarefree and not a square; `b = 0` collapses
    /// to a rational.
    pub fn quadratic(a: BigRational, b: BigRational, d: i64) -> Self {
        assert!(is_squarefree_nonsquare(d), "sqrt({d}) is not a proper quadratic extension");
        ExactScalar { base: a, ext: b, disc: Some(d) }.normalized()
    }

    /// The element `√d` itself.
    pub fn sqrt_of(d: i64) -> Self {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    fn normalized(mut self) -> Self {
        if self.ext.is_zero() {
            self.disc = None;
        }
        self
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn ext_coeff(&self) -> &BigRational {
        &self.ext
    }

    pub fn disc(&self) -> Option<i64> {
        self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ext.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.ext.is_zero() && self.base.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.ext.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.base.clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        match self.to_rational() {
            Some(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// Galois conjugate `a − b√d`.
    pub fn conjugate(&self) -> Self {
        ExactScalar { base: self.base.clone(), ext: -self.ext.clone(), disc: self.disc }
    }

    /// Field norm down to the rationals.
    pub fn norm(&self) -> BigRational {
        match self.disc {
            None => &self.base * &self.base,
            Some(d) => &self.base * &self.base - &self.ext * &self.ext * BigRational::from_integer(d.into()),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        ExactScalar { base: &self.base / &n, ext: -(&self.ext / &n), disc: self.disc }.normalized()
    }

    /// Least common denominator of both rational components.
    pub fn denom_lcm(&self) -> BigInt {
        self.base.denom().lcm(self.ext.denom())
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let k = BigRational::from_integer(k.clone());
        ExactScalar { base: &self.base * &k, ext: &self.ext * &k, disc: self.disc }.normalized()
    }

    /// Numerical value as `(re, im)` in double precision.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let b = self.base.to_f64().unwrap_or(f64::NAN);
        let e = self.ext.to_f64().unwrap_or(f64::NAN);
        match self.disc {
            None => (b, 0.0),
            Some(d) if d > 0 => (b + e * (d as f64).sqrt(), 0.0),
            Some(d) => (b, e * ((-d) as f64).sqrt()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Sign for rationals; `None` for irrational values.
    pub fn rational_cmp_zero(&self) -> Option<Ordering> {
        self.to_rational().map(|q| q.cmp(&BigRational::zero()))
    }
}

pub fn is_squarefree_nonsquare(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.ext.is_zero() && self.ext.is_zero() {
            return ExactScalar::from_rational(&self.base + &rhs.base);
        }
        ExactScalar { base: &self.base + &rhs.base, ext: &self.ext + &rhs.ext, disc: join(self.disc, rhs.disc) }
            .normalized()
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.ext.is_zero() && self.ext.is_zero() {
            return ExactScalar::from_rational(&self.base - &rhs.base);
        }
        ExactScalar { base: &self.base - &rhs.base, ext: &self.ext - &rhs.ext, disc: join(self.disc, rhs.disc) }
            .normalized()
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        match join(self.disc, rhs.disc) {
            None => ExactScalar::from_rational(&self.base * &rhs.base),
            Some(d) => {
                let d = BigRational::from_integer(d.into());
                ExactScalar {
                    base: &self.base * &rhs.base + &self.ext * &rhs.ext * d,
                    ext: &self.base * &rhs.ext + &self.ext * &rhs.base,
                    disc: join(self.disc, rhs.disc),
                }
                .normalized()
            }
        }
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        if rhs.is_rational() {
            assert!(!rhs.base.is_zero(), "division by zero");
            return ExactScalar { base: &self.base / &rhs.base, ext: &self.ext / &rhs.base, disc: self.disc }
                .normalized();
        }
        self * &rhs.inv()
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { base: -self.base.clone(), ext: -self.ext.clone(), disc: self.disc }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { base: -self.base, ext: -self.ext, disc: self.disc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        if self.ext.is_zero() && rhs.ext.is_zero() {
            self.base += &rhs.base;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        if self.ext.is_zero() && rhs.ext.is_zero() {
            self.base -= &rhs.base;
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.disc {
            None => write!(f, "{}", fmt_rational(&self.base)),
            Some(d) => {
                let root = format!("sqrt({d})");
                let e = if self.ext.is_one() {
                    root
                } else if (-self.ext.clone()).is_one() {
                    format!("-{root}")
                } else {
                    format!("{}*{root}", fmt_rational(&self.ext))
                };
                if self.base.is_zero() {
                    write!(f, "{e}")
                } else if self.ext.is_negative() {
                    write!(f, "({}{e})", fmt_rational(&self.base))
                } else {
                    write!(f, "({}+{e})", fmt_rational(&self.base))
                }
            }
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn arb_scalar(d: Option<i64>) -> impl Strategy<Value = ExactScalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(move |(a, b, c, e)| match d {
            None => ExactScalar::from_rational(q(a, b)),
            Some(d) => ExactScalar::quadratic(q(a, b), q(c, e), d),
        })
    }

    #[test]
    fn sqrt_squares_to_disc() {
        let r = ExactScalar::sqrt_of(-3);
        assert_eq!(&r * &r, ExactScalar::from_i64(-3));
        assert!((&r * &r).disc().is_none());
    }

    #[test]
    fn rejects_square_disc() {
        assert!(std::panic::catch_unwind(|| ExactScalar::sqrt_of(4)).is_err());
        assert!(std::panic::catch_unwind(|| ExactScalar::sqrt_of(12)).is_err());
    }

    #[test]
    fn mixing_extensions_panics() {
        let r = std::panic::catch_unwind(|| ExactScalar::sqrt_of(2) + ExactScalar::sqrt_of(3));
        assert!(r.is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactScalar::from_ratio(-3, 6).to_string(), "-1/2");
        let v = ExactScalar::quadratic(q(1, 1), q(-2, 1), 5);
        assert_eq!(v.to_string(), "(1-2*sqrt(5))");
    }

    proptest! {
        #[test]
        fn field_axioms(d in prop::sample::select(vec![None, Some(2i64), Some(-1), Some(-7)]),
                        seed in 0u64..1) {
            let _ = seed;
            let strat = (arb_scalar(d), arb_scalar(d), arb_scalar(d));
            let mut runner = proptest::test_runner::TestRunner::deterministic();
            runner.run(&strat, |(a, b, c)| {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv()).is_one());
                }
                prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
                prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
                Ok(())
            }).unwrap();
        }
    }
}
