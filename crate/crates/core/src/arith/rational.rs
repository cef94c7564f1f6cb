//! Normalized quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{dense, LaurentPoly};
use crate::error::{Error, Result};

/// `num / den` in canonical form.
///
/// Canonical means: `den` is a polynomial with non-zero constant term and
/// positive leading coefficient, `num` and `den` are coprime over `ℚ[x]`
/// (monomial factors live in `num`), and the integer content of the pair
/// has been cleared jointly. Two equal rational functions therefore have
/// identical fields, and printing is reproducible.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational")]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Unvalidated serialized form; deserialization renormalizes.
#[derive(Deserialize)]
struct RawRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RawRational> for RationalFn {
    type Error = Error;
    fn try_from(r: RawRational) -> Result<Self> {
        Self::new(r.num, r.den)
    }
}

impl RationalFn {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    /// `n / d` for integers.
    pub fn from_ratio<A: Into<BigInt>, B: Into<BigInt>>(n: A, d: B) -> Result<Self> {
        Self::new(LaurentPoly::constant(n), LaurentPoly::constant(d))
    }

    /// `1 / p`.
    pub fn recip_of(p: &LaurentPoly) -> Result<Self> {
        Self::new(LaurentPoly::one(), p.clone())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the unit.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let ds = den.min_exp().unwrap();
        let mut den = den.shift(-ds);
        let mut num = num.shift(-ds);

        if !den.is_constant() {
            let ns = num.min_exp().unwrap();
            let n_dense = dense::to_dense(&num.shift(-ns));
            let d_dense = dense::to_dense(&den);
            let g = dense::gcd(&n_dense, &d_dense);
            if g.len() > 1 {
                let n_q = dense::div_exact(&n_dense, &g).expect("gcd divides numerator");
                let d_q = dense::div_exact(&d_dense, &g).expect("gcd divides denominator");
                num = dense::from_dense(&n_q).shift(ns);
                den = dense::from_dense(&d_q);
            }
        }

        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        if den.leading_coeff().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    /// Idempotent; values are always stored normalized.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    /// Equality by cross-multiplication, independent of canonical form.
    pub fn eq_cross(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(Self {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            })
        } else {
            self.inv()?.pow(-e)
        }
    }

    /// Substitutes `x -> x^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::normalized(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Exact conversion; fails carrying the remainder unless `den | num`.
    pub fn try_to_laurent(&self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            // canonical form is reduced, so any non-unit denominator is a genuine remainder
            Err(Error::InexactDivision {
                remainder: self.to_string(),
            })
        }
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        if self.den.is_one() {
            return Self::from_laurent(&self.num * p);
        }
        Self::normalized(&self.num * p, self.den.clone())
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFn {
    fn from(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFn::from_laurent(&self.num + &rhs.num);
            }
            return RationalFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_laurent(&self.num * &rhs.num);
        }
        RationalFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::ops::AddAssign<&RationalFn> for RationalFn {
    fn add_assign(&mut self, rhs: &RationalFn) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for RationalFn {
    fn sum<I: Iterator<Item = RationalFn>>(iter: I) -> Self {
        iter.fold(RationalFn::zero(), |a, b| a + b)
    }
}
