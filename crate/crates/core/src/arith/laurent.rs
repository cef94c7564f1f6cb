//! Sparse Laurent polynomials in one formal variable with big-integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e x^e` with `c_e ∈ ℤ`, `e ∈ ℤ`.
///
/// Zero coefficients are never stored, so the zero polynomial has no terms
/// and structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · x^e`.
    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Coefficients listed from exponent `start` upward.
    pub fn from_coeffs<C: Into<BigInt>>(start: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (start + i as i64, c)))
    }

    /// `1 - x`.
    pub fn one_minus_var() -> Self {
        Self::from_terms([(0, 1), (1, -1)])
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `x -> x^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `x -> x^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power needs a non-zero exponent");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at an integer point; `None` at zero if a negative power is present.
    pub fn evaluate(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                if x.is_zero() {
                    return None;
                }
                let d = num_traits::pow(x.clone(), (-e) as usize);
                let (q, r) = c.div_rem(&d);
                if !r.is_zero() {
                    return None;
                }
                acc += q;
            } else {
                acc += c * num_traits::pow(x.clone(), e as usize);
            }
        }
        Some(acc)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Non-negative gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, failing unless all divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (&e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    remainder: format!("{self} mod {c}"),
                });
            }
            terms.insert(e, q);
        }
        Ok(Self { terms })
    }

    /// Exact quotient in `ℤ[x, x^{-1}]`.
    ///
    /// Powers of `x` are units, so both operands are shifted to polynomials
    /// with non-zero constant term before long division.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let ds = divisor.min_exp().unwrap();
        let ns = self.min_exp().unwrap();
        let num = super::dense::to_dense(&self.shift(-ns));
        let den = super::dense::to_dense(&divisor.shift(-ds));
        match super::dense::div_exact(&num, &den) {
            Ok(q) => Ok(super::dense::from_dense(&q).shift(ns - ds)),
            Err(rem) => Err(Error::InexactDivision {
                remainder: super::dense::from_dense(&rem).shift(ns).to_string(),
            }),
        }
    }

    /// Ascending `[exponent, decimal coefficient]` pairs.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self> {
        let mut p = Self::zero();
        let mut last = None;
        for (e, s) in pairs {
            if last.is_some_and(|l| l >= *e) {
                return Err(Error::Parse(format!("exponents not strictly ascending at {e}")));
            }
            last = Some(*e);
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
            if c.is_zero() {
                return Err(Error::Parse(format!("zero coefficient stored at exponent {e}")));
            }
            p.terms.insert(*e, c);
        }
        Ok(p)
    }

    /// Plain text, ascending powers: `q + -3*q^2 + 2*q^3`.
    pub fn to_plain(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (&e, c) in &self.terms {
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            let s = if e == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigInt::one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            out.push(s);
        }
        out.join(" + ")
    }

    /// LaTeX, descending powers: `2q^{3} - 3q^{2} + q`.
    pub fn to_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{{{e}}}"),
            };
            if e == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(i64, String)>::deserialize(d)?;
        Self::from_pairs(&pairs).map_err(D::Error::custom)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $assign:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self * &rhs
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::var()
    }

    #[test]
    fn invert_variable_example() {
        let p = LaurentPoly::from_terms([(0, 1), (-1, -2)]);
        assert_eq!(p.invert_variable(), LaurentPoly::from_terms([(0, 1), (1, -2)]));
    }

    #[test]
    fn evaluate_at_one_example() {
        let p = LaurentPoly::from_terms([(2, 6), (3, -12), (4, 3)]);
        assert_eq!(p.evaluate_at_one(), BigInt::from(-3));
    }

    #[test]
    fn shift_example() {
        let p = LaurentPoly::one_minus_var().shift(-1);
        assert_eq!(p, LaurentPoly::from_terms([(-1, 1), (0, -1)]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = t() - t();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = LaurentPoly::one_minus_var();
        let mut acc = LaurentPoly::one();
        for _ in 0..6 {
            acc = &acc * &p;
        }
        assert_eq!(p.pow(6), acc);
        assert_eq!(p.pow(0), LaurentPoly::one());
    }

    #[test]
    fn exact_division() {
        let num = LaurentPoly::from_terms([(0, 1), (2, -1)]);
        let q = num.div_exact(&LaurentPoly::one_minus_var()).unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(0, 1), (1, 1)]));
        let num = LaurentPoly::from_terms([(-3, 1), (-1, -1)]);
        let q = num.div_exact(&LaurentPoly::one_minus_var().shift(5)).unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(-8, 1), (-7, 1)]));
        assert!(matches!(
            LaurentPoly::var().div_exact(&LaurentPoly::constant(2)),
            Err(Error::InexactDivision { .. })
        ));
        assert!(matches!(
            LaurentPoly::one().div_exact(&LaurentPoly::one_minus_var()),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn plain_and_latex_formatting() {
        let p = LaurentPoly::from_terms([(1, 1), (2, -3), (3, 2)]);
        assert_eq!(p.to_plain("q"), "q + -3*q^2 + 2*q^3");
        assert_eq!(p.to_latex("q"), "2q^{3} - 3q^{2} + q");
        let p = LaurentPoly::from_terms([(0, -1), (-2, 1), (1, -1)]);
        assert_eq!(p.to_plain("q"), "q^-2 + -1 + -q");
        assert_eq!(p.to_latex("q"), "-q - 1 + q^{-2}");
        assert_eq!(LaurentPoly::zero().to_plain("q"), "0");
    }

    #[test]
    fn pairs_round_trip_and_validation() {
        let p = LaurentPoly::from_terms([(-1, 7), (4, -2)]);
        assert_eq!(LaurentPoly::from_pairs(&p.to_pairs()).unwrap(), p);
        assert!(LaurentPoly::from_pairs(&[(1, "1".into()), (0, "1".into())]).is_err());
        assert!(LaurentPoly::from_pairs(&[(1, "0".into())]).is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[[-1,"7"],[4,"-2"]]"#);
    }

    #[test]
    fn evaluate_integer_points() {
        let p = LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(p.evaluate(&BigInt::from(2)), Some(BigInt::from(7)));
        assert_eq!(LaurentPoly::monomial(1, -1).evaluate(&BigInt::zero()), None);
    }
}
