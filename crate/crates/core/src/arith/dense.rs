//! Dense `ℤ[x]` helpers backing exact division and gcd. Vectors are in
//! ascending order of powers and kept trimmed (no trailing zeros).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;

/// Dense coefficients of a polynomial (no negative exponents allowed).
pub(crate) fn to_dense(p: &LaurentPoly) -> Vec<BigInt> {
    let Some(max) = p.max_exp() else {
        return Vec::new();
    };
    debug_assert!(p.is_polynomial());
    let mut v = vec![BigInt::zero(); max as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

pub(crate) fn from_dense(v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Quotient of `num / den` in `ℤ[x]`, or the remainder at the point where
/// exactness failed.
pub(crate) fn div_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>, Vec<BigInt>> {
    let dl = den.len();
    assert!(dl > 0, "division by the zero polynomial");
    let lead = &den[dl - 1];
    let mut rem = num.to_vec();
    trim(&mut rem);
    if rem.len() < dl {
        return if rem.is_empty() { Ok(Vec::new()) } else { Err(rem) };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    while rem.len() >= dl {
        let shift = rem.len() - dl;
        let (q, r) = rem[rem.len() - 1].div_rem(lead);
        if !r.is_zero() {
            return Err(rem);
        }
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &q * d;
        }
        quot[shift] = q;
        trim(&mut rem);
    }
    if rem.is_empty() {
        trim(&mut quot);
        Ok(quot)
    } else {
        Err(rem)
    }
}

/// Pseudo-remainder of `a` by `b`, up to a non-zero constant factor.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let bl = b.len();
    let lb = &b[bl - 1];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() >= bl {
        let lr = r[r.len() - 1].clone();
        let shift = r.len() - bl;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, d) in b.iter().enumerate() {
            r[shift + i] -= &lr * d;
        }
        trim(&mut r);
        r = primitive_part(&r);
    }
    r
}

/// Greatest common divisor in `ℤ[x]` with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        let mut g = if a.is_empty() { b } else { a };
        if g.last().is_some_and(|c| c.is_negative()) {
            g.iter_mut().for_each(|c| *c = -std::mem::take(c));
        }
        return g;
    }
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    let mut g = primitive_part(&a);
    if g.last().is_some_and(|x| x.is_negative()) {
        g.iter_mut().for_each(|x| *x = -std::mem::take(x));
    }
    g.iter_mut().for_each(|x| *x *= &c);
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (1 + x)(2 - x) and (1 + x)(3 + x^2)
        let a = v(&[2, 1, -1]);
        let b = v(&[3, 3, 1, 1]);
        assert_eq!(gcd(&a, &b), v(&[1, 1]));
        assert_eq!(gcd(&v(&[4, 8]), &v(&[6])), v(&[2]));
        assert_eq!(gcd(&v(&[-1, -1]), &[]), v(&[1, 1]));
    }

    #[test]
    fn exact_and_inexact_division() {
        assert_eq!(div_exact(&v(&[1, 0, -1]), &v(&[1, -1])), Ok(v(&[1, 1])));
        assert!(div_exact(&v(&[1, 1]), &v(&[0, 2])).is_err());
        assert!(div_exact(&v(&[1]), &v(&[1, 1])).is_err());
    }
}
