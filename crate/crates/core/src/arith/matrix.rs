//! Fraction-free determinants.

use super::{LaurentPoly, RationalFn};

/// Determinant of a square matrix over `ℤ[x, x^{-1}]` by Bareiss elimination.
///
/// Every division in the elimination is exact, so the computation never
/// leaves the Laurent ring.
pub fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if (0..n).any(|j| m.iter().all(|r| r[j].is_zero())) {
        return LaurentPoly::zero();
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a matrix of rational functions: each row is cleared of its
/// denominators, the integral matrix is reduced fraction-free, and the row
/// scalings are divided back out at the end.
pub fn determinant(m: &[Vec<RationalFn>]) -> RationalFn {
    let n = m.len();
    if n == 0 {
        return RationalFn::one();
    }
    if (0..n).any(|j| m.iter().all(|r| r[j].is_zero())) {
        return RationalFn::zero();
    }
    let mut scale = LaurentPoly::one();
    let mut rows = Vec::with_capacity(n);
    for row in m {
        let mut dens: Vec<&LaurentPoly> = Vec::new();
        for e in row {
            if !e.denom().is_one() && !dens.contains(&e.denom()) {
                dens.push(e.denom());
            }
        }
        let d: LaurentPoly = dens.iter().fold(LaurentPoly::one(), |a, b| a * *b);
        let cleared = row
            .iter()
            .map(|e| {
                e.scale_laurent(&d)
                    .try_to_laurent()
                    .expect("product of row denominators clears the row")
            })
            .collect();
        rows.push(cleared);
        scale = scale * d;
    }
    RationalFn::new(bareiss_det(rows), scale).expect("non-zero scale")
}
