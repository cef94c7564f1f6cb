//! Closed formulas for one-row, one-column, hook and two-row shapes.

use crate::arith::{polyv_product, LaurentPoly, PolyV};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

fn sign_poly(odd: bool) -> LaurentPoly {
    LaurentPoly::constant(if odd { -1 } else { 1 })
}

/// `χ^{(n)}_μ(q) = q^{n-l(μ)}`.
pub fn one_row_character(mu: &Partition) -> LaurentPoly {
    LaurentPoly::monomial(1, (mu.weight() - mu.length()) as i64)
}

/// `χ^{(1^n)}_μ(q) = (-1)^{n-l(μ)}`.
pub fn one_column_character(mu: &Partition) -> LaurentPoly {
    sign_poly((mu.weight() - mu.length()) % 2 == 1)
}

fn padded(p: PolyV, n: usize) -> Vec<LaurentPoly> {
    (0..=n).map(|i| p.coeff(i)).collect()
}

/// Coefficients `a_0, ..., a_n` of `(1 - t^{-1} v)^{l(μ)} Π [μ_i]_v` in `v`.
pub fn gen_a(mu: &Partition) -> Vec<LaurentPoly> {
    let linear = PolyV::new(vec![LaurentPoly::one(), LaurentPoly::monomial(-1, -1)]);
    let mut factors = vec![linear; mu.length()];
    factors.extend(mu.parts().iter().map(|&m| PolyV::v_bracket(m)));
    padded(polyv_product(&factors, None), mu.weight())
}

/// Coefficients `b_0, ..., b_n` of
/// `Π (t^{-1} + v^{μ_i} + (1 - t^{-1}) [μ_i]_v)` in `v`.
pub fn gen_b(mu: &Partition) -> Vec<LaurentPoly> {
    let inv = LaurentPoly::monomial(1, -1);
    let one_minus_inv = LaurentPoly::one() - &inv;
    let factors: Vec<PolyV> = mu
        .parts()
        .iter()
        .map(|&m| {
            let mut c = vec![one_minus_inv.clone(); m + 1];
            c[0] = LaurentPoly::one();
            c[m] = LaurentPoly::one();
            PolyV::new(c)
        })
        .collect();
    padded(polyv_product(&factors, None), mu.weight())
}

/// `χ^{(k,1^{n-k})}_μ(q) = (-1)^{n-k+l(μ)} Σ_{i=k}^{n} a_i(μ; q) q^i`.
pub fn hook_character(k: usize, mu: &Partition) -> Result<LaurentPoly> {
    let n = mu.weight();
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("hook arm {k} for n = {n}")));
    }
    let a = gen_a(mu);
    let s: LaurentPoly = (k..=n).map(|i| a[i].shift(i as i64)).sum();
    Ok(s * sign_poly((n - k + mu.length()) % 2 == 1))
}

/// `χ^{(k,n-k)}_μ(q) = q^{n-l(μ)} (b_k(μ; q) - b_{k+1}(μ; q))`.
pub fn two_row_character(k: usize, mu: &Partition) -> Result<LaurentPoly> {
    let n = mu.weight();
    if k > n || 2 * k < n {
        return Err(Error::OutOfRange(format!("two-row first part {k} for n = {n}")));
    }
    let b = gen_b(mu);
    let next = b.get(k + 1).cloned().unwrap_or_default();
    Ok((&b[k] - &next).shift((n - mu.length()) as i64))
}

/// `q^{n-l(μ)} b_{⌊n/2⌋}(μ; q)`, which equals `Σ_{i <= ⌊n/2⌋} χ^{(n-i,i)}_μ(q)`.
pub fn two_row_cumulative(mu: &Partition) -> LaurentPoly {
    let n = mu.weight();
    gen_b(mu)[n / 2].shift((n - mu.length()) as i64)
}
