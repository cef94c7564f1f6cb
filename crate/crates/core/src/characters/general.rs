//! The two general reduction formulas, which strip the first row of `λ`.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{LaurentPoly, RationalFn};
use crate::combinatorics::{partition_tuples, sub_compositions, Composition, Partition};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::schur::{check_weights, classical_character, newton_coeffs};

static NEWTON_CHI: LazyLock<Memo<(Partition, Partition), LaurentPoly>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    NEWTON_CHI.clear();
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(0, -1), (1, 1)])
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(1 - q^{-1})^e`.
fn one_minus_inv_pow(e: usize) -> LaurentPoly {
    q_minus_one().pow(e as u32).shift(-(e as i64))
}

fn remainder(mu: &Partition, tau: &Composition) -> Composition {
    Composition::new(mu.parts().iter().zip(tau.parts()).map(|(m, t)| m - t).collect())
}

/// Divides by `(q-1)^l` and converts exactly; `what` names the caller.
fn finish(acc: RationalFn, l: usize, what: &str, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    let den = RationalFn::from_laurent(q_minus_one().pow(l as u32));
    let chi = acc
        .div(&den)?
        .try_to_laurent()
        .map_err(|e| Error::Integrity(format!("{what} χ^{lambda}_{mu}: {e}")))?;
    if !chi.is_polynomial() {
        return Err(Error::Integrity(format!("{what} χ^{lambda}_{mu} has negative powers: {chi}")));
    }
    Ok(chi)
}

/// `χ^λ_μ(q)` from classical characters of `λ^{[1]}`:
///
/// `(q-1)^{-l(μ)} Σ_{i=λ_1}^{n} q^i Σ_{τ ⊂ μ, |τ|=i} (1-q^{-1})^{l(τ)}
///  Σ_{ν ⊢ μ-τ} Σ_{ρ ⊢ i-λ_1} (-1)^{l(ν)+l(ρ)} χ^{λ^{[1]}}_{ν ∪ ρ} / (z_ν(q) z_ρ)`.
pub fn gen_char_sn(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    check_weights(lambda, mu)?;
    if lambda.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let n = mu.weight();
    let l1 = lambda.first();
    let tail = lambda.tail();
    let mut acc = RationalFn::zero();
    for i in l1..=n {
        let m = i - l1;
        let rhos: Vec<Partition> = partition_tuples(&Composition::new(vec![m])).map(|t| t[0].clone()).collect();
        for tau in sub_compositions(mu, i) {
            let rest = remainder(mu, &tau);
            // integer scale making every 1/(z_ν z_ρ) integral
            let d: BigInt = rest.parts().iter().map(|&k| factorial(k)).product::<BigInt>() * factorial(m);
            let mut inner = LaurentPoly::zero();
            for nu in partition_tuples(&rest) {
                let mut poly = LaurentPoly::one();
                let mut scale = BigInt::one();
                let mut union = Partition::empty();
                let mut len = 0;
                for (part, &k) in nu.iter().zip(rest.parts()) {
                    poly = poly * part.one_minus_t_powers();
                    scale *= factorial(k) / part.z();
                    union = union.union(part);
                    len += part.length();
                }
                for rho in &rhos {
                    let chi = classical_character(&tail, &union.union(rho));
                    if chi.sign() == num_bigint::Sign::NoSign {
                        continue;
                    }
                    let mut c = &scale * factorial(m) / rho.z() * chi;
                    if (len + rho.length()) % 2 == 1 {
                        c = -c;
                    }
                    inner += poly.scale(&c);
                }
            }
            if inner.is_zero() {
                continue;
            }
            let outer = one_minus_inv_pow(tau.length()).shift(i as i64);
            let term = RationalFn::new(inner * outer, LaurentPoly::constant(d))?;
            acc += &term;
        }
    }
    finish(acc, mu.length(), "gen_sn", lambda, mu)
}

/// `χ^λ_μ(q)` by recursion on `λ^{[1]}` through the Newton transition
/// coefficients `C_{m,ρ}`:
///
/// `q^{λ_1} (q-1)^{-l(μ)} Σ_i Σ_{τ ⊂ μ, |τ|=i} (1-q^{-1})^{l(τ)}
///  Σ_{ρ ⊢ i-λ_1} (q-1)^{l(μ-τ)+l(ρ)} C_{i-λ_1,ρ}(q^{-1}) χ^{λ^{[1]}}_{(μ-τ)* ∪ ρ}(q)`.
pub fn gen_char_newton(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    check_weights(lambda, mu)?;
    newton_rec(lambda, mu)
}

fn newton_rec(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lambda.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = NEWTON_CHI.get(&key) {
        return Ok(v);
    }
    let n = mu.weight();
    let l1 = lambda.first();
    let tail = lambda.tail();
    let mut acc = RationalFn::zero();
    for i in l1..=n {
        let coeffs = newton_coeffs(i - l1);
        for tau in sub_compositions(mu, i) {
            let rest = remainder(mu, &tau);
            let rest_p = rest.to_partition();
            let outer = one_minus_inv_pow(tau.length());
            for (rho, c) in &coeffs {
                let chi = newton_rec(&tail, &rest_p.union(rho))?;
                if chi.is_zero() {
                    continue;
                }
                let w = q_minus_one().pow((rest.length() + rho.length()) as u32) * &outer * chi;
                acc += &c.invert_variable().scale_laurent(&w);
            }
        }
    }
    let chi = finish(acc.scale_laurent(&LaurentPoly::monomial(1, l1 as i64)), mu.length(), "gen_newton", lambda, mu)?;
    Ok(NEWTON_CHI.insert(key, chi))
}
