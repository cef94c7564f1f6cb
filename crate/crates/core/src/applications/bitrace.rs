//! The bitrace `btr(λ, μ) = Σ_ρ χ^ρ_λ(q) χ^ρ_μ(q)` of the regular
//! representation.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::{LaurentPoly, RationalFn};
use crate::characters::{chi, Algorithm};
use crate::combinatorics::{contingency_matrices, partitions_of, Composition};
use crate::error::{Error, Result};
use crate::schur::q_power_sum_expansion;

/// `(k)_t = (t-1)^2 [k]_{t^2}` for `k > 0`, `(0)_t = 1`, `(k)_t = 0` for `k < 0`.
pub fn k_bracket(k: i64) -> LaurentPoly {
    match k {
        k if k < 0 => LaurentPoly::zero(),
        0 => LaurentPoly::one(),
        k => {
            let bracket = LaurentPoly::from_terms((0..k).map(|j| (2 * j, 1)));
            LaurentPoly::from_terms([(0, -1), (1, 1)]).pow(2) * bracket
        }
    }
}

fn weight(m: &[Vec<usize>]) -> LaurentPoly {
    m.iter()
        .flatten()
        .filter(|&&x| x > 0)
        .map(|&x| k_bracket(x as i64))
        .product()
}

/// `H^λ_μ(t) = Σ_M Π_{m_{ij}} (m_{ij})_t` over contingency matrices with row
/// sums `λ` and column sums `μ`.
pub fn h_poly(lambda: &Composition, mu: &Composition) -> Result<LaurentPoly> {
    let matrices = contingency_matrices(lambda, mu)?;
    Ok(matrices.par_bridge().map(|m| weight(&m)).reduce(LaurentPoly::zero, |a, b| a + b))
}

/// `⟨q_λ, q_μ⟩` through the power-sum basis, with `⟨p_ρ, p_σ⟩ = δ_{ρσ} z_ρ`.
pub fn h_oracle(lambda: &Composition, mu: &Composition) -> Result<LaurentPoly> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: mu.to_string(),
            right_weight: mu.weight(),
        });
    }
    let a = q_power_sum_expansion(lambda);
    let b = q_power_sum_expansion(mu);
    let mut acc = RationalFn::zero();
    for (rho, ca) in &a {
        if let Some(cb) = b.get(rho) {
            acc += &(ca * cb).scale_laurent(&LaurentPoly::constant(rho.z()));
        }
    }
    acc.try_to_laurent()
        .map_err(|e| Error::Integrity(format!("⟨q_{lambda}, q_{mu}⟩: {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BitraceMethod {
    /// Weighted contingency matrices.
    Matrices,
    /// The defining sum over characters.
    CharSum,
}

impl BitraceMethod {
    pub fn name(self) -> &'static str {
        match self {
            BitraceMethod::Matrices => "matrices",
            BitraceMethod::CharSum => "char_sum",
        }
    }
}

impl fmt::Display for BitraceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BitraceMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrices" => Ok(BitraceMethod::Matrices),
            "char_sum" => Ok(BitraceMethod::CharSum),
            _ => Err(Error::Parse(format!("unknown bitrace method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitraceQuery {
    pub lambda: Composition,
    pub mu: Composition,
}

impl BitraceQuery {
    pub fn new(lambda: Composition, mu: Composition) -> Result<Self> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                left: lambda.to_string(),
                left_weight: lambda.weight(),
                right: mu.to_string(),
                right_weight: mu.weight(),
            });
        }
        if lambda.weight() == 0 {
            return Err(Error::OutOfRange("bitrace needs n >= 1".into()));
        }
        Ok(Self { lambda, mu })
    }
}

fn q_minus_one_pow(e: usize) -> LaurentPoly {
    LaurentPoly::from_terms([(0, -1), (1, 1)]).pow(e as u32)
}

fn exact(r: RationalFn, what: &str, query: &BitraceQuery) -> Result<LaurentPoly> {
    r.try_to_laurent()
        .map_err(|e| Error::Integrity(format!("{what} btr({}, {}): {e}", query.lambda, query.mu)))
}

/// `btr(λ, μ)(q)`.
pub fn bitrace(query: &BitraceQuery, method: BitraceMethod) -> Result<LaurentPoly> {
    let BitraceQuery { lambda, mu } = query;
    match method {
        BitraceMethod::Matrices => {
            let total = h_poly(lambda, mu)?;
            let den = q_minus_one_pow(lambda.length() + mu.length());
            exact(RationalFn::new(total, den)?, "matrices", query)
        }
        BitraceMethod::CharSum => {
            let (l, m) = (lambda.to_partition(), mu.to_partition());
            let mut acc = LaurentPoly::zero();
            for rho in partitions_of(lambda.weight()) {
                acc += chi(&rho, &l, Algorithm::Mn)? * chi(&rho, &m, Algorithm::Mn)?;
            }
            Ok(acc)
        }
    }
}

/// `q^{2n} (q-1)^{-l(λ)-l(μ)} H^λ_μ(q^{-1})`.
pub fn bitrace_from_h(query: &BitraceQuery) -> Result<LaurentPoly> {
    let BitraceQuery { lambda, mu } = query;
    let h = h_poly(lambda, mu)?.invert_variable().shift(2 * lambda.weight() as i64);
    let den = q_minus_one_pow(lambda.length() + mu.length());
    exact(RationalFn::new(h, den)?, "normalized H", query)
}

/// Checks `btr(λ, μ) = q^{2n} (q-1)^{-l(λ)-l(μ)} H^λ_μ(q^{-1})`.
pub fn bitrace_consistency(query: &BitraceQuery) -> Result<bool> {
    Ok(bitrace(query, BitraceMethod::Matrices)? == bitrace_from_h(query)?)
}

/// `btr(λ, μ)` at `q = 1`.
pub fn bitrace_at_one(query: &BitraceQuery, method: BitraceMethod) -> Result<BigInt> {
    Ok(bitrace(query, method)?.evaluate_at_one())
}

/// Checks `1 - t + (t-1) Σ_{i=1}^{k} (k-i)_t t^i = (k)_t`.
pub fn identity_check(k: i64) -> Result<bool> {
    if k < 1 {
        return Err(Error::OutOfRange(format!("identity needs k >= 1, got {k}")));
    }
    let tm1 = LaurentPoly::from_terms([(0, -1), (1, 1)]);
    let sum: LaurentPoly = (1..=k).map(|i| k_bracket(k - i).shift(i)).sum();
    let lhs = LaurentPoly::one_minus_var() + tm1 * sum;
    Ok(lhs == k_bracket(k))
}
