//! Independent route to `g^λ_μ(t)` through power sums and the characters of
//! the symmetric group.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{LaurentPoly, RationalFn};
use crate::combinatorics::{partition_tuples, Composition, Partition};
use crate::error::Result;
use crate::memo::Memo;

static CLASSICAL: LazyLock<Memo<(Partition, Partition), BigInt>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    CLASSICAL.clear();
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `χ^λ_ρ` of the symmetric group by rim-hook removal on beta-numbers.
///
/// Returns zero when the weights differ.
pub fn classical_character(lambda: &Partition, rho: &Partition) -> BigInt {
    if lambda.weight() != rho.weight() {
        return BigInt::from(0);
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = CLASSICAL.get(&key) {
        return v;
    }
    let v = classical_uncached(lambda, rho);
    debug_assert!(
        lambda.length() > 1 || v.is_one(),
        "trivial character must be 1"
    );
    CLASSICAL.insert(key, v)
}

fn classical_uncached(lambda: &Partition, rho: &Partition) -> BigInt {
    if rho.is_empty() {
        return BigInt::one();
    }
    let k = rho.first();
    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
    let l = lambda.length();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + l - 1 - i).collect();
    let mut total = BigInt::from(0);
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(i, &x)| x + i + 1 - l).collect();
        let nu = Partition::new(parts).expect("rim-hook removal yields a partition");
        let c = classical_character(&nu, &rest);
        if between % 2 == 0 {
            total += c;
        } else {
            total -= c;
        }
    }
    total
}

/// `q_ν(t) = Σ_ρ c_ρ(t) p_ρ` for a composition `ν`, using
/// `q_r = Σ_{ρ ⊢ r} Π(1 - t^{ρ_i}) / z_ρ · p_ρ`.
pub fn q_power_sum_expansion(nu: &Composition) -> BTreeMap<Partition, RationalFn> {
    let d: BigInt = nu.parts().iter().map(|&k| factorial(k)).product();
    let mut acc: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for tuple in partition_tuples(nu) {
        let (poly, scale, rho) = tuple_term(&tuple, nu);
        *acc.entry(rho).or_default() += poly.scale(&scale);
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(rho, c)| {
            let r = RationalFn::new(c, LaurentPoly::constant(d.clone())).expect("non-zero");
            (rho, r)
        })
        .collect()
}

/// `(Π(1 - t^{ρ_j}), Π ν_i!/z_{ρ^(i)}, ∪ρ^(i))` for one tuple.
fn tuple_term(tuple: &[Partition], nu: &Composition) -> (LaurentPoly, BigInt, Partition) {
    let mut poly = LaurentPoly::one();
    let mut scale = BigInt::one();
    let mut union = Partition::empty();
    for (rho, &k) in tuple.iter().zip(nu.parts()) {
        poly = poly * rho.one_minus_t_powers();
        scale *= factorial(k) / rho.z();
        union = union.union(rho);
    }
    (poly, scale, union)
}

/// `g^λ_μ(t) = ⟨q_μ(t), s_λ⟩ = Σ_ρ c_ρ(t) χ^λ_ρ`, computed with integer
/// arithmetic and a single exact division at the end.
pub fn g_oracle(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    super::peel::check_weights(lambda, mu)?;
    let nu = Composition::from(mu);
    let d: BigInt = nu.parts().iter().map(|&k| factorial(k)).product();
    let mut acc = LaurentPoly::zero();
    for tuple in partition_tuples(&nu) {
        let (poly, scale, rho) = tuple_term(&tuple, &nu);
        let chi = classical_character(lambda, &rho);
        if chi.sign() != num_bigint::Sign::NoSign {
            acc += poly.scale(&(scale * chi));
        }
    }
    acc.div_scalar_exact(&d)
}
