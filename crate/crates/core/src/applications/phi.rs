//! Character sums of the sign q-permutation representations.

use crate::arith::LaurentPoly;
use crate::characters::{chi, Algorithm};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Closed form and explicit character sum of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumCheck {
    pub closed: LaurentPoly,
    pub explicit: LaurentPoly,
    pub holds: bool,
}

fn require_nonempty(mu: &Partition) -> Result<()> {
    if mu.is_empty() {
        return Err(Error::OutOfRange("the empty partition has no character sum".into()));
    }
    Ok(())
}

/// `[k]_{-q} = Σ_{j<k} (-q)^j`.
fn bracket_neg_q(k: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..k).map(|j| (j as i64, if j % 2 == 0 { 1 } else { -1 })))
}

/// `(-1)^{n-l} 2^{l-1} Π [μ_i]_{-q}`.
pub fn phi_hook_closed(mu: &Partition) -> Result<LaurentPoly> {
    require_nonempty(mu)?;
    let (n, l) = (mu.weight(), mu.length());
    let sign: i64 = if (n - l) % 2 == 0 { 1 } else { -1 };
    let prod: LaurentPoly = mu.parts().iter().map(|&m| bracket_neg_q(m)).product();
    Ok(prod.scale(&(num_bigint::BigInt::from(sign) << (l - 1))))
}

/// `Σ_{k=0}^{n-1} χ^{(n-k,1^k)}_μ(q)`, evaluated with the MN recursion.
pub fn phi_hook_explicit(mu: &Partition) -> Result<LaurentPoly> {
    require_nonempty(mu)?;
    let n = mu.weight();
    (0..n).map(|k| chi(&Partition::hook(n, n - k), mu, Algorithm::Mn)).sum()
}

pub fn phi_hook_sum(mu: &Partition) -> Result<SumCheck> {
    let closed = phi_hook_closed(mu)?;
    let explicit = phi_hook_explicit(mu)?;
    Ok(SumCheck {
        holds: closed == explicit,
        closed,
        explicit,
    })
}

/// `q^{n-2l} Π (1 + q + μ_i (q-1))`; a Laurent polynomial when `n < 2l`.
pub fn phi_two_closed(mu: &Partition) -> Result<LaurentPoly> {
    require_nonempty(mu)?;
    let (n, l) = (mu.weight() as i64, mu.length() as i64);
    let prod: LaurentPoly = mu
        .parts()
        .iter()
        .map(|&m| LaurentPoly::from_terms([(0, 1 - m as i64), (1, 1 + m as i64)]))
        .product();
    Ok(prod.shift(n - 2 * l))
}

/// `Σ_{k=0}^{⌊n/2⌋} (n-2k+1) χ^{(n-k,k)}_μ(q)`, evaluated with the MN recursion.
pub fn phi_two_explicit(mu: &Partition) -> Result<LaurentPoly> {
    require_nonempty(mu)?;
    let n = mu.weight();
    (0..=n / 2)
        .map(|k| {
            let lambda = Partition::new(vec![n - k, k])?;
            Ok(chi(&lambda, mu, Algorithm::Mn)?.scale(&(n as i64 - 2 * k as i64 + 1).into()))
        })
        .sum()
}

/// Both sides are compared after multiplying by `q^{2l-n}` when `n < 2l`.
pub fn phi_two_sum(mu: &Partition) -> Result<SumCheck> {
    let closed = phi_two_closed(mu)?;
    let explicit = phi_two_explicit(mu)?;
    let s = (2 * mu.length()).saturating_sub(mu.weight()) as i64;
    let (lhs, rhs) = (closed.shift(s), explicit.shift(s));
    debug_assert!(lhs.is_polynomial());
    Ok(SumCheck {
        holds: lhs == rhs,
        closed,
        explicit,
    })
}
