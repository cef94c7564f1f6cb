//! The action of the dual operators `q*_k` on Schur vectors, in three
//! independent forms, and the pairing `g^λ_μ(t) = ⟨q_μ(t), S_λ.1⟩` built
//! from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use super::{g_oracle, straighten, SchurVector, StraightenResult};
use crate::arith::matrix::determinant;
use crate::arith::{LaurentPoly, RationalFn};
use crate::combinatorics::{bounded_compositions, strip_removals, sub_partitions, Partition};
use crate::error::{Error, Result};
use crate::memo::Memo;

/// How `q*_k` is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    /// Sum over compositions `τ` with straightening of `S_{λ-τ}.1`.
    Iterative,
    /// Sum over `μ ⊂ λ` weighted by `det M(λ/μ; t)`.
    Det,
    /// Sum over broken border strips.
    Strips,
    /// Power-sum expansion paired with symmetric-group characters.
    Oracle,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Iterative, Strategy::Det, Strategy::Strips, Strategy::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Iterative => "iterative",
            Strategy::Det => "det",
            Strategy::Strips => "strips",
            Strategy::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}")))
    }
}

type Expansion = Vec<(Partition, RationalFn)>;

static EXPANSIONS: LazyLock<Memo<(Strategy, Partition, usize), Expansion>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    EXPANSIONS.clear();
}

fn one_minus_t_pow(e: usize) -> LaurentPoly {
    LaurentPoly::one_minus_var().pow(e as u32)
}

/// `q*_k S_λ.1 = Σ_τ (1-t)^{l(τ)} S_{λ-τ}.1`, `τ` ranging over `l(λ)` slots.
fn expand_iterative(lambda: &Partition, k: usize) -> Expansion {
    let l = lambda.length();
    // S_{λ-τ}.1 vanishes once any λ_i - τ_i + (l-1-i) < 0
    let bounds: Vec<usize> = (0..l).map(|i| lambda.part(i) + l - 1 - i).collect();
    let powers: Vec<LaurentPoly> = (0..=l).map(one_minus_t_pow).collect();
    let mut acc: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for tau in bounded_compositions(&bounds, k) {
        let shifted: Vec<i64> = (0..l).map(|i| lambda.part(i) as i64 - tau[i] as i64).collect();
        if let StraightenResult::Signed { negative, partition } = straighten(&shifted) {
            let nz = tau.iter().filter(|&&x| x > 0).count();
            let term = if negative { -&powers[nz] } else { powers[nz].clone() };
            *acc.entry(partition).or_default() += term;
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, RationalFn::from_laurent(c)))
        .collect()
}

/// The matrix `M(λ/μ; t)` with entries `δ_{λ_i - i >= μ_j - j} (1-t)^{-δ_{λ_i - i, μ_j - j}}`.
pub fn det_matrix(lambda: &Partition, mu: &Partition) -> Result<Vec<Vec<RationalFn>>> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let l = lambda.length();
    let inv = RationalFn::recip_of(&LaurentPoly::one_minus_var())?;
    Ok((0..l)
        .map(|i| {
            let a = lambda.part(i) as i64 - i as i64;
            (0..l)
                .map(|j| {
                    let b = mu.part(j) as i64 - j as i64;
                    match a.cmp(&b) {
                        std::cmp::Ordering::Greater => RationalFn::one(),
                        std::cmp::Ordering::Equal => inv.clone(),
                        std::cmp::Ordering::Less => RationalFn::zero(),
                    }
                })
                .collect()
        })
        .collect())
}

/// `det M(λ/μ; t)`.
pub fn det_value(lambda: &Partition, mu: &Partition) -> Result<RationalFn> {
    Ok(determinant(&det_matrix(lambda, mu)?))
}

fn expand_det(lambda: &Partition, k: usize) -> Expansion {
    if k > lambda.weight() {
        return Vec::new();
    }
    let prefactor = RationalFn::from_laurent(one_minus_t_pow(lambda.length()));
    sub_partitions(lambda, lambda.weight() - k)
        .into_iter()
        .filter_map(|mu| {
            let d = det_value(lambda, &mu).expect("sub-partitions are contained");
            let c = &prefactor * &d;
            (!c.is_zero()).then_some((mu, c))
        })
        .collect()
}

/// Weight `(1-t)^C Π (-t)^{r(ξ_i)-1}` of a broken border strip.
fn expand_strips(lambda: &Partition, k: usize) -> Expansion {
    strip_removals(lambda, k)
        .into_iter()
        .map(|(mu, comps)| {
            let mut w = one_minus_t_pow(comps.len());
            for c in &comps {
                let r = c.rows as i64 - 1;
                let sign = if r % 2 == 0 { 1 } else { -1 };
                w = w.shift(r).scale(&sign.into());
            }
            (mu, RationalFn::from_laurent(w))
        })
        .collect()
}

fn expansion(strategy: Strategy, lambda: &Partition, k: usize) -> Expansion {
    let key = (strategy, lambda.clone(), k);
    if let Some(e) = EXPANSIONS.get(&key) {
        return e;
    }
    let e = if k == 0 {
        vec![(lambda.clone(), RationalFn::one())]
    } else {
        match strategy {
            Strategy::Iterative => expand_iterative(lambda, k),
            Strategy::Det => expand_det(lambda, k),
            Strategy::Strips | Strategy::Oracle => expand_strips(lambda, k),
        }
    };
    EXPANSIONS.insert(key, e)
}

fn peel_with(strategy: Strategy, k: usize, v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero();
    for (lambda, c) in v.iter() {
        for (mu, w) in expansion(strategy, lambda, k) {
            out.add_term(mu, c * &w);
        }
    }
    out
}

/// `q*_k` via the composition sum with straightening.
pub fn peel_iterative(k: usize, v: &SchurVector) -> SchurVector {
    peel_with(Strategy::Iterative, k, v)
}

/// `q*_k` via `(1-t)^{l(λ)} det M(λ/μ; t)`.
pub fn peel_det(k: usize, v: &SchurVector) -> SchurVector {
    peel_with(Strategy::Det, k, v)
}

/// `q*_k` via broken border strips.
pub fn peel_strips(k: usize, v: &SchurVector) -> SchurVector {
    peel_with(Strategy::Strips, k, v)
}

pub(crate) fn check_weights(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: mu.to_string(),
            right_weight: mu.weight(),
        });
    }
    Ok(())
}

/// `g^λ_μ(t) = ⟨q_μ(t), S_λ.1⟩`.
///
/// Peels the parts of `μ` from `S_λ.1`, largest first, and reads off the
/// coefficient of the empty partition. The result must be an integral
/// polynomial; a surviving denominator is reported as an integrity failure.
pub fn g_poly(lambda: &Partition, mu: &Partition, strategy: Strategy) -> Result<LaurentPoly> {
    check_weights(lambda, mu)?;
    if strategy == Strategy::Oracle {
        return g_oracle(lambda, mu);
    }
    let mut v = SchurVector::basis(lambda.clone());
    for &k in mu.parts() {
        v = peel_with(strategy, k, &v);
    }
    let c = v.coefficient(&Partition::empty());
    let g = c
        .try_to_laurent()
        .map_err(|e| Error::Integrity(format!("g^{lambda}_{mu} via {strategy}: {e}")))?;
    if !g.is_polynomial() {
        return Err(Error::Integrity(format!("g^{lambda}_{mu} via {strategy} has negative powers: {g}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn omt() -> LaurentPoly {
        LaurentPoly::one_minus_var()
    }

    #[test]
    fn zero_peel_is_identity() {
        let v = SchurVector::basis(p(&[2, 1]));
        for s in [Strategy::Iterative, Strategy::Det, Strategy::Strips] {
            assert_eq!(peel_with(s, 0, &v), v);
        }
    }

    #[test]
    fn full_peel_of_two_one() {
        // g^{(2,1)}_{(3)} = (1-t)(-t)
        let v = peel_iterative(3, &SchurVector::basis(p(&[2, 1])));
        let expected = RationalFn::from_laurent(omt() * LaurentPoly::monomial(-1, 1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.coefficient(&Partition::empty()), expected);
    }

    #[test]
    fn peel_larger_than_weight_is_zero() {
        let v = SchurVector::basis(p(&[2, 1]));
        assert!(peel_iterative(4, &v).is_zero());
        assert!(peel_det(4, &v).is_zero());
        assert!(peel_strips(4, &v).is_zero());
    }

    #[test]
    fn staircase_g() {
        let g = g_poly(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1]), Strategy::Iterative).unwrap();
        assert_eq!(g, omt().pow(6).scale(&4.into()));
    }

    #[test]
    fn first_peel_of_staircase() {
        // q*_2 S_{321}.1 = (1-t)^2 (S_{31} + S_{22} + S_{211})
        let v = peel_iterative(2, &SchurVector::basis(p(&[3, 2, 1])));
        let c = RationalFn::from_laurent(omt().pow(2));
        assert_eq!(v.len(), 3);
        for mu in [p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])] {
            assert_eq!(v.coefficient(&mu), c);
        }
    }

    #[test]
    fn det_of_equal_shapes() {
        let d = det_value(&p(&[3, 1, 1]), &p(&[3, 1, 1])).unwrap();
        assert_eq!(d, RationalFn::recip_of(&omt()).unwrap().pow(3).unwrap());
        assert!(det_value(&p(&[2]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn det_of_square_block_vanishes() {
        assert!(det_value(&p(&[2, 2]), &Partition::empty()).unwrap().is_zero());
        assert!(det_value(&p(&[3, 3, 1]), &p(&[1])).unwrap().is_zero());
    }

    #[test]
    fn weight_mismatch() {
        assert!(matches!(
            g_poly(&p(&[2]), &p(&[1, 1, 1]), Strategy::Strips),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn strategies_agree_up_to_six() {
        use crate::combinatorics::partitions_of;
        for n in 0..=6 {
            let ps = partitions_of(n);
            for lambda in &ps {
                for mu in &ps {
                    let g = g_poly(lambda, mu, Strategy::Oracle).unwrap();
                    for s in [Strategy::Iterative, Strategy::Det, Strategy::Strips] {
                        assert_eq!(g_poly(lambda, mu, s).unwrap(), g, "{s} {lambda} {mu}");
                    }
                }
            }
        }
    }
}
