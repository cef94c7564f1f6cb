use std::sync::LazyLock;

use crate::arith::LaurentPoly;
use crate::combinatorics::{strip_removals, Partition, StripComponent};
use crate::error::Result;
use crate::memo::Memo;
use crate::schur::check_weights;

static MN: LazyLock<Memo<(Partition, Partition), LaurentPoly>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    MN.clear();
}

/// `wt(θ; q) = (q-1)^{m-1} Π (-1)^{r(ξ_i)-1} q^{c(ξ_i)-1}` for a broken
/// border strip with components `ξ_1, ..., ξ_m`, `m >= 1`.
pub fn strip_weight(components: &[StripComponent]) -> LaurentPoly {
    let m = components.len();
    debug_assert!(m >= 1);
    let mut w = LaurentPoly::from_terms([(0, -1), (1, 1)]).pow(m as u32 - 1);
    for c in components {
        let sign: i64 = if (c.rows - 1) % 2 == 0 { 1 } else { -1 };
        w = w.shift(c.cols as i64 - 1).scale(&sign.into());
    }
    w
}

/// Murnaghan–Nakayama recursion for `χ^λ_μ(q)`, removing the largest part of
/// `μ` at each step.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    check_weights(lambda, mu)?;
    Ok(mn_rec(lambda, mu))
}

fn mn_rec(lambda: &Partition, mu: &Partition) -> LaurentPoly {
    if mu.is_empty() {
        return LaurentPoly::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = MN.get(&key) {
        return v;
    }
    let k = mu.first();
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");
    let mut acc = LaurentPoly::zero();
    for (nu, comps) in strip_removals(lambda, k) {
        let sub = mn_rec(&nu, &rest);
        if !sub.is_zero() {
            acc += strip_weight(&comps) * sub;
        }
    }
    MN.insert(key, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), LaurentPoly::from_terms([(0, -1), (1, 1)]));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), LaurentPoly::monomial(-1, 1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), LaurentPoly::constant(2));
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn staircase_at_two_two_one_one() {
        // 4(q-1)^2, of degree n - l(μ) = 2
        let e = LaurentPoly::from_terms([(0, -1), (1, 1)]).pow(2).scale(&4.into());
        assert_eq!(mn_character(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1])).unwrap(), e);
    }
}
