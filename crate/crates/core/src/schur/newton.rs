use std::collections::BTreeMap;
use std::sync::LazyLock;

use crate::arith::{LaurentPoly, RationalFn};
use crate::combinatorics::Partition;
use crate::memo::Memo;

static NEWTON: LazyLock<Memo<usize, BTreeMap<Partition, RationalFn>>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    NEWTON.clear();
}

/// Coefficients `C_{m,ρ}(t)` with `C_0 = {∅: 1}` and
/// `C_m = (t^m - 1)^{-1} Σ_{j=1}^{m} q_j C_{m-j}`, the product `q_j q_ρ`
/// being recorded as the partition `ρ ∪ (j)`.
pub fn newton_coeffs(m: usize) -> BTreeMap<Partition, RationalFn> {
    if let Some(c) = NEWTON.get(&m) {
        return c;
    }
    let c = if m == 0 {
        BTreeMap::from([(Partition::empty(), RationalFn::one())])
    } else {
        let mut acc: BTreeMap<Partition, RationalFn> = BTreeMap::new();
        for j in 1..=m {
            let single = Partition::row(j);
            for (rho, c) in newton_coeffs(m - j) {
                *acc.entry(rho.union(&single)).or_insert_with(RationalFn::zero) += &c;
            }
        }
        let scale = RationalFn::recip_of(&LaurentPoly::from_terms([(0, -1), (m as i64, 1)]))
            .expect("t^m - 1 is non-zero");
        acc.into_iter()
            .map(|(rho, c)| (rho, &c * &scale))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    };
    NEWTON.insert(m, c)
}
