use std::collections::BTreeMap;

use crate::arith::RationalFn;
use crate::combinatorics::Partition;

/// A finite linear combination `Σ c_λ S_λ.1` with rational-function
/// coefficients. Zero coefficients are dropped on insertion.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurVector {
    entries: BTreeMap<Partition, RationalFn>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `S_λ.1` itself.
    pub fn basis(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, RationalFn::one());
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> RationalFn {
        self.entries.get(lambda).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &RationalFn)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Common weight of the support; `None` for the zero vector.
    pub fn weight(&self) -> Option<usize> {
        let mut it = self.entries.keys().map(Partition::weight);
        let w = it.next()?;
        debug_assert!(it.all(|x| x == w), "Schur vectors are homogeneous");
        Some(w)
    }
}
