use serde::{Deserialize, Serialize};

use super::{sub_partitions, Partition};
use crate::error::{Error, Result};

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// One connected component of a skew diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripComponent {
    /// Occupied rows, `r(ξ)`.
    pub rows: usize,
    /// Occupied columns, `c(ξ)`.
    pub cols: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewAnalysis {
    /// Every component is a border strip (no 2×2 block anywhere).
    pub is_broken_border_strip: bool,
    /// Components from top to bottom.
    pub components: Vec<StripComponent>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Row `i` occupies columns `inner_i .. outer_i` (half open, zero based).
    fn row_span(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    /// Boxes `(row, col)`, zero based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.length())
            .flat_map(|i| {
                let (a, b) = self.row_span(i);
                (a..b).map(move |j| (i, j))
            })
            .collect()
    }

    /// Splits the diagram into edge-connected components and checks for 2×2
    /// blocks.
    ///
    /// Each row is an interval of columns, and since both boundaries weakly
    /// decrease, rows `i` and `i + 1` touch along an edge exactly when
    /// `inner_i < outer_{i+1}`; they share a 2×2 block when
    /// `outer_{i+1} - inner_i >= 2`.
    pub fn analyze(&self) -> SkewAnalysis {
        let mut components = Vec::new();
        let mut flag = true;
        let mut current: Option<(usize, usize, usize, usize)> = None; // rows, min col, max col, size
        let mut prev_row: Option<usize> = None;
        for i in 0..self.outer.length() {
            let (a, b) = self.row_span(i);
            if a == b {
                continue;
            }
            let touches = prev_row == Some(i.wrapping_sub(1)) && self.inner.part(i - 1) < b;
            if touches {
                if b - self.inner.part(i - 1) >= 2 {
                    flag = false;
                }
                let c = current.as_mut().unwrap();
                c.0 += 1;
                c.1 = c.1.min(a);
                c.2 = c.2.max(b - 1);
                c.3 += b - a;
            } else {
                if let Some((rows, lo, hi, size)) = current.take() {
                    components.push(StripComponent { rows, cols: hi - lo + 1, size });
                }
                current = Some((1, a, b - 1, b - a));
            }
            prev_row = Some(i);
        }
        if let Some((rows, lo, hi, size)) = current {
            components.push(StripComponent { rows, cols: hi - lo + 1, size });
        }
        SkewAnalysis {
            is_broken_border_strip: flag,
            components,
        }
    }
}

/// Every `μ ⊂ λ` with `λ/μ` a broken border strip of size `k`, with its
/// component analysis, `μ` in reverse lexicographic order.
pub fn strip_removals(lambda: &Partition, k: usize) -> Vec<(Partition, Vec<StripComponent>)> {
    if k > lambda.weight() {
        return Vec::new();
    }
    sub_partitions(lambda, lambda.weight() - k)
        .into_iter()
        .filter_map(|mu| {
            let a = SkewShape::new(lambda.clone(), mu.clone()).ok()?.analyze();
            a.is_broken_border_strip.then_some((mu, a.components))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(rows: usize, cols: usize, size: usize) -> StripComponent {
        StripComponent { rows, cols, size }
    }

    #[test]
    fn disconnected_diagonal_boxes() {
        let a = SkewShape::new(p(&[3, 1]), p(&[1])).unwrap().analyze();
        assert!(a.is_broken_border_strip);
        assert_eq!(a.components, vec![comp(1, 2, 2), comp(1, 1, 1)]);
    }

    #[test]
    fn square_is_not_a_strip() {
        let a = SkewShape::new(p(&[2, 2]), Partition::empty()).unwrap().analyze();
        assert!(!a.is_broken_border_strip);
    }

    #[test]
    fn staircase_strip() {
        let a = SkewShape::new(p(&[2, 1]), Partition::empty()).unwrap().analyze();
        assert!(a.is_broken_border_strip);
        assert_eq!(a.components, vec![comp(2, 2, 3)]);
    }

    #[test]
    fn empty_skew() {
        let a = SkewShape::new(p(&[2, 1]), p(&[2, 1])).unwrap().analyze();
        assert!(a.is_broken_border_strip);
        assert!(a.components.is_empty());
    }

    #[test]
    fn containment_is_checked() {
        assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
    }

    #[test]
    fn strip_removal_examples() {
        assert_eq!(strip_removals(&p(&[2, 1]), 3), vec![(Partition::empty(), vec![comp(2, 2, 3)])]);
        assert_eq!(strip_removals(&p(&[5]), 5), vec![(Partition::empty(), vec![comp(1, 5, 5)])]);
        let r = strip_removals(&p(&[3, 2]), 2);
        assert_eq!(
            r,
            vec![
                (p(&[3]), vec![comp(1, 2, 2)]),
                (p(&[2, 1]), vec![comp(1, 1, 1), comp(1, 1, 1)]),
            ]
        );
    }
}
