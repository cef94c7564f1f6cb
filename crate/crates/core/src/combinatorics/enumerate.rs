use super::{Composition, Partition};

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Sequences `τ` with `0 <= τ_i <= bounds[i]` and `Σ τ_i = total`, in
/// lexicographic order.
pub fn bounded_compositions(bounds: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn rec(bounds: &[usize], suffix_cap: &[usize], total: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == bounds.len() {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest = suffix_cap[i + 1];
        let lo = total.saturating_sub(rest);
        let hi = bounds[i].min(total);
        for v in lo..=hi {
            cur.push(v);
            rec(bounds, suffix_cap, total - v, cur, out);
            cur.pop();
        }
    }
    let mut suffix_cap = vec![0; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + bounds[i];
    }
    if total > suffix_cap[0] {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(bounds, &suffix_cap, total, &mut Vec::with_capacity(bounds.len()), &mut out);
    out
}

/// `C^μ_k`: all `τ ⊂ μ` of length `l(μ)` with `|τ| = k`, lexicographically.
pub fn sub_compositions(mu: &Partition, k: usize) -> Vec<Composition> {
    bounded_compositions(mu.parts(), k).into_iter().map(Composition::new).collect()
}

/// All partitions `ν ⊂ λ` with `|ν| = weight`, reverse lexicographically.
pub fn sub_partitions(lambda: &Partition, weight: usize) -> Vec<Partition> {
    fn rec(lambda: &[usize], i: usize, max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        if i == lambda.len() {
            return;
        }
        let cap: usize = lambda[i..].iter().map(|&p| p.min(max)).sum();
        if cap < left {
            return;
        }
        for v in (1..=lambda[i].min(max).min(left)).rev() {
            cur.push(v);
            rec(lambda, i + 1, v, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weight <= lambda.weight() {
        rec(lambda.parts(), 0, usize::MAX, weight, &mut Vec::new(), &mut out);
    }
    out
}

/// Streams every tuple `(ρ^(1), ..., ρ^(r))` with `ρ^(i) ⊢ ν_i`; the last
/// slot varies fastest.
pub struct PartitionTuples {
    choices: Vec<Vec<Partition>>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for PartitionTuples {
    type Item = Vec<Partition>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.index.iter().zip(&self.choices).map(|(&i, c)| c[i].clone()).collect();
        self.done = true;
        for slot in (0..self.index.len()).rev() {
            self.index[slot] += 1;
            if self.index[slot] < self.choices[slot].len() {
                self.done = false;
                break;
            }
            self.index[slot] = 0;
        }
        Some(item)
    }
}

pub fn partition_tuples(nu: &Composition) -> PartitionTuples {
    let choices: Vec<Vec<Partition>> = nu.parts().iter().map(|&k| partitions_of(k)).collect();
    PartitionTuples {
        index: vec![0; choices.len()],
        choices,
        done: false,
    }
}
