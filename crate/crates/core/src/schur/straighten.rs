use crate::combinatorics::Partition;

/// The value of `S_{μ_1} ⋯ S_{μ_l}.1` for an integer sequence `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StraightenResult {
    Zero,
    Signed { negative: bool, partition: Partition },
}

impl StraightenResult {
    /// `±1`, or `0` for `Zero`.
    pub fn sign(&self) -> i32 {
        match self {
            StraightenResult::Zero => 0,
            StraightenResult::Signed { negative: true, .. } => -1,
            StraightenResult::Signed { negative: false, .. } => 1,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            StraightenResult::Zero => None,
            StraightenResult::Signed { partition, .. } => Some(partition),
        }
    }
}

/// Rewrites `S_μ.1` as `0` or `±s_λ`.
///
/// With `δ = (l-1, ..., 1, 0)`, the product vanishes when `μ + δ` has a
/// repeated or a negative entry; otherwise `λ = sort(μ + δ) - δ` and the sign
/// is that of the sorting permutation.
pub fn straighten(mu: &[i64]) -> StraightenResult {
    let l = mu.len() as i64;
    let mut shifted: Vec<i64> = mu.iter().enumerate().map(|(i, &m)| m + (l - 1 - i as i64)).collect();
    if shifted.iter().any(|&x| x < 0) {
        return StraightenResult::Zero;
    }
    // insertion sort into descending order, counting transpositions
    let mut negative = false;
    for i in 1..shifted.len() {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return StraightenResult::Zero;
    }
    let parts: Vec<usize> = shifted
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - (l - 1 - i as i64)) as usize)
        .collect();
    StraightenResult::Signed {
        negative,
        partition: Partition::new(parts).expect("sorted shifted sequence is a partition"),
    }
}
