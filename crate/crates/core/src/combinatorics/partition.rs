use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{LaurentPoly, RationalFn};
use crate::error::{Error, Result};
use crate::memo::Memo;

/// A partition stored as its non-zero parts in weakly decreasing order.
///
/// The derived ordering is lexicographic on the parts, so "reverse
/// lexicographic" listings are descending in this order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        Self::from_unsorted([k])
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self(vec![1; k])
    }

    /// `(k, 1^{n-k})`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(1 <= k && k <= n, "hook arm must lie in 1..=n");
        let mut v = vec![k];
        v.extend(std::iter::repeat_n(1, n - k));
        Self(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_{i+1}` (zero-based `i`), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// `λ^{[1]}`: the partition with its first part removed.
    pub fn tail(&self) -> Self {
        Self(self.0.iter().skip(1).copied().collect())
    }

    pub fn conjugate(&self) -> Self {
        let Some(&first) = self.0.first() else {
            return Self::empty();
        };
        Self((1..=first).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// All partitions obtained by deleting one removable box, top row first.
    pub fn inner_corner_removals(&self) -> Vec<Self> {
        let l = self.0.len();
        (0..l)
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut v = self.0.clone();
                v[i] -= 1;
                Self::new(v).expect("corner removal keeps a partition")
            })
            .collect()
    }

    /// True when `other ⊂ self` componentwise.
    pub fn contains(&self, other: &Self) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    pub fn is_two_row(&self) -> bool {
        self.length() <= 2
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Self) -> Self {
        Self::from_unsorted(self.0.iter().chain(&other.0).copied())
    }

    /// `m_i(λ)` for `i = 1..=λ_1`, indexed by `i - 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= BigInt::from(i + 1) * BigInt::from(k);
            }
        }
        z
    }

    /// `Π (1 - t^{λ_i})`, so that `1 / z_λ(t) = this / z_λ`.
    pub fn one_minus_t_powers(&self) -> LaurentPoly {
        self.0
            .iter()
            .map(|&p| LaurentPoly::from_terms([(0, 1), (p as i64, -1)]))
            .product()
    }

    /// `z_λ(t) = Π_i i^{m_i} m_i! / (1 - t^{λ_i})`.
    pub fn z_t(&self) -> RationalFn {
        RationalFn::new(LaurentPoly::constant(self.z()), self.one_minus_t_powers())
            .expect("product of (1 - t^k) with k >= 1 is non-zero")
    }

    /// Comma-separated parts, `-` for the empty partition.
    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            "-".to_string()
        } else {
            self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Self::new(parts)
    }
}

pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.contains(&0) {
            return Err(D::Error::custom("partitions never store zero parts"));
        }
        Partition::new(v).map_err(D::Error::custom)
    }
}

/// A finite sequence of non-negative integers in any order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// The rearranged partition of the non-zero parts.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    /// Parts with trailing zeros trimmed, comma separated.
    pub fn to_text(&self) -> String {
        let end = self.0.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        if end == 0 {
            "-".to_string()
        } else {
            self.0[..end].iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Self(p.parts().to_vec())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self(parse_parts(s)?))
    }
}

static TABLEAUX: LazyLock<Memo<Partition, BigInt>> = LazyLock::new(Memo::new);

/// Number of standard Young tableaux, via `f^λ = Σ f^{λ^-}` over corner
/// removals with `f^∅ = 1`.
pub fn standard_tableaux_count(lambda: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = TABLEAUX.get(lambda) {
        return v;
    }
    let v = lambda.inner_corner_removals().iter().map(standard_tableaux_count).sum();
    TABLEAUX.insert(lambda.clone(), v)
}

pub(crate) fn clear_cache() {
    TABLEAUX.clear();
}
