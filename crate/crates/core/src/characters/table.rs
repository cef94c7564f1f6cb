use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{character, Algorithm, CharQuery};
use crate::arith::LaurentPoly;
use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

/// The full table of `χ^λ_μ(q)` for `λ, μ ⊢ n`, with the algorithm that
/// produced each entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    entries: BTreeMap<(Partition, Partition), LaurentPoly>,
    provenance: BTreeMap<(Partition, Partition), Algorithm>,
}

/// One record of the on-disk format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub algorithm: Algorithm,
    pub poly: LaurentPoly,
}

/// The on-disk format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub format_version: u32,
    pub n: usize,
    pub variable: String,
    pub entries: Vec<TableEntry>,
}

/// Fills every entry with `algorithm`, in parallel. Shapes the algorithm
/// does not cover fall back to `auto`; the provenance records what ran.
pub fn char_table(n: usize, algorithm: Algorithm) -> Result<CharTable> {
    let ps = partitions_of(n);
    let pairs: Vec<(Partition, Partition)> = ps
        .iter()
        .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let filled: Vec<((Partition, Partition), LaurentPoly, Algorithm)> = pairs
        .into_par_iter()
        .map(|(lambda, mu)| {
            let alg = if algorithm.applies_to(&lambda) { algorithm } else { Algorithm::Auto };
            let alg = alg.resolve(&lambda);
            let v = character(&CharQuery::new(lambda.clone(), mu.clone(), alg)?)?;
            Ok(((lambda, mu), v, alg))
        })
        .collect::<Result<_>>()?;
    let mut table = CharTable {
        n,
        entries: BTreeMap::new(),
        provenance: BTreeMap::new(),
    };
    for (key, v, alg) in filled {
        table.provenance.insert(key.clone(), alg);
        table.entries.insert(key, v);
    }
    Ok(table)
}

impl CharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentPoly> {
        self.entries.get(&(lambda.clone(), mu.clone()))
    }

    pub fn provenance(&self, lambda: &Partition, mu: &Partition) -> Option<Algorithm> {
        self.provenance.get(&(lambda.clone(), mu.clone())).copied()
    }

    /// Entries in reverse lexicographic order of `(λ, μ)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, &LaurentPoly)> {
        self.entries.iter().rev().map(|((l, m), v)| (l, m, v))
    }

    /// Values at `q = 1`.
    pub fn at_one(&self) -> BTreeMap<(Partition, Partition), BigInt> {
        self.entries.iter().map(|(k, v)| (k.clone(), v.evaluate_at_one())).collect()
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            format_version: FORMAT_VERSION,
            n: self.n,
            variable: "q".into(),
            entries: self
                .iter()
                .map(|(l, m, v)| TableEntry {
                    lambda: l.clone(),
                    mu: m.clone(),
                    algorithm: self.provenance(l, m).expect("provenance is total"),
                    poly: v.clone(),
                })
                .collect(),
        }
    }

    /// Validates coverage, ordering and polynomiality.
    pub fn from_file(file: TableFile) -> Result<Self> {
        let bad = |m: String| Err(Error::Cache(m));
        if file.format_version != FORMAT_VERSION {
            return bad(format!("unsupported format version {}", file.format_version));
        }
        if file.variable != "q" {
            return bad(format!("unexpected variable {:?}", file.variable));
        }
        let ps = partitions_of(file.n);
        let expected: Vec<(Partition, Partition)> = ps
            .iter()
            .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
            .collect();
        if file.entries.len() != expected.len() {
            return bad(format!("expected {} entries, found {}", expected.len(), file.entries.len()));
        }
        let mut table = CharTable {
            n: file.n,
            entries: BTreeMap::new(),
            provenance: BTreeMap::new(),
        };
        for (e, (l, m)) in file.entries.into_iter().zip(expected) {
            if e.lambda != l || e.mu != m {
                return bad(format!("entry ({}; {}) out of order, expected ({l}; {m})", e.lambda, e.mu));
            }
            if !e.poly.is_polynomial() {
                return bad(format!("entry ({l}; {m}) is not a polynomial"));
            }
            table.provenance.insert((l.clone(), m.clone()), e.algorithm);
            table.entries.insert((l, m), e.poly);
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(s).map_err(|e| Error::Cache(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        }
        fs::write(path, self.to_json()).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let s = fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    /// `dir/n{n}-{algorithm}.json`.
    pub fn cache_path(dir: &Path, n: usize, algorithm: Algorithm) -> PathBuf {
        dir.join(format!("n{n}-{algorithm}.json"))
    }

    /// Reads the table from `dir` when a valid file for `(n, algorithm)` is
    /// present, otherwise computes and stores it.
    pub fn cached(n: usize, algorithm: Algorithm, dir: &Path) -> Result<Self> {
        let path = Self::cache_path(dir, n, algorithm);
        if path.exists() {
            if let Ok(t) = Self::load(&path) {
                if t.n == n {
                    return Ok(t);
                }
            }
        }
        let t = char_table(n, algorithm)?;
        t.save(&path)?;
        Ok(t)
    }
}
