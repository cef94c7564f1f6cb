//! Irreducible characters `χ^λ_μ(q)` of the Hecke algebra `H_n(q)`.

mod closed;
mod general;
mod mn;
mod table;

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

pub use closed::{
    gen_a, gen_b, hook_character, one_column_character, one_row_character, two_row_character,
    two_row_cumulative,
};
pub use general::{gen_char_newton, gen_char_sn};
pub use mn::{mn_character, strip_weight};
pub use table::{char_table, CharTable, TableEntry, TableFile, FORMAT_VERSION};

use crate::arith::{LaurentPoly, RationalFn};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::schur::{check_weights, g_poly, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Auto,
    Mn,
    Det,
    Iterative,
    Strips,
    Hook,
    TwoRow,
    GenSn,
    GenNewton,
    Oracle,
    /// Closed form for `λ = (n)`; only produced by `Auto`.
    OneRow,
    /// Closed form for `λ = (1^n)`; only produced by `Auto`.
    OneColumn,
}

impl Algorithm {
    pub const ALL: [Algorithm; 12] = [
        Algorithm::Auto,
        Algorithm::Mn,
        Algorithm::Det,
        Algorithm::Iterative,
        Algorithm::Strips,
        Algorithm::Hook,
        Algorithm::TwoRow,
        Algorithm::GenSn,
        Algorithm::GenNewton,
        Algorithm::Oracle,
        Algorithm::OneRow,
        Algorithm::OneColumn,
    ];

    /// Algorithms that apply to every shape.
    pub const GENERAL: [Algorithm; 7] = [
        Algorithm::Mn,
        Algorithm::Iterative,
        Algorithm::Det,
        Algorithm::Strips,
        Algorithm::Oracle,
        Algorithm::GenSn,
        Algorithm::GenNewton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Mn => "mn",
            Algorithm::Det => "det",
            Algorithm::Iterative => "iterative",
            Algorithm::Strips => "strips",
            Algorithm::Hook => "hook",
            Algorithm::TwoRow => "two_row",
            Algorithm::GenSn => "gen_sn",
            Algorithm::GenNewton => "gen_newton",
            Algorithm::Oracle => "oracle",
            Algorithm::OneRow => "one_row",
            Algorithm::OneColumn => "one_column",
        }
    }

    /// The algorithm actually run for `λ`; `Auto` picks a closed form when
    /// the shape allows one and falls back to the MN recursion.
    pub fn resolve(self, lambda: &Partition) -> Algorithm {
        if self != Algorithm::Auto {
            return self;
        }
        if lambda.length() <= 1 {
            Algorithm::OneRow
        } else if lambda.first() == 1 {
            Algorithm::OneColumn
        } else if lambda.is_hook() {
            Algorithm::Hook
        } else if lambda.is_two_row() {
            Algorithm::TwoRow
        } else {
            Algorithm::Mn
        }
    }

    /// Whether the algorithm can evaluate `χ^λ` at all.
    pub fn applies_to(self, lambda: &Partition) -> bool {
        match self {
            Algorithm::Hook => lambda.is_hook() && !lambda.is_empty(),
            Algorithm::TwoRow => lambda.is_two_row() && !lambda.is_empty(),
            Algorithm::OneRow => lambda.length() <= 1,
            Algorithm::OneColumn => lambda.first() <= 1,
            _ => true,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub algorithm: Algorithm,
}

impl CharQuery {
    pub fn new(lambda: Partition, mu: Partition, algorithm: Algorithm) -> Result<Self> {
        check_weights(&lambda, &mu)?;
        Ok(Self { lambda, mu, algorithm })
    }
}

/// `χ^λ_μ(q) = (-1)^{l(μ)} q^n (1-q)^{-l(μ)} g^λ_μ(q^{-1})`.
pub fn normalize_g_to_chi(g: &LaurentPoly, n: usize, l_mu: usize) -> Result<LaurentPoly> {
    let mut num = g.invert_variable().shift(n as i64);
    if l_mu % 2 == 1 {
        num = -num;
    }
    let den = LaurentPoly::one_minus_var().pow(l_mu as u32);
    let chi = RationalFn::new(num, den)?
        .try_to_laurent()
        .map_err(|e| Error::Integrity(format!("normalizing {g}: {e}")))?;
    if !chi.is_polynomial() {
        return Err(Error::Integrity(format!("normalized character {chi} has negative powers")));
    }
    Ok(chi)
}

static CHARACTERS: LazyLock<Memo<(Algorithm, Partition, Partition), LaurentPoly>> = LazyLock::new(Memo::new);

pub(crate) fn clear_cache() {
    CHARACTERS.clear();
    general::clear_cache();
    mn::clear_cache();
}

fn via_g(lambda: &Partition, mu: &Partition, s: Strategy) -> Result<LaurentPoly> {
    normalize_g_to_chi(&g_poly(lambda, mu, s)?, mu.weight(), mu.length())
}

fn not_applicable(algorithm: Algorithm, lambda: &Partition) -> Error {
    Error::NotApplicable {
        algorithm: algorithm.to_string(),
        shape: lambda.to_string(),
    }
}

/// `χ^λ_μ(q)` by the requested algorithm. Results are memoized per
/// algorithm, so cross-checks between algorithms stay independent.
pub fn character(query: &CharQuery) -> Result<LaurentPoly> {
    let CharQuery { lambda, mu, algorithm } = query;
    check_weights(lambda, mu)?;
    let alg = algorithm.resolve(lambda);
    if !alg.applies_to(lambda) {
        return Err(not_applicable(alg, lambda));
    }
    let key = (alg, lambda.clone(), mu.clone());
    if let Some(v) = CHARACTERS.get(&key) {
        return Ok(v);
    }
    let n = mu.weight();
    let v = match alg {
        Algorithm::OneRow => one_row_character(mu),
        Algorithm::OneColumn => one_column_character(mu),
        Algorithm::Hook => hook_character(lambda.first(), mu)?,
        Algorithm::TwoRow => two_row_character(lambda.first(), mu)?,
        Algorithm::Mn => mn_character(lambda, mu)?,
        Algorithm::Iterative => via_g(lambda, mu, Strategy::Iterative)?,
        Algorithm::Det => via_g(lambda, mu, Strategy::Det)?,
        Algorithm::Strips => via_g(lambda, mu, Strategy::Strips)?,
        Algorithm::Oracle => via_g(lambda, mu, Strategy::Oracle)?,
        Algorithm::GenSn => gen_char_sn(lambda, mu)?,
        Algorithm::GenNewton => gen_char_newton(lambda, mu)?,
        Algorithm::Auto => unreachable!("resolved above"),
    };
    debug_assert!(v.max_exp().is_none_or(|d| d <= (n - mu.length()) as i64));
    Ok(CHARACTERS.insert(key, v))
}

/// Shorthand for `character`.
pub fn chi(lambda: &Partition, mu: &Partition, algorithm: Algorithm) -> Result<LaurentPoly> {
    character(&CharQuery::new(lambda.clone(), mu.clone(), algorithm)?)
}
