//! Self-verification suites shared by the command-line `verify` command.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::applications::{
    bitrace, bitrace_consistency, identity_check, phi_hook_sum, phi_two_sum, BitraceMethod, BitraceQuery,
};
use crate::arith::{LaurentPoly, RationalFn};
use crate::characters::{
    chi, gen_a, gen_b, hook_character, one_column_character, one_row_character, two_row_character,
    two_row_cumulative, Algorithm,
};
use crate::combinatorics::{partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::schur::{classical_character, g_poly, newton_coeffs, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Golden,
    Cross,
    Classical,
    Apps,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Golden, Suite::Cross, Suite::Classical, Suite::Apps];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Cross => "cross",
            Suite::Classical => "classical",
            Suite::Apps => "apps",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if item == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let suite: Suite = item.parse()?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, check: impl Into<String>, outcome: Result<Option<String>>) {
        self.checks += 1;
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => format!("error: {e}"),
        };
        self.failures.push(Failure {
            check: check.into(),
            detail,
        });
    }

    fn expect_eq(&mut self, check: impl Into<String>, got: Result<LaurentPoly>, want: &LaurentPoly) {
        let outcome = got.map(|g| (g != *want).then(|| format!("got {g}, expected {want}")));
        self.record(check, outcome);
    }
}

pub fn run_suite(suite: Suite, n_max: usize) -> SuiteReport {
    let mut r = SuiteReport {
        suite,
        n_max,
        checks: 0,
        failures: Vec::new(),
    };
    match suite {
        Suite::Golden => golden(&mut r),
        Suite::Cross => cross(&mut r, n_max),
        Suite::Classical => classical(&mut r, n_max),
        Suite::Apps => apps(&mut r, n_max),
    }
    r
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn lp<const N: usize>(t: [(i64, i64); N]) -> LaurentPoly {
    LaurentPoly::from_terms(t)
}

/// `Π (t^k - 1)` over the given exponents.
fn tk_minus_one(ks: &[i64]) -> LaurentPoly {
    ks.iter().map(|&k| lp([(0, -1), (k, 1)])).product()
}

/// The expansions of `S*_{-m}.1` for `m <= 4` in the `q_ρ` basis.
pub fn newton_table() -> Vec<(usize, Partition, RationalFn)> {
    let rf = |num: LaurentPoly, den: &[i64]| RationalFn::new(num, tk_minus_one(den)).expect("non-zero");
    vec![
        (1, p(&[1]), rf(LaurentPoly::one(), &[1])),
        (2, p(&[1, 1]), rf(LaurentPoly::one(), &[2, 1])),
        (2, p(&[2]), rf(LaurentPoly::one(), &[2])),
        (3, p(&[1, 1, 1]), rf(LaurentPoly::one(), &[3, 2, 1])),
        (3, p(&[2, 1]), rf(lp([(0, 2), (1, 1)]), &[3, 2])),
        (3, p(&[3]), rf(LaurentPoly::one(), &[3])),
        (4, p(&[1, 1, 1, 1]), rf(LaurentPoly::one(), &[4, 3, 2, 1])),
        (4, p(&[3, 1]), rf(lp([(0, 2), (1, 1), (2, 1)]), &[4, 3])),
        (4, p(&[2, 1, 1]), rf(lp([(0, 3), (1, 2), (2, 1)]), &[4, 3, 2])),
        (4, p(&[2, 2]), rf(LaurentPoly::one(), &[4, 2])),
        (4, p(&[4]), rf(LaurentPoly::one(), &[4])),
    ]
}

fn golden(r: &mut SuiteReport) {
    r.expect_eq(
        "g(3,2,1; 2,2,1,1) = 4(1-t)^6",
        g_poly(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1]), Strategy::Iterative),
        &LaurentPoly::one_minus_var().pow(6).scale(&4.into()),
    );
    let c1 = lp([(2, 6), (3, -12), (4, 3)]);
    let c2 = lp([(1, 1), (2, -3), (3, 2)]);
    for a in [Algorithm::Auto, Algorithm::Mn, Algorithm::Hook] {
        r.expect_eq(format!("chi(6,1,1; 2,2,2,2) via {a}"), chi(&p(&[6, 1, 1]), &p(&[2, 2, 2, 2]), a), &c1);
    }
    for a in [Algorithm::Auto, Algorithm::Mn, Algorithm::TwoRow] {
        r.expect_eq(format!("chi(4,2; 3,2,1) via {a}"), chi(&p(&[4, 2]), &p(&[3, 2, 1]), a), &c2);
    }
    for m in 1..=4 {
        let want: Vec<_> = newton_table().into_iter().filter(|e| e.0 == m).collect();
        let got = newton_coeffs(m);
        let ok = got.len() == want.len() && want.iter().all(|(_, rho, c)| got.get(rho) == Some(c));
        r.record(format!("Newton coefficients m = {m}"), Ok((!ok).then(|| format!("{got:?}"))));
    }
}

fn agree(r: &mut SuiteReport, lambda: &Partition, mu: &Partition, algorithms: &[Algorithm]) {
    let reference = chi(lambda, mu, Algorithm::Mn);
    let reference = match reference {
        Ok(v) => v,
        Err(e) => return r.record(format!("mn ({lambda}; {mu})"), Err(e)),
    };
    for &a in algorithms {
        r.expect_eq(format!("{a} ({lambda}; {mu})"), chi(lambda, mu, a), &reference);
    }
}

fn cross(r: &mut SuiteReport, n_max: usize) {
    for n in 0..=n_max {
        let ps = partitions_of(n);
        let algorithms: &[Algorithm] = if n <= 6 { &Algorithm::GENERAL } else { &[Algorithm::Strips, Algorithm::Oracle] };
        for lambda in &ps {
            let mut extra = Vec::new();
            if Algorithm::Hook.applies_to(lambda) {
                extra.push(Algorithm::Hook);
            }
            if Algorithm::TwoRow.applies_to(lambda) {
                extra.push(Algorithm::TwoRow);
            }
            extra.push(Algorithm::Auto);
            for mu in &ps {
                agree(r, lambda, mu, algorithms);
                agree(r, lambda, mu, &extra);
            }
        }
    }
}

fn classical(r: &mut SuiteReport, n_max: usize) {
    for n in 1..=n_max {
        let ps = partitions_of(n);
        for mu in &ps {
            r.expect_eq(format!("one-row ({n}; {mu})"), chi(&Partition::row(n), mu, Algorithm::Mn), &one_row_character(mu));
            r.expect_eq(
                format!("one-column (1^{n}; {mu})"),
                chi(&Partition::column(n), mu, Algorithm::Mn),
                &one_column_character(mu),
            );
            for lambda in &ps {
                let outcome = chi(lambda, mu, Algorithm::Mn).map(|v| {
                    let at_one = v.evaluate_at_one();
                    let want = classical_character(lambda, mu);
                    let bound = (n - mu.length()) as i64;
                    if at_one != want {
                        Some(format!("value at 1 is {at_one}, classical {want}"))
                    } else if !v.is_polynomial() || v.max_exp().is_some_and(|d| d > bound) {
                        Some(format!("{v} is not a polynomial of degree <= {bound}"))
                    } else {
                        None
                    }
                });
                r.record(format!("specialization ({lambda}; {mu})"), outcome);
            }
        }
    }
}

fn ab_properties(r: &mut SuiteReport, mu: &Partition) {
    let n = mu.weight();
    let l = mu.length();
    let a = gen_a(mu);
    let b = gen_b(mu);
    let sum: LaurentPoly = a.iter().enumerate().map(|(i, ai)| ai.shift(i as i64)).sum();
    r.record(format!("Σ a_i q^i = 0 ({mu})"), Ok((!sum.is_zero()).then(|| sum.to_string())));
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    let sym = (0..=n).all(|j| a[j] == a[n - j].invert_variable().shift(-(l as i64)).scale(&sign.into()));
    r.record(format!("a-symmetry ({mu})"), Ok((!sym).then(|| "fails".into())));
    let pal = (0..=n).all(|j| b[j] == b[n - j]);
    r.record(format!("b-palindromic ({mu})"), Ok((!pal).then(|| "fails".into())));
    let first = a[0].is_one() && b[0].is_one();
    r.record(format!("a_0 = b_0 = 1 ({mu})"), Ok((!first).then(|| "fails".into())));
    let cumulative: Result<LaurentPoly> = (0..=n / 2).map(|i| two_row_character(n - i, mu)).sum();
    r.expect_eq(format!("two-row cumulative ({mu})"), cumulative, &two_row_cumulative(mu));
    if n >= 1 {
        r.expect_eq(format!("hook k=n ({mu})"), hook_character(n, mu), &one_row_character(mu));
    }
}

fn apps(r: &mut SuiteReport, n_max: usize) {
    for n in 1..=n_max.min(7) {
        for mu in partitions_of(n) {
            let outcome = phi_hook_sum(&mu).map(|s| (!s.holds).then(|| format!("{} vs {}", s.closed, s.explicit)));
            r.record(format!("hook sum ({mu})"), outcome);
            let outcome = phi_two_sum(&mu).map(|s| (!s.holds).then(|| format!("{} vs {}", s.closed, s.explicit)));
            r.record(format!("two-row sum ({mu})"), outcome);
            ab_properties(r, &mu);
        }
    }
    for n in 1..=n_max.min(5) {
        let ps = partitions_of(n);
        for l in &ps {
            for m in &ps {
                let q = BitraceQuery::new(Composition::from(l), Composition::from(m)).expect("equal weights");
                let outcome = (|| {
                    let a = bitrace(&q, BitraceMethod::Matrices)?;
                    let b = bitrace(&q, BitraceMethod::CharSum)?;
                    let swapped = BitraceQuery::new(q.mu.clone(), q.lambda.clone())?;
                    let s = bitrace(&swapped, BitraceMethod::Matrices)?;
                    let want = if l == m { l.z() } else { BigInt::from(0) };
                    Ok(if a != b {
                        Some(format!("matrices {a} vs char_sum {b}"))
                    } else if a != s {
                        Some(format!("not symmetric: {a} vs {s}"))
                    } else if a.evaluate_at_one() != want {
                        Some(format!("value at 1 is {}, expected {want}", a.evaluate_at_one()))
                    } else if !bitrace_consistency(&q)? {
                        Some("normalized H disagrees".into())
                    } else {
                        None
                    })
                })();
                r.record(format!("bitrace ({l}; {m})"), outcome);
            }
        }
    }
    for k in 1..=10 {
        let outcome = identity_check(k).map(|ok| (!ok).then(|| "fails".into()));
        r.record(format!("bracket identity k = {k}"), outcome);
    }
}
