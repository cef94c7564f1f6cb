//! End-to-end acceptance checks, one line of output per criterion.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use heckechar::applications::{
    bitrace, bitrace_from_h, h_oracle, h_poly, identity_check, phi_hook_sum, phi_two_sum, BitraceMethod,
    BitraceQuery,
};
use heckechar::arith::{LaurentPoly, RationalFn};
use heckechar::characters::{
    chi, gen_a, gen_b, gen_char_newton, gen_char_sn, hook_character, mn_character, strip_weight, two_row_character,
    Algorithm,
};
use heckechar::combinatorics::{partitions_of, strip_removals, Composition, Partition};
use heckechar::schur::{g_poly, newton_coeffs, Strategy};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn lp<const N: usize>(t: [(i64, i64); N]) -> LaurentPoly {
    LaurentPoly::from_terms(t)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let e = start.elapsed();
    ensure(e < limit, || format!("took {e:?}, limit {limit:?}"))
}

fn tm1(k: i64) -> LaurentPoly {
    lp([(0, -1), (k, 1)])
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let g = g_poly(&p(&[3, 2, 1]), &p(&[2, 2, 1, 1]), Strategy::Iterative).map_err(|e| e.to_string())?;
    ensure(g == LaurentPoly::one_minus_var().pow(6).scale(&4.into()), || format!("g = {g}"))?;
    let c = chi(&p(&[6, 1, 1]), &p(&[2, 2, 2, 2]), Algorithm::Auto).map_err(|e| e.to_string())?;
    ensure(c == lp([(2, 6), (3, -12), (4, 3)]), || format!("χ(6,1,1; 2^4) = {c}"))?;
    let c = chi(&p(&[4, 2]), &p(&[3, 2, 1]), Algorithm::Auto).map_err(|e| e.to_string())?;
    ensure(c == lp([(3, 2), (2, -3), (1, 1)]), || format!("χ(4,2; 3,2,1) = {c}"))?;

    let rf = |num: LaurentPoly, den: &[i64]| {
        RationalFn::new(num, den.iter().map(|&k| tm1(k)).product()).unwrap()
    };
    let one = LaurentPoly::one;
    let expected = [
        (1, vec![(p(&[1]), rf(one(), &[1]))]),
        (2, vec![(p(&[1, 1]), rf(one(), &[2, 1])), (p(&[2]), rf(one(), &[2]))]),
        (
            3,
            vec![
                (p(&[1, 1, 1]), rf(one(), &[3, 2, 1])),
                (p(&[2, 1]), rf(lp([(1, 1), (0, 2)]), &[3, 2])),
                (p(&[3]), rf(one(), &[3])),
            ],
        ),
        (
            4,
            vec![
                (p(&[1, 1, 1, 1]), rf(one(), &[4, 3, 2, 1])),
                (p(&[3, 1]), rf(lp([(2, 1), (1, 1), (0, 2)]), &[4, 3])),
                (p(&[2, 1, 1]), rf(lp([(2, 1), (1, 2), (0, 3)]), &[4, 3, 2])),
                (p(&[2, 2]), rf(one(), &[4, 2])),
                (p(&[4]), rf(one(), &[4])),
            ],
        ),
    ];
    for (m, terms) in expected {
        let got = newton_coeffs(m);
        ensure(got.len() == terms.len(), || format!("m = {m}: {} terms", got.len()))?;
        for (rho, c) in terms {
            ensure(got.get(&rho) == Some(&c), || format!("C_{{{m},{rho}}} = {:?}", got.get(&rho)))?;
        }
    }
    within(start, Duration::from_secs(1))
}

fn criterion_2() -> Check {
    for n in 1..=8 {
        for mu in partitions_of(n) {
            let d = (n - mu.length()) as i64;
            let row = lp([(d, 1)]);
            let col = LaurentPoly::constant(if d % 2 == 0 { 1 } else { -1 });
            for a in [Algorithm::Auto, Algorithm::Mn, Algorithm::Strips, Algorithm::Oracle] {
                let r = chi(&Partition::row(n), &mu, a).map_err(|e| e.to_string())?;
                ensure(r == row, || format!("χ^({n})_{mu} via {a} = {r}"))?;
                let c = chi(&Partition::column(n), &mu, a).map_err(|e| e.to_string())?;
                ensure(c == col, || format!("χ^(1^{n})_{mu} via {a} = {c}"))?;
            }
        }
    }
    Ok(())
}

fn sweep_agreement(n: usize, algorithms: &[Algorithm]) -> Check {
    let ps = partitions_of(n);
    for lambda in &ps {
        for mu in &ps {
            let reference = chi(lambda, mu, Algorithm::Mn).map_err(|e| e.to_string())?;
            for &a in algorithms {
                let v = chi(lambda, mu, a).map_err(|e| format!("{a} ({lambda}; {mu}): {e}"))?;
                ensure(v == reference, || format!("{a} ({lambda}; {mu}): {v} vs mn {reference}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    heckechar::clear_caches();
    let start = Instant::now();
    let all = [
        Algorithm::Iterative,
        Algorithm::Det,
        Algorithm::Strips,
        Algorithm::Oracle,
        Algorithm::GenSn,
        Algorithm::GenNewton,
    ];
    for n in 0..=6 {
        sweep_agreement(n, &all)?;
    }
    ensure(partitions_of(6).len().pow(2) == 121, || "pair count".into())?;
    for n in 7..=8 {
        sweep_agreement(n, &[Algorithm::Strips, Algorithm::Oracle])?;
    }
    within(start, Duration::from_secs(60))
}

/// `χ^λ_ρ` from the Frobenius formula: the coefficient of `x^{λ+δ}` in
/// `a_δ p_ρ`, i.e. `Σ_σ sgn(σ) #{ways to distribute ρ into rows with sums λ + δ - σδ}`.
fn frobenius(lambda: &Partition, rho: &Partition) -> i64 {
    let l = lambda.length();
    let target: Vec<i64> = (0..l).map(|i| (lambda.part(i) + l - 1 - i) as i64).collect();
    let mut total = 0;
    let mut used = vec![false; l];
    let mut alpha = vec![0i64; l];
    permute(0, l, &target, &mut used, &mut alpha, 1, rho.parts(), &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn permute(i: usize, l: usize, target: &[i64], used: &mut [bool], alpha: &mut [i64], sign: i64, rho: &[usize], total: &mut i64) {
    if i == l {
        *total += sign * distributions(rho, alpha, &mut HashMap::new());
        return;
    }
    for j in 0..l {
        if used[j] {
            continue;
        }
        let a = target[i] - (l - 1 - j) as i64;
        if a < 0 {
            continue;
        }
        // sign of the permutation: count inversions introduced by placing j at position i
        let inv = used[..j].iter().filter(|&&u| !u).count();
        used[j] = true;
        alpha[i] = a;
        let s = if inv % 2 == 0 { sign } else { -sign };
        permute(i + 1, l, target, used, alpha, s, rho, total);
        used[j] = false;
    }
}

fn distributions(rho: &[usize], rest: &mut [i64], memo: &mut HashMap<(usize, Vec<i64>), i64>) -> i64 {
    if rho.is_empty() {
        return rest.iter().all(|&x| x == 0) as i64;
    }
    let key = (rho.len(), rest.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = rho[0] as i64;
    let mut count = 0;
    for i in 0..rest.len() {
        if rest[i] >= k {
            rest[i] -= k;
            count += distributions(&rho[1..], rest, memo);
            rest[i] += k;
        }
    }
    memo.insert(key, count);
    count
}

fn criterion_4() -> Check {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for lambda in &ps {
            for mu in &ps {
                let v = chi(lambda, mu, Algorithm::Auto).map_err(|e| e.to_string())?;
                let classical = frobenius(lambda, mu);
                ensure(v.evaluate_at_one() == BigInt::from(classical), || {
                    format!("({lambda}; {mu}): {v} at 1 vs {classical}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Check {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for lambda in &ps {
            for mu in &ps {
                let reference = mn_character(lambda, mu).map_err(|e| e.to_string())?;
                if lambda.is_hook() {
                    let h = hook_character(lambda.first(), mu).map_err(|e| e.to_string())?;
                    ensure(h == reference, || format!("hook ({lambda}; {mu}): {h} vs {reference}"))?;
                }
                if lambda.length() <= 2 {
                    let t = two_row_character(lambda.first(), mu).map_err(|e| e.to_string())?;
                    ensure(t == reference, || format!("two-row ({lambda}; {mu}): {t} vs {reference}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    for n in 1..=7 {
        for mu in partitions_of(n) {
            let l = mu.length();
            let hook = phi_hook_sum(&mu).map_err(|e| e.to_string())?;
            let explicit: LaurentPoly = (1..=n)
                .map(|k| mn_character(&Partition::hook(n, k), &mu).unwrap())
                .sum();
            let sign = if (n - l) % 2 == 0 { 1 } else { -1 };
            let closed: LaurentPoly = mu
                .parts()
                .iter()
                .map(|&m| (0..m as i64).map(|j| lp([(j, if j % 2 == 0 { 1 } else { -1 })])).sum::<LaurentPoly>())
                .product::<LaurentPoly>()
                .scale(&(sign * (1i64 << (l - 1))).into());
            ensure(hook.holds && hook.explicit == explicit && hook.closed == closed, || {
                format!("hook sum ({mu}): {} / {} / {closed}", hook.closed, explicit)
            })?;

            let two = phi_two_sum(&mu).map_err(|e| e.to_string())?;
            let explicit: LaurentPoly = (0..=n / 2)
                .map(|k| {
                    mn_character(&p(&[n - k, k]), &mu)
                        .unwrap()
                        .scale(&((n - 2 * k + 1) as i64).into())
                })
                .sum();
            // compare q^{2l} · closed with q^{2l} · explicit, both polynomials
            let closed: LaurentPoly = mu
                .parts()
                .iter()
                .map(|&m| lp([(0, 1 - m as i64), (1, 1 + m as i64)]))
                .product::<LaurentPoly>()
                .shift(n as i64);
            ensure(two.holds && closed == explicit.shift(2 * l as i64), || {
                format!("two-row sum ({mu}): {closed} vs {explicit}")
            })?;
        }
    }
    Ok(())
}

fn z(lambda: &Partition) -> BigInt {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &x in lambda.parts() {
        *counts.entry(x).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| BigInt::from(i).pow(m as u32) * (1..=m).map(BigInt::from).product::<BigInt>())
        .product()
}

fn bitrace_pair(l: &Composition, m: &Composition) -> Check {
    let q = BitraceQuery::new(l.clone(), m.clone()).map_err(|e| e.to_string())?;
    let a = bitrace(&q, BitraceMethod::Matrices).map_err(|e| e.to_string())?;
    let b = bitrace(&q, BitraceMethod::CharSum).map_err(|e| e.to_string())?;
    ensure(a == b, || format!("btr({l}; {m}): matrices {a} vs char_sum {b}"))?;
    let rev = BitraceQuery::new(m.clone(), l.clone()).unwrap();
    let s = bitrace(&rev, BitraceMethod::Matrices).map_err(|e| e.to_string())?;
    ensure(a == s, || format!("btr({l}; {m}) not symmetric"))?;
    let h = bitrace_from_h(&q).map_err(|e| e.to_string())?;
    ensure(a == h, || format!("btr({l}; {m}) vs normalized H {h}"))?;
    Ok(())
}

fn criterion_7() -> Check {
    heckechar::clear_caches();
    let start = Instant::now();
    for n in 1..=5 {
        let ps = partitions_of(n);
        for l in &ps {
            for m in &ps {
                let (lc, mc) = (Composition::from(l), Composition::from(m));
                bitrace_pair(&lc, &mc)?;
                let q = BitraceQuery::new(lc.clone(), mc.clone()).unwrap();
                let at_one = bitrace(&q, BitraceMethod::Matrices).unwrap().evaluate_at_one();
                let want = if l == m { z(l) } else { BigInt::from(0) };
                ensure(at_one == want, || format!("btr({l}; {m})(1) = {at_one}, expected {want}"))?;
                let h = h_poly(&lc, &mc).map_err(|e| e.to_string())?;
                let o = h_oracle(&lc, &mc).map_err(|e| e.to_string())?;
                ensure(h == o, || format!("H({l}; {m}) = {h} vs ⟨q_λ, q_μ⟩ = {o}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let ps = partitions_of(6);
    for _ in 0..100 {
        let l = ps.choose(&mut rng).unwrap();
        let m = ps.choose(&mut rng).unwrap();
        // shuffle the parts: values must depend only on the multisets
        let mut lv = l.parts().to_vec();
        let mut mv = m.parts().to_vec();
        lv.shuffle(&mut rng);
        mv.shuffle(&mut rng);
        bitrace_pair(&Composition::new(lv.clone()), &Composition::new(mv.clone()))?;
        let sorted = bitrace(&BitraceQuery::new(l.into(), m.into()).unwrap(), BitraceMethod::Matrices).unwrap();
        let shuffled =
            bitrace(&BitraceQuery::new(Composition::new(lv), Composition::new(mv)).unwrap(), BitraceMethod::Matrices)
                .unwrap();
        ensure(sorted == shuffled, || format!("btr({l}; {m}) depends on part order"))?;
    }
    within(start, Duration::from_secs(120))
}

fn criterion_8() -> Check {
    for n in 1..=8 {
        for mu in partitions_of(n) {
            let l = mu.length();
            let (a, b) = (gen_a(&mu), gen_b(&mu));
            ensure(a[0].is_one() && b[0].is_one(), || format!("a_0, b_0 ({mu})"))?;
            let s: LaurentPoly = a.iter().enumerate().map(|(i, x)| x.shift(i as i64)).sum();
            ensure(s.is_zero(), || format!("Σ a_i q^i ({mu}) = {s}"))?;
            let sign: i64 = if l % 2 == 0 { 1 } else { -1 };
            for j in 0..=n {
                ensure(b[j] == b[n - j], || format!("b palindrome ({mu}), j = {j}"))?;
                let mirrored = a[n - j].invert_variable().shift(-(l as i64)).scale(&sign.into());
                ensure(a[j] == mirrored, || format!("a-symmetry ({mu}), j = {j}"))?;
            }
        }
        for lambda in partitions_of(n) {
            for k in 1..=n {
                for (_, comps) in strip_removals(&lambda, k) {
                    for c in &comps {
                        ensure(c.rows + c.cols == c.size + 1, || format!("r + c ({lambda}, {k})"))?;
                    }
                    let m = comps.len();
                    let lhs = LaurentPoly::one_minus_var().pow(m as u32)
                        * comps
                            .iter()
                            .map(|c| lp([((c.rows - 1) as i64, if (c.rows - 1) % 2 == 0 { 1 } else { -1 })]))
                            .product::<LaurentPoly>();
                    // the weight is read in q = t^{-1}
                    let rhs = LaurentPoly::one_minus_var().shift(k as i64 - 1) * strip_weight(&comps).invert_variable();
                    ensure(lhs == rhs, || format!("MN weight ({lambda}, {k}): {lhs} vs {rhs}"))?;
                }
            }
        }
    }
    for k in 1..=10 {
        ensure(identity_check(k).unwrap(), || format!("bracket identity k = {k}"))?;
    }
    Ok(())
}

fn criterion_9() -> Check {
    for n in 0..=8 {
        let ps = partitions_of(n);
        let strategies: &[Strategy] = if n <= 6 { &Strategy::ALL } else { &[Strategy::Strips, Strategy::Oracle] };
        for lambda in &ps {
            for mu in &ps {
                for &s in strategies {
                    g_poly(lambda, mu, s).map_err(|e| format!("g_poly {s} ({lambda}; {mu}): {e}"))?;
                }
                if n <= 6 {
                    gen_char_sn(lambda, mu).map_err(|e| format!("gen_sn ({lambda}; {mu}): {e}"))?;
                    gen_char_newton(lambda, mu).map_err(|e| format!("gen_newton ({lambda}; {mu}): {e}"))?;
                }
                if (1..=6).contains(&n) {
                    let q = BitraceQuery::new(lambda.into(), mu.into()).unwrap();
                    bitrace(&q, BitraceMethod::Matrices).map_err(|e| format!("bitrace ({lambda}; {mu}): {e}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden values", criterion_1),
        ("one-row and one-column closed forms, n <= 8", criterion_2),
        ("cross-algorithm agreement, n <= 8", criterion_3),
        ("classical specialization, n <= 8", criterion_4),
        ("hook and two-row formulas against MN, n <= 8", criterion_5),
        ("supercharacter sum identities, n <= 7", criterion_6),
        ("bitrace methods, specialization and symmetry", criterion_7),
        ("generating-function and strip properties", criterion_8),
        ("exact polynomial conversions", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2} s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2} s): {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
