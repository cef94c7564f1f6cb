use proptest::prelude::*;

use heckechar::arith::{LaurentPoly, RationalFn};
use heckechar::combinatorics::{contingency_matrices, Composition, Partition};
use heckechar::schur::{straighten, StraightenResult};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..6, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("non-zero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = RationalFn> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFn::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn invert_variable_is_multiplicative(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).invert_variable(), a.invert_variable() * b.invert_variable());
        prop_assert_eq!(a.invert_variable().invert_variable(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn rational_normal_form(r in rational(), s in rational()) {
        prop_assert_eq!(r.normalize(), r.clone());
        let sum = &r + &s;
        let cross = RationalFn::new(
            r.numer() * s.denom() + s.numer() * r.denom(),
            r.denom() * s.denom(),
        ).unwrap();
        prop_assert_eq!(&sum, &cross);
        prop_assert!(sum.eq_cross(&cross));
        prop_assert_eq!(&(&sum - &s), &r);
        if !r.is_zero() {
            prop_assert_eq!(&r * &r.inv().unwrap(), RationalFn::one());
        }
        prop_assert_eq!((&r * &s).invert_variable(), &r.invert_variable() * &s.invert_variable());
    }

    #[test]
    fn pairs_round_trip(a in laurent()) {
        prop_assert_eq!(LaurentPoly::from_pairs(&a.to_pairs()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }

    /// `S_m S_n = -S_{n-1} S_{m+1}` at every adjacent position.
    #[test]
    fn straightening_respects_exchange(mu in prop::collection::vec(-2i64..6, 2..6), pos in 0usize..5) {
        let i = pos % (mu.len() - 1);
        let mut swapped = mu.clone();
        swapped[i] = mu[i + 1] - 1;
        swapped[i + 1] = mu[i] + 1;
        let a = straighten(&mu);
        let b = straighten(&swapped);
        prop_assert_eq!(a.sign(), -b.sign());
        prop_assert_eq!(a.partition(), b.partition());
    }

    #[test]
    fn straightening_fixes_partitions(parts in prop::collection::vec(0usize..6, 0..6)) {
        let lambda = Partition::from_unsorted(parts);
        let seq: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
        prop_assert_eq!(straighten(&seq), StraightenResult::Signed { negative: false, partition: lambda });
    }

    #[test]
    fn contingency_transpose(rows in prop::collection::vec(0usize..4, 1..4), perm in 0usize..6) {
        let total: usize = rows.iter().sum();
        // spread the same total over a different number of columns
        let ncols = 1 + perm % 3;
        let mut cols = vec![total / ncols; ncols];
        cols[0] += total % ncols;
        let (r, c) = (Composition::new(rows.clone()), Composition::new(cols.clone()));
        let forward: Vec<_> = contingency_matrices(&r, &c).unwrap().collect();
        let backward = contingency_matrices(&c, &r).unwrap().count();
        prop_assert_eq!(forward.len(), backward);
        for m in &forward {
            for (i, row) in m.iter().enumerate() {
                prop_assert_eq!(row.iter().sum::<usize>(), rows[i]);
            }
            for j in 0..ncols {
                prop_assert_eq!(m.iter().map(|row| row[j]).sum::<usize>(), cols[j]);
            }
        }
        let mut dedup = forward.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), forward.len());
    }
}
