use std::collections::HashSet;

use gstirling::exact::{rat_add, rat_mul, Rational};
use gstirling::format::TableFile;
use gstirling::partitions::{enum_bounded, enum_compositions, enum_distinct_below, enum_weight};
use gstirling::stirling::{recurrence_table, Method, Region, StirlingTable};
use gstirling::symfunc::{complete_h, elementary_e, genfunc_e_coeffs, genfunc_h_coeffs, SymArgs};
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn sym_args(max_len: usize) -> impl Strategy<Value = SymArgs> {
    prop::collection::vec((-9i64..10, 1i64..8).prop_map(|(p, q)| Rational::new(p, q).unwrap()), 0..=max_len)
        .prop_map(SymArgs::new)
}

fn canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().abs().gcd(r.denom()).is_one()
}

proptest! {
    #[test]
    fn sums_and_products_are_canonical(a in rational(), b in rational()) {
        prop_assert!(canonical(&rat_add(&a, &b)));
        prop_assert!(canonical(&rat_mul(&a, &b)));
    }

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Rational::one());
        }
    }

    #[test]
    fn decimal_codec_round_trips(a in rational()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn symmetric_functions_match_generating_products(xs in sym_args(6), k in 0usize..=8) {
        prop_assert_eq!(complete_h(k, &xs), genfunc_h_coeffs(&xs, k)[k].clone());
        prop_assert_eq!(elementary_e(k, &xs), genfunc_e_coeffs(&xs, k)[k].clone());
    }

    #[test]
    fn newton_style_relation(xs in sym_args(6), k in 1usize..=8) {
        let total: Rational = (0..=k)
            .map(|i| Rational::sign_power(i as i64) * elementary_e(i, &xs) * complete_h(k - i, &xs))
            .sum();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn symmetric_functions_ignore_order(xs in sym_args(6), k in 0usize..=6, seed in any::<u64>()) {
        let mut shuffled = xs.args().to_vec();
        // Deterministic Fisher-Yates driven by the seed.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let shuffled = SymArgs::new(shuffled);
        prop_assert_eq!(complete_h(k, &xs), complete_h(k, &shuffled));
        prop_assert_eq!(elementary_e(k, &xs), elementary_e(k, &shuffled));
    }

    #[test]
    fn partition_streams_have_no_duplicates(k in 0usize..6, n in 0u32..8) {
        let mut seen = HashSet::new();
        prop_assert!(enum_bounded(k, n).all(|p| seen.insert(p)));
        let mut seen = HashSet::new();
        prop_assert!(enum_distinct_below(k, n + 1).all(|p| seen.insert(p)));
        let mut seen = HashSet::new();
        prop_assert!(enum_weight(n, k).all(|p| seen.insert(p)));
        let mut seen = HashSet::new();
        prop_assert!(enum_compositions(k.max(1), n).all(|c| c.total() == n as u64 && seen.insert(c)));
    }

    #[test]
    fn recurrence_holds_on_any_table(n_min in -12i64..=0, n_max in 0i64..=12, k_max in 1usize..10) {
        let t = recurrence_table(n_min, n_max, k_max).unwrap();
        for n in n_min..n_max {
            for k in 1..=k_max {
                let rhs = t.get(n, k - 1).unwrap() - Rational::from(n) * t.get(n, k).unwrap();
                prop_assert_eq!(t.get(n + 1, k).unwrap(), &rhs);
            }
        }
        prop_assert!(t.zero_pattern_violations().is_empty());
    }

    #[test]
    fn native_codec_is_bit_exact(n_min in -9i64..=3, width in 0i64..8, k_max in 0usize..8, created in any::<u64>()) {
        let region = Region::new(n_min, n_min + width, k_max).unwrap();
        let file = TableFile::new(StirlingTable::build(region, Method::Recurrence).unwrap(), created);
        let text = file.to_native();
        let back = TableFile::from_native(&text).unwrap();
        prop_assert_eq!(back.to_native(), text);
        prop_assert_eq!(back, file);
    }
}
