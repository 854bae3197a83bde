mod common;

use common::{
    all_words, central_by_conjugacy, central_by_least_conjugate, central_by_palindrome,
    central_by_periods, central_by_split, cyclic, show, windows,
};
use cyclic_words::complexity::{special_from, Side};
use cyclic_words::generators::{mechanical, Slope};
use cyclic_words::sturmian::{
    bispecial_factors, christoffel_word, is_central, period_update_holds, sturmian_factor_slice,
};
use cyclic_words::{Alphabet, FiniteWord};
use proptest::prelude::*;

#[test]
fn central_word_characterizations_agree_up_to_14() {
    let mut central = 0;
    for n in 0..=14 {
        for w in all_words(n) {
            let word = FiniteWord::new(Alphabet::binary(), w.clone()).unwrap();
            let lib = is_central(&word).unwrap().is_some();
            let conditions = [
                central_by_periods(&w),
                central_by_conjugacy(&w),
                central_by_palindrome(&w),
                central_by_least_conjugate(&w),
                central_by_split(&w),
            ];
            assert!(
                conditions.iter().all(|&c| c == lib),
                "{}: library {lib}, conditions {conditions:?}",
                show(&w)
            );
            central += lib as usize;
        }
    }
    // There are φ(n + 2) central words of length n; φ(2) + ⋯ + φ(16) = 79.
    assert_eq!(central, 79);
}

#[test]
fn christoffel_words_wrap_central_words() {
    for total in 2..=40u64 {
        for r in 1..total {
            let s = total - r;
            if num_gcd(r, s) != 1 {
                continue;
            }
            let w = christoffel_word(r, s).unwrap();
            let l = w.letters();
            assert_eq!((l[0], l[l.len() - 1]), (0, 1));
            assert!(central_by_periods(&l[1..l.len() - 1]), "{w}");
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

fn slopes() -> impl Strategy<Value = Slope> {
    (
        prop::collection::vec(1u64..6, 0..3),
        prop::collection::vec(1u64..4, 1..3),
    )
        .prop_map(|(head, tail)| Slope::new(head, tail).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn slices_match_mechanical_words(slope in slopes(), n in 1usize..40) {
        let slice = sturmian_factor_slice(&slope, n).unwrap();
        let src = mechanical(&slope).unwrap();
        let text = src.prefix(20_000).unwrap().into_letters();
        let oracle = windows(&text, n);
        let got: std::collections::BTreeSet<Vec<u8>> = slice.windows().map(<[u8]>::to_vec).collect();
        prop_assert_eq!(got.len(), n + 1);
        prop_assert_eq!(&got, &oracle);
        prop_assert_eq!(slice.classes().count(), cyclic(&oracle));
    }

    #[test]
    fn slices_are_closed_under_reversal(slope in slopes(), n in 1usize..120) {
        let set = sturmian_factor_slice(&slope, n).unwrap().to_set();
        for w in &set {
            prop_assert!(set.contains(&w.reverse()));
        }
    }

    #[test]
    fn bispecials_are_central_palindromes(slope in slopes()) {
        let chain = bispecial_factors(&slope, 80).unwrap();
        prop_assert!(!chain.is_empty());
        for c in &chain {
            prop_assert!(c.word.is_palindrome());
            prop_assert!(central_by_periods(c.word.letters()));
            // Unique bispecial per length.
            let ext = sturmian_factor_slice(&slope, c.len() + 1).unwrap();
            prop_assert_eq!(special_from(&ext, Side::Bi).len(), 1);
        }
        prop_assert!(period_update_holds(&chain));
    }
}
