mod common;

use std::collections::BTreeSet;

use common::{abelian, all_words, cyclic};
use cyclic_words::languages::{
    from_forbidden, languages_isomorphic_or_mirror, mf_of_language, Antidictionary,
    FactorialLanguage,
};
use cyclic_words::{Alphabet, FiniteWord};
use proptest::prelude::*;

fn naive_slice(forbidden: &[Vec<u8>], n: usize) -> BTreeSet<Vec<u8>> {
    all_words(n)
        .into_iter()
        .filter(|w| {
            !forbidden
                .iter()
                .any(|f| f.len() <= w.len() && w.windows(f.len()).any(|x| x == &f[..]))
        })
        .collect()
}

fn language(forbidden: &[Vec<u8>]) -> FactorialLanguage {
    let alphabet = Alphabet::binary();
    let words = forbidden
        .iter()
        .map(|f| FiniteWord::new(alphabet.clone(), f.clone()).unwrap());
    from_forbidden(Antidictionary::new(&alphabet, words).unwrap())
}

fn letters(set: &BTreeSet<FiniteWord>) -> BTreeSet<Vec<u8>> {
    set.iter().map(|w| w.letters().to_vec()).collect()
}

fn antidictionaries() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(0u8..2, 1..6), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn automaton_matches_naive_filter(forbidden in antidictionaries()) {
        let lang = language(&forbidden);
        for n in 0..=14 {
            prop_assert_eq!(letters(&lang.slice(n)), naive_slice(&forbidden, n), "n = {}", n);
        }
    }

    #[test]
    fn slices_are_factorial(forbidden in antidictionaries()) {
        let lang = language(&forbidden);
        for n in 1..=12 {
            let shorter = letters(&lang.slice(n - 1));
            for w in letters(&lang.slice(n)) {
                prop_assert!(shorter.contains(&w[1..]) && shorter.contains(&w[..n - 1]));
            }
        }
    }

    #[test]
    fn renaming_and_mirroring_preserve_complexities(forbidden in antidictionaries()) {
        let lang = language(&forbidden);
        let others = [lang.mirror(), lang.rename(&[1, 0]), lang.rename(&[1, 0]).mirror()];
        for n in 1..=12 {
            let base = letters(&lang.slice(n));
            let counts = (base.len(), abelian(&base), cyclic(&base));
            for other in &others {
                let s = letters(&other.slice(n));
                prop_assert_eq!((s.len(), abelian(&s), cyclic(&s)), counts);
            }
        }
        prop_assert!(languages_isomorphic_or_mirror(&lang, &others[2], 10));
    }
}

#[test]
fn minimal_antidictionaries_are_recovered() {
    for forbidden in [
        vec!["11", "000"],
        vec!["11", "101"],
        vec!["000111"],
        vec!["001111"],
        vec!["00", "111"],
    ] {
        let anti = Antidictionary::parse(&Alphabet::binary(), &forbidden).unwrap();
        assert!(anti.is_minimal());
        let max = anti.max_len();
        let lang = from_forbidden(anti.clone());
        for n in 1..=max + 2 {
            let expected: BTreeSet<FiniteWord> =
                anti.words().iter().filter(|w| w.len() == n).cloned().collect();
            assert_eq!(mf_of_language(&lang, n), expected, "{forbidden:?} at {n}");
        }
    }
}

#[test]
fn non_minimal_sets_are_detected() {
    let anti = Antidictionary::parse(&Alphabet::binary(), &["11", "110"]).unwrap();
    assert!(!anti.is_minimal());
}
