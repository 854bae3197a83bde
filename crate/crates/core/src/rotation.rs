//! Conjugacy: least rotations and conjugacy-class inventories.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::WordError;
use crate::word::FiniteWord;

/// Start index of the lexicographically least rotation of `s` (Booth).
///
/// Runs in linear time; `scratch` is the failure table and is resized as needed
/// so callers enumerating many windows can reuse it.
pub fn least_rotation_with(s: &[u8], scratch: &mut Vec<isize>) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    scratch.clear();
    scratch.resize(2 * n, -1);
    let f = scratch.as_mut_slice();
    let at = |i: usize| if i < n { s[i] } else { s[i - n] };
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

pub fn least_rotation(s: &[u8]) -> usize {
    least_rotation_with(s, &mut Vec::new())
}

/// The lexicographically least rotation of `w`.
pub fn canonical_rotation(w: &FiniteWord) -> Result<FiniteWord, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    Ok(w.rotate(least_rotation(w.letters())))
}

pub fn are_conjugate(u: &FiniteWord, v: &FiniteWord) -> bool {
    if u.alphabet() != v.alphabet() || u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    canonical_rotation(u).ok() == canonical_rotation(v).ok()
}

/// Factors of one length grouped by conjugacy class.
///
/// Keys are least rotations; a key need not itself be one of the members.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConjugacyInventory {
    length: usize,
    classes: BTreeMap<FiniteWord, BTreeSet<FiniteWord>>,
}

impl ConjugacyInventory {
    pub fn new(length: usize) -> Self {
        Self {
            length,
            classes: BTreeMap::new(),
        }
    }

    pub fn from_words<I: IntoIterator<Item = FiniteWord>>(
        length: usize,
        words: I,
    ) -> Result<Self, WordError> {
        let mut inv = Self::new(length);
        for w in words {
            inv.insert(w)?;
        }
        Ok(inv)
    }

    pub fn insert(&mut self, w: FiniteWord) -> Result<(), WordError> {
        if w.len() != self.length {
            return Err(WordError::MixedLengths(self.length, w.len()));
        }
        let key = if w.is_empty() {
            w.clone()
        } else {
            canonical_rotation(&w)?
        };
        self.classes.entry(key).or_default().insert(w);
        Ok(())
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &BTreeMap<FiniteWord, BTreeSet<FiniteWord>> {
        &self.classes
    }

    pub fn word_count(&self) -> usize {
        self.classes.values().map(BTreeSet::len).sum()
    }

    /// Class sizes in descending order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.values().map(BTreeSet::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn class_of(&self, w: &FiniteWord) -> Option<&BTreeSet<FiniteWord>> {
        let key = canonical_rotation(w).ok()?;
        self.classes.get(&key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    fn brute_force_min(s: &[u8]) -> Vec<u8> {
        (0..s.len())
            .map(|k| {
                let mut r = s.to_vec();
                r.rotate_left(k);
                r
            })
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&w("10010")).unwrap(), w("00101"));
        assert_eq!(canonical_rotation(&w("0000")).unwrap(), w("0000"));
        assert_eq!(canonical_rotation(&w("0110")).unwrap(), w("0011"));
        assert_eq!(
            canonical_rotation(&FiniteWord::empty(crate::Alphabet::binary())),
            Err(WordError::EmptyWord)
        );
    }

    #[test]
    fn conjugacy_examples() {
        assert!(are_conjugate(&w("01"), &w("10")));
        assert!(are_conjugate(&w("00100101"), &w("10100100")));
        assert!(!are_conjugate(&w("00"), &w("11")));
        assert!(!are_conjugate(&w("0"), &w("00")));
    }

    #[test]
    fn booth_matches_rotation_sort_on_ternary_words() {
        let mut scratch = Vec::new();
        for n in 1..=7u32 {
            for code in 0..3u32.pow(n) {
                let mut x = code;
                let s: Vec<u8> = (0..n)
                    .map(|_| {
                        let d = (x % 3) as u8;
                        x /= 3;
                        d
                    })
                    .collect();
                let k = least_rotation_with(&s, &mut scratch);
                let mut r = s.clone();
                r.rotate_left(k);
                assert_eq!(r, brute_force_min(&s), "word {s:?}");
            }
        }
    }

    #[test]
    fn inventory_groups_rotations() {
        let inv = ConjugacyInventory::from_words(
            4,
            ["0101", "1010", "0110", "1001", "0011", "1100", "0010", "0100", "1011", "1101"]
                .iter()
                .map(|s| w(s)),
        )
        .unwrap();
        assert_eq!(inv.class_count(), 4);
        assert_eq!(inv.class_sizes(), vec![4, 2, 2, 2]);
        assert_eq!(inv.class_of(&w("1001")).unwrap().len(), 4);
        assert!(inv.clone().insert(w("010")).is_err());
    }
}
