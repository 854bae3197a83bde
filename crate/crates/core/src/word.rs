//! Finite words and the primitives the complexity functions are built on.
//!
//! Positions reported to callers are 1-based: `occurrences("010010", "010")`
//! is `[1, 4]`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::error::WordError;

/// An immutable sequence of symbols over an [`Alphabet`].
///
/// Letters are stored as indices into the alphabet, so the derived ordering
/// on letter vectors is the lexicographic order induced by the alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteWord {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl FiniteWord {
    pub fn new(alphabet: Alphabet, letters: Vec<u8>) -> Result<Self, WordError> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet.len()) {
            return Err(WordError::LetterOutOfRange(bad));
        }
        Ok(Self { alphabet, letters })
    }

    /// Caller guarantees every letter is a valid index.
    pub(crate) fn from_letters_unchecked(alphabet: Alphabet, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.len()));
        Self { alphabet, letters }
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        Ok(Self {
            letters: alphabet.encode(text)?,
            alphabet: alphabet.clone(),
        })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Factor `[start, start + len)` with 0-based start.
    pub fn slice(&self, start: usize, len: usize) -> FiniteWord {
        Self::from_letters_unchecked(
            self.alphabet.clone(),
            self.letters[start..start + len].to_vec(),
        )
    }

    pub fn concat(&self, other: &FiniteWord) -> Result<FiniteWord, WordError> {
        self.same_alphabet(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_letters_unchecked(self.alphabet.clone(), letters))
    }

    pub fn is_prefix_of(&self, other: &FiniteWord) -> bool {
        self.alphabet == other.alphabet && other.letters.starts_with(&self.letters)
    }

    /// Lexicographic comparison; words over different alphabets are not comparable.
    pub fn lex_cmp(&self, other: &FiniteWord) -> Result<Ordering, WordError> {
        self.same_alphabet(other)?;
        Ok(self.letters.cmp(&other.letters))
    }

    pub fn parikh(&self) -> ParikhVector {
        ParikhVector::of_letters(&self.letters, self.alphabet.len())
    }

    pub fn reverse(&self) -> FiniteWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self::from_letters_unchecked(self.alphabet.clone(), letters)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> FiniteWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.letters.len());
        }
        Self::from_letters_unchecked(self.alphabet.clone(), letters)
    }

    /// Applies a letter renaming given as a permutation of letter indices.
    pub fn rename(&self, map: &[u8]) -> FiniteWord {
        let letters = self.letters.iter().map(|&l| map[l as usize]).collect();
        Self::from_letters_unchecked(self.alphabet.clone(), letters)
    }

    pub fn count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    fn same_alphabet(&self, other: &FiniteWord) -> Result<(), WordError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(WordError::AlphabetMismatch)
        }
    }
}

/// Binary words parse from strings of `0` and `1`.
impl FromStr for FiniteWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FiniteWord::parse(&Alphabet::binary(), s)
    }
}

// Ties between equal letter sequences over different alphabets are broken
// by the alphabets themselves so that `Ord` agrees with `Eq`.
impl Ord for FiniteWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then_with(|| self.alphabet.symbols().cmp(other.alphabet.symbols()))
    }
}

impl PartialOrd for FiniteWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Letter-occurrence counts, indexed by alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector {
    counts: Vec<usize>,
}

impl ParikhVector {
    pub fn of_letters(letters: &[u8], alphabet_size: usize) -> Self {
        let mut counts = vec![0; alphabet_size];
        for &l in letters {
            counts[l as usize] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Largest per-letter difference.
    pub fn max_difference(&self, other: &ParikhVector) -> usize {
        self.counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0)
    }
}

impl From<Vec<usize>> for ParikhVector {
    fn from(counts: Vec<usize>) -> Self {
        Self { counts }
    }
}

pub fn parikh(w: &FiniteWord) -> ParikhVector {
    w.parikh()
}

pub fn reverse(w: &FiniteWord) -> FiniteWord {
    w.reverse()
}

pub(crate) fn is_palindrome(letters: &[u8]) -> bool {
    letters.iter().eq(letters.iter().rev())
}

/// Border array: `border[i]` is the length of the longest proper border of
/// `letters[..=i]`.
pub(crate) fn failure_function(letters: &[u8]) -> Vec<usize> {
    let mut border = vec![0; letters.len()];
    let mut k = 0;
    for i in 1..letters.len() {
        while k > 0 && letters[i] != letters[k] {
            k = border[k - 1];
        }
        if letters[i] == letters[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// All periods `p` in `1..=|w|`, ascending. A period is `|w|` minus the
/// length of a border, so the border chain of the whole word gives them all.
pub fn periods(w: &FiniteWord) -> Result<Vec<usize>, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    Ok(periods_of(w.letters()))
}

pub(crate) fn periods_of(letters: &[u8]) -> Vec<usize> {
    let n = letters.len();
    if n == 0 {
        return Vec::new();
    }
    let border = failure_function(letters);
    let mut out = vec![n];
    let mut b = border[n - 1];
    while b > 0 {
        out.push(n - b);
        b = border[b - 1];
    }
    out.sort_unstable();
    out
}

/// 1-based starting positions of `u` in `text`, overlapping occurrences included.
pub fn occurrences(text: &FiniteWord, u: &FiniteWord) -> Result<Vec<usize>, WordError> {
    if u.is_empty() {
        return Err(WordError::EmptyWord);
    }
    if text.alphabet() != u.alphabet() {
        return Err(WordError::AlphabetMismatch);
    }
    let pattern = u.letters();
    let border = failure_function(pattern);
    let mut out = Vec::new();
    let mut k = 0;
    for (i, &c) in text.letters().iter().enumerate() {
        while k > 0 && (k == pattern.len() || c != pattern[k]) {
            k = border[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            out.push(i + 2 - pattern.len());
        }
    }
    Ok(out)
}

/// True iff every pair of words in `set` has Parikh vectors within `c` of each
/// other in every coordinate.
pub fn is_c_balanced<'a>(
    set: impl IntoIterator<Item = &'a FiniteWord>,
    c: usize,
) -> Result<bool, WordError> {
    if c == 0 {
        return Err(WordError::InvalidBalanceConstant);
    }
    let mut len = None;
    let mut vectors = BTreeSet::new();
    for w in set {
        match len {
            None => len = Some(w.len()),
            Some(l) if l != w.len() => return Err(WordError::MixedLengths(l, w.len())),
            _ => {}
        }
        vectors.insert(w.parikh());
    }
    Ok(parikh_spread(vectors.iter()) <= c)
}

/// Largest coordinate-wise difference between any two vectors.
pub(crate) fn parikh_spread<'a>(vectors: impl Iterator<Item = &'a ParikhVector> + Clone) -> usize {
    let mut spread = 0;
    for (i, a) in vectors.clone().enumerate() {
        for b in vectors.clone().skip(i + 1) {
            spread = spread.max(a.max_difference(b));
        }
    }
    spread
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FiniteWord {
        s.parse().unwrap()
    }

    #[test]
    fn parikh_examples() {
        let abc = Alphabet::new("abc".chars()).unwrap();
        let abb = FiniteWord::parse(&abc, "abb").unwrap();
        assert_eq!(abb.parikh().counts(), &[1, 2, 0]);
        assert_eq!(FiniteWord::empty(abc).parikh().counts(), &[0, 0, 0]);
        assert_eq!(w("0101").parikh().counts(), &[2, 2]);
    }

    #[test]
    fn period_examples() {
        assert_eq!(periods(&w("010010")).unwrap(), vec![3, 5, 6]);
        let aaa = FiniteWord::parse(&Alphabet::new("ab".chars()).unwrap(), "aaa").unwrap();
        assert_eq!(periods(&aaa).unwrap(), vec![1, 2, 3]);
        assert_eq!(periods(&w("0101")).unwrap(), vec![2, 4]);
        assert_eq!(
            periods(&FiniteWord::empty(Alphabet::binary())),
            Err(WordError::EmptyWord)
        );
    }

    #[test]
    fn reversal_and_palindromes() {
        assert_eq!(w("001").reverse(), w("100"));
        assert!(w("010010").is_palindrome());
        assert!(!w("01").is_palindrome());
        assert!(FiniteWord::empty(Alphabet::binary()).is_palindrome());
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(occurrences(&w("010010"), &w("010")).unwrap(), vec![1, 4]);
        assert_eq!(occurrences(&w("0000"), &w("00")).unwrap(), vec![1, 2, 3]);
        assert!(occurrences(&w("01"), &w("11")).unwrap().is_empty());
        assert!(occurrences(&w("01"), &FiniteWord::empty(Alphabet::binary())).is_err());
    }

    #[test]
    fn balance_examples() {
        let pair = [w("00"), w("11")];
        assert!(!is_c_balanced(&pair, 1).unwrap());
        assert!(is_c_balanced(&pair, 2).unwrap());
        let tm4: Vec<FiniteWord> = [
            "0101", "0110", "1001", "1010", "0010", "0011", "0100", "1011", "1100", "1101",
        ]
        .iter()
        .map(|s| w(s))
        .collect();
        assert!(is_c_balanced(&tm4, 2).unwrap());
        assert!(!is_c_balanced(&tm4, 1).unwrap());
        assert_eq!(
            is_c_balanced(&[w("0"), w("01")], 1),
            Err(WordError::MixedLengths(1, 2))
        );
        assert_eq!(
            is_c_balanced(&pair, 0),
            Err(WordError::InvalidBalanceConstant)
        );
    }

    #[test]
    fn cross_alphabet_comparison_is_an_error() {
        let ab = Alphabet::new("ab".chars()).unwrap();
        let x = FiniteWord::parse(&ab, "ab").unwrap();
        assert_eq!(x.lex_cmp(&w("01")), Err(WordError::AlphabetMismatch));
        assert_eq!(w("01").lex_cmp(&w("10")), Ok(Ordering::Less));
        assert_ne!(x, w("01"));
    }

    #[test]
    fn rejects_out_of_range_letters() {
        assert_eq!(
            FiniteWord::new(Alphabet::binary(), vec![0, 2]),
            Err(WordError::LetterOutOfRange(2))
        );
    }
}
