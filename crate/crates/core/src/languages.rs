//! Factorial languages given by a finite set of forbidden factors.
//!
//! The recognizer is the Aho-Corasick automaton of the antidictionary with
//! every state that completes a forbidden word removed, so each surviving
//! state is a live suffix and every path through live states spells a word of
//! the language.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::Alphabet;
use crate::complexity::{minimal_forbidden_from, FactorSlice};
use crate::error::{LanguageError, WordError};
use crate::rotation::ConjugacyInventory;
use crate::word::{occurrences, FiniteWord};

const DEAD: u32 = u32::MAX;

/// A finite set of non-empty forbidden words over one alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antidictionary {
    alphabet: Alphabet,
    words: BTreeSet<FiniteWord>,
}

impl Antidictionary {
    pub fn new(
        alphabet: &Alphabet,
        words: impl IntoIterator<Item = FiniteWord>,
    ) -> Result<Self, LanguageError> {
        let words: BTreeSet<FiniteWord> = words.into_iter().collect();
        if words.is_empty() {
            return Err(LanguageError::EmptyAntidictionary);
        }
        for w in &words {
            if w.alphabet() != alphabet {
                return Err(WordError::AlphabetMismatch.into());
            }
            if w.is_empty() {
                return Err(LanguageError::EmptyForbiddenWord);
            }
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            words,
        })
    }

    pub fn parse<S: AsRef<str>>(alphabet: &Alphabet, words: &[S]) -> Result<Self, LanguageError> {
        let parsed = words
            .iter()
            .map(|w| FiniteWord::parse(alphabet, w.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(alphabet, parsed)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<FiniteWord> {
        &self.words
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(FiniteWord::len).max().unwrap_or(0)
    }

    /// No forbidden word is a factor of another one.
    pub fn is_minimal(&self) -> bool {
        self.words.iter().all(|u| {
            self.words
                .iter()
                .filter(|v| *v != u)
                .all(|v| occurrences(v, u).map_or(true, |occ| occ.is_empty()))
        })
    }

    fn map(&self, f: impl Fn(&FiniteWord) -> FiniteWord) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            words: self.words.iter().map(f).collect(),
        }
    }
}

/// Whether `forbidden` is a minimal antidictionary.
pub fn is_minimal_antidictionary(forbidden: &Antidictionary) -> bool {
    forbidden.is_minimal()
}

/// All words over the alphabet avoiding every forbidden factor.
#[derive(Clone, Debug)]
pub struct FactorialLanguage {
    forbidden: Antidictionary,
    sigma: usize,
    /// Transition table over live states; `DEAD` marks a completed forbidden word.
    delta: Vec<u32>,
    states: usize,
}

impl FactorialLanguage {
    pub fn from_forbidden(forbidden: Antidictionary) -> Self {
        let sigma = forbidden.alphabet.len();
        // Trie.
        let mut goto: Vec<Vec<u32>> = vec![vec![DEAD; sigma]];
        let mut terminal = vec![false];
        for w in &forbidden.words {
            let mut s = 0usize;
            for &c in w.letters() {
                if goto[s][c as usize] == DEAD {
                    goto.push(vec![DEAD; sigma]);
                    terminal.push(false);
                    goto[s][c as usize] = (goto.len() - 1) as u32;
                }
                s = goto[s][c as usize] as usize;
            }
            terminal[s] = true;
        }
        // Failure links in breadth-first order, completing the transitions.
        let mut fail = vec![0u32; goto.len()];
        let mut queue = VecDeque::new();
        for c in 0..sigma {
            match goto[0][c] {
                DEAD => goto[0][c] = 0,
                t => {
                    fail[t as usize] = 0;
                    queue.push_back(t as usize);
                }
            }
        }
        while let Some(s) = queue.pop_front() {
            terminal[s] |= terminal[fail[s] as usize];
            for c in 0..sigma {
                let t = goto[s][c];
                let via_fail = goto[fail[s] as usize][c];
                if t == DEAD {
                    goto[s][c] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    queue.push_back(t as usize);
                }
            }
        }
        let delta = goto
            .iter()
            .flat_map(|row| row.iter().map(|&t| if terminal[t as usize] { DEAD } else { t }))
            .collect();
        Self {
            forbidden,
            sigma,
            delta,
            states: terminal.len(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.forbidden.alphabet
    }

    pub fn forbidden(&self) -> &Antidictionary {
        &self.forbidden
    }

    /// The state reached on `letters`, or `None` once a forbidden word occurs.
    fn run(&self, letters: &[u8]) -> Option<usize> {
        let mut s = 0usize;
        for &c in letters {
            match self.delta[s * self.sigma + c as usize] {
                DEAD => return None,
                t => s = t as usize,
            }
        }
        Some(s)
    }

    pub fn contains(&self, w: &FiniteWord) -> bool {
        w.alphabet() == self.alphabet() && self.run(w.letters()).is_some()
    }

    /// Number of automaton states, including those completing a forbidden word.
    pub fn state_count(&self) -> usize {
        self.states
    }

    /// `L ∩ A^n` in lexicographic order, as raw letters.
    fn slice_letters(&self, n: usize) -> Vec<Vec<u8>> {
        let states = self.states;
        // reach[r][s]: some word of length r can be read from state s.
        let mut reach = vec![vec![true; states]];
        for r in 1..=n {
            let prev = &reach[r - 1];
            let row = (0..states)
                .map(|s| {
                    (0..self.sigma).any(|c| match self.delta[s * self.sigma + c] {
                        DEAD => false,
                        t => prev[t as usize],
                    })
                })
                .collect();
            reach.push(row);
        }
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        self.walk(0, n, &reach, &mut word, &mut out);
        out
    }

    fn walk(
        &self,
        state: usize,
        remaining: usize,
        reach: &[Vec<bool>],
        word: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if remaining == 0 {
            out.push(word.clone());
            return;
        }
        for c in 0..self.sigma {
            let t = self.delta[state * self.sigma + c];
            if t != DEAD && reach[remaining - 1][t as usize] {
                word.push(c as u8);
                self.walk(t as usize, remaining - 1, reach, word, out);
                word.pop();
            }
        }
    }

    pub fn slice(&self, n: usize) -> BTreeSet<FiniteWord> {
        self.slice_letters(n)
            .into_iter()
            .map(|l| FiniteWord::from_letters_unchecked(self.alphabet().clone(), l))
            .collect()
    }

    /// `L ∩ A^n` as a factor slice, for the complexity functions.
    pub fn factor_slice(&self, n: usize) -> FactorSlice {
        FactorSlice::from_words(self.alphabet(), n, self.slice_letters(n))
            .expect("slice words have length n over the language alphabet")
    }

    pub fn mirror(&self) -> Self {
        Self::from_forbidden(self.forbidden.map(FiniteWord::reverse))
    }

    /// Image under the letter permutation `map` (letter `i` becomes `map[i]`).
    pub fn rename(&self, map: &[u8]) -> Self {
        Self::from_forbidden(self.forbidden.map(|w| w.rename(map)))
    }
}

pub fn from_forbidden(forbidden: Antidictionary) -> FactorialLanguage {
    FactorialLanguage::from_forbidden(forbidden)
}

pub fn slice(language: &FactorialLanguage, n: usize) -> BTreeSet<FiniteWord> {
    language.slice(n)
}

/// Number of conjugacy classes of `L ∩ A^n` and the classes themselves.
#[allow(non_snake_case)]
pub fn cyclic_complexity_L(language: &FactorialLanguage, n: usize) -> (usize, ConjugacyInventory) {
    let inv = language.factor_slice(n).inventory();
    (inv.class_count(), inv)
}

/// `MF(L) ∩ A^n`, from the slices of lengths `n - 1` and `n`.
pub fn mf_of_language(language: &FactorialLanguage, n: usize) -> BTreeSet<FiniteWord> {
    if n == 0 {
        return BTreeSet::new();
    }
    minimal_forbidden_from(&language.factor_slice(n - 1), &language.factor_slice(n))
        .expect("consecutive slice lengths")
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, (k - 1) as u8);
            out.push(q);
        }
    }
    out
}

/// Whether the slices of lengths `0..=max_n` of the two languages agree under
/// some renaming of letters, possibly followed by reversal.
pub fn languages_isomorphic_or_mirror(
    a: &FactorialLanguage,
    b: &FactorialLanguage,
    max_n: usize,
) -> bool {
    if a.sigma != b.sigma {
        return false;
    }
    let slices_a: Vec<BTreeSet<Vec<u8>>> = (0..=max_n)
        .map(|n| a.slice_letters(n).into_iter().collect())
        .collect();
    let slices_b: Vec<BTreeSet<Vec<u8>>> = (0..=max_n)
        .map(|n| b.slice_letters(n).into_iter().collect())
        .collect();
    permutations(a.sigma).into_iter().any(|perm| {
        [false, true].into_iter().any(|mirror| {
            slices_a.iter().zip(&slices_b).all(|(sa, sb)| {
                sa.len() == sb.len()
                    && sa.iter().all(|w| {
                        let mut img: Vec<u8> = w.iter().map(|&c| perm[c as usize]).collect();
                        if mirror {
                            img.reverse();
                        }
                        sb.contains(&img)
                    })
            })
        })
    })
}
