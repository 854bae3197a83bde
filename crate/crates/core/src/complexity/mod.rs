//! Exact factor sets of infinite words and the complexity functions built on
//! them: factor complexity `p`, abelian complexity `a`, cyclic complexity `c`
//! and the number of minimal forbidden factors `mf`.
//!
//! An infinite word is only ever seen through a prefix, so every factor set
//! carries a [`Provenance`] recording how long a prefix was read and why that
//! length is believed sufficient. Sources with a [`Certificate`] get an exact
//! bound; the others fall back to prefix doubling: the set is accepted once
//! the factors of the prefix of length `L` and of length `2L` coincide.

mod index;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::error::ComplexityError;
use crate::generators::{Certificate, InfiniteWordSource};
use crate::rotation::{least_rotation_with, ConjugacyInventory};
use crate::word::FiniteWord;

use index::{fingerprint, scan_first_windows, SuffixAutomaton};

/// Default cap on the prefix length (in letters) read from a source.
pub const DEFAULT_BUDGET: usize = 1 << 22;

/// How the distinct windows of a prefix are enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    /// Online suffix automaton; linear in the prefix, shared across lengths.
    #[default]
    Automaton,
    /// Hash every window of the prefix; quadratic, used as a cross-check.
    Scan,
}

/// Why a prefix length was accepted as sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Sufficiency {
    /// Factors of the prefixes of length `stable_from` and `2 · stable_from` agree.
    Doubling { stable_from: usize },
    /// `preperiod + period + n - 1` letters contain every factor.
    Periodic { preperiod: usize, period: usize },
    /// Counts agree on iterates `stage` and `stage + 1`; read iterate `stage + 2`.
    Morphic { stage: usize },
    /// Recurrence bound `q_{k+1} + q_k + n - 1` with `q_k <= n < q_{k+1}`.
    Sturmian { q: u128, q_next: u128 },
    /// Circular windows of the Christoffel word of the convergent `p/q`, `q > n`.
    Approximant { p: u128, q: u128 },
    /// The factor set of an explicitly given finite word or language.
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub prefix_len: usize,
    pub evidence: Sufficiency,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.prefix_len;
        match &self.evidence {
            Sufficiency::Doubling { stable_from } => {
                write!(f, "doubling:{stable_from}->{l}")
            }
            Sufficiency::Periodic { preperiod, period } => {
                write!(f, "periodic:{preperiod}+{period}:{l}")
            }
            Sufficiency::Morphic { stage } => write!(f, "morphic:stage{stage}:{l}"),
            Sufficiency::Sturmian { q, q_next } => write!(f, "sturmian:{q},{q_next}:{l}"),
            Sufficiency::Approximant { p, q } => write!(f, "approximant:{p}/{q}:{l}"),
            Sufficiency::Explicit => write!(f, "explicit:{l}"),
        }
    }
}

/// The distinct factors of length `n`, stored as windows of a shared text.
///
/// Windows are kept at their first occurrence, in increasing position order.
#[derive(Clone)]
pub struct FactorSlice {
    n: usize,
    alphabet: Alphabet,
    text: Arc<Vec<u8>>,
    starts: Vec<usize>,
    provenance: Provenance,
}

impl FactorSlice {
    /// All distinct factors of length `n` of a finite word.
    pub fn of_word(word: &FiniteWord, n: usize) -> Self {
        let text = Arc::new(word.letters().to_vec());
        let starts = if n <= word.len() {
            scan_first_windows(&text, n, text.len())
        } else {
            Vec::new()
        };
        Self {
            n,
            alphabet: word.alphabet().clone(),
            text,
            starts,
            provenance: Provenance {
                prefix_len: word.len(),
                evidence: Sufficiency::Explicit,
            },
        }
    }

    /// A slice holding exactly `words`, which must all have length `n`.
    pub fn from_words(
        alphabet: &Alphabet,
        n: usize,
        words: impl IntoIterator<Item = Vec<u8>>,
    ) -> Result<Self, ComplexityError> {
        let mut seen = HashSet::new();
        let mut text = Vec::new();
        let mut starts = Vec::new();
        for w in words {
            if w.len() != n {
                return Err(crate::error::WordError::MixedLengths(n, w.len()).into());
            }
            if w.iter().any(|&l| l as usize >= alphabet.len()) {
                let bad = *w.iter().find(|&&l| l as usize >= alphabet.len()).unwrap();
                return Err(crate::error::WordError::LetterOutOfRange(bad).into());
            }
            if seen.insert(w.clone()) {
                starts.push(text.len());
                text.extend_from_slice(&w);
            }
        }
        let prefix_len = text.len();
        Ok(Self {
            n,
            alphabet: alphabet.clone(),
            text: Arc::new(text),
            starts,
            provenance: Provenance {
                prefix_len,
                evidence: Sufficiency::Explicit,
            },
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub(crate) fn set_provenance(&mut self, provenance: Provenance) {
        self.provenance = provenance;
    }

    /// Letters of every factor, in order of first occurrence.
    pub fn windows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.starts.iter().map(move |&s| &self.text[s..s + self.n])
    }

    pub fn words(&self) -> impl Iterator<Item = FiniteWord> + '_ {
        self.windows()
            .map(|w| FiniteWord::from_letters_unchecked(self.alphabet.clone(), w.to_vec()))
    }

    pub fn to_set(&self) -> BTreeSet<FiniteWord> {
        self.words().collect()
    }

    pub fn contains(&self, w: &FiniteWord) -> bool {
        w.len() == self.n
            && w.alphabet() == &self.alphabet
            && self.windows().any(|x| x == w.letters())
    }

    /// Number of distinct Parikh vectors.
    pub fn abelian_count(&self) -> usize {
        let sigma = self.alphabet.len();
        let mut seen = HashSet::new();
        for w in self.windows() {
            let mut counts = vec![0u32; sigma];
            for &c in w {
                counts[c as usize] += 1;
            }
            seen.insert(counts);
        }
        seen.len()
    }

    /// Partition of the factors into conjugacy classes.
    pub fn classes(&self) -> Classes {
        classify(self)
    }

    pub fn inventory(&self) -> ConjugacyInventory {
        let mut inv = ConjugacyInventory::new(self.n);
        for w in self.words() {
            inv.insert(w).expect("all factors share one length");
        }
        inv
    }
}

impl fmt::Debug for FactorSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorSlice")
            .field("n", &self.n)
            .field("len", &self.len())
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl PartialEq for FactorSlice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.alphabet == other.alphabet && self.to_set() == other.to_set()
    }
}

/// Conjugacy classes of a [`FactorSlice`], keyed by canonical rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    /// Class index of each factor, aligned with [`FactorSlice::windows`].
    pub class_of: Vec<usize>,
    /// Size of each class, in order of first appearance.
    pub sizes: Vec<usize>,
}

impl Classes {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Class sizes, largest first.
    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

fn classify(slice: &FactorSlice) -> Classes {
    let n = slice.n;
    let mut scratch = Vec::new();
    // Fingerprint of the least rotation -> classes with that fingerprint.
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    // Representative (window start, least-rotation offset) per class.
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut sizes = Vec::new();
    let mut class_of = Vec::with_capacity(slice.len());
    let text = &slice.text[..];
    let rot = |s: usize, o: usize| text[s + o..s + n].iter().chain(&text[s..s + o]);
    for &s in &slice.starts {
        let o = if n == 0 {
            0
        } else {
            least_rotation_with(&text[s..s + n], &mut scratch)
        };
        let h = fingerprint(rot(s, o));
        let bucket = buckets.entry(h).or_default();
        let found = bucket
            .iter()
            .copied()
            .find(|&c| rot(reps[c].0, reps[c].1).eq(rot(s, o)));
        let c = match found {
            Some(c) => c,
            None => {
                reps.push((s, o));
                sizes.push(0);
                bucket.push(reps.len() - 1);
                reps.len() - 1
            }
        };
        sizes[c] += 1;
        class_of.push(c);
    }
    Classes { class_of, sizes }
}

/// Minimal forbidden words of length `n` given the factor sets of lengths
/// `n - 1` and `n`: words `v` outside `f_n` whose prefix and suffix of length
/// `n - 1` both lie in `f_{n-1}`.
pub fn minimal_forbidden_from(
    shorter: &FactorSlice,
    slice: &FactorSlice,
) -> Result<BTreeSet<FiniteWord>, ComplexityError> {
    let n = slice.n;
    if n == 0 || shorter.n + 1 != n {
        return Err(ComplexityError::LengthTooSmall { n, min: 1 });
    }
    let sigma = slice.alphabet.len() as u8;
    let short: HashSet<&[u8]> = shorter.windows().collect();
    let long: HashSet<&[u8]> = slice.windows().collect();
    let mut out = BTreeSet::new();
    let mut v = Vec::with_capacity(n);
    for u in shorter.windows() {
        for a in 0..sigma {
            v.clear();
            v.extend_from_slice(u);
            v.push(a);
            if short.contains(&v[1..]) && !long.contains(&v[..]) {
                out.insert(FiniteWord::from_letters_unchecked(
                    slice.alphabet.clone(),
                    v.clone(),
                ));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Bi,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "bi" => Ok(Side::Bi),
            other => Err(format!("unknown side {other:?} (expected left, right or bi)")),
        }
    }
}

/// Special factors of length `n` computed from the factor set of length `n + 1`.
pub fn special_from(extended: &FactorSlice, side: Side) -> BTreeSet<FiniteWord> {
    let m = extended.n;
    debug_assert!(m >= 1);
    let mut right: HashMap<&[u8], u64> = HashMap::new();
    let mut left: HashMap<&[u8], u64> = HashMap::new();
    for w in extended.windows() {
        *right.entry(&w[..m - 1]).or_default() |= 1 << (w[m - 1] % 64);
        *left.entry(&w[1..]).or_default() |= 1 << (w[0] % 64);
    }
    let special = |map: &HashMap<&[u8], u64>, u: &[u8]| {
        map.get(u).is_some_and(|mask| mask.count_ones() >= 2)
    };
    let candidates: BTreeSet<&[u8]> = right.keys().chain(left.keys()).copied().collect();
    candidates
        .into_iter()
        .filter(|u| match side {
            Side::Right => special(&right, u),
            Side::Left => special(&left, u),
            Side::Bi => special(&right, u) && special(&left, u),
        })
        .map(|u| FiniteWord::from_letters_unchecked(extended.alphabet.clone(), u.to_vec()))
        .collect()
}

/// Computes factor slices of one source, reusing a single index across lengths.
///
/// Querying lengths in increasing order keeps the index no larger than the
/// longest prefix actually needed.
pub struct Analyzer<'a> {
    source: &'a InfiniteWordSource,
    budget: usize,
    backend: Backend,
    text: Arc<Vec<u8>>,
    read: usize,
    sam: SuffixAutomaton,
}

impl<'a> Analyzer<'a> {
    pub fn new(source: &'a InfiniteWordSource) -> Self {
        Self::with_budget(source, DEFAULT_BUDGET)
    }

    pub fn with_budget(source: &'a InfiniteWordSource, budget: usize) -> Self {
        Self {
            source,
            budget,
            backend: Backend::default(),
            text: Arc::new(Vec::new()),
            read: 0,
            sam: SuffixAutomaton::new(source.alphabet().len()),
        }
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }

    pub fn source(&self) -> &InfiniteWordSource {
        self.source
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Length of the longest prefix read so far.
    pub fn prefix_read(&self) -> usize {
        self.read
    }

    fn ensure(&mut self, len: usize, n: usize) -> Result<(), ComplexityError> {
        if len > self.budget {
            return Err(ComplexityError::BudgetExhausted {
                n,
                budget: self.budget,
            });
        }
        if self.text.len() < len {
            self.text = self.source.letters(len)?;
        }
        self.read = self.read.max(len);
        if self.backend == Backend::Automaton && self.sam.text_len() < len {
            let from = self.sam.text_len();
            self.sam.extend_from(&self.text[from..len]);
        }
        Ok(())
    }

    fn windows_within(&self, n: usize, limit: usize) -> Vec<usize> {
        match self.backend {
            Backend::Automaton => self.sam.first_windows(n, limit),
            Backend::Scan => scan_first_windows(&self.text, n, limit),
        }
    }

    fn slice_at(&mut self, n: usize, len: usize, evidence: Sufficiency) -> Result<FactorSlice, ComplexityError> {
        let len = len.max(n);
        self.ensure(len, n)?;
        Ok(FactorSlice {
            n,
            alphabet: self.source.alphabet().clone(),
            text: Arc::clone(&self.text),
            starts: self.windows_within(n, len),
            provenance: Provenance {
                prefix_len: len,
                evidence,
            },
        })
    }

    /// The distinct factors of length `n`.
    pub fn factors(&mut self, n: usize) -> Result<FactorSlice, ComplexityError> {
        match self.source.certificate().clone() {
            Certificate::Periodic { preperiod, period } => {
                let len = preperiod + period + n.saturating_sub(1);
                self.slice_at(n, len, Sufficiency::Periodic { preperiod, period })
            }
            Certificate::Sturmian { denominators } => {
                let nn = n as u128;
                let k = denominators.iter().rposition(|&q| q <= nn.max(1));
                match k.and_then(|k| Some((denominators[k], *denominators.get(k + 1)?))) {
                    Some((q, q_next)) if q_next > nn => {
                        let len = usize::try_from(q_next + q + nn)
                            .map_err(|_| ComplexityError::BudgetExhausted {
                                n,
                                budget: self.budget,
                            })?
                            .saturating_sub(1);
                        self.slice_at(n, len, Sufficiency::Sturmian { q, q_next })
                    }
                    _ => self.by_doubling(n),
                }
            }
            Certificate::Morphic { stage_lengths } => self.by_morphic(n, &stage_lengths),
            Certificate::None => self.by_doubling(n),
        }
    }

    fn count_within(&mut self, n: usize, len: usize) -> Result<usize, ComplexityError> {
        self.ensure(len, n)?;
        Ok(self.windows_within(n, len).len())
    }

    fn by_morphic(&mut self, n: usize, stages: &[usize]) -> Result<FactorSlice, ComplexityError> {
        let Some(first) = stages.iter().position(|&s| s >= n.max(1)) else {
            return self.by_doubling(n);
        };
        let mut k = first;
        while k + 2 < stages.len() {
            let here = self.count_within(n, stages[k])?;
            let next = self.count_within(n, stages[k + 1])?;
            if here == next {
                return self.slice_at(n, stages[k + 2], Sufficiency::Morphic { stage: k });
            }
            k += 1;
        }
        self.by_doubling(n)
    }

    fn by_doubling(&mut self, n: usize) -> Result<FactorSlice, ComplexityError> {
        let mut l = (4 * n).max(1024);
        loop {
            let limit = l.checked_mul(2).ok_or(ComplexityError::BudgetExhausted {
                n,
                budget: self.budget,
            })?;
            self.ensure(limit, n)?;
            let starts = self.windows_within(n, limit);
            if starts.iter().all(|&s| s + n <= l) {
                return Ok(FactorSlice {
                    n,
                    alphabet: self.source.alphabet().clone(),
                    text: Arc::clone(&self.text),
                    starts,
                    provenance: Provenance {
                        prefix_len: limit,
                        evidence: Sufficiency::Doubling { stable_from: l },
                    },
                });
            }
            l = limit;
        }
    }

    pub fn factor_complexity(&mut self, n: usize) -> Result<usize, ComplexityError> {
        Ok(self.factors(n)?.len())
    }

    pub fn abelian_complexity(&mut self, n: usize) -> Result<usize, ComplexityError> {
        Ok(self.factors(n)?.abelian_count())
    }

    /// Number of conjugacy classes and their sizes.
    pub fn cyclic_classes(&mut self, n: usize) -> Result<Classes, ComplexityError> {
        Ok(self.factors(n)?.classes())
    }

    pub fn minimal_forbidden(&mut self, n: usize) -> Result<BTreeSet<FiniteWord>, ComplexityError> {
        if n == 0 {
            return Err(ComplexityError::LengthTooSmall { n, min: 1 });
        }
        let shorter = self.factors(n - 1)?;
        let slice = self.factors(n)?;
        minimal_forbidden_from(&shorter, &slice)
    }

    /// One row of the complexity profile.
    pub fn row(&mut self, n: usize) -> Result<ProfileRow, ComplexityError> {
        let slice = self.factors(n)?;
        let mf = if n == 0 {
            0
        } else {
            let shorter = self.factors(n - 1)?;
            minimal_forbidden_from(&shorter, &slice)?.len()
        };
        let classes = slice.classes();
        Ok(ProfileRow {
            n,
            p: slice.len(),
            a: slice.abelian_count(),
            c: classes.count(),
            mf,
            class_sizes: classes.sorted_sizes(),
            provenance: slice.provenance.to_string(),
        })
    }
}

/// `p(n)`, `a(n)`, `c(n)`, `mf(n)` and the class sizes for one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub p: usize,
    pub a: usize,
    pub c: usize,
    pub mf: usize,
    pub class_sizes: Vec<usize>,
    pub provenance: String,
}

/// Complexity rows for a range of lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub rows: Vec<ProfileRow>,
}

impl ComplexityProfile {
    pub fn compute(
        source: &InfiniteWordSource,
        lengths: impl IntoIterator<Item = usize>,
    ) -> Result<Self, ComplexityError> {
        let mut analyzer = Analyzer::new(source);
        let rows = lengths
            .into_iter()
            .map(|n| analyzer.row(n))
            .collect::<Result<_, _>>()?;
        Ok(Self { rows })
    }
}

pub fn factors(src: &InfiniteWordSource, n: usize) -> Result<FactorSlice, ComplexityError> {
    Analyzer::new(src).factors(n)
}

pub fn factor_complexity(src: &InfiniteWordSource, n: usize) -> Result<usize, ComplexityError> {
    Analyzer::new(src).factor_complexity(n)
}

pub fn abelian_complexity(src: &InfiniteWordSource, n: usize) -> Result<usize, ComplexityError> {
    Analyzer::new(src).abelian_complexity(n)
}

pub fn cyclic_complexity(
    src: &InfiniteWordSource,
    n: usize,
) -> Result<(usize, ConjugacyInventory), ComplexityError> {
    let inv = Analyzer::new(src).factors(n)?.inventory();
    Ok((inv.class_count(), inv))
}

pub fn minimal_forbidden(
    src: &InfiniteWordSource,
    n: usize,
) -> Result<BTreeSet<FiniteWord>, ComplexityError> {
    Analyzer::new(src).minimal_forbidden(n)
}

/// Numbers of factors of length `n` that begin and end with the same letter
/// (`f_aa`) and with different letters (`f_ab`).
pub fn begin_end_counts(src: &InfiniteWordSource, n: usize) -> Result<(usize, usize), ComplexityError> {
    if !src.alphabet().is_binary() {
        return Err(ComplexityError::NotBinary);
    }
    if n < 2 {
        return Err(ComplexityError::LengthTooSmall { n, min: 2 });
    }
    Ok(begin_end_of(&Analyzer::new(src).factors(n)?))
}

/// `(f_aa, f_ab)` of a factor set of length at least 1.
pub fn begin_end_of(slice: &FactorSlice) -> (usize, usize) {
    let same = slice.windows().filter(|w| w[0] == w[w.len() - 1]).count();
    (same, slice.len() - same)
}

pub fn special_factors(
    src: &InfiniteWordSource,
    n: usize,
    side: Side,
) -> Result<BTreeSet<FiniteWord>, ComplexityError> {
    if !src.alphabet().is_binary() {
        return Err(ComplexityError::NotBinary);
    }
    Ok(special_from(&Analyzer::new(src).factors(n + 1)?, side))
}
