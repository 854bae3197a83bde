//! Central words, Christoffel words and arrays, and exact factor sets of
//! Sturmian words.
//!
//! A word is central when it has coprime periods `p`, `q` and length
//! `p + q - 2`. For such a `w` other than a letter power, `0w1` is the lower
//! Christoffel word with the same letter counts, and the sorted conjugates of
//! `0w1` form the Christoffel array.
//!
//! The length-`n` factors of a Sturmian word of irrational slope `α` coincide
//! with the circular length-`n` windows of the Christoffel word of any
//! convergent `p/q` of `α` with `q > n`: no fraction with denominator at most
//! `n` separates `α` from such a convergent, and the factor set only changes
//! when the slope crosses one.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::complexity::{special_from, FactorSlice, Provenance, Side, Sufficiency};
use crate::error::{SturmianError, WordError};
use crate::generators::Slope;
use crate::rotation::are_conjugate;
use crate::word::{periods_of, FiniteWord};

/// A central word together with its coprime periods, `p >= q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralWord {
    pub word: FiniteWord,
    pub p: usize,
    pub q: usize,
}

impl CentralWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `{p, q}` as an unordered pair, smaller first.
    pub fn periods(&self) -> (usize, usize) {
        (self.q, self.p)
    }
}

fn require_binary(w: &FiniteWord) -> Result<(), SturmianError> {
    if w.alphabet().is_binary() {
        Ok(())
    } else {
        Err(SturmianError::NotBinary)
    }
}

/// The central-word record of `w`, if `w` is central.
///
/// Among all coprime period pairs summing to `|w| + 2` the one containing the
/// minimal period is reported; for words other than letter powers it is the
/// only one.
pub fn is_central(w: &FiniteWord) -> Result<Option<CentralWord>, SturmianError> {
    require_binary(w)?;
    let len = w.len();
    let listed = periods_of(w.letters());
    // Every integer >= |w| is a period of w.
    let is_period = |x: usize| x >= len || listed.binary_search(&x).is_ok();
    let total = len + 2;
    let found = (1..total)
        .filter(|&q| is_period(q))
        .find(|&q| is_period(total - q) && q.gcd(&(total - q)) == 1);
    Ok(found.map(|q| {
        let p = total - q;
        CentralWord {
            word: w.clone(),
            p: p.max(q),
            q: p.min(q),
        }
    }))
}

/// Outcome of splitting a central word as `p1·01·p2 = p2·10·p1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `w` is a power of a single letter (including the empty word).
    LetterPower,
    Split { p1: FiniteWord, p2: FiniteWord },
}

pub fn central_decomposition(w: &CentralWord) -> Decomposition {
    let letters = w.word.letters();
    let n = letters.len();
    if letters.windows(2).all(|x| x[0] == x[1]) {
        return Decomposition::LetterPower;
    }
    for i in 0..n - 1 {
        if letters[i..i + 2] != [0, 1] {
            continue;
        }
        let (p1, p2) = (&letters[..i], &letters[i + 2..]);
        let other = p2.iter().chain(&[1, 0]).chain(p1);
        if other.copied().eq(letters.iter().copied()) {
            let alphabet = w.word.alphabet().clone();
            return Decomposition::Split {
                p1: FiniteWord::from_letters_unchecked(alphabet.clone(), p1.to_vec()),
                p2: FiniteWord::from_letters_unchecked(alphabet, p2.to_vec()),
            };
        }
    }
    unreachable!("a central word that is not a letter power splits as p1 01 p2 = p2 10 p1")
}

fn check_pair(r: u64, s: u64) -> Result<(), SturmianError> {
    if r == 0 || s == 0 || r.gcd(&s) != 1 {
        return Err(SturmianError::NotCoprime { r, s });
    }
    Ok(())
}

fn christoffel_letters(r: u64, s: u64) -> Vec<u8> {
    let n = (r + s) as u128;
    let s = s as u128;
    (0..n)
        .map(|k| (((k + 1) * s) / n - (k * s) / n) as u8)
        .collect()
}

/// The lower Christoffel word with `r` zeros and `s` ones.
pub fn christoffel_word(r: u64, s: u64) -> Result<FiniteWord, SturmianError> {
    check_pair(r, s)?;
    Ok(FiniteWord::from_letters_unchecked(
        Alphabet::binary(),
        christoffel_letters(r, s),
    ))
}

/// The lexicographically sorted conjugates of a Christoffel word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChristoffelArray {
    pub r: u64,
    pub s: u64,
    pub rows: Vec<FiniteWord>,
}

impl ChristoffelArray {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> FiniteWord {
        let letters = self.rows.iter().map(|row| row.letters()[j]).collect();
        FiniteWord::from_letters_unchecked(Alphabet::binary(), letters)
    }

    pub fn is_sorted(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] < w[1])
    }

    pub fn rows_conjugate(&self) -> bool {
        self.rows.iter().all(|row| are_conjugate(row, &self.rows[0]))
    }

    /// First column `0^r 1^s` and last column `1^s 0^r`.
    pub fn columns_ok(&self) -> bool {
        let (r, s) = (self.r as usize, self.s as usize);
        let first: Vec<u8> = std::iter::repeat_n(0, r).chain(std::iter::repeat_n(1, s)).collect();
        let last: Vec<u8> = std::iter::repeat_n(1, s).chain(std::iter::repeat_n(0, r)).collect();
        let n = self.size();
        self.column(0).letters() == first && self.column(n - 1).letters() == last
    }

    /// Consecutive rows differ by exchanging two adjacent distinct letters.
    pub fn adjacent_swaps(&self) -> bool {
        self.rows.windows(2).all(|pair| {
            let (a, b) = (pair[0].letters(), pair[1].letters());
            let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
            diff.len() == 2 && diff[1] == diff[0] + 1 && a[diff[0]] == b[diff[1]]
        })
    }

    /// Columns are pairwise conjugate.
    pub fn columns_conjugate(&self) -> bool {
        let first = self.column(0);
        (1..self.size()).all(|j| are_conjugate(&self.column(j), &first))
    }
}

impl fmt::Display for ChristoffelArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

pub fn christoffel_array(r: u64, s: u64) -> Result<ChristoffelArray, SturmianError> {
    let word = christoffel_word(r, s)?;
    let mut rows: Vec<FiniteWord> = (0..word.len()).map(|k| word.rotate(k)).collect();
    rows.sort();
    rows.dedup();
    Ok(ChristoffelArray { r, s, rows })
}

/// `s(w) = |w|_1 / |w|` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSlope {
    pub numerator: u64,
    pub denominator: u64,
}

impl fmt::Display for RationalSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

pub fn slope_of(w: &FiniteWord) -> Result<RationalSlope, SturmianError> {
    require_binary(w)?;
    if w.is_empty() {
        return Err(WordError::EmptyWord.into());
    }
    let ones = w.count(1) as u64;
    let len = w.len() as u64;
    let g = ones.gcd(&len);
    Ok(RationalSlope {
        numerator: ones / g,
        denominator: len / g,
    })
}

/// Exact length-`n` factors of any Sturmian word of the given slope.
pub fn sturmian_factor_slice(slope: &Slope, n: usize) -> Result<FactorSlice, SturmianError> {
    slope.validate()?;
    let alphabet = Alphabet::binary();
    if n == 0 {
        return Ok(FactorSlice::from_words(&alphabet, 0, [Vec::new()])?);
    }
    let (p, q) = slope
        .convergents()
        .find(|&(_, q)| q > n as u128)
        .ok_or(crate::error::GenError::PrecisionOverflow(n))?;
    let (p, q) = (p as u64, q as u64);
    let cycle = christoffel_letters(q - p, p);
    let text: Vec<u8> = cycle.iter().chain(&cycle[..n - 1]).copied().collect();
    let mut slice = FactorSlice::of_word(
        &FiniteWord::from_letters_unchecked(alphabet, text),
        n,
    );
    slice.set_provenance(Provenance {
        prefix_len: q as usize + n - 1,
        evidence: Sufficiency::Approximant {
            p: p as u128,
            q: q as u128,
        },
    });
    Ok(slice)
}

/// Bispecial factors of length at most `max_len` of the Sturmian words of
/// this slope, shortest first, each with its central periods.
pub fn bispecial_factors(slope: &Slope, max_len: usize) -> Result<Vec<CentralWord>, SturmianError> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let extended = sturmian_factor_slice(slope, len + 1)?;
        for w in special_from(&extended, Side::Bi) {
            let central = is_central(&w)?.ok_or(SturmianError::NotCentral(w.to_string()))?;
            out.push(central);
        }
    }
    Ok(out)
}

pub fn bispecial_lengths(slope: &Slope, max_len: usize) -> Result<Vec<usize>, SturmianError> {
    Ok(bispecial_factors(slope, max_len)?
        .iter()
        .map(CentralWord::len)
        .collect())
}

/// Whether consecutive central words follow `p' = p + q`, `q' ∈ {p, q}`.
pub fn period_update_holds(chain: &[CentralWord]) -> bool {
    chain.windows(2).all(|pair| {
        let (p, q) = (pair[0].p, pair[0].q);
        let (a, b) = (pair[1].p, pair[1].q);
        a == p + q && (b == p || b == q)
    })
}

/// Inverse of `x` modulo `m`, if it exists.
pub fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    let e = (x as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}
