use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{InfiniteWordSource, PrefixGenerator, Repetition};
use crate::alphabet::Alphabet;
use crate::error::GenError;
use crate::word::FiniteWord;

/// One period of a Toeplitz pattern; `None` marks a hole (`?`).
#[derive(Clone, PartialEq, Eq)]
pub struct ToeplitzPattern {
    alphabet: Alphabet,
    cells: Vec<Option<u8>>,
}

impl ToeplitzPattern {
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, GenError> {
        if text.is_empty() {
            return Err(GenError::EmptyPattern);
        }
        let cells = text
            .chars()
            .map(|c| {
                if c == '?' {
                    Ok(None)
                } else {
                    alphabet.encode(&c.to_string()).map(|l| Some(l[0]))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if cells.iter().all(Option::is_none) {
            return Err(GenError::PatternWithoutSymbol(text.to_owned()));
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            cells,
        })
    }

    pub fn cells(&self) -> &[Option<u8>] {
        &self.cells
    }
}

impl FromStr for ToeplitzPattern {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(&Alphabet::binary(), s)
    }
}

impl fmt::Display for ToeplitzPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cell in &self.cells {
            match cell {
                Some(l) => write!(f, "{}", self.alphabet.symbol(*l))?,
                None => f.write_str("?")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ToeplitzPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ToeplitzPattern({self})")
    }
}

#[derive(Debug)]
struct Toeplitz {
    patterns: Vec<ToeplitzPattern>,
    repetition: Repetition,
}

impl Toeplitz {
    /// Stages needed before the pattern sequence starts repeating itself.
    fn cycle_len(&self) -> usize {
        match self.repetition {
            Repetition::Cycle => self.patterns.len(),
            Repetition::RepeatLast => 1,
        }
    }
}

impl PrefixGenerator for Toeplitz {
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        let mut out = vec![0u8; len];
        let mut holes: Vec<usize> = (0..len).collect();
        let mut stage = 0;
        let mut last_progress = (0, holes.len());
        while !holes.is_empty() {
            let cells = self.repetition.pick(&self.patterns, stage).cells();
            let mut next = Vec::with_capacity(holes.len() / 2 + 1);
            for (t, &pos) in holes.iter().enumerate() {
                match cells[t % cells.len()] {
                    Some(l) => out[pos] = l,
                    None => next.push(pos),
                }
            }
            holes = next;
            stage += 1;
            if holes.len() < last_progress.1 {
                last_progress = (stage, holes.len());
            } else if stage >= self.patterns.len()
                && stage - last_progress.0 >= self.cycle_len()
            {
                // The remaining holes only ever meet `?` cells.
                return Err(GenError::PatternWithoutSymbol(
                    self.repetition.pick(&self.patterns, stage).to_string(),
                ));
            }
        }
        Ok(out)
    }
}

pub(super) fn toeplitz(
    patterns: Vec<ToeplitzPattern>,
    repetition: Repetition,
) -> Result<InfiniteWordSource, GenError> {
    let first = patterns.first().ok_or(GenError::EmptySequence)?;
    let alphabet = first.alphabet.clone();
    if patterns.iter().any(|p| p.alphabet != alphabet) {
        return Err(crate::error::WordError::AlphabetMismatch.into());
    }
    let id = format!(
        "toeplitz[{}]",
        patterns
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(InfiniteWordSource::from_generator(
        id,
        alphabet,
        Toeplitz {
            patterns,
            repetition,
        },
    ))
}

/// A folding rule: `τ(ab) = 0a1b` or `τ̄(ab) = 1a0b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fold {
    Tau,
    TauBar,
}

impl Fold {
    /// Letters placed at positions `≡ 0` and `≡ 2 (mod 4)`.
    fn letters(self) -> (u8, u8) {
        match self {
            Fold::Tau => (0, 1),
            Fold::TauBar => (1, 0),
        }
    }

    /// Applies the rule to a word of even length.
    pub fn apply(self, letters: &[u8]) -> Vec<u8> {
        let (a, b) = self.letters();
        let mut out = Vec::with_capacity(letters.len() * 2);
        for pair in letters.chunks(2) {
            out.push(a);
            out.push(pair[0]);
            out.push(b);
            if let Some(&second) = pair.get(1) {
                out.push(second);
            }
        }
        out
    }

    pub fn pattern(self) -> ToeplitzPattern {
        match self {
            Fold::Tau => "0?1?".parse().expect("valid pattern"),
            Fold::TauBar => "1?0?".parse().expect("valid pattern"),
        }
    }
}

/// An infinite sequence of folds given as a finite list plus a repetition policy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldSequence {
    pub folds: Vec<Fold>,
    #[serde(default)]
    pub repetition: Repetition,
}

impl FoldSequence {
    pub fn new(folds: Vec<Fold>, repetition: Repetition) -> Result<Self, GenError> {
        if folds.is_empty() {
            return Err(GenError::EmptySequence);
        }
        Ok(Self { folds, repetition })
    }

    /// All folds equal to τ: the regular paperfolding word.
    pub fn regular() -> Self {
        Self {
            folds: vec![Fold::Tau],
            repetition: Repetition::Cycle,
        }
    }

    pub fn constant(fold: Fold) -> Self {
        Self {
            folds: vec![fold],
            repetition: Repetition::Cycle,
        }
    }

    /// τ, τ̄, τ, τ̄, ... (or starting with τ̄).
    pub fn alternating(first: Fold) -> Self {
        let second = match first {
            Fold::Tau => Fold::TauBar,
            Fold::TauBar => Fold::Tau,
        };
        Self {
            folds: vec![first, second],
            repetition: Repetition::Cycle,
        }
    }

    pub fn get(&self, index: usize) -> Fold {
        *self.repetition.pick(&self.folds, index)
    }

    pub fn patterns(&self) -> (Vec<ToeplitzPattern>, Repetition) {
        (
            self.folds.iter().map(|f| f.pattern()).collect(),
            self.repetition,
        )
    }
}

#[derive(Debug)]
struct Paperfolding {
    folds: FoldSequence,
}

impl PrefixGenerator for Paperfolding {
    // Position i (0-based): strip trailing 1-bits of i to find the fold level
    // and the index j at that level; even-position letters of each level come
    // from that level's fold.
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        Ok((0..len)
            .map(|i| {
                let level = (i as u64).trailing_ones() as usize;
                let j = i >> level;
                let (a, b) = self.folds.get(level).letters();
                if j.is_multiple_of(4) {
                    a
                } else {
                    b
                }
            })
            .collect())
    }
}

pub(super) fn paperfolding(folds: FoldSequence) -> InfiniteWordSource {
    let id = format!(
        "paperfolding[{}]",
        folds
            .folds
            .iter()
            .map(|f| match f {
                Fold::Tau => "t",
                Fold::TauBar => "T",
            })
            .collect::<String>()
    );
    InfiniteWordSource::from_generator(id, Alphabet::binary(), Paperfolding { folds })
}

/// `τ_0 ∘ τ_1 ∘ ⋯ ∘ τ_{n-1}(00)`, the n-th approximation of the paperfolding
/// word. For a constant fold sequence this is the plain iterate `τ^n(00)`.
pub fn paperfolding_stage(folds: &FoldSequence, n: usize) -> FiniteWord {
    let mut w = vec![0u8, 0u8];
    for level in (0..n).rev() {
        w = folds.get(level).apply(&w);
    }
    FiniteWord::from_letters_unchecked(Alphabet::binary(), w)
}
