//! Infinite words, exposed as deterministic prefix providers.
//!
//! Every family is reached through [`InfiniteWordSource`]; the concrete
//! constructions live in the submodules. Sources also advertise a
//! [`Certificate`] telling the complexity module how long a prefix must be
//! before every factor of a given length has appeared.

mod mechanical;
mod morphism;
mod periodic;
mod spec;
mod toeplitz;

use std::fmt;
use std::sync::{Arc, RwLock};

use crate::alphabet::Alphabet;
use crate::error::GenError;
use crate::word::FiniteWord;

pub use mechanical::{Intercept, Slope};
pub use morphism::{Morphism, Repetition, SlotSubstitution};
pub use spec::{NamedWord, SlotSpec, SubstitutionSpec, WordSpec};
pub use toeplitz::{paperfolding_stage, Fold, FoldSequence, ToeplitzPattern};

/// Largest prefix any source will materialize unless told otherwise.
pub const DEFAULT_PREFIX_LIMIT: usize = 1 << 26;

/// How a source can bound the prefix needed to see every factor of length n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// No structural bound; callers fall back to the doubling heuristic.
    None,
    /// `preperiod · period^ω`: a prefix of `preperiod + period + n - 1` is exact.
    Periodic { preperiod: usize, period: usize },
    /// Fixed point of a morphism with the given iterate lengths `|m^k(seed)|`.
    Morphic { stage_lengths: Vec<usize> },
    /// Mechanical word whose slope has these convergent denominators
    /// (`q_0 = 1, q_1 = a_1, ...`). Every factor of length n with
    /// `q_k <= n < q_{k+1}` occurs in each window of length
    /// `q_{k+1} + q_k + n - 1`.
    Sturmian { denominators: Vec<u128> },
}

pub(crate) trait PrefixGenerator: Send + Sync + fmt::Debug {
    /// First `len` letters. Must be deterministic and prefix-monotone.
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError>;

    fn certificate(&self) -> Certificate {
        Certificate::None
    }
}

/// A deterministic infinite word, queried through its prefixes.
///
/// Prefixes are memoized behind a lock; concurrent callers observe the same
/// letters.
pub struct InfiniteWordSource {
    id: String,
    alphabet: Alphabet,
    generator: Arc<dyn PrefixGenerator>,
    certificate: Certificate,
    cache: RwLock<Arc<Vec<u8>>>,
}

impl InfiniteWordSource {
    pub(crate) fn from_generator(
        id: impl Into<String>,
        alphabet: Alphabet,
        generator: impl PrefixGenerator + 'static,
    ) -> Self {
        let certificate = generator.certificate();
        Self {
            id: id.into(),
            alphabet,
            generator: Arc::new(generator),
            certificate,
            cache: RwLock::new(Arc::new(Vec::new())),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// First `len` letters as a word.
    pub fn prefix(&self, len: usize) -> Result<FiniteWord, GenError> {
        let letters = self.letters(len)?;
        Ok(FiniteWord::from_letters_unchecked(
            self.alphabet.clone(),
            letters[..len].to_vec(),
        ))
    }

    /// Shared buffer holding at least `len` letters of the word.
    pub fn letters(&self, len: usize) -> Result<Arc<Vec<u8>>, GenError> {
        {
            let cached = self.cache.read().expect("prefix cache poisoned");
            if cached.len() >= len {
                return Ok(Arc::clone(&cached));
            }
        }
        let mut cached = self.cache.write().expect("prefix cache poisoned");
        if cached.len() >= len {
            return Ok(Arc::clone(&cached));
        }
        // Grow geometrically so repeated small extensions stay linear overall.
        let target = len.max(cached.len().saturating_mul(2)).max(64);
        let letters = self.generator.generate(target)?;
        debug_assert!(letters.len() >= len);
        debug_assert!(letters.starts_with(&cached));
        *cached = Arc::new(letters);
        Ok(Arc::clone(&cached))
    }
}

impl fmt::Debug for InfiniteWordSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InfiniteWordSource")
            .field("id", &self.id)
            .field("alphabet", &self.alphabet)
            .field("generator", &self.generator)
            .finish()
    }
}

/// Fixed point of `m` starting with `seed`.
pub fn fixed_point(m: &Morphism, seed: char) -> Result<InfiniteWordSource, GenError> {
    morphism::fixed_point(m, seed)
}

/// Limit of `μ_1 ∘ μ_2 ∘ ⋯ ∘ μ_n(0)`.
pub fn s_adic_limit(
    sequence: Vec<SlotSubstitution>,
    repetition: Repetition,
) -> Result<InfiniteWordSource, GenError> {
    morphism::s_adic_limit(sequence, repetition)
}

/// Toeplitz word obtained by filling the holes of each pattern with the next one.
pub fn toeplitz(
    patterns: Vec<ToeplitzPattern>,
    repetition: Repetition,
) -> Result<InfiniteWordSource, GenError> {
    toeplitz::toeplitz(patterns, repetition)
}

pub fn paperfolding(folds: FoldSequence) -> InfiniteWordSource {
    toeplitz::paperfolding(folds)
}

/// Lower mechanical word of the given slope and intercept.
pub fn mechanical(slope: &Slope) -> Result<InfiniteWordSource, GenError> {
    mechanical::mechanical(slope)
}

pub fn ultimately_periodic(
    preperiod: &FiniteWord,
    period: &FiniteWord,
) -> Result<InfiniteWordSource, GenError> {
    periodic::ultimately_periodic(preperiod, period)
}
