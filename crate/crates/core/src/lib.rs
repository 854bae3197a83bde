//! Factor, abelian, cyclic and minimal-forbidden-factor complexity of words.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`word`], [`rotation`] and [`alphabet`]: finite words, Parikh vectors,
//!   least rotations, periods and balance.
//! * [`generators`]: infinite words (morphic fixed points, S-adic limits,
//!   Toeplitz and paperfolding words, mechanical words, ultimately periodic
//!   words) behind a single prefix-provider type.
//! * [`complexity`]: exact factor enumeration and the complexity functions
//!   `p`, `a`, `c` and `mf`.
//! * [`sturmian`]: central words, Christoffel words and arrays, bispecial
//!   factors of Sturmian words.
//! * [`languages`]: factorial languages given by finite antidictionaries.
//! * [`harness`]: named verification suites and machine-readable reports.

pub mod alphabet;
pub mod complexity;
pub mod error;
pub mod generators;
pub mod harness;
pub mod languages;
pub mod rotation;
pub mod sturmian;
pub mod word;

pub use alphabet::Alphabet;
pub use error::{
    ComplexityError, GenError, HarnessError, LanguageError, SturmianError, WordError,
};
pub use generators::{InfiniteWordSource, NamedWord, WordSpec};
pub use rotation::{are_conjugate, canonical_rotation, ConjugacyInventory};
pub use word::{FiniteWord, ParikhVector};
