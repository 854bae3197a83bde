//! JSON word specifications.
//!
//! ```json
//! {"kind": "fixed_point", "images": ["01", "10"], "seed": "0"}
//! {"kind": "fixed_point", "substitution": {"u": "0", "slot": "swap"}, "seed": "0"}
//! {"kind": "s_adic", "substitutions": [{"u": "01"}], "repetition": "cycle"}
//! {"kind": "toeplitz", "patterns": ["0?1?"]}
//! {"kind": "paperfolding", "folds": ["tau", "tau_bar"], "repetition": "cycle"}
//! {"kind": "mechanical", "head": [2], "tail": [1], "intercept": "characteristic"}
//! {"kind": "ultimately_periodic", "preperiod": "1", "period": "0"}
//! {"kind": "named", "name": "thue-morse"}
//! ```
//!
//! `alphabet` (a string of symbols, default `"01"`) is accepted by every kind
//! that spells out words. Unknown keys are rejected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    fixed_point, mechanical, paperfolding, s_adic_limit, toeplitz, ultimately_periodic, Fold,
    FoldSequence, InfiniteWordSource, Intercept, Morphism, Repetition, Slope, SlotSubstitution,
    ToeplitzPattern,
};
use crate::alphabet::Alphabet;
use crate::error::GenError;
use crate::word::FiniteWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SlotSpec {
    Named(SlotName),
    Permutation(Vec<u8>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotName {
    Identity,
    Swap,
}

impl Default for SlotSpec {
    fn default() -> Self {
        SlotSpec::Named(SlotName::Identity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionSpec {
    pub u: String,
    #[serde(default)]
    pub v: String,
    #[serde(default)]
    pub slot: SlotSpec,
}

impl SubstitutionSpec {
    fn build(&self, alphabet: &Alphabet) -> Result<SlotSubstitution, GenError> {
        let slot = match &self.slot {
            SlotSpec::Named(SlotName::Identity) => (0..alphabet.len() as u8).collect(),
            SlotSpec::Named(SlotName::Swap) => {
                if !alphabet.is_binary() {
                    return Err(GenError::InvalidSpec(
                        "slot \"swap\" needs a binary alphabet".into(),
                    ));
                }
                vec![1, 0]
            }
            SlotSpec::Permutation(p) => p.clone(),
        };
        SlotSubstitution::new(
            &FiniteWord::parse(alphabet, &self.u)?,
            &FiniteWord::parse(alphabet, &self.v)?,
            slot,
        )
    }
}

fn binary() -> Alphabet {
    Alphabet::binary()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WordSpec {
    FixedPoint {
        #[serde(default = "binary")]
        alphabet: Alphabet,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        images: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        substitution: Option<SubstitutionSpec>,
        seed: char,
    },
    SAdic {
        #[serde(default = "binary")]
        alphabet: Alphabet,
        substitutions: Vec<SubstitutionSpec>,
        #[serde(default)]
        repetition: Repetition,
    },
    Toeplitz {
        #[serde(default = "binary")]
        alphabet: Alphabet,
        patterns: Vec<String>,
        #[serde(default)]
        repetition: Repetition,
    },
    Paperfolding {
        folds: Vec<Fold>,
        #[serde(default)]
        repetition: Repetition,
    },
    Mechanical {
        #[serde(default)]
        head: Vec<u64>,
        tail: Vec<u64>,
        #[serde(default)]
        intercept: Intercept,
    },
    UltimatelyPeriodic {
        #[serde(default = "binary")]
        alphabet: Alphabet,
        #[serde(default)]
        preperiod: String,
        period: String,
    },
    Named {
        name: NamedWord,
    },
}

impl WordSpec {
    pub fn from_json(text: &str) -> Result<Self, GenError> {
        serde_json::from_str(text).map_err(|e| GenError::InvalidSpec(e.to_string()))
    }

    pub fn build(&self) -> Result<InfiniteWordSource, GenError> {
        match self {
            WordSpec::FixedPoint {
                alphabet,
                images,
                substitution,
                seed,
            } => {
                let m = match (images, substitution) {
                    (Some(images), None) => Morphism::new(
                        alphabet.clone(),
                        images
                            .iter()
                            .map(|i| FiniteWord::parse(alphabet, i))
                            .collect::<Result<_, _>>()?,
                    )?,
                    (None, Some(sub)) => sub.build(alphabet)?.to_morphism(),
                    _ => {
                        return Err(GenError::InvalidSpec(
                            "fixed_point needs exactly one of `images` or `substitution`".into(),
                        ))
                    }
                };
                fixed_point(&m, *seed)
            }
            WordSpec::SAdic {
                alphabet,
                substitutions,
                repetition,
            } => s_adic_limit(
                substitutions
                    .iter()
                    .map(|s| s.build(alphabet))
                    .collect::<Result<_, _>>()?,
                *repetition,
            ),
            WordSpec::Toeplitz {
                alphabet,
                patterns,
                repetition,
            } => toeplitz(
                patterns
                    .iter()
                    .map(|p| ToeplitzPattern::parse(alphabet, p))
                    .collect::<Result<_, _>>()?,
                *repetition,
            ),
            WordSpec::Paperfolding { folds, repetition } => {
                Ok(paperfolding(FoldSequence::new(folds.clone(), *repetition)?))
            }
            WordSpec::Mechanical {
                head,
                tail,
                intercept,
            } => mechanical(&Slope::new(head.clone(), tail.clone())?.with_intercept(*intercept)?),
            WordSpec::UltimatelyPeriodic {
                alphabet,
                preperiod,
                period,
            } => ultimately_periodic(
                &FiniteWord::parse(alphabet, preperiod)?,
                &FiniteWord::parse(alphabet, period)?,
            ),
            WordSpec::Named { name } => Ok(name.source()),
        }
    }
}

/// Built-in words, addressable by name from the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedWord {
    ThueMorse,
    Fibonacci,
    PeriodDoubling,
    RegularPaperfolding,
    AlternatingPaperfolding,
    /// Fibonacci slope `[0; 2, 1, 1, ...]` as a mechanical word.
    FibonacciMechanical,
    /// `√2 - 1 = [0; 2, 2, 2, ...]`.
    Silver,
    /// `[0; 3, 1, 1, ...]`.
    Sturmian31,
    /// `1/√2 = [0; 1, 2, 2, ...]`.
    InverseSqrt2,
    /// Fixed point of `0 ↦ 010, 1 ↦ 011`.
    OneSlot3,
    Constant,
    Alternating,
    /// `τ((010011)^ω)` with `τ: 0 ↦ 010, 1 ↦ 011`.
    TauX,
    /// `τ((101100)^ω)`.
    TauXPrime,
}

impl NamedWord {
    pub const ALL: [NamedWord; 14] = [
        NamedWord::ThueMorse,
        NamedWord::Fibonacci,
        NamedWord::PeriodDoubling,
        NamedWord::RegularPaperfolding,
        NamedWord::AlternatingPaperfolding,
        NamedWord::FibonacciMechanical,
        NamedWord::Silver,
        NamedWord::Sturmian31,
        NamedWord::InverseSqrt2,
        NamedWord::OneSlot3,
        NamedWord::Constant,
        NamedWord::Alternating,
        NamedWord::TauX,
        NamedWord::TauXPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedWord::ThueMorse => "thue-morse",
            NamedWord::Fibonacci => "fibonacci",
            NamedWord::PeriodDoubling => "period-doubling",
            NamedWord::RegularPaperfolding => "regular-paperfolding",
            NamedWord::AlternatingPaperfolding => "alternating-paperfolding",
            NamedWord::FibonacciMechanical => "fibonacci-mechanical",
            NamedWord::Silver => "silver",
            NamedWord::Sturmian31 => "sturmian-31",
            NamedWord::InverseSqrt2 => "inverse-sqrt2",
            NamedWord::OneSlot3 => "one-slot-3",
            NamedWord::Constant => "constant",
            NamedWord::Alternating => "alternating",
            NamedWord::TauX => "tau-x",
            NamedWord::TauXPrime => "tau-x-prime",
        }
    }

    pub fn spec(self) -> WordSpec {
        let slope = |head: Vec<u64>, tail: Vec<u64>| WordSpec::Mechanical {
            head,
            tail,
            intercept: Intercept::Characteristic,
        };
        let periodic = |period: &str| WordSpec::UltimatelyPeriodic {
            alphabet: Alphabet::binary(),
            preperiod: String::new(),
            period: period.into(),
        };
        let images = |a: &str, b: &str| WordSpec::FixedPoint {
            alphabet: Alphabet::binary(),
            images: Some(vec![a.into(), b.into()]),
            substitution: None,
            seed: '0',
        };
        match self {
            NamedWord::ThueMorse => images("01", "10"),
            NamedWord::Fibonacci => images("01", "0"),
            NamedWord::PeriodDoubling => WordSpec::FixedPoint {
                alphabet: Alphabet::binary(),
                images: None,
                substitution: Some(SubstitutionSpec {
                    u: "0".into(),
                    v: String::new(),
                    slot: SlotSpec::Named(SlotName::Swap),
                }),
                seed: '0',
            },
            NamedWord::RegularPaperfolding => WordSpec::Paperfolding {
                folds: vec![Fold::Tau],
                repetition: Repetition::Cycle,
            },
            NamedWord::AlternatingPaperfolding => WordSpec::Paperfolding {
                folds: vec![Fold::Tau, Fold::TauBar],
                repetition: Repetition::Cycle,
            },
            NamedWord::FibonacciMechanical => slope(vec![2], vec![1]),
            NamedWord::Silver => slope(vec![], vec![2]),
            NamedWord::Sturmian31 => slope(vec![3], vec![1]),
            NamedWord::InverseSqrt2 => slope(vec![1], vec![2]),
            NamedWord::OneSlot3 => images("010", "011"),
            NamedWord::Constant => periodic("0"),
            NamedWord::Alternating => periodic("01"),
            NamedWord::TauX => periodic("010011010010011011"),
            NamedWord::TauXPrime => periodic("011010011011010010"),
        }
    }

    /// Slope of the Sturmian words in the catalog.
    pub fn slope(self) -> Option<Slope> {
        match self.spec() {
            WordSpec::Mechanical {
                head,
                tail,
                intercept,
            } => Some(Slope {
                head,
                tail,
                intercept,
            }),
            _ if self == NamedWord::Fibonacci => Some(Slope::fibonacci()),
            _ => None,
        }
    }

    pub fn is_ultimately_periodic(self) -> bool {
        matches!(self.spec(), WordSpec::UltimatelyPeriodic { .. })
    }

    pub fn source(self) -> InfiniteWordSource {
        self.spec()
            .build()
            .expect("built-in word specifications are valid")
            .with_id(self.name())
    }
}

impl fmt::Display for NamedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedWord {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedWord::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| GenError::UnknownName(s.to_owned()))
    }
}
