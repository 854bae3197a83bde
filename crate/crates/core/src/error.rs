use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols; at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("symbol {0:?} appears twice in the alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is reserved")]
    ReservedSymbol(char),
    #[error("symbol {symbol:?} is not in alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: String },
    #[error("letter index {0} is out of range for the alphabet")]
    LetterOutOfRange(u8),
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("words have mixed lengths ({0} and {1})")]
    MixedLengths(usize, usize),
    #[error("balance constant must be at least 1")]
    InvalidBalanceConstant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("morphism needs one image per symbol ({expected}), got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of symbol {0:?} is empty")]
    ErasingImage(char),
    #[error("seed {0:?} is not extendable: its image must start with it and have length at least 2")]
    SeedNotExtendable(char),
    #[error("slot map is not a bijection on the alphabet")]
    SlotNotBijection,
    #[error("substitution sequence must be non-empty")]
    EmptySequence,
    #[error("substitution {index} has empty prefix word u; the limit is not defined")]
    EmptyPrefixWord { index: usize },
    #[error("period must be non-empty")]
    EmptyPeriod,
    #[error("Toeplitz pattern {0:?} has no fixed symbol")]
    PatternWithoutSymbol(String),
    #[error("Toeplitz pattern must be non-empty")]
    EmptyPattern,
    #[error("partial quotients must be positive integers")]
    NonPositiveQuotient,
    #[error("slope has a finite continued fraction; use an ultimately periodic source")]
    RationalSlope,
    #[error("slope must lie strictly between 0 and 1")]
    SlopeOutOfRange,
    #[error("intercept must be a rational in [0, 1), got {0}")]
    InvalidIntercept(String),
    #[error("convergent denominators overflow 128-bit arithmetic at prefix length {0}")]
    PrecisionOverflow(usize),
    #[error("prefix length {requested} exceeds the budget of {budget} letters")]
    PrefixBudget { requested: usize, budget: usize },
    #[error("unknown named word {0:?}")]
    UnknownName(String),
    #[error("invalid word specification: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexityError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("factor set of length {n} did not stabilize within a prefix budget of {budget} letters")]
    BudgetExhausted { n: usize, budget: usize },
    #[error("factor length must be at least {min}, got {n}")]
    LengthTooSmall { n: usize, min: usize },
    #[error("operation is only defined for binary sources")]
    NotBinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SturmianError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Complexity(#[from] ComplexityError),
    #[error("({r}, {s}) is not a pair of coprime positive integers")]
    NotCoprime { r: u64, s: u64 },
    #[error("word is not over the binary alphabet")]
    NotBinary,
    #[error("bispecial factor {0:?} is not central")]
    NotCentral(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanguageError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("antidictionary must be non-empty")]
    EmptyAntidictionary,
    #[error("the empty word cannot be forbidden")]
    EmptyForbiddenWord,
    #[error("operation is only defined for binary languages")]
    NotBinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Complexity(#[from] ComplexityError),
    #[error(transparent)]
    Sturmian(#[from] SturmianError),
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid length range {0:?} (expected A..B, A..=B or N)")]
    InvalidRange(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("no word given; use a word name or a word specification")]
    MissingWord,
}
