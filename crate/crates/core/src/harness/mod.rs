//! Verification suites and tabular output.
//!
//! A suite evaluates a fixed list of claims about concrete words at bounded
//! lengths and reports every check with its parameters, the expected value
//! and what was observed. Claims about limits are only ever checked as
//! bounded-range evidence.
//!
//! Output is deterministic: the same configuration always produces the same
//! bytes. Wall-clock time is kept in [`SuiteReport::runtime`] and is not
//! serialized.

mod suites;

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::complexity::{Analyzer, DEFAULT_BUDGET};
use crate::error::{ComplexityError, HarnessError};
use crate::alphabet::Alphabet;
use crate::generators::{InfiniteWordSource, WordSpec};
use crate::languages::{mf_of_language, Antidictionary, FactorialLanguage};

/// Version of the JSON layout of reports and tables.
pub const SCHEMA_VERSION: u32 = 1;

/// Header of the CSV complexity table.
pub const CSV_HEADER: &str = "n,p,a,c,mf";

/// Provenance marker of a row whose factor set could not be certified.
pub const BUDGET_EXHAUSTED: &str = "budget-exhausted";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    Thm1,
    LemBalanced,
    LemBis2,
    Thm2Separation,
    PropUnif,
    PropMor,
    PropPaper,
    TmLemmas,
    Sec4Examples,
    Christoffel,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::Thm1,
        SuiteId::LemBalanced,
        SuiteId::LemBis2,
        SuiteId::Thm2Separation,
        SuiteId::PropUnif,
        SuiteId::PropMor,
        SuiteId::PropPaper,
        SuiteId::TmLemmas,
        SuiteId::Sec4Examples,
        SuiteId::Christoffel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SuiteId::Thm1 => "thm1",
            SuiteId::LemBalanced => "lem-balanced",
            SuiteId::LemBis2 => "lem-bis2",
            SuiteId::Thm2Separation => "thm2-separation",
            SuiteId::PropUnif => "prop-unif",
            SuiteId::PropMor => "prop-mor",
            SuiteId::PropPaper => "prop-paper",
            SuiteId::TmLemmas => "tm-lemmas",
            SuiteId::Sec4Examples => "sec4-examples",
            SuiteId::Christoffel => "christoffel",
        }
    }

    /// The claim the suite reproduces.
    pub fn anchor(self) -> &'static str {
        match self {
            SuiteId::Thm1 => {
                "a word is ultimately periodic if and only if it has bounded cyclic complexity"
            }
            SuiteId::LemBalanced => "bounded cyclic complexity C implies C-balanced",
            SuiteId::LemBis2 => {
                "Sturmian words: c(n) = 2 exactly when n = 1 or a bispecial factor of length n - 2 exists, with class sizes n and 1"
            }
            SuiteId::Thm2Separation => {
                "cyclic complexity determines the slope of a Sturmian word"
            }
            SuiteId::PropUnif => {
                "fixed points of u·a·v substitutions have c(k^n) = 2 with k = |u| + |v| + 1"
            }
            SuiteId::PropMor => {
                "limits of u_i·a·v_i substitution sequences have liminf c = 2"
            }
            SuiteId::PropPaper => "paperfolding words have c(4·2^n) = 4",
            SuiteId::TmLemmas => {
                "Thue-Morse: p and begin/end recurrences, f_aa, f_ab >= p/3 and >= n - 1, liminf c = +infinity"
            }
            SuiteId::Sec4Examples => {
                "equal cyclic complexity without isomorphic languages; equal mf complexity with different cyclic complexity"
            }
            SuiteId::Christoffel => "the (5,3)-Christoffel array and Christoffel array structure",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SuiteId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.id() == s)
            .ok_or_else(|| HarnessError::UnknownSuite(s.to_owned()))
    }
}

/// Inclusive range of lengths, written `A..B`, `A..=B` or `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthRange {
    pub start: usize,
    pub end: usize,
}

impl LengthRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for LengthRange {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::InvalidRange(s.to_owned());
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(bad());
        }
        Ok(Self { start, end })
    }
}

impl fmt::Display for LengthRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl Serialize for LengthRange {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LengthRange {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(HarnessError::Config(format!(
                "unknown format {other:?} (expected csv or json)"
            ))),
        }
    }
}

/// Size knobs of the suites. Defaults keep a full run within minutes on one core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Lengths searched for `c(n) >= thm1_target` on aperiodic words.
    pub thm1_max_n: usize,
    pub thm1_target: usize,
    /// Largest length checked for balance.
    pub balance_max_n: usize,
    /// Largest length for `p(n) = n + 1`, special factors and reversal closure.
    pub sturmian_max_n: usize,
    /// Largest length for the `c(n) = 2` characterization.
    pub bispecial_max_n: usize,
    pub separation_max_n: usize,
    /// Largest `k^n` tested for one-slot fixed points.
    pub unif_max_len: usize,
    /// Largest `|μ_1 ∘ ⋯ ∘ μ_n(0)|` tested for substitution sequences.
    pub mor_max_len: usize,
    /// Largest exponent `n` in `c(4·2^n)`.
    pub paper_max_exp: u32,
    /// Thue-Morse recurrences are checked for `2 <= n <= tm_max_n`.
    pub tm_max_n: usize,
    /// Dyadic ranges `[2^k, 2^(k+1))` for `k <= tm_max_k`.
    pub tm_max_k: u32,
    /// Largest `n` of the singleton-class construction at lengths `2n`, `2n + 1`.
    pub tm_class_max_n: usize,
    pub tau_max_n: usize,
    pub language_max_n: usize,
    pub christoffel_max_sum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            thm1_max_n: 4096,
            thm1_target: 8,
            balance_max_n: 80,
            sturmian_max_n: 256,
            bispecial_max_n: 200,
            separation_max_n: 512,
            unif_max_len: 16384,
            mor_max_len: 4096,
            paper_max_exp: 10,
            tm_max_n: 512,
            tm_max_k: 9,
            tm_class_max_n: 64,
            tau_max_n: 36,
            language_max_n: 12,
            christoffel_max_sum: 40,
        }
    }
}

/// Everything a run needs: which word, which lengths, which suites.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub word: Option<WordSpec>,
    pub n: Option<LengthRange>,
    pub format: Option<Format>,
    /// Longest prefix, in letters, read from any source.
    pub budget: Option<usize>,
    pub suites: Vec<SuiteId>,
    /// Forbidden words for the `language` command.
    pub forbidden: Option<Vec<String>>,
    pub limits: Limits,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn budget(&self) -> usize {
        self.budget.unwrap_or(DEFAULT_BUDGET)
    }

    pub fn source(&self) -> Result<InfiniteWordSource, HarnessError> {
        Ok(self.word.as_ref().ok_or(HarnessError::MissingWord)?.build()?)
    }
}

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub claim: String,
    pub parameters: Value,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(
        claim: impl Into<String>,
        parameters: Value,
        expected: Value,
        observed: Value,
        pass: bool,
    ) -> Self {
        Self {
            claim: claim.into(),
            parameters,
            expected,
            observed,
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: SuiteId,
    pub anchor: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Longest prefix read from each source, by source id.
    pub prefixes: BTreeMap<String, usize>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Shared state of one suite run.
pub(crate) struct Ctx<'a> {
    pub limits: &'a Limits,
    pub budget: usize,
    prefixes: RefCell<BTreeMap<String, usize>>,
}

impl<'a> Ctx<'a> {
    pub fn analyzer<'s>(&self, source: &'s InfiniteWordSource) -> Analyzer<'s> {
        Analyzer::with_budget(source, self.budget)
    }

    /// Records how much of a source an analyzer has read.
    pub fn note(&self, analyzer: &Analyzer<'_>) {
        let mut map = self.prefixes.borrow_mut();
        let entry = map.entry(analyzer.source().id().to_owned()).or_default();
        *entry = (*entry).max(analyzer.prefix_read());
    }
}

pub fn run_suite(id: SuiteId, cfg: &RunConfig) -> Result<SuiteReport, HarnessError> {
    let started = Instant::now();
    let ctx = Ctx {
        limits: &cfg.limits,
        budget: cfg.budget(),
        prefixes: RefCell::new(BTreeMap::new()),
    };
    let checks = match id {
        SuiteId::Thm1 => suites::thm1(&ctx)?,
        SuiteId::LemBalanced => suites::lem_balanced(&ctx)?,
        SuiteId::LemBis2 => suites::lem_bis2(&ctx)?,
        SuiteId::Thm2Separation => suites::thm2_separation(&ctx)?,
        SuiteId::PropUnif => suites::prop_unif(&ctx)?,
        SuiteId::PropMor => suites::prop_mor(&ctx)?,
        SuiteId::PropPaper => suites::prop_paper(&ctx)?,
        SuiteId::TmLemmas => suites::tm_lemmas(&ctx)?,
        SuiteId::Sec4Examples => suites::sec4_examples(&ctx)?,
        SuiteId::Christoffel => suites::christoffel(&ctx)?,
    };
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: id,
        anchor: id.anchor().to_owned(),
        pass: checks.iter().all(|c| c.pass),
        checks,
        prefixes: ctx.prefixes.into_inner(),
        runtime: started.elapsed(),
    })
}

/// One line of the complexity table; the counts are absent on a flagged row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub p: Option<usize>,
    pub a: Option<usize>,
    pub c: Option<usize>,
    pub mf: Option<usize>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityTable {
    pub schema_version: u32,
    pub word: String,
    pub rows: Vec<TableRow>,
}

impl ComplexityTable {
    /// Whether a row could not be certified within the budget.
    pub fn exhausted(&self) -> bool {
        self.rows.iter().any(|r| r.provenance == BUDGET_EXHAUSTED)
    }
}

/// Rows `(n, p, a, c, mf)` for the configured range.
///
/// When the budget runs out the offending length gets a flagged row and no
/// longer lengths are attempted; other errors abort the run.
pub fn run_complexity(cfg: &RunConfig) -> Result<ComplexityTable, HarnessError> {
    let source = cfg.source()?;
    let range = cfg.n.unwrap_or(LengthRange { start: 1, end: 16 });
    let mut analyzer = Analyzer::with_budget(&source, cfg.budget());
    let mut rows = Vec::new();
    for n in range.iter() {
        match analyzer.row(n) {
            Ok(row) => rows.push(TableRow {
                n,
                p: Some(row.p),
                a: Some(row.a),
                c: Some(row.c),
                mf: Some(row.mf),
                provenance: row.provenance,
            }),
            Err(ComplexityError::BudgetExhausted { .. }) => {
                rows.push(TableRow {
                    n,
                    p: None,
                    a: None,
                    c: None,
                    mf: None,
                    provenance: BUDGET_EXHAUSTED.to_owned(),
                });
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(ComplexityTable {
        schema_version: SCHEMA_VERSION,
        word: source.id().to_owned(),
        rows,
    })
}

/// Rows `(n, p, a, c, mf)` of the factorial language avoiding `cfg.forbidden`.
pub fn run_language(cfg: &RunConfig) -> Result<ComplexityTable, HarnessError> {
    let words = cfg
        .forbidden
        .as_ref()
        .ok_or_else(|| HarnessError::Config("missing forbidden words".into()))?;
    let anti = Antidictionary::parse(&Alphabet::binary(), words)?;
    let language = FactorialLanguage::from_forbidden(anti);
    let range = cfg.n.unwrap_or(LengthRange { start: 1, end: 16 });
    let rows = range
        .iter()
        .map(|n| {
            let slice = language.factor_slice(n);
            TableRow {
                n,
                p: Some(slice.len()),
                a: Some(slice.abelian_count()),
                c: Some(slice.classes().count()),
                mf: Some(mf_of_language(&language, n).len()),
                provenance: "antidictionary".to_owned(),
            }
        })
        .collect();
    Ok(ComplexityTable {
        schema_version: SCHEMA_VERSION,
        word: format!("L({})", words.join(",")),
        rows,
    })
}

fn cell(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn emit_table(table: &ComplexityTable, format: Format) -> String {
    match format {
        Format::Json => to_json(table),
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in &table.rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    cell(r.p),
                    cell(r.a),
                    cell(r.c),
                    cell(r.mf)
                ));
            }
            out
        }
    }
}

pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut out = String::from("suite,claim,parameters,expected,observed,pass\n");
            for c in &report.checks {
                let fields = [
                    report.suite.id().to_owned(),
                    c.claim.clone(),
                    c.parameters.to_string(),
                    c.expected.to_string(),
                    c.observed.to_string(),
                    c.pass.to_string(),
                ];
                let line: Vec<String> = fields.iter().map(|f| csv_quote(f)).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::NamedWord;

    fn cfg(word: NamedWord, range: &str) -> RunConfig {
        RunConfig {
            word: Some(WordSpec::Named { name: word }),
            n: Some(range.parse().unwrap()),
            ..RunConfig::default()
        }
    }

    #[test]
    fn ranges() {
        assert_eq!("1..8".parse::<LengthRange>().unwrap().iter().count(), 8);
        assert_eq!(
            "3..=5".parse::<LengthRange>().unwrap(),
            LengthRange { start: 3, end: 5 }
        );
        assert_eq!("7".parse::<LengthRange>().unwrap().end, 7);
        assert!("5..3".parse::<LengthRange>().is_err());
        assert!("x..3".parse::<LengthRange>().is_err());
    }

    #[test]
    fn thue_morse_row() {
        let t = run_complexity(&cfg(NamedWord::ThueMorse, "4..4")).unwrap();
        let r = &t.rows[0];
        assert_eq!((r.n, r.p, r.a, r.c), (4, Some(10), Some(3), Some(4)));
        let csv = emit_table(&t, Format::Csv);
        assert!(csv.starts_with("n,p,a,c,mf\n4,10,3,4,"));
    }

    #[test]
    fn fibonacci_and_constant_rows() {
        let t = run_complexity(&cfg(NamedWord::Fibonacci, "1..8")).unwrap();
        assert!(t.rows.iter().all(|r| r.p == Some(r.n + 1)));
        let t = run_complexity(&cfg(NamedWord::Constant, "1..20")).unwrap();
        assert!(t
            .rows
            .iter()
            .all(|r| (r.p, r.a, r.c) == (Some(1), Some(1), Some(1))));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let mut c = cfg(NamedWord::ThueMorse, "1..400");
        c.budget = Some(2000);
        let t = run_complexity(&c).unwrap();
        assert!(t.exhausted());
        let last = t.rows.last().unwrap();
        assert_eq!(last.provenance, BUDGET_EXHAUSTED);
        assert_eq!(last.p, None);
        assert!(emit_table(&t, Format::Json).contains("\"provenance\": \"budget-exhausted\""));
    }

    #[test]
    fn strict_config() {
        let ok = RunConfig::from_json(
            r#"{"word": {"kind": "named", "name": "fibonacci"}, "n": "1..4", "format": "json"}"#,
        )
        .unwrap();
        assert_eq!(ok.format, Some(Format::Json));
        assert!(RunConfig::from_json(r#"{"wrod": 1}"#).is_err());
        assert!(RunConfig::from_json(r#"{"limits": {"tm_max_kk": 3}}"#).is_err());
        assert!(RunConfig::from_json(r#"{"suites": ["thm9"]}"#).is_err());
    }

    #[test]
    fn output_is_deterministic() {
        let c = cfg(NamedWord::RegularPaperfolding, "1..30");
        let a = emit_table(&run_complexity(&c).unwrap(), Format::Json);
        let b = emit_table(&run_complexity(&c).unwrap(), Format::Json);
        assert_eq!(a, b);
        let r1 = emit_report(&run_suite(SuiteId::Christoffel, &RunConfig::default()).unwrap(), Format::Json);
        let r2 = emit_report(&run_suite(SuiteId::Christoffel, &RunConfig::default()).unwrap(), Format::Json);
        assert_eq!(r1, r2);
        assert!(r1.contains("\"suite\": \"christoffel\""));
        assert!(r1.contains("\"checks\""));
        assert!(r1.contains("\"schema_version\": 1"));
    }

    #[test]
    fn language_rows() {
        let c = RunConfig {
            forbidden: Some(vec!["11".into(), "000".into()]),
            n: Some("5".parse().unwrap()),
            ..RunConfig::default()
        };
        let t = run_language(&c).unwrap();
        assert_eq!((t.rows[0].p, t.rows[0].c), (Some(7), Some(3)));
        assert_eq!(t.word, "L(11,000)");
    }

    #[test]
    fn suite_ids_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.id().parse::<SuiteId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.id()));
        }
        assert!("nope".parse::<SuiteId>().is_err());
    }
}
