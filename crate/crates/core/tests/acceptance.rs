//! Acceptance criteria. One test runs every criterion in sequence so the
//! time limits are measured without contention, printing one line each:
//!
//! ```text
//! cargo test -p cyclic-words --test acceptance -- --nocapture
//! ```

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::{
    abelian, all_words, bits, central_by_conjugacy, central_by_least_conjugate,
    central_by_palindrome, central_by_periods, central_by_split, cyclic, least_rotation,
    minimal_forbidden, windows,
};
use cyclic_words::complexity::{begin_end_of, Analyzer};
use cyclic_words::generators::{
    fixed_point, paperfolding, toeplitz, ultimately_periodic, Certificate, Fold, FoldSequence,
    SlotSubstitution,
};
use cyclic_words::languages::{cyclic_complexity_L, from_forbidden, Antidictionary};
use cyclic_words::sturmian::{bispecial_lengths, christoffel_array, christoffel_word};
use cyclic_words::word::periods;
use cyclic_words::{canonical_rotation, Alphabet, FiniteWord, NamedWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fw(letters: &[u8]) -> FiniteWord {
    FiniteWord::new(Alphabet::binary(), letters.to_vec()).unwrap()
}

fn c_of(an: &mut Analyzer<'_>, n: usize) -> usize {
    an.cyclic_classes(n).unwrap().count()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn christoffel() -> Outcome {
    let rows: Vec<String> = christoffel_array(5, 3)
        .unwrap()
        .rows
        .iter()
        .map(|r| r.to_string())
        .collect();
    let figure = [
        "00100101", "00101001", "01001001", "01001010", "01010010", "10010010", "10010100",
        "10100100",
    ];
    let mut pairs = 0;
    let mut bad = Vec::new();
    for total in 2..=40u64 {
        for r in 1..total {
            let s = total - r;
            if gcd(r, s) != 1 {
                continue;
            }
            pairs += 1;
            let a = christoffel_array(r, s).unwrap();
            let w = christoffel_word(r, s).unwrap();
            let first: String = "0".repeat(r as usize) + &"1".repeat(s as usize);
            let last: String = "1".repeat(s as usize) + &"0".repeat(r as usize);
            let ok = a.is_sorted()
                && a.rows_conjugate()
                && a.adjacent_swaps()
                && a.columns_conjugate()
                && a.column(0).to_string() == first
                && a.column(a.size() - 1).to_string() == last
                && a.rows[0] == w
                && least_rotation(w.letters()) == w.letters();
            if !ok {
                bad.push((r, s));
            }
        }
    }
    outcome(
        rows == figure && bad.is_empty(),
        format!("A(5,3) exact: {}; {pairs} coprime pairs, violations {bad:?}", rows == figure),
    )
}

fn antidictionary_pair() -> Outcome {
    let alphabet = Alphabet::binary();
    let x = from_forbidden(Antidictionary::parse(&alphabet, &["11", "000"]).unwrap());
    let y = from_forbidden(Antidictionary::parse(&alphabet, &["11", "101"]).unwrap());
    let (cx, _) = cyclic_complexity_L(&x, 5);
    let (cy, _) = cyclic_complexity_L(&y, 5);
    let slice = x.slice(5).len();
    outcome(
        (cx, cy, slice) == (3, 4, 7),
        format!("c_L(5) = ({cx}, {cy}), |slice| = {slice}"),
    )
}

fn tau_pair() -> Outcome {
    let (x, y) = (NamedWord::TauX.source(), NamedWord::TauXPrime.source());
    let (mut ax, mut ay) = (Analyzer::new(&x), Analyzer::new(&y));
    let mut equal = true;
    let mut sx = Vec::new();
    let mut sy = Vec::new();
    for n in 1..=36 {
        let (fx, fy) = (ax.factors(n).unwrap(), ay.factors(n).unwrap());
        equal &= fx.classes().count() == fy.classes().count();
        sx.push(fx.windows().map(<[u8]>::to_vec).collect::<BTreeSet<_>>());
        sy.push(fy.windows().map(<[u8]>::to_vec).collect::<BTreeSet<_>>());
    }
    let mut separated = true;
    for swap in [false, true] {
        for mirror in [false, true] {
            let same = sx.iter().zip(&sy).all(|(a, b)| {
                let img: BTreeSet<Vec<u8>> = a
                    .iter()
                    .map(|w| {
                        let mut v: Vec<u8> = w.iter().map(|&c| c ^ swap as u8).collect();
                        if mirror {
                            v.reverse();
                        }
                        v
                    })
                    .collect();
                img == *b
            });
            separated &= !same;
        }
    }
    let px = periods(&x.prefix(72).unwrap()).unwrap()[0];
    let py = periods(&y.prefix(72).unwrap()).unwrap()[0];
    outcome(
        equal && separated && (px, py) == (18, 18),
        format!("equal c: {equal}; separated under all 4 transforms: {separated}; periods ({px}, {py})"),
    )
}

fn thue_morse() -> Outcome {
    let src = NamedWord::ThueMorse.source();
    let mut an = Analyzer::new(&src);
    let four: BTreeSet<String> = an.factors(4).unwrap().words().map(|w| w.to_string()).collect();
    let even = ["0101", "0110", "1001", "1010"];
    let odd = ["0010", "0011", "0100", "1011", "1100", "1101"];
    let listed: BTreeSet<String> = even.iter().chain(&odd).map(|s| s.to_string()).collect();
    let prefix = src.prefix(1 << 14).unwrap().into_letters();
    let mut seen: BTreeMap<Vec<u8>, [bool; 2]> = BTreeMap::new();
    for (i, w) in prefix.windows(4).enumerate() {
        seen.entry(w.to_vec()).or_default()[i % 2] = true;
    }
    let parity_ok = even.iter().all(|w| seen[&bits(w)] == [true, false])
        && odd.iter().all(|w| seen[&bits(w)] == [false, true]);

    let mut p = vec![0usize; 1026];
    let mut f = vec![(0usize, 0usize); 1026];
    for n in 1..=1025 {
        let s = an.factors(n).unwrap();
        p[n] = s.len();
        f[n] = begin_end_of(&s);
    }
    let recurrences = (2..=512).all(|n| {
        let ((aa, ab), (aa1, ab1)) = (f[n], f[n + 1]);
        p[2 * n] == p[n] + p[n + 1]
            && p[2 * n + 1] == 2 * p[n + 1]
            && f[2 * n] == (ab + ab1, aa + aa1)
            && f[2 * n + 1] == (2 * aa1, 2 * ab1)
            && 3 * aa >= p[n]
            && 3 * ab >= p[n]
            && aa + 1 >= n
            && ab + 1 >= n
    });
    let minima: Vec<usize> = (0..=9)
        .map(|k| (1usize << k..1 << (k + 1)).map(|n| c_of(&mut an, n)).min().unwrap())
        .collect();
    let growth = minima.windows(2).all(|w| w[0] <= w[1]) && minima[5] >= 4;
    outcome(
        four == listed && parity_ok && recurrences && growth,
        format!(
            "factors(4) listed: {}; parity split: {parity_ok}; recurrences and bounds n <= 512: {recurrences}; dyadic minima {minima:?}",
            four == listed
        ),
    )
}

fn sturmian() -> Outcome {
    let words = [
        NamedWord::Fibonacci,
        NamedWord::Silver,
        NamedWord::Sturmian31,
        NamedWord::InverseSqrt2,
    ];
    let mut report = Vec::new();
    let mut all = true;
    for name in words {
        let src = name.source();
        let slope = name.slope().unwrap();
        let mut an = Analyzer::new(&src);
        let lengths: BTreeSet<usize> = bispecial_lengths(&slope, 200).unwrap().into_iter().collect();
        let mut ok = true;
        for n in 1..=256 {
            let slice = an.factors(n).unwrap();
            ok &= slice.len() == n + 1;
            let set = slice.to_set();
            ok &= set.iter().all(|w| set.contains(&w.reverse()));
            if n <= 200 {
                let classes = slice.classes();
                let predicted = n == 1 || lengths.contains(&(n - 2));
                ok &= (classes.count() == 2) == predicted;
                if predicted {
                    ok &= classes.sorted_sizes() == vec![n, 1];
                }
            }
        }
        all &= ok;
        report.push(format!("{}: {ok}", name.name()));
    }
    outcome(all, report.join(", "))
}

fn one_slot() -> Outcome {
    let pd = NamedWord::PeriodDoubling.source();
    let mut an = Analyzer::new(&pd);
    let doubling: Vec<usize> = (1..=14).map(|e| c_of(&mut an, 1 << e)).collect();
    let ternary = fixed_point(&SlotSubstitution::identity("01", "").unwrap().to_morphism(), '0').unwrap();
    let mut an = Analyzer::new(&ternary);
    let tripling: Vec<usize> = (1..=8).map(|e| c_of(&mut an, 3usize.pow(e))).collect();
    outcome(
        doubling.iter().chain(&tripling).all(|&c| c == 2),
        format!("c(2^n), n <= 14: {doubling:?}; c(3^n), n <= 8: {tripling:?}"),
    )
}

fn paperfolding_words() -> Outcome {
    let mut report = Vec::new();
    let mut all = true;
    for folds in [
        FoldSequence::regular(),
        FoldSequence::alternating(Fold::Tau),
        FoldSequence::alternating(Fold::TauBar),
    ] {
        let src = paperfolding(folds.clone());
        let mut an = Analyzer::new(&src);
        let values: Vec<usize> = (1..=10).map(|e| c_of(&mut an, 4 << e)).collect();
        let (patterns, rep) = folds.patterns();
        let len = 1 << 14;
        let agree = toeplitz(patterns, rep).unwrap().prefix(len).unwrap() == src.prefix(len).unwrap();
        let ok = agree && values.iter().all(|&c| c == 4);
        all &= ok;
        report.push(format!("{}: c = {values:?}, toeplitz agrees: {agree}", src.id()));
    }
    outcome(all, report.join("; "))
}

/// The literal criterion asks for constant c beyond preperiod + period. For
/// periodic words c is periodic in n, not constant: `(01)^ω` alternates
/// between 2 and 1. The literal part is reported as measured; the bounded and
/// periodic forms, which do hold, are reported alongside.
fn morse_hedlund() -> (Outcome, Vec<&'static str>, bool) {
    let mut literal_failures = Vec::new();
    let mut corrected = true;
    let mut aperiodic = true;
    let mut report = Vec::new();
    for name in NamedWord::ALL {
        let src = name.source();
        let mut an = Analyzer::new(&src);
        match *src.certificate() {
            Certificate::Periodic { preperiod, period } => {
                let base = preperiod + period;
                let c: Vec<usize> = (0..=preperiod + 4 * period).map(|n| c_of(&mut an, n)).collect();
                let tail: BTreeSet<usize> = c[base + 1..].iter().copied().collect();
                if tail.len() != 1 {
                    literal_failures.push(name.name());
                    report.push(format!("{} c = {:?}", name.name(), &c[base + 1..]));
                }
                corrected &= c[1..].iter().all(|&x| x <= base)
                    && (preperiod + 2 * period + 1..=preperiod + 3 * period)
                        .all(|n| c[n] == c[n + period]);
            }
            _ => {
                let reached = (1..=4096).find(|&n| c_of(&mut an, n) >= 8);
                aperiodic &= reached.is_some();
            }
        }
    }
    let pass = literal_failures.is_empty() && aperiodic;
    (
        outcome(
            pass,
            format!(
                "aperiodic words reach c >= 8: {aperiodic}; non-constant tails: {}; bounded and period-shift invariant: {corrected}",
                if report.is_empty() { "none".into() } else { report.join("; ") }
            ),
        ),
        literal_failures,
        aperiodic && corrected,
    )
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let alphabet = Alphabet::binary();
    let mut mismatches = 0;
    for _ in 0..200 {
        let pre: Vec<u8> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..2)).collect();
        let period: Vec<u8> = (0..rng.gen_range(1..=8)).map(|_| rng.gen_range(0..2)).collect();
        let src = ultimately_periodic(
            &FiniteWord::new(alphabet.clone(), pre.clone()).unwrap(),
            &FiniteWord::new(alphabet.clone(), period.clone()).unwrap(),
        )
        .unwrap();
        let mut an = Analyzer::new(&src);
        for n in 1..=10 {
            let len = pre.len() + 4 * period.len() + n;
            let text: Vec<u8> = pre.iter().copied().chain(period.iter().copied().cycle()).take(len).collect();
            let oracle = windows(&text, n);
            let mf = minimal_forbidden(&text, n, 2).len();
            let row = an.row(n).unwrap();
            if (row.p, row.a, row.c, row.mf) != (oracle.len(), abelian(&oracle), cyclic(&oracle), mf) {
                mismatches += 1;
            }
        }
    }
    let mut word_ops = 0;
    for n in 1..=12 {
        for w in all_words(n) {
            let word = fw(&w);
            if canonical_rotation(&word).unwrap().letters() != least_rotation(&w) {
                word_ops += 1;
            }
            let listed = periods(&word).unwrap();
            if (1..=n).any(|p| listed.contains(&p) != (w[p..] == w[..n - p])) {
                word_ops += 1;
            }
        }
    }
    let mut central = 0;
    for n in 0..=14 {
        for w in all_words(n) {
            let lib = cyclic_words::sturmian::is_central(&fw(&w)).unwrap().is_some();
            let brute = [
                central_by_periods(&w),
                central_by_conjugacy(&w),
                central_by_palindrome(&w),
                central_by_least_conjugate(&w),
                central_by_split(&w),
            ];
            if brute.iter().any(|&b| b != lib) {
                central += 1;
            }
        }
    }
    outcome(
        mismatches + word_ops + central == 0,
        format!("complexity mismatches {mismatches}/2000, word-op mismatches {word_ops}, central-word mismatches {central}"),
    )
}

fn line(id: &str, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let started = Instant::now();
    let o = f();
    let elapsed = started.elapsed();
    let in_time = elapsed <= limit;
    let pass = o.pass && in_time;
    println!(
        "criterion {id} {:<4} {title} [{:.2?} / limit {:?}] {}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        limit,
        o.detail
    );
    pass
}

#[test]
fn acceptance_criteria() {
    let s = Duration::from_secs;
    let mut results = BTreeMap::new();
    results.insert(1, line("1", "Christoffel array", s(1), christoffel));
    results.insert(2, line("2", "antidictionary counterexample", s(1), antidictionary_pair));
    results.insert(3, line("3", "τ-pair", s(5), tau_pair));
    results.insert(4, line("4", "Thue-Morse", s(60), thue_morse));
    results.insert(5, line("5", "Sturmian", s(60), sturmian));
    results.insert(6, line("6", "one-slot substitutions", s(60), one_slot));
    results.insert(7, line("7", "paperfolding", s(60), paperfolding_words));
    let mut eight = None;
    results.insert(
        8,
        line("8", "bounded cyclic complexity", s(120), || {
            let (o, failures, holds) = morse_hedlund();
            eight = Some((failures, holds));
            o
        }),
    );
    results.insert(9, line("9", "oracle equivalence", s(60), oracles));

    for (id, pass) in &results {
        if *id != 8 {
            assert!(pass, "criterion {id} failed");
        }
    }
    // Criterion 8 as written does not hold for periodic words. Pin the
    // measured outcome: exactly these words have a non-constant tail, and the
    // bounded and periodic forms hold everywhere.
    let (failures, holds) = eight.unwrap();
    assert_eq!(failures, ["alternating", "tau-x", "tau-x-prime"]);
    assert!(holds);
}
