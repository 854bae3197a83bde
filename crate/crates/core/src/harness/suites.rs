use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use super::{Check, Ctx};
use crate::alphabet::Alphabet;
use crate::complexity::{begin_end_of, special_from, Analyzer, FactorSlice, Side};
use crate::error::{ComplexityError, HarnessError};
use crate::generators::{
    fixed_point, mechanical, paperfolding, paperfolding_stage, s_adic_limit, toeplitz, Certificate,
    Fold, FoldSequence, Intercept, NamedWord, Repetition, Slope,
    SlotSubstitution,
};
use crate::languages::{cyclic_complexity_L, from_forbidden, mf_of_language, Antidictionary};
use crate::sturmian::{
    bispecial_factors, christoffel_array, christoffel_word, is_central, mod_inverse,
    period_update_holds, sturmian_factor_slice,
};
use crate::word::{is_c_balanced, periods_of, FiniteWord};

type Checks = Result<Vec<Check>, HarnessError>;

fn c_of(an: &mut Analyzer<'_>, n: usize) -> Result<usize, ComplexityError> {
    Ok(an.cyclic_classes(n)?.count())
}

fn strings(set: &BTreeSet<FiniteWord>) -> Vec<String> {
    set.iter().map(|w| w.to_string()).collect()
}

fn word(s: &str) -> FiniteWord {
    FiniteWord::parse(&Alphabet::binary(), s).expect("binary literal")
}

/// Aperiodicity evidence: `Err(n)` with the first `n <= max_n` where
/// `p(n) <= n`, which forces ultimate periodicity.
fn aperiodic_up_to(an: &mut Analyzer<'_>, max_n: usize) -> Result<Result<(), usize>, ComplexityError> {
    for n in 1..=max_n {
        if an.factor_complexity(n)? <= n {
            return Ok(Err(n));
        }
    }
    Ok(Ok(()))
}

const APERIODIC_MAX_N: usize = 64;

fn sturmian_words() -> Vec<(NamedWord, Slope)> {
    NamedWord::ALL
        .into_iter()
        .filter_map(|w| Some((w, w.slope()?)))
        .collect()
}

pub(super) fn thm1(ctx: &Ctx<'_>) -> Checks {
    let l = ctx.limits;
    let mut checks = Vec::new();
    for name in NamedWord::ALL {
        let src = name.source();
        let mut an = ctx.analyzer(&src);
        if let Certificate::Periodic { preperiod, period } = *src.certificate() {
            let base = preperiod + period;
            let top = preperiod + 4 * period;
            let c = (0..=top)
                .map(|n| c_of(&mut an, n))
                .collect::<Result<Vec<_>, _>>()?;
            let params = json!({"word": name.name(), "preperiod": preperiod, "period": period});
            let tail = &c[base + 1..=top];
            let distinct: BTreeSet<usize> = tail.iter().copied().collect();
            checks.push(Check::new(
                format!("{}: c is constant on preperiod + period < n <= preperiod + 4·period", name.name()),
                json!({"word": name.name(), "preperiod": preperiod, "period": period, "n": [base + 1, top]}),
                json!("one value"),
                json!({"c": tail}),
                distinct.len() == 1,
            ));
            let max = c[1..].iter().copied().max().unwrap_or(0);
            checks.push(Check::new(
                format!("{}: c(n) <= preperiod + period for 1 <= n <= preperiod + 4·period", name.name()),
                params.clone(),
                json!(format!("<= {base}")),
                json!(max),
                max <= base,
            ));
            let shift: Vec<usize> = (preperiod + 2 * period + 1..=preperiod + 3 * period).collect();
            let bad: Vec<usize> = shift
                .iter()
                .copied()
                .filter(|&n| c[n + period] != c[n])
                .collect();
            checks.push(Check::new(
                format!("{}: c(n + period) = c(n) past preperiod + 2·period", name.name()),
                params,
                json!({"mismatches": []}),
                json!({"mismatches": bad}),
                bad.is_empty(),
            ));
        } else {
            let target = l.thm1_target;
            let mut first: BTreeMap<usize, usize> = BTreeMap::new();
            let mut min_c = usize::MAX;
            let mut last = 0;
            for n in 1..=l.thm1_max_n {
                let cn = c_of(&mut an, n)?;
                min_c = min_c.min(cn);
                for m in 1..=cn.min(target) {
                    first.entry(m).or_insert(n);
                }
                last = n;
                if first.len() == target {
                    break;
                }
            }
            checks.push(Check::new(
                format!("{}: c(n) reaches {target} within n <= {}", name.name(), l.thm1_max_n),
                json!({"word": name.name(), "target": target, "max_n": l.thm1_max_n}),
                json!(format!("first n with c(n) >= m, for every m <= {target}")),
                json!({"first_reached": first}),
                first.len() == target,
            ));
            checks.push(Check::new(
                format!("{}: c(n) >= 2 for every tested n", name.name()),
                json!({"word": name.name(), "n": [1, last]}),
                json!(">= 2"),
                json!(min_c),
                min_c >= 2,
            ));
        }
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn lem_balanced(ctx: &Ctx<'_>) -> Checks {
    let max_n = ctx.limits.balance_max_n;
    let mut checks = Vec::new();
    for name in NamedWord::ALL {
        let src = name.source();
        let mut an = ctx.analyzer(&src);
        let mut slices = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            slices.push(an.factors(n)?);
        }
        let bound = slices.iter().map(|s| s.classes().count()).max().unwrap_or(1);
        let mut unbalanced = Vec::new();
        for s in &slices {
            let words: Vec<FiniteWord> = s.words().collect();
            if !is_c_balanced(&words, bound)? {
                unbalanced.push(s.n());
            }
        }
        checks.push(Check::new(
            format!("{}: factors of each length n <= {max_n} are C-balanced with C = max c(n)", name.name()),
            json!({"word": name.name(), "max_n": max_n, "C": bound}),
            json!({"unbalanced_lengths": []}),
            json!({"unbalanced_lengths": unbalanced}),
            unbalanced.is_empty(),
        ));
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn lem_bis2(ctx: &Ctx<'_>) -> Checks {
    let l = ctx.limits;
    let mut checks = Vec::new();
    for (name, slope) in sturmian_words() {
        let src = name.source();
        let mut an = ctx.analyzer(&src);
        let params = json!({"word": name.name(), "max_n": l.sturmian_max_n});

        let mut slices: Vec<FactorSlice> = Vec::new();
        for n in 0..=l.sturmian_max_n.max(l.bispecial_max_n) + 1 {
            slices.push(an.factors(n)?);
        }
        let bad_p: Vec<usize> = (1..=l.sturmian_max_n)
            .filter(|&n| slices[n].len() != n + 1)
            .collect();
        checks.push(Check::new(
            format!("{}: p(n) = n + 1", name.name()),
            params.clone(),
            json!({"violations": []}),
            json!({"violations": bad_p}),
            bad_p.is_empty(),
        ));

        let mut bad_special = Vec::new();
        for n in 0..l.sturmian_max_n {
            let right = special_from(&slices[n + 1], Side::Right).len();
            let left = special_from(&slices[n + 1], Side::Left).len();
            if (right, left) != (1, 1) {
                bad_special.push(json!({"n": n, "right": right, "left": left}));
            }
        }
        checks.push(Check::new(
            format!("{}: exactly one right and one left special factor of each length", name.name()),
            params.clone(),
            json!({"violations": []}),
            json!({"violations": bad_special}),
            bad_special.is_empty(),
        ));

        let bad_rev: Vec<usize> = (1..=l.sturmian_max_n)
            .filter(|&n| {
                let set = slices[n].to_set();
                set.iter().any(|w| !set.contains(&w.reverse()))
            })
            .collect();
        checks.push(Check::new(
            format!("{}: factor sets are closed under reversal", name.name()),
            params.clone(),
            json!({"violations": []}),
            json!({"violations": bad_rev}),
            bad_rev.is_empty(),
        ));

        let chain = bispecial_factors(&slope, l.bispecial_max_n)?;
        let lengths: BTreeSet<usize> = chain.iter().map(|c| c.len()).collect();
        let mut bad_c2 = Vec::new();
        for n in 1..=l.bispecial_max_n {
            let classes = slices[n].classes();
            let predicted = n == 1 || (n >= 2 && lengths.contains(&(n - 2)));
            let is_two = classes.count() == 2;
            let sizes_ok = !is_two || classes.sorted_sizes() == vec![n, 1];
            if predicted != is_two || !sizes_ok {
                bad_c2.push(json!({"n": n, "c": classes.count(), "sizes": classes.sorted_sizes()}));
            }
        }
        checks.push(Check::new(
            format!("{}: c(n) = 2 iff n = 1 or a bispecial factor of length n - 2 exists; then sizes are n and 1", name.name()),
            json!({"word": name.name(), "max_n": l.bispecial_max_n}),
            json!({"violations": []}),
            json!({"violations": bad_c2, "bispecial_lengths": lengths}),
            bad_c2.is_empty(),
        ));

        let all_palindromes = chain.iter().all(|c| c.word.is_palindrome());
        checks.push(Check::new(
            format!("{}: bispecial factors are central palindromes with periods p + q, then p or q", name.name()),
            json!({"word": name.name(), "max_len": l.bispecial_max_n}),
            json!(true),
            json!({
                "palindromes": all_palindromes,
                "period_update": period_update_holds(&chain),
                "periods": chain.iter().map(|c| c.periods()).collect::<Vec<_>>(),
            }),
            all_palindromes && period_update_holds(&chain),
        ));

        let max_exact = 64.min(l.sturmian_max_n);
        let mut bad_slice = Vec::new();
        for n in 1..=max_exact {
            if sturmian_factor_slice(&slope, n)? != slices[n] {
                bad_slice.push(n);
            }
        }
        checks.push(Check::new(
            format!("{}: factors equal the circular factors of a Christoffel word", name.name()),
            json!({"word": name.name(), "max_n": max_exact}),
            json!({"violations": []}),
            json!({"violations": bad_slice}),
            bad_slice.is_empty(),
        ));
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn thm2_separation(ctx: &Ctx<'_>) -> Checks {
    let max_n = ctx.limits.separation_max_n;
    let mut slopes: Vec<(NamedWord, Slope)> = Vec::new();
    for (name, slope) in sturmian_words() {
        if !slopes.iter().any(|(_, s)| *s == slope) {
            slopes.push((name, slope));
        }
    }
    let mut c: Vec<Vec<usize>> = vec![vec![0]; slopes.len()];
    let mut c_at = |i: usize, n: usize| -> Result<usize, HarnessError> {
        while c[i].len() <= n {
            let m = c[i].len();
            c[i].push(sturmian_factor_slice(&slopes[i].1, m)?.classes().count());
        }
        Ok(c[i][n])
    };
    let mut checks = Vec::new();
    for i in 0..slopes.len() {
        for j in i + 1..slopes.len() {
            let mut witness = None;
            for n in 1..=max_n {
                let (a, b) = (c_at(i, n)?, c_at(j, n)?);
                if a != b {
                    witness = Some(json!({"n": n, "c": [a, b]}));
                    break;
                }
            }
            let found = witness.is_some();
            checks.push(Check::new(
                format!("slopes of {} and {} are separated by c", slopes[i].0.name(), slopes[j].0.name()),
                json!({"words": [slopes[i].0.name(), slopes[j].0.name()], "max_n": max_n}),
                json!("least n with different c"),
                witness.unwrap_or_else(|| json!("inconclusive")),
                found,
            ));
        }
    }

    let shifted = mechanical(&Slope::fibonacci().with_intercept(Intercept::Rational { num: 1, den: 2 })?)?
        .with_id("fibonacci-intercept-1/2");
    let sources = [
        NamedWord::Fibonacci.source(),
        NamedWord::FibonacciMechanical.source(),
        shifted,
    ];
    let same_max = 64;
    let mut analyzers: Vec<Analyzer<'_>> = sources.iter().map(|s| ctx.analyzer(s)).collect();
    let mut bad = Vec::new();
    for n in 1..=same_max {
        let first = analyzers[0].factors(n)?;
        for an in &mut analyzers[1..] {
            if an.factors(n)? != first {
                bad.push(json!({"n": n, "word": an.source().id()}));
            }
        }
    }
    for an in &analyzers {
        ctx.note(an);
    }
    checks.push(Check::new(
        "words of the same slope have the same factors",
        json!({"words": sources.iter().map(|s| s.id()).collect::<Vec<_>>(), "max_n": same_max}),
        json!({"mismatches": []}),
        json!({"mismatches": bad}),
        bad.is_empty(),
    ));
    Ok(checks)
}

fn slot_label(sub: &SlotSubstitution, u: &str, v: &str) -> String {
    let slot = if sub.is_identity_slot() { "identity" } else { "swap" };
    format!("u={u} v={} slot={slot}", if v.is_empty() { "ε" } else { v })
}

pub(super) fn prop_unif(ctx: &Ctx<'_>) -> Checks {
    let max_len = ctx.limits.unif_max_len;
    let cases = [
        ("0", "", SlotSubstitution::swap("0", "")?),
        ("01", "", SlotSubstitution::identity("01", "")?),
        ("0", "1", SlotSubstitution::identity("0", "1")?),
        ("01", "", SlotSubstitution::swap("01", "")?),
        ("0", "", SlotSubstitution::identity("0", "")?),
    ];
    let mut checks = Vec::new();
    for (u, v, sub) in cases {
        let label = slot_label(&sub, u, v);
        let src = fixed_point(&sub.to_morphism(), '0')?.with_id(label.clone());
        let mut an = ctx.analyzer(&src);
        let k = sub.k();
        match aperiodic_up_to(&mut an, APERIODIC_MAX_N)? {
            Err(n) => checks.push(Check::new(
                format!("{label}: fixed point is ultimately periodic, excluded"),
                json!({"substitution": label, "k": k}),
                json!("p(n) <= n for some n <= 64"),
                json!({"n": n}),
                true,
            )),
            Ok(()) => {
                let mut values = BTreeMap::new();
                let mut len = k;
                while len <= max_len {
                    values.insert(len, c_of(&mut an, len)?);
                    len *= k;
                }
                let pass = values.values().all(|&c| c == 2);
                checks.push(Check::new(
                    format!("{label}: c(k^n) = 2 for k^n <= {max_len}"),
                    json!({"substitution": label, "k": k, "max_len": max_len}),
                    json!(2),
                    json!({"c": values}),
                    pass,
                ));
            }
        }
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn prop_mor(ctx: &Ctx<'_>) -> Checks {
    let max_len = ctx.limits.mor_max_len;
    let sequences: Vec<(&str, Vec<SlotSubstitution>)> = vec![
        ("swap(0) repeated", vec![SlotSubstitution::swap("0", "")?]),
        ("identity(01) repeated", vec![SlotSubstitution::identity("01", "")?]),
        (
            "identity(0,1), swap(0) alternating",
            vec![SlotSubstitution::identity("0", "1")?, SlotSubstitution::swap("0", "")?],
        ),
        (
            "swap(0), identity(01) alternating",
            vec![SlotSubstitution::swap("0", "")?, SlotSubstitution::identity("01", "")?],
        ),
        (
            "identity(1,0), swap(0) alternating",
            vec![SlotSubstitution::identity("1", "0")?, SlotSubstitution::swap("0", "")?],
        ),
    ];
    let mut checks = Vec::new();
    for (label, seq) in sequences {
        let ks: Vec<usize> = seq.iter().map(SlotSubstitution::k).collect();
        let src = s_adic_limit(seq, Repetition::Cycle)?.with_id(label);
        let mut an = ctx.analyzer(&src);
        match aperiodic_up_to(&mut an, APERIODIC_MAX_N)? {
            Err(n) => checks.push(Check::new(
                format!("{label}: limit is ultimately periodic, excluded"),
                json!({"sequence": label}),
                json!("p(n) <= n for some n <= 64"),
                json!({"n": n}),
                true,
            )),
            Ok(()) => {
                let mut values = BTreeMap::new();
                let mut len = 1;
                for i in 0.. {
                    len *= ks[i % ks.len()];
                    if len > max_len {
                        break;
                    }
                    values.insert(len, c_of(&mut an, len)?);
                }
                let pass = !values.is_empty() && values.values().all(|&c| c == 2);
                checks.push(Check::new(
                    format!("{label}: c = 2 at every length |μ_1 ∘ ⋯ ∘ μ_n(0)| <= {max_len}"),
                    json!({"sequence": label, "k": ks, "max_len": max_len}),
                    json!(2),
                    json!({"c": values}),
                    pass,
                ));
            }
        }
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn prop_paper(ctx: &Ctx<'_>) -> Checks {
    let max_exp = ctx.limits.paper_max_exp;
    let cases = [
        ("regular", FoldSequence::regular()),
        ("alternating from τ", FoldSequence::alternating(Fold::Tau)),
        ("alternating from τ̄", FoldSequence::alternating(Fold::TauBar)),
        ("constant τ̄", FoldSequence::constant(Fold::TauBar)),
    ];
    let mut checks = Vec::new();
    for (label, folds) in cases {
        let src = paperfolding(folds.clone());
        let mut an = ctx.analyzer(&src);
        let c4 = c_of(&mut an, 4)?;
        let mut values = BTreeMap::new();
        for e in 1..=max_exp {
            let n = 4usize << e;
            values.insert(n, c_of(&mut an, n)?);
        }
        checks.push(Check::new(
            format!("paperfolding ({label}): c(4·2^n) = 4 for 1 <= n <= {max_exp}"),
            json!({"folds": &folds, "max_exp": max_exp}),
            json!(4),
            json!({"c": values, "c(4)": c4}),
            values.values().all(|&c| c == 4),
        ));

        let len = 1 << 14;
        let (patterns, rep) = folds.patterns();
        let via_toeplitz = toeplitz(patterns, rep)?.letters(len)?;
        let direct = src.letters(len)?;
        let stage = paperfolding_stage(&folds, 15);
        let agree = via_toeplitz[..len] == direct[..len] && stage.letters()[..len] == direct[..len];
        checks.push(Check::new(
            format!("paperfolding ({label}): Toeplitz and substitution constructions agree"),
            json!({"folds": &folds, "prefix": len}),
            json!(true),
            json!(agree),
            agree,
        ));
        ctx.note(&an);
    }
    Ok(checks)
}

pub(super) fn tm_lemmas(ctx: &Ctx<'_>) -> Checks {
    let l = ctx.limits;
    let src = NamedWord::ThueMorse.source();
    let mut an = ctx.analyzer(&src);
    let mut checks = Vec::new();

    let four = an.factors(4)?.to_set();
    let listed_even = ["0101", "0110", "1001", "1010"];
    let listed_odd = ["0010", "0011", "0100", "1011", "1100", "1101"];
    let listed: BTreeSet<FiniteWord> = listed_even.iter().chain(&listed_odd).map(|s| word(s)).collect();
    checks.push(Check::new(
        "Thue-Morse: the ten factors of length 4",
        json!({"n": 4}),
        json!(strings(&listed)),
        json!(strings(&four)),
        four == listed,
    ));

    let prefix = src.letters(1 << 14)?;
    let mut parity: BTreeMap<Vec<u8>, [bool; 2]> = BTreeMap::new();
    for (i, w) in prefix[..1 << 14].windows(4).enumerate() {
        parity.entry(w.to_vec()).or_default()[i % 2] = true;
    }
    let only = |side: usize| -> BTreeSet<String> {
        parity
            .iter()
            .filter(|(_, seen)| seen[side] && !seen[1 - side])
            .map(|(w, _)| Alphabet::binary().decode(w))
            .collect()
    };
    let (even, odd) = (only(0), only(1));
    let expected_even: BTreeSet<String> = listed_even.iter().map(|s| s.to_string()).collect();
    let expected_odd: BTreeSet<String> = listed_odd.iter().map(|s| s.to_string()).collect();
    checks.push(Check::new(
        "Thue-Morse: length-4 factors split by the parity of their positions",
        json!({"prefix": 1 << 14}),
        json!({"even": expected_even, "odd": expected_odd}),
        json!({"even": even, "odd": odd}),
        even == expected_even && odd == expected_odd,
    ));

    let top = 2 * l.tm_max_n + 1;
    let mut p = vec![0usize; top + 1];
    let mut f = vec![(0usize, 0usize); top + 1];
    for n in 1..=top {
        let s = an.factors(n)?;
        p[n] = s.len();
        f[n] = begin_end_of(&s);
    }
    let mut bad_p = Vec::new();
    let mut bad_f = Vec::new();
    let mut bad_third = Vec::new();
    let mut bad_linear = Vec::new();
    for n in 2..=l.tm_max_n {
        if p[2 * n] != p[n] + p[n + 1] || p[2 * n + 1] != 2 * p[n + 1] {
            bad_p.push(n);
        }
        let ((aa, ab), (aa1, ab1)) = (f[n], f[n + 1]);
        if f[2 * n] != (ab + ab1, aa + aa1) || f[2 * n + 1] != (2 * aa1, 2 * ab1) {
            bad_f.push(n);
        }
        if 3 * aa < p[n] || 3 * ab < p[n] {
            bad_third.push(n);
        }
        if aa + 1 < n || ab + 1 < n {
            bad_linear.push(n);
        }
    }
    let range = json!({"n": [2, l.tm_max_n]});
    for (claim, bad) in [
        ("Thue-Morse: p(2n) = p(n) + p(n+1) and p(2n+1) = 2p(n+1)", bad_p),
        (
            "Thue-Morse: f_aa(2n) = f_ab(n) + f_ab(n+1), f_ab(2n) = f_aa(n) + f_aa(n+1), f_xy(2n+1) = 2f_xy(n+1)",
            bad_f,
        ),
        ("Thue-Morse: f_aa(n) >= p(n)/3 and f_ab(n) >= p(n)/3", bad_third),
        ("Thue-Morse: f_aa(n) >= n - 1 and f_ab(n) >= n - 1", bad_linear),
    ] {
        checks.push(Check::new(
            claim,
            range.clone(),
            json!({"violations": []}),
            json!({"violations": bad}),
            bad.is_empty(),
        ));
    }

    let mut minima = Vec::new();
    for k in 0..=l.tm_max_k {
        let mut m = usize::MAX;
        for n in 1usize << k..1usize << (k + 1) {
            m = m.min(c_of(&mut an, n)?);
        }
        minima.push(m);
    }
    let monotone = minima.windows(2).all(|w| w[0] <= w[1]);
    let reached = minima.get(5).is_some_and(|&m| m >= 4);
    checks.push(Check::new(
        "Thue-Morse: min c(n) over [2^k, 2^(k+1)) is non-decreasing and >= 4 from k = 5",
        json!({"max_k": l.tm_max_k}),
        json!({"non_decreasing": true, "k5_at_least": 4}),
        json!({"minima": minima}),
        monotone && reached && l.tm_max_k >= 5,
    ));

    let (odd_max, even_bad) = tm_singletons(&mut an, l.tm_class_max_n)?;
    checks.push(Check::new(
        "Thue-Morse: μ(u) minus its last letter, u of length n + 1 with different end letters, has at most 6 other factors in its class",
        json!({"n": [TM_CLASS_MIN_N, l.tm_class_max_n]}),
        json!("<= 6"),
        json!({"max_class_mates": odd_max, "at_most_3": odd_max <= 3}),
        odd_max <= 6,
    ));
    checks.push(Check::new(
        "Thue-Morse: μ(u) minus both end letters gives at least n factors of length 2n alone in their class",
        json!({"n": [TM_CLASS_MIN_N, l.tm_class_max_n]}),
        json!({"violations": []}),
        json!({"violations": even_bad}),
        even_bad.is_empty(),
    ));
    ctx.note(&an);
    Ok(checks)
}

/// The constructions below need `n >= 5`; for `n = 2` the four candidates
/// form two classes of size 2.
const TM_CLASS_MIN_N: usize = 5;

/// For each `n`, images under `0 ↦ 01, 1 ↦ 10` of the factors of length
/// `n + 1` with different first and last letters. Returns the largest number
/// of class-mates of the length-`2n + 1` words and the `n` for which fewer
/// than `n` length-`2n` words sit alone in their class.
fn tm_singletons(an: &mut Analyzer<'_>, max_n: usize) -> Result<(usize, Vec<usize>), ComplexityError> {
    let mu = |w: &[u8]| -> Vec<u8> { w.iter().flat_map(|&c| [c, 1 - c]).collect() };
    let mut odd_max = 0;
    let mut even_bad = Vec::new();
    for n in TM_CLASS_MIN_N..=max_n {
        let sources: Vec<Vec<u8>> = an
            .factors(n + 1)?
            .windows()
            .filter(|w| w[0] != w[n])
            .map(mu)
            .collect();
        let odd_inv = an.factors(2 * n + 1)?.inventory();
        for img in &sources {
            let w = FiniteWord::from_letters_unchecked(Alphabet::binary(), img[..2 * n + 1].to_vec());
            let mates = odd_inv.class_of(&w).map_or(usize::MAX, |c| c.len() - 1);
            odd_max = odd_max.max(mates);
        }
        let even_inv = an.factors(2 * n)?.inventory();
        let alone: BTreeSet<Vec<u8>> = sources
            .iter()
            .map(|img| img[1..2 * n + 1].to_vec())
            .filter(|v| {
                let w = FiniteWord::from_letters_unchecked(Alphabet::binary(), v.clone());
                even_inv.class_of(&w).is_some_and(|c| c.len() == 1)
            })
            .collect();
        if alone.len() < n {
            even_bad.push(n);
        }
    }
    Ok((odd_max, even_bad))
}

/// Least `n` where the image of `a`'s slice under a renaming, possibly
/// reversed, differs from `b`'s slice, for each of the four transforms.
fn transform_witnesses(a: &[BTreeSet<Vec<u8>>], b: &[BTreeSet<Vec<u8>>]) -> Vec<Value> {
    let mut out = Vec::new();
    for swap in [false, true] {
        for mirror in [false, true] {
            let witness = a.iter().zip(b).enumerate().find_map(|(n, (sa, sb))| {
                let img: BTreeSet<Vec<u8>> = sa
                    .iter()
                    .map(|w| {
                        let mut v: Vec<u8> = w.iter().map(|&c| if swap { 1 - c } else { c }).collect();
                        if mirror {
                            v.reverse();
                        }
                        v
                    })
                    .collect();
                (img != *sb).then_some(n)
            });
            out.push(json!({"swap_letters": swap, "reverse": mirror, "least_n": witness}));
        }
    }
    out
}

pub(super) fn sec4_examples(ctx: &Ctx<'_>) -> Checks {
    let l = ctx.limits;
    let mut checks = Vec::new();

    let x = NamedWord::TauX.source();
    let y = NamedWord::TauXPrime.source();
    let (mut ax, mut ay) = (ctx.analyzer(&x), ctx.analyzer(&y));
    let mut cx = Vec::new();
    let mut cy = Vec::new();
    let mut sx = Vec::new();
    let mut sy = Vec::new();
    for n in 0..=l.tau_max_n {
        let (fx, fy) = (ax.factors(n)?, ay.factors(n)?);
        cx.push(fx.classes().count());
        cy.push(fy.classes().count());
        sx.push(fx.windows().map(<[u8]>::to_vec).collect::<BTreeSet<_>>());
        sy.push(fy.windows().map(<[u8]>::to_vec).collect::<BTreeSet<_>>());
    }
    checks.push(Check::new(
        "τ((010011)^ω) and τ((101100)^ω) have the same cyclic complexity",
        json!({"n": [1, l.tau_max_n]}),
        json!({"c": &cx[1..]}),
        json!({"c": &cy[1..]}),
        cx == cy,
    ));
    let px = periods_of(&x.letters(72)?)[0];
    let py = periods_of(&y.letters(72)?)[0];
    checks.push(Check::new(
        "τ((010011)^ω) and τ((101100)^ω) have least period 18",
        json!({"prefix": 72}),
        json!([18, 18]),
        json!([px, py]),
        (px, py) == (18, 18),
    ));
    let witnesses = transform_witnesses(&sx, &sy);
    let separated = witnesses.iter().all(|w| !w["least_n"].is_null());
    checks.push(Check::new(
        "their languages are neither isomorphic nor mirror images",
        json!({"max_n": l.tau_max_n}),
        json!("a separating length for every renaming and reversal"),
        json!(witnesses),
        separated,
    ));
    ctx.note(&ax);
    ctx.note(&ay);

    let alphabet = Alphabet::binary();
    let lx = from_forbidden(Antidictionary::parse(&alphabet, &["11", "000"])?);
    let ly = from_forbidden(Antidictionary::parse(&alphabet, &["11", "101"])?);
    let five_x = lx.slice(5);
    let listed: BTreeSet<FiniteWord> = ["00100", "00101", "01001", "10010", "10100", "01010"]
        .iter()
        .map(|s| word(s))
        .collect();
    let extra: Vec<String> = five_x.difference(&listed).map(|w| w.to_string()).collect();
    checks.push(Check::new(
        "L(11, 000) ∩ {0,1}^5 contains the listed factors",
        json!({"n": 5}),
        json!(strings(&listed)),
        json!({"slice": strings(&five_x), "unlisted": extra}),
        listed.is_subset(&five_x),
    ));
    let (c5x, _) = cyclic_complexity_L(&lx, 5);
    let (c5y, inv_y) = cyclic_complexity_L(&ly, 5);
    let listed_y: Vec<FiniteWord> = ["00000", "10000", "10010", "10001"].iter().map(|s| word(s)).collect();
    let y_distinct = listed_y.iter().all(|w| inv_y.class_of(w).is_some())
        && listed_y
            .iter()
            .map(|w| inv_y.class_of(w).and_then(|c| c.first().cloned()))
            .collect::<BTreeSet<_>>()
            .len()
            == 4;
    checks.push(Check::new(
        "c_L(5) is 3 for L(11, 000) and 4 for L(11, 101)",
        json!({"n": 5}),
        json!([3, 4]),
        json!({"c": [c5x, c5y], "listed_pairwise_non_conjugate": y_distinct}),
        (c5x, c5y) == (3, 4) && y_distinct,
    ));
    let max_n = l.language_max_n;
    let mfx: Vec<usize> = (1..=max_n).map(|n| mf_of_language(&lx, n).len()).collect();
    let mfy: Vec<usize> = (1..=max_n).map(|n| mf_of_language(&ly, n).len()).collect();
    checks.push(Check::new(
        "L(11, 000) and L(11, 101) have the same minimal-forbidden-factor complexity",
        json!({"n": [1, max_n]}),
        json!({"mf": mfx}),
        json!({"mf": mfy}),
        mfx == mfy,
    ));

    let la = from_forbidden(Antidictionary::parse(&alphabet, &["000111"])?);
    let lb = from_forbidden(Antidictionary::parse(&alphabet, &["001111"])?);
    let ca: Vec<usize> = (1..=max_n).map(|n| cyclic_complexity_L(&la, n).0).collect();
    let cb: Vec<usize> = (1..=max_n).map(|n| cyclic_complexity_L(&lb, n).0).collect();
    let pa: Vec<usize> = (1..=max_n).map(|n| la.slice(n).len()).collect();
    let pb: Vec<usize> = (1..=max_n).map(|n| lb.slice(n).len()).collect();
    checks.push(Check::new(
        "L(000111) and L(001111) have the same factor and cyclic complexity",
        json!({"n": [1, max_n]}),
        json!({"p": pa, "c": ca}),
        json!({"p": pb, "c": cb}),
        ca == cb && pa == pb,
    ));
    let slices = |lang: &crate::languages::FactorialLanguage| -> Vec<BTreeSet<Vec<u8>>> {
        (0..=max_n)
            .map(|n| lang.slice(n).into_iter().map(FiniteWord::into_letters).collect())
            .collect()
    };
    let witnesses = transform_witnesses(&slices(&la), &slices(&lb));
    checks.push(Check::new(
        "L(000111) and L(001111) are neither isomorphic nor mirror images",
        json!({"max_n": max_n}),
        json!("a separating length for every renaming and reversal"),
        json!(witnesses),
        witnesses.iter().all(|w| !w["least_n"].is_null()),
    ));
    Ok(checks)
}

pub(super) fn christoffel(ctx: &Ctx<'_>) -> Checks {
    let max_sum = ctx.limits.christoffel_max_sum;
    let mut checks = Vec::new();

    let array = christoffel_array(5, 3)?;
    let rows: Vec<String> = array.rows.iter().map(|r| r.to_string()).collect();
    let expected = [
        "00100101", "00101001", "01001001", "01001010", "01010010", "10010010", "10010100",
        "10100100",
    ];
    checks.push(Check::new(
        "the (5,3) Christoffel array",
        json!({"r": 5, "s": 3}),
        json!(expected),
        json!(rows),
        rows == expected,
    ));

    let mut bad = Vec::new();
    let mut tested = 0;
    for total in 2..=max_sum {
        for r in 1..total {
            let s = total - r;
            if num_integer::gcd(r, s) != 1 {
                continue;
            }
            tested += 1;
            let a = christoffel_array(r, s)?;
            let w = christoffel_word(r, s)?;
            let least = (0..w.len()).all(|k| w.letters() <= w.rotate(k).letters());
            let ok = a.is_sorted()
                && a.rows_conjugate()
                && a.columns_ok()
                && a.adjacent_swaps()
                && a.columns_conjugate()
                && a.rows[0] == w
                && least;
            let middle = w.slice(1, w.len() - 2);
            let (p, q) = match is_central(&middle)? {
                Some(c) => (c.p as u64, c.q as u64),
                None => (0, 0),
            };
            let inverses: BTreeSet<Option<u64>> = [mod_inverse(p, total), mod_inverse(q, total)].into();
            let inv_ok = inverses == BTreeSet::from([Some(r), Some(s)]) || (r == s);
            if !ok || !inv_ok {
                bad.push(json!({"r": r, "s": s, "structure": ok, "periods": [p, q]}));
            }
        }
    }
    checks.push(Check::new(
        format!("Christoffel arrays with r + s <= {max_sum}: sorted conjugate rows, columns conjugate and one swap apart, least row is the Christoffel word, central periods are the inverses of r and s modulo r + s"),
        json!({"max_sum": max_sum, "pairs": tested}),
        json!({"violations": []}),
        json!({"violations": bad}),
        bad.is_empty(),
    ));

    let fib = NamedWord::Fibonacci.source();
    let mut an = ctx.analyzer(&fib);
    let factors = an.factors(8)?.to_set();
    let mut expected: BTreeSet<FiniteWord> = array.rows.iter().cloned().collect();
    expected.insert(word("10100101"));
    checks.push(Check::new(
        "Fibonacci factors of length 8 are the (5,3) array rows and 10100101",
        json!({"n": 8}),
        json!(strings(&expected)),
        json!(strings(&factors)),
        factors == expected,
    ));
    ctx.note(&an);
    Ok(checks)
}
