//! Brute-force reference implementations. Deliberately naive and independent
//! of the library: plain byte vectors, full rotation lists, exhaustive scans.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn bits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn show(w: &[u8]) -> String {
    w.iter().map(|&c| char::from(b'0' + c)).collect()
}

/// Every binary word of length `n`, in lexicographic order.
pub fn all_words(n: usize) -> Vec<Vec<u8>> {
    (0..1u32 << n)
        .map(|m| (0..n).rev().map(|i| ((m >> i) & 1) as u8).collect())
        .collect()
}

pub fn rotations(w: &[u8]) -> Vec<Vec<u8>> {
    (0..w.len().max(1))
        .map(|k| w[k.min(w.len())..].iter().chain(&w[..k.min(w.len())]).copied().collect())
        .collect()
}

pub fn least_rotation(w: &[u8]) -> Vec<u8> {
    rotations(w).into_iter().min().unwrap_or_default()
}

pub fn conjugate(u: &[u8], v: &[u8]) -> bool {
    u.len() == v.len() && rotations(u).iter().any(|r| r == v)
}

pub fn windows(text: &[u8], n: usize) -> BTreeSet<Vec<u8>> {
    if n > text.len() {
        return BTreeSet::new();
    }
    (0..=text.len() - n).map(|i| text[i..i + n].to_vec()).collect()
}

pub fn abelian(set: &BTreeSet<Vec<u8>>) -> usize {
    set.iter()
        .map(|w| {
            let mut counts = [0usize; 8];
            for &c in w {
                counts[c as usize] += 1;
            }
            counts
        })
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn cyclic(set: &BTreeSet<Vec<u8>>) -> usize {
    set.iter().map(|w| least_rotation(w)).collect::<BTreeSet<_>>().len()
}

/// Words of length `n` over `0..sigma` not in `factors(n)` whose two
/// length-`n - 1` factors are.
pub fn minimal_forbidden(text: &[u8], n: usize, sigma: u8) -> BTreeSet<Vec<u8>> {
    if n == 0 {
        return BTreeSet::new();
    }
    let inside = windows(text, n);
    let shorter = windows(text, n - 1);
    let mut out = BTreeSet::new();
    let mut stack = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        if w.len() == n {
            if !inside.contains(&w) && shorter.contains(&w[1..]) && shorter.contains(&w[..n - 1]) {
                out.insert(w);
            }
            continue;
        }
        for c in 0..sigma {
            let mut x = w.clone();
            x.push(c);
            stack.push(x);
        }
    }
    out
}

pub fn ones(w: &[u8]) -> usize {
    w.iter().filter(|&&c| c == 1).count()
}

/// Every two factors of equal length differ by at most one in their count of 1s.
pub fn balanced(w: &[u8]) -> bool {
    (1..=w.len()).all(|n| {
        let counts: Vec<usize> = (0..=w.len() - n).map(|i| ones(&w[i..i + n])).collect();
        counts.iter().max().unwrap() - counts.iter().min().unwrap() <= 1
    })
}

pub fn is_period(w: &[u8], p: usize) -> bool {
    (0..w.len()).all(|i| i + p >= w.len() || w[i] == w[i + p])
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprime periods `p`, `q` with `|w| = p + q - 2`.
pub fn central_by_periods(w: &[u8]) -> bool {
    let total = w.len() + 2;
    (1..total).any(|p| is_period(w, p) && is_period(w, total - p) && gcd(p, total - p) == 1)
}

pub fn central_by_conjugacy(w: &[u8]) -> bool {
    let a: Vec<u8> = [0].iter().chain(w).chain(&[1]).copied().collect();
    let b: Vec<u8> = [1].iter().chain(w).chain(&[0]).copied().collect();
    conjugate(&a, &b)
}

pub fn central_by_palindrome(w: &[u8]) -> bool {
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    let ext = |c: u8| -> Vec<u8> { w.iter().copied().chain([c]).collect() };
    rev == w && balanced(&ext(0)) && balanced(&ext(1))
}

/// `0w1` balanced and strictly least among its rotations. Strictness
/// excludes powers such as `0101`, whose class is smaller than `|w| + 2`.
pub fn central_by_least_conjugate(w: &[u8]) -> bool {
    let a: Vec<u8> = [0].iter().chain(w).chain(&[1]).copied().collect();
    balanced(&a) && rotations(&a)[1..].iter().all(|r| a < *r)
}

/// Power of a letter, or `p1 01 p2 = p2 10 p1` with `p1`, `p2` central.
pub fn central_by_split(w: &[u8]) -> bool {
    if w.windows(2).all(|x| x[0] == x[1]) {
        return true;
    }
    (0..w.len().saturating_sub(1)).any(|i| {
        let (p1, p2) = (&w[..i], &w[i + 2..]);
        let alt: Vec<u8> = p2.iter().chain(&[1, 0]).chain(p1).copied().collect();
        w[i..i + 2] == [0, 1] && alt == w && central_by_periods(p1) && central_by_periods(p2)
    })
}
