//! Distinct windows of a growing prefix, with their first occurrences.

use std::collections::HashMap;

const NONE: u32 = u32::MAX;

/// Online suffix automaton recording, for every state, where the substrings
/// it represents end first.
#[derive(Debug, Clone)]
pub(crate) struct SuffixAutomaton {
    sigma: usize,
    len: Vec<u32>,
    link: Vec<u32>,
    first_end: Vec<u32>,
    next: Vec<u32>,
    last: u32,
    text_len: usize,
}

impl SuffixAutomaton {
    pub fn new(sigma: usize) -> Self {
        let mut sam = Self {
            sigma,
            len: Vec::new(),
            link: Vec::new(),
            first_end: Vec::new(),
            next: Vec::new(),
            last: 0,
            text_len: 0,
        };
        sam.push_state(0, NONE, 0);
        sam
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    fn push_state(&mut self, len: u32, link: u32, first_end: u32) -> u32 {
        let id = self.len.len() as u32;
        self.len.push(len);
        self.link.push(link);
        self.first_end.push(first_end);
        self.next.extend(std::iter::repeat_n(NONE, self.sigma));
        id
    }

    #[inline]
    fn go(&self, state: u32, c: u8) -> u32 {
        self.next[state as usize * self.sigma + c as usize]
    }

    #[inline]
    fn set(&mut self, state: u32, c: u8, to: u32) {
        self.next[state as usize * self.sigma + c as usize] = to;
    }

    pub fn extend_from(&mut self, letters: &[u8]) {
        for &c in letters {
            self.extend(c);
        }
    }

    pub fn extend(&mut self, c: u8) {
        let pos = self.text_len as u32;
        let cur = self.push_state(self.len[self.last as usize] + 1, NONE, pos);
        let mut p = self.last;
        while p != NONE && self.go(p, c) == NONE {
            self.set(p, c, cur);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.go(p, c);
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.push_state(
                    self.len[p as usize] + 1,
                    self.link[q as usize],
                    self.first_end[q as usize],
                );
                let (qs, cs) = (q as usize * self.sigma, clone as usize * self.sigma);
                for a in 0..self.sigma {
                    self.next[cs + a] = self.next[qs + a];
                }
                while p != NONE && self.go(p, c) == q {
                    self.set(p, c, clone);
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
        self.text_len += 1;
    }

    /// Start positions (0-based) of the first occurrences of every distinct
    /// length-`n` window lying entirely within the first `limit` letters,
    /// ascending.
    pub fn first_windows(&self, n: usize, limit: usize) -> Vec<usize> {
        if n == 0 {
            return vec![0];
        }
        let n32 = n as u32;
        let mut out = Vec::new();
        for v in 1..self.len.len() {
            let maxlen = self.len[v];
            let minlen = self.len[self.link[v] as usize] + 1;
            if minlen <= n32 && n32 <= maxlen {
                let end = self.first_end[v] as usize + 1;
                if end <= limit {
                    out.push(end - n);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Distinct windows by direct hashing of every window of `text[..limit]`;
/// quadratic in the window length, used as the reference backend.
pub(crate) fn scan_first_windows(text: &[u8], n: usize, limit: usize) -> Vec<usize> {
    if n == 0 {
        return vec![0];
    }
    let limit = limit.min(text.len());
    if limit < n {
        return Vec::new();
    }
    let mut seen: HashMap<&[u8], usize> = HashMap::new();
    for start in 0..=limit - n {
        seen.entry(&text[start..start + n]).or_insert(start);
    }
    let mut out: Vec<usize> = seen.into_values().collect();
    out.sort_unstable();
    out
}

const MOD: u64 = (1 << 61) - 1;
const BASE: u64 = 0x1f3d_5b79_a2c4_e681 % MOD;

#[inline]
fn mul_mod(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let lo = (p as u64) & MOD;
    let hi = (p >> 61) as u64;
    let s = lo + hi;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

/// Polynomial fingerprint modulo `2^61 - 1` of a letter sequence.
pub(crate) fn fingerprint<'a>(letters: impl IntoIterator<Item = &'a u8>) -> u64 {
    letters.into_iter().fold(0u64, |h, &c| {
        let v = mul_mod(h, BASE) + c as u64 + 1;
        if v >= MOD {
            v - MOD
        } else {
            v
        }
    })
}
