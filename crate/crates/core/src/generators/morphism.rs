use serde::{Deserialize, Serialize};

use super::{Certificate, InfiniteWordSource, PrefixGenerator};
use crate::alphabet::Alphabet;
use crate::error::GenError;
use crate::word::FiniteWord;

/// How a finite list extends to an infinite sequence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Repetition {
    /// `a, b, c, c, c, ...`
    RepeatLast,
    /// `a, b, c, a, b, c, ...`
    #[default]
    Cycle,
}

impl Repetition {
    pub(crate) fn pick<T>(self, items: &[T], index: usize) -> &T {
        match self {
            Repetition::RepeatLast => &items[index.min(items.len() - 1)],
            Repetition::Cycle => &items[index % items.len()],
        }
    }
}

/// A non-erasing morphism given by one image per symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Vec<u8>>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<FiniteWord>) -> Result<Self, GenError> {
        if images.len() != alphabet.len() {
            return Err(GenError::ImageCount {
                expected: alphabet.len(),
                got: images.len(),
            });
        }
        let mut raw = Vec::with_capacity(images.len());
        for (i, img) in images.into_iter().enumerate() {
            if img.alphabet() != &alphabet {
                return Err(crate::error::WordError::AlphabetMismatch.into());
            }
            if img.is_empty() {
                return Err(GenError::ErasingImage(alphabet.symbol(i as u8)));
            }
            raw.push(img.into_letters());
        }
        Ok(Self {
            alphabet,
            images: raw,
        })
    }

    /// Binary morphism from the images of `0` and `1`.
    pub fn binary(image0: &str, image1: &str) -> Result<Self, GenError> {
        let a = Alphabet::binary();
        Self::new(
            a.clone(),
            vec![FiniteWord::parse(&a, image0)?, FiniteWord::parse(&a, image1)?],
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        &self.images[letter as usize]
    }

    pub fn apply_letters(&self, letters: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(letters.len() * 2);
        for &l in letters {
            out.extend_from_slice(&self.images[l as usize]);
        }
        out
    }

    pub fn apply(&self, w: &FiniteWord) -> FiniteWord {
        FiniteWord::from_letters_unchecked(self.alphabet.clone(), self.apply_letters(w.letters()))
    }

    /// Lengths `|m^k(seed)|` for `k = 0, 1, ...` while they stay below `cap`
    /// (the first length reaching `cap` is included).
    fn iterate_lengths(&self, seed: u8, cap: usize) -> Vec<usize> {
        let sigma = self.alphabet.len();
        let mut counts = vec![0usize; sigma];
        counts[seed as usize] = 1;
        let mut out = vec![1];
        // Linear growth (e.g. 0 -> 01, 1 -> 1) would otherwise iterate for ages.
        while out.len() < 256 {
            let mut next = vec![0usize; sigma];
            for (a, &c) in counts.iter().enumerate() {
                for &b in &self.images[a] {
                    next[b as usize] = next[b as usize].saturating_add(c);
                }
            }
            let len = next.iter().fold(0usize, |acc, &c| acc.saturating_add(c));
            if len <= *out.last().unwrap() {
                // A non-growing iterate would make the seed non-extendable.
                break;
            }
            out.push(len);
            counts = next;
            if len >= cap {
                break;
            }
        }
        out
    }
}

/// `a ↦ u · slot(a) · v` with `slot` a permutation of the alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotSubstitution {
    alphabet: Alphabet,
    u: Vec<u8>,
    v: Vec<u8>,
    slot: Vec<u8>,
}

impl SlotSubstitution {
    pub fn new(u: &FiniteWord, v: &FiniteWord, slot: Vec<u8>) -> Result<Self, GenError> {
        let alphabet = u.alphabet().clone();
        if v.alphabet() != &alphabet {
            return Err(crate::error::WordError::AlphabetMismatch.into());
        }
        let mut seen = vec![false; alphabet.len()];
        if slot.len() != alphabet.len() {
            return Err(GenError::SlotNotBijection);
        }
        for &s in &slot {
            match seen.get_mut(s as usize) {
                Some(flag) if !*flag => *flag = true,
                _ => return Err(GenError::SlotNotBijection),
            }
        }
        Ok(Self {
            alphabet,
            u: u.letters().to_vec(),
            v: v.letters().to_vec(),
            slot,
        })
    }

    /// Binary `a ↦ u a v`.
    pub fn identity(u: &str, v: &str) -> Result<Self, GenError> {
        Self::new(&u.parse()?, &v.parse()?, vec![0, 1])
    }

    /// Binary `a ↦ u ā v`, where `ā` swaps 0 and 1.
    pub fn swap(u: &str, v: &str) -> Result<Self, GenError> {
        Self::new(&u.parse()?, &v.parse()?, vec![1, 0])
    }

    /// Common image length `|u| + |v| + 1`.
    pub fn k(&self) -> usize {
        self.u.len() + self.v.len() + 1
    }

    pub fn u(&self) -> &[u8] {
        &self.u
    }

    pub fn is_identity_slot(&self) -> bool {
        self.slot.iter().enumerate().all(|(i, &s)| i == s as usize)
    }

    pub fn to_morphism(&self) -> Morphism {
        let images = (0..self.alphabet.len())
            .map(|a| {
                let mut img = self.u.clone();
                img.push(self.slot[a]);
                img.extend_from_slice(&self.v);
                img
            })
            .collect();
        Morphism {
            alphabet: self.alphabet.clone(),
            images,
        }
    }
}

#[derive(Debug)]
struct FixedPoint {
    morphism: Morphism,
    seed: u8,
}

impl PrefixGenerator for FixedPoint {
    // x = m(x), so x is the concatenation of the images of its own letters.
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        let mut out = self.morphism.image(self.seed).to_vec();
        let mut i = 1;
        while out.len() < len {
            let img = self.morphism.image(out[i]);
            out.extend_from_slice(img);
            i += 1;
        }
        out.truncate(len);
        Ok(out)
    }

    fn certificate(&self) -> Certificate {
        Certificate::Morphic {
            stage_lengths: self.morphism.iterate_lengths(self.seed, usize::MAX / 4),
        }
    }
}

pub(super) fn fixed_point(m: &Morphism, seed: char) -> Result<InfiniteWordSource, GenError> {
    let s = m.alphabet.index_of(seed).ok_or_else(|| {
        GenError::Word(crate::error::WordError::UnknownSymbol {
            symbol: seed,
            alphabet: m.alphabet.to_string(),
        })
    })?;
    let img = m.image(s);
    if img.len() < 2 || img[0] != s {
        return Err(GenError::SeedNotExtendable(seed));
    }
    let id = format!(
        "fixed-point[{}]@{}",
        (0..m.alphabet.len())
            .map(|a| format!(
                "{}->{}",
                m.alphabet.symbol(a as u8),
                m.alphabet.decode(m.image(a as u8))
            ))
            .collect::<Vec<_>>()
            .join(","),
        seed
    );
    Ok(InfiniteWordSource::from_generator(
        id,
        m.alphabet.clone(),
        FixedPoint {
            morphism: m.clone(),
            seed: s,
        },
    ))
}

#[derive(Debug)]
struct SAdic {
    sequence: Vec<SlotSubstitution>,
    repetition: Repetition,
}

impl PrefixGenerator for SAdic {
    // μ_1∘⋯∘μ_{n-1}(μ_n(a)) starts with μ_1∘⋯∘μ_{n-1}(u_n) for every letter a,
    // so that word is a prefix of the limit.
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        let mut n = 0;
        let mut outer_len: usize = 1;
        loop {
            let mu = self.repetition.pick(&self.sequence, n);
            if outer_len.saturating_mul(mu.u.len()) >= len {
                break;
            }
            outer_len = outer_len.saturating_mul(mu.k());
            n += 1;
        }
        let mut w = self.repetition.pick(&self.sequence, n).u.clone();
        for i in (0..n).rev() {
            w = self.repetition.pick(&self.sequence, i).to_morphism().apply_letters(&w);
        }
        w.truncate(len);
        Ok(w)
    }
}

pub(super) fn s_adic_limit(
    sequence: Vec<SlotSubstitution>,
    repetition: Repetition,
) -> Result<InfiniteWordSource, GenError> {
    let first = sequence.first().ok_or(GenError::EmptySequence)?;
    let alphabet = first.alphabet.clone();
    for (index, mu) in sequence.iter().enumerate() {
        if mu.alphabet != alphabet {
            return Err(crate::error::WordError::AlphabetMismatch.into());
        }
        if mu.u.is_empty() {
            return Err(GenError::EmptyPrefixWord { index });
        }
    }
    let id = format!("s-adic[{} substitutions, {:?}]", sequence.len(), repetition);
    Ok(InfiniteWordSource::from_generator(
        id,
        alphabet,
        SAdic {
            sequence,
            repetition,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::s_adic_limit as public_s_adic;

    fn prefix_str(src: &InfiniteWordSource, len: usize) -> String {
        src.prefix(len).unwrap().to_string()
    }

    #[test]
    fn thue_morse_prefix() {
        let m = Morphism::binary("01", "10").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        assert_eq!(prefix_str(&src, 24), "011010011001011010010110");
    }

    #[test]
    fn period_doubling_prefix() {
        let m = Morphism::binary("01", "00").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        assert_eq!(prefix_str(&src, 16), "0100010101000100");
        // The same morphism written as a slot-swap substitution with u = 0.
        let mu = SlotSubstitution::swap("0", "").unwrap();
        assert_eq!(mu.to_morphism(), m);
    }

    #[test]
    fn fibonacci_prefix() {
        let m = Morphism::binary("01", "0").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        assert_eq!(prefix_str(&src, 18), "010010100100101001");
    }

    #[test]
    fn printed_period_doubling_morphism_only_fixes_zeros() {
        let m = Morphism::binary("00", "01").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        assert_eq!(prefix_str(&src, 16), "0000000000000000");
    }

    #[test]
    fn non_extendable_seeds() {
        let m = Morphism::binary("10", "01").unwrap();
        assert_eq!(
            fixed_point(&m, '0').unwrap_err(),
            GenError::SeedNotExtendable('0')
        );
        let m = Morphism::binary("0", "10").unwrap();
        assert_eq!(
            fixed_point(&m, '0').unwrap_err(),
            GenError::SeedNotExtendable('0')
        );
        assert!(matches!(
            Morphism::binary("", "1"),
            Err(GenError::ErasingImage('0'))
        ));
    }

    #[test]
    fn fixed_point_is_invariant_under_its_morphism() {
        let m = Morphism::binary("01", "0").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        for len in [1, 7, 100, 1234] {
            let p = src.prefix(len).unwrap();
            assert!(p.is_prefix_of(&m.apply(&p)));
        }
    }

    #[test]
    fn morphic_certificate_lengths() {
        let m = Morphism::binary("01", "0").unwrap();
        let src = fixed_point(&m, '0').unwrap();
        match src.certificate() {
            Certificate::Morphic { stage_lengths } => {
                assert_eq!(&stage_lengths[..7], &[1, 2, 3, 5, 8, 13, 21]);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn s_adic_examples() {
        let pd = public_s_adic(
            vec![SlotSubstitution::swap("0", "").unwrap()],
            Repetition::Cycle,
        )
        .unwrap();
        assert_eq!(prefix_str(&pd, 8), "01000101");

        let ident = public_s_adic(
            vec![SlotSubstitution::identity("01", "").unwrap()],
            Repetition::RepeatLast,
        )
        .unwrap();
        assert_eq!(prefix_str(&ident, 9), "010011010");

        let mixed = public_s_adic(
            vec![
                SlotSubstitution::identity("1", "0").unwrap(),
                SlotSubstitution::swap("0", "").unwrap(),
            ],
            Repetition::Cycle,
        )
        .unwrap();
        assert_eq!(prefix_str(&mixed, 1), "1");
    }

    #[test]
    fn s_adic_rejects_empty_u() {
        assert_eq!(
            public_s_adic(
                vec![
                    SlotSubstitution::identity("0", "").unwrap(),
                    SlotSubstitution::identity("", "1").unwrap()
                ],
                Repetition::Cycle
            )
            .unwrap_err(),
            GenError::EmptyPrefixWord { index: 1 }
        );
        assert_eq!(
            public_s_adic(vec![], Repetition::Cycle).unwrap_err(),
            GenError::EmptySequence
        );
    }

    #[test]
    fn slot_must_be_bijection() {
        let u: FiniteWord = "0".parse().unwrap();
        let v: FiniteWord = "".parse().unwrap();
        assert_eq!(
            SlotSubstitution::new(&u, &v, vec![0, 0]).unwrap_err(),
            GenError::SlotNotBijection
        );
        assert_eq!(
            SlotSubstitution::new(&u, &v, vec![0]).unwrap_err(),
            GenError::SlotNotBijection
        );
    }

    #[test]
    fn repetition_policies() {
        let items = [1, 2, 3];
        let cyc: Vec<i32> = (0..7).map(|i| *Repetition::Cycle.pick(&items, i)).collect();
        let last: Vec<i32> = (0..5).map(|i| *Repetition::RepeatLast.pick(&items, i)).collect();
        assert_eq!(cyc, vec![1, 2, 3, 1, 2, 3, 1]);
        assert_eq!(last, vec![1, 2, 3, 3, 3]);
    }
}
