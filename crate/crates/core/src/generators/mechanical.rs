use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{Certificate, InfiniteWordSource, PrefixGenerator};
use crate::alphabet::Alphabet;
use crate::error::GenError;

/// Intercept `ρ` of a mechanical word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Intercept {
    /// `ρ = α`, giving the characteristic word `c_α`.
    #[default]
    Characteristic,
    /// `ρ = num / den` with `0 <= num < den`.
    Rational { num: u64, den: u64 },
}

/// An irrational slope in (0, 1) given by its continued fraction
/// `[0; a_1, a_2, ...]`: a finite head followed by a periodic tail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slope {
    pub head: Vec<u64>,
    pub tail: Vec<u64>,
    #[serde(default)]
    pub intercept: Intercept,
}

impl Slope {
    pub fn new(head: Vec<u64>, tail: Vec<u64>) -> Result<Self, GenError> {
        let slope = Self {
            head,
            tail,
            intercept: Intercept::Characteristic,
        };
        slope.validate()?;
        Ok(slope)
    }

    /// `[0; 2, 1, 1, 1, ...] = (3 - √5) / 2`, the slope of the Fibonacci word.
    pub fn fibonacci() -> Self {
        Self::new(vec![2], vec![1]).expect("valid slope")
    }

    /// Finite head followed by 1s forever.
    pub fn head_then_ones(head: Vec<u64>) -> Result<Self, GenError> {
        Self::new(head, vec![1])
    }

    pub fn with_intercept(mut self, intercept: Intercept) -> Result<Self, GenError> {
        self.intercept = intercept;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.tail.is_empty() {
            return Err(GenError::RationalSlope);
        }
        if self.head.iter().chain(&self.tail).any(|&a| a == 0) {
            return Err(GenError::NonPositiveQuotient);
        }
        if let Intercept::Rational { num, den } = self.intercept {
            if den == 0 || num >= den {
                return Err(GenError::InvalidIntercept(format!("{num}/{den}")));
            }
        }
        Ok(())
    }

    /// Partial quotient `a_i` for `i >= 1`.
    pub fn quotient(&self, i: usize) -> u64 {
        debug_assert!(i >= 1);
        let i = i - 1;
        if i < self.head.len() {
            self.head[i]
        } else {
            self.tail[(i - self.head.len()) % self.tail.len()]
        }
    }

    /// Convergents `p_k / q_k` for `k = 0, 1, ...`, starting at `0/1`.
    /// Stops before 128-bit overflow.
    pub fn convergents(&self) -> impl Iterator<Item = (u128, u128)> + '_ {
        let mut state = Some(((1u128, 0u128), (0u128, 1u128)));
        let mut k = 0usize;
        std::iter::from_fn(move || {
            let (prev, cur) = state?;
            k += 1;
            let a = self.quotient(k) as u128;
            state = a
                .checked_mul(cur.0)
                .and_then(|x| x.checked_add(prev.0))
                .zip(a.checked_mul(cur.1).and_then(|x| x.checked_add(prev.1)))
                // Keep headroom for products of the form j * p * den.
                .filter(|next| next.1 <= 1u128 << 100)
                .map(|next| (cur, next));
            Some(cur)
        })
    }

    /// Denominators `q_0 = 1, q_1 = a_1, ...` up to `limit` (inclusive of the
    /// first one exceeding it).
    pub fn denominators_up_to(&self, limit: u128) -> Vec<u128> {
        let mut out = Vec::new();
        for (_, q) in self.convergents() {
            out.push(q);
            if q > limit {
                break;
            }
        }
        out
    }

    pub fn approx(&self) -> f64 {
        let (p, q) = self.convergents().take(40).last().expect("at least one convergent");
        p as f64 / q as f64
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.head.iter().map(u64::to_string).collect();
        let tail: Vec<String> = self.tail.iter().map(u64::to_string).collect();
        write!(f, "[0;")?;
        if !head.is_empty() {
            write!(f, "{},", head.join(","))?;
        }
        write!(f, "({})]", tail.join(","))?;
        if let Intercept::Rational { num, den } = self.intercept {
            write!(f, "+{num}/{den}")?;
        }
        Ok(())
    }
}

/// `floor(j α + ρ)` for `j = first..=last`, exactly.
///
/// Uses a convergent `p/q` with `q_{m+1} > last · den`: then `|j(α - p/q)|`
/// is smaller than the distance from `j p/q + ρ` to the next integer, unless
/// that value is itself an integer, in which case the side of `α` relative to
/// `p/q` (even convergents lie below `α`) decides.
pub(crate) fn floors(
    slope: &Slope,
    first: u64,
    last: u64,
) -> Result<Vec<u128>, GenError> {
    let (rho_num, rho_den) = match slope.intercept {
        Intercept::Characteristic => (0u128, 1u128),
        Intercept::Rational { num, den } => (num as u128, den as u128),
    };
    let need = (last as u128).saturating_mul(rho_den);
    let mut chosen = None;
    let mut prev: Option<(usize, (u128, u128))> = None;
    for (m, (p, q)) in slope.convergents().enumerate() {
        if let Some(prev) = prev {
            if q > need {
                chosen = Some(prev);
                break;
            }
        }
        prev = Some((m, (p, q)));
    }
    let (m, (p, q)) = chosen.ok_or(GenError::PrecisionOverflow(last as usize))?;
    let alpha_above = m % 2 == 0;
    let den = q * rho_den;
    (first..=last)
        .map(|j| {
            let num = (j as u128)
                .checked_mul(p)
                .and_then(|x| x.checked_mul(rho_den))
                .and_then(|x| x.checked_add(rho_num * q))
                .ok_or(GenError::PrecisionOverflow(last as usize))?;
            let (quot, rem) = num.div_rem(&den);
            Ok(if rem == 0 && j > 0 && !alpha_above {
                quot - 1
            } else {
                quot
            })
        })
        .collect()
}

#[derive(Debug)]
struct Mechanical {
    slope: Slope,
}

impl PrefixGenerator for Mechanical {
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        // Characteristic: x_k = floor((k+2)α) - floor((k+1)α), k >= 0.
        // Rational ρ:     x_k = floor((k+1)α + ρ) - floor(kα + ρ).
        let offset = match self.slope.intercept {
            Intercept::Characteristic => 1,
            Intercept::Rational { .. } => 0,
        };
        let fl = floors(&self.slope, offset, offset + len as u64)?;
        Ok(fl.windows(2).map(|w| (w[1] - w[0]) as u8).collect())
    }

    fn certificate(&self) -> Certificate {
        Certificate::Sturmian {
            denominators: self.slope.denominators_up_to(1u128 << 60),
        }
    }
}

pub(super) fn mechanical(slope: &Slope) -> Result<InfiniteWordSource, GenError> {
    slope.validate()?;
    Ok(InfiniteWordSource::from_generator(
        format!("mechanical{slope}"),
        Alphabet::binary(),
        Mechanical {
            slope: slope.clone(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_convergents() {
        let c: Vec<(u128, u128)> = Slope::fibonacci().convergents().take(6).collect();
        assert_eq!(c, vec![(0, 1), (1, 2), (1, 3), (2, 5), (3, 8), (5, 13)]);
    }

    #[test]
    fn fibonacci_characteristic_prefix() {
        let src = mechanical(&Slope::fibonacci()).unwrap();
        assert_eq!(src.prefix(18).unwrap().to_string(), "010010100100101001");
    }

    #[test]
    fn floors_agree_with_float_away_from_integers() {
        let slope = Slope::new(vec![], vec![2]).unwrap(); // √2 - 1
        let alpha = 2f64.sqrt() - 1.0;
        let fl = floors(&slope, 0, 2000).unwrap();
        for (j, f) in fl.iter().enumerate() {
            assert_eq!(*f, (j as f64 * alpha).floor() as u128);
        }
    }

    #[test]
    fn rational_intercept() {
        let slope = Slope::fibonacci()
            .with_intercept(Intercept::Rational { num: 1, den: 2 })
            .unwrap();
        let alpha = (3.0 - 5f64.sqrt()) / 2.0;
        let src = mechanical(&slope).unwrap();
        let expected: String = (0..200)
            .map(|k| {
                let d = ((k + 1) as f64 * alpha + 0.5).floor() - (k as f64 * alpha + 0.5).floor();
                if d > 0.5 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        assert_eq!(src.prefix(200).unwrap().to_string(), expected);
    }

    #[test]
    fn validation() {
        assert_eq!(Slope::new(vec![2], vec![]), Err(GenError::RationalSlope));
        assert_eq!(
            Slope::new(vec![0], vec![1]),
            Err(GenError::NonPositiveQuotient)
        );
        assert!(matches!(
            Slope::fibonacci().with_intercept(Intercept::Rational { num: 2, den: 2 }),
            Err(GenError::InvalidIntercept(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(Slope::fibonacci().to_string(), "[0;2,(1)]");
    }
}
