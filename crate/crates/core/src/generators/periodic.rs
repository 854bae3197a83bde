use super::{Certificate, InfiniteWordSource, PrefixGenerator};
use crate::error::{GenError, WordError};
use crate::word::FiniteWord;

#[derive(Debug)]
struct UltimatelyPeriodic {
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

impl PrefixGenerator for UltimatelyPeriodic {
    fn generate(&self, len: usize) -> Result<Vec<u8>, GenError> {
        Ok(self
            .preperiod
            .iter()
            .chain(self.period.iter().cycle())
            .take(len)
            .copied()
            .collect())
    }

    fn certificate(&self) -> Certificate {
        Certificate::Periodic {
            preperiod: self.preperiod.len(),
            period: self.period.len(),
        }
    }
}

pub(super) fn ultimately_periodic(
    preperiod: &FiniteWord,
    period: &FiniteWord,
) -> Result<InfiniteWordSource, GenError> {
    if period.is_empty() {
        return Err(GenError::EmptyPeriod);
    }
    if preperiod.alphabet() != period.alphabet() {
        return Err(WordError::AlphabetMismatch.into());
    }
    let id = if preperiod.is_empty() {
        format!("({period})^w")
    } else {
        format!("{preperiod}({period})^w")
    };
    Ok(InfiniteWordSource::from_generator(
        id,
        period.alphabet().clone(),
        UltimatelyPeriodic {
            preperiod: preperiod.letters().to_vec(),
            period: period.letters().to_vec(),
        },
    ))
}
