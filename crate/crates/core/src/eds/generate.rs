use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{DegenerateSymbol, EdsText};

/// Letters used by the generator, in order; `sigma` takes a prefix.
pub const GENERATOR_ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

/// An inclusive `lo..=hi` range, written `lo..hi` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LenRange {
    pub lo: usize,
    pub hi: usize,
}

impl LenRange {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    pub const fn exactly(v: usize) -> Self {
        Self { lo: v, hi: v }
    }

    fn range(self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for LenRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for LenRange {
    type Err = String;

    /// Accepts `A..B`, `A..=B` (both inclusive) or a single `A`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("invalid range bound {t:?}: {e}"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Ok(Self::new(num(lo)?, num(hi)?))
            }
            None => num(s).map(Self::exactly),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    /// Number of seeds.
    pub k: LenRange,
    pub seed_len: LenRange,
    /// Alternatives per symbol.
    pub alts: LenRange,
    pub alt_len: LenRange,
    /// Alphabet size; letters are the first `sigma` of [`GENERATOR_ALPHABET`].
    pub sigma: usize,
    /// Chance that an alternative is forced empty.
    pub empty_prob: f64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        Self {
            k: LenRange::new(1, 5),
            seed_len: LenRange::new(0, 5),
            alts: LenRange::new(2, 4),
            alt_len: LenRange::new(0, 5),
            sigma: 4,
            empty_prob: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("empty range {name} = {range}")]
    EmptyRange { name: &'static str, range: LenRange },
    #[error("k must be at least 1")]
    NoSeeds,
    #[error("symbols need at least one alternative")]
    NoAlternatives,
    #[error("sigma must be in 1..=26, got {0}")]
    Sigma(usize),
    #[error("empty-alternative probability {0} is not in [0, 1]")]
    EmptyProb(f64),
    #[error("single-alternative symbols need a non-empty alternative, but alt-len is {0}")]
    LoneEmpty(LenRange),
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<(), GenerateError> {
        for (name, range) in [
            ("k", self.k),
            ("seed-len", self.seed_len),
            ("alts", self.alts),
            ("alt-len", self.alt_len),
        ] {
            if range.lo > range.hi {
                return Err(GenerateError::EmptyRange { name, range });
            }
        }
        if self.k.lo == 0 {
            return Err(GenerateError::NoSeeds);
        }
        if self.alts.lo == 0 {
            return Err(GenerateError::NoAlternatives);
        }
        if self.sigma == 0 || self.sigma > GENERATOR_ALPHABET.len() {
            return Err(GenerateError::Sigma(self.sigma));
        }
        if !(0.0..=1.0).contains(&self.empty_prob) {
            return Err(GenerateError::EmptyProb(self.empty_prob));
        }
        if self.alts.lo == 1 && self.alt_len.hi == 0 && self.k.hi > 1 {
            return Err(GenerateError::LoneEmpty(self.alt_len));
        }
        Ok(())
    }
}

/// Generates a text deterministically from `rng_seed`.
pub fn generate_random(params: &GeneratorParams, rng_seed: u64) -> Result<EdsText, GenerateError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let letters = &GENERATOR_ALPHABET[..params.sigma];
    let word = |rng: &mut ChaCha8Rng, len: usize| -> Vec<u8> {
        (0..len)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect()
    };

    let k = rng.gen_range(params.k.range());
    let mut seeds = Vec::with_capacity(k);
    let mut symbols = Vec::with_capacity(k - 1);
    for i in 0..k {
        let len = rng.gen_range(params.seed_len.range());
        seeds.push(word(&mut rng, len));
        if i + 1 == k {
            break;
        }
        let count = rng.gen_range(params.alts.range());
        let alternatives = if count == 1 {
            let len = rng.gen_range(params.alt_len.lo.max(1)..=params.alt_len.hi);
            vec![word(&mut rng, len)]
        } else {
            (0..count)
                .map(|_| {
                    if rng.gen_bool(params.empty_prob) {
                        Vec::new()
                    } else {
                        let len = rng.gen_range(params.alt_len.range());
                        word(&mut rng, len)
                    }
                })
                .collect()
        };
        symbols.push(DegenerateSymbol::new(alternatives).expect("generated symbol is valid"));
    }
    Ok(EdsText::new(seeds, symbols).expect("generated text is valid"))
}
