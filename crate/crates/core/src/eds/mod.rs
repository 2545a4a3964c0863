//! Elastic-degenerate strings.
//!
//! An [`EdsText`] is a sequence `S1 e1 S2 e2 ... e(k-1) Sk` of solid seeds
//! interleaved with [`DegenerateSymbol`]s. Every seed letter occupies one
//! *solid* position and every symbol occupies exactly one *degenerate*
//! position, regardless of how long its alternatives are. Positions are
//! 1-based; seed and symbol indices are 0-based (`seeds()[0]` is `S1`).

mod format;
mod generate;
mod variants;

pub use format::{parse_eds, serialize_eds, ParseError, ParseErrorKind};
pub use generate::{generate_random, GenerateError, GeneratorParams, LenRange};
pub use variants::{
    from_reference_and_variants, parse_reference, parse_variants, Variant, VariantError,
};

use serde::Serialize;
use thiserror::Error;

/// Returns `true` if `b` may appear in a seed, an alternative, or a pattern.
///
/// Letters are printable non-space ASCII bytes other than `{`, `}` and `,`.
#[inline]
pub fn is_permitted_letter(b: u8) -> bool {
    b.is_ascii_graphic() && !matches!(b, b'{' | b'}' | b',')
}

/// Index of the first byte of `s` that is not a permitted letter.
pub fn first_invalid_letter(s: &[u8]) -> Option<usize> {
    s.iter().position(|&b| !is_permitted_letter(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("byte 0x{byte:02x} is not a permitted letter ({context})")]
    InvalidLetter { byte: u8, context: String },
    #[error("degenerate symbol has no alternatives")]
    NoAlternatives,
    #[error("degenerate symbol with a single empty alternative cannot be represented")]
    LoneEmptyAlternative,
    #[error("expected {expected} seeds for {symbols} symbols, got {got}")]
    SeedCount {
        expected: usize,
        symbols: usize,
        got: usize,
    },
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
}

fn check_letters(s: &[u8], context: impl FnOnce() -> String) -> Result<(), TextError> {
    match first_invalid_letter(s) {
        None => Ok(()),
        Some(i) => Err(TextError::InvalidLetter {
            byte: s[i],
            context: context(),
        }),
    }
}

/// One degenerate position holding a non-empty list of alternatives.
///
/// Alternatives keep their input order and duplicates are preserved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegenerateSymbol {
    alternatives: Vec<Vec<u8>>,
}

impl DegenerateSymbol {
    pub fn new(alternatives: Vec<Vec<u8>>) -> Result<Self, TextError> {
        match alternatives.as_slice() {
            [] => return Err(TextError::NoAlternatives),
            [only] if only.is_empty() => return Err(TextError::LoneEmptyAlternative),
            _ => {}
        }
        for (j, alt) in alternatives.iter().enumerate() {
            check_letters(alt, || format!("alternative {}", j + 1))?;
        }
        Ok(Self { alternatives })
    }

    pub fn alternatives(&self) -> &[Vec<u8>] {
        &self.alternatives
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    /// Always `false`; present for API symmetry with [`len`](Self::len).
    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn min_length(&self) -> usize {
        self.alternatives.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_length(&self) -> usize {
        self.alternatives.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_letters(&self) -> usize {
        self.alternatives.iter().map(Vec::len).sum()
    }
}

/// An elastic-degenerate text with a precomputed coordinate system.
#[derive(Debug, Clone)]
pub struct EdsText {
    seeds: Vec<Vec<u8>>,
    symbols: Vec<DegenerateSymbol>,
    /// Position the first letter of each seed would occupy.
    seed_starts: Vec<usize>,
    symbol_positions: Vec<usize>,
    len: usize,
}

impl PartialEq for EdsText {
    fn eq(&self, other: &Self) -> bool {
        self.seeds == other.seeds && self.symbols == other.symbols
    }
}

impl Eq for EdsText {}

impl EdsText {
    /// Builds a text from `k` seeds and `k - 1` symbols.
    pub fn new(seeds: Vec<Vec<u8>>, symbols: Vec<DegenerateSymbol>) -> Result<Self, TextError> {
        if seeds.len() != symbols.len() + 1 {
            return Err(TextError::SeedCount {
                expected: symbols.len() + 1,
                symbols: symbols.len(),
                got: seeds.len(),
            });
        }
        for (i, seed) in seeds.iter().enumerate() {
            check_letters(seed, || format!("seed {}", i + 1))?;
        }

        let mut seed_starts = Vec::with_capacity(seeds.len());
        let mut symbol_positions = Vec::with_capacity(symbols.len());
        let mut next = 1;
        for (i, seed) in seeds.iter().enumerate() {
            seed_starts.push(next);
            next += seed.len();
            if i < symbols.len() {
                symbol_positions.push(next);
                next += 1;
            }
        }

        Ok(Self {
            seeds,
            symbols,
            seed_starts,
            symbol_positions,
            len: next - 1,
        })
    }

    /// A text made of a single seed.
    pub fn solid(seed: impl Into<Vec<u8>>) -> Result<Self, TextError> {
        Self::new(vec![seed.into()], Vec::new())
    }

    pub fn seeds(&self) -> &[Vec<u8>] {
        &self.seeds
    }

    pub fn symbols(&self) -> &[DegenerateSymbol] {
        &self.symbols
    }

    /// Number of seeds, `k`.
    pub fn seed_count(&self) -> usize {
        self.seeds.len()
    }

    /// Length `n`: seed letters plus one position per symbol.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Total size `N`: seed letters plus the letters of every alternative.
    pub fn total_size(&self) -> usize {
        self.seeds.iter().map(Vec::len).sum::<usize>()
            + self
                .symbols
                .iter()
                .map(DegenerateSymbol::total_letters)
                .sum::<usize>()
    }

    /// Position of the first letter of seed `i` (or where it would be, if empty).
    pub fn seed_start(&self, i: usize) -> usize {
        self.seed_starts[i]
    }

    /// Degenerate position of symbol `i`.
    pub fn symbol_position(&self, i: usize) -> usize {
        self.symbol_positions[i]
    }

    pub fn symbol_positions(&self) -> &[usize] {
        &self.symbol_positions
    }

    /// Number of symbols whose position lies in `[from, to]`.
    pub fn symbols_between(&self, from: usize, to: usize) -> usize {
        if from > to {
            return 0;
        }
        let lo = self.symbol_positions.partition_point(|&p| p < from);
        let hi = self.symbol_positions.partition_point(|&p| p <= to);
        hi - lo
    }

    pub fn position_info(&self, position: usize) -> Result<PositionInfo, TextError> {
        if position == 0 || position > self.len {
            return Err(TextError::PositionOutOfRange {
                position,
                len: self.len,
            });
        }
        // Seed i covers [seed_starts[i], symbol_positions[i]).
        let seed = self.seed_starts.partition_point(|&s| s <= position) - 1;
        let kind = if self.symbol_positions.get(seed) == Some(&position) {
            PositionKind::Degenerate { symbol: seed }
        } else {
            PositionKind::Solid {
                seed,
                offset: position - self.seed_starts[seed] + 1,
            }
        };
        Ok(PositionInfo { position, kind })
    }

    pub fn stats(&self) -> TextStats {
        TextStats {
            n: self.len,
            total_size: self.total_size(),
            k: self.seeds.len(),
            alpha: self
                .symbols
                .iter()
                .map(DegenerateSymbol::len)
                .max()
                .unwrap_or(0),
            alternatives_total: self.symbols.iter().map(DegenerateSymbol::len).sum(),
        }
    }

    /// Indices of symbols holding exactly one alternative.
    pub fn singleton_symbols(&self) -> impl Iterator<Item = usize> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() == 1)
            .map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionKind {
    /// Letter `offset` (1-based) of seed `seed`.
    Solid {
        seed: usize,
        offset: usize,
    },
    Degenerate {
        symbol: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionInfo {
    pub position: usize,
    pub kind: PositionKind,
}

impl PositionInfo {
    pub fn is_solid(&self) -> bool {
        matches!(self.kind, PositionKind::Solid { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TextStats {
    pub n: usize,
    #[serde(rename = "N")]
    pub total_size: usize,
    pub k: usize,
    /// Largest number of alternatives in any symbol; 0 without symbols.
    pub alpha: usize,
    pub alternatives_total: usize,
}

/// An occurrence of a pattern, as `(head, tail)` positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Occurrence {
    pub head: usize,
    pub tail: usize,
}

impl Occurrence {
    pub fn new(head: usize, tail: usize) -> Self {
        Self { head, tail }
    }
}

impl From<(usize, usize)> for Occurrence {
    fn from((head, tail): (usize, usize)) -> Self {
        Self { head, tail }
    }
}
