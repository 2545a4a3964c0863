//! Brute-force reference: expand every spelling of the text and match naively.
//!
//! Nothing here is clever on purpose. It exists to cross-check [`crate::matcher`].

use std::collections::BTreeSet;

use thiserror::Error;

use crate::eds::{EdsText, Occurrence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionBudget {
    pub max_strings: u64,
    pub max_total_letters: u64,
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        Self {
            max_strings: 10_000,
            max_total_letters: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("expansion has {strings} strings, budget is {max}")]
    Strings { strings: u128, max: u64 },
    #[error("expansion has {letters} letters, budget is {max}")]
    Letters { letters: u128, max: u64 },
}

/// One spelling of the text with the text position of every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedString {
    pub letters: Vec<u8>,
    /// `coords[i]` is the position letter `i` came from: its own solid
    /// position, or the position of the symbol whose alternative it is in.
    pub coords: Vec<usize>,
}

/// Number of spellings and their combined length, saturating at `u128::MAX`.
pub fn expansion_size(text: &EdsText) -> (u128, u128) {
    let strings = text
        .symbols()
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128));
    let seed_letters: u128 = text.seeds().iter().map(|s| s.len() as u128).sum();
    // Each alternative of symbol i appears in strings / |e_i| spellings.
    let alt_letters = text.symbols().iter().fold(0u128, |acc, s| {
        let per_alt = strings / s.len() as u128;
        acc.saturating_add(per_alt.saturating_mul(s.total_letters() as u128))
    });
    (
        strings,
        strings
            .saturating_mul(seed_letters)
            .saturating_add(alt_letters),
    )
}

fn check_budget(text: &EdsText, budget: ExpansionBudget) -> Result<(), BudgetExceeded> {
    let (strings, letters) = expansion_size(text);
    if strings > budget.max_strings as u128 {
        return Err(BudgetExceeded::Strings {
            strings,
            max: budget.max_strings,
        });
    }
    if letters > budget.max_total_letters as u128 {
        return Err(BudgetExceeded::Letters {
            letters,
            max: budget.max_total_letters,
        });
    }
    Ok(())
}

/// Every spelling, in odometer order over alternative indices (last symbol fastest).
pub fn expand_possibility_set(
    text: &EdsText,
    budget: ExpansionBudget,
) -> Result<Vec<ExpandedString>, BudgetExceeded> {
    check_budget(text, budget)?;
    let mut out = Vec::new();
    for_each_expansion(text, |e| out.push(e.clone()));
    Ok(out)
}

fn for_each_expansion(text: &EdsText, mut f: impl FnMut(&ExpandedString)) {
    let symbols = text.symbols();
    let mut choice = vec![0usize; symbols.len()];
    let mut e = ExpandedString {
        letters: Vec::new(),
        coords: Vec::new(),
    };
    loop {
        e.letters.clear();
        e.coords.clear();
        let mut pos = 1;
        for (i, seed) in text.seeds().iter().enumerate() {
            for &b in seed {
                e.letters.push(b);
                e.coords.push(pos);
                pos += 1;
            }
            if let Some(symbol) = symbols.get(i) {
                for &b in &symbol.alternatives()[choice[i]] {
                    e.letters.push(b);
                    e.coords.push(pos);
                }
                pos += 1;
            }
        }
        f(&e);

        // Advance the odometer.
        let mut i = symbols.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < symbols[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Union over all spellings of every alignment of `pattern`, mapped back to
/// `(coords[start], coords[end])`.
pub fn naive_occurrences(
    pattern: &[u8],
    text: &EdsText,
    budget: ExpansionBudget,
) -> Result<Vec<Occurrence>, BudgetExceeded> {
    check_budget(text, budget)?;
    let mut found = BTreeSet::new();
    let m = pattern.len();
    if m > 0 {
        for_each_expansion(text, |e| {
            for (start, window) in e.letters.windows(m).enumerate() {
                if window == pattern {
                    found.insert(Occurrence::new(e.coords[start], e.coords[start + m - 1]));
                }
            }
        });
    }
    Ok(found.into_iter().collect())
}
