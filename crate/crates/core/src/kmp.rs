//! Knuth-Morris-Pratt failure function and streaming matcher.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("pattern is empty")]
pub struct EmptyPattern;

/// Border table of a pattern: `border(i)` is the length of the longest
/// proper prefix of `P` that is also a suffix of `P[1..i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureFunction {
    pattern: Vec<u8>,
    /// `table[i - 1] = border(i)` for `i` in `1..=m`.
    table: Vec<usize>,
}

impl FailureFunction {
    pub fn build(pattern: &[u8]) -> Result<Self, EmptyPattern> {
        if pattern.is_empty() {
            return Err(EmptyPattern);
        }
        let mut table = vec![0; pattern.len()];
        let mut q = 0;
        for i in 1..pattern.len() {
            while q > 0 && pattern[i] != pattern[q] {
                q = table[q - 1];
            }
            if pattern[i] == pattern[q] {
                q += 1;
            }
            table[i] = q;
        }
        Ok(Self {
            pattern: pattern.to_vec(),
            table,
        })
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern.len()
    }

    /// Border of the prefix of length `i`; `border(0)` is 0.
    #[inline]
    pub fn border(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.table[i - 1]
        }
    }

    /// `[border(1), ..., border(m)]`.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// One KMP transition on `letter`. On a full match the state falls
    /// back to `border(m)` so overlapping occurrences keep being found.
    #[inline]
    pub fn step(&self, state: KmpState, letter: u8) -> (KmpState, bool) {
        let m = self.pattern.len();
        let mut q = state.0;
        while q > 0 && (q == m || self.pattern[q] != letter) {
            q = self.table[q - 1];
        }
        if self.pattern[q] == letter {
            q += 1;
        }
        if q == m {
            (KmpState(self.table[m - 1]), true)
        } else {
            (KmpState(q), false)
        }
    }

    /// Runs the automaton over `text` from `state`, calling `on_match` with the
    /// 0-based index of the last letter of each full match.
    pub fn scan(
        &self,
        mut state: KmpState,
        text: &[u8],
        mut on_match: impl FnMut(usize),
    ) -> KmpState {
        for (i, &b) in text.iter().enumerate() {
            let (next, full) = self.step(state, b);
            state = next;
            if full {
                on_match(i);
            }
        }
        state
    }

    /// All `(start, end)` 1-based alignments of the pattern in `text`.
    pub fn find_occurrences(&self, text: &[u8]) -> Vec<(usize, usize)> {
        let m = self.pattern.len();
        let mut out = Vec::new();
        self.scan(KmpState::START, text, |end| {
            out.push((end + 2 - m, end + 1))
        });
        out
    }

    /// `[q, border(q), border(border(q)), ...]` without the final 0: every
    /// length `b >= 1` such that `P[1..b]` is a suffix of text whose state is `q`.
    pub fn border_chain(&self, q: usize) -> BorderChain<'_> {
        BorderChain {
            failure: self,
            next: q,
        }
    }
}

/// Length of the longest pattern prefix that is a suffix of the text consumed so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KmpState(pub usize);

impl KmpState {
    pub const START: KmpState = KmpState(0);

    pub fn matched(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
pub struct BorderChain<'a> {
    failure: &'a FailureFunction,
    next: usize,
}

impl Iterator for BorderChain<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.next == 0 {
            return None;
        }
        let b = self.next;
        self.next = self.failure.border(b);
        Some(b)
    }
}

/// Convenience wrapper over [`FailureFunction::find_occurrences`].
pub fn find_occurrences(pattern: &[u8], text: &[u8]) -> Result<Vec<(usize, usize)>, EmptyPattern> {
    Ok(FailureFunction::build(pattern)?.find_occurrences(text))
}
