//! Finding every occurrence of a solid pattern in an elastic-degenerate text.
//!
//! Each seed is scanned with KMP from the empty state, which reports the
//! occurrences lying inside the seed. Occurrences crossing a symbol are
//! then found from two kinds of starting points:
//!
//! * a solid head in seed `S_i`: every border `b` of the KMP state at the
//!   end of `S_i` is a candidate prefix `P[1..b]`, tested against the
//!   alternatives of the following symbol;
//! * a degenerate head at symbol `e_i`: every pattern prefix that is a
//!   suffix of some alternative of `e_i` (and every full match inside an
//!   alternative).
//!
//! A *tick* `t` at symbol `e_i` records that `P[1..t]` can be spelled so that
//! it ends exactly at the right boundary of `e_i`. Ticks are pushed through
//! the next seed and symbol with constant-time LCE queries until the
//! pattern ends or no tick survives.

mod verify;

pub use verify::{eds_matches_solid, verify_occurrence, Witness};

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::eds::{is_permitted_letter, EdsText, Occurrence};
use crate::kmp::{FailureFunction, KmpState};
use crate::lce::LceOracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern is empty")]
    Empty,
    #[error("pattern byte 0x{byte:02x} at offset {offset} is not a permitted letter")]
    InvalidLetter { offset: usize, byte: u8 },
}

/// Rejects empty patterns and patterns with letters outside the alphabet.
pub fn validate_pattern(pattern: &[u8]) -> Result<(), PatternError> {
    if pattern.is_empty() {
        return Err(PatternError::Empty);
    }
    match pattern.iter().position(|&b| !is_permitted_letter(b)) {
        Some(offset) => Err(PatternError::InvalidLetter {
            offset,
            byte: pattern[offset],
        }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounters {
    /// Candidate heads followed across a symbol (solid and degenerate).
    pub heads_tested: usize,
    /// Tick-extension rounds with a non-empty tick set.
    pub extend_calls: usize,
    /// Deepest chain of extension rounds started from a single head.
    pub max_extend_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    /// Sorted by `(head, tail)`, without duplicates.
    pub occurrences: Vec<Occurrence>,
    /// Largest number of symbol positions covered by one occurrence.
    pub gamma: usize,
    pub counters: SearchCounters,
}

/// Matched prefix lengths ticked at the right boundary of one symbol.
#[derive(Debug, Clone)]
pub struct TickSet {
    symbol: usize,
    flags: Vec<bool>,
    ticked: Vec<usize>,
}

impl TickSet {
    /// An empty set for symbol `symbol` and a pattern of length `m`.
    pub fn new(symbol: usize, m: usize) -> Self {
        Self {
            symbol,
            flags: vec![false; m],
            ticked: Vec::new(),
        }
    }

    pub fn symbol(&self) -> usize {
        self.symbol
    }

    /// Ticks `t`, which must lie in `1..m`. Returns whether it was new.
    pub fn tick(&mut self, t: usize) -> bool {
        debug_assert!(t >= 1 && t < self.flags.len(), "tick {t} out of range");
        if std::mem::replace(&mut self.flags[t], true) {
            return false;
        }
        self.ticked.push(t);
        true
    }

    pub fn is_ticked(&self, t: usize) -> bool {
        self.flags.get(t).copied().unwrap_or(false)
    }

    pub fn is_empty(&self) -> bool {
        self.ticked.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ticked.len()
    }

    /// Ticks in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.ticked.iter().copied()
    }

    fn reset(&mut self, symbol: usize) {
        for &t in &self.ticked {
            self.flags[t] = false;
        }
        self.ticked.clear();
        self.symbol = symbol;
    }
}

/// Preprocessed pattern and text, reusable across searches.
#[derive(Debug)]
pub struct Matcher<'t> {
    text: &'t EdsText,
    failure: FailureFunction,
    oracle: LceOracle,
    /// Oracle id of the first alternative of each symbol; seeds use ids `0..k`.
    alt_ids: Vec<usize>,
}

impl<'t> Matcher<'t> {
    pub fn new(pattern: &[u8], text: &'t EdsText) -> Result<Self, PatternError> {
        validate_pattern(pattern)?;
        let failure = FailureFunction::build(pattern).expect("pattern is non-empty");

        let mut refs: Vec<&[u8]> = text.seeds().iter().map(Vec::as_slice).collect();
        let mut alt_ids = Vec::with_capacity(text.symbols().len());
        for symbol in text.symbols() {
            alt_ids.push(refs.len());
            refs.extend(symbol.alternatives().iter().map(Vec::as_slice));
        }
        let oracle = LceOracle::build(pattern, &refs);

        Ok(Self {
            text,
            failure,
            oracle,
            alt_ids,
        })
    }

    pub fn text(&self) -> &EdsText {
        self.text
    }

    pub fn failure(&self) -> &FailureFunction {
        &self.failure
    }

    pub fn oracle(&self) -> &LceOracle {
        &self.oracle
    }

    pub fn pattern(&self) -> &[u8] {
        self.failure.pattern()
    }

    pub fn search(&self) -> MatchReport {
        let mut run = SearchRun::new(self);
        let k = self.text.seed_count();
        for i in 0..k {
            let q = run.scan_seed(i);
            if i + 1 < k {
                run.process_type1(i, q);
                run.process_type2(i);
            }
        }
        run.finish()
    }
}

/// Searches `text` for every occurrence of `pattern`.
pub fn search(pattern: &[u8], text: &EdsText) -> Result<MatchReport, PatternError> {
    Ok(Matcher::new(pattern, text)?.search())
}

/// State of one search: the occurrences found so far and reusable buffers.
#[derive(Debug)]
pub struct SearchRun<'m, 't> {
    matcher: &'m Matcher<'t>,
    found: BTreeSet<Occurrence>,
    counters: SearchCounters,
    spare: Option<TickSet>,
}

impl<'m, 't> SearchRun<'m, 't> {
    pub fn new(matcher: &'m Matcher<'t>) -> Self {
        Self {
            matcher,
            found: BTreeSet::new(),
            counters: SearchCounters::default(),
            spare: None,
        }
    }

    fn m(&self) -> usize {
        self.matcher.failure.pattern_len()
    }

    fn report(&mut self, head: usize, tail: usize) {
        self.found.insert(Occurrence { head, tail });
    }

    fn tick_set(&mut self, symbol: usize) -> TickSet {
        match self.spare.take() {
            Some(mut t) => {
                t.reset(symbol);
                t
            }
            None => TickSet::new(symbol, self.m()),
        }
    }

    /// Reports the occurrences inside seed `i` and returns the KMP state at its end.
    pub fn scan_seed(&mut self, i: usize) -> KmpState {
        let matcher = self.matcher;
        let seed = &matcher.text.seeds()[i];
        // The last letter of seed i at 0-based index j sits at start + j.
        let start = matcher.text.seed_start(i);
        let m = self.m();
        matcher.failure.scan(KmpState::START, seed, |end| {
            self.found.insert(Occurrence {
                head: start + end + 1 - m,
                tail: start + end,
            });
        })
    }

    /// Heads in seed `i` that run into symbol `i`, one per border of `q`.
    pub fn process_type1(&mut self, i: usize, q: KmpState) {
        let matcher = self.matcher;
        let text = matcher.text;
        let m = self.m();
        let symbol_pos = text.symbol_position(i);
        let alt_id = matcher.alt_ids[i];

        for b in matcher.failure.border_chain(q.matched()) {
            self.counters.heads_tested += 1;
            let head = symbol_pos - b;
            let mut ticks = self.tick_set(i);
            for (j, alt) in text.symbols()[i].alternatives().iter().enumerate() {
                let l = matcher.oracle.lce_at(b, alt_id + j, 0);
                if l == m - b {
                    self.report(head, symbol_pos);
                } else if l == alt.len() {
                    ticks.tick(b + l);
                }
            }
            self.extend(ticks, head);
        }
    }

    /// Heads inside the alternatives of symbol `i`.
    pub fn process_type2(&mut self, i: usize) {
        let matcher = self.matcher;
        let text = matcher.text;
        let head = text.symbol_position(i);
        self.counters.heads_tested += 1;

        let mut ticks = self.tick_set(i);
        for alt in text.symbols()[i].alternatives() {
            let mut inside = false;
            let q = matcher
                .failure
                .scan(KmpState::START, alt, |_| inside = true);
            if inside {
                self.report(head, head);
            }
            for b in matcher.failure.border_chain(q.matched()) {
                ticks.tick(b);
            }
        }
        self.extend(ticks, head);
    }

    /// Pushes the ticks of `ticks` (at symbol `i`) through seed `i + 1` and
    /// symbol `i + 1`, repeating until the pattern ends or no tick survives.
    pub fn extend(&mut self, ticks: TickSet, head: usize) {
        let matcher = self.matcher;
        let text = matcher.text;
        let k = text.seed_count();
        let m = self.m();

        let mut current = ticks;
        let mut next = self.tick_set(0);
        let mut depth = 0;
        while !current.is_empty() {
            depth += 1;
            self.counters.extend_calls += 1;
            let seed = current.symbol + 1;
            let seed_len = text.seeds()[seed].len();
            next.reset(seed);

            for t in current.iter() {
                let ls = matcher.oracle.lce_at(t, seed, 0);
                if ls == m - t {
                    self.report(head, text.seed_start(seed) + ls - 1);
                } else if ls == seed_len && seed + 1 < k {
                    let e = t + seed_len;
                    let symbol_pos = text.symbol_position(seed);
                    let alt_id = matcher.alt_ids[seed];
                    for (j, alt) in text.symbols()[seed].alternatives().iter().enumerate() {
                        let le = matcher.oracle.lce_at(e, alt_id + j, 0);
                        if le == m - e {
                            self.report(head, symbol_pos);
                        } else if le == alt.len() {
                            next.tick(e + le);
                        }
                    }
                }
            }
            std::mem::swap(&mut current, &mut next);
        }
        debug_assert!(depth < k, "extension depth {depth} with {k} seeds");
        self.counters.max_extend_depth = self.counters.max_extend_depth.max(depth);
        self.spare = Some(next);
    }

    pub fn finish(self) -> MatchReport {
        let text = self.matcher.text;
        let occurrences: Vec<Occurrence> = self.found.into_iter().collect();
        let gamma = occurrences
            .iter()
            .map(|o| text.symbols_between(o.head, o.tail))
            .max()
            .unwrap_or(0);
        MatchReport {
            occurrences,
            gamma,
            counters: self.counters,
        }
    }
}
