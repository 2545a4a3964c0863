use crate::eds::{EdsText, Occurrence, PositionKind};

/// Whether `y` is one of the strings obtained by picking one alternative per symbol.
///
/// Tracks the set of prefix lengths of `y` that can be spelled up to each
/// segment boundary, so nothing is ever expanded.
pub fn eds_matches_solid(text: &EdsText, y: &[u8]) -> bool {
    let mut reachable = vec![false; y.len() + 1];
    reachable[0] = true;
    let mut next = vec![false; y.len() + 1];

    let advance = |reachable: &[bool], next: &mut [bool], piece: &[u8]| {
        for (p, _) in reachable.iter().enumerate().filter(|(_, &r)| r) {
            if y[p..].starts_with(piece) {
                next[p + piece.len()] = true;
            }
        }
    };

    for (i, seed) in text.seeds().iter().enumerate() {
        next.fill(false);
        advance(&reachable, &mut next, seed);
        std::mem::swap(&mut reachable, &mut next);
        if let Some(symbol) = text.symbols().get(i) {
            next.fill(false);
            for alt in symbol.alternatives() {
                advance(&reachable, &mut next, alt);
            }
            std::mem::swap(&mut reachable, &mut next);
        }
        if !reachable.contains(&true) {
            return false;
        }
    }
    reachable[y.len()]
}

/// Alternative choices `(symbol index, alternative index)` that realise an
/// occurrence, for every symbol between head and tail inclusive.
pub type Witness = Vec<(usize, usize)>;

/// Searches for a choice of alternatives that spells `pattern` from `occ.head`
/// to `occ.tail`: the first pattern letter must come from the head position
/// and the last from the tail position.
///
/// Returns the first witness found, or `None`.
pub fn verify_occurrence(pattern: &[u8], text: &EdsText, occ: Occurrence) -> Option<Witness> {
    if pattern.is_empty() || occ.head > occ.tail {
        return None;
    }
    let head = text.position_info(occ.head).ok()?;
    let tail = text.position_info(occ.tail).ok()?;

    // Segments in text order are seed 0, symbol 0, seed 1, ...; seed i is
    // segment 2i and symbol i is segment 2i + 1.
    let segment = |kind: PositionKind| match kind {
        PositionKind::Solid { seed, .. } => 2 * seed,
        PositionKind::Degenerate { symbol } => 2 * symbol + 1,
    };
    let (first, last) = (segment(head.kind), segment(tail.kind));
    let pieces: Vec<Piece> = (first..=last)
        .map(|seg| {
            if seg % 2 == 1 {
                return Piece::Symbol(seg / 2);
            }
            let seed = seg / 2;
            let from = match head.kind {
                PositionKind::Solid { offset, .. } if seg == first => offset - 1,
                _ => 0,
            };
            let to = match tail.kind {
                PositionKind::Solid { offset, .. } if seg == last => offset,
                _ => text.seeds()[seed].len(),
            };
            Piece::Seed(seed, from, to)
        })
        .collect();

    let mut search = WitnessSearch {
        pattern,
        text,
        pieces: &pieces,
        head_pos: occ.head,
        tail_pos: occ.tail,
        window: Vec::new(),
        coords: Vec::new(),
        choices: Vec::new(),
    };
    search.dfs(0).then_some(search.choices)
}

#[derive(Debug, Clone, Copy)]
enum Piece {
    /// Letters `from..to` (0-based, exclusive end) of a seed.
    Seed(usize, usize, usize),
    Symbol(usize),
}

struct WitnessSearch<'a> {
    pattern: &'a [u8],
    text: &'a EdsText,
    pieces: &'a [Piece],
    head_pos: usize,
    tail_pos: usize,
    window: Vec<u8>,
    coords: Vec<usize>,
    choices: Witness,
}

impl WitnessSearch<'_> {
    fn dfs(&mut self, piece: usize) -> bool {
        if !self.viable() {
            return false;
        }
        let Some(&next) = self.pieces.get(piece) else {
            return self.complete();
        };
        match next {
            Piece::Seed(seed, from, to) => {
                let start = self.text.seed_start(seed);
                let mark = self.window.len();
                self.window
                    .extend_from_slice(&self.text.seeds()[seed][from..to]);
                self.coords.extend((from..to).map(|o| start + o));
                let ok = self.dfs(piece + 1);
                if !ok {
                    self.window.truncate(mark);
                    self.coords.truncate(mark);
                }
                ok
            }
            Piece::Symbol(symbol) => {
                let pos = self.text.symbol_position(symbol);
                let mark = self.window.len();
                for (j, alt) in self.text.symbols()[symbol]
                    .alternatives()
                    .iter()
                    .enumerate()
                {
                    self.window.extend_from_slice(alt);
                    self.coords.extend(std::iter::repeat_n(pos, alt.len()));
                    self.choices.push((symbol, j));
                    if self.dfs(piece + 1) {
                        return true;
                    }
                    self.choices.pop();
                    self.window.truncate(mark);
                    self.coords.truncate(mark);
                }
                false
            }
        }
    }

    /// Some start letter at the head position still agrees with the pattern.
    fn viable(&self) -> bool {
        self.starts().any(|s| {
            let have = &self.window[s..];
            let n = have.len().min(self.pattern.len());
            have[..n] == self.pattern[..n]
        }) || self.window.is_empty()
    }

    fn complete(&self) -> bool {
        let m = self.pattern.len();
        self.starts().any(|s| {
            s + m <= self.window.len()
                && self.window[s..s + m] == *self.pattern
                && self.coords[s + m - 1] == self.tail_pos
        })
    }

    fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .take_while(|(_, &c)| c == self.head_pos)
            .map(|(i, _)| i)
    }
}
