//! Longest common extension between suffixes of a pattern and suffixes of
//! a set of reference strings.
//!
//! The pattern and every reference are joined into one integer string with a
//! distinct separator after each piece (letters keep their byte value,
//! separators are `256 + id`), so no common prefix can run across a string
//! boundary. A query is then a range minimum over the LCP array between the
//! ranks of the two suffixes.
//!
//! Build: O(L log L) for total length L. Query: O(1).

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LceError {
    #[error("pattern position {pos} out of range 1..={max}")]
    PatternPos { pos: usize, max: usize },
    #[error("reference id {id} out of range (have {count})")]
    RefId { id: usize, count: usize },
    #[error("reference position {pos} out of range 1..={max}")]
    RefPos { pos: usize, max: usize },
}

#[derive(Debug, Clone)]
pub struct LceOracle {
    pattern_len: usize,
    /// Start of each reference in the concatenation.
    ref_starts: Vec<u32>,
    ref_lens: Vec<u32>,
    /// Suffix rank of each concatenation index.
    rank: Vec<u32>,
    rmq: SparseTable,
}

impl LceOracle {
    pub fn build<R: AsRef<[u8]>>(pattern: &[u8], refs: &[R]) -> Self {
        let total = pattern.len() + 1 + refs.iter().map(|r| r.as_ref().len() + 1).sum::<usize>();
        assert!(
            total + 256 < u32::MAX as usize,
            "concatenation of {total} symbols is too large"
        );

        let mut text = Vec::with_capacity(total);
        text.extend(pattern.iter().map(|&b| u32::from(b)));
        text.push(256);
        let mut ref_starts = Vec::with_capacity(refs.len());
        let mut ref_lens = Vec::with_capacity(refs.len());
        for (id, r) in refs.iter().enumerate() {
            let r = r.as_ref();
            ref_starts.push(text.len() as u32);
            ref_lens.push(r.len() as u32);
            text.extend(r.iter().map(|&b| u32::from(b)));
            text.push(257 + id as u32);
        }

        let sa = suffix_array(&text);
        let mut rank = vec![0u32; sa.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = lcp_array(&text, &sa, &rank);

        Self {
            pattern_len: pattern.len(),
            ref_starts,
            ref_lens,
            rank,
            rmq: SparseTable::new(lcp),
        }
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern_len
    }

    pub fn ref_count(&self) -> usize {
        self.ref_starts.len()
    }

    pub fn ref_len(&self, id: usize) -> usize {
        self.ref_lens[id] as usize
    }

    /// Longest common prefix of `P[pattern_pos..]` and `ref[ref_pos..]`,
    /// both 1-based. `m + 1` and `|ref| + 1` denote empty suffixes.
    pub fn lce(
        &self,
        pattern_pos: usize,
        ref_id: usize,
        ref_pos: usize,
    ) -> Result<usize, LceError> {
        if pattern_pos == 0 || pattern_pos > self.pattern_len + 1 {
            return Err(LceError::PatternPos {
                pos: pattern_pos,
                max: self.pattern_len + 1,
            });
        }
        let Some(&len) = self.ref_lens.get(ref_id) else {
            return Err(LceError::RefId {
                id: ref_id,
                count: self.ref_lens.len(),
            });
        };
        if ref_pos == 0 || ref_pos > len as usize + 1 {
            return Err(LceError::RefPos {
                pos: ref_pos,
                max: len as usize + 1,
            });
        }
        Ok(self.lce_at(pattern_pos - 1, ref_id, ref_pos - 1))
    }

    /// Unchecked, 0-based form of [`lce`](Self::lce): `P[p..]` against `ref[j..]`.
    #[inline]
    pub fn lce_at(&self, p: usize, ref_id: usize, j: usize) -> usize {
        debug_assert!(p <= self.pattern_len && j <= self.ref_lens[ref_id] as usize);
        if p == self.pattern_len || j == self.ref_lens[ref_id] as usize {
            return 0;
        }
        let a = self.rank[p];
        let b = self.rank[self.ref_starts[ref_id] as usize + j];
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo as usize + 1, hi as usize) as usize
    }
}

/// Suffix array by prefix doubling with two-pass counting sort.
pub(crate) fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let alphabet = s.iter().copied().max().unwrap() as usize + 1;

    // Initial order and ranks from single symbols.
    let mut sa = counting_sort_indices(n, alphabet, |i| s[i] as usize);
    let mut rank = vec![0u32; n];
    let mut classes = 1;
    for w in 1..n {
        if s[sa[w] as usize] != s[sa[w - 1] as usize] {
            classes += 1;
        }
        rank[sa[w] as usize] = classes - 1;
    }

    let mut tmp = vec![0u32; n];
    let mut order = vec![0u32; n];
    let mut count = vec![0usize; n.max(1) + 1];
    let mut h = 1;
    while (classes as usize) < n {
        // Order by second key: suffixes without a second half come first.
        let mut w = 0;
        for i in n.saturating_sub(h)..n {
            order[w] = i as u32;
            w += 1;
        }
        for &i in &sa {
            if i as usize >= h {
                order[w] = i - h as u32;
                w += 1;
            }
        }
        // Stable by first key.
        count[..classes as usize + 1].fill(0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes as usize {
            count[c] += count[c - 1];
        }
        for &i in &order {
            let r = rank[i as usize] as usize;
            sa[count[r]] = i;
            count[r] += 1;
        }
        // Re-rank.
        let key = |i: u32| {
            let i = i as usize;
            (rank[i], if i + h < n { rank[i + h] as i64 } else { -1 })
        };
        tmp[sa[0] as usize] = 0;
        classes = 1;
        for w in 1..n {
            if key(sa[w]) != key(sa[w - 1]) {
                classes += 1;
            }
            tmp[sa[w] as usize] = classes - 1;
        }
        std::mem::swap(&mut rank, &mut tmp);
        h *= 2;
    }
    sa
}

fn counting_sort_indices(n: usize, buckets: usize, key: impl Fn(usize) -> usize) -> Vec<u32> {
    let mut count = vec![0usize; buckets + 1];
    for i in 0..n {
        count[key(i) + 1] += 1;
    }
    for c in 1..=buckets {
        count[c] += count[c - 1];
    }
    let mut out = vec![0u32; n];
    for i in 0..n {
        let k = key(i);
        out[count[k]] = i as u32;
        count[k] += 1;
    }
    out
}

/// Kasai et al.: `lcp[r]` is the LCP of suffixes `sa[r - 1]` and `sa[r]`; `lcp[0] = 0`.
pub(crate) fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Range minimum in O(1) over `O(n log n)` precomputed minima.
#[derive(Debug, Clone)]
struct SparseTable {
    /// `levels[k][i] = min(a[i..i + 2^k])`.
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    fn new(a: Vec<u32>) -> Self {
        let n = a.len();
        let mut levels = vec![a];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    /// Minimum over the inclusive range `[lo, hi]`.
    #[inline]
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let k = (hi - lo + 1).ilog2() as usize;
        let level = &self.levels[k];
        level[lo].min(level[hi + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_lce(p: &[u8], r: &[u8], i: usize, j: usize) -> usize {
        p[i..]
            .iter()
            .zip(&r[j..])
            .take_while(|(a, b)| a == b)
            .count()
    }

    #[test]
    fn suffix_array_small() {
        let s: Vec<u32> = b"banana".iter().map(|&b| b as u32).collect();
        assert_eq!(suffix_array(&s), [5, 3, 1, 0, 4, 2]);
        assert!(suffix_array(&[]).is_empty());
        assert_eq!(suffix_array(&[7]), [0]);
        let s: Vec<u32> = b"aaaa".iter().map(|&b| b as u32).collect();
        assert_eq!(suffix_array(&s), [3, 2, 1, 0]);
    }

    #[test]
    fn examples() {
        let o = LceOracle::build(b"cabbcb", &[b"cabb"]);
        assert_eq!(naive_lce(b"cabbcb", b"cabb", 0, 0), 4);
        assert_eq!(o.lce(1, 0, 1), Ok(4));
        assert_eq!(o.lce(7, 0, 1), Ok(0));

        let o = LceOracle::build(b"abc", &[b"abc"]);
        assert_eq!(o.lce(1, 0, 1), Ok(3));

        let o = LceOracle::build(b"ab", &[b"ab"]);
        assert_eq!(o.lce(1, 0, 1), Ok(2));
        assert_eq!(o.lce(2, 0, 2), Ok(1));

        let o = LceOracle::build(b"a", &[b""]);
        assert_eq!(o.lce(1, 0, 1), Ok(0));
        assert_eq!(o.lce(2, 0, 1), Ok(0));
    }

    #[test]
    fn identical_refs_do_not_bleed() {
        // Equal strings must still stop at their own separators.
        let o = LceOracle::build(b"abab", &[&b"ab"[..], b"ab", b"abab"]);
        assert_eq!(o.lce(1, 0, 1), Ok(2));
        assert_eq!(o.lce(1, 1, 1), Ok(2));
        assert_eq!(o.lce(1, 2, 1), Ok(4));
        assert_eq!(o.lce(3, 2, 1), Ok(2));
    }

    #[test]
    fn out_of_range() {
        let o = LceOracle::build(b"ab", &[b"abc"]);
        assert_eq!(o.lce(0, 0, 1), Err(LceError::PatternPos { pos: 0, max: 3 }));
        assert_eq!(o.lce(4, 0, 1), Err(LceError::PatternPos { pos: 4, max: 3 }));
        assert_eq!(o.lce(1, 1, 1), Err(LceError::RefId { id: 1, count: 1 }));
        assert_eq!(o.lce(1, 0, 5), Err(LceError::RefPos { pos: 5, max: 4 }));
        assert_eq!(o.lce(1, 0, 4), Ok(0));
    }

    proptest! {
        #[test]
        fn matches_naive_scan(
            p in "[abc]{1,12}",
            refs in prop::collection::vec("[abc]{0,12}", 1..6),
        ) {
            let (p, refs): (&[u8], Vec<&[u8]>) = (p.as_bytes(), refs.iter().map(|r| r.as_bytes()).collect());
            let o = LceOracle::build(p, &refs);
            for (id, r) in refs.iter().enumerate() {
                for i in 0..=p.len() {
                    for j in 0..=r.len() {
                        let got = o.lce(i + 1, id, j + 1).unwrap();
                        prop_assert_eq!(got, naive_lce(p, r, i, j));
                        // zero iff an empty side or a first-letter mismatch
                        prop_assert_eq!(got == 0, i == p.len() || j == r.len() || p[i] != r[j]);
                        if got > 0 {
                            prop_assert_eq!(o.lce(i + 2, id, j + 2).unwrap(), got - 1);
                        }
                    }
                }
            }
        }

        #[test]
        fn suffix_array_is_sorted(s in prop::collection::vec(0u32..4, 0..60)) {
            let sa = suffix_array(&s);
            let mut expected: Vec<u32> = (0..s.len() as u32).collect();
            expected.sort_by(|&a, &b| s[a as usize..].cmp(&s[b as usize..]));
            prop_assert_eq!(sa, expected);
        }
    }
}
