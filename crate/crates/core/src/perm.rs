//! Permutation algebra: patterns, the Baxter and simple predicates, blocks,
//! inflation and canonical substitution decomposition.
//!
//! Positions and values are one-indexed throughout.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection on `{1..n}` stored in one-line notation, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

/// A segment of positions `start..=end` whose values form a consecutive range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Singletons and the whole interval `1..=n`.
    pub fn is_trivial(&self, n: usize) -> bool {
        self.start == self.end || (self.start == 1 && self.end == n)
    }
}

/// `skeleton[children[0], …, children[m-1]]`, with children listed by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub skeleton: Permutation,
    pub children: Vec<Permutation>,
}

/// Reverse, complement and inverse images of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetries {
    pub reverse: Permutation,
    pub complement: Permutation,
    pub inverse: Permutation,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::NotAPermutation("empty sequence".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::NotAPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees `values` is a bijection on `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok(), "{values:?}");
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation((1..=n).collect())
    }

    /// Rank-orders a sequence of distinct integers, e.g. `4 1 5 2 -> 3 1 4 2`.
    pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::NotAPermutation("empty sequence".into()));
        }
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
            return Err(Error::NotAPermutation("repeated entries".into()));
        }
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Ok(Permutation(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    /// Value at one-indexed position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// One-indexed positions of each value: `positions()[v] = i` with `at(i) = v`.
    /// Index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i + 1;
        }
        pos
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Digits when every value is a single digit, otherwise comma separated.
    pub fn compact(&self) -> String {
        if self.len() <= 9 {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(self.positions()[1..].to_vec())
    }

    pub fn symmetries(&self) -> Symmetries {
        Symmetries {
            reverse: self.reverse(),
            complement: self.complement(),
            inverse: self.inverse(),
        }
    }

    /// Pattern containment by backtracking over increasing index choices.
    pub fn contains_pattern(&self, pattern: &Permutation) -> Result<bool> {
        if pattern.len() > self.len() {
            return Err(Error::InvalidArgument(format!(
                "pattern of length {} is longer than text of length {}",
                pattern.len(),
                self.len()
            )));
        }
        let mut chosen = Vec::with_capacity(pattern.len());
        Ok(match_from(&self.0, &pattern.0, 0, &mut chosen))
    }

    /// No `i<j<k<l` with `π[k] < π[i]+1 = π[l] < π[j]` or
    /// `π[j] < π[i] = π[l]+1 < π[k]`.
    ///
    /// For each pair of consecutive values only one `(i, l)` position pair is
    /// possible, so the scan is `O(n²)`.
    pub fn is_baxter(&self) -> bool {
        let n = self.len();
        let pos = self.positions();
        for v in 1..n {
            let (pv, pw) = (pos[v], pos[v + 1]);
            let (lo, hi) = (pv.min(pw), pv.max(pw));
            // v before v+1: need a value > v+1 followed by a value < v in between.
            // v+1 before v: need a value < v followed by a value > v+1.
            let ascending = pv < pw;
            let mut opened = false;
            for idx in lo + 1..hi {
                let x = self.0[idx - 1];
                let (first, second) = if ascending {
                    (x > v + 1, x < v)
                } else {
                    (x < v, x > v + 1)
                };
                if opened && second {
                    return false;
                }
                opened |= first;
            }
        }
        true
    }

    /// All blocks, trivial ones included, sorted by `(start, end)`.
    pub fn blocks(&self) -> Vec<Block> {
        let n = self.len();
        let mut out = Vec::new();
        for start in 1..=n {
            let (mut lo, mut hi) = (usize::MAX, 0);
            for end in start..=n {
                let v = self.0[end - 1];
                lo = lo.min(v);
                hi = hi.max(v);
                if hi - lo == end - start {
                    out.push(Block { start, end });
                }
            }
        }
        out
    }

    /// Every block is trivial. By this definition `1`, `12` and `21` are simple.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        for start in 1..=n {
            let (mut lo, mut hi) = (usize::MAX, 0);
            for end in start..=n {
                let v = self.0[end - 1];
                lo = lo.min(v);
                hi = hi.max(v);
                if end > start && hi - lo == end - start && !(start == 1 && end == n) {
                    return false;
                }
            }
        }
        true
    }

    /// Removes the entry at position `i` and rank-orders the rest.
    pub fn one_point_delete(&self, i: usize) -> Result<Permutation> {
        let n = self.len();
        if n < 2 {
            return Err(Error::InvalidArgument(
                "cannot delete from a singleton permutation".into(),
            ));
        }
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let removed = self.0[i - 1];
        let values = self
            .0
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != i - 1)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Ok(Permutation(values))
    }

    /// Wreath product `self[children…]`.
    pub fn inflate(&self, children: &[Permutation]) -> Result<Permutation> {
        if children.len() != self.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                found: children.len(),
            });
        }
        // offset[v] = total length of the children whose skeleton value is below v
        let pos = self.positions();
        let mut offset = vec![0; self.len() + 1];
        let mut acc = 0;
        for v in 1..=self.len() {
            offset[v] = acc;
            acc += children[pos[v] - 1].len();
        }
        let mut values = Vec::with_capacity(acc);
        for (slot, child) in children.iter().enumerate() {
            let base = offset[self.0[slot]];
            values.extend(child.0.iter().map(|&c| base + c));
        }
        Ok(Permutation(values))
    }

    /// Canonical substitution decomposition with a simple non-singleton skeleton.
    ///
    /// For the skeletons `12`/`21` the first child is the shortest prefix that
    /// splits off, so it is not itself `12`- (resp. `21`-) decomposable.
    pub fn decompose(&self) -> Result<Decomposition> {
        let n = self.len();
        if n < 2 {
            return Err(Error::InvalidArgument(
                "a singleton permutation has no decomposition".into(),
            ));
        }
        if let Some(split) = self.direct_split() {
            return Ok(self.two_block_split(split, Permutation(vec![1, 2])));
        }
        if let Some(split) = self.skew_split() {
            return Ok(self.two_block_split(split, Permutation(vec![2, 1])));
        }

        // Neither sum nor skew decomposable: the maximal proper blocks partition
        // the positions, and the largest block starting at each cut is maximal.
        let mut segments = Vec::new();
        let mut start = 1;
        while start <= n {
            let (mut lo, mut hi) = (usize::MAX, 0);
            let mut best = start;
            for end in start..=n {
                let v = self.0[end - 1];
                lo = lo.min(v);
                hi = hi.max(v);
                if hi - lo == end - start && !(start == 1 && end == n) {
                    best = end;
                }
            }
            segments.push((start, best));
            start = best + 1;
        }
        let firsts: Vec<usize> = segments.iter().map(|&(s, _)| self.0[s - 1]).collect();
        let skeleton = Permutation::standardize(&firsts)?;
        let children = segments
            .iter()
            .map(|&(s, e)| Permutation::standardize(&self.0[s - 1..e]))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(skeleton.is_simple() && skeleton.len() >= 4);
        Ok(Decomposition { skeleton, children })
    }

    /// Smallest `j < n` with `{π[1..=j]} = {1..=j}`.
    fn direct_split(&self) -> Option<usize> {
        let mut hi = 0;
        for (j, &v) in self.0.iter().enumerate().take(self.len() - 1) {
            hi = hi.max(v);
            if hi == j + 1 {
                return Some(j + 1);
            }
        }
        None
    }

    /// Smallest `j < n` with `{π[1..=j]} = {n-j+1..=n}`.
    fn skew_split(&self) -> Option<usize> {
        let n = self.len();
        let mut lo = usize::MAX;
        for (j, &v) in self.0.iter().enumerate().take(n - 1) {
            lo = lo.min(v);
            if lo == n - j {
                return Some(j + 1);
            }
        }
        None
    }

    fn two_block_split(&self, split: usize, skeleton: Permutation) -> Decomposition {
        let left = Permutation::standardize(&self.0[..split]).expect("nonempty distinct");
        let right = Permutation::standardize(&self.0[split..]).expect("nonempty distinct");
        Decomposition {
            skeleton,
            children: vec![left, right],
        }
    }
}

fn match_from(text: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for idx in from..=text.len() - remaining {
        let x = text[idx];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(h, &prev)| (text[prev] < x) == (pattern[h] < pattern[depth]));
        if consistent {
            chosen.push(idx);
            if match_from(text, pattern, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// All permutations of length `n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = (n >= 1).then(|| (1..=n).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        current = next_permutation(out.clone());
        Some(Permutation(out))
    })
}

/// Lexicographic successor, or `None` after the last permutation.
pub(crate) fn next_permutation(mut v: Vec<usize>) -> Option<Vec<usize>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.skeleton.compact())?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&c.compact())?;
        }
        f.write_str("]")
    }
}

/// Accepts `4 1 3 5 2`, `4,1,3,5,2`, or the compact digit form `41352` (n ≤ 9).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let values: Vec<usize> = match tokens.as_slice() {
            [] => return Err(parse_error(1, 1, "empty permutation")),
            [(line, col, single)]
                if single.len() > 1 && single.bytes().all(|b| b.is_ascii_digit()) =>
            {
                if single.len() > 9 {
                    return Err(parse_error(
                        *line,
                        *col,
                        "compact digit form is only accepted for n <= 9",
                    ));
                }
                single.bytes().map(|b| usize::from(b - b'0')).collect()
            }
            _ => {
                let mut out = Vec::with_capacity(tokens.len());
                for (line, col, t) in &tokens {
                    let v = t.parse::<usize>().map_err(|_| {
                        parse_error(*line, *col, &format!("'{t}' is not a positive integer"))
                    })?;
                    out.push(v);
                }
                out
            }
        };
        Permutation::new(values)
    }
}

/// Entries with their one-based line and column. A comma separates exactly
/// two entries.
fn tokenize(s: &str) -> Result<Vec<(usize, usize, &str)>> {
    let mut tokens = Vec::new();
    let (mut line, mut col) = (1, 0);
    let mut start: Option<(usize, usize, usize)> = None;
    let mut pending_comma: Option<(usize, usize)> = None;
    for (idx, c) in s.char_indices() {
        col += 1;
        let sep = c.is_whitespace() || c == ',';
        if sep {
            if let Some((l, cl, from)) = start.take() {
                tokens.push((l, cl, &s[from..idx]));
            }
            if c == ',' {
                if tokens.is_empty() || pending_comma.is_some() {
                    return Err(parse_error(line, col, "empty entry before ','"));
                }
                pending_comma = Some((line, col));
            }
        } else if start.is_none() {
            start = Some((line, col, idx));
            pending_comma = None;
        }
        if c == '\n' {
            line += 1;
            col = 0;
        }
    }
    if let Some((l, cl, from)) = start {
        tokens.push((l, cl, &s[from..]));
    } else if let Some((l, cl)) = pending_comma {
        return Err(parse_error(l, cl, "trailing ','"));
    }
    Ok(tokens)
}

fn parse_error(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}
