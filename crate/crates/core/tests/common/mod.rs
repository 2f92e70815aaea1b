//! Test-side oracles. None of these call into the library's algorithms; they
//! restate the definitions as directly (and slowly) as possible.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hrd::Permutation;
use num_bigint::BigUint;

pub fn perm(s: &str) -> Permutation {
    s.parse().expect("test permutation")
}

/// Every permutation of `1..=n` as a plain vector, by recursive insertion.
pub fn all_vecs(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in all_vecs(n - 1) {
        for pos in 0..=smaller.len() {
            let mut v = smaller.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out
}

pub fn all_perms(n: usize) -> Vec<Permutation> {
    all_vecs(n)
        .into_iter()
        .map(|v| Permutation::new(v).unwrap())
        .collect()
}

/// No `2-41-3` and no `3-14-2` (the middle pair adjacent), by a cubic scan.
pub fn baxter_oracle(p: &[usize]) -> bool {
    let n = p.len();
    for j in 1..n.saturating_sub(2) {
        let (hi_lo, lo_hi) = (p[j] > p[j + 1], p[j] < p[j + 1]);
        for i in 0..j {
            for k in j + 2..n {
                if hi_lo && p[j + 1] < p[i] && p[i] < p[k] && p[k] < p[j] {
                    return false;
                }
                if lo_hi && p[j] < p[k] && p[k] < p[i] && p[i] < p[j + 1] {
                    return false;
                }
            }
        }
    }
    true
}

/// Position intervals `(start, end)`, one-indexed and inclusive, whose values
/// form an interval of integers.
pub fn blocks_oracle(p: &[usize]) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for s in 0..n {
        for e in s..n {
            let mut vals: Vec<usize> = p[s..=e].to_vec();
            vals.sort_unstable();
            if vals.windows(2).all(|w| w[1] == w[0] + 1) {
                out.push((s + 1, e + 1));
            }
        }
    }
    out
}

pub fn simple_oracle(p: &[usize]) -> bool {
    let n = p.len();
    blocks_oracle(p)
        .into_iter()
        .all(|(s, e)| s == e || (s == 1 && e == n))
}

/// Rank-order standardization by sorting indices.
pub fn standardize(seq: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    idx.sort_by_key(|&i| seq[i]);
    let mut out = vec![0; seq.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

/// Wreath product by sorting `(skeleton value, child value)` pairs.
pub fn inflate_oracle(skeleton: &[usize], children: &[Vec<usize>]) -> Vec<usize> {
    let keyed: Vec<(usize, usize)> = skeleton
        .iter()
        .zip(children)
        .flat_map(|(&s, c)| c.iter().map(move |&v| (s, v)))
        .collect();
    let mut sorted = keyed.clone();
    sorted.sort_unstable();
    keyed
        .iter()
        .map(|k| sorted.iter().position(|x| x == k).unwrap() + 1)
        .collect()
}

/// Does `text` contain `pattern`, by trying every subsequence.
pub fn contains_oracle(text: &[usize], pattern: &[usize]) -> bool {
    fn go(text: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pattern.len() {
            return standardize(chosen) == pattern;
        }
        for i in from..text.len() {
            chosen.push(text[i]);
            if go(text, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(text, pattern, 0, &mut Vec::new())
}

/// Membership in the order-`k` hierarchy straight from the definition: a
/// Baxter permutation that is a single entry, or that splits into `2..=k`
/// consecutive blocks whose collapsed pattern is Baxter and whose pieces are
/// themselves in the hierarchy.
pub struct HrdOracle {
    k: usize,
    memo: HashMap<Vec<usize>, bool>,
}

impl HrdOracle {
    pub fn new(k: usize) -> Self {
        HrdOracle {
            k,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, p: &[usize]) -> bool {
        if p.len() == 1 {
            return true;
        }
        if let Some(&hit) = self.memo.get(p) {
            return hit;
        }
        let ans = baxter_oracle(p) && self.splits(p, 0, &mut Vec::new());
        self.memo.insert(p.to_vec(), ans);
        ans
    }

    /// Tries every way to cut `p[from..]` into blocks, given the cuts so far.
    fn splits(&mut self, p: &[usize], from: usize, parts: &mut Vec<(usize, usize)>) -> bool {
        let n = p.len();
        if from == n {
            if parts.len() < 2 || parts.len() > self.k {
                return false;
            }
            let mins: Vec<usize> = parts
                .iter()
                .map(|&(s, e)| *p[s..e].iter().min().unwrap())
                .collect();
            if !baxter_oracle(&standardize(&mins)) {
                return false;
            }
            let pieces: Vec<Vec<usize>> =
                parts.iter().map(|&(s, e)| standardize(&p[s..e])).collect();
            return pieces.iter().all(|c| self.contains(c));
        }
        if parts.len() == self.k {
            return false;
        }
        for end in from + 1..=n {
            if (from, end) == (0, n) {
                continue;
            }
            let lo = *p[from..end].iter().min().unwrap();
            let hi = *p[from..end].iter().max().unwrap();
            if hi - lo + 1 != end - from {
                continue;
            }
            parts.push((from, end));
            if self.splits(p, end, parts) {
                parts.pop();
                return true;
            }
            parts.pop();
        }
        false
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Closed-form Baxter numbers.
pub fn baxter_number(n: u64) -> BigUint {
    let mut sum = BigUint::from(0u32);
    for k in 1..=n {
        sum += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
    }
    sum / (binomial(n + 1, 1) * binomial(n + 1, 2))
}

/// Large Schröder numbers `S_0, S_1, …` from their three-term recurrence.
pub fn schroeder(count: usize) -> Vec<BigUint> {
    let mut s: Vec<BigUint> = vec![BigUint::from(1u32), BigUint::from(2u32)];
    while s.len() < count {
        let n = s.len() as u64;
        let next = (BigUint::from(3 * (2 * n - 1)) * &s[n as usize - 1]
            - BigUint::from(n - 2) * &s[n as usize - 2])
            / BigUint::from(n + 1);
        s.push(next);
    }
    s.truncate(count);
    s
}

/// Set of value sets of the nontrivial blocks.
pub fn block_value_sets(p: &[usize]) -> BTreeSet<BTreeSet<usize>> {
    let n = p.len();
    blocks_oracle(p)
        .into_iter()
        .filter(|&(s, e)| s != e && !(s == 1 && e == n))
        .map(|(s, e)| p[s - 1..e].iter().copied().collect())
        .collect()
}
