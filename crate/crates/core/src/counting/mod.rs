//! Exact counts of `HRD_k` dissections with `n` rooms.
//!
//! Counting goes through skewed generating trees. With `t_m` the number of
//! trees with `m` leaves and `a_m` (resp. `b_m`) those rooted at `12`
//! (resp. `21`):
//!
//! ```text
//! a_m = t_{m-1} + Σ_{i=2}^{m-1} t_{m-i} (t_i - a_i)        (b_m likewise)
//! t_m = a_m + b_m + Σ_{4<=l<=k} s_l · C_l[m]
//! ```
//!
//! where `s_l` is the number of simple Baxter permutations of length `l` and
//! `C_l[m]` sums `t_{i_1}⋯t_{i_l}` over compositions of `m` into `l` parts.
//! Three evaluations are provided: the fixed `k = 5` nested summation
//! ([`count_hrd_literal`]), the general recurrence with explicit composition
//! enumeration ([`count_hrd`]), and an incremental convolution
//! ([`count_hrd_fast`]). [`oracle_count`] scans `S_n` directly.

mod census;
pub mod memo;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gentree::{is_hrd, OrderK};
use crate::perm::{all_permutations, Permutation};

pub use census::{
    census_list, census_simple_baxter, CensusEntry, DEFAULT_CENSUS_CAP, MAX_CENSUS_LEN,
};

/// Largest `n` scanned by [`oracle_count`] without the override.
pub const ORACLE_CAP: usize = 9;

/// Tables of the order-`k` recurrence, one-indexed (`t[0]` is unused).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub k: usize,
    pub t: Vec<BigUint>,
    pub a: Vec<BigUint>,
    pub b: Vec<BigUint>,
    /// `compositions[l][m]` = `C_l[m]`, for `1 <= l <= min(k, n_max)`.
    pub compositions: Vec<Vec<BigUint>>,
    /// `skeletons[l]` = `s_l` for `l <= min(k, n_max)`.
    pub skeletons: Vec<u64>,
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.t.len() - 1
    }

    /// `[t_1, …, t_n_max]`.
    pub fn sequence(&self) -> Vec<BigUint> {
        self.t[1..].to_vec()
    }

    /// Trees with `m` leaves rooted at one particular skeleton of length `l`.
    pub fn rooted_at_length(&self, l: usize, m: usize) -> BigUint {
        if l < self.compositions.len() && m < self.compositions[l].len() {
            self.compositions[l][m].clone()
        } else {
            BigUint::zero()
        }
    }
}

/// `s_l` for `2 <= l <= min(k, n)`; the census is only needed up to the
/// longest skeleton that fits in `n` leaves.
fn skeleton_counts(k: usize, n: usize) -> Result<Vec<u64>> {
    let top = k.min(n);
    let mut s = vec![0u64; top + 1];
    for (l, slot) in s.iter_mut().enumerate().skip(2) {
        *slot = census_list(l, false)?.len() as u64;
    }
    Ok(s)
}

/// `a_m` from the already filled prefix of `t` and `a`.
fn cut_rooted(t: &[BigUint], a: &[BigUint], m: usize) -> BigUint {
    let mut sum = BigUint::zero();
    for i in 1..m {
        sum += (&t[i] - &a[i]) * &t[m - i];
    }
    sum
}

/// The order-5 count by direct nested summation:
/// `t_n = t_{n-1} + Σ t_i t_{n-i} + 2·Σ_{6 parts} Π t + 2·Σ_{5 parts} Π t`.
pub fn count_hrd_literal(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut t = vec![BigUint::zero(); n + 1];
    t[1] = BigUint::one();
    for m in 2..=n {
        let mut x = BigUint::zero();
        for i in 1..m {
            x += &t[i] * &t[m - i];
        }
        // five parts i+j+k+l+r = m, each >= 1
        let mut y = BigUint::zero();
        for i in 1..m {
            for j in 1..m.saturating_sub(i) {
                for k in 1..m.saturating_sub(i + j) {
                    for l in 1..m.saturating_sub(i + j + k) {
                        let used = i + j + k + l;
                        if used < m {
                            y += &t[i] * &t[j] * &t[k] * &t[l] * &t[m - used];
                        }
                    }
                }
            }
        }
        // six parts h+i+j+k+l+r = m
        let mut z = BigUint::zero();
        for h in 1..m {
            for i in 1..m.saturating_sub(h) {
                for j in 1..m.saturating_sub(h + i) {
                    for k in 1..m.saturating_sub(h + i + j) {
                        for l in 1..m.saturating_sub(h + i + j + k) {
                            let used = h + i + j + k + l;
                            if used < m {
                                z += &t[h] * &t[i] * &t[j] * &t[k] * &t[l] * &t[m - used];
                            }
                        }
                    }
                }
            }
        }
        t[m] = x + (y << 1) + (z << 1) + &t[m - 1];
    }
    Ok(t.swap_remove(n))
}

/// Sum of `Π t_{i_j}` over compositions of `m` into `parts` parts, by walking
/// every composition.
fn composition_sum(t: &[BigUint], m: usize, parts: usize, prefix: &BigUint) -> BigUint {
    if parts == 1 {
        return prefix * &t[m];
    }
    let mut sum = BigUint::zero();
    for first in 1..=m - (parts - 1) {
        let p = prefix * &t[first];
        sum += composition_sum(t, m - first, parts - 1, &p);
    }
    sum
}

/// `t_n` for order `k` via the general recurrence, enumerating compositions.
pub fn count_hrd(k: OrderK, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let s = skeleton_counts(k.get(), n)?;
    let mut t = vec![BigUint::zero(); n + 1];
    let mut a = vec![BigUint::zero(); n + 1];
    t[1] = BigUint::one();
    for m in 2..=n {
        a[m] = cut_rooted(&t, &a, m);
        let mut skel = BigUint::zero();
        for (l, &count) in s.iter().enumerate().skip(4) {
            if count > 0 && l <= m {
                skel += composition_sum(&t, m, l, &BigUint::one()) * count;
            }
        }
        t[m] = (&a[m] << 1) + skel;
    }
    Ok(t.swap_remove(n))
}

/// The whole table up to `n_max` in `O(k·n_max²)` big-integer operations.
///
/// `C_l[m]` only needs `t_i` for `i < m`, so each row is extended before
/// `t_m` is formed.
pub fn count_hrd_fast(k: OrderK, n_max: usize) -> Result<CountTable> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let kk = k.get().min(n_max);
    let s = skeleton_counts(k.get(), n_max)?;
    let zero = || vec![BigUint::zero(); n_max + 1];
    let mut t = zero();
    let mut a = zero();
    let mut b = zero();
    let mut comp: Vec<Vec<BigUint>> = (0..=kk).map(|_| zero()).collect();
    t[1] = BigUint::one();
    comp[1][1] = BigUint::one();
    for m in 2..=n_max {
        for l in 2..=kk.min(m) {
            let mut sum = BigUint::zero();
            for i in 1..=m - (l - 1) {
                sum += &t[i] * &comp[l - 1][m - i];
            }
            comp[l][m] = sum;
        }
        a[m] = cut_rooted(&t, &a, m);
        b[m] = cut_rooted(&t, &b, m);
        assert_eq!(a[m], b[m], "12- and 21-rooted counts differ at m = {m}");
        let mut tm = &a[m] + &b[m];
        for (l, &count) in s.iter().enumerate().skip(4) {
            if count > 0 {
                tm += &comp[l][m] * count;
            }
        }
        t[m] = tm;
        comp[1][m] = t[m].clone();
    }
    Ok(CountTable {
        k: k.get(),
        t,
        a,
        b,
        compositions: comp,
        skeletons: s,
    })
}

/// `[I_{k,1}, …, I_{k,n_max}]`.
pub fn sequence(k: OrderK, n_max: usize) -> Result<Vec<BigUint>> {
    Ok(count_hrd_fast(k, n_max)?.sequence())
}

/// `|{p ∈ S_n : p is HRD_k}|` by scanning every permutation.
pub fn oracle_count(k: OrderK, n: usize, allow_large: bool) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if n > ORACLE_CAP && !allow_large {
        return Err(Error::CapExceeded {
            what: "oracle n",
            value: n,
            cap: ORACLE_CAP,
        });
    }
    let total: u64 = partition_by_first(n)
        .into_par_iter()
        .map(|first| {
            permutations_starting_with(n, first)
                .filter(|p| is_hrd(p, k))
                .count() as u64
        })
        .sum();
    Ok(BigUint::from(total))
}

/// Work units for parallel scans of `S_n`: the value of the first entry.
pub(crate) fn partition_by_first(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// Lexicographic permutations of length `n` whose first value is `first`.
pub(crate) fn permutations_starting_with(
    n: usize,
    first: usize,
) -> impl Iterator<Item = Permutation> {
    let rest_len = n - 1;
    let tail: Box<dyn Iterator<Item = Option<Permutation>>> = if rest_len == 0 {
        Box::new(std::iter::once(None))
    } else {
        Box::new(all_permutations(rest_len).map(Some))
    };
    tail.map(move |rest| {
        let mut values = Vec::with_capacity(n);
        values.push(first);
        if let Some(rest) = rest {
            values.extend(
                rest.values()
                    .iter()
                    .map(|&v| if v >= first { v + 1 } else { v }),
            );
        }
        Permutation::from_vec_unchecked(values)
    })
}
