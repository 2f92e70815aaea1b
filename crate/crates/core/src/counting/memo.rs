//! Persistent count tables, one text file per order:
//!
//! ```text
//! hrd-count-memo v1
//! k 5
//! 1 1 0
//! 2 2 1
//! ```
//!
//! Each data line is `m t_m a_m` in decimal. On load the `a` column is
//! recomputed from `t` and compared (the `21`-rooted count obeys the same
//! recurrence, so this pins `b = a`), and `t_m - 2a_m` is checked against the
//! skeleton sums; any mismatch discards the file.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{count_hrd_fast, cut_rooted, skeleton_counts, CountTable};
use crate::error::Result;
use crate::gentree::OrderK;

pub const MEMO_HEADER: &str = "hrd-count-memo v1";
/// Environment variable that overrides the memo directory.
pub const MEMO_DIR_ENV: &str = "HRD_MEMO_DIR";

pub fn memo_path(dir: &Path, k: usize) -> PathBuf {
    dir.join(format!("hrd-k{k}.memo"))
}

/// `$HRD_MEMO_DIR`, else `$XDG_CONFIG_HOME/hrd`, else `$HOME/.config/hrd`.
pub fn default_memo_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(MEMO_DIR_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CONFIG_HOME") {
        return Some(PathBuf::from(d).join("hrd"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".config").join("hrd"))
}

pub fn render(table: &CountTable) -> String {
    let mut out = format!("{MEMO_HEADER}\nk {}\n", table.k);
    for m in 1..=table.n_max() {
        out.push_str(&format!("{m} {} {}\n", table.t[m], table.a[m]));
    }
    out
}

pub fn save(dir: &Path, table: &CountTable) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = memo_path(dir, table.k);
    let tmp = path.with_extension("memo.tmp");
    fs::write(&tmp, render(table))?;
    fs::rename(tmp, path)?;
    Ok(())
}

/// Parsed and revalidated `(t, a)`, one-indexed; `None` if the text is not a
/// consistent memo for order `k`.
pub fn parse(text: &str, k: usize) -> Option<(Vec<BigUint>, Vec<BigUint>)> {
    let (t, a) = parse_columns(text, k)?;
    let n = t.len() - 1;
    let s = skeleton_counts(k, n).ok()?;
    let kk = k.min(n);
    // conv[l][m] = C_l[m] over the loaded t
    let mut conv = vec![t.clone()];
    for l in 2..=kk {
        let prev = &conv[l - 2];
        let mut row = vec![BigUint::zero(); n + 1];
        for (m, slot) in row.iter_mut().enumerate().skip(l) {
            for i in 1..=m - (l - 1) {
                *slot += &t[i] * &prev[m - i];
            }
        }
        conv.push(row);
    }
    for m in 2..=n {
        if cut_rooted(&t, &a, m) != a[m] || t[m] < &a[m] << 1 {
            return None;
        }
        let mut skel = BigUint::zero();
        for (l, &count) in s.iter().enumerate().skip(4) {
            skel += &conv[l - 1][m] * count;
        }
        if &t[m] - (&a[m] << 1) != skel {
            return None;
        }
    }
    Some((t, a))
}

fn parse_columns(text: &str, k: usize) -> Option<(Vec<BigUint>, Vec<BigUint>)> {
    let mut lines = text.lines();
    if lines.next()? != MEMO_HEADER {
        return None;
    }
    if lines.next()? != format!("k {k}") {
        return None;
    }
    let mut t = vec![BigUint::zero()];
    let mut a = vec![BigUint::zero()];
    for (idx, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let m: usize = it.next()?.parse().ok()?;
        let tm: BigUint = it.next()?.parse().ok()?;
        let am: BigUint = it.next()?.parse().ok()?;
        if m != idx + 1 || it.next().is_some() {
            return None;
        }
        t.push(tm);
        a.push(am);
    }
    if t.len() < 2 || t[1] != BigUint::one() || !a[1].is_zero() {
        return None;
    }
    Some((t, a))
}

pub fn load(dir: &Path, k: usize) -> Option<(Vec<BigUint>, Vec<BigUint>)> {
    parse(&fs::read_to_string(memo_path(dir, k)).ok()?, k)
}

/// `[t_1, …, t_n_max]`, served from the memo when it is long enough and
/// otherwise recomputed and written back.
pub fn sequence_memoized(k: OrderK, n_max: usize, dir: Option<&Path>) -> Result<Vec<BigUint>> {
    if let Some(dir) = dir {
        if let Some((t, _)) = load(dir, k.get()) {
            if t.len() > n_max && n_max >= 1 {
                return Ok(t[1..=n_max].to_vec());
            }
        }
    }
    let table = count_hrd_fast(k, n_max)?;
    if let Some(dir) = dir {
        // a failed write only costs a recomputation next time
        let _ = save(dir, &table);
    }
    Ok(table.sequence())
}
