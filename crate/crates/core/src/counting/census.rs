use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::{partition_by_first, permutations_starting_with};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Lengths above this need the explicit override.
pub const DEFAULT_CENSUS_CAP: usize = 10;
/// Hard ceiling even with the override (11! ≈ 40M candidates).
pub const MAX_CENSUS_LEN: usize = 11;

/// Simple Baxter permutations of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub len: usize,
    pub count: u64,
    pub list: Option<Vec<Permutation>>,
}

static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<Permutation>>>>> = OnceLock::new();

/// `s_l` by exhaustive filtering of `S_l`, optionally with the list in
/// lexicographic order.
pub fn census_simple_baxter(l: usize, with_list: bool, allow_large: bool) -> Result<CensusEntry> {
    let list = census_list(l, allow_large)?;
    Ok(CensusEntry {
        len: l,
        count: list.len() as u64,
        list: with_list.then(|| list.as_ref().clone()),
    })
}

/// Cached list of simple Baxter permutations of length `l`, lexicographic.
pub fn census_list(l: usize, allow_large: bool) -> Result<Arc<Vec<Permutation>>> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!(
            "skeleton length must be at least 2, got {l}"
        )));
    }
    let cap = if allow_large {
        MAX_CENSUS_LEN
    } else {
        DEFAULT_CENSUS_CAP
    };
    if l > cap {
        return Err(Error::CapExceeded {
            what: "census length",
            value: l,
            cap,
        });
    }
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("census cache poisoned").get(&l) {
        return Ok(hit.clone());
    }
    let list: Vec<Permutation> = partition_by_first(l)
        .into_par_iter()
        .flat_map_iter(|first| {
            permutations_starting_with(l, first).filter(|p| p.is_simple() && p.is_baxter())
        })
        .collect();
    let list = Arc::new(list);
    cache
        .lock()
        .expect("census cache poisoned")
        .insert(l, list.clone());
    Ok(list)
}
