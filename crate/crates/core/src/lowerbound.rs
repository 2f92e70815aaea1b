//! Exponential families of irreducible `HRD_k` permutations, and growth of
//! irreducible floorplans by two rooms.
//!
//! Inserting a new maximum next to the current maximum, or at either end,
//! keeps a permutation Baxter and keeps its generating tree of order `k`
//! (the new entry becomes a `12`/`21` cut around an existing leaf or around
//! the whole tree). Three such sites are always distinct, so an `IHRD_k` seed
//! of length `k` yields `3^{n-k}` distinct permutations of length `n`, none of
//! which is `HRD_{k-1}`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::floorplan::{maximal_segments, MosaicFloorplan, Orientation, Room, Segment};
use crate::gentree::{is_hrd, is_ihrd, OrderK};
use crate::perm::Permutation;

/// The four candidate gaps, as the number of entries left of the new value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SafeSites {
    pub before_first: usize,
    pub after_last: usize,
    pub before_max: usize,
    pub after_max: usize,
}

impl SafeSites {
    pub fn of(p: &Permutation) -> Result<SafeSites> {
        let n = p.len();
        let max_pos = p.positions()[n];
        let s = SafeSites {
            before_first: 0,
            after_last: n,
            before_max: max_pos - 1,
            after_max: max_pos,
        };
        if n >= 2 && s.before_max == s.before_first && s.after_max == s.after_last {
            return Err(Error::Construction(format!(
                "maximum of {} is both first and last",
                p.compact()
            )));
        }
        Ok(s)
    }

    /// Distinct gaps, sorted.
    pub fn distinct(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = [
            self.before_first,
            self.after_last,
            self.before_max,
            self.after_max,
        ]
        .into();
        set.into_iter().collect()
    }

    /// Exactly three gaps: when all four differ, "after last" is dropped.
    pub fn canonical_three(&self) -> Vec<usize> {
        let all = self.distinct();
        if all.len() == 4 {
            all.into_iter().filter(|&g| g != self.after_last).collect()
        } else {
            all
        }
    }
}

/// Deduplicated safe gaps of `p`: 3 or 4 of them for `|p| >= 2`.
pub fn safe_sites(p: &Permutation) -> Result<Vec<usize>> {
    Ok(SafeSites::of(p)?.distinct())
}

/// Places `n+1` into gap `site` (0 = before everything).
pub fn insert_max(p: &Permutation, site: usize) -> Result<Permutation> {
    if !safe_sites(p)?.contains(&site) {
        return Err(Error::InvalidArgument(format!(
            "gap {site} is not a safe site of {}",
            p.compact()
        )));
    }
    let mut values = p.values().to_vec();
    values.insert(site, p.len() + 1);
    Ok(Permutation::from_vec_unchecked(values))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub seed: Permutation,
    pub k: usize,
    pub n: usize,
    /// Number of insertion traces explored.
    pub traces: u64,
    /// Number of distinct final permutations.
    pub family: u64,
    pub expected: u64,
    pub all_baxter: bool,
    pub all_hrd_k: bool,
    pub none_hrd_k_minus_1: bool,
    /// The lexicographically first few members.
    pub samples: Vec<Permutation>,
}

impl FamilyReport {
    pub fn holds(&self) -> bool {
        self.family >= self.expected && self.all_baxter && self.all_hrd_k && self.none_hrd_k_minus_1
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seed={} k={} n={} family={} expected={} all_baxter={} all_hrd_k={} none_hrd_k-1={}",
            self.seed.compact(),
            self.k,
            self.n,
            self.family,
            self.expected,
            self.all_baxter,
            self.all_hrd_k,
            self.none_hrd_k_minus_1
        )
    }
}

const SAMPLE_COUNT: usize = 5;

/// Inserts `k+1, …, n` into `seed` along every trace of safe sites (three per
/// step, or all of them with `all_sites`) and checks every result.
pub fn insertion_family(
    k: OrderK,
    n: usize,
    seed: &Permutation,
    all_sites: bool,
) -> Result<FamilyReport> {
    let kk = k.get();
    if seed.len() != kk || !is_ihrd(seed) {
        return Err(Error::InvalidArgument(format!(
            "seed {} is not a simple Baxter permutation of length {kk}",
            seed.compact()
        )));
    }
    if n < kk {
        return Err(Error::InvalidArgument(format!("n = {n} is below k = {kk}")));
    }
    let mut level: Vec<Permutation> = vec![seed.clone()];
    for _ in kk..n {
        let mut next = Vec::with_capacity(level.len() * 4);
        for p in &level {
            let sites = SafeSites::of(p)?;
            let gaps = if all_sites {
                sites.distinct()
            } else {
                sites.canonical_three()
            };
            for g in gaps {
                next.push(insert_max(p, g)?);
            }
        }
        level = next;
    }
    let traces = level.len() as u64;
    let distinct: BTreeSet<Permutation> = level.into_iter().collect();
    let lower = (kk > 2).then(|| OrderK::new(kk - 1)).transpose()?;
    Ok(FamilyReport {
        seed: seed.clone(),
        k: kk,
        n,
        traces,
        family: distinct.len() as u64,
        expected: 3u64.pow((n - kk) as u32),
        all_baxter: distinct.iter().all(Permutation::is_baxter),
        all_hrd_k: distinct.iter().all(|p| is_hrd(p, k)),
        none_hrd_k_minus_1: lower.is_none_or(|lk| distinct.iter().all(|p| !is_hrd(p, lk))),
        samples: distinct.iter().take(SAMPLE_COUNT).cloned().collect(),
    })
}

/// How [`grow_ihrd`] found its result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthMove {
    /// The offset crossing of the leftmost boundary-touching wall.
    Preferred,
    /// Some other offset crossing of an interior wall.
    Crossing,
    /// Two entries added to the label, floorplan rebuilt from it.
    PointInsertion,
}

impl fmt::Display for GrowthMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthMove::Preferred => "preferred",
            GrowthMove::Crossing => "crossing",
            GrowthMove::PointInsertion => "point-insertion",
        })
    }
}

/// Result of [`grow_ihrd`].
#[derive(Clone, Debug)]
pub struct Growth {
    pub floorplan: MosaicFloorplan,
    pub label: Permutation,
    pub via: GrowthMove,
}

/// An irreducible floorplan with two more rooms.
///
/// The preferred move takes the leftmost vertical wall that reaches the
/// bounding box and crosses it at its middle gap with a new horizontal wall,
/// offsetting the lower half of the old wall so that both crossings become
/// T-junctions. If that result is not simple and Baxter, every crossing of
/// every wall (both orientations, either half offset either way) is tried in
/// order and the first verified one is returned. Crossings do not reach every
/// seed, so the last resort adds two entries to the label in every possible
/// way and rebuilds the floorplan from the first simple Baxter result.
pub fn grow_ihrd(f: &MosaicFloorplan) -> Result<Growth> {
    let label = f.fp2bp()?;
    if label.len() < 7 || !is_ihrd(&label) {
        return Err(Error::InvalidArgument(format!(
            "growth needs an irreducible floorplan with at least 7 rooms, label is {}",
            label.compact()
        )));
    }
    let g = f.canonical().scaled(4);
    let target = f.len() + 2;
    let accept = |c: &MosaicFloorplan| -> Option<Permutation> {
        if c.len() != target || !c.is_valid() {
            return None;
        }
        let p = c.fp2bp().ok()?;
        is_ihrd(&p).then_some(p)
    };

    if let Some(c) = preferred_move(&g) {
        if let Some(p) = accept(&c) {
            return Ok(Growth {
                floorplan: relabel(&c)?,
                label: p,
                via: GrowthMove::Preferred,
            });
        }
    }
    for transposed in [false, true] {
        let base = if transposed { g.transpose() } else { g.clone() };
        for seg in interior_segments(&base, Orientation::Vertical) {
            for gap in crossing_gaps(&base, &seg) {
                for lower in [true, false] {
                    for shift in [1, -1] {
                        let c = cross_segment(&base, &seg, gap, lower, shift);
                        let c = if transposed { c.transpose() } else { c };
                        if let Some(p) = accept(&c) {
                            return Ok(Growth {
                                floorplan: relabel(&c)?,
                                label: p,
                                via: GrowthMove::Crossing,
                            });
                        }
                    }
                }
            }
        }
    }
    let q = two_point_extension(&label).ok_or_else(|| {
        Error::Construction(format!(
            "{} has no simple Baxter two-point extension",
            label.compact()
        ))
    })?;
    Ok(Growth {
        floorplan: MosaicFloorplan::bp2fp(&q)?,
        label: q,
        via: GrowthMove::PointInsertion,
    })
}

/// First simple Baxter permutation obtained by placing two new entries at
/// positions `i < j` with values `a`, `b`, scanning `(i, j, a, b)`
/// lexicographically. The old entries keep their relative order.
fn two_point_extension(p: &Permutation) -> Option<Permutation> {
    let m = p.len() + 2;
    for i in 0..m {
        for j in i + 1..m {
            for a in 1..=m {
                for b in (1..=m).filter(|&b| b != a) {
                    let rest = (1..=m).filter(|&v| v != a && v != b).collect::<Vec<_>>();
                    let mut old = p.values().iter().map(|&v| rest[v - 1]);
                    let values: Vec<usize> = (0..m)
                        .map(|pos| match pos {
                            _ if pos == i => a,
                            _ if pos == j => b,
                            _ => old.next().expect("n old entries fill n slots"),
                        })
                        .collect();
                    let q = Permutation::from_vec_unchecked(values);
                    if q.is_baxter() && q.is_simple() {
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

fn relabel(f: &MosaicFloorplan) -> Result<MosaicFloorplan> {
    Ok(f.relabeled()?.canonical())
}

fn preferred_move(g: &MosaicFloorplan) -> Option<MosaicFloorplan> {
    let seg = interior_segments(g, Orientation::Vertical)
        .into_iter()
        .filter(|s| s.start == 0 || s.end == g.height)
        .min_by_key(|s| (s.coord, s.start))?;
    let gaps = crossing_gaps(g, &seg);
    let mid = gaps[gaps.len() / 2];
    Some(cross_segment(g, &seg, mid, true, 1))
}

/// Maximal interior segments of one orientation.
fn interior_segments(g: &MosaicFloorplan, o: Orientation) -> Vec<Segment> {
    maximal_segments(g)
        .into_iter()
        .filter(|s| s.orientation == o)
        .filter(|s| match o {
            Orientation::Vertical => s.coord != 0 && s.coord != g.width,
            Orientation::Horizontal => s.coord != 0 && s.coord != g.height,
        })
        .collect()
}

/// Midpoints between consecutive points where walls meet the vertical segment.
fn crossing_gaps(g: &MosaicFloorplan, seg: &Segment) -> Vec<i64> {
    let mut stops: BTreeSet<i64> = [seg.start, seg.end].into();
    for r in &g.rooms {
        if (r.x1 == seg.coord || r.x2 == seg.coord) && seg.start <= r.y1 && r.y2 <= seg.end {
            stops.insert(r.y1);
            stops.insert(r.y2);
        }
    }
    let stops: Vec<i64> = stops.into_iter().collect();
    stops.windows(2).map(|w| (w[0] + w[1]) / 2).collect()
}

/// Adds a horizontal wall at height `y` through the two rooms on either side
/// of `seg`, then moves the part of `seg` below (`lower`) or above `y` by
/// `shift`. Coordinates must be multiples of 4 so that `y` and the shifted
/// wall are fresh.
fn cross_segment(
    g: &MosaicFloorplan,
    seg: &Segment,
    y: i64,
    lower: bool,
    shift: i64,
) -> MosaicFloorplan {
    let x = seg.coord;
    let mut rooms = Vec::with_capacity(g.len() + 2);
    let mut next_id = g.rooms.iter().map(|r| r.id).max().unwrap_or(0) + 1;
    for r in &g.rooms {
        let touches = r.x1 == x || r.x2 == x;
        if touches && r.y1 < y && y < r.y2 {
            rooms.push(Room::new(r.id, r.x1, r.y1, r.x2, y));
            rooms.push(Room::new(next_id, r.x1, y, r.x2, r.y2));
            next_id += 1;
        } else {
            rooms.push(*r);
        }
    }
    for r in &mut rooms {
        let on_moved = if lower {
            seg.start <= r.y1 && r.y2 <= seg.end && r.y1 >= y
        } else {
            seg.start <= r.y1 && r.y2 <= seg.end && r.y2 <= y
        };
        if on_moved {
            if r.x1 == x {
                r.x1 += shift;
            }
            if r.x2 == x {
                r.x2 += shift;
            }
        }
    }
    MosaicFloorplan::unchecked(g.width, g.height, rooms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sites() {
        assert_eq!(safe_sites(&p("1")).unwrap(), vec![0, 1]);
        assert_eq!(safe_sites(&p("41352")).unwrap(), vec![0, 3, 4, 5]);
        assert_eq!(safe_sites(&p("52314")).unwrap(), vec![0, 1, 5]);
        assert_eq!(safe_sites(&p("12")).unwrap(), vec![0, 1, 2]);
        let s = SafeSites::of(&p("41352")).unwrap();
        assert_eq!(s.canonical_three(), vec![0, 3, 4]);
    }

    #[test]
    fn insertion() {
        assert_eq!(insert_max(&p("12"), 0).unwrap(), p("312"));
        assert_eq!(insert_max(&p("12"), 2).unwrap(), p("123"));
        let q = insert_max(&p("41352"), 4).unwrap();
        assert_eq!(q, p("413562"));
        assert!(q.is_baxter());
        assert!(is_hrd(&q, OrderK::new(5).unwrap()));
        assert!(insert_max(&p("41352"), 2).is_err());
    }

    #[test]
    fn small_families() {
        let k5 = OrderK::new(5).unwrap();
        let r = insertion_family(k5, 5, &p("41352"), false).unwrap();
        assert_eq!((r.family, r.expected), (1, 1));
        assert_eq!(r.samples, vec![p("41352")]);
        let r = insertion_family(k5, 7, &p("41352"), false).unwrap();
        assert_eq!((r.family, r.expected), (9, 9));
        assert!(r.holds());
        let r = insertion_family(k5, 8, &p("25314"), false).unwrap();
        assert_eq!(r.family, 27);
        assert!(r.holds());
        assert_eq!(
            r.to_string(),
            "seed=25314 k=5 n=8 family=27 expected=27 all_baxter=true all_hrd_k=true none_hrd_k-1=true"
        );
        let all = insertion_family(k5, 8, &p("25314"), true).unwrap();
        assert!(all.family >= 27 && all.holds());
    }

    #[test]
    fn family_rejects_bad_seeds() {
        let k5 = OrderK::new(5).unwrap();
        assert!(insertion_family(k5, 7, &p("2413"), false).is_err());
        assert!(insertion_family(k5, 7, &p("12345"), false).is_err());
        assert!(insertion_family(k5, 4, &p("41352"), false).is_err());
    }

    #[test]
    fn growth_needs_irreducible_input() {
        let f = MosaicFloorplan::bp2fp(&p("41352")).unwrap();
        assert!(grow_ihrd(&f).is_err());
        let f = MosaicFloorplan::bp2fp(&p("1234567")).unwrap();
        assert!(grow_ihrd(&f).is_err());
    }
}
