//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use hrd::counting::{
    census_list, census_simple_baxter, count_hrd, count_hrd_fast, count_hrd_literal, oracle_count,
    sequence,
};
use hrd::gentree::enumerate_trees;
use hrd::lowerbound::{grow_ihrd, insertion_family};
use hrd::{GenTree, MosaicFloorplan, OrderK, Permutation};
use num_bigint::BigUint;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn order(k: usize) -> OrderK {
    OrderK::new(k).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn baxter_perms(n: usize) -> Vec<Permutation> {
    all_perms(n)
        .into_iter()
        .filter(|p| baxter_oracle(p.values()))
        .collect()
}

fn schroeder_identity() -> Outcome {
    let expected: Vec<BigUint> = [1u32, 2, 6, 22, 90, 394, 1806].map(BigUint::from).to_vec();
    let got = sequence(order(2), 7).map_err(err)?;
    ensure!(got == expected, "sequence(2, 7) = {got:?}");
    ensure!(
        schroeder(7) == expected,
        "independent Schröder recurrence disagrees"
    );
    for n in 1..=7 {
        let o = oracle_count(order(2), n, false).map_err(err)?;
        ensure!(o == expected[n - 1], "oracle at n={n} gives {o}");
    }
    Ok("1 2 6 22 90 394 1806".into())
}

fn order_five_fidelity() -> Outcome {
    let fast = count_hrd_fast(order(5), 30).map_err(err)?;
    for n in 1..=30 {
        let literal = count_hrd_literal(n).map_err(err)?;
        let general = count_hrd(order(5), n).map_err(err)?;
        ensure!(
            literal == general && general == fast.t[n],
            "n={n}: {literal} / {general} / {}",
            fast.t[n]
        );
        if n <= 8 {
            let o = oracle_count(order(5), n, false).map_err(err)?;
            ensure!(o == general, "n={n}: oracle {o} vs {general}");
        }
    }
    let baxter5 = baxter_perms(5).len();
    ensure!(
        fast.t[5] == BigUint::from(92u32) && baxter5 == 92,
        "t_5 = {}, |Baxter(S_5)| = {baxter5}",
        fast.t[5]
    );
    Ok(format!("n<=30 agree, t_5 = 92, t_30 = {}", fast.t[30]))
}

fn census_fixtures() -> Outcome {
    let start = Instant::now();
    let counts: Vec<u64> = (2..=8)
        .map(|l| census_simple_baxter(l, false, false).map(|e| e.count))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let elapsed = start.elapsed();
    ensure!(counts[..4] == [2, 0, 0, 2], "s_2..s_5 = {:?}", &counts[..4]);
    let five: BTreeSet<String> = census_list(5, false)
        .map_err(err)?
        .iter()
        .map(Permutation::compact)
        .collect();
    ensure!(
        five == BTreeSet::from(["41352".to_string(), "25314".to_string()]),
        "s_5 list {five:?}"
    );
    ensure!(counts[5] >= 1, "s_7 = 0");
    ensure!(elapsed < Duration::from_secs(30), "census took {elapsed:?}");
    Ok(format!("s_2..s_8 = {counts:?} in {elapsed:.2?}"))
}

fn bijection_roundtrips() -> Outcome {
    let mut perms = 0;
    for n in 1..=7 {
        for p in baxter_perms(n) {
            let f = MosaicFloorplan::bp2fp(&p).map_err(err)?;
            ensure!(
                f.fp2bp().map_err(err)? == p,
                "fp2bp(bp2fp({})) differs",
                p.compact()
            );
            perms += 1;
        }
    }
    let mut trees = 0;
    for n in 1..=7 {
        for t in enumerate_trees(order(7), n).map_err(err)? {
            let f = t.floorplan_of_tree().map_err(err)?;
            ensure!(
                f.fp2bp().map_err(err)? == t.perm_of_tree().map_err(err)?,
                "tree {t}"
            );
            trees += 1;
        }
    }
    Ok(format!("{perms} permutations, {trees} trees"))
}

fn blocks_and_envelopes() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for p in baxter_perms(n) {
            let f = MosaicFloorplan::bp2fp(&p).map_err(err)?;
            let env: BTreeSet<BTreeSet<usize>> = f
                .enveloping_rectangles()
                .map_err(err)?
                .into_iter()
                .filter(|s| s.len() > 1 && s.len() < n)
                .collect();
            ensure!(env == block_value_sets(p.values()), "{}", p.compact());
            checked += 1;
        }
    }
    Ok(format!("{checked} floorplans"))
}

/// Every child list for `skeleton` with total length `<= max_total`.
fn child_lists(arity: usize, max_total: usize) -> Vec<Vec<Permutation>> {
    if arity == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for len in 1..=max_total + 1 - arity {
        for rest in child_lists(arity - 1, max_total - len) {
            for c in all_perms(len) {
                let mut list = vec![c];
                list.extend(rest.iter().cloned());
                out.push(list);
            }
        }
    }
    out
}

fn decomposition_uniqueness() -> Outcome {
    let skeletons: Vec<Permutation> = (2..=5)
        .flat_map(all_perms)
        .filter(|p| simple_oracle(p.values()))
        .collect();
    let mut cases = 0;
    for sk in &skeletons {
        for children in child_lists(sk.len(), 8) {
            if sk.len() == 2 {
                let first = &children[0];
                if first.len() > 1 && first.decompose().map_err(err)?.skeleton == *sk {
                    continue;
                }
            }
            let p = Permutation::new(inflate_oracle(
                sk.values(),
                &children
                    .iter()
                    .map(|c| c.values().to_vec())
                    .collect::<Vec<_>>(),
            ))
            .map_err(err)?;
            let d = p.decompose().map_err(err)?;
            ensure!(
                d.skeleton == *sk && d.children == children,
                "{} gave {d}",
                p.compact()
            );
            cases += 1;
        }
    }
    let mut trees = 0;
    for n in 1..=7 {
        let baxter = baxter_perms(n);
        let distinct: BTreeSet<GenTree> = baxter
            .iter()
            .map(|p| GenTree::tree_of_perm(p, order(7)))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure!(distinct.len() == baxter.len(), "n={n}: trees collide");
        trees += distinct.len();
    }
    Ok(format!("{cases} inflations, {trees} distinct trees"))
}

fn lower_bound_family() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for seed in ["41352", "25314"] {
        for n in 5..=11 {
            let r = insertion_family(order(5), n, &perm(seed), false).map_err(err)?;
            ensure!(
                r.family == r.expected && r.expected == 3u64.pow(n as u32 - 5),
                "{r}"
            );
            ensure!(r.all_baxter && r.all_hrd_k && r.none_hrd_k_minus_1, "{r}");
        }
        sizes.push(format!("{seed}: 3^6 at n=11"));
    }
    ensure!(
        start.elapsed() < Duration::from_secs(30),
        "took {:?}",
        start.elapsed()
    );
    Ok(format!("{} in {:.2?}", sizes.join(", "), start.elapsed()))
}

fn verified_growth(f: &MosaicFloorplan, size: usize) -> Result<MosaicFloorplan, String> {
    let g = grow_ihrd(f).map_err(err)?;
    let label = g.floorplan.fp2bp().map_err(err)?;
    ensure!(
        g.floorplan.is_valid() && g.floorplan.len() == size,
        "grew to {} rooms",
        g.floorplan.len()
    );
    ensure!(
        label == g.label,
        "reported label {} but floorplan reads {}",
        g.label,
        label
    );
    ensure!(
        simple_oracle(label.values()) && baxter_oracle(label.values()),
        "{} is not simple Baxter",
        label
    );
    Ok(g.floorplan)
}

fn hierarchy_strictness() -> Outcome {
    let sevens = census_list(7, false).map_err(err)?;
    for p in sevens.iter() {
        let f = MosaicFloorplan::bp2fp(p).map_err(err)?;
        let nine = verified_growth(&f, 9).map_err(|e| format!("{}: {e}", p.compact()))?;
        verified_growth(&nine, 11).map_err(|e| format!("{}: {e}", p.compact()))?;
    }
    let eights = census_list(8, false).map_err(err)?;
    for p in eights.iter() {
        let f = MosaicFloorplan::bp2fp(p).map_err(err)?;
        verified_growth(&f, 10).map_err(|e| format!("{}: {e}", p.compact()))?;
    }
    Ok(format!(
        "{} seeds -> 9 -> 11, {} seeds -> 10",
        sevens.len(),
        eights.len()
    ))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let table = count_hrd_fast(order(5), 300).map_err(err)?;
    let elapsed = start.elapsed();
    for n in 1..=30 {
        ensure!(
            table.t[n] == count_hrd_literal(n).map_err(err)?,
            "n={n} disagrees with literal"
        );
    }
    ensure!(
        elapsed < Duration::from_secs(4),
        "count_hrd_fast(5, 300) took {elapsed:?}"
    );
    let digits = table.t[300].to_string().len();
    Ok(format!("n=300 in {elapsed:.2?} ({digits} digits)"))
}

fn gap_claim() -> Outcome {
    let mut checked = Vec::new();
    for k in [4usize, 6] {
        let s_next = census_simple_baxter(k + 1, false, false)
            .map_err(err)?
            .count;
        for n in k + 1..=8 {
            let hi = oracle_count(order(k + 1), n, false).map_err(err)?;
            let lo = oracle_count(order(k), n, false).map_err(err)?;
            let bound = if s_next >= 1 {
                BigUint::from(3u32).pow((n - k - 1) as u32)
            } else {
                BigUint::from(0u32)
            };
            ensure!(
                hi >= lo && &hi - &lo >= bound,
                "k={k} n={n}: {hi} - {lo} < {bound}"
            );
            checked.push(format!("k={k},n={n}:{}", &hi - &lo));
        }
    }
    Ok(checked.join(" "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("order-2 counts are Schröder numbers", schroeder_identity),
        (
            "order-5 literal, general, fast and oracle counts agree",
            order_five_fidelity,
        ),
        ("simple Baxter census fixtures", census_fixtures),
        ("floorplan/permutation roundtrips", bijection_roundtrips),
        (
            "blocks correspond to enveloping rectangles",
            blocks_and_envelopes,
        ),
        (
            "decomposition is unique, trees are injective",
            decomposition_uniqueness,
        ),
        ("3^(n-5) family of HRD_5 \\ HRD_4", lower_bound_family),
        (
            "irreducible floorplans grow by two rooms",
            hierarchy_strictness,
        ),
        ("fast counter reaches n = 300", performance),
        ("HRD_{k+1} exceeds HRD_k by 3^(n-k-1)", gap_claim),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} [{detail}] ({secs:.2}s)",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} [{why}] ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
