//! Skewed generating trees of order `k`.
//!
//! A node labeled with a simple Baxter permutation of length `l` has `l`
//! children, listed in permutation-position order; evaluating the tree inflates
//! each label by the permutations of its children. The skew rule restricts the
//! first child (the `α₁` slot of the canonical decomposition): under a `12`
//! node it may not be another `12` node, and likewise for `21`. With that rule
//! the tree of a permutation is unique.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::counting::census_list;
use crate::error::{Error, Result};
use crate::floorplan::MosaicFloorplan;
use crate::perm::Permutation;

/// Maximum skeleton length allowed in a tree, `k >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderK(usize);

impl OrderK {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!(
                "order k must be at least 2, got {k}"
            )));
        }
        Ok(OrderK(k))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for OrderK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenTree {
    Leaf,
    Node {
        label: Permutation,
        children: Vec<GenTree>,
    },
}

fn is_cut(p: &Permutation) -> bool {
    p.len() == 2
}

impl GenTree {
    pub fn node(label: Permutation, children: Vec<GenTree>) -> Result<GenTree> {
        let t = GenTree::Node { label, children };
        t.validate(None)?;
        Ok(t)
    }

    pub fn label(&self) -> Option<&Permutation> {
        match self {
            GenTree::Leaf => None,
            GenTree::Node { label, .. } => Some(label),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            GenTree::Leaf => 1,
            GenTree::Node { children, .. } => children.iter().map(GenTree::leaves).sum(),
        }
    }

    /// Length of the longest label, 1 for a leaf.
    pub fn order(&self) -> usize {
        match self {
            GenTree::Leaf => 1,
            GenTree::Node { label, children } => children
                .iter()
                .map(GenTree::order)
                .fold(label.len(), usize::max),
        }
    }

    /// Checks labels, arity and the skew rule; with `k`, also the order bound.
    pub fn validate(&self, k: Option<OrderK>) -> Result<()> {
        let GenTree::Node { label, children } = self else {
            return Ok(());
        };
        if label.len() < 2 || !label.is_simple() || !label.is_baxter() {
            return Err(Error::InvalidTree(format!(
                "label {} is not a simple Baxter permutation of length >= 2",
                label.compact()
            )));
        }
        if let Some(k) = k {
            if label.len() > k.get() {
                return Err(Error::ExceedsOrder {
                    skeleton: label.compact(),
                    len: label.len(),
                    k: k.get(),
                });
            }
        }
        if children.len() != label.len() {
            return Err(Error::InvalidTree(format!(
                "label {} needs {} children, found {}",
                label.compact(),
                label.len(),
                children.len()
            )));
        }
        if is_cut(label) && children[0].label() == Some(label) {
            return Err(Error::InvalidTree(format!(
                "first child of a {} node is labeled {} (skew rule)",
                label.compact(),
                label.compact()
            )));
        }
        children.iter().try_for_each(|c| c.validate(k))
    }

    fn eval(&self) -> Permutation {
        match self {
            GenTree::Leaf => Permutation::identity(1),
            GenTree::Node { label, children } => {
                let kids: Vec<Permutation> = children.iter().map(GenTree::eval).collect();
                label.inflate(&kids).expect("arity checked by validate")
            }
        }
    }

    /// Recursive inflation of the node labels.
    pub fn perm_of_tree(&self) -> Result<Permutation> {
        self.validate(None)?;
        Ok(self.eval())
    }

    /// The unique skewed tree of `p`, failing when some skeleton is longer
    /// than `k`.
    pub fn tree_of_perm(p: &Permutation, k: OrderK) -> Result<GenTree> {
        if !p.is_baxter() {
            return Err(Error::NotBaxter(p.compact()));
        }
        build_tree(p, k)
    }

    /// Embeds a realization of each label into the rooms of its parent.
    pub fn floorplan_of_tree(&self) -> Result<MosaicFloorplan> {
        self.validate(None)?;
        let mut next_id = 1;
        self.realize(&mut next_id)
    }

    fn realize(&self, next_id: &mut u32) -> Result<MosaicFloorplan> {
        match self {
            GenTree::Leaf => {
                let f = MosaicFloorplan::unchecked(
                    1,
                    1,
                    vec![crate::floorplan::Room::new(*next_id, 0, 0, 1, 1)],
                );
                *next_id += 1;
                Ok(f)
            }
            GenTree::Node { label, children } => {
                // Room ids of the host are its top-left deletion labels; the
                // child at position i fills the room labeled label(i).
                let host = MosaicFloorplan::bp2fp(label)?;
                let mut parts = Vec::with_capacity(children.len());
                for (slot, child) in children.iter().enumerate() {
                    parts.push((label.at(slot + 1) as u32, child.realize(next_id)?));
                }
                Ok(MosaicFloorplan::embed(&host, &parts))
            }
        }
    }
}

fn build_tree(p: &Permutation, k: OrderK) -> Result<GenTree> {
    if p.len() == 1 {
        return Ok(GenTree::Leaf);
    }
    let d = p.decompose()?;
    if d.skeleton.len() > k.get() {
        return Err(Error::ExceedsOrder {
            skeleton: d.skeleton.compact(),
            len: d.skeleton.len(),
            k: k.get(),
        });
    }
    if !d.skeleton.is_baxter() {
        return Err(Error::NotBaxter(d.skeleton.compact()));
    }
    let children = d
        .children
        .iter()
        .map(|c| build_tree(c, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(GenTree::Node {
        label: d.skeleton,
        children,
    })
}

/// `p` is Baxter and its canonical tree only uses skeletons of length `<= k`.
pub fn is_hrd(p: &Permutation, k: OrderK) -> bool {
    p.is_baxter() && build_tree(p, k).is_ok()
}

/// Baxter, simple and of length at least 2.
pub fn is_ihrd(p: &Permutation) -> bool {
    p.len() >= 2 && p.is_simple() && p.is_baxter()
}

/// Every skewed tree of order `k` with `n` leaves, each exactly once.
///
/// Ordering is deterministic: label lexicographic, then compositions of `n`
/// into child sizes lexicographic, then child tuples lexicographic.
pub fn enumerate_trees(k: OrderK, n: usize) -> Result<Vec<GenTree>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a tree has at least one leaf".into(),
        ));
    }
    let mut labels = Vec::new();
    for l in 2..=k.get().min(n) {
        labels.extend(census_list(l, true)?.iter().cloned());
    }
    labels.sort();
    let mut memo = HashMap::new();
    Ok(trees_with(&labels, n, None, &mut memo))
}

type TreeMemo = HashMap<(usize, Option<Permutation>), Vec<GenTree>>;

/// Trees with `n` leaves whose root label is not `forbidden`.
fn trees_with(
    labels: &[Permutation],
    n: usize,
    forbidden: Option<&Permutation>,
    memo: &mut TreeMemo,
) -> Vec<GenTree> {
    let key = (n, forbidden.cloned());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(GenTree::Leaf);
    }
    for label in labels.iter().filter(|l| l.len() <= n) {
        if Some(label) == forbidden {
            continue;
        }
        for sizes in compositions(n, label.len()) {
            let mut options: Vec<Vec<GenTree>> = Vec::with_capacity(sizes.len());
            for (slot, &size) in sizes.iter().enumerate() {
                let restrict = (slot == 0 && is_cut(label)).then_some(label);
                options.push(trees_with(labels, size, restrict, memo));
            }
            for children in cartesian(&options) {
                out.push(GenTree::Node {
                    label: label.clone(),
                    children,
                });
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

/// Compositions of `n` into `parts` positive parts, lexicographic.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=n - (parts - 1) {
            prefix.push(first);
            go(n - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && n >= parts {
        go(n, parts, &mut Vec::new(), &mut out);
    }
    out
}

fn cartesian(options: &[Vec<GenTree>]) -> Vec<Vec<GenTree>> {
    let mut acc: Vec<Vec<GenTree>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for o in opts {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// `.` for a leaf, `(<label> <child> …)` for a node.
impl fmt::Display for GenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenTree::Leaf => f.write_str("."),
            GenTree::Node { label, children } => {
                write!(f, "({}", label.compact())?;
                for c in children {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for GenTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenTree> {
        let mut parser = TreeParser { src: s, pos: 0 };
        let tree = parser.tree()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input after tree"));
        }
        tree.validate(None)
            .map_err(|e| parser.error(&e.to_string()))?;
        Ok(tree)
    }
}

struct TreeParser<'a> {
    src: &'a str,
    pos: usize,
}

impl TreeParser<'_> {
    fn error(&self, message: &str) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn tree(&mut self) -> Result<GenTree> {
        self.skip_ws();
        match self.src[self.pos..].chars().next() {
            Some('.') => {
                self.pos += 1;
                Ok(GenTree::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                let len = self.src[start..]
                    .find(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == '.')
                    .unwrap_or(self.src.len() - start);
                let token = &self.src[start..start + len];
                let label: Permutation = token
                    .parse()
                    .map_err(|e: Error| self.error(&e.to_string()))?;
                self.pos += len;
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    match self.src[self.pos..].chars().next() {
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(_) => children.push(self.tree()?),
                        None => return Err(self.error("unclosed '('")),
                    }
                }
                if children.len() != label.len() {
                    return Err(self.error(&format!(
                        "label {} needs {} children, found {}",
                        label.compact(),
                        label.len(),
                        children.len()
                    )));
                }
                Ok(GenTree::Node { label, children })
            }
            Some(c) => Err(self.error(&format!("expected '.' or '(', found '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
