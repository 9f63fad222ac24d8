//! Bijections for the faithfully balanced modules with exactly `n` summands:
//! interleaved trees, increasing binary trees (hence permutations),
//! self-bounded functions, and tree-like tableaux.
//!
//! A module with `n` summands becomes a rooted tree inside the staircase:
//! the box `(1, n)` is the root, and every other box or leaf hangs from the
//! nearest summand above it in its column (making it a left child) or the
//! nearest summand leftwards in its row (a right child) — exactly one of the
//! two exists. Leaves are numbered `1..=n+1` from the right. The subtree
//! rooted at a vertex spans a set of leaf positions; writing `i_r` and `i_l`
//! for its extreme positions recovers the box `(i_r, i_l - 1)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Deserializer;
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::count::fb_enumerate;
use crate::error::FabalError;
use crate::fbcheck::is_fb;
use crate::interval::Interval;
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

/// A binary tree whose left and right subtrees may interleave their leaves
/// along the global leaf line.
///
/// `lea_r[k]` is the position of the `(k+2)`-nd leaf of the right subtree
/// among the `n+1` leaves of the whole tree (the first right leaf is always
/// at position 1, the last left leaf always at position `n+1`). A tree where
/// every node has `lea_r = [2, 3, ..]` is an ordinary binary tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterleavedTree {
    Empty,
    Node {
        right: Box<InterleavedTree>,
        left: Box<InterleavedTree>,
        lea_r: Vec<usize>,
    },
}

impl InterleavedTree {
    pub fn leaf() -> Self {
        InterleavedTree::Empty
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        match self {
            InterleavedTree::Empty => 0,
            InterleavedTree::Node { right, left, .. } => 1 + right.size() + left.size(),
        }
    }

    /// Positions of the left subtree's leaves: the complement of `lea_r`
    /// in `2..=size`, sorted.
    pub fn lea_l(&self) -> Vec<usize> {
        match self {
            InterleavedTree::Empty => Vec::new(),
            InterleavedTree::Node { lea_r, .. } => {
                let n = self.size();
                let used: BTreeSet<usize> = lea_r.iter().copied().collect();
                (2..=n).filter(|p| !used.contains(p)).collect()
            }
        }
    }

    /// Trivial interleaving at every node.
    pub fn is_binary(&self) -> bool {
        match self {
            InterleavedTree::Empty => true,
            InterleavedTree::Node { right, left, lea_r } => {
                lea_r.iter().enumerate().all(|(k, &p)| p == k + 2)
                    && right.is_binary()
                    && left.is_binary()
            }
        }
    }

    pub fn validate(&self) -> Result<(), FabalError> {
        let InterleavedTree::Node { right, left, lea_r } = self else {
            return Ok(());
        };
        let n = self.size();
        let n_r = right.size();
        if lea_r.len() != n_r {
            return Err(FabalError::MalformedTree(format!(
                "interleaving lists {} positions for a right subtree of size {n_r}",
                lea_r.len()
            )));
        }
        let mut prev = 1usize;
        for &p in lea_r {
            if p <= prev || p > n {
                return Err(FabalError::MalformedTree(format!(
                    "interleaving positions must be strictly increasing within 2..={n}"
                )));
            }
            prev = p;
        }
        right.validate()?;
        left.validate()
    }
}

impl Serialize for InterleavedTree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            InterleavedTree::Empty => s.serialize_none(),
            InterleavedTree::Node { right, left, lea_r } => {
                let mut st = s.serialize_struct("Node", 3)?;
                st.serialize_field("right", right.as_ref())?;
                st.serialize_field("left", left.as_ref())?;
                st.serialize_field("leaR", lea_r)?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for InterleavedTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            right: InterleavedTree,
            left: InterleavedTree,
            #[serde(rename = "leaR")]
            lea_r: Vec<usize>,
        }
        let repr: Option<Repr> = Option::deserialize(d)?;
        Ok(match repr {
            None => InterleavedTree::Empty,
            Some(r) => InterleavedTree::Node {
                right: Box::new(r.right),
                left: Box::new(r.left),
                lea_r: r.lea_r,
            },
        })
    }
}

/// A binary tree with pairwise distinct labels increasing away from the
/// root (the root carries the minimum).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncreasingTree {
    pub label: usize,
    pub right: Option<Box<IncreasingTree>>,
    pub left: Option<Box<IncreasingTree>>,
}

impl IncreasingTree {
    pub fn size(&self) -> usize {
        1 + self.right.as_deref().map_or(0, IncreasingTree::size)
            + self.left.as_deref().map_or(0, IncreasingTree::size)
    }

    fn collect_labels(&self, out: &mut Vec<usize>) {
        out.push(self.label);
        if let Some(r) = &self.right {
            r.collect_labels(out);
        }
        if let Some(l) = &self.left {
            l.collect_labels(out);
        }
    }

    pub fn validate(&self) -> Result<(), FabalError> {
        let mut labels = Vec::new();
        self.collect_labels(&mut labels);
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(FabalError::MalformedTree("duplicate labels".into()));
        }
        fn increasing(t: &IncreasingTree) -> bool {
            let ok = |c: &Option<Box<IncreasingTree>>| {
                c.as_deref().is_none_or(|c| c.label > t.label && increasing(c))
            };
            ok(&t.right) && ok(&t.left)
        }
        if !increasing(self) {
            return Err(FabalError::MalformedTree(
                "labels must increase away from the root".into(),
            ));
        }
        Ok(())
    }

    /// In-order reading: left subtree, root, right subtree.
    pub fn in_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn walk(t: &IncreasingTree, out: &mut Vec<usize>) {
            if let Some(l) = &t.left {
                walk(l, out);
            }
            out.push(t.label);
            if let Some(r) = &t.right {
                walk(r, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

/// A function `f` on `{1..n}` with `f(i) <= i` (hence `f(1) = 1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SelfBounded(pub Vec<usize>);

impl SelfBounded {
    pub fn new(values: Vec<usize>) -> Result<Self, FabalError> {
        for (k, &v) in values.iter().enumerate() {
            if v < 1 || v > k + 1 {
                return Err(FabalError::MalformedFunction(format!(
                    "f({}) = {v} violates 1 <= f(i) <= i",
                    k + 1
                )));
            }
        }
        Ok(SelfBounded(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for SelfBounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A Young-diagram shape with pointed cells, rows top to bottom and columns
/// left to right, both 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeLikeTableau {
    pub shape: Vec<usize>,
    pub pointed: BTreeSet<(usize, usize)>,
}

impl TreeLikeTableau {
    /// The defining conditions: weakly decreasing shape, corner pointed,
    /// every row and column pointed somewhere, and every non-corner point
    /// has a point to its left in its row or above it in its column but
    /// not both.
    pub fn is_tree_like(&self) -> bool {
        if self.shape.is_empty() || self.shape.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        if *self.shape.last().unwrap() == 0 {
            return false;
        }
        let rows = self.shape.len();
        let cols = self.shape[0];
        for &(r, c) in &self.pointed {
            if r < 1 || r > rows || c < 1 || c > self.shape[r - 1] {
                return false;
            }
        }
        if !self.pointed.contains(&(1, 1)) {
            return false;
        }
        for r in 1..=rows {
            if !self.pointed.iter().any(|&(pr, _)| pr == r) {
                return false;
            }
        }
        for c in 1..=cols {
            if !self.pointed.iter().any(|&(_, pc)| pc == c) {
                return false;
            }
        }
        for &(r, c) in &self.pointed {
            if (r, c) == (1, 1) {
                continue;
            }
            let leftward = self.pointed.iter().any(|&(pr, pc)| pr == r && pc < c);
            let above = self.pointed.iter().any(|&(pr, pc)| pc == c && pr < r);
            if leftward == above {
                return false;
            }
        }
        true
    }
}

fn fbn_module(m: &BasicModule) -> Result<(), FabalError> {
    let pres = NakayamaPresentation::linear(m.n());
    if m.summand_count() != m.n() {
        return Err(FabalError::NotInFbN(format!(
            "{} summands for rank {}",
            m.summand_count(),
            m.n()
        )));
    }
    if !is_fb(&pres, m) {
        return Err(FabalError::NotInFbN("module is not faithfully balanced".into()));
    }
    Ok(())
}

/// The tree of an `n`-summand faithfully balanced module.
pub fn to_tree(m: &BasicModule) -> Result<InterleavedTree, FabalError> {
    fbn_module(m)?;
    let n = m.n();

    enum Child {
        Vertex(Interval),
        Leaf(usize),
    }
    let right_child = |v: Interval| -> Child {
        m.iter()
            .filter(|y| y.top == v.top && y.soc < v.soc)
            .max_by_key(|y| y.soc)
            .map_or(Child::Leaf(v.top), Child::Vertex)
    };
    let left_child = |v: Interval| -> Child {
        m.iter()
            .filter(|y| y.soc == v.soc && y.top > v.top)
            .min_by_key(|y| y.top)
            .map_or(Child::Leaf(v.soc + 1), Child::Vertex)
    };

    // Returns the subtree and the sorted global leaf positions it spans.
    fn build(
        v: Interval,
        right_child: &dyn Fn(Interval) -> Child,
        left_child: &dyn Fn(Interval) -> Child,
    ) -> (InterleavedTree, Vec<usize>) {
        let (rt, r_leaves) = match right_child(v) {
            Child::Vertex(w) => build(w, right_child, left_child),
            Child::Leaf(k) => (InterleavedTree::Empty, vec![k]),
        };
        let (lt, l_leaves) = match left_child(v) {
            Child::Vertex(w) => build(w, right_child, left_child),
            Child::Leaf(k) => (InterleavedTree::Empty, vec![k]),
        };
        let mut all: Vec<usize> = r_leaves.iter().chain(l_leaves.iter()).copied().collect();
        all.sort_unstable();
        debug_assert_eq!(all[0], v.top);
        debug_assert_eq!(*all.last().unwrap(), v.soc + 1);
        let lea_r = r_leaves[1..]
            .iter()
            .map(|k| all.binary_search(k).unwrap() + 1)
            .collect();
        (
            InterleavedTree::Node { right: Box::new(rt), left: Box::new(lt), lea_r },
            all,
        )
    }

    let root = Interval::new(1, n);
    let (tree, leaves) = build(root, &right_child, &left_child);
    debug_assert_eq!(leaves, (1..=n + 1).collect::<Vec<_>>());
    debug_assert_eq!(tree.size(), n);
    Ok(tree)
}

/// Collects the interval of every vertex in pre-order (root, right, left),
/// given the global positions of the subtree's leaves.
fn place(t: &InterleavedTree, positions: &[usize], out: &mut Vec<Interval>) -> Result<(), FabalError> {
    let InterleavedTree::Node { right, left, lea_r } = t else {
        if positions.len() != 1 {
            return Err(FabalError::MalformedTree("leaf with several positions".into()));
        }
        return Ok(());
    };
    let top = positions[0];
    let soc = *positions.last().unwrap() - 1;
    if top > soc {
        return Err(FabalError::MalformedTree("vertex spans no box".into()));
    }
    out.push(Interval::new(top, soc));
    let lea_l = t.lea_l();
    let mut r_pos = vec![positions[0]];
    r_pos.extend(lea_r.iter().map(|&p| positions[p - 1]));
    let mut l_pos: Vec<usize> = lea_l.iter().map(|&p| positions[p - 1]).collect();
    l_pos.push(*positions.last().unwrap());
    place(right, &r_pos, out)?;
    place(left, &l_pos, out)
}

/// The module of an interleaved tree with `n` vertices.
pub fn from_tree(t: &InterleavedTree, n: usize) -> Result<BasicModule, FabalError> {
    t.validate()?;
    if t.size() != n {
        return Err(FabalError::MalformedTree(format!(
            "tree has {} vertices, expected {n}",
            t.size()
        )));
    }
    let positions: Vec<usize> = (1..=n + 1).collect();
    let mut intervals = Vec::new();
    place(t, &positions, &mut intervals)?;
    let m = BasicModule::new(n, intervals.iter().copied())?;
    fbn_module(&m).map_err(|_| {
        FabalError::MalformedTree("tree does not describe a balanced configuration".into())
    })?;
    Ok(m)
}

/// Pre-order labels produced by the full untangling of a tree, starting
/// from the well-ordered labeling `1..=n`.
fn untangle_labels(t: &InterleavedTree, w: Vec<usize>) -> Vec<usize> {
    let InterleavedTree::Node { right, left, lea_r } = t else {
        debug_assert!(w.is_empty());
        return Vec::new();
    };
    let lea_l = t.lea_l();
    let w_r: Vec<usize> = lea_r.iter().map(|&p| w[p - 1]).collect();
    let w_l: Vec<usize> = lea_l.iter().map(|&p| w[p - 1]).collect();
    let mut out = vec![w[0]];
    out.extend(untangle_labels(right, w_r));
    out.extend(untangle_labels(left, w_l));
    out
}

/// Full untangling: the same underlying binary tree, interleavings removed,
/// with the vertex labels rearranged into an increasing tree.
pub fn untangle(t: &InterleavedTree) -> Result<IncreasingTree, FabalError> {
    t.validate()?;
    fn rec(t: &InterleavedTree, w: Vec<usize>) -> Option<Box<IncreasingTree>> {
        let InterleavedTree::Node { right, left, lea_r } = t else {
            debug_assert!(w.is_empty());
            return None;
        };
        let lea_l = t.lea_l();
        let w_r: Vec<usize> = lea_r.iter().map(|&p| w[p - 1]).collect();
        let w_l: Vec<usize> = lea_l.iter().map(|&p| w[p - 1]).collect();
        Some(Box::new(IncreasingTree {
            label: w[0],
            right: rec(right, w_r),
            left: rec(left, w_l),
        }))
    }
    let n = t.size();
    if n == 0 {
        return Err(FabalError::MalformedTree("empty tree has no labeling".into()));
    }
    Ok(*rec(t, (1..=n).collect()).unwrap())
}

/// A single untangling move at the root: the root's interleaving becomes
/// trivial and the pre-order label sequence is rearranged accordingly.
/// Meaningful when `labels` (pre-order) is well ordered.
pub fn untangle_step(
    t: &InterleavedTree,
    labels: &[usize],
) -> Result<(InterleavedTree, Vec<usize>), FabalError> {
    t.validate()?;
    let InterleavedTree::Node { right, left, lea_r } = t else {
        return Err(FabalError::MalformedTree("nothing to untangle".into()));
    };
    if labels.len() != t.size() {
        return Err(FabalError::MalformedTree("label count mismatch".into()));
    }
    let lea_l = t.lea_l();
    let mut new_labels = vec![labels[0]];
    new_labels.extend(lea_r.iter().map(|&p| labels[p - 1]));
    new_labels.extend(lea_l.iter().map(|&p| labels[p - 1]));
    let trivial: Vec<usize> = (2..=right.size() + 1).collect();
    Ok((
        InterleavedTree::Node { right: right.clone(), left: left.clone(), lea_r: trivial },
        new_labels,
    ))
}

/// Inverse of untangling: recovers the interleaving of every node from the
/// ranks of the subtree labels.
pub fn reorder(it: &IncreasingTree) -> Result<InterleavedTree, FabalError> {
    it.validate()?;
    fn rec(node: &IncreasingTree) -> (InterleavedTree, Vec<usize>) {
        let (rt, mut r_labels) = match &node.right {
            Some(r) => rec(r),
            None => (InterleavedTree::Empty, Vec::new()),
        };
        let (lt, l_labels) = match &node.left {
            Some(l) => rec(l),
            None => (InterleavedTree::Empty, Vec::new()),
        };
        let mut all = vec![node.label];
        all.extend(r_labels.iter().copied());
        all.extend(l_labels.iter().copied());
        all.sort_unstable();
        debug_assert_eq!(all[0], node.label);
        r_labels.sort_unstable();
        let lea_r = r_labels
            .iter()
            .map(|x| all.binary_search(x).unwrap() + 1)
            .collect();
        let mut labels = all;
        (
            InterleavedTree::Node { right: Box::new(rt), left: Box::new(lt), lea_r },
            std::mem::take(&mut labels),
        )
    }
    Ok(rec(it).0)
}

/// The permutation of a module: in-order labels of its untangled tree.
pub fn to_permutation(m: &BasicModule) -> Result<Vec<usize>, FabalError> {
    Ok(untangle(&to_tree(m)?)?.in_order())
}

/// The self-bounded function of a module: vertices are labeled by the
/// untangling, and the vertex labeled `i` contributes `f(i) =` the position
/// of the rightmost leaf of its subtree — which is the top index of its
/// interval summand.
pub fn to_self_bounded(m: &BasicModule) -> Result<SelfBounded, FabalError> {
    let t = to_tree(m)?;
    let n = m.n();
    let labels = untangle_labels(&t, (1..=n).collect());
    let mut intervals = Vec::new();
    place(&t, &(1..=n + 1).collect::<Vec<_>>(), &mut intervals)?;
    debug_assert_eq!(labels.len(), intervals.len());
    let mut values = vec![0usize; n];
    for (label, iv) in labels.iter().zip(&intervals) {
        values[label - 1] = iv.top;
    }
    SelfBounded::new(values)
}

/// The splitting of a self-bounded function into the right and left
/// position sequences and sub-functions.
///
/// `positions_r` collects the indices that reach 1 through the function,
/// `positions_l` those that reach a fixed point; they partition `2..=n`.
pub struct SbfSplit {
    pub positions_r: Vec<usize>,
    pub positions_l: Vec<usize>,
    pub f_r: SelfBounded,
    pub f_l: SelfBounded,
}

pub fn sub_functions(f: &SelfBounded) -> SbfSplit {
    let n = f.len();
    let mut positions_r: Vec<usize> = Vec::new();
    let mut positions_l: Vec<usize> = Vec::new();
    for i in 2..=n {
        let v = f.get(i);
        if v == 1 || positions_r.contains(&v) {
            positions_r.push(i);
        } else if v == i || positions_l.contains(&v) {
            positions_l.push(i);
        }
    }
    debug_assert_eq!(positions_r.len() + positions_l.len(), n.saturating_sub(1));
    let f_r = SelfBounded::new(
        positions_r
            .iter()
            .map(|&w| {
                let v = f.get(w);
                if v == 1 {
                    1
                } else {
                    positions_r.iter().position(|&x| x == v).unwrap() + 2
                }
            })
            .collect(),
    )
    .expect("right sub-function is self-bounded");
    let f_l = SelfBounded::new(
        positions_l
            .iter()
            .map(|&u| {
                let v = f.get(u);
                positions_l.iter().position(|&x| x == v).unwrap() + 1
            })
            .collect(),
    )
    .expect("left sub-function is self-bounded");
    SbfSplit { positions_r, positions_l, f_r, f_l }
}

fn tree_from_sbf(f: &SelfBounded) -> InterleavedTree {
    if f.is_empty() {
        return InterleavedTree::Empty;
    }
    let split = sub_functions(f);
    InterleavedTree::Node {
        right: Box::new(tree_from_sbf(&split.f_r)),
        left: Box::new(tree_from_sbf(&split.f_l)),
        lea_r: split.positions_r,
    }
}

/// The module of a self-bounded function.
pub fn from_self_bounded(f: &SelfBounded) -> Result<BasicModule, FabalError> {
    SelfBounded::new(f.0.clone())?; // re-validate arbitrary input
    from_tree(&tree_from_sbf(f), f.len())
}

/// Deletes the empty rows and columns of the staircase, recording the
/// resulting Young shape and pointed cells.
pub fn shrink(m: &BasicModule) -> Result<TreeLikeTableau, FabalError> {
    fbn_module(m)?;
    let tops: Vec<usize> = {
        let mut t: Vec<usize> = m.iter().map(|iv| iv.top).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    let socs: Vec<usize> = {
        let mut s: Vec<usize> = m.iter().map(|iv| iv.soc).collect();
        s.sort_unstable();
        s.dedup();
        s.reverse(); // leftmost column has the deepest socle
        s
    };
    assert_eq!(tops.len() + socs.len(), m.n() + 1, "leaf partition");
    let shape: Vec<usize> = tops.iter().map(|&i| socs.iter().filter(|&&j| j >= i).count()).collect();
    let pointed: BTreeSet<(usize, usize)> = m
        .iter()
        .map(|iv| {
            let r = tops.binary_search(&iv.top).unwrap() + 1;
            let c = socs.iter().position(|&j| j == iv.soc).unwrap() + 1;
            (r, c)
        })
        .collect();
    let tab = TreeLikeTableau { shape, pointed };
    debug_assert!(tab.is_tree_like());
    Ok(tab)
}

/// Reinflates a tree-like tableau into the rank-`n` staircase. The border
/// path of the tableau is walked from the top right and its `n+1` steps are
/// labeled in order; vertical steps label the surviving rows and horizontal
/// steps the surviving columns.
#[allow(clippy::needless_range_loop)]
pub fn unshrink(tab: &TreeLikeTableau, n: usize) -> Result<BasicModule, FabalError> {
    if !tab.is_tree_like() {
        return Err(FabalError::MalformedTableau("not a tree-like tableau".into()));
    }
    let rows = tab.shape.len();
    let cols = tab.shape[0];
    if rows + cols != n + 1 {
        return Err(FabalError::MalformedTableau(format!(
            "half-perimeter {} does not fit rank {n}",
            rows + cols
        )));
    }
    let mut row_label = vec![0usize; rows + 1];
    let mut col_label = vec![0usize; cols + 1];
    let mut next = 1usize;
    for r in 1..=rows {
        row_label[r] = next;
        next += 1;
        let lower = if r < rows { tab.shape[r] } else { 0 };
        // columns whose lowest cell is in row r, right to left
        for c in ((lower + 1)..=tab.shape[r - 1]).rev() {
            col_label[c] = next;
            next += 1;
        }
    }
    debug_assert_eq!(next, n + 2);
    let mut intervals = Vec::with_capacity(tab.pointed.len());
    for &(r, c) in &tab.pointed {
        let top = row_label[r];
        let soc = col_label[c] - 1;
        if top > soc {
            return Err(FabalError::MalformedTableau(format!(
                "pointed cell ({r},{c}) maps outside the staircase"
            )));
        }
        intervals.push(Interval::new(top, soc));
    }
    let m = BasicModule::new(n, intervals)?;
    fbn_module(&m)
        .map_err(|_| FabalError::MalformedTableau("tableau does not describe a module".into()))?;
    Ok(m)
}

/// The top statistic: the sum of `top - 1` over the summands.
pub fn chi(m: &BasicModule) -> usize {
    m.iter().map(|iv| iv.top - 1).sum()
}

/// Coefficient `d` counts the `n`-summand faithfully balanced modules with
/// `chi = d`; the polynomial equals the `q`-factorial
/// `∏_{i=1}^n (1 + q + ... + q^{i-1})`.
pub fn mahonian_polynomial(n: usize) -> Result<Vec<BigUint>, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    let mut coeffs = vec![BigUint::zero(); n * (n - 1) / 2 + 1];
    for m in fb_enumerate(&pres)? {
        if m.summand_count() == n {
            coeffs[chi(&m)] += BigUint::one();
        }
    }
    Ok(coeffs)
}

/// The `q`-factorial `∏_{i=1}^n (1 + q + ... + q^{i-1})` as a coefficient
/// vector.
pub fn q_factorial(n: usize) -> Vec<BigUint> {
    let mut poly = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); poly.len() + i - 1];
        for (d, c) in poly.iter().enumerate() {
            for k in 0..i {
                next[d + k] += c;
            }
        }
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::is_tilting;

    fn fbn(n: usize) -> Vec<BasicModule> {
        fb_enumerate(&NakayamaPresentation::linear(n))
            .unwrap()
            .filter(|m| m.summand_count() == n)
            .collect()
    }

    #[test]
    fn rank_two_trees() {
        let reg = BasicModule::from_pairs(2, &[(1, 2), (2, 2)]);
        let t = to_tree(&reg).unwrap();
        match &t {
            InterleavedTree::Node { right, left, lea_r } => {
                assert_eq!(right.size(), 0);
                assert_eq!(left.size(), 1);
                assert!(lea_r.is_empty());
            }
            _ => panic!("expected a node"),
        }
        assert_eq!(from_tree(&t, 2).unwrap(), reg);

        let coreg = BasicModule::from_pairs(2, &[(1, 2), (1, 1)]);
        let t = to_tree(&coreg).unwrap();
        match &t {
            InterleavedTree::Node { right, left, .. } => {
                assert_eq!(right.size(), 1);
                assert_eq!(left.size(), 0);
            }
            _ => panic!("expected a node"),
        }
        assert_eq!(from_tree(&t, 2).unwrap(), coreg);
    }

    #[test]
    fn tree_round_trip_all_small_ranks() {
        for n in 1..=6 {
            let mods = fbn(n);
            assert_eq!(mods.len(), (1..=n).product::<usize>());
            for m in mods {
                let t = to_tree(&m).unwrap();
                assert_eq!(from_tree(&t, n).unwrap(), m, "round trip at {m}");
            }
        }
    }

    #[test]
    fn to_tree_rejects_bad_input() {
        let not_fb = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (2, 2), (1, 1)]);
        assert!(to_tree(&not_fb).is_err());
        let wrong_count = BasicModule::from_pairs(3, &[(1, 3), (2, 3)]);
        assert!(to_tree(&wrong_count).is_err());
    }

    #[test]
    fn from_tree_rejects_malformed() {
        // interleaving positions out of range
        let t = InterleavedTree::Node {
            right: Box::new(InterleavedTree::Node {
                right: Box::new(InterleavedTree::Empty),
                left: Box::new(InterleavedTree::Empty),
                lea_r: vec![],
            }),
            left: Box::new(InterleavedTree::Empty),
            lea_r: vec![5],
        };
        assert!(from_tree(&t, 2).is_err());
    }

    #[test]
    fn untangle_reorder_round_trip() {
        for n in 1..=5 {
            for m in fbn(n) {
                let t = to_tree(&m).unwrap();
                let it = untangle(&t).unwrap();
                it.validate().unwrap();
                assert!(reorder(&it).unwrap() == t, "round trip at {m}");
            }
        }
    }

    /// Nothing to untangle: a plain binary tree keeps the well-ordered
    /// labeling, i.e. comes out labeled 1..n in pre-order.
    #[test]
    fn untangle_fixes_binary_trees() {
        for n in 1..=5 {
            for m in fbn(n) {
                let t = to_tree(&m).unwrap();
                if !t.is_binary() {
                    continue;
                }
                let mut labels = Vec::new();
                untangle(&t).unwrap().collect_labels(&mut labels);
                assert_eq!(labels, (1..=n).collect::<Vec<_>>(), "at {m}");
            }
        }
    }

    #[test]
    fn untangled_labels_are_increasing() {
        for m in fbn(5) {
            let it = untangle(&to_tree(&m).unwrap()).unwrap();
            let mut labels = Vec::new();
            it.collect_labels(&mut labels);
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=5).collect::<Vec<_>>());
            it.validate().unwrap();
        }
    }

    #[test]
    fn permutation_examples() {
        let reg = BasicModule::from_pairs(2, &[(1, 2), (2, 2)]);
        assert_eq!(to_permutation(&reg).unwrap(), vec![2, 1]);
        let coreg = BasicModule::from_pairs(2, &[(1, 2), (1, 1)]);
        assert_eq!(to_permutation(&coreg).unwrap(), vec![1, 2]);
        let one = BasicModule::from_pairs(1, &[(1, 1)]);
        assert_eq!(to_permutation(&one).unwrap(), vec![1]);
    }

    #[test]
    fn permutations_are_all_of_sym_n() {
        for n in 1..=5usize {
            let mut perms: BTreeSet<Vec<usize>> = BTreeSet::new();
            for m in fbn(n) {
                perms.insert(to_permutation(&m).unwrap());
            }
            assert_eq!(perms.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn self_bounded_round_trip() {
        for n in 1..=5 {
            for m in fbn(n) {
                let f = to_self_bounded(&m).unwrap();
                assert_eq!(from_self_bounded(&f).unwrap(), m, "round trip at {m}");
            }
        }
        // rank-2 values
        let reg = BasicModule::from_pairs(2, &[(1, 2), (2, 2)]);
        assert_eq!(to_self_bounded(&reg).unwrap(), SelfBounded(vec![1, 2]));
        let coreg = BasicModule::from_pairs(2, &[(1, 2), (1, 1)]);
        assert_eq!(to_self_bounded(&coreg).unwrap(), SelfBounded(vec![1, 1]));
    }

    #[test]
    fn self_bounded_rejects_bad_values() {
        assert!(SelfBounded::new(vec![1, 3]).is_err());
        assert!(SelfBounded::new(vec![2]).is_err());
        assert!(SelfBounded::new(vec![1, 1, 2]).is_ok());
    }

    #[test]
    fn binary_and_tilting_coincide() {
        for n in 1..=5 {
            for m in fbn(n) {
                let t = to_tree(&m).unwrap();
                let f = to_self_bounded(&m).unwrap();
                let tilt = is_tilting(&m);
                assert_eq!(tilt, t.is_binary(), "binary mismatch at {m}");
                assert_eq!(tilt, f.is_non_decreasing(), "monotone mismatch at {m}");
            }
        }
        // the regular module is the left comb
        let reg = BasicModule::regular(&NakayamaPresentation::linear(4));
        assert!(to_tree(&reg).unwrap().is_binary());
    }

    #[test]
    fn binary_tree_count_rank3() {
        let binary = fbn(3)
            .iter()
            .filter(|m| to_tree(m).unwrap().is_binary())
            .count();
        assert_eq!(binary, 5);
    }

    #[test]
    fn non_decreasing_self_bounded_count_is_catalan() {
        // over {1..4}: 14 functions
        let mut count = 0usize;
        let mut f = [1usize; 4];
        loop {
            let sb = SelfBounded::new(f.to_vec()).unwrap();
            if sb.is_non_decreasing() {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == 4 {
                    break;
                }
                if f[k] < k + 1 {
                    f[k] += 1;
                    for item in f.iter_mut().take(k) {
                        *item = 1;
                    }
                    break;
                }
                k += 1;
            }
            if k == 4 {
                break;
            }
        }
        assert_eq!(count, 14);
    }

    #[test]
    fn tableau_round_trip() {
        for n in 1..=5 {
            for m in fbn(n) {
                let tab = shrink(&m).unwrap();
                assert!(tab.is_tree_like());
                assert_eq!(unshrink(&tab, n).unwrap(), m, "round trip at {m}");
            }
        }
    }

    #[test]
    fn tableau_of_the_regular_module() {
        for n in 2..=5 {
            let reg = BasicModule::regular(&NakayamaPresentation::linear(n));
            let tab = shrink(&reg).unwrap();
            assert_eq!(tab.shape, vec![1; n]);
            assert_eq!(tab.pointed.len(), n);
        }
    }

    #[test]
    fn unshrink_rejects_bad_tableaux() {
        // corner not pointed
        let tab = TreeLikeTableau {
            shape: vec![2, 1],
            pointed: [(1, 2), (2, 1)].into_iter().collect(),
        };
        assert!(unshrink(&tab, 2).is_err());
        // wrong half-perimeter for the rank
        let tab = TreeLikeTableau { shape: vec![1], pointed: [(1, 1)].into_iter().collect() };
        assert!(unshrink(&tab, 3).is_err());
    }

    #[test]
    fn chi_and_mahonian() {
        assert_eq!(
            mahonian_polynomial(2).unwrap(),
            vec![BigUint::one(), BigUint::one()]
        );
        let m3: Vec<u64> = vec![1, 2, 2, 1];
        assert_eq!(
            mahonian_polynomial(3).unwrap(),
            m3.iter().map(|&c| BigUint::from(c)).collect::<Vec<_>>()
        );
        for n in 1..=5 {
            assert_eq!(mahonian_polynomial(n).unwrap(), q_factorial(n), "rank {n}");
        }
        let coreg = BasicModule::coregular(&NakayamaPresentation::linear(4));
        assert_eq!(chi(&coreg), 0);
    }

    #[test]
    fn tree_serialization() {
        let m = BasicModule::from_pairs(2, &[(1, 2), (2, 2)]);
        let t = to_tree(&m).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"right":null,"left":{"right":null,"left":null,"leaR":[]},"leaR":[]}"#);
        let back: InterleavedTree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
