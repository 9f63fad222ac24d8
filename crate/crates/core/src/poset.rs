//! The order on the n-summand faithfully balanced modules: `N ⊴ M` when
//! `cogen(N) ⊆ cogen(M)` and `gen(N) ⊇ gen(M)`. The regular module sits at
//! the bottom, its dual at the top, and the poset is a lattice whose cover
//! relations exchange a single summand through internal cohooks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::FabalError;
use crate::fbcheck::is_fb;
use crate::interval::{Interval, Leaf};
use crate::modcat::{
    cogen_closure, dual, ext_dim, gen_closure, is_proper_quotient, is_proper_submodule,
};
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

/// The corner of an internal cohook: a box of the staircase or a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Corner {
    Box(Interval),
    Leaf(Leaf),
}

/// The internal cohook of a summand `X` of `M = X ⊕ U`: the cohook of the
/// corner intersected with `gen(U) ∪ cogen(U)`, totally ordered from the
/// projective end to the injective end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InternalCohook {
    pub anchor: Interval,
    pub corner: Corner,
    pub chain: Vec<Interval>,
}

fn ensure_fbn(m: &BasicModule) -> Result<(), FabalError> {
    let pres = NakayamaPresentation::linear(m.n());
    if m.summand_count() != m.n() || !is_fb(&pres, m) {
        return Err(FabalError::NotInFbN(format!("{m}")));
    }
    Ok(())
}

/// All `n`-summand faithfully balanced modules, sorted.
pub fn fb_n(n: usize) -> Result<Vec<BasicModule>, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    let mut out: Vec<BasicModule> = crate::count::fb_enumerate(&pres)?
        .filter(|m| m.summand_count() == n)
        .collect();
    out.sort();
    Ok(out)
}

/// `lo ⊴ hi`: both closure inclusions. Inputs must be n-summand faithfully
/// balanced modules of the same rank.
pub fn leq(lo: &BasicModule, hi: &BasicModule) -> Result<bool, FabalError> {
    ensure_fbn(lo)?;
    ensure_fbn(hi)?;
    if lo.n() != hi.n() {
        return Err(FabalError::InvalidModule("rank mismatch".into()));
    }
    Ok(leq_closures(
        &gen_closure(lo),
        &cogen_closure(lo),
        &gen_closure(hi),
        &cogen_closure(hi),
    ))
}

fn leq_closures(
    gen_lo: &BTreeSet<Interval>,
    cogen_lo: &BTreeSet<Interval>,
    gen_hi: &BTreeSet<Interval>,
    cogen_hi: &BTreeSet<Interval>,
) -> bool {
    cogen_lo.is_subset(cogen_hi) && gen_hi.is_subset(gen_lo)
}

/// The refined comparator through the presentation categories
/// (`cogen^1(N) ⊆ cogen^1(M)` and `gen_1(N) ⊇ gen_1(M)`). Kept only for
/// inspection: it does not give a lattice and carries no lattice operations.
pub fn leq_refined(lo: &BasicModule, hi: &BasicModule) -> Result<bool, FabalError> {
    ensure_fbn(lo)?;
    ensure_fbn(hi)?;
    let pres = NakayamaPresentation::linear(lo.n());
    Ok(
        crate::approx::cogen1_category(&pres, lo)
            .is_subset(&crate::approx::cogen1_category(&pres, hi))
            && crate::approx::gen1_category(&pres, hi)
                .is_subset(&crate::approx::gen1_category(&pres, lo)),
    )
}

/// Builds the internal cohook of the summand `x` of `m`.
pub fn internal_cohook(m: &BasicModule, x: Interval) -> Result<InternalCohook, FabalError> {
    ensure_fbn(m)?;
    let n = m.n();
    if !m.contains(x) {
        return Err(FabalError::InvalidModule(format!("{x} is not a summand of {m}")));
    }
    if x == Interval::new(1, n) {
        return Err(FabalError::InvalidModule(
            "the projective-injective summand has no internal cohook".into(),
        ));
    }
    let u = m.without_summand(x);
    let splitting_projective = !m.iter().any(|y| is_proper_quotient(x, y));
    let splitting_injective = !m.iter().any(|y| is_proper_submodule(x, y));
    assert!(
        splitting_projective != splitting_injective,
        "a non-projective-injective summand splits on exactly one side"
    );

    // corner coordinates (ci, cj) of the cohook to intersect
    let (ci, cj, corner) = if splitting_projective {
        // deepest proper quotient of x inside u, else the row leaf
        match u.iter().filter(|y| y.top == x.top && y.soc < x.soc).max_by_key(|y| y.soc) {
            Some(x0) => (x0.top, x0.soc, Corner::Box(x0)),
            None => (x.top, x.top - 1, Corner::Leaf(Leaf(x.top))),
        }
    } else {
        // longest proper submodule of x inside u, else the column leaf
        match u.iter().filter(|y| y.soc == x.soc && y.top > x.top).min_by_key(|y| y.top) {
            Some(x0) => (x0.top, x0.soc, Corner::Box(x0)),
            None => (x.soc + 1, x.soc, Corner::Leaf(Leaf(x.soc + 1))),
        }
    };

    // The cohook of the corner in chain order: along the row from the
    // projective end, then up the column to the injective end; the two
    // minimal-length elements meet at the corner and the extension
    // tie-break orders the row before the column.
    let mut full = Vec::new();
    if ci <= n {
        for l in (cj + 1..=n).rev() {
            full.push(Interval::new(ci, l));
        }
    }
    if cj >= 1 {
        for k in (1..ci).rev() {
            full.push(Interval::new(k, cj));
        }
    }
    let members: BTreeSet<Interval> = {
        let mut s = gen_closure(&u);
        s.extend(cogen_closure(&u));
        s
    };
    let chain: Vec<Interval> = full.into_iter().filter(|z| members.contains(z)).collect();
    assert!(chain.contains(&x), "the anchor lies in its own internal cohook");
    assert_eq!(chain.first().unwrap().soc, n, "chain starts at a projective");
    assert_eq!(chain.last().unwrap().top, 1, "chain ends at an injective");
    Ok(InternalCohook { anchor: x, corner, chain })
}

/// Single-swap candidates strictly above `m`: replace a non-injective
/// summand by the successor in its internal cohook when that successor is
/// not already present.
fn swap_candidates(m: &BasicModule) -> Result<Vec<BasicModule>, FabalError> {
    let mut out = Vec::new();
    for x in m.iter() {
        if x.top == 1 {
            continue; // injective summands only move downward
        }
        let ic = internal_cohook(m, x)?;
        let pos = ic.chain.iter().position(|&z| z == x).unwrap();
        let next = ic.chain[pos + 1];
        if !m.contains(next) {
            out.push(m.without_summand(x).with_summand(next));
        }
    }
    Ok(out)
}

/// The covers of `m` from below: the order-minimal single-swap candidates.
/// Every cover is such a candidate, and a candidate fails to be a cover
/// exactly when another candidate sits strictly below it.
pub fn upper_covers(m: &BasicModule) -> Result<Vec<BasicModule>, FabalError> {
    let candidates = swap_candidates(m)?;
    let closures: Vec<(BTreeSet<Interval>, BTreeSet<Interval>)> = candidates
        .iter()
        .map(|c| (gen_closure(c), cogen_closure(c)))
        .collect();
    let mut covers = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let minimal = (0..candidates.len()).all(|j| {
            j == i
                || candidates[j] == *c
                || !leq_closures(&closures[j].0, &closures[j].1, &closures[i].0, &closures[i].1)
        });
        if minimal {
            covers.push(c.clone());
        }
    }
    covers.sort();
    covers.dedup();
    Ok(covers)
}

/// The full poset: elements in canonical order and the cover edges
/// `(lower, upper)`.
#[derive(Debug, Clone)]
pub struct FbPoset {
    pub n: usize,
    pub elements: Vec<BasicModule>,
    pub covers: Vec<(usize, usize)>,
}

impl FbPoset {
    pub fn index_of(&self, m: &BasicModule) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    /// Longest-chain height of every element above the bottom.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.elements.len()];
        // covers form a DAG; iterate to a fixed point (sizes are tiny)
        let mut changed = true;
        while changed {
            changed = false;
            for &(lo, hi) in &self.covers {
                if h[hi] < h[lo] + 1 {
                    h[hi] = h[lo] + 1;
                    changed = true;
                }
            }
        }
        h
    }

    /// Graphviz rendering: one box per module labeled by its text grid,
    /// ranked by chain height, one arrow per cover.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph fb {\n  rankdir=BT;\n  node [shape=box fontname=\"monospace\"];\n");
        for (i, m) in self.elements.iter().enumerate() {
            let label = crate::grid::grid_string(m, true).replace('\n', "\\n");
            s.push_str(&format!("  m{i} [label=\"{label}\"];\n"));
        }
        let heights = self.heights();
        let max_h = heights.iter().copied().max().unwrap_or(0);
        for level in 0..=max_h {
            let members: Vec<String> = heights
                .iter()
                .enumerate()
                .filter(|(_, &h)| h == level)
                .map(|(i, _)| format!("m{i}"))
                .collect();
            if !members.is_empty() {
                s.push_str(&format!("  {{ rank=same; {}; }}\n", members.join("; ")));
            }
        }
        for &(lo, hi) in &self.covers {
            s.push_str(&format!("  m{lo} -> m{hi};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Builds the Hasse diagram of the rank-`n` poset.
pub fn hasse(n: usize) -> Result<FbPoset, FabalError> {
    let elements = fb_n(n)?;
    let mut covers = Vec::new();
    for (i, m) in elements.iter().enumerate() {
        for c in upper_covers(m)? {
            let j = elements.binary_search(&c).expect("cover stays inside the poset");
            covers.push((i, j));
        }
    }
    covers.sort_unstable();
    Ok(FbPoset { n, elements, covers })
}

/// The intermediate data of the constructive meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetConstruction {
    /// Minimal cocover of `cogen(A) ∩ cogen(B)`: per socle the longest
    /// common submodule-column member.
    pub cocover: BasicModule,
    /// Minimal cover of `gen(A) ∪ gen(B)`: per top the longest member.
    pub cover: BasicModule,
    /// For every non-initial top of `cover`, the shortest interval that
    /// embeds in the cocover and surjects onto the cover member.
    pub completion: BasicModule,
    /// `cocover ⊕ completion`.
    pub meet: BasicModule,
}

/// The constructive greatest lower bound.
pub fn meet_construction(
    a: &BasicModule,
    b: &BasicModule,
) -> Result<MeetConstruction, FabalError> {
    ensure_fbn(a)?;
    ensure_fbn(b)?;
    if a.n() != b.n() {
        return Err(FabalError::InvalidModule("rank mismatch".into()));
    }
    let n = a.n();

    let min_top = |m: &BasicModule, soc: usize| m.column(soc).first().map(|iv| iv.top);
    let mut cocover = BasicModule::empty(n);
    for soc in 1..=n {
        if let (Some(ta), Some(tb)) = (min_top(a, soc), min_top(b, soc)) {
            cocover = cocover.with_summand(Interval::new(ta.max(tb), soc));
        }
    }

    let max_soc = |m: &BasicModule, top: usize| m.row(top).last().map(|iv| iv.soc);
    let mut cover = BasicModule::empty(n);
    for top in 1..=n {
        let s = match (max_soc(a, top), max_soc(b, top)) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (Some(x), None) | (None, Some(x)) => Some(x),
            (None, None) => None,
        };
        if let Some(s) = s {
            cover = cover.with_summand(Interval::new(top, s));
        }
    }
    // discard redundant members of the cover (same-top members cannot nest,
    // so this is a no-op safeguard)
    let cover = crate::modcat::splitting_projectives(&cover);

    let tops: Vec<Interval> = cover.iter().collect();
    assert_eq!(tops.first().copied(), Some(Interval::new(1, n)));
    let mut completion = BasicModule::empty(n);
    for g in tops.iter().skip(1) {
        // shortest (top, soc) with soc >= g.soc embedding into the cocover
        let choice = (g.soc..=n)
            .find(|&soc| cocover.column(soc).first().is_some_and(|c| c.top <= g.top))
            .map(|soc| Interval::new(g.top, soc))
            .expect("a completion member exists under the full projective-injective");
        completion = completion.with_summand(choice);
    }

    let mut meet = cocover.clone();
    for iv in completion.iter() {
        meet = meet.with_summand(iv);
    }
    assert_eq!(meet.summand_count(), n, "the meet has exactly n summands");
    debug_assert!(ensure_fbn(&meet).is_ok());
    Ok(MeetConstruction { cocover, cover, completion, meet })
}

/// Greatest lower bound in the lattice.
pub fn meet(a: &BasicModule, b: &BasicModule) -> Result<BasicModule, FabalError> {
    Ok(meet_construction(a, b)?.meet)
}

/// Least upper bound, through the reflection duality.
pub fn join(a: &BasicModule, b: &BasicModule) -> Result<BasicModule, FabalError> {
    Ok(dual(&meet(&dual(a), &dual(b))?))
}

/// Plain binary tree shapes, used for the independent rotation lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>), // (left, right)
}

fn all_shapes(n: usize) -> Vec<Shape> {
    if n == 0 {
        return vec![Shape::Leaf];
    }
    let mut out = Vec::new();
    for left_size in 0..n {
        for l in all_shapes(left_size) {
            for r in all_shapes(n - 1 - left_size) {
                out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

/// One right-rotation anywhere in the shape: (A ∧ B) ∧ C becomes A ∧ (B ∧ C).
fn rotations(s: &Shape) -> Vec<Shape> {
    let mut out = Vec::new();
    if let Shape::Node(l, r) = s {
        if let Shape::Node(a, b) = l.as_ref() {
            out.push(Shape::Node(
                a.clone(),
                Box::new(Shape::Node(b.clone(), r.clone())),
            ));
        }
        for l2 in rotations(l) {
            out.push(Shape::Node(Box::new(l2), r.clone()));
        }
        for r2 in rotations(r) {
            out.push(Shape::Node(l.clone(), Box::new(r2)));
        }
    }
    out
}

fn tree_shape(t: &crate::biject::InterleavedTree) -> Shape {
    match t {
        crate::biject::InterleavedTree::Empty => Shape::Leaf,
        crate::biject::InterleavedTree::Node { right, left, .. } => {
            Shape::Node(Box::new(tree_shape(left)), Box::new(tree_shape(right)))
        }
    }
}

/// Checks that the ext-free n-summand modules form a sublattice isomorphic
/// to the independently generated rotation lattice on binary trees.
pub fn tamari_check(n: usize) -> Result<bool, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    let tiltings: Vec<BasicModule> = fb_n(n)?
        .into_iter()
        .filter(|m| m.iter().all(|x| m.iter().all(|y| ext_dim(&pres, x, y) == 0)))
        .collect();

    // closure under both lattice operations
    for a in &tiltings {
        for b in &tiltings {
            if !tiltings.contains(&meet(a, b)?) || !tiltings.contains(&join(a, b)?) {
                return Ok(false);
            }
        }
    }

    // independent rotation order
    let shapes = all_shapes(n);
    let index = |s: &Shape| shapes.iter().position(|t| t == s).unwrap();
    let k = shapes.len();
    let mut reach = vec![vec![false; k]; k];
    for (i, s) in shapes.iter().enumerate() {
        reach[i][i] = true;
        for r in rotations(s) {
            reach[i][index(&r)] = true;
        }
    }
    for mid in 0..k {
        let row_mid = reach[mid].clone();
        for row in reach.iter_mut() {
            if row[mid] {
                for (j, &r) in row_mid.iter().enumerate() {
                    if r {
                        row[j] = true;
                    }
                }
            }
        }
    }

    if tiltings.len() != k {
        return Ok(false);
    }
    let shape_of: Vec<usize> = tiltings
        .iter()
        .map(|m| index(&tree_shape(&crate::biject::to_tree(m).expect("tilting is n-summand"))))
        .collect();
    for (i, a) in tiltings.iter().enumerate() {
        for (j, b) in tiltings.iter().enumerate() {
            if leq(a, b)? != reach[shape_of[i]][shape_of[j]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
