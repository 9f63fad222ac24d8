//! Independent linear-algebra verification of the double centralizer
//! property, over exact rationals.
//!
//! A basic module is realized as a quiver representation; the algebra image,
//! the endomorphism ring `E` and the centralizer of `E` inside the full
//! endomorphism space are computed by solving the actual commutation
//! systems. The module is balanced when the image of the algebra equals the
//! centralizer of `E`, and faithfully balanced when in addition the
//! annihilator vanishes. Nothing here consults the combinatorial predicates.

use serde::{Deserialize, Serialize};

use crate::error::FabalError;
use crate::interval::Interval;
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;
use crate::ratmat::{nullspace, q, QMat, Q, RowSpace};
use num_traits::Zero;

/// Default cap on the total dimension of the module handed to the oracle.
pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// A basic module realized as a representation of the quiver with relations:
/// per-vertex dimensions and one matrix per arrow `v -> v+1`.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub pres: NakayamaPresentation,
    pub dims: Vec<usize>,
    pub arrow_maps: Vec<QMat>,
    summands: Vec<Interval>,
    starts: Vec<usize>,
    total: usize,
}

impl MatrixRep {
    /// Each interval summand `(i, j)` contributes one basis vector at every
    /// vertex `i..=j`, with the arrows acting as the identity along it.
    pub fn build(pres: &NakayamaPresentation, m: &BasicModule) -> Result<Self, FabalError> {
        m.validate_for(pres)?;
        let n = pres.n();
        let summands: Vec<Interval> = m.iter().collect();
        let mut starts = Vec::with_capacity(summands.len());
        let mut total = 0usize;
        for iv in &summands {
            starts.push(total);
            total += iv.len();
        }
        let mut dims = vec![0usize; n];
        for iv in &summands {
            for v in iv.top..=iv.soc {
                dims[v - 1] += 1;
            }
        }
        let mut arrow_maps = Vec::with_capacity(n.saturating_sub(1));
        for v in 1..n {
            let mut a = QMat::zero(total, total);
            for (s, iv) in summands.iter().enumerate() {
                if iv.supports(v) && iv.supports(v + 1) {
                    a.set(starts[s] + (v + 1 - iv.top), starts[s] + (v - iv.top), q(1));
                }
            }
            arrow_maps.push(a);
        }
        let rep = MatrixRep { pres: pres.clone(), dims, arrow_maps, summands, starts, total };
        debug_assert_eq!(rep.total, m.total_length());
        debug_assert!(rep.relations_hold());
        Ok(rep)
    }

    /// The defining relations: the composite across each valley vanishes.
    pub fn relations_hold(&self) -> bool {
        self.pres.valleys().iter().all(|&b| {
            self.arrow_maps[b - 1].mul(&self.arrow_maps[b - 2]).is_zero()
        })
    }

    pub fn total_dim(&self) -> usize {
        self.total
    }

    fn idx(&self, s: usize, v: usize) -> usize {
        self.starts[s] + (v - self.summands[s].top)
    }

    /// The action of the path `v -> ... -> w` as a matrix on the total space.
    pub fn path_action(&self, v: usize, w: usize) -> QMat {
        let mut a = QMat::zero(self.total, self.total);
        for (s, iv) in self.summands.iter().enumerate() {
            if iv.top <= v && w <= iv.soc {
                a.set(self.idx(s, w), self.idx(s, v), q(1));
            }
        }
        a
    }
}

/// Dimension data of the double-centralizer computation.
///
/// `balanced` holds when the centralizer of `E = End(M)` inside the linear
/// endomorphisms equals the image of the algebra; `faithful` when the
/// annihilator vanishes; `faithfully_balanced` when both hold. The dimension
/// identity `balanced <=> dim_bicommutant = dim_algebra - dim_annihilator`
/// is kept as a structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub dim_algebra: usize,
    pub dim_annihilator: usize,
    pub dim_endomorphism: usize,
    pub dim_bicommutant: usize,
    pub balanced: bool,
    pub faithful: bool,
    pub faithfully_balanced: bool,
}

/// A basis of `Hom(A, B)` between two interval modules, solved from the
/// commutation equations with the arrow actions. Vectors are indexed by the
/// support overlap `max(tops)..=min(socs)`, one scalar per shared vertex.
fn interval_hom_basis(pres: &NakayamaPresentation, a: Interval, b: Interval) -> Vec<Vec<Q>> {
    debug_assert!(pres.is_allowed(a) && pres.is_allowed(b));
    let lo = a.top.max(b.top);
    let hi = a.soc.min(b.soc);
    if lo > hi {
        return Vec::new();
    }
    let unknowns = hi - lo + 1;
    let col = |v: usize| v - lo;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for v in 1..pres.n() {
        // the equation lives in Hom(A_v, B_{v+1})
        if !(a.supports(v) && b.supports(v + 1)) {
            continue;
        }
        let mut row = vec![Q::zero(); unknowns];
        if a.supports(v + 1) && b.supports(v + 1) {
            row[col(v + 1)] = q(1);
        }
        if b.supports(v) && a.supports(v) {
            row[col(v)] -= q(1);
        }
        rows.push(row);
    }
    nullspace(&rows, unknowns)
}

/// `dim Hom(A, B)` computed purely from the matrix model.
pub fn matrix_hom_dim(pres: &NakayamaPresentation, a: Interval, b: Interval) -> usize {
    interval_hom_basis(pres, a, b).len()
}

/// `dim Ext^1(A, B)` computed from the matrix model.
///
/// Hereditary case: the alternating sum of the two-term complex
/// `0 -> Hom(A,B) -> ⊕_v Hom(A_v,B_v) -> ⊕_{v->v+1} Hom(A_v,B_{v+1}) -> Ext^1 -> 0`.
/// With valleys: the cokernel of the restriction map
/// `Hom(P, B) -> Hom(K, B)` for the projective cover `P` of `A` with kernel `K`.
pub fn matrix_ext_dim(pres: &NakayamaPresentation, a: Interval, b: Interval) -> usize {
    let n = pres.n();
    if pres.is_linear() {
        let middle: usize = (1..=n)
            .map(|v| usize::from(a.supports(v)) * usize::from(b.supports(v)))
            .sum();
        let right: usize = (1..n)
            .map(|v| usize::from(a.supports(v)) * usize::from(b.supports(v + 1)))
            .sum();
        let hom = matrix_hom_dim(pres, a, b);
        let ext = right as isize - middle as isize + hom as isize;
        debug_assert!(ext >= 0);
        return ext as usize;
    }
    let p = pres.projective(a.top);
    if a.soc == p.soc {
        return 0;
    }
    let k = Interval::new(a.soc + 1, p.soc);
    let hom_p = interval_hom_basis(pres, p, b);
    let hom_k = interval_hom_basis(pres, k, b);
    // restriction along K ⊆ P: a hom vector over overlap(P,B) restricts to
    // the shared vertices of overlap(K,B)
    let k_lo = k.top.max(b.top);
    let k_hi = k.soc.min(b.soc);
    let p_lo = p.top.max(b.top);
    let mut restricted: Vec<Vec<Q>> = Vec::new();
    if k_lo <= k_hi {
        for h in &hom_p {
            let v: Vec<Q> = (k_lo..=k_hi).map(|u| h[u - p_lo].clone()).collect();
            restricted.push(v);
        }
    }
    let im_rank = if k_lo <= k_hi { crate::ratmat::rank(&restricted, k_hi - k_lo + 1) } else { 0 };
    hom_k.len() - im_rank
}

/// One basis element of `End(M)`: a map between two summands.
struct EndBasisElt {
    s: usize,
    t: usize,
    /// `len(t) x len(s)` block matrix of the map `M_s -> M_t`.
    block: QMat,
}

fn end_basis(pres: &NakayamaPresentation, summands: &[Interval]) -> Vec<EndBasisElt> {
    let mut out = Vec::new();
    for (s, &ivs) in summands.iter().enumerate() {
        for (t, &ivt) in summands.iter().enumerate() {
            for h in interval_hom_basis(pres, ivs, ivt) {
                let lo = ivs.top.max(ivt.top);
                let mut block = QMat::zero(ivt.len(), ivs.len());
                for (k, x) in h.iter().enumerate() {
                    let v = lo + k;
                    block.set(v - ivt.top, v - ivs.top, x.clone());
                }
                out.push(EndBasisElt { s, t, block });
            }
        }
    }
    out
}

/// Layout of the block-diagonal coordinates used for everything commuting
/// with the summand projections (which are endomorphisms, so both the
/// centralizer of `E` and the image of the algebra live there).
struct BlockCoords {
    offsets: Vec<usize>,
    lens: Vec<usize>,
    total: usize,
}

impl BlockCoords {
    fn new(summands: &[Interval]) -> Self {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut total = 0usize;
        let lens: Vec<usize> = summands.iter().map(Interval::len).collect();
        for &l in &lens {
            offsets.push(total);
            total += l * l;
        }
        BlockCoords { offsets, lens, total }
    }

    fn entry(&self, s: usize, row: usize, col: usize) -> usize {
        self.offsets[s] + row * self.lens[s] + col
    }
}

/// Runs the double-centralizer computation with the default dimension cap.
pub fn oracle(pres: &NakayamaPresentation, m: &BasicModule) -> Result<OracleReport, FabalError> {
    oracle_with_cap(pres, m, DEFAULT_DIMENSION_CAP)
}

pub fn oracle_with_cap(
    pres: &NakayamaPresentation,
    m: &BasicModule,
    cap: usize,
) -> Result<OracleReport, FabalError> {
    m.validate_for(pres)?;
    if m.total_length() > cap {
        return Err(FabalError::ResourceCap(format!(
            "module dimension {} exceeds oracle cap {cap}",
            m.total_length()
        )));
    }
    let rep = MatrixRep::build(pres, m)?;
    debug_assert!(rep.relations_hold());
    let summands: Vec<Interval> = m.iter().collect();
    let paths = pres.indecomposables();
    let dim_algebra = paths.len();

    let ends = end_basis(pres, &summands);
    let dim_endomorphism = ends.len();

    // Centralizer of E. Anything commuting with the summand projections
    // (the identity maps among the basis elements) is block diagonal, one
    // square block per summand; the remaining equations are
    // f_t ψ - ψ f_s = 0 per basis map ψ : M_s -> M_t.
    let coords = BlockCoords::new(&summands);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for e in &ends {
        if e.s == e.t {
            continue; // scalar on a single block commutes with everything there
        }
        let lt = coords.lens[e.t];
        let ls = coords.lens[e.s];
        for r in 0..lt {
            for c in 0..ls {
                let mut row = vec![Q::zero(); coords.total];
                for k in 0..lt {
                    let coef = e.block.get(k, c);
                    if !coef.is_zero() {
                        row[coords.entry(e.t, r, k)] += coef;
                    }
                }
                for k in 0..ls {
                    let coef = e.block.get(r, k);
                    if !coef.is_zero() {
                        row[coords.entry(e.s, k, c)] -= coef;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let bicommutant = nullspace(&rows, coords.total);
    let dim_bicommutant = bicommutant.len();

    let mut bic_span = RowSpace::new(coords.total);
    for v in &bicommutant {
        bic_span.insert(v.clone());
    }

    // Image of the algebra: the span of the path actions, written in the
    // same block coordinates (each path acts within every summand).
    let mut image = RowSpace::new(coords.total);
    let mut contained = true;
    for p in &paths {
        let mut vec = vec![Q::zero(); coords.total];
        for (s, iv) in summands.iter().enumerate() {
            if iv.top <= p.top && p.soc <= iv.soc {
                vec[coords.entry(s, p.soc - iv.top, p.top - iv.top)] = q(1);
            }
        }
        if vec.iter().any(|x| !x.is_zero()) {
            contained &= bic_span.contains(&vec);
            image.insert(vec);
        }
    }
    let dim_annihilator = dim_algebra - image.dim();

    let balanced = contained && image.dim() == dim_bicommutant;
    let faithful = dim_annihilator == 0;
    let report = OracleReport {
        dim_algebra,
        dim_annihilator,
        dim_endomorphism,
        dim_bicommutant,
        balanced,
        faithful,
        faithfully_balanced: balanced && faithful,
    };
    debug_assert_eq!(
        report.balanced,
        report.dim_bicommutant == report.dim_algebra - report.dim_annihilator
    );
    Ok(report)
}

/// Matrix-level membership test for the copresentation category: the natural
/// evaluation `X -> Hom_E(Hom(X, M), M)` is bijective.
///
/// `Hom(X, M)` is assembled from the solved matrix Hom spaces, the
/// `E`-linearity constraints of a map `Hom(X,M) -> M` are imposed as a
/// linear system, and bijectivity is read off from ranks.
pub fn cogen1_matrix_check(
    pres: &NakayamaPresentation,
    x: Interval,
    m: &BasicModule,
) -> Result<bool, FabalError> {
    m.validate_for(pres)?;
    pres.check_allowed(x)?;
    let summands: Vec<Interval> = m.iter().collect();
    let dim_x = x.len();

    // hom_to[t] = Hom(X, M_t) as a len(t) x dim_x matrix (or None when zero).
    let mut hom_to: Vec<Option<QMat>> = Vec::with_capacity(summands.len());
    for &t in &summands {
        let basis = interval_hom_basis(pres, x, t);
        debug_assert!(basis.len() <= 1);
        hom_to.push(basis.first().map(|h| {
            let lo = x.top.max(t.top);
            let mut mat = QMat::zero(t.len(), dim_x);
            for (k, c) in h.iter().enumerate() {
                let v = lo + k;
                mat.set(v - t.top, v - x.top, c.clone());
            }
            mat
        }));
    }

    // Unknowns: the component Phi_t in M_t for each nonzero Hom(X, M_t).
    let mut offset: Vec<Option<usize>> = Vec::with_capacity(summands.len());
    let mut unknowns = 0usize;
    for (t, h) in hom_to.iter().enumerate() {
        if h.is_some() {
            offset.push(Some(unknowns));
            unknowns += summands[t].len();
        } else {
            offset.push(None);
        }
    }

    // E-linearity: for each basis map ψ : M_s -> M_t and h_s the basis of
    // Hom(X, M_s), write ψ∘h_s = c·h_t and require c·Phi_t = ψ(Phi_s).
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for e in end_basis(pres, &summands) {
        let Some(hs) = &hom_to[e.s] else { continue };
        let composed = e.block.mul(hs);
        let c = match &hom_to[e.t] {
            Some(ht) => {
                // scalar ratio in the one-dimensional Hom space
                let mut scalar = Q::zero();
                'outer: for r in 0..ht.rows {
                    for cidx in 0..ht.cols {
                        if !ht.get(r, cidx).is_zero() {
                            scalar = composed.get(r, cidx) / ht.get(r, cidx);
                            break 'outer;
                        }
                    }
                }
                debug_assert!({
                    let mut ok = true;
                    for r in 0..ht.rows {
                        for cidx in 0..ht.cols {
                            ok &= *composed.get(r, cidx) == &scalar * ht.get(r, cidx);
                        }
                    }
                    ok
                });
                scalar
            }
            None => {
                debug_assert!(composed.is_zero());
                Q::zero()
            }
        };
        let so = offset[e.s].unwrap();
        let lt = summands[e.t].len();
        let ls = summands[e.s].len();
        for r in 0..lt {
            let mut row = vec![Q::zero(); unknowns];
            if let Some(to) = offset[e.t] {
                row[to + r] = c.clone();
            }
            for k in 0..ls {
                let coef = e.block.get(r, k);
                if !coef.is_zero() {
                    row[so + k] -= coef;
                }
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let solution = nullspace(&rows, unknowns);
    let target_dim = solution.len();

    // Rank of the evaluation image.
    let mut ev = RowSpace::new(unknowns);
    let mut ev_rank = 0usize;
    for b in 0..dim_x {
        let mut vec = vec![Q::zero(); unknowns];
        for (t, h) in hom_to.iter().enumerate() {
            if let (Some(hmat), Some(to)) = (h, offset[t]) {
                for r in 0..hmat.rows {
                    vec[to + r] = hmat.get(r, b).clone();
                }
            }
        }
        if ev.insert(vec) {
            ev_rank += 1;
        }
    }
    Ok(ev_rank == dim_x && target_dim == dim_x)
}
