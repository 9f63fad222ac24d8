//! Combinatorial model of the module category: Hom and Ext dimensions
//! between interval modules, submodule/quotient predicates, gen/cogen
//! closures, cohooks, the reflection duality and splitting summands.
//!
//! Every indecomposable is uniserial, so a nonzero map `A -> B` factors as a
//! quotient of `A` followed by a submodule of `B`, and all Hom spaces are at
//! most one dimensional. Closures of a direct sum are unions over summands.

use std::collections::BTreeSet;

use crate::error::FabalError;
use crate::interval::Interval;
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

/// `dim Hom(A, B)`, which is 1 exactly when `B.top <= A.top <= B.soc <= A.soc`
/// (the image is the overlap interval `(A.top, B.soc)`), else 0.
pub fn hom_dim(pres: &NakayamaPresentation, a: Interval, b: Interval) -> usize {
    debug_assert!(pres.is_allowed(a) && pres.is_allowed(b));
    usize::from(b.top <= a.top && a.top <= b.soc && b.soc <= a.soc)
}

/// `dim Ext^1(A, B)`.
///
/// Over the hereditary algebra this is 1 exactly when
/// `A.top < B.top <= A.soc + 1 <= B.soc`. With valleys it is computed from
/// the projective presentation of `A` in the quotient: with `P` the
/// projective cover of `A` and `K = ker(P -> A)` (an interval or zero),
/// `dim Ext^1(A,B) = hom(K,B) - hom(P,B) + hom(A,B)`.
pub fn ext_dim(pres: &NakayamaPresentation, a: Interval, b: Interval) -> usize {
    debug_assert!(pres.is_allowed(a) && pres.is_allowed(b));
    if pres.is_linear() {
        return usize::from(a.top < b.top && b.top <= a.soc + 1 && a.soc < b.soc);
    }
    let p = pres.projective(a.top);
    debug_assert!(a.soc <= p.soc);
    if a.soc == p.soc {
        return 0; // A is projective
    }
    let k = Interval::new(a.soc + 1, p.soc);
    let d = hom_dim(pres, k, b) as isize - hom_dim(pres, p, b) as isize
        + hom_dim(pres, a, b) as isize;
    debug_assert!(d >= 0);
    d as usize
}

/// `A` embeds in `B`: same socle, top no higher.
pub fn is_submodule(a: Interval, b: Interval) -> bool {
    a.soc == b.soc && a.top >= b.top
}

/// `A` is a quotient of `B`: same top, socle no deeper.
pub fn is_quotient(a: Interval, b: Interval) -> bool {
    a.top == b.top && a.soc <= b.soc
}

/// `A` is a subquotient of `B`.
pub fn is_subquotient(a: Interval, b: Interval) -> bool {
    b.top <= a.top && a.soc <= b.soc
}

pub fn is_proper_submodule(a: Interval, b: Interval) -> bool {
    is_submodule(a, b) && a != b
}

pub fn is_proper_quotient(a: Interval, b: Interval) -> bool {
    is_quotient(a, b) && a != b
}

pub fn is_proper_subquotient(a: Interval, b: Interval) -> bool {
    is_subquotient(a, b) && a != b
}

/// The indecomposables generated by `M`: quotients of its summands.
pub fn gen_closure(m: &BasicModule) -> BTreeSet<Interval> {
    let mut out = BTreeSet::new();
    for iv in m.iter() {
        for soc in iv.top..=iv.soc {
            out.insert(Interval::new(iv.top, soc));
        }
    }
    out
}

/// The indecomposables cogenerated by `M`: submodules of its summands.
pub fn cogen_closure(m: &BasicModule) -> BTreeSet<Interval> {
    let mut out = BTreeSet::new();
    for iv in m.iter() {
        for top in iv.top..=iv.soc {
            out.insert(Interval::new(top, iv.soc));
        }
    }
    out
}

/// The cohook of a box `(i, j)` of the rank-`n` staircase: everything
/// strictly above it in its column together with everything strictly to its
/// left in its row,
/// `{(k, j) : k < i} ∪ {(i, l) : l > j}`.
///
/// Accepts genuine intervals and the virtual pairs `(k, k-1)` attached to
/// the `n+1` leaves; anything else is rejected. A leaf's cohook always has
/// exactly `n` elements, and the root `(1, n)` has an empty cohook.
pub fn cohook(n: usize, i: usize, j: usize) -> Result<BTreeSet<Interval>, FabalError> {
    let genuine = 1 <= i && i <= j && j <= n;
    let leaf = j + 1 == i && 1 <= i && i <= n + 1;
    if !genuine && !leaf {
        return Err(FabalError::NotAllowed(i, j, n));
    }
    let mut out = BTreeSet::new();
    for k in 1..i {
        if k <= j {
            out.insert(Interval::new(k, j));
        }
    }
    if i >= 1 && i <= n {
        for l in (j + 1).max(i)..=n {
            out.insert(Interval::new(i, l));
        }
    }
    Ok(out)
}

/// The dual module `M^o`, obtained by reflecting the staircase along its
/// symmetry axis: `(i, j) -> (n+1-j, n+1-i)`. An involution. Over a valleyed
/// presentation the result is a module for the reversed presentation.
pub fn dual(m: &BasicModule) -> BasicModule {
    let n = m.n();
    BasicModule::new(n, m.iter().map(|iv| iv.reflect(n))).unwrap()
}

/// `M^g`: one copy of each splitting projective summand, i.e. the summands
/// that are not a proper quotient of another summand. This is the minimal
/// summand of `M` with the same gen closure.
pub fn splitting_projectives(m: &BasicModule) -> BasicModule {
    BasicModule::new(
        m.n(),
        m.iter().filter(|&x| !m.iter().any(|y| is_proper_quotient(x, y))),
    )
    .unwrap()
}

/// `M^c`: one copy of each splitting injective summand (not a proper
/// submodule of another summand); minimal with the same cogen closure.
pub fn splitting_injectives(m: &BasicModule) -> BasicModule {
    BasicModule::new(
        m.n(),
        m.iter().filter(|&x| !m.iter().any(|y| is_proper_submodule(x, y))),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{matrix_ext_dim, matrix_hom_dim};

    fn lin(n: usize) -> NakayamaPresentation {
        NakayamaPresentation::linear(n)
    }

    #[test]
    fn hom_examples() {
        let p = lin(3);
        assert_eq!(hom_dim(&p, Interval::new(2, 3), Interval::new(1, 2)), 1);
        assert_eq!(hom_dim(&p, Interval::new(1, 2), Interval::new(2, 3)), 0);
        for iv in p.indecomposables() {
            assert_eq!(hom_dim(&p, iv, iv), 1);
        }
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim(&lin(2), Interval::new(1, 1), Interval::new(2, 2)), 1);
        assert_eq!(ext_dim(&lin(4), Interval::new(1, 3), Interval::new(2, 4)), 1);
        for n in 1..=4 {
            for iv in lin(n).indecomposables() {
                assert_eq!(ext_dim(&lin(n), iv, iv), 0);
            }
        }
    }

    /// Anti-drift guard: the closed forms must agree with the matrix oracle
    /// for all interval pairs, hereditary n <= 4 and every valley set n <= 5.
    #[test]
    fn hom_and_ext_agree_with_matrix_oracle() {
        let mut presentations: Vec<NakayamaPresentation> = (1..=4).map(lin).collect();
        for n in 1..=5usize {
            let candidates: Vec<usize> = (2..n).collect();
            for mask in 0..(1u32 << candidates.len()) {
                let valleys: Vec<usize> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &b)| b)
                    .collect();
                if !valleys.is_empty() {
                    presentations.push(NakayamaPresentation::new(n, &valleys).unwrap());
                }
            }
        }
        for pres in &presentations {
            let ivs = pres.indecomposables();
            for &a in &ivs {
                for &b in &ivs {
                    assert_eq!(
                        hom_dim(pres, a, b),
                        matrix_hom_dim(pres, a, b),
                        "hom mismatch at {a},{b} over {pres:?}"
                    );
                    assert_eq!(
                        ext_dim(pres, a, b),
                        matrix_ext_dim(pres, a, b),
                        "ext mismatch at {a},{b} over {pres:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn sub_quotient_predicates() {
        assert!(is_proper_submodule(Interval::new(2, 3), Interval::new(1, 3)));
        assert!(is_quotient(Interval::new(1, 2), Interval::new(1, 3)));
        assert!(!is_submodule(Interval::new(1, 2), Interval::new(1, 3)));
        let s = Interval::new(2, 2);
        let p = Interval::new(1, 3);
        assert!(is_subquotient(s, p) && !is_submodule(s, p) && !is_quotient(s, p));
    }

    #[test]
    fn closures() {
        let m = BasicModule::from_pairs(3, &[(1, 3)]);
        let gens: Vec<Interval> = gen_closure(&m).into_iter().collect();
        assert_eq!(gens, vec![Interval::new(1, 1), Interval::new(1, 2), Interval::new(1, 3)]);
        let cogens: Vec<Interval> = cogen_closure(&m).into_iter().collect();
        assert_eq!(cogens, vec![Interval::new(1, 3), Interval::new(2, 3), Interval::new(3, 3)]);
        let reg = BasicModule::regular(&lin(3));
        assert_eq!(gen_closure(&reg).len(), 6);
    }

    #[test]
    fn cohook_examples() {
        let c = cohook(3, 2, 2).unwrap();
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            vec![Interval::new(1, 2), Interval::new(2, 3)]
        );
        // virtual cohook of leaf 3
        let c = cohook(3, 3, 2).unwrap();
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            vec![Interval::new(1, 2), Interval::new(2, 2), Interval::new(3, 3)]
        );
        assert!(cohook(3, 1, 3).unwrap().is_empty());
        assert!(cohook(3, 2, 4).is_err());
        assert!(cohook(3, 5, 4).is_err());
    }

    #[test]
    fn leaf_cohooks_have_n_elements() {
        for n in 1..=6 {
            for k in 1..=n + 1 {
                assert_eq!(cohook(n, k, k - 1).unwrap().len(), n);
            }
        }
    }

    #[test]
    fn dual_examples() {
        let reg = BasicModule::regular(&lin(3));
        let coreg = BasicModule::coregular(&lin(3));
        assert_eq!(dual(&reg), coreg);
        let s2 = BasicModule::from_pairs(3, &[(2, 2)]);
        assert_eq!(dual(&s2), s2);
    }

    /// Duality swaps submodules and quotients elementwise.
    #[test]
    fn dual_is_anti_isomorphism() {
        let n = 4;
        let ivs = lin(n).indecomposables();
        for &a in &ivs {
            for &b in &ivs {
                assert_eq!(is_submodule(a, b), is_quotient(a.reflect(n), b.reflect(n)));
                assert_eq!(is_quotient(a, b), is_submodule(a.reflect(n), b.reflect(n)));
            }
        }
    }

    #[test]
    fn splitting_examples() {
        let m = BasicModule::from_pairs(3, &[(1, 3), (1, 2), (2, 2)]);
        assert_eq!(splitting_projectives(&m), BasicModule::from_pairs(3, &[(1, 3), (2, 2)]));

        let reg = BasicModule::regular(&lin(3));
        assert_eq!(splitting_projectives(&reg), reg);
        assert_eq!(splitting_injectives(&reg), BasicModule::from_pairs(3, &[(1, 3)]));

        // minimal faithfully balanced example with its exchange property
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (2, 2)]);
        let mg = splitting_projectives(&m);
        let mc = splitting_injectives(&m);
        assert_eq!(mg, BasicModule::from_pairs(3, &[(1, 3), (2, 3)]));
        assert_eq!(mc, BasicModule::from_pairs(3, &[(1, 3), (2, 2)]));
        // M ⊕ (1,3) and M^g ⊕ M^c agree as multisets
        let mut lhs: Vec<Interval> = m.iter().collect();
        lhs.push(Interval::new(1, 3));
        lhs.sort();
        let mut rhs: Vec<Interval> = mg.iter().chain(mc.iter()).collect();
        rhs.sort();
        assert_eq!(lhs, rhs);
    }

    /// Exhaustive n <= 4: M^g is the unique minimal submodule-set with the
    /// same gen closure (and dually for M^c).
    #[test]
    fn splitting_projectives_minimality() {
        for n in 1..=4usize {
            let ivs = lin(n).indecomposables();
            for mask in 0u32..(1 << ivs.len()) {
                let m = BasicModule::new(
                    n,
                    ivs.iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &iv)| iv),
                )
                .unwrap();
                let mg = splitting_projectives(&m);
                let target = gen_closure(&m);
                assert_eq!(gen_closure(&mg), target);
                let sums: Vec<Interval> = m.iter().collect();
                for sub in 0u32..(1 << sums.len()) {
                    let cand = BasicModule::new(
                        n,
                        sums.iter()
                            .enumerate()
                            .filter(|(k, _)| sub >> k & 1 == 1)
                            .map(|(_, &iv)| iv),
                    )
                    .unwrap();
                    if gen_closure(&cand) == target {
                        assert!(mg.is_summand_of(&cand), "smaller or different cover found");
                    }
                }
            }
        }
    }
}
