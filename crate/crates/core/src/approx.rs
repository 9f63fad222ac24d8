//! Minimal left and right approximations by a module, the categories they
//! carve out, and extraction of the critical module of a presentation
//! category.
//!
//! A nonzero map out of an interval `X` to an interval summand is determined
//! by the pair `(s, t)` of kernel and cokernel lengths; the minimal left
//! approximation of `X` is indexed by the minimal elements of the set of
//! such pairs under the product order, and its cokernel decomposes into
//! explicit intervals.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::interval::Interval;
use crate::modcat::{cogen_closure, dual, hom_dim};
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

/// The minimal left approximation of an interval `X` by `add(M)`.
///
/// `minima` lists the minimal `(s, t)` pairs ordered with `s` strictly
/// decreasing (hence `t` strictly increasing); `targets[k]` is the
/// corresponding summand `X(s_k, t_k) = (X.top - t_k, X.soc - s_k)`; the
/// cokernel of the approximation is the direct sum of `cokernels` (the
/// degenerate first term of length zero is omitted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxProfile {
    pub source: Interval,
    pub minima: Vec<(usize, usize)>,
    pub targets: Vec<Interval>,
    pub cokernels: Vec<Interval>,
}

/// Computes the minimal left `add(M)`-approximation profile of `x`.
/// An empty profile (no homomorphisms into `M`) is a legal result.
pub fn left_approx_profile(
    pres: &NakayamaPresentation,
    x: Interval,
    m: &BasicModule,
) -> ApproxProfile {
    debug_assert!(pres.is_allowed(x));
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for y in m.iter() {
        if hom_dim(pres, x, y) == 1 {
            pairs.insert((x.soc - y.soc, x.top - y.top));
        }
    }
    let mut minima: Vec<(usize, usize)> = pairs
        .iter()
        .copied()
        .filter(|&(s, t)| !pairs.iter().any(|&(s2, t2)| (s2, t2) != (s, t) && s2 <= s && t2 <= t))
        .collect();
    minima.sort_by_key(|&(s, _)| std::cmp::Reverse(s));
    debug_assert!(minima.windows(2).all(|w| w[0].1 < w[1].1));

    let targets: Vec<Interval> = minima
        .iter()
        .map(|&(s, t)| Interval::new(x.top - t, x.soc - s))
        .collect();

    let mut cokernels = Vec::new();
    if let Some(&(_, t1)) = minima.first() {
        if t1 > 0 {
            cokernels.push(Interval::new(x.top - t1, x.top - 1));
        }
        for k in 1..minima.len() {
            let (s_prev, _) = minima[k - 1];
            let (_, t_k) = minima[k];
            cokernels.push(Interval::new(x.top - t_k, x.soc - s_prev));
        }
    }
    ApproxProfile { source: x, minima, targets, cokernels }
}

/// Membership in the copresentation category of `M`: the minimal left
/// approximation embeds `x` and has cokernel cogenerated by `M`, which for
/// intervals reduces to `x` and all cokernel terms lying in the cogen
/// closure.
pub fn in_cogen1(pres: &NakayamaPresentation, x: Interval, m: &BasicModule) -> bool {
    let profile = left_approx_profile(pres, x, m);
    if profile.minima.is_empty() {
        return false;
    }
    let cg = cogen_closure(m);
    cg.contains(&x) && profile.cokernels.iter().all(|c| cg.contains(c))
}

/// Membership in the presentation category of `M`, computed through the
/// mirrored minimal right approximation (the left approximation over the
/// reversed presentation).
pub fn in_gen1(pres: &NakayamaPresentation, x: Interval, m: &BasicModule) -> bool {
    in_cogen1(&pres.reversed(), x.reflect(pres.n()), &dual(m))
}

/// All allowed intervals lying in `gen_1(M)`.
pub fn gen1_category(pres: &NakayamaPresentation, m: &BasicModule) -> BTreeSet<Interval> {
    pres.indecomposables().into_iter().filter(|&x| in_gen1(pres, x, m)).collect()
}

/// All allowed intervals lying in `cogen^1(M)`.
pub fn cogen1_category(pres: &NakayamaPresentation, m: &BasicModule) -> BTreeSet<Interval> {
    pres.indecomposables().into_iter().filter(|&x| in_cogen1(pres, x, m)).collect()
}

/// The unique smallest module with the same presentation category as `M`.
///
/// Enumerates the intervals of `gen_1(M)` in an order with no backward
/// homomorphisms and keeps greedily exactly those not already presented by
/// the kept part. Idempotent.
pub fn gen1_critical(pres: &NakayamaPresentation, m: &BasicModule) -> BasicModule {
    let category = gen1_category(pres, m);
    let mut order: Vec<Interval> = category.into_iter().collect();
    // decreasing socle, then decreasing top
    order.sort_by(|a, b| b.soc.cmp(&a.soc).then(b.top.cmp(&a.top)));
    for (i, &earlier) in order.iter().enumerate() {
        for &later in &order[i + 1..] {
            assert_eq!(
                hom_dim(pres, later, earlier),
                0,
                "enumeration order violates the no-backward-maps convention"
            );
        }
    }
    let mut kept = BasicModule::empty(pres.n());
    for x in order {
        if !in_gen1(pres, x, &kept) {
            kept = kept.with_summand(x);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::gen_closure;
    use crate::oracle::cogen1_matrix_check;

    fn lin(n: usize) -> NakayamaPresentation {
        NakayamaPresentation::linear(n)
    }

    fn subsets(n: usize) -> Vec<BasicModule> {
        let ivs = lin(n).indecomposables();
        (0u32..(1 << ivs.len()))
            .map(|mask| {
                BasicModule::new(
                    n,
                    ivs.iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &iv)| iv),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn profile_examples() {
        let p = lin(3);
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (2, 2)]);
        let prof = left_approx_profile(&p, Interval::new(3, 3), &m);
        assert_eq!(prof.minima, vec![(0, 1)]);
        assert_eq!(prof.targets, vec![Interval::new(2, 3)]);
        assert_eq!(prof.cokernels, vec![Interval::new(2, 2)]);

        let m = BasicModule::from_pairs(3, &[(1, 3), (1, 2), (2, 3)]);
        let prof = left_approx_profile(&p, Interval::new(2, 2), &m);
        assert_eq!(prof.minima, vec![(0, 1)]);
        assert_eq!(prof.targets, vec![Interval::new(1, 2)]);
        assert_eq!(prof.cokernels, vec![Interval::new(1, 1)]);

        // identity approximation
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 2)]);
        let prof = left_approx_profile(&p, Interval::new(1, 3), &m);
        assert_eq!(prof.minima, vec![(0, 0)]);
        assert_eq!(prof.targets, vec![Interval::new(1, 3)]);
        assert!(prof.cokernels.is_empty());

        // no homomorphisms at all: empty profile is legal
        let m = BasicModule::from_pairs(3, &[(2, 3)]);
        let prof = left_approx_profile(&p, Interval::new(1, 1), &m);
        assert!(prof.minima.is_empty() && prof.cokernels.is_empty());
    }

    /// Brute-force the profile invariants: minima are exactly the minimal
    /// elements, and every stated index bound holds.
    #[test]
    fn profile_minima_are_minimal_elements() {
        let p = lin(4);
        for m in subsets(4).iter().step_by(7) {
            for x in p.indecomposables() {
                let prof = left_approx_profile(&p, x, m);
                let all: BTreeSet<(usize, usize)> = m
                    .iter()
                    .filter(|&y| hom_dim(&p, x, y) == 1)
                    .map(|y| (x.soc - y.soc, x.top - y.top))
                    .collect();
                let minimal: BTreeSet<(usize, usize)> = all
                    .iter()
                    .copied()
                    .filter(|&(s, t)| {
                        !all.iter().any(|&(s2, t2)| (s2, t2) != (s, t) && s2 <= s && t2 <= t)
                    })
                    .collect();
                let got: BTreeSet<(usize, usize)> = prof.minima.iter().copied().collect();
                assert_eq!(got, minimal);
                for &(s, t) in &prof.minima {
                    assert!(s <= x.soc - x.top);
                    assert!(t < x.top);
                    assert!(x.top - t >= 1 && x.soc - s >= x.top - t);
                }
            }
        }
    }

    #[test]
    fn profile_serialization() {
        let p = lin(3);
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (2, 2)]);
        let prof = left_approx_profile(&p, Interval::new(3, 3), &m);
        let s = serde_json::to_string(&prof).unwrap();
        assert_eq!(
            s,
            r#"{"source":[3,3],"minima":[[0,1]],"targets":[[2,3]],"cokernels":[[2,2]]}"#
        );
    }

    #[test]
    fn cogen1_membership_examples() {
        let p = lin(3);
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (2, 2)]);
        assert!(in_cogen1(&p, Interval::new(3, 3), &m));
        let m = BasicModule::from_pairs(3, &[(1, 3), (1, 2), (2, 3)]);
        assert!(!in_cogen1(&p, Interval::new(2, 2), &m));
        // anything in add(M) is trivially in the category
        for x in m.iter() {
            assert!(in_cogen1(&p, x, &m));
        }
    }

    /// The combinatorial membership agrees with the matrix evaluation-map
    /// check: exhaustively for rank <= 3, on pseudo-random modules at rank 4.
    #[test]
    fn cogen1_agrees_with_matrix_check() {
        for n in 1..=3 {
            let p = lin(n);
            for m in subsets(n) {
                for x in p.indecomposables() {
                    assert_eq!(
                        in_cogen1(&p, x, &m),
                        cogen1_matrix_check(&p, x, &m).unwrap(),
                        "mismatch at x={x}, m={m}"
                    );
                }
            }
        }
        let p = lin(4);
        let ivs = p.indecomposables();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..500 {
            let mask = (next() % (1 << ivs.len())) as u32;
            let m = BasicModule::new(
                4,
                ivs.iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &iv)| iv),
            )
            .unwrap();
            for &x in &ivs {
                assert_eq!(
                    in_cogen1(&p, x, &m),
                    cogen1_matrix_check(&p, x, &m).unwrap(),
                    "mismatch at x={x}, m={m}"
                );
            }
        }
    }

    #[test]
    fn gen1_category_examples() {
        let p = lin(3);
        let reg = BasicModule::regular(&p);
        assert_eq!(gen1_category(&p, &reg).len(), 6);
        let shown: BTreeSet<Interval> = [(1, 3), (2, 3), (3, 3), (1, 2), (1, 1), (2, 2)]
            .iter()
            .map(|&(i, j)| Interval::new(i, j))
            .collect();
        assert_eq!(gen1_category(&p, &reg), shown);
    }

    /// Adding a presented module does not change the category (exhaustive
    /// at rank 3).
    #[test]
    fn gen1_absorption() {
        let p = lin(3);
        for m in subsets(3) {
            let g = gen1_category(&p, &m);
            for x in p.indecomposables() {
                let extended = gen1_category(&p, &m.with_summand(x));
                assert_eq!(in_gen1(&p, x, &m), extended == g, "x={x} m={m}");
            }
        }
    }

    #[test]
    fn gen1_critical_examples() {
        let p = lin(3);
        let reg = BasicModule::regular(&p);
        let m = reg.with_summand(Interval::new(1, 1));
        assert_eq!(gen1_critical(&p, &m), reg);

        // an ext-free module with n summands is already critical
        let coreg = BasicModule::coregular(&p);
        assert_eq!(gen1_critical(&p, &coreg), coreg);
    }

    #[test]
    fn gen1_critical_idempotent_and_category_preserving() {
        let mut state = 1234567u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for n in 1..=5usize {
            let p = lin(n);
            let ivs = p.indecomposables();
            for _ in 0..40 {
                let mask = next() % (1 << ivs.len());
                let m = BasicModule::new(
                    n,
                    ivs.iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, &iv)| iv),
                )
                .unwrap();
                let crit = gen1_critical(&p, &m);
                assert_eq!(gen1_category(&p, &crit), gen1_category(&p, &m));
                assert_eq!(gen1_critical(&p, &crit), crit);
            }
        }
    }

    /// Uniqueness, exhaustively at rank 3: two modules present the same
    /// category exactly when one sits between the critical module and the
    /// category.
    #[test]
    fn gen1_category_sandwich() {
        let p = lin(3);
        let mods = subsets(3);
        for m in &mods {
            let g = gen1_category(&p, m);
            let crit = gen1_critical(&p, m);
            for l in &mods {
                let same = gen1_category(&p, l) == g;
                let sandwich = crit.iter().all(|x| l.contains(x))
                    && l.iter().all(|x| g.contains(&x));
                assert_eq!(same, sandwich, "m={m} l={l}");
            }
        }
    }

    /// gen closure interacts with duality as expected.
    #[test]
    fn closures_dualize() {
        let m = BasicModule::from_pairs(4, &[(1, 4), (2, 3), (3, 3)]);
        let d = dual(&m);
        let lhs: BTreeSet<Interval> =
            gen_closure(&d).into_iter().map(|iv| iv.reflect(4)).collect();
        assert_eq!(lhs, cogen_closure(&m));
    }
}
