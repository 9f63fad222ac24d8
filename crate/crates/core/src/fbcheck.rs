//! Classification predicates for balanced and faithfully balanced modules,
//! minimality, and the one-summand extension test.
//!
//! Faithfully balanced, in cohook terms: every projective-injective is a
//! summand; every other summand is a proper submodule or proper quotient of
//! a summand; and for every arrow `i -> i+1` of the quiver the module has a
//! summand with top `S[i+1]` or one with socle `S[i]`. Balancedness drops
//! the faithfulness part and only constrains the arrows whose simples occur
//! in the module.

use crate::error::FabalError;
use crate::interval::Interval;
use crate::modcat::{
    cogen_closure, gen_closure, is_proper_quotient, is_proper_submodule, is_proper_subquotient,
};
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

fn has_row(m: &BasicModule, r: usize) -> bool {
    m.iter().any(|iv| iv.top == r)
}

fn has_column(m: &BasicModule, c: usize) -> bool {
    m.iter().any(|iv| iv.soc == c)
}

/// The arrow condition: for `i -> i+1`, some summand has top `S[i+1]` or
/// some summand has socle `S[i]`. Over the hereditary algebra this is the
/// virtual cohook condition of the leaf `i+1`.
fn arrow_condition(m: &BasicModule, i: usize) -> bool {
    has_row(m, i + 1) || has_column(m, i)
}

/// Is `M` faithfully balanced?
pub fn is_fb(pres: &NakayamaPresentation, m: &BasicModule) -> bool {
    debug_assert!(m.validate_for(pres).is_ok());
    // FB0
    if !pres.projective_injectives().iter().all(|&pi| m.contains(pi)) {
        return false;
    }
    // FB1
    let proj_inj = pres.projective_injectives();
    for x in m.iter() {
        if proj_inj.contains(&x) {
            continue;
        }
        if !m
            .iter()
            .any(|y| is_proper_submodule(x, y) || is_proper_quotient(x, y))
        {
            return false;
        }
    }
    // FB2
    (1..pres.n()).all(|i| arrow_condition(m, i))
}

/// Is `M` balanced? The empty module is balanced (and unfaithful).
pub fn is_balanced(pres: &NakayamaPresentation, m: &BasicModule) -> bool {
    debug_assert!(m.validate_for(pres).is_ok());
    // B1
    for x in m.iter() {
        let proper_subquot = m.iter().any(|y| is_proper_subquotient(x, y));
        if proper_subquot
            && !m
                .iter()
                .any(|y| is_proper_submodule(x, y) || is_proper_quotient(x, y))
        {
            return false;
        }
    }
    // B2, restricted to arrows whose simples are composition factors of M
    for i in 1..pres.n() {
        let relevant = m.iter().any(|iv| iv.supports(i) || iv.supports(i + 1));
        if relevant && !arrow_condition(m, i) {
            return false;
        }
    }
    true
}

/// Is `M` faithful? Nakayama algebras are QF-3, so this holds exactly when
/// every projective-injective is a summand.
pub fn is_faithful(pres: &NakayamaPresentation, m: &BasicModule) -> bool {
    debug_assert!(m.validate_for(pres).is_ok());
    pres.projective_injectives().iter().all(|&pi| m.contains(pi))
}

/// For faithfully balanced `M`: does `M ⊕ X` stay faithfully balanced?
/// Happens exactly when `X` is generated or cogenerated by `M`.
pub fn morita_extendable(
    pres: &NakayamaPresentation,
    m: &BasicModule,
    x: Interval,
) -> Result<bool, FabalError> {
    if !is_fb(pres, m) {
        return Err(FabalError::NotFaithfullyBalanced);
    }
    pres.check_allowed(x)?;
    Ok(gen_closure(m).contains(&x) || cogen_closure(m).contains(&x))
}

/// Minimality by single deletion: no one-summand complement is faithfully
/// balanced. Valid for Nakayama presentations, where a non-minimal
/// faithfully balanced module always has a faithfully balanced complement
/// of one summand less.
pub fn is_minimal_fb(pres: &NakayamaPresentation, m: &BasicModule) -> Result<bool, FabalError> {
    if !is_fb(pres, m) {
        return Err(FabalError::NotFaithfullyBalanced);
    }
    Ok(!m.iter().any(|x| is_fb(pres, &m.without_summand(x))))
}

/// Slow exhaustive minimality check over all proper summand subsets; kept
/// as an oracle for the single-deletion criterion.
pub fn is_minimal_fb_exhaustive(
    pres: &NakayamaPresentation,
    m: &BasicModule,
) -> Result<bool, FabalError> {
    if !is_fb(pres, m) {
        return Err(FabalError::NotFaithfullyBalanced);
    }
    let sums: Vec<Interval> = m.iter().collect();
    if sums.len() > 30 {
        return Err(FabalError::ResourceCap(format!(
            "exhaustive minimality over {} summands",
            sums.len()
        )));
    }
    for mask in 0u64..(1 << sums.len()) - 1 {
        let sub = BasicModule::new(
            m.n(),
            sums.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &iv)| iv),
        )
        .unwrap();
        if is_fb(pres, &sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recognition through closures: for minimal faithfully balanced `M`, any
/// `N` with `gen(N) ∩ cogen(N) = gen(M) ∩ cogen(M)` is itself faithfully
/// balanced and contains `M`. Returns whether the closure intersections
/// coincide, asserting the consequences when they do.
pub fn mfb_recognition(
    pres: &NakayamaPresentation,
    m: &BasicModule,
    n_mod: &BasicModule,
) -> Result<bool, FabalError> {
    if !is_minimal_fb(pres, m)? {
        return Err(FabalError::NotMinimal);
    }
    n_mod.validate_for(pres)?;
    let inter = |z: &BasicModule| {
        let g = gen_closure(z);
        let c = cogen_closure(z);
        g.intersection(&c).copied().collect::<std::collections::BTreeSet<_>>()
    };
    let equal = inter(m) == inter(n_mod);
    if equal {
        assert!(is_fb(pres, n_mod), "recognized module must be faithfully balanced");
        assert!(m.is_summand_of(n_mod), "minimal module must be a summand");
    }
    Ok(equal)
}
