//! Enumeration and counting: the faithfully balanced modules of a
//! presentation, the size and row-count generating polynomials, the
//! `q`-weighted and restricted counts, and the product formula for valleyed
//! presentations.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::FabalError;
use crate::fbcheck::is_minimal_fb;
use crate::interval::Interval;
use crate::modcat::{ext_dim, is_proper_quotient, is_proper_submodule};
use crate::module::BasicModule;
use crate::presentation::NakayamaPresentation;

/// Default cap on the number of indecomposables an enumeration accepts.
pub const DEFAULT_INDEC_CAP: usize = 28;

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * big((n - i) as u64) / big((i + 1) as u64);
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * big(i))
}

/// `∏_{i=1}^n ((1+q)^i - 1)`: the number of faithfully balanced modules of
/// the hereditary algebra with summand multiplicities at most `q`. With
/// `q = 1` this is the basic count.
pub fn q_count(n: usize, q: u64) -> BigUint {
    let base = big(1 + q);
    let mut acc = BigUint::one();
    let mut power = BigUint::one();
    for _ in 1..=n {
        power *= &base;
        acc *= &power - BigUint::one();
    }
    acc
}

/// `[n]_2! = ∏ (2^i - 1)`, the basic faithfully balanced count.
pub fn two_factorial(n: usize) -> BigUint {
    q_count(n, 1)
}

/// Lazy stream of the basic faithfully balanced modules of a presentation.
///
/// The projective-injectives are pre-included; the remaining intervals are
/// toggled through a binary counter over their lexicographically sorted
/// list, so the stream order is deterministic. The submodule/quotient and
/// arrow conditions are evaluated on bitmasks.
pub struct FbEnumeration {
    n: usize,
    forced: Vec<Interval>,
    free: Vec<Interval>,
    mask: u64,
    end: u64,
    fb1_masks: Vec<u64>,
    fb1_auto: Vec<bool>,
    arrow_masks: Vec<u64>,
    arrow_auto: Vec<bool>,
}

impl FbEnumeration {
    fn new(pres: &NakayamaPresentation, max_subsets: u64) -> Result<Self, FabalError> {
        let all = pres.indecomposables();
        if all.len() > DEFAULT_INDEC_CAP {
            return Err(FabalError::ResourceCap(format!(
                "{} indecomposables exceeds the enumeration cap {DEFAULT_INDEC_CAP}",
                all.len()
            )));
        }
        let forced = pres.projective_injectives();
        let free: Vec<Interval> = all.iter().copied().filter(|iv| !forced.contains(iv)).collect();
        if free.len() >= 63 || (1u64 << free.len()) > max_subsets {
            return Err(FabalError::ResourceCap(format!(
                "2^{} subsets exceeds the configured cap {max_subsets}",
                free.len()
            )));
        }
        let sub_or_quot = |x: Interval, y: Interval| {
            is_proper_submodule(x, y) || is_proper_quotient(x, y)
        };
        let fb1_masks: Vec<u64> = free
            .iter()
            .map(|&x| {
                free.iter()
                    .enumerate()
                    .filter(|(_, &y)| sub_or_quot(x, y))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        let fb1_auto: Vec<bool> = free
            .iter()
            .map(|&x| forced.iter().any(|&y| sub_or_quot(x, y)))
            .collect();
        let hits_arrow = |iv: Interval, i: usize| iv.top == i + 1 || iv.soc == i;
        let arrow_masks: Vec<u64> = (1..pres.n())
            .map(|i| {
                free.iter()
                    .enumerate()
                    .filter(|(_, &iv)| hits_arrow(iv, i))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        let arrow_auto: Vec<bool> = (1..pres.n())
            .map(|i| forced.iter().any(|&iv| hits_arrow(iv, i)))
            .collect();
        let end = 1u64 << free.len();
        Ok(FbEnumeration {
            n: pres.n(),
            forced,
            free,
            mask: 0,
            end,
            fb1_masks,
            fb1_auto,
            arrow_masks,
            arrow_auto,
        })
    }

    fn mask_is_fb(&self, mask: u64) -> bool {
        for (am, auto) in self.arrow_masks.iter().zip(&self.arrow_auto) {
            if !auto && mask & am == 0 {
                return false;
            }
        }
        let mut rest = mask;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !self.fb1_auto[k] && mask & self.fb1_masks[k] == 0 {
                return false;
            }
        }
        true
    }

    fn module_for(&self, mask: u64) -> BasicModule {
        let summands = self
            .forced
            .iter()
            .copied()
            .chain(
                self.free
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &iv)| iv),
            );
        BasicModule::new(self.n, summands).unwrap()
    }
}

impl Iterator for FbEnumeration {
    type Item = BasicModule;

    fn next(&mut self) -> Option<BasicModule> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            if self.mask_is_fb(mask) {
                return Some(self.module_for(mask));
            }
        }
        None
    }
}

/// Streams every basic faithfully balanced module, each exactly once.
pub fn fb_enumerate(pres: &NakayamaPresentation) -> Result<FbEnumeration, FabalError> {
    fb_enumerate_capped(pres, 1 << DEFAULT_INDEC_CAP)
}

pub fn fb_enumerate_capped(
    pres: &NakayamaPresentation,
    max_subsets: u64,
) -> Result<FbEnumeration, FabalError> {
    FbEnumeration::new(pres, max_subsets)
}

/// Counts the stream without materializing modules.
pub fn fb_count(pres: &NakayamaPresentation) -> Result<u64, FabalError> {
    let e = FbEnumeration::new(pres, 1 << DEFAULT_INDEC_CAP)?;
    Ok((0..e.end).filter(|&m| e.mask_is_fb(m)).count() as u64)
}

/// Coefficients `k_{n,s}` of `∏_{i=1}^n ((1+x)^i - 1)`: the number of basic
/// faithfully balanced modules with `s` summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizePolynomial {
    pub n: usize,
    pub coeffs: BTreeMap<usize, BigUint>,
}

pub fn size_polynomial(n: usize) -> SizePolynomial {
    // dense product, degree grows to n(n+1)/2
    let mut poly: Vec<BigUint> = vec![BigUint::one()];
    for i in 1..=n {
        let factor: Vec<BigUint> = (1..=i).map(|k| binomial(i, k)).collect();
        let mut next = vec![BigUint::zero(); poly.len() + i];
        for (d, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, f) in factor.iter().enumerate() {
                next[d + k + 1] += c * f;
            }
        }
        poly = next;
    }
    let coeffs = poly
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    SizePolynomial { n, coeffs }
}

/// Coefficients of the row-count polynomial
/// `∏_{r=1}^n ( ∏_{s<=r} (1+x_s) - 1 )`: the key `(t_1,...,t_n)` counts the
/// faithfully balanced modules with `t_i` summands in row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiCount {
    pub n: usize,
    pub coeffs: BTreeMap<Vec<usize>, BigUint>,
}

impl MultiCount {
    /// Forgetting rows: the total-degree marginal reproduces the size
    /// polynomial.
    pub fn marginal(&self) -> SizePolynomial {
        let mut coeffs: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (expo, c) in &self.coeffs {
            *coeffs.entry(expo.iter().sum()).or_default() += c;
        }
        SizePolynomial { n: self.n, coeffs }
    }
}

pub fn multi_count(n: usize) -> Result<MultiCount, FabalError> {
    if n > 8 {
        return Err(FabalError::ResourceCap(format!(
            "row-count expansion capped at rank 8, got {n}"
        )));
    }
    let mut terms: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
    terms.insert(vec![0; n], BigUint::one());
    for r in 1..=n {
        // nonempty subsets of variables x_1..x_r
        let mut next: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
        for subset in 1u32..(1 << r) {
            for (expo, c) in &terms {
                let mut e = expo.clone();
                for (s, item) in e.iter_mut().enumerate().take(r) {
                    if subset >> s & 1 == 1 {
                        *item += 1;
                    }
                }
                *next.entry(e).or_default() += c;
            }
        }
        terms = next;
    }
    Ok(MultiCount { n, coeffs: terms })
}

/// Counts of faithfully balanced modules of the hereditary algebra that
/// contain the first simple as a summand, and both end simples.
///
/// The closed forms hold from rank 3 on; the two degenerate small ranks are
/// pinned to their enumerated values.
pub fn restricted_counts(n: usize) -> (BigUint, BigUint) {
    assert!(n >= 1);
    let fb1 = big(1 << (n - 1)) * two_factorial(n - 1);
    let fb1n = match n {
        1 | 2 => BigUint::one(),
        _ => {
            big(1 << (n - 2)) * two_factorial(n - 1) + big(1 << (n - 3)) * two_factorial(n - 2)
        }
    };
    (fb1, fb1n)
}

/// Product formula for the faithfully balanced count of a valleyed
/// presentation: the valleys cut the staircase into segments; end segments
/// contribute the one-sided restricted count, inner segments the two-sided
/// one, and each valley simple toggles freely.
pub fn nakayama_count(pres: &NakayamaPresentation) -> BigUint {
    let valleys = pres.valleys();
    let t = valleys.len();
    if t == 0 {
        return two_factorial(pres.n());
    }
    let first_len = valleys[0];
    let last_len = pres.n() - valleys[t - 1] + 1;
    let mut acc = big(1 << t) * restricted_counts(first_len).0 * restricted_counts(last_len).0;
    for w in valleys.windows(2) {
        let inner_len = w[1] - w[0] + 1;
        acc *= restricted_counts(inner_len).1;
    }
    acc
}

/// Tilting test over the hereditary algebra: exactly `n` summands and no
/// extensions between any two of them.
pub fn is_tilting(m: &BasicModule) -> bool {
    if m.summand_count() != m.n() {
        return false;
    }
    let pres = NakayamaPresentation::linear(m.n());
    m.iter().all(|a| m.iter().all(|b| ext_dim(&pres, a, b) == 0))
}

pub fn tilting_count(n: usize) -> Result<u64, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    Ok(fb_enumerate(&pres)?.filter(is_tilting_ref).count() as u64)
}

fn is_tilting_ref(m: &BasicModule) -> bool {
    is_tilting(m)
}

/// Number of distinct presentation categories arising from faithfully
/// balanced modules of the hereditary algebra.
pub fn gen1_category_count(n: usize) -> Result<u64, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    let mut seen: std::collections::BTreeSet<Vec<Interval>> = Default::default();
    for m in fb_enumerate(&pres)? {
        let cat: Vec<Interval> = crate::approx::gen1_category(&pres, &m).into_iter().collect();
        seen.insert(cat);
    }
    Ok(seen.len() as u64)
}

pub fn minimal_fb_count(n: usize) -> Result<u64, FabalError> {
    let pres = NakayamaPresentation::linear(n);
    let mut count = 0u64;
    for m in fb_enumerate(&pres)? {
        if is_minimal_fb(&pres, &m).unwrap() {
            count += 1;
        }
    }
    Ok(count)
}

/// Brute-force check helper: histogram of summand counts over the stream.
pub fn size_histogram(pres: &NakayamaPresentation) -> Result<BTreeMap<usize, BigUint>, FabalError> {
    let mut hist: BTreeMap<usize, BigUint> = BTreeMap::new();
    for m in fb_enumerate(pres)? {
        *hist.entry(m.summand_count()).or_default() += BigUint::one();
    }
    Ok(hist)
}

/// Histogram of row-count vectors `(t_1,...,t_n)` over the stream.
pub fn row_histogram(
    pres: &NakayamaPresentation,
) -> Result<BTreeMap<Vec<usize>, BigUint>, FabalError> {
    let n = pres.n();
    let mut hist: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
    for m in fb_enumerate(pres)? {
        let key: Vec<usize> = (1..=n).map(|r| m.row_count(r)).collect();
        *hist.entry(key).or_default() += BigUint::one();
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fbcheck::is_fb;

    fn lin(n: usize) -> NakayamaPresentation {
        NakayamaPresentation::linear(n)
    }

    #[test]
    fn fb_counts_small_ranks() {
        let expected = [1u64, 3, 21, 315, 9765];
        for (k, &want) in expected.iter().enumerate() {
            let n = k + 1;
            assert_eq!(fb_count(&lin(n)).unwrap(), want, "rank {n}");
            assert_eq!(two_factorial(n), big(want));
        }
        assert_eq!(two_factorial(6), big(615195));
    }

    #[test]
    fn enumeration_yields_exactly_the_fb_modules() {
        for n in 1..=4 {
            let pres = lin(n);
            let listed: Vec<BasicModule> = fb_enumerate(&pres).unwrap().collect();
            let mut distinct = listed.clone();
            distinct.sort();
            distinct.dedup();
            assert_eq!(distinct.len(), listed.len(), "duplicates at rank {n}");
            for m in &listed {
                assert!(is_fb(&pres, m));
            }
            let brute = {
                let ivs = pres.indecomposables();
                (0u32..(1 << ivs.len()))
                    .filter(|mask| {
                        let m = BasicModule::new(
                            n,
                            ivs.iter()
                                .enumerate()
                                .filter(|(k, _)| mask >> k & 1 == 1)
                                .map(|(_, &iv)| iv),
                        )
                        .unwrap();
                        is_fb(&pres, &m)
                    })
                    .count()
            };
            assert_eq!(listed.len(), brute);
        }
    }

    #[test]
    fn size_polynomial_rank3() {
        let sp = size_polynomial(3);
        let want: BTreeMap<usize, BigUint> =
            [(3usize, 6u64), (4, 9), (5, 5), (6, 1)].iter().map(|&(s, c)| (s, big(c))).collect();
        assert_eq!(sp.coeffs, want);
    }

    #[test]
    fn size_polynomial_invariants() {
        for n in 1..=6 {
            let sp = size_polynomial(n);
            let total: BigUint = sp.coeffs.values().sum();
            assert_eq!(total, two_factorial(n));
            assert_eq!(*sp.coeffs.keys().next().unwrap(), n);
            assert_eq!(*sp.coeffs.keys().last().unwrap(), n * (n + 1) / 2);
            assert_eq!(sp.coeffs[&n], factorial(n));
            assert_eq!(sp.coeffs[&(n * (n + 1) / 2)], BigUint::one());
        }
        assert_eq!(size_polynomial(4).coeffs[&4], big(24));
        let total4: BigUint = size_polynomial(4).coeffs.values().sum();
        assert_eq!(total4, big(315));
    }

    /// Independent route to the same coefficients: the binomial sum over
    /// row-count vectors `1 <= j_r <= r`.
    #[test]
    fn size_polynomial_matches_binomial_sum() {
        for n in 1..=5usize {
            let sp = size_polynomial(n);
            let mut sums: BTreeMap<usize, BigUint> = BTreeMap::new();
            let mut j = vec![1usize; n];
            loop {
                let s: usize = j.iter().sum();
                let prod = j
                    .iter()
                    .enumerate()
                    .fold(BigUint::one(), |acc, (r, &jr)| acc * binomial(r + 1, jr));
                *sums.entry(s).or_default() += prod;
                let mut r = 0;
                loop {
                    if r == n {
                        break;
                    }
                    if j[r] < r + 1 {
                        j[r] += 1;
                        for item in j.iter_mut().take(r) {
                            *item = 1;
                        }
                        break;
                    }
                    r += 1;
                }
                if r == n {
                    break;
                }
            }
            assert_eq!(sp.coeffs, sums);
        }
    }

    #[test]
    fn multi_count_small() {
        let mc = multi_count(2).unwrap();
        assert_eq!(mc.coeffs[&vec![1, 1]], BigUint::one());
        assert_eq!(mc.coeffs[&vec![2, 1]], BigUint::one());
        assert_eq!(mc.coeffs[&vec![2, 0]], BigUint::one());
        assert_eq!(mc.coeffs.len(), 3);
    }

    /// Histograms from enumeration match both polynomials, ranks <= 5.
    #[test]
    fn histograms_match_polynomials() {
        for n in 1..=5 {
            let pres = lin(n);
            assert_eq!(size_histogram(&pres).unwrap(), size_polynomial(n).coeffs);
            assert_eq!(row_histogram(&pres).unwrap(), multi_count(n).unwrap().coeffs);
            assert_eq!(multi_count(n).unwrap().marginal(), size_polynomial(n));
        }
    }

    #[test]
    fn q_counts() {
        assert_eq!(q_count(3, 1), big(21));
        assert_eq!(q_count(0, 5), BigUint::one());
        assert_eq!(q_count(2, 2), big(16));
    }

    /// Multiplicity-bounded brute force at rank 2: a module with summand
    /// multiplicities in 1..=q is faithfully balanced exactly when its
    /// support is, so the count is the sum of q^|support| over supports.
    #[test]
    fn q_count_matches_multiplicity_enumeration() {
        let pres = lin(2);
        for q in 1u64..=3 {
            let total: u64 = fb_enumerate(&pres)
                .unwrap()
                .map(|m| q.pow(m.summand_count() as u32))
                .sum();
            assert_eq!(q_count(2, q), big(total));
        }
    }

    #[test]
    fn restricted_count_values() {
        assert_eq!(restricted_counts(3).0, big(12));
        assert_eq!(restricted_counts(3).1, big(7));
        assert_eq!(restricted_counts(2), (big(2), big(1)));
        assert_eq!(restricted_counts(1), (big(1), big(1)));
    }

    /// The restricted counts really do count what they claim, ranks <= 5.
    #[test]
    fn restricted_counts_match_enumeration() {
        for n in 1..=5usize {
            let pres = lin(n);
            let s1 = Interval::new(1, 1);
            let sn = Interval::new(n, n);
            let fb1 = fb_enumerate(&pres).unwrap().filter(|m| m.contains(s1)).count() as u64;
            let fb1n = fb_enumerate(&pres)
                .unwrap()
                .filter(|m| m.contains(s1) && m.contains(sn))
                .count() as u64;
            let (f1, f1n) = restricted_counts(n);
            assert_eq!(f1, big(fb1), "one-sided at rank {n}");
            assert_eq!(f1n, big(fb1n), "two-sided at rank {n}");
        }
    }

    #[test]
    fn nakayama_counts() {
        let pres = NakayamaPresentation::new(6, &[3, 4]).unwrap();
        assert_eq!(nakayama_count(&pres), big(576));
        assert_eq!(fb_count(&pres).unwrap(), 576);

        let pres = NakayamaPresentation::new(4, &[2]).unwrap();
        assert_eq!(nakayama_count(&pres), big(48));
        assert_eq!(fb_count(&pres).unwrap(), 48);

        assert_eq!(nakayama_count(&lin(5)), two_factorial(5));
    }

    /// Formula versus brute force for every valley set up to rank 6.
    #[test]
    fn nakayama_formula_matches_brute_force() {
        for n in 1..=6usize {
            let candidates: Vec<usize> = (2..n).collect();
            for mask in 0u32..(1 << candidates.len()) {
                let valleys: Vec<usize> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &b)| b)
                    .collect();
                let pres = NakayamaPresentation::new(n, &valleys).unwrap();
                assert_eq!(
                    nakayama_count(&pres),
                    big(fb_count(&pres).unwrap()),
                    "n={n} valleys={valleys:?}"
                );
            }
        }
    }

    #[test]
    fn tilting_counts_are_catalan() {
        let catalan = [1u64, 2, 5, 14, 42];
        for (k, &want) in catalan.iter().enumerate() {
            assert_eq!(tilting_count(k + 1).unwrap(), want);
        }
    }

    #[test]
    fn category_and_minimal_counts() {
        assert_eq!(gen1_category_count(3).unwrap(), 7);
        assert_eq!(minimal_fb_count(4).unwrap(), 25);
    }

    #[test]
    fn n_summand_count_is_factorial() {
        for n in 1..=5usize {
            let c = fb_enumerate(&lin(n))
                .unwrap()
                .filter(|m| m.summand_count() == n)
                .count() as u64;
            assert_eq!(big(c), factorial(n));
        }
    }

    #[test]
    fn near_top_count() {
        for n in 2..=5usize {
            let full = n * (n + 1) / 2;
            let c = fb_enumerate(&lin(n))
                .unwrap()
                .filter(|m| m.summand_count() == full - 1)
                .count();
            assert_eq!(c, full - 1);
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            fb_enumerate(&lin(8)),
            Err(FabalError::ResourceCap(_))
        ));
        assert!(matches!(
            fb_enumerate_capped(&lin(5), 4),
            Err(FabalError::ResourceCap(_))
        ));
    }
}
