use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FabalError;
use crate::interval::Interval;
use crate::presentation::NakayamaPresentation;

/// A basic module: an ambient rank `n` together with a duplicate-free set of
/// interval summands, kept sorted lexicographically by `(top, socle)`.
///
/// Set semantics throughout: adding an existing summand is a no-op. JSON
/// encoding is `{"n": 3, "summands": [[1,3],[2,3],[3,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasicModule {
    n: usize,
    summands: BTreeSet<Interval>,
}

impl BasicModule {
    /// The zero module of rank `n`.
    pub fn empty(n: usize) -> Self {
        BasicModule { n, summands: BTreeSet::new() }
    }

    /// Builds a module from summands, validating `1 <= i <= j <= n`.
    pub fn new<I: IntoIterator<Item = Interval>>(n: usize, ivs: I) -> Result<Self, FabalError> {
        let mut m = BasicModule::empty(n);
        for iv in ivs {
            if iv.top < 1 || iv.top > iv.soc || iv.soc > n {
                return Err(FabalError::InvalidModule(format!(
                    "summand {iv} out of range for n={n}"
                )));
            }
            m.summands.insert(iv);
        }
        Ok(m)
    }

    /// Convenience constructor from `(top, socle)` pairs; panics on invalid
    /// input, intended for literals.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        BasicModule::new(n, pairs.iter().map(|&(i, j)| Interval::new(i, j)))
            .expect("invalid module literal")
    }

    /// The direct sum of all indecomposable projectives (the regular module).
    pub fn regular(pres: &NakayamaPresentation) -> Self {
        BasicModule::new(pres.n(), (1..=pres.n()).map(|i| pres.projective(i))).unwrap()
    }

    /// The direct sum of all indecomposable injectives.
    pub fn coregular(pres: &NakayamaPresentation) -> Self {
        BasicModule::new(pres.n(), (1..=pres.n()).map(|j| pres.injective(j))).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of indecomposable summands `|M|`.
    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn contains(&self, iv: Interval) -> bool {
        self.summands.contains(&iv)
    }

    pub fn iter(&self) -> impl Iterator<Item = Interval> + '_ {
        self.summands.iter().copied()
    }

    pub fn summands(&self) -> &BTreeSet<Interval> {
        &self.summands
    }

    /// `M ⊕ X` (no-op when `X` is already a summand).
    pub fn with_summand(&self, iv: Interval) -> Self {
        let mut m = self.clone();
        m.summands.insert(iv);
        m
    }

    /// The complement of one summand.
    pub fn without_summand(&self, iv: Interval) -> Self {
        let mut m = self.clone();
        m.summands.remove(&iv);
        m
    }

    /// Is `self` a direct summand of `other` (as basic modules: inclusion of
    /// summand sets over the same rank)?
    pub fn is_summand_of(&self, other: &BasicModule) -> bool {
        self.n == other.n && self.summands.is_subset(&other.summands)
    }

    /// Number of summands in row `r`, i.e. with top `S[r]`.
    pub fn row_count(&self, r: usize) -> usize {
        self.summands.iter().filter(|iv| iv.top == r).count()
    }

    /// Summands with top `S[r]`, sorted by socle.
    pub fn row(&self, r: usize) -> Vec<Interval> {
        self.summands.iter().copied().filter(|iv| iv.top == r).collect()
    }

    /// Summands with socle `S[c]`, sorted by top.
    pub fn column(&self, c: usize) -> Vec<Interval> {
        self.summands.iter().copied().filter(|iv| iv.soc == c).collect()
    }

    /// Total composition length (the dimension of the module).
    pub fn total_length(&self) -> usize {
        self.summands.iter().map(Interval::len).sum()
    }

    pub fn validate_for(&self, pres: &NakayamaPresentation) -> Result<(), FabalError> {
        if self.n != pres.n() {
            return Err(FabalError::InvalidModule(format!(
                "module rank {} does not match presentation rank {}",
                self.n,
                pres.n()
            )));
        }
        for iv in self.iter() {
            pres.check_allowed(iv)?;
        }
        Ok(())
    }
}

impl fmt::Display for BasicModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, iv) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_semantics() {
        let m = BasicModule::from_pairs(3, &[(1, 3), (1, 3), (2, 3)]);
        assert_eq!(m.summand_count(), 2);
        let m2 = m.with_summand(Interval::new(1, 3));
        assert_eq!(m2, m);
    }

    #[test]
    fn regular_and_coregular() {
        let pres = NakayamaPresentation::linear(3);
        assert_eq!(
            BasicModule::regular(&pres),
            BasicModule::from_pairs(3, &[(1, 3), (2, 3), (3, 3)])
        );
        assert_eq!(
            BasicModule::coregular(&pres),
            BasicModule::from_pairs(3, &[(1, 1), (1, 2), (1, 3)])
        );
    }

    #[test]
    fn json_round_trip() {
        let m = BasicModule::from_pairs(3, &[(1, 3), (2, 3), (3, 3)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"n":3,"summands":[[1,3],[2,3],[3,3]]}"#);
        let back: BasicModule = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(BasicModule::new(3, [Interval::new(2, 4)]).is_err());
    }
}
