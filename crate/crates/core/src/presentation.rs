use serde::{Deserialize, Serialize};

use crate::error::FabalError;
use crate::interval::Interval;

/// A quadratic Nakayama algebra: the path algebra of `1 -> 2 -> ... -> n`
/// modulo the length-two relations `(b-1) -> b -> (b+1)` for each valley
/// `b` in the valley set. An empty valley set is the hereditary algebra of
/// lower triangular n×n matrices itself.
///
/// An interval `(i, j)` is a module for the quotient exactly when no valley
/// lies strictly inside it, i.e. there is no valley `b` with
/// `i+1 <= b <= j-1`. We call such intervals *allowed*.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakayamaPresentation {
    n: usize,
    valleys: Vec<usize>,
}

impl NakayamaPresentation {
    /// The hereditary algebra (no relations) of rank `n`.
    pub fn linear(n: usize) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        NakayamaPresentation { n, valleys: Vec::new() }
    }

    /// Rank `n` with the given valley set; valleys must lie in `2..=n-1`.
    pub fn new(n: usize, valleys: &[usize]) -> Result<Self, FabalError> {
        if n < 1 {
            return Err(FabalError::InvalidPresentation("rank must be at least 1".into()));
        }
        let mut vs: Vec<usize> = valleys.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &b in &vs {
            if b < 2 || b + 1 > n {
                return Err(FabalError::InvalidPresentation(format!(
                    "valley {b} out of range 2..={} for n={n}",
                    n.saturating_sub(1)
                )));
            }
        }
        Ok(NakayamaPresentation { n, valleys: vs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn valleys(&self) -> &[usize] {
        &self.valleys
    }

    pub fn is_linear(&self) -> bool {
        self.valleys.is_empty()
    }

    pub fn is_allowed(&self, iv: Interval) -> bool {
        iv.top >= 1
            && iv.top <= iv.soc
            && iv.soc <= self.n
            && !self.valleys.iter().any(|&b| iv.top < b && b < iv.soc)
    }

    pub fn check_allowed(&self, iv: Interval) -> Result<(), FabalError> {
        if self.is_allowed(iv) {
            Ok(())
        } else {
            Err(FabalError::NotAllowed(iv.top, iv.soc, self.n))
        }
    }

    /// All allowed intervals, sorted by `(top, socle)`. For the hereditary
    /// algebra this lists the full staircase of `n(n+1)/2` intervals.
    pub fn indecomposables(&self) -> Vec<Interval> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 1..=self.n {
            for j in i..=self.n {
                let iv = Interval::new(i, j);
                if self.is_allowed(iv) {
                    out.push(iv);
                }
            }
        }
        out
    }

    /// The indecomposable projective with top `S[i]`: `(i, e)` where `e` is
    /// the first valley `>= i+1`, or `n` if there is none.
    pub fn projective(&self, i: usize) -> Interval {
        assert!((1..=self.n).contains(&i));
        let e = self.valleys.iter().copied().find(|&b| b > i).unwrap_or(self.n);
        Interval::new(i, e)
    }

    /// The indecomposable injective with socle `S[j]`: `(s, j)` where `s` is
    /// the last valley `<= j-1`, or `1` if there is none.
    pub fn injective(&self, j: usize) -> Interval {
        assert!((1..=self.n).contains(&j));
        let s = self
            .valleys
            .iter()
            .rev()
            .copied()
            .find(|&b| b < j)
            .unwrap_or(1);
        Interval::new(s, j)
    }

    /// The projective-injective intervals, i.e. the maximal allowed ones.
    /// For the hereditary algebra this is the single interval `(1, n)`.
    pub fn projective_injectives(&self) -> Vec<Interval> {
        (1..=self.n)
            .map(|i| self.projective(i))
            .filter(|&p| self.injective(p.soc) == p)
            .collect()
    }

    /// The presentation with the quiver orientation reversed and renumbered:
    /// valley `b` becomes `n+1-b`. Interval modules transport through
    /// [`Interval::reflect`].
    pub fn reversed(&self) -> Self {
        let mut valleys: Vec<usize> = self.valleys.iter().map(|&b| self.n + 1 - b).collect();
        valleys.sort_unstable();
        NakayamaPresentation { n: self.n, valleys }
    }
}
