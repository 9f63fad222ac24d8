use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{Serialize, SerializeTuple, Serializer};
use serde::Deserialize;

use crate::error::FabalError;

/// An indecomposable interval module, written `(i, j)` with `i` the index of
/// the top and `j` the index of the socle, `1 <= i <= j`.
///
/// Its length is `j - i + 1`; the simple module `S[i]` is the interval
/// `(i, i)`. Serialized as the two-element array `[i, j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub top: usize,
    pub soc: usize,
}

#[allow(clippy::len_without_is_empty)] // an interval module is never zero
impl Interval {
    /// Builds `(i, j)`. Panics unless `1 <= i <= j`; range checks against an
    /// ambient rank live in [`crate::NakayamaPresentation`].
    pub fn new(top: usize, soc: usize) -> Self {
        assert!(top >= 1 && top <= soc, "invalid interval ({top},{soc})");
        Interval { top, soc }
    }

    pub fn checked(top: usize, soc: usize) -> Result<Self, FabalError> {
        if top >= 1 && top <= soc {
            Ok(Interval { top, soc })
        } else {
            Err(FabalError::InvalidInterval(top, soc))
        }
    }

    /// Composition length `j - i + 1`.
    pub fn len(&self) -> usize {
        self.soc - self.top + 1
    }

    pub fn is_simple(&self) -> bool {
        self.top == self.soc
    }

    /// `true` when the simple `S[v]` is a composition factor, i.e. `i <= v <= j`.
    pub fn supports(&self, v: usize) -> bool {
        self.top <= v && v <= self.soc
    }

    /// Reflection `(i, j) -> (n+1-j, n+1-i)` along the symmetry axis of the
    /// staircase diagram of rank `n`.
    pub fn reflect(&self, n: usize) -> Interval {
        Interval::new(n + 1 - self.soc, n + 1 - self.top)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.soc)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.top)?;
        t.serialize_element(&self.soc)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Interval;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a two-element array [top, socle]")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Interval, A::Error> {
                let top: usize = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let soc: usize = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<usize>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Interval::checked(top, soc).map_err(de::Error::custom)
            }
        }
        d.deserialize_tuple(2, V)
    }
}

/// A leaf of the staircase diagram: the virtual pair `(k, k-1)` for
/// `1 <= k <= n+1`. Leaves carry the virtual cohooks of the classification
/// and become the leaves of the tree encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, Deserialize)]
pub struct Leaf(pub usize);

impl Leaf {
    pub fn checked(k: usize, n: usize) -> Result<Self, FabalError> {
        if (1..=n + 1).contains(&k) {
            Ok(Leaf(k))
        } else {
            Err(FabalError::InvalidInterval(k, k.wrapping_sub(1)))
        }
    }

    /// The virtual pair `(k, k-1)` as (top, socle) coordinates.
    pub fn pair(&self) -> (usize, usize) {
        (self.0, self.0 - 1)
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.0 - 1)
    }
}
