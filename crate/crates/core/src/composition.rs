use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The defining sequence `(a_1, ..., a_m)` of a C-graph.
///
/// Any length `m >= 2` can be held; the spectral results require `m = 2k`
/// and go through [`Composition::half_len`], which rejects odd lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::TooFewParts(parts.len()));
        }
        if let Some(index) = parts.iter().position(|&a| a == 0) {
            return Err(Error::ZeroPart { index });
        }
        Ok(Composition { parts })
    }

    /// Like [`Composition::new`] but also insists on an even length.
    pub fn new_even(parts: Vec<usize>) -> Result<Self> {
        let c = Self::new(parts)?;
        c.half_len()?;
        Ok(c)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `a_i` with the 1-based index used throughout the literature.
    pub fn alpha(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.parts.len().is_multiple_of(2)
    }

    /// `k` where the length is `2k`.
    pub fn half_len(&self) -> Result<usize> {
        if self.is_even() {
            Ok(self.parts.len() / 2)
        } else {
            Err(Error::OutsideCEven(self.parts.len()))
        }
    }

    /// Vertex count `n`.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn alpha_min(&self) -> usize {
        *self.parts.iter().min().expect("nonempty")
    }

    pub fn alpha_max(&self) -> usize {
        *self.parts.iter().max().expect("nonempty")
    }

    /// `a_1, a_3, a_5, ...` (odd 1-based positions: the clique classes).
    pub fn odd_parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().step_by(2).copied()
    }

    /// `a_2, a_4, ...` (even 1-based positions: the independent classes).
    pub fn even_parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().skip(1).step_by(2).copied()
    }

    /// All even-length compositions of `n`, in lexicographic order.
    pub fn all_even(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        compositions_rec(n, &mut prefix, &mut out);
        out
    }

    /// Every even-length composition with `2 <= order <= max_n`, grouped by
    /// order and lexicographic within each order.
    pub fn all_even_up_to(max_n: usize) -> Vec<Composition> {
        (2..=max_n).flat_map(Self::all_even).collect()
    }
}

fn compositions_rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if rest == 0 {
        if prefix.len() >= 2 && prefix.len().is_multiple_of(2) {
            out.push(Composition { parts: prefix.clone() });
        }
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        compositions_rec(rest - first, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "C({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseCompositionError {
    #[error("invalid part {0:?}: expected a positive integer")]
    BadPart(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl FromStr for Composition {
    type Err = ParseCompositionError;

    /// Parses a comma-separated list such as `4,3,2,2`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>()
                    .map_err(|_| ParseCompositionError::BadPart(t.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Composition::new(parts)?)
    }
}
