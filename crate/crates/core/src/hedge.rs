//! The totally ordered hedge chain `h_0 < h_1 < ... < h_n`.
//!
//! Join and meet are `max` / `min` of the grades, the involution is
//! `j -> n - j` and implication is the Łukasiewicz residuum
//! `j -> k = min(n, n - j + k)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated grade in a [`HedgeChain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HedgeIndex(u32);

impl HedgeIndex {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl std::fmt::Display for HedgeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h{}", self.0)
    }
}

/// A chain of `n + 1` hedges. `n = 0` is the one-element chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HedgeChain {
    n: u32,
}

impl HedgeChain {
    pub fn new(n: u32) -> Self {
        Self { n }
    }

    /// Largest grade of the chain.
    pub fn n(self) -> u32 {
        self.n
    }

    pub fn len(self) -> usize {
        self.n as usize + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn index(self, grade: u32) -> Result<HedgeIndex> {
        if grade > self.n {
            return Err(Error::HedgeOutOfRange { index: grade, n: self.n });
        }
        Ok(HedgeIndex(grade))
    }

    pub fn top(self) -> HedgeIndex {
        HedgeIndex(self.n)
    }

    pub fn bottom(self) -> HedgeIndex {
        HedgeIndex(0)
    }

    pub fn indices(self) -> impl Iterator<Item = HedgeIndex> {
        (0..=self.n).map(HedgeIndex)
    }

    fn check(self, j: HedgeIndex) -> Result<u32> {
        self.index(j.0).map(|h| h.0)
    }

    pub fn join(self, j: HedgeIndex, k: HedgeIndex) -> Result<HedgeIndex> {
        Ok(HedgeIndex(self.check(j)?.max(self.check(k)?)))
    }

    pub fn meet(self, j: HedgeIndex, k: HedgeIndex) -> Result<HedgeIndex> {
        Ok(HedgeIndex(self.check(j)?.min(self.check(k)?)))
    }

    pub fn not(self, j: HedgeIndex) -> Result<HedgeIndex> {
        Ok(HedgeIndex(self.n - self.check(j)?))
    }

    pub fn implies(self, j: HedgeIndex, k: HedgeIndex) -> Result<HedgeIndex> {
        let (j, k) = (self.check(j)?, self.check(k)?);
        Ok(HedgeIndex(residuum(self.n, j, k)))
    }
}

/// `min(n, n - j + k)` for grades already known to be at most `n`.
pub(crate) fn residuum(n: u32, j: u32, k: u32) -> u32 {
    (n + k - j).min(n)
}
