//! The dominance order on multipartitions and its linear extensions.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Multipartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Dominance {
    /// `a ⊵ b`.
    pub fn dominates(self) -> bool {
        matches!(self, Dominance::Greater | Dominance::Equal)
    }
}

/// Flattened partial sums `Σ_{i<c}|a^i| + Σ_{j≤k} a^c_j` for `c` in `0..l`
/// and `k` in `1..=depth`.
pub fn partial_sum_key(a: &Multipartition, depth: usize) -> Vec<usize> {
    let mut key = Vec::with_capacity(a.level() * depth);
    let mut before = 0;
    for p in a.components() {
        let mut acc = before;
        for k in 1..=depth {
            acc += p.part(k);
            key.push(acc);
        }
        before += p.rank();
    }
    key
}

pub fn dominance_compare(a: &Multipartition, b: &Multipartition) -> Result<Dominance> {
    if a.level() != b.level() {
        return Err(Error::ComponentMismatch { expected: a.level(), found: b.level() });
    }
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    if a == b {
        return Ok(Dominance::Equal);
    }
    let depth = a.height().max(b.height());
    let ka = partial_sum_key(a, depth);
    let kb = partial_sum_key(b, depth);
    let mut ge = true;
    let mut le = true;
    for (x, y) in ka.iter().zip(&kb) {
        match x.cmp(y) {
            Ordering::Greater => le = false,
            Ordering::Less => ge = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
        // Partial sums at depth ≥ height determine the multipartition.
        (true, true) => unreachable!("distinct multipartitions with equal partial sums"),
    })
}

/// A total order on same-rank multipartitions refining dominance.
///
/// Both variants order `a` above `b` whenever `a ▷ b`; they differ on
/// incomparable pairs, which makes them useful for checking that a
/// computation depends only on the partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinearExtension {
    /// Lexicographic order on [`partial_sum_key`].
    #[default]
    PartialSumKey,
    /// Sum of the partial sums, ties broken by reversed lexicographic key.
    KeySumReverseTiebreak,
}

impl LinearExtension {
    pub fn sort_key(self, a: &Multipartition, depth: usize) -> ExtensionKey {
        let key = partial_sum_key(a, depth);
        match self {
            LinearExtension::PartialSumKey => ExtensionKey { primary: 0, key },
            LinearExtension::KeySumReverseTiebreak => {
                let sum = key.iter().sum();
                let key = key.into_iter().map(|x| usize::MAX - x).collect();
                ExtensionKey { primary: sum, key }
            }
        }
    }
}

/// Precomputed sort key; larger means higher in the extension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtensionKey {
    primary: usize,
    key: Vec<usize>,
}
