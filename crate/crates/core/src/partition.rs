//! Partitions, multipartitions and charges.
//!
//! A [`Partition`] never stores trailing zeros; [`Partition::part`] returns 0
//! past the height so callers can treat every partition as having infinitely
//! many empty parts.
//!
//! The total order on [`Multipartition`] is the enumeration order used across
//! the crate: rank first, then the composition `(|λ^0|, …, |λ^{l-1}|)`
//! lexicographically, then the components one after another, each in
//! reverse-lexicographic order. Sorting a list of multipartitions therefore
//! reproduces [`crate::enumerate::multipartitions`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("parts {parts:?} are not a weakly decreasing sequence of positive integers"),
            });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `j`-th part, 1-based; zero beyond the height.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// An `l`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition has at least one component");
        Self { components }
    }

    pub fn empty(l: usize) -> Self {
        Self::new(vec![Partition::empty(); l])
    }

    pub fn from_parts(parts: Vec<Vec<usize>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "a multipartition needs at least one component".into() });
        }
        let components = parts.into_iter().map(Partition::new).collect::<Result<Vec<_>>>()?;
        Ok(Self { components })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    /// Number of components `l`.
    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn height(&self) -> usize {
        self.components.iter().map(Partition::height).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn to_parts(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(|p| p.parts.clone()).collect()
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.level().cmp(&other.level()))
            .then_with(|| {
                let a = self.components.iter().map(Partition::rank);
                let b = other.components.iter().map(Partition::rank);
                a.cmp(b)
            })
            .then_with(|| {
                for (x, y) in self.components.iter().zip(&other.components) {
                    match y.parts.cmp(&x.parts) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Vec<usize>>> for Multipartition {
    type Error = Error;

    fn try_from(parts: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_parts(parts)
    }
}

impl From<Multipartition> for Vec<Vec<usize>> {
    fn from(mp: Multipartition) -> Self {
        mp.to_parts()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `3,1||6,2`. Whitespace is ignored anywhere.
impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut parts: Vec<usize> = Vec::new();
        let mut number: Option<(usize, usize)> = None; // (value, start position)
        let mut expect_number = false;

        let finish_number = |number: &mut Option<(usize, usize)>, parts: &mut Vec<usize>| -> Result<()> {
            if let Some((value, pos)) = number.take() {
                if value == 0 {
                    return Err(Error::Parse { pos, msg: "parts must be positive".into() });
                }
                if let Some(&prev) = parts.last() {
                    if prev < value {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("part {value} exceeds the preceding part {prev}"),
                        });
                    }
                }
                parts.push(value);
            }
            Ok(())
        };

        for (pos, ch) in s.char_indices() {
            match ch {
                c if c.is_whitespace() => {}
                '0'..='9' => {
                    let digit = ch as usize - '0' as usize;
                    number = Some(match number {
                        Some((v, start)) => {
                            let v = v
                                .checked_mul(10)
                                .and_then(|v| v.checked_add(digit))
                                .ok_or(Error::Parse { pos: start, msg: "part too large".into() })?;
                            (v, start)
                        }
                        None => (digit, pos),
                    });
                    expect_number = false;
                }
                ',' => {
                    if number.is_none() {
                        return Err(Error::Parse { pos, msg: "expected a part before ','".into() });
                    }
                    finish_number(&mut number, &mut parts)?;
                    expect_number = true;
                }
                '|' => {
                    if expect_number {
                        return Err(Error::Parse { pos, msg: "expected a part after ','".into() });
                    }
                    finish_number(&mut number, &mut parts)?;
                    components.push(Partition { parts: std::mem::take(&mut parts) });
                }
                other => {
                    return Err(Error::Parse { pos, msg: format!("unexpected character {other:?}") });
                }
            }
        }
        if expect_number {
            return Err(Error::Parse { pos: s.len(), msg: "expected a part after ','".into() });
        }
        finish_number(&mut number, &mut parts)?;
        components.push(Partition { parts });
        Ok(Self { components })
    }
}

/// A weakly increasing multicharge `(s_0, …, s_{l-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Charge {
    entries: Vec<i64>,
}

impl Charge {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyCharge);
        }
        if entries.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidCharge(entries));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, c: usize) -> i64 {
        self.entries[c]
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    pub fn min_entry(&self) -> i64 {
        self.entries[0]
    }

    pub fn max_entry(&self) -> i64 {
        self.entries[self.entries.len() - 1]
    }

    pub(crate) fn check_level(&self, mp: &Multipartition) -> Result<()> {
        if mp.level() != self.level() {
            return Err(Error::ComponentMismatch { expected: self.level(), found: mp.level() });
        }
        Ok(())
    }
}

impl TryFrom<Vec<i64>> for Charge {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<Charge> for Vec<i64> {
    fn from(c: Charge) -> Self {
        c.entries
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        f.write_str(&strs.join(","))
    }
}

impl FromStr for Charge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut start = 0;
        for field in s.split(',') {
            let trimmed: String = field.chars().filter(|c| !c.is_whitespace()).collect();
            let value = trimmed
                .parse::<i64>()
                .map_err(|_| Error::Parse { pos: start, msg: format!("{field:?} is not an integer") })?;
            entries.push(value);
            start += field.len() + 1;
        }
        Self::new(entries)
    }
}
