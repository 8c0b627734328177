//! Shifted symbols.
//!
//! Row `c` of the symbol of size `h` holds the `h + s_c` beta-numbers
//! `B^c_j = λ^c_j − j + h + s_c`, stored smallest first. Entry indices count
//! from the largest entry, so `B^c_1` is the last element of the row.
//!
//! Column `i` (counted from the right of the usual display) collects
//! `B^c_{i + s_c − s_{l-1}}` for every `c` where that index is positive.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Charge, Multipartition, Partition};

/// `hc^λ = max_c (h(λ^c) − s_c)`.
pub fn hc(mp: &Multipartition, s: &Charge) -> i64 {
    mp.components()
        .iter()
        .zip(s.entries())
        .map(|(p, &sc)| p.height() as i64 - sc)
        .max()
        .expect("at least one component")
}

/// Smallest admissible size: `max(1, hc^λ + 1)`.
pub fn min_size(mp: &Multipartition, s: &Charge) -> usize {
    (hc(mp, s) + 1).max(1) as usize
}

/// Smallest size admissible for every multipartition in `mps`.
pub fn common_size<'a>(mps: impl IntoIterator<Item = &'a Multipartition>, s: &Charge) -> usize {
    mps.into_iter().map(|m| min_size(m, s)).max().unwrap_or(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol")]
pub struct ShiftedSymbol {
    charge: Charge,
    h: usize,
    rows: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawSymbol {
    charge: Charge,
    h: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<RawSymbol> for ShiftedSymbol {
    type Error = Error;

    fn try_from(raw: RawSymbol) -> Result<Self> {
        Self::from_rows(raw.charge, raw.h, raw.rows)
    }
}

impl ShiftedSymbol {
    pub fn build(mp: &Multipartition, s: &Charge, h: usize) -> Result<Self> {
        s.check_level(mp)?;
        let min = min_size(mp, s);
        if h < min {
            return Err(Error::SizeTooSmall { h, min });
        }
        let rows = mp
            .components()
            .iter()
            .zip(s.entries())
            .map(|(p, &sc)| {
                let len = (h as i64 + sc) as usize;
                (1..=len)
                    .rev()
                    .map(|j| p.part(j) as i64 - j as i64 + h as i64 + sc)
                    .collect()
            })
            .collect();
        Ok(Self { charge: s.clone(), h, rows })
    }

    /// Symbol at the minimal admissible size.
    pub fn build_auto(mp: &Multipartition, s: &Charge) -> Result<Self> {
        Self::build(mp, s, min_size(mp, s))
    }

    /// Validates row lengths, strict increase and non-negativity. The
    /// resulting symbol need not satisfy the size constraint; that is
    /// checked when converting back to a multipartition.
    pub fn from_rows(charge: Charge, h: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.len() != charge.level() {
            return Err(Error::ComponentMismatch { expected: charge.level(), found: rows.len() });
        }
        for (c, row) in rows.iter().enumerate() {
            let expected = h as i64 + charge.get(c);
            if expected < 0 || row.len() as i64 != expected {
                return Err(Error::MalformedSymbol(format!(
                    "row {c} has {} entries, expected h + s_{c} = {expected}",
                    row.len()
                )));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::MalformedSymbol(format!("row {c} is not strictly increasing")));
            }
            if row.first().is_some_and(|&x| x < 0) {
                return Err(Error::MalformedSymbol(format!("row {c} has a negative entry")));
            }
        }
        Ok(Self { charge, h, rows })
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn level(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, c: usize) -> &[i64] {
        &self.rows[c]
    }

    pub fn into_rows(self) -> Vec<Vec<i64>> {
        self.rows
    }

    /// `B^c_j`, or `None` if `j` is outside `1..=h+s_c`.
    pub fn entry(&self, c: usize, j: i64) -> Option<i64> {
        let row = &self.rows[c];
        if j < 1 || j > row.len() as i64 {
            return None;
        }
        Some(row[row.len() - j as usize])
    }

    pub fn row_contains(&self, c: usize, value: i64) -> bool {
        self.rows[c].binary_search(&value).is_ok()
    }

    /// Number of columns, `h + s_{l-1}`.
    pub fn width(&self) -> usize {
        self.rows[self.rows.len() - 1].len()
    }

    /// Offset turning a column index into the entry index of row `c`.
    pub(crate) fn column_shift(&self, c: usize) -> i64 {
        self.charge.get(c) - self.charge.max_entry()
    }

    /// Aligned column `i`, from the top row `l-1` down to `c(i)`, as
    /// `(component, entry)` pairs.
    pub fn column(&self, i: usize) -> Result<Vec<(usize, i64)>> {
        let width = self.width();
        if i == 0 || i > width {
            return Err(Error::ColumnOutOfRange { index: i, max: width });
        }
        Ok((0..self.level())
            .rev()
            .map_while(|c| self.entry(c, i as i64 + self.column_shift(c)).map(|e| (c, e)))
            .collect())
    }

    /// Within every aligned column the entries weakly decrease as `c` grows.
    pub fn is_standard(&self) -> bool {
        (0..self.level().saturating_sub(1)).all(|c| {
            let shift = self.charge.get(c + 1) - self.charge.get(c);
            (1..=self.rows[c].len() as i64).all(|i| match self.entry(c + 1, i + shift) {
                Some(above) => self.entry(c, i).expect("index within row") >= above,
                None => true,
            })
        })
    }

    /// Inverse of [`ShiftedSymbol::build`]: `λ^c_j = B^c_j + j − h − s_c`.
    pub fn to_multipartition(&self) -> Result<Multipartition> {
        let mut components = Vec::with_capacity(self.level());
        for (c, row) in self.rows.iter().enumerate() {
            let offset = self.h as i64 + self.charge.get(c);
            let mut parts = Vec::with_capacity(row.len());
            for (idx, &b) in row.iter().rev().enumerate() {
                let j = idx as i64 + 1;
                let part = b + j - offset;
                if part < 0 {
                    return Err(Error::MalformedSymbol(format!(
                        "row {c} entry {b} recovers the negative part {part}"
                    )));
                }
                parts.push(part as usize);
            }
            if parts.last().is_some_and(|&p| p != 0) {
                return Err(Error::MalformedSymbol(format!(
                    "row {c} does not start at 0; the size h={} is too small for it",
                    self.h
                )));
            }
            components.push(Partition::new(parts).map_err(|e| Error::MalformedSymbol(e.to_string()))?);
        }
        Ok(Multipartition::new(components))
    }

    /// All entries of the symbol, sorted.
    pub fn entry_multiset(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Rows printed top to bottom as `B^{l-1}, …, B^0`, left aligned so that
/// aligned columns line up.
impl fmt::Display for ShiftedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|e| e.to_string().len()).max().unwrap_or(1);
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}
