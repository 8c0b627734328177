//! The level-`l` Fock space and the divided-power action of `f_j`.
//!
//! Operator indices are charged: `f_j` moves a symbol entry `j + h − 1` to
//! `j + h`, so the index does not depend on the size `h` of the symbol.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use itertools::Itertools;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::partition::{Charge, Multipartition};
use crate::symbol::{common_size, min_size, ShiftedSymbol};

/// A single-row move `j + h − 1 ↦ j + h` in component `row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub row: usize,
    pub operator_index: i64,
}

impl Move {
    /// Entry value moved at size `h`.
    pub fn source_entry(&self, h: usize) -> i64 {
        self.operator_index + h as i64 - 1
    }

    pub fn applies_to(&self, sym: &ShiftedSymbol) -> bool {
        let from = self.source_entry(sym.h());
        sym.row_contains(self.row, from) && !sym.row_contains(self.row, from + 1)
    }
}

fn admissible_in(sym: &ShiftedSymbol, j: i64) -> Vec<usize> {
    (0..sym.level())
        .filter(|&row| Move { row, operator_index: j }.applies_to(sym))
        .collect()
}

/// Components where `f_j` can act on `mp`, ascending.
pub fn admissible_rows(mp: &Multipartition, s: &Charge, j: i64) -> Result<Vec<usize>> {
    let sym = ShiftedSymbol::build(mp, s, min_size(mp, s) + 1)?;
    Ok(admissible_in(&sym, j))
}

/// `N_j = Σ_{c_i ∈ rows} (#{d ≤ c_i : j+h−1 ∈ B(dst)^d} − #{d ≤ c_i : j+h ∈ B(src)^d})`.
fn n_coefficient(src: &ShiftedSymbol, dst: &ShiftedSymbol, j: i64, rows: &[usize]) -> i64 {
    let lo = j + src.h() as i64 - 1;
    let hi = lo + 1;
    rows.iter()
        .map(|&ci| {
            let kept = (0..=ci).filter(|&d| dst.row_contains(d, lo)).count() as i64;
            let blocked = (0..=ci).filter(|&d| src.row_contains(d, hi)).count() as i64;
            kept - blocked
        })
        .sum()
}

fn apply_moves(sym: &ShiftedSymbol, j: i64, rows: &[usize]) -> ShiftedSymbol {
    let from = j + sym.h() as i64 - 1;
    let mut new_rows = sym.rows().to_vec();
    for &c in rows {
        let pos = new_rows[c].binary_search(&from).expect("move is admissible");
        // from + 1 is absent, so replacing in place keeps the row sorted.
        new_rows[c][pos] = from + 1;
    }
    ShiftedSymbol::from_rows(sym.charge().clone(), sym.h(), new_rows).expect("moves keep rows strictly increasing")
}

/// Exponent of `v` for the move `src → dst` performed at `rows`.
pub fn move_coefficient(
    src: &Multipartition,
    dst: &Multipartition,
    s: &Charge,
    j: i64,
    rows: &[usize],
) -> Result<i64> {
    let h = common_size([src, dst], s);
    let src_sym = ShiftedSymbol::build(src, s, h)?;
    let dst_sym = ShiftedSymbol::build(dst, s, h)?;
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.last().is_some_and(|&c| c >= s.level()) {
        return Err(Error::InconsistentMove(format!("invalid row set {rows:?}")));
    }
    let admissible = admissible_in(&src_sym, j);
    if let Some(bad) = sorted.iter().find(|c| !admissible.contains(c)) {
        return Err(Error::InconsistentMove(format!("f_{j} cannot act on row {bad} of {src}")));
    }
    if apply_moves(&src_sym, j, &sorted) != dst_sym {
        return Err(Error::InconsistentMove(format!("{dst} is not obtained from {src} by f_{j} at rows {rows:?}")));
    }
    Ok(n_coefficient(&src_sym, &dst_sym, j, rows))
}

/// `f_j^{(r)} · mp` as `(target, exponent)` pairs, one per `r`-subset of
/// admissible rows.
pub fn f_action_on_basis(mp: &Multipartition, s: &Charge, j: i64, r: usize) -> Result<Vec<(Multipartition, i64)>> {
    // One extra unit of size keeps every target representable.
    f_action_on_basis_at(mp, s, j, r, min_size(mp, s) + 1)
}

/// [`f_action_on_basis`] read off the symbol of size `h`, which must exceed
/// the minimal size by at least one.
pub fn f_action_on_basis_at(
    mp: &Multipartition,
    s: &Charge,
    j: i64,
    r: usize,
    h: usize,
) -> Result<Vec<(Multipartition, i64)>> {
    let min = min_size(mp, s) + 1;
    if h < min {
        return Err(Error::SizeTooSmall { h, min });
    }
    let sym = ShiftedSymbol::build(mp, s, h)?;
    let admissible = admissible_in(&sym, j);
    admissible
        .into_iter()
        .combinations(r)
        .map(|rows| {
            let target = apply_moves(&sym, j, &rows);
            let n = n_coefficient(&sym, &target, j, &rows);
            Ok((target.to_multipartition()?, n))
        })
        .collect()
}

/// Finite formal sum of multipartitions with Laurent coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    charge: Charge,
    terms: BTreeMap<Multipartition, LaurentPolynomial>,
}

impl FockVector {
    pub fn zero(charge: Charge) -> Self {
        Self { charge, terms: BTreeMap::new() }
    }

    pub fn basis(charge: Charge, mp: Multipartition) -> Result<Self> {
        charge.check_level(&mp)?;
        let mut v = Self::zero(charge);
        v.terms.insert(mp, LaurentPolynomial::one());
        Ok(v)
    }

    /// The highest-weight vector: the empty multipartition.
    pub fn vacuum(charge: Charge) -> Self {
        let l = charge.level();
        Self::basis(charge, Multipartition::empty(l)).expect("levels agree")
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in enumeration order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn get(&self, mp: &Multipartition) -> Option<&LaurentPolynomial> {
        self.terms.get(mp)
    }

    pub fn coefficient(&self, mp: &Multipartition) -> LaurentPolynomial {
        self.terms.get(mp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mp: Multipartition, poly: &LaurentPolynomial) -> Result<()> {
        self.charge.check_level(&mp)?;
        self.add_term_unchecked(mp, poly);
        Ok(())
    }

    fn add_term_unchecked(&mut self, mp: Multipartition, poly: &LaurentPolynomial) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(mp) {
            Entry::Vacant(slot) => {
                slot.insert(poly.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += poly;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &FockVector, factor: &LaurentPolynomial) {
        debug_assert_eq!(self.charge, other.charge);
        for (mp, p) in &other.terms {
            self.add_term_unchecked(mp.clone(), &(factor * p));
        }
    }

    /// `self −= factor · other`.
    pub fn sub_scaled(&mut self, other: &FockVector, factor: &LaurentPolynomial) {
        self.add_scaled(other, &-factor);
    }

    /// `f_j^{(r)}` extended linearly. `r = 0` is the identity.
    pub fn apply_f(&self, j: i64, r: usize) -> Result<FockVector> {
        if r == 0 {
            return Ok(self.clone());
        }
        let mut out = FockVector::zero(self.charge.clone());
        for (mp, p) in &self.terms {
            for (target, n) in f_action_on_basis(mp, &self.charge, j, r)? {
                out.add_term_unchecked(target, &p.shift(n));
            }
        }
        Ok(out)
    }
}

/// `[{"mp": [[…],…], "poly": [[exp, coef],…]}, …]` in enumeration order.
impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            mp: &'a Multipartition,
            poly: &'a LaurentPolynomial,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (mp, poly) in &self.terms {
            seq.serialize_element(&Term { mp, poly })?;
        }
        seq.end()
    }
}
