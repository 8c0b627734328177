//! Cylindric multipartitions and the column-sorting regularization.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::partition::{Charge, Multipartition};
use crate::symbol::{min_size, ShiftedSymbol};

/// `λ^c_i ≥ λ^{c+1}_{i + s_{c+1} − s_c}` for all `c < l−1` and `i ≥ 1`.
pub fn is_cylindric(mp: &Multipartition, s: &Charge) -> Result<bool> {
    s.check_level(mp)?;
    let l = mp.level();
    Ok((0..l.saturating_sub(1)).all(|c| {
        let shift = (s.get(c + 1) - s.get(c)) as usize;
        let upper = mp.component(c + 1);
        let lower = mp.component(c);
        // Past the height of λ^{c+1} the right-hand side is zero.
        (1..=upper.height()).all(|i| lower.part(i) >= upper.part(i + shift))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularizationResult {
    pub regularized: Multipartition,
    pub r_total: u64,
    /// `(j₁, c₁) ↦ R(λ)_{(j₁,c₁)}`, zero entries omitted.
    pub r_local: BTreeMap<(usize, usize), u64>,
}

impl RegularizationResult {
    /// `[j1, c1, count]` triples in lexicographic order.
    pub fn r_local_triples(&self) -> Vec<[u64; 3]> {
        self.r_local.iter().map(|(&(j, c), &n)| [j as u64, c as u64, n]).collect()
    }
}

impl Serialize for RegularizationResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RegularizationResult", 3)?;
        st.serialize_field("regularized", &self.regularized)?;
        st.serialize_field("r_total", &self.r_total)?;
        st.serialize_field("r_local", &self.r_local_triples())?;
        st.end()
    }
}

/// Sorts every aligned column of `sym` so that entries weakly decrease as
/// the component index grows.
pub fn sort_columns(sym: &ShiftedSymbol) -> ShiftedSymbol {
    let mut rows: Vec<Vec<i64>> = sym.rows().to_vec();
    for i in 1..=sym.width() {
        let column = sym.column(i).expect("index within width");
        let mut values: Vec<i64> = column.iter().map(|&(_, e)| e).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        // column() lists components from l-1 down to c(i); the lowest gets the largest.
        for (&(c, _), &value) in column.iter().rev().zip(&values) {
            let j = i as i64 + sym.column_shift(c);
            let len = rows[c].len();
            rows[c][len - j as usize] = value;
        }
    }
    ShiftedSymbol::from_rows(sym.charge().clone(), sym.h(), rows)
        .expect("column sorting yields a valid standard symbol")
}

/// `R(λ)` and its local contributions, read off the unsorted symbol.
pub fn r_statistic(sym: &ShiftedSymbol) -> BTreeMap<(usize, usize), u64> {
    let s = sym.charge();
    let l = sym.level();
    let mut local = BTreeMap::new();
    for c1 in 0..l {
        for j1 in 1..=sym.row(c1).len() as i64 {
            let value = sym.entry(c1, j1).expect("index within row");
            let count = (c1 + 1..l)
                .filter(|&c| match sym.entry(c, j1 + s.get(c) - s.get(c1)) {
                    Some(above) => value < above && !sym.row_contains(c, value),
                    None => false,
                })
                .count() as u64;
            if count > 0 {
                local.insert((j1 as usize, c1), count);
            }
        }
    }
    local
}

pub fn regularize(mp: &Multipartition, s: &Charge) -> Result<RegularizationResult> {
    regularize_at(mp, s, min_size(mp, s))
}

/// Regularization computed on the symbol of size `h`; the result does not
/// depend on `h`.
pub fn regularize_at(mp: &Multipartition, s: &Charge, h: usize) -> Result<RegularizationResult> {
    let sym = ShiftedSymbol::build(mp, s, h)?;
    let regularized = sort_columns(&sym).to_multipartition()?;
    let r_local = r_statistic(&sym);
    let r_total = r_local.values().sum();
    Ok(RegularizationResult { regularized, r_total, r_local })
}
