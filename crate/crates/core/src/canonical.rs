//! Canonical bases of the highest-weight submodule generated by the empty
//! multipartition, computed rank by rank with the LLT recursion.
//!
//! For a cylindric `λ` the peel step produces `(λ⁻, j, r)` with
//! `f_j^{(r)} λ⁻ ∋ λ`. The vector `c_λ = f_j^{(r)} b_{λ⁻}` is bar invariant and
//! unitriangular; subtracting bar-invariant multiples of already known `b_ν`
//! (greatest offending `ν` first) leaves every off-diagonal coefficient in
//! `vZ[v]`, which characterizes `b_λ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::dominance::{dominance_compare, ExtensionKey, LinearExtension};
use crate::enumerate::{cylindric, multipartitions};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPolynomial;
use crate::partition::{Charge, Multipartition};
use crate::regularization::is_cylindric;
use crate::symbol::{min_size, ShiftedSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    /// First nonempty component `c(λ)`.
    pub c: usize,
    /// Entry index `i(λ)` in row `c`.
    pub i: usize,
    /// Size of the symbol the absolute entry refers to.
    pub h: usize,
    /// Entry value `j(λ)` at size `h`.
    pub j_abs: i64,
    /// Operator index `j(λ) − h`.
    pub j_charged: i64,
    /// Multiplicity `r(λ)`.
    pub r: usize,
    /// `λ⁻`.
    pub result: Multipartition,
}

pub fn peel(mp: &Multipartition, s: &Charge) -> Result<PeelStep> {
    peel_at(mp, s, min_size(mp, s))
}

/// Peel step read off the symbol of size `h`.
pub fn peel_at(mp: &Multipartition, s: &Charge, h: usize) -> Result<PeelStep> {
    if !is_cylindric(mp, s)? {
        return Err(Error::NotCylindric(mp.to_string()));
    }
    let c = mp.components().iter().position(|p| !p.is_empty()).ok_or(Error::EmptyPeel)?;
    let sym = ShiftedSymbol::build(mp, s, h)?;
    let len = sym.row(c).len() as i64;
    let i = (1..len)
        .find(|&i| sym.entry(c, i).unwrap() > sym.entry(c, i + 1).unwrap() + 1)
        .ok_or_else(|| Error::Internal(format!("no gap in row {c} of the symbol of {mp}")))?;
    let j_abs = sym.entry(c, i).unwrap();

    let mut rows = sym.rows().to_vec();
    let mut r = 0;
    for (d, row) in rows.iter_mut().enumerate().skip(c) {
        let idx = i + s.get(d) - s.get(c);
        if sym.entry(d, idx) != Some(j_abs) {
            break;
        }
        if sym.row_contains(d, j_abs - 1) {
            return Err(Error::Internal(format!("peeling {mp} collides in row {d}")));
        }
        let pos = row.len() - idx as usize;
        row[pos] = j_abs - 1;
        r += 1;
    }
    let result = ShiftedSymbol::from_rows(s.clone(), h, rows)?.to_multipartition()?;
    Ok(PeelStep { c, i: i as usize, h, j_abs, j_charged: j_abs - h as i64, r, result })
}

/// Peel steps from `mp` down to the empty multipartition.
pub fn peel_chain(mp: &Multipartition, s: &Charge) -> Result<Vec<PeelStep>> {
    let mut chain = Vec::new();
    let mut current = mp.clone();
    while !current.is_empty() {
        let step = peel(&current, s)?;
        current = step.result.clone();
        chain.push(step);
    }
    Ok(chain)
}

/// `a_λ = f_{j_1}^{(a_1)} ⋯ f_{j_m}^{(a_m)} · ∅` along the peel chain of `λ`.
pub fn a_monomial(mp: &Multipartition, s: &Charge) -> Result<FockVector> {
    let chain = peel_chain(mp, s)?;
    let mut v = FockVector::vacuum(s.clone());
    for step in chain.iter().rev() {
        v = v.apply_f(step.j_charged, step.r)?;
    }
    Ok(v)
}

/// How `b_λ` was obtained: the peel step and the bar-invariant corrections
/// `α_{ν,λ}` subtracted, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDerivation {
    pub peel: PeelStep,
    pub corrections: Vec<(Multipartition, LaurentPolynomial)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    charge: Charge,
    n: usize,
    columns: Vec<Multipartition>,
    entries: BTreeMap<Multipartition, FockVector>,
    derivations: BTreeMap<Multipartition, BasisDerivation>,
}

impl CanonicalBasis {
    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cylindric multipartitions of rank `n`, in enumeration order.
    pub fn columns(&self) -> &[Multipartition] {
        &self.columns
    }

    pub fn get(&self, lambda: &Multipartition) -> Option<&FockVector> {
        self.entries.get(lambda)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Multipartition, &FockVector)> {
        self.columns.iter().map(|c| (c, &self.entries[c]))
    }

    /// Empty for rank 0.
    pub fn derivation(&self, lambda: &Multipartition) -> Option<&BasisDerivation> {
        self.derivations.get(lambda)
    }

    /// `d_{μ,λ}(v)`.
    pub fn coefficient(&self, mu: &Multipartition, lambda: &Multipartition) -> LaurentPolynomial {
        self.entries.get(lambda).map(|b| b.coefficient(mu)).unwrap_or_default()
    }
}

impl Serialize for CanonicalBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Element<'a> {
            label: &'a Multipartition,
            vector: &'a FockVector,
        }
        let elements: Vec<Element> = self.entries().map(|(label, vector)| Element { label, vector }).collect();
        let mut st = serializer.serialize_struct("CanonicalBasis", 3)?;
        st.serialize_field("charge", &self.charge)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("basis", &elements)?;
        st.end()
    }
}

type Cell = Arc<OnceLock<Result<Arc<CanonicalBasis>>>>;

/// Memo of canonical bases keyed by `(charge, rank)`.
///
/// Each rank is computed once; concurrent callers asking for the same
/// `(charge, rank)` block on a single computation and then share the
/// immutable result.
#[derive(Debug, Default)]
pub struct BasisStore {
    order: LinearExtension,
    cells: Mutex<HashMap<(Charge, usize), Cell>>,
}

impl BasisStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_order(order: LinearExtension) -> Self {
        Self { order, cells: Mutex::default() }
    }

    pub fn order(&self) -> LinearExtension {
        self.order
    }

    pub fn basis(&self, s: &Charge, n: usize) -> Result<Arc<CanonicalBasis>> {
        let cell = {
            let mut cells = self.cells.lock().expect("store lock poisoned");
            cells.entry((s.clone(), n)).or_default().clone()
        };
        cell.get_or_init(|| self.compute(s, n).map(Arc::new)).clone()
    }

    fn compute(&self, s: &Charge, n: usize) -> Result<CanonicalBasis> {
        let columns = cylindric(s, n);
        let key_of = |m: &Multipartition| -> ExtensionKey { self.order.sort_key(m, n) };

        let mut ascending: Vec<(ExtensionKey, Multipartition)> =
            columns.iter().map(|m| (key_of(m), m.clone())).collect();
        ascending.sort();

        let mut entries: BTreeMap<Multipartition, FockVector> = BTreeMap::new();
        let mut derivations = BTreeMap::new();
        if n == 0 {
            let empty = Multipartition::empty(s.level());
            entries.insert(empty, FockVector::vacuum(s.clone()));
            return Ok(CanonicalBasis { charge: s.clone(), n, columns, entries, derivations });
        }

        for (lambda_key, lambda) in &ascending {
            let step = peel(lambda, s)?;
            let lower = self.basis(s, n - step.r)?;
            let seed = lower
                .get(&step.result)
                .ok_or_else(|| Error::Internal(format!("{} missing from rank {}", step.result, n - step.r)))?;
            let mut c = seed.apply_f(step.j_charged, step.r)?;
            if !c.get(lambda).is_some_and(LaurentPolynomial::is_one) {
                return Err(Error::Internal(format!("coefficient of {lambda} in c_λ is not 1")));
            }

            let dominated = ascending.iter().filter(|(k, _)| k < lambda_key).count();
            let mut corrections = Vec::new();
            loop {
                let offending = c
                    .terms()
                    .filter(|(mu, p)| *mu != lambda && !p.in_v_z_v())
                    .map(|(mu, p)| (key_of(mu), mu.clone(), p.clone()))
                    .max_by(|a, b| a.0.cmp(&b.0));
                let Some((nu_key, nu, p)) = offending else { break };
                if nu_key >= *lambda_key || !is_cylindric(&nu, s)? {
                    return Err(Error::Internal(format!(
                        "offending coefficient at {nu} cannot be corrected while computing b_{lambda}"
                    )));
                }
                if corrections.len() >= dominated {
                    return Err(Error::Internal(format!("correction loop for {lambda} does not terminate")));
                }
                let alpha = p.alpha_extract();
                c.sub_scaled(&entries[&nu], &alpha);
                corrections.push((nu, alpha));
            }
            derivations.insert(lambda.clone(), BasisDerivation { peel: step, corrections });
            entries.insert(lambda.clone(), c);
        }

        Ok(CanonicalBasis { charge: s.clone(), n, columns, entries, derivations })
    }
}

pub fn canonical_basis(s: &Charge, n: usize) -> Result<Arc<CanonicalBasis>> {
    BasisStore::new().basis(s, n)
}

/// `d_{λ,μ}(v)` for all `l`-partitions `λ` (rows) and cylindric `μ`
/// (columns) of rank `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub charge: Charge,
    pub n: usize,
    pub rows: Vec<Multipartition>,
    pub columns: Vec<Multipartition>,
    pub entries: Vec<Vec<LaurentPolynomial>>,
}

impl DecompositionMatrix {
    pub fn from_basis(basis: &CanonicalBasis) -> Self {
        let rows = multipartitions(basis.charge.level(), basis.n);
        let columns = basis.columns.clone();
        let entries = rows
            .iter()
            .map(|row| columns.iter().map(|col| basis.coefficient(row, col)).collect())
            .collect();
        Self { charge: basis.charge.clone(), n: basis.n, rows, columns, entries }
    }

    pub fn row_index(&self, mp: &Multipartition) -> Option<usize> {
        self.rows.binary_search(mp).ok()
    }

    pub fn column_index(&self, mp: &Multipartition) -> Option<usize> {
        self.columns.binary_search(mp).ok()
    }

    /// Entry-wise evaluation at `v = 1`.
    pub fn evaluated(&self) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|row| row.iter().map(LaurentPolynomial::evaluate_at_one).collect()).collect()
    }

    /// Unitriangularity: `d_{μ,μ} = 1` and `d_{λ,μ} = 0` unless `μ ⊵ λ`.
    pub fn is_unitriangular(&self) -> bool {
        self.columns.iter().enumerate().all(|(k, col)| {
            self.rows.iter().zip(&self.entries).all(|(row, entries)| {
                let d = &entries[k];
                if row == col {
                    d.is_one()
                } else {
                    d.is_zero() || dominance_compare(col, row).map(|o| o.dominates()).unwrap_or(false)
                }
            })
        })
    }

    pub fn to_json(&self, evaluate: bool) -> serde_json::Value {
        let entries = if evaluate {
            serde_json::Value::Array(
                self.evaluated()
                    .iter()
                    .map(|row| serde_json::Value::Array(row.iter().map(integer_value).collect()))
                    .collect(),
            )
        } else {
            serde_json::to_value(&self.entries).expect("matrix serializes")
        };
        serde_json::json!({
            "charge": self.charge,
            "n": self.n,
            "evaluated": evaluate,
            "columns": self.columns,
            "rows": self.rows,
            "entries": entries,
        })
    }

    /// A `tabular` with one row per multipartition; zeros printed as `.`.
    pub fn to_latex(&self, evaluate: bool) -> String {
        let values = self.evaluated();
        let mut out = String::new();
        out.push_str(&format!("\\begin{{tabular}}{{l|{}}}\n", "c".repeat(self.columns.len())));
        let header: Vec<String> = self.columns.iter().map(latex_label).collect();
        out.push_str(&format!(" & {} \\\\\n\\hline\n", header.join(" & ")));
        for (r, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = (0..self.columns.len())
                .map(|k| {
                    if evaluate {
                        let x = &values[r][k];
                        if x == &BigInt::ZERO { ".".to_string() } else { x.to_string() }
                    } else {
                        latex_poly(&self.entries[r][k])
                    }
                })
                .collect();
            out.push_str(&format!("{} & {} \\\\\n", latex_label(row), cells.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// A JSON number when it fits in `i64`, otherwise a decimal string.
fn integer_value(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => v.into(),
        None => x.to_string().into(),
    }
}

fn latex_label(mp: &Multipartition) -> String {
    let parts: Vec<String> = mp
        .components()
        .iter()
        .map(|p| {
            if p.is_empty() {
                "\\emptyset".to_string()
            } else {
                p.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    format!("$({})$", parts.join(","))
}

fn latex_poly(p: &LaurentPolynomial) -> String {
    if p.is_zero() {
        return ".".to_string();
    }
    let s = p.to_string();
    let s = brace_exponents(&s);
    format!("${s}$")
}

/// Wraps exponents in braces: `v^-1` → `v^{-1}`.
fn brace_exponents(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            out.push('{');
            if chars.peek() == Some(&'-') {
                out.push(chars.next().unwrap());
            }
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                out.push(chars.next().unwrap());
            }
            out.push('}');
        }
    }
    out
}

pub fn decomposition_matrix(s: &Charge, n: usize) -> Result<DecompositionMatrix> {
    Ok(DecompositionMatrix::from_basis(&*canonical_basis(s, n)?))
}
