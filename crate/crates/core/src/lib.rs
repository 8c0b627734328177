//! Exact combinatorics of multipartitions, shifted symbols and canonical
//! bases of level-`l` Fock spaces for `U_v(sl_∞)`.
//!
//! The main entry points are [`regularize`], which sends a multipartition to
//! the cylindric multipartition obtained by sorting the columns of its
//! symbol together with the statistic `R(λ)`, and [`BasisStore`], which
//! computes canonical bases (v-decomposition matrices) rank by rank.

pub mod canonical;
pub mod dominance;
pub mod enumerate;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod partition;
pub mod regularization;
pub mod symbol;
pub mod verify;

pub use canonical::{
    a_monomial, canonical_basis, decomposition_matrix, peel, peel_chain, BasisStore, CanonicalBasis,
    DecompositionMatrix, PeelStep,
};
pub use dominance::{dominance_compare, partial_sum_key, Dominance, LinearExtension};
pub use error::{Error, Result};
pub use fock::{admissible_rows, f_action_on_basis, f_action_on_basis_at, move_coefficient, FockVector};
pub use laurent::LaurentPolynomial;
pub use partition::{Charge, Multipartition, Partition};
pub use regularization::{is_cylindric, regularize, regularize_at, RegularizationResult};
pub use symbol::ShiftedSymbol;
pub use verify::{verify_lemmas, verify_regularization_theorem, LemmaReport, TheoremReport};
