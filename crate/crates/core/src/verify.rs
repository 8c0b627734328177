//! Exhaustive checks of the regularization theorem and its two lemmas.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::canonical::{peel, BasisStore, DecompositionMatrix};
use crate::dominance::dominance_compare;
use crate::enumerate::{cylindric, multipartitions};
use crate::error::Result;
use crate::fock::f_action_on_basis;
use crate::laurent::LaurentPolynomial;
use crate::partition::{Charge, Multipartition};
use crate::regularization::{is_cylindric, regularize, RegularizationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `d_{λ,μ} ≠ 0` although `μ ⋭ λ^R`.
    OutsideDominance,
    /// `d_{λ,λ^R} ≠ v^{R(λ)}`.
    LeadingCoefficient,
    /// `d_{λ,λ^R}(1) ≠ 1`.
    EvaluatedLeading,
    /// Lemma: `μ ⋭ λ^R`, or equality without `μ⁻ = ν^R`.
    ArrowDominance,
    /// Lemma: arrow coefficient differs from `v^{R(μ) − R(μ⁻)}`.
    ArrowCoefficient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub lambda: Multipartition,
    pub mu: Multipartition,
    pub found: LaurentPolynomial,
    pub expected: Option<LaurentPolynomial>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub charge: Charge,
    pub n: usize,
    pub rows: usize,
    pub columns: usize,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
    /// Non-cylindric `λ` with `R(λ) = 0`; informational only.
    pub r_zero_non_cylindric: Vec<Multipartition>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub charge: Charge,
    pub n: usize,
    pub dominance_instances: usize,
    pub coefficient_instances: usize,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl LemmaReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d_{λ,μ} = 0` unless `μ ⊵ λ^R`, `d_{λ,λ^R} = v^{R(λ)}`, and the
/// same statements after evaluation at `v = 1`, for every `l`-partition `λ`
/// and cylindric `μ` of rank `n`.
pub fn verify_regularization_theorem(store: &BasisStore, s: &Charge, n: usize) -> Result<TheoremReport> {
    let start = Instant::now();
    let matrix = DecompositionMatrix::from_basis(&*store.basis(s, n)?);
    let evaluated = matrix.evaluated();
    let mut violations = Vec::new();
    let mut r_zero_non_cylindric = Vec::new();
    let mut pairs_checked = 0;

    for (r, lambda) in matrix.rows.iter().enumerate() {
        let reg = regularize(lambda, s)?;
        if reg.r_total == 0 && !is_cylindric(lambda, s)? {
            r_zero_non_cylindric.push(lambda.clone());
        }
        for (k, mu) in matrix.columns.iter().enumerate() {
            pairs_checked += 1;
            let d = &matrix.entries[r][k];
            let value = &evaluated[r][k];
            if mu == &reg.regularized {
                let expected = LaurentPolynomial::monomial(reg.r_total as i64);
                if d != &expected {
                    violations.push(Violation {
                        kind: ViolationKind::LeadingCoefficient,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        found: d.clone(),
                        expected: Some(expected),
                    });
                }
                if value != &BigInt::from(1) {
                    violations.push(Violation {
                        kind: ViolationKind::EvaluatedLeading,
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        found: LaurentPolynomial::term(0, value.clone()),
                        expected: Some(LaurentPolynomial::one()),
                    });
                }
            } else if !dominance_compare(mu, &reg.regularized)?.dominates() && (!d.is_zero() || value != &BigInt::ZERO) {
                violations.push(Violation {
                    kind: ViolationKind::OutsideDominance,
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    found: d.clone(),
                    expected: Some(LaurentPolynomial::zero()),
                });
            }
        }
    }

    Ok(TheoremReport {
        charge: s.clone(),
        n,
        rows: matrix.rows.len(),
        columns: matrix.columns.len(),
        pairs_checked,
        violations,
        r_zero_non_cylindric,
        elapsed: start.elapsed(),
    })
}

struct RegCache<'a> {
    s: &'a Charge,
    cache: HashMap<Multipartition, RegularizationResult>,
}

impl RegCache<'_> {
    fn get(&mut self, mp: &Multipartition) -> Result<&RegularizationResult> {
        if !self.cache.contains_key(mp) {
            let res = regularize(mp, self.s)?;
            self.cache.insert(mp.clone(), res);
        }
        Ok(&self.cache[mp])
    }
}

/// Instances at rank exactly `n` of the two lemmas behind the theorem.
///
/// Dominance lemma: for cylindric `μ` with peel step `μ⁻ →^{j:k} μ` and any
/// `ν` with `ν →^{j:k} λ` and `μ⁻ ⊵ ν^R`, we have `μ ⊵ λ^R`, with equality
/// only if `μ⁻ = ν^R`.
///
/// Coefficient lemma: for cylindric `λ` with peel step `(λ⁻, j, k)`, every
/// `μ⁻ →^{j:k} μ` with `μ^R = λ` and `(μ⁻)^R = λ⁻` has arrow coefficient
/// `v^{R(μ) − R(μ⁻)}`.
pub fn verify_lemmas(s: &Charge, n: usize) -> Result<LemmaReport> {
    let start = Instant::now();
    let mut regs = RegCache { s, cache: HashMap::new() };
    let mut violations = Vec::new();
    let mut dominance_instances = 0;
    let mut coefficient_instances = 0;

    for mu in cylindric(s, n).iter().filter(|m| !m.is_empty()) {
        let step = peel(mu, s)?;
        for nu in multipartitions(s.level(), n - step.r) {
            let nu_reg = regs.get(&nu)?.regularized.clone();
            if !dominance_compare(&step.result, &nu_reg)?.dominates() {
                continue;
            }
            for (lambda, _) in f_action_on_basis(&nu, s, step.j_charged, step.r)? {
                dominance_instances += 1;
                let lambda_reg = regs.get(&lambda)?.regularized.clone();
                let ord = dominance_compare(mu, &lambda_reg)?;
                let equality_ok = lambda_reg != *mu || nu_reg == step.result;
                if !ord.dominates() || !equality_ok {
                    violations.push(Violation {
                        kind: ViolationKind::ArrowDominance,
                        lambda,
                        mu: mu.clone(),
                        found: LaurentPolynomial::zero(),
                        expected: None,
                    });
                }
            }
        }
    }

    for lambda in cylindric(s, n).iter().filter(|m| !m.is_empty()) {
        let step = peel(lambda, s)?;
        for mu_minus in multipartitions(s.level(), n - step.r) {
            let mu_minus_reg = regs.get(&mu_minus)?.clone();
            if mu_minus_reg.regularized != step.result {
                continue;
            }
            for (mu, exponent) in f_action_on_basis(&mu_minus, s, step.j_charged, step.r)? {
                let mu_reg = regs.get(&mu)?.clone();
                if mu_reg.regularized != *lambda {
                    continue;
                }
                coefficient_instances += 1;
                let expected = mu_reg.r_total as i64 - mu_minus_reg.r_total as i64;
                if exponent != expected {
                    violations.push(Violation {
                        kind: ViolationKind::ArrowCoefficient,
                        lambda: mu_minus.clone(),
                        mu,
                        found: LaurentPolynomial::monomial(exponent),
                        expected: Some(LaurentPolynomial::monomial(expected)),
                    });
                }
            }
        }
    }

    Ok(LemmaReport {
        charge: s.clone(),
        n,
        dominance_instances,
        coefficient_instances,
        violations,
        elapsed: start.elapsed(),
    })
}
