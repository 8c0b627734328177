//! Exhaustive property checks shared by the property suite and the
//! acceptance runner. Each returns the number of instances checked, or a
//! description of the first failure.

use fockreg::enumerate::{cylindric, multipartitions};
use fockreg::symbol::min_size;
use fockreg::{
    dominance_compare, f_action_on_basis_at, is_cylindric, regularize, regularize_at, BasisStore, Charge, Dominance,
    FockVector, LaurentPolynomial, LinearExtension, Multipartition, ShiftedSymbol,
};

pub type Check = Result<usize, String>;

pub fn charge(v: &[i64]) -> Charge {
    Charge::new(v.to_vec()).unwrap()
}

/// Operator indices that can act on some multipartition of rank `≤ n`.
pub fn operator_range(s: &Charge, n: usize) -> std::ops::RangeInclusive<i64> {
    -(n as i64) - 2..=n as i64 + s.max_entry() + 2
}

pub fn r_is_size_independent(mp: &Multipartition, s: &Charge) -> Check {
    let base = regularize(mp, s).map_err(|e| e.to_string())?;
    let min = min_size(mp, s);
    for h in [min, min + 1, min + 5] {
        let other = regularize_at(mp, s, h).map_err(|e| e.to_string())?;
        if other != base {
            return Err(format!("R({mp}) at s={s} changes at h={h}"));
        }
    }
    Ok(1)
}

pub fn f_is_size_independent(mp: &Multipartition, s: &Charge, j: i64, r: usize) -> Check {
    let min = min_size(mp, s) + 1;
    let mut reference: Option<Vec<(Multipartition, i64)>> = None;
    for h in [min, min + 1, min + 4] {
        let mut got = f_action_on_basis_at(mp, s, j, r, h).map_err(|e| e.to_string())?;
        got.sort();
        match &reference {
            None => reference = Some(got),
            Some(want) if *want != got => {
                return Err(format!("f_{j}^({r}) on {mp} at s={s} changes at h={h}"));
            }
            Some(_) => {}
        }
    }
    // The vector action agrees with the basis action read at a large size.
    let vector = FockVector::basis(s.clone(), mp.clone())
        .and_then(|b| b.apply_f(j, r))
        .map_err(|e| e.to_string())?;
    let mut expected = FockVector::zero(s.clone());
    for (target, e) in reference.unwrap_or_default() {
        expected.add_term(target, &LaurentPolynomial::monomial(e)).map_err(|e| e.to_string())?;
    }
    if r > 0 && vector != expected {
        return Err(format!("apply_f disagrees with the basis action for f_{j}^({r}) on {mp}"));
    }
    Ok(1)
}

pub fn regularization_laws(mp: &Multipartition, s: &Charge) -> Check {
    let res = regularize(mp, s).map_err(|e| e.to_string())?;
    let reg = &res.regularized;
    let fail = |what: &str| Err(format!("{what} fails for {mp} at s={s}"));
    if reg.rank() != mp.rank() {
        return fail("rank preservation");
    }
    if !is_cylindric(reg, s).map_err(|e| e.to_string())? {
        return fail("cylindricity of the regularization");
    }
    let again = regularize(reg, s).map_err(|e| e.to_string())?;
    if again.regularized != *reg || again.r_total != 0 {
        return fail("idempotence");
    }
    if !dominance_compare(reg, mp).map_err(|e| e.to_string())?.dominates() {
        return fail("λ^R ⊵ λ");
    }
    let h = min_size(mp, s).max(min_size(reg, s));
    let a = ShiftedSymbol::build(mp, s, h).map_err(|e| e.to_string())?;
    let b = ShiftedSymbol::build(reg, s, h).map_err(|e| e.to_string())?;
    if a.entry_multiset() != b.entry_multiset() {
        return fail("symbol multiset conservation");
    }
    if is_cylindric(mp, s).map_err(|e| e.to_string())? && (reg != mp || res.r_total != 0) {
        return fail("fixed points on cylindric input");
    }
    Ok(1)
}

pub fn dominance_axioms(l: usize, n: usize) -> Check {
    let all = multipartitions(l, n);
    let cmp = |a: &Multipartition, b: &Multipartition| dominance_compare(a, b).unwrap();
    let mut count = 0;
    for a in &all {
        if cmp(a, a) != Dominance::Equal {
            return Err(format!("reflexivity fails at {a}"));
        }
        for b in &all {
            let ab = cmp(a, b);
            let ba = cmp(b, a);
            let consistent = match ab {
                Dominance::Greater => ba == Dominance::Less,
                Dominance::Less => ba == Dominance::Greater,
                Dominance::Equal => ba == Dominance::Equal && a == b,
                Dominance::Incomparable => ba == Dominance::Incomparable,
            };
            if !consistent {
                return Err(format!("antisymmetry fails at {a} vs {b}"));
            }
            if ab != Dominance::Greater {
                continue;
            }
            for c in &all {
                count += 1;
                if cmp(b, c).dominates() && !cmp(a, c).dominates() {
                    return Err(format!("transitivity fails at {a} ⊵ {b} ⊵ {c}"));
                }
            }
        }
    }
    Ok(count)
}

pub fn order_independence(s: &Charge, max_n: usize) -> Check {
    let first = BasisStore::with_order(LinearExtension::PartialSumKey);
    let second = BasisStore::with_order(LinearExtension::KeySumReverseTiebreak);
    for n in 0..=max_n {
        let a = first.basis(s, n).map_err(|e| e.to_string())?;
        let b = second.basis(s, n).map_err(|e| e.to_string())?;
        for lambda in a.columns() {
            if a.get(lambda) != b.get(lambda) {
                return Err(format!("b_{lambda} depends on the linear extension at s={s}"));
            }
        }
    }
    Ok(max_n + 1)
}

pub fn level_one_identity(s: i64, max_n: usize) -> Check {
    let s = charge(&[s]);
    let store = BasisStore::new();
    for n in 0..=max_n {
        let basis = store.basis(&s, n).map_err(|e| e.to_string())?;
        if basis.columns().len() != multipartitions(1, n).len() {
            return Err(format!("not every partition of {n} is cylindric at level one"));
        }
        for (lambda, b) in basis.entries() {
            if b.len() != 1 || !b.coefficient(lambda).is_one() {
                return Err(format!("b_{lambda} is not the basis vector itself"));
            }
        }
    }
    Ok(max_n + 1)
}

/// Every coefficient is an integer Laurent polynomial of the expected shape:
/// `1` on the diagonal, `vZ[v]` elsewhere, and every correction subtracted
/// on the way is bar invariant.
pub fn integrality(store: &BasisStore, s: &Charge, n: usize) -> Check {
    let basis = store.basis(s, n).map_err(|e| e.to_string())?;
    let mut count = 0;
    for (lambda, b) in basis.entries() {
        for (mu, p) in b.terms() {
            count += 1;
            let ok = if mu == lambda { p.is_one() } else { p.in_v_z_v() };
            if !ok {
                return Err(format!("d_({mu},{lambda}) = {p} at s={s}"));
            }
        }
        if let Some(d) = basis.derivation(lambda) {
            if let Some((nu, a)) = d.corrections.iter().find(|(_, a)| !a.is_bar_invariant()) {
                return Err(format!("correction {a} at {nu} for b_{lambda} is not bar invariant"));
            }
        }
    }
    Ok(count)
}

pub fn all_multipartitions(levels: &[Charge], max_n: usize) -> Vec<(Charge, Multipartition)> {
    let mut out = Vec::new();
    for s in levels {
        for n in 0..=max_n {
            out.extend(multipartitions(s.level(), n).into_iter().map(|m| (s.clone(), m)));
        }
    }
    out
}

pub fn cylindric_count(s: &Charge, n: usize) -> usize {
    cylindric(s, n).len()
}
