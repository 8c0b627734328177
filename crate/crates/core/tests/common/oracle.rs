//! Brute-force canonical basis built only from the defining data.
//!
//! Nothing here calls into the library: multipartitions are plain nested
//! vectors, symbols are bead sets at one fixed large size, divided powers are
//! obtained by applying single-row moves `r` times and dividing exactly by
//! the quantum factorial, and the basis is extracted from the expanded
//! a-monomials by eliminating non-`vZ[v]` coefficients top-down.

use std::collections::{BTreeMap, BTreeSet};

pub type Mp = Vec<Vec<usize>>;
pub type Poly = BTreeMap<i64, i128>;
pub type Vector = BTreeMap<Mp, Poly>;

/// Symbol size used throughout; large enough for every rank the oracle is
/// asked about.
const H: i64 = 24;

fn normalize(p: &mut Poly) {
    p.retain(|_, c| *c != 0);
}

fn poly_add_scaled(acc: &mut Poly, p: &Poly, q: &Poly, sign: i128) {
    for (&e1, &c1) in p {
        for (&e2, &c2) in q {
            *acc.entry(e1 + e2).or_insert(0) += sign * c1 * c2;
        }
    }
    normalize(acc);
}

fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    poly_add_scaled(&mut out, p, q, 1);
    out
}

/// Exact division; panics if `q` does not divide `p`.
fn poly_div(p: &Poly, q: &Poly) -> Poly {
    let mut rem = p.clone();
    let mut quot = Poly::new();
    let (&qe, &qc) = q.iter().next_back().expect("nonzero divisor");
    let floor = p.keys().next().copied().unwrap_or(0) - q.keys().next().copied().unwrap_or(0);
    while let Some((&re, &rc)) = rem.iter().next_back() {
        assert!(rc % qc == 0 && re - qe >= floor, "inexact division");
        let t: Poly = [(re - qe, rc / qc)].into();
        quot.insert(re - qe, rc / qc);
        poly_add_scaled(&mut rem, &t, q, -1);
    }
    quot
}

fn quantum_integer(k: i64) -> Poly {
    (0..k).map(|t| (k - 1 - 2 * t, 1)).collect()
}

fn quantum_factorial(r: usize) -> Poly {
    (1..=r as i64).fold([(0, 1)].into(), |acc, k| poly_mul(&acc, &quantum_integer(k)))
}

pub fn in_v_z_v(p: &Poly) -> bool {
    p.keys().all(|&e| e > 0)
}

/// Bar-invariant part cancelling the non-positive exponents of `p`.
fn bar_part(p: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e, &c) in p.range(..=0) {
        *out.entry(e).or_insert(0) += c;
        if e != 0 {
            *out.entry(-e).or_insert(0) += c;
        }
    }
    normalize(&mut out);
    out
}

fn rank(mp: &Mp) -> usize {
    mp.iter().flatten().sum()
}

fn beads(mp: &Mp, s: &[i64]) -> Vec<BTreeSet<i64>> {
    mp.iter()
        .zip(s)
        .map(|(parts, &sc)| {
            let len = H + sc;
            (1..=len)
                .map(|j| parts.get(j as usize - 1).copied().unwrap_or(0) as i64 - j + H + sc)
                .collect()
        })
        .collect()
}

fn from_beads(rows: &[BTreeSet<i64>], s: &[i64]) -> Mp {
    rows.iter()
        .zip(s)
        .map(|(row, &sc)| {
            let parts: Vec<usize> = row
                .iter()
                .rev()
                .enumerate()
                .map(|(idx, &b)| {
                    let part = b + idx as i64 + 1 - H - sc;
                    assert!(part >= 0);
                    part as usize
                })
                .filter(|&p| p > 0)
                .collect();
            parts
        })
        .collect()
}

/// Single `f_j` on a basis vector: every row holding `j+H-1` but not `j+H`.
fn f_once(mp: &Mp, s: &[i64], j: i64) -> Vec<(Mp, i64)> {
    let src = beads(mp, s);
    let (lo, hi) = (j + H - 1, j + H);
    let mut out = Vec::new();
    for c in 0..src.len() {
        if !src[c].contains(&lo) || src[c].contains(&hi) {
            continue;
        }
        let mut dst = src.clone();
        dst[c].remove(&lo);
        dst[c].insert(hi);
        let kept = (0..=c).filter(|&d| dst[d].contains(&lo)).count() as i64;
        let blocked = (0..=c).filter(|&d| src[d].contains(&hi)).count() as i64;
        out.push((from_beads(&dst, s), kept - blocked));
    }
    out
}

fn f_vector(v: &Vector, s: &[i64], j: i64) -> Vector {
    let mut out = Vector::new();
    for (mp, p) in v {
        for (target, e) in f_once(mp, s, j) {
            let entry = out.entry(target).or_default();
            poly_add_scaled(entry, p, &[(e, 1)].into(), 1);
        }
    }
    out.retain(|_, p| !p.is_empty());
    out
}

pub fn divided_power(v: &Vector, s: &[i64], j: i64, r: usize) -> Vector {
    let mut w = v.clone();
    for _ in 0..r {
        w = f_vector(&w, s, j);
    }
    let fact = quantum_factorial(r);
    w.into_iter().map(|(mp, p)| (mp, poly_div(&p, &fact))).collect()
}

pub fn is_cylindric(mp: &Mp, s: &[i64]) -> bool {
    let part = |c: usize, i: i64| -> usize {
        if i < 1 {
            usize::MAX
        } else {
            mp[c].get(i as usize - 1).copied().unwrap_or(0)
        }
    };
    (0..mp.len() - 1).all(|c| {
        let shift = s[c + 1] - s[c];
        (1..=rank(mp) as i64 + 1).all(|i| {
            let upper = part(c + 1, i + shift);
            upper == usize::MAX || mp[c].get(i as usize - 1).copied().unwrap_or(0) >= upper
        })
    })
}

/// `(λ⁻, j, r)` for a nonempty cylindric `λ`.
fn peel(mp: &Mp, s: &[i64]) -> (Mp, i64, usize) {
    let rows = beads(mp, s);
    let c = mp.iter().position(|p| !p.is_empty()).expect("nonempty");
    // B^c_i, counted from the largest entry.
    let entry = |d: usize, i: i64| -> Option<i64> {
        if i < 1 {
            return None;
        }
        rows[d].iter().rev().nth(i as usize - 1).copied()
    };
    let i = (1..)
        .find(|&i| entry(c, i).unwrap() > entry(c, i + 1).unwrap() + 1)
        .unwrap();
    let j_abs = entry(c, i).unwrap();
    let mut new_rows = rows.clone();
    let mut r = 0;
    for d in c..mp.len() {
        if entry(d, i + s[d] - s[c]) != Some(j_abs) {
            break;
        }
        new_rows[d].remove(&j_abs);
        assert!(new_rows[d].insert(j_abs - 1));
        r += 1;
    }
    (from_beads(&new_rows, s), j_abs - H, r)
}

pub fn a_monomial(mp: &Mp, s: &[i64]) -> Vector {
    let mut steps = Vec::new();
    let mut cur = mp.clone();
    while rank(&cur) > 0 {
        let (next, j, r) = peel(&cur, s);
        steps.push((j, r));
        cur = next;
    }
    let mut v: Vector = [(vec![Vec::new(); s.len()], [(0, 1)].into())].into();
    for &(j, r) in steps.iter().rev() {
        v = divided_power(&v, s, j, r);
    }
    v
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn multipartitions(l: usize, n: usize) -> Vec<Mp> {
    if l == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for head in partitions(k, k) {
            for mut tail in multipartitions(l - 1, n - k) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

fn dominates(a: &Mp, b: &Mp) -> bool {
    let depth = rank(a).max(rank(b)) + 1;
    let (mut sa, mut sb) = (0i64, 0i64);
    for c in 0..a.len() {
        for j in 0..depth {
            sa += a[c].get(j).copied().unwrap_or(0) as i64;
            sb += b[c].get(j).copied().unwrap_or(0) as i64;
            if sa < sb {
                return false;
            }
        }
    }
    true
}

/// `b_λ` for every cylindric `λ ⊢ n`, each written out in the standard
/// basis.
pub fn canonical_basis(s: &[i64], n: usize) -> BTreeMap<Mp, Vector> {
    let mut cyl: Vec<Mp> = multipartitions(s.len(), n).into_iter().filter(|m| is_cylindric(m, s)).collect();
    // Topological order: anything dominated comes first.
    let mut ordered = Vec::new();
    while !cyl.is_empty() {
        let pos = (0..cyl.len())
            .find(|&k| (0..cyl.len()).all(|o| o == k || !dominates(&cyl[k], &cyl[o]) || cyl[k] == cyl[o]))
            .expect("dominance is acyclic");
        ordered.push(cyl.remove(pos));
    }

    let mut basis: BTreeMap<Mp, Vector> = BTreeMap::new();
    for lambda in &ordered {
        let mut x = a_monomial(lambda, s);
        assert_eq!(x.get(lambda), Some(&[(0, 1)].into()), "a-monomial is not unitriangular");
        // Greatest first; correcting ν only disturbs coefficients below ν.
        for nu in ordered.iter().rev() {
            if nu == lambda || !dominates(lambda, nu) {
                continue;
            }
            let Some(p) = x.get(nu) else { continue };
            if in_v_z_v(p) {
                continue;
            }
            let gamma = bar_part(p);
            for (mu, q) in &basis[nu] {
                let entry = x.entry(mu.clone()).or_default();
                poly_add_scaled(entry, &gamma, q, -1);
            }
            x.retain(|_, q| !q.is_empty());
        }
        for (mu, p) in &x {
            assert!(mu == lambda || in_v_z_v(p), "coefficient of {mu:?} in b_{lambda:?} is not in vZ[v]");
        }
        basis.insert(lambda.clone(), x);
    }
    basis
}
