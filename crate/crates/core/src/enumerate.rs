//! Deterministic enumeration of partitions and multipartitions.

use itertools::Itertools;

use crate::partition::{Charge, Multipartition, Partition};
use crate::regularization::is_cylindric;

/// Partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()).expect("generated parts are weakly decreasing"));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Weak compositions of `n` into `l` parts, lexicographically increasing.
pub fn compositions(l: usize, n: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(l - 1, n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `l`-partitions of `n`, each exactly once, in the crate's enumeration
/// order (see [`Multipartition`]'s `Ord`).
pub fn multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l > 0, "level must be positive");
    let tables: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    for comp in compositions(l, n) {
        let choices = comp.iter().map(|&k| tables[k].iter().cloned());
        for combo in choices.multi_cartesian_product() {
            out.push(Multipartition::new(combo));
        }
    }
    out
}

/// Cylindric `l`-partitions of `n` for the charge `s`, in enumeration order.
pub fn cylindric(s: &Charge, n: usize) -> Vec<Multipartition> {
    multipartitions(s.level(), n)
        .into_iter()
        .filter(|mp| is_cylindric(mp, s).expect("levels agree by construction"))
        .collect()
}
