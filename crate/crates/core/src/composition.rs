//! Exponent vectors `c = (c_1, ..., c_n)` and their multiset form `v`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Exponents of `γ_1, ..., γ_n`. Index 0 holds `c_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition(entries)
    }

    /// From the multiset `v`, with `n` classes.
    pub fn from_v(n: usize, v: &[usize]) -> Result<Self> {
        let mut c = vec![0; n];
        for &k in v {
            if k == 0 || k > n {
                return Err(Error::VOutOfRange(v.iter().map(|&x| x as i64).collect()));
            }
            c[k - 1] += 1;
        }
        Ok(Composition(c))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `c_k` for `1 <= k <= n`; zero outside that range.
    pub fn get(&self, k: usize) -> usize {
        k.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// Sorted multiset `1^{c_1} 2^{c_2} ...`.
    pub fn to_v(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c))
            .collect()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn check_total(&self, expected: usize) -> Result<()> {
        if self.total() != expected {
            return Err(Error::CompositionMismatch { expected, found: self.total() });
        }
        Ok(())
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All weak compositions of `total` into `parts` nonnegative parts, in
/// reverse lexicographic order (largest first entry first).
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Prefix sums dominate the index: `c_1 + ... + c_j >= j` for every `j`.
pub fn is_lopsided(c: &[usize]) -> bool {
    c.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .enumerate()
        .all(|(j, s)| s > j)
}

/// Support is an integer interval.
pub fn is_contiguous(v: &[usize]) -> bool {
    let supp: BTreeSet<usize> = v.iter().copied().collect();
    match (supp.first(), supp.last()) {
        (Some(&a), Some(&b)) => b - a + 1 == supp.len(),
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 2), vec![vec![0, 0]]);
        assert_eq!(compositions(2, 0).len(), 0);
        assert!(compositions(4, 3).iter().all(|c| c.iter().sum::<usize>() == 4));
    }

    #[test]
    fn v_round_trip() {
        let c = Composition::new(vec![2, 0, 1]);
        assert_eq!(c.to_v(), vec![1, 1, 3]);
        assert_eq!(Composition::from_v(3, &[3, 1, 1]).unwrap(), c);
        assert!(Composition::from_v(3, &[4]).is_err());
        assert_eq!(c.get(3), 1);
        assert_eq!(c.get(0), 0);
    }

    #[test]
    fn lopsided_and_contiguous() {
        assert!(is_lopsided(&[2, 1, 0]));
        assert!(is_lopsided(&[1, 1, 1]));
        assert!(!is_lopsided(&[0, 3, 0]));
        assert!(is_contiguous(&[1, 2, 2]));
        assert!(!is_contiguous(&[1, 3]));
    }
}
