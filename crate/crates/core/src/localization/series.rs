//! Constant terms of the per-permutation rational functions, computed by
//! direct series expansion.
//!
//! Each factor `1/(ξ_a - ξ_b)` is expanded with the smaller index as the
//! dominant variable, and `ξ_n = 0`. Only small `n` is intended.

use num_bigint::BigInt;

use crate::set::ElementSet;

/// Constant term of `Π ξ_{w(i)}^{c_i} / Π (ξ_{w(i)} - ξ_{w(i+1)})`.
///
/// `c` may hold negative entries; `w` must be a permutation of `0..=n`.
pub fn constant_term(w: &[usize], c: &[i64]) -> BigInt {
    assert_eq!(w.len(), c.len(), "exponent vector length");
    let size = w.len();
    if size == 0 {
        return BigInt::from(0);
    }
    let n = size - 1;
    let mut base = vec![0i64; size];
    for (p, &x) in w.iter().enumerate() {
        base[x] = c[p];
    }
    // Factor i links w(i) and w(i+1).
    let factors: Vec<(usize, usize)> = (0..n)
        .map(|i| (w[i].min(w[i + 1]), w[i].max(w[i + 1])))
        .collect();
    let sign: i64 = if (0..n).filter(|&i| w[i] > w[i + 1]).count() % 2 == 0 { 1 } else { -1 };
    let mut ks = vec![0i64; n];
    let count = solutions(0, n, &base, &factors, &mut ks);
    BigInt::from(sign) * count
}

/// Number of exponent choices making every variable from `j` on vanish.
fn solutions(j: usize, n: usize, base: &[i64], factors: &[(usize, usize)], ks: &mut [i64]) -> u64 {
    if j > n {
        return 1;
    }
    let e = base[j]
        + factors
            .iter()
            .zip(ks.iter())
            .filter(|((_, hi), _)| *hi == j)
            .map(|(_, &k)| k)
            .sum::<i64>();
    let open: Vec<usize> = (0..factors.len()).filter(|&f| factors[f].0 == j).collect();
    if open.is_empty() {
        return if e == 0 { solutions(j + 1, n, base, factors, ks) } else { 0 };
    }
    let total = e - open.len() as i64;
    if total < 0 {
        return 0;
    }
    let mut count = 0;
    distribute(total, &open, 0, ks, &mut |ks| count += solutions(j + 1, n, base, factors, ks));
    count
}

fn distribute(left: i64, open: &[usize], at: usize, ks: &mut [i64], f: &mut dyn FnMut(&mut [i64])) {
    if at + 1 == open.len() {
        ks[open[at]] = left;
        f(ks);
        return;
    }
    for k in 0..=left {
        ks[open[at]] = k;
        distribute(left - k, open, at + 1, ks, f);
    }
}

/// `{i < n : c_0 + ... + c_i < i + 1}`.
pub fn prefix_deficit_set(c: &[i64]) -> ElementSet {
    let n = c.len().saturating_sub(1);
    let mut out = ElementSet::EMPTY;
    let mut acc = 0;
    for (i, &x) in c.iter().take(n).enumerate() {
        acc += x;
        if acc < i as i64 + 1 {
            out.insert(i);
        }
    }
    out
}

/// Predicted constant term: `(-1)^des(w)` when the descent set of `w`
/// equals [`prefix_deficit_set`], zero otherwise.
pub fn descent_rule(w: &[usize], c: &[i64]) -> BigInt {
    let des: ElementSet = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
    if des != prefix_deficit_set(c) {
        return BigInt::from(0);
    }
    BigInt::from(if des.len().is_multiple_of(2) { 1 } else { -1 })
}
