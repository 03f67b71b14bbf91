//! Classical counting numbers used as closed forms and oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Signed-argument binomial, zero when `k < 0` or `k > n`.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

/// `r! / (c_1! ... c_m!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    parts.iter().fold(factorial(total), |acc, &c| acc / factorial(c))
}

/// Eulerian number: permutations of `n` letters with `k` descents.
pub fn eulerian(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = k as usize;
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < row.len() {
                *slot += &row[j] * (j + 1);
            }
            if j >= 1 && j - 1 < row.len() {
                *slot += &row[j - 1] * (m - j);
            }
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// `(k)_q = 1 + q + ... + q^{k-1}`.
pub fn q_integer(k: usize, q: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut p = BigRational::one();
    for _ in 0..k {
        acc += &p;
        p *= q;
    }
    acc
}

/// `(r)_q! = (1)_q (2)_q ... (r)_q`.
pub fn q_factorial(r: usize, q: &BigRational) -> BigRational {
    (1..=r).fold(BigRational::one(), |acc, k| acc * q_integer(k, q))
}

/// Advance to the next permutation in lexicographic order.
/// Returns `false` (leaving the slice sorted) after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = next_permutation(&mut next).then_some(next);
        Some(out)
    })
}

/// Positions `i` with `w[i] > w[i + 1]`.
pub fn descent_set(w: &[usize]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 6), BigInt::zero());
        assert_eq!(multinomial(&[2, 1, 0]), BigInt::from(3));
        let q = BigRational::from_integer(2.into());
        assert_eq!(q_integer(3, &q), BigRational::from_integer(7.into()));
        assert_eq!(q_factorial(3, &q), BigRational::from_integer(21.into()));
    }

    #[test]
    fn eulerian_matches_descent_count() {
        for n in 0..=6 {
            let mut counts = vec![0u64; n.max(1)];
            for w in permutations(n) {
                counts[descent_set(&w).len()] += 1;
            }
            for (k, &c) in counts.iter().enumerate() {
                assert_eq!(eulerian(n, k as i64), BigInt::from(c), "A({n},{k})");
            }
        }
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(0).count(), 1);
    }
}
