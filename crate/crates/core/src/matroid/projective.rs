use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

use super::{Matroid, Provenance};

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Points of projective `dimension`-space over `F_q`, each normalized so its
/// first nonzero coordinate is 1, in lexicographic order.
fn points(dimension: usize, q: u64) -> Vec<Vec<u64>> {
    let len = dimension + 1;
    let mut out = Vec::new();
    let mut v = vec![0u64; len];
    loop {
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v.clone());
        }
        // Increment as a base-q counter, last coordinate fastest.
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
        }
    }
}

fn inverse_mod(a: u64, q: u64) -> u64 {
    // q is prime, so a^(q-2) is the inverse.
    let mut result = 1u64;
    let mut base = a % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    result
}

fn rank_mod(rows: &[&Vec<u64>], q: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| (*r).clone()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inverse_mod(m[rank][col], q);
        for x in m[rank].iter_mut() {
            *x = *x * inv % q;
        }
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + q * q - f * p % q) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(super) fn build(dimension: usize, q: u64) -> Result<Matroid> {
    if !is_prime(q) {
        return Err(Error::NonPrimeQ(q));
    }
    if dimension == 0 {
        return Err(Error::RankOutOfRange { rank: 1, size: 1 });
    }
    let count = (q.checked_pow(dimension as u32 + 1).unwrap_or(u64::MAX) - 1) / (q - 1);
    if count > MAX_ELEMENTS as u64 {
        return Err(Error::TooManyElements(count as usize));
    }
    let pts = points(dimension, q);
    debug_assert_eq!(pts.len() as u64, count);
    let rank_fn = |s: ElementSet| {
        let rows: Vec<&Vec<u64>> = s.iter().map(|i| &pts[i]).collect();
        rank_mod(&rows, q)
    };
    Matroid::from_rank_oracle(pts.len(), rank_fn, Provenance::ProjectiveGeometry { dimension, q })
}
