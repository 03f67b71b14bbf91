//! Perfect matroid designs and remixed Eulerian numbers.
//!
//! In a perfect matroid design every rank-`i` flat has the same size `n_i`.
//! Exponent vectors here are indexed by rank: `c = (c_1, ..., c_r)` stands
//! for `γ_{n_1}^{c_1} ⋯ γ_{n_r}^{c_r}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chow::{DegreeCache, WeightConvention};
use crate::classical::q_factorial;
use crate::composition::{compositions, is_lopsided, Composition};
use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::matroid::{projective_geometry, Matroid};

fn rat(x: usize) -> BigRational {
    BigRational::from_integer(x.into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmdProfile {
    /// `n_1 < ... < n_{r+1}`, with `n_{r+1} = |E|`.
    pub sizes: Vec<usize>,
    /// `N_i`: rank-`i` flats inside a fixed rank-`(i+1)` flat.
    pub covers: Vec<BigRational>,
    pub volume: BigRational,
}

impl PmdProfile {
    /// `r`, the number of free exponents.
    pub fn r(&self) -> usize {
        self.sizes.len() - 1
    }

    /// `n_i` for `0 <= i <= r + 1`, with `n_0 = 0`.
    pub fn n_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.sizes[i - 1]
        }
    }

    /// Places `c_i` at class index `n_i`.
    pub fn to_composition(&self, c: &[usize]) -> Result<Composition> {
        let r = self.r();
        if c.len() != r {
            return Err(Error::CompositionLength { expected: r, found: c.len() });
        }
        let n = self.sizes[r] - 1;
        let mut out = vec![0; n];
        for (i, &x) in c.iter().enumerate() {
            out[self.sizes[i] - 1] = x;
        }
        let out = Composition::new(out);
        out.check_total(r)?;
        Ok(out)
    }
}

pub fn pmd_profile(m: &Matroid) -> Result<PmdProfile> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    let r = m.chow_dimension();
    let mut sizes = Vec::with_capacity(r + 1);
    for k in 1..=r {
        let flats = m.flats_of_rank(k);
        let first = flats[0];
        if let Some(other) = flats.iter().find(|f| f.len() != first.len()) {
            return Err(Error::NotPmd { rank: k, a: first, b: *other });
        }
        sizes.push(first.len());
    }
    sizes.push(m.size());
    let n_at = |i: usize| if i == 0 { 0 } else { sizes[i - 1] };
    let covers: Vec<BigRational> = (1..=r)
        .map(|i| {
            (0..i).fold(BigRational::one(), |acc, j| {
                acc * rat(n_at(i + 1) - n_at(j)) / rat(n_at(i) - n_at(j))
            })
        })
        .collect();
    let volume = (1..=r).fold(BigRational::one(), |acc, i| {
        acc * &covers[i - 1] * rat(n_at(i + 1) - n_at(i)) / rat(n_at(i + 1))
    });
    Ok(PmdProfile { sizes, covers, volume })
}

/// `V_M · n_1^{c_1} ⋯ n_r^{c_r}` for lopsided `c`.
pub fn lopsided_degree(m: &Matroid, c: &[usize]) -> Result<BigInt> {
    let p = pmd_profile(m)?;
    if !is_lopsided(c) || c.len() != p.r() {
        return Err(Error::NotLopsided(c.to_vec()));
    }
    p.to_composition(c)?;
    let value = c
        .iter()
        .enumerate()
        .fold(p.volume.clone(), |acc, (i, &e)| acc * rat(p.sizes[i].pow(e as u32)));
    assert!(value.is_integer(), "lopsided value {value} is not an integer");
    Ok(value.to_integer())
}

/// `deg(γ_{n_1}^2)`, `deg(γ_{n_1}γ_{n_2})`, `deg(γ_{n_2}^2)` for a rank-3
/// design.
pub fn rank3_closed_forms(p: &PmdProfile) -> Result<[BigRational; 3]> {
    if p.r() != 2 {
        return Err(Error::PreconditionViolation(format!("rank {} design, expected rank 3", p.r() + 1)));
    }
    let (n1, n2, e) = (rat(p.sizes[0]), rat(p.sizes[1]), rat(p.sizes[2]));
    let a = &e - &n1;
    let b = &e - &n2;
    Ok([&a * &b * &n1 / &n2, &a * &b, &b * &b])
}

/// Checks the three-term relation among `A_c`, `A_{c-e_i+e_{i+1}}` and
/// `A_{c-e_i+e_{i-1}}` (1-based `i`). Terms that fall off either end vanish.
pub fn pmd_recurrence_check(m: &Matroid, c: &[usize], i: usize) -> Result<bool> {
    let p = pmd_profile(m)?;
    let mut cache = DegreeCache::new(m, WeightConvention::Oi);
    pmd_recurrence_check_with(&mut cache, &p, c, i)
}

pub fn pmd_recurrence_check_with(
    cache: &mut DegreeCache<'_>,
    p: &PmdProfile,
    c: &[usize],
    i: usize,
) -> Result<bool> {
    let r = p.r();
    p.to_composition(c)?;
    if i == 0 || i > r || c[i - 1] < 2 {
        return Err(Error::PreconditionViolation(format!("c_{i} < 2 in {c:?}")));
    }
    // Multiset of class sizes, with the moved factor replaced by `size`.
    let mut v_of = |size: usize| -> Result<BigInt> {
        let mut v = Vec::with_capacity(r);
        for (j, &e) in c.iter().enumerate() {
            v.extend(std::iter::repeat_n(p.sizes[j] as i64, e));
        }
        let at = v.iter().position(|&k| k == p.sizes[i - 1] as i64).expect("c_i >= 2");
        v[at] = size as i64;
        cache.degree_of_v(&v)
    };
    let (lo, mid, hi) = (p.n_at(i - 1), p.n_at(i), p.n_at(i + 1));
    let a = v_of(mid)?;
    // γ_{n_{r+1}} = γ_{n+1} vanishes; `degree_of_v` handles both ends.
    let up = v_of(hi)?;
    let down = v_of(lo)?;
    Ok(BigInt::from(hi - lo) * a == BigInt::from(mid - lo) * up + BigInt::from(hi - mid) * down)
}

/// All `A_c(q)`, `c ∈ W_r`, from the defining relations.
pub fn remixed_table(r: usize, q: &BigRational) -> Result<BTreeMap<Vec<usize>, BigRational>> {
    if r == 0 {
        return Err(Error::RankTooSmall(r));
    }
    if !q.is_positive() {
        return Err(Error::PreconditionViolation(format!("q = {q} must be positive")));
    }
    let members = compositions(r, r);
    let index: BTreeMap<&Vec<usize>, usize> = members.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let unknowns = members.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut anchor = vec![BigRational::zero(); unknowns];
    anchor[index[&vec![1; r]]] = BigRational::one();
    rows.push(anchor);
    rhs.push(q_factorial(r, q));
    for c in &members {
        for i in 0..r {
            if c[i] < 2 {
                continue;
            }
            let mut row = vec![BigRational::zero(); unknowns];
            row[index[c]] = q + BigRational::one();
            let mut shifted = |to: Option<usize>, coeff: BigRational| {
                if let Some(j) = to.filter(|&j| j < r) {
                    let mut d = c.clone();
                    d[i] -= 1;
                    d[j] += 1;
                    row[index[&d]] -= coeff;
                }
            };
            shifted(i.checked_sub(1), q.clone());
            shifted(Some(i + 1), BigRational::one());
            rows.push(row);
            rhs.push(BigRational::zero());
        }
    }
    let values = solve_unique(rows, rhs, unknowns)?;
    Ok(members.into_iter().zip(values).collect())
}

pub fn remixed_eulerian_eval(r: usize, c: &[usize], q: &BigRational) -> Result<BigRational> {
    if c.len() != r {
        return Err(Error::CompositionLength { expected: r, found: c.len() });
    }
    let total: usize = c.iter().sum();
    if total != r {
        return Err(Error::CompositionMismatch { expected: r, found: total });
    }
    Ok(remixed_table(r, q)?.remove(c).expect("member of W_r"))
}

/// Residuals of the defining relations; all zero for a valid table.
pub fn remixed_residuals(r: usize, q: &BigRational, table: &BTreeMap<Vec<usize>, BigRational>) -> Vec<BigRational> {
    let get = |c: &Vec<usize>| table.get(c).cloned().unwrap_or_else(BigRational::zero);
    let mut out = vec![get(&vec![1; r]) - q_factorial(r, q)];
    for c in table.keys() {
        for i in 0..r {
            if c[i] < 2 {
                continue;
            }
            let moved = |j: Option<usize>| {
                j.filter(|&j| j < r).map_or_else(BigRational::zero, |j| {
                    let mut d = c.clone();
                    d[i] -= 1;
                    d[j] += 1;
                    get(&d)
                })
            };
            let lhs = (q + BigRational::one()) * get(c);
            out.push(lhs - q * moved(i.checked_sub(1)) - moved(Some(i + 1)));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgIdentity {
    pub lhs: BigInt,
    pub rhs: BigRational,
    pub holds: bool,
}

/// Compares `deg_{PG(r,q)}(γ_{n_1}^{c_1} ⋯ γ_{n_r}^{c_r})` with
/// `q^{C(r+1,2)} A_c(q)`.
pub fn pg_identity_check(r: usize, q: u64, c: &[usize]) -> Result<PgIdentity> {
    let m = projective_geometry(r, q)?;
    let p = pmd_profile(&m)?;
    let mut cache = DegreeCache::new(&m, WeightConvention::Oi);
    let qr = BigRational::from_integer(q.into());
    let table = remixed_table(r, &qr)?;
    pg_identity_with(&mut cache, &p, &table, q, c)
}

pub fn pg_identity_with(
    cache: &mut DegreeCache<'_>,
    p: &PmdProfile,
    table: &BTreeMap<Vec<usize>, BigRational>,
    q: u64,
    c: &[usize],
) -> Result<PgIdentity> {
    let r = p.r();
    let lhs = cache.degree(&p.to_composition(c)?)?;
    let scale = BigInt::from(q).pow((r * (r + 1) / 2) as u32);
    let rhs = BigRational::from_integer(scale) * &table[c];
    let holds = BigRational::from_integer(lhs.clone()) == rhs;
    Ok(PgIdentity { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::set_of;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn profiles() {
        let fano = projective_geometry(2, 2).unwrap();
        let p = pmd_profile(&fano).unwrap();
        assert_eq!(p.sizes, vec![1, 3, 7]);
        assert_eq!(p.covers, vec![q(3), q(7)]);
        assert_eq!(p.volume, q(8));
        assert_eq!(pmd_profile(&Matroid::boolean(5).unwrap()).unwrap().volume, q(1));
        let sp = Matroid::sparse_paving(3, 6, &[set_of(&[0, 1, 2]), set_of(&[3, 4, 5])]).unwrap();
        assert!(matches!(pmd_profile(&sp), Err(Error::NotPmd { rank: 2, .. })));
        assert_eq!(pmd_profile(&Matroid::uniform(1, 3).unwrap()), Err(Error::NotSimple));
    }

    #[test]
    fn lopsided_values() {
        let fano = projective_geometry(2, 2).unwrap();
        assert_eq!(lopsided_degree(&fano, &[2, 0]).unwrap(), BigInt::from(8));
        assert_eq!(lopsided_degree(&fano, &[1, 1]).unwrap(), BigInt::from(24));
        assert_eq!(lopsided_degree(&fano, &[0, 2]), Err(Error::NotLopsided(vec![0, 2])));
        let b = Matroid::boolean(4).unwrap();
        assert_eq!(lopsided_degree(&b, &[2, 1, 0]).unwrap(), BigInt::from(2));
    }

    #[test]
    fn rank3_forms_for_fano() {
        let p = pmd_profile(&projective_geometry(2, 2).unwrap()).unwrap();
        assert_eq!(rank3_closed_forms(&p).unwrap(), [q(8), q(24), q(16)]);
    }

    #[test]
    fn recurrence_examples() {
        let fano = projective_geometry(2, 2).unwrap();
        assert!(pmd_recurrence_check(&fano, &[2, 0], 1).unwrap());
        assert!(pmd_recurrence_check(&fano, &[0, 2], 2).unwrap());
        assert!(pmd_recurrence_check(&Matroid::boolean(4).unwrap(), &[3, 0, 0], 1).unwrap());
        assert!(pmd_recurrence_check(&fano, &[1, 1], 1).is_err());
    }

    #[test]
    fn remixed_small() {
        let t = remixed_table(2, &q(5)).unwrap();
        assert_eq!(t[&vec![1, 1]], q(6));
        assert_eq!(t[&vec![2, 0]], q(1));
        assert_eq!(t[&vec![0, 2]], q(5));
        assert_eq!(remixed_eulerian_eval(2, &[0, 2], &q(1)).unwrap(), q(1));
        assert!(remixed_residuals(3, &q(2), &remixed_table(3, &q(2)).unwrap()).iter().all(Zero::is_zero));
        assert!(remixed_table(2, &q(0)).is_err());
    }

    #[test]
    fn fano_identity() {
        for (c, lhs) in [([0, 2], 16), ([1, 1], 24), ([2, 0], 8)] {
            let id = pg_identity_check(2, 2, &c).unwrap();
            assert!(id.holds);
            assert_eq!(id.lhs, BigInt::from(lhs));
        }
        assert_eq!(pg_identity_check(2, 4, &[1, 1]), Err(Error::NonPrimeQ(4)));
    }
}
