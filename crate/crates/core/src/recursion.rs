//! Degree evaluators built from relations between matroids and their minors.
//!
//! Each evaluator applies one relation at the top level and evaluates the
//! resulting smaller degrees either by applying the relation again (when its
//! preconditions still hold) or by falling back to [`DegreeCache`]. They exist
//! to cross-check the flag expansion, not to be fast.
//!
//! Throughout, `C_{v,s}(M) = deg_M(γ_{v_1} ⋯ γ_{v_{r-s}} γ_n^s)`, and it is
//! zero as soon as some `v_i <= 0`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chow::{mult, oi, DegreeCache, WeightConvention};
use crate::composition::is_contiguous;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poly::Poly;
use crate::tutte::{tutte_polynomial, TutteMethod};

/// Support classification of a vector `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportClass {
    pub contiguous: bool,
    pub flatly_contiguous: bool,
    /// `[min v, max v]`, the tightest interval containing the support.
    pub interval: Option<(usize, usize)>,
}

pub fn classify_support(m: &Matroid, v: &[usize]) -> SupportClass {
    let interval = v.iter().min().zip(v.iter().max()).map(|(&a, &b)| (a, b));
    SupportClass {
        contiguous: is_contiguous(v),
        flatly_contiguous: is_flatly_contiguous(m, v),
        interval,
    }
}

/// Every proper flat size in `[min v, max v]` occurs in `v`.
///
/// The tightest interval is the only one worth testing: widening it can
/// only add flat sizes that must then be covered.
pub fn is_flatly_contiguous(m: &Matroid, v: &[usize]) -> bool {
    let supp: BTreeSet<usize> = v.iter().copied().collect();
    let (Some(&a), Some(&b)) = (supp.first(), supp.last()) else {
        return true;
    };
    m.proper_flat_sizes().range(a..=b).all(|s| supp.contains(s))
}

fn is_sorted(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

/// `R(v, k)`: drop the `k`-th entry (1-based).
fn remove_entry(v: &[i64], k: usize) -> Vec<i64> {
    let mut out = v.to_vec();
    out.remove(k - 1);
    out
}

fn signed(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// `C_{v,s}(M)` by the flag oracle.
pub fn c_vs(m: &Matroid, v: &[i64], s: usize) -> Result<BigInt> {
    if v.iter().any(|&x| x <= 0) {
        return Ok(BigInt::zero());
    }
    let mut full = v.to_vec();
    full.extend(std::iter::repeat_n(m.n() as i64, s));
    DegreeCache::new(m, WeightConvention::Oi).degree_of_v(&full)
}

fn weight_of(convention: WeightConvention, m: &Matroid, f: crate::ElementSet, k: usize) -> BigRational {
    match convention {
        WeightConvention::Oi => {
            let t = m.ground().largest(m.size() - k);
            BigRational::from_integer(oi(m.ground(), f, t).into())
        }
        WeightConvention::Mult => mult(m.size(), f.len(), k),
    }
}

fn to_integer(x: BigRational) -> BigInt {
    assert!(x.is_integer(), "relation produced the non-integer {x}");
    x.to_integer()
}

/// First index (1-based) whose value occurs at least twice in sorted `v`.
fn first_repeat(v: &[usize]) -> Option<usize> {
    v.windows(2).position(|w| w[0] == w[1]).map(|i| i + 1)
}

fn eulerian_applies(m: &Matroid, v: &[usize]) -> bool {
    v.len() == m.chow_dimension()
        && v.iter().all(|&x| x >= 1 && x <= m.n())
        && is_sorted(v)
        && is_flatly_contiguous(m, v)
        && first_repeat(v).is_some()
}

/// Expand a repeated factor `γ_{v_j}`; only flats of rank 1 and rank `r`
/// survive. Rank-1 flats shift the remaining indices by `|F|`, which is 1
/// for simple matroids.
pub fn eulerian_recursion_degree(
    m: &Matroid,
    v: &[usize],
    j: usize,
    convention: WeightConvention,
) -> Result<BigInt> {
    let r = m.chow_dimension();
    if v.len() != r {
        return Err(Error::CompositionMismatch { expected: r, found: v.len() });
    }
    if !eulerian_applies(m, v) {
        return Err(Error::PreconditionViolation(format!(
            "{v:?} must be sorted, flatly contiguous, within 1..={} and have a repeated entry",
            m.n()
        )));
    }
    if j == 0 || j > v.len() || v.iter().filter(|&&x| x == v[j - 1]).count() < 2 {
        return Err(Error::PreconditionViolation(format!("v_{j} is not a repeated entry of {v:?}")));
    }
    let k = v[j - 1];
    let rest = remove_entry(&signed(v), j);
    let mut total = BigRational::zero();
    for &f in m.flats_of_rank(1) {
        let w = weight_of(convention, m, f, k);
        if w.is_zero() {
            continue;
        }
        let (minor, _) = m.contraction(f)?;
        let shifted: Vec<i64> = rest.iter().map(|&x| x - f.len() as i64).collect();
        total += w * BigRational::from_integer(eulerian_eval(&minor, &shifted, convention)?);
    }
    for &f in m.flats_of_rank(r) {
        let w = weight_of(convention, m, f, k);
        if w.is_zero() {
            continue;
        }
        let (minor, _) = m.restriction(f)?;
        total += w * BigRational::from_integer(eulerian_eval(&minor, &rest, convention)?);
    }
    Ok(to_integer(total))
}

fn eulerian_eval(m: &Matroid, v: &[i64], convention: WeightConvention) -> Result<BigInt> {
    if v.iter().any(|&x| x <= 0) {
        return Ok(BigInt::zero());
    }
    let mut sorted: Vec<usize> = v.iter().map(|&x| x as usize).collect();
    sorted.sort_unstable();
    if eulerian_applies(m, &sorted) {
        let j = first_repeat(&sorted).unwrap();
        return eulerian_recursion_degree(m, &sorted, j, convention);
    }
    c_vs(m, v, 0)
}

fn delcon_applies(m: &Matroid, v: &[usize], s: usize) -> bool {
    m.rank() >= 3
        && v.len() + s == m.chow_dimension()
        && v.iter().all(|&x| x >= 1 && x <= m.n())
        && is_sorted(v)
        && is_contiguous(v)
        && (s == 0 || v.first() == Some(&1))
}

/// Deletion/contraction at element `i` for a contiguous sorted `v` with
/// `s` trailing factors `γ_n`.
pub fn deletion_contraction_degree(m: &Matroid, v: &[usize], s: usize, i: usize) -> Result<BigInt> {
    if m.rank() < 3 {
        return Err(Error::RankTooSmall(m.rank()));
    }
    let r = m.chow_dimension();
    if v.len() + s != r {
        return Err(Error::CompositionMismatch { expected: r, found: v.len() + s });
    }
    if !delcon_applies(m, v, s) {
        return Err(Error::PreconditionViolation(format!(
            "{v:?} must be contiguous, sorted, within 1..={}, and start at 1 when s > 0",
            m.n()
        )));
    }
    if i >= m.size() {
        return Err(Error::ElementOutOfRange { element: i, size: m.size() });
    }
    let deletion = m.deletion(i)?;
    let closed = m.closure(crate::ElementSet::singleton(i));
    let (contracted, _) = m.contraction(closed)?;
    let p = closed.len() as i64;
    let vs = signed(v);
    let mut total = BigInt::zero();
    if !deletion.coloop {
        total += delcon_eval(&deletion.matroid, &vs, s)?;
    } else if s > 0 {
        total += delcon_eval(&deletion.matroid, &vs, s - 1)?;
    }
    for k in 1..=v.len() {
        let mut w = remove_entry(&vs, k);
        for x in w.iter_mut().take(k - 1) {
            *x += 1;
        }
        for x in w.iter_mut() {
            *x -= p;
        }
        total += delcon_eval(&contracted, &w, s)?;
    }
    Ok(total)
}

fn delcon_eval(m: &Matroid, v: &[i64], s: usize) -> Result<BigInt> {
    if v.iter().any(|&x| x <= 0) {
        return Ok(BigInt::zero());
    }
    let mut sorted: Vec<usize> = v.iter().map(|&x| x as usize).collect();
    sorted.sort_unstable();
    if delcon_applies(m, &sorted, s) {
        return deletion_contraction_degree(m, &sorted, s, 0);
    }
    c_vs(m, v, s)
}

/// `deg(γ_v γ_w)` for a low block `v` and a high block `w`: expand `γ_{w_1}`
/// and keep only flats of rank `|v| + 1`.
///
/// Both blocks must be sorted and flatly contiguous with disjoint supports,
/// `1` must occur in `v`, and every proper flat larger than `w_1` must have
/// its size in `w`.
pub fn two_block_degree(m: &Matroid, v: &[usize], w: &[usize]) -> Result<BigInt> {
    let r = m.chow_dimension();
    if v.len() + w.len() != r {
        return Err(Error::CompositionMismatch { expected: r, found: v.len() + w.len() });
    }
    let fail = |why: &str| Err(Error::PreconditionViolation(format!("{v:?} | {w:?}: {why}")));
    if w.is_empty() || !v.contains(&1) {
        return fail("the low block must contain 1 and the high block must be nonempty");
    }
    if v.iter().chain(w).any(|&x| x == 0 || x > m.n()) {
        return fail("entries out of range");
    }
    if !is_sorted(v) || !is_sorted(w) || !is_flatly_contiguous(m, v) || !is_flatly_contiguous(m, w) {
        return fail("blocks must be sorted and flatly contiguous");
    }
    if v.iter().any(|x| w.contains(x)) {
        return fail("supports overlap");
    }
    let w1 = w[0];
    if m.proper_flats().any(|f| f.len() > w1 && !w.contains(&f.len())) {
        return fail("a proper flat above the high block's start has a size outside it");
    }
    let ell = v.len();
    let t = m.ground().largest(m.size() - w1);
    let vs = signed(v);
    let mut total = BigInt::zero();
    for &f in m.flats_of_rank(ell + 1) {
        let weight = oi(m.ground(), f, t);
        if weight == 0 {
            continue;
        }
        let (lower, _) = m.restriction(f)?;
        let (upper, _) = m.contraction(f)?;
        let high: Vec<i64> = w[1..].iter().map(|&x| x as i64 - f.len() as i64).collect();
        let below = c_vs(&lower, &vs, 0)?;
        if below.is_zero() {
            continue;
        }
        total += below * c_vs(&upper, &high, 0)? * weight;
    }
    Ok(total)
}

/// `C_v(M, y) = Σ_k C_{v + k·1}(M) y^k`.
pub fn cv_polynomial(m: &Matroid, v: &[usize]) -> Result<Poly> {
    let r = m.chow_dimension();
    if v.len() != r {
        return Err(Error::CompositionMismatch { expected: r, found: v.len() });
    }
    if v.contains(&0) {
        return Err(Error::VOutOfRange(signed(v)));
    }
    let mut cache = DegreeCache::new(m, WeightConvention::Oi);
    let top = v.iter().copied().max().unwrap_or(1);
    let mut coeffs = Vec::new();
    for k in 0.. {
        if top + k > m.n() && k > 0 {
            break;
        }
        let shifted: Vec<i64> = v.iter().map(|&x| (x + k) as i64).collect();
        coeffs.push(cache.degree_of_v(&shifted)?);
        if r == 0 {
            break;
        }
    }
    Ok(Poly::new(coeffs))
}

/// `C_{v,0}(M)` as a convolution of `T_M(1, y)` with Boolean degrees.
pub fn cv_via_tutte_convolution(m: &Matroid, v: &[usize]) -> Result<BigInt> {
    let r = m.chow_dimension();
    if v.len() != r {
        return Err(Error::CompositionMismatch { expected: r, found: v.len() });
    }
    if v.contains(&0) || !is_sorted(v) || !is_contiguous(v) {
        return Err(Error::PreconditionViolation(format!("{v:?} must be positive, sorted and contiguous")));
    }
    if r == 0 {
        return Ok(BigInt::one());
    }
    let t1 = tutte_polynomial(m, TutteMethod::CorankNullity).at_x(&BigInt::one());
    let boolean = Matroid::boolean(r + 1)?;
    let mut cache = DegreeCache::new(&boolean, WeightConvention::Oi);
    let mut total = BigInt::zero();
    for j in 0..v[0] {
        let c = t1.coeff(j);
        if c.is_zero() {
            continue;
        }
        let shifted: Vec<i64> = v.iter().map(|&x| x as i64 - j as i64).collect();
        let d = if shifted.iter().any(|&x| x <= 0) {
            BigInt::zero()
        } else {
            cache.degree_of_v(&shifted)?
        };
        total += c * d;
    }
    Ok(total)
}
