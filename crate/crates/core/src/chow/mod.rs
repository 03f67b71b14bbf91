//! Products of hypersimplex classes `γ_k` in the Chow ring of a matroid.
//!
//! Multiplying a flag monomial `x_{F_1} ⋯ x_{F_m}` by `γ_k` only touches the
//! gap `F_j ⊊ F_{j+1}` with `|F_j| < k < |F_{j+1}|`: it becomes a weighted sum
//! over flats `G` strictly inside that gap, and vanishes outright when `k` is
//! the size of some `F_j`. Repeating this for every factor turns a product of
//! `r` classes into a weighted sum of full flags, each of degree one.
//!
//! [`expand_gamma_product`] materializes that sum. [`DegreeCache`] computes
//! only its total, recursing on lattice intervals and memoizing.

mod linear;
mod trees;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::classical::multinomial;
use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

pub use linear::{gamma_class, lambda_class, LinearClass};
pub use trees::{enumerate_trees, tree_weight, PostnikovTree};

/// Which description of `γ_k` as a sum of flat variables to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WeightConvention {
    /// Integer over-intersection weights against the largest elements.
    #[default]
    Oi,
    /// Rational weights depending only on flat sizes.
    Mult,
}

impl FromStr for WeightConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "oi" => Ok(WeightConvention::Oi),
            "mult" => Ok(WeightConvention::Mult),
            other => Err(format!("unknown weight convention `{other}` (expected oi or mult)")),
        }
    }
}

impl fmt::Display for WeightConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightConvention::Oi => "oi",
            WeightConvention::Mult => "mult",
        })
    }
}

/// Over-intersection of `s` and `t` inside `u`.
pub fn oi(u: ElementSet, s: ElementSet, t: ElementSet) -> i64 {
    debug_assert!(s.is_subset(u) && t.is_subset(u));
    let excess = (s.len() + t.len()).saturating_sub(u.len());
    s.intersection(t).len() as i64 - excess as i64
}

/// `min(s, k) - k s / universe_size`.
pub fn mult(universe_size: usize, s: usize, k: usize) -> BigRational {
    let min = BigRational::from_integer(s.min(k).into());
    min - BigRational::new((k * s).into(), universe_size.into())
}

/// Coefficient of `x_G` when `γ_k` is multiplied into the gap `lower ⊊ upper`.
pub fn gap_weight(
    convention: WeightConvention,
    lower: ElementSet,
    upper: ElementSet,
    g: ElementSet,
    k: usize,
) -> BigRational {
    let u = upper.difference(lower);
    let s = g.difference(lower);
    match convention {
        WeightConvention::Oi => {
            let t = u.largest(upper.len() - k);
            BigRational::from_integer(oi(u, s, t).into())
        }
        WeightConvention::Mult => mult(u.len(), s.len(), k - lower.len()),
    }
}

/// A strictly increasing chain of proper nonempty flats.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagChain(pub Vec<ElementSet>);

impl FlagChain {
    pub fn flats(&self) -> &[ElementSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index `j` of the gap `F_j ⊆ k < F_{j+1}` (with `F_0 = ∅`), and whether
    /// `k` lands exactly on `|F_j|`.
    fn locate(&self, k: usize) -> (usize, bool) {
        let j = self.0.iter().take_while(|f| f.len() <= k).count();
        let on_flat = j > 0 && self.0[j - 1].len() == k;
        (j, on_flat)
    }
}

impl fmt::Display for FlagChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" < "))
    }
}

/// A linear combination of flag monomials with exact weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedFlagSum {
    pub terms: BTreeMap<FlagChain, BigRational>,
}

impl WeightedFlagSum {
    /// The unit class: the empty flag with weight one.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(FlagChain(Vec::new()), BigRational::one());
        WeightedFlagSum { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all weights. When every flag is full this is the degree.
    pub fn total(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, w| a + w)
    }
}

/// Flats strictly between two nested flats, cached per interval.
pub(crate) struct Intervals<'m> {
    matroid: &'m Matroid,
    cache: HashMap<(ElementSet, ElementSet), Rc<[ElementSet]>>,
}

impl<'m> Intervals<'m> {
    pub(crate) fn new(matroid: &'m Matroid) -> Self {
        Intervals { matroid, cache: HashMap::new() }
    }

    pub(crate) fn between(&mut self, lo: ElementSet, hi: ElementSet) -> Rc<[ElementSet]> {
        let m = self.matroid;
        self.cache
            .entry((lo, hi))
            .or_insert_with(|| {
                let a = m.flat_rank(lo).expect("lower end is a flat");
                let b = m.flat_rank(hi).expect("upper end is a flat");
                (a + 1..b)
                    .flat_map(|k| m.flats_of_rank(k).iter().copied())
                    .filter(|g| lo.is_proper_subset(*g) && g.is_proper_subset(hi))
                    .collect()
            })
            .clone()
    }
}

fn check_v(m: &Matroid, v: &[usize]) -> Result<()> {
    if v.len() > m.chow_dimension() || v.iter().any(|&k| k == 0 || k > m.n()) {
        return Err(Error::VOutOfRange(v.iter().map(|&k| k as i64).collect()));
    }
    Ok(())
}

/// Multiply every flag in `sum` by `γ_k`.
pub fn multiply_gamma(
    m: &Matroid,
    sum: &WeightedFlagSum,
    k: usize,
    convention: WeightConvention,
) -> WeightedFlagSum {
    let mut intervals = Intervals::new(m);
    multiply_gamma_with(&mut intervals, sum, k, convention)
}

fn multiply_gamma_with(
    intervals: &mut Intervals<'_>,
    sum: &WeightedFlagSum,
    k: usize,
    convention: WeightConvention,
) -> WeightedFlagSum {
    let ground = intervals.matroid.ground();
    let mut next: HashMap<FlagChain, BigRational> = HashMap::new();
    for (flag, w) in &sum.terms {
        let (j, on_flat) = flag.locate(k);
        if on_flat {
            continue;
        }
        let lo = if j == 0 { ElementSet::EMPTY } else { flag.0[j - 1] };
        let hi = flag.0.get(j).copied().unwrap_or(ground);
        for &g in intervals.between(lo, hi).iter() {
            let gw = gap_weight(convention, lo, hi, g, k);
            if gw.is_zero() {
                continue;
            }
            let mut flats = flag.0.clone();
            flats.insert(j, g);
            *next.entry(FlagChain(flats)).or_insert_with(BigRational::zero) += w * gw;
        }
    }
    WeightedFlagSum {
        terms: next.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
    }
}

/// Expand `γ_{v_1} ⋯ γ_{v_m}` into flag monomials, multiplying factors in the
/// given order.
pub fn expand_gamma_product(
    m: &Matroid,
    v: &[usize],
    convention: WeightConvention,
) -> Result<WeightedFlagSum> {
    check_v(m, v)?;
    let mut intervals = Intervals::new(m);
    let mut sum = WeightedFlagSum::one();
    for &k in v {
        sum = multiply_gamma_with(&mut intervals, &sum, k, convention);
    }
    Ok(sum)
}

/// Memoized degrees of `γ`-products on one matroid.
pub struct DegreeCache<'m> {
    intervals: Intervals<'m>,
    convention: WeightConvention,
    memo: HashMap<(ElementSet, ElementSet, Vec<u8>), BigRational>,
}

impl<'m> DegreeCache<'m> {
    pub fn new(matroid: &'m Matroid, convention: WeightConvention) -> Self {
        DegreeCache { intervals: Intervals::new(matroid), convention, memo: HashMap::new() }
    }

    pub fn matroid(&self) -> &'m Matroid {
        self.intervals.matroid
    }

    /// `deg(γ_1^{c_1} ⋯ γ_n^{c_n})`.
    pub fn degree(&mut self, c: &Composition) -> Result<BigInt> {
        let m = self.matroid();
        if c.n() != m.n() {
            return Err(Error::CompositionLength { expected: m.n(), found: c.n() });
        }
        c.check_total(m.chow_dimension())?;
        let v: Vec<i64> = c.to_v().into_iter().map(|k| k as i64).collect();
        self.degree_of_v(&v)
    }

    /// `deg(γ_{v_1} ⋯ γ_{v_r})`, with `γ_k = 0` for `k <= 0` or `k > n`.
    pub fn degree_of_v(&mut self, v: &[i64]) -> Result<BigInt> {
        let m = self.matroid();
        if v.len() != m.chow_dimension() {
            return Err(Error::CompositionMismatch { expected: m.chow_dimension(), found: v.len() });
        }
        if v.iter().any(|&k| k <= 0 || k > m.n() as i64) {
            return Ok(BigInt::zero());
        }
        let mut ks: Vec<u8> = v.iter().map(|&k| k as u8).collect();
        ks.sort_unstable();
        let d = self.interval_degree(ElementSet::EMPTY, m.ground(), &ks);
        assert!(d.is_integer(), "degree {d} is not an integer");
        Ok(d.to_integer())
    }

    /// Degree of `γ_{ks}` in the minor on the interval `[lo, hi]`, with `ks`
    /// sorted, in absolute sizes, and of the right count.
    fn interval_degree(&mut self, lo: ElementSet, hi: ElementSet, ks: &[u8]) -> BigRational {
        if ks.is_empty() {
            return BigRational::one();
        }
        let key = (lo, hi, ks.to_vec());
        if let Some(d) = self.memo.get(&key) {
            return d.clone();
        }
        let m = self.matroid();
        let (rlo, rhi) = (m.flat_rank(lo).unwrap(), m.flat_rank(hi).unwrap());
        let k = ks[0] as usize;
        let rest = &ks[1..];
        let mut total = BigRational::zero();
        for &g in self.intervals.between(lo, hi).iter() {
            let size = g.len() as u8;
            if rest.contains(&size) {
                continue;
            }
            let split = rest.partition_point(|&x| x < size);
            let rg = m.flat_rank(g).unwrap();
            if split != rg - rlo - 1 || rest.len() - split != rhi - rg - 1 {
                continue;
            }
            let w = gap_weight(self.convention, lo, hi, g, k);
            if w.is_zero() {
                continue;
            }
            let below = self.interval_degree(lo, g, &rest[..split]);
            if below.is_zero() {
                continue;
            }
            let above = self.interval_degree(g, hi, &rest[split..]);
            total += w * below * above;
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `A_c(M) = deg_M(γ_1^{c_1} ⋯ γ_n^{c_n})`.
pub fn mixed_eulerian_degree(m: &Matroid, c: &Composition, convention: WeightConvention) -> Result<BigInt> {
    DegreeCache::new(m, convention).degree(c)
}

/// Degree of `(γ_1 + ⋯ + γ_n)^r`.
pub fn pvol(m: &Matroid) -> BigInt {
    let mut cache = DegreeCache::new(m, WeightConvention::Oi);
    compositions(m.chow_dimension(), m.n())
        .into_iter()
        .map(|c| {
            let coef = multinomial(&c);
            coef * cache.degree(&Composition::new(c)).expect("valid composition")
        })
        .sum()
}

/// Flags `F_1 ⊊ ⋯ ⊊ F_k` with `rk F_i = i` and
/// `min F_1 > min F_2 > ⋯ > min F_k > min E`.
pub fn count_initial_descending_flags(m: &Matroid, k: usize) -> BigInt {
    fn extend(m: &Matroid, f: ElementSet, rank: usize, remaining: usize) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        let low = f.min_element().unwrap();
        m.flats_of_rank(rank + 1)
            .iter()
            .filter(|g| f.is_subset(**g) && g.min_element().unwrap() < low && g.min_element().unwrap() > 0)
            .map(|&g| extend(m, g, rank + 1, remaining - 1))
            .sum()
    }
    if k == 0 {
        return BigInt::one();
    }
    m.flats_of_rank(1)
        .iter()
        .filter(|f| f.min_element().unwrap() > 0)
        .map(|&f| extend(m, f, 1, k - 1))
        .sum()
}

/// The three degrees compared by the log-concavity inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogConcavity {
    pub ii: BigInt,
    pub jj: BigInt,
    pub ij: BigInt,
    pub holds: bool,
}

/// Compare `deg(γ^c γ_i²) · deg(γ^c γ_j²)` with `deg(γ^c γ_i γ_j)²`.
pub fn log_concavity_check(
    cache: &mut DegreeCache<'_>,
    c: &Composition,
    i: usize,
    j: usize,
) -> Result<LogConcavity> {
    let m = cache.matroid();
    let r = m.chow_dimension();
    if r < 2 {
        return Err(Error::RankTooSmall(m.rank()));
    }
    c.check_total(r - 2)?;
    if c.n() != m.n() {
        return Err(Error::CompositionLength { expected: m.n(), found: c.n() });
    }
    if !(1..=m.n()).contains(&i) || !(1..=m.n()).contains(&j) {
        return Err(Error::VOutOfRange(vec![i as i64, j as i64]));
    }
    let base: Vec<i64> = c.to_v().into_iter().map(|x| x as i64).collect();
    let with = |a: usize, b: usize| {
        let mut v = base.clone();
        v.push(a as i64);
        v.push(b as i64);
        v
    };
    let ii = cache.degree_of_v(&with(i, i))?;
    let jj = cache.degree_of_v(&with(j, j))?;
    let ij = cache.degree_of_v(&with(i, j))?;
    let holds = &ii * &jj <= &ij * &ij;
    Ok(LogConcavity { ii, jj, ij, holds })
}

/// Whether a rational is a nonnegative integer.
pub fn is_nonnegative_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}
