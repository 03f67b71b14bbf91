//! Tutte and characteristic polynomials.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::matroid::Matroid;
use crate::poly::{Poly, Poly2};
use crate::set::{subsets, ElementSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TutteMethod {
    /// `Σ_S (x-1)^{rk E - rk S} (y-1)^{|S| - rk S}` over all subsets.
    #[default]
    CorankNullity,
    /// Delete or contract the smallest non-coloop, memoized on minors.
    DeletionContraction,
}

impl FromStr for TutteMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "corank-nullity" => Ok(TutteMethod::CorankNullity),
            "deletion-contraction" | "delcon" => Ok(TutteMethod::DeletionContraction),
            other => Err(format!("unknown Tutte method `{other}`")),
        }
    }
}

pub fn tutte_polynomial(m: &Matroid, method: TutteMethod) -> Poly2 {
    match method {
        TutteMethod::CorankNullity => corank_nullity(m),
        TutteMethod::DeletionContraction => DelCon { m, memo: HashMap::new() }
            .eval(m.ground(), ElementSet::EMPTY),
    }
}

fn corank_nullity(m: &Matroid) -> Poly2 {
    let full = m.rank();
    let mut counts: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for s in subsets(m.ground()) {
        let r = m.rank_of(s);
        *counts.entry((full - r, s.len() - r)).or_default() += 1;
    }
    Poly2::from_shifted_counts(&counts)
}

/// Minors of `m` written as: contract the flat `c`, keep the elements `g`
/// (disjoint from `c`), delete the rest. Such a minor is loopless.
struct DelCon<'m> {
    m: &'m Matroid,
    memo: HashMap<(ElementSet, ElementSet), Poly2>,
}

impl DelCon<'_> {
    fn eval(&mut self, g: ElementSet, c: ElementSet) -> Poly2 {
        if g.is_empty() {
            return Poly2::one();
        }
        if let Some(p) = self.memo.get(&(g, c)) {
            return p.clone();
        }
        let m = self.m;
        let total = m.rank_of(g.union(c));
        let is_coloop = |i: usize| m.rank_of(g.without(i).union(c)) < total;
        let result = match g.iter().find(|&i| !is_coloop(i)) {
            None => Poly2::monomial(1, g.len(), 0),
            Some(i) => {
                let deleted = self.eval(g.without(i), c);
                let closed = m.closure(c.with(i));
                let p = closed.intersection(g).len();
                let contracted = self.eval(g.difference(closed), closed);
                &deleted + &contracted.shift(0, p - 1)
            }
        };
        self.memo.insert((g, c), result.clone());
        result
    }
}

/// Characteristic polynomial, its reduction by `λ - 1`, and the unsigned
/// coefficients `μ^0, ..., μ^r` of the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharData {
    pub chi: Poly,
    pub chi_reduced: Poly,
    pub mu: Vec<BigInt>,
}

pub fn characteristic_data(m: &Matroid) -> Result<CharData> {
    characteristic_from_tutte(m, &tutte_polynomial(m, TutteMethod::CorankNullity))
}

pub fn characteristic_from_tutte(m: &Matroid, tutte: &Poly2) -> Result<CharData> {
    let at_zero = tutte.at_y(&BigInt::zero());
    let one_minus = Poly::from_i64(&[1, -1]);
    let mut chi = at_zero.compose(&one_minus);
    if m.rank() % 2 == 1 {
        chi = -&chi;
    }
    let chi_reduced = chi.div_linear(&BigInt::one())?;
    let r = m.chow_dimension();
    let mu = (0..=r)
        .map(|k| {
            let c = chi_reduced.coeff(r - k);
            if k % 2 == 0 { c } else { -c }
        })
        .collect();
    Ok(CharData { chi, chi_reduced, mu })
}
