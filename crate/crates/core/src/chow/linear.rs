//! Degree-one classes as coefficient vectors over proper flats.
//!
//! In degree one the only relations are the linear ones: for every pair of
//! elements `i, j`, `Σ_{F ∋ i} x_F = Σ_{F ∋ j} x_F`. A vector `(c_F)` lies in
//! their span exactly when `c_F = Σ_{i ∈ F} a_i` for some `a` with `Σ a_i = 0`.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{mult, oi, WeightConvention};
use crate::linalg::solve;
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearClass {
    coeffs: BTreeMap<ElementSet, BigRational>,
}

impl LinearClass {
    pub fn from_fn(m: &Matroid, mut f: impl FnMut(ElementSet) -> BigRational) -> Self {
        let coeffs = m
            .proper_flats()
            .map(|g| (g, f(g)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LinearClass { coeffs }
    }

    pub fn coeff(&self, f: ElementSet) -> BigRational {
        self.coeffs.get(&f).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<ElementSet, BigRational> {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> LinearClass {
        LinearClass {
            coeffs: self
                .coeffs
                .iter()
                .map(|(f, x)| (*f, x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Whether the class vanishes in `A^1(M)`.
    pub fn is_zero_in(&self, m: &Matroid) -> bool {
        let n = m.size();
        let flats: Vec<ElementSet> = m.proper_flats().collect();
        let mut rows: Vec<Vec<BigRational>> = flats
            .iter()
            .map(|f| (0..n).map(|i| if f.contains(i) { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        let mut rhs: Vec<BigRational> = flats.iter().map(|f| self.coeff(*f)).collect();
        rows.push(vec![BigRational::one(); n]);
        rhs.push(BigRational::zero());
        solve(rows, rhs, n).is_ok()
    }

    /// Equality in `A^1(M)`.
    pub fn equivalent(&self, other: &LinearClass, m: &Matroid) -> bool {
        (self - other).is_zero_in(m)
    }
}

impl Add for &LinearClass {
    type Output = LinearClass;
    fn add(self, rhs: &LinearClass) -> LinearClass {
        let mut coeffs = self.coeffs.clone();
        for (f, c) in &rhs.coeffs {
            *coeffs.entry(*f).or_insert_with(BigRational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LinearClass { coeffs }
    }
}

impl Sub for &LinearClass {
    type Output = LinearClass;
    fn sub(self, rhs: &LinearClass) -> LinearClass {
        self + &rhs.scale(&-BigRational::one())
    }
}

/// `γ_k` as a flat sum, zero outside `1..=n`.
pub fn gamma_class(m: &Matroid, k: i64, convention: WeightConvention) -> LinearClass {
    let size = m.size();
    if k <= 0 || k >= size as i64 {
        return LinearClass::default();
    }
    let k = k as usize;
    let ground = m.ground();
    match convention {
        WeightConvention::Oi => {
            let t = ground.largest(size - k);
            LinearClass::from_fn(m, |f| BigRational::from_integer(oi(ground, f, t).into()))
        }
        WeightConvention::Mult => LinearClass::from_fn(m, |f| mult(size, f.len(), k)),
    }
}

/// Restriction of `λ_k` for `1 <= k <= n`:
/// `Σ_{F ∋ n} x_F - Σ_{|F| > k} x_F`.
pub fn lambda_class(m: &Matroid, k: usize) -> LinearClass {
    let n = m.n();
    LinearClass::from_fn(m, |f| {
        let a = i64::from(f.contains(n));
        let b = i64::from(f.len() > k);
        BigRational::from_integer((a - b).into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::projective_geometry;

    #[test]
    fn conventions_agree_in_degree_one() {
        for m in [Matroid::uniform(3, 5).unwrap(), projective_geometry(2, 2).unwrap()] {
            for k in 1..=m.n() as i64 {
                let a = gamma_class(&m, k, WeightConvention::Oi);
                let b = gamma_class(&m, k, WeightConvention::Mult);
                assert!(a.equivalent(&b, &m), "k = {k}");
            }
            let g1 = gamma_class(&m, 1, WeightConvention::Oi);
            let g2 = gamma_class(&m, 2, WeightConvention::Oi);
            assert!(!g1.equivalent(&g2, &m));
        }
    }

    #[test]
    fn lambda_restrictions() {
        let m = Matroid::boolean(4).unwrap();
        let n = m.n();
        let g = |k: i64| gamma_class(&m, k, WeightConvention::Oi);
        assert!(lambda_class(&m, n).equivalent(&g(n as i64), &m));
        for k in 1..n {
            assert!(lambda_class(&m, k).equivalent(&(&g(k as i64) - &g(k as i64 + 1)), &m));
        }
    }
}
