//! Dense polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::classical::binomial;
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::new(vec![c.into()])
    }

    /// `t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Poly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `self(other(t))`.
    pub fn compose(&self, other: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * other) + &Poly::constant(c.clone()))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact quotient by `t - a`.
    pub fn div_linear(&self, a: &BigInt) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let mut q = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for i in (0..self.coeffs.len()).rev() {
            let cur = &self.coeffs[i] + &carry * a;
            if i == 0 {
                if !cur.is_zero() {
                    return Err(Error::DivisionNotExact);
                }
            } else {
                q[i - 1] = cur.clone();
            }
            carry = cur;
        }
        Ok(Poly::new(q))
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_scalar(&self, d: &BigInt) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact);
            }
            out.push(q);
        }
        Ok(Poly::new(out))
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                out.push_str(&a.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("t"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: usize, j: usize) -> Self {
        let mut p = Poly2::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        let e = self.terms.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Multiply by `x^i y^j`.
    pub fn shift(&self, i: usize, j: usize) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect(),
        }
    }

    /// Expand `Σ counts[(a, b)] (x - 1)^a (y - 1)^b`.
    pub fn from_shifted_counts(counts: &BTreeMap<(usize, usize), BigInt>) -> Poly2 {
        let mut p = Poly2::zero();
        for (&(a, b), n) in counts {
            for i in 0..=a {
                let ci = binomial(a, i) * if (a - i) % 2 == 0 { 1 } else { -1 };
                for j in 0..=b {
                    let cj = binomial(b, j) * if (b - j) % 2 == 0 { 1 } else { -1 };
                    p.add_term(i, j, n * &ci * cj);
                }
            }
        }
        p
    }

    /// Substitute `x = x0`, leaving a polynomial in `y`.
    pub fn at_x(&self, x0: &BigInt) -> Poly {
        let mut out = Vec::new();
        for (&(i, j), c) in &self.terms {
            if out.len() <= j {
                out.resize(j + 1, BigInt::zero());
            }
            out[j] += c * num_traits::pow(x0.clone(), i);
        }
        Poly::new(out)
    }

    /// Substitute `y = y0`, leaving a polynomial in `x`.
    pub fn at_y(&self, y0: &BigInt) -> Poly {
        let mut out = Vec::new();
        for (&(i, j), c) in &self.terms {
            if out.len() <= i {
                out.resize(i + 1, BigInt::zero());
            }
            out[i] += c * num_traits::pow(y0.clone(), j);
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.at_y(y).eval(x)
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // Highest total degree first, then by x-degree.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            if (i, j) == (0, 0) || !a.is_one() {
                write!(f, "{a}")?;
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Poly::from_i64(&[-1, 1]);
        let q = &p * &p;
        assert_eq!(q, Poly::from_i64(&[1, -2, 1]));
        assert_eq!(q.div_linear(&BigInt::one()).unwrap(), p);
        assert_eq!(Poly::from_i64(&[1, 1]).div_linear(&BigInt::one()), Err(Error::DivisionNotExact));
        assert_eq!(q.display("λ"), "λ^2 - 2λ + 1");
        assert_eq!(p.compose(&Poly::from_i64(&[1, -1])), Poly::from_i64(&[0, -1]));
        assert_eq!(q.eval(&BigInt::from(3)), BigInt::from(4));
    }

    #[test]
    fn bivariate() {
        let mut counts = BTreeMap::new();
        counts.insert((1, 0), BigInt::one());
        counts.insert((0, 1), BigInt::one());
        let p = Poly2::from_shifted_counts(&counts);
        let expected = &(&Poly2::monomial(1, 1, 0) + &Poly2::monomial(1, 0, 1)) + &Poly2::monomial(-2, 0, 0);
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x + y - 2");
        assert_eq!(p.at_x(&BigInt::one()), Poly::from_i64(&[-1, 1]));
    }
}
