//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solution of `A x = b`. Free variables are set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub values: Vec<BigRational>,
    pub free_variables: usize,
}

/// Solve `rows · x = rhs` exactly. Fails with [`Error::InconsistentSystem`]
/// if no solution exists.
pub fn solve(mut rows: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>, unknowns: usize) -> Result<Solution> {
    debug_assert_eq!(rows.len(), rhs.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = BigRational::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        let pivot = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for (i, (row, b)) in rows.iter_mut().zip(rhs.iter_mut()).enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..unknowns].iter_mut().zip(&pivot[col..unknowns]) {
                *x -= &f * p;
            }
            *b -= &f * &pivot_rhs;
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rhs[r..].iter().any(|x| !x.is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    let mut values = vec![BigRational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        values[col] = rhs[i].clone();
    }
    Ok(Solution { values, free_variables: unknowns - pivots.len() })
}

/// Like [`solve`], but also fails with [`Error::SingularSystem`] when the
/// solution is not unique.
pub fn solve_unique(rows: Vec<Vec<BigRational>>, rhs: Vec<BigRational>, unknowns: usize) -> Result<Vec<BigRational>> {
    let s = solve(rows, rhs, unknowns)?;
    if s.free_variables > 0 {
        return Err(Error::SingularSystem);
    }
    Ok(s.values)
}
