//! Dense tableau simplex for `max cᵀx  s.t.  Ax <= b, x >= 0` with `b >= 0`.
//!
//! The slack basis is feasible from the start, so no phase one is needed.
//! Bland's rule (smallest entering index, smallest leaving basic index on
//! ratio ties) rules out cycling; with an exact field the result is the
//! exact optimum.

use crate::error::{Error, Result};
use crate::scalar::LpScalar;

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<T> {
    pub x: Vec<T>,
    /// Optimal dual multipliers, one per row.
    pub duals: Vec<T>,
    pub value: T,
    pub pivots: usize,
}

/// `a` is row-major with `b.len()` rows and `c.len()` columns.
pub fn maximize<T: LpScalar>(a: &[Vec<T>], b: &[T], c: &[T]) -> Result<LpSolution<T>> {
    let rows = b.len();
    let cols = c.len();
    if a.len() != rows || a.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidArgument(
            "constraint matrix has the wrong shape".into(),
        ));
    }
    if b.iter().any(|v| *v < T::zero()) {
        return Err(Error::InvalidArgument(
            "right-hand side must be nonnegative".into(),
        ));
    }
    let width = cols + rows;
    let mut tab: Vec<Vec<T>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = row.clone();
            t.extend((0..rows).map(|k| if k == i { T::one() } else { T::zero() }));
            t
        })
        .collect();
    let mut rhs: Vec<T> = b.to_vec();
    let mut reduced: Vec<T> = c
        .iter()
        .cloned()
        .chain((0..rows).map(|_| T::zero()))
        .collect();
    let mut objective = T::zero();
    let mut basis: Vec<usize> = (cols..width).collect();
    let mut pivots = 0;

    while let Some(enter) = (0..width).find(|&j| reduced[j] > T::zero()) {
        let mut leave: Option<(usize, T)> = None;
        for i in 0..rows {
            if tab[i][enter] <= T::zero() {
                continue;
            }
            let ratio = rhs[i].clone() / tab[i][enter].clone();
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            return Err(Error::InvalidArgument("linear program is unbounded".into()));
        };

        let pivot = tab[row][enter].clone();
        for v in tab[row].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() / pivot.clone();
            }
        }
        rhs[row] = rhs[row].clone() / pivot;
        let pivot_row = tab[row].clone();
        let pivot_rhs = rhs[row].clone();
        for i in 0..rows {
            if i == row || tab[i][enter].is_zero() {
                continue;
            }
            let factor = tab[i][enter].clone();
            for (v, p) in tab[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - factor.clone() * p.clone();
                }
            }
            rhs[i] = rhs[i].clone() - factor * pivot_rhs.clone();
        }
        let factor = reduced[enter].clone();
        for (v, p) in reduced.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
        objective = objective + factor * pivot_rhs;
        basis[row] = enter;
        pivots += 1;
    }

    let mut x = vec![T::zero(); cols];
    for (i, &j) in basis.iter().enumerate() {
        if j < cols {
            x[j] = rhs[i].clone();
        }
    }
    let duals = (0..rows).map(|i| -reduced[cols + i].clone()).collect();
    Ok(LpSolution {
        x,
        duals,
        value: objective,
        pivots,
    })
}
