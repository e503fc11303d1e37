//! Exact linear systems by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;
use crate::ring::common_denominator;

/// Shape of the solution set of a consistent system.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// A particular solution plus a basis of the kernel.
    Underdetermined {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSolution {
    pub rank: usize,
    pub solution: Solution,
}

impl LinearSolution {
    /// The solution, or `Underdetermined(kernel dimension)`.
    pub fn unique(self) -> Result<Vec<Rational>> {
        match self.solution {
            Solution::Unique(x) => Ok(x),
            Solution::Underdetermined { kernel, .. } => Err(Error::Underdetermined(kernel.len())),
        }
    }
}

/// Row-echelon form of an integer matrix; returns pivot columns.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..a[i].len() {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero());
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        // Rows above r keep their scale; later rows are divided by prev.
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `matrix · x = rhs` exactly.
pub fn solve_exact_linear(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<LinearSolution> {
    let rows = matrix.len();
    assert_eq!(rows, rhs.len(), "row count differs from rhs length");
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigInt>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut full = row.clone();
            full.push(b.clone());
            common_denominator(&full).0
        })
        .collect();
    let pivots = bareiss(&mut aug, cols);
    let rank = pivots.len();
    if aug[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::Inconsistent);
    }
    let back = |b: Vec<Rational>, free: &[(usize, Rational)]| -> Vec<Rational> {
        let mut x = vec![Rational::zero(); cols];
        for (j, v) in free {
            x[*j] = v.clone();
        }
        for (i, &c) in pivots.iter().enumerate().rev() {
            let mut s = b[i].clone();
            for j in c + 1..cols {
                if !aug[i][j].is_zero() && !x[j].is_zero() {
                    s -= Rational::from_integer(aug[i][j].clone()) * &x[j];
                }
            }
            x[c] = s / Rational::from_integer(aug[i][c].clone());
        }
        x
    };
    let b: Vec<Rational> = (0..rank)
        .map(|i| Rational::from_integer(aug[i][cols].clone()))
        .collect();
    let particular = back(b, &[]);
    if rank == cols {
        return Ok(LinearSolution {
            rank,
            solution: Solution::Unique(particular),
        });
    }
    let kernel = (0..cols)
        .filter(|j| !pivots.contains(j))
        .map(|j| back(vec![Rational::zero(); rank], &[(j, Rational::one())]))
        .collect();
    Ok(LinearSolution {
        rank,
        solution: Solution::Underdetermined { particular, kernel },
    })
}
