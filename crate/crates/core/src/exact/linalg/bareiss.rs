//! Fraction-free Gaussian elimination over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntVector, Kernel, SparseIntMatrix};
use crate::exact::rational::Rational;

/// Row echelon form produced by Bareiss elimination: `rows[i]` has its first
/// nonzero entry at `pivots[i]`, and every entry is a minor of the input.
pub struct Echelon {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<BigInt>>,
}

pub fn echelon(m: &SparseIntMatrix) -> Echelon {
    let ncols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); ncols];
            for &(c, v) in row {
                dense[c as usize] = BigInt::from(v);
            }
            dense
        })
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(i) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, i);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { pivots, rows: a }
}

pub fn rank(m: &SparseIntMatrix) -> usize {
    echelon(m).pivots.len()
}

/// Kernel by back substitution over the rationals, scaled to primitive integer vectors
/// whose free-column entry is positive.
pub fn kernel(m: &SparseIntMatrix) -> Kernel {
    let ncols = m.ncols();
    let e = echelon(m);
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots).rev() {
                let mut s = Rational::zero();
                for j in p + 1..ncols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += &x[j] * Rational::from_integer(row[j].clone());
                    }
                }
                x[p] = -s / Rational::from_integer(row[p].clone());
            }
            primitive(&x)
        })
        .collect();
    Kernel { ncols, pivots: e.pivots, free, basis }
}

/// Clears denominators and divides out the content; the sign is kept.
pub(crate) fn primitive(x: &[Rational]) -> IntVector {
    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let entries = if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &g).collect()
    };
    IntVector { entries }
}
