//! Exact kernels of sparse integer matrices.
//!
//! Small systems go through fraction-free (Bareiss) elimination over big integers.
//! Larger ones are eliminated modulo word-sized primes; the reduced row echelon form
//! is lifted to the rationals by CRT and rational reconstruction, and every lifted
//! kernel vector is multiplied back against the original matrix in exact integer
//! arithmetic. Because the lifted vectors carry an identity block on the free
//! columns they are independent, and the modular rank bounds the nullity from
//! above, so an accepted kernel has provably the right dimension.

pub mod bareiss;
pub mod modular;
pub mod reconstruct;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix entry does not fit in 64 bits")]
    EntryOverflow,
    #[error("column {col} out of range for a matrix with {ncols} columns")]
    ColumnOutOfRange { col: usize, ncols: usize },
}

/// Row-sparse integer matrix; each row is sorted by column and holds no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseIntMatrix {
    ncols: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(ncols);
        for r in rows {
            m.push_row(r.iter().enumerate().map(|(c, &v)| (c, i128::from(v))))
                .expect("dense rows are in range");
        }
        m
    }

    /// Adds a row given as `(column, value)` pairs; repeated columns are summed.
    /// Rows that cancel to zero are dropped.
    pub fn push_row<I>(&mut self, entries: I) -> Result<(), LinalgError>
    where
        I: IntoIterator<Item = (usize, i128)>,
    {
        let mut buf: Vec<(usize, i128)> = entries.into_iter().collect();
        buf.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(u32, i64)> = Vec::with_capacity(buf.len());
        let mut i = 0;
        while i < buf.len() {
            let col = buf[i].0;
            if col >= self.ncols {
                return Err(LinalgError::ColumnOutOfRange { col, ncols: self.ncols });
            }
            let mut acc: i128 = 0;
            while i < buf.len() && buf[i].0 == col {
                acc = acc.checked_add(buf[i].1).ok_or(LinalgError::EntryOverflow)?;
                i += 1;
            }
            if acc != 0 {
                let v = i64::try_from(acc).map_err(|_| LinalgError::EntryOverflow)?;
                row.push((col as u32, v));
            }
        }
        if !row.is_empty() {
            self.rows.push(row);
        }
        Ok(())
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<(u32, i64)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Whether `v` (integer entries, indexed by column) is annihilated by every row.
    pub fn annihilates(&self, v: &IntVector) -> bool {
        let small = v.to_i128();
        self.rows.iter().all(|row| match &small {
            Some(s) => match dot_i128(row, s) {
                Some(x) => x == 0,
                None => dot_big(row, &v.entries).is_zero(),
            },
            None => dot_big(row, &v.entries).is_zero(),
        })
    }
}

fn dot_i128(row: &[(u32, i64)], v: &[i128]) -> Option<i128> {
    let mut acc: i128 = 0;
    for &(c, a) in row {
        let x = v[c as usize];
        if x != 0 {
            acc = acc.checked_add(x.checked_mul(i128::from(a))?)?;
        }
    }
    Some(acc)
}

fn dot_big(row: &[(u32, i64)], v: &[BigInt]) -> BigInt {
    row.iter()
        .map(|&(c, a)| &v[c as usize] * a)
        .fold(BigInt::zero(), |acc, x| acc + x)
}

/// Dense integer vector (kernel elements are scaled to clear denominators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntVector {
    pub entries: Vec<BigInt>,
}

impl IntVector {
    fn to_i128(&self) -> Option<Vec<i128>> {
        self.entries.iter().map(|x| x.to_i128().filter(|v| v.abs() < 1 << 62)).collect()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.entries.iter().cloned().map(Rational::from_integer).collect()
    }
}

/// A certified basis of the rational kernel.
///
/// `basis[k]` has a nonzero entry at `free[k]` and zeros at every other free column;
/// it is empty when only the dimension was requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub basis: Vec<IntVector>,
}

impl Kernel {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }
}

/// Matrices with at most this many entries (rows × columns) use Bareiss elimination.
pub const BAREISS_LIMIT: usize = 2_500;

/// Exact kernel of `m` with a basis.
pub fn kernel(m: &SparseIntMatrix) -> Kernel {
    if m.nrows() * m.ncols() <= BAREISS_LIMIT {
        bareiss::kernel(m)
    } else {
        modular::kernel(m, true)
    }
}

/// Exact nullity (number of columns minus rank), certified the same way as
/// [`kernel`] but without retaining the basis.
pub fn nullity(m: &SparseIntMatrix) -> usize {
    if m.nrows() == 0 {
        m.ncols()
    } else if m.nrows() * m.ncols() <= BAREISS_LIMIT {
        m.ncols() - bareiss::rank(m)
    } else {
        modular::kernel(m, false).dim()
    }
}

/// Canonical basis of the row space: the reduced row echelon form over the
/// rationals with each row scaled to coprime integers (pivot entry positive).
pub fn canonical_row_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, i);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[r].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    a.iter().map(|row| bareiss::primitive(row).entries).collect()
}

/// Rank of a list of integer rows.
pub fn rank_of_rows(rows: &[Vec<BigInt>]) -> usize {
    canonical_row_basis(rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis_is_reduced_and_integral() {
        let rows: Vec<Vec<BigInt>> = [[2, 4, 6], [1, 1, 1], [3, 5, 7]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let b = canonical_row_basis(&rows);
        let expect: Vec<Vec<BigInt>> = [[1, 0, -1], [0, 1, 2]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(b, expect);
        assert_eq!(rank_of_rows(&rows[..1]), 1);
    }

    #[test]
    fn push_row_merges_and_drops_zeros() {
        let mut m = SparseIntMatrix::new(3);
        m.push_row([(2, 1), (0, 4), (2, -1)]).unwrap();
        m.push_row([(1, 2), (1, -2)]).unwrap();
        assert_eq!(m.rows(), &[vec![(0, 4)]]);
        assert_eq!(
            m.push_row([(3, 1)]),
            Err(LinalgError::ColumnOutOfRange { col: 3, ncols: 3 })
        );
        assert_eq!(m.push_row([(0, i128::from(i64::MAX) + 1)]), Err(LinalgError::EntryOverflow));
    }

    #[test]
    fn both_routes_agree_on_a_structured_matrix() {
        // rows of a circulant-like matrix with a two-dimensional kernel
        let n = 60;
        let mut m = SparseIntMatrix::new(n);
        for i in 0..n - 2 {
            m.push_row([(i, 1), (i + 1, -2), (i + 2, 1)]).unwrap();
        }
        let a = bareiss::kernel(&m);
        let b = modular::kernel(&m, true);
        assert_eq!(nullity(&m), 2);
        assert_eq!(a.dim(), 2);
        assert_eq!(b.dim(), 2);
        assert_eq!(a.pivots, b.pivots);
        for v in a.basis.iter().chain(&b.basis) {
            assert!(m.annihilates(v));
        }
    }
}
