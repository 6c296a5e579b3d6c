//! Intersection lattice, Möbius function and characteristic polynomial.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arrangement::{Arrangement, ArrangementError};
use crate::exact::linalg::{canonical_row_basis, rank_of_rows};
use crate::exact::{BivariatePolynomial, Rational, UniPoly};

/// Fixed-width bitset over hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperplaneSet {
    words: Vec<u64>,
}

impl HyperplaneSet {
    pub fn empty(n: usize) -> Self {
        Self { words: vec![0; n.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &HyperplaneSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.words.len() * 64).filter(move |&i| self.contains(i))
    }
}

/// An element of `L(A)`: the common zero set of the forms spanning `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Canonical reduced integral basis of the span of the forms vanishing on the flat.
    pub basis: Vec<Vec<BigInt>>,
    /// Hyperplanes containing the flat.
    pub contains: HyperplaneSet,
    pub dim: usize,
}

impl Flat {
    pub fn codim(&self) -> usize {
        self.basis.len()
    }
}

/// `L(A)` with flats grouped by codimension, strict-superset lists and Möbius values.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub ell: usize,
    pub n_hyperplanes: usize,
    pub flats: Vec<Flat>,
    /// `levels[c]` holds the indices of the flats of codimension `c`.
    pub levels: Vec<Vec<usize>>,
    /// `above[i]`: flats strictly containing flat `i` (as subspaces).
    pub above: Vec<Vec<usize>>,
    pub mobius: Vec<i64>,
}

impl FlatLattice {
    /// Enumerates every intersection by closure, level by level, then fills in μ.
    pub fn build(a: &Arrangement) -> Self {
        let n = a.len();
        let rows = a.rows();
        let top = Flat { basis: Vec::new(), contains: HyperplaneSet::empty(n), dim: a.dim() };
        let mut flats = vec![top];
        let mut levels = vec![vec![0]];
        loop {
            let mut seen: HashMap<HyperplaneSet, usize> = HashMap::new();
            let mut next = Vec::new();
            for &x in levels.last().unwrap() {
                for h in 0..n {
                    if flats[x].contains.contains(h) {
                        continue;
                    }
                    let mut span = flats[x].basis.clone();
                    span.push(rows[h].clone());
                    let basis = canonical_row_basis(&span);
                    let mut contains = flats[x].contains.clone();
                    contains.insert(h);
                    for (g, row) in rows.iter().enumerate() {
                        if !contains.contains(g) && in_span(&basis, row) {
                            contains.insert(g);
                        }
                    }
                    if seen.contains_key(&contains) {
                        continue;
                    }
                    let dim = a.dim() - basis.len();
                    seen.insert(contains.clone(), flats.len());
                    next.push(flats.len());
                    flats.push(Flat { basis, contains, dim });
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|&i, &j| flats[i].basis.cmp(&flats[j].basis));
            levels.push(next);
        }
        let mut above = vec![Vec::new(); flats.len()];
        for (c, level) in levels.iter().enumerate() {
            for &x in level {
                for lower in &levels[..c] {
                    for &y in lower {
                        if flats[y].contains.is_subset(&flats[x].contains) {
                            above[x].push(y);
                        }
                    }
                }
            }
        }
        let mut mobius = vec![0i64; flats.len()];
        for level in &levels {
            for &x in level {
                mobius[x] = if above[x].is_empty() { 1 } else { -above[x].iter().map(|&y| mobius[y]).sum::<i64>() };
            }
        }
        Self { ell: a.dim(), n_hyperplanes: n, flats, levels, above, mobius }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// Index of the flat cut out by the given forms.
    pub fn find(&self, conormal: &[Vec<BigInt>]) -> Option<usize> {
        let basis = canonical_row_basis(conormal);
        let level = self.levels.get(basis.len())?;
        level.iter().copied().find(|&i| self.flats[i].basis == basis)
    }

    /// The flats containing flat `x` (the interval from the whole space down to `x`).
    pub fn interval_to(&self, x: usize) -> Vec<usize> {
        let mut out = self.above[x].clone();
        out.push(x);
        out.sort_unstable();
        out
    }

    /// `χ(A;t) = Σ μ(X) t^{dim X}`.
    pub fn char_poly(&self) -> UniPoly {
        let mut coeffs = vec![Rational::from_integer(0.into()); self.ell + 1];
        for (f, &m) in self.flats.iter().zip(&self.mobius) {
            coeffs[f.dim] += Rational::from_integer(m.into());
        }
        UniPoly::new(coeffs)
    }

    /// `b_i = |μ|` summed over flats of codimension `i`.
    pub fn betti_numbers(&self) -> Vec<u64> {
        self.levels
            .iter()
            .map(|level| level.iter().map(|&x| self.mobius[x].unsigned_abs()).sum())
            .collect()
    }

    /// `A_X` for flat `x`.
    pub fn localize(&self, a: &Arrangement, x: usize) -> Result<Arrangement, ArrangementError> {
        let idx: Vec<usize> = self.flats[x].contains.iter().collect();
        a.subarrangement(&idx)
    }
}

fn in_span(basis: &[Vec<BigInt>], row: &[BigInt]) -> bool {
    let mut rows = basis.to_vec();
    rows.push(row.to_vec());
    rank_of_rows(&rows) == basis.len()
}

/// `χ(A;t)` as a polynomial in `t`.
pub fn char_poly(a: &Arrangement) -> UniPoly {
    FlatLattice::build(a).char_poly()
}

/// `χ(A;t)` as a bivariate polynomial with no `x`.
pub fn char_poly_bivariate(a: &Arrangement) -> BivariatePolynomial {
    BivariatePolynomial::from_t_poly(&char_poly(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin::*;

    fn chi(a: &Arrangement) -> Vec<i64> {
        char_poly(a)
            .integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn small_lattices() {
        let l = FlatLattice::build(&boolean(2));
        assert_eq!(l.len(), 4);
        let c3 = FlatLattice::build(&concurrent(3));
        assert_eq!(c3.len(), 5);
        let origin = c3.levels[2][0];
        assert_eq!(c3.mobius[origin], 2);
        let x = FlatLattice::build(&x3());
        assert_eq!(x.levels[1].len(), 10);
        for &h in &x.levels[1] {
            assert_eq!(x.mobius[h], -1);
        }
        let b3 = FlatLattice::build(&boolean(3));
        assert_eq!(b3.mobius[b3.levels[3][0]], -1);
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(chi(&boolean(3)), vec![-1, 3, -3, 1]);
        assert_eq!(chi(&concurrent(3)), vec![2, -3, 1]);
        assert_eq!(chi(&x3()), vec![27, -54, 36, -10, 1]);
        assert_eq!(chi(&x3_restricted_x()), vec![-7, 12, -6, 1]);
        assert_eq!(chi(&Arrangement::empty(3)), vec![0, 0, 0, 1]);
        assert_eq!(FlatLattice::build(&x3()).betti_numbers(), vec![1, 10, 36, 54, 27]);
    }

    #[test]
    fn flat_lookup_and_localization() {
        let b3 = boolean(3);
        let l = FlatLattice::build(&b3);
        let z = |v: [i64; 3]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        let x = l.find(&[z([1, 0, 0]), z([0, 1, 0])]).unwrap();
        assert_eq!(l.localize(&b3, x).unwrap().len(), 2);
        assert_eq!(l.interval_to(x).len(), 4);
        assert!(l.find(&[z([1, 1, 0])]).is_none());
    }
}
