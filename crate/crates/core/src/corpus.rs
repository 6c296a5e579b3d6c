//! The fixed test corpus and random changes of coordinates.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arrangement::builtin::*;
use crate::arrangement::Arrangement;

/// Boolean arrangements up to `ℓ = 4`, concurrent lines up to six, the X3 family,
/// `generic_plus_one` up to `ℓ = 4` and `three_generic`, without repeats.
pub fn corpus() -> Vec<Arrangement> {
    let mut all: Vec<Arrangement> = Vec::new();
    all.extend((1..=4).map(boolean));
    all.extend((1..=6).map(concurrent));
    all.extend([x3(), x3_h_y(), x3_h_x(), x3_restricted_x(), x3_restricted_y()]);
    all.extend((2..=4).map(generic_plus_one));
    all.push(three_generic());
    let mut out: Vec<Arrangement> = Vec::new();
    for a in all {
        if !out.iter().any(|b| b.canonical_key() == a.canonical_key()) {
            out.push(a);
        }
    }
    out
}

/// Every `(A, H)` pair of the corpus, `H` by index.
pub fn corpus_pairs() -> Vec<(Arrangement, usize)> {
    corpus().into_iter().flat_map(|a| (0..a.len()).map(move |h| (a.clone(), h))).collect()
}

pub fn name(a: &Arrangement) -> String {
    a.label().map(str::to_string).unwrap_or_else(|| a.to_string())
}

/// A random integer matrix of determinant ±1: a product of elementary row
/// operations with multipliers in `{−1, 1}`, a permutation and sign flips.
pub fn random_unimodular(ell: usize, rng: &mut StdRng) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<i64>> = (0..ell).map(|i| (0..ell).map(|j| i64::from(i == j)).collect()).collect();
    if ell >= 2 {
        for _ in 0..2 * ell {
            let i = rng.gen_range(0..ell);
            let mut j = rng.gen_range(0..ell - 1);
            if j >= i {
                j += 1;
            }
            let c = if rng.gen_bool(0.5) { 1 } else { -1 };
            let src = m[j].clone();
            m[i].iter_mut().zip(&src).for_each(|(v, s)| *v += c * s);
        }
        for i in (1..ell).rev() {
            m.swap(i, rng.gen_range(0..=i));
        }
    }
    for row in &mut m {
        if rng.gen_bool(0.5) {
            row.iter_mut().for_each(|v| *v = -*v);
        }
    }
    m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random reordering of the hyperplanes.
pub fn shuffled(a: &Arrangement, rng: &mut StdRng) -> Arrangement {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    for i in (1..idx.len()).rev() {
        idx.swap(i, rng.gen_range(0..=i));
    }
    a.subarrangement(&idx).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::rank_of_rows;

    #[test]
    fn corpus_is_distinct() {
        let c = corpus();
        // concurrent2 = boolean2, generic_plus_one2 = concurrent3, three_generic = generic_plus_one3
        assert_eq!(c.len(), 4 + 5 + 5 + 2);
        assert!(corpus_pairs().len() > 60);
    }

    #[test]
    fn unimodular_changes_are_invertible() {
        let mut rng = seeded_rng(7);
        for ell in 1..=4 {
            let g = random_unimodular(ell, &mut rng);
            assert_eq!(rank_of_rows(&g), ell);
            let a = boolean(ell).transform(&g).unwrap();
            assert_eq!(a.len(), ell);
        }
    }
}
