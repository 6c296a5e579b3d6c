//! Sparse elimination modulo word-sized primes and the certified lift of its kernel.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::reconstruct::{rational_reconstruct, rational_reconstruct_small, Residue};
use super::{bareiss::primitive, Kernel, SparseIntMatrix};
use crate::exact::rational::Rational;

const NONE: u32 = u32::MAX;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin, valid for all `n < 3_215_031_751`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    [2u64, 3, 5, 7].iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// Primes below 2^31 in decreasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31).rev().filter(|&n| is_prime(n))
}

/// Reduced row echelon form modulo `p`.
///
/// Row `i` has a unit at `pivots[i]`; `rows[i]` lists its remaining nonzero
/// entries, all of which sit in non-pivot columns.
pub struct ModRref {
    pub p: u64,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<(u32, u64)>>,
}

fn residue(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

pub fn rref_mod(m: &SparseIntMatrix, p: u64) -> ModRref {
    let ncols = m.ncols();
    let mut pivot_row = vec![NONE; ncols];
    let mut leads: Vec<usize> = Vec::new();
    let mut echelon: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut buf = vec![0u64; ncols];
    for row in m.rows() {
        let start = row[0].0 as usize;
        for &(c, v) in row {
            buf[c as usize] = residue(v, p);
        }
        for c in start..ncols {
            let f = buf[c];
            if f == 0 {
                continue;
            }
            let r = pivot_row[c];
            if r != NONE {
                buf[c] = 0;
                let g = p - f;
                for &(cc, v) in &echelon[r as usize] {
                    let slot = &mut buf[cc as usize];
                    *slot = ((*slot as u128 + g as u128 * v as u128) % p as u128) as u64;
                }
                continue;
            }
            let inv = inv_mod(f, p);
            buf[c] = 0;
            let mut rest = Vec::new();
            for (cc, slot) in buf.iter_mut().enumerate().skip(c + 1) {
                if *slot != 0 {
                    rest.push((cc as u32, mul_mod(*slot, inv, p)));
                    *slot = 0;
                }
            }
            pivot_row[c] = echelon.len() as u32;
            leads.push(c);
            echelon.push(rest);
            break;
        }
    }

    // back substitution, last pivot first, so every referenced row is already reduced
    let mut order: Vec<usize> = (0..leads.len()).collect();
    order.sort_unstable_by_key(|&i| std::cmp::Reverse(leads[i]));
    let mut reduced: Vec<Vec<(u32, u64)>> = vec![Vec::new(); leads.len()];
    for &i in &order {
        let mut touched: Vec<u32> = Vec::new();
        for &(c, v) in &echelon[i] {
            if pivot_row[c as usize] == NONE {
                if buf[c as usize] == 0 {
                    touched.push(c);
                }
                buf[c as usize] = (buf[c as usize] + v) % p;
            }
        }
        for &(c, v) in &echelon[i] {
            let r = pivot_row[c as usize];
            if r == NONE {
                continue;
            }
            let g = p - v;
            for &(cc, w) in &reduced[r as usize] {
                let slot = &mut buf[cc as usize];
                if *slot == 0 {
                    touched.push(cc);
                }
                *slot = ((*slot as u128 + g as u128 * w as u128) % p as u128) as u64;
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut out = Vec::with_capacity(touched.len());
        for c in touched {
            let v = std::mem::take(&mut buf[c as usize]);
            if v != 0 {
                out.push((c, v));
            }
        }
        reduced[i] = out;
    }

    let mut idx: Vec<usize> = (0..leads.len()).collect();
    idx.sort_unstable_by_key(|&i| leads[i]);
    ModRref {
        p,
        pivots: idx.iter().map(|&i| leads[i]).collect(),
        rows: idx.into_iter().map(|i| std::mem::take(&mut reduced[i])).collect(),
    }
}

/// Rank modulo `p`; never exceeds the rank over the rationals.
pub fn rank_mod(m: &SparseIntMatrix, p: u64) -> usize {
    rref_mod(m, p).pivots.len()
}

/// Certified kernel through multi-modular reduced echelon forms. With `keep_basis`
/// false the lifted vectors are checked and dropped, leaving `basis` empty.
pub fn kernel(m: &SparseIntMatrix, keep_basis: bool) -> Kernel {
    let mut accepted: Vec<ColumnView> = Vec::new();
    for p in primes() {
        let r = rref_mod(m, p);
        let order = match accepted.first() {
            None => Ordering::Greater,
            Some(b) => match r.pivots.len().cmp(&b.pivots.len()) {
                // equal rank: the earlier pivot profile is the rational one
                Ordering::Equal => b.pivots.cmp(&r.pivots),
                o => o,
            },
        };
        match order {
            Ordering::Greater => accepted = vec![ColumnView::new(r, m.ncols())],
            Ordering::Equal => accepted.push(ColumnView::new(r, m.ncols())),
            Ordering::Less => continue,
        }
        if let Some(k) = try_lift(m, &accepted, keep_basis) {
            return k;
        }
    }
    unreachable!("ran out of primes below 2^31")
}

/// The reduced echelon form modulo one prime, arranged by free column:
/// `cols[k]` lists `(row, value)` for the k-th free column.
struct ColumnView {
    p: u64,
    pivots: Vec<usize>,
    free: Vec<usize>,
    cols: Vec<Vec<(u32, u64)>>,
}

impl ColumnView {
    fn new(r: ModRref, ncols: usize) -> Self {
        let mut slot = vec![usize::MAX; ncols];
        for &c in &r.pivots {
            slot[c] = 0;
        }
        let free: Vec<usize> = (0..ncols).filter(|&c| slot[c] == usize::MAX).collect();
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut cols: Vec<Vec<(u32, u64)>> = vec![Vec::new(); free.len()];
        for (i, row) in r.rows.iter().enumerate() {
            for &(c, v) in row {
                cols[slot[c as usize]].push((i as u32, v));
            }
        }
        Self { p: r.p, pivots: r.pivots, free, cols }
    }
}

fn try_lift(m: &SparseIntMatrix, views: &[ColumnView], keep_basis: bool) -> Option<Kernel> {
    let ncols = m.ncols();
    let first = &views[0];
    let mut basis = Vec::new();
    for (k, &f) in first.free.iter().enumerate() {
        let mut x = vec![Rational::default(); ncols];
        x[f] = Rational::from_integer(1.into());
        if views.len() == 1 {
            for &(i, v) in &first.cols[k] {
                let (n, d) = rational_reconstruct_small(v, first.p)?;
                x[first.pivots[i as usize]] = Rational::new(BigInt::from(-n), BigInt::from(d));
            }
        } else {
            let mut rows: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
            for (j, view) in views.iter().enumerate() {
                for &(i, v) in &view.cols[k] {
                    rows.entry(i).or_insert_with(|| vec![0; views.len()])[j] = v;
                }
            }
            for (i, vals) in rows {
                let mut res = Residue::new(vals[0], views[0].p);
                for (j, &v) in vals.iter().enumerate().skip(1) {
                    res = res.crt(v, views[j].p);
                }
                x[first.pivots[i as usize]] = -rational_reconstruct(&res.value, &res.modulus)?;
            }
        }
        let v = primitive(&x);
        if !m.annihilates(&v) {
            return None;
        }
        if keep_basis {
            basis.push(v);
        }
    }
    Some(Kernel { ncols, pivots: first.pivots.clone(), free: first.free.clone(), basis })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_generation() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps, vec![2_147_483_647, 2_147_483_629, 2_147_483_587]);
        assert!(!is_prime(3_215_031_751 / 3));
        assert!(is_prime(97) && !is_prime(91));
    }

    #[test]
    fn rref_matches_hand_reduction() {
        let m = SparseIntMatrix::from_dense(&[vec![2, 4, 0, 2], vec![1, 2, 1, 0], vec![3, 6, 1, 2]]);
        let p = 101;
        let r = rref_mod(&m, p);
        assert_eq!(r.pivots, vec![0, 2]);
        // x0 + 2 x1 + x3 = 0 and x2 - x3 = 0
        assert_eq!(r.rows[0], vec![(1, 2), (3, 1)]);
        assert_eq!(r.rows[1], vec![(3, p - 1)]);
    }

    #[test]
    fn kernel_needs_large_denominators() {
        // the kernel vector has entries of size around 10^12, beyond one prime
        let big = 1_000_003i64;
        let m = SparseIntMatrix::from_dense(&[
            vec![big, -1, 0],
            vec![0, big, -1],
        ]);
        let k = kernel(&m, true);
        assert_eq!(k.dim(), 1);
        let v = &k.basis[0].entries;
        assert_eq!(v[2], BigInt::from(big) * big);
        assert!(m.annihilates(&k.basis[0]));
    }
}
