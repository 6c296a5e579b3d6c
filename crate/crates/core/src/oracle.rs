//! Degreewise dimensions of the modules `D^p(A)` by exact linear algebra, and the
//! checks built on them.
//!
//! A degree-`d` element of `∧^p Der S` is `θ = Σ_I f_I ∂_{i_1}∧⋯∧∂_{i_p}` with every
//! `f_I ∈ S_d` (coefficient-degree grading). It lies in `D^p(A)` when
//! `θ(α_H, g_2, …, g_p) ∈ α_H S` for every `H` and all `g_j ∈ S`.
//!
//! Lemma used for the constraint set: `θ` is a derivation in each argument, so
//! `θ(α_H, g_2, …) = Σ_j ∂_j g_2 · θ(α_H, x_j, …)` and it suffices to take every
//! `g_j` a coordinate function. Alternation kills `θ(α_H, α_H, …)`, and modulo that
//! relation the pivot coordinate `x_k` of `α_H` is a combination of the others, so
//! only `J = {j_2 < ⋯ < j_p} ⊂ [ℓ] ∖ {k}` is needed. Expanding the determinant,
//! `θ(α_H, x_J) = Σ_{i ∉ J} ± a_i f_{J ∪ {i}}`, the sign being the parity of the
//! position of `i` in `J ∪ {i}`.
//!
//! When `x_k` itself is in `A`, the condition says `x_k | f_I` for every `I ∋ k`;
//! those unknowns are parametrized as `f_I = x_{I∩K} g_I` instead of constrained.
//! Every other hyperplane contributes, per `J`, the coefficients of the reduction of
//! `θ(α_H, x_J)` modulo `α_H` written in the chart coordinates.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arrangement::{Arrangement, LinearForm};
use crate::exact::linalg::{kernel, nullity, LinalgError, SparseIntMatrix};
use crate::exact::{graded_dim, series_from_rational, BivariatePolynomial, MPoly, Rational, TruncatedSeries, UniPoly};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {p} exceeds the ambient dimension {ell}")]
    OrderTooLarge { p: usize, ell: usize },
    #[error("constraint coefficient too large: {0}")]
    Linalg(#[from] LinalgError),
}

/// Exponent vectors of degree `d` in `n` variables, lexicographically descending.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    match n {
        0 => {
            if d == 0 {
                out.push(Vec::new());
            }
        }
        _ => rec(n, d, &mut Vec::new(), &mut out),
    }
    out
}

/// `p`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// The linear system whose kernel is `D^p(A)_d`.
pub struct DerivationSystem {
    pub ell: usize,
    pub p: usize,
    pub d: u32,
    pub subsets: Vec<Vec<usize>>,
    /// Column `c` is the coefficient of the monomial `columns[c].1` in `f_{subsets[columns[c].0]}`.
    pub columns: Vec<(usize, Vec<u32>)>,
    pub matrix: SparseIntMatrix,
}

/// Expansion of a power of a linear form, with integer coefficients.
fn linear_powers(coeffs: &[i128], max: u32) -> Vec<HashMap<Vec<u32>, i128>> {
    let n = coeffs.len();
    let mut out: Vec<HashMap<Vec<u32>, i128>> = vec![HashMap::from([(vec![0; n], 1)])];
    for _ in 0..max {
        let prev = out.last().unwrap();
        let mut next: HashMap<Vec<u32>, i128> = HashMap::new();
        for (e, c) in prev {
            for (j, &a) in coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[j] += 1;
                *next.entry(e2).or_insert(0) += c * a;
            }
        }
        next.retain(|_, c| *c != 0);
        out.push(next);
    }
    out
}

fn small(c: &BigInt) -> Result<i128, OracleError> {
    c.to_i128().filter(|v| v.abs() < 1 << 40).ok_or(OracleError::Linalg(LinalgError::EntryOverflow))
}

impl DerivationSystem {
    pub fn build(a: &Arrangement, p: usize, d: u32) -> Result<Self, OracleError> {
        let ell = a.dim();
        if p > ell {
            return Err(OracleError::OrderTooLarge { p, ell });
        }
        let coordinate: Vec<bool> = (0..ell)
            .map(|k| a.forms().iter().any(|f| f.coordinate() == Some(k)))
            .collect();
        let subsets = subsets(ell, p);
        let mut columns = Vec::new();
        for (si, s) in subsets.iter().enumerate() {
            let shift: Vec<u32> = (0..ell).map(|k| u32::from(coordinate[k] && s.contains(&k))).collect();
            let lowered: u32 = shift.iter().sum();
            if lowered > d {
                continue;
            }
            for m in monomials(ell, d - lowered) {
                let full: Vec<u32> = m.iter().zip(&shift).map(|(a, b)| a + b).collect();
                columns.push((si, full));
            }
        }
        let mut matrix = SparseIntMatrix::new(columns.len());
        let subset_index: HashMap<&[usize], usize> =
            subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut by_subset: Vec<Vec<usize>> = vec![Vec::new(); subsets.len()];
        for (c, (si, _)) in columns.iter().enumerate() {
            by_subset[*si].push(c);
        }
        for form in a.forms() {
            if form.coordinate().is_some() {
                continue;
            }
            add_constraints(&mut matrix, form, p, d, &subsets, &subset_index, &by_subset, &columns)?;
        }
        Ok(Self { ell, p, d, subsets, columns, matrix })
    }

    /// The derivation with coefficient vector `v` (indexed by column).
    pub fn derivation(&self, v: &[Rational]) -> Derivation {
        let mut polys: Vec<MPoly> = vec![MPoly::zero(self.ell); self.subsets.len()];
        for ((si, e), c) in self.columns.iter().zip(v) {
            if !c.is_zero() {
                polys[*si].add_term(e.clone(), c.clone());
            }
        }
        self.subsets.iter().cloned().zip(polys).filter(|(_, f)| !f.is_zero()).collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn add_constraints(
    matrix: &mut SparseIntMatrix,
    form: &LinearForm,
    p: usize,
    d: u32,
    subsets: &[Vec<usize>],
    subset_index: &HashMap<&[usize], usize>,
    by_subset: &[Vec<usize>],
    columns: &[(usize, Vec<u32>)],
) -> Result<(), OracleError> {
    let ell = form.dim();
    let k = form.pivot();
    let a: Vec<i128> = form.coeffs().iter().map(small).collect::<Result<_, _>>()?;
    let kept: Vec<usize> = (0..ell).filter(|&j| j != k).collect();
    // x_k ↦ −Σ_{j≠k} a_j x_j after scaling the degree-d part by a_k^d
    let neg: Vec<i128> = kept.iter().map(|&j| -a[j]).collect();
    let powers = linear_powers(&neg, d);
    let mut ak_pow = vec![1i128; d as usize + 1];
    for i in 1..=d as usize {
        ak_pow[i] = ak_pow[i - 1].checked_mul(a[k]).ok_or(LinalgError::EntryOverflow)?;
    }
    let targets = monomials(ell - 1, d);
    let target_index: HashMap<&[u32], usize> =
        targets.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();

    // image of each column monomial, computed once
    let mut images: HashMap<&[u32], Vec<(usize, i128)>> = HashMap::new();
    for (_, e) in columns {
        if images.contains_key(e.as_slice()) {
            continue;
        }
        let ek = e[k];
        let scale = ak_pow[(d - ek) as usize];
        let rest: Vec<u32> = kept.iter().map(|&j| e[j]).collect();
        let mut img = Vec::with_capacity(powers[ek as usize].len());
        for (pe, &pc) in &powers[ek as usize] {
            let m: Vec<u32> = pe.iter().zip(&rest).map(|(x, y)| x + y).collect();
            let c = pc.checked_mul(scale).ok_or(LinalgError::EntryOverflow)?;
            img.push((target_index[m.as_slice()], c));
        }
        images.insert(e.as_slice(), img);
    }

    for j_set in subsets_excluding(ell, p - 1, k) {
        let mut rows: Vec<Vec<(usize, i128)>> = vec![Vec::new(); targets.len()];
        for i in (0..ell).filter(|i| !j_set.contains(i)) {
            if a[i] == 0 {
                continue;
            }
            let mut s_set = j_set.clone();
            s_set.push(i);
            s_set.sort_unstable();
            let pos = s_set.iter().position(|&x| x == i).unwrap();
            let sign: i128 = if pos % 2 == 0 { 1 } else { -1 };
            let si = subset_index[s_set.as_slice()];
            for &c in &by_subset[si] {
                for &(t, v) in &images[columns[c].1.as_slice()] {
                    let w = v.checked_mul(sign * a[i]).ok_or(LinalgError::EntryOverflow)?;
                    rows[t].push((c, w));
                }
            }
        }
        let _ = subsets;
        for row in rows {
            if !row.is_empty() {
                matrix.push_row(row)?;
            }
        }
    }
    Ok(())
}

fn subsets_excluding(ell: usize, size: usize, k: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (0..ell).filter(|&j| j != k).collect();
    subsets(others.len(), size)
        .into_iter()
        .map(|s| s.into_iter().map(|i| others[i]).collect())
        .collect()
}

type CacheKey = ((usize, Vec<LinearForm>), usize, u32);

/// Dimension oracle with a shared cache keyed by (arrangement, p, d).
#[derive(Default)]
pub struct LogOracle {
    cache: Mutex<HashMap<CacheKey, usize>>,
}

impl LogOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `dim_Q D^p(A)_d` (zero for `p > ℓ`).
    pub fn dim_dp(&self, a: &Arrangement, p: usize, d: i64) -> Result<usize, OracleError> {
        if d < 0 || p > a.dim() {
            return Ok(0);
        }
        if p == 0 {
            return Ok(graded_dim(a.dim(), d) as usize);
        }
        let key = (a.canonical_key(), p, d as u32);
        if let Some(&v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let sys = DerivationSystem::build(a, p, d as u32)?;
        let v = nullity(&sys.matrix);
        self.cache.lock().unwrap().insert(key, v);
        Ok(v)
    }

    /// `dims[p][d]` for `0 ≤ p ≤ ℓ`, `0 ≤ d ≤ cutoff`.
    pub fn hilbert_table(&self, a: &Arrangement, cutoff: usize) -> Result<HilbertTable, OracleError> {
        let mut dims = Vec::with_capacity(a.dim() + 1);
        for p in 0..=a.dim() {
            let row = (0..=cutoff as i64)
                .map(|d| self.dim_dp(a, p, d))
                .collect::<Result<Vec<_>, _>>()?;
            dims.push(row);
        }
        Ok(HilbertTable { ell: a.dim(), n_hyperplanes: a.len(), cutoff, dims })
    }
}

/// A `p`-derivation as its nonzero `(I, f_I)` pairs.
pub type Derivation = Vec<(Vec<usize>, MPoly)>;

/// A basis of `D^p(A)_d` with integer coefficients.
pub fn derivation_basis(a: &Arrangement, p: usize, d: u32) -> Result<Vec<Derivation>, OracleError> {
    let sys = DerivationSystem::build(a, p, d)?;
    let k = kernel(&sys.matrix);
    Ok(k.basis.iter().map(|v| sys.derivation(&v.to_rationals())).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub ell: usize,
    pub n_hyperplanes: usize,
    pub cutoff: usize,
    pub dims: Vec<Vec<usize>>,
}

impl HilbertTable {
    pub fn row(&self, p: usize) -> &[usize] {
        &self.dims[p]
    }

    /// Entries of rows `p = 0` and `p = ℓ` that disagree with `dim S_d` and
    /// `dim S_{d−|A|}`, as `(p, d, found, expected)`.
    pub fn closed_form_violations(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for d in 0..=self.cutoff {
            let s = graded_dim(self.ell, d as i64) as usize;
            if self.dims[0][d] != s {
                out.push((0, d, self.dims[0][d], s));
            }
            let top = graded_dim(self.ell, d as i64 - self.n_hyperplanes as i64) as usize;
            if self.ell > 0 && self.dims[self.ell][d] != top {
                out.push((self.ell, d, self.dims[self.ell][d], top));
            }
        }
        out
    }

    pub fn series(&self, p: usize) -> TruncatedSeries {
        let vals: Vec<Rational> = self.dims[p].iter().map(|&v| Rational::from_integer(v.into())).collect();
        TruncatedSeries::from_rationals(0, &vals)
    }

    /// `Hilb(Ω^{ℓ−p}(A); x) = x^{−|A|} Hilb(D^p(A); x)`, known through `x^{cutoff − |A|}`.
    pub fn omega_series(&self, p: usize) -> TruncatedSeries {
        self.series(p).shift_x(-(self.n_hyperplanes as i64))
    }
}

/// `T = t(x − 1) − 1`.
pub fn t_factor() -> BivariatePolynomial {
    BivariatePolynomial::from_int_terms(&[(1, 1, 1), (0, 1, -1), (0, 0, -1)])
}

/// `Σ_p Hilb(D^p(A); x) · (t(x−1)−1)^p` through `x^{cutoff}`.
pub fn psi_truncated_from_table(table: &HilbertTable) -> TruncatedSeries {
    let t = t_factor();
    let mut acc = TruncatedSeries::zero(0, table.cutoff as i64);
    for p in 0..=table.ell {
        acc = acc.add(&table.series(p).mul_poly(&t.pow(p as u32)));
    }
    acc
}

/// Minimum number of vanishing top coefficients before a truncation is promoted.
pub const ZERO_TAIL: usize = 3;

/// `|A| + ℓ + 2`.
pub fn default_cutoff(a: &Arrangement) -> usize {
    a.len() + a.dim() + 2
}

/// Multiset of `d_I = Σ_{i∈I} d_i` over `p`-subsets `I`.
pub fn wedge_degrees(exponents: &[u64], p: usize) -> Vec<u64> {
    subsets(exponents.len(), p)
        .iter()
        .map(|s| s.iter().map(|&i| exponents[i]).sum())
        .collect()
}

/// Dimensions predicted by the resolution
/// `0 → ⊕_J S[−e_J−d−1] → ⊕_J S[−e_J−d] ⊕ ⊕_I S[−d_I] → M → 0`.
pub fn fr_predicted_hilbert(
    exp_full: &[u64],
    exp_restricted: &[u64],
    d_shift: u64,
    ell: usize,
    cutoff: usize,
) -> Vec<BigInt> {
    let top = exp_full
        .iter()
        .copied()
        .chain(exp_restricted.iter().map(|e| e + d_shift + 1))
        .max()
        .unwrap_or(0) as usize;
    let mut num = vec![Rational::zero(); top + 1];
    for &e in exp_full {
        num[e as usize] += Rational::from_integer(1.into());
    }
    for &e in exp_restricted {
        num[(e + d_shift) as usize] += Rational::from_integer(1.into());
        num[(e + d_shift + 1) as usize] -= Rational::from_integer(1.into());
    }
    series_from_rational(&UniPoly::new(num), ell, cutoff)
        .constant_coefficients()
        .expect("no t")
        .into_iter()
        .map(|r| r.to_integer())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapId {
    /// `ρ: D^p(A) → D^p(A^H)`.
    EulerRho,
    /// `∂̄: D^p(A') → D^{p−1}(A^H) B̄`.
    BseqPartial,
}

/// Rank of one graded piece of a map, read off from the exact left part of its sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedMapRank {
    pub map: MapId,
    pub p: usize,
    pub d: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
}

/// Per-degree defect of an exactness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub d: usize,
    /// The dimensions entering the identity, in the order of the check's formula.
    pub terms: [usize; 3],
    pub defect: i64,
    pub map: GradedMapRank,
}

impl DegreeReport {
    /// `terms[0] − terms[1]` is the rank (the first map is injective), `terms[2]`
    /// the codomain dimension.
    fn new(map: MapId, p: usize, d: usize, terms: [usize; 3], domain_dim: usize) -> Self {
        let defect = terms[0] as i64 - terms[1] as i64 - terms[2] as i64;
        let rank = terms[0].saturating_sub(terms[1]);
        let map = GradedMapRank { map, p, d, domain_dim, codomain_dim: terms[2], rank };
        Self { d, terms, defect, map }
    }
}

/// `dim D^p(A)_d − dim D^p(A')_{d−1} − dim D^p(A^H)_d`; zeros mean the Euler sequence
/// `0 → D^p(A') → D^p(A) → D^p(A^H)` is right exact in those degrees.
pub fn euler_exactness_check(
    oracle: &LogOracle,
    a: &Arrangement,
    h: usize,
    p: usize,
    cutoff: usize,
) -> Result<Vec<DegreeReport>, OracleError> {
    let del = a.delete(h).expect("valid hyperplane");
    let res = a.restrict(h).expect("valid hyperplane").arrangement;
    (0..=cutoff)
        .map(|d| {
            let di = d as i64;
            let t = [oracle.dim_dp(a, p, di)?, oracle.dim_dp(&del, p, di - 1)?, oracle.dim_dp(&res, p, di)?];
            Ok(DegreeReport::new(MapId::EulerRho, p, d, t, t[0]))
        })
        .collect()
}

/// `dim D^p(A')_d − dim D^p(A)_d − dim D^{p−1}(A^H)_{d − deg B̄}`; zeros mean the
/// B-sequence is exact with a surjective last map in those degrees.
pub fn bseq_exactness_check(
    oracle: &LogOracle,
    a: &Arrangement,
    h: usize,
    p: usize,
    cutoff: usize,
) -> Result<Vec<DegreeReport>, OracleError> {
    let del = a.delete(h).expect("valid hyperplane");
    let res = a.restrict(h).expect("valid hyperplane").arrangement;
    let deg_b = a.b_polynomial(h).expect("valid hyperplane").degree() as i64;
    (0..=cutoff)
        .map(|d| {
            let di = d as i64;
            let t = [oracle.dim_dp(&del, p, di)?, oracle.dim_dp(a, p, di)?, oracle.dim_dp(&res, p - 1, di - deg_b)?];
            Ok(DegreeReport::new(MapId::BseqPartial, p, d, t, t[0]))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub d: usize,
    pub basis_size: usize,
    pub failures: usize,
}

/// For each degree, reduces `θ(α_H)` modulo `α_H` for a basis of `D(A')_d` and
/// tests divisibility by `B̄`.
pub fn terao_b_membership_check(a: &Arrangement, h: usize, cutoff: usize) -> Result<Vec<MembershipReport>, OracleError> {
    let del = a.delete(h).expect("valid hyperplane");
    let b = a.b_polynomial(h).expect("valid hyperplane");
    let alpha = a.forms()[h].coeffs();
    let mut out = Vec::new();
    for d in 0..=cutoff {
        let basis = derivation_basis(&del, 1, d as u32)?;
        let mut failures = 0;
        for theta in &basis {
            let mut value = MPoly::zero(a.dim());
            for (idx, f) in theta {
                let c = Rational::from_integer(alpha[idx[0]].clone());
                value = &value + &f.scale(&c);
            }
            let reduced = b.chart.reduce(&value);
            if !reduced.is_zero() && reduced.exact_div(&b.polynomial).is_none() {
                failures += 1;
            }
        }
        out.push(MembershipReport { d, basis_size: basis.len(), failures });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn enumerations() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets_excluding(4, 2, 1), vec![vec![0, 2], vec![0, 3], vec![2, 3]]);
        assert_eq!(wedge_degrees(&[1, 3, 3, 3], 2), vec![4, 4, 4, 6, 6, 6]);
    }

    #[test]
    fn boolean_two_table() {
        let o = LogOracle::new();
        let t = o.hilbert_table(&boolean(2), 3).unwrap();
        assert_eq!(t.dims[1], vec![0, 2, 4, 6]);
        assert_eq!(t.dims[2], vec![0, 0, 1, 2]);
        assert!(t.closed_form_violations().is_empty());
        assert_eq!(o.dim_dp(&boolean(2), 1, 1).unwrap(), 2);
    }

    #[test]
    fn restricted_x3_degree_four() {
        let o = LogOracle::new();
        assert_eq!(o.dim_dp(&x3_restricted_x(), 1, 4).unwrap(), 18);
        assert_eq!(o.dim_dp(&x3_restricted_x(), 3, 6).unwrap(), 1);
    }

    #[test]
    fn concurrent_lines_match_free_series() {
        // three lines: exponents (1, 2)
        let o = LogOracle::new();
        let t = o.hilbert_table(&concurrent(3), 6).unwrap();
        let pred = fr_predicted_hilbert(&[1, 2], &[], 0, 2, 6);
        assert_eq!(t.dims[1].iter().map(|&v| v as i64).collect::<Vec<_>>(), ints(&pred));
    }

    #[test]
    fn resolution_predictions() {
        assert_eq!(ints(&fr_predicted_hilbert(&[1, 3, 3], &[0], 3, 3, 4)), vec![0, 1, 3, 9, 18]);
        assert_eq!(ints(&fr_predicted_hilbert(&[1, 1], &[], 0, 2, 3)), vec![0, 2, 4, 6]);
    }

    #[test]
    fn psi_of_empty_and_boolean() {
        let o = LogOracle::new();
        let t = o.hilbert_table(&Arrangement::empty(2), 5).unwrap();
        let s = psi_truncated_from_table(&t);
        let expect = BivariatePolynomial::from_int_terms(&[(0, 2, 1)]);
        assert_eq!(s.to_polynomial(ZERO_TAIL), Some(expect));
        let t = o.hilbert_table(&boolean(2), 8).unwrap();
        let expect = BivariatePolynomial::from_int_terms(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]);
        assert_eq!(psi_truncated_from_table(&t).to_polynomial(ZERO_TAIL), Some(expect));
    }

    #[test]
    fn small_checks() {
        let o = LogOracle::new();
        for r in euler_exactness_check(&o, &boolean(3), 0, 0, 5).unwrap() {
            assert_eq!(r.defect, 0);
        }
        let b = bseq_exactness_check(&o, &boolean(2), 1, 1, 4).unwrap();
        assert!(b.iter().all(|r| r.defect == 0 && r.terms[0] - r.terms[1] == 1));
        let m = terao_b_membership_check(&concurrent(3), 2, 5).unwrap();
        assert!(m.iter().all(|r| r.failures == 0));
        assert_eq!(m[2].basis_size, 4);
    }
}
