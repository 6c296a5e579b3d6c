//! Solomon–Terao polynomials from the free closed form and the addition and
//! deletion rules, plus the dual polynomial Φ and the reduced-polynomial checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arrangement::{Arrangement, LinearForm};
use crate::exact::{binomial, BivariatePolynomial, Rational, TruncatedSeries, UniPoly, Var};
use crate::freeness::{FreenessSearch, DEFAULT_BUDGET};

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `Π_i (−t x^{d_i} + 1 + x + ⋯ + x^{d_i − 1})`.
pub fn psi_free(exponents: &[u64]) -> BivariatePolynomial {
    exponents.iter().fold(BivariatePolynomial::one(), |acc, &d| {
        let d = d as u32;
        let mut f = BivariatePolynomial::monomial(int(-1), d, 1);
        for i in 0..d {
            f.add_term(i, 0, int(1));
        }
        &acc * &f
    })
}

/// `x Ψ(A') + Ψ(A^H)`.
pub fn psi_addition(psi_deleted: &BivariatePolynomial, psi_restricted: &BivariatePolynomial) -> BivariatePolynomial {
    &psi_deleted.shift_x(1) + psi_restricted
}

/// `Ψ(A') = Ψ(A) + x^d (t(x−1) − 1) Ψ(A^H)` with `d = |A'| − |A^H|`.
pub fn psi_deletion(psi_full: &BivariatePolynomial, psi_restricted: &BivariatePolynomial, d: u32) -> BivariatePolynomial {
    psi_full + &(&t_factor() * psi_restricted).shift_x(d)
}

/// `t(x − 1) − 1`.
pub fn t_factor() -> BivariatePolynomial {
    BivariatePolynomial::from_int_terms(&[(1, 1, 1), (0, 1, -1), (0, 0, -1)])
}

/// `Ψ(A; x, −1)`.
pub fn reduced(psi: &BivariatePolynomial) -> UniPoly {
    psi.substitute(Var::T, &int(-1)).as_x_poly().expect("t eliminated")
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StError {
    #[error("generic formula needs dimension at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
}

/// Ψ of `ℓ + 1` generic hyperplanes in dimension `ℓ`.
pub fn psi_generic(ell: usize) -> Result<BivariatePolynomial, StError> {
    if ell < 2 {
        return Err(StError::DimensionTooSmall(ell));
    }
    let c = |n: usize, k: usize| Rational::from_integer(BigInt::from(binomial(n as i64, k as i64)));
    let mut p = BivariatePolynomial::zero();
    p.add_term(0, 0, int(1));
    p.add_term(1, 0, int(ell as i64 - 1));
    p.add_term(1, 1, int(-1));
    p.add_term(2, 1, -(c(ell + 1, 2) - int(1)));
    for i in 2..=ell {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        p.add_term(i as u32 + 1, i as u32, sign * c(ell + 1, i + 1));
    }
    Ok(p)
}

/// `Φ(A; x, s)` from `Ψ(A; x, t) = x^n T^ℓ Φ(x, −t/T)`, `T = t(x−1) − 1`.
///
/// Solving `s = −t/T` gives `t = s/(s(x−1)+1)` and `T = −1/(s(x−1)+1)`, so
/// `Φ = (−1)^ℓ x^{−n} Σ_j ψ_j(x) s^j (s(x−1)+1)^{ℓ−j}` where `ψ_j` is the
/// `t^j` coefficient of Ψ. The result is a Laurent polynomial in `x`, returned as a
/// series from `x^{−n}` through `x^{cutoff − n}`.
pub fn phi_from_psi(psi: &BivariatePolynomial, n: usize, ell: usize, cutoff: usize) -> Result<TruncatedSeries, StError> {
    let deg_t = psi.deg_t().unwrap_or(0) as usize;
    if deg_t > ell {
        return Err(StError::InconsistentInput(format!("t-degree {deg_t} exceeds the dimension {ell}")));
    }
    let deg_x = psi.deg_x().unwrap_or(0) as usize;
    if cutoff < deg_x {
        return Err(StError::InconsistentInput(format!("cutoff {cutoff} below the x-degree {deg_x}")));
    }
    // s(x−1)+1, with s written in the t slot
    let u = BivariatePolynomial::from_int_terms(&[(1, 1, 1), (0, 1, -1), (0, 0, 1)]);
    let mut acc = BivariatePolynomial::zero();
    for j in 0..=deg_t {
        let psi_j = BivariatePolynomial::from_x_poly(&psi.t_coefficient(j as u32));
        let term = &(&psi_j * &BivariatePolynomial::monomial(int(1), 0, j as u32)) * &u.pow((ell - j) as u32);
        acc = &acc + &term;
    }
    if ell % 2 == 1 {
        acc = -&acc;
    }
    Ok(TruncatedSeries::from_polynomial(&acc, cutoff as i64).shift_x(-(n as i64)))
}

/// `x^n Σ_j φ_j(x) (−t)^j T^{ℓ−j}` through `x^{cutoff}`.
pub fn psi_from_phi(phi: &TruncatedSeries, n: usize, ell: usize) -> Result<TruncatedSeries, StError> {
    let shifted = phi.shift_x(n as i64);
    if shifted.offset() < 0 && shifted.coefficients().iter().take((-shifted.offset()) as usize).any(|c| !c.is_zero()) {
        return Err(StError::InconsistentInput("Φ has a pole of order above |A|".into()));
    }
    let cutoff = shifted.cutoff();
    let mut poly = BivariatePolynomial::zero();
    for e in 0..=cutoff {
        let c = shifted.coefficient(e).expect("within cutoff");
        for (j, v) in c.coeffs().iter().enumerate() {
            poly.add_term(e as u32, j as u32, v.clone());
        }
    }
    let t = t_factor();
    let mut acc = BivariatePolynomial::zero();
    for j in 0..=poly.deg_t().unwrap_or(0) {
        if j as usize > ell {
            return Err(StError::InconsistentInput(format!("s-degree {j} exceeds the dimension {ell}")));
        }
        let phi_j = BivariatePolynomial::from_x_poly(&poly.t_coefficient(j));
        let minus_t = BivariatePolynomial::monomial(int(-1), 0, 1).pow(j);
        acc = &acc + &(&(&phi_j * &minus_t) * &t.pow(ell as u32 - j));
    }
    Ok(TruncatedSeries::from_polynomial(&acc, cutoff))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub degree: Option<usize>,
    pub n_hyperplanes: usize,
    pub degree_equals_n: bool,
    pub monic: bool,
    pub palindromic: bool,
    /// Positive `d_i` with `Π (1 + x + ⋯ + x^{d_i})` equal to the polynomial.
    pub splits_as_product_of_geometric_sums: Option<Vec<u64>>,
}

pub fn conjecture_checks(psi_reduced: &UniPoly, n_hyperplanes: usize) -> ConjectureReport {
    let degree = psi_reduced.degree();
    ConjectureReport {
        degree,
        n_hyperplanes,
        degree_equals_n: degree == Some(n_hyperplanes),
        monic: psi_reduced.is_monic(),
        palindromic: psi_reduced.is_palindromic(),
        splits_as_product_of_geometric_sums: geometric_split(psi_reduced),
    }
}

fn geometric_split(p: &UniPoly) -> Option<Vec<u64>> {
    fn rec(p: &UniPoly, min: usize, acc: &mut Vec<u64>) -> bool {
        let deg = p.degree().unwrap_or(0);
        if deg == 0 {
            return *p == UniPoly::one();
        }
        for d in min..=deg {
            if let Some(q) = p.exact_div(&UniPoly::geometric_sum(d)) {
                acc.push(d as u64);
                if rec(&q, d, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    if p.is_zero() {
        return None;
    }
    let mut acc = Vec::new();
    rec(p, 1, &mut acc).then_some(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PsiStatus {
    Computed,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    FreeFormula,
    Addition,
    Deletion,
    Generic,
}

/// The freeness certificate that made a rule applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct License {
    pub arrangement: String,
    pub exponents: Vec<u64>,
}

/// One node of the computation tree, in pre-order (root id 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub id: usize,
    pub rule: Rule,
    pub arrangement: String,
    pub dim: usize,
    pub hyperplanes: usize,
    /// For addition, the index of the removed hyperplane in this node; for
    /// deletion, `None` (the hyperplane is added).
    pub hyperplane_index: Option<usize>,
    pub hyperplane: Option<String>,
    /// `|A'| − |A^H|` for deletion.
    pub d: Option<u32>,
    pub license: Option<License>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiResult {
    pub status: PsiStatus,
    pub psi: Option<BivariatePolynomial>,
    pub reduced: Option<UniPoly>,
    /// `(−1)^ℓ Ψ(A;1,t) = χ(A;t)`; false when nothing was computed.
    pub chi_check: bool,
    pub method_trace: Vec<RuleApplication>,
}

impl PsiResult {
    pub fn is_computed(&self) -> bool {
        self.status == PsiStatus::Computed
    }
}

#[derive(Clone, Debug)]
enum Step {
    Free { exponents: Vec<u64> },
    Addition { index: usize, form: LinearForm, license: Vec<u64>, deletion: Arrangement, restriction: Arrangement },
    Deletion { form: LinearForm, d: u32, full: Arrangement, license: Vec<u64>, restriction: Arrangement },
}

#[derive(Clone, Debug)]
struct Node {
    psi: BivariatePolynomial,
    step: Step,
}

type Key = (usize, Vec<LinearForm>);

/// Licensed search for a computation tree, memoized by arrangement.
///
/// Order at each node: the free formula, deletion through each form of the
/// extension pool, addition through each hyperplane in ascending index, and finally
/// deletion through generated extensions (coordinate forms and `α_i ± α_j`).
pub struct StEngine {
    freeness: FreenessSearch,
    extensions: Vec<LinearForm>,
    generated_extensions: bool,
    budget: usize,
    nodes: usize,
    memo: HashMap<Key, Option<Node>>,
}

impl Default for StEngine {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

impl StEngine {
    pub fn new(budget: usize) -> Self {
        Self {
            freeness: FreenessSearch::new(budget),
            extensions: Vec::new(),
            generated_extensions: true,
            budget: budget.max(1),
            nodes: 0,
            memo: HashMap::new(),
        }
    }

    /// Forms tried first when a node needs a free extension.
    pub fn with_extensions(mut self, forms: Vec<LinearForm>) -> Self {
        self.extensions = forms;
        self
    }

    pub fn with_generated_extensions(mut self, on: bool) -> Self {
        self.generated_extensions = on;
        self
    }

    pub fn freeness(&mut self) -> &mut FreenessSearch {
        &mut self.freeness
    }

    pub fn psi(&mut self, a: &Arrangement) -> PsiResult {
        let chi = self.freeness.chi(a);
        match self.solve(a) {
            Some(node) => {
                let psi = node.psi.clone();
                let mut trace = Vec::new();
                self.build_trace(a, &mut trace);
                let at_one = psi.substitute(Var::X, &int(1));
                let signed = if a.dim() % 2 == 1 { -&at_one } else { at_one };
                let chi_check = signed == BivariatePolynomial::from_t_poly(&chi);
                PsiResult { status: PsiStatus::Computed, reduced: Some(reduced(&psi)), psi: Some(psi), chi_check, method_trace: trace }
            }
            None => PsiResult { status: PsiStatus::Unknown, psi: None, reduced: None, chi_check: false, method_trace: Vec::new() },
        }
    }

    fn solve(&mut self, a: &Arrangement) -> Option<Node> {
        let key = a.canonical_key();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        if self.nodes >= self.budget {
            return None;
        }
        self.nodes += 1;
        let node = self.search(a);
        self.memo.insert(key, node.clone());
        node
    }

    fn search(&mut self, a: &Arrangement) -> Option<Node> {
        if let Some(exponents) = self.freeness.exponents(a) {
            return Some(Node { psi: psi_free(&exponents), step: Step::Free { exponents } });
        }
        if a.dim() < 3 {
            return None;
        }
        let pool: Vec<LinearForm> = self.extensions.iter().filter(|f| f.dim() == a.dim()).cloned().collect();
        for form in pool {
            if let Some(n) = self.try_deletion(a, form) {
                return Some(n);
            }
        }
        for h in 0..a.len() {
            if let Some(n) = self.try_addition(a, h) {
                return Some(n);
            }
        }
        if self.generated_extensions {
            for form in generated_extensions(a) {
                if let Some(n) = self.try_deletion(a, form) {
                    return Some(n);
                }
            }
        }
        None
    }

    fn try_addition(&mut self, a: &Arrangement, h: usize) -> Option<Node> {
        let deletion = a.delete(h).ok()?;
        let license = self.freeness.exponents(&deletion)?;
        let restriction = a.restrict(h).ok()?.arrangement;
        let psi_res = self.solve(&restriction)?.psi;
        let psi = psi_addition(&psi_free(&license), &psi_res);
        let form = a.forms()[h].clone();
        Some(Node { psi, step: Step::Addition { index: h, form, license, deletion, restriction } })
    }

    fn try_deletion(&mut self, a: &Arrangement, form: LinearForm) -> Option<Node> {
        if a.index_of(&form).is_some() {
            return None;
        }
        let full = a.add(form.clone()).ok()?;
        let license = self.freeness.exponents(&full)?;
        let restriction = full.restrict(a.len()).ok()?.arrangement;
        let psi_res = self.solve(&restriction)?.psi;
        let d = (a.len() - restriction.len()) as u32;
        let psi = psi_deletion(&psi_free(&license), &psi_res, d);
        Some(Node { psi, step: Step::Deletion { form, d, full, license, restriction } })
    }

    fn build_trace(&self, a: &Arrangement, out: &mut Vec<RuleApplication>) -> usize {
        let node = self.memo[&a.canonical_key()].as_ref().expect("solved").clone();
        let id = out.len();
        let names = a.names();
        let mut app = RuleApplication {
            id,
            rule: Rule::FreeFormula,
            arrangement: a.to_string(),
            dim: a.dim(),
            hyperplanes: a.len(),
            hyperplane_index: None,
            hyperplane: None,
            d: None,
            license: None,
            children: Vec::new(),
        };
        match &node.step {
            Step::Free { exponents } => {
                app.license = Some(License { arrangement: a.to_string(), exponents: exponents.clone() });
                out.push(app);
            }
            Step::Addition { index, form, license, deletion, restriction } => {
                app.rule = Rule::Addition;
                app.hyperplane_index = Some(*index);
                app.hyperplane = Some(form.display_with(&names));
                app.license = Some(License { arrangement: deletion.to_string(), exponents: license.clone() });
                out.push(app);
                let child = self.build_trace(restriction, out);
                out[id].children.push(child);
            }
            Step::Deletion { form, d, full, license, restriction } => {
                app.rule = Rule::Deletion;
                app.hyperplane = Some(form.display_with(&names));
                app.d = Some(*d);
                app.license = Some(License { arrangement: full.to_string(), exponents: license.clone() });
                out.push(app);
                let child = self.build_trace(restriction, out);
                out[id].children.push(child);
            }
        }
        id
    }
}

/// Coordinate forms, then `α_i + α_j` and `α_i − α_j` for `i < j`, skipping forms
/// already present.
pub fn generated_extensions(a: &Arrangement) -> Vec<LinearForm> {
    let mut out: Vec<LinearForm> = Vec::new();
    let mut push = |f: Option<LinearForm>| {
        if let Some(f) = f {
            if a.index_of(&f).is_none() && !out.contains(&f) {
                out.push(f);
            }
        }
    };
    for k in 0..a.dim() {
        let mut e = vec![BigInt::from(0); a.dim()];
        e[k] = BigInt::from(1);
        push(LinearForm::new(e));
    }
    let forms = a.forms();
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let (u, v) = (forms[i].coeffs(), forms[j].coeffs());
            push(LinearForm::new(u.iter().zip(v).map(|(p, q)| p + q).collect()));
            push(LinearForm::new(u.iter().zip(v).map(|(p, q)| p - q).collect()));
        }
    }
    out
}

/// `psi_auto` with the default extension search.
pub fn psi_auto(a: &Arrangement, budget: usize) -> PsiResult {
    StEngine::new(budget).psi(a)
}

/// A single-node result for the generic closed form.
pub fn psi_generic_result(a: &Arrangement) -> Result<PsiResult, StError> {
    let psi = psi_generic(a.dim())?;
    let chi = crate::lattice::char_poly(a);
    let at_one = psi.substitute(Var::X, &int(1));
    let signed = if a.dim() % 2 == 1 { -&at_one } else { at_one };
    let app = RuleApplication {
        id: 0,
        rule: Rule::Generic,
        arrangement: a.to_string(),
        dim: a.dim(),
        hyperplanes: a.len(),
        hyperplane_index: None,
        hyperplane: None,
        d: None,
        license: None,
        children: Vec::new(),
    };
    Ok(PsiResult {
        status: PsiStatus::Computed,
        reduced: Some(reduced(&psi)),
        chi_check: signed == BivariatePolynomial::from_t_poly(&chi),
        psi: Some(psi),
        method_trace: vec![app],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin::*;

    fn p(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_int_terms(terms)
    }

    fn x3_deleted_y() -> BivariatePolynomial {
        p(&[
            (0, 0, 1), (1, 0, 3), (2, 0, 6), (3, 0, 6), (4, 0, 4), (5, 0, 1),
            (1, 1, -1), (2, 1, -3), (3, 1, -10), (4, 1, -13), (5, 1, -12), (6, 1, -4),
            (4, 2, 4), (5, 2, 8), (6, 2, 12), (7, 2, 6),
            (6, 3, -1), (7, 3, -4), (8, 3, -4),
            (9, 4, 1),
        ])
    }

    #[test]
    fn free_formula() {
        assert_eq!(psi_free(&[]), BivariatePolynomial::one());
        assert_eq!(psi_free(&[0, 0]), p(&[(0, 2, 1)]));
        assert_eq!(psi_free(&[1, 1]), p(&[(0, 0, 1), (1, 1, -2), (2, 2, 1)]));
        let r = reduced(&psi_free(&[1, 3, 3, 3]));
        let expect = &UniPoly::geometric_sum(1) * &UniPoly::geometric_sum(3).pow(3);
        assert_eq!(r, expect);
    }

    #[test]
    fn deletion_reproduces_x3() {
        let psi = psi_deletion(&psi_free(&[1, 3, 3, 3]), &psi_free(&[1, 2, 3]), 3);
        assert_eq!(psi, x3_deleted_y());
        assert_eq!(reduced(&psi), UniPoly::from_i64s(&[1, 4, 9, 16, 21, 21, 17, 10, 4, 1]));
        assert_eq!(psi_deletion(&psi, &BivariatePolynomial::zero(), 5), psi);
    }

    #[test]
    fn addition_three_generic() {
        let psi = psi_addition(&psi_free(&[1, 1, 1]), &psi_free(&[1, 2]));
        assert_eq!(psi, psi_generic(3).unwrap());
        assert_eq!(reduced(&psi), UniPoly::from_i64s(&[1, 3, 5, 4, 1]));
        assert_eq!(psi_generic(2).unwrap(), psi_free(&[1, 2]));
        assert_eq!(psi_generic(1), Err(StError::DimensionTooSmall(1)));
    }

    #[test]
    fn auto_on_examples() {
        let r = psi_auto(&boolean(3), 100);
        assert!(r.chi_check);
        assert_eq!(r.method_trace.len(), 1);
        assert_eq!(r.psi, Some(psi_free(&[1, 1, 1])));

        let y = LinearForm::from_i64s(&[0, 1, 0, 0]).unwrap();
        let r = StEngine::new(1000).with_extensions(vec![y]).psi(&x3_h_y());
        assert!(r.chi_check);
        assert_eq!(r.psi, Some(x3_deleted_y()));
        assert_eq!(r.method_trace[0].rule, Rule::Deletion);

        let r = psi_auto(&three_generic(), 1000);
        assert_eq!(r.psi, Some(psi_generic(3).unwrap()));
        assert!(r.chi_check);
    }

    #[test]
    fn phi_round_trip() {
        for (psi, n, ell) in [
            (psi_free(&[1, 1]), 2, 2),
            (psi_free(&[0, 0, 0]), 0, 3),
            (x3_deleted_y(), 9, 4),
        ] {
            let phi = phi_from_psi(&psi, n, ell, 15).unwrap();
            assert_eq!(phi.offset(), -(n as i64));
            let back = psi_from_phi(&phi, n, ell).unwrap();
            assert!(back.matches_polynomial(&psi));
        }
        assert!(phi_from_psi(&psi_free(&[1, 1, 1]), 3, 2, 10).is_err());
        assert!(phi_from_psi(&psi_free(&[1, 1]), 2, 2, 1).is_err());
    }

    #[test]
    fn conjecture_report() {
        let r = conjecture_checks(&reduced(&psi_free(&[1, 3, 3, 3])), 10);
        assert!(r.degree_equals_n && r.monic && r.palindromic);
        assert_eq!(r.splits_as_product_of_geometric_sums, Some(vec![1, 3, 3, 3]));
        let r = conjecture_checks(&reduced(&x3_deleted_y()), 9);
        assert!(r.degree_equals_n && r.monic && !r.palindromic);
        assert_eq!(r.splits_as_product_of_geometric_sums, None);
        let r = conjecture_checks(&UniPoly::one(), 0);
        assert!(r.degree_equals_n && r.monic && r.palindromic);
    }

    #[test]
    fn auto_x3_deleted_x() {
        let x = LinearForm::from_i64s(&[1, 0, 0, 0]).unwrap();
        let r = StEngine::new(1000).with_extensions(vec![x]).psi(&x3_h_x());
        assert!(r.chi_check);
        let red = r.reduced.unwrap();
        let expect = &UniPoly::from_i64s(&[1, 1]) * &UniPoly::from_i64s(&[1, 3, 6, 10, 11, 10, 7, 2, 1]);
        assert_eq!(red, expect);
        let rules: Vec<Rule> = r.method_trace.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::Deletion, Rule::Addition, Rule::FreeFormula]);
        assert_eq!(r.method_trace[1].license.as_ref().unwrap().exponents, vec![1, 2, 2]);
        // without the hint the generated extensions find the same polynomial
        assert_eq!(psi_auto(&x3_h_x(), 1000).psi, r.psi);
    }

    #[test]
    fn generic_four_matches_auto() {
        let r = psi_auto(&generic_plus_one(4), 1000);
        assert!(r.chi_check);
        assert_eq!(r.psi, Some(psi_generic(4).unwrap()));
    }
}
