//! Freeness certificates by addition–deletion induction.
//!
//! The search strips hyperplanes toward rank ≤ 2 base cases. A node `A` is
//! certified free through `H` when `A'` and `A^H` are certified free and
//! `exp(A^H) ⊂ exp(A')`; then `exp(A) = exp(A^H) ∪ {|A| − |A^H|}`.
//! Non-freeness is only ever claimed from a characteristic polynomial that does
//! not split over the nonnegative integers.

use std::collections::HashMap;

use serde::Serialize;

use crate::arrangement::{Arrangement, LinearForm};
use crate::exact::{Rational, UniPoly};
use crate::lattice::char_poly;

pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Free,
    NotFree,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    /// Candidate exponents, ascending; not a proof of freeness.
    SplitsWithExponents(Vec<u64>),
    DoesNotSplit,
}

/// Tries to write `χ(A;t) = Π (t − d_i)` with nonnegative integers `d_i`.
pub fn factorization_test(a: &Arrangement) -> Split {
    split_chi(&char_poly(a), a.len())
}

/// Integer-root factorization of a monic characteristic polynomial; roots are bounded by `n`.
pub fn split_chi(chi: &UniPoly, n: usize) -> Split {
    let mut rest = chi.clone();
    let mut roots = Vec::new();
    for d in 0..=n as i64 {
        let factor = UniPoly::linear_factor(&Rational::from_integer(d.into()));
        while rest.degree().unwrap_or(0) > 0 {
            match rest.exact_div(&factor) {
                Some(q) => {
                    rest = q;
                    roots.push(d as u64);
                }
                None => break,
            }
        }
    }
    if rest.degree() == Some(0) && rest.is_monic() {
        Split::SplitsWithExponents(roots)
    } else {
        Split::DoesNotSplit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseCase {
    /// Rank 0: every exponent is 0.
    Empty,
    /// Rank 1: exponents (1, 0, …, 0).
    RankOne,
    /// Rank 2 with `n` hyperplanes: exponents (1, n − 1, 0, …, 0).
    RankTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum StepKind {
    Base { case: BaseCase },
    /// Free through the hyperplane at `hyperplane`; `deletion` and `restriction` are node ids.
    Delete { hyperplane: usize, deletion: usize, restriction: usize },
}

/// One node of the induction, listed in pre-order (the root has id 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub id: usize,
    pub dim: usize,
    pub hyperplanes: usize,
    pub arrangement: String,
    pub exponents: Vec<u64>,
    #[serde(flatten)]
    pub kind: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `χ(A;t)` (coefficients from the constant term up) has no factorization into
    /// linear factors with nonnegative integer roots.
    NonSplittingChi { chi: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknownReason {
    BudgetExhausted,
    /// Every deletion was explored and none yields an induction.
    NoInduction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessCertificate {
    pub status: Status,
    pub exponents: Option<Vec<u64>>,
    pub trace: Vec<TraceStep>,
    pub witness: Option<Witness>,
    pub unknown_reason: Option<UnknownReason>,
}

impl FreenessCertificate {
    pub fn is_free(&self) -> bool {
        self.status == Status::Free
    }
}

#[derive(Clone, Debug)]
enum Outcome {
    Base(BaseCase, Vec<u64>),
    Induction { hyperplane: LinearForm, exponents: Vec<u64> },
    NotFree,
    NoInduction,
}

type Key = (usize, Vec<LinearForm>);

/// Memoized deletion-direction search; reuse one instance across related arrangements.
#[derive(Debug)]
pub struct FreenessSearch {
    budget: usize,
    nodes: usize,
    memo: HashMap<Key, Outcome>,
    chi: HashMap<Key, UniPoly>,
}

impl Default for FreenessSearch {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

struct BudgetExhausted;

impl FreenessSearch {
    pub fn new(budget: usize) -> Self {
        Self { budget: budget.max(1), nodes: 0, memo: HashMap::new(), chi: HashMap::new() }
    }

    /// Search nodes expanded so far (memo hits are free).
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn chi(&mut self, a: &Arrangement) -> UniPoly {
        let key = a.canonical_key();
        self.chi.entry(key).or_insert_with(|| char_poly(a)).clone()
    }

    /// Exponents if `a` is certified free, without building a trace.
    pub fn exponents(&mut self, a: &Arrangement) -> Option<Vec<u64>> {
        match self.solve(a) {
            Ok(Outcome::Base(_, e)) | Ok(Outcome::Induction { exponents: e, .. }) => Some(e),
            _ => None,
        }
    }

    pub fn certify(&mut self, a: &Arrangement) -> FreenessCertificate {
        match self.solve(a) {
            Ok(Outcome::Base(..)) | Ok(Outcome::Induction { .. }) => {
                let mut trace = Vec::new();
                let mut ids = HashMap::new();
                let exps = self.build_trace(a, &mut trace, &mut ids);
                FreenessCertificate {
                    status: Status::Free,
                    exponents: Some(exps),
                    trace,
                    witness: None,
                    unknown_reason: None,
                }
            }
            Ok(Outcome::NotFree) => {
                let chi = self.chi(a);
                FreenessCertificate {
                    status: Status::NotFree,
                    exponents: None,
                    trace: Vec::new(),
                    witness: Some(Witness::NonSplittingChi {
                        chi: chi.coeffs().iter().map(|c| c.to_string()).collect(),
                    }),
                    unknown_reason: None,
                }
            }
            Ok(Outcome::NoInduction) => unknown(UnknownReason::NoInduction),
            Err(BudgetExhausted) => unknown(UnknownReason::BudgetExhausted),
        }
    }

    fn solve(&mut self, a: &Arrangement) -> Result<Outcome, BudgetExhausted> {
        let key = a.canonical_key();
        if let Some(o) = self.memo.get(&key) {
            return Ok(o.clone());
        }
        if self.nodes >= self.budget {
            return Err(BudgetExhausted);
        }
        self.nodes += 1;
        let outcome = self.expand(a)?;
        self.memo.insert(key, outcome.clone());
        Ok(outcome)
    }

    fn expand(&mut self, a: &Arrangement) -> Result<Outcome, BudgetExhausted> {
        let ell = a.dim();
        let rank = a.rank();
        if rank <= 2 {
            let mut e = vec![0u64; ell];
            let case = match rank {
                0 => BaseCase::Empty,
                1 => {
                    e[0] = 1;
                    BaseCase::RankOne
                }
                _ => {
                    e[0] = 1;
                    e[1] = a.len() as u64 - 1;
                    BaseCase::RankTwo
                }
            };
            e.sort_unstable();
            return Ok(Outcome::Base(case, e));
        }
        let chi = self.chi(a);
        let Split::SplitsWithExponents(roots) = split_chi(&chi, a.len()) else {
            return Ok(Outcome::NotFree);
        };
        for h in 0..a.len() {
            let res = a.restrict(h).expect("index in range").arrangement;
            let top = (a.len() - res.len()) as u64;
            if !roots.contains(&top) {
                continue;
            }
            let del = a.delete(h).expect("index in range");
            let Some(e_res) = self.exponents_checked(&res)? else { continue };
            let Some(e_del) = self.exponents_checked(&del)? else { continue };
            if let Some(exps) = combine(&e_del, &e_res, top) {
                return Ok(Outcome::Induction { hyperplane: a.forms()[h].clone(), exponents: exps });
            }
        }
        Ok(Outcome::NoInduction)
    }

    fn exponents_checked(&mut self, a: &Arrangement) -> Result<Option<Vec<u64>>, BudgetExhausted> {
        Ok(match self.solve(a)? {
            Outcome::Base(_, e) | Outcome::Induction { exponents: e, .. } => Some(e),
            _ => None,
        })
    }

    fn build_trace(&mut self, a: &Arrangement, trace: &mut Vec<TraceStep>, ids: &mut HashMap<Key, usize>) -> Vec<u64> {
        let key = a.canonical_key();
        let outcome = self.memo.get(&key).cloned().expect("solved before tracing");
        let id = trace.len();
        ids.insert(key, id);
        let (exponents, kind) = match outcome {
            Outcome::Base(case, e) => (e, StepKind::Base { case }),
            Outcome::Induction { hyperplane, exponents } => {
                let h = a.index_of(&hyperplane).expect("memo keys are order independent");
                (exponents, StepKind::Delete { hyperplane: h, deletion: 0, restriction: 0 })
            }
            _ => unreachable!("only free nodes are traced"),
        };
        trace.push(TraceStep {
            id,
            dim: a.dim(),
            hyperplanes: a.len(),
            arrangement: a.to_string(),
            exponents: exponents.clone(),
            kind: kind.clone(),
        });
        if let StepKind::Delete { hyperplane, .. } = kind {
            let del = a.delete(hyperplane).unwrap();
            let res = a.restrict(hyperplane).unwrap().arrangement;
            let d = self.trace_child(&del, trace, ids);
            let r = self.trace_child(&res, trace, ids);
            trace[id].kind = StepKind::Delete { hyperplane, deletion: d, restriction: r };
        }
        exponents
    }

    fn trace_child(&mut self, a: &Arrangement, trace: &mut Vec<TraceStep>, ids: &mut HashMap<Key, usize>) -> usize {
        if let Some(&id) = ids.get(&a.canonical_key()) {
            return id;
        }
        let id = trace.len();
        self.build_trace(a, trace, ids);
        id
    }
}

fn unknown(reason: UnknownReason) -> FreenessCertificate {
    FreenessCertificate {
        status: Status::Unknown,
        exponents: None,
        trace: Vec::new(),
        witness: None,
        unknown_reason: Some(reason),
    }
}

/// `exp(A)` from `exp(A')` and `exp(A^H)` when the latter sits inside the former.
pub fn combine(e_del: &[u64], e_res: &[u64], top: u64) -> Option<Vec<u64>> {
    let mut remaining = e_del.to_vec();
    for e in e_res {
        let i = remaining.iter().position(|x| x == e)?;
        remaining.swap_remove(i);
    }
    if remaining.len() != 1 || remaining[0] + 1 != top {
        return None;
    }
    let mut out = e_res.to_vec();
    out.push(top);
    out.sort_unstable();
    Some(out)
}

/// `certify_inductively_free` with a fresh search.
pub fn certify_inductively_free(a: &Arrangement, budget: usize) -> FreenessCertificate {
    FreenessSearch::new(budget).certify(a)
}

#[derive(Debug, PartialEq, Eq)]
pub struct ReplayError(pub String);

/// Re-derives every node of a Free certificate from `a` and checks base cases and
/// the exponent relation at each deletion step.
pub fn replay(a: &Arrangement, cert: &FreenessCertificate) -> Result<(), ReplayError> {
    if cert.status != Status::Free {
        return Err(ReplayError("only free certificates replay".into()));
    }
    let err = |s: String| Err(ReplayError(s));
    let mut nodes: Vec<Option<Arrangement>> = vec![None; cert.trace.len()];
    if cert.trace.is_empty() {
        return err("empty trace".into());
    }
    nodes[0] = Some(a.clone());
    for step in &cert.trace {
        let Some(node) = nodes[step.id].clone() else {
            return err(format!("node {} is never reached", step.id));
        };
        if node.dim() != step.dim || node.len() != step.hyperplanes {
            return err(format!("node {} does not match its arrangement", step.id));
        }
        if step.exponents.iter().sum::<u64>() != node.len() as u64 || step.exponents.len() != node.dim() {
            return err(format!("node {}: exponents do not sum to |A|", step.id));
        }
        match &step.kind {
            StepKind::Base { case } => {
                let want = match node.rank() {
                    0 => BaseCase::Empty,
                    1 => BaseCase::RankOne,
                    2 => BaseCase::RankTwo,
                    r => return err(format!("node {}: base case of rank {r}", step.id)),
                };
                if *case != want {
                    return err(format!("node {}: wrong base case", step.id));
                }
            }
            StepKind::Delete { hyperplane, deletion, restriction } => {
                let del = node.delete(*hyperplane).map_err(|e| ReplayError(e.to_string()))?;
                let res = node.restrict(*hyperplane).map_err(|e| ReplayError(e.to_string()))?.arrangement;
                for (child, arr) in [(*deletion, del), (*restriction, res)] {
                    let Some(c) = cert.trace.get(child) else {
                        return err(format!("node {}: missing child {child}", step.id));
                    };
                    if c.dim != arr.dim() || c.hyperplanes != arr.len() {
                        return err(format!("node {}: child {child} mismatch", step.id));
                    }
                    match &nodes[child] {
                        Some(prev) if prev.canonical_key() != arr.canonical_key() => {
                            return err(format!("node {}: child {child} mismatch", step.id));
                        }
                        _ => nodes[child] = Some(arr),
                    }
                }
                let top = (node.len() - cert.trace[*restriction].hyperplanes) as u64;
                let expect = combine(&cert.trace[*deletion].exponents, &cert.trace[*restriction].exponents, top);
                if expect.as_deref() != Some(&step.exponents[..]) {
                    return err(format!("node {}: exponents violate addition-deletion", step.id));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::builtin::*;

    #[test]
    fn boolean_is_free() {
        for ell in 1..=4 {
            let c = certify_inductively_free(&boolean(ell), DEFAULT_BUDGET);
            assert_eq!(c.exponents, Some(vec![1; ell]));
            replay(&boolean(ell), &c).unwrap();
        }
    }

    #[test]
    fn x3_is_free_with_1333() {
        let c = certify_inductively_free(&x3(), DEFAULT_BUDGET);
        assert_eq!(c.status, Status::Free);
        assert_eq!(c.exponents, Some(vec![1, 3, 3, 3]));
        assert_eq!(c.trace[0].id, 0);
        replay(&x3(), &c).unwrap();
    }

    #[test]
    fn restricted_x3_is_not_free() {
        let a = x3_restricted_x();
        let c = certify_inductively_free(&a, DEFAULT_BUDGET);
        assert_eq!(c.status, Status::NotFree);
        assert_eq!(
            c.witness,
            Some(Witness::NonSplittingChi { chi: ["-7", "12", "-6", "1"].map(String::from).to_vec() })
        );
        assert_eq!(factorization_test(&a), Split::DoesNotSplit);
    }

    #[test]
    fn factorization() {
        assert_eq!(factorization_test(&boolean(2)), Split::SplitsWithExponents(vec![1, 1]));
        assert_eq!(factorization_test(&x3()), Split::SplitsWithExponents(vec![1, 3, 3, 3]));
        assert_eq!(
            factorization_test(&Arrangement::empty(2)),
            Split::SplitsWithExponents(vec![0, 0])
        );
    }

    #[test]
    fn non_essential_and_budget() {
        let a = Arrangement::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).unwrap();
        let c = certify_inductively_free(&a, 1);
        assert_eq!(c.exponents, Some(vec![0, 1, 2]));
        let c = certify_inductively_free(&x3(), 1);
        assert_eq!(c.status, Status::Unknown);
        assert_eq!(c.unknown_reason, Some(UnknownReason::BudgetExhausted));
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let a = generic_plus_one(3);
        let mut c = certify_inductively_free(&boolean(3).add(LinearForm::from_i64s(&[1, 1, 0]).unwrap()).unwrap(), DEFAULT_BUDGET);
        assert_eq!(c.status, Status::Free);
        assert!(replay(&a, &c).is_err());
        c.trace[0].exponents = vec![1, 1, 2];
        c.trace[0].exponents.reverse();
        assert!(replay(&boolean(3), &c).is_err());
    }
}
