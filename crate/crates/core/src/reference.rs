//! Reference values for the worked examples and the acceptance criteria built on them.
//!
//! Each criterion returns a [`CriterionOutcome`]; nothing here panics on a mismatch,
//! so a failing criterion is reported rather than hidden.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arrangement::builtin::*;
use crate::arrangement::Arrangement;
use crate::corpus::{corpus, corpus_pairs, name, random_unimodular, seeded_rng, shuffled};
use crate::exact::{series_from_rational, BivariatePolynomial, UniPoly};
use crate::freeness::{FreenessSearch, DEFAULT_BUDGET};
use crate::lattice::char_poly;
use crate::oracle::{
    bseq_exactness_check, default_cutoff, euler_exactness_check, psi_truncated_from_table,
    terao_b_membership_check, LogOracle, ZERO_TAIL,
};
use crate::st::{conjecture_checks, psi_auto, psi_free, psi_generic, PsiResult, StEngine};

fn bp(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
    BivariatePolynomial::from_int_terms(terms)
}

fn up(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64s(coeffs)
}

/// `−tx + 1`.
fn one_minus_tx() -> BivariatePolynomial {
    bp(&[(0, 0, 1), (1, 1, -1)])
}

/// Printed `Ψ(A'; x, t)` for `X3 ∖ {y = 0}`, assembled from its five `t`-blocks.
pub fn x3_deleted_y_expected() -> BivariatePolynomial {
    bp(&[
        (0, 0, 1), (1, 0, 3), (2, 0, 6), (3, 0, 6), (4, 0, 4), (5, 0, 1),
        (1, 1, -1), (2, 1, -3), (3, 1, -10), (4, 1, -13), (5, 1, -12), (6, 1, -4),
        (4, 2, 4), (5, 2, 8), (6, 2, 12), (7, 2, 6),
        (6, 3, -1), (7, 3, -4), (8, 3, -4),
        (9, 4, 1),
    ])
}

pub fn x3_deleted_y_reduced_expected() -> UniPoly {
    up(&[1, 4, 9, 16, 21, 21, 17, 10, 4, 1])
}

/// Printed `Ψ(A'; x, t)` for `X3 ∖ {x = 0}`:
/// `(−tx+1)(−t³x⁸ + t²(2x⁷+6x⁶) − t(x⁶+10x⁵+7x⁴+4x³) + x⁶+x⁵+3x⁴+5x³+6x²+3x+1)`.
pub fn x3_deleted_x_printed() -> BivariatePolynomial {
    let inner = bp(&[
        (8, 3, -1),
        (7, 2, 2), (6, 2, 6),
        (6, 1, -1), (5, 1, -10), (4, 1, -7), (3, 1, -4),
        (6, 0, 1), (5, 0, 1), (4, 0, 3), (3, 0, 5), (2, 0, 6), (1, 0, 3), (0, 0, 1),
    ]);
    &one_minus_tx() * &inner
}

/// Printed `Ψ(A'; x, −1) = (1+x)(1+3x+6x²+9x³+10x⁴+11x⁵+8x⁶+2x⁷+x⁸)`.
pub fn x3_deleted_x_reduced_printed() -> UniPoly {
    &up(&[1, 1]) * &up(&[1, 3, 6, 9, 10, 11, 8, 2, 1])
}

/// `Ψ(A'; x, t)` for `X3 ∖ {x = 0}` obtained by expanding the deletion rule on the
/// stated inputs, and independently by the oracle truncation.
pub fn x3_deleted_x_derived() -> BivariatePolynomial {
    bp(&[
        (9, 4, 1),
        (8, 3, -3), (7, 3, -6),
        (7, 2, 3), (6, 2, 16), (5, 2, 7), (4, 2, 4),
        (6, 1, -1), (5, 1, -14), (4, 1, -13), (3, 1, -10), (2, 1, -3), (1, 1, -1),
        (4, 0, 4), (3, 0, 6), (2, 0, 6), (1, 0, 3), (0, 0, 1),
    ])
}

/// `(x+1)(x⁸+2x⁷+7x⁶+10x⁵+11x⁴+10x³+6x²+3x+1)`.
pub fn x3_deleted_x_reduced_derived() -> UniPoly {
    &up(&[1, 1]) * &up(&[1, 3, 6, 10, 11, 10, 7, 2, 1])
}

/// Printed `Ψ(A^H) = x(−tx+1)(−tx²+1+x)² + (−tx+1)(−tx³+1+x+x²)` for `X3` restricted to `x = 0`.
pub fn x3_restricted_x_expected() -> BivariatePolynomial {
    let a = &psi_free(&[1, 2, 2]).shift_x(1);
    a + &psi_free(&[1, 3])
}

pub fn three_generic_expected() -> BivariatePolynomial {
    bp(&[(0, 0, 1), (1, 0, 2), (1, 1, -1), (2, 1, -5), (3, 2, 4), (4, 3, -1)])
}

pub fn three_generic_reduced_expected() -> UniPoly {
    up(&[1, 3, 5, 4, 1])
}

/// `(x + 3x³ − x⁴)/(1 − x)³`, the Hilbert series of `D(A^H)` for `X3` restricted to `x = 0`.
pub fn x3_restricted_x_hilbert_numerator() -> UniPoly {
    up(&[0, 1, 0, 3, -1])
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict} {} ({:.2}s): {}", self.id, self.title, self.elapsed.as_secs_f64(), self.detail)
    }
}

fn timed(id: usize, title: &'static str, body: impl FnOnce() -> (bool, String)) -> CriterionOutcome {
    let start = Instant::now();
    let (passed, detail) = body();
    CriterionOutcome { id, title, passed, detail, elapsed: start.elapsed() }
}

/// `Ψ(A ∖ {H})` through the deletion rule, with `H` as the extension hint.
pub fn psi_of_deletion(a: &Arrangement, h: usize) -> PsiResult {
    let deleted = a.delete(h).expect("valid hyperplane");
    StEngine::new(DEFAULT_BUDGET).with_extensions(vec![a.forms()[h].clone()]).psi(&deleted)
}

fn fmt_psi(r: &PsiResult) -> String {
    match (&r.psi, &r.reduced) {
        (Some(p), Some(q)) => format!("Ψ = {p}; Ψ(x,−1) = {}", q.display_in("x")),
        _ => "no licensed computation".to_string(),
    }
}

pub fn criterion_1() -> CriterionOutcome {
    timed(1, "X3 deletion of y: every coefficient of Ψ(A') and Ψ(A';x,−1)", || {
        let start = Instant::now();
        let r = psi_of_deletion(&x3(), X3_Y);
        let fast = start.elapsed() < Duration::from_secs(1);
        let ok = r.psi.as_ref() == Some(&x3_deleted_y_expected())
            && r.reduced.as_ref() == Some(&x3_deleted_y_reduced_expected())
            && r.chi_check;
        (ok && fast, format!("{}; χ check {}; under 1 s: {fast}", fmt_psi(&r), r.chi_check))
    })
}

pub fn criterion_2() -> CriterionOutcome {
    timed(2, "X3 deletion of x: printed factorized Ψ(A') and Ψ(A';x,−1)", || {
        let start = Instant::now();
        let r = psi_of_deletion(&x3(), X3_X);
        let fast = start.elapsed() < Duration::from_secs(1);
        let full = r.psi.as_ref() == Some(&x3_deleted_x_printed());
        let red = r.reduced.as_ref() == Some(&x3_deleted_x_reduced_printed());
        let detail = format!(
            "Ψ matches printed: {full}; Ψ(x,−1) matches printed: {red}; computed Ψ(x,−1) = {}; printed = {}; χ check {}",
            r.reduced.as_ref().map(|q| q.display_in("x")).unwrap_or_default(),
            x3_deleted_x_reduced_printed().display_in("x"),
            r.chi_check,
        );
        (full && red && fast, detail)
    })
}

pub fn criterion_3() -> CriterionOutcome {
    timed(3, "three generic planes plus one: Ψ, Ψ(x,−1) and the generic closed form", || {
        let r = psi_auto(&three_generic(), DEFAULT_BUDGET);
        let generic = psi_generic(3).ok();
        let ok = r.psi.as_ref() == Some(&three_generic_expected())
            && r.reduced.as_ref() == Some(&three_generic_reduced_expected())
            && generic.as_ref() == Some(&three_generic_expected());
        (ok, format!("{}; closed form equal: {}", fmt_psi(&r), generic == r.psi))
    })
}

pub fn criterion_4() -> CriterionOutcome {
    timed(4, "χ specialization (−1)^ℓ Ψ(A;1,t) = χ(A;t) on the corpus", || {
        let mut bad = Vec::new();
        let members = corpus();
        for a in &members {
            let r = psi_auto(a, DEFAULT_BUDGET);
            if !r.is_computed() || !r.chi_check {
                bad.push(format!("{} ({:?})", name(a), r.status));
            }
        }
        (bad.is_empty(), format!("{} arrangements; failures: {bad:?}", members.len()))
    })
}

pub fn criterion_5(oracle: &LogOracle) -> CriterionOutcome {
    timed(5, "oracle truncation of Ψ against the engine", || {
        let mut notes = Vec::new();
        let mut ok = true;
        for a in [boolean(2), boolean(3), concurrent(3), three_generic(), x3()] {
            let cutoff = default_cutoff(&a);
            let r = psi_auto(&a, DEFAULT_BUDGET);
            let agree = match (oracle.hilbert_table(&a, cutoff), &r.psi) {
                (Ok(table), Some(psi)) => {
                    let s = psi_truncated_from_table(&table);
                    table.closed_form_violations().is_empty() && s.to_polynomial(ZERO_TAIL).as_ref() == Some(psi)
                }
                _ => false,
            };
            ok &= agree;
            notes.push(format!("{} to x^{cutoff}: {agree}", name(&a)));
        }
        let agree = match oracle.hilbert_table(&x3_restricted_x(), 10) {
            Ok(table) => psi_truncated_from_table(&table).matches_polynomial(&x3_restricted_x_expected()),
            Err(_) => false,
        };
        ok &= agree;
        notes.push(format!("x3_restricted_x to x^10 against the printed Ψ(A^H): {agree}"));
        (ok, notes.join("; "))
    })
}

pub fn criterion_6(oracle: &LogOracle) -> CriterionOutcome {
    timed(6, "B-sequence and Euler-sequence exactness, degreewise to 8", || {
        let mut notes = Vec::new();
        let mut ok = true;
        let mut run = |label: String, reports: Result<Vec<crate::oracle::DegreeReport>, _>| {
            let zero = reports.map(|r| r.iter().all(|x| x.defect == 0)).unwrap_or(false);
            ok &= zero;
            if !zero {
                notes.push(label);
            }
        };
        let x = x3();
        for p in 1..=4 {
            run(format!("bseq x3 H=x p={p}"), bseq_exactness_check(oracle, &x, X3_X, p, 8));
        }
        let b = boolean(3);
        for h in 0..3 {
            for p in 1..=3 {
                run(format!("bseq boolean3 H={h} p={p}"), bseq_exactness_check(oracle, &b, h, p, 8));
            }
        }
        for p in 1..=3 {
            run(format!("euler x3 H=y p={p}"), euler_exactness_check(oracle, &x, X3_Y, p, 8));
        }
        (ok, if notes.is_empty() { "all defects zero".into() } else { format!("nonzero: {notes:?}") })
    })
}

pub fn criterion_7(oracle: &LogOracle) -> CriterionOutcome {
    timed(7, "D(A^H) for X3 restricted to x = 0 against (x+3x³−x⁴)/(1−x)³", || {
        let predicted: Vec<String> = series_from_rational(&x3_restricted_x_hilbert_numerator(), 3, 8)
            .constant_coefficients()
            .unwrap_or_default()
            .iter()
            .map(|c| c.to_string())
            .collect();
        let dims: Vec<String> = (0..=8)
            .map(|d| oracle.dim_dp(&x3_restricted_x(), 1, d).map(|v| v.to_string()).unwrap_or_default())
            .collect();
        let head = dims[..5] == ["0", "1", "3", "9", "18"];
        (dims == predicted && head, format!("oracle {dims:?}; predicted {predicted:?}"))
    })
}

pub fn criterion_8() -> CriterionOutcome {
    timed(8, "θ(α_H) ∈ (α_H, B) for D(A') on every corpus pair, degrees ≤ 6", || {
        let pairs = corpus_pairs();
        let mut bad = Vec::new();
        for (a, h) in &pairs {
            match terao_b_membership_check(a, *h, 6) {
                Ok(rep) if rep.iter().all(|r| r.failures == 0) => {}
                _ => bad.push(format!("{} H={h}", name(a))),
            }
        }
        (bad.is_empty(), format!("{} pairs; failures: {bad:?}", pairs.len()))
    })
}

pub fn criterion_9() -> CriterionOutcome {
    timed(9, "reduced polynomial: degree, monic, palindromic, geometric split", || {
        let mut notes = Vec::new();
        let mut ok = true;
        for h in [X3_Y, X3_X] {
            let r = psi_of_deletion(&x3(), h);
            let pass = match &r.reduced {
                Some(q) => {
                    let c = conjecture_checks(q, 9);
                    c.degree_equals_n && c.monic && !c.palindromic
                }
                None => false,
            };
            ok &= pass;
            notes.push(format!("x3 minus hyperplane {h}: {pass}"));
        }
        let mut search = FreenessSearch::new(DEFAULT_BUDGET);
        let mut free = 0;
        for a in corpus() {
            let Some(exps) = search.exponents(&a) else { continue };
            free += 1;
            let r = psi_auto(&a, DEFAULT_BUDGET);
            let nonzero: Vec<u64> = exps.iter().copied().filter(|&d| d > 0).collect();
            let pass = match &r.reduced {
                Some(q) => {
                    let c = conjecture_checks(q, a.len());
                    c.degree_equals_n && c.monic && c.palindromic && c.splits_as_product_of_geometric_sums == Some(nonzero)
                }
                None => false,
            };
            if !pass {
                notes.push(format!("{} failed", name(&a)));
            }
            ok &= pass;
        }
        notes.push(format!("{free} free corpus members checked"));
        (ok, notes.join("; "))
    })
}

pub fn criterion_10(oracle: &LogOracle) -> CriterionOutcome {
    timed(10, "deletion-restriction for χ, path independence, GL-invariance of the oracle", || {
        let mut notes = Vec::new();
        let mut dr_bad = 0;
        for (a, h) in corpus_pairs() {
            let lhs = char_poly(&a);
            let rhs = &char_poly(&a.delete(h).unwrap()) - &char_poly(&a.restrict(h).unwrap().arrangement);
            if lhs != rhs {
                dr_bad += 1;
            }
        }
        notes.push(format!("χ deletion-restriction failures: {dr_bad}"));

        let mut rng = seeded_rng(20_240_601);
        let mut path_bad = Vec::new();
        let mut gl_bad = Vec::new();
        for a in corpus() {
            let base = psi_auto(&a, DEFAULT_BUDGET).psi;
            for _ in 0..3 {
                if psi_auto(&shuffled(&a, &mut rng), DEFAULT_BUDGET).psi != base {
                    path_bad.push(name(&a));
                }
            }
            let table = oracle.hilbert_table(&a, GL_CUTOFF).map(|t| t.dims);
            for _ in 0..5 {
                let g = random_unimodular(a.dim(), &mut rng);
                let moved = a.transform(&g).expect("unimodular");
                if oracle.hilbert_table(&moved, GL_CUTOFF).map(|t| t.dims) != table || table.is_err() {
                    gl_bad.push(name(&a));
                }
            }
        }
        notes.push(format!("path independence failures: {path_bad:?}"));
        notes.push(format!("GL-invariance failures (to degree {GL_CUTOFF}): {gl_bad:?}"));
        (dr_bad == 0 && path_bad.is_empty() && gl_bad.is_empty(), notes.join("; "))
    })
}

/// Degree bound for the GL-invariance comparison.
pub const GL_CUTOFF: usize = 6;

pub fn run_criterion(id: usize, oracle: &LogOracle) -> Option<CriterionOutcome> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(oracle),
        6 => criterion_6(oracle),
        7 => criterion_7(oracle),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(oracle),
        _ => return None,
    })
}

pub fn run_all(oracle: &LogOracle) -> Vec<CriterionOutcome> {
    (1..=10).filter_map(|id| run_criterion(id, oracle)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_factorization_disagrees_with_its_own_inputs() {
        let derived = crate::st::psi_deletion(&psi_free(&[1, 3, 3, 3]), &x3_restricted_x_expected(), 3);
        assert_eq!(derived, x3_deleted_x_derived());
        assert_ne!(derived, x3_deleted_x_printed());
        let red = crate::st::reduced(&derived);
        assert_eq!(red, x3_deleted_x_reduced_derived());
        assert_ne!(red, x3_deleted_x_reduced_printed());
    }

    #[test]
    fn restricted_reference_expands() {
        let p = x3_restricted_x_expected();
        let expect = bp(&[
            (0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 0, 1),
            (1, 1, -1), (2, 1, -2), (3, 1, -6), (4, 1, -3),
            (4, 2, 3), (5, 2, 3),
            (6, 3, -1),
        ]);
        assert_eq!(p, expect);
    }
}
