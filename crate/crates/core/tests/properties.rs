//! Property tests for the exact core, the lattice, the engine and the oracle.

use std::sync::OnceLock;

use hyperarr::arrangement::{Arrangement, LinearForm};
use hyperarr::builtin::*;
use hyperarr::corpus::{corpus, random_unimodular, seeded_rng, shuffled};
use hyperarr::exact::linalg::{bareiss, modular, SparseIntMatrix};
use hyperarr::exact::{BivariatePolynomial, Rational, TruncatedSeries, Var};
use hyperarr::lattice::char_poly;
use hyperarr::oracle::LogOracle;
use hyperarr::st::{phi_from_psi, psi_addition, psi_auto, psi_deletion, psi_free, psi_from_phi, reduced};
use proptest::prelude::*;

fn oracle() -> &'static LogOracle {
    static ORACLE: OnceLock<LogOracle> = OnceLock::new();
    ORACLE.get_or_init(LogOracle::new)
}

fn poly() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((0u32..5, 0u32..4, -6i64..7), 0..8)
        .prop_map(|terms| BivariatePolynomial::from_int_terms(&terms))
}

fn small_arrangement() -> impl Strategy<Value = Arrangement> {
    (2usize..=3)
        .prop_flat_map(|ell| (Just(ell), prop::collection::vec(prop::collection::vec(-2i64..=2, ell), 1..6)))
        .prop_map(|(ell, rows)| {
            let mut forms: Vec<LinearForm> = Vec::new();
            for r in rows {
                if let Some(f) = LinearForm::from_i64s(&r) {
                    if !forms.contains(&f) {
                        forms.push(f);
                    }
                }
            }
            Arrangement::new(ell, forms).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(a in poly(), b in poly(), v in -3i64..4) {
        let r = Rational::from_integer(v.into());
        for var in [Var::X, Var::T] {
            let lhs = (&a * &b).substitute(var, &r);
            let rhs = &a.substitute(var, &r) * &b.substitute(var, &r);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitutions_commute(a in poly(), u in -3i64..4, v in -3i64..4) {
        let (u, v) = (Rational::from_integer(u.into()), Rational::from_integer(v.into()));
        let xt = a.substitute(Var::X, &u).substitute(Var::T, &v);
        let tx = a.substitute(Var::T, &v).substitute(Var::X, &u);
        prop_assert_eq!(xt, tx);
    }

    #[test]
    fn series_are_linear(a in poly(), b in poly(), m in poly(), cutoff in 0i64..8) {
        let sa = TruncatedSeries::from_polynomial(&a, cutoff);
        let sb = TruncatedSeries::from_polynomial(&b, cutoff);
        prop_assert_eq!(sa.add(&sb), TruncatedSeries::from_polynomial(&(&a + &b), cutoff));
        prop_assert_eq!(sa.mul_poly(&m), TruncatedSeries::from_polynomial(&(&a * &m), cutoff));
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(BivariatePolynomial::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn chi_deletion_restriction(a in small_arrangement(), pick in 0usize..6) {
        let h = pick % a.len();
        let lhs = char_poly(&a);
        let rhs = &char_poly(&a.delete(h).unwrap()) - &char_poly(&a.restrict(h).unwrap().arrangement);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_specializes_to_chi(a in small_arrangement()) {
        // some arrangements have no licensed computation tree and come back Unknown
        let r = psi_auto(&a, 2_000);
        prop_assert!(!r.is_computed() || r.chi_check);
        if a.dim() == 2 {
            prop_assert!(r.is_computed());
        }
    }

    #[test]
    fn free_formula_is_palindromic(exps in prop::collection::vec(0u64..5, 0..5)) {
        let red = reduced(&psi_free(&exps));
        let total: u64 = exps.iter().sum();
        prop_assert_eq!(red.degree(), Some(total as usize));
        prop_assert!(red.is_monic());
        prop_assert!(red.is_palindromic());
    }

    #[test]
    fn phi_round_trips(exps in prop::collection::vec(0u64..4, 1..4), extra in 0usize..3) {
        let psi = psi_free(&exps);
        let n: u64 = exps.iter().sum();
        let ell = exps.len();
        let cutoff = psi.deg_x().unwrap_or(0) as usize + extra;
        let phi = phi_from_psi(&psi, n as usize, ell, cutoff).unwrap();
        prop_assert!(psi_from_phi(&phi, n as usize, ell).unwrap().matches_polynomial(&psi));
    }

    #[test]
    fn bareiss_and_modular_agree(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 6), 1..6)) {
        let m = SparseIntMatrix::from_dense(&rows);
        let exact = bareiss::kernel(&m);
        let lifted = modular::kernel(&m, true);
        prop_assert_eq!(exact.dim(), lifted.dim());
        prop_assert_eq!(&exact.pivots, &lifted.pivots);
        for v in &lifted.basis {
            prop_assert!(m.annihilates(v));
        }
    }
}

/// Addition and deletion are inverse to each other on triples where `A`, `A'` and
/// `A^H` are all free.
#[test]
fn addition_and_deletion_agree_on_free_triples() {
    use hyperarr::freeness::FreenessSearch;
    let mut search = FreenessSearch::default();
    let mut checked = 0;
    for a in corpus() {
        let Some(full) = search.exponents(&a) else { continue };
        for h in 0..a.len() {
            let del = a.delete(h).unwrap();
            let res = a.restrict(h).unwrap().arrangement;
            let (Some(ed), Some(er)) = (search.exponents(&del), search.exponents(&res)) else { continue };
            let d = (del.len() - res.len()) as u32;
            assert_eq!(psi_addition(&psi_free(&ed), &psi_free(&er)), psi_free(&full), "{a} H={h}");
            assert_eq!(psi_deletion(&psi_free(&full), &psi_free(&er), d), psi_free(&ed), "{a} H={h}");
            checked += 1;
        }
    }
    assert!(checked > 20);
}

#[test]
fn path_independence_under_reordering() {
    let mut rng = seeded_rng(11);
    for a in [x3_h_x(), x3_h_y(), x3_restricted_x(), generic_plus_one(4)] {
        let base = psi_auto(&a, 20_000).psi.unwrap();
        for _ in 0..4 {
            assert_eq!(psi_auto(&shuffled(&a, &mut rng), 20_000).psi.unwrap(), base);
        }
    }
}

#[test]
fn oracle_dimensions_are_gl_invariant() {
    let mut rng = seeded_rng(5);
    for a in [x3_restricted_x(), concurrent(5), generic_plus_one(4)] {
        let table = oracle().hilbert_table(&a, 5).unwrap();
        for _ in 0..3 {
            let g = random_unimodular(a.dim(), &mut rng);
            assert_eq!(oracle().hilbert_table(&a.transform(&g).unwrap(), 5).unwrap().dims, table.dims);
        }
    }
}

#[test]
fn deletion_is_monotone_in_the_oracle() {
    let a = x3();
    for h in [X3_X, X3_Y] {
        let del = a.delete(h).unwrap();
        let big = oracle().hilbert_table(&del, 7).unwrap();
        let small = oracle().hilbert_table(&a, 7).unwrap();
        for p in 0..=4 {
            for d in 0..=7 {
                assert!(big.dims[p][d] >= small.dims[p][d]);
            }
        }
    }
}
