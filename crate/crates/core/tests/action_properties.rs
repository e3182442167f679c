mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use gspace::action::{
    induced_action, is_invariant, natural_g_square, unary_axiom_violations, verify_axioms_exhaustive, ConjugationII,
    FiniteCarrier, TableAction, TableUnary,
};
use gspace::catalog;
use gspace::laws::{induced_distributivity_criterion, is_distributive_exhaustive};
use gspace::orbit::is_bi_invariant;
use gspace::UnaryAction;
use proptest::prelude::*;

#[test]
fn every_constructed_action_satisfies_the_axioms() {
    for inst in common::finite_instances(12) {
        let report = verify_axioms_exhaustive(&inst.action).unwrap();
        assert!(report.holds(), "{}", inst.label);
    }
    for (_, g) in catalog::all().into_iter().filter(|(_, g)| g.order() <= 8) {
        let projection = TableAction::projection(g, vec!["p".into(), "q".into()]);
        assert!(verify_axioms_exhaustive(&projection).unwrap().holds());
    }
}

#[test]
fn a_broken_table_is_caught() {
    let g = catalog::symmetric(3);
    let base = TableAction::tabulate(&induced_action(TableUnary::left_translation(&g))).unwrap();
    let broken = base.with_entry(g.identity(), 0, 1, 2);
    let report = verify_axioms_exhaustive(&broken).unwrap();
    assert!(!report.holds());
    assert!(!report.eq2_violations.is_empty());
}

#[test]
fn unary_family_satisfies_unary_axioms() {
    for (label, _, u) in common::unary_family(12) {
        assert!(unary_axiom_violations(&u).unwrap().is_empty(), "{label}");
    }
}

#[test]
fn natural_g_square_is_an_action() {
    for inst in common::finite_instances(8) {
        let square = natural_g_square(inst.action.clone()).unwrap();
        let g = square.group().clone();
        for a in g.elements() {
            for b in g.elements() {
                for p in square.points() {
                    let lhs = square.act(g.mul(a, b), &p).unwrap();
                    let rhs = square.act(a, &square.act(b, &p).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{}", inst.label);
                }
            }
        }
    }
}

#[test]
fn induced_distributivity_matches_commutator_criterion() {
    let mut seen = BTreeSet::new();
    for (label, _, u) in common::unary_family(12) {
        let report = induced_distributivity_criterion(&u).unwrap();
        assert!(report.verdict.holds(), "{label}");
        seen.insert(report.distributive);
        if let Some(w) = &report.counterexample {
            assert!(w.confirms(&induced_action(&u)), "{label}");
        }
    }
    assert_eq!(seen, BTreeSet::from([false, true]));
}

fn small_instances() -> &'static [common::Instance] {
    static CELL: OnceLock<Vec<common::Instance>> = OnceLock::new();
    CELL.get_or_init(|| common::finite_instances(6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_two_is_distributive(pick in 0usize..64, sub in any::<prop::sample::Index>()) {
        let names = catalog::NAMES;
        let g = catalog::by_name(names[pick % names.len()]).unwrap();
        prop_assume!(g.order() <= 12);
        let subgroups = g.all_subgroups();
        let h = &subgroups[sub.index(subgroups.len())];
        let action = ConjugationII::<FiniteCarrier>::from_subgroup(&g, h).unwrap();
        prop_assert!(is_distributive_exhaustive(&action).unwrap().verdict.holds());
    }

    #[test]
    fn square_invariance_matches_bi_invariance(raw in prop::collection::btree_set(0usize..4096, 0..6)) {
        for inst in small_instances() {
            let n = inst.action.size();
            let set: BTreeSet<usize> = raw.iter().map(|r| r % n).collect();
            let square = natural_g_square(inst.action.clone()).unwrap();
            let pairs: BTreeSet<(usize, usize)> =
                set.iter().flat_map(|&a| set.iter().map(move |&b| (a, b))).collect();
            prop_assert_eq!(
                is_bi_invariant(&inst.action, &set).unwrap(),
                is_invariant(&square, &pairs).unwrap(),
                "{}", inst.label
            );
        }
    }

    #[test]
    fn induced_bi_invariance_matches_invariance(raw in prop::collection::btree_set(0usize..4096, 0..6)) {
        for (label, _, u) in common::unary_family(8) {
            let n = u.points().len();
            let set: BTreeSet<usize> = raw.iter().map(|r| r % n).collect();
            let induced = induced_action(&u);
            prop_assert_eq!(
                is_bi_invariant(&induced, &set).unwrap(),
                is_invariant(&u, &set).unwrap(),
                "{}", label
            );
        }
    }
}
