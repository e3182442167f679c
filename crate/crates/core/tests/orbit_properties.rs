mod common;

use std::collections::BTreeSet;

use gspace::laws::is_distributive_exhaustive;
use gspace::orbit::{
    full_image, image_of, intersect_bi_invariant, is_bi_invariant, orbit_layers, orbit_layers_naive, orbits_intersect,
    Intersection,
};
use gspace::BinaryAction;

const MAX_ORDER: usize = 12;

fn all_elements<A: BinaryAction>(a: &A) -> Vec<usize> {
    a.group().elements().collect()
}

#[test]
fn layers_form_a_monotone_chain_that_stabilises() {
    for inst in common::finite_instances(MAX_ORDER) {
        let n = inst.action.size();
        for x in 0..n {
            let layers = orbit_layers(&inst.action, &x, n + 1).unwrap();
            assert!(layers.converged, "{} x={x}", inst.label);
            for pair in layers.layers.windows(2) {
                assert!(pair[0].is_subset(&pair[1]), "{}", inst.label);
            }
            let last = layers.last();
            assert_eq!(&full_image(&inst.action, last).unwrap(), last, "{}", inst.label);
        }
    }
}

#[test]
fn converged_layer_is_the_minimal_closed_superset() {
    let mut pairs = 0;
    for inst in common::finite_instances(MAX_ORDER) {
        for x in 0..inst.action.size() {
            let layers = orbit_layers(&inst.action, &x, inst.action.size() + 1).unwrap();
            let orbit = layers.orbit().unwrap();
            assert_eq!(orbit, &common::worklist_closure(&inst.action, &x), "{} x={x}", inst.label);
            let diagonal = image_of(&inst.action, &all_elements(&inst.action), &[x].into(), &[x].into()).unwrap();
            assert!(diagonal.is_subset(orbit));
            pairs += 1;
        }
    }
    assert!(pairs >= 100);
}

#[test]
fn semi_naive_layers_match_naive_layers() {
    for inst in common::finite_instances(8) {
        for x in 0..inst.action.size() {
            let fast = orbit_layers(&inst.action, &x, 4).unwrap();
            let slow = orbit_layers_naive(&inst.action, &x, 4).unwrap();
            assert_eq!(fast, slow, "{} x={x}", inst.label);
        }
    }
}

#[test]
fn distributive_orbits_are_one_step_and_disjoint_or_equal() {
    let mut distributive = 0;
    for inst in common::finite_instances(MAX_ORDER) {
        if !is_distributive_exhaustive(&inst.action).unwrap().verdict.holds() {
            continue;
        }
        distributive += 1;
        let n = inst.action.size();
        let orbits: Vec<BTreeSet<usize>> = (0..n)
            .map(|x| {
                let layers = orbit_layers(&inst.action, &x, n + 1).unwrap();
                assert_eq!(layers.converged_at(), Some(1), "{} x={x}", inst.label);
                layers.orbit().unwrap().clone()
            })
            .collect();
        for a in &orbits {
            for b in &orbits {
                assert!(a == b || a.is_disjoint(b), "{}", inst.label);
            }
        }
    }
    assert!(distributive > 0);
}

#[test]
fn intersections_of_bi_invariant_sets_are_bi_invariant() {
    for inst in common::finite_instances(8) {
        let n = inst.action.size();
        let orbits: Vec<BTreeSet<usize>> = (0..n).map(|x| common::worklist_closure(&inst.action, &x)).collect();
        for a in &orbits {
            for b in &orbits {
                let meet = intersect_bi_invariant(&inst.action, a, b).unwrap();
                assert!(is_bi_invariant(&inst.action, &meet).unwrap(), "{}", inst.label);
                assert!(common::closed_under(&inst.action, &meet));
            }
        }
    }
}

#[test]
fn orbit_intersection_reports_are_consistent() {
    for inst in common::finite_instances(6) {
        let n = inst.action.size();
        for x in 0..n {
            for y in 0..n {
                let ox = common::worklist_closure(&inst.action, &x);
                let oy = common::worklist_closure(&inst.action, &y);
                match orbits_intersect(&inst.action, &x, &y, n + 1).unwrap() {
                    Intersection::Witness { point } => assert!(ox.contains(&point) && oy.contains(&point)),
                    Intersection::Disjoint { certified, .. } => {
                        assert!(certified);
                        assert!(ox.is_disjoint(&oy), "{}", inst.label);
                    }
                }
            }
        }
    }
}

#[test]
fn some_union_of_bi_invariant_sets_is_not_bi_invariant() {
    let instances = common::finite_instances(MAX_ORDER);
    let w = common::find_union_witness(&instances).expect("a union witness among small instances");
    let inst = instances.iter().find(|i| i.label == w.label).unwrap();
    assert!(is_bi_invariant(&inst.action, &w.first).unwrap());
    assert!(is_bi_invariant(&inst.action, &w.second).unwrap());
    let union: BTreeSet<usize> = w.first.union(&w.second).copied().collect();
    assert!(!is_bi_invariant(&inst.action, &union).unwrap());
}
