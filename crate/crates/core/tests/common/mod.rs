#![allow(dead_code)]

use std::collections::BTreeSet;

use gspace::action::{induced_action, ConjugationI, ConjugationII, FiniteCarrier, TableAction, TableUnary};
use gspace::catalog;
use gspace::{BinaryAction, FiniteGroup, Subgroup};

pub struct Instance {
    pub label: String,
    pub action: TableAction,
}

/// Both conjugation actions for every subgroup of every catalog group of
/// order at most `max_order`, plus induced actions from left translation
/// and from left multiplication on cosets.
pub fn finite_instances(max_order: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for (name, g) in catalog::all() {
        if g.order() > max_order {
            continue;
        }
        for h in g.all_subgroups() {
            let hs = g.render_set(h.members());
            let one = ConjugationI::<FiniteCarrier>::from_subgroup(&g, &h).unwrap();
            let two = ConjugationII::<FiniteCarrier>::from_subgroup(&g, &h).unwrap();
            out.push(Instance { label: format!("{name} I H={hs}"), action: TableAction::tabulate(&one).unwrap() });
            out.push(Instance { label: format!("{name} II H={hs}"), action: TableAction::tabulate(&two).unwrap() });
            let cosets = TableUnary::on_left_cosets(&g, &h).unwrap();
            out.push(Instance {
                label: format!("{name} induced G/H H={hs}"),
                action: TableAction::tabulate(&induced_action(cosets)).unwrap(),
            });
        }
        out.push(Instance {
            label: format!("{name} induced left translation"),
            action: TableAction::tabulate(&induced_action(TableUnary::left_translation(&g))).unwrap(),
        });
    }
    out
}

/// Unary actions of each small catalog group: left translation, the
/// trivial action, and left multiplication on cosets of every subgroup.
pub fn unary_family(max_order: usize) -> Vec<(String, FiniteGroup, TableUnary)> {
    let mut out = Vec::new();
    for (name, g) in catalog::all() {
        if g.order() > max_order {
            continue;
        }
        out.push((format!("{name} left"), g.clone(), TableUnary::left_translation(&g)));
        out.push((format!("{name} trivial"), g.clone(), TableUnary::trivial(&g, 3)));
        for h in g.all_subgroups() {
            let label = format!("{name} on G/{}", g.render_set(h.members()));
            out.push((label, g.clone(), TableUnary::on_left_cosets(&g, &h).unwrap()));
        }
    }
    out
}

pub fn subgroups_of(g: &FiniteGroup) -> Vec<Subgroup> {
    g.all_subgroups()
}

/// Smallest set containing `x` and closed under every `g(a, b)`, grown one
/// point at a time from a queue.
pub fn worklist_closure<A: BinaryAction>(action: &A, x: &A::Point) -> BTreeSet<A::Point> {
    let mut closed: Vec<A::Point> = Vec::new();
    let mut seen: BTreeSet<A::Point> = BTreeSet::from([x.clone()]);
    let mut queue = vec![x.clone()];
    while let Some(p) = queue.pop() {
        closed.push(p.clone());
        for q in closed.clone() {
            for g in action.group().elements() {
                for v in [action.apply(g, &p, &q).unwrap(), action.apply(g, &q, &p).unwrap()] {
                    if seen.insert(v.clone()) {
                        queue.push(v);
                    }
                }
            }
        }
    }
    seen
}

/// `G(S, S) ⊆ S`, written out directly.
pub fn closed_under<A: BinaryAction>(action: &A, s: &BTreeSet<A::Point>) -> bool {
    action.group().elements().all(|g| s.iter().all(|a| s.iter().all(|b| s.contains(&action.apply(g, a, b).unwrap()))))
}

pub struct UnionWitness {
    pub label: String,
    pub first: BTreeSet<usize>,
    pub second: BTreeSet<usize>,
}

/// Searches orbits of the instances for two bi-invariant sets whose union
/// is not bi-invariant.
pub fn find_union_witness(instances: &[Instance]) -> Option<UnionWitness> {
    for inst in instances {
        let n = inst.action.size();
        let orbits: BTreeSet<BTreeSet<usize>> = (0..n).map(|x| worklist_closure(&inst.action, &x)).collect();
        let orbits: Vec<_> = orbits.into_iter().collect();
        for (i, a) in orbits.iter().enumerate() {
            for b in &orbits[i + 1..] {
                let union: BTreeSet<usize> = a.union(b).copied().collect();
                if !closed_under(&inst.action, &union) {
                    return Some(UnionWitness { label: inst.label.clone(), first: a.clone(), second: b.clone() });
                }
            }
        }
    }
    None
}
