use std::collections::BTreeSet;

use gspace::catalog;
use gspace::{FiniteGroup, Subgroup};
use proptest::prelude::*;

fn catalog_group() -> impl Strategy<Value = FiniteGroup> {
    (0..catalog::NAMES.len()).prop_map(|i| catalog::by_name(catalog::NAMES[i]).unwrap())
}

/// A catalog group with a subgroup generated by up to three random elements.
fn group_and_subgroup() -> impl Strategy<Value = (FiniteGroup, Subgroup)> {
    (catalog_group(), prop::collection::vec(any::<prop::sample::Index>(), 0..3)).prop_map(|(g, picks)| {
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = g.subgroup_generated(&gens).unwrap();
        (g, h)
    })
}

fn permutation(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle()
}

fn assert_group_laws(g: &FiniteGroup) {
    let e = g.identity();
    for a in g.elements() {
        assert_eq!(g.mul(e, a), a);
        assert_eq!(g.mul(a, e), a);
        assert_eq!(g.mul(a, g.inv(a)), e);
        for b in g.elements() {
            for c in g.elements() {
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}

#[test]
fn catalog_groups_satisfy_group_laws() {
    for (_, g) in catalog::all() {
        assert_group_laws(&g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_closures_are_groups(gens in prop::collection::vec(permutation(4), 1..3)) {
        let g = FiniteGroup::from_permutations(&gens).unwrap();
        assert_group_laws(&g);
        prop_assert_eq!(24 % g.order(), 0);
    }

    #[test]
    fn normalizer_contains_subgroup_and_is_closed((g, h) in group_and_subgroup()) {
        let n = g.normalizer(&h).unwrap();
        prop_assert!(h.is_subset_of(&n));
        for &a in n.members() {
            for &b in n.members() {
                prop_assert!(n.contains(g.mul(a, b)));
            }
        }
        // Brute force: conjugating h by members of n stays in h.
        for &c in n.members() {
            for &k in h.members() {
                prop_assert!(h.contains(g.conjugate(k, c)));
            }
        }
    }

    #[test]
    fn commutator_subgroup_is_normal(g in catalog_group()) {
        let derived = g.commutator_subgroup();
        for c in g.elements() {
            for &k in derived.members() {
                prop_assert!(derived.contains(g.conjugate(k, c)));
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                prop_assert!(derived.contains(g.commutator_of(a, b)));
            }
        }
    }

    #[test]
    fn cosets_partition_into_equal_blocks((g, h) in group_and_subgroup()) {
        let blocks = g.left_cosets(&h).unwrap();
        prop_assert_eq!(blocks.len() * h.order(), g.order());
        let mut seen = BTreeSet::new();
        for block in &blocks {
            prop_assert_eq!(block.len(), h.order());
            let expected: BTreeSet<usize> = h.members().iter().map(|&k| g.mul(block[0], k)).collect();
            prop_assert_eq!(&expected, &block.iter().copied().collect::<BTreeSet<_>>());
            for &x in block {
                prop_assert!(seen.insert(x));
            }
        }
    }

    #[test]
    fn restriction_preserves_products((g, h) in group_and_subgroup()) {
        let sub = g.restrict(&h).unwrap();
        let members = h.members();
        for i in sub.elements() {
            for j in sub.elements() {
                prop_assert_eq!(members[sub.mul(i, j)], g.mul(members[i], members[j]));
            }
        }
    }
}
