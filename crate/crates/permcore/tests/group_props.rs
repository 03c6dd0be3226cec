//! Property tests: chain order against exhaustive closure, orbit partitions,
//! and subset-orbit invariance on randomly generated small groups.

use std::collections::HashSet;

use permcore::{PermGroup, Permutation};
use proptest::prelude::*;

fn closure_order(gens: &[Permutation], degree: usize) -> usize {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = vec![Permutation::identity(degree)];
    seen.insert(queue[0].images().to_vec());
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.images().to_vec()) {
                queue.push(h);
            }
        }
    }
    seen.len()
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group(degree: usize) -> impl Strategy<Value = PermGroup> {
    proptest::collection::vec(arb_perm(degree), 1..3)
        .prop_map(move |gens| PermGroup::new(degree, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_order_equals_closure(g in (3usize..7).prop_flat_map(arb_group)) {
        prop_assert_eq!(g.order(), closure_order(g.generators(), g.degree()) as u128);
    }

    #[test]
    fn orbit_sizes_partition_degree(g in (3usize..8).prop_flat_map(arb_group)) {
        let orbits = g.orbits();
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(total, g.degree());
        for o in orbits {
            prop_assert_eq!(g.order() % o.len() as u128, 0);
        }
    }

    #[test]
    fn generators_and_identity_are_members(g in (3usize..7).prop_flat_map(arb_group)) {
        prop_assert!(g.contains(&Permutation::identity(g.degree())));
        for gen in g.generators() {
            prop_assert!(g.contains(gen));
        }
    }

    #[test]
    fn compose_is_associative(
        p in arb_perm(6), q in arb_perm(6), r in arb_perm(6)
    ) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&Permutation::identity(6)), p.clone());
    }

    #[test]
    fn subset_index_is_orbit_invariant(
        g in (3usize..7).prop_flat_map(arb_group),
        mask in 0u64..64,
    ) {
        let degree = g.degree();
        let mask = mask & ((1u64 << degree) - 1);
        let pts: Vec<u32> = (0..degree as u32).filter(|p| mask >> p & 1 == 1).collect();
        let idx = g.setwise_stabilizer_index(&pts).unwrap();
        for gen in g.generators() {
            let image: Vec<u32> = pts.iter().map(|&p| gen.apply(p)).collect();
            prop_assert_eq!(g.setwise_stabilizer_index(&image).unwrap(), idx);
        }
        // the stabilizer order |G|/index is integral
        prop_assert_eq!(g.order() % idx, 0);
    }

    #[test]
    fn coset_degree_times_subgroup_order_is_group_order(
        g in (3usize..6).prop_flat_map(arb_group),
        pick in any::<proptest::sample::Index>(),
    ) {
        let elements: Vec<Permutation> = g.elements().collect();
        let h = pick.get(&elements).clone();
        let table = g.coset_action(&[h]).unwrap();
        prop_assert_eq!(table.index * table.subgroup_order, g.order());
        prop_assert!(table.action.is_transitive());
        prop_assert_eq!(table.action.degree() as u128, table.index);
    }
}

#[test]
fn identity_passes_membership_and_outside_point_fails() {
    // a group moving only {0,1} cannot contain a 3-cycle on {2,3,4}
    let g = PermGroup::new(5, vec![Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap()])
        .unwrap();
    let outside = Permutation::from_cycles(5, &[vec![2, 3, 4]]).unwrap();
    assert!(!g.contains(&outside));
}
