use locc_core::linalg::ComplexMatrix;
use locc_core::protocol::{ProtocolNode, DEFAULT_MAX_STATES};
use locc_core::state::random::haar_unitary;
use locc_core::state::{builtin, BUILTIN_NAMES};
use locc_core::{distinguish, random_complete_pops, theorem1_class, theorem2_bruteforce, PopsSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-8;

fn check_node(set: &PopsSet<f64>, node: &ProtocolNode<f64>) {
    let ms = node.action.measurements();
    assert_eq!(ms.is_empty(), node.children.is_empty());
    for m in &ms {
        assert!(m.is_nondestructive(set, TOL), "round {} on {:?}", node.round, node.candidates);
        let mut assigned: Vec<usize> = m.outcomes.iter().flat_map(|o| o.candidates.clone()).collect();
        assigned.sort_unstable();
        assert_eq!(assigned, node.candidates);
    }
    let mut covered: Vec<usize> = node.children.values().flat_map(|c| c.candidates.clone()).collect();
    covered.sort_unstable();
    if !node.children.is_empty() {
        assert_eq!(covered, node.candidates);
        assert!(node.children.len() >= 2, "a measurement must split its candidates");
    }
    for child in node.children.values() {
        assert_eq!(child.round, node.round + 1);
        check_node(set, child);
    }
}

fn sorted_partition(mut p: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut p {
        b.sort_unstable();
    }
    p.sort();
    p
}

#[test]
fn builtin_protocols_are_sound() {
    for name in BUILTIN_NAMES {
        let set = builtin::<f64>(name).unwrap();
        let (tree, _) = distinguish(&set, TOL, None).unwrap();
        check_node(&set, &tree.root);
    }
}

#[test]
fn two_by_n_always_distinguishable() {
    for seed in 0..60u64 {
        let n = 2 + (seed as usize) % 4;
        let set = random_complete_pops::<f64>(2, n, seed, 2 * n);
        let (_, verdict) = distinguish(&set, TOL, None).unwrap();
        assert!(verdict.distinguishable, "2x{n} seed {seed}");
        assert_eq!(verdict.final_partition.len(), 2 * n);
    }
}

#[test]
fn oracle_agrees_on_small_shapes() {
    for seed in 0..40u64 {
        let (m, n) = [(2, 2), (2, 3), (3, 3), (3, 2)][seed as usize % 4];
        let set = random_complete_pops::<f64>(m, n, 500 + seed, 1 + seed as usize % (m * n));
        let (_, verdict) = distinguish(&set, TOL, None).unwrap();
        let (indist, witness) = theorem2_bruteforce(&set, DEFAULT_MAX_STATES, TOL).unwrap();
        assert_eq!(verdict.distinguishable, !indist, "{m}x{n} seed {seed}");
        assert_eq!(witness.is_some(), indist);
    }
}

#[test]
fn oracle_witness_for_bennett_is_everything() {
    let (indist, witness) = theorem2_bruteforce(&builtin::<f64>("bennett9").unwrap(), DEFAULT_MAX_STATES, TOL).unwrap();
    assert!(indist);
    assert_eq!(witness.unwrap(), (0..9).collect::<Vec<_>>());
}

#[test]
fn oracle_refuses_large_sets() {
    let set = random_complete_pops::<f64>(4, 5, 1, 0);
    assert!(theorem2_bruteforce(&set, DEFAULT_MAX_STATES, TOL).is_err());
}

#[test]
fn round_limit_is_enforced() {
    let set = builtin::<f64>("paper3x4").unwrap();
    assert!(distinguish(&set, TOL, Some(1)).is_err());
    assert!(distinguish(&set, TOL, Some(2)).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_protocols_are_sound(m in 1usize..5, n in 1usize..5, seed in any::<u64>(), depth in 0usize..12) {
        let set = random_complete_pops::<f64>(m, n, seed, depth);
        let (tree, verdict) = distinguish(&set, TOL, None).unwrap();
        check_node(&set, &tree.root);
        let mut all: Vec<usize> = verdict.final_partition.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..set.len()).collect::<Vec<_>>());
        prop_assert!(!verdict.necessary_only);
    }

    #[test]
    fn classical_class_implies_distinguishable(m in 1usize..5, n in 1usize..5, seed in any::<u64>(), depth in 0usize..12) {
        let set = random_complete_pops::<f64>(m, n, seed, depth);
        let (_, guaranteed) = theorem1_class(&set, TOL);
        let (_, verdict) = distinguish(&set, TOL, None).unwrap();
        if guaranteed {
            prop_assert!(verdict.distinguishable);
        }
        if !verdict.distinguishable {
            prop_assert!(!guaranteed);
        }
    }

    #[test]
    fn verdict_invariant_under_local_unitaries(m in 1usize..4, n in 1usize..5, seed in any::<u64>(), depth in 0usize..10) {
        let set = random_complete_pops::<f64>(m, n, seed, depth);
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        let ua: ComplexMatrix<f64> = haar_unitary(m, &mut rng);
        let ub: ComplexMatrix<f64> = haar_unitary(n, &mut rng);
        let (_, before) = distinguish(&set, TOL, None).unwrap();
        let (_, after) = distinguish(&set.with_local_unitaries(&ua, &ub).unwrap(), TOL, None).unwrap();
        prop_assert_eq!(before.distinguishable, after.distinguishable);
        prop_assert_eq!(sorted_partition(before.final_partition), sorted_partition(after.final_partition));
    }

    #[test]
    fn verdict_independent_of_order_and_sides(m in 1usize..4, n in 1usize..5, seed in any::<u64>(), depth in 0usize..10) {
        let set = random_complete_pops::<f64>(m, n, seed, depth);
        let (_, base) = distinguish(&set, TOL, None).unwrap();
        let (_, swapped) = distinguish(&set.swapped(), TOL, None).unwrap();
        prop_assert_eq!(base.distinguishable, swapped.distinguishable);
        prop_assert_eq!(sorted_partition(base.final_partition.clone()), sorted_partition(swapped.final_partition));

        let mut order: Vec<usize> = (0..set.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.rotate_left(7)));
        let (_, perm) = distinguish(&set.permuted(&order), TOL, None).unwrap();
        let mapped: Vec<Vec<usize>> =
            perm.final_partition.iter().map(|b| b.iter().map(|&k| order[k]).collect()).collect();
        prop_assert_eq!(base.distinguishable, perm.distinguishable);
        prop_assert_eq!(sorted_partition(base.final_partition), sorted_partition(mapped));
    }
}
