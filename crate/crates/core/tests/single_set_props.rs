mod common;

use common::sparse_list;
use locc_core::{decompose, is_single, PureState};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-8;

fn sorted_blocks(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn blocks_are_orthogonal_and_single(count in 1usize..9, dim in 1usize..6, seed in any::<u64>()) {
        let list = sparse_list(count, dim, &mut ChaCha8Rng::seed_from_u64(seed));
        let partition = decompose(&list, TOL).unwrap();
        let mut seen: Vec<usize> = partition.blocks.concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..count).collect::<Vec<_>>());
        for (bi, block) in partition.blocks.iter().enumerate() {
            let members: Vec<PureState<f64>> = block.iter().map(|&i| list[i].clone()).collect();
            prop_assert!(is_single(&members, TOL).unwrap());
            for other in &partition.blocks[bi + 1..] {
                for &i in block {
                    for &j in other {
                        prop_assert!(list[i].overlap(&list[j]).unwrap() < TOL);
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_invariant(count in 1usize..9, dim in 1usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = sparse_list(count, dim, &mut rng);
        let mut order: Vec<usize> = (0..count).collect();
        order.shuffle(&mut rng);
        let shuffled: Vec<_> = order.iter().map(|&i| list[i].clone()).collect();
        let mapped: Vec<Vec<usize>> = decompose(&shuffled, TOL)
            .unwrap()
            .blocks
            .iter()
            .map(|b| b.iter().map(|&k| order[k]).collect())
            .collect();
        prop_assert_eq!(sorted_blocks(&mapped), sorted_blocks(&decompose(&list, TOL).unwrap().blocks));
    }

    #[test]
    fn adding_states_only_merges(count in 1usize..8, extra in 1usize..3, dim in 1usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let list = sparse_list(count + extra, dim, &mut rng);
        let before = decompose(&list[..count], TOL).unwrap();
        let after = decompose(&list, TOL).unwrap();
        prop_assert!(after.len() <= before.len() + extra);
        for block in &before.blocks {
            prop_assert!(after.blocks.iter().any(|b| block.iter().all(|i| b.contains(i))));
        }
    }
}
