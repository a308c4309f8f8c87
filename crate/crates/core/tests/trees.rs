//! Cross-checks between the tree-space constructions and the Bergman
//! complexes of `K_n`.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posberg::bergman::fine_cells;
use posberg::initial::{all_flags, representative_weight, Flag};
use posberg::trees::{
    binary_shapes, increasing_labelings, is_positive_point, kn_oriented_matroid,
    oriented_complete_graph, permutation_of_tree, planar_binary_shapes, tree_from_point,
    tree_of_permutation, EdgeIndex, PositivityTest,
};
use posberg::{Rational, WeightVector};

#[test]
fn positivity_tests_agree_on_every_flag_of_k4() {
    let orders: Vec<Vec<usize>> = (1..=4).permutations(4).collect();
    for flag in all_flags(6) {
        let w = representative_weight(&flag);
        for order in &orders {
            let answers: Vec<bool> = PositivityTest::ALL
                .iter()
                .map(|&t| is_positive_point(&w, order, t).unwrap())
                .collect();
            assert!(answers.iter().all_equal(), "{flag} {order:?} {answers:?}");
        }
    }
}

#[test]
fn positivity_tests_agree_on_random_k5_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let orders: Vec<Vec<usize>> = (1..=5).permutations(5).step_by(7).collect();
    for _ in 0..200 {
        let w =
            WeightVector::from_integers(&(0..10).map(|_| rng.gen_range(0..4)).collect::<Vec<_>>());
        for order in &orders {
            let answers: Vec<bool> = PositivityTest::ALL
                .iter()
                .map(|&t| is_positive_point(&w, order, t).unwrap())
                .collect();
            assert!(answers.iter().all_equal(), "{w:?} {order:?} {answers:?}");
        }
    }
}

#[test]
fn positive_points_satisfy_the_branching_trichotomy() {
    let idx = EdgeIndex::new(4);
    let identity = [1, 2, 3, 4];
    for flag in all_flags(6) {
        let w = representative_weight(&flag);
        if tree_from_point(&w).is_err() {
            continue;
        }
        let d = |i, j| w.weight(idx.index(i, j)).clone();
        let mut trichotomy = true;
        for (i, j, k) in (1..=4).tuple_combinations() {
            let (ij, jk, ik) = (d(i, j), d(j, k), d(i, k));
            // ultrametric: the largest distance is attained twice
            let top = ij.clone().max(jk.clone()).max(ik.clone());
            assert!(
                [&ij, &jk, &ik].iter().filter(|&&x| *x == top).count() >= 2,
                "{flag}"
            );
            let cases = [
                ij < jk && jk == ik,
                ij == jk && jk == ik,
                jk < ij && ij == ik,
            ];
            trichotomy &= cases.iter().filter(|&&c| c).count() == 1;
        }
        let positive = is_positive_point(&w, &identity, PositivityTest::Fan).unwrap();
        assert_eq!(trichotomy, positive, "{flag}");
    }
}

#[test]
fn trees_and_points_are_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(3..=6);
        let shapes = binary_shapes(n).unwrap();
        let shape = &shapes[rng.gen_range(0..shapes.len())];
        let labeled = &increasing_labelings(shape).unwrap()[0];
        let heights: Vec<Rational> = labeled
            .labels()
            .iter()
            .map(|&l| Rational::new((((l - 1) * 3) as i64).into(), 2.into()))
            .collect();
        let leaf = Rational::from_integer((3 * n as i64).into());
        let tree = posberg::trees::EquidistantTree::from_shape(shape, &heights, leaf).unwrap();
        assert_eq!(tree_from_point(&tree.distance_vector()).unwrap(), tree);
    }
}

#[test]
fn hook_counts_sum_to_factorials() {
    for n in 2..=8 {
        let total: u128 = planar_binary_shapes(n)
            .unwrap()
            .iter()
            .map(|s| s.hook_count().unwrap())
            .sum();
        assert_eq!(total, (1..n as u128).product::<u128>(), "n = {n}");
    }
}

#[test]
fn hook_counts_over_all_shapes_count_maximal_chains() {
    for n in 3..=5 {
        let total: u128 = binary_shapes(n)
            .unwrap()
            .iter()
            .map(|s| s.hook_count().unwrap())
            .sum();
        let fine = fine_cells(&kn_oriented_matroid(n).unwrap(), false).unwrap();
        assert_eq!(total, fine.full_dimensional().count() as u128, "n = {n}");
    }
}

#[test]
fn increasing_trees_are_the_positive_cells() {
    for n in 3..=5 {
        let from_trees: BTreeSet<Flag> = planar_binary_shapes(n)
            .unwrap()
            .iter()
            .flat_map(|s| increasing_labelings(s).unwrap())
            .map(|l| l.to_flag())
            .collect();
        let fine = fine_cells(&kn_oriented_matroid(n).unwrap(), true).unwrap();
        let from_lattice: BTreeSet<Flag> = fine.full_dimensional().cloned().collect();
        assert_eq!(from_trees, from_lattice, "n = {n}");
    }
}

#[test]
fn every_order_gives_as_many_positive_cells() {
    for order in (1..=4).permutations(4) {
        let fine = fine_cells(&oriented_complete_graph(&order).unwrap(), true).unwrap();
        assert_eq!(fine.full_dimensional().count(), 6);
    }
}

#[test]
fn permutations_round_trip_up_to_eight() {
    for k in 1..=8 {
        for word in (1..=k).permutations(k) {
            let t = tree_of_permutation(&word).unwrap();
            assert_eq!(permutation_of_tree(&t), word);
        }
    }
}
