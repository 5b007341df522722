//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with --nocapture). Everything is exact integer
//! arithmetic; derived golden values are confirmed against the naive
//! subset/edge-subset oracle before being asserted.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kended::enumerate::{enumerate_labeled_connected, random_connected};
use kended::graph::{upper_triangle_pairs, ExtendedCount, Graph};
use kended::harness::{sharpness_suite, verify_corpus, CampaignParams};
use kended::naive;
use kended::solver::{enumerate_max_trees, min_leaf_count_spanning, t_k_exact, t_profile};
use kended::transforms::{leaf_edge_reduction, proof_replay, ExchangeResult};
use kended::tree::{tailings, SubTree};
use kended::{build_family, parse_graph6, write_graph6, Family};

fn connected_corpus(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| enumerate_labeled_connected(n).unwrap())
        .collect()
}

/// Criterion 1: zero violations for props 1-2, thms 1-3 and cors 1-20 over
/// every labeled connected graph with n <= 6, k <= 4, lambda <= 4, all valid m.
#[test]
fn criterion_1_exhaustive_theorem_verification() {
    let per_n: Vec<usize> = (1..=6)
        .map(|n| enumerate_labeled_connected(n).unwrap().count())
        .collect();
    assert_eq!(per_n, vec![1, 1, 4, 38, 728, 26704]);

    let corpus = connected_corpus(6);
    let params = CampaignParams::new(4, 4);
    let report = verify_corpus(&corpus, "all labeled connected graphs n <= 6", &params).unwrap();
    assert_eq!(report.stats.graphs_checked, 27476);
    assert_eq!(
        report.stats.violations_total, 0,
        "violations: {:#?}",
        report.violations
    );
    assert!(report.passed());
    println!(
        "criterion 1 (exhaustive theorem verification, {} instances on {} graphs): PASS",
        report.instances, report.stats.graphs_checked
    );
}

/// Criterion 2: the optimized solver agrees with the naive oracle on every
/// connected graph with n <= 6 and on 200 seeded random connected graphs
/// with n <= 9, for k in 1..=4.
#[test]
fn criterion_2_oracle_equivalence() {
    let mut checked = 0u64;
    for g in connected_corpus(6) {
        for k in 1..=4 {
            assert_eq!(
                t_k_exact(&g, k).unwrap().order,
                naive::t_k_naive(&g, k).unwrap(),
                "disagreement on {} at k={k}",
                write_graph6(&g).unwrap()
            );
            checked += 1;
        }
    }

    let mut randoms = 0;
    let mut seed = 0u64;
    while randoms < 200 {
        let n = 4 + (randoms % 6); // 4..=9
        let p = [0.35, 0.5, 0.7][randoms % 3];
        let g = match random_connected(n, p, seed) {
            Ok(g) => g,
            Err(_) => {
                seed += 1;
                continue;
            }
        };
        seed += 1;
        randoms += 1;
        for k in 1..=4 {
            assert_eq!(
                t_k_exact(&g, k).unwrap().order,
                naive::t_k_naive(&g, k).unwrap(),
                "disagreement on random n={n} p={p} seed={}",
                seed - 1
            );
            checked += 1;
        }
    }
    println!("criterion 2 (oracle equivalence, {checked} solver calls compared): PASS");
}

/// Criterion 3: on (k+1)K_lambda + K_1 the degree-sum condition misses by
/// exactly one and the conclusion misses by exactly one.
#[test]
fn criterion_3_sharpness_of_g1() {
    let mut cases = 0;
    for k in 1..=4usize {
        for lambda in [2usize, 3] {
            if (k + 1) * lambda + 1 > 10 {
                continue;
            }
            let g = build_family(&Family::G1 { k, lambda }).unwrap();
            let t_k = t_k_exact(&g, k).unwrap().order as i64;
            let t_k1 = t_k_exact(&g, k + 1).unwrap().order as i64;
            // cross-check the solver against the oracle on this family
            assert_eq!(t_k, naive::t_k_naive(&g, k).unwrap() as i64);
            assert_eq!(t_k1, naive::t_k_naive(&g, k + 1).unwrap() as i64);
            assert_eq!(t_k, t_k1 - lambda as i64, "g1({k},{lambda}) conclusion gap");
            for m in 2..=k.min(lambda) + 1 {
                let sigma = g.sigma(m).unwrap();
                let target = t_k1 - (lambda as i64) * (k as i64 - m as i64 + 1) - 1;
                assert_eq!(
                    sigma,
                    ExtendedCount::Finite(target as u64),
                    "g1({k},{lambda}) m={m} condition gap"
                );
                cases += 1;
            }
        }
    }
    assert!(cases >= 7);
    println!("criterion 3 (sharpness of g1, {cases} parameter triples): PASS");
}

/// Criterion 4: tightness of (k+1)K_{lambda-1} + K_1, of (k+2)K_{k-1} + K_2
/// at m = k+1, and of K_{r,r} at k = 1.
///
/// On 5K_2 + K_2 the oracle-derived values are sigma_4 = 12, t_4 = 12,
/// t_3 = 10: the condition holds with equality and the conclusion
/// t_3 = t_4 - lambda + 1 is exactly tight. (The two join vertices admit a
/// spanning 4-ended tree using one clique as a pass-through, so t_4 equals
/// the order.)
#[test]
fn criterion_4_sharpness_of_g2_and_m_eq_k_plus_1() {
    // g2 tightness for parameters in range with m <= k
    let mut g2_cases = 0;
    for k in 2..=4usize {
        for lambda in 2..=4usize {
            if (k + 1) * (lambda - 1) + 1 > 10 {
                continue;
            }
            let g = build_family(&Family::G2 { k, lambda }).unwrap();
            let t_k = t_k_exact(&g, k).unwrap().order as i64;
            let t_k1 = t_k_exact(&g, k + 1).unwrap().order as i64;
            assert_eq!(t_k, naive::t_k_naive(&g, k).unwrap() as i64);
            assert_eq!(
                t_k,
                t_k1 - lambda as i64 + 1,
                "g2({k},{lambda}): conclusion must be exactly tight"
            );
            for m in 2..=(k.min(lambda) + 1).min(k) {
                let sigma = g.sigma(m).unwrap();
                assert!(
                    sigma.at_least(t_k1 - (lambda as i64) * (k as i64 - m as i64 + 1)),
                    "g2({k},{lambda}) m={m}: condition must hold"
                );
                g2_cases += 1;
            }
        }
    }
    assert!(g2_cases >= 5);

    // the m = k+1 family at k = 3, lambda = 3: 5K_2 + K_2
    let g3 = build_family(&Family::G3 { k: 3 }).unwrap();
    assert_eq!(g3.n(), 12);
    assert_eq!(g3.sigma(4).unwrap(), ExtendedCount::Finite(12));
    let t3 = t_k_exact(&g3, 3).unwrap().order;
    let t4 = t_k_exact(&g3, 4).unwrap().order;
    // oracle confirmation before freezing
    assert_eq!(t4, naive::t_k_naive(&g3, 4).unwrap());
    assert_eq!(t3, naive::t_k_naive(&g3, 3).unwrap());
    assert_eq!((t4, t3), (12, 10));
    // condition holds with equality, conclusion exactly tight
    assert_eq!(ExtendedCount::Finite(t4 as u64), g3.sigma(4).unwrap());
    assert_eq!(t3, t4 - 3 + 1);

    // K_{r,r} for k = 1
    for r in 2..=4usize {
        let krr = build_family(&Family::Krr(r)).unwrap();
        let t1 = t_k_exact(&krr, 1).unwrap().order;
        let t2 = t_k_exact(&krr, 2).unwrap().order;
        assert_eq!((t1, t2), (2 * r, 2 * r), "K_{{{r},{r}}}");
    }

    // and the packaged suite agrees
    let report = sharpness_suite(1..=4, 1..=4).unwrap();
    assert!(report.passed(), "{:#?}", report.sharpness);

    println!("criterion 4 (sharpness of g2 and the m = k+1 families): PASS");
}

/// Criterion 5: wherever t_k <= t_{k+1} - lambda (n <= 6, k <= 3,
/// lambda <= 3), every maximum (k+1)-ended tree has exactly k+1 leaves, an
/// independent leaf set, and no tailing shorter than lambda.
#[test]
fn criterion_5_proof_replay() {
    let mut replayed = 0u64;
    let mut trees = 0u64;
    for g in connected_corpus(6) {
        for k in 1..=3 {
            for lambda in 1..=3 {
                let report = proof_replay(&g, k, lambda).unwrap();
                if !report.precondition_held {
                    continue;
                }
                assert!(
                    report.failures.is_empty(),
                    "claim failures on {} k={k} lambda={lambda}: {:?}",
                    write_graph6(&g).unwrap(),
                    report.failures
                );
                assert!(report.claim1_ok && report.claim2_ok && report.claim3_ok);
                assert!(report.trees_checked > 0);
                replayed += 1;
                trees += report.trees_checked as u64;
            }
        }
    }
    assert!(replayed > 0);
    println!(
        "criterion 5 (proof replay, {replayed} bindings, {trees} maximum trees checked): PASS"
    );
}

/// Criterion 6: the worked fixture (k+1)K_lambda + K_1 at k = 2, lambda = 2.
#[test]
fn criterion_6_worked_fixture_g1_2_2() {
    let g = build_family(&Family::G1 { k: 2, lambda: 2 }).unwrap();

    let profile: Vec<usize> = t_profile(&g, 3).unwrap().iter().map(|r| r.order).collect();
    let naive_profile: Vec<usize> = (1..=3).map(|k| naive::t_k_naive(&g, k).unwrap()).collect();
    assert_eq!(profile, naive_profile);
    assert_eq!(profile, vec![3, 5, 7]);

    assert_eq!(g.sigma(2).unwrap(), ExtendedCount::Finite(4));
    assert_eq!(g.sigma(3).unwrap(), ExtendedCount::Finite(6));
    assert_eq!(g.independence_number(), 3);

    let spiders = enumerate_max_trees(&g, 3).unwrap();
    let naive_trees = naive::max_k_ended_trees_naive(&g, 3).unwrap();
    assert_eq!(spiders.len(), naive_trees.len());
    assert_eq!(spiders.len(), 8);
    let fast: BTreeSet<_> = spiders
        .iter()
        .map(|t| (t.vertices(), t.edges().clone()))
        .collect();
    let slow: BTreeSet<_> = naive_trees.into_iter().collect();
    assert_eq!(fast, slow);

    for t in &spiders {
        assert!(t.is_spanning(&g));
        assert_eq!(
            t.branch_vertices(),
            vec![6],
            "spiders branch at the join vertex"
        );
        let td = tailings(t).unwrap();
        let mut orders: Vec<usize> = td.tailings.iter().map(|q| q.len()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2]);
    }
    println!("criterion 6 (worked fixture g1(2,2)): PASS");
}

/// Criterion 7: graph6 round trip on all labeled graphs n <= 5 and 1000
/// random graphs with n <= 30; K_3 encodes to "Bw".
#[test]
fn criterion_7_graph6_round_trip() {
    let k3 = build_family(&Family::Complete(3)).unwrap();
    assert_eq!(write_graph6(&k3).unwrap(), "Bw");

    let mut exhaustive = 0u64;
    for n in 0..=5usize {
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            let enc = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), g);
            exhaustive += 1;
        }
    }
    assert_eq!(exhaustive, 1 + 1 + 2 + 8 + 64 + 1024);

    let mut rng = ChaCha8Rng::seed_from_u64(0x6_7261_7068);
    for _ in 0..1000 {
        let n = rng.random_range(0..=30usize);
        let mut g = Graph::empty(n).unwrap();
        for (u, v) in upper_triangle_pairs(n) {
            if rng.random_bool(0.5) {
                g.add_edge(u, v).unwrap();
            }
        }
        let enc = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), g);
    }
    println!("criterion 7 (graph6 round trip): PASS");
}

/// Criterion 8: leaf_edge_reduction strictly reduces the leaf count or
/// reports a cycle, on 500 generated (tree, chord) fixtures; every exchange
/// output satisfies the subtree invariants.
#[test]
fn criterion_8_transformation_contracts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce55);
    let mut applied = 0;
    let mut cycles = 0;
    while applied < 500 {
        let n = rng.random_range(5..=9usize);
        let p = 0.4 + rng.random_range(0..3) as f64 * 0.15;
        let seed = rng.random::<u64>();
        let Ok(g) = random_connected(n, p, seed) else {
            continue;
        };

        // random spanning tree: random vertex order, greedy edge insertion
        let tree = random_spanning_tree(&g, &mut rng);
        let leaves = tree.leaves();
        let mut chords = Vec::new();
        for (i, &a) in leaves.iter().enumerate() {
            for &b in &leaves[i + 1..] {
                if g.has_edge(a, b) && !tree.edges().contains(&kended::tree::edge(a, b)) {
                    chords.push((a, b));
                }
            }
        }
        let Some(&chord) = chords.first() else {
            continue;
        };

        match leaf_edge_reduction(&g, &tree, chord).unwrap() {
            ExchangeResult::Tree { tree: out, .. } => {
                assert!(out.leaf_count() < tree.leaf_count(), "must strictly reduce");
                assert_eq!(out.order(), tree.order());
                assert_eq!(out.vertices(), tree.vertices());
                // revalidation from raw parts must succeed
                SubTree::new(&g, out.vertices(), out.edges().iter().copied()).unwrap();
            }
            ExchangeResult::Cycle { vertices } => {
                cycles += 1;
                assert_eq!(vertices.len(), tree.order());
                for w in vertices.windows(2) {
                    assert!(g.has_edge(w[0], w[1]));
                }
                assert!(g.has_edge(vertices[0], *vertices.last().unwrap()));
            }
        }
        applied += 1;
    }
    println!("criterion 8 (transformation contracts, 500 fixtures, {cycles} became cycles): PASS");
}

fn random_spanning_tree(g: &Graph, rng: &mut ChaCha8Rng) -> SubTree {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let mut in_tree = 1u64 << order[0];
    let mut edges = Vec::new();
    let mut pending: Vec<usize> = order[1..].to_vec();
    while !pending.is_empty() {
        let mut next_round = Vec::new();
        for v in pending {
            let anchors = g.neighbors(v) & in_tree;
            if anchors == 0 {
                next_round.push(v);
                continue;
            }
            // attach to a random already-inserted neighbor
            let nbrs: Vec<usize> = (0..n).filter(|&u| anchors >> u & 1 == 1).collect();
            let u = nbrs[rng.random_range(0..nbrs.len())];
            edges.push(kended::tree::edge(u, v));
            in_tree |= 1 << v;
        }
        pending = next_round;
    }
    SubTree::new(g, g.vertex_mask(), edges).unwrap()
}

/// Correct driver order: witnesses agree between solver paths.
#[test]
fn min_leaf_matches_t_profile_semantics() {
    for g in connected_corpus(5) {
        if g.n() < 2 {
            continue;
        }
        let (count, tree) = min_leaf_count_spanning(&g).unwrap();
        assert!(tree.is_spanning(&g));
        assert_eq!(tree.leaf_count(), count);
        // spanning k-ended tree exists iff count <= k iff t_k = n
        for k in 2..=4 {
            let tk = t_k_exact(&g, k).unwrap().order;
            assert_eq!(tk == g.n(), count <= k);
        }
    }
}
