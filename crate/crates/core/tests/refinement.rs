mod common;

use std::collections::{BTreeMap, BTreeSet};

use ccwl_core::baselines::hwl;
use ccwl_core::complex::{build_complex, disjoint_union, relabel_vertices};
use ccwl_core::engine::{
    compare_rules, distinguish, initial_coloring, joint_refine, partition_refines, refine_family,
    refine_step, refine_to_stable, side_histograms, trace_json, Coloring, EngineError, InitScheme,
    PartitionRelation, RefinementRule, TokenDictionary, Verdict,
};
use ccwl_core::fixtures::{c8, face_pair, tetrahedron, two_c4, two_triangles};
use ccwl_core::generators::{
    random_closed_complex, random_graph, random_permutation, random_strict_complex,
};
use ccwl_core::graph::{Graph, Hypergraph};
use ccwl_core::lifting::{clique_lift, hypergraph_lift, ring_lift, HyperLiftMode};
use ccwl_core::{CombinatorialComplex, NeighborhoodIndex};
use common::{count, naive_refine, rng, same_partition};
use proptest::prelude::*;
use rand::Rng;

fn trace(
    cc: &CombinatorialComplex,
    rule: RefinementRule,
    init: InitScheme,
) -> ccwl_core::engine::RefinementTrace {
    refine_to_stable(cc, &NeighborhoodIndex::new(cc), &rule, &init).unwrap()
}

fn flags(rule: &RefinementRule) -> [bool; 4] {
    [
        rule.use_boundary,
        rule.use_coboundary,
        rule.use_lower,
        rule.use_upper,
    ]
}

fn all_flag_rules() -> Vec<RefinementRule> {
    (1..16u8)
        .map(|m| RefinementRule {
            use_boundary: m & 1 != 0,
            use_coboundary: m & 2 != 0,
            use_lower: m & 4 != 0,
            use_upper: m & 8 != 0,
            two_stage_hypergraph: false,
            bridge_colors: true,
        })
        .collect()
}

#[test]
fn two_triangles_stabilise_at_two() {
    let cc = two_triangles();
    let t = trace(&cc, RefinementRule::FULL, InitScheme::RankOnly);
    assert_eq!(t.stable_at, 2);
    assert_eq!(t.colorings[0].num_colors, 3);
    let c1 = &t.colorings[1];
    let v = |i| c1.color_of(cc.vertex_cell(i));
    assert_eq!(v(0), v(3));
    assert_eq!(v(1), v(2));
    assert_ne!(v(0), v(1));
    assert_eq!(
        partition_refines(&t.colorings[1], &t.colorings[2]).unwrap(),
        PartitionRelation::Equal
    );
}

#[test]
fn rank_degree_on_two_triangles() {
    let cc = two_triangles();
    let ix = NeighborhoodIndex::new(&cc);
    let c0 = initial_coloring(&cc, &ix, &InitScheme::RankDegree).unwrap();
    // (rank, |B|, |C|): nodes (0,0,2) x2 and (0,0,3) x2; edges (1,2,1) x4 and
    // (1,2,2) x1; faces (2,3,0) x2.
    assert_eq!(c0.num_colors, 5);
    let t = trace(&cc, RefinementRule::FULL, InitScheme::RankDegree);
    assert_eq!(t.stable_at, 1);
}

#[test]
fn initial_colorings() {
    let e = clique_lift(&Graph::empty(5), 1);
    let c = initial_coloring(&e, &NeighborhoodIndex::new(&e), &InitScheme::RankDegree).unwrap();
    assert_eq!(c.num_colors, 1);
    let cc = two_triangles();
    let seeds: BTreeMap<usize, i64> = (0..cc.num_cells() - 1).map(|c| (c, 0)).collect();
    assert_eq!(
        initial_coloring(
            &cc,
            &NeighborhoodIndex::new(&cc),
            &InitScheme::Seeded(seeds)
        ),
        Err(EngineError::MissingSeedLabel(cc.num_cells() - 1))
    );
}

#[test]
fn discrete_start_is_stable_after_one_step() {
    let cc = two_triangles();
    let seeds = (0..cc.num_cells()).map(|c| (c, c as i64)).collect();
    let t = trace(&cc, RefinementRule::FULL, InitScheme::Seeded(seeds));
    assert_eq!(t.stable_at, 1);
    let ix = NeighborhoodIndex::new(&cc);
    let discrete = Coloring {
        colors: (0..cc.num_cells() as u32).collect(),
        num_colors: cc.num_cells(),
    };
    let next = refine_step(
        &cc,
        &ix,
        &discrete,
        &RefinementRule::FULL,
        &mut TokenDictionary::new(),
    );
    assert_eq!(
        partition_refines(&next, &discrete).unwrap(),
        PartitionRelation::Equal
    );
}

/// Two 3-vertex paths whose middle vertices carry different labels: every edge
/// starts with the same color and has one lower neighbour of that color, so
/// only the bridge color separates the two sides.
#[test]
fn bridge_colors_matter() {
    let p = Graph::path(3);
    let cc = clique_lift(&p.union(&p), 1);
    let mut seeds = BTreeMap::new();
    for c in 0..cc.num_cells() {
        let label = if cc.cell(c).vertices == [4] { 1 } else { 0 };
        seeds.insert(c, label);
    }
    let ix = NeighborhoodIndex::new(&cc);
    let c0 = initial_coloring(&cc, &ix, &InitScheme::Seeded(seeds)).unwrap();
    let lower = RefinementRule {
        use_boundary: false,
        use_coboundary: false,
        use_lower: true,
        use_upper: false,
        two_stage_hypergraph: false,
        bridge_colors: true,
    };
    let e = |vs: &[usize]| cc.find_cell(vs).unwrap();
    assert_eq!(c0.color_of(e(&[0, 1])), c0.color_of(e(&[3, 4])));
    let c1 = refine_step(&cc, &ix, &c0, &lower, &mut TokenDictionary::new());
    assert_ne!(c1.color_of(e(&[0, 1])), c1.color_of(e(&[3, 4])));
    let c1 = refine_step(
        &cc,
        &ix,
        &c0,
        &lower.without_bridges(),
        &mut TokenDictionary::new(),
    );
    assert_eq!(c1.color_of(e(&[0, 1])), c1.color_of(e(&[3, 4])));
}

#[test]
fn tetrahedron_matches_oracle() {
    let cc = tetrahedron();
    let t = trace(&cc, RefinementRule::FULL, InitScheme::RankOnly);
    let (rounds, stable) = naive_refine(&cc, [true; 4], false);
    assert_eq!(t.stable_at, stable);
    for (ours, theirs) in t.colorings.iter().zip(&rounds) {
        assert!(same_partition(&ours.colors, theirs));
    }
    assert_eq!(t.stable().num_colors, 4);
}

#[test]
fn empty_complex_trace() {
    let cc = build_complex(0, vec![], true).unwrap();
    let t = trace(&cc, RefinementRule::FULL, InitScheme::RankDegree);
    assert_eq!(t.stable_at, 0);
    assert_eq!(t.colorings.len(), 1);
}

#[test]
fn joint_refinement_examples() {
    let f = two_triangles();
    for scheme in [InitScheme::RankOnly, InitScheme::RankDegree] {
        let (u, t, o) = joint_refine(&f, &f, &RefinementRule::FULL, &scheme).unwrap();
        assert!(side_histograms(&u, &t, &o).iter().all(|(a, b)| a == b));
        let r = relabel_vertices(&f, &[3, 2, 1, 0]).unwrap();
        let (u, t, o) = joint_refine(&f, &r, &RefinementRule::FULL, &scheme).unwrap();
        assert!(side_histograms(&u, &t, &o).iter().all(|(a, b)| a == b));
    }
    let k3 = clique_lift(&Graph::complete(3), 2);
    let p3 = clique_lift(&Graph::path(3), 2);
    match distinguish(&k3, &p3, &RefinementRule::FULL, &InitScheme::RankOnly).unwrap() {
        Verdict::Distinguished { iteration } => assert!(iteration <= 1),
        v => panic!("{v:?}"),
    }
}

#[test]
fn distinguish_examples() {
    let a = ring_lift(&c8(), 8);
    let b = ring_lift(&two_c4(), 8);
    for scheme in [InitScheme::RankOnly, InitScheme::RankDegree] {
        match distinguish(&a, &b, &RefinementRule::FULL, &scheme).unwrap() {
            Verdict::Distinguished { iteration } => assert!(iteration <= 1),
            v => panic!("{v:?}"),
        }
        assert!(!distinguish(&a, &a, &RefinementRule::FULL, &scheme)
            .unwrap()
            .is_distinguished());
    }
    let (x, y) = face_pair();
    assert!(
        !distinguish(&x, &y, &RefinementRule::CWL, &InitScheme::RankOnly)
            .unwrap()
            .is_distinguished()
    );
    assert_eq!(
        distinguish(&x, &y, &RefinementRule::FULL, &InitScheme::RankOnly).unwrap(),
        Verdict::Distinguished { iteration: 1 }
    );
}

#[test]
fn partition_relations() {
    let c = Coloring {
        colors: vec![0, 0, 1, 2],
        num_colors: 3,
    };
    let d = Coloring {
        colors: vec![5, 5, 7, 7],
        num_colors: 2,
    };
    let e = Coloring {
        colors: vec![1, 0, 0, 0],
        num_colors: 2,
    };
    assert_eq!(partition_refines(&c, &c).unwrap(), PartitionRelation::Equal);
    assert_eq!(
        partition_refines(&c, &d).unwrap(),
        PartitionRelation::Refines
    );
    assert_eq!(
        partition_refines(&d, &c).unwrap(),
        PartitionRelation::RefinedBy
    );
    assert_eq!(
        partition_refines(&d, &e).unwrap(),
        PartitionRelation::Incomparable
    );
    let short = Coloring {
        colors: vec![0],
        num_colors: 1,
    };
    assert_eq!(
        partition_refines(&c, &short),
        Err(EngineError::SizeMismatch(4, 1))
    );
}

#[test]
fn rule_comparisons() {
    let f = two_triangles();
    let full_reduced = compare_rules(
        &f,
        &RefinementRule::FULL,
        &RefinementRule::REDUCED,
        &InitScheme::RankDegree,
    )
    .unwrap();
    assert_eq!(full_reduced.relation, PartitionRelation::Equal);
    let same = compare_rules(
        &f,
        &RefinementRule::FULL,
        &RefinementRule::FULL,
        &InitScheme::RankDegree,
    )
    .unwrap();
    assert_eq!(same.relation, PartitionRelation::Equal);
    assert!(same
        .per_iteration
        .iter()
        .all(|r| r.relation == PartitionRelation::Equal));
    let t = tetrahedron();
    let r = compare_rules(
        &t,
        &RefinementRule::FULL,
        &RefinementRule::NO_COB,
        &InitScheme::RankDegree,
    )
    .unwrap();
    assert_eq!(r.relation, PartitionRelation::Equal);
    for scheme in [InitScheme::RankOnly, InitScheme::RankDegree] {
        let r = compare_rules(
            &f,
            &RefinementRule::FULL,
            &RefinementRule::WITHOUT_UP,
            &scheme,
        )
        .unwrap();
        assert!(matches!(
            r.relation,
            PartitionRelation::Equal | PartitionRelation::Refines
        ));
    }
}

#[test]
fn trace_json_shape() {
    let f = two_triangles();
    let (u, t, o) = joint_refine(&f, &f, &RefinementRule::FULL, &InitScheme::RankOnly).unwrap();
    let j = trace_json(&u, &t, Some(&o));
    assert_eq!(j["stable_at"], 2);
    assert_eq!(j["iterations"], 3);
    assert_eq!(j["histograms"]["a"], j["histograms"]["b"]);
    assert_eq!(
        j["histograms"]["a"][0],
        serde_json::json!([[0, 0, 4], [1, 1, 5], [2, 2, 2]])
    );
    let again = trace_json(
        &u,
        &joint_refine(&f, &f, &RefinementRule::FULL, &InitScheme::RankOnly)
            .unwrap()
            .1,
        Some(&o),
    );
    assert_eq!(
        serde_json::to_string(&j).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}

#[test]
fn two_stage_rule_matches_independent_hwl() {
    let mut r = rng(5);
    for _ in 0..100 {
        let n = r.gen_range(2..9);
        let m = r.gen_range(1..8);
        let mut edges = BTreeSet::new();
        for _ in 0..m {
            let k = r.gen_range(2..=n.min(4));
            let mut e = rand::seq::index::sample(&mut r, n, k).into_vec();
            e.sort();
            edges.insert(e);
        }
        let h = Hypergraph::new(n, edges).unwrap();
        let cc = hypergraph_lift(&h, HyperLiftMode::Flat);
        let t = trace(&cc, RefinementRule::HWL, InitScheme::RankOnly);
        let base = hwl(&h);
        let stable = t.stable();
        let nodes: Vec<u32> = (0..n).map(|v| stable.colors[cc.vertex_cell(v)]).collect();
        let base_nodes: Vec<usize> = base.nodes().iter().map(|&c| c as usize).collect();
        assert!(same_partition(&nodes, &base_nodes));
        let hyper: Vec<u32> = h
            .hyperedges()
            .map(|e| stable.colors[cc.find_cell(e).unwrap()])
            .collect();
        let base_edges: Vec<usize> = base.edges().iter().map(|&c| c as usize).collect();
        assert!(same_partition(&hyper, &base_edges));
    }
}

#[test]
fn family_verdicts_match_pairwise_runs() {
    let mut r = rng(21);
    for _ in 0..20 {
        let graphs: Vec<Graph> = (0..5).map(|_| random_graph(&mut r, 7, 0.4)).collect();
        let ccs: Vec<CombinatorialComplex> = graphs.iter().map(|g| ring_lift(g, 5)).collect();
        let refs: Vec<&CombinatorialComplex> = ccs.iter().collect();
        for rule in [
            RefinementRule::FULL,
            RefinementRule::CWL,
            RefinementRule::REDUCED,
        ] {
            for scheme in [InitScheme::RankOnly, InitScheme::RankDegree] {
                let fam = refine_family(&refs, &rule, &scheme).unwrap();
                for i in 0..ccs.len() {
                    for j in i + 1..ccs.len() {
                        let pair = distinguish(&ccs[i], &ccs[j], &rule, &scheme).unwrap();
                        assert_eq!(
                            fam.verdict(i, j).is_distinguished(),
                            pair.is_distinguished()
                        );
                        if let (
                            Verdict::Distinguished { iteration: a },
                            Verdict::Distinguished { iteration: b },
                        ) = (fam.verdict(i, j), pair)
                        {
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }
}

/// On arbitrary strict complexes dropping the coboundary never changes the
/// stable partition.
#[test]
fn full_and_no_cob_agree_on_strict_complexes() {
    let mut r = rng(3);
    for _ in 0..500 {
        let cc = random_strict_complex(&mut r, 10);
        let c = compare_rules(
            &cc,
            &RefinementRule::FULL,
            &RefinementRule::NO_COB,
            &InitScheme::RankDegree,
        )
        .unwrap();
        assert_eq!(c.relation, PartitionRelation::Equal);
    }
}

/// A free face (a cell with a single coface) is enough to break the
/// equivalence of the full and the reduced rule: faces of two 5-rings far
/// from a pendant vertex keep one color under the reduced rule.
#[test]
fn reduced_rule_needs_closed_complexes() {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
    edges.push((0, 10));
    let g = Graph::new(11, edges).unwrap();
    let cc = ring_lift(&g, 5);
    assert!(cc.has_free_faces());
    let c = compare_rules(
        &cc,
        &RefinementRule::FULL,
        &RefinementRule::REDUCED,
        &InitScheme::RankDegree,
    )
    .unwrap();
    assert_eq!(c.relation, PartitionRelation::Refines);
}

fn check_against_oracle(cc: &CombinatorialComplex) {
    for rule in all_flag_rules() {
        for rank_degree in [false, true] {
            let scheme = if rank_degree {
                InitScheme::RankDegree
            } else {
                InitScheme::RankOnly
            };
            let t = trace(cc, rule, scheme);
            let (rounds, stable) = naive_refine(cc, flags(&rule), rank_degree);
            assert_eq!(t.stable_at, stable, "rule {rule:?}");
            for (ours, theirs) in t.colorings.iter().zip(&rounds) {
                assert!(same_partition(&ours.colors, theirs));
                assert_eq!(ours.num_colors, count(theirs));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_matches_naive_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        check_against_oracle(&random_strict_complex(&mut r, 8));
        check_against_oracle(&random_closed_complex(&mut r, 8));
    }

    #[test]
    fn refinement_is_monotone_and_bounded(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cc = random_strict_complex(&mut r, 12);
        for (_, rule) in RefinementRule::PRESETS {
            let t = trace(&cc, rule, InitScheme::RankDegree);
            prop_assert!(t.stable_at <= cc.num_cells().max(1));
            for w in t.colorings.windows(2) {
                let rel = partition_refines(&w[1], &w[0]).unwrap();
                prop_assert!(matches!(rel, PartitionRelation::Equal | PartitionRelation::Refines));
                prop_assert!(w[1].colors.iter().all(|&c| (c as usize) < w[1].num_colors));
            }
            let n = t.colorings.len();
            if n >= 2 {
                prop_assert_eq!(
                    partition_refines(&t.colorings[n - 1], &t.colorings[n - 2]).unwrap(),
                    PartitionRelation::Equal
                );
            }
        }
    }

    #[test]
    fn isomorphic_copies_are_never_separated(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cc = random_strict_complex(&mut r, 10);
        let p = random_permutation(&mut r, cc.num_vertices());
        let q = relabel_vertices(&cc, &p).unwrap();
        for (_, rule) in RefinementRule::PRESETS {
            let (u, t, o) = joint_refine(&cc, &q, &rule, &InitScheme::RankDegree).unwrap();
            for (a, b) in side_histograms(&u, &t, &o) {
                prop_assert_eq!(&a, &b);
                prop_assert_eq!(a.total(), cc.num_cells());
            }
        }
    }

    #[test]
    fn refinement_is_deterministic(seed in any::<u64>()) {
        let cc = random_strict_complex(&mut rng(seed), 10);
        let a = trace(&cc, RefinementRule::FULL, InitScheme::RankDegree);
        let b = trace(&cc, RefinementRule::FULL, InitScheme::RankDegree);
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn full_equals_reduced_on_closed_complexes(seed in any::<u64>()) {
        let cc = random_closed_complex(&mut rng(seed), 12);
        for rule in [RefinementRule::REDUCED, RefinementRule::NO_COB] {
            let c = compare_rules(&cc, &RefinementRule::FULL, &rule, &InitScheme::RankDegree).unwrap();
            prop_assert_eq!(c.relation, PartitionRelation::Equal);
        }
    }

    /// If rule A's stable partition on a joint union refines rule B's, a pair
    /// that A cannot separate is not separated by B either.
    #[test]
    fn refinement_order_propagates_verdicts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_strict_complex(&mut r, 7);
        let b = random_strict_complex(&mut r, 7);
        let (u, _) = disjoint_union(&a, &b);
        let ix = NeighborhoodIndex::new(&u);
        for (_, ra) in RefinementRule::PRESETS {
            for (_, rb) in RefinementRule::PRESETS {
                let ta = refine_to_stable(&u, &ix, &ra, &InitScheme::RankDegree).unwrap();
                let tb = refine_to_stable(&u, &ix, &rb, &InitScheme::RankDegree).unwrap();
                let rel = partition_refines(ta.stable(), tb.stable()).unwrap();
                if matches!(rel, PartitionRelation::Equal | PartitionRelation::Refines)
                    && !distinguish(&a, &b, &ra, &InitScheme::RankDegree).unwrap().is_distinguished()
                {
                    prop_assert!(!distinguish(&a, &b, &rb, &InitScheme::RankDegree).unwrap().is_distinguished());
                }
            }
        }
    }
}
