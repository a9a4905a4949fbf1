use p3c_graph::parse::{format_edge_list, format_permutation};
use p3c_graph::*;
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn diagram_graphs_are_simple_for_all_small_permutations() {
    for n in 1..=6 {
        for p in permutations(n) {
            let d = PermutationDiagram::new(p).unwrap();
            let g = d.to_graph();
            for u in 0..n {
                assert!(!g.has_edge(u, u));
                for &v in g.neighbors(u) {
                    assert!(g.has_edge(v, u));
                    assert!(v < n);
                }
            }
        }
    }
}

#[test]
fn ladder_graph_matches_its_diagram() {
    for k in 2..=8 {
        let (g, d) = gen_ladder(k).unwrap();
        assert_eq!(d.to_graph(), g, "k = {k}");
        assert_eq!(g.edge_count(), 3 * k - 2);
        let (first, second) = ladder_rails(k).unwrap();
        for i in 0..k {
            assert!(g.has_edge(first[i], second[i]));
        }
    }
}

#[test]
fn paths_and_cycles_classify() {
    for n in 1..=50 {
        assert_eq!(classify(&gen_path(n).unwrap(), false), GraphClass::Path);
    }
    for n in 3..=50 {
        assert_eq!(classify(&gen_cycle(n).unwrap(), false), GraphClass::Cycle);
    }
}

#[test]
fn random_cographs_evaluate_and_recognise() {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 14);
        let (g, t) = gen_random_cograph(n, seed).unwrap();
        assert_eq!(t.to_graph(n).unwrap(), g);
        let rebuilt = build_cotree(&g).unwrap();
        assert_eq!(rebuilt.to_graph(n).unwrap(), g);
    }
}

#[test]
fn five_segment_inputs_agree() {
    let from_edges = parse_edge_list("5 4\n1 2\n1 5\n3 5\n4 5").unwrap();
    let from_diagram = parse_permutation("3 1 4 5 2").unwrap().to_graph();
    assert_eq!(from_edges, from_diagram);
}

#[test]
fn alternating_swaps_give_a_matching() {
    let bottom: Vec<usize> = (1..=10).map(|i| if i % 2 == 1 { i + 1 } else { i - 1 }).collect();
    let g = PermutationDiagram::new(bottom).unwrap().to_graph();
    assert_eq!(
        g.edges().collect::<Vec<_>>(),
        vec![(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]
    );
}

#[test]
fn p3_plus_k2_components() {
    let g = gen_path(3).unwrap().disjoint_union(&gen_path(2).unwrap());
    let sizes: Vec<usize> = components(&g).iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![3, 2]);
}

proptest! {
    #[test]
    fn edge_list_text_roundtrips(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
        let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        prop_assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn permutation_text_roundtrips(n in 1usize..40, seed in any::<u64>()) {
        let d = gen_random_permutation(n, seed);
        prop_assert_eq!(parse_permutation(&format_permutation(&d)).unwrap(), d);
    }
}
