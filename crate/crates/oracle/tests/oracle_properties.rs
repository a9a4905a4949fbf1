use p3c_convexity::{hull, VertexSet};
use p3c_graph::Graph;
use p3c_oracle::*;
use proptest::prelude::*;

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..(1 << n)).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn independent_by_definition(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|x| !hull(g, &s.without(x)).unwrap().contains(x))
}

/// Maximum over all subsets, ties broken by the lexicographic order of the
/// sorted member lists.
fn brute_beta(g: &Graph) -> (usize, VertexSet) {
    let mut best: Option<VertexSet> = None;
    for s in subsets(g.n()) {
        if !independent_by_definition(g, &s) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => s.len() > b.len() || (s.len() == b.len() && s.as_slice() < b.as_slice()),
        };
        if better {
            best = Some(s);
        }
    }
    let b = best.unwrap_or_default();
    (b.len(), b)
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_full_enumeration(g in random_graph()) {
        let r = beta_c_oracle(&g, &OracleConfig::default(), None).unwrap();
        let (value, witness) = brute_beta(&g);
        prop_assert_eq!(r.value, value);
        prop_assert_eq!(r.witness, witness);
        prop_assert!(r.value >= g.n().min(2));
    }

    #[test]
    fn caratheodory_bounded_and_witness_independent(g in random_graph()) {
        let cfg = OracleConfig::default();
        let c = caratheodory_oracle(&g, &cfg).unwrap();
        let b = beta_c_oracle(&g, &cfg, None).unwrap();
        prop_assert!(c.value <= b.value);
        prop_assert!(is_irredundant(&g, &c.witness).unwrap());
        prop_assert!(independent_by_definition(&g, &c.witness));
        // nothing larger is irredundant
        for s in subsets(g.n()).filter(|s| s.len() > c.value) {
            prop_assert!(!is_irredundant(&g, &s).unwrap());
        }
    }

    #[test]
    fn additive_over_disjoint_union(a in random_graph(), b in random_graph()) {
        prop_assume!(a.n() <= 8 && b.n() <= 8);
        let cfg = OracleConfig::default();
        let sum = beta_c_oracle(&a, &cfg, None).unwrap().value + beta_c_oracle(&b, &cfg, None).unwrap().value;
        prop_assert_eq!(beta_c_oracle(&a.disjoint_union(&b), &cfg, None).unwrap().value, sum);
    }
}

#[test]
fn explored_count_reflects_pruning() {
    // In K8 every triple is dependent. Without the size bound the search would
    // try 8 + 28 + 56 = 92 extensions.
    let k8 = p3c_graph::PermutationDiagram::reversal(8).to_graph();
    let r = beta_c_oracle(&k8, &OracleConfig::default(), None).unwrap();
    assert_eq!(r.value, 2);
    assert_eq!(r.explored, 83);
    let edgeless = beta_c_oracle(&Graph::empty(8), &OracleConfig::default(), None).unwrap();
    assert_eq!(edgeless.value, 8);
    assert_eq!(edgeless.explored, 8);
}
