use p3c_cograph::*;
use p3c_convexity::is_independent;
use p3c_graph::{gen_random_cograph, Graph};
use p3c_oracle::{beta_c_oracle, OracleConfig};
use proptest::prelude::*;

fn oracle(g: &Graph) -> usize {
    beta_c_oracle(g, &OracleConfig::default(), None).unwrap().value
}

#[test]
fn random_cographs_match_oracle() {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 14);
        let (g, t) = gen_random_cograph(n, seed).unwrap();
        let sol = solve_cograph(&t).unwrap();
        assert_eq!(sol.value, oracle(&g), "seed {seed} cotree {t:?}");
        assert!(is_independent(&g, sol.witness.as_slice()));
        // the recognised cotree is normalised differently but scores the same
        let rebuilt = build_cotree(&g).unwrap();
        assert_eq!(beta_c_cograph(&rebuilt).unwrap(), sol.value);
    }
}

fn shift(t: &Cotree, by: usize) -> Cotree {
    match t {
        Cotree::Leaf(v) => Cotree::Leaf(v + by),
        Cotree::Union(k) => Cotree::Union(k.iter().map(|c| shift(c, by)).collect()),
        Cotree::Join(k) => Cotree::Join(k.iter().map(|c| shift(c, by)).collect()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn union_is_additive(a in 1usize..12, b in 1usize..12, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (_, t1) = gen_random_cograph(a, s1).unwrap();
        let (_, t2) = gen_random_cograph(b, s2).unwrap();
        let both = Cotree::Union(vec![t1.clone(), shift(&t2, a)]);
        prop_assert_eq!(
            beta_c_cograph(&both).unwrap(),
            beta_c_cograph(&t1).unwrap() + beta_c_cograph(&t2).unwrap()
        );
    }

    #[test]
    fn join_of_large_parts_is_two(a in 2usize..10, b in 2usize..10, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (_, t1) = gen_random_cograph(a, s1).unwrap();
        let (_, t2) = gen_random_cograph(b, s2).unwrap();
        let joined = Cotree::Join(vec![t1, shift(&t2, a)]);
        prop_assert_eq!(beta_c_cograph(&joined).unwrap(), 2);
    }
}
