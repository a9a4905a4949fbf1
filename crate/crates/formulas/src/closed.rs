use crate::FormulaError;
use p3c_convexity::VertexSet;
use p3c_graph::Graph;

/// `2⌊n/3⌋ + (n mod 3)` for the path on `n` vertices.
pub fn beta_c_path(n: usize) -> Result<usize, FormulaError> {
    if n < 1 {
        return Err(FormulaError::TooSmall {
            what: "path",
            min: 1,
            got: n,
        });
    }
    Ok(2 * (n / 3) + n % 3)
}

/// The cycle on `n` vertices has the value of the path on `n - 1`.
pub fn beta_c_cycle(n: usize) -> Result<usize, FormulaError> {
    if n < 3 {
        return Err(FormulaError::TooSmall {
            what: "cycle",
            min: 3,
            got: n,
        });
    }
    beta_c_path(n - 1)
}

/// Pairs of consecutive vertices separated by one skipped vertex:
/// positions `0, 1, 3, 4, 6, 7, …` of the path `0 - 1 - … - (n-1)`.
pub fn path_witness(n: usize) -> VertexSet {
    (0..n).filter(|i| i % 3 != 2).collect()
}

/// The path pattern on `0..n-1`; vertex `n - 1` stays out.
pub fn cycle_witness(n: usize) -> VertexSet {
    path_witness(n.saturating_sub(1))
}

/// At most one vertex of degree two.
pub fn is_leafy(t: &Graph) -> Result<bool, FormulaError> {
    require_tree(t)?;
    Ok((0..t.n()).filter(|&v| t.degree(v) == 2).count() <= 1)
}

/// Leaf count of a leafy tree; a single vertex counts as one leaf.
pub fn beta_c_leafy(t: &Graph) -> Result<usize, FormulaError> {
    Ok(leafy_witness(t)?.len())
}

/// The leaves of a leafy tree.
pub fn leafy_witness(t: &Graph) -> Result<VertexSet, FormulaError> {
    if !is_leafy(t)? {
        return Err(FormulaError::NotLeafy);
    }
    Ok((0..t.n()).filter(|&v| t.degree(v) <= 1).collect())
}

pub(crate) fn require_tree(t: &Graph) -> Result<(), FormulaError> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(FormulaError::NotATree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use p3c_convexity::is_independent;
    use p3c_graph::{gen_cycle, gen_path, gen_spider, parse_edge_list};

    #[test]
    fn path_values() {
        assert_eq!(beta_c_path(6).unwrap(), 4);
        assert_eq!(beta_c_path(1).unwrap(), 1);
        assert_eq!(beta_c_path(7).unwrap(), 5);
        assert!(beta_c_path(0).is_err());
        assert_eq!(path_witness(7), VertexSet::from([0, 1, 3, 4, 6]));
    }

    #[test]
    fn cycle_values() {
        assert_eq!(beta_c_cycle(4).unwrap(), 2);
        assert_eq!(beta_c_cycle(3).unwrap(), 2);
        assert_eq!(beta_c_cycle(10).unwrap(), 6);
        assert!(beta_c_cycle(2).is_err());
    }

    #[test]
    fn witnesses_are_independent_and_optimal_size() {
        for n in 1..=60 {
            let p = gen_path(n).unwrap();
            let w = path_witness(n);
            assert_eq!(w.len(), beta_c_path(n).unwrap());
            assert!(is_independent(&p, w.as_slice()), "P{n}");
        }
        for n in 3..=60 {
            let c = gen_cycle(n).unwrap();
            let w = cycle_witness(n);
            assert_eq!(w.len(), beta_c_cycle(n).unwrap());
            assert!(is_independent(&c, w.as_slice()), "C{n}");
        }
    }

    #[test]
    fn leafy_examples() {
        let k13 = gen_spider(3, 1).unwrap();
        assert!(is_leafy(&k13).unwrap());
        assert_eq!(beta_c_leafy(&k13).unwrap(), 3);
        let p5 = gen_path(5).unwrap();
        assert!(!is_leafy(&p5).unwrap());
        assert_eq!(beta_c_leafy(&p5), Err(FormulaError::NotLeafy));
        let five_segments = parse_edge_list("5 4\n1 2\n1 5\n3 5\n4 5").unwrap();
        assert_eq!(beta_c_leafy(&five_segments).unwrap(), 3);
        assert_eq!(beta_c_leafy(&gen_path(1).unwrap()).unwrap(), 1);
        assert_eq!(beta_c_leafy(&gen_path(2).unwrap()).unwrap(), 2);
        assert_eq!(is_leafy(&gen_cycle(4).unwrap()), Err(FormulaError::NotATree));
    }
}
