use crate::hull::{certificate_from, hull};
use crate::{Closure, ConvexityError, HullTrace, VertexSet};
use p3c_graph::Graph;

/// Outcome of a convex-independence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceVerdict {
    pub independent: bool,
    /// Smallest `x` with `x` in the hull of the other members.
    pub violator: Option<usize>,
    /// Hull of the set without the violator; it contains the violator.
    pub certificate: Option<HullTrace>,
}

impl IndependenceVerdict {
    /// 2-path from the rest of the set to the violator.
    pub fn two_path(&self) -> Option<Vec<usize>> {
        certificate_from(self.certificate.as_ref()?, self.violator?)
    }
}

/// `s` is convexly independent when no member lies in the hull of the others.
pub fn is_convexly_independent(g: &Graph, s: &VertexSet) -> Result<IndependenceVerdict, ConvexityError> {
    s.check(g.n())?;
    match first_violator(g, s.as_slice()) {
        None => Ok(IndependenceVerdict {
            independent: true,
            violator: None,
            certificate: None,
        }),
        Some(x) => Ok(IndependenceVerdict {
            independent: false,
            violator: Some(x),
            certificate: Some(hull(g, &s.without(x))?),
        }),
    }
}

/// Smallest member of `s` inside the hull of the rest. `s` must be sorted and
/// duplicate free; ids are not range checked.
pub fn first_violator(g: &Graph, s: &[usize]) -> Option<usize> {
    if s.len() < 3 {
        // hulls of at most one vertex are trivial
        return None;
    }
    s.iter().copied().find(|&x| {
        let mut c = Closure::new(g);
        for &u in s {
            if u != x {
                c.insert(u);
            }
        }
        c.close_until(x)
    })
}

/// Convenience wrapper around [`first_violator`].
pub fn is_independent(g: &Graph, s: &[usize]) -> bool {
    first_violator(g, s).is_none()
}

/// Members pairwise at distance three or more.
pub fn is_two_packing(g: &Graph, s: &VertexSet) -> Result<bool, ConvexityError> {
    s.check(g.n())?;
    let mut owner = vec![usize::MAX; g.n()];
    for x in s.iter() {
        for w in std::iter::once(x).chain(g.neighbors(x).iter().copied()) {
            if owner[w] != usize::MAX && owner[w] != x {
                return Ok(false);
            }
            owner[w] = x;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use p3c_graph::{gen_cycle, gen_path, parse_edge_list};

    #[test]
    fn small_sets_are_independent() {
        let g = gen_cycle(5).unwrap();
        assert!(is_convexly_independent(&g, &VertexSet::new()).unwrap().independent);
        for u in 0..5 {
            for v in 0..5 {
                assert!(
                    is_convexly_independent(&g, &VertexSet::from([u, v]))
                        .unwrap()
                        .independent
                );
            }
        }
    }

    #[test]
    fn five_segment_violator() {
        let g = parse_edge_list("5 4\n1 2\n1 5\n3 5\n4 5").unwrap();
        let v = is_convexly_independent(&g, &VertexSet::from([0, 1, 2, 3])).unwrap();
        assert!(!v.independent);
        assert_eq!(v.violator, Some(0));
        let cert = v.certificate.as_ref().unwrap();
        assert!(cert.contains(0));
        assert_eq!(v.two_path().unwrap().last(), Some(&0));
    }

    #[test]
    fn p6_disconnected_pairs() {
        let g = gen_path(6).unwrap();
        assert!(is_independent(&g, &[0, 1, 4, 5]));
        assert!(!is_independent(&g, &[0, 1, 2]));
    }

    #[test]
    fn two_packings() {
        let p5 = gen_path(5).unwrap();
        assert!(is_two_packing(&p5, &VertexSet::from([0, 3])).unwrap());
        assert!(!is_two_packing(&p5, &VertexSet::from([0, 2])).unwrap());
        assert!(!is_two_packing(&p5, &VertexSet::from([0, 1])).unwrap());
        let c6 = gen_cycle(6).unwrap();
        assert!(is_two_packing(&c6, &VertexSet::from([0, 3])).unwrap());
    }
}
