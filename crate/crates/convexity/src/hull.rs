use crate::{ConvexityError, VertexSet};
use p3c_graph::Graph;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, VecDeque};

/// A hull together with the order vertices entered it and, for every
/// non-seed member, the two earlier neighbours that brought it in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    pub hull: VertexSet,
    /// Seeds first (ascending), then additions in the order they happened.
    pub order: Vec<usize>,
    /// Parent pair of each added vertex, smaller id first.
    pub parents: BTreeMap<usize, (usize, usize)>,
}

impl HullTrace {
    pub fn contains(&self, v: usize) -> bool {
        self.hull.contains(v)
    }

    /// Seeds are the members without a parent pair.
    pub fn seeds(&self) -> VertexSet {
        self.order
            .iter()
            .copied()
            .filter(|v| !self.parents.contains_key(v))
            .collect()
    }

    /// Replays `order` against `g`, checking every parent pair is made of
    /// neighbours that entered earlier, and that the replay gives `hull`.
    pub fn replays(&self, g: &Graph) -> bool {
        let mut pos = BTreeMap::new();
        for (i, &v) in self.order.iter().enumerate() {
            if pos.insert(v, i).is_some() {
                return false;
            }
            if let Some(&(a, b)) = self.parents.get(&v) {
                let earlier = |p: usize| pos.get(&p).is_some_and(|&j| j < i) && g.has_edge(p, v);
                if a == b || !earlier(a) || !earlier(b) {
                    return false;
                }
            }
        }
        self.order.iter().copied().collect::<VertexSet>() == self.hull
    }
}

enum Frontier<'p> {
    Fifo(VecDeque<usize>),
    Ranked(BinaryHeap<Reverse<(usize, usize)>>, &'p [usize]),
}

impl Frontier<'_> {
    fn push(&mut self, v: usize) {
        match self {
            Frontier::Fifo(q) => q.push_back(v),
            Frontier::Ranked(h, rank) => h.push(Reverse((rank[v], v))),
        }
    }

    fn pop(&mut self) -> Option<usize> {
        match self {
            Frontier::Fifo(q) => q.pop_front(),
            Frontier::Ranked(h, _) => h.pop().map(|Reverse((_, v))| v),
        }
    }
}

/// Hull of `a`: repeatedly add a vertex with two neighbours in the set.
///
/// The frontier is processed first in, first out, and a vertex's parents are
/// the first two members that raised its counter.
pub fn hull(g: &Graph, a: &VertexSet) -> Result<HullTrace, ConvexityError> {
    a.check(g.n())?;
    Ok(trace(g, a, Frontier::Fifo(VecDeque::new())))
}

/// Same fixed point as [`hull`], but the frontier is always processed by
/// smallest `rank[v]`. Used to check order independence.
pub fn hull_by_rank(g: &Graph, a: &VertexSet, rank: &[usize]) -> Result<HullTrace, ConvexityError> {
    a.check(g.n())?;
    assert_eq!(rank.len(), g.n(), "one rank per vertex");
    Ok(trace(g, a, Frontier::Ranked(BinaryHeap::new(), rank)))
}

fn trace(g: &Graph, a: &VertexSet, mut frontier: Frontier<'_>) -> HullTrace {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut first_raiser = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut parents = BTreeMap::new();
    for v in a.iter() {
        inside[v] = true;
        order.push(v);
        frontier.push(v);
    }
    while let Some(v) = frontier.pop() {
        for &w in g.neighbors(v) {
            if inside[w] {
                continue;
            }
            if first_raiser[w] == usize::MAX {
                first_raiser[w] = v;
                continue;
            }
            let p = first_raiser[w];
            parents.insert(w, (p.min(v), p.max(v)));
            inside[w] = true;
            order.push(w);
            frontier.push(w);
        }
    }
    HullTrace {
        hull: VertexSet::from_vec(order.clone()),
        order,
        parents,
    }
}

/// Every vertex outside `w` has at most one neighbour in `w`.
pub fn is_convex(g: &Graph, w: &VertexSet) -> Result<bool, ConvexityError> {
    w.check(g.n())?;
    let mut count = vec![0u8; g.n()];
    for v in w.iter() {
        for &u in g.neighbors(v) {
            if !w.contains(u) {
                count[u] += 1;
                if count[u] >= 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A sequence ending in `x` in which every vertex is in `s` or has two
/// neighbours earlier in the sequence; `None` when `x` is outside the hull.
///
/// Built from the parent pairs of [`hull`], keeping only ancestors of `x`.
pub fn two_path_certificate(g: &Graph, s: &VertexSet, x: usize) -> Result<Option<Vec<usize>>, ConvexityError> {
    s.check(g.n())?;
    if x >= g.n() {
        return Err(ConvexityError::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let t = trace(g, s, Frontier::Fifo(VecDeque::new()));
    Ok(certificate_from(&t, x))
}

pub(crate) fn certificate_from(t: &HullTrace, x: usize) -> Option<Vec<usize>> {
    if !t.contains(x) {
        return None;
    }
    let mut needed = BTreeMap::new();
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        if needed.insert(v, ()).is_some() {
            continue;
        }
        if let Some(&(a, b)) = t.parents.get(&v) {
            stack.push(a);
            stack.push(b);
        }
    }
    Some(t.order.iter().copied().filter(|v| needed.contains_key(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use p3c_graph::{gen_path, parse_edge_list};

    fn five_segments() -> Graph {
        parse_edge_list("5 4\n1 2\n1 5\n3 5\n4 5").unwrap()
    }

    #[test]
    fn singleton_hull() {
        let g = five_segments();
        for v in 0..5 {
            assert_eq!(hull(&g, &VertexSet::from([v])).unwrap().hull, VertexSet::from([v]));
        }
    }

    #[test]
    fn five_segment_hulls() {
        let g = five_segments();
        // s=0, s2=1, s1=2, x=3, y=4
        let t = hull(&g, &VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(t.hull, VertexSet::from([0, 1, 2, 4]));
        assert_eq!(t.parents.get(&4), Some(&(0, 2)));
        assert!(t.replays(&g));
        let t = hull(&g, &VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(t.hull, VertexSet::from([0, 1, 2, 3, 4]));
        assert_eq!(t.order, vec![1, 2, 3, 4, 0]);
    }

    #[test]
    fn convexity_examples() {
        let p3 = gen_path(3).unwrap();
        assert!(!is_convex(&p3, &VertexSet::from([0, 2])).unwrap());
        assert!(is_convex(&p3, &VertexSet::from([0, 1, 2])).unwrap());
        assert!(is_convex(&five_segments(), &VertexSet::from([0, 1, 2, 4])).unwrap());
        assert!(is_convex(&p3, &VertexSet::from([3])).is_err());
    }

    #[test]
    fn certificates() {
        let p3 = gen_path(3).unwrap();
        assert_eq!(
            two_path_certificate(&p3, &VertexSet::from([0, 2]), 1).unwrap(),
            Some(vec![0, 2, 1])
        );
        let g = five_segments();
        assert_eq!(two_path_certificate(&g, &VertexSet::from([0, 1, 2]), 3).unwrap(), None);
        let c = two_path_certificate(&g, &VertexSet::from([1, 2, 3]), 0)
            .unwrap()
            .unwrap();
        assert_eq!(c.last(), Some(&0));
        assert!(c.contains(&4));
    }

    #[test]
    fn ranked_frontier_same_set() {
        let g = five_segments();
        let a = VertexSet::from([1, 2, 3]);
        let rev: Vec<usize> = (0..5).rev().collect();
        let t = hull_by_rank(&g, &a, &rev).unwrap();
        assert_eq!(t.hull, hull(&g, &a).unwrap().hull);
        assert!(t.replays(&g));
    }
}
