//! Exponential-time reference answers for small graphs.
//!
//! [`beta_c_oracle`] extends convexly independent sets depth first in
//! increasing vertex order; subsets of independent sets are independent, so a
//! dependent set is never extended. [`caratheodory_oracle`] has no such
//! shortcut and tries whole subsets, largest first.

#![forbid(unsafe_code)]

use p3c_convexity::{Closure, ConvexityError, VertexSet};
use p3c_graph::Graph;
use thiserror::Error;

pub const DEFAULT_ORACLE_MAX: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest vertex count the oracle accepts.
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_ORACLE_MAX,
        }
    }
}

/// Optimum value, the lexicographically smallest optimal set, and how many
/// candidate sets were examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub witness: VertexSet,
    pub explored: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices; the exhaustive oracle is limited to {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Convexity(#[from] ConvexityError),
}

fn admit(g: &Graph, cfg: &OracleConfig) -> Result<(), OracleError> {
    if g.n() > cfg.max_vertices {
        Err(OracleError::TooLarge {
            n: g.n(),
            max: cfg.max_vertices,
        })
    } else {
        Ok(())
    }
}

/// Largest convexly independent set. With `limit`, the search stops at sets
/// of that size.
pub fn beta_c_oracle(g: &Graph, cfg: &OracleConfig, limit: Option<usize>) -> Result<OracleResult, OracleError> {
    admit(g, cfg)?;
    let mut search = Search {
        g,
        cap: limit.unwrap_or(usize::MAX).min(g.n()),
        best: Vec::new(),
        explored: 0,
        current: Vec::new(),
    };
    let empty = Closure::new(g);
    search.extend(0, &empty);
    Ok(OracleResult {
        value: search.best.len(),
        witness: VertexSet::from_vec(search.best),
        explored: search.explored,
    })
}

struct Search<'g> {
    g: &'g Graph,
    cap: usize,
    best: Vec<usize>,
    explored: u64,
    current: Vec<usize>,
}

impl<'g> Search<'g> {
    /// `hull` is the closure of `current`.
    fn extend(&mut self, start: usize, hull: &Closure<'g>) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let n = self.g.n();
        for v in start..n {
            let room = self.current.len() + (n - v);
            if self.current.len() >= self.cap || room <= self.best.len() {
                return;
            }
            self.explored += 1;
            if hull.contains(v) || !self.others_stay_out(v) {
                continue;
            }
            let mut next = hull.clone();
            next.insert(v);
            next.close();
            self.current.push(v);
            self.extend(v + 1, &next);
            self.current.pop();
        }
    }

    /// No current member enters the hull of the others plus `v`.
    fn others_stay_out(&self, v: usize) -> bool {
        self.current.iter().all(|&u| {
            let mut c = Closure::new(self.g);
            for &w in self.current.iter().filter(|&&w| w != u) {
                c.insert(w);
            }
            c.insert(v);
            !c.close_until(u)
        })
    }
}

/// `σ(S)` minus the union of `σ(S − x)` over `x ∈ S`.
pub fn sigma_boundary(g: &Graph, s: &VertexSet) -> Result<VertexSet, OracleError> {
    if s.is_empty() {
        return Err(ConvexityError::EmptySet.into());
    }
    if let Some(&v) = s.as_slice().last() {
        if v >= g.n() {
            return Err(ConvexityError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
    }
    Ok(boundary_unchecked(g, s.as_slice()))
}

fn boundary_unchecked(g: &Graph, s: &[usize]) -> VertexSet {
    let full = Closure::of(g, s);
    let mut covered = vec![false; g.n()];
    let mut rest = Vec::with_capacity(s.len());
    for &x in s {
        rest.clear();
        rest.extend(s.iter().copied().filter(|&w| w != x));
        for &v in Closure::of(g, &rest).members() {
            covered[v] = true;
        }
    }
    full.members().iter().copied().filter(|&v| !covered[v]).collect()
}

/// A nonempty set is irredundant when its boundary is nonempty.
pub fn is_irredundant(g: &Graph, s: &VertexSet) -> Result<bool, OracleError> {
    Ok(!sigma_boundary(g, s)?.is_empty())
}

/// Largest irredundant set, which is the Carathéodory number.
///
/// Irredundant sets are convexly independent, so sizes are tried from the
/// convex-independence number downwards; every subset of each size is tried
/// in lexicographic order.
pub fn caratheodory_oracle(g: &Graph, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    let upper = beta_c_oracle(g, cfg, None)?;
    let n = g.n();
    let mut explored = upper.explored;
    for k in (1..=upper.value).rev() {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            explored += 1;
            if !boundary_unchecked(g, &combo).is_empty() {
                return Ok(OracleResult {
                    value: k,
                    witness: VertexSet::from_vec(combo),
                    explored,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(OracleResult {
        value: 0,
        witness: VertexSet::new(),
        explored,
    })
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use p3c_graph::{gen_ladder, gen_path, parse_edge_list, PermutationDiagram};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn small_values() {
        let k3 = PermutationDiagram::reversal(3).to_graph();
        assert_eq!(beta_c_oracle(&k3, &cfg(), None).unwrap().value, 2);
        let p6 = gen_path(6).unwrap();
        let r = beta_c_oracle(&p6, &cfg(), None).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness, VertexSet::from([0, 1, 3, 4]));
        let five_segments = parse_edge_list("5 4\n1 2\n1 5\n3 5\n4 5").unwrap();
        assert_eq!(beta_c_oracle(&five_segments, &cfg(), None).unwrap().value, 3);
        assert_eq!(beta_c_oracle(&Graph::empty(0), &cfg(), None).unwrap().value, 0);
    }

    #[test]
    fn limit_truncates() {
        let r = beta_c_oracle(&Graph::empty(6), &cfg(), Some(3)).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, VertexSet::from([0, 1, 2]));
    }

    #[test]
    fn refuses_large_graphs() {
        let g = Graph::empty(21);
        assert_eq!(
            beta_c_oracle(&g, &cfg(), None),
            Err(OracleError::TooLarge { n: 21, max: 20 })
        );
        let small = OracleConfig { max_vertices: 4 };
        assert!(caratheodory_oracle(&gen_path(5).unwrap(), &small).is_err());
    }

    #[test]
    fn boundaries() {
        let p6 = gen_path(6).unwrap();
        assert!(sigma_boundary(&p6, &VertexSet::from([0, 1, 4, 5])).unwrap().is_empty());
        assert!(!is_irredundant(&p6, &VertexSet::from([0, 1, 4, 5])).unwrap());
        let p3 = gen_path(3).unwrap();
        assert_eq!(
            sigma_boundary(&p3, &VertexSet::from([0, 2])).unwrap(),
            VertexSet::from([1])
        );
        assert_eq!(
            sigma_boundary(&p3, &VertexSet::from([2])).unwrap(),
            VertexSet::from([2])
        );
        assert!(sigma_boundary(&p3, &VertexSet::new()).is_err());
    }

    #[test]
    fn caratheodory_values() {
        // both ends of K2 already lie in the hulls of the singletons, so the
        // pair has an empty boundary
        let k2 = gen_path(2).unwrap();
        assert_eq!(caratheodory_oracle(&k2, &cfg()).unwrap().value, 1);
        assert!(!is_irredundant(&k2, &VertexSet::from([0, 1])).unwrap());
        for n in 3..=9 {
            assert_eq!(
                caratheodory_oracle(&gen_path(n).unwrap(), &cfg()).unwrap().value,
                2,
                "P{n}"
            );
        }
        let (ladder, _) = gen_ladder(3).unwrap();
        assert!(caratheodory_oracle(&ladder, &cfg()).unwrap().value >= 3);
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
