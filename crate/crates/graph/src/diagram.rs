use crate::{Graph, GraphError};

/// Segments between two parallel lines. Vertex `v` has its top endpoint at
/// position `v + 1` and its bottom endpoint at `bottom(v)`, both in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationDiagram {
    bottom: Vec<usize>,
}

impl PermutationDiagram {
    /// `bottom[v]` is the 1-based bottom position of vertex `v`.
    pub fn new(bottom: Vec<usize>) -> Result<Self, GraphError> {
        let n = bottom.len();
        let mut seen = vec![false; n + 1];
        for &b in &bottom {
            if b == 0 || b > n || seen[b] {
                return Err(GraphError::NotAPermutation { value: b, n });
            }
            seen[b] = true;
        }
        Ok(PermutationDiagram { bottom })
    }

    pub fn identity(n: usize) -> Self {
        PermutationDiagram {
            bottom: (1..=n).collect(),
        }
    }

    /// Reversal: every pair of segments crosses.
    pub fn reversal(n: usize) -> Self {
        PermutationDiagram {
            bottom: (1..=n).rev().collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.bottom.len()
    }

    #[inline]
    pub fn top(&self, v: usize) -> usize {
        v + 1
    }

    #[inline]
    pub fn bottom(&self, v: usize) -> usize {
        self.bottom[v]
    }

    pub fn bottom_positions(&self) -> &[usize] {
        &self.bottom
    }

    /// Whether the segments of `u` and `v` cross.
    #[inline]
    pub fn crosses(&self, u: usize, v: usize) -> bool {
        (u < v) != (self.bottom[u] < self.bottom[v])
    }

    /// The intersection graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges.filter(|&(u, v)| self.crosses(u, v))).expect("crossing pairs are valid edges")
    }
}
