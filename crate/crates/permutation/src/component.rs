use crate::PermutationError;
use p3c_graph::PermutationDiagram;

/// A connected piece of `G[S]` for a convexly independent `S`: one vertex or
/// two crossing ones, with the extreme endpoints of its segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramComponent {
    vertices: Vec<usize>,
    pub min_top: usize,
    pub max_top: usize,
    pub min_bottom: usize,
    pub max_bottom: usize,
}

impl DiagramComponent {
    pub fn new(d: &PermutationDiagram, vertices: &[usize]) -> Result<Self, PermutationError> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() || vs.len() > 2 || vs.iter().any(|&v| v >= d.n()) {
            return Err(PermutationError::NotAComponent(vs));
        }
        if vs.len() == 2 && !d.crosses(vs[0], vs[1]) {
            return Err(PermutationError::NotAComponent(vs));
        }
        let tops = vs.iter().map(|&v| d.top(v));
        let bottoms = vs.iter().map(|&v| d.bottom(v));
        Ok(DiagramComponent {
            min_top: tops.clone().min().expect("nonempty"),
            max_top: tops.max().expect("nonempty"),
            min_bottom: bottoms.clone().min().expect("nonempty"),
            max_bottom: bottoms.max().expect("nonempty"),
            vertices: vs,
        })
    }

    /// Members in increasing id order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Sort key of the left-to-right processing order.
    pub fn order_key(&self) -> (usize, usize) {
        (self.max_top, self.max_bottom)
    }
}

/// Every singleton and every crossing pair, sorted by `(max_top, max_bottom)`.
/// No two components share that pair, so the order is total.
pub fn enumerate_components(d: &PermutationDiagram) -> Vec<DiagramComponent> {
    let n = d.n();
    let mut out: Vec<DiagramComponent> = (0..n)
        .map(|v| DiagramComponent::new(d, &[v]).expect("singleton"))
        .collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if d.crosses(u, v) {
                out.push(DiagramComponent::new(d, &[u, v]).expect("crossing pair"));
            }
        }
    }
    out.sort_by(|a, b| {
        a.order_key()
            .cmp(&b.order_key())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    out
}

/// Whether `x` lies strictly to the right of `l` on both lines.
pub fn is_right_of(x: &DiagramComponent, l: &DiagramComponent) -> bool {
    x.min_top > l.max_top && x.min_bottom > l.max_bottom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_small_diagrams() {
        let id = enumerate_components(&PermutationDiagram::identity(3));
        assert_eq!(id.len(), 3);
        let rev = enumerate_components(&PermutationDiagram::reversal(3));
        assert_eq!(rev.iter().filter(|c| c.len() == 2).count(), 3);
        assert_eq!(rev.len(), 6);
    }

    #[test]
    fn rejects_non_crossing_pairs() {
        let d = PermutationDiagram::identity(3);
        assert!(DiagramComponent::new(&d, &[0, 1]).is_err());
        assert!(DiagramComponent::new(&d, &[0, 1, 2]).is_err());
        assert!(DiagramComponent::new(&d, &[5]).is_err());
    }

    #[test]
    fn order_is_topological_for_right_of() {
        let d = PermutationDiagram::new(vec![3, 1, 4, 5, 2]).unwrap();
        let cs = enumerate_components(&d);
        for (i, a) in cs.iter().enumerate() {
            for b in &cs[..i] {
                assert!(!is_right_of(b, a));
            }
        }
    }

    #[test]
    fn crossing_segments_are_not_right_of_each_other() {
        let d = PermutationDiagram::new(vec![2, 1]).unwrap();
        let a = DiagramComponent::new(&d, &[0]).unwrap();
        let b = DiagramComponent::new(&d, &[1]).unwrap();
        assert!(!is_right_of(&a, &b) && !is_right_of(&b, &a));
    }
}
