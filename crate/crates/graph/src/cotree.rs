use crate::{components, Graph};
use thiserror::Error;

/// Union/join decomposition tree of a cograph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    /// Disjoint union of at least two subtrees.
    Union(Vec<Cotree>),
    /// Complete join of at least two subtrees.
    Join(Vec<Cotree>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotreeError {
    #[error("graph has no vertices")]
    Empty,
    /// Vertices `path[0]-path[1]-path[2]-path[3]` induce a P4.
    #[error("not a cograph: vertices {} {} {} {} induce a P4", path[0] + 1, path[1] + 1, path[2] + 1, path[3] + 1)]
    NotACograph { path: [usize; 4] },
    #[error("malformed cotree: {0}")]
    Malformed(String),
}

impl Cotree {
    pub fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf(_) => &[],
            Cotree::Union(c) | Cotree::Join(c) => c,
        }
    }

    /// Leaves in sorted order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            _ => self.children().iter().for_each(|c| c.collect(out)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            _ => self.children().iter().map(Cotree::vertex_count).sum(),
        }
    }

    /// Checks that internal nodes have two or more children and that the
    /// leaves are exactly `0..n`, each once.
    pub fn validate(&self, n: usize) -> Result<(), CotreeError> {
        self.check_arity()?;
        if self.vertices() != (0..n).collect::<Vec<_>>() {
            return Err(CotreeError::Malformed(format!(
                "leaves are not exactly the vertices 1..={n}"
            )));
        }
        Ok(())
    }

    fn check_arity(&self) -> Result<(), CotreeError> {
        match self {
            Cotree::Leaf(_) => Ok(()),
            _ if self.children().len() < 2 => Err(CotreeError::Malformed(
                "internal node with fewer than two children".into(),
            )),
            _ => self.children().iter().try_for_each(Cotree::check_arity),
        }
    }

    /// The graph on `0..n` this cotree denotes.
    pub fn to_graph(&self, n: usize) -> Result<Graph, CotreeError> {
        self.validate(n)?;
        let mut edges = Vec::new();
        self.emit_edges(&mut edges);
        Ok(Graph::from_edges(n, edges).expect("validated leaves"))
    }

    fn emit_edges(&self, edges: &mut Vec<(usize, usize)>) {
        let kids = self.children();
        kids.iter().for_each(|c| c.emit_edges(edges));
        if let Cotree::Join(_) = self {
            let parts: Vec<Vec<usize>> = kids.iter().map(Cotree::vertices).collect();
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    edges.extend(a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))));
                }
            }
        }
    }
}

/// Recognises a cograph by splitting on components, then on co-components.
/// Fails with an induced P4 when a vertex set of size two or more is both
/// connected and co-connected.
pub fn build_cotree(g: &Graph) -> Result<Cotree, CotreeError> {
    if g.n() == 0 {
        return Err(CotreeError::Empty);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    split(g, &all)
}

fn split(g: &Graph, vs: &[usize]) -> Result<Cotree, CotreeError> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf(vs[0]));
    }
    let sub = g.induced(vs);
    let lift = |parts: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        parts
            .into_iter()
            .map(|p| p.into_iter().map(|i| vs[i]).collect())
            .collect()
    };
    let comps = components(&sub);
    if comps.len() > 1 {
        let kids = lift(comps).iter().map(|p| split(g, p)).collect::<Result<_, _>>()?;
        return Ok(Cotree::Union(kids));
    }
    let co = components(&sub.complement());
    if co.len() > 1 {
        let kids = lift(co).iter().map(|p| split(g, p)).collect::<Result<_, _>>()?;
        return Ok(Cotree::Join(kids));
    }
    let p = find_p4(&sub).expect("connected and co-connected graphs contain an induced P4");
    Err(CotreeError::NotACograph { path: p.map(|i| vs[i]) })
}

/// An induced P4 `a-b-c-d`, searched over middle edges `b-c`.
pub fn find_p4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    let mut mark = vec![false; n];
    for (b, c) in g.edges() {
        for &d in g.neighbors(c) {
            mark[d] = d != b && !g.has_edge(b, d);
        }
        let found = g.neighbors(b).iter().find_map(|&a| {
            if a == c || g.has_edge(a, c) {
                return None;
            }
            g.neighbors(c)
                .iter()
                .find(|&&d| mark[d] && !g.has_edge(a, d))
                .map(|&d| [a, b, c, d])
        });
        for &d in g.neighbors(c) {
            mark[d] = false;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}
