//! Deterministic instance generators. Random ones are seeded ChaCha streams,
//! so the same `(n, seed)` always yields the same instance.

use crate::{Cotree, Graph, GraphError, PermutationDiagram};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn require(what: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    require("path length", 1, n)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    require("cycle length", 3, n)?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The two rails of a ladder with `k` rungs, as vertex ids.
///
/// Rung `i` (1-based) is the crossing pair with tops `(1, 3)` for the first
/// rung, `(2i - 2, 2i + 1)` for the middle ones and `(2k - 2, 2k)` for the
/// last; each rung swaps its two positions on the bottom line. The first rail
/// takes the left segment of odd rungs and the right segment of even rungs.
pub fn ladder_rails(k: usize) -> Result<(Vec<usize>, Vec<usize>), GraphError> {
    require("ladder rungs", 2, k)?;
    let rung = |i: usize| -> (usize, usize) {
        let (a, b) = if i == 1 {
            (1, 3)
        } else if i == k {
            (2 * k - 2, 2 * k)
        } else {
            (2 * i - 2, 2 * i + 1)
        };
        (a - 1, b - 1)
    };
    let mut first = Vec::with_capacity(k);
    let mut second = Vec::with_capacity(k);
    for i in 1..=k {
        let (a, b) = rung(i);
        if i % 2 == 1 {
            first.push(a);
            second.push(b);
        } else {
            first.push(b);
            second.push(a);
        }
    }
    Ok((first, second))
}

/// Ladder with `k` rungs (`2k` vertices) and its permutation diagram.
///
/// The graph is assembled from rails and rungs, independently of the diagram.
pub fn gen_ladder(k: usize) -> Result<(Graph, PermutationDiagram), GraphError> {
    let (first, second) = ladder_rails(k)?;
    let n = 2 * k;
    let mut bottom = vec![0; n];
    for (&a, &b) in first.iter().zip(&second) {
        // each rung swaps its two top positions
        bottom[a] = b + 1;
        bottom[b] = a + 1;
    }
    let mut edges: Vec<(usize, usize)> = first.iter().copied().zip(second.iter().copied()).collect();
    for rail in [&first, &second] {
        edges.extend(rail.windows(2).map(|w| (w[0], w[1])));
    }
    let g = Graph::from_edges(n, edges)?;
    Ok((g, PermutationDiagram::new(bottom)?))
}

/// A centre (vertex 0) with `legs` paths of `leg_length` vertices each. Leg
/// `i` occupies ids `1 + i * leg_length ..`, ordered away from the centre.
pub fn gen_spider(legs: usize, leg_length: usize) -> Result<Graph, GraphError> {
    require("spider legs", 1, legs)?;
    require("spider leg length", 1, leg_length)?;
    let n = 1 + legs * leg_length;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..legs {
        let base = 1 + i * leg_length;
        edges.push((0, base));
        edges.extend((1..leg_length).map(|j| (base + j - 1, base + j)));
    }
    Graph::from_edges(n, edges)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gen_random_permutation(n: usize, seed: u64) -> PermutationDiagram {
    let mut bottom: Vec<usize> = (1..=n).collect();
    bottom.shuffle(&mut rng(seed));
    PermutationDiagram::new(bottom).expect("shuffle of 1..=n")
}

/// Random tree: every vertex after the first picks a uniform earlier parent,
/// then ids are shuffled.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require("tree size", 1, n)?;
    let mut r = rng(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (label[r.gen_range(0..v)], label[v])).collect();
    Graph::from_edges(n, edges)
}

/// Random cotree with random union/join labels over a shuffled vertex order,
/// together with the graph it evaluates to.
pub fn gen_random_cograph(n: usize, seed: u64) -> Result<(Graph, Cotree), GraphError> {
    require("cograph size", 1, n)?;
    let mut r = rng(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut r);
    let tree = random_cotree(&ids, &mut r);
    let g = tree.to_graph(n).expect("generated cotree is well formed");
    Ok((g, tree))
}

fn random_cotree(ids: &[usize], r: &mut ChaCha8Rng) -> Cotree {
    if ids.len() == 1 {
        return Cotree::Leaf(ids[0]);
    }
    // cut points split ids into 2..=4 nonempty consecutive parts
    let parts = r.gen_range(2..=ids.len().min(4));
    let mut cuts: Vec<usize> = (1..ids.len()).collect();
    cuts.shuffle(r);
    let mut cuts = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut kids = Vec::with_capacity(parts);
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(ids.len())) {
        kids.push(random_cotree(&ids[start..end], r));
        start = end;
    }
    if r.gen_bool(0.5) {
        Cotree::Union(kids)
    } else {
        Cotree::Join(kids)
    }
}

/// Every tree on `n` vertices up to isomorphism, each once.
///
/// Grown from the trees on `n - 1` vertices by hanging a leaf on every vertex
/// and keeping one tree per canonical form.
pub fn gen_all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    if n == 0 {
        return Vec::new();
    }
    for size in 2..=n {
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let mut edges: Vec<(usize, usize)> = t.edges().collect();
                edges.push((v, size - 1));
                let grown = Graph::from_edges(size, edges).expect("valid leaf");
                if seen.insert(canonical_tree(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// Canonical string of a tree: nested parentheses rooted at a centre, the
/// smaller of the two encodings when there are two centres.
pub fn canonical_tree(t: &Graph) -> String {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in t.neighbors(v) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    parts.sort_unstable();
    format!("({})", parts.concat())
}
