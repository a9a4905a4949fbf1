//! Leafy trees joined by paths.
//!
//! Construction:
//!
//! 1. Vertices of degree three or more form clusters (components of the
//!    subgraph they induce). Each cluster, in order of smallest id, claims its
//!    still unclaimed neighbours of degree one or two. A cluster plus its
//!    claims is a provisional leafy tree. If it is not leafy, it is split into
//!    one star per branch vertex, and the cluster edges become two-vertex
//!    paths.
//! 2. A leafy tree with no vertex of degree two absorbs one pendant chain
//!    `stub - leaf`, smallest stub id first. Longer chains would create a
//!    second degree-two vertex.
//! 3. Every other claimed stub of degree two starts a path that runs outward
//!    through degree-two vertices and ends at a leaf of the tree or at a
//!    vertex of another leafy tree.
//!
//! A tree without branch vertices is a single path.

use crate::closed::require_tree;
use crate::{beta_c_path, FormulaError};
use p3c_graph::{components, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Vertex sets, each sorted.
    pub leafy_trees: Vec<Vec<usize>>,
    /// Vertex sequences.
    pub paths: Vec<Vec<usize>>,
    /// Per path, whether its first and last vertex lie in a leafy tree.
    pub shared: Vec<(bool, bool)>,
}

impl TreeDecomposition {
    /// Leaf counts of the leafy trees plus, per path, its closed-form value
    /// minus its shared endpoints.
    ///
    /// Agrees with the optimum on paths, leafy trees and many small trees but
    /// not on all trees: the spider with three legs of length three scores 6,
    /// its optimum is 7. [`crate::beta_c_tree`] is exact.
    pub fn combined_value(&self, t: &Graph) -> usize {
        let leaves: usize = self
            .leafy_trees
            .iter()
            .map(|f| {
                let sub = t.induced(f);
                (0..sub.n()).filter(|&v| sub.degree(v) <= 1).count()
            })
            .sum();
        let paths: usize = self
            .paths
            .iter()
            .zip(&self.shared)
            .map(|(p, &(a, b))| {
                let shared = if p.len() == 1 {
                    (a || b) as usize
                } else {
                    a as usize + b as usize
                };
                beta_c_path(p.len()).expect("paths are nonempty") - shared
            })
            .sum();
        leaves + paths
    }
}

pub fn tree_decompose(t: &Graph) -> Result<TreeDecomposition, FormulaError> {
    require_tree(t)?;
    let n = t.n();
    let branch: Vec<bool> = (0..n).map(|v| t.degree(v) >= 3).collect();
    if !branch.iter().any(|&b| b) {
        return Ok(whole_path(t));
    }

    let branch_ids: Vec<usize> = (0..n).filter(|&v| branch[v]).collect();
    let clusters: Vec<Vec<usize>> = components(&t.induced(&branch_ids))
        .into_iter()
        .map(|c| c.into_iter().map(|i| branch_ids[i]).collect())
        .collect();

    let mut owner = vec![usize::MAX; n];
    let mut trees: Vec<Vec<usize>> = Vec::new();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut shared: Vec<(bool, bool)> = Vec::new();

    for cluster in &clusters {
        let mut claims: Vec<Vec<usize>> = Vec::with_capacity(cluster.len());
        for &c in cluster {
            let mine: Vec<usize> = t
                .neighbors(c)
                .iter()
                .copied()
                .filter(|&w| !branch[w] && owner[w] == usize::MAX)
                .collect();
            for &w in &mine {
                owner[w] = usize::MAX - 1;
            }
            claims.push(mine);
        }
        let mut provisional: Vec<usize> = cluster.iter().chain(claims.iter().flatten()).copied().collect();
        provisional.sort_unstable();
        let pieces = if leafy_in(t, &provisional) {
            vec![provisional]
        } else {
            for &c in cluster {
                for &d in t.neighbors(c).iter().filter(|&&d| branch[d] && c < d) {
                    paths.push(vec![c, d]);
                    shared.push((true, true));
                }
            }
            cluster
                .iter()
                .zip(&claims)
                .map(|(&c, mine)| {
                    let mut star = mine.clone();
                    star.push(c);
                    star.sort_unstable();
                    star
                })
                .collect()
        };
        for piece in pieces {
            let id = trees.len();
            for &v in &piece {
                owner[v] = id;
            }
            trees.push(piece);
        }
    }

    // absorption of one `stub - leaf` chain per tree
    for (id, tree) in trees.iter_mut().enumerate() {
        if has_degree_two(t, tree) {
            continue;
        }
        let pick = tree.iter().copied().find_map(|s| {
            if branch[s] || t.degree(s) != 2 {
                return None;
            }
            t.neighbors(s)
                .iter()
                .copied()
                .find(|&w| owner[w] == usize::MAX && t.degree(w) == 1)
                .map(|leaf| (s, leaf))
        });
        if let Some((_, leaf)) = pick {
            let mut grown = tree.clone();
            grown.push(leaf);
            grown.sort_unstable();
            if leafy_in(t, &grown) {
                owner[leaf] = id;
                *tree = grown;
            }
        }
    }

    // paths out of the remaining degree-two stubs
    for (id, tree) in trees.iter().enumerate() {
        for &s in tree {
            if branch[s] || t.degree(s) != 2 {
                continue;
            }
            let Some(&first) = t.neighbors(s).iter().find(|&&w| owner[w] != id) else {
                continue;
            };
            let mut path = vec![s];
            let (mut prev, mut cur) = (s, first);
            loop {
                path.push(cur);
                if owner[cur] != usize::MAX || t.degree(cur) != 2 {
                    break;
                }
                let next = t
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("degree two");
                prev = cur;
                cur = next;
            }
            let end = *path.last().expect("nonempty");
            let end_shared = owner[end] != usize::MAX;
            // a path between two trees is emitted once, from its smaller end
            if end_shared && end < s && t.degree(end) == 2 && !branch[end] {
                continue;
            }
            paths.push(path);
            shared.push((true, end_shared));
        }
    }

    Ok(TreeDecomposition {
        leafy_trees: trees,
        paths,
        shared,
    })
}

fn whole_path(t: &Graph) -> TreeDecomposition {
    let n = t.n();
    let start = (0..n).find(|&v| t.degree(v) <= 1).expect("a path has an end");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    TreeDecomposition {
        leafy_trees: Vec::new(),
        paths: vec![path],
        shared: vec![(false, false)],
    }
}

fn degrees_within(t: &Graph, vs: &[usize]) -> Vec<usize> {
    let sub = t.induced(vs);
    (0..sub.n()).map(|v| sub.degree(v)).collect()
}

fn leafy_in(t: &Graph, vs: &[usize]) -> bool {
    degrees_within(t, vs).iter().filter(|&&d| d == 2).count() <= 1
}

fn has_degree_two(t: &Graph, vs: &[usize]) -> bool {
    degrees_within(t, vs).contains(&2)
}
