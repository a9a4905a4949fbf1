//! Convex-independence number of cographs.
//!
//! A union scores the sum of its parts. A join scores 2, unless one of its
//! parts is a single vertex `u`: then a largest independent set avoids `u`
//! and takes one vertex from each component of `G - u`.
//!
//! Cotrees need not be normalised. Nested joins are flattened into one list
//! of parts and nested unions into one list of components before counting.

#![forbid(unsafe_code)]

use p3c_convexity::VertexSet;
pub use p3c_graph::{build_cotree, Cotree, CotreeError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CographError {
    #[error(transparent)]
    Cotree(#[from] CotreeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CographSolution {
    pub value: usize,
    /// A convexly independent set of size `value`.
    pub witness: VertexSet,
}

pub fn beta_c_cograph(t: &Cotree) -> Result<usize, CographError> {
    solve_cograph(t).map(|s| s.value)
}

pub fn solve_cograph(t: &Cotree) -> Result<CographSolution, CographError> {
    t.validate(t.vertex_count())?;
    let witness = solve(t);
    Ok(CographSolution {
        value: witness.len(),
        witness: VertexSet::from_vec(witness),
    })
}

fn solve(t: &Cotree) -> Vec<usize> {
    match t {
        Cotree::Leaf(v) => vec![*v],
        Cotree::Union(kids) => kids.iter().flat_map(solve).collect(),
        Cotree::Join(_) => {
            let mut parts = Vec::new();
            join_parts(t, &mut parts);
            let mut best = two_smallest(t);
            if parts.len() == 2 {
                for (i, part) in parts.iter().enumerate() {
                    if matches!(part, Cotree::Leaf(_)) {
                        // G - u is the other part; one vertex per component
                        let reps = component_minima(parts[1 - i]);
                        if reps.len() > best.len() {
                            best = reps;
                        }
                    }
                }
            }
            // with three or more parts G - u stays connected
            best
        }
    }
}

fn join_parts<'a>(t: &'a Cotree, out: &mut Vec<&'a Cotree>) {
    match t {
        Cotree::Join(kids) => kids.iter().for_each(|k| join_parts(k, out)),
        _ => out.push(t),
    }
}

/// Smallest vertex of every connected component.
fn component_minima(t: &Cotree) -> Vec<usize> {
    match t {
        Cotree::Union(kids) => kids.iter().flat_map(component_minima).collect(),
        _ => vec![t.vertices()[0]],
    }
}

fn two_smallest(t: &Cotree) -> Vec<usize> {
    t.vertices().into_iter().take(2).collect()
}
