//! Exact convex-independence number of a tree.
//!
//! Root the tree. In a tree, `u ∈ σ(S − u)` exactly when at least two of the
//! branches at `u` bring infection to their neighbour of `u` without help
//! from `u`. For a child `c` that is
//!
//! * `up(c)`: `c ∈ S`, or at least two children of `c` have `up`;
//!
//! and for the parent `p` of `c`, seen from `c`, it is
//!
//! * `down(c)`: `p ∈ S`, or `up` children of `p` other than `c` plus
//!   `down(p)` number at least two.
//!
//! A member `u` is then independent iff its `up` children plus `down(u)`
//! number at most one. The program runs over `(down, up)` per vertex and
//! counts `up` children with a small knapsack capped at three.

use crate::closed::require_tree;
use crate::FormulaError;
use p3c_convexity::VertexSet;
use p3c_graph::Graph;

const NEG: i64 = i64::MIN / 4;
const CAP: usize = 3;

/// Optimum value with one optimal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSolution {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn beta_c_tree(t: &Graph) -> Result<usize, FormulaError> {
    Ok(solve_tree(t)?.value)
}

pub fn solve_tree(t: &Graph) -> Result<TreeSolution, FormulaError> {
    require_tree(t)?;
    let rooted = Rooted::new(t);
    let n = t.n();
    // table[v][down][up]
    let mut table = vec![[[NEG; 2]; 2]; n];
    let mut choice = vec![[[(false, 0usize); 2]; 2]; n];
    for &v in rooted.order.iter().rev() {
        let kids = &rooted.children[v];
        for down in 0..2 {
            for member in [false, true] {
                for count in 0..=CAP {
                    if member && count + down > 1 {
                        continue;
                    }
                    let total = knapsack(kids, &table, member, down, count, None);
                    if total == NEG {
                        continue;
                    }
                    let total = total + member as i64;
                    let up = (member || count >= 2) as usize;
                    if total > table[v][down][up] {
                        table[v][down][up] = total;
                        choice[v][down][up] = (member, count);
                    }
                }
            }
        }
    }
    let root = rooted.order[0];
    let up = if table[root][0][1] >= table[root][0][0] { 1 } else { 0 };
    let value = table[root][0][up] as usize;

    let mut witness = Vec::with_capacity(value);
    let mut stack = vec![(root, 0usize, up)];
    let mut back = Vec::new();
    while let Some((v, down, up)) = stack.pop() {
        let (member, count) = choice[v][down][up];
        if member {
            witness.push(v);
        }
        let kids = &rooted.children[v];
        knapsack(kids, &table, member, down, count, Some(&mut back));
        // walk the back pointers from the final count
        let mut c = count;
        for (i, &w) in kids.iter().enumerate().rev() {
            let (prev, fw) = back[i][c];
            stack.push((w, child_down(member, down, count, fw), fw));
            c = prev;
        }
    }
    Ok(TreeSolution {
        value,
        witness: VertexSet::from_vec(witness),
    })
}

/// Whether `v`, seen from a child with `up = fw`, is infected by the rest.
#[inline]
fn child_down(member: bool, down: usize, count: usize, fw: usize) -> usize {
    (member || count + down >= 2 + fw) as usize
}

/// Best sum over children whose capped `up` count is `count`, given `v`'s
/// membership and `down`. Records `(previous count, child up)` per child
/// when `back` is given.
fn knapsack(
    kids: &[usize],
    table: &[[[i64; 2]; 2]],
    member: bool,
    down: usize,
    count: usize,
    mut back: Option<&mut Vec<[(usize, usize); CAP + 1]>>,
) -> i64 {
    let mut best = [NEG; CAP + 1];
    best[0] = 0;
    if let Some(b) = back.as_deref_mut() {
        b.clear();
    }
    for &w in kids {
        let mut next = [NEG; CAP + 1];
        let mut ptr = [(0, 0); CAP + 1];
        for (c, &acc) in best.iter().enumerate() {
            if acc == NEG {
                continue;
            }
            for fw in 0..2 {
                let val = table[w][child_down(member, down, count, fw)][fw];
                if val == NEG {
                    continue;
                }
                let c2 = (c + fw).min(CAP);
                if acc + val > next[c2] {
                    next[c2] = acc + val;
                    ptr[c2] = (c, fw);
                }
            }
        }
        best = next;
        if let Some(b) = back.as_deref_mut() {
            b.push(ptr);
        }
    }
    best[count]
}

struct Rooted {
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl Rooted {
    fn new(t: &Graph) -> Self {
        let n = t.n();
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![0];
        parent[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in t.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    children[v].push(w);
                    order.push(w);
                }
            }
        }
        Rooted { order, children }
    }
}
