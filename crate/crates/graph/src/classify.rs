use crate::{build_cotree, Graph};
use std::fmt;

/// Structural class used to pick a solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Path,
    Cycle,
    Tree,
    Cograph,
    /// Not in an earlier class, but a permutation diagram came with it.
    PermutationInput,
    Generic,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Path => "path",
            GraphClass::Cycle => "cycle",
            GraphClass::Tree => "tree",
            GraphClass::Cograph => "cograph",
            GraphClass::PermutationInput => "permutation-input",
            GraphClass::Generic => "generic",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Connected with every degree at most two and `n - 1` edges.
pub fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// Connected, 2-regular, at least three vertices.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// First matching class in the order path, cycle, tree, cograph,
/// permutation-input, generic.
pub fn classify(g: &Graph, has_diagram: bool) -> GraphClass {
    if is_path(g) {
        GraphClass::Path
    } else if is_cycle(g) {
        GraphClass::Cycle
    } else if g.is_tree() {
        GraphClass::Tree
    } else if g.n() >= 1 && build_cotree(g).is_ok() {
        GraphClass::Cograph
    } else if has_diagram {
        GraphClass::PermutationInput
    } else {
        GraphClass::Generic
    }
}
