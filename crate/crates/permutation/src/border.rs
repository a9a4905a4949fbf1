use crate::{DiagramComponent, PermutationError};
use p3c_graph::PermutationDiagram;

/// Rightmost endpoints of a hull, one per line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Border {
    pub top: usize,
    pub bottom: usize,
}

impl Border {
    /// A border past every endpoint of an `n`-vertex diagram.
    pub fn beyond(n: usize) -> Self {
        Border {
            top: n + 1,
            bottom: n + 1,
        }
    }
}

/// Both endpoints of `v` strictly left of the border.
pub fn left_of_border(d: &PermutationDiagram, v: usize, b: Border) -> bool {
    d.top(v) < b.top && d.bottom(v) < b.bottom
}

/// Neither endpoint of `v` beyond the border.
fn within_border(d: &PermutationDiagram, v: usize, b: Border) -> bool {
    d.top(v) <= b.top && d.bottom(v) <= b.bottom
}

pub fn compute_border(d: &PermutationDiagram, hull: &[usize]) -> Result<Border, PermutationError> {
    let top = hull
        .iter()
        .map(|&v| d.top(v))
        .max()
        .ok_or(PermutationError::EmptyHull)?;
    let bottom = hull
        .iter()
        .map(|&v| d.bottom(v))
        .max()
        .ok_or(PermutationError::EmptyHull)?;
    Ok(Border { top, bottom })
}

/// Hull membership of a vertex right of `last`, read off the border of the
/// hull of a convexly independent set whose last component is `last`.
///
/// The comparison is not strict: a hull vertex may itself supply a border
/// endpoint. With strict comparison the answer is wrong for such vertices,
/// e.g. diagram `2 4 5 3 1`, set `{0, 1}`, vertex 2.
pub fn membership_by_border(
    d: &PermutationDiagram,
    v: usize,
    last: &DiagramComponent,
    b: Border,
) -> Result<bool, PermutationError> {
    if d.top(v) <= last.max_top || d.bottom(v) <= last.max_bottom {
        return Err(PermutationError::NotRightOfLast { vertex: v });
    }
    Ok(within_border(d, v, b))
}
