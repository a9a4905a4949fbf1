use crate::interface::{react, Cut, Reaction};
use crate::DiagramComponent;
use p3c_convexity::{Closure, VertexSet};
use p3c_graph::{Graph, PermutationDiagram};

/// Neighbours of the last component through which a member of `S` outside it
/// can be pulled into the hull of the others once later components arrive.
///
/// The separator vertices are ordered by how far their segments reach to the
/// right: upper vertices by top position, then lower ones by bottom position.
/// `single` is the first of them when it alone suffices for some member. The
/// pair `(y1, y2)` is that first vertex together with the last vertex of the
/// shortest longer prefix that suffices for some member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessTriple {
    pub y1: Option<usize>,
    pub y2: Option<usize>,
    pub single: Option<usize>,
}

impl WitnessTriple {
    pub(crate) fn from_reactions<'a>(cut: &Cut, reactions: impl Iterator<Item = &'a Reaction>) -> Self {
        let mut triple = WitnessTriple::default();
        let mut longer: Option<usize> = None;
        for probe in reactions.filter_map(Reaction::first_hit) {
            if probe == 1 {
                triple.single = cut.chain().first().copied();
            } else {
                longer = Some(longer.map_or(probe, |p| p.min(probe)));
            }
        }
        if let Some(p) = longer {
            triple.y1 = cut.chain().first().copied();
            triple.y2 = Some(cut.chain()[cut.steps()[p] - 1]);
        }
        triple
    }

    pub fn is_empty(&self) -> bool {
        self.y1.is_none() && self.y2.is_none() && self.single.is_none()
    }
}

/// Witness triple of a convexly independent `s` whose last component is
/// `last`.
pub fn witness_triple(d: &PermutationDiagram, g: &Graph, s: &VertexSet, last: &DiagramComponent) -> WitnessTriple {
    let cut = Cut::new(d, last.max_top, last.max_bottom);
    let reactions: Vec<Reaction> = s
        .iter()
        .filter(|&u| !last.contains(u))
        .map(|u| {
            let rest: Vec<usize> = s.iter().filter(|&w| w != u).collect();
            react(d, &cut, &Closure::of(g, &rest), Some(u))
        })
        .collect();
    WitnessTriple::from_reactions(&cut, reactions.iter())
}
