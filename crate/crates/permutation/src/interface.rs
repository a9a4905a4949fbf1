//! How a closed set on the left of a component reacts to infection arriving
//! from the right.
//!
//! The last component `L` splits the vertices by their endpoints relative to
//! `(L.max_top, L.max_bottom)`:
//!
//! * left: neither endpoint beyond; `S` lives here,
//! * right: both endpoints beyond; every later component lives here,
//! * upper / lower: only the top / only the bottom endpoint beyond.
//!
//! Left and right segments never cross, so upper and lower vertices separate
//! the two sides. Each upper vertex crosses the member of `L` with the largest
//! bottom and each lower one the member with the largest top. Once that
//! member is in the hull, one infected right neighbour is enough to infect an
//! upper or lower vertex. Upper right-neighbourhoods are nested by top
//! position and lower ones by bottom position, so the upper and lower
//! vertices infected from the right always form a prefix of one fixed order.
//! When both kinds exist each upper vertex crosses each lower one, and a
//! single infected one pulls in all the rest.
//!
//! A [`Reaction`] records, for each such prefix, what the closure on the left
//! passes back to the right side and whether a target vertex got infected.
//! A right vertex only sees how many infected upper vertices have a larger
//! top and how many infected lower ones have a larger bottom, capped at two,
//! so two positions per side are kept.

use p3c_convexity::Closure;
use p3c_graph::{Graph, PermutationDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Region {
    Left,
    Right,
    Upper,
    Lower,
}

#[derive(Clone, Debug)]
pub(crate) struct Cut {
    region: Vec<Region>,
    right: Vec<bool>,
    /// Upper and lower vertices, largest right-neighbourhood first.
    chain: Vec<usize>,
    /// Prefix length of `chain` forced by each probe.
    steps: Vec<usize>,
    both: bool,
    /// Tops of upper vertices and bottoms of lower ones, descending.
    upper_tops: Vec<usize>,
    lower_bottoms: Vec<usize>,
}

impl Cut {
    pub fn new(d: &PermutationDiagram, max_top: usize, max_bottom: usize) -> Self {
        let n = d.n();
        let region: Vec<Region> = (0..n)
            .map(|v| match (d.top(v) > max_top, d.bottom(v) > max_bottom) {
                (false, false) => Region::Left,
                (true, true) => Region::Right,
                (true, false) => Region::Upper,
                (false, true) => Region::Lower,
            })
            .collect();
        let right = region.iter().map(|&r| r == Region::Right).collect();
        let mut upper: Vec<usize> = (0..n).filter(|&v| region[v] == Region::Upper).collect();
        let mut lower: Vec<usize> = (0..n).filter(|&v| region[v] == Region::Lower).collect();
        upper.sort_unstable_by_key(|&v| std::cmp::Reverse(d.top(v)));
        lower.sort_unstable_by_key(|&v| std::cmp::Reverse(d.bottom(v)));
        let upper_tops = upper.iter().map(|&v| d.top(v)).collect();
        let lower_bottoms = lower.iter().map(|&v| d.bottom(v)).collect();
        let both = !upper.is_empty() && !lower.is_empty();
        let mut chain = upper;
        chain.extend(lower);
        let steps = if both {
            vec![0, chain.len()]
        } else {
            (0..=chain.len()).collect()
        };
        Cut {
            region,
            right,
            chain,
            steps,
            both,
            upper_tops,
            lower_bottoms,
        }
    }

    pub fn is_right(&self, v: usize) -> bool {
        self.right[v]
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// Probe matching the set of separator vertices that have an infected
    /// right neighbour, given the smallest top and bottom among infected
    /// right vertices.
    fn probe_for(&self, min_top: usize, min_bottom: usize) -> usize {
        let upper = self.upper_tops.iter().take_while(|&&t| t > min_top).count();
        let lower = self.lower_bottoms.iter().take_while(|&&b| b > min_bottom).count();
        if self.both {
            usize::from(upper + lower > 0)
        } else {
            upper + lower
        }
    }
}

/// What the right side sees after one probe.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProbeOutcome {
    /// The two largest tops of infected upper vertices, 0 when absent.
    pub upper: [usize; 2],
    /// The two largest bottoms of infected lower vertices, 0 when absent.
    pub lower: [usize; 2],
    /// Whether the target vertex is infected.
    pub hit: bool,
}

impl ProbeOutcome {
    fn absorb(&mut self, position: usize, upper: bool) {
        let slot = if upper { &mut self.upper } else { &mut self.lower };
        if position > slot[0] {
            slot[1] = slot[0];
            slot[0] = position;
        } else if position > slot[1] {
            slot[1] = position;
        }
    }

    /// Infected separator neighbours of a right vertex, capped at two.
    fn pressure(&self, top: usize, bottom: usize) -> u32 {
        let up = self.upper.iter().filter(|&&t| t > top).count();
        let down = self.lower.iter().filter(|&&b| b > bottom).count();
        (up + down) as u32
    }
}

/// Outcomes of the successive probes of a [`Cut`], run-length encoded by
/// probe index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reaction(Vec<(usize, ProbeOutcome)>);

impl Reaction {
    pub fn at(&self, probe: usize) -> ProbeOutcome {
        let i = self.0.partition_point(|&(start, _)| start <= probe);
        self.0[i - 1].1
    }

    /// First probe that infects the target.
    pub fn first_hit(&self) -> Option<usize> {
        self.0.iter().find(|(_, o)| o.hit).map(|&(i, _)| i)
    }

    /// Whether some arrival from the right infects the target.
    pub fn exposed(&self) -> bool {
        self.0.last().is_some_and(|(_, o)| o.hit)
    }
}

/// Runs every probe of `cut` on the closed set `base`.
pub(crate) fn react(d: &PermutationDiagram, cut: &Cut, base: &Closure<'_>, target: Option<usize>) -> Reaction {
    debug_assert!(base.is_closed());
    let mut c = base.clone();
    let mut outcome = ProbeOutcome::default();
    let mut seen = 0;
    let mut forced = 0;
    let mut runs: Vec<(usize, ProbeOutcome)> = Vec::with_capacity(4);
    for (i, &len) in cut.steps.iter().enumerate() {
        for &w in &cut.chain[forced..len] {
            c.insert(w);
        }
        forced = len;
        c.close_frozen(&cut.right);
        for &v in &c.members()[seen..] {
            match cut.region[v] {
                Region::Upper => outcome.absorb(d.top(v), true),
                Region::Lower => outcome.absorb(d.bottom(v), false),
                _ => {}
            }
        }
        seen = c.len();
        outcome.hit = target.is_some_and(|t| c.contains(t));
        if runs.last().is_none_or(|&(_, o)| o != outcome) {
            runs.push((i, outcome));
        }
    }
    Reaction(runs)
}

/// Whether adding `extension` (right vertices only) infects the target of
/// `reaction`, alternating right-side closures with probe lookups until the
/// probe index is stable.
pub(crate) fn infects(d: &PermutationDiagram, g: &Graph, cut: &Cut, reaction: &Reaction, extension: &[usize]) -> bool {
    if !reaction.exposed() {
        return false;
    }
    let n = d.n();
    let mut probe = 0;
    loop {
        let outcome = reaction.at(probe);
        let mut inside = vec![false; n];
        let mut count = vec![0u32; n];
        let mut stack: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| cut.right[v]) {
            count[v] = outcome.pressure(d.top(v), d.bottom(v));
            if count[v] >= 2 || extension.contains(&v) {
                inside[v] = true;
                stack.push(v);
            }
        }
        let (mut min_top, mut min_bottom) = (usize::MAX, usize::MAX);
        while let Some(v) = stack.pop() {
            min_top = min_top.min(d.top(v));
            min_bottom = min_bottom.min(d.bottom(v));
            for &w in g.neighbors(v) {
                if cut.right[w] && !inside[w] {
                    count[w] += 1;
                    if count[w] >= 2 {
                        inside[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        let next = cut.probe_for(min_top, min_bottom).max(probe);
        if next == probe {
            return outcome.hit;
        }
        probe = next;
    }
}
