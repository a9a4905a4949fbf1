//! Left-to-right dynamic program over the components of a convexly
//! independent set.
//!
//! Every state keeps one representative set. Transitions append a component
//! lying right of the last one. Whether the union stays convexly independent
//! is decided either from the stored interface ([`CheckMode::State`]) or by
//! recomputing hulls of the representative ([`CheckMode::Witness`]).

use crate::interface::{infects, react, Cut, Reaction};
use crate::{
    compute_border, enumerate_components, is_right_of, membership_by_border, Border, DiagramComponent,
    PermutationError, WitnessTriple,
};
use p3c_convexity::{first_violator, Closure, VertexSet};
use p3c_graph::{Graph, PermutationDiagram};
use p3c_oracle::{beta_c_oracle, OracleConfig, DEFAULT_ORACLE_MAX};
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

/// How a transition is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// From the stored interface of the state, plus direct hull checks for
    /// members of the last and the new component.
    State,
    /// Directly on the representative with the new component added.
    Witness,
    /// Both checks on every transition, failing on disagreement, and the
    /// final value compared with the exhaustive oracle.
    OracleCheck,
}

/// What identifies two states as interchangeable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyPolicy {
    /// Last component, border, witness triple and the full interface.
    Exact,
    /// Last component, border and witness triple only. Loses optima, e.g.
    /// on diagram `4 2 7 1 3 5 6`.
    BorderAndWitnesses,
}

#[derive(Clone, Debug)]
pub struct DpConfig {
    pub mode: CheckMode,
    pub policy: KeyPolicy,
    /// Largest `n` accepted in [`CheckMode::OracleCheck`].
    pub oracle_max: usize,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig {
            mode: CheckMode::State,
            policy: KeyPolicy::Exact,
            oracle_max: DEFAULT_ORACLE_MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSolution {
    pub value: usize,
    pub witness: VertexSet,
    /// Distinct states created.
    pub states: usize,
    /// Transitions that passed the neighbourhood filter.
    pub attempts: u64,
    /// Transitions that produced a state.
    pub extensions: u64,
}

#[derive(Clone, Debug)]
pub struct DpState {
    pub last: DiagramComponent,
    pub border: Border,
    pub witnesses: WitnessTriple,
    pub best_size: usize,
    pub representative: VertexSet,
    hull: VertexSet,
    hull_reaction: Reaction,
    /// Members the right side can still pull into the hull of the others,
    /// with their reactions.
    exposed: Vec<(usize, Reaction)>,
}

impl DpState {
    pub fn hull(&self) -> &VertexSet {
        &self.hull
    }

    fn key(&self, policy: KeyPolicy) -> StateKey {
        match policy {
            KeyPolicy::BorderAndWitnesses => StateKey::BorderAndWitnesses(self.border, self.witnesses),
            KeyPolicy::Exact => {
                let (inner, outer): (Vec<_>, Vec<_>) = self.exposed.iter().partition(|(u, _)| self.last.contains(*u));
                StateKey::Exact {
                    border: self.border,
                    witnesses: self.witnesses,
                    hull: self.hull_reaction.clone(),
                    others: outer.into_iter().map(|(_, r)| r.clone()).collect(),
                    last: inner.into_iter().cloned().collect(),
                }
            }
        }
    }

    fn beats(&self, other: &DpState) -> bool {
        self.best_size > other.best_size
            || (self.best_size == other.best_size && self.representative < other.representative)
    }
}

/// Memo key within one last component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum StateKey {
    BorderAndWitnesses(Border, WitnessTriple),
    Exact {
        border: Border,
        witnesses: WitnessTriple,
        hull: Reaction,
        others: BTreeSet<Reaction>,
        last: Vec<(usize, Reaction)>,
    },
}

/// A diagram with its graph, components and cut cache.
pub struct PermutationDp<'d> {
    d: &'d PermutationDiagram,
    g: Graph,
    components: Vec<DiagramComponent>,
    singles: Vec<usize>,
    pairs: HashMap<(usize, usize), usize>,
    cuts: RefCell<HashMap<(usize, usize), Rc<Cut>>>,
}

impl<'d> PermutationDp<'d> {
    pub fn new(d: &'d PermutationDiagram) -> Self {
        let components = enumerate_components(d);
        let mut singles = vec![0; d.n()];
        let mut pairs = HashMap::new();
        for (i, c) in components.iter().enumerate() {
            match *c.vertices() {
                [v] => singles[v] = i,
                [a, b] => {
                    pairs.insert((a, b), i);
                }
                _ => unreachable!("components have one or two vertices"),
            }
        }
        PermutationDp {
            d,
            g: d.to_graph(),
            components,
            singles,
            pairs,
            cuts: RefCell::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn components(&self) -> &[DiagramComponent] {
        &self.components
    }

    fn cut(&self, last: &DiagramComponent) -> Rc<Cut> {
        let key = (last.max_top, last.max_bottom);
        self.cuts
            .borrow_mut()
            .entry(key)
            .or_insert_with(|| Rc::new(Cut::new(self.d, key.0, key.1)))
            .clone()
    }

    /// State of an arbitrary convexly independent set.
    pub fn state_of(&self, s: &VertexSet) -> Result<DpState, PermutationError> {
        if s.is_empty() || s.iter().any(|v| v >= self.d.n()) || first_violator(&self.g, s.as_slice()).is_some() {
            return Err(PermutationError::NotIndependent(s.as_slice().to_vec()));
        }
        let pieces = p3c_graph::components(&self.g.induced(s.as_slice()));
        let mut last: Option<DiagramComponent> = None;
        for piece in pieces {
            let vs: Vec<usize> = piece.iter().map(|&i| s.as_slice()[i]).collect();
            let c = DiagramComponent::new(self.d, &vs)?;
            if last.as_ref().is_none_or(|l| c.order_key() > l.order_key()) {
                last = Some(c);
            }
        }
        Ok(self.build_state(s.as_slice().to_vec(), last.expect("nonempty set")))
    }

    fn build_state(&self, rep: Vec<usize>, last: DiagramComponent) -> DpState {
        let cut = self.cut(&last);
        let hull = Closure::of(&self.g, &rep);
        let border = compute_border(self.d, hull.members()).expect("hull of a nonempty set");
        let hull_reaction = react(self.d, &cut, &hull, None);
        let mut exposed = Vec::new();
        for &u in &rep {
            let rest: Vec<usize> = rep.iter().copied().filter(|&w| w != u).collect();
            let r = react(self.d, &cut, &Closure::of(&self.g, &rest), Some(u));
            if r.exposed() {
                exposed.push((u, r));
            }
        }
        let witnesses =
            WitnessTriple::from_reactions(&cut, exposed.iter().filter(|(u, _)| !last.contains(*u)).map(|(_, r)| r));
        DpState {
            border,
            witnesses,
            best_size: rep.len(),
            representative: VertexSet::from_vec(rep),
            hull: VertexSet::from_vec(hull.members().to_vec()),
            hull_reaction,
            exposed,
            last,
        }
    }

    /// Hull neighbour counts and membership of the hull of `state`.
    fn hull_profile(&self, state: &DpState) -> (Vec<bool>, Vec<u32>) {
        let n = self.d.n();
        let mut inside = vec![false; n];
        let mut count = vec![0u32; n];
        for h in state.hull.iter() {
            inside[h] = true;
            for &w in self.g.neighbors(h) {
                count[w] += 1;
            }
        }
        (inside, count)
    }

    /// A new component must lie outside the hull. A lone vertex may have one
    /// hull neighbour; a crossing pair none, since that neighbour and the
    /// partner would pull either member in.
    fn admissible(&self, state: &DpState, x: &[usize], inside: &[bool], count: &[u32]) -> bool {
        let limit = if x.len() == 1 { 1 } else { 0 };
        x.iter().all(|&v| {
            let by_border = membership_by_border(self.d, v, &state.last, state.border)
                .expect("candidate lies right of the last component");
            debug_assert_eq!(by_border, inside[v], "border membership of {v}");
            !by_border && count[v] <= limit
        })
    }

    /// Whether `x` can follow `state`: it lies right of the last component,
    /// passes the hull-neighbour filter, and none of its members falls into
    /// the hull of the rest of the extended representative.
    pub fn feasible_new_component(&self, state: &DpState, x: &DiagramComponent) -> bool {
        if !is_right_of(x, &state.last) {
            return false;
        }
        let (inside, count) = self.hull_profile(state);
        self.admissible(state, x.vertices(), &inside, &count)
            && x.vertices()
                .iter()
                .all(|&f| !self.falls_in(&state.representative.union(&vs(x)), f))
    }

    fn falls_in(&self, set: &VertexSet, u: usize) -> bool {
        let mut c = Closure::new(&self.g);
        for w in set.iter().filter(|&w| w != u) {
            c.insert(w);
        }
        c.close_until(u)
    }

    fn state_check(&self, state: &DpState, x: &DiagramComponent, extended: &VertexSet) -> bool {
        if x.vertices()
            .iter()
            .chain(state.last.vertices())
            .any(|&u| self.falls_in(extended, u))
        {
            return false;
        }
        let cut = self.cut(&state.last);
        !state
            .exposed
            .iter()
            .filter(|(u, _)| !state.last.contains(*u))
            .any(|(_, r)| infects(self.d, &self.g, &cut, r, x.vertices()))
    }

    /// Appends `x` to `state`, or `None` when the result is not convexly
    /// independent.
    pub fn extend_state(
        &self,
        state: &DpState,
        x: &DiagramComponent,
        mode: CheckMode,
    ) -> Result<Option<DpState>, PermutationError> {
        if !is_right_of(x, &state.last) {
            return Ok(None);
        }
        let (inside, count) = self.hull_profile(state);
        if !self.admissible(state, x.vertices(), &inside, &count) {
            return Ok(None);
        }
        self.extend_admissible(state, x, mode)
    }

    fn extend_admissible(
        &self,
        state: &DpState,
        x: &DiagramComponent,
        mode: CheckMode,
    ) -> Result<Option<DpState>, PermutationError> {
        let extended = state.representative.union(&vs(x));
        let by_state = (mode != CheckMode::Witness).then(|| self.state_check(state, x, &extended));
        let by_witness = (mode != CheckMode::State).then(|| first_violator(&self.g, extended.as_slice()).is_none());
        let ok = match (by_state, by_witness) {
            (Some(a), Some(b)) if a != b => {
                return Err(PermutationError::ModeDisagreement {
                    representative: state.representative.as_slice().to_vec(),
                    component: x.vertices().to_vec(),
                    state: a,
                    witness: b,
                })
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => unreachable!("at least one check runs"),
        };
        Ok(ok.then(|| self.build_state(extended.into_vec(), x.clone())))
    }

    /// Later components that pass the hull-neighbour filter, by index.
    fn candidates(&self, state: &DpState) -> Vec<usize> {
        let (inside, count) = self.hull_profile(state);
        let cut = self.cut(&state.last);
        let n = self.d.n();
        let open = |v: usize| cut.is_right(v) && !inside[v];
        let mut out = Vec::new();
        for v in (0..n).filter(|&v| open(v)) {
            if self.admissible(state, &[v], &inside, &count) {
                out.push(self.singles[v]);
            }
            if count[v] == 0 {
                for &w in self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| w > v && open(w) && count[w] == 0)
                {
                    out.push(self.pairs[&(v, w)]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn solve(&self, cfg: &DpConfig) -> Result<PermutationSolution, PermutationError> {
        let n = self.d.n();
        if cfg.mode == CheckMode::OracleCheck && n > cfg.oracle_max {
            return Err(PermutationError::TooLargeForOracle { n, max: cfg.oracle_max });
        }
        let m = self.components.len();
        let mut slots: Vec<Vec<DpState>> = vec![Vec::new(); m];
        let mut keys: Vec<HashMap<StateKey, usize>> = vec![HashMap::new(); m];
        let mut states = 0;
        let mut insert = |slots: &mut Vec<Vec<DpState>>, j: usize, st: DpState| {
            let key = st.key(cfg.policy);
            match keys[j].get(&key) {
                Some(&k) => {
                    if st.beats(&slots[j][k]) {
                        slots[j][k] = st;
                    }
                }
                None => {
                    keys[j].insert(key, slots[j].len());
                    slots[j].push(st);
                    states += 1;
                }
            }
        };
        for (i, c) in self.components.iter().enumerate() {
            let st = self.build_state(c.vertices().to_vec(), c.clone());
            insert(&mut slots, i, st);
        }

        let mut best: Option<DpState> = None;
        let (mut attempts, mut extensions) = (0u64, 0u64);
        for i in 0..m {
            let here = std::mem::take(&mut slots[i]);
            for st in here {
                for j in self.candidates(&st) {
                    attempts += 1;
                    if let Some(next) = self.extend_admissible(&st, &self.components[j], cfg.mode)? {
                        extensions += 1;
                        insert(&mut slots, j, next);
                    }
                }
                if best.as_ref().is_none_or(|b| st.beats(b)) {
                    best = Some(st);
                }
            }
        }

        let (value, witness) = best.map_or((0, VertexSet::new()), |b| (b.best_size, b.representative));
        debug_assert!(first_violator(&self.g, witness.as_slice()).is_none());
        if cfg.mode == CheckMode::OracleCheck {
            let oracle = beta_c_oracle(
                &self.g,
                &OracleConfig {
                    max_vertices: cfg.oracle_max,
                },
                None,
            )?;
            if oracle.value != value {
                return Err(PermutationError::OracleMismatch {
                    dp: value,
                    oracle: oracle.value,
                });
            }
        }
        Ok(PermutationSolution {
            value,
            witness,
            states,
            attempts,
            extensions,
        })
    }
}

fn vs(x: &DiagramComponent) -> VertexSet {
    VertexSet::from_vec(x.vertices().to_vec())
}

pub fn beta_c_permutation(d: &PermutationDiagram, mode: CheckMode) -> Result<PermutationSolution, PermutationError> {
    beta_c_permutation_with(
        d,
        &DpConfig {
            mode,
            ..DpConfig::default()
        },
    )
}

pub fn beta_c_permutation_with(
    d: &PermutationDiagram,
    cfg: &DpConfig,
) -> Result<PermutationSolution, PermutationError> {
    PermutationDp::new(d).solve(cfg)
}
