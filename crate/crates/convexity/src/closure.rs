use p3c_graph::Graph;

/// Incremental P3 closure: a set plus, for every vertex, how many of its
/// neighbours have been propagated into the set.
///
/// Vertices are propagated in insertion order, so the closure can be stopped
/// early and resumed, or cloned and extended with further seeds.
#[derive(Clone, Debug)]
pub struct Closure<'g> {
    g: &'g Graph,
    inside: Vec<bool>,
    count: Vec<u32>,
    members: Vec<usize>,
    cursor: usize,
}

impl<'g> Closure<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Closure {
            g,
            inside: vec![false; n],
            count: vec![0; n],
            members: Vec::new(),
            cursor: 0,
        }
    }

    /// The hull of `seeds`.
    pub fn of(g: &'g Graph, seeds: &[usize]) -> Self {
        let mut c = Closure::new(g);
        for &s in seeds {
            c.insert(s);
        }
        c.close();
        c
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Adds `v` without propagating it. Returns false if already present.
    pub fn insert(&mut self, v: usize) -> bool {
        if self.inside[v] {
            return false;
        }
        self.inside[v] = true;
        self.members.push(v);
        true
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.inside[v]
    }

    /// Neighbours of `v` already propagated. After [`Closure::close`] this is
    /// the number of neighbours of `v` in the set.
    #[inline]
    pub fn count(&self, v: usize) -> u32 {
        self.count[v]
    }

    /// Members in the order they entered.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.cursor == self.members.len()
    }

    pub fn membership(&self) -> &[bool] {
        &self.inside
    }

    /// Propagates to the fixed point.
    pub fn close(&mut self) {
        self.run(None, None);
    }

    /// Propagates until `target` enters or the fixed point is reached.
    /// Returns whether `target` is in the set.
    pub fn close_until(&mut self, target: usize) -> bool {
        self.run(Some(target), None)
    }

    /// Propagates to the fixed point, never adding a vertex marked in
    /// `frozen`. Counts of frozen vertices are still maintained.
    pub fn close_frozen(&mut self, frozen: &[bool]) {
        self.run(None, Some(frozen));
    }

    fn run(&mut self, target: Option<usize>, frozen: Option<&[bool]>) -> bool {
        if let Some(t) = target {
            if self.inside[t] {
                return true;
            }
        }
        while self.cursor < self.members.len() {
            let v = self.members[self.cursor];
            self.cursor += 1;
            for &w in self.g.neighbors(v) {
                self.count[w] += 1;
                if self.count[w] >= 2 && !self.inside[w] && !frozen.is_some_and(|f| f[w]) {
                    self.inside[w] = true;
                    self.members.push(w);
                    if target == Some(w) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use p3c_graph::{gen_cycle, gen_path};

    #[test]
    fn closes_path_between_seeds() {
        let p = gen_path(5).unwrap();
        let c = Closure::of(&p, &[0, 2]);
        assert_eq!(c.members(), &[0, 2, 1]);
        assert_eq!(c.count(3), 1);
        let c = Closure::of(&p, &[0, 4]);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn early_stop_resumes() {
        let c6 = gen_cycle(6).unwrap();
        let mut c = Closure::new(&c6);
        c.insert(0);
        c.insert(2);
        assert!(c.close_until(1));
        c.close();
        assert_eq!(c.len(), 3);
        assert!(c.is_closed());
    }

    #[test]
    fn frozen_vertices_stay_out() {
        let p = gen_path(5).unwrap();
        let mut c = Closure::new(&p);
        for s in [0, 2, 4] {
            c.insert(s);
        }
        let mut frozen = vec![false; 5];
        frozen[3] = true;
        c.close_frozen(&frozen);
        assert!(c.contains(1) && !c.contains(3));
        assert_eq!(c.count(3), 2);
    }
}
