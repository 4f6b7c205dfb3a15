//! Brute-force ground truth: Hamilton cycle search, exact cycle counting and
//! exhaustive enumeration of generating sequences.
//!
//! The search is plain backtracking from the lowest vertex id with neighbours
//! expanded in increasing id order. A branch is abandoned as soon as some
//! unvisited vertex is left with fewer than two neighbours that are still
//! usable (unvisited or a path endpoint), or the start vertex loses its last
//! usable neighbour for closing the cycle.
//!
//! Existence queries also skip twins: unvisited vertices with the same
//! neighbourhood are interchangeable in any completion, so only the first
//! of each twin class is tried at every step. Counting explores everything.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::sequence::{GeneratingSequence, Run};

/// Counting refuses graphs above this order unless a larger cap is passed.
pub const DEFAULT_COUNT_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the counting cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// A Hamilton cycle in canonical form: it starts at vertex 0 and, of the two
/// directions, the lexicographically smaller one is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HamiltonCycle(Vec<usize>);

impl HamiltonCycle {
    /// Canonicalizes a cyclic vertex order.
    pub fn from_cycle(mut order: Vec<usize>) -> Self {
        if let Some(pos) = order.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
            order.rotate_left(pos);
        }
        if order.len() > 2 && order[order.len() - 1] < order[1] {
            order[1..].reverse();
        }
        HamiltonCycle(order)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Consecutive pairs, closing edge included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// True when this visits every vertex of `g` once along edges of `g`.
    pub fn is_hamilton_cycle_of(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if n < 3 || self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.0 {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.edges().all(|(a, b)| g.has_edge(a, b))
    }
}

/// Exact number of undirected Hamilton cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleCount(pub u64);

struct Search<'g> {
    g: &'g Graph,
    start: usize,
    visited: Vec<bool>,
    // neighbours that are not interior path vertices
    usable: Vec<usize>,
    path: Vec<usize>,
    // twin class per vertex, when twin pruning is on
    twins: Option<Vec<usize>>,
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    g.degree(a) == g.degree(b) && g.neighbors(a).iter().all(|&x| x == b || g.has_edge(b, x))
}

/// Groups vertices into classes of true or false twins.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let mut class = vec![0; g.vertex_count()];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..g.vertex_count() {
        class[v] = match reps.iter().position(|&r| are_twins(g, r, v)) {
            Some(c) => c,
            None => {
                reps.push(v);
                reps.len() - 1
            }
        };
    }
    class
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, start: usize) -> Self {
        let n = g.vertex_count();
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut path = Vec::with_capacity(n);
        path.push(start);
        Search {
            g,
            start,
            visited,
            usable: (0..n).map(|v| g.degree(v)).collect(),
            path,
            twins: None,
        }
    }

    fn with_twin_pruning(mut self) -> Self {
        self.twins = Some(twin_classes(self.g));
        self
    }

    /// Moves the path end to `next`; returns false (with the move undone)
    /// when the degree prune fires.
    fn advance(&mut self, next: usize) -> bool {
        let cur = *self.path.last().unwrap();
        let interior = cur != self.start;
        if interior {
            for &w in self.g.neighbors(cur) {
                self.usable[w] -= 1;
            }
        }
        self.visited[next] = true;
        self.path.push(next);

        let dead = interior
            && (self.usable[self.start] == 0
                || self
                    .g
                    .neighbors(cur)
                    .iter()
                    .any(|&w| !self.visited[w] && self.usable[w] < 2));
        if dead {
            self.retreat();
            return false;
        }
        true
    }

    fn retreat(&mut self) {
        let next = self.path.pop().unwrap();
        self.visited[next] = false;
        let cur = *self.path.last().unwrap();
        if cur != self.start {
            for &w in self.g.neighbors(cur) {
                self.usable[w] += 1;
            }
        }
    }

    fn run<F>(&mut self, on_cycle: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.g.vertex_count();
        let cur = *self.path.last().unwrap();
        if self.path.len() == n {
            if self.g.has_edge(cur, self.start) {
                return on_cycle(&self.path);
            }
            return ControlFlow::Continue(());
        }
        let mut tried: Vec<usize> = Vec::new();
        for &next in self.g.neighbors(cur) {
            if self.visited[next] {
                continue;
            }
            if let Some(twins) = &self.twins {
                if tried.contains(&twins[next]) {
                    continue;
                }
                tried.push(twins[next]);
            }
            if !self.advance(next) {
                continue;
            }
            let flow = self.run(on_cycle);
            self.retreat();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Returns a Hamilton cycle of `g` if one exists.
pub fn find_hamilton_cycle(g: &Graph) -> Option<HamiltonCycle> {
    if g.vertex_count() < 3 {
        return None;
    }
    let mut found = None;
    let _ = Search::new(g, 0).with_twin_pruning().run(&mut |path: &[usize]| {
        found = Some(HamiltonCycle::from_cycle(path.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Returns a Hamilton cycle of `g` that uses the edge `u v`, if one exists.
pub fn find_hamilton_cycle_through(g: &Graph, u: usize, v: usize) -> Option<HamiltonCycle> {
    if g.vertex_count() < 3 || !g.has_edge(u, v) {
        return None;
    }
    let mut search = Search::new(g, u).with_twin_pruning();
    if !search.advance(v) {
        return None;
    }
    let mut found = None;
    let _ = search.run(&mut |path: &[usize]| {
        found = Some(HamiltonCycle::from_cycle(path.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Counts Hamilton cycles with the default size cap.
pub fn count_hamilton_cycles(g: &Graph) -> Result<CycleCount, OracleError> {
    count_hamilton_cycles_capped(g, DEFAULT_COUNT_CAP)
}

/// Counts Hamilton cycles, refusing graphs with more than `cap` vertices.
///
/// Every cycle is found twice from vertex 0, once per direction; only the
/// traversal whose second vertex is smaller than its last is counted.
pub fn count_hamilton_cycles_capped(g: &Graph, cap: usize) -> Result<CycleCount, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::SizeCapExceeded { n, cap });
    }
    if n < 3 {
        return Ok(CycleCount(0));
    }
    let mut count = 0u64;
    let _ = Search::new(g, 0).run(&mut |path: &[usize]| {
        if path[1] < path[n - 1] {
            count += 1;
        }
        ControlFlow::Continue(())
    });
    Ok(CycleCount(count))
}

/// Every canonical sequence of order `n`, in lexicographic order of the
/// binary word. Words start with `0`; with `connected_only` they also end
/// with `1`, giving `2^{n-2}` sequences.
///
/// Words with trailing zeros are reported through
/// [`EnumeratedWord::isolated`], the connected prefix in
/// [`EnumeratedWord::connected`].
pub fn enumerate_sequences(n: usize, connected_only: bool) -> impl Iterator<Item = EnumeratedWord> {
    assert!((2..64).contains(&n), "enumeration supports 2 <= n < 64");
    let free = if connected_only { n - 2 } else { n - 1 };
    (0u64..1 << free).map(move |mask| {
        let bit = |pos: usize| -> bool {
            // position 0 is the fixed leading zero
            if pos == 0 {
                false
            } else if connected_only && pos == n - 1 {
                true
            } else {
                mask >> (free - pos) & 1 == 1
            }
        };
        word_from_bits((0..n).map(bit))
    })
}

/// Connected sequences of order `n` only.
pub fn enumerate_connected(n: usize) -> impl Iterator<Item = GeneratingSequence> {
    enumerate_sequences(n, true).map(|w| w.connected.expect("connected words end with a one"))
}

/// One enumerated binary word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedWord {
    pub connected: Option<GeneratingSequence>,
    pub isolated: u64,
}

fn word_from_bits(bits: impl Iterator<Item = bool>) -> EnumeratedWord {
    let mut runs = Vec::new();
    let (mut zeros, mut ones) = (0u64, 0u64);
    for bit in bits {
        if bit {
            ones += 1;
        } else {
            if ones > 0 {
                runs.push(Run::new(zeros, ones));
                zeros = 0;
                ones = 0;
            }
            zeros += 1;
        }
    }
    if ones > 0 {
        runs.push(Run::new(zeros, ones));
        zeros = 0;
    }
    EnumeratedWord {
        connected: (!runs.is_empty()).then(|| GeneratingSequence::new(runs).unwrap()),
        isolated: zeros,
    }
}
