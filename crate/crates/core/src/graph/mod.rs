//! Materialized threshold and chain graphs.
//!
//! Vertices are numbered in insertion order: the `k`-th symbol of the binary
//! word becomes vertex `k`. Zeros form the side `U` (split into cells
//! `U_1..U_h`), ones form the side `V` (cells `V_1..V_h`). In a chain graph
//! each vertex of `V_i` is adjacent to every vertex of `U_1..U_i`; a
//! threshold graph adds all edges inside `V`.

mod degrees;
mod export;
mod recover;

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sequence::GeneratingSequence;

pub use degrees::{counted_degree_profile, degree_profile, ClassDegrees, DegreeProfile};
pub use export::{export, parse_graph_json, ExportError, ExportFormat, GraphDocument};
pub use recover::recover_sequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("expected {expected} side labels, got {got}")]
    SideCount { expected: usize, got: usize },
    #[error("neighbourhoods are not nested; not a {0} graph")]
    NotNested(GraphKind),
    #[error("graph has an isolated vertex or is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Threshold,
    Chain,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphKind::Threshold => "threshold",
            GraphKind::Chain => "chain",
        })
    }
}

/// Which symbol created a vertex: `U` for a zero, `V` for a one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    V,
}

/// Vertex id ranges of the cells `U_i` and `V_i` of one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub zeros: Range<usize>,
    pub ones: Range<usize>,
}

/// Undirected simple graph with sorted neighbour lists.
///
/// `levels` and `sequence` are only known for graphs produced by
/// [`materialize`]; editing operations drop them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    adjacency: Vec<Vec<usize>>,
    sides: Vec<Side>,
    levels: Option<Vec<Level>>,
    sequence: Option<GeneratingSequence>,
    edge_count: usize,
}

fn to_index(count: u64) -> usize {
    usize::try_from(count).expect("graph order exceeds the address space")
}

/// Builds the threshold or chain graph of `seq` by the iterative rule.
pub fn materialize(seq: &GeneratingSequence, kind: GraphKind) -> Graph {
    let n = to_index(seq.order());
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sides = Vec::with_capacity(n);
    let mut levels = Vec::with_capacity(seq.levels());
    let mut zeros_so_far: Vec<usize> = Vec::with_capacity(to_index(seq.total_zeros()));
    let mut next = 0usize;
    let mut edge_count = 0usize;

    for run in seq.runs() {
        let zeros = next..next + to_index(run.zeros);
        for u in zeros.clone() {
            sides.push(Side::U);
            zeros_so_far.push(u);
        }
        next = zeros.end;
        let ones = next..next + to_index(run.ones);
        for v in ones.clone() {
            sides.push(Side::V);
            // neighbours are pushed in increasing id order, so lists stay sorted
            let earlier: Vec<usize> = match kind {
                GraphKind::Chain => zeros_so_far.clone(),
                GraphKind::Threshold => (0..v).collect(),
            };
            for &w in &earlier {
                adjacency[w].push(v);
            }
            edge_count += earlier.len();
            adjacency[v] = earlier;
        }
        next = ones.end;
        levels.push(Level { zeros, ones });
    }

    Graph {
        kind,
        adjacency,
        sides,
        levels: Some(levels),
        sequence: Some(seq.clone()),
        edge_count,
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges are merged.
    pub fn from_edges<I>(kind: GraphKind, sides: Vec<Side>, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = sides.len();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            kind,
            adjacency,
            sides,
            levels: None,
            sequence: None,
            edge_count,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    /// Cell ranges, when the graph came straight from a sequence.
    pub fn levels(&self) -> Option<&[Level]> {
        self.levels.as_deref()
    }

    /// The generating sequence the vertex labels correspond to, if known.
    pub fn sequence(&self) -> Option<&GeneratingSequence> {
        self.sequence.as_ref()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// A copy with the edge `u v` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge { u, v });
        }
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Graph {
            kind: self.kind,
            adjacency,
            sides: self.sides.clone(),
            levels: None,
            sequence: None,
            edge_count: self.edge_count - 1,
        })
    }

    /// Renames vertex `v` to `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut sides = vec![Side::U; n];
        for v in 0..n {
            sides[perm[v]] = self.sides[v];
            let mut list: Vec<usize> = self.adjacency[v].iter().map(|&w| perm[w]).collect();
            list.sort_unstable();
            adjacency[perm[v]] = list;
        }
        Graph {
            kind: self.kind,
            adjacency,
            sides,
            levels: None,
            sequence: None,
            edge_count: self.edge_count,
        }
    }
}
