//! Degree profiles of the bipartite graph `B` obtained from a threshold
//! graph by deleting the edges of a maximal clique `J`.
//!
//! The co-clique side `I` has `r = T - 1` vertices and the clique side
//! `J = V ∪ {x}` has `s = S + 1` vertices, where `x` is the lowest-id vertex
//! of `U_1`. When `t_1 = 1` the cell `U_1` is exactly `{x}`, so the same
//! choice covers both shapes of the sequence.

use serde::Serialize;

use super::{Graph, GraphError, Side};
use crate::sequence::GeneratingSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// Non-decreasing degrees of the co-clique side `I`.
    pub d: Vec<u64>,
    /// Non-decreasing degrees of the clique side `J`.
    pub e: Vec<u64>,
    pub r: u64,
    pub s: u64,
    #[serde(rename = "T")]
    pub total_zeros: u64,
    #[serde(rename = "S")]
    pub total_ones: u64,
    pub t1_is_one: bool,
}

/// Closed-form profile read off the runs.
///
/// `d` lists `Σ_{i≥j} s_i` with multiplicity `t_j` for `j = h, …, 2` and
/// multiplicity `t_1 - 1` for `j = 1`. `e` is a single `0` for `x` followed
/// by `Σ_{i≤j} t_i - 1` with multiplicity `s_j`. With `t_1 = 1` the first
/// `s_1` of those are zero too.
///
/// Allocates `n` entries in total.
pub fn degree_profile(seq: &GeneratingSequence) -> DegreeProfile {
    let runs = seq.runs();
    let r = seq.total_zeros() - 1;
    let s = seq.total_ones() + 1;

    let mut d = Vec::with_capacity(r as usize);
    let mut suffix_ones = 0u64;
    for (index, run) in runs.iter().enumerate().rev() {
        suffix_ones += run.ones;
        let multiplicity = if index == 0 { run.zeros - 1 } else { run.zeros };
        d.extend(std::iter::repeat(suffix_ones).take(multiplicity as usize));
    }

    let mut e = Vec::with_capacity(s as usize);
    e.push(0);
    let mut prefix_zeros = 0u64;
    for run in runs {
        prefix_zeros += run.zeros;
        e.extend(std::iter::repeat(prefix_zeros - 1).take(run.ones as usize));
    }

    DegreeProfile {
        d,
        e,
        r,
        s,
        total_zeros: seq.total_zeros(),
        total_ones: seq.total_ones(),
        t1_is_one: seq.first().zeros == 1,
    }
}

/// Profile obtained by literally building `J`, deleting the edges inside it
/// and counting degrees. Works on threshold and chain graphs alike since the
/// edges inside `V` are deleted either way.
pub fn counted_degree_profile(g: &Graph) -> Result<DegreeProfile, GraphError> {
    let n = g.vertex_count();
    let v_side: Vec<usize> = (0..n).filter(|&v| g.side(v) == Side::V).collect();
    let u_side: Vec<usize> = (0..n).filter(|&v| g.side(v) == Side::U).collect();
    let v_neighbours = |u: usize| g.neighbors(u).iter().filter(|&&w| g.side(w) == Side::V).count();

    let top_cell: Vec<usize> = u_side
        .iter()
        .copied()
        .filter(|&u| v_neighbours(u) == v_side.len())
        .collect();
    let &x = top_cell.first().ok_or(GraphError::NotNested(g.kind()))?;

    let mut in_clique = vec![false; n];
    for &v in &v_side {
        in_clique[v] = true;
    }
    in_clique[x] = true;

    let cross_degree =
        |v: usize| g.neighbors(v).iter().filter(|&&w| in_clique[w] != in_clique[v]).count() as u64;

    let mut d: Vec<u64> = (0..n).filter(|&v| !in_clique[v]).map(cross_degree).collect();
    let mut e: Vec<u64> = (0..n).filter(|&v| in_clique[v]).map(cross_degree).collect();
    d.sort_unstable();
    e.sort_unstable();

    Ok(DegreeProfile {
        r: d.len() as u64,
        s: e.len() as u64,
        d,
        e,
        total_zeros: u_side.len() as u64,
        total_ones: v_side.len() as u64,
        t1_is_one: top_cell.len() == 1,
    })
}

/// Sorted degrees of the two colour classes of a chain graph: `d` for `U`,
/// `e` for `V`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDegrees {
    pub d: Vec<u64>,
    pub e: Vec<u64>,
}

impl ClassDegrees {
    /// Closed form: a vertex of `U_i` has degree `Σ_{j≥i} s_j` and a vertex
    /// of `V_i` has degree `Σ_{j≤i} t_j`.
    pub fn from_sequence(seq: &GeneratingSequence) -> Self {
        let runs = seq.runs();
        let mut d = Vec::with_capacity(seq.total_zeros() as usize);
        let mut suffix = 0u64;
        for run in runs.iter().rev() {
            suffix += run.ones;
            d.extend(std::iter::repeat(suffix).take(run.zeros as usize));
        }
        let mut e = Vec::with_capacity(seq.total_ones() as usize);
        let mut prefix = 0u64;
        for run in runs {
            prefix += run.zeros;
            e.extend(std::iter::repeat(prefix).take(run.ones as usize));
        }
        ClassDegrees { d, e }
    }

    /// Counts only `U`-`V` edges, so a threshold graph yields the degrees of
    /// its chain graph.
    pub fn count(g: &Graph) -> Self {
        let cross = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| g.side(w) != g.side(v))
                .count() as u64
        };
        let n = g.vertex_count();
        let mut d: Vec<u64> = (0..n).filter(|&v| g.side(v) == Side::U).map(cross).collect();
        let mut e: Vec<u64> = (0..n).filter(|&v| g.side(v) == Side::V).map(cross).collect();
        d.sort_unstable();
        e.sort_unstable();
        ClassDegrees { d, e }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{materialize, GraphKind};

    fn seq(pairs: &[(u64, u64)]) -> GeneratingSequence {
        GeneratingSequence::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn profile_of_two_level_sequence() {
        let s = seq(&[(2, 2), (2, 3)]);
        let p = degree_profile(&s);
        assert_eq!(p.d, vec![3, 3, 5]);
        assert_eq!(p.e, vec![0, 1, 1, 3, 3, 3]);
        assert_eq!((p.r, p.s), (3, 6));
        assert!(!p.t1_is_one);
        let counted = counted_degree_profile(&materialize(&s, GraphKind::Threshold)).unwrap();
        assert_eq!(counted, p);
    }

    #[test]
    fn complete_graph_profile() {
        let p = degree_profile(&seq(&[(1, 4)]));
        assert!(p.d.is_empty());
        assert_eq!(p.e, vec![0; 5]);
        assert_eq!(p.r, 0);
        assert!(p.t1_is_one);
    }

    #[test]
    fn t1_one_branch_has_leading_zero_block() {
        let s = seq(&[(1, 2), (3, 1), (2, 2)]);
        let p = degree_profile(&s);
        // x and V_1 have no neighbours outside J
        assert_eq!(&p.e[..3], &[0, 0, 0]);
        assert_eq!(&p.e[3..], &[3, 5, 5]);
        assert_eq!(p.d, vec![2, 2, 3, 3, 3]);
        let counted = counted_degree_profile(&materialize(&s, GraphKind::Chain)).unwrap();
        assert_eq!(counted, p);
    }

    #[test]
    fn clique_and_coclique_sizes() {
        let p = degree_profile(&seq(&[(3, 4), (10, 6), (5, 11), (3, 8)]));
        assert_eq!((p.r, p.s), (20, 30));
        assert_eq!(p.d.len(), 20);
        assert_eq!(p.e.len(), 30);
        assert!(p.d.windows(2).all(|w| w[0] <= w[1]));
        assert!(p.e.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn class_degrees_of_small_chains() {
        let c4 = ClassDegrees::from_sequence(&seq(&[(2, 2)]));
        assert_eq!(c4, ClassDegrees { d: vec![2, 2], e: vec![2, 2] });
        let p4 = seq(&[(1, 1), (1, 1)]);
        assert_eq!(
            ClassDegrees::from_sequence(&p4),
            ClassDegrees { d: vec![1, 2], e: vec![1, 2] }
        );
        let s = seq(&[(3, 4), (10, 6), (5, 3), (3, 8)]);
        assert_eq!(
            ClassDegrees::from_sequence(&s),
            ClassDegrees::count(&materialize(&s, GraphKind::Threshold))
        );
    }
}
