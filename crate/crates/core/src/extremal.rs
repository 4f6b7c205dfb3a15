//! Key edges, the sequence rewrites for deleting one, and the chain graphs
//! with the fewest Hamilton cycles.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{materialize, GraphKind};
use crate::hamiltonicity::is_hamiltonian_chain;
use crate::oracle::{count_hamilton_cycles_capped, enumerate_connected, OracleError};
use crate::sequence::{GeneratingSequence, Run};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("level {level} out of range 1..={h}")]
    LevelOutOfRange { level: usize, h: usize },
    #[error("deleting a key edge at level {level} leaves a vertex without neighbours")]
    EdgeDeletionDisconnects { level: usize },
    #[error("no Hamiltonian chain graph has order {n}")]
    NoHamiltonianChainGraph { n: u64 },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// An edge between `u ∈ U_i` and `v ∈ V_i` for the same level `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KeyEdge {
    pub level: usize,
    pub u: usize,
    pub v: usize,
}

/// All `Σ t_i s_i` key edges, by level, then `u`, then `v`. Vertex ids are
/// those of [`materialize`].
pub fn key_edges(seq: &GeneratingSequence) -> Vec<KeyEdge> {
    let mut edges = Vec::new();
    let mut offset = 0usize;
    for (index, run) in seq.runs().iter().enumerate() {
        let zeros = offset..offset + run.zeros as usize;
        let ones = zeros.end..zeros.end + run.ones as usize;
        for u in zeros.clone() {
            for v in ones.clone() {
                edges.push(KeyEdge {
                    level: index + 1,
                    u,
                    v,
                });
            }
        }
        offset = ones.end;
    }
    edges
}

/// Shape of level `i`, which decides how a key-edge deletion rewrites the
/// sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeletionCase {
    /// `t_i > 1`, `s_i > 1`: the level splits in two.
    SplitLevel,
    /// `t_i > 1`, `s_i = 1`: `u` moves up to level `i + 1`.
    ZeroMovesUp,
    /// `t_i = 1`, `s_i > 1`: `v` moves down to level `i - 1`.
    OneMovesDown,
    /// `t_i = s_i = 1`: the level dissolves into its neighbours.
    LevelVanishes,
}

impl DeletionCase {
    pub fn of(run: Run) -> Self {
        match (run.zeros > 1, run.ones > 1) {
            (true, true) => DeletionCase::SplitLevel,
            (true, false) => DeletionCase::ZeroMovesUp,
            (false, true) => DeletionCase::OneMovesDown,
            (false, false) => DeletionCase::LevelVanishes,
        }
    }
}

/// Sequence of the chain graph obtained by deleting one key edge `uv` at
/// `level` (1-based). All key edges of a level give isomorphic results.
///
/// * split: `(0^{t-1} 1)(0 1^{s-1})` replaces the level;
/// * zero moves up: the level becomes `(0^{t-1} 1)` and `t_{i+1}` grows;
/// * one moves down: `s_{i-1}` grows and the level becomes `(0 1^{s-1})`;
/// * level vanishes: `s_{i-1}` and `t_{i+1}` grow by one each.
///
/// When the neighbouring level a vertex must move to does not exist, the
/// deleted edge was the only edge at `u` or `v` and the result is not a
/// connected chain graph.
pub fn delete_key_edge(seq: &GeneratingSequence, level: usize) -> Result<GeneratingSequence, ExtremalError> {
    let h = seq.levels();
    if level == 0 || level > h {
        return Err(ExtremalError::LevelOutOfRange { level, h });
    }
    let i = level - 1;
    let mut runs: Vec<Run> = seq.runs().to_vec();
    let Run { zeros: t, ones: s } = runs[i];
    let has_previous = i > 0;
    let has_next = i + 1 < h;
    let disconnects = ExtremalError::EdgeDeletionDisconnects { level };

    match DeletionCase::of(runs[i]) {
        DeletionCase::SplitLevel => {
            runs.splice(i..=i, [Run::new(t - 1, 1), Run::new(1, s - 1)]);
        }
        DeletionCase::ZeroMovesUp => {
            if !has_next {
                return Err(disconnects);
            }
            runs[i] = Run::new(t - 1, 1);
            runs[i + 1].zeros += 1;
        }
        DeletionCase::OneMovesDown => {
            if !has_previous {
                return Err(disconnects);
            }
            runs[i - 1].ones += 1;
            runs[i] = Run::new(1, s - 1);
        }
        DeletionCase::LevelVanishes => {
            if !has_previous || !has_next {
                return Err(disconnects);
            }
            runs[i - 1].ones += 1;
            runs[i + 1].zeros += 1;
            runs.remove(i);
        }
    }
    Ok(GeneratingSequence::new(runs).expect("rewritten runs stay positive"))
}

/// The Hamiltonian chain graph of order `n` with the fewest Hamilton
/// cycles: `(0^2 1)(0 1)…(0 1)(0 1^2)` with `h = n / 2` vertices per class,
/// or `0^2 1^2` for `n = 4`. It has `2^{h-2}` Hamilton cycles.
pub fn min_cycle_chain_graph(n: u64) -> Result<GeneratingSequence, ExtremalError> {
    if n % 2 != 0 || n < 4 {
        return Err(ExtremalError::NoHamiltonianChainGraph { n });
    }
    let h = n / 2;
    let runs: Vec<Run> = if h == 2 {
        vec![Run::new(2, 2)]
    } else {
        std::iter::once(Run::new(2, 1))
            .chain(std::iter::repeat(Run::new(1, 1)).take((h - 3) as usize))
            .chain(std::iter::once(Run::new(1, 2)))
            .collect()
    };
    Ok(GeneratingSequence::new(runs).expect("positive runs"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub sequence: GeneratingSequence,
    pub n: u64,
    pub hamiltonian: bool,
    pub cycle_count: u64,
}

/// Exact Hamilton-cycle counts of every Hamiltonian chain graph of order
/// `n`, ascending by count (ties keep word order).
///
/// Sequences are filtered with the linear decision first, so the
/// exponential counter only runs on Hamiltonian graphs.
pub fn census(n: usize, cap: usize) -> Result<Vec<CensusRow>, ExtremalError> {
    if n > cap {
        return Err(OracleError::SizeCapExceeded { n, cap }.into());
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let candidates: Vec<GeneratingSequence> = enumerate_connected(n)
        .filter(|seq| is_hamiltonian_chain(seq).hamiltonian)
        .collect();
    let mut rows = candidates
        .into_par_iter()
        .map(|sequence| {
            let g = materialize(&sequence, GraphKind::Chain);
            let count = count_hamilton_cycles_capped(&g, cap)?;
            Ok(CensusRow {
                n: sequence.order(),
                sequence,
                hamiltonian: count.0 > 0,
                cycle_count: count.0,
            })
        })
        .collect::<Result<Vec<_>, ExtremalError>>()?;
    rows.sort_by_key(|row| row.cycle_count);
    Ok(rows)
}

/// Writes census rows as CSV with header
/// `sequence,n,hamiltonian,cycle_count`.
pub fn write_census_csv<W: std::io::Write>(rows: &[CensusRow], out: W) -> Result<(), csv::Error> {
    #[derive(Serialize)]
    struct Record {
        sequence: String,
        n: u64,
        hamiltonian: bool,
        cycle_count: u64,
    }
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(Record {
            sequence: row.sequence.to_string(),
            n: row.n,
            hamiltonian: row.hamiltonian,
            cycle_count: row.cycle_count,
        })?;
    }
    if rows.is_empty() {
        writer.write_record(["sequence", "n", "hamiltonian", "cycle_count"])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::recover_sequence;
    use crate::oracle::count_hamilton_cycles;

    fn seq(pairs: &[(u64, u64)]) -> GeneratingSequence {
        GeneratingSequence::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn key_edge_counts() {
        assert_eq!(key_edges(&seq(&[(2, 2)])).len(), 4);
        assert_eq!(key_edges(&seq(&[(1, 1)])).len(), 1);
        let edges = key_edges(&seq(&[(2, 1), (1, 2)]));
        assert_eq!(edges.len(), 4);
        assert_eq!(
            edges.iter().map(|e| (e.level, e.u, e.v)).collect::<Vec<_>>(),
            vec![(1, 0, 2), (1, 1, 2), (2, 3, 4), (2, 3, 5)]
        );
        let g = materialize(&seq(&[(3, 2), (1, 4)]), GraphKind::Chain);
        assert!(key_edges(&seq(&[(3, 2), (1, 4)]))
            .iter()
            .all(|e| g.has_edge(e.u, e.v)));
    }

    #[test]
    fn deletion_cases() {
        assert_eq!(
            delete_key_edge(&seq(&[(2, 2)]), 1).unwrap().pairs(),
            vec![(1, 1), (1, 1)]
        );
        assert_eq!(
            delete_key_edge(&seq(&[(2, 1), (1, 2)]), 1).unwrap().pairs(),
            vec![(1, 1), (2, 2)]
        );
        assert_eq!(
            delete_key_edge(&seq(&[(2, 1), (1, 1), (1, 2)]), 2).unwrap().pairs(),
            vec![(2, 2), (2, 2)]
        );
        assert_eq!(
            delete_key_edge(&seq(&[(2, 1), (1, 3)]), 2).unwrap().pairs(),
            vec![(2, 2), (1, 2)]
        );
    }

    #[test]
    fn deletion_boundaries() {
        let disconnects = |pairs: &[(u64, u64)], level| {
            matches!(
                delete_key_edge(&seq(pairs), level),
                Err(ExtremalError::EdgeDeletionDisconnects { .. })
            )
        };
        assert!(disconnects(&[(1, 3), (1, 1)], 1));
        assert!(disconnects(&[(1, 1), (2, 2)], 1));
        assert!(disconnects(&[(2, 2), (3, 1)], 2));
        assert!(disconnects(&[(2, 2), (1, 1)], 2));
        assert_eq!(
            delete_key_edge(&seq(&[(2, 2)]), 2),
            Err(ExtremalError::LevelOutOfRange { level: 2, h: 1 })
        );
    }

    #[test]
    fn deletion_matches_literal_edge_removal() {
        let s = seq(&[(1, 2), (1, 1), (3, 1), (2, 2)]);
        for edge in key_edges(&s) {
            let literal = materialize(&s, GraphKind::Chain)
                .without_edge(edge.u, edge.v)
                .unwrap();
            assert_eq!(
                recover_sequence(&literal).ok(),
                delete_key_edge(&s, edge.level).ok(),
                "level {}",
                edge.level
            );
        }
    }

    #[test]
    fn minimum_cycle_graphs() {
        assert_eq!(min_cycle_chain_graph(4).unwrap().pairs(), vec![(2, 2)]);
        let six = min_cycle_chain_graph(6).unwrap();
        assert_eq!(six.pairs(), vec![(2, 1), (1, 2)]);
        assert_eq!(six.to_string(), "0^2 1 0 1^2");
        let ten = min_cycle_chain_graph(10).unwrap();
        assert_eq!(ten.pairs(), vec![(2, 1), (1, 1), (1, 1), (1, 2)]);
        assert_eq!(ten.total_zeros(), ten.total_ones());
        for n in [0, 2, 5, 7] {
            assert_eq!(
                min_cycle_chain_graph(n),
                Err(ExtremalError::NoHamiltonianChainGraph { n })
            );
        }
        let g = materialize(&six, GraphKind::Chain);
        assert_eq!(count_hamilton_cycles(&g).unwrap().0, 2);
    }

    #[test]
    fn small_censuses() {
        let four = census(4, 20).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].sequence.pairs(), vec![(2, 2)]);
        assert_eq!(four[0].cycle_count, 1);

        let six = census(6, 20).unwrap();
        assert_eq!(six[0].sequence.pairs(), vec![(2, 1), (1, 2)]);
        assert_eq!(six[0].cycle_count, 2);
        assert!(six[1..].iter().all(|row| row.cycle_count > 2));
        assert!(census(5, 20).unwrap().is_empty());
        assert!(matches!(
            census(22, 20),
            Err(ExtremalError::Oracle(OracleError::SizeCapExceeded { .. }))
        ));
    }

    #[test]
    fn census_csv_format() {
        let rows = census(6, 20).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("sequence,n,hamiltonian,cycle_count"));
        assert_eq!(lines.next(), Some("0^2 1 0 1^2,6,true,2"));
        assert_eq!(lines.count(), rows.len() - 1);

        let mut empty = Vec::new();
        write_census_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap(), "sequence,n,hamiltonian,cycle_count\n");
    }
}
