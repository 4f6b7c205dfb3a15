use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{materialize, Graph, GraphKind, Side};
use crate::sequence::GeneratingSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Edgelist,
    Json,
}

impl FromStr for ExportFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "edgelist" => Ok(ExportFormat::Edgelist),
            "json" => Ok(ExportFormat::Json),
            other => Err(ExportError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph document has no runs; cannot rebuild vertex sides")]
    MissingRuns,
    #[error("edge list does not match the runs of the document")]
    Inconsistent,
}

/// JSON form of a graph. `runs` is present only when the vertex labels are
/// exactly those produced by materializing the runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub kind: GraphKind,
    pub runs: Option<GeneratingSequence>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            n: g.vertex_count(),
            kind: g.kind(),
            runs: g.sequence().cloned(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Rebuilds the graph from its runs, checking the stored edge list.
    pub fn to_graph(&self) -> Result<Graph, ExportError> {
        let runs = self.runs.as_ref().ok_or(ExportError::MissingRuns)?;
        let g = materialize(runs, self.kind);
        let same = g.vertex_count() == self.n
            && g.edge_count() == self.edges.len()
            && self.edges.iter().all(|&[u, v]| g.has_edge(u, v));
        if same {
            Ok(g)
        } else {
            Err(ExportError::Inconsistent)
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<GraphDocument, ExportError> {
    Ok(serde_json::from_str(text)?)
}

/// Deterministic serialization of `g`.
pub fn export(g: &Graph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Edgelist => g.edges().map(|(u, v)| format!("{u} {v}\n")).collect(),
        ExportFormat::Json => serde_json::to_string(&GraphDocument::from_graph(g))
            .expect("graph documents always serialize"),
    }
}

fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    match g.sequence() {
        Some(seq) => writeln!(out, "  // {} {}", g.kind(), seq).unwrap(),
        None => writeln!(out, "  // {}", g.kind()).unwrap(),
    }
    match g.levels() {
        Some(levels) => {
            for (i, level) in levels.iter().enumerate() {
                for (name, cell) in [("u", &level.zeros), ("v", &level.ones)] {
                    let ids: Vec<String> = cell.clone().map(|v| v.to_string()).collect();
                    writeln!(
                        out,
                        "  subgraph {name}{} {{ rank=same; {}; }}",
                        i + 1,
                        ids.join("; ")
                    )
                    .unwrap();
                }
            }
        }
        None => {
            for v in 0..g.vertex_count() {
                let shape = match g.side(v) {
                    Side::U => "circle",
                    Side::V => "box",
                };
                writeln!(out, "  {v} [shape={shape}];").unwrap();
            }
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(pairs: &[(u64, u64)]) -> GeneratingSequence {
        GeneratingSequence::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn four_cycle_edgelist() {
        let g = materialize(&seq(&[(2, 2)]), GraphKind::Chain);
        let text = export(&g, ExportFormat::Edgelist);
        assert_eq!(text, "0 2\n0 3\n1 2\n1 3\n");
        assert_eq!(text.lines().count(), 4);
    }

    #[test]
    fn dot_groups_cells() {
        let g = materialize(&seq(&[(2, 2), (2, 3)]), GraphKind::Threshold);
        let dot = export(&g, ExportFormat::Dot);
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains("subgraph u1 { rank=same; 0; 1; }"));
        assert!(dot.contains("subgraph v2 { rank=same; 6; 7; 8; }"));
        let mut nodes: Vec<usize> = dot
            .lines()
            .filter(|l| l.contains("rank=same"))
            .flat_map(|l| {
                let body = &l[l.find("rank=same;").unwrap() + 10..l.rfind('}').unwrap()];
                body.split(';')
                    .filter_map(|t| t.trim().parse::<usize>().ok())
                    .collect::<Vec<_>>()
            })
            .collect();
        nodes.sort_unstable();
        assert_eq!(nodes, (0..9).collect::<Vec<_>>());
        assert_eq!(dot.matches(" -- ").count(), g.edge_count());
    }

    #[test]
    fn json_roundtrip_preserves_edges() {
        let g = materialize(&seq(&[(3, 1), (1, 2)]), GraphKind::Threshold);
        let text = export(&g, ExportFormat::Json);
        let doc = parse_graph_json(&text).unwrap();
        assert_eq!(doc.n, 7);
        assert_eq!(doc.kind, GraphKind::Threshold);
        assert_eq!(doc.runs.as_ref().unwrap().pairs(), vec![(3, 1), (1, 2)]);
        let back = doc.to_graph().unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn edited_graphs_export_without_runs() {
        let g = materialize(&seq(&[(2, 2)]), GraphKind::Chain)
            .without_edge(0, 2)
            .unwrap();
        let doc = parse_graph_json(&export(&g, ExportFormat::Json)).unwrap();
        assert_eq!(doc.runs, None);
        assert_eq!(doc.edges, vec![[0, 3], [1, 2], [1, 3]]);
        assert!(matches!(doc.to_graph(), Err(ExportError::MissingRuns)));
        assert!(export(&g, ExportFormat::Dot).contains("  0 [shape=circle];"));
    }

    #[test]
    fn unknown_format() {
        assert!(matches!(
            "png".parse::<ExportFormat>(),
            Err(ExportError::UnknownFormat(_))
        ));
    }
}
