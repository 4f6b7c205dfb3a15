use super::{materialize, Graph, GraphError, GraphKind, Side};
use crate::sequence::{GeneratingSequence, Run};

/// Recovers the generating sequence of a threshold or chain graph.
///
/// Vertices are peeled off in reverse construction order: at every step the
/// most recently added vertex is either isolated (a zero) or dominating (a
/// one) among those that remain. Peeling in degree order makes this a
/// sort plus a linear scan; the candidate sequence is then materialized and
/// compared edge-by-edge with `g`, so a successful return certifies that
/// `g` is isomorphic to the materialization (preserving sides for chain
/// graphs).
pub fn recover_sequence(g: &Graph) -> Result<GeneratingSequence, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Disconnected);
    }
    let peeled = match g.kind() {
        GraphKind::Threshold => peel_threshold(g)?,
        GraphKind::Chain => peel_chain(g)?,
    };

    // construction order is the reverse of the peeling order
    let order: Vec<(usize, bool)> = peeled.into_iter().rev().collect();
    let mut runs: Vec<Run> = Vec::new();
    let mut zeros = 0u64;
    let mut ones = 0u64;
    for (index, &(_, bit)) in order.iter().enumerate() {
        let bit = bit && index > 0;
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
    if ones == 0 {
        return Err(GraphError::Disconnected);
    }
    runs.push(Run::new(zeros, ones));
    let seq = GeneratingSequence::new(runs).expect("runs are positive by construction");

    let mut position = vec![0usize; n];
    for (index, &(v, _)) in order.iter().enumerate() {
        position[v] = index;
    }
    let built = materialize(&seq, g.kind());
    let consistent = built.edge_count() == g.edge_count()
        && g.edges().all(|(a, b)| built.has_edge(position[a], position[b]))
        && (g.kind() == GraphKind::Threshold
            || (0..n).all(|v| built.side(position[v]) == g.side(v)));
    if consistent {
        Ok(seq)
    } else {
        Err(GraphError::NotNested(g.kind()))
    }
}

/// Returns `(vertex, is_one)` in peeling order.
fn peel_threshold(g: &Graph) -> Result<Vec<(usize, bool)>, GraphError> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));

    let mut peeled = Vec::with_capacity(n);
    let (mut lo, mut hi) = (0usize, n - 1);
    let mut dominating_removed = 0usize;
    while lo <= hi {
        let remaining = hi - lo + 1;
        if remaining == 1 {
            peeled.push((by_degree[lo], false));
            break;
        }
        // removing a dominating vertex lowers every remaining degree by one
        if g.degree(by_degree[lo]) == dominating_removed {
            peeled.push((by_degree[lo], false));
            lo += 1;
        } else if g.degree(by_degree[hi]) == dominating_removed + remaining - 1 {
            peeled.push((by_degree[hi], true));
            hi -= 1;
            dominating_removed += 1;
        } else {
            return Err(GraphError::NotNested(GraphKind::Threshold));
        }
    }
    Ok(peeled)
}

fn peel_chain(g: &Graph) -> Result<Vec<(usize, bool)>, GraphError> {
    let n = g.vertex_count();
    let mut us: Vec<usize> = (0..n).filter(|&v| g.side(v) == Side::U).collect();
    let mut vs: Vec<usize> = (0..n).filter(|&v| g.side(v) == Side::V).collect();
    us.sort_by_key(|&v| g.degree(v));
    vs.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let mut peeled = Vec::with_capacity(n);
    let (mut ui, mut vi) = (0usize, 0usize);
    while ui < us.len() || vi < vs.len() {
        let remaining_u = us.len() - ui;
        if ui < us.len() && g.degree(us[ui]) == vi {
            // a U vertex whose neighbours have all been removed
            peeled.push((us[ui], false));
            ui += 1;
        } else if vi < vs.len() && remaining_u > 0 && g.degree(vs[vi]) == remaining_u {
            peeled.push((vs[vi], true));
            vi += 1;
        } else if remaining_u == 0 {
            return Err(GraphError::Disconnected);
        } else {
            return Err(GraphError::NotNested(GraphKind::Chain));
        }
    }
    Ok(peeled)
}
