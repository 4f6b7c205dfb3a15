//! Exhaustive cross-validation of the linear decisions, the reduction, the
//! `S_q` characterization and the degree formulas against brute force.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{counted_degree_profile, degree_profile, materialize, ClassDegrees, GraphKind};
use crate::hamiltonicity::{
    check_sq_system, is_hamiltonian_chain, is_hamiltonian_threshold, reduce_to_g_star,
};
use crate::oracle::{enumerate_connected, find_hamilton_cycle};
use crate::sequence::GeneratingSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Threshold decision vs. brute force.
    Threshold,
    /// Chain decision vs. brute force.
    Chain,
    /// Brute-force Hamiltonicity of `G` vs. that of `G*`.
    Reduction,
    /// Some `S_q`, every `S_q` and brute force agree on balanced chains.
    SqSystem,
    /// Closed-form degree profile vs. counted degrees.
    Degrees,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Threshold => "threshold",
            Check::Chain => "chain",
            Check::Reduction => "reduction",
            Check::SqSystem => "sq_system",
            Check::Degrees => "degrees",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindSelection {
    Threshold,
    Chain,
    Both,
}

impl KindSelection {
    fn threshold(self) -> bool {
        matches!(self, KindSelection::Threshold | KindSelection::Both)
    }

    fn chain(self) -> bool {
        matches!(self, KindSelection::Chain | KindSelection::Both)
    }
}

/// A disagreement found during verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: Check,
    pub sequence: String,
    pub detail: String,
}

/// Per-order tally for one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub n: usize,
    pub check: Check,
    /// Sequences the check applied to.
    pub checked: usize,
    /// Of those, how many graphs were Hamiltonian by brute force.
    pub hamiltonian: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn total(&self, check: Check) -> (usize, usize) {
        self.rows
            .iter()
            .filter(|row| row.check == check)
            .fold((0, 0), |(c, h), row| (c + row.checked, h + row.hamiltonian))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>3}  {:<10} {:>8} {:>12} {:>10}", "n", "check", "checked", "hamiltonian", "mismatches")?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>3}  {:<10} {:>8} {:>12} {:>10}",
                row.n,
                row.check.to_string(),
                row.checked,
                row.hamiltonian,
                row.mismatches
            )?;
        }
        for m in &self.mismatches {
            writeln!(f, "MISMATCH {} {}: {}", m.check, m.sequence, m.detail)?;
        }
        Ok(())
    }
}

/// Outcome of one check on one sequence: `None` if it did not apply,
/// otherwise whether brute force found a Hamilton cycle and an optional
/// mismatch description.
type Outcome = Option<(bool, Option<String>)>;

fn check_threshold(seq: &GeneratingSequence) -> [(Check, Outcome); 3] {
    let g = materialize(seq, GraphKind::Threshold);
    let brute = find_hamilton_cycle(&g);
    if let Some(cycle) = &brute {
        assert!(cycle.is_hamilton_cycle_of(&g), "oracle returned an invalid cycle");
    }
    let brute = brute.is_some();
    let verdict = is_hamiltonian_threshold(seq);
    let decision = (
        Check::Threshold,
        Some((
            brute,
            (verdict.hamiltonian != brute).then(|| {
                format!("decision {} ({}), oracle {brute}", verdict.hamiltonian, verdict.reason.as_str())
            }),
        )),
    );

    let reduction = (
        Check::Reduction,
        reduce_to_g_star(seq).ok().map(|reduced| {
            let after = find_hamilton_cycle(&materialize(&reduced, GraphKind::Threshold)).is_some();
            (
                brute,
                (after != brute).then(|| format!("G* = {reduced}: oracle {brute} before, {after} after")),
            )
        }),
    );

    let closed = degree_profile(seq);
    let counted = counted_degree_profile(&g);
    let degrees = (
        Check::Degrees,
        Some((
            brute,
            (counted.as_ref() != Ok(&closed)).then(|| format!("closed {closed:?}, counted {counted:?}")),
        )),
    );
    [decision, reduction, degrees]
}

fn check_chain(seq: &GeneratingSequence) -> [(Check, Outcome); 2] {
    let g = materialize(seq, GraphKind::Chain);
    let brute = find_hamilton_cycle(&g).is_some();
    let verdict = is_hamiltonian_chain(seq);
    let decision = (
        Check::Chain,
        Some((
            brute,
            (verdict.hamiltonian != brute).then(|| {
                format!("decision {} ({}), oracle {brute}", verdict.hamiltonian, verdict.reason.as_str())
            }),
        )),
    );

    let balanced = seq.total_zeros() == seq.total_ones() && seq.total_zeros() >= 2;
    let sq = (
        Check::SqSystem,
        balanced.then(|| {
            let degrees = ClassDegrees::count(&g);
            let size = degrees.d.len();
            let results: Vec<bool> = (0..size)
                .map(|q| check_sq_system(&degrees, q).expect("balanced classes"))
                .collect();
            let some = results.iter().any(|&b| b);
            let every = results.iter().all(|&b| b);
            (
                brute,
                (some != brute || every != brute)
                    .then(|| format!("exists {some}, forall {every}, oracle {brute}")),
            )
        }),
    );
    [decision, sq]
}

/// Runs every check on all connected sequences of order `2..=max_n`.
/// Sequences are fanned out to worker threads; results are merged in
/// sequence order, so the report is deterministic.
pub fn verify(max_n: usize, kinds: KindSelection) -> VerifyReport {
    let mut report = VerifyReport::default();
    for n in 2..=max_n {
        let sequences: Vec<GeneratingSequence> = enumerate_connected(n).collect();
        let outcomes: Vec<(String, Vec<(Check, Outcome)>)> = sequences
            .par_iter()
            .map(|seq| {
                let mut results = Vec::new();
                if kinds.threshold() {
                    results.extend(check_threshold(seq));
                }
                if kinds.chain() {
                    results.extend(check_chain(seq));
                }
                (seq.to_string(), results)
            })
            .collect();

        let mut checks: Vec<Check> = Vec::new();
        if kinds.threshold() {
            checks.extend([Check::Threshold, Check::Reduction, Check::Degrees]);
        }
        if kinds.chain() {
            checks.extend([Check::Chain, Check::SqSystem]);
        }
        for check in checks {
            let mut row = CheckRow {
                n,
                check,
                checked: 0,
                hamiltonian: 0,
                mismatches: 0,
            };
            for (sequence, results) in &outcomes {
                for (c, outcome) in results {
                    let (Some((brute, mismatch)), true) = (outcome, *c == check) else {
                        continue;
                    };
                    row.checked += 1;
                    row.hamiltonian += usize::from(*brute);
                    if let Some(detail) = mismatch {
                        row.mismatches += 1;
                        report.mismatches.push(Mismatch {
                            check,
                            sequence: sequence.clone(),
                            detail: detail.clone(),
                        });
                    }
                }
            }
            report.rows.push(row);
        }
    }
    report
}
