//! Linear-time Hamiltonicity decisions for threshold and chain graphs, read
//! directly off the run-length generating sequence.
//!
//! Both procedures make one forward pass (prefix sums for `ℓ`) and one
//! backward pass (suffix sums for the inequalities), so they run in `O(h)`
//! time on the run-length form regardless of the graph order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ClassDegrees, Graph};
use crate::oracle::{find_hamilton_cycle, HamiltonCycle};
use crate::sequence::{GeneratingSequence, Run};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonicityError {
    #[error("reduction not applicable: {0}")]
    ReductionNotApplicable(&'static str),
    #[error("the S_q system needs balanced classes of size at least 2 (got {u} and {v})")]
    Unbalanced { u: usize, v: usize },
    #[error("q = {q} out of range 0..={max}")]
    QOutOfRange { q: usize, max: usize },
}

/// Why a decision came out the way it did. Exactly one reason is attached
/// to every verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    /// Fewer than three vertices.
    TooFewVertices,
    /// Complete graph (`r = 0`).
    SmallCaseR0,
    /// Co-clique of size one; decided by the degree of the last zero run.
    SmallCaseR1,
    /// The co-clique is at least as large as the maximal clique.
    CliqueTooSmall,
    /// `e_{s-r} = 0`: too many clique vertices have no co-clique neighbour.
    ZeroDegreeInClique,
    /// Chain graph with `T ≠ S`.
    UnequalClasses,
    /// Chain graph with `t_1 ≤ s_1` or `s_h ≤ t_h`.
    PendantStructure,
    /// A suffix inequality fails; see `failed_j`.
    InequalityFailed,
    /// After trimming the clique only one level is left.
    EllPlusOneEqualsH,
    /// Every suffix inequality holds.
    InequalitiesHold,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::TooFewVertices => "TOO_FEW_VERTICES",
            Reason::SmallCaseR0 => "SMALL_CASE_R0",
            Reason::SmallCaseR1 => "SMALL_CASE_R1",
            Reason::CliqueTooSmall => "CLIQUE_TOO_SMALL",
            Reason::ZeroDegreeInClique => "ZERO_DEGREE_IN_CLIQUE",
            Reason::UnequalClasses => "UNEQUAL_CLASSES",
            Reason::PendantStructure => "PENDANT_STRUCTURE",
            Reason::InequalityFailed => "INEQUALITY_FAILED",
            Reason::EllPlusOneEqualsH => "ELL_PLUS_ONE_EQUALS_H",
            Reason::InequalitiesHold => "INEQUALITIES_HOLD",
        }
    }
}

/// Decision with the intermediate values that produced it.
///
/// For threshold graphs `r = T - 1` and `s = S + 1` are the co-clique and
/// maximal-clique sizes; for chain graphs they are the class sizes `T` and
/// `S`. `failed_j` is a 1-based level index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub hamiltonian: bool,
    pub reason: Reason,
    pub r: u64,
    pub s: u64,
    #[serde(rename = "T")]
    pub total_zeros: u64,
    #[serde(rename = "S")]
    pub total_ones: u64,
    pub ell: Option<usize>,
    pub failed_j: Option<usize>,
    pub witness: Option<HamiltonCycle>,
}

impl Verdict {
    fn new(r: u64, s: u64, seq: &GeneratingSequence) -> Self {
        Verdict {
            hamiltonian: false,
            reason: Reason::TooFewVertices,
            r,
            s,
            total_zeros: seq.total_zeros(),
            total_ones: seq.total_ones(),
            ell: None,
            failed_j: None,
            witness: None,
        }
    }

    fn decide(mut self, hamiltonian: bool, reason: Reason) -> Self {
        self.hamiltonian = hamiltonian;
        self.reason = reason;
        self
    }

    /// Attaches a Hamilton cycle found by the brute-force oracle on `g`.
    /// Leaves the verdict untouched when it is negative.
    pub fn with_witness(mut self, g: &Graph) -> Self {
        if self.hamiltonian {
            self.witness = find_hamilton_cycle(g);
        }
        self
    }
}

/// Scans `j = h, h-1, …, lowest` (1-based) and returns the first `j` with
/// `Σ_{i≥j} s_i < Σ_{i≥j} t_i + 1`.
fn first_failing_suffix(runs: &[Run], lowest: usize) -> Option<usize> {
    let mut suffix_zeros = 0u64;
    let mut suffix_ones = 0u64;
    for j in (lowest..=runs.len()).rev() {
        let run = runs[j - 1];
        suffix_zeros += run.zeros;
        suffix_ones += run.ones;
        if suffix_ones < suffix_zeros + 1 {
            return Some(j);
        }
    }
    None
}

/// The least `ℓ` with `Σ_{i≤ℓ} s_i ≤ excess < Σ_{i≤ℓ+1} s_i`.
///
/// Callers guarantee `excess < S`, so `ℓ < h`.
fn trimmed_levels(runs: &[Run], excess: u64) -> usize {
    let mut prefix = 0u64;
    let mut ell = 0usize;
    while prefix + runs[ell].ones <= excess {
        prefix += runs[ell].ones;
        ell += 1;
    }
    ell
}

/// Early rejections shared by the threshold decision and the reduction:
/// `Some(reason)` when the clique is too small for a Hamilton cycle.
fn clique_rejection(seq: &GeneratingSequence, r: u64, s: u64) -> Option<Reason> {
    if s <= r {
        return Some(Reason::CliqueTooSmall);
    }
    let first = seq.first();
    let zero_degree = if first.zeros != 1 {
        s - r == 1
    } else {
        s - r <= first.ones + 1
    };
    zero_degree.then_some(Reason::ZeroDegreeInClique)
}

/// Decides whether the threshold graph of `seq` is Hamiltonian.
pub fn is_hamiltonian_threshold(seq: &GeneratingSequence) -> Verdict {
    let r = seq.total_zeros() - 1;
    let s = seq.total_ones() + 1;
    let verdict = Verdict::new(r, s, seq);
    let runs = seq.runs();

    if seq.order() < 3 {
        return verdict.decide(false, Reason::TooFewVertices);
    }
    if r == 0 {
        return verdict.decide(s >= 3, Reason::SmallCaseR0);
    }
    if r == 1 {
        return verdict.decide(seq.last().ones >= 2, Reason::SmallCaseR1);
    }
    if let Some(reason) = clique_rejection(seq, r, s) {
        return verdict.decide(false, reason);
    }

    let ell = trimmed_levels(runs, s - r - 1);
    let mut verdict = verdict;
    verdict.ell = Some(ell);
    if ell + 1 == runs.len() {
        return verdict.decide(true, Reason::EllPlusOneEqualsH);
    }
    match first_failing_suffix(runs, ell + 2) {
        Some(j) => {
            verdict.failed_j = Some(j);
            verdict.decide(false, Reason::InequalityFailed)
        }
        None => verdict.decide(true, Reason::InequalitiesHold),
    }
}

/// Decides whether the chain graph of `seq` is Hamiltonian.
pub fn is_hamiltonian_chain(seq: &GeneratingSequence) -> Verdict {
    let zeros = seq.total_zeros();
    let ones = seq.total_ones();
    let mut verdict = Verdict::new(zeros, ones, seq);
    let runs = seq.runs();
    let h = runs.len();

    if seq.order() < 3 {
        return verdict.decide(false, Reason::TooFewVertices);
    }
    if zeros != ones {
        return verdict.decide(false, Reason::UnequalClasses);
    }
    // a single level is K_{t,t}, Hamiltonian for t ≥ 2
    if h >= 2 {
        let (first, last) = (seq.first(), seq.last());
        // with T = S these are exactly the suffix inequalities at j = 2 and j = h
        let pendant = if first.zeros < first.ones + 1 {
            Some(2)
        } else if last.ones < last.zeros + 1 {
            Some(h)
        } else {
            None
        };
        if let Some(j) = pendant {
            verdict.failed_j = Some(j);
            return verdict.decide(false, Reason::PendantStructure);
        }
    }
    match first_failing_suffix(runs, 2) {
        Some(j) => {
            verdict.failed_j = Some(j);
            verdict.decide(false, Reason::InequalityFailed)
        }
        None => verdict.decide(true, Reason::InequalitiesHold),
    }
}

/// Trims the `s - r` lowest-degree clique vertices, producing the balanced
/// threshold graph `G*` whose Hamiltonicity matches that of `seq`.
///
/// The result is `0^{Σ_{i≤ℓ+1} t_i - 1} 1^{Σ_{i≤ℓ+1} s_i - (s-r-1)}`
/// followed by the untouched levels `ℓ+2..h`, and always has `T* = S*`.
pub fn reduce_to_g_star(seq: &GeneratingSequence) -> Result<GeneratingSequence, HamiltonicityError> {
    let r = seq.total_zeros() - 1;
    let s = seq.total_ones() + 1;
    if r < 2 {
        return Err(HamiltonicityError::ReductionNotApplicable(
            "co-clique has fewer than two vertices",
        ));
    }
    if clique_rejection(seq, r, s).is_some() {
        return Err(HamiltonicityError::ReductionNotApplicable(
            "maximal clique too small relative to the co-clique",
        ));
    }
    let runs = seq.runs();
    let excess = s - r - 1;
    let ell = trimmed_levels(runs, excess);
    let head = &runs[..=ell];
    let zeros: u64 = head.iter().map(|run| run.zeros).sum::<u64>() - 1;
    let ones: u64 = head.iter().map(|run| run.ones).sum::<u64>() - excess;
    let reduced = std::iter::once(Run::new(zeros, ones)).chain(runs[ell + 1..].iter().copied());
    Ok(GeneratingSequence::new(reduced).expect("trimmed runs stay positive"))
}

/// Evaluates the inequality family `S_q` on the class degrees of a balanced
/// chain graph: `d_j ≥ j + 1` for `j ≤ q` and `e_j ≥ j + 1` for
/// `j ≤ |U| - 1 - q`.
///
/// Not used by the decision procedures; kept as an independent check.
pub fn check_sq_system(degrees: &ClassDegrees, q: usize) -> Result<bool, HamiltonicityError> {
    let size = degrees.d.len();
    if size != degrees.e.len() || size < 2 {
        return Err(HamiltonicityError::Unbalanced {
            u: size,
            v: degrees.e.len(),
        });
    }
    if q > size - 1 {
        return Err(HamiltonicityError::QOutOfRange { q, max: size - 1 });
    }
    let holds = |list: &[u64], count: usize| {
        list[..count]
            .iter()
            .enumerate()
            .all(|(i, &deg)| deg >= i as u64 + 2)
    };
    Ok(holds(&degrees.d, q) && holds(&degrees.e, size - 1 - q))
}
