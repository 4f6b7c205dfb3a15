//! Timing of the linear decisions on synthetic sequences with many levels.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::hamiltonicity::{is_hamiltonian_chain, is_hamiltonian_threshold};
use crate::sequence::{GeneratingSequence, Run};

/// `(0^2 1)(0 1)…(0 1)(0 1^2)` with `h` levels: a balanced chain graph on
/// which every suffix inequality holds, so the chain decision scans all
/// levels.
pub fn synthetic_chain(h: usize) -> GeneratingSequence {
    assert!(h >= 2, "synthetic sequences need at least two levels");
    let runs = std::iter::once(Run::new(2, 1))
        .chain(std::iter::repeat(Run::new(1, 1)).take(h - 2))
        .chain(std::iter::once(Run::new(1, 2)));
    GeneratingSequence::new(runs).unwrap()
}

/// `(0^2 1)(0 1)…(0 1)(0 1^3)` with `h` levels: a Hamiltonian threshold
/// graph with `ℓ = 2` whose inequality check covers levels `4..=h`.
pub fn synthetic_threshold(h: usize) -> GeneratingSequence {
    assert!(h >= 2, "synthetic sequences need at least two levels");
    let runs = std::iter::once(Run::new(2, 1))
        .chain(std::iter::repeat(Run::new(1, 1)).take(h - 2))
        .chain(std::iter::once(Run::new(1, 3)));
    GeneratingSequence::new(runs).unwrap()
}

#[derive(Debug, Clone, Copy)]
pub struct BenchResult {
    pub levels: usize,
    /// Fastest of the repetitions.
    pub threshold: Duration,
    pub chain: Duration,
    pub threshold_hamiltonian: bool,
    pub chain_hamiltonian: bool,
}

fn best_of<F: FnMut() -> bool>(reps: usize, mut f: F) -> (Duration, bool) {
    let mut best = Duration::MAX;
    let mut answer = false;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        answer = black_box(f());
        best = best.min(start.elapsed());
    }
    (best, answer)
}

/// Times both decisions on the synthetic sequences with `h` levels.
/// Sequence construction is excluded.
pub fn time_decisions(h: usize, reps: usize) -> BenchResult {
    let threshold_seq = synthetic_threshold(h);
    let chain_seq = synthetic_chain(h);
    let (threshold, threshold_hamiltonian) =
        best_of(reps, || is_hamiltonian_threshold(black_box(&threshold_seq)).hamiltonian);
    let (chain, chain_hamiltonian) =
        best_of(reps, || is_hamiltonian_chain(black_box(&chain_seq)).hamiltonian);
    BenchResult {
        levels: h,
        threshold,
        chain,
        threshold_hamiltonian,
        chain_hamiltonian,
    }
}
