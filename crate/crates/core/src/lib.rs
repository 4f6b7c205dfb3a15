//! Threshold and chain graphs described by run-length binary generating
//! sequences `0^{t_1} 1^{s_1} … 0^{t_h} 1^{s_h}`.
//!
//! * [`sequence`]: parsing and the canonical run-length form;
//! * [`graph`]: materialization, degree profiles, sequence recovery, export;
//! * [`hamiltonicity`]: `O(h)` Hamiltonicity decisions and the clique
//!   trimming reduction;
//! * [`oracle`]: brute-force cycle search and counting, sequence enumeration;
//! * [`extremal`]: key edges and the chain graphs with fewest Hamilton cycles;
//! * [`verify`]: exhaustive cross-validation against the oracle.

pub mod bench;
pub mod cli;
pub mod extremal;
pub mod graph;
pub mod hamiltonicity;
pub mod oracle;
pub mod sequence;
pub mod verify;

pub use graph::{materialize, recover_sequence, Graph, GraphKind};
pub use hamiltonicity::{is_hamiltonian_chain, is_hamiltonian_threshold, reduce_to_g_star, Reason, Verdict};
pub use sequence::{parse_sequence, GeneratingSequence, Run};
