//! Command-line front end.
//!
//! Exit codes: `0` success, `1` negative verification (an algorithm/oracle
//! disagreement), `2` usage or input errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::time_decisions;
use crate::extremal::{census, min_cycle_chain_graph, write_census_csv};
use crate::graph::{degree_profile, export, materialize, ExportFormat, GraphKind};
use crate::hamiltonicity::{is_hamiltonian_chain, is_hamiltonian_threshold, reduce_to_g_star, Verdict};
use crate::oracle::{count_hamilton_cycles_capped, DEFAULT_COUNT_CAP};
use crate::sequence::{parse_sequence, GeneratingSequence};
use crate::verify::{verify, KindSelection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nestgraph",
    version,
    about = "Hamiltonicity of threshold and chain graphs from run-length generating sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Threshold,
    Chain,
}

impl From<KindArg> for GraphKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Threshold => GraphKind::Threshold,
            KindArg::Chain => GraphKind::Chain,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SelectionArg {
    Threshold,
    Chain,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Edgelist,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide Hamiltonicity in linear time.
    Check {
        #[arg(value_enum)]
        kind: KindArg,
        sequence: String,
        /// Attach a Hamilton cycle found by brute force.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the trimmed balanced threshold graph G*.
    Reduce { sequence: String },
    /// Print the degree profile of the clique-deleted bipartite graph.
    Degrees {
        sequence: String,
        #[arg(long)]
        json: bool,
    },
    /// Count Hamilton cycles by brute force.
    Count {
        sequence: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = DEFAULT_COUNT_CAP)]
        cap: usize,
    },
    /// The chain graph of order n with the fewest Hamilton cycles.
    MinChain {
        n: u64,
        #[arg(long, default_value_t = DEFAULT_COUNT_CAP)]
        cap: usize,
    },
    /// CSV of cycle counts for every Hamiltonian chain graph of order n.
    Census {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_COUNT_CAP)]
        cap: usize,
    },
    /// Serialize the materialized graph.
    Export {
        sequence: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        format: FormatArg,
    },
    /// Cross-check every decision against brute force on all small sequences.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "both")]
        kind: SelectionArg,
    },
    /// Time the linear decisions on a synthetic sequence with H levels.
    Bench {
        #[arg(long = "h")]
        levels: usize,
        #[arg(long, default_value_t = 15)]
        reps: usize,
    },
}

/// Runs the CLI on `args` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn parse(text: &str) -> Result<GeneratingSequence, String> {
    parse_sequence(text).map_err(|e| format!("invalid sequence {text:?}: {e}"))
}

fn verdict_line(kind: GraphKind, seq: &GeneratingSequence, v: &Verdict) -> String {
    let mut line = format!(
        "{kind} {seq}: {} ({}; r={} s={} T={} S={}",
        if v.hamiltonian { "hamiltonian" } else { "not hamiltonian" },
        v.reason.as_str(),
        v.r,
        v.s,
        v.total_zeros,
        v.total_ones
    );
    if let Some(ell) = v.ell {
        line.push_str(&format!(" ell={ell}"));
    }
    if let Some(j) = v.failed_j {
        line.push_str(&format!(" failed_j={j}"));
    }
    line.push(')');
    if let Some(cycle) = &v.witness {
        let ids: Vec<String> = cycle.vertices().iter().map(ToString::to_string).collect();
        line.push_str(&format!(" witness=[{}]", ids.join(" ")));
    }
    line
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Check {
            kind,
            sequence,
            witness,
            json,
        } => {
            let seq = parse(&sequence)?;
            let kind = GraphKind::from(kind);
            let mut verdict = match kind {
                GraphKind::Threshold => is_hamiltonian_threshold(&seq),
                GraphKind::Chain => is_hamiltonian_chain(&seq),
            };
            if witness {
                verdict = verdict.with_witness(&materialize(&seq, kind));
            }
            if json {
                writeln!(out, "{}", serde_json::to_string(&verdict).unwrap()).map_err(io)?;
            } else {
                writeln!(out, "{}", verdict_line(kind, &seq, &verdict)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Reduce { sequence } => {
            let seq = parse(&sequence)?;
            let reduced = reduce_to_g_star(&seq).map_err(|e| e.to_string())?;
            writeln!(out, "{reduced}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Degrees { sequence, json } => {
            let seq = parse(&sequence)?;
            let profile = degree_profile(&seq);
            if json {
                writeln!(out, "{}", serde_json::to_string(&profile).unwrap()).map_err(io)?;
            } else {
                let join = |v: &[u64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                writeln!(
                    out,
                    "r={} s={} T={} S={} t1_is_one={}\nd: {}\ne: {}",
                    profile.r,
                    profile.s,
                    profile.total_zeros,
                    profile.total_ones,
                    profile.t1_is_one,
                    join(&profile.d),
                    join(&profile.e)
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Count { sequence, kind, cap } => {
            let seq = parse(&sequence)?;
            let g = materialize(&seq, kind.into());
            let count = count_hamilton_cycles_capped(&g, cap).map_err(|e| e.to_string())?;
            writeln!(out, "{}", count.0).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::MinChain { n, cap } => {
            let seq = min_cycle_chain_graph(n).map_err(|e| e.to_string())?;
            let g = materialize(&seq, GraphKind::Chain);
            let count = count_hamilton_cycles_capped(&g, cap).map_err(|e| e.to_string())?;
            writeln!(out, "{seq}\ncycles: {}", count.0).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Census { n, cap } => {
            let rows = census(n, cap).map_err(|e| e.to_string())?;
            write_census_csv(&rows, &mut *out).map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Export {
            sequence,
            kind,
            format,
        } => {
            let seq = parse(&sequence)?;
            let g = materialize(&seq, kind.into());
            let format = match format {
                FormatArg::Dot => ExportFormat::Dot,
                FormatArg::Edgelist => ExportFormat::Edgelist,
                FormatArg::Json => ExportFormat::Json,
            };
            let text = export(&g, format);
            write!(out, "{text}").map_err(io)?;
            if !text.ends_with('\n') {
                writeln!(out).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { max_n, kind } => {
            if !(2..=24).contains(&max_n) {
                return Err(format!("--max-n must be between 2 and 24, got {max_n}"));
            }
            let selection = match kind {
                SelectionArg::Threshold => KindSelection::Threshold,
                SelectionArg::Chain => KindSelection::Chain,
                SelectionArg::Both => KindSelection::Both,
            };
            let report = verify(max_n, selection);
            write!(out, "{report}").map_err(io)?;
            if report.is_clean() {
                writeln!(out, "OK: no disagreements up to n = {max_n}").map_err(io)?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "FAILED: {} disagreement(s)", report.mismatches.len()).map_err(io)?;
                Ok(EXIT_MISMATCH)
            }
        }
        Command::Bench { levels, reps } => {
            if levels < 2 {
                return Err("--h must be at least 2".into());
            }
            let result = time_decisions(levels, reps);
            writeln!(
                out,
                "h={} threshold_us={:.1} chain_us={:.1} (best of {reps}; threshold {}, chain {})",
                result.levels,
                result.threshold.as_secs_f64() * 1e6,
                result.chain.as_secs_f64() * 1e6,
                result.threshold_hamiltonian,
                result.chain_hamiltonian
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}
