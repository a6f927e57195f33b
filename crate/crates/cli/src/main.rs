//! `zerocover`: verifiers and searches for covers of the integers and
//! zero-sum problems, with one JSON report per run.

mod commands;
mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use input::Inputs;
use report::RunReport;

#[derive(Parser)]
#[command(name = "zerocover", version, about = "Exact covers of Z and zero-sum verification")]
struct Cli {
    /// Print the full report as JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands (default 0; echoed in the report)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads; results do not depend on it
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
    /// Include wall-clock time in the report (breaks byte-identical output)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Residue-class systems
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Zero-sum families attached to covers
    #[command(subcommand)]
    Zerosum(ZerosumCmd),
    /// Signed count of subsequences with a given sum
    Olson(OlsonArgs),
    /// Davenport or EGZ constant by exhaustive search
    Constants(ConstantsArgs),
    /// Exponential-sum characterization of m-covers
    #[command(subcommand)]
    Char(CharCmd),
    /// Regular subgraphs of multigraphs
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Binomial congruences
    #[command(subcommand)]
    Congruence(CongruenceCmd),
    /// Randomized counterexample search for the open variants
    Scan(ScanArgs),
}

#[derive(Subcommand)]
pub enum CoverCmd {
    /// Covering multiplicity and exactness
    Check {
        file: String,
        #[arg(long, conflicts_with = "exact")]
        min_mult: Option<usize>,
        #[arg(long)]
        exact: Option<usize>,
        /// Include the multiplicity histogram
        #[arg(long)]
        profile: bool,
    },
    /// Fractional parts of all weighted subset sums
    Spectrum { file: String },
    /// Split an exact m-cover into an exact n-cover and an exact (m-n)-cover
    Split {
        file: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Random exact m-cover
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        steps: usize,
    },
}

#[derive(Args)]
pub struct GroupInput {
    /// `p:h1,h2,...` or `cyclic:n`
    #[arg(long)]
    pub group: String,
    /// One element per line, comma-separated components
    #[arg(long)]
    pub elements: String,
}

#[derive(Subcommand)]
pub enum ZerosumCmd {
    /// First nonempty member of the family
    Find {
        cover: String,
        #[command(flatten)]
        group: GroupInput,
        #[arg(long)]
        h: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
    /// Check that the family does not have exactly one member
    VerifyT21 {
        cover: String,
        #[command(flatten)]
        group: GroupInput,
        #[arg(long)]
        h: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        target: String,
    },
    /// Zero-sum subsequence with reciprocal sum q
    Egz {
        cover: String,
        #[command(flatten)]
        group: GroupInput,
        #[arg(long)]
        q: u64,
        /// Exact 3q-cover with elements of G+G
        #[arg(long)]
        exact3q: bool,
    },
    /// Subset with weighted sum in mZ (or congruent to that of J)
    C22 {
        cover: String,
        #[arg(long)]
        m: u64,
        /// 1-based, comma-separated
        #[arg(long)]
        j: Option<String>,
    },
}

#[derive(Args)]
pub struct OlsonArgs {
    #[command(flatten)]
    pub group: GroupInput,
    #[arg(long)]
    pub target: String,
}

#[derive(Args)]
pub struct ConstantsArgs {
    #[arg(value_parser = ["davenport", "egz"])]
    pub which: String,
    #[arg(long)]
    pub group: String,
}

#[derive(Subcommand)]
pub enum CharCmd {
    /// All (theta, n) sums for C(x, n) and mu_s = m_s/n_s
    T41 {
        cover: String,
        #[arg(long)]
        m: usize,
        /// Decide m-cover status from the sums instead of assuming it
        #[arg(long)]
        converse: bool,
    },
    /// psi(theta) for f = 1
    Psi {
        cover: String,
        #[arg(long)]
        theta: String,
    },
}

#[derive(Subcommand)]
pub enum GraphCmd {
    /// q-regular subgraph, optionally with cover-weighted edges
    Regular {
        graph: String,
        #[arg(long)]
        q: u64,
        #[arg(long, requires = "h")]
        cover: Option<String>,
        #[arg(long, requires = "cover")]
        h: Option<u32>,
    },
}

#[derive(Subcommand)]
pub enum CongruenceCmd {
    /// binom(a-1, p^h-1) mod p against p^h | a over a range
    Lemma42 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        h: u32,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
}

#[derive(Args)]
pub struct ScanArgs {
    /// conj21i, conj21ii, rem21a or rem22
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub budget: usize,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let (seed, result) = commands::run(&cli.command, cli.seed, &mut inputs);
    let mut report = RunReport::build(argv, inputs.digests, seed, result);
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    if cli.json {
        println!("{}", report.to_json());
    } else if report.error.is_none() {
        println!("{}", report.summary);
    }
    if let Some(e) = &report.error {
        eprintln!("zerocover: {e}");
    }
    if let (Some(v), false) = (&report.violation, cli.json) {
        eprintln!("reproduction bundle: {}", v.bundle);
    }
    ExitCode::from(report.exit_code as u8)
}
