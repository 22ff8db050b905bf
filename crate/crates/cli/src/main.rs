mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::commands::{CliError, Report};
use crate::manifest::RunManifest;

/// Cycle-creating families of Hamiltonian paths and perfect matchings.
#[derive(Parser, Debug)]
#[command(name = "cyclecreate", version)]
struct Cli {
    /// Worker threads for parallel pair checks (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Also print exact rationals as decimals.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Build a family or graph and write it to a file.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a family or graph from a file.
    #[command(subcommand)]
    Verify(Verify),
    /// Shrink a family to a smaller ground set.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Exact small values by maximum clique search.
    Search(SearchArgs),
    /// Perfect-matching counts and permanents.
    #[command(subcommand)]
    Count(Count),
    /// Finite checks of individual structural statements.
    #[command(subcommand)]
    Check(Check),
    /// Exponents of the upper and lower bounds.
    Bounds(BoundsArgs),
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Construct {
    /// The fixed-path family on n = mk + 1 vertices.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Point-line incidence graph of the projective plane over Z_q.
    Plane(PlaneArgs),
}

#[derive(Args, Debug, Serialize)]
struct PlaneArgs {
    /// Prime order.
    #[arg(long, required_unless_present = "target_n", conflicts_with = "target_n")]
    q: Option<usize>,
    /// Largest prime order whose graph has at most this many vertices.
    #[arg(long)]
    target_n: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Kind {
    Paths,
    Matchings,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Verify {
    /// Every pair of the family is C_2k-creating.
    Creating {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The graph is bipartite, regular and has no cycle of length at most 2k.
    C2kfree {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Reduce {
    /// Path family to a matching family on 2n/k - 2 vertices.
    PathsToMatchings {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Matching family on n vertices to one on n - 2 vertices.
    Shrink {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
enum Quantity {
    /// Hamiltonian paths; `--k` is the cycle length.
    #[value(name = "H")]
    #[serde(rename = "H")]
    H,
    /// Perfect matchings; `--k` is half the cycle length.
    #[value(name = "M")]
    #[serde(rename = "M")]
    M,
    /// Reversing permutations of [n].
    #[value(name = "RP")]
    #[serde(rename = "RP")]
    Rp,
}

#[derive(Args, Debug, Serialize)]
struct SearchArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Count {
    /// Perfect matchings of a balanced bipartite graph.
    Matchings {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Permanent of an integer matrix.
    Permanent {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Check {
    /// Matching count of a regular bipartite graph against r^m m!/m^m.
    Lemma6 {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// No 2k-cycle uses a fixed edge, for every pair of paths sharing a triple.
    Claim4 {
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Reversing permutations are exactly those whose matchings create a C_4.
    Claim7 {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args, Debug, Serialize)]
struct BoundsArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    kmax: Option<usize>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct(Construct::LowerBound { .. }) => "construct lower-bound",
            Command::Construct(Construct::Plane(_)) => "construct plane",
            Command::Verify(Verify::Creating { .. }) => "verify creating",
            Command::Verify(Verify::C2kfree { .. }) => "verify c2kfree",
            Command::Reduce(Reduce::PathsToMatchings { .. }) => "reduce paths-to-matchings",
            Command::Reduce(Reduce::Shrink { .. }) => "reduce shrink",
            Command::Search(_) => "search",
            Command::Count(Count::Matchings { .. }) => "count matchings",
            Command::Count(Count::Permanent { .. }) => "count permanent",
            Command::Check(Check::Lemma6 { .. }) => "check lemma6",
            Command::Check(Check::Claim4 { .. }) => "check claim4",
            Command::Check(Check::Claim7 { .. }) => "check claim7",
            Command::Bounds(_) => "bounds",
        }
    }
}

fn run(cmd: &Command, decimal: bool) -> Result<Report, CliError> {
    match cmd {
        Command::Construct(Construct::LowerBound { n, k, out }) => commands::construct_lower_bound(*n, *k, out),
        Command::Construct(Construct::Plane(a)) => commands::construct_plane(a.q, a.target_n, &a.out),
        Command::Verify(Verify::Creating { k, kind, input }) => commands::verify_creating(*k, *kind, input),
        Command::Verify(Verify::C2kfree { k, input }) => commands::verify_c2kfree(*k, input),
        Command::Reduce(Reduce::PathsToMatchings { k, input, out }) => commands::paths_to_matchings(*k, input, out),
        Command::Reduce(Reduce::Shrink { input, out }) => commands::shrink(input, out),
        Command::Search(a) => commands::search(a.quantity, a.n, a.k),
        Command::Count(Count::Matchings { input }) => commands::count_matchings(input),
        Command::Count(Count::Permanent { input }) => commands::count_permanent(input),
        Command::Check(Check::Lemma6 { input }) => commands::check_lemma6(input, decimal),
        Command::Check(Check::Claim4 { k, input }) => commands::check_claim4(*k, input),
        Command::Check(Check::Claim7 { m }) => commands::check_claim7(*m),
        Command::Bounds(a) => commands::bounds(a.k, a.kmax, decimal),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("global thread pool is configured once");
    }

    let start = Instant::now();
    let result = run(&cli.command, cli.decimal);
    let (code, report) = match result {
        Ok(report) => {
            print!("{}", report.stdout);
            (u8::from(report.violated), report)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (2, Report::default())
        }
    };
    let manifest = RunManifest::new(
        cli.command.name(),
        serde_json::to_value(&cli.command).expect("arguments serialize"),
        &report,
        start.elapsed(),
        code,
    );
    eprintln!("{}", manifest.to_json_line());
    ExitCode::from(code)
}
