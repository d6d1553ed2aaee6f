mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use uvaldim::partition::Partition;
use uvaldim::ULabel;

use crate::output::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "uvaldim",
    version,
    about = "Branching rules and hermitian geometry for unitary-equivariant tensor valuations"
)]
struct Cli {
    /// Emit one JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check every value by an independent route; a disagreement exits 1.
    #[arg(long, global = true)]
    paranoid: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Remove the border strip of length h starting in the first column.
    Strip {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long)]
        h: usize,
    },
    /// Rewrite {mu; lambda} as a signed irreducible U(m) label.
    Normalize {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, required_unless_present = "label", conflicts_with = "label")]
        mu: Option<Partition>,
        #[arg(long, value_parser = parse_partition, required_unless_present = "label", conflicts_with = "label")]
        lambda: Option<Partition>,
        /// Label as `mu=<partition>;lambda=<partition>`.
        #[arg(long, value_parser = parse_label)]
        label: Option<ULabel>,
    },
    /// Restrict the O(2m) module [lambda] to U(m).
    Branch {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Show the expansion before modification.
        #[arg(long)]
        raw: bool,
    },
    /// Restrict the d-th symmetric power of R^{2m} to U(m).
    SymBranch {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: u32,
    },
    /// Multiplicity of {j; i} in the degree-k valuations.
    ValMult {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        i: u32,
    },
    /// dim (Val_k ⊗ Sym^d)^U(m), or dim Hom([e], Val_k) with --e.
    HomDim {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "e", conflicts_with = "e")]
        d: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
    },
    /// Dimension grid over every k and the given d values for fixed m.
    DimTable {
        #[arg(long)]
        m: usize,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5")]
        d: Vec<u32>,
    },
    /// Kähler cosines of a real subspace.
    Kahler(FrameArgs),
    /// Klain function of mu_{k,q} at a k-dimensional subspace.
    Klain {
        #[command(flatten)]
        frame: FrameArgs,
        #[arg(long)]
        q: usize,
    },
    /// Restricted centroid of Psi_{k,r} (or Delta_{k,p} with --delta) on T_q.
    Centroid {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, required_unless_present = "delta", conflicts_with = "delta")]
        r: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Rank certificate for the degree-k vector-valued basis; every k if omitted.
    Independence {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check every reference table.
    Reproduce {
        /// Directory of *.json tables; the built-in tables if omitted.
        #[arg(long)]
        fixtures: Option<std::path::PathBuf>,
    },
}

#[derive(Args, Debug)]
struct FrameArgs {
    #[arg(long)]
    m: usize,
    /// Vectors in (x_1..x_m, y_1..y_m) coordinates, separated by `;`.
    #[arg(long, value_parser = parse_vectors, allow_hyphen_values = true)]
    frame: Vectors,
    /// Orthonormalize the vectors instead of requiring an orthonormal frame.
    #[arg(long)]
    span: bool,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: uvaldim::Error| e.to_string())
}

fn parse_label(s: &str) -> Result<ULabel, String> {
    s.parse().map_err(|e: uvaldim::Error| e.to_string())
}

#[derive(Clone, Debug)]
struct Vectors(Vec<Vec<f64>>);

fn parse_vectors(s: &str) -> Result<Vectors, String> {
    s.split(';')
        .filter(|v| !v.trim().is_empty())
        .map(|v| {
            v.split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()
        .map(Vectors)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.paranoid) {
        Ok(report) => {
            report.emit(cli.json);
            if report.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
