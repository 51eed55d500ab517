use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "rtamari", version, about = "r-Tamari posets, parking functions and trivariate diagonal harmonics")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Directory for cached Tamari posets.
    #[arg(long, global = true, env = "TAMARI_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Size {
    /// Height of the paths.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Slope parameter.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// r-Dyck paths of height n.
    Paths {
        #[command(flatten)]
        size: Size,
        /// Print only the number of paths.
        #[arg(long)]
        count: bool,
    },
    /// The r-Tamari poset: elements, interval polynomials and covers.
    Tamari {
        #[command(flatten)]
        size: Size,
        /// Also list every cover relation.
        #[arg(long)]
        covers: bool,
    },
    /// r-parking functions with shape, descent composition and dinv.
    Parking {
        #[command(flatten)]
        size: Size,
        /// Print only the number of parking functions.
        #[arg(long)]
        count: bool,
        /// Restrict to one shape, written as its values (e.g. 0024).
        #[arg(long)]
        shape: Option<String>,
    },
    /// Tri-graded harmonic spaces and their characters.
    Harmonics {
        /// Number of variables in each alphabet.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Hilbert series (the default report).
        #[arg(long)]
        hilbert: bool,
        /// Graded Frobenius characteristic.
        #[arg(long)]
        frobenius: bool,
        /// Use the closure of the Vandermonde determinant instead of the kernel.
        #[arg(long, conflicts_with = "higher")]
        closure: bool,
        /// Use the higher space H^(R).
        #[arg(long, value_name = "R", value_parser = clap::value_parser!(u32).range(1..))]
        higher: Option<u32>,
        /// Largest total degree computed.
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Iterates nabla on S_111.
    Nabla3 {
        #[arg(long)]
        r: u32,
        /// Specialize the coefficients at q = (1,1,1).
        #[arg(long)]
        at_q111: bool,
    },
    /// Checks identities exactly; exits 1 when any check fails.
    Verify {
        /// Identity names, or `all`.
        #[arg(default_value = "all")]
        names: Vec<String>,
        /// Restrict size-indexed identities to this n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        /// Restrict size-indexed identities to this r.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: Option<u32>,
        /// Include wall-clock seconds per report.
        #[arg(long)]
        timings: bool,
    },
}
