//! The `glstab` command line: one subcommand per computation, each writing
//! a deterministic TSV, JSON or ASCII-chart artifact.
//!
//! Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 internal
//! invariant violation.

mod commands;
mod error;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;

/// Largest cobar grading the CLI will request.
pub const COBAR_G_LIMIT: usize = 26;
/// Largest `g` and `d` accepted by `wbasis`.
pub const WBASIS_LIMIT: u32 = 16;
/// Largest period index accepted by `families`.
pub const FAMILIES_MAX_I: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "glstab", version, about = "Exact mod-2 computations around the homology of GL_n(F2)")]
pub struct Cli {
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Tsv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ChartOpts {
    /// Output format; charts default to ASCII.
    #[arg(long, value_enum, default_value = "ascii")]
    pub format: Format,
    /// Also write a static SVG chart to this path.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct TableOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Chart of Cotor of a coalgebra: `a1`, `cgl` or a JSON table file.
    /// TSV columns: g, d, dim, class_names.
    Cotor {
        #[arg(long, default_value = "a1")]
        algebra: String,
        #[arg(long, default_value_t = 17)]
        gmax: usize,
        #[arg(long, default_value_t = 10)]
        dmax: usize,
        #[command(flatten)]
        chart: ChartOpts,
    },
    /// Homology of the cone on h10 over A(1)_* with the h10 and h11
    /// actions. TSV columns: g, d, dim, h10, h11 (images of each basis
    /// element as coordinate strings).
    Cone {
        #[arg(long, default_value_t = 7)]
        gmax: usize,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[command(flatten)]
        chart: ChartOpts,
    },
    /// Pages of the augmentation-filtration spectral sequence for A(1)_*.
    /// TSV columns: r, g, d, f, dim, representative; with `--differentials`:
    /// r, g, d, f, target_f, matrix; with `--einfty`: g, d, filtrations,
    /// stable_page, cotor_dim.
    May {
        #[arg(long, default_value_t = 14)]
        gmax: usize,
        #[arg(long, default_value_t = 10)]
        dmax: usize,
        #[arg(long, default_value_t = 1)]
        page: usize,
        #[arg(long, conflicts_with = "einfty")]
        differentials: bool,
        #[arg(long)]
        einfty: bool,
        #[command(flatten)]
        chart: ChartOpts,
    },
    /// Normal form of a Dyer-Lashof expression such as `Q[2](s*Q[1](s))`.
    Adem {
        expr: String,
        #[command(flatten)]
        table: TableOpts,
    },
    /// Dual Steenrod operations Sq^r_* of an expression. TSV columns: r,
    /// value.
    Nishida {
        expr: String,
        /// Only this r; by default every r from 0 to the degree d.
        #[arg(long)]
        r: Option<u32>,
        #[command(flatten)]
        table: TableOpts,
    },
    /// Free and quotient dimensions of a W-infinity algebra. TSV columns:
    /// g, d, free, ideal, quotient (and basis with `--list`).
    Wbasis {
        /// Comma-separated generator names from s, n1, n2, b.
        #[arg(long, default_value = "s")]
        gens: String,
        /// A relation generating the ideal; repeatable.
        #[arg(long = "relation")]
        relations: Vec<String>,
        #[arg(long, default_value_t = 6)]
        gmax: u32,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        table: TableOpts,
    },
    /// E1 basis modulo sigma and the survivor report at (g, d, f). TSV
    /// columns: reading, g, d, f, p, class, status, killed_by.
    Cellss {
        #[arg(long, default_value_t = 12)]
        g: u32,
        #[arg(long, default_value_t = 8)]
        d: u32,
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        f: i64,
        /// Declaration file; the shipped declarations by default.
        #[arg(long)]
        declarations: Option<PathBuf>,
        /// Also apply the supplementary declarations.
        #[arg(long)]
        supplementary: bool,
        #[command(flatten)]
        table: TableOpts,
    },
    /// Stability Hopf algebra of a cell specification (built-in `cgl`,
    /// `y1`, or a file). JSON schema `delta-presentation/1`; TSV columns:
    /// cell, rule, detail.
    Delta {
        #[arg(default_value = "cgl")]
        spec: String,
        #[arg(long, default_value_t = 5)]
        bound: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Mod-2 homology of a finite group and maps induced by homomorphisms.
    /// TSV columns: group, d, dim; with `--map`:
    /// map, d, source_dim, target_dim, rank, matrix.
    Grouphom {
        /// A built-in group name or, with `--group-file`, a display name.
        #[arg(long, default_value = "GL(2,2)")]
        group: String,
        /// Generators in 1-based cycle notation, one per line.
        #[arg(long)]
        group_file: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        /// `stabilization`, `ut-inclusion` or `perm-matrices`, with `--n`.
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        table: TableOpts,
    },
    /// The periodic families with their detecting classes. TSV columns:
    /// name, kind, g, d, detecting_class, evidence, verified, note.
    Families {
        #[arg(long, default_value_t = 1)]
        max_i: usize,
        #[command(flatten)]
        table: TableOpts,
    },
}

/// What a run produces: the main artifact and an optional SVG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifacts {
    pub text: String,
    pub svg: Option<String>,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
}

/// Executes one subcommand.
pub fn run(command: &Command) -> Result<Artifacts, CliError> {
    commands::dispatch(command)
}
