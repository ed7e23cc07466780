use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::fail::Failure;

#[derive(Debug, Parser)]
#[command(name = "hx", version, about = "Exact computations in Iwahori-Hecke algebras")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Default, Args)]
pub struct Flags {
    /// JSON file supplying defaults for any of the flags below
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Cartan type such as A3, B4, G2, ~A2, ~G2, or a product like A1xB2
    #[arg(long = "type", global = true, value_name = "LABEL")]
    pub type_label: Option<String>,
    /// JSON Coxeter matrix; 0, null or "inf" mark infinite bonds
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "type_label")]
    pub matrix: Option<PathBuf>,
    /// Comma-separated generator weights, or `equal`
    #[arg(long, global = true, value_name = "a,b,...|equal")]
    pub weights: Option<String>,
    /// Element as comma-separated generator indices; `e` is the identity
    #[arg(long, global = true, value_name = "i,j,...")]
    pub element: Vec<String>,
    /// Ball radius for infinite groups
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    /// List elements up to this length (required for infinite groups)
    #[arg(long, global = true)]
    pub max_length: Option<usize>,
    /// JSON report (default)
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// CSV report
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write the report here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Check every triple even for large groups
    #[arg(long, global = true)]
    pub exhaustive: bool,
    /// Worker threads; defaults to the machine's parallelism
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of sampled triples when a check is not exhaustive
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Evaluate at most this many minimal-length members per class
    #[arg(long, global = true)]
    pub per_class: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, conjugacy classes, longest and Coxeter elements
    Group,
    /// Validate a weight function and compare with the weight catalog
    Weights,
    /// Kazhdan-Lusztig basis, structure constants and a-function
    #[command(subcommand)]
    Kl(KlCommand),
    /// The asymptotic ring J
    #[command(subcommand)]
    Jring(JringCommand),
    /// Probes of the T-basis structure constants
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Traces N^w and positive conjugacy classes (equal parameters)
    Positivity,
}

#[derive(Debug, Subcommand)]
pub enum KlCommand {
    /// KL elements c_w in the T-basis (all of W when no --element)
    Basis,
    /// Structure constants h_{x,y,z} for two --element values
    Hconst,
    /// The a-function with attaining pairs
    Afunction,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum JringCommand {
    /// Structure constants gamma of J
    Table,
    /// Associativity of J
    Check,
    /// Search for the unit of J
    Unit,
}

#[derive(Debug, Subcommand)]
pub enum HeckeCommand {
    /// Largest degree of f_{x,y,z}, over a ball for infinite groups
    Fprobe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Flags after merging the config file; flags win.
#[derive(Debug, Clone)]
pub struct Job {
    pub type_label: Option<String>,
    pub matrix: Option<PathBuf>,
    pub weights: Option<String>,
    pub elements: Vec<String>,
    pub radius: Option<usize>,
    pub max_length: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub exhaustive: bool,
    pub jobs: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
    pub per_class: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    #[serde(rename = "type")]
    type_label: Option<String>,
    matrix: Option<PathBuf>,
    weights: Option<String>,
    element: Option<Vec<String>>,
    radius: Option<usize>,
    max_length: Option<usize>,
    format: Option<String>,
    out: Option<PathBuf>,
    exhaustive: Option<bool>,
    jobs: Option<usize>,
    seed: Option<u64>,
    samples: Option<usize>,
    per_class: Option<usize>,
}

fn read_config(path: &Path) -> Result<FileConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("bad config {}: {e}", path.display())))
}

impl Flags {
    pub fn resolve(self) -> Result<Job, Failure> {
        let file = match &self.config {
            Some(p) => read_config(p)?,
            None => FileConfig::default(),
        };
        let format = if self.csv {
            Format::Csv
        } else if self.json {
            Format::Json
        } else {
            match file.format.as_deref() {
                None | Some("json") => Format::Json,
                Some("csv") => Format::Csv,
                Some(other) => return Err(Failure::Usage(format!("unknown format `{other}`"))),
            }
        };
        // a type on the command line displaces a matrix from the config and vice versa
        let (type_label, matrix) = match (self.type_label, self.matrix) {
            (None, None) => (file.type_label, file.matrix),
            (t, m) => (t, m),
        };
        Ok(Job {
            type_label,
            matrix,
            weights: self.weights.or(file.weights),
            elements: if self.element.is_empty() { file.element.unwrap_or_default() } else { self.element },
            radius: self.radius.or(file.radius),
            max_length: self.max_length.or(file.max_length),
            format,
            out: self.out.or(file.out),
            exhaustive: self.exhaustive || file.exhaustive.unwrap_or(false),
            jobs: self.jobs.or(file.jobs),
            seed: self.seed.or(file.seed).unwrap_or(0),
            samples: self.samples.or(file.samples),
            per_class: self.per_class.or(file.per_class),
        })
    }
}
