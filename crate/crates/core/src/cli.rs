//! Command-line front end behind the `szeged` binary.
//!
//! [`run`] takes parsed arguments and standard input and returns what should
//! go to standard output, or a [`CliError`] carrying the exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::graph::Graph;
use crate::indices::{class_quotients, weighted_suite_cut, IndexReport};
use crate::molgen::{build_benzenoid, build_phenylene, linear_phenylene, parse_labels, HexSpec};
use crate::oracle::oracle_suite;
use crate::quotient::WeightAssignment;
use crate::theta::{theta_star_partition, EdgePartition};

#[derive(Debug, Parser)]
#[command(
    name = "szeged",
    version,
    about = "Weighted Szeged and PI indices by the cut method"
)]
pub struct RunConfig {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Cut,
    Direct,
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionSource {
    ThetaStar,
    Labels,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, clap::Args)]
pub struct PartitionArgs {
    /// Where the edge partition for the cut method comes from.
    #[arg(long, value_enum, default_value = "theta-star")]
    pub partition: PartitionSource,
    /// `edge_id label` or `edge_id class_id` file for `labels` / `file`.
    #[arg(long)]
    pub partition_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute wSz, wPI_v, wSz_e and wPI of an edge-list graph.
    Index {
        /// Edge-list file; standard input when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "cut")]
        method: MethodArg,
        #[command(flatten)]
        partition: PartitionArgs,
        /// Use deg(u)·deg(v) in place of deg(u) + deg(v).
        #[arg(long)]
        starred: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the Theta*-classes, one class of `u-v` tokens per line.
    Theta { input: Option<PathBuf> },
    /// Print the weighted quotient graph of every partition class.
    Quotient {
        input: Option<PathBuf>,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long)]
        starred: bool,
    },
    /// Generate molecular graphs as edge lists.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
        /// Write `<prefix>.edges` and `<prefix>.labels` instead of printing.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Time the cut method against the direct evaluation; CSV on stdout.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![100, 1000, 10000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Skip the direct evaluation above this many hexagons.
        #[arg(long, default_value_t = 1000)]
        direct_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Benzenoid system from a `q r` hexagon file.
    Benzenoid { cells: PathBuf },
    /// Phenylene from a catacondensed `q r` hexagon file.
    Phenylene { cells: PathBuf },
    /// Linear phenylene with `n` hexagons.
    Ph { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. } | Error::BadWeight(_) => 2,
            Error::Disconnected => 3,
            Error::InvalidCPartition => 4,
            _ => 1,
        };
        CliError {
            code,
            message: format!("error: {err}"),
        }
    }
}

pub const EXIT_MISMATCH: i32 = 5;
pub const EXIT_IO: i32 = 6;

fn io_error(path: &Path, err: std::io::Error) -> CliError {
    CliError {
        code: EXIT_IO,
        message: format!("error: {}: {err}", path.display()),
    }
}

fn read_text(path: Option<&Path>, stdin: &str) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| io_error(p, e)),
        None => Ok(stdin.to_string()),
    }
}

fn load_partition(g: &Graph, args: &PartitionArgs) -> Result<EdgePartition, CliError> {
    let file_text = || -> Result<String, CliError> {
        let path = args.partition_file.as_deref().ok_or_else(|| CliError {
            code: 2,
            message: "error: --partition-file is required for this partition source".into(),
        })?;
        read_text(Some(path), "")
    };
    let p = match args.partition {
        PartitionSource::ThetaStar => return Ok(theta_star_partition(g)?),
        PartitionSource::Labels => {
            EdgePartition::from_labels(&parse_labels(&file_text()?, g.edge_count())?)
        }
        PartitionSource::File => EdgePartition::parse(&file_text()?, g.edge_count())?,
    };
    Ok(p.certify(g)?)
}

fn render(report: &IndexReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

fn median_seconds(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn bench(sizes: &[usize], reps: usize, direct_max: usize) -> Result<String, CliError> {
    let mut out = String::from("family,hexagons,vertices,edges,method,median_seconds\n");
    for &n in sizes {
        let families = [
            ("phenylene", linear_phenylene(n.max(2))?),
            (
                "benzenoid_chain",
                build_benzenoid(&HexSpec::linear_chain(n)?)?,
            ),
        ];
        for (family, mol) in &families {
            let g = &mol.graph;
            let (v, e) = (g.vertex_count(), g.edge_count());
            let cut = median_seconds(reps, || {
                mol.suite(false).expect("generated molecules are connected");
            });
            let _ = writeln!(out, "{family},{n},{v},{e},cut,{cut:.6}");
            if n <= direct_max {
                let direct = median_seconds(reps, || {
                    oracle_suite(g, false).expect("generated molecules are connected");
                });
                let _ = writeln!(out, "{family},{n},{v},{e},direct,{direct:.6}");
            }
        }
    }
    Ok(out)
}

fn write_generated(
    mol: &crate::molgen::DirectionLabeledGraph,
    output: Option<&Path>,
) -> Result<String, CliError> {
    let mut edges = String::new();
    if mol.nonstandard_region {
        edges.push_str("# nonstandard_region\n");
    }
    edges.push_str(&mol.graph.to_edge_list());
    match output {
        None => Ok(edges),
        Some(prefix) => {
            let edge_path = prefix.with_extension("edges");
            let label_path = prefix.with_extension("labels");
            std::fs::write(&edge_path, edges).map_err(|e| io_error(&edge_path, e))?;
            std::fs::write(&label_path, mol.labels_text()).map_err(|e| io_error(&label_path, e))?;
            Ok(String::new())
        }
    }
}

fn dispatch(config: &RunConfig, stdin: &str) -> Result<String, CliError> {
    match &config.command {
        Command::Index {
            input,
            method,
            partition,
            starred,
            format,
        } => {
            let g = Graph::parse_edge_list(&read_text(input.as_deref(), stdin)?)?;
            let report = match method {
                MethodArg::Direct => oracle_suite(&g, *starred)?,
                MethodArg::Cut => {
                    g.require_connected()?;
                    weighted_suite_cut(&g, &load_partition(&g, partition)?, *starred)?
                }
                MethodArg::Compare => {
                    g.require_connected()?;
                    let cut = weighted_suite_cut(&g, &load_partition(&g, partition)?, *starred)?;
                    let direct = oracle_suite(&g, *starred)?;
                    if cut.values() != direct.values() {
                        return Err(CliError {
                            code: EXIT_MISMATCH,
                            message: format!(
                                "error: cut {:?} and direct {:?} disagree",
                                cut.values(),
                                direct.values()
                            ),
                        });
                    }
                    cut
                }
            };
            Ok(render(&report, *format))
        }
        Command::Theta { input } => {
            let g = Graph::parse_edge_list(&read_text(input.as_deref(), stdin)?)?;
            Ok(theta_star_partition(&g)?.describe(&g))
        }
        Command::Quotient {
            input,
            partition,
            starred,
        } => {
            let g = Graph::parse_edge_list(&read_text(input.as_deref(), stdin)?)?;
            g.require_connected()?;
            let p = load_partition(&g, partition)?;
            let wa = WeightAssignment::for_suite(&g, *starred);
            let mut out = String::new();
            for (i, q) in class_quotients(&g, &wa, &p)?.iter().enumerate() {
                let _ = writeln!(out, "# class {i}: {} edges", q.class().len());
                out.push_str(&q.to_annotated_text());
            }
            Ok(out)
        }
        Command::Gen { what, output } => {
            let mol = match what {
                GenCommand::Benzenoid { cells } => {
                    build_benzenoid(&HexSpec::parse(&read_text(Some(cells), "")?)?)?
                }
                GenCommand::Phenylene { cells } => {
                    build_phenylene(&HexSpec::parse(&read_text(Some(cells), "")?)?)?
                }
                GenCommand::Ph { n } => linear_phenylene(*n)?,
            };
            write_generated(&mol, output.as_deref())
        }
        Command::Bench {
            sizes,
            reps,
            direct_max,
        } => bench(sizes, *reps, *direct_max),
    }
}

/// Runs one command, on a dedicated pool when `--threads` is given.
pub fn run(config: &RunConfig, stdin: &str) -> Result<String, CliError> {
    match config.threads {
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| CliError {
                    code: 1,
                    message: format!("error: thread pool: {e}"),
                })?;
            pool.install(|| dispatch(config, stdin))
        }
        None => dispatch(config, stdin),
    }
}

/// Whether the command reads a graph from standard input.
pub fn needs_stdin(config: &RunConfig) -> bool {
    match &config.command {
        Command::Index { input, .. }
        | Command::Theta { input }
        | Command::Quotient { input, .. } => input.is_none(),
        _ => false,
    }
}
