//! Batch command line.
//!
//! Exit codes: 0 on success (including an empty result), 1 for usage and
//! query syntax errors, 2 for data errors (unreadable or malformed graph
//! files, unknown vertices, labels or edges).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};
use mrgraph_core::algebra::complete_paths;
use mrgraph_core::engine::{generate, project_label, project_paths, recognize};
use mrgraph_core::regex::{compile_nfa, parse_query};
use mrgraph_core::{EngineError, GenerationConfig, Graph, ParseError, Path, PathSet};
use thiserror::Error;

use crate::edgelist::{load_graph, LoadError};

#[derive(Debug, Parser)]
#[command(
    name = "mrgraph",
    version,
    about = "Regular path queries over multi-relational graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every path matching an expression, one per line.
    Query {
        /// TAB-separated edge-list file.
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Path expression.
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// Longest path to emit; required when the expression has a star.
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        /// Print only the number of matching paths.
        #[arg(long, conflicts_with = "endpoints")]
        count: bool,
        /// Print the distinct `tail<TAB>head` endpoint pairs instead of paths.
        #[arg(long)]
        endpoints: bool,
    },
    /// Check whether one path matches an expression.
    Recognize {
        /// TAB-separated edge-list file.
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Path expression.
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// Edges as `t,l,h;t,l,h;...`; an empty string is the empty path.
        #[arg(long, allow_hyphen_values = true)]
        path: String,
    },
    /// Write a single-relational `tail<TAB>head` edge file.
    #[command(group(ArgGroup::new("source").required(true).args(["expr", "label"])))]
    Project {
        /// TAB-separated edge-list file.
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Path expression.
        #[arg(short = 'e', long = "expr")]
        expr: Option<String>,
        /// Longest path to consider for `--expr`.
        #[arg(long = "max-len", requires = "expr")]
        max_len: Option<usize>,
        /// Project the edges carrying this label.
        #[arg(long)]
        label: Option<String>,
        /// Output file.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Print every joint path of exactly N edges.
    Complete {
        /// TAB-separated edge-list file.
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        /// Path length, at least 1.
        #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("query syntax error at {0}")]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Syntax(_) | CliError::Engine(EngineError::Unbounded) => {
                1
            }
            CliError::Load(_) | CliError::Engine(_) | CliError::Io(_) => 2,
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                1
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn bound_paths(graph: &Graph, expr: &str, max_len: Option<usize>) -> Result<PathSet, CliError> {
    let nfa = compile_nfa(&parse_query(expr)?);
    Ok(generate(graph, &nfa, &GenerationConfig { max_len })?)
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Query {
            graph,
            expr,
            max_len,
            count,
            endpoints,
        } => {
            // Parse before loading so syntax errors win over data errors.
            let parsed = parse_query(&expr)?;
            let graph = load_graph(&graph)?;
            let nfa = compile_nfa(&parsed);
            let paths = generate(&graph, &nfa, &GenerationConfig { max_len })?;
            if count {
                writeln!(out, "{}", paths.len())?;
            } else if endpoints {
                out.write_all(project_paths(&paths)?.to_tsv(&graph).as_bytes())?;
            } else {
                write_paths(&graph, &paths, out)?;
            }
        }
        Command::Recognize { graph, expr, path } => {
            let parsed = parse_query(&expr)?;
            let graph = load_graph(&graph)?;
            let path = parse_path_arg(&graph, &path)?;
            let accepted = recognize(&graph, &compile_nfa(&parsed), &path)?;
            writeln!(out, "{accepted}")?;
        }
        Command::Project {
            graph,
            expr,
            max_len,
            label,
            out: file,
        } => {
            if let Some(expr) = &expr {
                parse_query(expr)?;
            }
            let graph = load_graph(&graph)?;
            let pairs = match (expr, label) {
                (Some(expr), None) => project_paths(&bound_paths(&graph, &expr, max_len)?)?,
                (None, Some(label)) => project_label(&graph, &label)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --expr or --label".into(),
                    ))
                }
            };
            fs::write(&file, pairs.to_tsv(&graph))?;
        }
        Command::Complete { graph, n } => {
            let graph = load_graph(&graph)?;
            write_paths(&graph, &complete_paths(&graph, n as usize), out)?;
        }
    }
    Ok(())
}

fn write_paths(graph: &Graph, paths: &PathSet, out: &mut dyn Write) -> io::Result<()> {
    let mut buf = io::BufWriter::new(out);
    for p in paths {
        writeln!(buf, "{}", graph.display_path(p))?;
    }
    buf.flush()
}

/// Parses `t,l,h;t,l,h;...`. Each edge may be wrapped in `<…>` or `(…)`.
pub fn parse_path_arg(graph: &Graph, text: &str) -> Result<Path, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Path::epsilon());
    }
    text.split(';')
        .map(|segment| {
            let s = segment.trim();
            let s = s
                .strip_prefix('<')
                .and_then(|s| s.strip_suffix('>'))
                .or_else(|| s.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
                .unwrap_or(s);
            let parts: Vec<&str> = s.split(',').map(str::trim).collect();
            match parts[..] {
                [t, l, h] => Ok(graph
                    .edge(t, l, h)
                    .map_err(|e| CliError::Engine(e.into()))?),
                _ => Err(CliError::Usage(format!(
                    "malformed path edge `{segment}`; expected `tail,label,head`"
                ))),
            }
        })
        .collect()
}
