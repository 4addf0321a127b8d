//! The `imcg` command-line front end.
//!
//! Standard output carries one verdict line (`ok`, `exists t=<t>`,
//! `not-exists`, `capped`, or `invalid` from `validate`); everything else
//! goes to standard error. Exit codes: 0 success or exists, 1 not-exists,
//! 2 input or usage error, 3 capped, 4 internal invariant failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algorithms;
use crate::coloring::{self, Color, EdgeColoring, VertexSet};
use crate::error::Error;
use crate::format::{self, GraphFile};
use crate::gadgets;
use crate::graph::{Bipartition, Multigraph, Part, VertexId};
use crate::oracle::{self, SearchLimits, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EXISTS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPPED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "imcg",
    version,
    about = "Interval and continuous edge colorings of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a coloring against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// all, part1, part2 or list:<ids>; defaults to all for proper mode.
        #[arg(long)]
        part: Option<String>,
        #[arg(long)]
        t: Color,
    },
    /// Build a coloring of a bipartite graph.
    Color {
        #[arg(long, value_enum)]
        alg: Alg,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Interval coloring on part 1 with exactly t colors.
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: Color,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Exhaustive queries.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        compute: Compute,
        #[arg(long)]
        part: Option<String>,
        #[arg(long)]
        t: Option<Color>,
        #[arg(long, default_value_t = oracle::DEFAULT_NODE_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Lift the edge-count guard on the search.
        #[arg(long)]
        allow_large: bool,
    },
    /// Build the reduction graph of a list-coloring instance.
    Gadget {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pre: PathBuf,
        #[arg(short = 'o')]
        output: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Fold an interval coloring on V(G) onto Δ colors.
    Compress {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// One step down for regular graphs: t -> t-1.
    Downshift {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Write one file per bipartite multigraph up to isomorphism.
    Enumerate {
        #[arg(long)]
        max_n1: usize,
        #[arg(long)]
        max_n2: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(short = 'o')]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Proper,
    Interval,
    Continuous,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Alg {
    Theorem4,
    Sequential,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Compute {
    #[value(name = "w")]
    Least,
    #[value(name = "W")]
    Greatest,
    Chi,
    Member,
    Exists,
}

/// Outcome of a command before it is printed.
enum Outcome {
    Ok,
    Exists(Color),
    NotExists,
    Invalid(String),
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut out = std::io::stdout().lock();
    match dispatch(cli.command) {
        Ok(Outcome::Ok) => verdict(&mut out, "ok", EXIT_OK),
        Ok(Outcome::Exists(t)) => verdict(&mut out, &format!("exists t={t}"), EXIT_OK),
        Ok(Outcome::NotExists) => verdict(&mut out, "not-exists", EXIT_NOT_EXISTS),
        Ok(Outcome::Invalid(why)) => {
            eprintln!("imcg: {why}");
            verdict(&mut out, "invalid", EXIT_NOT_EXISTS)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("imcg: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Lib(e)) => {
            eprintln!("imcg: {e}");
            match e {
                Error::Capped { .. } => verdict(&mut out, "capped", EXIT_CAPPED),
                Error::Invariant(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn verdict(out: &mut impl Write, line: &str, code: i32) -> i32 {
    let _ = writeln!(out, "{line}");
    code
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<GraphFile, Failure> {
    format::parse_graph(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, g: &Multigraph) -> std::result::Result<EdgeColoring, Failure> {
    let c = format::parse_coloring(&read(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    EdgeColoring::for_graph(g, c.into_colors()).map_err(Failure::from)
}

fn bipartition(file: &GraphFile) -> std::result::Result<&Bipartition, Failure> {
    file.bipartition
        .as_ref()
        .ok_or_else(|| Failure::Usage("graph file has no bipartition line".into()))
}

/// Parses the `--part` value into a vertex set.
fn parse_part(value: &str, file: &GraphFile) -> std::result::Result<VertexSet, Failure> {
    let g = &file.graph;
    match value {
        "all" => Ok(VertexSet::all(g)),
        "part1" => Ok(VertexSet::part(bipartition(file)?, Part::One)),
        "part2" => Ok(VertexSet::part(bipartition(file)?, Part::Two)),
        _ => {
            let ids = value
                .strip_prefix("list:")
                .ok_or_else(|| Failure::Usage(format!("bad --part value '{value}'")))?;
            let ids = ids
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.trim().parse::<usize>().map(VertexId))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad vertex list in --part '{value}'")))?;
            Ok(VertexSet::from_ids(g, ids)?)
        }
    }
}

fn required_part(part: Option<&str>, file: &GraphFile) -> std::result::Result<VertexSet, Failure> {
    match part {
        Some(p) => parse_part(p, file),
        None => Err(Failure::Usage("--part is required for this mode".into())),
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Validate {
            graph,
            coloring,
            mode,
            part,
            t,
        } => {
            let file = load_graph(&graph)?;
            let c = load_coloring(&coloring, &file.graph)?;
            let g = &file.graph;
            let check = match mode {
                Mode::Proper => {
                    let _ = part.as_deref().map(|p| parse_part(p, &file)).transpose()?;
                    coloring::check_proper(g, &c).and_then(|()| match c.max_color() {
                        Some(max) if max > t => Err(coloring::Violation::MaxColor { max, t }),
                        _ => Ok(()),
                    })
                }
                Mode::Interval => {
                    coloring::check_interval_on(g, &c, &required_part(part.as_deref(), &file)?, t)
                }
                Mode::Continuous => {
                    coloring::check_continuous_on(g, &c, &required_part(part.as_deref(), &file)?, t)
                }
            };
            Ok(match check {
                Ok(()) => Outcome::Ok,
                Err(v) => Outcome::Invalid(v.to_string()),
            })
        }
        Command::Color { alg, graph, output } => {
            let file = load_graph(&graph)?;
            let bip = bipartition(&file)?;
            let c = match alg {
                Alg::Theorem4 => algorithms::continuous_on_part(&file.graph, bip)?,
                Alg::Sequential => algorithms::sequential_max_coloring(&file.graph, bip)?,
            };
            write(&output, &format::serialize_coloring(&c))?;
            Ok(Outcome::Ok)
        }
        Command::Spectrum { graph, t, output } => {
            let file = load_graph(&graph)?;
            let bip = bipartition(&file)?;
            match algorithms::realize_spectrum(&file.graph, bip, t, &SearchLimits::default()) {
                Ok(r) => {
                    for d in &r.diagnostics {
                        eprintln!("imcg: {d}");
                    }
                    if r.fallbacks > 0 {
                        eprintln!("imcg: {} oracle fallback(s) during step-up", r.fallbacks);
                    }
                    write(&output, &format::serialize_coloring(&r.coloring))?;
                    Ok(Outcome::Exists(t))
                }
                Err(e @ Error::OutOfRange { .. }) => {
                    eprintln!("imcg: {e}");
                    Ok(Outcome::NotExists)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Oracle {
            graph,
            compute,
            part,
            t,
            cap,
            jobs,
            allow_large,
        } => {
            let file = load_graph(&graph)?;
            let g = &file.graph;
            let mut limits = SearchLimits::default().with_cap(cap).with_jobs(jobs);
            if allow_large {
                limits = limits.with_max_edges(usize::MAX);
            }
            let r = match part.as_deref() {
                Some(p) => parse_part(p, &file)?,
                None => VertexSet::all(g),
            };
            run_oracle(g, compute, &r, t, &limits)
        }
        Command::Gadget {
            graph,
            pre,
            output,
            trace,
        } => {
            let file = load_graph(&graph)?;
            let bip = bipartition(&file)?;
            let pre = format::parse_preassignment(&read(&pre)?)?;
            let red = gadgets::build_reduction(&file.graph, bip, &pre)?;
            write(
                &output,
                &format::serialize_graph(&red.g, Some(&red.g_bipartition)),
            )?;
            if let Some(tr) = trace {
                write(&tr, &format::serialize_trace(&red.trace))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Compress {
            graph,
            coloring,
            output,
        } => {
            let file = load_graph(&graph)?;
            let c = load_coloring(&coloring, &file.graph)?;
            let out = algorithms::compress_to_delta(&file.graph, &c)?;
            write(&output, &format::serialize_coloring(&out))?;
            Ok(Outcome::Ok)
        }
        Command::Downshift {
            graph,
            coloring,
            output,
        } => {
            let file = load_graph(&graph)?;
            let c = load_coloring(&coloring, &file.graph)?;
            let out = algorithms::regular_step_down(&file.graph, &c)?;
            write(&output, &format::serialize_coloring(&out))?;
            Ok(Outcome::Ok)
        }
        Command::Enumerate {
            max_n1,
            max_n2,
            max_m,
            output,
        } => {
            fs::create_dir_all(&output)
                .map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
            let mult = u8::try_from(max_m.max(1)).unwrap_or(u8::MAX);
            let corpus = oracle::bipartite_corpus(max_n1, max_n2, max_m, mult);
            for (i, (g, bip)) in corpus.iter().enumerate() {
                write(
                    &output.join(format!("g{:06}.imcg", i + 1)),
                    &format::serialize_graph(g, Some(bip)),
                )?;
            }
            eprintln!(
                "imcg: wrote {} graphs to {}",
                corpus.len(),
                output.display()
            );
            Ok(Outcome::Ok)
        }
    }
}

fn run_oracle(
    g: &Multigraph,
    compute: Compute,
    r: &VertexSet,
    t: Option<Color>,
    limits: &SearchLimits,
) -> CmdResult {
    let decided = |verdict: Verdict, t: Option<Color>, nodes: u64| match verdict {
        Verdict::Exists => Ok(Outcome::Exists(t.unwrap_or(0))),
        Verdict::NotExists => Ok(Outcome::NotExists),
        Verdict::Capped => Err(Failure::Lib(Error::Capped { nodes })),
    };
    match compute {
        Compute::Least | Compute::Greatest => {
            let res = oracle::least_interval(g, r, limits)?;
            if !matches!(compute, Compute::Greatest) || res.verdict != Verdict::Exists {
                let w = res.witness.as_ref().and_then(EdgeColoring::max_color);
                return decided(res.verdict, w, res.nodes_explored);
            }
            let stats = oracle::interval_stats(g, r, limits)?;
            decided(Verdict::Exists, stats.big_w(), stats.nodes_explored)
        }
        Compute::Chi => {
            let chi = oracle::chromatic_index(g, limits)?;
            Ok(Outcome::Exists(chi.value))
        }
        Compute::Member => {
            let res = oracle::membership(g, limits)?;
            let t = res.witness.as_ref().and_then(EdgeColoring::max_color);
            decided(res.verdict, t, res.nodes_explored)
        }
        Compute::Exists => {
            let t = t.ok_or_else(|| Failure::Usage("--compute exists needs --t".into()))?;
            let res = oracle::solve_interval_on(g, r, t, limits)?;
            decided(res.verdict, Some(t), res.nodes_explored)
        }
    }
}
