//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit status: 0 on success, 1 on a failed verification, 2 on a
//! usage error.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chain::isomorphism_chain;
use crate::error::Error;
use crate::family::{self, FamilyBudget, DEFAULT_MAX_N};
use crate::graph::LabeledGraph;
use crate::perm::Permutation;
use crate::simplex;
use crate::suite::{self, DEFAULT_SUITE_MAX_N};
use crate::tableaux::{self, TableauRecord};
use crate::words;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rwgraph",
    version,
    about = "Reduced-word graphs, hook tableaux and lattice simplices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Permutation statistics
    #[command(subcommand)]
    Perm(PermCmd),
    /// Reduced words and move graphs
    #[command(subcommand)]
    Words(WordsCmd),
    /// The family [n,1,2,...,n-4,n-2,n-1,n-3]
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Hook-shaped row-strict tableaux
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// Lattice points of the dilated 2-simplex
    #[command(subcommand)]
    Simplex(SimplexCmd),
    /// Isomorphisms between the associated graphs
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Verification suite
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
enum PermCmd {
    /// Length, descents, cycle type and Lehmer code
    Info { perm: String },
}

#[derive(Debug, Subcommand)]
enum WordsCmd {
    /// List R(w), one word per line
    Enumerate {
        perm: String,
        /// Print only r(w)
        #[arg(long)]
        count_only: bool,
        /// Refuse to list more words than this
        #[arg(long, default_value_t = words::DEFAULT_WORD_CAP)]
        cap: u64,
    },
    /// The braid/commutation move graph of w
    Graph {
        perm: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long, default_value_t = words::DEFAULT_WORD_CAP)]
        cap: u64,
    },
}

#[derive(Debug, Args)]
struct Budget {
    /// Largest n enumerated exhaustively
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Debug, Subcommand)]
enum FamilyCmd {
    /// Compare closed forms with the brute-force move graph
    Verify {
        n: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Expand the published and derived generating series
    Series {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum TableauxCmd {
    /// Row-strict tableaux of shape (n-2,1,1)
    List {
        n: usize,
        #[arg(long)]
        recording_only: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum SimplexCmd {
    /// Lattice points of kΔ₂ with weights and fitted partitions
    Points {
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// The Gaussian binomial [k+2, 2]_q
    Gaussian { k: usize },
    /// The lattice cover graph
    Graph {
        k: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
}

#[derive(Debug, Subcommand)]
enum IsoCmd {
    /// Build the five graphs and verify the four explicit maps
    Chain {
        n: usize,
        /// Also print or write the graphs in this format
        #[arg(long, value_enum)]
        emit: Option<GraphFormat>,
        /// Write graphs, maps and summary into this directory
        #[arg(long)]
        outdir: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Run every check and print one line per criterion
    All {
        #[arg(long, default_value_t = DEFAULT_SUITE_MAX_N)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

impl GraphFormat {
    fn render(self, g: &LabeledGraph, name: &str) -> String {
        match self {
            GraphFormat::Dot => g.to_dot(name),
            GraphFormat::Json => g.to_json(),
        }
    }

    fn extension(self) -> &'static str {
        match self {
            GraphFormat::Dot => "dot",
            GraphFormat::Json => "json",
        }
    }
}

/// What went wrong in a command.
#[derive(Debug)]
enum Failure {
    Usage(String),
    /// A check ran and came out false; the report is already printed.
    Verification,
    /// A check aborted because an internal consistency assertion failed.
    Broken(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BijectionFailure(_) | Error::CriterionMismatch(_) => {
                Failure::Broken(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on `argv` (including the program name), writing to `out` and
/// `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAIL,
        Err(Failure::Broken(msg)) => {
            let _ = writeln!(err, "verification error: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Perm(PermCmd::Info { perm }) => perm_info(&perm, out),
        Command::Words(WordsCmd::Enumerate {
            perm,
            count_only,
            cap,
        }) => words_enumerate(&perm, count_only, cap, out),
        Command::Words(WordsCmd::Graph { perm, format, cap }) => {
            let w = parse_perm(&perm)?;
            let g = words::build_word_graph_capped(&w, cap)?;
            write!(out, "{}", format.render(&g, &format!("G_{w}")))?;
            Ok(())
        }
        Command::Family(FamilyCmd::Verify { n, json, budget }) => {
            let report = family::verify_family(
                n,
                FamilyBudget {
                    max_n: budget.max_n,
                },
            )?;
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{report}")?;
            }
            verdict(report.pass)
        }
        Command::Family(FamilyCmd::Series { max_n, json }) => {
            let report = family::generating_series_check(max_n)?;
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{report}")?;
            }
            verdict(report.derived_matches_predicted)
        }
        Command::Tableaux(TableauxCmd::List {
            n,
            recording_only,
            json,
        }) => tableaux_list(n, recording_only, json, out),
        Command::Simplex(cmd) => simplex_cmd(cmd, out),
        Command::Iso(IsoCmd::Chain {
            n,
            emit,
            outdir,
            budget,
        }) => iso_chain(n, emit, outdir, budget.max_n, out),
        Command::Verify(VerifyCmd::All { max_n, json }) => {
            let outcomes = suite::run_all(max_n);
            if json {
                writeln!(out, "{}", to_json(&outcomes))?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{o}")?;
                }
                let passed = outcomes.iter().filter(|o| o.pass).count();
                writeln!(out, "{passed}/{} criteria passed", outcomes.len())?;
            }
            verdict(outcomes.iter().all(|o| o.pass))
        }
    }
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn parse_perm(s: &str) -> std::result::Result<Permutation, Failure> {
    s.parse::<Permutation>().map_err(Failure::from)
}

fn set_string<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let body: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

fn tuple_string<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let body: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(","))
}

fn perm_info(s: &str, out: &mut dyn Write) -> Outcome {
    let w = parse_perm(s)?;
    let rows = [
        ("permutation", w.to_string()),
        ("length", w.length().to_string()),
        ("descents", set_string(w.descent_set())),
        ("ascents", set_string(w.ascent_set())),
        ("cycle type", w.cycle_type().to_string()),
        ("fixed points", set_string(w.fixed_points())),
        ("code", tuple_string(w.lehmer_code())),
        ("inverse", w.inverse().to_string()),
        ("grassmannian", w.is_grassmannian().to_string()),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<13}{v}")?;
    }
    Ok(())
}

fn words_enumerate(s: &str, count_only: bool, cap: u64, out: &mut dyn Write) -> Outcome {
    let w = parse_perm(s)?;
    if count_only {
        writeln!(out, "{}", words::count_reduced_words(&w)?)?;
        return Ok(());
    }
    for word in words::enumerate_reduced_words_capped(&w, cap)? {
        writeln!(out, "{}", words::word_key(&word, w.n()))?;
    }
    Ok(())
}

fn tableaux_list(n: usize, recording_only: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let records: Vec<TableauRecord> = tableaux::enumerate_rst(n)?
        .iter()
        .filter(|t| !recording_only || t.is_recording())
        .map(TableauRecord::from_hook)
        .collect();
    if json {
        writeln!(out, "{}", to_json(&records))?;
        return Ok(());
    }
    let width = records
        .iter()
        .map(|r| r.tableau.len())
        .max()
        .unwrap_or(0)
        .max(7);
    writeln!(
        out,
        "{:<width$}  {:<9}  {:<12}  rank",
        "tableau", "recording", "reading"
    )?;
    for r in &records {
        let reading = r.reading.as_deref().unwrap_or("-");
        let rank = r.rank.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<width$}  {:<9}  {:<12}  {rank}",
            r.tableau, r.recording, reading
        )?;
    }
    writeln!(out, "{} tableaux", records.len())?;
    Ok(())
}

#[derive(serde::Serialize)]
struct PointRecord {
    point: simplex::LatticePoint,
    weight: usize,
    partition: String,
    grassmannian: String,
}

fn simplex_cmd(cmd: SimplexCmd, out: &mut dyn Write) -> Outcome {
    match cmd {
        SimplexCmd::Points { k, json } => {
            let records = simplex::enumerate_lattice_points(k)
                .into_iter()
                .map(|p| {
                    let lambda = simplex::fitted_partition(&p);
                    Ok(PointRecord {
                        point: p,
                        weight: simplex::weight(&p),
                        grassmannian: tableaux::grassmannian_from_partition(&lambda, k + 2)?
                            .to_string(),
                        partition: lambda.to_string(),
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            if json {
                writeln!(out, "{}", to_json(&records))?;
            } else {
                writeln!(
                    out,
                    "{:<9}  {:<6}  {:<10}  grassmannian",
                    "point", "weight", "partition"
                )?;
                for r in &records {
                    writeln!(
                        out,
                        "{:<9}  {:<6}  {:<10}  {}",
                        r.point.to_string(),
                        r.weight,
                        r.partition,
                        r.grassmannian
                    )?;
                }
                writeln!(out, "{} points", records.len())?;
            }
            Ok(())
        }
        SimplexCmd::Gaussian { k } => {
            let g = simplex::gaussian_binomial_k2(k)?;
            writeln!(out, "[{} 2]_q = {}", k + 2, g.display("q"))?;
            writeln!(
                out,
                "slice counts: {}",
                tuple_string(simplex::slice_counts(k))
            )?;
            writeln!(out, "value at q = 1: {}", simplex::ehrhart(k))?;
            Ok(())
        }
        SimplexCmd::Graph { k, format } => {
            let g = simplex::build_lattice_graph(k)?;
            write!(out, "{}", format.render(&g, &format!("G_{k}Delta2")))?;
            Ok(())
        }
    }
}

fn iso_chain(
    n: usize,
    emit: Option<GraphFormat>,
    outdir: Option<PathBuf>,
    max_n: usize,
    out: &mut dyn Write,
) -> Outcome {
    let chain = isomorphism_chain(n, FamilyBudget { max_n })?;
    let summary = chain.report.to_string();
    write!(out, "{summary}")?;
    match (outdir, emit) {
        (Some(dir), emit) => {
            let format = emit.unwrap_or(GraphFormat::Json);
            std::fs::create_dir_all(&dir)?;
            for (name, g) in &chain.graphs {
                let path = dir.join(format!("{name}.{}", format.extension()));
                std::fs::write(path, format.render(g, name))?;
            }
            let maps: Vec<_> = chain
                .report
                .links
                .iter()
                .map(|l| serde_json::json!({ "from": l.from, "to": l.to, "map": l.map }))
                .collect();
            std::fs::write(dir.join("maps.json"), to_json(&maps) + "\n")?;
            std::fs::write(dir.join("summary.txt"), &summary)?;
            writeln!(out, "wrote {}", dir.display())?;
        }
        (None, Some(format)) => {
            for (name, g) in &chain.graphs {
                write!(out, "{}", format.render(g, name))?;
            }
        }
        (None, None) => {}
    }
    verdict(chain.report.pass)
}
