use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chainthm::chains::{find_chain, verify_chain, Chain, ChainError, TheoremId};
use chainthm::connectivity::{find_separation_below, find_quasi_violation, find_weak_violation, is_internally_4c_cubic};
use chainthm::enumeration::{
    generate_from_base, read_graph_lines, verify_lemma, verify_theorem, write_catalog, GenerationMode, LemmaId,
    VerificationReport,
};
use chainthm::families::recognize;
use chainthm::Graph;
use clap::{Parser, Subcommand, ValueEnum};

/// Exit status for a usage or input error.
const INPUT_ERROR: u8 = 2;
/// Environment variable holding the worker count.
const WORKERS_VAR: &str = "CHAINTHM_WORKERS";

#[derive(Parser)]
#[command(name = "chainthm", version, about = "Connectivity checks and reduction chains for small graphs")]
struct Cli {
    /// Accepted for harness compatibility; nothing here is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test every graph in a graph6 file for a connectivity class.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// List the family memberships of every graph in a graph6 file.
    Recognize { file: PathBuf },
    /// Build a reduction chain for every graph in a graph6 file.
    Chain {
        file: PathBuf,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        /// Write the chain here instead of standard output (single-graph input only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a chain file and report every violated condition.
    VerifyChain { file: PathBuf },
    /// Exhaustively check a chain theorem up to a vertex bound.
    VerifyTheorem {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long)]
        max_n: usize,
    },
    /// Exhaustively check a lemma up to a vertex bound.
    VerifyLemma {
        #[arg(long, value_parser = parse_lemma)]
        id: LemmaId,
        #[arg(long)]
        max_n: usize,
    },
    /// Grow a theorem's class from its targets and write a catalog.
    Generate {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_parser = parse_mode, default_value = "class-checked")]
        mode: GenerationMode,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    #[value(name = "3c")]
    ThreeConnected,
    #[value(name = "4c")]
    FourConnected,
    #[value(name = "w4c")]
    Weak,
    #[value(name = "q4c")]
    Quasi,
    #[value(name = "i4c-cubic")]
    InternallyCubic,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::from_tag(s).ok_or_else(|| format!("unknown theorem `{s}` (expected tutte+, 4c, w4c or q4c)"))
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<GenerationMode, String> {
    s.parse()
}

/// Error that ends the run with status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<bool, InputError>;

fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, InputError> {
    read_graph_lines(&read_text(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// `None` when the class holds, else a reason or witness.
fn class_failure(g: &Graph, class: Class) -> Option<String> {
    let below = |k| find_separation_below(g, k).map(|s| s.to_string());
    match class {
        Class::ThreeConnected => below(3),
        Class::FourConnected => below(4),
        Class::Weak => below(3).or_else(|| find_weak_violation(g).map(|s| s.to_string())),
        Class::Quasi => below(3).or_else(|| find_quasi_violation(g).map(|s| s.to_string())),
        Class::InternallyCubic => {
            if g.order() < 6 || !g.is_regular(3) {
                Some("not cubic on at least six vertices".to_string())
            } else if g.size() > 64 {
                Some("line graph exceeds the vertex bound".to_string())
            } else if is_internally_4c_cubic(g) {
                None
            } else {
                Some("line graph is not 4-connected".to_string())
            }
        }
    }
}

fn check(out: &mut impl Write, file: &Path, class: Class) -> Run {
    let mut all = true;
    for g in read_graphs(file)? {
        match class_failure(&g, class) {
            None => writeln!(out, "true")?,
            Some(why) => {
                all = false;
                writeln!(out, "false {why}")?;
            }
        }
    }
    Ok(all)
}

fn recognize_cmd(out: &mut impl Write, file: &Path) -> Run {
    for g in read_graphs(file)? {
        let names: Vec<String> = recognize(&g).iter().map(|f| f.to_string()).collect();
        writeln!(out, "{}", if names.is_empty() { "none".to_string() } else { names.join(" ") })?;
    }
    Ok(true)
}

fn chain_cmd(out: &mut impl Write, file: &Path, t: TheoremId, dest: Option<&Path>) -> Run {
    let graphs = read_graphs(file)?;
    if dest.is_some() && graphs.len() != 1 {
        return Err(InputError(format!("--out needs exactly one graph, {} has {}", file.display(), graphs.len())));
    }
    let mut ok = true;
    for (i, g) in graphs.iter().enumerate() {
        let chain = match find_chain(g, t) {
            Ok(c) => c,
            Err(e @ ChainError::IneligibleInput { .. }) => return Err(InputError(format!("graph {}: {e}", i + 1))),
            Err(e) => {
                ok = false;
                writeln!(out, "# graph {}: {e}", i + 1)?;
                continue;
            }
        };
        match dest {
            Some(path) => fs::write(path, chain.to_string())?,
            None => {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{chain}")?;
            }
        }
    }
    Ok(ok)
}

fn verify_chain_cmd(out: &mut impl Write, file: &Path) -> Run {
    let chain: Chain = read_text(file)?.parse().map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let report = verify_chain(&chain);
    if report.is_clean() {
        writeln!(out, "ok {} steps", chain.len())?;
    } else {
        for v in &report.violations {
            writeln!(out, "violation {v}")?;
        }
    }
    Ok(report.is_clean())
}

fn print_report(out: &mut impl Write, r: &VerificationReport) -> Run {
    write!(out, "{r}")?;
    eprintln!("duration-ms {}", r.duration.as_millis());
    Ok(r.passed())
}

fn generate_cmd(out: &mut impl Write, t: TheoremId, max_n: usize, mode: GenerationMode, dest: &Path) -> Run {
    let graphs = generate_from_base(t, max_n, mode)?;
    fs::write(dest, write_catalog(&graphs))?;
    writeln!(out, "generated {} graphs", graphs.len())?;
    Ok(true)
}

fn configure_workers() -> Result<(), InputError> {
    let Ok(raw) = std::env::var(WORKERS_VAR) else { return Ok(()) };
    let n: usize = raw.trim().parse().map_err(|_| InputError(format!("{WORKERS_VAR} must be a positive integer, got `{raw}`")))?;
    if n == 0 {
        return Err(InputError(format!("{WORKERS_VAR} must be positive")));
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: Cli) -> Run {
    configure_workers()?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    let ok = match cli.command {
        Command::Check { file, class } => check(&mut out, &file, class)?,
        Command::Recognize { file } => recognize_cmd(&mut out, &file)?,
        Command::Chain { file, theorem, out: dest } => chain_cmd(&mut out, &file, theorem, dest.as_deref())?,
        Command::VerifyChain { file } => verify_chain_cmd(&mut out, &file)?,
        Command::VerifyTheorem { theorem, max_n } => print_report(&mut out, &verify_theorem(theorem, max_n)?)?,
        Command::VerifyLemma { id, max_n } => print_report(&mut out, &verify_lemma(id, max_n)?)?,
        Command::Generate { theorem, max_n, mode, out: dest } => generate_cmd(&mut out, theorem, max_n, mode, &dest)?,
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
