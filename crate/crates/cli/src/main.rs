//! Command-line interface to the skew brace engine.
//!
//! One subcommand per capability: validate and classify brace files,
//! compute structural series, enumerate all braces of a small order,
//! derive and audit Yang-Baxter solutions, and run the built-in
//! verification suite. Reports go to stdout, errors to stderr. Exit
//! codes: 0 success, 1 validation or assertion failure, 2 parse or usage
//! error.

use clap::{Parser, Subcommand, ValueEnum};
use skewbrace::construct::{enumerate_braces, ConstructError};
use skewbrace::io::{parse_brace, serialize_brace, IoError};
use skewbrace::series::{classify, series, SeriesKind};
use skewbrace::ybe::YbeSolution;
use skewbrace::SkewBrace;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "skewbrace",
    version,
    about = "Finite skew brace computation engine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a brace file and check every axiom; report the order.
    Validate {
        /// Path to a brace file.
        file: PathBuf,
    },
    /// Print the full classification report of a brace.
    Report {
        /// Path to a brace file.
        file: PathBuf,
    },
    /// Print one structural series of a brace, member by member.
    Series {
        /// Path to a brace file.
        file: PathBuf,
        /// Which series to compute.
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Enumerate all skew braces of one order (at most 8).
    Enumerate {
        /// The order to enumerate.
        #[arg(long)]
        order: usize,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Write each brace to `<dir>/brace_<order>_<index>.sb`.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Derive the Yang-Baxter solution of a brace and audit it.
    Ybe {
        /// Path to a brace file.
        file: PathBuf,
    },
    /// Run the complete built-in verification suite.
    ReproducePaper,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Right,
    Left,
    Socle,
    Zeta,
}

impl From<KindArg> for SeriesKind {
    fn from(k: KindArg) -> SeriesKind {
        match k {
            KindArg::Right => SeriesKind::Right,
            KindArg::Left => SeriesKind::Left,
            KindArg::Socle => SeriesKind::Socle,
            KindArg::Zeta => SeriesKind::Zeta,
        }
    }
}

/// Failure modes, carrying the process exit code.
enum CliError {
    /// Unreadable input, unparseable file, out-of-range argument.
    Usage(String),
    /// Well-formed input that fails a brace axiom or an assertion.
    Validation(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) => m,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> CliError {
        match e {
            IoError::Parse { .. } => CliError::Usage(e.to_string()),
            IoError::Validation(_) => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> CliError {
        match e {
            ConstructError::OrderTooLarge { .. } => CliError::Usage(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<SkewBrace, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_brace(&text)?)
}

/// Executes the command, appending its report to `out`. Anything already in
/// `out` when an error is returned still belongs on stdout (e.g. the
/// check-by-check table of a failed verification run).
fn run(cli: Cli, out: &mut String) -> Result<(), CliError> {
    use std::fmt::Write;
    match cli.command {
        Command::Validate { file } => {
            let b = load(&file)?;
            let _ = writeln!(out, "ok: skew brace of order {}", b.order());
        }
        Command::Report { file } => {
            let b = load(&file)?;
            out.push_str(&classify(&b).render());
        }
        Command::Series { file, kind } => {
            let b = load(&file)?;
            let s = series(&b, SeriesKind::from(kind));
            let _ = writeln!(out, "kind: {}", s.kind.as_str());
            let _ = writeln!(out, "members: {}", s.members.len());
            for (k, m) in s.members.iter().enumerate() {
                let elements = m
                    .elements()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(
                    out,
                    "{k}: order {}, grade {}, elements {elements}",
                    m.len(),
                    m.grade().as_str()
                );
            }
            let _ = writeln!(out, "stabilized_at: {}", s.stabilized_at);
            let _ = writeln!(out, "reaches_target: {}", s.reaches_target);
        }
        Command::Enumerate {
            order,
            up_to_iso,
            out: dir,
        } => {
            let braces = enumerate_braces(order, None, up_to_iso)?;
            let mode = if up_to_iso {
                "isomorphism classes"
            } else {
                "labelled braces"
            };
            let _ = writeln!(out, "order {order}: {} {mode}", braces.len());
            if let Some(dir) = dir {
                std::fs::create_dir_all(&dir).map_err(|e| {
                    CliError::Usage(format!("cannot create {}: {e}", dir.display()))
                })?;
                for (i, b) in braces.iter().enumerate() {
                    let path = dir.join(format!("brace_{order}_{i}.sb"));
                    std::fs::write(&path, serialize_brace(b)).map_err(|e| {
                        CliError::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                }
                let _ = writeln!(out, "wrote {} files to {}", braces.len(), dir.display());
            }
        }
        Command::Ybe { file } => {
            let b = load(&file)?;
            let r = YbeSolution::from_brace(&b);
            let _ = writeln!(out, "size: {}", r.size());
            let _ = writeln!(out, "bijective: {}", r.is_bijective());
            match r.first_braid_violation() {
                None => out.push_str("braid: ok\n"),
                Some((x, y, z)) => {
                    let _ = writeln!(out, "braid: violated at ({x}, {y}, {z})");
                }
            }
            let _ = writeln!(out, "left_nondegenerate: {}", r.is_left_nondegenerate());
            let _ = writeln!(out, "right_nondegenerate: {}", r.is_right_nondegenerate());
            let _ = writeln!(out, "involutive: {}", r.is_involutive());
            out.push_str(&r.export());
        }
        Command::ReproducePaper => {
            let v = skewbrace::reproduce::run();
            out.push_str(&v.render());
            if !v.all_passed() {
                return Err(CliError::Validation(format!(
                    "{} of {} checks failed",
                    v.failed(),
                    v.lines().len()
                )));
            }
        }
    }
    Ok(())
}

/// Writes the assembled report to stdout. A reader that stopped listening
/// (`skewbrace ... | head`) closes the pipe mid-write; that truncation is
/// the reader's choice, not a failure of this process.
fn flush_report(out: &str) -> bool {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        Ok(()) => true,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => true,
        Err(e) => {
            eprintln!("error: cannot write to stdout: {e}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let result = run(Cli::parse(), &mut out);
    let written = flush_report(&out);
    match result {
        Ok(()) if written => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
