//! Command-line front end: `table`, `check`, `scan`, `selftest`.
//!
//! Exit codes: 0 success, 1 invalid input or flags, 2 a bound violation or
//! failed self-test, 3 an I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::acceptance::{self, Options};
use crate::bounds::check_table;
use crate::error::Error;
use crate::input::{InputSpec, RawTable};
use crate::render;
use crate::resolutions::{build_table, notes_for, Note};
use crate::scan::{run_scan_with, Family, FamilySpec};
use crate::table::BettiTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "detbetti",
    version,
    about = "Graded Betti tables of determinantal ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the graded Betti table of an input file ("-" reads stdin)
    Table {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Read a table in the JSON output format instead of degree data
        #[arg(long, hide = true)]
        raw_table: bool,
    },
    /// Evaluate every bound against the table of an input file
    Check {
        input: PathBuf,
        #[arg(long, hide = true)]
        raw_table: bool,
    },
    /// Check the bounds over every member of a family grid
    Scan {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        t_max: usize,
        /// Defaults to 2 (1 for divisors)
        #[arg(long)]
        c_min: Option<usize>,
        #[arg(long, default_value_t = 3)]
        c_max: usize,
        /// Defaults to 0 for standard matrices, 1 otherwise
        #[arg(long)]
        min_entry: Option<i64>,
        #[arg(long, default_value_t = 3)]
        max_entry: i64,
        /// Maximum number of instances
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Write one JSON record per instance to this file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the acceptance suite
    Selftest {
        /// Smaller grids
        #[arg(long)]
        quick: bool,
        #[arg(long, hide = true)]
        corrupt_golden: bool,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| io_failure(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    }
    Ok(text)
}

fn load_table(path: &Path, raw: bool) -> Result<(BettiTable, Vec<Note>), Failure> {
    let text = read_input(path)?;
    if raw {
        return Ok((RawTable::parse(&text)?.into_table()?, Vec::new()));
    }
    let data = InputSpec::parse(&text)?.degree_data()?;
    let table = build_table(&data)?;
    let notes = notes_for(&data, &table);
    Ok((table, notes))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| io_failure(Path::new("<stdout>"), e))
}

fn dispatch(cli: Cli, out: &mut dyn Write, color: bool) -> Result<i32, Failure> {
    match cli.command {
        Command::Table {
            input,
            format,
            raw_table,
        } => {
            let (table, notes) = load_table(&input, raw_table)?;
            let text = match format {
                Format::Json => render::to_json(&table, &notes)? + "\n",
                Format::Csv => render::to_csv(&table),
                Format::Ascii => {
                    let mut text = render::to_ascii(&table, color);
                    for note in &notes {
                        text += &format!("note: {}\n", serde_json::to_string(note).unwrap());
                    }
                    text
                }
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Check { input, raw_table } => {
            let (table, _) = load_table(&input, raw_table)?;
            let report = check_table(&table)?;
            emit(
                out,
                &(serde_json::to_string_pretty(&report).unwrap() + "\n"),
            )?;
            Ok(if report.all_ok() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Scan {
            family,
            t_max,
            c_min,
            c_max,
            min_entry,
            max_entry,
            budget,
            out: out_path,
            jobs,
        } => {
            let mut spec = FamilySpec::new(family);
            spec.t_max = t_max;
            spec.c_min = c_min.unwrap_or(spec.c_min);
            spec.c_max = c_max;
            spec.min_entry = min_entry.unwrap_or(spec.min_entry);
            spec.max_entry = max_entry;
            spec.budget = budget;
            let result = run_scan_with(&spec, jobs)?;
            if let Some(path) = out_path {
                let file = File::create(&path).map_err(|e| io_failure(&path, e))?;
                let mut w = BufWriter::new(file);
                for record in result.records() {
                    serde_json::to_writer(&mut w, &record)
                        .map_err(|e| io_failure(&path, e.into()))?;
                    w.write_all(b"\n").map_err(|e| io_failure(&path, e))?;
                }
                w.flush().map_err(|e| io_failure(&path, e))?;
            }
            emit(
                out,
                &(serde_json::to_string_pretty(&result.report).unwrap() + "\n"),
            )?;
            Ok(if result.report.clean() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Selftest {
            quick,
            corrupt_golden,
        } => {
            let opts = Options {
                quick,
                corrupt_golden,
            };
            let results = acceptance::run_all(&opts);
            let mut text = String::new();
            for r in &results {
                text += &format!("{r}\n");
            }
            let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
            if failed.is_empty() {
                text += "PASS\n";
            } else {
                text += &format!("FAIL: criteria {}\n", failed.join(", "));
            }
            emit(out, &text)?;
            Ok(if failed.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. `color` allows ANSI styling of ASCII tables.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli, out, color) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn main_exit_code() -> i32 {
    let color =
        std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && io::stdout().is_terminal();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let stderr = io::stderr();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &mut out, &mut err, color);
    let _ = out.flush();
    code
}
