//! Batch command-line surface.
//!
//! Exit codes: 0 success or certified, 1 counterexample or proof gap,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construct::{self, ChromaticInfo};
use crate::detect::{self, Witness};
use crate::extract::{arrow_witness, ExtractError, Target};
use crate::graph::Graph;
use crate::graph6;
use crate::sat;
use crate::verify::{self, ConstructionKind, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hajos-ramsey",
    version,
    about = "Ramsey numbers of the Hajos graph against stars and fans"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a lower-bound coloring as graph6.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long, required_unless_present = "order")]
        n: Option<usize>,
        /// Chromatic number (burr only).
        #[arg(long, default_value_t = 3)]
        chi: usize,
        /// Chromatic surplus (burr only).
        #[arg(long, default_value_t = 2)]
        s: usize,
        /// Order of the connected blue graph (burr only; defaults to n + 1).
        #[arg(long)]
        order: Option<usize>,
    },
    /// Read graph6 lines and print one JSON result per line.
    Detect {
        #[arg(long, value_enum)]
        pattern: Pattern,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Read graph6 hosts at the threshold order and print the trace of each
    /// extraction as JSON lines, ending with the witness record.
    Extract {
        #[arg(long, value_enum)]
        target: TargetKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print a verification report as JSON.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "N")]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "star")]
        target: TargetKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Option<LowerKind>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Emit the star arrowing CNF in DIMACS form.
    Sat {
        #[arg(long = "N")]
        order: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print chromatic number and surplus as JSON (the Hajos graph unless a
    /// graph6 string is given).
    Chrom {
        #[arg(long)]
        graph6: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    StarEven,
    StarOdd,
    Fan,
    Burr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pattern {
    Hajos,
    K4,
    K5e,
    W4,
    BlueStar,
    BlueFan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetKind {
    Star,
    Fan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Structure,
    Sweep,
    Construction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LowerKind {
    StarEven,
    StarOdd,
    Fan,
}

impl TargetKind {
    fn with(self, n: usize) -> Target {
        match self {
            TargetKind::Star => Target::Star(n),
            TargetKind::Fan => Target::Fan(n),
        }
    }
}

/// Error carrying its exit code.
struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        usage(format!("i/o error: {e}"))
    }
}

/// Parses `args` (program name first) and runs against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(
        args,
        &mut stdin.lock(),
        &mut BufWriter::new(stdout.lock()),
        &mut stderr.lock(),
    )
}

/// Same as [`run`] with explicit streams.
pub fn run_with<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let code = match dispatch(config.command, input, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    };
    if out.flush().is_err() {
        return EXIT_USAGE;
    }
    code
}

fn dispatch(cmd: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Construct { kind, n, chi, s, order } => construct_cmd(kind, n, chi, s, order, out),
        Command::Detect {
            pattern,
            n,
            input: path,
        } => with_input(path, input, |r| detect_cmd(pattern, n, r, out)),
        Command::Extract { target, n, input: path } => with_input(path, input, |r| extract_cmd(target.with(n), r, out)),
        Command::Verify {
            mode,
            order,
            target,
            n,
            kind,
            trials,
            seed,
            timing,
        } => {
            let report = match mode {
                Mode::Exhaustive => {
                    let order = order.ok_or_else(|| usage("--N is required for exhaustive mode"))?;
                    verify::verify_all_colorings(order, target.with(n))
                }
                Mode::Structure => verify::verify_star_upper_via_structure(n),
                Mode::Sweep => {
                    let seed = seed.ok_or_else(|| usage("--seed is required for sweep mode"))?;
                    verify::random_sweep(target.with(n), trials, seed)
                }
                Mode::Construction => {
                    let kind = match kind.ok_or_else(|| usage("--kind is required for construction mode"))? {
                        LowerKind::StarEven => ConstructionKind::StarEven,
                        LowerKind::StarOdd => ConstructionKind::StarOdd,
                        LowerKind::Fan => ConstructionKind::Fan,
                    };
                    verify::verify_construction(n, kind)
                }
            }
            .map_err(|e| usage(e.to_string()))?;
            let report = if timing { report } else { report.without_timing() };
            write_json(out, &report)?;
            Ok(report_code(&report))
        }
        Command::Sat { order, n, out: path } => {
            let (f, _) = sat::emit_star_arrowing_cnf(order, n).map_err(|e| usage(e.to_string()))?;
            let text = f.to_dimacs();
            match path {
                Some(p) => File::create(&p)
                    .and_then(|mut file| file.write_all(text.as_bytes()))
                    .map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Chrom { graph6: text } => {
            let g = match text {
                Some(t) => graph6::decode(&t).map_err(|e| usage(e.to_string()))?,
                None => construct::hajos_graph(),
            };
            let info: ChromaticInfo = construct::chromatic_info(&g).map_err(|e| usage(e.to_string()))?;
            write_json(out, &info)?;
            Ok(EXIT_OK)
        }
    }
}

fn report_code(r: &VerificationReport) -> i32 {
    if r.certified() {
        EXIT_OK
    } else {
        EXIT_FOUND
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(|e| usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn with_input(
    path: Option<PathBuf>,
    stdin: &mut dyn BufRead,
    f: impl FnOnce(&mut dyn BufRead) -> Result<i32, Failure>,
) -> Result<i32, Failure> {
    match path {
        Some(p) => {
            let file = File::open(&p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            f(&mut io::BufReader::new(file))
        }
        None => f(stdin),
    }
}

/// Non-blank graph6 lines, decoded in order.
fn for_each_graph(
    input: &mut dyn BufRead,
    mut f: impl FnMut(usize, Graph) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let mut index = 0;
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = graph6::decode(text).map_err(|e| usage(format!("line {}: {e}", lineno + 1)))?;
        f(index, g)?;
        index += 1;
    }
    Ok(())
}

fn construct_cmd(
    kind: ConstructKind,
    n: Option<usize>,
    chi: usize,
    s: usize,
    order: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let need_n = || n.ok_or_else(|| usage("--n is required"));
    let g = match kind {
        ConstructKind::StarEven => construct::star_even_lower(need_n()?),
        ConstructKind::StarOdd => construct::star_odd_lower(need_n()?),
        ConstructKind::Fan => construct::fan_lower(need_n()?),
        ConstructKind::Burr => {
            let target_order = match order {
                Some(o) => o,
                None => need_n()? + 1,
            };
            construct::burr_construction(chi, s, target_order)
        }
    }
    .map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{}", graph6::encode(&g))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DetectRecord<T: Serialize> {
    input: usize,
    pattern: &'static str,
    found: bool,
    witness: Option<T>,
}

fn detect_cmd(
    pattern: Pattern,
    n: Option<usize>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let need_n = || match n {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(usage("--n >= 1 is required for blue patterns")),
    };
    let n = match pattern {
        Pattern::BlueStar | Pattern::BlueFan => need_n()?,
        _ => 0,
    };
    for_each_graph(input, |i, g| {
        let rec = |name, w: Option<serde_json::Value>| DetectRecord {
            input: i,
            pattern: name,
            found: w.is_some(),
            witness: w,
        };
        let r = match pattern {
            Pattern::Hajos => rec("hajos", detect::find_hajos(&g).map(|h| json(&Witness::RedHajos(h)))),
            Pattern::K4 => rec("k4", detect::find_k4(&g).map(|q| json(&q))),
            Pattern::K5e => rec(
                "k5e",
                detect::find_k5_minus_e(&g).map(|(c, f)| json(&serde_json::json!({ "clique": c, "fifth": f }))),
            ),
            Pattern::W4 => rec("w4", detect::find_w4(&g).map(|w| json(&w))),
            Pattern::BlueStar => rec(
                "blue_star",
                detect::find_blue_star(&g, n).map(|s| json(&Witness::BlueStar(s))),
            ),
            Pattern::BlueFan => rec(
                "blue_fan",
                detect::find_blue_fan(&g, n).map(|f| json(&Witness::BlueFan(f))),
            ),
        };
        write_json(out, &r)
    })?;
    Ok(EXIT_OK)
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("witnesses serialize")
}

fn extract_cmd(target: Target, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    for_each_graph(input, |i, g| {
        match arrow_witness(&g, target) {
            Ok(x) => out.write_all(x.trace.to_json_lines().as_bytes())?,
            Err(ExtractError::ProofGap(trace)) => {
                code = EXIT_FOUND;
                out.write_all(trace.to_json_lines().as_bytes())?;
            }
            Err(e) => return Err(usage(format!("input {i}: {e}"))),
        }
        Ok(())
    })?;
    Ok(code)
}
