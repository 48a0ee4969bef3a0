//! Command-line driver for the verification suites, dimension tables and
//! generator matrix dumps.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! errors and refused sizes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qalt_core::combinatorics::predicted_dimensions;
use qalt_core::commutant::RankMode;
use qalt_core::qfield::SpecializationPoint;
use qalt_core::report::SuiteReport;
use qalt_core::suites::{suite_alt, suite_alt_centralizer, suite_hecke, suite_schur_weyl, suite_specialization, SuiteOptions};
use qalt_core::tensor::{generator_matrix, rho_generator_list, GradedSpace};
use qalt_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hecke,
    Alt,
    SchurWeyl,
    AltCentralizer,
    Specialize,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Self::Hecke => "hecke",
            Self::Alt => "alt",
            Self::SchurWeyl => "schur-weyl",
            Self::AltCentralizer => "alt-centralizer",
            Self::Specialize => "specialize",
        }
    }

    fn uses_matrices(self) -> bool {
        !matches!(self, Self::Hecke | Self::Alt)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Verify(Suite),
    Dims,
    /// Dumps one generator, or all of them when `None`.
    Dump(Option<String>),
}

impl Command {
    fn name(&self) -> String {
        match self {
            Self::Verify(s) => format!("verify {}", s.name()),
            Self::Dims => "dims".into(),
            Self::Dump(_) => "dump".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub seed: u64,
    pub points: Option<Vec<SpecializationPoint>>,
    pub mode: RankMode,
    /// JSON report destination; `-` means standard output.
    pub out: Option<PathBuf>,
    /// Attach generator matrix dumps to matrix suite reports.
    pub dump: bool,
    pub bound: Option<usize>,
    pub timestamps: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            m: 1,
            n: 1,
            r: 3,
            seed: 0,
            points: None,
            mode: RankMode::Specialized,
            out: None,
            dump: false,
            bound: None,
            timestamps: false,
        }
    }

    fn options(&self) -> SuiteOptions {
        SuiteOptions {
            seed: self.seed,
            mode: self.mode,
            points: self.points.clone(),
            bound: self.bound,
        }
    }

    fn echo(&self) -> Value {
        json!({
            "command": self.command.name(),
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "seed": self.seed,
            "mode": self.mode.to_string(),
            "points": self.points.as_ref().map(|p| p.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
            "bound": self.bound,
            "dump": self.dump,
        })
    }
}

#[derive(Parser, Debug)]
#[command(name = "qalt", version, about = "Exact checks for Hecke algebras, their alternating subalgebras and super Schur-Weyl centralizers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Predicted dimensions from hook partitions.
    Dims,
    /// Print generator matrices, one `row col value` line per entry.
    Dump {
        /// A single generator such as T1, Tprime2, sigma, qh1, e1, f1 or phi.
        #[arg(long)]
        generator: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct Flags {
    #[arg(long, global = true, default_value_t = 1)]
    pub m: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub n: usize,
    #[arg(long, global = true, default_value_t = 3)]
    pub r: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value = "specialized")]
    pub mode: RankMode,
    /// Comma-separated specialization points, e.g. `2,3/2`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub points: Option<Vec<SpecializationPoint>>,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub dump: bool,
    /// Rank bound for the Hecke suites, `(m+n)^r` bound for the matrix suites.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Add a timestamp to the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timestamps: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let command = match cli.command {
            CliCommand::Verify { suite } => Command::Verify(suite),
            CliCommand::Dims => Command::Dims,
            CliCommand::Dump { generator } => Command::Dump(generator),
        };
        let f = cli.flags;
        Self {
            command,
            m: f.m,
            n: f.n,
            r: f.r,
            seed: f.seed,
            points: f.points,
            mode: f.mode,
            out: f.out,
            dump: f.dump,
            bound: f.bound,
            timestamps: f.timestamps,
        }
    }
}

/// The result of a run: the JSON document, a text rendering, and whether
/// everything passed.
#[derive(Debug)]
pub struct Outcome {
    pub document: Value,
    pub text: String,
    pub passed: bool,
}

/// Whether an error is the caller's fault (bad parameters, refused sizes)
/// rather than a failed computation.
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::SizeBound { .. }
            | Error::InvalidRank { .. }
            | Error::InvalidSpace(_)
            | Error::UnequalGrading { .. }
            | Error::InvalidGenerator(_)
            | Error::Parse(_)
            | Error::IndexOutOfRange { .. }
            | Error::ZeroSpecializationPoint
            | Error::Pole { .. }
            | Error::MatrixPole { .. }
            | Error::NoPoleFreePoint { .. }
    )
}

pub fn exit_code(result: &Result<Outcome, Error>) -> i32 {
    match result {
        Ok(o) if o.passed => EXIT_PASS,
        Ok(_) => EXIT_FAIL,
        Err(e) if is_usage_error(e) => EXIT_USAGE,
        Err(_) => EXIT_FAIL,
    }
}

fn suite_outcome(report: SuiteReport) -> Outcome {
    Outcome {
        text: report.to_string(),
        passed: report.passed(),
        document: json!({ "report": report, "status": if report.passed() { "pass" } else { "fail" } }),
    }
}

fn all_labels(space: &GradedSpace) -> Result<Vec<String>, Error> {
    let mut labels: Vec<String> = (1..space.r()).map(|i| format!("T{i}")).collect();
    labels.extend((1..space.r()).map(|i| format!("Tprime{i}")));
    for g in rho_generator_list(space)? {
        labels.push(g.label());
    }
    if space.m() == space.n() {
        labels.push("phi".into());
    }
    Ok(labels)
}

fn dump_matrices(space: &GradedSpace, labels: &[String]) -> Result<(Value, String), Error> {
    let mut doc = serde_json::Map::new();
    let mut text = String::new();
    for l in labels {
        let dump = generator_matrix(space, l)?.dump();
        let _ = writeln!(text, "# {l}");
        text.push_str(&dump);
        doc.insert(l.clone(), Value::from(dump.lines().collect::<Vec<_>>()));
    }
    Ok((Value::Object(doc), text))
}

/// Runs a command without touching the filesystem or the terminal.
pub fn execute(config: &RunConfig) -> Result<Outcome, Error> {
    let opts = config.options();
    let (m, n, r) = (config.m, config.n, config.r);
    let mut outcome = match &config.command {
        Command::Verify(suite) => {
            let report = match suite {
                Suite::Hecke => suite_hecke(r, &opts)?,
                Suite::Alt => suite_alt(r, &opts)?,
                Suite::SchurWeyl => suite_schur_weyl(m, n, r, &opts)?,
                Suite::AltCentralizer => suite_alt_centralizer(m, n, r, &opts)?,
                Suite::Specialize => suite_specialization(m, n, r, &opts)?,
            };
            let mut o = suite_outcome(report);
            if config.dump && suite.uses_matrices() {
                let space = GradedSpace::new(m, n, r)?;
                let (doc, _) = dump_matrices(&space, &all_labels(&space)?)?;
                o.document["matrices"] = doc;
            }
            o
        }
        Command::Dims => {
            let d = predicted_dimensions(m, n, r)?;
            let mut text = format!("hook shapes for m={m} n={n} r={r}\n");
            for s in &d.shapes {
                let _ = writeln!(text, "  {:<20} d={:<6} {}", s.shape.to_string(), s.degree, s.class);
            }
            let _ = write!(
                text,
                "dimA={} dimA0={} dimA1={} dimC={} dimC0={} dimC1={}",
                d.dim_a, d.dim_a0, d.dim_a1, d.dim_c, d.dim_c0, d.dim_c1
            );
            let passed = d.consistent();
            Outcome {
                document: json!({ "dimensions": d, "status": if passed { "pass" } else { "fail" } }),
                text,
                passed,
            }
        }
        Command::Dump(generator) => {
            let space = GradedSpace::new(m, n, r)?;
            let labels = match generator {
                Some(g) => vec![g.clone()],
                None => all_labels(&space)?,
            };
            let (doc, text) = dump_matrices(&space, &labels)?;
            Outcome {
                document: json!({ "matrices": doc, "status": "pass" }),
                text: text.trim_end().to_string(),
                passed: true,
            }
        }
    };
    outcome.document["config"] = config.echo();
    if config.timestamps {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        outcome.document["timestamp"] = Value::from(secs);
    }
    Ok(outcome)
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

/// Runs a command, writes its outputs, and returns the exit code.
pub fn run(config: &RunConfig) -> i32 {
    let result = execute(config);
    match &result {
        Ok(o) => {
            let json = serde_json::to_string_pretty(&o.document).expect("serializable report") + "\n";
            match &config.out {
                Some(p) if p.as_os_str() == "-" => emit(&json),
                Some(p) => {
                    if let Err(e) = std::fs::write(p, &json) {
                        eprintln!("qalt: cannot write {}: {e}", p.display());
                        return EXIT_USAGE;
                    }
                    emit(&format!("{}\n", o.text));
                }
                None => emit(&format!("{}\n", o.text)),
            }
        }
        Err(e) => eprintln!("qalt: {e}"),
    }
    exit_code(&result)
}
