//! File formats and the `rado` command-line front end.
//!
//! [`run`] takes an argument vector and two writers and returns the process
//! exit code, so the whole surface is testable in-process:
//!
//! * `0`: a definite answer (a certificate, a member, a witness, ...)
//! * `1`: a definite negative (no certificate, not a member, no solution, ...)
//! * `2`: usage errors, malformed input and exhausted budgets

pub mod format;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rado_core::rado::{columns_condition, first_entries};
use rado_core::rings::{in_gf, in_scaled_gf, pigeonhole_subset};
use rado_core::search::{
    mono_solutions, min_rado_number, Colouring, RadoOutcome, SearchOptions, DEFAULT_BUDGET,
};
use rado_core::systems::{
    build_iab, build_truncated_system, nat_solution_witness, refute_over_gf, CoefficientSchedule, SystemSpec,
};
use rado_core::RatMatrix;

#[derive(Debug)]
pub enum CliError {
    Core(rado_core::Error),
    Io { path: String, source: io::Error },
    Format { line: usize, message: String },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Format { line, message } => write!(f, "line {line}: {message}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<rado_core::Error> for CliError {
    fn from(e: rado_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub(crate) fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Parser, Debug)]
#[command(name = "rado", version, about = "Partition regularity toolkit: columns condition, G_F rings, truncated system builders, colouring search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// Number of y variables; defaults to the schedule's arity.
    #[arg(long)]
    alpha: Option<usize>,
    /// Truncation depth k (equations n = 2..=k).
    #[arg(long)]
    depth: usize,
    /// qpow:Q | allprimes | qpowpair:Q | allprimespair | file:PATH
    #[arg(long)]
    schedule: String,
    /// Write the matrix here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the columns condition and print a certificate.
    CcCheck {
        #[arg(long)]
        matrix: String,
    },
    /// Report first entries and the weak first entries condition.
    FeCheck {
        #[arg(long)]
        matrix: String,
        /// Require a single common first entry.
        #[arg(long)]
        strict: bool,
    },
    /// Coefficient matrix of the truncated system.
    BuildSystem(SystemArgs),
    /// The stacked (I; A; B) matrix.
    BuildIab(SystemArgs),
    /// Test membership of a rational in G_F (or m * G_F).
    Membership {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// "" | all | 2,3,7 | all-except:2
        #[arg(long)]
        primes: String,
        #[arg(long, default_value_t = 1)]
        scale: u64,
    },
    /// Find a nonempty subset whose sum lies in m * G_F.
    Pigeonhole {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        primes: String,
        /// Comma- or space-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
    },
    /// Least n whose d-combination of y leaves G_F.
    Refute {
        #[arg(long)]
        schedule: String,
        #[arg(long)]
        primes: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Search a finite ground set for a monochromatic solution.
    MonoSearch {
        #[arg(long)]
        matrix: String,
        /// log2parity | file:PATH
        #[arg(long)]
        colouring: String,
        /// B,s or B,s,signed for {a/s : 1 <= a <= B}
        #[arg(long)]
        ground: String,
        #[arg(long)]
        distinct: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Least N such that every r-colouring of 1..N has a monochromatic solution.
    RadoNumber {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        colours: u32,
        #[arg(long)]
        nmax: usize,
        /// Also write the witness colouring to this file.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Positive-integer solution of a truncated pair system.
    NatWitness {
        #[arg(long)]
        schedule: String,
        #[arg(long)]
        depth: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((code, report)) => match out.write_all(report.as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_matrix(path: &str) -> Result<RatMatrix, CliError> {
    format::parse_matrix(&read_file(path)?)
}

fn system_spec(args: &SystemArgs) -> Result<(SystemSpec, CoefficientSchedule), CliError> {
    let schedule = format::parse_schedule(&args.schedule)?;
    let alpha = args.alpha.unwrap_or(schedule.arity());
    Ok((SystemSpec::new(alpha, args.depth, schedule.clone())?, schedule))
}

fn emit_matrix(header: String, m: &RatMatrix, dest: Option<&PathBuf>) -> Result<(i32, String), CliError> {
    let text = header + &format::write_matrix(m);
    match dest {
        Some(path) => {
            write_file(path, &text)?;
            Ok((0, format!("wrote {}x{} matrix to {}\n", m.rows(), m.cols(), path.display())))
        }
        None => Ok((0, text)),
    }
}

fn execute(command: Command) -> Result<(i32, String), CliError> {
    let mut report = String::new();
    use std::fmt::Write as _;
    let code = match command {
        Command::CcCheck { matrix } => {
            let a = load_matrix(&matrix)?;
            match columns_condition(&a)? {
                Some(cert) => {
                    report.push_str("certificate\n");
                    report.push_str(&format::write_certificate(&cert));
                    0
                }
                None => {
                    report.push_str("no certificate\n");
                    1
                }
            }
        }
        Command::FeCheck { matrix, strict } => {
            let a = load_matrix(&matrix)?;
            let r = first_entries(&a);
            for e in &r.entries {
                writeln!(report, "first-entry {} {} {}", e.row + 1, e.col + 1, e.value).unwrap();
            }
            for z in &r.zero_rows {
                writeln!(report, "zero-row {}", z + 1).unwrap();
            }
            let weak = r.zero_rows.is_empty() && r.all_equal;
            let common = r.common_value.as_ref().filter(|_| r.zero_rows.is_empty());
            writeln!(report, "weak-first-entries {}", if weak { "yes" } else { "no" }).unwrap();
            match common {
                Some(c) => writeln!(report, "common-first-entry {c}").unwrap(),
                None => report.push_str("common-first-entry none\n"),
            }
            let holds = if strict { common.is_some() } else { weak };
            if holds {
                0
            } else {
                1
            }
        }
        Command::BuildSystem(args) => {
            let (spec, schedule) = system_spec(&args)?;
            let m = build_truncated_system(&spec)?;
            let names: Vec<String> = spec.variables().iter().map(ToString::to_string).collect();
            let header = format!(
                "# truncated system alpha={} depth={} schedule={schedule}\n# columns: {}\n",
                spec.alpha(),
                spec.depth(),
                names.join(" ")
            );
            return emit_matrix(header, &m, args.out.as_ref());
        }
        Command::BuildIab(args) => {
            let (spec, schedule) = system_spec(&args)?;
            let m = build_iab(&spec)?;
            let header = format!(
                "# (I;A;B) alpha={} depth={} schedule={schedule}\n",
                spec.alpha(),
                spec.depth()
            );
            return emit_matrix(header, &m, args.out.as_ref());
        }
        Command::Membership { value, primes, scale } => {
            let x = value.parse()?;
            let f = format::parse_prime_set(&primes)?;
            if scale == 0 {
                return Err(CliError::Usage("--scale must be positive".into()));
            }
            let member = if scale == 1 { in_gf(&x, &f) } else { in_scaled_gf(&x, scale, &f) };
            report.push_str(if member { "member\n" } else { "not member\n" });
            if member {
                0
            } else {
                1
            }
        }
        Command::Pigeonhole { m, primes, values } => {
            let f = format::parse_prime_set(&primes)?;
            let xs = format::parse_rat_list(&values)?;
            let h = pigeonhole_subset(m, &f, &xs)?;
            let indices: Vec<String> = h.indices.iter().map(|i| (i + 1).to_string()).collect();
            let sum: rado_core::Rat = h.indices.iter().map(|&i| &xs[i]).sum();
            writeln!(report, "H {}", indices.join(" ")).unwrap();
            writeln!(report, "sum {sum}").unwrap();
            writeln!(report, "common-denominator {}", h.common_denominator).unwrap();
            match h.residue {
                Some(r) => writeln!(report, "route residue-class {r}").unwrap(),
                None => report.push_str("route prefix-sums\n"),
            }
            0
        }
        Command::Refute { schedule, primes, y, nmax } => {
            let schedule = format::parse_schedule(&schedule)?;
            let f = format::parse_prime_set(&primes)?;
            let y = format::parse_rat_list(&y)?;
            match refute_over_gf(&schedule, &f, &y, nmax)? {
                Some(n) => {
                    writeln!(report, "obstruction n={n}").unwrap();
                    0
                }
                None => {
                    writeln!(report, "no obstruction up to n={nmax}").unwrap();
                    1
                }
            }
        }
        Command::MonoSearch { matrix, colouring, ground, distinct, budget } => {
            let a = load_matrix(&matrix)?;
            let c = match colouring.as_str() {
                "log2parity" => Colouring::Log2Parity,
                other => match other.strip_prefix("file:") {
                    Some(path) => Colouring::Table(format::parse_colouring(&read_file(path)?)?),
                    None => return Err(CliError::Usage(format!("unknown colouring {other:?}"))),
                },
            };
            let g = format::parse_ground(&ground)?;
            match mono_solutions(&a, &c, &g, SearchOptions { distinct, budget })? {
                Some(sol) => {
                    let colour = c.colour(&sol.values()[0]).expect("solution values are coloured");
                    writeln!(report, "solution colour {colour}").unwrap();
                    for (j, x) in sol.values().iter().enumerate() {
                        writeln!(report, "x{} {x}", j + 1).unwrap();
                    }
                    0
                }
                None => {
                    writeln!(report, "none ({} elements searched exhaustively)", g.len()).unwrap();
                    1
                }
            }
        }
        Command::RadoNumber { matrix, colours, nmax, witness_out } => {
            let a = load_matrix(&matrix)?;
            let (code, witness) = match min_rado_number(&a, colours, nmax)? {
                RadoOutcome::Found { n, witness } => {
                    writeln!(report, "rado-number {n}").unwrap();
                    (0, witness)
                }
                RadoOutcome::Survivor { colouring } => {
                    writeln!(report, "none up to {nmax}").unwrap();
                    (1, colouring)
                }
            };
            let text = format::write_range_colouring(&witness);
            writeln!(report, "# colouring of 1..{} without a monochromatic solution", witness.len()).unwrap();
            report.push_str(&text);
            if let Some(path) = witness_out {
                write_file(&path, &text)?;
            }
            code
        }
        Command::NatWitness { schedule, depth } => {
            let schedule = format::parse_schedule(&schedule)?;
            let spec = SystemSpec::with_schedule(depth, schedule)?;
            let w = nat_solution_witness(&spec)?;
            for (var, x) in spec.variables().iter().zip(w.values()) {
                writeln!(report, "{var} {x}").unwrap();
            }
            if w.satisfies(&build_truncated_system(&spec)?)? {
                report.push_str("residuals zero\n");
                0
            } else {
                report.push_str("residuals nonzero\n");
                1
            }
        }
    };
    Ok((code, report))
}
