//! Command-line front end: file-based access to every pipeline.
//!
//! Polynomials, pairs, and certificates travel as JSON files; reports print
//! to stdout as compact JSON, status lines go to stderr. Exit codes: 0 for a
//! positive outcome, 1 for a negative result (relation fails to hold,
//! certificate fails verification), 2 for input errors (unreadable files,
//! malformed JSON, domain violations), 3 for numerical failures — including
//! a freshly constructed certificate that does not re-verify.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use weyl_forge::interlace::{gen_pq_pair, minimal_pq, split, InterlaceReport};
use weyl_forge::poly::RootedPoly;
use weyl_forge::realize::{
    realize_bordered, realize_weyl_converse, BorderedRealization, Realization,
};
use weyl_forge::suites::run_selftest;
use weyl_forge::verify::{check_bordered, check_realization, TolProfile, VerifyReport};
use weyl_forge::Error;

/// Construct and verify symmetric-matrix realizations of interlacing
/// polynomial pairs.
#[derive(Parser)]
#[command(name = "weyl-forge", version, about)]
struct Cli {
    /// Root-equality tolerance for constructions (default 1e-9).
    #[arg(long, global = true, value_parser = parse_positive)]
    eq_tol: Option<f64>,

    /// Relative threshold for treating eigenvalues as zero (default 1e-8).
    #[arg(long, global = true, value_parser = parse_positive)]
    zero_tol: Option<f64>,

    /// Relative threshold for spectrum comparisons (default 1e-6).
    #[arg(long, global = true, value_parser = parse_positive)]
    spectrum_tol: Option<f64>,

    /// Relative threshold for the decomposition residual (default 1e-9).
    #[arg(long, global = true, value_parser = parse_positive)]
    decomp_tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether f interlaces g with budgets (p, q); print the report.
    ///
    /// Exit 0 if the relation holds, 1 if it does not.
    Check {
        /// Polynomial file, {"roots": [...]}.
        f: PathBuf,
        /// Polynomial file, {"roots": [...]}.
        g: PathBuf,
        /// Budget for downward eigenvalue movement.
        #[arg(long)]
        p: usize,
        /// Budget for upward eigenvalue movement.
        #[arg(long)]
        q: usize,
    },

    /// Print the componentwise-minimal budgets (p, q) for the pair.
    Minimal {
        f: PathBuf,
        g: PathBuf,
    },

    /// Split a pair into an intermediate polynomial of chosen degree.
    ///
    /// Writes h with f interlacing h at (s, t) and h interlacing g at
    /// (p - s, q - t).
    Split {
        f: PathBuf,
        g: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Downward budget allotted to the (f, h) side.
        #[arg(long)]
        s: usize,
        /// Upward budget allotted to the (h, g) side.
        #[arg(long)]
        t: usize,
        /// Degree of the intermediate polynomial.
        #[arg(long)]
        d: usize,
        /// Output file; prints to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Construct a realization certificate: A, B, and rank-one vectors.
    ///
    /// The certificate is verified before it is written; a failing
    /// certificate is withheld (exit 3) unless --force is given, and even
    /// then the exit code stays 3.
    Realize {
        f: PathBuf,
        g: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Output file; prints to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the certificate even if verification fails.
        #[arg(long)]
        force: bool,
    },

    /// Construct a bordered-extension certificate for f inside g.
    ///
    /// Same verification gating as `realize`.
    Border {
        f: PathBuf,
        g: PathBuf,
        /// Output file; prints to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the certificate even if verification fails.
        #[arg(long)]
        force: bool,
    },

    /// Re-check a stored certificate and print the verification report.
    ///
    /// The certificate kind is detected from its fields ("M" marks a
    /// bordered certificate, "A"/"B" a realization). Exit 0 pass, 1 fail.
    Verify {
        cert: PathBuf,
    },

    /// Generate a seeded interlacing pair and write it as {"f": .., "g": ..}.
    Gen {
        /// Degree of g.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Seed; falls back to WEYL_FORGE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Minimal separation between consecutive roots of g.
        #[arg(long, default_value_t = 0.05)]
        min_gap: f64,
        /// Output file; prints to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Run every property suite at reduced instance counts; exit 0/1.
    Selftest,
}

/// A subcommand failure: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Display) -> Failure {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Invalid(_) | Error::Domain(_) => 2,
            Error::Numerical { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("`{s}` is not a positive finite number"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut tol = TolProfile::default();
    if let Some(v) = cli.eq_tol {
        tol.eq_tol = v;
    }
    if let Some(v) = cli.zero_tol {
        tol.zero_tol = v;
    }
    if let Some(v) = cli.spectrum_tol {
        tol.spectrum_tol = v;
    }
    if let Some(v) = cli.decomp_tol {
        tol.decomp_tol = v;
    }

    match run(cli.command, &tol) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, tol: &TolProfile) -> Result<u8, Failure> {
    match command {
        Command::Check { f, g, p, q } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            let report = InterlaceReport::analyze(&f, &g, p, q);
            println!("{}", to_json(&report)?);
            Ok(if report.holds { 0 } else { 1 })
        }

        Command::Minimal { f, g } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            let (p, q) = minimal_pq(&f, &g);
            println!(
                "{}",
                serde_json::json!({ "minimal_p": p, "minimal_q": q })
            );
            Ok(0)
        }

        Command::Split {
            f,
            g,
            p,
            q,
            s,
            t,
            d,
            output,
        } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            let h = split(&f, &g, p, q, s, t, d)?;
            emit(output.as_deref(), &to_json(&h)?)?;
            Ok(0)
        }

        Command::Realize {
            f,
            g,
            p,
            q,
            output,
            force,
        } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            let r = realize_weyl_converse(&f, &g, p, q, tol.eq_tol)?;
            let report = check_realization(&r, p, q, tol);
            emit_certificate(&r, &report, output.as_deref(), force)
        }

        Command::Border { f, g, output, force } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            let r = realize_bordered(&f, &g, tol.eq_tol)?;
            let report = check_bordered(&r, tol);
            emit_certificate(&r, &report, output.as_deref(), force)
        }

        Command::Verify { cert } => {
            let text = read_text(&cert)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::input(parse_msg(&cert, &e)))?;
            let report = if value.get("M").is_some() {
                let r: BorderedRealization = serde_json::from_value(value)
                    .map_err(|e| Failure::input(parse_msg(&cert, &e)))?;
                check_bordered(&r, tol)
            } else if value.get("A").is_some() {
                let r: Realization = serde_json::from_value(value)
                    .map_err(|e| Failure::input(parse_msg(&cert, &e)))?;
                let (p, q) = (r.p, r.q);
                check_realization(&r, p, q, tol)
            } else {
                return Err(Failure::input(format!(
                    "{}: not a certificate (expected an \"A\"/\"B\" or \"M\" field)",
                    cert.display()
                )));
            };
            println!("{}", to_json(&report)?);
            Ok(if report.passed { 0 } else { 1 })
        }

        Command::Gen {
            n,
            p,
            q,
            seed,
            min_gap,
            output,
        } => {
            let seed = match seed {
                Some(s) => s,
                None => seed_from_env()?,
            };
            let (f, g) = gen_pq_pair(n, p, q, min_gap, seed)?;
            let pair = serde_json::json!({ "f": f, "g": g });
            emit(output.as_deref(), &pair.to_string())?;
            Ok(0)
        }

        Command::Selftest => {
            let mut all_passed = true;
            for report in run_selftest() {
                eprintln!("{}", report.summary());
                for example in &report.examples {
                    eprintln!("  {example}");
                }
                all_passed &= report.passed();
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

/// Prints the verification outcome to stderr, then writes the certificate —
/// unless verification failed and --force was not given. A failing fresh
/// certificate always exits 3.
fn emit_certificate(
    cert: &impl serde::Serialize,
    report: &VerifyReport,
    output: Option<&Path>,
    force: bool,
) -> Result<u8, Failure> {
    for check in &report.checks {
        eprintln!(
            "{}: {} (residual {:.3e}, threshold {:.3e})",
            check.name,
            if check.passed { "pass" } else { "FAIL" },
            check.residual,
            check.threshold
        );
    }
    if report.passed {
        emit(output, &to_json(cert)?)?;
        Ok(0)
    } else if force {
        eprintln!("verification failed; writing certificate anyway (--force)");
        emit(output, &to_json(cert)?)?;
        Ok(3)
    } else {
        eprintln!("verification failed; certificate withheld (use --force to write it)");
        Ok(3)
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_poly(path: &Path) -> Result<RootedPoly, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::input(parse_msg(path, &e)))
}

fn parse_msg(path: &Path, e: &impl Display) -> String {
    format!("{}: {e}", path.display())
}

fn to_json(value: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::input(format!("serialization: {e}")))
}

/// Writes to the file if a path was given, otherwise prints to stdout.
fn emit(output: Option<&Path>, json: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, format!("{json}\n"))
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var("WEYL_FORGE_SEED") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::input(format!(
                "WEYL_FORGE_SEED must be an unsigned integer, got `{text}`"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(Failure::input(format!("WEYL_FORGE_SEED: {e}"))),
    }
}
