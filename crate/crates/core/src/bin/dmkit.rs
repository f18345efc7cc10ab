use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dmkit::report::{emit_report, Format, SessionConfig, DEFAULT_SEED};
use dmkit::repro::{run, Command, Variant};
use dmkit::Error;

#[derive(Parser)]
#[command(name = "dmkit", version, about = "Exact content-ideal computations over semigroup rings and Artinian algebras")]
struct Cli {
    /// Prime characteristic of the residue field.
    #[arg(long, global = true, default_value_t = 101)]
    p: u32,
    /// Global truncation N; omitted means a sufficient window per ideal.
    #[arg(long, global = true)]
    prec: Option<usize>,
    /// Seed for sampled searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Candidates per sampled search.
    #[arg(long, global = true, default_value_t = 500)]
    samples: usize,
    /// Largest t-degree of sampled candidates.
    #[arg(long = "deg-bound", global = true, default_value_t = 6)]
    deg_bound: usize,
    /// Maximum candidates for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u128,
    /// text or json.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// <3,4>, g = s^7 + s^6 t + s^8 t^2: mu(c(g)) = 3 but sampled k_min stays at 2.
    #[command(name = "example5.1")]
    Example51,
    /// <3,4>, g' = s^6 + s^7 t + s^8 t^2 with f = s^6 - s^7 t: k_min = 3.
    #[command(name = "remark5.2")]
    Remark52,
    /// <3,5>, I = (s^9, s^11, s^13): mu, gamma and the closure.
    #[command(name = "footnote5.3")]
    Footnote53,
    /// The family in <e, e+1> for e in 3..=8, variant g' or the rearranged g.
    #[command(name = "example5.4")]
    Example54 {
        #[arg(long)]
        e: usize,
        #[arg(long, default_value = "gprime")]
        variant: Variant,
    },
    /// Part 1: threshold e - 2 for the rearranged g. Part 3: the e = 5 polynomial.
    #[command(name = "remark5.5")]
    Remark55 {
        #[arg(long)]
        part: u8,
        #[arg(long)]
        e: Option<usize>,
    },
    /// Random checks of the gamma and minimal-generator facts.
    #[command(name = "props-setup5.3")]
    PropsSetup53,
    /// Random checks of content identities, closure, quotients and duality.
    #[command(name = "props-content")]
    PropsContent,
    /// Build f with fg = 0, c(f) inside J and c(f)c(g) nonzero.
    #[command(name = "thm31-demo")]
    Thm31Demo,
    /// Build a separating polynomial in a Gorenstein algebra.
    #[command(name = "thm33-demo")]
    Thm33Demo,
    /// Rerun the reproductions with every window widened by 10.
    Stability,
    /// Analyze rings and polynomials written in the input language.
    Analyze {
        /// Input file; stdin when omitted.
        file: Option<PathBuf>,
    },
}

fn input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. }
            | Error::InvalidParameter(_)
            | Error::NotPrime(_)
            | Error::InvalidSemigroup(_)
            | Error::PrecisionTooLow { .. }
            | Error::BudgetExceeded { .. }
            | Error::Unsupported(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SessionConfig {
        p: cli.p,
        prec: cli.prec,
        margin: 0,
        seed: cli.seed,
        samples: cli.samples,
        deg_bound: cli.deg_bound,
        budget: cli.budget,
    };
    let command = match cli.command {
        Cmd::Example51 => Command::Example51,
        Cmd::Remark52 => Command::Remark52,
        Cmd::Footnote53 => Command::Footnote53,
        Cmd::Example54 { e, variant } => Command::Example54 { e, variant },
        Cmd::Remark55 { part, e } => Command::Remark55 { part, e },
        Cmd::PropsSetup53 => Command::PropsSetup53,
        Cmd::PropsContent => Command::PropsContent,
        Cmd::Thm31Demo => Command::Thm31Demo,
        Cmd::Thm33Demo => Command::Thm33Demo,
        Cmd::Stability => Command::Stability,
        Cmd::Analyze { file } => {
            let text = match file {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| e.to_string())
                }
            };
            match text {
                Ok(text) => Command::Analyze { text },
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            }
        }
    };
    let report = match run(&command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if input_error(&e) { 2 } else { 1 });
        }
    };
    let bytes = emit_report(&report, cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}
