use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rankforge_cli::{construct, report, verify, CliError, ConstructArgs, PathChoice, RunConfig};

#[derive(Parser)]
#[command(
    name = "rankforge",
    version,
    about = "Build and check catalogs of prime-degree fields with curve points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct records and write them as catalog lines.
    Construct {
        /// Curve file (TOML).
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, conflicts_with = "p_range")]
        p: Option<u64>,
        /// Inclusive range A..B; every prime in it is used.
        #[arg(long)]
        p_range: Option<String>,
        /// Inclusive range A..B of specialization values (default 1..20).
        #[arg(long)]
        u0_range: Option<String>,
        /// At most this many specializations per prime.
        #[arg(long)]
        budget: Option<usize>,
        /// Comma-separated primes for field fingerprints.
        #[arg(long)]
        fingerprint_primes: Option<String>,
        #[arg(long, value_enum)]
        path: Option<PathChoice>,
        /// Catalog output; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check every line of a catalog.
    Verify { catalog: PathBuf },
    /// Summarize a catalog: class counts, skip ratios, verdict kinds.
    Report { catalog: PathBuf },
}

fn open(path: &PathBuf) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct {
            curve,
            q,
            p,
            p_range,
            u0_range,
            budget,
            fingerprint_primes,
            path,
            out,
        } => {
            let args = ConstructArgs {
                curve,
                q,
                p,
                p_range,
                u0_range,
                budget,
                fingerprint_primes,
                path,
                out,
            };
            let cfg = RunConfig::from_args(&args)?;
            let mut sink: Box<dyn Write> = match &cfg.out {
                Some(path) => {
                    Box::new(BufWriter::new(File::create(path).map_err(|e| {
                        CliError::Input(format!("{}: {e}", path.display()))
                    })?))
                }
                None => Box::new(BufWriter::new(io::stdout())),
            };
            let summaries = construct(&cfg, &mut sink)?;
            sink.flush()?;
            for s in summaries {
                eprintln!(
                    "p={} {}: attempted={} skipped={} accepted={} distinct_classes={}",
                    s.p, s.construction, s.attempted, s.skipped, s.accepted, s.distinct_classes
                );
            }
            Ok(())
        }
        Command::Verify { catalog } => {
            let stdout = io::stdout();
            let outcome = verify(open(&catalog)?, &mut stdout.lock())?;
            eprintln!(
                "{} lines checked, {} failed",
                outcome.checked,
                outcome.failures.len()
            );
            match outcome.failures.first() {
                Some((line, check)) => {
                    Err(CliError::Verification(format!("line {line} fails {check}")))
                }
                None => Ok(()),
            }
        }
        Command::Report { catalog } => {
            let rep = report(open(&catalog)?)?;
            let text = serde_json::to_string_pretty(&rep).expect("reports serialize");
            writeln!(io::stdout().lock(), "{text}")?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
