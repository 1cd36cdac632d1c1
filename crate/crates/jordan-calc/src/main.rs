use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jordan_calc::{emit_report, export, run_suite, FamilyArg, Format, Options, Suite, ZValue};

#[derive(Parser)]
#[command(name = "jordan-calc", version, about = "Exact checks for Jordanian quantum groups and their calculi")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// 1, 2, 3 or 3D; all families when omitted.
        #[arg(long)]
        family: Option<FamilyArg>,
        /// Rational value for z, or `sym`.
        #[arg(long, default_value = "sym")]
        z: ZValue,
        /// h-adic truncation order for U_h(sl2).
        #[arg(long, default_value_t = jordan_core::uhsl2::UhAlgebra::DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        /// Include per-check wall times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print the representation matrices as JSON.
    Export,
}

fn init_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("JORDAN_CALC_THREADS") else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| format!("JORDAN_CALC_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("JORDAN_CALC_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match cli.command {
        Command::Verify { suite, family, z, order, format, timings } => {
            let opts = Options { family: family.map(|f| f.0), z, order };
            let report = run_suite(suite, &opts, timings);
            let _ = std::io::stdout().write_all(emit_report(&report, format).as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Export => match export::representation_matrices() {
            Ok(v) => {
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&v).expect("json"));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
    }
}
