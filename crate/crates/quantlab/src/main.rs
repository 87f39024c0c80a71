use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quantcore::{OscillatorParams, Scheme};
use quantlab::pipeline::{self, failures, target_commutator};
use quantlab::report::{self, Format};
use quantlab::{parse_poly, PipelineError, SweepTarget, Target};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "quantlab", version, about = "Born-Jordan vs Weyl quantization of oscillator first integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    K,
    F1,
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    K,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Bj,
    Weyl,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Bj => Scheme::BornJordan,
            SchemeArg::Weyl => Scheme::Weyl,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Quantize one first integral for a single (m, n) and check the commutators.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "k")]
        target: TargetArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the pipeline for every pair with m + n <= max-sum.
    Sweep {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        max_sum: u32,
        #[arg(long, value_enum, default_value = "k")]
        target: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Quantize a classical expression.
    Quantize {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Commutator of the Hamiltonian with the quantized K_{m,n}.
    Commutator {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Writes a report to stdout; a closed pipe is not an error for a report writer.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", text.trim_end());
}

fn pipeline_failure(e: PipelineError) -> ExitCode {
    eprintln!("error: {}", e);
    match e {
        PipelineError::ClassicalBracketNonzero { .. } => ExitCode::from(EXIT_VERIFY_FAILED),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn verdict(fails: &[String]) -> ExitCode {
    if fails.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed: {}", fails.join(", "));
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { m, n, target, format } => {
            let target = match target {
                TargetArg::K => Target::K,
                TargetArg::F1 => Target::F1,
                TargetArg::F2 => Target::F2,
            };
            let record = match pipeline::verify(m, n, target) {
                Ok(r) => r,
                Err(e) => return pipeline_failure(e),
            };
            let out = match format {
                Format::Json => report::verify_json(&record),
                Format::Text => report::record_text(&record),
                Format::Latex => report::record_latex(&record),
            };
            emit(&out);
            verdict(&failures(std::slice::from_ref(&record)))
        }
        Command::Sweep { max_sum, target, format } => {
            let target = match target {
                FamilyArg::K => SweepTarget::K,
                FamilyArg::F => SweepTarget::F,
            };
            let records = match pipeline::sweep(max_sum, target) {
                Ok(r) => r,
                Err(e) => return pipeline_failure(e),
            };
            let out = match format {
                Format::Json => report::sweep_json(max_sum, target, &records),
                Format::Text => report::sweep_text(max_sum, target, &records),
                Format::Latex => report::sweep_latex(&records),
            };
            emit(&out);
            verdict(&failures(&records))
        }
        Command::Quantize { scheme, expr, format } => {
            let f = match parse_poly(&expr) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let scheme = Scheme::from(scheme);
            let op = quantcore::quantizer::quantize(scheme, &f);
            emit(&report::quantized_report(format, scheme, &expr, &f, &op));
            ExitCode::SUCCESS
        }
        Command::Commutator { scheme, m, n, format } => {
            let p = match OscillatorParams::new(m, n) {
                Ok(p) => p,
                Err(e) => return pipeline_failure(e.into()),
            };
            let scheme = Scheme::from(scheme);
            let op = target_commutator(&p, Target::K, scheme);
            emit(&report::commutator_report(format, scheme, m, n, &op));
            ExitCode::SUCCESS
        }
    }
}
