//! Command-line front end: generate instances, solve them into certificates,
//! verify certificates, print arc spectra, and hunt instance families.
//!
//! Exit codes are a stable contract: 0 success, 1 verification or critical
//! failure, 2 input error, 3 generation exhaustion.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use pancyc::construct::{two_pancyclic_arcs, ConstructError};
use pancyc::generate::{random_mpt, random_strong_mpt, GenError, GenSpec};
use pancyc::hunt::{run_hunt, HuntConfig, HuntError, HuntMode};
use pancyc::oracle::{
    arc_spectra, conjecture_report, cycle_lengths_through_arc, full_spectrum_arcs, ArcSpectrum,
};
use pancyc::tournament::{Arc as TArc, MultipartiteTournament};
use pancyc::witness::{certificate_from_json, certificate_to_json, verify_certificate};

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pancyc",
    about = "Pancyclic-arc certificates for strong multipartite tournaments",
    version
)]
struct Cli {
    /// Emit machine-readable JSON reports instead of text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Solve an instance into a two-arc certificate.
    Solve(SolveArgs),
    /// Verify a certificate against an instance.
    Verify(VerifyArgs),
    /// Print cycle-length spectra through arcs.
    Spectrum(SpectrumArgs),
    /// Scan an instance family and ledger full-spectrum arc counts.
    Hunt(HuntArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Comma-separated part sizes, e.g. 1,2,2.
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rejection-sample until the instance is strong.
    #[arg(long)]
    strong: bool,
    /// Attempts before giving up with --strong.
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file.
    file: PathBuf,
    /// Certificate file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file.
    file: PathBuf,
    /// Certificate file.
    cert: PathBuf,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Instance file.
    file: PathBuf,
    /// Single arc as tail,head; all arcs when omitted.
    #[arg(long, value_delimiter = ',')]
    arc: Option<Vec<usize>>,
}

#[derive(Args)]
struct HuntArgs {
    /// Comma-separated part sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<usize>,
    /// Scan every orientation.
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    /// Scan N random strong instances.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_attempts: usize,
    /// Append the ledger to this file; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Serialize)]
struct RunReport {
    c: usize,
    part_sizes: Vec<usize>,
    n: usize,
    certificate: String,
    full_spectrum_count: usize,
    meets_two_arc_bound: bool,
    meets_three_arc_bound: bool,
    elapsed_ms: f64,
    verdict: &'static str,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Solve(args) => cmd_solve(args, cli.machine),
        Command::Verify(args) => cmd_verify(args, cli.machine),
        Command::Spectrum(args) => cmd_spectrum(args, cli.machine),
        Command::Hunt(args) => cmd_hunt(args, cli.machine),
    }
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn check_parts(parts: &[usize]) -> Result<(), ExitCode> {
    if parts.is_empty() {
        return Err(input_error("at least one part size is required"));
    }
    if parts.contains(&0) {
        return Err(input_error("part sizes must be positive"));
    }
    Ok(())
}

fn read_instance(path: &Path) -> Result<MultipartiteTournament, ExitCode> {
    let text = fs::read_to_string(path)
        .map_err(|e| input_error(format_args!("cannot read {}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| input_error(format_args!("{}: {e}", path.display())))
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), ExitCode> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| input_error(format_args!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_gen(args: GenArgs) -> ExitCode {
    if let Err(code) = check_parts(&args.parts) {
        return code;
    }
    let spec = GenSpec {
        part_sizes: args.parts,
        seed: args.seed,
        max_attempts: args.max_attempts,
    };
    let instance = if args.strong {
        match random_strong_mpt(&spec) {
            Ok(d) => d,
            Err(e @ GenError::AttemptsExhausted(_)) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_EXHAUSTED);
            }
            Err(e) => return input_error(e),
        }
    } else {
        random_mpt(&spec)
    };
    match write_or_print(&args.output, &instance.to_string()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

fn cmd_solve(args: SolveArgs, machine: bool) -> ExitCode {
    let d = match read_instance(&args.file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let started = Instant::now();
    let cert = match two_pancyclic_arcs(&d) {
        Ok(cert) => cert,
        Err(e @ (ConstructError::NotStrong | ConstructError::TooFewParts(_))) => {
            return input_error(e);
        }
        Err(e) => {
            // NoThreeCycle or Internal on a strong input can only be a bug
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    };
    if let Err(violations) = verify_certificate(&d, &cert) {
        eprintln!("error: constructed certificate failed verification (bug):");
        for v in violations {
            eprintln!("  {v}");
        }
        return ExitCode::from(EXIT_FAILURE);
    }
    let report = conjecture_report(&d).expect("instance already validated");
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let json = certificate_to_json(&cert);
    let to_stdout = args.output.is_none();
    if let Err(code) = write_or_print(&args.output, &json) {
        return code;
    }
    let run = RunReport {
        c: d.part_count(),
        part_sizes: d.part_sizes().to_vec(),
        n: d.vertex_count(),
        certificate: args
            .output
            .as_ref()
            .map_or_else(|| "inline".to_string(), |p| p.display().to_string()),
        full_spectrum_count: report.full_spectrum_count,
        meets_two_arc_bound: report.meets_two_arc_bound,
        meets_three_arc_bound: report.meets_three_arc_bound,
        elapsed_ms,
        verdict: "ok",
    };
    let rendered = if machine {
        format!(
            "{}\n",
            serde_json::to_string(&run).expect("report serializes")
        )
    } else {
        format!(
            "instance: c={} parts={:?} n={}\ncertificate: {} (verified)\nfull-spectrum arcs: {} (two-arc bound {}, three-arc bound {})\ntime: {:.1}ms\n",
            run.c,
            run.part_sizes,
            run.n,
            run.certificate,
            run.full_spectrum_count,
            if run.meets_two_arc_bound { "met" } else { "MISSED" },
            if run.meets_three_arc_bound { "met" } else { "missed" },
            run.elapsed_ms
        )
    };
    // keep stdout clean for the certificate when it goes there
    if to_stdout {
        eprint!("{rendered}");
    } else {
        print!("{rendered}");
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs, machine: bool) -> ExitCode {
    let d = match read_instance(&args.file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let cert_text = match fs::read_to_string(&args.cert) {
        Ok(t) => t,
        Err(e) => return input_error(format_args!("cannot read {}: {e}", args.cert.display())),
    };
    let cert = match certificate_from_json(&cert_text) {
        Ok(c) => c,
        Err(e) => return input_error(format_args!("{}: {e}", args.cert.display())),
    };
    match verify_certificate(&d, &cert) {
        Ok(()) => {
            println!("certificate ok");
            ExitCode::SUCCESS
        }
        Err(violations) => {
            if machine {
                println!(
                    "{}",
                    serde_json::to_string(&violations).expect("violations serialize")
                );
            } else {
                println!("certificate INVALID:");
                for v in &violations {
                    println!("  {v}");
                }
            }
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn cmd_spectrum(args: SpectrumArgs, machine: bool) -> ExitCode {
    let d = match read_instance(&args.file) {
        Ok(d) => d,
        Err(code) => return code,
    };
    let n = d.vertex_count();
    let rows: Vec<ArcSpectrum> = match &args.arc {
        Some(pair) => {
            if pair.len() != 2 {
                return input_error("--arc expects exactly tail,head");
            }
            let arc = TArc::new(pair[0], pair[1]);
            if !d.has_arc(arc) {
                return input_error(format_args!("arc {arc} is not present"));
            }
            let lengths =
                cycle_lengths_through_arc(&d, arc, n).expect("arc presence already checked");
            vec![ArcSpectrum { arc, lengths }]
        }
        None => arc_spectra(&d, n),
    };
    let full_count = full_spectrum_arcs(&d).len();
    if machine {
        #[derive(Serialize)]
        struct SpectrumReport {
            c: usize,
            rows: Vec<ArcSpectrum>,
            full_spectrum_count: usize,
        }
        println!(
            "{}",
            serde_json::to_string(&SpectrumReport {
                c: d.part_count(),
                rows,
                full_spectrum_count: full_count,
            })
            .expect("report serializes")
        );
    } else {
        for row in &rows {
            let lengths = row
                .lengths
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            println!("arc {}: {{{lengths}}}", row.arc);
        }
        println!(
            "full-spectrum arcs (3..={}): {full_count}",
            d.part_count()
        );
    }
    ExitCode::SUCCESS
}

fn cmd_hunt(args: HuntArgs, machine: bool) -> ExitCode {
    if let Err(code) = check_parts(&args.parts) {
        return code;
    }
    let mode = match (args.exhaustive, args.random) {
        (true, None) => HuntMode::Exhaustive,
        (false, Some(count)) => HuntMode::Random {
            count,
            seed: args.seed,
        },
        (false, None) => return input_error("pick a mode: --exhaustive or --random N"),
        (true, Some(_)) => unreachable!("clap rejects conflicting modes"),
    };
    let cfg = HuntConfig {
        part_sizes: args.parts,
        mode,
        max_attempts: args.max_attempts,
    };
    let ledger = match run_hunt(&cfg) {
        Ok(ledger) => ledger,
        Err(HuntError::Gen(e @ GenError::AttemptsExhausted(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_EXHAUSTED);
        }
        Err(e) => return input_error(e),
    };
    let rendered = if machine {
        format!(
            "{}\n",
            serde_json::to_string(&ledger).expect("ledger serializes")
        )
    } else {
        ledger.render()
    };
    let wrote = match &args.report {
        Some(path) => append_to(path, &rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(code) = wrote {
        return code;
    }
    if ledger.has_critical() {
        eprintln!("error: critical findings recorded");
        ExitCode::from(EXIT_FAILURE)
    } else {
        ExitCode::SUCCESS
    }
}

fn append_to(path: &Path, content: &str) -> Result<(), ExitCode> {
    use std::io::Write;
    let mut file = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| input_error(format_args!("cannot open {}: {e}", path.display())))?;
    file.write_all(content.as_bytes())
        .map_err(|e| input_error(format_args!("cannot write {}: {e}", path.display())))
}
