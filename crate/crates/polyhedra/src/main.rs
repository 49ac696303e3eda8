use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polyhedra::campaign::{run_campaign, run_tally, Campaign};
use polyhedra::cert::{cert_verify, parse_record};
use polyhedra::generate::{generate, ParallelBuilder};
use polyhedra::record::PropertyRecord;
use polyhedra::report::{CampaignReport, Format};
use polyhedra::survey::SurveyOptions;
use polyhedra_core::catalog::{family_member, FamilySpec};
use polyhedra_core::{parse_graph6, to_graph6};

#[derive(Parser)]
#[command(
    name = "polyhedra",
    version,
    about = "Exhaustive checks on polyhedral graphs"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for per-order result caches and generator checkpoints.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Continue an interrupted run from the cache directory.
    #[arg(long, global = true)]
    resume: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Property records for graph6 lines read from a file or stdin.
    Props { input: Option<String> },
    /// Stream every polyhedral graph on N vertices as graph6.
    Gen {
        #[arg(short)]
        n: usize,
    },
    /// Print a Herschel-family member given as kind:n:mask.
    Family { spec: String },
    /// Run a verification campaign.
    Verify {
        campaign: Campaign,
        #[arg(short)]
        n: usize,
    },
    /// Per-order counts of a class, cumulative from order 4.
    Tally {
        class: TallyClass,
        #[arg(long)]
        max: usize,
    },
    /// Certificate operations.
    Cert {
        #[command(subcommand)]
        action: CertAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TallyClass {
    K26free,
}

#[derive(Subcommand)]
enum CertAction {
    /// Re-check property records from a file or stdin.
    Verify { input: Option<String> },
}

fn read_input(input: Option<&str>) -> Result<String> {
    match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
    }
}

fn emit_report(report: &CampaignReport, format: Format) -> Result<ExitCode> {
    print!("{}", report.render(format));
    Ok(if report.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = SurveyOptions {
        cache: cli.cache.clone(),
        resume: cli.resume,
    };
    let stdout = io::stdout();
    match cli.command {
        Command::Props { input } => {
            let text = read_input(input.as_deref())?;
            let mut out = BufWriter::new(stdout.lock());
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() || line.starts_with(">>graph6<<") && line.len() == 10 {
                    continue;
                }
                let g = parse_graph6(line).with_context(|| format!("line {}", i + 1))?;
                if g.order() < 3 {
                    anyhow::bail!("line {}: properties need at least three vertices", i + 1);
                }
                writeln!(out, "{}", PropertyRecord::compute(&g).to_json())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n } => {
            let checkpoint = cli.cache.as_ref().map(|d| d.join("checkpoint"));
            let mut out = BufWriter::new(stdout.lock());
            let mut count = 0u64;
            generate(
                n,
                ParallelBuilder::new(checkpoint, cli.resume),
                |k, _, codes| {
                    if k == n {
                        for c in codes {
                            writeln!(out, "{}", to_graph6(&c.to_graph()))?;
                            count += 1;
                        }
                    }
                    Ok(())
                },
            )?;
            out.flush()?;
            eprintln!("{count} graphs on {n} vertices");
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let g = family_member(spec)?;
            match cli.format {
                Format::Json => println!("{}", PropertyRecord::compute(&g).to_json()),
                Format::Csv => println!("{}", to_graph6(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { campaign, n } => {
            emit_report(&run_campaign(campaign, n, &opts)?, cli.format)
        }
        Command::Tally {
            class: TallyClass::K26free,
            max,
        } => emit_report(&run_tally(max, &opts)?, cli.format),
        Command::Cert {
            action: CertAction::Verify { input },
        } => {
            let text = read_input(input.as_deref())?;
            let mut all = true;
            let mut out = BufWriter::new(stdout.lock());
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let rec = parse_record(line).with_context(|| format!("line {}", i + 1))?;
                let ok = cert_verify(&rec);
                all &= ok;
                writeln!(
                    out,
                    "{}\t{}",
                    rec.graph6,
                    if ok { "ok" } else { "REJECTED" }
                )?;
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    code
}
