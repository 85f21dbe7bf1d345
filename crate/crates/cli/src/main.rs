use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use isac_rates::fading::ChannelParams;
use isac_rates::quadrature::QuadratureConfig;
use isac_rates::rates::{compute_rates, RateOptions, RbetaMode};
use isac_rates_cli::plot::{cmd_plotdata, Selector};
use isac_rates_cli::report::{render_breakdown, render_partial, JsonReport};
use isac_rates_cli::spec::SweepSpec;
use isac_rates_cli::sweep::{cmd_sweep, manifest_path};
use isac_rates_cli::verify::{cmd_verify, Scope, VerifyOptions};
use isac_rates_cli::{parse_count, thread_pool, CliError};

/// Achievable rates of a secure ISAC channel over correlated Rayleigh fading.
#[derive(Parser)]
#[command(name = "isac-rates", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every rate term at one channel and power.
    Rate(RateArgs),
    /// Evaluate a parameter grid and write CSV plus a JSON manifest.
    Sweep(SweepArgs),
    /// Compare closed forms and pipelines against their independent oracles.
    Verify(VerifyArgs),
    /// Split a sweep CSV into one file per subfigure.
    Plotdata(PlotArgs),
}

#[derive(Args)]
struct RateArgs {
    /// Noise variance of the legitimate receiver.
    #[arg(long, default_value_t = 1.0)]
    sn1: f64,
    /// Noise variance at the sensed target.
    #[arg(long)]
    sn2: f64,
    /// Fading second moment E[S1²].
    #[arg(long)]
    ss1: f64,
    /// Fading second moment E[S2²].
    #[arg(long)]
    ss2: f64,
    /// Power correlation coefficient cor(S1², S2²).
    #[arg(long)]
    rho2: f64,
    /// Transmit power P.
    #[arg(long)]
    power: f64,
    #[arg(long, default_value = "paper_literal")]
    mode: RbetaMode,
    /// Skip the tabulated second term and report only its bound.
    #[arg(long)]
    skip_part_b: bool,
    /// Evaluate channels that fail the degradedness condition.
    #[arg(long)]
    allow_nondegraded: bool,
    /// TOML file overriding numerical tolerances.
    #[arg(long)]
    quadrature: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep spec (TOML), a sweep manifest (JSON), or `table1` for the bundled grid.
    #[arg(long)]
    spec: String,
    /// Output CSV; the manifest is written next to it.
    #[arg(long)]
    out: PathBuf,
    /// Also run the tabulated second term (slow).
    #[arg(long)]
    with_part_b: bool,
    #[arg(long)]
    allow_nondegraded: bool,
    /// Overrides the spec's R_beta mode.
    #[arg(long)]
    mode: Option<RbetaMode>,
    /// Overrides the spec's seed (recorded in the manifest).
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (capped by ISAC_RATES_THREADS).
    #[arg(long)]
    threads: Option<usize>,
    /// Fill the `ms` column with per-row wall time (makes the CSV run-dependent).
    #[arg(long)]
    record_timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    scope: Scope,
    /// Monte Carlo samples per check, e.g. 1e7.
    #[arg(long, default_value = "1e7", value_parser = parse_count)]
    samples: u64,
    /// Samples for the three-dimensional second-term estimates.
    #[arg(long, default_value = "2e5", value_parser = parse_count)]
    part_b_samples: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    quadrature: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// CSV written by `sweep`.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    /// Keep only this correlation (one figure).
    #[arg(long)]
    rho2: Option<f64>,
    #[arg(long)]
    ss1: Option<f64>,
    #[arg(long)]
    sn2: Option<f64>,
}

fn load_quadrature(path: Option<&PathBuf>) -> Result<QuadratureConfig, CliError> {
    let Some(path) = path else {
        return Ok(QuadratureConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
    let cfg: QuadratureConfig =
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    cfg.validate()
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(cfg)
}

fn run_rate(a: RateArgs) -> Result<(), CliError> {
    let cfg = load_quadrature(a.quadrature.as_ref())?;
    let c = ChannelParams::from_values(a.sn1, a.sn2, a.ss1, a.ss2, a.rho2, a.power)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let opts = RateOptions {
        mode: a.mode,
        with_part_b: !a.skip_part_b,
        allow_nondegraded: a.allow_nondegraded,
    };
    match compute_rates(&c, &cfg, &opts) {
        Ok(r) => {
            if a.json {
                let report = JsonReport {
                    channel: &c,
                    mode: a.mode,
                    rates: &r,
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", render_breakdown(&c, a.mode, &r));
            }
            Ok(())
        }
        Err(f) => {
            if f.partial != Default::default() {
                eprint!("{}", render_partial(&c, a.mode, &f.partial));
            }
            Err(f.error.into())
        }
    }
}

fn run_sweep(a: SweepArgs) -> Result<(), CliError> {
    let mut spec = SweepSpec::load(&a.spec)?;
    spec.with_part_b |= a.with_part_b;
    spec.allow_nondegraded |= a.allow_nondegraded;
    if let Some(m) = a.mode {
        spec.mode = m;
    }
    if let Some(s) = a.seed {
        spec.seed = s;
    }
    let pool = thread_pool(a.threads)?;
    let summary = cmd_sweep(&spec, &a.out, &pool, a.record_timing)?;
    eprintln!(
        "wrote {} rows to {} (manifest {})",
        summary.rows,
        a.out.display(),
        manifest_path(&a.out).display()
    );
    Ok(())
}

fn run_verify(a: VerifyArgs) -> Result<(), CliError> {
    let opts = VerifyOptions {
        scope: a.scope,
        samples: a.samples,
        part_b_samples: a.part_b_samples,
        seed: a.seed,
        quadrature: load_quadrature(a.quadrature.as_ref())?,
    };
    let pool = thread_pool(a.threads)?;
    let report = pool.install(|| cmd_verify(&opts));
    print!("{}", report.render());
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} of {} checks failed",
            report.failed(),
            report.checks.len()
        )))
    }
}

fn run_plotdata(a: PlotArgs) -> Result<(), CliError> {
    let sel = Selector {
        rho2: a.rho2,
        ss1: a.ss1,
        sn2: a.sn2,
    };
    for path in cmd_plotdata(&a.input, &a.out_dir, sel)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Rate(a) => run_rate(a),
        Command::Sweep(a) => run_sweep(a),
        Command::Verify(a) => run_verify(a),
        Command::Plotdata(a) => run_plotdata(a),
    };
    let _ = std::io::stdout().flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
