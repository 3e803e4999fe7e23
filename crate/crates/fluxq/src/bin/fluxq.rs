//! Thin command-line front end over the `fluxq` library.

use clap::{Parser, Subcommand, ValueEnum};
use fluxq::harmonic::{coupling_estimate, harmonic_1d, harmonic_2d, CouplingKind};
use fluxq::plan::{
    parse_config, run_single, run_sweep, write_csv, write_jsonl, columns, CutoffPolicy,
    ExperimentPlan, MethodConfig, PlanError,
};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fluxq", version, about = "Coupled flux-qubit circuit solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Dense,
    Lanczos,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single circuit configuration and print one result row.
    Solve {
        /// JSON experiment config.
        #[arg(long)]
        config: PathBuf,
        /// Output file (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Charge cutoff N, or "auto".
        #[arg(long)]
        cutoff: Option<String>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the parameter sweep declared in the config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        cutoff: Option<String>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print closed-form double-well estimates for one qubit.
    Harmonic {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        r: f64,
        /// Coupling strength entering the loaded mass and estimates.
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
    },
    /// Parse and validate a config without running it.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn apply_overrides(
    plan: &mut ExperimentPlan,
    cutoff: &Option<String>,
    method: &Option<MethodArg>,
) -> Result<(), String> {
    if let Some(text) = cutoff {
        plan.solver.cutoff = if text == "auto" {
            CutoffPolicy::Auto(fluxq::plan::AutoKeyword::Auto)
        } else {
            let n: usize = text
                .parse()
                .map_err(|_| format!("--cutoff must be an integer or \"auto\", got {text:?}"))?;
            CutoffPolicy::Fixed(n)
        };
    }
    if let Some(m) = method {
        plan.solver.method = match m {
            MethodArg::Dense => MethodConfig::Dense,
            MethodArg::Lanczos => MethodConfig::Lanczos,
            MethodArg::Auto => MethodConfig::Auto,
        };
    }
    plan.validate().map_err(|e| e.to_string())
}

fn load_plan(path: &PathBuf) -> Result<ExperimentPlan, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path:?}: {e}"))?;
    parse_config(&text).map_err(|e| e.to_string())
}

fn configure_jobs(jobs: Option<usize>) -> Result<(), String> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| format!("cannot configure {n} worker threads: {e}"))?;
    }
    Ok(())
}

fn emit(
    plan: &ExperimentPlan,
    rows: &[fluxq::plan::SweepRow],
    output: &Option<PathBuf>,
    format: FormatArg,
) -> Result<(), PlanError> {
    let mut buffer: Vec<u8> = Vec::new();
    match format {
        FormatArg::Csv => write_csv(plan, rows, &mut buffer)?,
        FormatArg::Jsonl => write_jsonl(plan, rows, &mut buffer)?,
    }
    match output {
        Some(path) => fs::write(path, buffer)?,
        None => std::io::stdout().write_all(&buffer)?,
    }
    Ok(())
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve {
            config,
            output,
            format,
            cutoff,
            method,
            jobs,
        } => {
            configure_jobs(jobs)?;
            let mut plan = load_plan(&config)?;
            apply_overrides(&mut plan, &cutoff, &method)?;
            let row = run_single(&plan).map_err(|e| e.to_string())?;
            emit(&plan, &[row], &output, format).map_err(|e| e.to_string())
        }
        Command::Sweep {
            config,
            output,
            format,
            cutoff,
            method,
            jobs,
        } => {
            configure_jobs(jobs)?;
            let mut plan = load_plan(&config)?;
            apply_overrides(&mut plan, &cutoff, &method)?;
            let rows = run_sweep(&plan).map_err(|e| e.to_string())?;
            emit(&plan, &rows, &output, format).map_err(|e| e.to_string())
        }
        Command::Harmonic { alpha, r, gamma } => {
            let m = harmonic_1d(alpha, r, gamma).map_err(|e| e.to_string())?;
            println!("phi_star   {:.9}", m.phi_star);
            println!("m_tilde    {:.9}", m.m);
            println!("omega      {:.9}", m.omega);
            println!("overlap    {:.9e}", m.overlap);
            println!("gap        {:.9e}", m.gap);
            println!("epsilon    {:.9e}", m.epsilon);
            println!("eta        {:.9e}", m.eta);
            if let Ok(m2) = harmonic_2d(alpha, r, gamma) {
                println!("overlap_2d {:.9e}", m2.overlap_intra);
                println!("overlap_ic {:.9e}", m2.overlap_inter);
            }
            if gamma > 0.0 {
                if let Ok(c) = coupling_estimate(CouplingKind::Capacitor, alpha, r, gamma) {
                    println!("J_yy_cap   {:.9e}", c.j_yy);
                }
                if let Ok(j) = coupling_estimate(CouplingKind::Junction, alpha, r, gamma) {
                    println!("J_xx_jj    {:.9e}", j.j_xx);
                    println!("J_zz_jj    {:.9e}", j.j_zz);
                }
            }
            Ok(())
        }
        Command::Validate { config } => {
            let plan = load_plan(&config)?;
            println!("OK plan_hash={:016x}", plan.hash());
            println!(
                "columns: {}",
                columns(plan.spectrum_k()).join(",")
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
