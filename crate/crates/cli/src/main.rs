//! `qfi`: point queries, sweeps, and SVG charts for the mean quantum
//! Fisher information of W/GHZ superpositions under decoherence.

use std::path::{Path, PathBuf};
use std::process;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use qfi_cli::runner::run_sweep_parallel;
use qfi_cli::svg::{heatmap, line_plot};
use qfi_cli::table::{format_sig12, parse_csv, to_csv, to_json};
use qfi_cli::CliError;
use qfi_core::{
    chi_squared, cramer_rao_bound, make_channel, max_mean_qfi, run_sweep, to_density,
    uniform_grid, wghz_superposition, ChannelKind, SweepSpec, QUBIT_CAP,
};

#[derive(Parser)]
#[command(name = "qfi", version, about = "Mean quantum Fisher information of W/GHZ superpositions under decoherence channels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one (alpha, p, channel) point and print a report.
    Point(PointArgs),
    /// Sweep grids of alpha and p and write a CSV or JSON table.
    Sweep(SweepArgs),
    /// Render a sweep CSV as an SVG line chart or heatmap.
    Plot(PlotArgs),
}

#[derive(Args)]
struct PointArgs {
    /// Superposition weight in [0, 1].
    #[arg(long)]
    alpha: f64,
    /// Channel strength in [0, 1].
    #[arg(long)]
    p: f64,
    /// amplitude_damping, phase_damping, or depolarizing.
    #[arg(long)]
    channel: String,
    /// Register size (2 to 10).
    #[arg(long, default_value_t = 3)]
    qubits: usize,
    /// Repetition count for the phase-uncertainty bound.
    #[arg(long, default_value_t = 1)]
    measurements: u64,
}

#[derive(Args)]
struct SweepArgs {
    /// "all" or a comma-separated subset of channel names.
    #[arg(long, default_value = "all")]
    channels: String,
    /// Number of uniform alpha samples in [0, 1] (default 101).
    #[arg(long, conflicts_with = "alpha")]
    alpha_steps: Option<usize>,
    /// Explicit comma-separated alpha values, strictly ascending.
    #[arg(long)]
    alpha: Option<String>,
    /// Number of uniform p samples in [0, 1] (default 101).
    #[arg(long, conflicts_with = "p")]
    p_steps: Option<usize>,
    /// Explicit comma-separated p values, strictly ascending.
    #[arg(long)]
    p: Option<String>,
    /// Register size (2 to 10).
    #[arg(long, default_value_t = 3)]
    qubits: usize,
    /// Output file path.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Evaluate cells on one thread instead of in parallel.
    #[arg(long)]
    serial: bool,
}

#[derive(Args)]
struct PlotArgs {
    /// Sweep CSV to read.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    kind: PlotKind,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    Line,
    Heatmap,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                process::exit(0);
            }
            let _ = err.print();
            process::exit(1);
        }
    };
    let result = match cli.command {
        Command::Point(args) => cmd_point(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Plot(args) => cmd_plot(&args),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        process::exit(err.exit_code());
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_unit_range(name: &str, value: f64) -> Result<(), CliError> {
    if !(0.0..=1.0).contains(&value) || value.is_nan() {
        return Err(usage(format!("--{name} = {value} must lie in [0, 1]")));
    }
    Ok(())
}

fn check_qubits(qubits: usize) -> Result<(), CliError> {
    if !(2..=QUBIT_CAP).contains(&qubits) {
        return Err(usage(format!("--qubits = {qubits} must lie in [2, {QUBIT_CAP}]")));
    }
    Ok(())
}

fn parse_channel(name: &str) -> Result<ChannelKind, CliError> {
    name.parse().map_err(|_| {
        usage(format!(
            "--channel(s) = {name:?} must be one of amplitude_damping, phase_damping, depolarizing (or \"all\")"
        ))
    })
}

fn parse_channels(list: &str) -> Result<Vec<ChannelKind>, CliError> {
    if list == "all" {
        return Ok(ChannelKind::ALL.to_vec());
    }
    let mut channels = Vec::new();
    for name in list.split(',') {
        let kind = parse_channel(name.trim())?;
        if !channels.contains(&kind) {
            channels.push(kind);
        }
    }
    Ok(channels)
}

fn parse_grid(flag: &str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|field| {
            field
                .trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("--{flag}: {field:?} is not a number")))
        })
        .collect()
}

fn cmd_point(args: &PointArgs) -> Result<(), CliError> {
    check_unit_range("alpha", args.alpha)?;
    check_unit_range("p", args.p)?;
    check_qubits(args.qubits)?;
    if args.measurements < 1 {
        return Err(usage(format!("--measurements = {} must be at least 1", args.measurements)));
    }
    let channel = parse_channel(&args.channel)?;

    let compute = |e: qfi_core::Error| CliError::Compute(e.to_string());
    let psi = wghz_superposition(args.alpha, args.qubits).map_err(compute)?;
    let noisy = qfi_core::apply_uniform(
        &to_density(&psi),
        &make_channel(channel, args.p).map_err(compute)?,
    )
    .map_err(compute)?;
    let result = max_mean_qfi(&noisy).map_err(compute)?;
    let verdict = chi_squared(&result);
    // A state with no usable QFI cannot estimate a phase at all; the bound
    // degenerates to infinity together with the chi-squared sentinel.
    let bound = if verdict.value.is_infinite() {
        "inf".into()
    } else {
        match cramer_rao_bound(result.total_qfi, args.measurements) {
            Ok(value) => format_sig12(value),
            Err(_) => "inf".into(),
        }
    };

    let direction = result.optimal_direction.components();
    println!("channel            {}", channel);
    println!("alpha              {}", format_sig12(args.alpha));
    println!("p                  {}", format_sig12(args.p));
    println!("qubits             {}", args.qubits);
    println!("mean_qfi           {}", format_sig12(result.mean_qfi));
    println!("total_qfi          {}", format_sig12(result.total_qfi));
    println!("chi_squared        {}", format_sig12(verdict.value));
    println!("useful             {}", verdict.useful);
    println!(
        "optimal_direction  ({}, {}, {})",
        format_sig12(direction[0]),
        format_sig12(direction[1]),
        format_sig12(direction[2])
    );
    println!("cramer_rao_bound   {}  (measurements = {})", bound, args.measurements);
    Ok(())
}

fn build_spec(args: &SweepArgs) -> Result<SweepSpec, CliError> {
    check_qubits(args.qubits)?;
    let channels = parse_channels(&args.channels)?;
    let alpha_grid = match (&args.alpha, args.alpha_steps) {
        (Some(list), _) => parse_grid("alpha", list)?,
        (None, Some(steps)) => {
            if steps < 1 {
                return Err(usage("--alpha-steps must be at least 1"));
            }
            uniform_grid(steps)
        }
        (None, None) => uniform_grid(qfi_core::sweep::DEFAULT_GRID_POINTS),
    };
    let p_grid = match (&args.p, args.p_steps) {
        (Some(list), _) => parse_grid("p", list)?,
        (None, Some(steps)) => {
            if steps < 1 {
                return Err(usage("--p-steps must be at least 1"));
            }
            uniform_grid(steps)
        }
        (None, None) => uniform_grid(qfi_core::sweep::DEFAULT_GRID_POINTS),
    };
    SweepSpec::new(channels, alpha_grid, p_grid, args.qubits)
        .map_err(|e| usage(format!("invalid sweep flags: {e}")))
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let spec = build_spec(args)?;
    let rows = if args.serial {
        run_sweep(&spec)
    } else {
        run_sweep_parallel(&spec)
    }
    .map_err(|e| CliError::Compute(e.to_string()))?;
    let contents = match args.format {
        Format::Csv => to_csv(&rows),
        Format::Json => to_json(&spec, &rows),
    };
    write_output(&args.out, &contents)?;
    eprintln!("wrote {} rows to {}", rows.len(), args.out.display());
    Ok(())
}

fn cmd_plot(args: &PlotArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|source| CliError::Io { path: args.input.clone(), source })?;
    let rows = parse_csv(&text)
        .map_err(|e| CliError::Compute(format!("{}: {e}", args.input.display())))?;
    let svg = match args.kind {
        PlotKind::Line => line_plot(&rows),
        PlotKind::Heatmap => heatmap(&rows),
    }
    .map_err(|e| CliError::Compute(e.to_string()))?;
    write_output(&args.out, &svg)?;
    eprintln!("wrote {}", args.out.display());
    Ok(())
}

fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
