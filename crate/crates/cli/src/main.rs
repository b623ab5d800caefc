//! Command-line front end: λ sweeps, crossover search, and per-outcome
//! tables, emitted as CSV to stdout or a file.
//!
//! Exit codes: 0 on success, 1 on runtime failure, 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use qdiscord::correlations::DiscordOptions;
use qdiscord::{
    channel, find_crossover, outcomes, sweep, ChannelKind, CurveSelector, MeasuredQubitRule,
    ProtocolOptions,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChannelArg {
    #[value(name = "cluster4")]
    Cluster4,
    #[value(name = "omega4")]
    Omega4,
    #[value(name = "w3")]
    W3,
}

impl From<ChannelArg> for ChannelKind {
    fn from(value: ChannelArg) -> Self {
        match value {
            ChannelArg::Cluster4 => ChannelKind::Cluster4,
            ChannelArg::Omega4 => ChannelKind::Omega4,
            ChannelArg::W3 => ChannelKind::W3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    #[value(name = "sweep")]
    Sweep,
    #[value(name = "crossover-discord")]
    CrossoverDiscord,
    #[value(name = "crossover-fidelity")]
    CrossoverFidelity,
    #[value(name = "single")]
    Single,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MeasureQubitArg {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
    #[value(name = "min")]
    Min,
}

impl From<MeasureQubitArg> for MeasuredQubitRule {
    fn from(value: MeasureQubitArg) -> Self {
        match value {
            MeasureQubitArg::Zero => MeasuredQubitRule::First,
            MeasureQubitArg::One => MeasuredQubitRule::Second,
            MeasureQubitArg::Min => MeasuredQubitRule::Min,
        }
    }
}

/// Werner-pair preparation statistics over a shared entangled channel.
#[derive(Parser, Debug)]
#[command(name = "qdiscord", version, about)]
struct Args {
    /// Shared channel.
    #[arg(long, value_enum, default_value_t = ChannelArg::Cluster4)]
    channel: ChannelArg,

    /// What to compute.
    #[arg(long, value_enum, default_value_t = ModeArg::Sweep)]
    mode: ModeArg,

    /// Lower end of the λ range (sweeps and crossover brackets).
    #[arg(long = "lambda-min", default_value_t = 0.0)]
    lambda_min: f64,

    /// Upper end of the λ range.
    #[arg(long = "lambda-max", default_value_t = 1.0)]
    lambda_max: f64,

    /// Number of sweep rows, endpoints included.
    #[arg(long, default_value_t = 51)]
    steps: usize,

    /// Werner parameter for `--mode single`.
    #[arg(long, required_if_eq("mode", "single"))]
    lambda: Option<f64>,

    /// Polar resolution of the discord minimizer's seeding grid.
    #[arg(long = "grid-theta", default_value_t = 32)]
    grid_theta: usize,

    /// Azimuthal resolution of the seeding grid.
    #[arg(long = "grid-phi", default_value_t = 64)]
    grid_phi: usize,

    /// Function tolerance of the minimizer refinement.
    #[arg(long = "refine-tol", default_value_t = 1e-8)]
    refine_tol: f64,

    /// Which qubit of each conditional state is measured for its discord.
    #[arg(long = "measure-qubit", value_enum, default_value_t = MeasureQubitArg::One)]
    measure_qubit: MeasureQubitArg,

    /// Output file; stdout when omitted. Written atomically (temp + rename).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    eprintln!("usage: qdiscord [--channel cluster4|omega4|w3] [--mode sweep|crossover-discord|crossover-fidelity|single] [options]");
    eprintln!("run `qdiscord --help` for the full flag list");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();

    if !(0.0..=1.0).contains(&args.lambda_min)
        || !(0.0..=1.0).contains(&args.lambda_max)
        || args.lambda_min >= args.lambda_max
    {
        return usage_error("--lambda-min/--lambda-max must satisfy 0 <= min < max <= 1");
    }
    if args.mode == ModeArg::Sweep && args.steps < 2 {
        return usage_error("--steps must be at least 2");
    }
    if let Some(lambda) = args.lambda {
        if !(0.0..=1.0).contains(&lambda) {
            return usage_error("--lambda must lie in [0, 1]");
        }
    }
    if args.grid_theta < 2 || args.grid_phi < 2 {
        return usage_error("--grid-theta and --grid-phi must be at least 2");
    }
    if args.refine_tol.is_nan() || args.refine_tol <= 0.0 {
        return usage_error("--refine-tol must be positive");
    }

    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(args: &Args) -> Result<(), String> {
    let kind: ChannelKind = args.channel.into();
    let ch = channel::<f64>(kind);
    let opts = ProtocolOptions {
        discord: DiscordOptions {
            grid_theta: args.grid_theta,
            grid_phi: args.grid_phi,
            refine_tol: args.refine_tol,
            ..DiscordOptions::default()
        },
        measured_qubit: args.measure_qubit.into(),
    };

    let mut output = String::new();
    match args.mode {
        ModeArg::Sweep => {
            let rows = sweep(&ch, args.lambda_min, args.lambda_max, args.steps, &opts)
                .map_err(|e| e.to_string())?;
            output.push_str(
                "lambda,alice_discord,avg_bob_discord,alice_fid_upper,avg_bob_fid_upper,avg_bob_fid_lower,outcomes_used\n",
            );
            for row in rows {
                writeln!(
                    output,
                    "{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{}",
                    row.lambda,
                    row.alice_discord,
                    row.avg_bob_discord,
                    row.alice_fidelity_upper,
                    row.avg_bob_fidelity_upper,
                    row.avg_bob_fidelity_lower,
                    row.outcome_count_used
                )
                .expect("writing to a String cannot fail");
            }
        }
        ModeArg::CrossoverDiscord | ModeArg::CrossoverFidelity => {
            let curve = if args.mode == ModeArg::CrossoverDiscord {
                CurveSelector::Discord
            } else {
                CurveSelector::FidelityUpper
            };
            let lambda_star = find_crossover(&ch, curve, (args.lambda_min, args.lambda_max), &opts)
                .map_err(|e| e.to_string())?;
            writeln!(
                output,
                "{},{},{:.6}",
                kind.name(),
                curve.name(),
                lambda_star
            )
            .expect("writing to a String cannot fail");
        }
        ModeArg::Single => {
            let lambda = args.lambda.expect("clap enforces --lambda for single mode");
            let records = outcomes(lambda, &ch, &opts).map_err(|e| e.to_string())?;
            output.push_str("i,N_i,discord_i,fid_lower_i,fid_upper_i\n");
            for record in records {
                if let (Some(discord), Some(bounds)) = (record.discord, record.bounds) {
                    writeln!(
                        output,
                        "{},{:.6},{:.6},{:.6},{:.6}",
                        record.index, record.probability, discord, bounds.lower, bounds.upper
                    )
                    .expect("writing to a String cannot fail");
                }
            }
        }
    }

    write_output(args.out.as_deref(), &output).map_err(|e| format!("writing output: {e}"))
}

/// Prints to stdout, or writes the whole payload to a temporary sibling file
/// and renames it into place so no partial file survives a failure.
fn write_output(out: Option<&std::path::Path>, content: &str) -> std::io::Result<()> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".tmp");
            let tmp = PathBuf::from(tmp);
            std::fs::write(&tmp, content)?;
            std::fs::rename(&tmp, path)
        }
    }
}
