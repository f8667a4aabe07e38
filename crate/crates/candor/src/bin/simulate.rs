//! Thin command-line wrapper: load a scenario, run the learning dynamics,
//! emit trajectory CSV and/or a run summary.

use std::io::Write as _;

use clap::Parser;

use candor::best_response::{best_response, grid_oracle};
use candor::dynamics::{monte_carlo_payoff, run, Trajectory};
use candor::error::Result;
use candor::output::{
    summarize, write_trajectory_csv, write_trajectory_file, GridCheckSummary, McSummary, RunSummary,
};
use candor::payoff::TauSchedule;
use candor::scenario::{load_scenario, ScenarioConfig};

/// Simulate information release, withholding, and deception on a social
/// graph: each player learns toward a myopic best response while the odds of
/// a lie being discovered climb.
///
/// With no output flags the trajectory CSV streams to stdout. Requesting a
/// Monte Carlo cross-check or a grid audit implies `--summary`.
#[derive(Debug, Parser)]
#[command(name = "simulate", version)]
struct Args {
    /// Built-in scenario name (game1, game2, game3) or path to a JSON file.
    #[arg(long)]
    scenario: String,

    /// Write the trajectory CSV to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<String>,

    /// Override the number of learning steps.
    #[arg(long, value_name = "N")]
    steps: Option<usize>,

    /// Override every player's learning rate (0 <= eps < 1).
    #[arg(long, value_name = "EPS")]
    epsilon: Option<f64>,

    /// Override every player's privacy-value-of-a-lie factor.
    #[arg(long, value_name = "ETA")]
    eta: Option<f64>,

    /// Override the discount factor (0 < rho <= 1).
    #[arg(long, value_name = "RHO")]
    rho: Option<f64>,

    /// Switch the discovery-probability schedule, keeping its bounds.
    #[arg(long, value_enum, value_name = "MODE")]
    tau_mode: Option<TauModeArg>,

    /// Cumulative disclosure at which a q-based schedule saturates
    /// (default: half the horizon).
    #[arg(long, value_name = "Q")]
    tau_saturation: Option<f64>,

    /// Cross-check analytic payoffs with this many Monte Carlo trials.
    #[arg(long, value_name = "N")]
    mc_trials: Option<u64>,

    /// Seed for the Monte Carlo generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Audit every recorded best response against a brute-force lattice of
    /// this resolution.
    #[arg(long, value_name = "RESOLUTION", num_args = 0..=1, default_missing_value = "150")]
    grid_check: Option<usize>,

    /// Print a human-readable end-of-run summary.
    #[arg(long)]
    summary: bool,

    /// Write the run summary as JSON to this file ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    summary_json: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum TauModeArg {
    Linear,
    QBased,
}

fn apply_overrides(config: &mut ScenarioConfig, args: &Args) {
    if let Some(steps) = args.steps {
        config.horizon = steps;
    }
    if let Some(rho) = args.rho {
        config.rho = rho;
    }
    if let Some(eps) = args.epsilon {
        for p in &mut config.players {
            p.epsilon = eps;
        }
        for info_type in &mut config.info_types {
            if let Some(params) = &mut info_type.params {
                for p in params {
                    p.epsilon = eps;
                }
            }
        }
    }
    if let Some(eta) = args.eta {
        for p in &mut config.players {
            p.eta = eta;
        }
        for info_type in &mut config.info_types {
            if let Some(params) = &mut info_type.params {
                for p in params {
                    p.eta = eta;
                }
            }
        }
    }
    if let Some(mode) = args.tau_mode {
        let (tau_min, tau_max) = match config.tau {
            TauSchedule::Linear { tau_min, tau_max } => (tau_min, tau_max),
            TauSchedule::QBased {
                tau_min, tau_max, ..
            } => (tau_min, tau_max),
        };
        config.tau = match mode {
            TauModeArg::Linear => TauSchedule::Linear { tau_min, tau_max },
            TauModeArg::QBased => TauSchedule::QBased {
                tau_min,
                tau_max,
                saturation_count: args.tau_saturation.unwrap_or(config.horizon as f64 / 2.0),
            },
        };
    } else if let Some(saturation) = args.tau_saturation {
        if let TauSchedule::QBased {
            saturation_count, ..
        } = &mut config.tau
        {
            *saturation_count = saturation;
        }
    }
}

/// Worst payoff shortfall of the enumerated best response against the
/// brute-force lattice, across every recorded step and player.
fn audit_against_grid(
    config: &ScenarioConfig,
    trajectories: &[Trajectory],
    resolution: usize,
) -> Result<Vec<GridCheckSummary>> {
    let graph = config.build_graph()?;
    trajectories
        .iter()
        .enumerate()
        .map(|(ti, traj)| {
            let params = config.params_for(ti);
            let mut worst = GridCheckSummary {
                resolution,
                max_value_shortfall: 0.0,
                at_step: 0,
                at_player: 0,
            };
            for (t, step) in traj.steps.iter().enumerate() {
                for (j, player) in params.iter().enumerate().take(step.profile.len()) {
                    let avg = graph.strategy_averages(j, &step.profile)?;
                    let fast = best_response(avg, player, step.taus[j], config.tie_break);
                    let slow =
                        grid_oracle(avg, player, step.taus[j], resolution, config.tie_break)?;
                    let shortfall = (slow.value - fast.value).max(0.0);
                    if shortfall > worst.max_value_shortfall {
                        worst.max_value_shortfall = shortfall;
                        worst.at_step = t;
                        worst.at_player = j;
                    }
                }
            }
            Ok(worst)
        })
        .collect()
}

fn print_summary(summary: &RunSummary) {
    println!(
        "scenario {}: {} nodes, horizon {}, rho {}",
        summary.scenario, summary.nodes, summary.horizon, summary.rho
    );
    for ts in &summary.info_types {
        println!("  [{}]", ts.name);
        match ts.stationarity {
            Some(t) => println!("    stationary from step {t}"),
            None => println!("    never stationary within the run"),
        }
        for (j, s) in ts.final_profiles.iter().enumerate() {
            println!(
                "    player {j}: final (x, y, z) = ({:.6}, {:.6}, {:.6})  tau {:.4}  gap {:.3e}  payoff {:.6}",
                s.x, s.y, s.z, ts.final_taus[j], ts.nash_gaps[j], ts.horizon_payoffs[j]
            );
        }
        if let Some(mc) = &ts.monte_carlo {
            println!("    monte carlo ({} trials, seed {}):", mc.trials, mc.seed);
            for j in 0..mc.means.len() {
                println!(
                    "      player {j}: {:.6} +/- {:.6} (analytic {:.6})",
                    mc.means[j], mc.std_errors[j], mc.analytic[j]
                );
            }
        }
        if let Some(gc) = &ts.grid_check {
            println!(
                "    grid check (resolution {}): max shortfall {:.3e} at step {}, player {}",
                gc.resolution, gc.max_value_shortfall, gc.at_step, gc.at_player
            );
        }
    }
}

fn run_main(args: &Args) -> Result<()> {
    let mut config = load_scenario(&args.scenario)?;
    apply_overrides(&mut config, args);
    config.validate()?;
    let trajectories = run(&config)?;

    if let Some(path) = &args.out {
        write_trajectory_file(path, &trajectories)?;
    }

    let want_summary = args.summary
        || args.summary_json.is_some()
        || args.mc_trials.is_some()
        || args.grid_check.is_some();

    if !want_summary && args.out.is_none() {
        let stdout = std::io::stdout();
        write_trajectory_csv(stdout.lock(), &trajectories)?;
        return Ok(());
    }
    if !want_summary {
        return Ok(());
    }

    let mut summary = summarize(&args.scenario, &config, &trajectories)?;
    if let Some(trials) = args.mc_trials {
        let estimates = monte_carlo_payoff(&config, trials, args.seed)?;
        for (ts, estimate) in summary.info_types.iter_mut().zip(&estimates) {
            ts.monte_carlo = Some(McSummary::new(
                estimate,
                args.seed,
                ts.horizon_payoffs.clone(),
            ));
        }
    }
    if let Some(resolution) = args.grid_check {
        let audits = audit_against_grid(&config, &trajectories, resolution)?;
        for (ts, audit) in summary.info_types.iter_mut().zip(audits) {
            ts.grid_check = Some(audit);
        }
    }

    if args.summary || args.summary_json.is_none() {
        print_summary(&summary);
    }
    if let Some(path) = &args.summary_json {
        let json = serde_json::to_string_pretty(&summary).expect("summaries serialize infallibly");
        if path == "-" {
            println!("{json}");
        } else {
            let mut file = std::fs::File::create(path).map_err(|source| candor::Error::Io {
                path: path.clone(),
                source,
            })?;
            file.write_all(json.as_bytes())
                .and_then(|()| file.write_all(b"\n"))
                .map_err(|source| candor::Error::Io {
                    path: path.clone(),
                    source,
                })?;
        }
    }
    Ok(())
}

fn main() {
    let args = Args::parse();
    if let Err(e) = run_main(&args) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
