//! Result serialization: trajectory CSV and run summaries.
//!
//! The CSV layout is one row per (step, information type, player):
//!
//! ```text
//! t,info_type,player,x,y,z,stage_payoff,tau,q,nash_gap
//! ```
//!
//! sorted by step, then information-type name, then player index. `q` is the
//! player's cumulative disclosure *before* the step — the value its `tau` was
//! computed from. Floats carry twelve significant digits, enough to
//! round-trip the dynamics for plotting or diffing without drowning readers
//! in noise.

use std::io;

use serde::Serialize;

use crate::dynamics::{McEstimate, Trajectory};
use crate::error::{Error, Result};
use crate::scenario::ScenarioConfig;
use crate::strategy::Strategy;

/// Number of consecutive steps a profile must hold still to count as settled.
pub const STATIONARITY_WINDOW: usize = 10;
/// Sup-norm movement below this threshold counts as holding still.
pub const STATIONARITY_TOL: f64 = 1e-3;

/// Formats `v` with twelve significant digits: plain decimal notation down to
/// 1e-4, scientific below that, and a fixed all-zeros form for zero itself.
pub fn fmt_sig(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0.000000000000".to_owned();
    }
    let magnitude = v.abs();
    if magnitude >= 1e-4 {
        let decimals = (11 - magnitude.log10().floor() as i64).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.11e}")
    }
}

/// Writes every trajectory to one CSV stream in the documented layout.
pub fn write_trajectory_csv<W: io::Write>(writer: W, trajectories: &[Trajectory]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record([
        "t",
        "info_type",
        "player",
        "x",
        "y",
        "z",
        "stage_payoff",
        "tau",
        "q",
        "nash_gap",
    ])?;

    let mut order: Vec<usize> = (0..trajectories.len()).collect();
    order.sort_by(|&a, &b| trajectories[a].info_type.cmp(&trajectories[b].info_type));
    let horizon = trajectories
        .iter()
        .map(Trajectory::horizon)
        .max()
        .unwrap_or(0);

    for t in 0..horizon {
        for &ti in &order {
            let traj = &trajectories[ti];
            if t >= traj.horizon() {
                continue;
            }
            let step = &traj.steps[t];
            for (j, s) in step.profile.iter().enumerate() {
                wtr.write_record([
                    t.to_string(),
                    traj.info_type.clone(),
                    j.to_string(),
                    fmt_sig(s.x),
                    fmt_sig(s.y),
                    fmt_sig(s.z),
                    fmt_sig(step.payoffs[j].total),
                    fmt_sig(step.taus[j]),
                    fmt_sig(step.q[j]),
                    fmt_sig(step.nash_gaps[j]),
                ])?;
            }
        }
    }
    wtr.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Writes the trajectory CSV to a file, naming the path in any I/O error.
pub fn write_trajectory_file(path: &str, trajectories: &[Trajectory]) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    write_trajectory_csv(io::BufWriter::new(file), trajectories)
}

/// End-of-run digest of one whole scenario, JSON-serializable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub scenario: String,
    pub nodes: usize,
    pub horizon: usize,
    pub rho: f64,
    pub info_types: Vec<TypeSummary>,
}

/// End-of-run digest of one information type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TypeSummary {
    pub name: String,
    pub final_profiles: Vec<Strategy>,
    pub final_taus: Vec<f64>,
    /// Per-player distance from optimality at the final recorded step.
    pub nash_gaps: Vec<f64>,
    pub horizon_payoffs: Vec<f64>,
    /// Earliest step after which the profile held still for
    /// [`STATIONARITY_WINDOW`] steps, if any.
    pub stationarity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<McSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_check: Option<GridCheckSummary>,
}

/// Monte Carlo cross-check attached to a summary when requested.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McSummary {
    pub trials: u64,
    pub seed: u64,
    pub means: Vec<f64>,
    pub std_errors: Vec<f64>,
    /// The deterministic horizon payoffs the estimate should bracket.
    pub analytic: Vec<f64>,
}

impl McSummary {
    pub fn new(estimate: &McEstimate, seed: u64, analytic: Vec<f64>) -> Self {
        McSummary {
            trials: estimate.trials,
            seed,
            means: estimate.means.clone(),
            std_errors: estimate.std_errors.clone(),
            analytic,
        }
    }
}

/// Result of auditing every recorded best response against the brute-force
/// lattice oracle: the worst shortfall found and where it occurred.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridCheckSummary {
    pub resolution: usize,
    pub max_value_shortfall: f64,
    pub at_step: usize,
    pub at_player: usize,
}

/// Digests finished trajectories into a [`RunSummary`] (without the optional
/// Monte Carlo and grid-check attachments, which the caller adds).
pub fn summarize(
    scenario: &str,
    config: &ScenarioConfig,
    trajectories: &[Trajectory],
) -> Result<RunSummary> {
    let info_types = trajectories
        .iter()
        .map(|traj| {
            let last = traj.steps.last().expect("runs have at least one step");
            Ok(TypeSummary {
                name: traj.info_type.clone(),
                final_profiles: last.profile.clone(),
                final_taus: last.taus.clone(),
                nash_gaps: last.nash_gaps.clone(),
                horizon_payoffs: traj.horizon_payoffs(config.rho)?,
                stationarity: traj.stationarity(STATIONARITY_WINDOW, STATIONARITY_TOL),
                monte_carlo: None,
                grid_check: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RunSummary {
        scenario: scenario.to_owned(),
        nodes: config.graph.nodes,
        horizon: config.horizon,
        rho: config.rho,
        info_types,
    })
}
