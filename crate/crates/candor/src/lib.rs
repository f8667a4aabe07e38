//! Evolutionary dynamics of information release, withholding, and deception
//! on social graphs.
//!
//! Players on an undirected graph each split one unit of information three
//! ways every step — release it truthfully (`x`), withhold it (`y`), or lie
//! about it (`z`) — and earn a stage payoff that weighs social capital,
//! privacy, the risk of a lie being discovered, the moral cost of lying, and
//! the admission cost of telling the truth. Threshold gates compare each
//! player's choice with its neighborhood's averages: oversharing forfeits the
//! social reward, under-withholding forfeits the privacy reward, and lying at
//! or above the neighborhood level activates the discovery cost. Players
//! learn by moving a fraction `epsilon` toward an exact myopic best response,
//! all simultaneously, while the discovery probability `tau` ramps up over
//! the run — either on a clock or with each player's cumulative disclosure.
//!
//! The crate provides:
//!
//! * [`graph`] — undirected social graphs with optional popularity-weighted
//!   neighborhood averages;
//! * [`strategy`] — points on the 2-simplex and profile utilities;
//! * [`payoff`] — itemized stage payoffs, threshold gates, `tau` schedules,
//!   and discounted horizon sums;
//! * [`best_response`] — exact one-stage best responses via candidate
//!   enumeration, plus an independent brute-force grid oracle;
//! * [`dynamics`] — simultaneous learning runs, stationarity detection,
//!   distance-from-optimality measurement, and Monte Carlo validation of the
//!   analytic payoffs;
//! * [`scenario`] — JSON scenario schema, built-in presets (`game1`,
//!   `game2`, `game3`), and validation;
//! * [`output`] — trajectory CSV serialization and JSON run summaries.
//!
//! The `examples/` directory walks each capability end to end; `simulate` is
//! a thin command-line wrapper over [`scenario::load_scenario`],
//! [`dynamics::run`], and [`output`].
//!
//! ```
//! use candor::dynamics::run;
//! use candor::scenario::load_scenario;
//!
//! let config = load_scenario("game1").unwrap();
//! let trajectory = &run(&config).unwrap()[0];
//! let settled = trajectory.final_profile();
//! // Deception does not survive a rising discovery probability.
//! assert!(settled.iter().all(|s| s.z < 0.05));
//! ```

pub mod best_response;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod output;
pub mod payoff;
pub mod scenario;
pub mod strategy;

pub use best_response::{best_response, grid_oracle, BestResponse, TieBreak};
pub use dynamics::{
    evolve_step, monte_carlo_payoff, nash_gaps, run, ActionSample, McEstimate, Step, Trajectory,
};
pub use error::{Error, Result};
pub use graph::{NeighborAverages, SocialGraph};
pub use output::{
    fmt_sig, summarize, write_trajectory_csv, write_trajectory_file, GridCheckSummary, McSummary,
    RunSummary, TypeSummary, STATIONARITY_TOL, STATIONARITY_WINDOW,
};
pub use payoff::{
    horizon_payoff, multipliers, stage_expected_payoff, Multipliers, PlayerParams, StagePayoff,
    TauSchedule,
};
pub use scenario::{from_json, load_scenario, preset, ScenarioConfig, PRESET_NAMES};
pub use strategy::{
    profile_sup_distance, validate_profile, Strategy, StrategyProfile, SIMPLEX_TOLERANCE,
};
