//! Stage payoffs with threshold multipliers.
//!
//! A player's one-step payoff weighs five buckets: social capital earned by
//! disclosing (truthfully or not), privacy retained by withholding or faking,
//! the expected cost of a lie being discovered, the moral cost of lying, and
//! the admission cost of releasing the truth. Three 0/1 multipliers gate the
//! first three buckets on how the player's choice compares with its
//! neighborhood:
//!
//! * `alpha` (social reward active): total disclosure `x + z` must not exceed
//!   the neighborhood's `x̄ + z̄` — oversharers earn nothing socially;
//! * `beta` (privacy reward active): withholding must reach the neighborhood
//!   level `ȳ`;
//! * `gamma` (discovery cost active): lying at or above the neighborhood
//!   level `z̄` risks exposure.
//!
//! All three comparisons are inclusive at the boundary. The discovery
//! probability `tau` rises over a run, either linearly in time or as a
//! function of how much the player has already disclosed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::NeighborAverages;
use crate::strategy::Strategy;

/// Per-player payoff weights and learning rate.
///
/// `w` weighs, in order: social capital, privacy gain, lie-discovery cost,
/// moral cost, admission cost. `zeta`, `theta`, `eta` scale the moral cost,
/// the admission cost, and the privacy value of a lie. `epsilon` is the
/// per-step learning rate toward the best response.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlayerParams {
    pub w: [f64; 5],
    pub zeta: f64,
    pub theta: f64,
    pub eta: f64,
    pub epsilon: f64,
}

impl PlayerParams {
    /// Standard calibration: unit scale factors and a 0.05 learning rate.
    pub fn with_weights(w: [f64; 5]) -> Self {
        PlayerParams {
            w,
            zeta: 1.0,
            theta: 1.0,
            eta: 1.0,
            epsilon: 0.05,
        }
    }

    /// Weights and scale factors must be finite and nonnegative; the learning
    /// rate must lie in [0, 1) (zero freezes the player, which is allowed).
    pub fn validate(&self) -> Result<()> {
        for (i, &w) in self.w.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::config(
                    format!("w[{i}]"),
                    format!("weight must be finite and nonnegative, got {w}"),
                ));
            }
        }
        for (name, v) in [
            ("zeta", self.zeta),
            ("theta", self.theta),
            ("eta", self.eta),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::config(
                    name,
                    format!("scale factor must be finite and nonnegative, got {v}"),
                ));
            }
        }
        if !self.epsilon.is_finite() || !(0.0..1.0).contains(&self.epsilon) {
            return Err(Error::config(
                "epsilon",
                format!("learning rate must lie in [0, 1), got {}", self.epsilon),
            ));
        }
        Ok(())
    }
}

/// Discovery-probability schedule over a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum TauSchedule {
    /// `tau` climbs linearly from `tau_min` at t = 0 to `tau_max` at t = T−1.
    Linear { tau_min: f64, tau_max: f64 },
    /// `tau` grows with the player's cumulative disclosure `q`, saturating at
    /// `tau_max` once `q` reaches `saturation_count`.
    QBased {
        tau_min: f64,
        tau_max: f64,
        saturation_count: f64,
    },
}

impl TauSchedule {
    /// Default ramp: 0.1 up to 0.9, linear in time.
    pub fn default_linear() -> Self {
        TauSchedule::Linear {
            tau_min: 0.1,
            tau_max: 0.9,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (tau_min, tau_max) = match *self {
            TauSchedule::Linear { tau_min, tau_max } => (tau_min, tau_max),
            TauSchedule::QBased {
                tau_min,
                tau_max,
                saturation_count,
            } => {
                if !saturation_count.is_finite() || saturation_count <= 0.0 {
                    return Err(Error::config(
                        "tau.saturation_count",
                        format!("must be finite and positive, got {saturation_count}"),
                    ));
                }
                (tau_min, tau_max)
            }
        };
        for (name, v) in [("tau.tau_min", tau_min), ("tau.tau_max", tau_max)] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::config(name, format!("must lie in [0, 1], got {v}")));
            }
        }
        if tau_min > tau_max {
            return Err(Error::config(
                "tau",
                format!("tau_min {tau_min} exceeds tau_max {tau_max}"),
            ));
        }
        Ok(())
    }

    /// Discovery probability at step `t` of a `horizon`-step run for a player
    /// whose cumulative disclosure so far is `q`. Linear schedules ignore `q`;
    /// q-based schedules ignore `t`. A one-step run sits at `tau_min`.
    pub fn tau_at(&self, t: usize, horizon: usize, q: f64) -> f64 {
        match *self {
            TauSchedule::Linear { tau_min, tau_max } => {
                if horizon <= 1 {
                    tau_min
                } else {
                    tau_min + (tau_max - tau_min) * t as f64 / (horizon - 1) as f64
                }
            }
            TauSchedule::QBased {
                tau_min,
                tau_max,
                saturation_count,
            } => tau_min + (tau_max - tau_min) * (q / saturation_count).min(1.0),
        }
    }
}

/// The three threshold gates, each 0.0 or 1.0 so they multiply directly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multipliers {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Evaluates the threshold gates for a strategy against neighborhood averages.
/// All boundaries are inclusive.
pub fn multipliers(s: Strategy, avg: NeighborAverages) -> Multipliers {
    Multipliers {
        alpha: if s.x + s.z <= avg.x + avg.z { 1.0 } else { 0.0 },
        beta: if s.y >= avg.y { 1.0 } else { 0.0 },
        gamma: if s.z >= avg.z { 1.0 } else { 0.0 },
    }
}

/// One stage's payoff, itemized. `total` combines the raw buckets under the
/// player's weights: `w1·social + w2·privacy − w3·discovery − w4·moral −
/// w5·admission`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StagePayoff {
    pub social_capital: f64,
    pub privacy_gain: f64,
    pub lie_discovery_cost: f64,
    pub moral_cost: f64,
    pub admission_cost: f64,
    pub total: f64,
}

/// Core ledger shared by the expected and the sampled evaluation: `amounts`
/// is (released, withheld, lied) mass — fractional in expectation, 0/1 for a
/// sampled action — while the gates `m` always come from the strategies.
pub(crate) fn payoff_from_amounts(
    amounts: (f64, f64, f64),
    m: Multipliers,
    p: &PlayerParams,
    tau: f64,
) -> StagePayoff {
    let (x, y, z) = amounts;
    let social_capital = m.alpha * (x + (1.0 - tau) * z);
    let privacy_gain = m.beta * y + p.eta * z;
    let lie_discovery_cost = m.gamma * tau * z;
    let moral_cost = p.zeta * z;
    let admission_cost = p.theta * x;
    let total = p.w[0] * social_capital + p.w[1] * privacy_gain
        - p.w[2] * lie_discovery_cost
        - p.w[3] * moral_cost
        - p.w[4] * admission_cost;
    StagePayoff {
        social_capital,
        privacy_gain,
        lie_discovery_cost,
        moral_cost,
        admission_cost,
        total,
    }
}

/// Expected one-stage payoff of playing `s` against neighborhood averages
/// `avg` with discovery probability `tau`.
pub fn stage_expected_payoff(
    s: Strategy,
    avg: NeighborAverages,
    p: &PlayerParams,
    tau: f64,
) -> StagePayoff {
    payoff_from_amounts((s.x, s.y, s.z), multipliers(s, avg), p, tau)
}

/// Discounted sum of stage totals: `Σ_t rho^t · totals[t]`. `rho` must lie in
/// (0, 1].
pub fn horizon_payoff(stage_totals: &[f64], rho: f64) -> Result<f64> {
    validate_rho(rho)?;
    let mut discount = 1.0;
    let mut sum = 0.0;
    for &v in stage_totals {
        sum += discount * v;
        discount *= rho;
    }
    Ok(sum)
}

pub(crate) fn validate_rho(rho: f64) -> Result<()> {
    if !rho.is_finite() || rho <= 0.0 || rho > 1.0 {
        return Err(Error::config(
            "rho",
            format!("discount factor must lie in (0, 1], got {rho}"),
        ));
    }
    Ok(())
}
