//! Strategies on the 2-simplex.
//!
//! A strategy splits one unit of information mass into a released share `x`,
//! a withheld share `y`, and a fabricated (lied-about) share `z`. All three
//! live in [0, 1] and sum to 1; learning updates renormalize after every step
//! so numerical drift never accumulates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How far a component sum may drift from 1 before a strategy is rejected.
pub const SIMPLEX_TOLERANCE: f64 = 1e-9;

/// One player's mixed disclosure strategy: release `x`, withhold `y`, lie `z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strategy {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// One strategy per node, indexed by node id.
pub type StrategyProfile = Vec<Strategy>;

impl Strategy {
    /// Validates and constructs. Components must lie in [0, 1] and sum to 1
    /// within [`SIMPLEX_TOLERANCE`].
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let s = Strategy { x, y, z };
        s.validate()?;
        Ok(s)
    }

    /// Checks the simplex constraints without changing the value.
    pub fn validate(&self) -> Result<()> {
        for (component, value) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::ComponentOutOfRange { component, value });
            }
        }
        let sum = self.x + self.y + self.z;
        if (sum - 1.0).abs() > SIMPLEX_TOLERANCE {
            return Err(Error::OffSimplex {
                sum,
                tolerance: SIMPLEX_TOLERANCE,
            });
        }
        Ok(())
    }

    /// Rescales the components to sum to exactly 1.0.
    ///
    /// Tiny negative components (within [`SIMPLEX_TOLERANCE`] of zero) are
    /// clamped to 0 first; anything more negative, or a nonpositive total
    /// mass, is an error. The result always satisfies `x + y + z == 1.0`
    /// bit-exactly.
    pub fn renormalize(self) -> Result<Self> {
        let mut c = [self.x, self.y, self.z];
        for (i, component) in ["x", "y", "z"].into_iter().enumerate() {
            let value = c[i];
            if !value.is_finite() || value < -SIMPLEX_TOLERANCE {
                return Err(Error::ComponentOutOfRange { component, value });
            }
            if value < 0.0 {
                c[i] = 0.0;
            }
        }
        let sum = c[0] + c[1] + c[2];
        if sum <= 0.0 {
            return Err(Error::NonPositiveMass { sum });
        }
        let x = c[0] / sum;
        let mut y = c[1] / sum;
        // Closing against the rounded partial sum pins x + y + z to exactly
        // 1.0: for any t in [0, 1], t + fl(1 - t) rounds to 1 (Sterbenz makes
        // the subtraction exact for t >= 0.5, and below that the residual is
        // at most 2^-54, inside the rounding interval of 1.0).
        let t = x + y;
        let mut z = 1.0 - t;
        if z < 0.0 {
            // Only reachable through rounding when z ~ 0; fold the dust into y.
            z = 0.0;
            y = 1.0 - x;
        }
        Ok(Strategy { x, y, z })
    }

    /// Largest componentwise distance between two strategies.
    pub fn sup_distance(&self, other: &Strategy) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

/// Validates a full profile against a node count: one valid strategy per node.
pub fn validate_profile(profile: &[Strategy], nodes: usize) -> Result<()> {
    if profile.len() != nodes {
        return Err(Error::config(
            "profile",
            format!("expected {nodes} strategies, got {}", profile.len()),
        ));
    }
    for s in profile {
        s.validate()?;
    }
    Ok(())
}

/// Largest componentwise distance between two profiles of equal length.
pub fn profile_sup_distance(a: &[Strategy], b: &[Strategy]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(s, t)| s.sup_distance(t))
        .fold(0.0, f64::max)
}
