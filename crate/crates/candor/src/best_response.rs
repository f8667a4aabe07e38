//! Exact one-stage best responses.
//!
//! Fixing the neighborhood averages and `tau`, the three threshold gates
//! carve the strategy simplex into at most eight regions, and the stage
//! payoff is linear inside each one. On the simplex the `alpha` boundary
//! `x + z = x̄ + z̄` is the line `y = 1 − (x̄ + z̄)`, the `beta` boundary is
//! `y = ȳ`, and the `gamma` boundary is `z = z̄`; a linear function's maximum
//! over such a subdivision sits at one of the subdivision's vertices, so the
//! solver just evaluates a short, exhaustive candidate list.
//!
//! One subtlety: the `alpha` and `beta` boundaries are inclusive on their
//! *rewarded* side, so their suprema are attained at the boundary — but the
//! `gamma` boundary is inclusive on the *costly* side. The cheap region
//! `z < z̄` is open at the line, and its supremum is approached but never
//! attained there. The candidate list therefore also carries points nudged
//! just inside the cheap region ([`GAMMA_NUDGE`] below the line), which
//! recover that supremum to within a negligible sliver. Without them a
//! best response could miss the true optimum by the whole discovery-cost
//! jump `w3·tau·z̄`.
//!
//! For verification there is an independent brute-force [`grid_oracle`] that
//! scans a triangular lattice; it is deliberately simple and shares nothing
//! with the enumeration beyond the payoff function itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::NeighborAverages;
use crate::payoff::{stage_expected_payoff, PlayerParams};
use crate::strategy::Strategy;

/// Offset used for candidates just inside the cheap side of the `gamma`
/// boundary. Far above float noise, far below anything payoffs can resolve.
pub const GAMMA_NUDGE: f64 = 1e-9;

/// Deterministic preference among equal-value candidates.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Larger `x` wins, then larger `y`.
    #[default]
    PreferRelease,
    /// Larger `y` wins, then larger `x`.
    PreferWithhold,
    /// Larger `z` wins, then larger `x`.
    PreferLie,
}

impl TieBreak {
    /// True when `a` is strictly preferred over `b` at equal payoff.
    pub fn prefers(self, a: &Strategy, b: &Strategy) -> bool {
        let key = |s: &Strategy| match self {
            TieBreak::PreferRelease => (s.x, s.y),
            TieBreak::PreferWithhold => (s.y, s.x),
            TieBreak::PreferLie => (s.z, s.x),
        };
        key(a) > key(b)
    }
}

/// A maximizing strategy and the stage payoff it earns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestResponse {
    pub strategy: Strategy,
    pub value: f64,
}

fn push_candidate(out: &mut Vec<Strategy>, x: f64, y: f64, z: f64) {
    // Constructions may carry float dust a hair outside the simplex.
    if x < -1e-12 || y < -1e-12 || z < -1e-12 {
        return;
    }
    let raw = Strategy {
        x: x.max(0.0),
        y: y.max(0.0),
        z: z.max(0.0),
    };
    // Keep exact triples pristine; only rescale when the sum drifted.
    let s = if raw.x + raw.y + raw.z == 1.0 {
        raw
    } else {
        match raw.renormalize() {
            Ok(s) => s,
            Err(_) => return,
        }
    };
    if !out.contains(&s) {
        out.push(s);
    }
}

/// All strategies that can maximize a stage payoff against `avg`: the simplex
/// vertices, the points where the three threshold lines meet the simplex
/// boundary (threshold mass placed on each single coordinate in turn), the
/// pairwise line intersections, and for every candidate on the `gamma` line
/// the two in-simplex nudges just below it. Infeasible intersections are
/// skipped; duplicates are removed.
pub fn candidate_set(avg: NeighborAverages) -> Vec<Strategy> {
    let mut out = Vec::with_capacity(16);
    push_candidate(&mut out, 1.0, 0.0, 0.0);
    push_candidate(&mut out, 0.0, 1.0, 0.0);
    push_candidate(&mut out, 0.0, 0.0, 1.0);

    let cap = avg.x + avg.z; // alpha line: x + z = cap
    if (0.0..=1.0).contains(&cap) {
        push_candidate(&mut out, cap, 1.0 - cap, 0.0);
        push_candidate(&mut out, 0.0, 1.0 - cap, cap);
    }
    let ybar = avg.y; // beta line: y = ȳ
    if (0.0..=1.0).contains(&ybar) {
        push_candidate(&mut out, 1.0 - ybar, ybar, 0.0);
        push_candidate(&mut out, 0.0, ybar, 1.0 - ybar);
    }

    let zbar = avg.z; // gamma line: z = z̄
    let mut on_gamma: Vec<(f64, f64)> = Vec::with_capacity(4); // (x, y) with z = z̄
    if (0.0..=1.0).contains(&zbar) {
        on_gamma.push((1.0 - zbar, 0.0));
        on_gamma.push((0.0, 1.0 - zbar));
        // alpha ∧ gamma: y = 1 − cap, z = z̄, x = cap − z̄.
        if (0.0..=1.0).contains(&cap) && cap - zbar >= 0.0 {
            on_gamma.push((cap - zbar, 1.0 - cap));
        }
        // beta ∧ gamma: y = ȳ, z = z̄, x = 1 − ȳ − z̄.
        if (0.0..=1.0).contains(&ybar) && 1.0 - ybar - zbar >= 0.0 {
            on_gamma.push((1.0 - ybar - zbar, ybar));
        }
    }
    for &(x, y) in &on_gamma {
        push_candidate(&mut out, x, y, zbar);
        if zbar > GAMMA_NUDGE {
            // Just inside the cheap region, along both simplex edge directions.
            push_candidate(&mut out, x + GAMMA_NUDGE, y, zbar - GAMMA_NUDGE);
            push_candidate(&mut out, x, y + GAMMA_NUDGE, zbar - GAMMA_NUDGE);
        }
    }
    out
}

fn better(
    value: f64,
    strategy: &Strategy,
    best_value: f64,
    best_strategy: &Strategy,
    tie_break: TieBreak,
) -> bool {
    value > best_value || (value == best_value && tie_break.prefers(strategy, best_strategy))
}

/// The candidate with the highest stage payoff against `avg`, ties resolved
/// by `tie_break`. The reported value is the payoff of the returned strategy
/// itself — gates evaluated at that exact point, no special casing.
pub fn best_response(
    avg: NeighborAverages,
    p: &PlayerParams,
    tau: f64,
    tie_break: TieBreak,
) -> BestResponse {
    let mut best: Option<BestResponse> = None;
    for strategy in candidate_set(avg) {
        let value = stage_expected_payoff(strategy, avg, p, tau).total;
        let replace = match &best {
            None => true,
            Some(b) => better(value, &strategy, b.value, &b.strategy, tie_break),
        };
        if replace {
            best = Some(BestResponse { strategy, value });
        }
    }
    best.expect("candidate set always contains the simplex vertices")
}

/// Brute-force verifier: evaluates every lattice point
/// `(i/n, j/n, (n−i−j)/n)` and keeps the best under the same tie-break.
/// Independent of the enumeration; test- and audit-only by design.
pub fn grid_oracle(
    avg: NeighborAverages,
    p: &PlayerParams,
    tau: f64,
    resolution: usize,
    tie_break: TieBreak,
) -> Result<BestResponse> {
    if resolution == 0 {
        return Err(Error::config("resolution", "grid resolution must be >= 1"));
    }
    let n = resolution;
    let nf = n as f64;
    let mut best: Option<BestResponse> = None;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let strategy = Strategy {
                x: i as f64 / nf,
                y: j as f64 / nf,
                z: (n - i - j) as f64 / nf,
            };
            let value = stage_expected_payoff(strategy, avg, p, tau).total;
            let replace = match &best {
                None => true,
                Some(b) => better(value, &strategy, b.value, &b.strategy, tie_break),
            };
            if replace {
                best = Some(BestResponse { strategy, value });
            }
        }
    }
    Ok(best.expect("grid always contains at least one point"))
}
