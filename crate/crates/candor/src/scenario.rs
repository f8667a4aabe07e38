//! Scenario configuration: JSON schema, built-in presets, validation.
//!
//! A scenario is a graph, one parameter set per player, one or more
//! information types (each with its own initial profile and optional
//! per-type parameter overrides), a discovery-probability schedule, a
//! discount factor, a horizon, and a tie-break rule. Scenarios load from a
//! JSON file or from one of the built-in presets named in [`PRESET_NAMES`]:
//!
//! * `game1` — balanced weights; players settle into guarded sharing at the
//!   social cap and abandon deception;
//! * `game2` — social capital cheap to earn and lies cheap to tell early, so
//!   deception spikes before rising discovery odds collapse it;
//! * `game3` — privacy-dominant weights with a crushing moral cost; everyone
//!   contracts straight to full withholding.
//!
//! All three run three mutual friends (a triangle) for 100 steps with the
//! discovery probability ramping linearly from 0.1 to 0.9, starting from the
//! mostly-honest profile (0.7, 0.2, 0.1).

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::best_response::TieBreak;
use crate::error::{Error, Result};
use crate::graph::SocialGraph;
use crate::payoff::{validate_rho, PlayerParams, TauSchedule};
use crate::strategy::Strategy;

/// The built-in scenarios, in the order their stories are told above.
pub const PRESET_NAMES: [&str; 3] = ["game1", "game2", "game3"];

/// Graph description as it appears in scenario JSON: a node count, an
/// undirected edge list, and optional per-node popularity weights (a map from
/// node index to a strictly positive weight, covering every node when given).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub popularity: Option<BTreeMap<usize, f64>>,
}

/// One kind of information being shared: a name, the initial strategy
/// profile, and optionally a full per-player parameter override (players may
/// value, say, medical and culinary secrets differently).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfoTypeSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<PlayerParams>>,
    pub initial: Vec<Strategy>,
}

/// A complete simulation setup. `tau`, `rho`, `horizon`, and `tie_break` are
/// optional in JSON and default to the standard calibration: a linear 0.1 to
/// 0.9 ramp, no discounting, 100 steps, release-preferring ties.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub graph: GraphSpec,
    pub players: Vec<PlayerParams>,
    pub info_types: Vec<InfoTypeSpec>,
    #[serde(default = "TauSchedule::default_linear")]
    pub tau: TauSchedule,
    #[serde(default = "default_rho")]
    pub rho: f64,
    #[serde(default = "default_horizon")]
    pub horizon: usize,
    #[serde(default)]
    pub tie_break: TieBreak,
}

fn default_rho() -> f64 {
    1.0
}

fn default_horizon() -> usize {
    100
}

fn prefix_config(prefix: &str, e: Error) -> Error {
    match e {
        Error::InvalidConfig { field, message } => Error::InvalidConfig {
            field: format!("{prefix}.{field}"),
            message,
        },
        other => other,
    }
}

impl ScenarioConfig {
    /// Checks everything the simulation will rely on, naming the offending
    /// field in each error.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.nodes;
        let graph = self.build_graph()?;
        if let Some(&node) = graph.isolated_nodes().first() {
            return Err(Error::config(
                "graph.edges",
                format!("node {node} has no neighbors; every player needs at least one"),
            ));
        }
        if self.players.len() != n {
            return Err(Error::config(
                "players",
                format!(
                    "expected {n} parameter sets for {n} nodes, got {}",
                    self.players.len()
                ),
            ));
        }
        for (j, p) in self.players.iter().enumerate() {
            p.validate()
                .map_err(|e| prefix_config(&format!("players[{j}]"), e))?;
        }
        if self.info_types.is_empty() {
            return Err(Error::config(
                "info_types",
                "need at least one information type",
            ));
        }
        let mut seen = BTreeSet::new();
        for (k, info_type) in self.info_types.iter().enumerate() {
            if !seen.insert(info_type.name.as_str()) {
                return Err(Error::config(
                    format!("info_types[{k}].name"),
                    format!("duplicate name '{}'", info_type.name),
                ));
            }
            if let Some(params) = &info_type.params {
                if params.len() != n {
                    return Err(Error::config(
                        format!("info_types[{k}].params"),
                        format!("expected {n} parameter sets, got {}", params.len()),
                    ));
                }
                for (j, p) in params.iter().enumerate() {
                    p.validate()
                        .map_err(|e| prefix_config(&format!("info_types[{k}].params[{j}]"), e))?;
                }
            }
            if info_type.initial.len() != n {
                return Err(Error::config(
                    format!("info_types[{k}].initial"),
                    format!("expected {n} strategies, got {}", info_type.initial.len()),
                ));
            }
            for (j, s) in info_type.initial.iter().enumerate() {
                s.validate().map_err(|e| {
                    Error::config(format!("info_types[{k}].initial[{j}]"), e.to_string())
                })?;
            }
        }
        self.tau.validate()?;
        validate_rho(self.rho)?;
        if self.horizon == 0 {
            return Err(Error::config("horizon", "need at least one step"));
        }
        Ok(())
    }

    /// Materializes the graph, attaching popularity weights when present.
    pub fn build_graph(&self) -> Result<SocialGraph> {
        let graph = SocialGraph::new(self.graph.nodes, &self.graph.edges)?;
        let Some(map) = &self.graph.popularity else {
            return Ok(graph);
        };
        if let Some((&node, _)) = map.range(self.graph.nodes..).next() {
            return Err(Error::NodeOutOfRange {
                node,
                nodes: self.graph.nodes,
            });
        }
        let mut weights = Vec::with_capacity(self.graph.nodes);
        for node in 0..self.graph.nodes {
            match map.get(&node) {
                Some(&w) => weights.push(w),
                None => return Err(Error::MissingPopularity { node }),
            }
        }
        graph.with_popularity(weights)
    }

    /// The parameter sets governing one information type: its own override
    /// when present, the shared player parameters otherwise.
    pub fn params_for(&self, info_type: usize) -> &[PlayerParams] {
        self.info_types[info_type]
            .params
            .as_deref()
            .unwrap_or(&self.players)
    }

    /// Pretty-printed JSON, the same shape [`from_json`] reads.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario types serialize infallibly")
    }
}

/// Parses a scenario from JSON text.
pub fn from_json(text: &str) -> Result<ScenarioConfig> {
    parse_with_path(text, "<inline json>")
}

fn parse_with_path(text: &str, path: &str) -> Result<ScenarioConfig> {
    serde_json::from_str(text).map_err(|source| Error::Parse {
        path: path.to_owned(),
        source,
    })
}

fn triangle_preset(weights: [f64; 5]) -> ScenarioConfig {
    ScenarioConfig {
        graph: GraphSpec {
            nodes: 3,
            edges: vec![(0, 1), (0, 2), (1, 2)],
            popularity: None,
        },
        players: vec![PlayerParams::with_weights(weights); 3],
        info_types: vec![InfoTypeSpec {
            name: "default".to_owned(),
            params: None,
            initial: vec![
                Strategy {
                    x: 0.7,
                    y: 0.2,
                    z: 0.1,
                };
                3
            ],
        }],
        tau: TauSchedule::default_linear(),
        rho: 1.0,
        horizon: 100,
        tie_break: TieBreak::default(),
    }
}

/// A built-in scenario by name, or `None` when the name is not one of
/// [`PRESET_NAMES`].
pub fn preset(name: &str) -> Option<ScenarioConfig> {
    match name {
        "game1" => Some(triangle_preset([1.0, 0.25, 0.5, 1.0, 0.125])),
        "game2" => Some(triangle_preset([2.0, 0.25, 0.25, 0.125, 0.125])),
        "game3" => Some(triangle_preset([0.5, 5.0, 2.0, 100.0, 3.0])),
        _ => None,
    }
}

/// Resolves a scenario argument: a preset name first, a JSON file path
/// otherwise. A bare name that is neither a preset nor an existing file is
/// reported as an unknown scenario rather than a file error.
pub fn load_scenario(arg: &str) -> Result<ScenarioConfig> {
    if let Some(config) = preset(arg) {
        return Ok(config);
    }
    let path = Path::new(arg);
    let looks_like_path = arg.contains('.') || arg.contains('/') || arg.contains('\\');
    if !looks_like_path && !path.exists() {
        return Err(Error::UnknownScenario {
            name: arg.to_owned(),
        });
    }
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: arg.to_owned(),
        source,
    })?;
    parse_with_path(&text, arg)
}
