//! Static, undirected social graphs.
//!
//! Players sit on the nodes; the payoff thresholds of every player are set by
//! the strategies of its graph neighborhood. Neighborhoods never include the
//! node itself, and averages over a neighborhood are either plain arithmetic
//! means or popularity-weighted means when node weights are attached.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::strategy::Strategy;

/// Undirected graph with optional strictly positive popularity weights.
///
/// Edges are normalized (lowest endpoint first), deduplicated, and fixed for
/// the lifetime of the graph. Self-loops are rejected, so a node is never its
/// own neighbor.
#[derive(Debug, Clone, PartialEq)]
pub struct SocialGraph {
    nodes: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    popularity: Option<Vec<f64>>,
}

/// Componentwise neighborhood mean of a strategy profile, as seen by one
/// player. This is what the payoff thresholds compare against.
///
/// Kept separate from [`Strategy`] because best-response routines also accept
/// synthetic averages that are not exactly on the simplex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeighborAverages {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl NeighborAverages {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        NeighborAverages { x, y, z }
    }
}

impl SocialGraph {
    /// Builds a graph from an edge list. Endpoints must be `< nodes` and
    /// self-loops are rejected; duplicate edges (in either orientation)
    /// collapse to one.
    pub fn new(nodes: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for node in [a, b] {
                if node >= nodes {
                    return Err(Error::NodeOutOfRange { node, nodes });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { a, b });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut neighbors = vec![Vec::new(); nodes];
        for &(a, b) in &normalized {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }

        Ok(SocialGraph {
            nodes,
            edges: normalized,
            neighbors,
            popularity: None,
        })
    }

    /// Attaches one strictly positive, finite popularity weight per node.
    /// Once attached, every neighborhood average is popularity-weighted.
    pub fn with_popularity(mut self, popularity: Vec<f64>) -> Result<Self> {
        if popularity.len() != self.nodes {
            let node = popularity.len().min(self.nodes);
            return Err(Error::MissingPopularity { node });
        }
        for (node, &value) in popularity.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidPopularity { node, value });
            }
        }
        self.popularity = Some(popularity);
        Ok(self)
    }

    /// Complete graph on `nodes` nodes (every pair connected).
    pub fn complete(nodes: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..nodes {
            for b in (a + 1)..nodes {
                edges.push((a, b));
            }
        }
        SocialGraph::new(nodes, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized, sorted, deduplicated edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn popularity(&self) -> Option<&[f64]> {
        self.popularity.as_deref()
    }

    /// Nodes with no incident edge. Scenario validation refuses these, since
    /// a player without neighbors has no thresholds to play against.
    pub fn isolated_nodes(&self) -> Vec<usize> {
        (0..self.nodes)
            .filter(|&j| self.neighbors[j].is_empty())
            .collect()
    }

    /// The sorted neighborhood of `node`, excluding `node` itself.
    pub fn neighborhood(&self, node: usize) -> Result<&[usize]> {
        if node >= self.nodes {
            return Err(Error::NodeOutOfRange {
                node,
                nodes: self.nodes,
            });
        }
        Ok(&self.neighbors[node])
    }

    /// Mean of `values` over the neighborhood of `node`: the arithmetic mean,
    /// or the popularity-weighted mean when weights are attached. Errors on an
    /// empty neighborhood (undefined mean) or a missing neighbor value.
    pub fn neighbor_average(&self, node: usize, values: &[f64]) -> Result<f64> {
        let neighborhood = self.neighborhood(node)?;
        if neighborhood.is_empty() {
            return Err(Error::EmptyNeighborhood { node });
        }
        let mut weighted = 0.0;
        let mut weight = 0.0;
        for &k in neighborhood {
            let value = *values.get(k).ok_or(Error::MissingValue { node: k })?;
            let w = match &self.popularity {
                Some(p) => p[k],
                None => 1.0,
            };
            weighted += w * value;
            weight += w;
        }
        Ok(weighted / weight)
    }

    /// The three neighborhood means a player's thresholds are built from.
    pub fn strategy_averages(&self, node: usize, profile: &[Strategy]) -> Result<NeighborAverages> {
        let neighborhood = self.neighborhood(node)?;
        if neighborhood.is_empty() {
            return Err(Error::EmptyNeighborhood { node });
        }
        let mut avg = NeighborAverages::new(0.0, 0.0, 0.0);
        let mut weight = 0.0;
        for &k in neighborhood {
            let s = profile.get(k).ok_or(Error::MissingValue { node: k })?;
            let w = match &self.popularity {
                Some(p) => p[k],
                None => 1.0,
            };
            avg.x += w * s.x;
            avg.y += w * s.y;
            avg.z += w * s.z;
            weight += w;
        }
        avg.x /= weight;
        avg.y /= weight;
        avg.z /= weight;
        Ok(avg)
    }
}
