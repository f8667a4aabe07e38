use thiserror::Error;

/// Everything that can go wrong while building graphs, validating strategies
/// and parameters, loading scenarios, or writing results.
#[derive(Debug, Error)]
pub enum Error {
    #[error("node {node} is out of range for a graph with {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },

    #[error("edge ({a}, {b}) is a self-loop")]
    SelfLoop { a: usize, b: usize },

    #[error("graph must have at least one node")]
    EmptyGraph,

    #[error("node {node} has no neighbors")]
    EmptyNeighborhood { node: usize },

    #[error("popularity weight for node {node} must be strictly positive and finite, got {value}")]
    InvalidPopularity { node: usize, value: f64 },

    #[error("popularity map must cover every node; node {node} is missing")]
    MissingPopularity { node: usize },

    #[error("no value supplied for neighbor {node}")]
    MissingValue { node: usize },

    #[error("strategy component {component} is {value}, outside [0, 1]")]
    ComponentOutOfRange { component: &'static str, value: f64 },

    #[error("strategy components sum to {sum}, which is farther than {tolerance} from 1")]
    OffSimplex { sum: f64, tolerance: f64 },

    #[error("cannot renormalize a strategy whose total mass is {sum}")]
    NonPositiveMass { sum: f64 },

    #[error("{field}: {message}")]
    InvalidConfig { field: String, message: String },

    #[error("'{name}' is not a built-in scenario and no such file exists")]
    UnknownScenario { name: String },

    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to parse {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("failed to write output: {0}")]
    Write(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for scenario-validation failures; `field` names the offending
    /// entry (e.g. `players[2].epsilon`).
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidConfig {
            field: field.into(),
            message: message.into(),
        }
    }
}
