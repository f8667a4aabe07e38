//! Builds a scenario from JSON: a star graph, popularity weights, two
//! information types, and disclosure-driven discovery.
//!
//! Everything the presets hard-code can come from a scenario file instead.
//! This one puts four players on a star whose hub is the most popular node,
//! so the leaves' neighborhood averages are dominated by the hub's behavior.
//! Two information types share the graph but differ in payoff weights —
//! mundane gossip versus a costly secret — and `tau` follows each player's
//! cumulative disclosure (q-based) rather than the clock. The same text,
//! saved to a file, runs as `simulate --scenario star.json`.

use candor::dynamics::run;
use candor::scenario::from_json;

const SCENARIO: &str = r#"{
    "graph": {
        "nodes": 4,
        "edges": [[0, 1], [0, 2], [0, 3]],
        "popularity": { "0": 3.0, "1": 1.0, "2": 1.0, "3": 1.0 }
    },
    "players": [
        { "w": [1.0, 0.25, 0.5, 1.0, 0.125], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
        { "w": [1.0, 0.25, 0.5, 1.0, 0.125], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
        { "w": [1.0, 0.25, 0.5, 1.0, 0.125], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
        { "w": [1.0, 0.25, 0.5, 1.0, 0.125], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 }
    ],
    "info_types": [
        {
            "name": "gossip",
            "initial": [
                { "x": 0.6, "y": 0.3, "z": 0.1 },
                { "x": 0.5, "y": 0.4, "z": 0.1 },
                { "x": 0.5, "y": 0.4, "z": 0.1 },
                { "x": 0.5, "y": 0.4, "z": 0.1 }
            ]
        },
        {
            "name": "secret",
            "params": [
                { "w": [0.5, 3.0, 2.0, 10.0, 1.0], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
                { "w": [0.5, 3.0, 2.0, 10.0, 1.0], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
                { "w": [0.5, 3.0, 2.0, 10.0, 1.0], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 },
                { "w": [0.5, 3.0, 2.0, 10.0, 1.0], "zeta": 1.0, "theta": 1.0, "eta": 1.0, "epsilon": 0.1 }
            ],
            "initial": [
                { "x": 0.2, "y": 0.6, "z": 0.2 },
                { "x": 0.2, "y": 0.6, "z": 0.2 },
                { "x": 0.2, "y": 0.6, "z": 0.2 },
                { "x": 0.2, "y": 0.6, "z": 0.2 }
            ]
        }
    ],
    "tau": { "mode": "q-based", "tau_min": 0.05, "tau_max": 0.95, "saturation_count": 20 },
    "rho": 0.97,
    "horizon": 60
}"#;

fn main() -> candor::Result<()> {
    let config = from_json(SCENARIO)?;
    let graph = config.build_graph()?;
    println!(
        "star graph: {} nodes, {} edges, hub popularity {}",
        graph.node_count(),
        graph.edge_count(),
        graph.popularity().expect("weights set")[0]
    );

    for trajectory in run(&config)? {
        let horizon = trajectory.horizon();
        let last = &trajectory.steps[horizon - 1];
        println!("\n{}:", trajectory.info_type);
        println!("  player   final (x, y, z)            tau      q");
        for (j, s) in last.profile.iter().enumerate() {
            let role = if j == 0 { " (hub)" } else { "" };
            println!(
                "  {j:>6}   ({:.3}, {:.3}, {:.3})   {:.3}   {:>6.2}{role}",
                s.x, s.y, s.z, last.taus[j], last.q[j]
            );
        }
        println!("  mean lying share: {:.4}", trajectory.mean_z(horizon - 1));
    }
    Ok(())
}
