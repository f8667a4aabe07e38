//! When privacy dominates, everyone withholds — and that's an equilibrium.
//!
//! The `game3` preset makes withholding worth twenty times the social reward
//! and prices lying out entirely (moral-cost weight 100). Starting from a
//! talkative profile (0.1, 0.1, 0.8), every player races to the pure
//! "withhold everything" corner. The example verifies the corner numerically:
//! it snaps the settled profile to the exact vertex (0, 1, 0) and shows that
//! no player can gain anything by deviating — a strict Nash equilibrium, not
//! just a resting point of the learning dynamics.

use candor::dynamics::{nash_gaps, run};
use candor::scenario::load_scenario;
use candor::strategy::{profile_sup_distance, Strategy};

fn main() -> candor::Result<()> {
    let config = load_scenario("game3")?;
    let trajectory = &run(&config)?[0];
    let horizon = trajectory.horizon();

    println!("step    x        y        z");
    for t in [0usize, 1, 2, 5, 10, 20, 50, horizon - 1] {
        let s = trajectory.steps[t].profile[0];
        println!("{t:>4}   {:.5}  {:.5}  {:.5}", s.x, s.y, s.z);
    }

    let last = trajectory.final_profile();
    let vertex = vec![Strategy::new(0.0, 1.0, 0.0)?; last.len()];
    let distance = profile_sup_distance(last, &vertex);
    println!("\ndistance to the all-withhold vertex: {distance:.6}");

    // The learned profile is close; the vertex itself is exactly optimal.
    let graph = config.build_graph()?;
    let final_tau = trajectory.steps[horizon - 1].taus[0];
    let gaps = nash_gaps(
        &vertex,
        &graph,
        config.params_for(0),
        final_tau,
        config.tie_break,
    )?;
    println!("best-response gaps at the snapped vertex (tau = {final_tau}):");
    for (player, gap) in gaps.iter().enumerate() {
        println!("  player {player}: {gap:.3e}");
    }
    assert!(
        gaps.iter().all(|g| *g < 1e-6),
        "the vertex should be a Nash equilibrium"
    );
    println!("no player gains by deviating: equilibrium confirmed");
    Ok(())
}
