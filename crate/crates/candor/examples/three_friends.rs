//! Three friends on a triangle learn to stop lying.
//!
//! Runs the `game1` preset — a complete graph on three players who all start
//! at (x, y, z) = (0.7, 0.2, 0.1) — and prints a convergence table. With the
//! discovery probability ramping from 0.1 to 0.9, the lying share decays to
//! nearly zero and the profile settles close to the mixed equilibrium
//! (2/3, 1/3, 0) predicted by the stage payoff's indifference line.

use candor::dynamics::run;
use candor::scenario::load_scenario;
use candor::strategy::Strategy;
use candor::{STATIONARITY_TOL, STATIONARITY_WINDOW};

fn main() -> candor::Result<()> {
    let config = load_scenario("game1")?;
    let trajectory = &run(&config)?[0];

    println!("step    x        y        z        tau     max gap");
    for t in (0..trajectory.horizon())
        .step_by(10)
        .chain([trajectory.horizon() - 1])
    {
        let step = &trajectory.steps[t];
        // The triangle is symmetric, so player 0 speaks for everyone.
        let s = step.profile[0];
        let max_gap = step.nash_gaps.iter().cloned().fold(0.0, f64::max);
        println!(
            "{t:>4}   {:.5}  {:.5}  {:.5}   {:.3}   {max_gap:.2e}",
            s.x, s.y, s.z, step.taus[0]
        );
    }

    let settled = trajectory.stationarity(STATIONARITY_WINDOW, STATIONARITY_TOL);
    println!("\nstationary from step: {settled:?}");

    let last = trajectory.final_profile();
    let target = Strategy::new(2.0 / 3.0, 1.0 / 3.0, 0.0)?;
    let distance = last
        .iter()
        .map(|s| s.sup_distance(&target))
        .fold(0.0, f64::max);
    println!("distance to (2/3, 1/3, 0): {distance:.4}");
    println!(
        "final lying share:         {:.6}",
        trajectory.mean_z(trajectory.horizon() - 1)
    );
    Ok(())
}
