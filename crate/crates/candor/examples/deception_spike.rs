//! Deception pays early, then collapses.
//!
//! The `game2` preset doubles the social-capital weight and cuts the moral
//! cost, so while the discovery probability is still low the best response
//! leans into lying and the population's mean lying share climbs. As `tau`
//! ramps up, discovery risk swamps the early advantage and the same players
//! abandon deception almost completely. This example prints the mean-z path
//! around the spike and the endpoints of the rise-and-fall.

use candor::dynamics::run;
use candor::scenario::load_scenario;

fn main() -> candor::Result<()> {
    let config = load_scenario("game2")?;
    let trajectory = &run(&config)?[0];
    let horizon = trajectory.horizon();

    let mean_z: Vec<f64> = (0..horizon).map(|t| trajectory.mean_z(t)).collect();
    let (peak_t, peak) = mean_z
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(t, z)| (t, *z))
        .expect("nonempty trajectory");

    println!("step   mean z    tau");
    for (t, z) in mean_z.iter().enumerate().take(12) {
        let marker = if t == peak_t { "  <- peak" } else { "" };
        println!(
            "{t:>4}   {z:.5}   {:.3}{marker}",
            trajectory.steps[t].taus[0]
        );
    }
    println!(" ...");
    for t in [horizon / 2, horizon - 1] {
        println!(
            "{t:>4}   {:.5}   {:.3}",
            mean_z[t], trajectory.steps[t].taus[0]
        );
    }

    println!();
    println!("start:  mean z = {:.5}", mean_z[0]);
    println!(
        "peak:   mean z = {peak:.5} at step {peak_t} (rise {:+.5})",
        peak - mean_z[0]
    );
    println!("final:  mean z = {:.5}", mean_z[horizon - 1]);
    assert!(peak > mean_z[0], "deception should rise before it falls");
    assert!(
        mean_z[horizon - 1] < 0.05,
        "deception should collapse by the end"
    );
    Ok(())
}
