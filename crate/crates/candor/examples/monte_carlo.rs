//! Validates analytic payoffs by simulating actual information releases.
//!
//! The learning dynamics compute expected stage payoffs in closed form. This
//! example replays each preset's trajectory while sampling a concrete action
//! (release / withhold / lie) from every player's mixed strategy at every
//! step, accumulating realized discounted payoffs across trials. The sample
//! means must agree with the analytic values within sampling error — here
//! checked against a 99% confidence band, Bonferroni-corrected because the
//! worst of nine z-scores is being tested, not one.

use candor::dynamics::{monte_carlo_payoff, run};
use candor::scenario::{load_scenario, PRESET_NAMES};

const TRIALS: u64 = 4000;
const SEED: u64 = 42;

fn main() -> candor::Result<()> {
    println!("{TRIALS} trials per preset, seed {SEED}\n");
    let mut worst: f64 = 0.0;

    for name in PRESET_NAMES {
        let config = load_scenario(name)?;
        let analytic = run(&config)?[0].horizon_payoffs(config.rho)?;
        let estimate = &monte_carlo_payoff(&config, TRIALS, SEED)?[0];

        println!("{name}:");
        println!("  player   sampled mean        analytic       z-score");
        for (j, expected) in analytic.iter().enumerate() {
            let (mean, se) = (estimate.means[j], estimate.std_errors[j]);
            let z = (mean - expected) / se;
            worst = worst.max(z.abs());
            println!("  {j:>6}   {mean:>9.4} +/- {se:.4}   {expected:>9.4}   {z:>+7.3}");
        }
        println!();
    }

    // Nine comparisons share the 1% failure budget: 0.01/9 two-sided -> 3.26.
    println!("largest |z|: {worst:.3} (99% family-wise band allows up to 3.26)");
    assert!(
        worst <= 3.26,
        "sampled means should track the analytic payoffs"
    );
    Ok(())
}
