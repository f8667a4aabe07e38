//! Cross-checks the closed-form best response against brute force.
//!
//! The exact best response evaluates a handful of boundary candidates
//! (simplex vertices, threshold lines, and nudges just inside the discovery
//! gate) instead of searching. This example draws random payoff parameters,
//! neighborhood averages, and discovery probabilities, then compares the
//! enumerated optimum against an independent dense-grid search. The grid can
//! only ever tie or lose: any positive shortfall would mean the candidate set
//! missed a region of the simplex.

use std::time::Instant;

use candor::best_response::{best_response, grid_oracle, TieBreak};
use candor::graph::NeighborAverages;
use candor::payoff::PlayerParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROBLEMS: usize = 200;
const RESOLUTION: usize = 250;

fn random_simplex(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let (mut a, mut b): (f64, f64) = (rng.random(), rng.random());
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    (a, b - a, 1.0 - b)
}

fn main() -> candor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    let mut worst_case = None;
    let started = Instant::now();

    for i in 0..PROBLEMS {
        let mut params =
            PlayerParams::with_weights(std::array::from_fn(|_| rng.random_range(0.0..5.0)));
        params.zeta = rng.random_range(0.0..2.0);
        params.theta = rng.random_range(0.0..2.0);
        params.eta = rng.random_range(0.0..2.0);
        let (x, y, z) = random_simplex(&mut rng);
        let avg = NeighborAverages::new(x, y, z);
        let tau = rng.random();

        let fast = best_response(avg, &params, tau, TieBreak::PreferRelease);
        let slow = grid_oracle(avg, &params, tau, RESOLUTION, TieBreak::PreferRelease)?;
        let shortfall = (slow.value - fast.value).max(0.0);
        if shortfall > worst {
            worst = shortfall;
            worst_case = Some((i, avg, tau));
        }
    }

    let grid_points = (RESOLUTION + 1) * (RESOLUTION + 2) / 2;
    println!(
        "{PROBLEMS} random problems, enumeration vs a {grid_points}-point grid: {:.1?}",
        started.elapsed()
    );
    println!("max grid advantage over enumeration: {worst:.3e}");
    match worst_case {
        None => println!("the enumerated best response never lost"),
        Some((i, avg, tau)) => println!(
            "worst case: problem {i}, avg = ({:.3}, {:.3}, {:.3}), tau = {tau:.3}",
            avg.x, avg.y, avg.z
        ),
    }
    assert!(worst <= 1e-9, "grid should never beat exact enumeration");
    Ok(())
}
