//! Learning dynamics and Monte Carlo evaluation.
//!
//! Each step, every player computes a myopic best response to its current
//! neighborhood averages and moves a fraction `epsilon` of the way toward it:
//! `new = old + ε·(br − old)`, renormalized. Updates are simultaneous — all
//! best responses are taken against the same observed profile, then applied
//! at once — so one step never mixes old and new strategies.
//!
//! A [`Trajectory`] records, per step: the profile, the itemized stage
//! payoffs, each player's discovery probability `tau`, each player's
//! cumulative disclosure `q` *before* the step (the value its `tau` was
//! computed from), and each player's distance from optimality (`nash_gaps`).
//!
//! Monte Carlo evaluation replays a finished trajectory's strategy sequence,
//! samples one concrete action per player per step, and averages realized
//! discounted payoffs over many independent trials. Threshold gates depend
//! only on strategies, never on sampled actions, so in expectation the
//! sampled payoff reproduces the analytic one exactly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::best_response::{best_response, TieBreak};
use crate::error::{Error, Result};
use crate::graph::SocialGraph;
use crate::payoff::{
    horizon_payoff, multipliers, payoff_from_amounts, stage_expected_payoff, validate_rho,
    PlayerParams, StagePayoff, TauSchedule,
};
use crate::scenario::ScenarioConfig;
use crate::strategy::{profile_sup_distance, validate_profile, Strategy, StrategyProfile};

/// One recorded time step. All vectors are indexed by player.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub profile: StrategyProfile,
    pub payoffs: Vec<StagePayoff>,
    pub taus: Vec<f64>,
    /// Cumulative disclosure before this step; grows by `x(t) + z(t)`.
    pub q: Vec<f64>,
    /// Best-response value minus realized stage payoff; never negative.
    pub nash_gaps: Vec<f64>,
}

/// Everything one information type's run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub info_type: String,
    pub steps: Vec<Step>,
}

impl Trajectory {
    pub fn horizon(&self) -> usize {
        self.steps.len()
    }

    pub fn final_profile(&self) -> &StrategyProfile {
        &self
            .steps
            .last()
            .expect("runs have at least one step")
            .profile
    }

    /// Population mean of the lie share at step `t`.
    pub fn mean_z(&self, t: usize) -> f64 {
        let profile = &self.steps[t].profile;
        profile.iter().map(|s| s.z).sum::<f64>() / profile.len() as f64
    }

    /// Per-player discounted sum of recorded stage totals.
    pub fn horizon_payoffs(&self, rho: f64) -> Result<Vec<f64>> {
        let players = self.steps.first().map_or(0, |s| s.profile.len());
        (0..players)
            .map(|j| {
                let totals: Vec<f64> = self.steps.iter().map(|s| s.payoffs[j].total).collect();
                horizon_payoff(&totals, rho)
            })
            .collect()
    }

    /// Earliest step `t` such that every player stays within `tol`
    /// (sup-norm) of its step-`t` strategy for the `window` following steps.
    /// `None` when no such step has a full window before the run ends.
    pub fn stationarity(&self, window: usize, tol: f64) -> Option<usize> {
        let len = self.steps.len();
        (0..len.saturating_sub(window)).find(|&t| {
            let anchor = &self.steps[t].profile;
            (1..=window).all(|u| profile_sup_distance(anchor, &self.steps[t + u].profile) < tol)
        })
    }
}

/// `old + ε·(target − old)`, renormalized. A convex combination, so it stays
/// on the simplex up to rounding, which the renormalization removes.
pub(crate) fn learn_toward(old: Strategy, target: Strategy, epsilon: f64) -> Result<Strategy> {
    Strategy {
        x: old.x + epsilon * (target.x - old.x),
        y: old.y + epsilon * (target.y - old.y),
        z: old.z + epsilon * (target.z - old.z),
    }
    .renormalize()
}

fn check_players(graph: &SocialGraph, params: &[PlayerParams]) -> Result<()> {
    if params.len() != graph.node_count() {
        return Err(Error::config(
            "params",
            format!(
                "expected {} parameter sets, got {}",
                graph.node_count(),
                params.len()
            ),
        ));
    }
    Ok(())
}

fn evolve_step_taus(
    profile: &[Strategy],
    graph: &SocialGraph,
    params: &[PlayerParams],
    taus: &[f64],
    tie_break: TieBreak,
) -> Result<StrategyProfile> {
    validate_profile(profile, graph.node_count())?;
    check_players(graph, params)?;
    let mut next = Vec::with_capacity(profile.len());
    for j in 0..profile.len() {
        let avg = graph.strategy_averages(j, profile)?;
        let br = best_response(avg, &params[j], taus[j], tie_break);
        next.push(learn_toward(profile[j], br.strategy, params[j].epsilon)?);
    }
    Ok(next)
}

/// One simultaneous learning step at a common discovery probability `tau`.
pub fn evolve_step(
    profile: &[Strategy],
    graph: &SocialGraph,
    params: &[PlayerParams],
    tau: f64,
    tie_break: TieBreak,
) -> Result<StrategyProfile> {
    let taus = vec![tau; graph.node_count()];
    evolve_step_taus(profile, graph, params, &taus, tie_break)
}

/// Per-player distance from optimality at a common `tau`: the value of the
/// best reply to the current neighborhood, minus the payoff of the strategy
/// actually played. The current strategy is itself a feasible reply, so the
/// gap is never negative.
pub fn nash_gaps(
    profile: &[Strategy],
    graph: &SocialGraph,
    params: &[PlayerParams],
    tau: f64,
    tie_break: TieBreak,
) -> Result<Vec<f64>> {
    validate_profile(profile, graph.node_count())?;
    check_players(graph, params)?;
    (0..profile.len())
        .map(|j| {
            let avg = graph.strategy_averages(j, profile)?;
            let played = stage_expected_payoff(profile[j], avg, &params[j], tau).total;
            let br = best_response(avg, &params[j], tau, tie_break);
            Ok(br.value.max(played) - played)
        })
        .collect()
}

fn run_one(
    graph: &SocialGraph,
    params: &[PlayerParams],
    initial: &[Strategy],
    schedule: &TauSchedule,
    horizon: usize,
    tie_break: TieBreak,
    info_type: &str,
) -> Result<Trajectory> {
    let n = graph.node_count();
    let mut profile: StrategyProfile = initial.to_vec();
    let mut q = vec![0.0; n];
    let mut steps = Vec::with_capacity(horizon);

    for t in 0..horizon {
        let taus: Vec<f64> = (0..n).map(|j| schedule.tau_at(t, horizon, q[j])).collect();
        let mut payoffs = Vec::with_capacity(n);
        let mut gaps = Vec::with_capacity(n);
        let mut next = Vec::with_capacity(n);
        for j in 0..n {
            let avg = graph.strategy_averages(j, &profile)?;
            let played = stage_expected_payoff(profile[j], avg, &params[j], taus[j]);
            let br = best_response(avg, &params[j], taus[j], tie_break);
            gaps.push(br.value.max(played.total) - played.total);
            payoffs.push(played);
            next.push(learn_toward(profile[j], br.strategy, params[j].epsilon)?);
        }
        steps.push(Step {
            profile: profile.clone(),
            payoffs,
            taus,
            q: q.clone(),
            nash_gaps: gaps,
        });
        for j in 0..n {
            q[j] += profile[j].x + profile[j].z;
        }
        profile = next;
    }

    Ok(Trajectory {
        info_type: info_type.to_owned(),
        steps,
    })
}

/// Runs the scenario's learning dynamics, one independent trajectory per
/// information type.
pub fn run(config: &ScenarioConfig) -> Result<Vec<Trajectory>> {
    config.validate()?;
    let graph = config.build_graph()?;
    config
        .info_types
        .iter()
        .enumerate()
        .map(|(ti, info_type)| {
            run_one(
                &graph,
                config.params_for(ti),
                &info_type.initial,
                &config.tau,
                config.horizon,
                config.tie_break,
                &info_type.name,
            )
        })
        .collect()
}

/// One sampled action: the whole unit of information is released, withheld,
/// or lied about. Exactly one of the three happens per draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSample {
    Release,
    Withhold,
    Lie,
}

impl ActionSample {
    /// The (released, withheld, lied) amounts this sample realizes.
    pub fn amounts(self) -> (f64, f64, f64) {
        match self {
            ActionSample::Release => (1.0, 0.0, 0.0),
            ActionSample::Withhold => (0.0, 1.0, 0.0),
            ActionSample::Lie => (0.0, 0.0, 1.0),
        }
    }
}

/// Draws one action from the strategy's categorical distribution.
pub fn sample_action(s: Strategy, rng: &mut impl Rng) -> ActionSample {
    let u: f64 = rng.random();
    if u < s.x {
        ActionSample::Release
    } else if u < s.x + s.y {
        ActionSample::Withhold
    } else {
        ActionSample::Lie
    }
}

/// Monte Carlo estimate of one information type's horizon payoffs.
#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub info_type: String,
    pub trials: u64,
    /// Per-player mean realized discounted payoff.
    pub means: Vec<f64>,
    /// Per-player standard error of that mean.
    pub std_errors: Vec<f64>,
}

/// One independent, reproducible generator per (information type, trial).
fn trial_rng(seed: u64, info_type: usize, trial: u64) -> ChaCha8Rng {
    let stream = ((info_type as u64) << 40) ^ trial;
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

/// Replays the deterministic trajectory of every information type with
/// sampled actions and returns per-player means and standard errors of the
/// realized discounted payoff. Trials are independent; the reduction order is
/// fixed, so a given `(config, trials, seed)` always reproduces bit-identical
/// results. In q-based mode each trial's `tau` follows its own sampled
/// disclosure counts.
pub fn monte_carlo_payoff(
    config: &ScenarioConfig,
    trials: u64,
    seed: u64,
) -> Result<Vec<McEstimate>> {
    if trials == 0 {
        return Err(Error::config("trials", "need at least one trial"));
    }
    validate_rho(config.rho)?;
    let trajectories = run(config)?;
    let graph = config.build_graph()?;
    let n = graph.node_count();
    let horizon = config.horizon;

    let mut out = Vec::with_capacity(trajectories.len());
    for (ti, traj) in trajectories.iter().enumerate() {
        let params = config.params_for(ti);
        // Gates depend on strategies only; fix them once per (step, player).
        let mut gates = Vec::with_capacity(horizon);
        for step in &traj.steps {
            let row: Vec<_> = (0..n)
                .map(|j| {
                    let avg = graph.strategy_averages(j, &step.profile)?;
                    Ok(multipliers(step.profile[j], avg))
                })
                .collect::<Result<_>>()?;
            gates.push(row);
        }

        // Welford accumulators, one per player.
        let mut mean = vec![0.0_f64; n];
        let mut m2 = vec![0.0_f64; n];
        let mut totals = vec![0.0_f64; n];
        let mut q = vec![0.0_f64; n];
        for trial in 0..trials {
            let mut rng = trial_rng(seed, ti, trial);
            totals.iter_mut().for_each(|v| *v = 0.0);
            q.iter_mut().for_each(|v| *v = 0.0);
            let mut discount = 1.0;
            for (t, step) in traj.steps.iter().enumerate() {
                for j in 0..n {
                    let tau = config.tau.tau_at(t, horizon, q[j]);
                    let amounts = sample_action(step.profile[j], &mut rng).amounts();
                    let value = payoff_from_amounts(amounts, gates[t][j], &params[j], tau).total;
                    totals[j] += discount * value;
                    q[j] += amounts.0 + amounts.2;
                }
                discount *= config.rho;
            }
            let count = (trial + 1) as f64;
            for j in 0..n {
                let delta = totals[j] - mean[j];
                mean[j] += delta / count;
                m2[j] += delta * (totals[j] - mean[j]);
            }
        }
        let std_errors = m2
            .iter()
            .map(|&m2j| {
                if trials > 1 {
                    (m2j / (trials - 1) as f64 / trials as f64).max(0.0).sqrt()
                } else {
                    0.0
                }
            })
            .collect();
        out.push(McEstimate {
            info_type: traj.info_type.clone(),
            trials,
            means: mean,
            std_errors,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{load_scenario, preset};

    fn k3() -> SocialGraph {
        SocialGraph::complete(3).unwrap()
    }

    fn game1_params() -> Vec<PlayerParams> {
        vec![PlayerParams::with_weights([1.0, 0.25, 0.5, 1.0, 0.125]); 3]
    }

    fn symmetric_profile() -> StrategyProfile {
        vec![Strategy::new(0.7, 0.2, 0.1).unwrap(); 3]
    }

    #[test]
    fn learn_toward_blends_convexly() {
        let old = Strategy::new(0.7, 0.2, 0.1).unwrap();
        let target = Strategy::new(1.0, 0.0, 0.0).unwrap();
        let s = learn_toward(old, target, 0.1).unwrap();
        assert!((s.x - 0.73).abs() <= 1e-12);
        assert!((s.y - 0.18).abs() <= 1e-12);
        assert!((s.z - 0.09).abs() <= 1e-12);
        assert_eq!(s.x + s.y + s.z, 1.0);
    }

    #[test]
    fn symmetric_step_moves_everyone_toward_the_cap() {
        let next = evolve_step(
            &symmetric_profile(),
            &k3(),
            &game1_params(),
            0.1,
            TieBreak::default(),
        )
        .unwrap();
        for s in &next {
            assert!((s.x - 0.705).abs() <= 1e-12);
            assert!((s.y - 0.2).abs() <= 1e-12);
            assert!((s.z - 0.095).abs() <= 1e-12);
        }
    }

    #[test]
    fn zero_epsilon_freezes_players() {
        let mut params = game1_params();
        for p in &mut params {
            p.epsilon = 0.0;
        }
        let profile = symmetric_profile();
        let next = evolve_step(&profile, &k3(), &params, 0.1, TieBreak::default()).unwrap();
        assert!(profile_sup_distance(&profile, &next) <= 1e-15);
    }

    #[test]
    fn mismatched_params_length_is_an_error() {
        let r = evolve_step(
            &symmetric_profile(),
            &k3(),
            &game1_params()[..2],
            0.1,
            TieBreak::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn nash_gaps_at_the_symmetric_point() {
        let gaps = nash_gaps(
            &symmetric_profile(),
            &k3(),
            &game1_params(),
            0.1,
            TieBreak::default(),
        )
        .unwrap();
        for g in gaps {
            assert!((g - 0.0775).abs() <= 1e-12);
        }
    }

    #[test]
    fn full_withholding_is_a_fixed_point_with_zero_gap() {
        let params = vec![PlayerParams::with_weights([0.5, 5.0, 2.0, 100.0, 3.0]); 3];
        let profile = vec![Strategy::new(0.0, 1.0, 0.0).unwrap(); 3];
        let gaps = nash_gaps(&profile, &k3(), &params, 0.9, TieBreak::default()).unwrap();
        for g in gaps {
            assert!(g.abs() <= 1e-12);
        }
        let next = evolve_step(&profile, &k3(), &params, 0.9, TieBreak::default()).unwrap();
        assert!(profile_sup_distance(&profile, &next) <= 1e-15);
    }

    #[test]
    fn gaps_are_never_negative_along_a_run() {
        for name in ["game1", "game2", "game3"] {
            let traj = run(&load_scenario(name).unwrap()).unwrap();
            for step in &traj[0].steps {
                for &g in &step.nash_gaps {
                    assert!(g >= 0.0, "{name}: negative gap {g}");
                }
            }
        }
    }

    #[test]
    fn run_records_the_full_horizon_and_stays_on_simplex() {
        let config = load_scenario("game1").unwrap();
        let trajs = run(&config).unwrap();
        assert_eq!(trajs.len(), 1);
        let traj = &trajs[0];
        assert_eq!(traj.horizon(), 100);
        for step in &traj.steps {
            for s in &step.profile {
                assert!((s.x + s.y + s.z - 1.0).abs() <= 1e-9);
                s.validate().unwrap();
            }
        }
    }

    #[test]
    fn deception_is_abandoned_in_the_first_game() {
        let traj = &run(&load_scenario("game1").unwrap()).unwrap()[0];
        let last = traj.final_profile();
        for s in last {
            assert!(s.z < 0.05, "final lie share {} too high", s.z);
            assert!((s.x + s.y - 1.0).abs() < 0.05);
        }
        // All players identical by symmetry.
        for s in last {
            assert!(s.sup_distance(&last[0]) <= 1e-12);
        }
    }

    #[test]
    fn deception_spikes_then_collapses_in_the_second_game() {
        let traj = &run(&load_scenario("game2").unwrap()).unwrap()[0];
        let z0 = traj.mean_z(0);
        let (t_peak, peak) =
            (0..traj.horizon())
                .map(|t| (t, traj.mean_z(t)))
                .fold(
                    (0, f64::MIN),
                    |acc, cur| if cur.1 > acc.1 { cur } else { acc },
                );
        assert!(peak > z0, "no initial rise in deception");
        assert!(t_peak < 10, "peak at t = {t_peak} is not early");
        let z_final = traj.mean_z(traj.horizon() - 1);
        assert!(z_final < 0.05, "deception not abandoned: {z_final}");
    }

    #[test]
    fn privacy_game_contracts_to_full_withholding() {
        let traj = &run(&load_scenario("game3").unwrap()).unwrap()[0];
        let target = Strategy::new(0.0, 1.0, 0.0).unwrap();
        for s in traj.final_profile() {
            assert!(s.sup_distance(&target) < 0.05);
        }
    }

    #[test]
    fn contraction_rate_is_exactly_one_minus_epsilon() {
        // The withholding game's best response is constant, so distance to it
        // shrinks by the factor (1 − ε) every step.
        let traj = &run(&load_scenario("game3").unwrap()).unwrap()[0];
        let target = vec![Strategy::new(0.0, 1.0, 0.0).unwrap(); 3];
        let d0 = profile_sup_distance(&traj.steps[0].profile, &target);
        for (t, step) in traj.steps.iter().enumerate() {
            let expected = d0 * 0.95_f64.powi(t as i32);
            let actual = profile_sup_distance(&step.profile, &target);
            assert!(
                (actual - expected).abs() <= 1e-9,
                "t = {t}: {actual} vs {expected}"
            );
        }
    }

    #[test]
    fn zero_epsilon_run_is_constant() {
        let mut config = load_scenario("game1").unwrap();
        for p in &mut config.players {
            p.epsilon = 0.0;
        }
        let traj = &run(&config).unwrap()[0];
        let first = &traj.steps[0].profile;
        for step in &traj.steps {
            assert!(profile_sup_distance(first, &step.profile) <= 1e-15);
        }
        assert_eq!(traj.stationarity(10, 1e-3), Some(0));
    }

    #[test]
    fn stationarity_finds_settling_and_rejects_oscillation() {
        // game1 starts 0.1 away from its fixed point, so an anchored 10-step
        // window drops under 1e-3 drift around t = 72 — well inside the run.
        let traj = &run(&load_scenario("game1").unwrap()).unwrap()[0];
        let t = traj.stationarity(10, 1e-3);
        assert!(t.is_some(), "contraction run should settle");
        assert!(t.unwrap() < 90);

        // game3 starts 0.8 away; at rate 0.95 the anchored window does not
        // fit under 1e-3 until t ≈ 113, past the 100-step horizon — but a
        // 1e-2 tolerance is reached around t = 68.
        let far = &run(&load_scenario("game3").unwrap()).unwrap()[0];
        assert_eq!(far.stationarity(10, 1e-3), None);
        let loose = far.stationarity(10, 1e-2);
        assert!(loose.is_some());
        assert!(loose.unwrap() < 90);

        // Synthetic two-cycle with amplitude above tolerance.
        let a = vec![Strategy::new(0.6, 0.3, 0.1).unwrap(); 2];
        let b = vec![Strategy::new(0.5, 0.4, 0.1).unwrap(); 2];
        let steps: Vec<Step> = (0..40)
            .map(|t| Step {
                profile: if t % 2 == 0 { a.clone() } else { b.clone() },
                payoffs: vec![],
                taus: vec![],
                q: vec![],
                nash_gaps: vec![],
            })
            .collect();
        let osc = Trajectory {
            info_type: "osc".into(),
            steps,
        };
        assert_eq!(osc.stationarity(10, 1e-3), None);
    }

    #[test]
    fn tau_ramps_and_q_accumulates_along_a_run() {
        let traj = &run(&load_scenario("game1").unwrap()).unwrap()[0];
        assert_eq!(traj.steps[0].taus[0], 0.1);
        assert!((traj.steps[99].taus[0] - 0.9).abs() <= 1e-12);
        for w in traj.steps.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for j in 0..3 {
                assert!(b.taus[j] >= a.taus[j], "tau must not decrease");
                let disclosed = a.profile[j].x + a.profile[j].z;
                assert!((b.q[j] - a.q[j] - disclosed).abs() <= 1e-12);
            }
        }
        assert_eq!(traj.steps[0].q, vec![0.0; 3]);
    }

    #[test]
    fn runs_are_bit_for_bit_reproducible() {
        let config = load_scenario("game2").unwrap();
        let one = run(&config).unwrap();
        let two = run(&config).unwrap();
        for (a, b) in one[0].steps.iter().zip(&two[0].steps) {
            for (s, t) in a.profile.iter().zip(b.profile.iter()) {
                assert_eq!(s.x.to_bits(), t.x.to_bits());
                assert_eq!(s.y.to_bits(), t.y.to_bits());
                assert_eq!(s.z.to_bits(), t.z.to_bits());
            }
        }
    }

    #[test]
    fn sampling_respects_degenerate_strategies() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = Strategy::new(1.0, 0.0, 0.0).unwrap();
            assert_eq!(sample_action(s, &mut rng), ActionSample::Release);
            let s = Strategy::new(0.0, 0.0, 1.0).unwrap();
            assert_eq!(sample_action(s, &mut rng), ActionSample::Lie);
        }
    }

    #[test]
    fn sampling_frequency_tracks_the_strategy() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let s = Strategy::new(0.5, 0.5, 0.0).unwrap();
        let mut released = 0_u32;
        let draws = 10_000;
        for _ in 0..draws {
            match sample_action(s, &mut rng) {
                ActionSample::Release => released += 1,
                ActionSample::Withhold => {}
                ActionSample::Lie => panic!("z = 0 must never lie"),
            }
        }
        let freq = released as f64 / draws as f64;
        assert!((freq - 0.5).abs() < 0.02, "release frequency {freq}");
    }

    #[test]
    fn degenerate_strategies_make_monte_carlo_exact() {
        // Everyone always releases: there is no randomness left, so the MC
        // mean must equal the analytic expectation bit for bit.
        let mut config = preset("game1").unwrap();
        config.info_types[0].initial = vec![Strategy::new(1.0, 0.0, 0.0).unwrap(); 3];
        for p in &mut config.players {
            p.epsilon = 0.0;
        }
        let analytic = run(&config).unwrap()[0]
            .horizon_payoffs(config.rho)
            .unwrap();
        let mc = &monte_carlo_payoff(&config, 64, 9).unwrap()[0];
        for (j, expected) in analytic.iter().enumerate() {
            assert_eq!(mc.means[j], *expected);
            assert_eq!(mc.std_errors[j], 0.0);
        }
    }

    #[test]
    fn monte_carlo_mean_matches_analytic_within_error() {
        let config = load_scenario("game1").unwrap();
        let analytic = run(&config).unwrap()[0]
            .horizon_payoffs(config.rho)
            .unwrap();
        let mc = &monte_carlo_payoff(&config, 4_000, 1234).unwrap()[0];
        for (j, expected) in analytic.iter().enumerate() {
            let dev = (mc.means[j] - expected).abs();
            assert!(
                dev <= 4.0 * mc.std_errors[j],
                "player {j}: |{} - {expected}| > 4·{}",
                mc.means[j],
                mc.std_errors[j]
            );
        }
    }

    #[test]
    fn monte_carlo_is_reproducible_and_seed_sensitive() {
        let config = load_scenario("game2").unwrap();
        let a = monte_carlo_payoff(&config, 50, 11).unwrap();
        let b = monte_carlo_payoff(&config, 50, 11).unwrap();
        assert_eq!(a, b);
        let c = monte_carlo_payoff(&config, 50, 12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn single_trial_has_no_error_estimate() {
        let config = load_scenario("game1").unwrap();
        let mc = &monte_carlo_payoff(&config, 1, 3).unwrap()[0];
        assert_eq!(mc.std_errors, vec![0.0; 3]);
        assert!(monte_carlo_payoff(&config, 0, 3).is_err());
    }
}
