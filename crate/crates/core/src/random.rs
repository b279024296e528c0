//! Randomized color-coding solver.
//!
//! Every Q element is colored with a uniformly random element of P and the
//! resulting total mapping is checked with the witness verifier. If P is a
//! chain minor of Q, some witness agrees with a random coloring on a core of
//! at most `s` elements with probability at least `k^-s`, so
//! `ceil(k^s * ln(1/delta))` independent trials miss with probability at most
//! `delta`. No answers are therefore probabilistic; yes answers carry a
//! verified witness.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::poset::Poset;
use crate::report::{Bounds, Mode, SolveReport};
use crate::search::first_success;
use crate::witness::Verifier;

pub const DEFAULT_DELTA: f64 = 1e-6;
pub const DEFAULT_CAP: u64 = 100_000_000;

/// Upper bound on the size of a core set for P in Q: the total length of
/// P's maximal chains, capped by `2^k * k` and by `|Q|`.
pub fn exponent_bound(p: &Poset, q: &Poset) -> usize {
    let k = p.len();
    let chain_total = p.maximal_chains().total_len();
    let worst = 1usize
        .checked_shl(k as u32)
        .and_then(|b| b.checked_mul(k))
        .unwrap_or(usize::MAX);
    chain_total.min(worst).min(q.len())
}

/// `ceil(k^s * ln(1/delta))` for `k >= 2`, 1 otherwise. `None` when the
/// count does not fit in a `u64`.
///
/// Products within a relative 1e-9 of an integer are snapped to it before
/// rounding up, so that e.g. `k^s * ln(e)` yields exactly `k^s`.
pub fn trial_count(k: usize, s: usize, delta: f64) -> Option<u64> {
    if k <= 1 {
        return Some(1);
    }
    let exact = (k as f64).powf(s as f64) * -delta.ln();
    if !exact.is_finite() || exact >= u64::MAX as f64 {
        return None;
    }
    let nearest = exact.round();
    let trials = if (exact - nearest).abs() <= 1e-9 * exact.max(1.0) {
        nearest
    } else {
        exact.ceil()
    };
    Some(trials.max(1.0) as u64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialPlan {
    pub k: usize,
    pub n: usize,
    pub s: usize,
    pub delta: f64,
    /// `None` on overflow.
    pub trials: Option<u64>,
    pub cap: u64,
}

impl TrialPlan {
    pub fn new(k: usize, n: usize, s: usize, delta: f64, cap: u64) -> Result<TrialPlan> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "delta must lie in (0, 1), got {delta}"
            )));
        }
        Ok(TrialPlan {
            k,
            n,
            s,
            delta,
            trials: trial_count(k, s, delta),
            cap,
        })
    }

    pub fn for_instance(p: &Poset, q: &Poset, delta: f64, cap: u64) -> Result<TrialPlan> {
        TrialPlan::new(p.len(), q.len(), exponent_bound(p, q), delta, cap)
    }

    pub fn is_feasible(&self) -> bool {
        self.trials.is_some_and(|t| t <= self.cap)
    }

    /// `(1 - k^-s)^trials`, the failure probability guaranteed on yes-instances.
    pub fn miss_probability(&self) -> f64 {
        match self.trials {
            Some(t) if self.k >= 2 => {
                let per_trial = (self.k as f64).powf(-(self.s as f64));
                (t as f64 * (-per_trial).ln_1p()).exp()
            }
            Some(_) => 0.0,
            None => 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomOptions {
    pub seed: u64,
    pub delta: f64,
    /// Maximum number of trials.
    pub cap: u64,
    pub threads: usize,
}

impl Default for RandomOptions {
    fn default() -> Self {
        RandomOptions {
            seed: 0,
            delta: DEFAULT_DELTA,
            cap: DEFAULT_CAP,
            threads: 1,
        }
    }
}

/// The coloring examined by trial `trial`: each Q element gets an
/// independent uniform color in `0..k`, drawn from a stream fixed by
/// `(seed, trial)`.
pub fn sample_mapping(seed: u64, trial: u64, k: usize, n: usize) -> Mapping {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    Mapping::total((0..n).map(|_| rng.gen_range(0..k)).collect())
}

pub fn solve_random(p: &Poset, q: &Poset, opts: &RandomOptions) -> Result<SolveReport> {
    let start = Instant::now();
    let plan = TrialPlan::for_instance(p, q, opts.delta, opts.cap)?;
    let (k, n) = (p.len(), q.len());
    let mut report = SolveReport::new(Mode::Rand, Bounds { k, n, s: plan.s, l: k });

    if k == 0 {
        report.trials_used = Some(0);
        report = report.yes(Mapping::unmapped(n));
    } else if n == 0 {
        // Nothing to color; the answer is certain.
        report.trials_used = Some(0);
        report.error_bound = Some(0.0);
        report = report.no();
    } else if !plan.is_feasible() {
        let detail = match plan.trials {
            Some(t) => format!("{t} trials needed, cap is {}", plan.cap),
            None => format!("trial count {k}^{} overflows", plan.s),
        };
        report = report.inconclusive(detail);
    } else {
        let trials = plan.trials.expect("feasible plan has a count");
        let verifier = Verifier::new(p, q);
        let hit = first_success(trials, opts.threads, |t| {
            let g = sample_mapping(opts.seed, t, k, n);
            verifier.accepts(&g).then_some(g)
        });
        match hit {
            Some((t, g)) => {
                report.trials_used = Some(t + 1);
                report = report.yes(g);
            }
            None => {
                report.trials_used = Some(trials);
                report.error_bound = Some(plan.delta);
                report = report.no();
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
