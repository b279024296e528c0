//! Scaling measurements on generated yes-instances.
//!
//! For a pattern P of size k and height h, the instance is `2^k` disjoint
//! chains of h elements padded with isolated elements up to the requested
//! size. Every nonempty chain of P gets its own copy, which yields a witness
//! directly.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::poset::Poset;
use crate::random::{solve_random, RandomOptions};
use crate::report::{Answer, SCHEMA_VERSION};
use crate::witness::verify_witness;

pub const MAX_PATTERN_SIZE: usize = 16;

/// Smallest Q the construction needs for `p`.
pub fn base_size(p: &Poset) -> usize {
    (1usize << p.len().min(MAX_PATTERN_SIZE)) * p.height()
}

/// A Q of exactly `n` elements with `p` as a chain minor, and a witness.
pub fn yes_instance(p: &Poset, n: usize) -> Result<(Poset, Mapping)> {
    let k = p.len();
    if k > MAX_PATTERN_SIZE {
        return Err(Error::SizeGuard {
            what: "bench pattern",
            size: k,
            limit: MAX_PATTERN_SIZE,
        });
    }
    let h = p.height();
    let copies = 1usize << k;
    let base = copies * h;
    if n < base {
        return Err(Error::InvalidParameter(format!(
            "size {n} is below the {base} elements needed for this pattern"
        )));
    }
    // Padding is declared first so that it precedes the chains topologically
    // and a verifier has to scan all of Q before it meets the witness chains.
    let pad = n - base;
    let mut tokens: Vec<String> = (1..=pad).map(|i| format!("pad{i}")).collect();
    tokens.extend((1..=copies).flat_map(|i| (1..=h).map(move |j| format!("c{i}_{j}"))));
    let at = move |copy: usize, j: usize| pad + copy * h + j;
    let relations = (0..copies).flat_map(move |i| (1..h).map(move |j| (at(i, j - 1), at(i, j))));
    let q = Poset::new(tokens, relations)?;

    let mut witness = Mapping::unmapped(n);
    let chains = p.all_chains_guarded(MAX_PATTERN_SIZE)?;
    for (copy, chain) in chains.iter().enumerate() {
        for (j, &v) in chain.items().iter().enumerate() {
            witness.set(at(copy, j), Some(v));
        }
    }
    Ok((q, witness))
}

/// Mean time of one call of `f`, running it until at least `budget` has passed.
pub fn time_per_call<F: FnMut()>(budget: Duration, mut f: F) -> Duration {
    let start = Instant::now();
    let mut calls = 0u32;
    while calls == 0 || start.elapsed() < budget {
        f();
        calls += 1;
    }
    start.elapsed() / calls
}

/// Median of `samples` (at least one) measurements of [`time_per_call`].
pub fn median_time<F: FnMut()>(samples: usize, budget: Duration, mut f: F) -> Duration {
    let mut times: Vec<Duration> = (0..samples.max(1)).map(|_| time_per_call(budget, &mut f)).collect();
    times.sort();
    times[times.len() / 2]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub schema_version: u32,
    pub n: usize,
    pub verify_ms: f64,
    pub solve_ms: f64,
    /// Against the previous row.
    pub verify_ratio: Option<f64>,
    pub solve_ratio: Option<f64>,
    pub answer: Answer,
    pub trials_used: Option<u64>,
}

pub const DEFAULT_SAMPLES: usize = 5;
pub const SAMPLE_BUDGET: Duration = Duration::from_millis(20);

/// Median verifier and randomized-solver times per instance size.
pub fn run_bench(p: &Poset, sizes: &[usize], samples: usize, opts: &RandomOptions) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(Error::InvalidParameter("no sizes given".into()));
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let (q, witness) = yes_instance(p, n)?;
        let mut accepted = true;
        let verify = median_time(samples, SAMPLE_BUDGET, || {
            accepted &= verify_witness(p, &q, &witness);
        });
        debug_assert!(accepted);
        let mut last = None;
        let mut failure = None;
        let solve = median_time(samples, SAMPLE_BUDGET, || match solve_random(p, &q, opts) {
            Ok(r) => last = Some(r),
            Err(e) => failure = Some(e),
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let report = last.expect("at least one solver run");
        let ms = |d: Duration| d.as_secs_f64() * 1e3;
        let prev = rows.last();
        rows.push(BenchRow {
            schema_version: SCHEMA_VERSION,
            n,
            verify_ms: ms(verify),
            solve_ms: ms(solve),
            verify_ratio: prev.map(|r| ms(verify) / r.verify_ms),
            solve_ratio: prev.map(|r| ms(solve) / r.solve_ms),
            answer: report.answer,
            trials_used: report.trials_used,
        });
    }
    Ok(rows)
}
