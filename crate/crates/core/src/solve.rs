//! Mode selection on top of the individual solvers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::{mapping_count, solve_brute};
use crate::poset::Poset;
use crate::random::{solve_random, RandomOptions, DEFAULT_CAP, DEFAULT_DELTA};
use crate::report::{Mode, SolveReport};
use crate::splitter::{deterministic_plan, solve_deterministic, DeterministicOptions};

/// `auto` picks brute force up to this many total mappings...
pub const AUTO_BRUTE_LIMIT: u64 = 1_000_000;
/// ...then the deterministic solver up to this many candidates, then rand.
pub const AUTO_DET_LIMIT: f64 = 1e7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeChoice {
    #[default]
    Auto,
    Fixed(Mode),
}

impl FromStr for ModeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => ModeChoice::Auto,
            "brute" => ModeChoice::Fixed(Mode::Brute),
            "rand" => ModeChoice::Fixed(Mode::Rand),
            "det" => ModeChoice::Fixed(Mode::Det),
            other => return Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        })
    }
}

impl fmt::Display for ModeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeChoice::Auto => f.write_str("auto"),
            ModeChoice::Fixed(m) => m.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub mode: ModeChoice,
    pub seed: u64,
    pub delta: f64,
    pub cap: u64,
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: ModeChoice::Auto,
            seed: 0,
            delta: DEFAULT_DELTA,
            cap: DEFAULT_CAP,
            threads: 1,
        }
    }
}

/// The solver `auto` would run on this pair.
pub fn auto_mode(p: &Poset, q: &Poset) -> Mode {
    if mapping_count(p.len(), q.len()).is_some_and(|c| c <= AUTO_BRUTE_LIMIT) {
        Mode::Brute
    } else if deterministic_plan(p, q).1 <= AUTO_DET_LIMIT {
        Mode::Det
    } else {
        Mode::Rand
    }
}

pub fn solve(p: &Poset, q: &Poset, opts: &SolveOptions) -> Result<SolveReport> {
    let mode = match opts.mode {
        ModeChoice::Auto => auto_mode(p, q),
        ModeChoice::Fixed(m) => m,
    };
    match mode {
        Mode::Brute => solve_brute(p, q, opts.cap, opts.threads),
        Mode::Det => solve_deterministic(
            p,
            q,
            &DeterministicOptions {
                cap: opts.cap,
                threads: opts.threads,
            },
        ),
        Mode::Rand => solve_random(
            p,
            q,
            &RandomOptions {
                seed: opts.seed,
                delta: opts.delta,
                cap: opts.cap,
                threads: opts.threads,
            },
        ),
    }
}
