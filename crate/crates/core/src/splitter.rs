//! Splitter families and the deterministic solver built on them.
//!
//! An `(n, k, l)`-splitter is a family of functions `{1..n} -> {1..l}` such
//! that every `k`-subset of the domain is mapped injectively by at least one
//! member. This module uses the multiplicative hash family
//! `x -> ((a * x) mod prime) mod k^2`, `a = 1..prime-1`, with `prime` the
//! smallest prime above `n`. For a fixed pair `x != y` at most
//! `2 (prime - 1) / k^2` multipliers collide, so over a `k`-set the expected
//! number of colliding pairs is below one and some multiplier is injective.
//! When `n <= k^2` the identity already works.
//!
//! The deterministic solver composes every member `h` with every coloring
//! `g: {1..l} -> P` and verifies `g . h`. Some member is injective on a core
//! set of a witness, and some `g` then reproduces the witness there.

use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::poset::Poset;
use crate::random::{exponent_bound, DEFAULT_CAP};
use crate::report::{Bounds, Mode, SolveReport};
use crate::search::first_success;
use crate::witness::Verifier;

/// How the members of a family are produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitterKind {
    /// One member, the identity on `0..n`.
    Identity,
    /// Members `a = 1..prime-1`, `x -> ((a * (x + 1)) mod prime) mod l`.
    Multiplicative { prime: u64 },
    /// Explicit value tables, one per member.
    Table(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitterFamily {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub kind: SplitterKind,
}

impl SplitterFamily {
    /// Family given by explicit tables, each of length `n` with values below `l`.
    pub fn from_tables(n: usize, k: usize, l: usize, tables: Vec<Vec<usize>>) -> Result<SplitterFamily> {
        for t in &tables {
            if t.len() != n || t.iter().any(|&v| v >= l) {
                return Err(Error::InvalidParameter(
                    "splitter table has wrong length or out-of-range value".into(),
                ));
            }
        }
        Ok(SplitterFamily {
            n,
            k,
            l,
            kind: SplitterKind::Table(tables),
        })
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        match &self.kind {
            SplitterKind::Identity => 1,
            SplitterKind::Multiplicative { prime } => (*prime - 1) as usize,
            SplitterKind::Table(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value of member `member` at domain point `x` (both 0-based).
    pub fn apply(&self, member: usize, x: usize) -> usize {
        match &self.kind {
            SplitterKind::Identity => x,
            SplitterKind::Multiplicative { prime } => {
                let a = member as u128 + 1;
                let v = (a * (x as u128 + 1)) % *prime as u128;
                (v % self.l as u128) as usize
            }
            SplitterKind::Table(t) => t[member][x],
        }
    }

    pub fn is_injective_on(&self, member: usize, subset: &[usize]) -> bool {
        let mut seen: Vec<usize> = subset.iter().map(|&x| self.apply(member, x)).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

fn smallest_prime_above(n: u64) -> u64 {
    let is_prime = |m: u64| m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d));
    (n + 1..).find(|&m| is_prime(m)).expect("primes are unbounded")
}

/// An `(n, k, l)`-splitter: the identity with `l = n` when `n <= k^2`,
/// otherwise the multiplicative family with `l = k^2`. `k` below 1 is
/// treated as 1.
pub fn build_splitter(n: usize, k: usize) -> SplitterFamily {
    let k = k.max(1);
    let l = k.saturating_mul(k);
    if n <= l {
        SplitterFamily {
            n,
            k,
            l: n,
            kind: SplitterKind::Identity,
        }
    } else {
        SplitterFamily {
            n,
            k,
            l,
            kind: SplitterKind::Multiplicative {
                prime: smallest_prime_above(n as u64),
            },
        }
    }
}

pub const SPLITTER_CHECK_MAX_N: usize = 16;
pub const SPLITTER_CHECK_MAX_K: usize = 4;

/// Exhaustively checks that every `k`-subset has an injective member.
pub fn verify_splitter(fam: &SplitterFamily) -> Result<bool> {
    if fam.n > SPLITTER_CHECK_MAX_N {
        return Err(Error::SizeGuard {
            what: "splitter check (n)",
            size: fam.n,
            limit: SPLITTER_CHECK_MAX_N,
        });
    }
    if fam.k > SPLITTER_CHECK_MAX_K {
        return Err(Error::SizeGuard {
            what: "splitter check (k)",
            size: fam.k,
            limit: SPLITTER_CHECK_MAX_K,
        });
    }
    Ok((0..fam.n)
        .combinations(fam.k)
        .all(|w| (0..fam.len()).any(|m| fam.is_injective_on(m, &w))))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeterministicOptions {
    /// Maximum number of candidate compositions.
    pub cap: u64,
    pub threads: usize,
}

impl Default for DeterministicOptions {
    fn default() -> Self {
        DeterministicOptions {
            cap: DEFAULT_CAP,
            threads: 1,
        }
    }
}

/// Splitter family and candidate count the deterministic solver would use.
/// The count is `|family| * k^l`, as a float so that it never overflows.
pub fn deterministic_plan(p: &Poset, q: &Poset) -> (SplitterFamily, f64) {
    let s = exponent_bound(p, q);
    let fam = build_splitter(q.len(), s);
    let work = fam.len() as f64 * (p.len() as f64).powf(fam.l as f64);
    (fam, work)
}

pub fn solve_deterministic(p: &Poset, q: &Poset, opts: &DeterministicOptions) -> Result<SolveReport> {
    let start = Instant::now();
    let (k, n) = (p.len(), q.len());
    let s = exponent_bound(p, q);
    let mut report = SolveReport::new(Mode::Det, Bounds { k, n, s, l: 0 });

    if k == 0 {
        report = report.yes(Mapping::unmapped(n));
    } else if n == 0 {
        report = report.no();
    } else {
        let (fam, work) = deterministic_plan(p, q);
        report.bounds.l = fam.l;
        report.family_size = Some(fam.len() as u64);
        if work > opts.cap as f64 {
            report = report.inconclusive(format!(
                "{work:.3e} candidate mappings ({} members x {k}^{}), cap is {}",
                fam.len(),
                fam.l,
                opts.cap
            ));
        } else {
            let colorings = (k as u64).pow(fam.l as u32);
            let total = fam.len() as u64 * colorings;
            let verifier = Verifier::new(p, q);
            let hit = first_success(total, opts.threads, |i| {
                let member = (i / colorings) as usize;
                let g = coloring(i % colorings, k, fam.l);
                let f = Mapping::total((0..n).map(|x| g[fam.apply(member, x)]).collect());
                verifier.accepts(&f).then_some(f)
            });
            report = match hit {
                Some((_, f)) => report.yes(f),
                None => report.no(),
            };
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The `index`-th function `{0..l} -> {0..k}` in lexicographic order, color
/// of point 0 most significant.
fn coloring(mut index: u64, k: usize, l: usize) -> Vec<usize> {
    let mut g = vec![0; l];
    for slot in g.iter_mut().rev() {
        *slot = (index % k as u64) as usize;
        index /= k as u64;
    }
    g
}
