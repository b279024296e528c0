//! Ground truth by exhaustive search.
//!
//! [`check_definition`] evaluates the chain-minor definition directly: for
//! every nonempty chain of P it searches Q depth-first for an increasing
//! preimage. It deliberately shares nothing with the prefix DP in
//! [`crate::witness`], so the two can check each other.

use std::time::Instant;

use crate::error::Result;
use crate::mapping::Mapping;
use crate::poset::Poset;
use crate::random::exponent_bound;
use crate::report::{Bounds, Mode, SolveReport};
use crate::search::first_success;

pub const DEFAULT_BRUTE_CAP: u64 = 10_000_000;

/// True iff every chain of P has a Q-chain preimage under `f`.
pub fn check_definition(p: &Poset, q: &Poset, f: &Mapping) -> bool {
    let chains = p.all_chains_guarded(usize::MAX).expect("unbounded guard never refuses");
    chains.iter().all(|c| has_preimage(q, f, c.items(), None))
}

fn has_preimage(q: &Poset, f: &Mapping, rest: &[usize], below: Option<usize>) -> bool {
    let Some((&want, tail)) = rest.split_first() else {
        return true;
    };
    q.topological_order()
        .iter()
        .any(|&v| f.get(v) == Some(want) && below.is_none_or(|u| q.lt(u, v)) && has_preimage(q, f, tail, Some(v)))
}

/// `k^n` if it fits in a `u64`.
pub fn mapping_count(k: usize, n: usize) -> Option<u64> {
    u32::try_from(n).ok().and_then(|n| (k as u64).checked_pow(n))
}

/// The `index`-th total mapping `Q -> P` in lexicographic order (image of
/// Q's first element most significant).
pub fn nth_mapping(index: u64, k: usize, n: usize) -> Mapping {
    let mut images = vec![0; n];
    let mut rest = index;
    for slot in images.iter_mut().rev() {
        *slot = (rest % k as u64) as usize;
        rest /= k as u64;
    }
    Mapping::total(images)
}

/// Tries all `k^n` total mappings in lexicographic order. Inconclusive when
/// that count exceeds `cap`.
pub fn solve_brute(p: &Poset, q: &Poset, cap: u64, threads: usize) -> Result<SolveReport> {
    let start = Instant::now();
    let (k, n) = (p.len(), q.len());
    let mut report = SolveReport::new(
        Mode::Brute,
        Bounds {
            k,
            n,
            s: exponent_bound(p, q),
            l: k,
        },
    );
    if k == 0 {
        report = report.yes(Mapping::unmapped(n));
    } else {
        match mapping_count(k, n) {
            Some(total) if total <= cap => {
                let hit = first_success(total, threads, |i| {
                    let f = nth_mapping(i, k, n);
                    check_definition(p, q, &f).then_some(f)
                });
                report = match hit {
                    Some((_, f)) => report.yes(f),
                    None => report.no(),
                };
            }
            count => {
                let shown = count.map_or_else(|| "more than 2^64".to_string(), |c| c.to_string());
                report = report.inconclusive(format!("{shown} mappings ({k}^{n}), cap is {cap}"));
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
