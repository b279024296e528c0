//! Witness verification by longest-prefix dynamic programming, and core
//! extraction.
//!
//! For a target chain `c_1 < ... < c_m` of P and a mapping `f`, each element
//! `v` of Q gets `best(v)`: the longest prefix `c_1..c_j` realizable by a
//! Q-chain whose elements are all `<= v`. With `reach(v)` the maximum of
//! `best` over strict predecessors (0 at minimal elements),
//!
//! ```text
//! best(v) = reach(v) + 1   if f(v) = c_{reach(v)+1}
//!         = reach(v)       otherwise
//! ```
//!
//! `reach` only needs the covers of `v`, because the running maximum over all
//! predecessors composes along cover edges. One pass in topological order
//! costs O(|Q| + |covers of Q|) per chain.

use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::poset::{Chain, ChainList, Poset};

/// Outcome of [`realize_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// Longest realizable prefix length.
    pub reached: usize,
    /// The realizing Q-chain, present only when the whole chain is realized.
    pub chain: Option<Vec<usize>>,
}

impl Realization {
    pub fn is_full(&self) -> bool {
        self.chain.is_some()
    }
}

/// Runs the prefix DP for one chain of P over Q.
///
/// Among predecessors achieving the same maximum, the one whose realizing
/// element comes first topologically is kept, so tracebacks are reproducible.
pub fn realize_chain(chain: &Chain, q: &Poset, f: &Mapping) -> Realization {
    let target = chain.items();
    let m = target.len();
    let n = q.len();
    debug_assert_eq!(f.domain_len(), n);
    assert!(n < u32::MAX as usize, "Q too large for the verifier");

    // Per element: the longest prefix realized at or below it, and the
    // element that realized its last level.
    #[derive(Clone, Copy)]
    struct Cell {
        best: u32,
        top: u32,
    }
    const NIL: u32 = u32::MAX;
    let mut cells = vec![Cell { best: 0, top: NIL }; n];
    // For an element that realized a level, the element that realized the level below.
    let mut back = vec![NIL; n];
    let mut reached = 0;
    let m32 = m as u32;

    for &v in q.topological_order() {
        let mut reach = 0u32;
        let mut via = NIL;
        for &u in q.hasse_predecessors(v) {
            let c = cells[u];
            let better = c.best > reach
                || (c.best == reach && reach > 0 && q.topo_position(c.top as usize) < q.topo_position(via as usize));
            if better {
                reach = c.best;
                via = c.top;
            }
        }
        let cell = if reach < m32 && f.get(v) == Some(target[reach as usize]) {
            back[v] = via;
            Cell {
                best: reach + 1,
                top: v as u32,
            }
        } else {
            Cell { best: reach, top: via }
        };
        cells[v] = cell;
        reached = reached.max(cell.best as usize);
        if cell.best == m32 {
            let mut out = Vec::with_capacity(m);
            let mut cur = v as u32;
            while cur != NIL {
                out.push(cur as usize);
                cur = back[cur as usize];
            }
            out.reverse();
            debug_assert_eq!(out.len(), m);
            return Realization {
                reached: m,
                chain: Some(out),
            };
        }
    }
    Realization { reached, chain: None }
}

/// Decides whether `f` witnesses that P is a chain minor of Q.
///
/// Only maximal chains of P are checked: a realization of a chain restricts
/// to realizations of all its subsequences.
pub fn verify_witness(p: &Poset, q: &Poset, f: &Mapping) -> bool {
    Verifier::new(p, q).accepts(f)
}

/// [`verify_witness`] with P's maximal chains computed once, for callers that
/// test many mappings against the same pair.
#[derive(Debug, Clone)]
pub struct Verifier<'a> {
    q: &'a Poset,
    chains: ChainList,
}

impl<'a> Verifier<'a> {
    pub fn new(p: &Poset, q: &'a Poset) -> Verifier<'a> {
        Verifier {
            q,
            chains: p.maximal_chains(),
        }
    }

    pub fn accepts(&self, f: &Mapping) -> bool {
        self.chains.iter().all(|c| realize_chain(c, self.q, f).is_full())
    }

    pub fn chains(&self) -> &ChainList {
        &self.chains
    }
}

/// A subset of Q on which agreement with a witness already forces witness-hood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreSet {
    /// Sorted by Q index.
    pub elements: Vec<usize>,
    /// Each maximal chain of P with the Q-chain chosen to realize it.
    pub realizations: Vec<(Chain, Vec<usize>)>,
}

impl CoreSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elements.binary_search(&v).is_ok()
    }
}

/// Collects one realizing Q-chain per maximal chain of P. Fails when `f` is
/// not a witness.
pub fn extract_core(p: &Poset, q: &Poset, f: &Mapping) -> Result<CoreSet> {
    let mut realizations = Vec::new();
    let mut elements = Vec::new();
    for c in p.maximal_chains().chains {
        match realize_chain(&c, q, f).chain {
            Some(real) => {
                elements.extend_from_slice(&real);
                realizations.push((c, real));
            }
            None => {
                return Err(Error::NotAWitness {
                    chain: c.tokens(p).into_iter().map(String::from).collect(),
                })
            }
        }
    }
    elements.sort_unstable();
    elements.dedup();
    Ok(CoreSet { elements, realizations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{generate, parse_poset, Family};

    fn chain_of(p: &Poset, tokens: &[&str]) -> Chain {
        Chain::new(p, tokens.iter().map(|t| p.index_of(t).unwrap()).collect()).unwrap()
    }

    fn map(p: &Poset, q: &Poset, pairs: &[(&str, &str)]) -> Mapping {
        Mapping::from_token_pairs(p, q, pairs).unwrap()
    }

    fn names(q: &Poset, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| q.token(v).to_string()).collect()
    }

    #[test]
    fn direct_image() {
        let p = parse_poset("elem a\nelem b\nlt a b").unwrap();
        let q = parse_poset("elem x\nelem y\nelem z\nlt x y\nlt y z").unwrap();
        let f = map(&p, &q, &[("x", "a"), ("y", "b")]);
        let r = realize_chain(&chain_of(&p, &["a", "b"]), &q, &f);
        assert_eq!(r.reached, 2);
        assert_eq!(names(&q, &r.chain.unwrap()), ["x", "y"]);
    }

    #[test]
    fn reversed_images_do_not_realize() {
        let p = parse_poset("elem a\nelem b\nlt a b").unwrap();
        let q = parse_poset("elem x\nelem y\nlt x y").unwrap();
        let f = map(&p, &q, &[("x", "b"), ("y", "a")]);
        let r = realize_chain(&chain_of(&p, &["a", "b"]), &q, &f);
        assert_eq!(
            r,
            Realization {
                reached: 1,
                chain: None
            }
        );
    }

    #[test]
    fn tie_goes_to_topologically_first_predecessor() {
        let p = parse_poset("elem c1\nelem c2\nlt c1 c2").unwrap();
        let q = parse_poset("elem x\nelem y\nelem z\nlt x z\nlt y z").unwrap();
        let f = map(&p, &q, &[("x", "c1"), ("y", "c1"), ("z", "c2")]);
        let r = realize_chain(&chain_of(&p, &["c1", "c2"]), &q, &f);
        assert_eq!(r.reached, 2);
        assert_eq!(names(&q, &r.chain.unwrap()), ["x", "z"]);
    }

    #[test]
    fn propagates_through_unmapped_elements() {
        let p = parse_poset("elem a\nelem b\nlt a b").unwrap();
        let q = parse_poset("elem x\nelem m\nelem z\nlt x m\nlt m z").unwrap();
        let f = map(&p, &q, &[("x", "a"), ("z", "b")]);
        assert!(verify_witness(&p, &q, &f));
    }

    #[test]
    fn elements_mapped_off_the_chain_are_ignored() {
        let p = parse_poset("elem a\nelem b\nelem c\nlt a b").unwrap();
        let q = parse_poset("elem x\nelem y\nelem w\nlt x y").unwrap();
        let f = map(&p, &q, &[("x", "a"), ("y", "b"), ("w", "c")]);
        assert!(verify_witness(&p, &q, &f));
        let g = map(&p, &q, &[("x", "a"), ("y", "c"), ("w", "b")]);
        assert!(!verify_witness(&p, &q, &g));
    }

    #[test]
    fn verify_examples() {
        let c2 = parse_poset("elem a\nelem b\nlt a b").unwrap();
        let c3 = parse_poset("elem x\nelem y\nelem z\nlt x y\nlt y z").unwrap();
        assert!(verify_witness(&c2, &c3, &map(&c2, &c3, &[("x", "a"), ("y", "b")])));

        let a2 = parse_poset("elem a\nelem b").unwrap();
        let qa2 = parse_poset("elem x\nelem y").unwrap();
        assert!(verify_witness(&a2, &qa2, &map(&a2, &qa2, &[("x", "a"), ("y", "b")])));

        for f in [
            Mapping::total(vec![0, 0]),
            Mapping::total(vec![0, 1]),
            Mapping::total(vec![1, 0]),
            Mapping::total(vec![1, 1]),
            Mapping::unmapped(2),
        ] {
            assert!(!verify_witness(&c2, &qa2, &f));
        }
    }

    #[test]
    fn empty_p_is_always_witnessed() {
        let q = generate(&Family::Chain(3)).unwrap();
        assert!(verify_witness(&Poset::empty(), &q, &Mapping::unmapped(3)));
        assert!(verify_witness(&Poset::empty(), &Poset::empty(), &Mapping::unmapped(0)));
    }

    #[test]
    fn core_of_chain_into_longer_chain() {
        let p = parse_poset("elem a\nelem b\nlt a b").unwrap();
        let q = parse_poset("elem x\nelem y\nelem z\nlt x y\nlt y z").unwrap();
        let f = map(&p, &q, &[("x", "a"), ("y", "b"), ("z", "b")]);
        let core = extract_core(&p, &q, &f).unwrap();
        assert_eq!(names(&q, &core.elements), ["x", "y"]);
        assert_eq!(core.realizations.len(), 1);
        let (c, real) = &core.realizations[0];
        assert_eq!(c.tokens(&p), ["a", "b"]);
        assert!(q.lt(real[0], real[1]));
        assert_eq!(f.get(real[0]), Some(0));
        assert_eq!(f.get(real[1]), Some(1));
    }

    #[test]
    fn core_of_singletons() {
        let p = generate(&Family::Chain(1)).unwrap();
        let q = generate(&Family::Chain(1)).unwrap();
        let core = extract_core(&p, &q, &Mapping::total(vec![0])).unwrap();
        assert_eq!(core.elements, [0]);
    }

    #[test]
    fn core_requires_a_witness() {
        let p = generate(&Family::Chain(2)).unwrap();
        let q = generate(&Family::Antichain(2)).unwrap();
        assert!(matches!(
            extract_core(&p, &q, &Mapping::total(vec![0, 1])),
            Err(Error::NotAWitness { .. })
        ));
    }
}
