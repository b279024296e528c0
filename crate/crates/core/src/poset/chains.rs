use super::Poset;
use crate::error::{Error, Result};

/// Largest poset for which [`Poset::all_chains`] runs without an explicit guard.
pub const DEFAULT_CHAIN_GUARD: usize = 20;

/// A nonempty, strictly increasing sequence of element indices of one poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain(Vec<usize>);

impl Chain {
    /// Validates `items` against `poset`.
    pub fn new(poset: &Poset, items: Vec<usize>) -> Result<Chain> {
        if items.is_empty() {
            return Err(Error::InvalidParameter("chains are nonempty".into()));
        }
        for &v in &items {
            if v >= poset.len() {
                return Err(Error::UnknownIndex {
                    index: v,
                    size: poset.len(),
                });
            }
        }
        for w in items.windows(2) {
            if !poset.lt(w[0], w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "{} is not below {}",
                    poset.token(w[0]),
                    poset.token(w[1])
                )));
            }
        }
        Ok(Chain(items))
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `self` is a (not necessarily contiguous) subsequence of `other`.
    pub fn is_subsequence_of(&self, other: &Chain) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn tokens<'a>(&self, poset: &'a Poset) -> Vec<&'a str> {
        self.0.iter().map(|&v| poset.token(v)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    AllNonempty,
    MaximalOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainList {
    pub chains: Vec<Chain>,
    pub kind: ChainKind,
}

impl ChainList {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Chain> {
        self.chains.iter()
    }

    /// Sum of chain lengths.
    pub fn total_len(&self) -> usize {
        self.chains.iter().map(Chain::len).sum()
    }
}

impl Poset {
    /// Every inclusion-maximal chain, once each, ordered lexicographically by
    /// topological positions. These are exactly the Hasse paths from a
    /// minimal to a maximal element.
    pub fn maximal_chains(&self) -> ChainList {
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for &v in self.topological_order() {
            if self.hasse_predecessors(v).is_empty() {
                self.hasse_paths(v, &mut path, &mut chains);
            }
        }
        ChainList {
            chains,
            kind: ChainKind::MaximalOnly,
        }
    }

    fn hasse_paths(&self, v: usize, path: &mut Vec<usize>, out: &mut Vec<Chain>) {
        path.push(v);
        let up = self.hasse_successors(v);
        if up.is_empty() {
            out.push(Chain(path.clone()));
        }
        for &w in up {
            self.hasse_paths(w, path, out);
        }
        path.pop();
    }

    /// Every nonempty chain, once each, in lexicographic topological order.
    /// Refuses posets larger than [`DEFAULT_CHAIN_GUARD`].
    pub fn all_chains(&self) -> Result<ChainList> {
        self.all_chains_guarded(DEFAULT_CHAIN_GUARD)
    }

    pub fn all_chains_guarded(&self, guard: usize) -> Result<ChainList> {
        if self.len() > guard {
            return Err(Error::SizeGuard {
                what: "chain enumeration",
                size: self.len(),
                limit: guard,
            });
        }
        let mut chains = Vec::new();
        let mut path = Vec::new();
        let ups: Vec<Vec<usize>> = (0..self.len())
            .map(|v| {
                let mut s = self.successors(v).to_vec();
                s.sort_unstable_by_key(|&w| self.topo_position(w));
                s
            })
            .collect();
        for &v in self.topological_order() {
            extend_chains(v, &ups, &mut path, &mut chains);
        }
        Ok(ChainList {
            chains,
            kind: ChainKind::AllNonempty,
        })
    }
}

fn extend_chains(v: usize, ups: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Chain>) {
    path.push(v);
    out.push(Chain(path.clone()));
    for &w in &ups[v] {
        extend_chains(w, ups, path, out);
    }
    path.pop();
}
