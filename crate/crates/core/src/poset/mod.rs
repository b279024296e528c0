//! Finite posets over opaque element tokens.
//!
//! A [`Poset`] keeps its strict order twice: the transitive closure (sorted
//! successor lists, queried by binary search) and the Hasse diagram (cover
//! relation, as successor and predecessor adjacency lists). Elements are
//! addressed by dense indices in declaration order; tokens are kept for I/O.
//! A poset is immutable once built.

mod chains;
mod enumerate;
mod format;
mod generate;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

pub use chains::{Chain, ChainKind, ChainList, DEFAULT_CHAIN_GUARD};
pub use enumerate::{enumerate_posets, MAX_ENUMERATION_SIZE};
pub(crate) use format::significant_lines;
pub use format::{parse_poset, serialize_poset};
pub use generate::{generate, Family};

use crate::error::{Error, Result};

/// Rows of element lists packed into one buffer.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Adjacency {
    fn from_rows(rows: &[Vec<usize>]) -> Adjacency {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(rows.iter().map(Vec::len).sum());
        for r in rows {
            targets.extend_from_slice(r);
            offsets.push(targets.len());
        }
        Adjacency { offsets, targets }
    }

    fn row(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn len(&self) -> usize {
        self.targets.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    tokens: Vec<String>,
    index: HashMap<String, usize>,
    /// Closure successors of each element, sorted by index.
    above: Adjacency,
    /// Covers of each element, sorted by topological position.
    hasse_up: Adjacency,
    /// Elements covered by each element, sorted by topological position.
    hasse_down: Adjacency,
    topo: Vec<usize>,
    topo_pos: Vec<usize>,
}

impl Poset {
    /// Builds a poset from element tokens and generator pairs `(x, y)`
    /// meaning `x < y`. The order is the transitive closure of the pairs.
    pub fn new<I>(tokens: Vec<String>, relations: I) -> Result<Poset>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = tokens.len();
        let mut index = HashMap::with_capacity(n);
        for (i, t) in tokens.iter().enumerate() {
            if index.insert(t.clone(), i).is_some() {
                return Err(Error::DuplicateElement {
                    line: 0,
                    token: t.clone(),
                });
            }
        }

        let mut direct: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, y) in relations {
            for v in [x, y] {
                if v >= n {
                    return Err(Error::UnknownIndex { index: v, size: n });
                }
            }
            if x == y {
                return Err(Error::Cycle {
                    token: tokens[x].clone(),
                });
            }
            direct[x].push(y);
        }
        for d in &mut direct {
            d.sort_unstable();
            d.dedup();
        }

        // Kahn's algorithm, smallest declaration index first among ready elements.
        let mut indegree = vec![0usize; n];
        for d in &direct {
            for &y in d {
                indegree[y] += 1;
            }
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(Reverse(v)) = ready.pop() {
            topo.push(v);
            for &y in &direct[v] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(Reverse(y));
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(Error::Cycle {
                token: tokens[stuck].clone(),
            });
        }
        let mut topo_pos = vec![0usize; n];
        for (pos, &v) in topo.iter().enumerate() {
            topo_pos[v] = pos;
        }

        // Closure, sinks first. `stamp` avoids clearing a marker array per element.
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut stamp = vec![usize::MAX; n];
        for &x in topo.iter().rev() {
            let mut acc = Vec::new();
            for &y in &direct[x] {
                if stamp[y] != x {
                    stamp[y] = x;
                    acc.push(y);
                }
                for &z in &above[y] {
                    if stamp[z] != x {
                        stamp[z] = x;
                        acc.push(z);
                    }
                }
            }
            acc.sort_unstable();
            above[x] = acc;
        }

        // Covers: scan successors in topological order, a successor is a cover
        // unless some earlier cover already reaches it.
        stamp.iter_mut().for_each(|s| *s = usize::MAX);
        let mut hasse_up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut hasse_down: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let mut succ = above[x].clone();
            succ.sort_unstable_by_key(|&y| topo_pos[y]);
            for y in succ {
                if stamp[y] == x {
                    continue;
                }
                hasse_up[x].push(y);
                for &z in &above[y] {
                    stamp[z] = x;
                }
            }
        }
        for (x, ups) in hasse_up.iter().enumerate() {
            for &y in ups {
                hasse_down[y].push(x);
            }
        }
        for d in &mut hasse_down {
            d.sort_unstable_by_key(|&v| topo_pos[v]);
        }

        Ok(Poset {
            tokens,
            index,
            above: Adjacency::from_rows(&above),
            hasse_up: Adjacency::from_rows(&hasse_up),
            hasse_down: Adjacency::from_rows(&hasse_down),
            topo,
            topo_pos,
        })
    }

    /// Poset with elements `e1..en` and the given relation pairs.
    pub fn numbered<I>(n: usize, relations: I) -> Result<Poset>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Poset::new((1..=n).map(|i| format!("e{i}")).collect(), relations)
    }

    pub fn empty() -> Poset {
        Poset::new(Vec::new(), std::iter::empty()).expect("empty poset is valid")
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Number of pairs in the strict order (closure).
    pub fn closure_len(&self) -> usize {
        self.above.len()
    }

    /// Number of covering pairs.
    pub fn hasse_len(&self) -> usize {
        self.hasse_up.len()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, v: usize) -> &str {
        &self.tokens[v]
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    /// `x < y` in the strict order.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above.row(x).binary_search(&y).is_ok()
    }

    /// All `y` with `x < y`, sorted by index.
    pub fn successors(&self, x: usize) -> &[usize] {
        self.above.row(x)
    }

    /// Covers of `x`, in topological order.
    pub fn hasse_successors(&self, x: usize) -> &[usize] {
        self.hasse_up.row(x)
    }

    /// Elements covered by `x`, in topological order.
    pub fn hasse_predecessors(&self, x: usize) -> &[usize] {
        self.hasse_down.row(x)
    }

    /// Deterministic linear extension: among incomparable ready elements the
    /// one declared first comes first.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn topo_position(&self, v: usize) -> usize {
        self.topo_pos[v]
    }

    pub fn closure_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |x| self.above.row(x).iter().map(move |&y| (x, y)))
    }

    /// Covering pairs ordered by the topological positions of both ends.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .topo
            .iter()
            .flat_map(|&x| self.hasse_up.row(x).iter().map(move |&y| (x, y)))
            .collect();
        pairs.sort_by_key(|&(x, y)| (self.topo_pos[x], self.topo_pos[y]));
        pairs
    }

    /// Maximum number of elements in a chain; 0 for the empty poset.
    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        let mut best = 0;
        for &v in &self.topo {
            let below = self.hasse_down.row(v).iter().map(|&u| longest[u]).max().unwrap_or(0);
            longest[v] = below + 1;
            best = best.max(longest[v]);
        }
        best
    }

    /// The subposet on `subset` with the inherited order. Elements keep their
    /// relative declaration order.
    pub fn induced_subposet(&self, subset: &[usize]) -> Result<Poset> {
        let n = self.len();
        let mut keep = vec![false; n];
        for &v in subset {
            if v >= n {
                return Err(Error::UnknownIndex { index: v, size: n });
            }
            keep[v] = true;
        }
        let mut new_index = vec![usize::MAX; n];
        let mut tokens = Vec::new();
        for v in (0..n).filter(|&v| keep[v]) {
            new_index[v] = tokens.len();
            tokens.push(self.tokens[v].clone());
        }
        let relations: Vec<(usize, usize)> = self
            .closure_pairs()
            .filter(|&(x, y)| keep[x] && keep[y])
            .map(|(x, y)| (new_index[x], new_index[y]))
            .collect();
        Poset::new(tokens, relations)
    }

    /// Same as [`Poset::induced_subposet`] but addressed by tokens.
    pub fn induced_subposet_by_tokens(&self, subset: &[&str]) -> Result<Poset> {
        let idx = subset
            .iter()
            .map(|t| {
                self.index_of(t).ok_or_else(|| Error::UnknownToken {
                    token: (*t).to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.induced_subposet(&idx)
    }

    /// Brute-force check of every structural invariant: order axioms on the
    /// closure, and that the stored covers are exactly its transitive
    /// reduction. Cubic; meant for tests.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.len();
        let mut rel = vec![vec![false; n]; n];
        for (x, y) in self.closure_pairs() {
            rel[x][y] = true;
        }
        for x in 0..n {
            if rel[x][x] {
                return Err(format!("reflexive pair at {}", self.tokens[x]));
            }
            for y in 0..n {
                if rel[x][y] && rel[y][x] {
                    return Err(format!("symmetric pair {} {}", self.tokens[x], self.tokens[y]));
                }
                for z in 0..n {
                    if rel[x][y] && rel[y][z] && !rel[x][z] {
                        return Err(format!(
                            "not transitive at {} {} {}",
                            self.tokens[x], self.tokens[y], self.tokens[z]
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let covers = rel[x][y] && !(0..n).any(|z| rel[x][z] && rel[z][y]);
                if covers != self.hasse_up.row(x).contains(&y) {
                    return Err(format!("cover mismatch at {} {}", self.tokens[x], self.tokens[y]));
                }
                if covers != self.hasse_down.row(y).contains(&x) {
                    return Err(format!(
                        "reverse cover mismatch at {} {}",
                        self.tokens[x], self.tokens[y]
                    ));
                }
            }
        }
        for (pos, &v) in self.topo.iter().enumerate() {
            if self.topo_pos[v] != pos {
                return Err("topological positions out of sync".into());
            }
        }
        for (x, y) in self.closure_pairs() {
            if self.topo_pos[x] >= self.topo_pos[y] {
                return Err(format!(
                    "topological order violates {} < {}",
                    self.tokens[x], self.tokens[y]
                ));
            }
        }
        Ok(())
    }
}
