use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poset;
use crate::error::{Error, Result};

/// Named instance families.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Total order `e1 < ... < eq`.
    Chain(usize),
    /// `p` pairwise incomparable elements.
    Antichain(usize),
    /// `p` disjoint chains of `q` elements each; elements are `c<i>_<j>`.
    DisjointChains(usize, usize),
    /// Each forward pair `(ei, ej)`, `i < j`, is kept independently with
    /// probability `density`, then closed transitively. Not uniform over posets.
    Random { n: usize, density: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Poset> {
    match *family {
        Family::Chain(q) => Poset::numbered(q, (1..q).map(|i| (i - 1, i))),
        Family::Antichain(p) => Poset::numbered(p, std::iter::empty()),
        Family::DisjointChains(p, q) => {
            let tokens = (1..=p)
                .flat_map(|i| (1..=q).map(move |j| format!("c{i}_{j}")))
                .collect();
            let relations = (0..p).flat_map(|i| (1..q).map(move |j| (i * q + j - 1, i * q + j)));
            Poset::new(tokens, relations)
        }
        Family::Random { n, density, seed } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::InvalidParameter(format!("density {density} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut relations = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(density) {
                        relations.push((i, j));
                    }
                }
            }
            Poset::numbered(n, relations)
        }
    }
}
