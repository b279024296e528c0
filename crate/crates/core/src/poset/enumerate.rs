use super::Poset;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_SIZE: usize = 5;

/// Every labeled poset on `e1..en`, each exactly once.
///
/// Each unordered pair `{i, j}` is assigned one of: incomparable, `i < j`,
/// `j < i`. That makes every candidate irreflexive and antisymmetric; the
/// transitive ones are kept. Counts for n = 0..5 are 1, 1, 3, 19, 219, 4231.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeGuard {
            what: "poset enumeration",
            size: n,
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    Ok((0..total).filter_map(move |mut code| {
        let mut rel = vec![vec![false; n]; n];
        for &(i, j) in &pairs {
            match code % 3 {
                1 => rel[i][j] = true,
                2 => rel[j][i] = true,
                _ => {}
            }
            code /= 3;
        }
        let transitive = (0..n).all(|x| (0..n).all(|y| !rel[x][y] || (0..n).all(|z| !rel[y][z] || rel[x][z])));
        if !transitive {
            return None;
        }
        let relations: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| rel[x][y])
            .collect();
        Some(Poset::numbered(n, relations).expect("transitive antisymmetric relation"))
    }))
}
