//! Partial functions from the elements of Q to the elements of P, and their
//! text format (`map <q-token> <p-token>` per line, unmapped elements omitted).

use crate::error::{Error, Result};
use crate::poset::significant_lines;
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mapping {
    images: Vec<Option<usize>>,
}

impl Mapping {
    /// Nothing mapped, over a Q of `q_len` elements.
    pub fn unmapped(q_len: usize) -> Mapping {
        Mapping {
            images: vec![None; q_len],
        }
    }

    pub fn total(images: Vec<usize>) -> Mapping {
        Mapping {
            images: images.into_iter().map(Some).collect(),
        }
    }

    pub fn from_options(images: Vec<Option<usize>>) -> Mapping {
        Mapping { images }
    }

    /// Size of the Q this mapping is defined over.
    pub fn domain_len(&self) -> usize {
        self.images.len()
    }

    pub fn get(&self, q: usize) -> Option<usize> {
        self.images[q]
    }

    pub fn set(&mut self, q: usize, p: Option<usize>) {
        self.images[q] = p;
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// Mapped `(q, p)` pairs in Q index order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images.iter().enumerate().filter_map(|(q, p)| p.map(|p| (q, p)))
    }

    /// True when every element mapped by `self` is mapped identically by `other`.
    pub fn is_extended_by(&self, other: &Mapping) -> bool {
        self.pairs().all(|(q, p)| other.get(q) == Some(p))
    }

    /// Checks that the mapping fits `p` and `q`.
    pub fn check_shape(&self, p: &Poset, q: &Poset) -> Result<()> {
        if self.images.len() != q.len() {
            return Err(Error::InvalidParameter(format!(
                "mapping covers {} elements but Q has {}",
                self.images.len(),
                q.len()
            )));
        }
        if let Some((_, bad)) = self.pairs().find(|&(_, v)| v >= p.len()) {
            return Err(Error::UnknownIndex {
                index: bad,
                size: p.len(),
            });
        }
        Ok(())
    }

    /// `(q-token, p-token)` pairs.
    pub fn token_pairs<'a>(&self, p: &'a Poset, q: &'a Poset) -> Vec<(&'a str, &'a str)> {
        self.pairs().map(|(x, y)| (q.token(x), p.token(y))).collect()
    }

    pub fn from_token_pairs<A, B>(p: &Poset, q: &Poset, pairs: &[(A, B)]) -> Result<Mapping>
    where
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut m = Mapping::unmapped(q.len());
        for (qt, pt) in pairs {
            let (qt, pt) = (qt.as_ref(), pt.as_ref());
            let x = q.index_of(qt).ok_or_else(|| Error::UnknownToken { token: qt.into() })?;
            let y = p.index_of(pt).ok_or_else(|| Error::UnknownToken { token: pt.into() })?;
            if m.images[x].is_some() {
                return Err(Error::DuplicateMapping {
                    line: 0,
                    token: qt.into(),
                });
            }
            m.images[x] = Some(y);
        }
        Ok(m)
    }
}

pub fn parse_mapping(text: &str, p: &Poset, q: &Poset) -> Result<Mapping> {
    let mut m = Mapping::unmapped(q.len());
    for (line, fields) in significant_lines(text)? {
        let ["map", qt, pt] = fields.as_slice() else {
            return Err(Error::Syntax {
                line,
                message: "expected `map <q-token> <p-token>`".into(),
            });
        };
        let x = q.index_of(qt).ok_or_else(|| Error::UndeclaredElement {
            line,
            token: qt.to_string(),
        })?;
        let y = p.index_of(pt).ok_or_else(|| Error::UndeclaredElement {
            line,
            token: pt.to_string(),
        })?;
        if m.images[x].is_some() {
            return Err(Error::DuplicateMapping {
                line,
                token: qt.to_string(),
            });
        }
        m.images[x] = Some(y);
    }
    Ok(m)
}

pub fn serialize_mapping(m: &Mapping, p: &Poset, q: &Poset) -> String {
    m.pairs()
        .map(|(x, y)| format!("map {} {}\n", q.token(x), p.token(y)))
        .collect()
}
