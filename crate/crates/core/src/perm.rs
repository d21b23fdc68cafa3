//! Permutations of index sets `{0, ..., k-1}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `k` for which `S_k` may be materialized (8! = 40320).
pub const MAX_ENUMERATION_SIZE: usize = 8;

/// A bijection of `{0, ..., k-1}` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k {
                return Err(Error::InvalidPermutation(format!(
                    "image {i} out of range for size {k}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Permutation {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Swaps `i` and `j`, fixes everything else.
    pub fn transposition(k: usize, i: usize, j: usize) -> Result<Permutation> {
        for index in [i, j] {
            if index >= k {
                return Err(Error::IndexOutOfRange { index, size: k });
            }
        }
        if i == j {
            return Err(Error::InvalidPermutation(format!(
                "transposition needs distinct indices, got {i} twice"
            )));
        }
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `s.compose(t)` maps `i` to `s(t(i))`.
    pub fn compose(&self, t: &Permutation) -> Result<Permutation> {
        if self.len() != t.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: t.len(),
            });
        }
        Ok(Permutation {
            images: t.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Reorders `items` so that position `i` holds `items[self(i)]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.images.iter().map(|&i| items[i].clone()).collect()
    }

    /// Position in the lexicographic order of `S_k`.
    pub fn lex_rank(&self) -> usize {
        lex_rank(&self.images)
    }
}

/// Lexicographic rank of an image array that is known to be a permutation.
pub(crate) fn lex_rank(images: &[usize]) -> usize {
    let k = images.len();
    let mut rank = 0;
    for i in 0..k {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank = rank * (k - i) + smaller;
    }
    rank
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Permutation> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

/// The `k - 1` adjacent transpositions `(i i+1)`, which generate `S_k`.
pub fn adjacent_generators(k: usize) -> Result<Vec<Permutation>> {
    if k < 2 {
        return Err(Error::TooFewElements { required: 2, found: k });
    }
    (0..k - 1).map(|i| Permutation::transposition(k, i, i + 1)).collect()
}

/// The transpositions `(0 i)` for `i = 1..k`, used by the extendability
/// deciders. They generate `S_k`.
pub fn star_transpositions(k: usize) -> impl Iterator<Item = Permutation> {
    (1..k).map(move |i| Permutation::transposition(k, 0, i).expect("indices in range"))
}

/// All of `S_k` in lexicographic order of image arrays.
pub fn all_permutations(k: usize) -> Result<impl Iterator<Item = Permutation>> {
    if k > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeLimit {
            size: k,
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    Ok((0..k).permutations(k).map(|images| Permutation { images }))
}

/// Closure of the generators under composition, breadth first.
pub fn closure(k: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    for g in generators {
        if g.len() != k {
            return Err(Error::SizeMismatch {
                expected: k,
                found: g.len(),
            });
        }
    }
    let id = Permutation::identity(k);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p)?;
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::SizeLimit { size: seen.len(), cap });
                }
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(order)
}
