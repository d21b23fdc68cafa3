//! Extending permutations of finite vector sets to linear automorphisms.
//!
//! A bijection `x_i -> y_i` between two families extends to an automorphism
//! exactly when both families satisfy the same linear relations. Sets where
//! every permutation extends are either independent or of the form
//! `x_1, ..., x_m, -(x_1 + ... + x_m)` with the `x_i` independent.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{linalg, Field, Matrix, Vector};
use crate::error::{Error, Result};
use crate::perm::{self, Permutation, MAX_ENUMERATION_SIZE};

/// An ordered set of distinct vectors in `F^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSet {
    field: Field,
    dim: usize,
    vectors: Vec<Vector>,
}

impl VectorSet {
    pub fn new(field: Field, dim: usize, vectors: Vec<Vector>) -> Result<VectorSet> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        let mut seen: HashMap<&Vector, usize> = HashMap::new();
        for (index, v) in vectors.iter().enumerate() {
            field.check(v.field())?;
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
            if let Some(&first) = seen.get(v) {
                return Err(Error::Duplicate { index, first });
            }
            seen.insert(v, index);
        }
        Ok(VectorSet { field, dim, vectors })
    }

    pub fn from_i64(field: Field, dim: usize, vectors: &[&[i64]]) -> Result<VectorSet> {
        VectorSet::new(field, dim, vectors.iter().map(|v| Vector::from_i64(field, v)).collect())
    }

    /// `e_1, ..., e_n, -(e_1 + ... + e_n)`.
    pub fn basis_plus_negative_sum(field: Field, dim: usize) -> Result<VectorSet> {
        let mut vectors: Vec<Vector> = (0..dim).map(|i| Vector::basis(field, dim, i)).collect();
        let sum = Vector::sum(&vectors)?.ok_or(Error::DimensionTooSmall(dim))?;
        vectors.push(sum.neg());
        VectorSet::new(field, dim, vectors)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        linalg::rank_of(self.field, self.dim, &self.vectors).expect("validated set")
    }

    pub fn relation_space(&self) -> Vec<Vector> {
        linalg::relation_space(self.field, self.dim, &self.vectors).expect("validated set")
    }

    pub fn position(&self, v: &Vector) -> Option<usize> {
        self.vectors.iter().position(|x| x == v)
    }

    /// The permutation `t` with `g(x_i) = x_t(i)`, when `g` maps the set onto itself.
    pub fn induced_permutation(&self, g: &Matrix) -> Result<Option<Permutation>> {
        let mut images = Vec::with_capacity(self.len());
        for x in &self.vectors {
            match self.position(&g.apply(x)?) {
                Some(j) => images.push(j),
                None => return Ok(None),
            }
        }
        Ok(Permutation::new(images).ok())
    }

    fn require_size(&self, required: usize) -> Result<()> {
        if self.len() < required {
            return Err(Error::TooFewElements {
                required,
                found: self.len(),
            });
        }
        Ok(())
    }

    fn require_spanning(&self) -> Result<()> {
        let rank = self.rank();
        if rank != self.dim {
            return Err(Error::NotSpanning { rank, dim: self.dim });
        }
        Ok(())
    }
}

/// Outcome of classifying a set all of whose permutations may or may not extend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearClass {
    Independent,
    /// `x_1, ..., x_m, -(x_1 + ... + x_m)` with `x_1, ..., x_m` independent.
    BasisPlusNegativeSum {
        rank: usize,
    },
    /// Some transposition has no extension.
    NotHomogeneous {
        witness: Permutation,
    },
}

impl LinearClass {
    pub fn is_fully_extendable(&self) -> bool {
        !matches!(self, LinearClass::NotHomogeneous { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            LinearClass::Independent => "independent",
            LinearClass::BasisPlusNegativeSum { .. } => "basis_plus_negsum",
            LinearClass::NotHomogeneous { .. } => "not_homogeneous",
        }
    }

    /// [`name`](Self::name) with the rank appended for the
    /// basis-plus-negative-sum case, e.g. `basis_plus_negsum(3)`.
    pub fn label(&self) -> String {
        match self {
            LinearClass::BasisPlusNegativeSum { rank } => format!("basis_plus_negsum({rank})"),
            other => other.name().to_string(),
        }
    }
}

/// Whether every permutation of a set extends, with the first blocked
/// transposition when not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullExtendability {
    pub extendable: bool,
    pub witness: Option<Permutation>,
}

fn check_permutation(len: usize, sigma: &Permutation) -> Result<()> {
    if sigma.len() != len {
        return Err(Error::SizeMismatch {
            expected: len,
            found: sigma.len(),
        });
    }
    Ok(())
}

fn annihilates(field: Field, dim: usize, family: &[Vector], coeffs: &Vector) -> bool {
    let combo = family
        .iter()
        .zip(coeffs.coords())
        .filter(|(_, c)| !c.is_zero())
        .fold(Vector::zero(field, dim), |acc, (x, c)| {
            acc.add(&x.scale(c)).expect("same shape")
        });
    combo.is_zero()
}

/// Builds `u` with `u(sources[i]) = targets[i]` for independent families of
/// equal size. Off the source span, the greedy standard-basis completion of
/// the sources is sent to that of the targets; when both spans agree the
/// completions coincide and `u` fixes them.
pub(crate) fn map_on_span(field: Field, dim: usize, sources: &[Vector], targets: &[Vector]) -> Result<Matrix> {
    let src: Vec<Vector> = sources
        .iter()
        .cloned()
        .chain(linalg::completion(field, dim, sources)?)
        .collect();
    let dst: Vec<Vector> = targets
        .iter()
        .cloned()
        .chain(linalg::completion(field, dim, targets)?)
        .collect();
    if src.len() != dim || dst.len() != dim {
        return Err(Error::Singular);
    }
    let s = Matrix::from_columns(field, dim, &src)?;
    let t = Matrix::from_columns(field, dim, &dst)?;
    let s_inv = s.inverse()?.ok_or(Error::Singular)?;
    let u = t.mul(&s_inv)?;
    if !u.is_invertible() {
        return Err(Error::Singular);
    }
    Ok(u)
}

/// An invertible `u` with `u(x_i) = x_{sigma(i)}` for every `i`, or `None` if
/// no linear automorphism induces `sigma`.
pub fn extend_permutation_linear(set: &VectorSet, sigma: &Permutation) -> Result<Option<Matrix>> {
    check_permutation(set.len(), sigma)?;
    let (field, dim) = (set.field, set.dim);
    let xs = &set.vectors;
    let ys = sigma.permute(xs);

    let rel_x = linalg::relation_space(field, dim, xs)?;
    let rel_y = linalg::relation_space(field, dim, &ys)?;
    let same_relations =
        rel_x.iter().all(|c| annihilates(field, dim, &ys, c)) && rel_y.iter().all(|c| annihilates(field, dim, xs, c));
    if !same_relations {
        return Ok(None);
    }

    let basis = linalg::independent_indices(field, dim, xs)?;
    let sources: Vec<Vector> = basis.iter().map(|&b| xs[b].clone()).collect();
    let targets: Vec<Vector> = basis.iter().map(|&b| ys[b].clone()).collect();
    let u = map_on_span(field, dim, &sources, &targets)?;
    debug_assert!(xs.iter().zip(&ys).all(|(x, y)| u.apply(x).unwrap() == *y));
    Ok(Some(u))
}

/// Decides whether every permutation of the set extends by testing the
/// transpositions `(0 i)`: the extendable permutations form a subgroup, and
/// these transpositions generate the whole symmetric group.
pub fn is_fully_extendable_linear(set: &VectorSet) -> Result<FullExtendability> {
    set.require_size(2)?;
    for t in perm::star_transpositions(set.len()) {
        if extend_permutation_linear(set, &t)?.is_none() {
            return Ok(FullExtendability {
                extendable: false,
                witness: Some(t),
            });
        }
    }
    Ok(FullExtendability {
        extendable: true,
        witness: None,
    })
}

fn is_basis_plus_negative_sum(set: &VectorSet, rank: usize) -> Result<bool> {
    let (field, dim) = (set.field, set.dim);
    if set.len() != rank + 1 {
        return Ok(false);
    }
    for skip in 0..set.len() {
        let rest: Vec<Vector> = set
            .vectors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, v)| v.clone())
            .collect();
        if !linalg::are_independent(field, dim, &rest)? {
            return Ok(false);
        }
    }
    Ok(Vector::sum(&set.vectors)?.is_some_and(|s| s.is_zero()))
}

pub fn classify_linear(set: &VectorSet) -> Result<LinearClass> {
    set.require_size(2)?;
    let rank = set.rank();
    if rank == set.len() {
        return Ok(LinearClass::Independent);
    }
    if is_basis_plus_negative_sum(set, rank)? {
        return Ok(LinearClass::BasisPlusNegativeSum { rank });
    }
    match is_fully_extendable_linear(set)?.witness {
        Some(witness) => Ok(LinearClass::NotHomogeneous { witness }),
        None => Err(Error::Inconsistent(
            "every transposition extends but the set is neither independent nor basis-plus-negative-sum".into(),
        )),
    }
}

/// The unique automorphism inducing `sigma` on a spanning set.
pub fn alpha_extension(set: &VectorSet, sigma: &Permutation) -> Result<Matrix> {
    check_permutation(set.len(), sigma)?;
    set.require_spanning()?;
    extend_permutation_linear(set, sigma)?.ok_or_else(|| Error::NoExtension(sigma.images().to_vec()))
}

/// `G(X)`: the images of all permutations under `alpha_extension`, in
/// lexicographic order of the permutations.
pub fn group_of_set(set: &VectorSet) -> Result<Vec<Matrix>> {
    if set.len() > MAX_ENUMERATION_SIZE {
        return Err(Error::SizeLimit {
            size: set.len(),
            cap: MAX_ENUMERATION_SIZE,
        });
    }
    set.require_spanning()?;
    let full = is_fully_extendable_linear(set)?;
    if let Some(w) = full.witness {
        return Err(Error::NoExtension(w.images().to_vec()));
    }
    perm::all_permutations(set.len())?
        .map(|sigma| alpha_extension(set, &sigma))
        .collect()
}
