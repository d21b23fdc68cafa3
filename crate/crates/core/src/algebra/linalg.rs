//! Vector-list helpers on top of [`Matrix`]: relation spaces, spans, bases.

use super::{Field, Matrix, Vector};
use crate::error::Result;

/// All coefficient vectors `c` with `sum_i c_i * xs[i] = 0`, as a basis.
/// Its dimension is `xs.len() - rank(xs)`.
pub fn relation_space(field: Field, dim: usize, xs: &[Vector]) -> Result<Vec<Vector>> {
    Ok(Matrix::from_columns(field, dim, xs)?.kernel_basis())
}

pub fn rank_of(field: Field, dim: usize, xs: &[Vector]) -> Result<usize> {
    Ok(Matrix::from_row_vectors(field, dim, xs)?.rank())
}

pub fn are_independent(field: Field, dim: usize, xs: &[Vector]) -> Result<bool> {
    Ok(rank_of(field, dim, xs)? == xs.len())
}

/// Indices of a maximal independent subfamily: the pivot columns of the
/// column matrix, i.e. greedy selection in input order.
pub fn independent_indices(field: Field, dim: usize, xs: &[Vector]) -> Result<Vec<usize>> {
    Ok(Matrix::from_columns(field, dim, xs)?.rref().pivots)
}

/// Standard basis vectors, chosen greedily in index order, that complete the
/// independent family `xs` to a basis of the whole space.
pub fn completion(field: Field, dim: usize, xs: &[Vector]) -> Result<Vec<Vector>> {
    let mut family: Vec<Vector> = xs.to_vec();
    let mut rank = rank_of(field, dim, &family)?;
    let mut added = Vec::new();
    for j in 0..dim {
        if rank == dim {
            break;
        }
        family.push(Vector::basis(field, dim, j));
        let r = rank_of(field, dim, &family)?;
        if r > rank {
            rank = r;
            added.push(family.last().cloned().expect("just pushed"));
        } else {
            family.pop();
        }
    }
    Ok(added)
}

/// Coefficients of `v` in the independent family `basis`, if `v` lies in its span.
pub fn coordinates(field: Field, dim: usize, basis: &[Vector], v: &Vector) -> Result<Option<Vector>> {
    Matrix::from_columns(field, dim, basis)?.solve(v)
}

/// Whether the two families span the same subspace.
pub fn same_span(field: Field, dim: usize, a: &[Vector], b: &[Vector]) -> Result<bool> {
    let ra = rank_of(field, dim, a)?;
    let rb = rank_of(field, dim, b)?;
    if ra != rb {
        return Ok(false);
    }
    let joint: Vec<Vector> = a.iter().chain(b).cloned().collect();
    Ok(rank_of(field, dim, &joint)? == ra)
}

pub fn in_span(field: Field, dim: usize, family: &[Vector], v: &Vector) -> Result<bool> {
    let mut joint = family.to_vec();
    let r = rank_of(field, dim, &joint)?;
    joint.push(v.clone());
    Ok(rank_of(field, dim, &joint)? == r)
}

/// Canonical basis of the span: the nonzero rows of the reduced row-echelon form.
pub fn span_basis(field: Field, dim: usize, family: &[Vector]) -> Result<Vec<Vector>> {
    let rref = Matrix::from_row_vectors(field, dim, family)?.rref();
    Ok((0..rref.rank).map(|i| rref.reduced.row_vector(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_space_examples() {
        let q = Field::RATIONALS;
        let v = |c: &[i64]| Vector::from_i64(q, c);

        assert!(relation_space(q, 2, &[v(&[1, 0]), v(&[0, 1])]).unwrap().is_empty());

        let rel = relation_space(q, 2, &[v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])]).unwrap();
        assert_eq!(rel.len(), 1);
        assert!(rel[0].is_proportional(&v(&[1, 1, 1])));

        let rel = relation_space(q, 2, &[v(&[1, 0]), v(&[2, 0])]).unwrap();
        assert_eq!(rel.len(), 1);
        assert!(rel[0].is_proportional(&v(&[2, -1])));
    }

    #[test]
    fn completion_is_greedy() {
        let q = Field::RATIONALS;
        let xs = [Vector::from_i64(q, &[0, 1, 1])];
        let c = completion(q, 3, &xs).unwrap();
        assert_eq!(c, vec![Vector::basis(q, 3, 0), Vector::basis(q, 3, 1)]);
        assert!(completion(q, 2, &[Vector::basis(q, 2, 0), Vector::basis(q, 2, 1)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn spans() {
        let f = Field::prime(3).unwrap();
        let a = [Vector::from_i64(f, &[1, 2])];
        let b = [Vector::from_i64(f, &[2, 1])];
        assert!(same_span(f, 2, &a, &b).unwrap());
        assert!(!same_span(f, 2, &a, &[Vector::basis(f, 2, 0)]).unwrap());
        assert_eq!(span_basis(f, 2, &b).unwrap(), vec![Vector::from_i64(f, &[1, 2])]);
        assert_eq!(
            coordinates(
                f,
                2,
                &[Vector::basis(f, 2, 0), Vector::from_i64(f, &[1, 1])],
                &Vector::from_i64(f, &[0, 1])
            )
            .unwrap(),
            Some(Vector::from_i64(f, &[2, 1]))
        );
    }
}
