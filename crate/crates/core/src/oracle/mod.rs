//! Brute-force ground truth over prime fields.
//!
//! Everything here decides extendability by scanning all of `GL(n, p)` with
//! plain residue arithmetic, independently of the constructive code paths in
//! [`crate::linear`] and [`crate::projective`].

mod certify;
mod gl;

use crate::algebra::{Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use crate::linear::VectorSet;
use crate::perm::Permutation;
use crate::projective::ProjSet;

pub use certify::{exhaustive_theorem1_check, exhaustive_theorem2_check, CertificationReport, Discrepancy};
pub use gl::gl_order;
use gl::{GlRows, Space};

pub const DEFAULT_MAX_GROUP_ORDER: u128 = 100_000_000;

/// Limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Enumeration refuses to start when `|GL(n, p)|` exceeds this.
    pub max_group_order: u128,
    /// Worker threads for certification sweeps; `None` uses the available
    /// parallelism. Results do not depend on it.
    pub workers: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
            workers: None,
        }
    }
}

impl SearchBudget {
    pub fn with_workers(workers: usize) -> SearchBudget {
        SearchBudget {
            workers: Some(workers),
            ..SearchBudget::default()
        }
    }

    fn admit(&self, n: usize, p: u64) -> Result<u128> {
        let order = gl_order(n, p);
        if order > self.max_group_order {
            return Err(Error::BudgetExceeded {
                order,
                budget: self.max_group_order,
            });
        }
        Ok(order)
    }

    fn worker_count(&self) -> usize {
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

fn prime_of(field: Field) -> Result<u32> {
    field.modulus().ok_or(Error::UnsupportedField(field))
}

fn residues(v: &Vector) -> Vec<u32> {
    v.coords()
        .iter()
        .map(|c| c.as_residue().expect("prime field"))
        .collect()
}

fn rows_to_matrix(space: &Space, field: Field, rows: &[usize]) -> Matrix {
    let rows = rows
        .iter()
        .map(|&r| {
            space
                .coords(r)
                .iter()
                .map(|&c| Scalar::residue(field, c as u64))
                .collect()
        })
        .collect();
    Matrix::from_rows(field, rows).expect("square residue matrix")
}

/// Every invertible `n x n` matrix over GF(p), each exactly once.
pub fn enumerate_gl(n: usize, p: u64, budget: &SearchBudget) -> Result<impl Iterator<Item = Matrix>> {
    let field = Field::prime(p)?;
    budget.admit(n, p)?;
    let space = Space::new(n, p as u32);
    Ok(GlRows::new(space.clone(), 0, 1).map(move |rows| rows_to_matrix(&space, field, &rows)))
}

/// Some invertible `u` with `u(x_i) = x_{sigma(i)}`, found by exhaustion.
pub fn oracle_extend_linear(set: &VectorSet, sigma: &Permutation, budget: &SearchBudget) -> Result<Option<Matrix>> {
    let p = prime_of(set.field())?;
    check_len(set.len(), sigma)?;
    budget.admit(set.dim(), p as u64)?;
    let space = Space::new(set.dim(), p);
    let xs: Vec<usize> = set.vectors().iter().map(|v| space.index(&residues(v))).collect();
    let targets: Vec<usize> = (0..xs.len()).map(|i| xs[sigma.apply(i)]).collect();
    let found =
        GlRows::new(space.clone(), 0, 1).find(|rows| xs.iter().zip(&targets).all(|(&x, &y)| space.apply(rows, x) == y));
    Ok(found.map(|rows| rows_to_matrix(&space, set.field(), &rows)))
}

/// Some invertible `u` with `u(P_i) = P_{sigma(i)}`, found by exhaustion.
pub fn oracle_extend_projective(set: &ProjSet, sigma: &Permutation, budget: &SearchBudget) -> Result<Option<Matrix>> {
    let p = prime_of(set.field())?;
    check_len(set.len(), sigma)?;
    budget.admit(set.dim(), p as u64)?;
    let space = Space::new(set.dim(), p);
    let xs: Vec<usize> = set
        .points()
        .iter()
        .map(|pt| space.normalize(space.index(&residues(pt.rep()))))
        .collect();
    let targets: Vec<usize> = (0..xs.len()).map(|i| xs[sigma.apply(i)]).collect();
    let found = GlRows::new(space.clone(), 0, 1).find(|rows| {
        xs.iter()
            .zip(&targets)
            .all(|(&x, &y)| space.normalize(space.apply(rows, x)) == y)
    });
    Ok(found.map(|rows| rows_to_matrix(&space, set.field(), &rows)))
}

fn check_len(len: usize, sigma: &Permutation) -> Result<()> {
    if sigma.len() != len {
        return Err(Error::SizeMismatch {
            expected: len,
            found: sigma.len(),
        });
    }
    Ok(())
}
