//! Exact scalars, vectors and matrices over the rationals and prime fields.

mod field;
pub mod linalg;
mod matrix;
mod vector;

pub use field::{Field, Scalar, MAX_MODULUS};
pub use matrix::{Matrix, Rref};
pub use vector::Vector;
