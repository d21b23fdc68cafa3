//! Extendability of permutations on finite sets of vectors (to `GL(V)`) and
//! of projective points (to `PGL(V)`) over exact fields.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod linear;
pub mod oracle;
pub mod perm;
pub mod projective;
pub mod reps;

pub use error::{Error, Result};
