use std::fmt;

use serde::{Serialize, Serializer};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// A coordinate vector over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Field, coords: Vec<Scalar>) -> Result<Vector> {
        for c in &coords {
            field.check(c.field())?;
        }
        Ok(Vector { field, coords })
    }

    pub(crate) fn new_unchecked(field: Field, coords: Vec<Scalar>) -> Vector {
        debug_assert!(coords.iter().all(|c| c.field() == field));
        Vector { field, coords }
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Vector {
        Vector::new_unchecked(field, coords.iter().map(|&c| Scalar::from_i64(field, c)).collect())
    }

    pub fn parse<S: AsRef<str>>(field: Field, coords: &[S]) -> Result<Vector> {
        let coords = coords
            .iter()
            .map(|s| Scalar::parse(field, s.as_ref()))
            .collect::<Result<_>>()?;
        Ok(Vector { field, coords })
    }

    pub fn zero(field: Field, dim: usize) -> Vector {
        Vector::new_unchecked(field, vec![field.zero(); dim])
    }

    /// The standard basis vector `e_index`.
    pub fn basis(field: Field, dim: usize, index: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.coords[index] = field.one();
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Vector) -> Result<()> {
        self.field.check(other.field)?;
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Vector, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vector {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect();
        Vector::new_unchecked(self.field, coords)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector::new_unchecked(self.field, self.coords.iter().map(|x| c * x).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector::new_unchecked(self.field, self.coords.iter().map(|x| -x).collect())
    }

    /// Sum of a nonempty list of compatible vectors.
    pub fn sum<'a>(vectors: impl IntoIterator<Item = &'a Vector>) -> Result<Option<Vector>> {
        let mut iter = vectors.into_iter();
        let Some(first) = iter.next() else {
            return Ok(None);
        };
        iter.try_fold(first.clone(), |acc, v| acc.add(v)).map(Some)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    /// Scaled so the first nonzero coordinate is 1. `None` for the zero vector.
    pub fn normalized(&self) -> Option<Vector> {
        let lead = self.first_nonzero()?;
        let inv = self.coords[lead].inv()?;
        Some(self.scale(&inv))
    }

    /// The scalar `c` with `self = c * other`, when it exists and `other != 0`.
    pub fn ratio_to(&self, other: &Vector) -> Option<Scalar> {
        if self.check_compatible(other).is_err() {
            return None;
        }
        let lead = other.first_nonzero()?;
        let c = &self.coords[lead] / &other.coords[lead];
        (other.scale(&c) == *self).then_some(c)
    }

    /// Both nonzero and each a nonzero multiple of the other.
    pub fn is_proportional(&self, other: &Vector) -> bool {
        !self.is_zero() && self.ratio_to(other).is_some()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_ratios() {
        let f = Field::prime(5).unwrap();
        let v = Vector::from_i64(f, &[0, 2, 3]);
        assert_eq!(v.normalized().unwrap(), Vector::from_i64(f, &[0, 1, 4]));
        assert_eq!(Vector::zero(f, 3).normalized(), None);
        let w = v.scale(&Scalar::residue(f, 3));
        assert_eq!(w.ratio_to(&v), Some(Scalar::residue(f, 3)));
        assert!(w.is_proportional(&v));
        assert!(!Vector::zero(f, 3).is_proportional(&v));
        assert!(!Vector::from_i64(f, &[0, 1, 0]).is_proportional(&v));
    }

    #[test]
    fn incompatible_vectors() {
        let q = Field::RATIONALS;
        let g = Field::prime(3).unwrap();
        assert!(matches!(
            Vector::from_i64(q, &[1]).add(&Vector::from_i64(g, &[1])),
            Err(Error::FieldMismatch { .. })
        ));
        assert!(matches!(
            Vector::from_i64(q, &[1]).add(&Vector::from_i64(q, &[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(Vector::new(q, vec![g.one()]).is_err());
    }
}
