//! Extending permutations of finite point sets in `P(V)` to elements of `PGL(V)`.
//!
//! Points are stored by normalized representatives (first nonzero coordinate
//! equal to 1), so point equality is structural. Sets where every permutation
//! extends are independent sets, `m`-simplices, or harmonic quadruples in
//! characteristic 3.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::algebra::{linalg, Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use crate::linear::{map_on_span, FullExtendability};
use crate::perm::{self, Permutation};

/// A point of `P(F^n)`: a one-dimensional subspace, held by its normalized
/// spanning vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    rep: Vector,
}

impl ProjPoint {
    pub fn new(v: &Vector) -> Result<ProjPoint> {
        v.normalized().map(|rep| ProjPoint { rep }).ok_or(Error::ZeroPoint)
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Result<ProjPoint> {
        ProjPoint::new(&Vector::from_i64(field, coords))
    }

    pub fn rep(&self) -> &Vector {
        &self.rep
    }

    pub fn field(&self) -> Field {
        self.rep.field()
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.is_proportional(&self.rep)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.rep)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rep.serialize(serializer)
    }
}

/// An ordered set of distinct projective points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSet {
    field: Field,
    dim: usize,
    points: Vec<ProjPoint>,
}

impl ProjSet {
    pub fn new(field: Field, dim: usize, points: Vec<ProjPoint>) -> Result<ProjSet> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        let mut seen: HashMap<&ProjPoint, usize> = HashMap::new();
        for (index, p) in points.iter().enumerate() {
            field.check(p.field())?;
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if let Some(&first) = seen.get(p) {
                return Err(Error::Duplicate { index, first });
            }
            seen.insert(p, index);
        }
        Ok(ProjSet { field, dim, points })
    }

    /// Points spanned by the given nonzero vectors.
    pub fn from_vectors(field: Field, dim: usize, vectors: &[Vector]) -> Result<ProjSet> {
        let points = vectors.iter().map(ProjPoint::new).collect::<Result<_>>()?;
        ProjSet::new(field, dim, points)
    }

    pub fn from_i64(field: Field, dim: usize, vectors: &[&[i64]]) -> Result<ProjSet> {
        let vectors: Vec<Vector> = vectors.iter().map(|v| Vector::from_i64(field, v)).collect();
        ProjSet::from_vectors(field, dim, &vectors)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn reps(&self) -> Vec<Vector> {
        self.points.iter().map(|p| p.rep.clone()).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank_of(self.field, self.dim, &self.reps()).expect("validated set")
    }

    pub fn position(&self, p: &ProjPoint) -> Option<usize> {
        self.points.iter().position(|x| x == p)
    }

    /// The permutation induced on the set by `g`, when `g` maps it onto itself.
    pub fn induced_permutation(&self, g: &Matrix) -> Result<Option<Permutation>> {
        let mut images = Vec::with_capacity(self.len());
        for p in &self.points {
            let image = ProjPoint::new(&g.apply(&p.rep)?)?;
            match self.position(&image) {
                Some(j) => images.push(j),
                None => return Ok(None),
            }
        }
        Ok(Permutation::new(images).ok())
    }

    fn subset(&self, indices: &[usize]) -> Vec<Vector> {
        indices.iter().map(|&i| self.points[i].rep.clone()).collect()
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
}

/// An element of `PGL(V)`, held by any invertible matrix representing it.
/// Equality and hashing are up to nonzero scalar multiples.
#[derive(Clone, Debug)]
pub struct PglElement(Matrix);

impl PglElement {
    pub fn new(m: Matrix) -> Result<PglElement> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(PglElement(m))
    }

    pub fn identity(field: Field, n: usize) -> PglElement {
        PglElement(Matrix::identity(field, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Representative scaled so its first nonzero entry (row-major) is 1.
    pub fn normalized(&self) -> Matrix {
        let lead = self
            .0
            .entries()
            .iter()
            .find(|x| !x.is_zero())
            .expect("invertible matrix");
        self.0.scale(&lead.inv().expect("nonzero"))
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::new(&self.0.apply(p.rep())?)
    }

    pub fn compose(&self, other: &PglElement) -> Result<PglElement> {
        Ok(PglElement(self.0.mul(&other.0)?))
    }

    pub fn is_identity(&self) -> bool {
        self.normalized().is_identity()
    }
}

impl PartialEq for PglElement {
    fn eq(&self, other: &Self) -> bool {
        pgl_equal(&self.0, &other.0).unwrap_or(false)
    }
}

impl Eq for PglElement {}

impl Hash for PglElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized().hash(state);
    }
}

impl Serialize for PglElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Whether `b = c * a` for some nonzero scalar `c`.
pub fn pgl_equal(a: &Matrix, b: &Matrix) -> Result<bool> {
    a.field().check(b.field())?;
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            expected: a.rows() * a.cols(),
            found: b.rows() * b.cols(),
        });
    }
    let Some(lead) = a.entries().iter().position(|x| !x.is_zero()) else {
        return Ok(b.entries().iter().all(Scalar::is_zero));
    };
    let c = &b.entries()[lead] / &a.entries()[lead];
    if c.is_zero() {
        return Ok(false);
    }
    Ok(a.scale(&c) == *b)
}

/// Verdict of the point-set classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjClass {
    Independent,
    /// `m + 1` points, not independent, every `m` of them independent.
    Simplex {
        m: usize,
    },
    /// `<x>, <y>, <x+y>, <x-y>` over a field of characteristic 3.
    HarmonicChar3,
    NotHomogeneous {
        witness: Permutation,
    },
}

impl ProjClass {
    pub fn is_fully_extendable(&self) -> bool {
        !matches!(self, ProjClass::NotHomogeneous { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProjClass::Independent => "independent",
            ProjClass::Simplex { .. } => "simplex",
            ProjClass::HarmonicChar3 => "harmonic_char3",
            ProjClass::NotHomogeneous { .. } => "not_homogeneous",
        }
    }

    /// [`name`](Self::name) with `m` appended for simplices, e.g. `simplex(3)`.
    pub fn label(&self) -> String {
        match self {
            ProjClass::Simplex { m } => format!("simplex({m})"),
            other => other.name().to_string(),
        }
    }
}

pub fn is_independent(set: &ProjSet) -> bool {
    set.rank() == set.len()
}

/// `Some(m)` when the set is an `m`-simplex with `2 <= m <= dim`.
pub fn is_simplex(set: &ProjSet) -> Option<usize> {
    let k = set.len();
    if k < 3 || k - 1 > set.dim || is_independent(set) {
        return None;
    }
    let m = k - 1;
    let all_faces_independent = (0..k).all(|skip| {
        let face: Vec<usize> = (0..k).filter(|&i| i != skip).collect();
        linalg::are_independent(set.field, set.dim, &set.subset(&face)).expect("validated set")
    });
    all_faces_independent.then_some(m)
}

/// Vectors `x_1, ..., x_m` with `x_i` spanning the `i`-th point and
/// `x_1 + ... + x_m` spanning the last one.
pub fn simplex_normal_form(set: &ProjSet) -> Result<Vec<Vector>> {
    let m = is_simplex(set).ok_or(Error::NotSimplex)?;
    let reps = set.reps();
    let coeffs = linalg::coordinates(set.field, set.dim, &reps[..m], &reps[m])?
        .ok_or_else(|| Error::Inconsistent("simplex apex outside the span of its base".into()))?;
    Ok(reps[..m].iter().zip(coeffs.coords()).map(|(r, c)| r.scale(c)).collect())
}

/// Independent `x, y` with the set equal to `{<x>, <y>, <x+y>, <x-y>}`.
///
/// Tries each ordered triple of points as `(<x>, <y>, <x+y>)`, scales the
/// representatives so the third is the sum, and tests the remaining point
/// against the difference.
pub fn is_harmonic(set: &ProjSet) -> Option<(Vector, Vector)> {
    if set.len() != 4 {
        return None;
    }
    let (field, dim) = (set.field, set.dim);
    let reps = set.reps();
    for triple in (0..4).permutations(3) {
        let (a, b, c) = (triple[0], triple[1], triple[2]);
        let d = 6 - a - b - c;
        let pair = [reps[a].clone(), reps[b].clone()];
        let Ok(Some(coeffs)) = linalg::coordinates(field, dim, &pair, &reps[c]) else {
            continue;
        };
        if !linalg::are_independent(field, dim, &pair).unwrap_or(false) {
            continue;
        }
        let (alpha, beta) = (&coeffs.coords()[0], &coeffs.coords()[1]);
        if alpha.is_zero() || beta.is_zero() {
            continue;
        }
        let x = reps[a].scale(alpha);
        let y = reps[b].scale(beta);
        let diff = x.sub(&y).expect("same shape");
        if set.points[d].contains(&diff) {
            return Some((x, y));
        }
    }
    None
}

/// Weighted union-find over basis positions: `scale[i] = weight * scale[root]`.
struct RatioForest {
    parent: Vec<usize>,
    weight: Vec<Scalar>,
}

impl RatioForest {
    fn new(field: Field, n: usize) -> RatioForest {
        RatioForest {
            parent: (0..n).collect(),
            weight: vec![field.one(); n],
        }
    }

    fn find(&mut self, i: usize) -> (usize, Scalar) {
        let p = self.parent[i];
        if p == i {
            return (i, self.weight[i].clone());
        }
        let (root, w) = self.find(p);
        let total = &self.weight[i] * &w;
        self.parent[i] = root;
        self.weight[i] = total.clone();
        (root, total)
    }

    /// Records `scale[i] = r * scale[j]`; false on contradiction. Roots are
    /// always the smallest index of their component.
    fn relate(&mut self, i: usize, j: usize, r: &Scalar) -> bool {
        let (ri, wi) = self.find(i);
        let (rj, wj) = self.find(j);
        if ri == rj {
            return wi == r * &wj;
        }
        if ri > rj {
            self.parent[ri] = rj;
            self.weight[ri] = &(r * &wj) / &wi;
        } else {
            self.parent[rj] = ri;
            self.weight[rj] = &wi / &(r * &wj);
        }
        true
    }
}

/// An invertible matrix sending each point `<src[i]>` to `<dst[i]>`, or `None`
/// when no element of `PGL` does.
///
/// The images of a maximal independent subfamily of `src` are scaled by
/// unknowns; each remaining point fixes ratios between the unknowns on its
/// support, which are propagated through a weighted union-find. One unknown
/// per connected component stays free and is set by `free_scalar(root)`,
/// which must return a nonzero scalar.
pub fn solve_point_map(
    field: Field,
    dim: usize,
    src: &[Vector],
    dst: &[Vector],
    free_scalar: &mut dyn FnMut(usize) -> Scalar,
) -> Result<Option<Matrix>> {
    if src.len() != dst.len() {
        return Err(Error::SizeMismatch {
            expected: src.len(),
            found: dst.len(),
        });
    }
    if src.iter().chain(dst).any(Vector::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let basis = linalg::independent_indices(field, dim, src)?;
    let src_basis: Vec<Vector> = basis.iter().map(|&b| src[b].clone()).collect();
    let dst_basis: Vec<Vector> = basis.iter().map(|&b| dst[b].clone()).collect();
    if !linalg::are_independent(field, dim, &dst_basis)? {
        return Ok(None);
    }

    let mut forest = RatioForest::new(field, basis.len());
    for p in (0..src.len()).filter(|p| !basis.contains(p)) {
        let a = linalg::coordinates(field, dim, &src_basis, &src[p])?
            .ok_or_else(|| Error::Inconsistent("point outside the span of a maximal independent subset".into()))?;
        let Some(c) = linalg::coordinates(field, dim, &dst_basis, &dst[p])? else {
            return Ok(None);
        };
        let mut anchor: Option<(usize, Scalar)> = None;
        for (b, (ab, cb)) in a.coords().iter().zip(c.coords()).enumerate() {
            match (ab.is_zero(), cb.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return Ok(None),
                (false, false) => {}
            }
            let ratio = cb / ab;
            match &anchor {
                None => anchor = Some((b, ratio)),
                Some((b0, r0)) => {
                    if !forest.relate(b, *b0, &(&ratio / r0)) {
                        return Ok(None);
                    }
                }
            }
        }
    }

    let mut root_scale: HashMap<usize, Scalar> = HashMap::new();
    let mut targets = Vec::with_capacity(basis.len());
    for (i, d) in dst_basis.iter().enumerate() {
        let (root, w) = forest.find(i);
        let free = root_scale.entry(root).or_insert_with(|| free_scalar(root)).clone();
        if free.is_zero() {
            return Err(Error::Inconsistent("free scalar must be nonzero".into()));
        }
        targets.push(d.scale(&(&w * &free)));
    }
    let u = map_on_span(field, dim, &src_basis, &targets)?;
    debug_assert!(src.iter().zip(dst).all(|(s, d)| u.apply(s).unwrap().is_proportional(d)));
    Ok(Some(u))
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

/// An element of `PGL` sending each point `P_i` to `P_{sigma(i)}`, or `None`.
/// Free scalars default to 1.
pub fn extend_permutation_projective(set: &ProjSet, sigma: &Permutation) -> Result<Option<PglElement>> {
    extend_permutation_projective_with(set, sigma, &mut |_| set.field.one())
}

/// As [`extend_permutation_projective`], with caller-chosen free scalars.
pub fn extend_permutation_projective_with(
    set: &ProjSet,
    sigma: &Permutation,
    free_scalar: &mut dyn FnMut(usize) -> Scalar,
) -> Result<Option<PglElement>> {
    check_permutation(set.len(), sigma)?;
    let reps = set.reps();
    let images = sigma.permute(&reps);
    Ok(solve_point_map(set.field, set.dim, &reps, &images, free_scalar)?.map(PglElement))
}

/// Transposition test `(0 i)` for `i = 1..k`, as in the linear case.
pub fn is_fully_extendable_projective(set: &ProjSet) -> Result<FullExtendability> {
    set.require_size(2)?;
    for t in perm::star_transpositions(set.len()) {
        if extend_permutation_projective(set, &t)?.is_none() {
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

/// Checks independent, then simplex, then (characteristic 3) harmonic; any
/// other set gets a blocked transposition as witness.
pub fn classify_projective(set: &ProjSet) -> Result<ProjClass> {
    set.require_size(2)?;
    if is_independent(set) {
        return Ok(ProjClass::Independent);
    }
    if let Some(m) = is_simplex(set) {
        return Ok(ProjClass::Simplex { m });
    }
    if set.field.characteristic() == 3 && is_harmonic(set).is_some() {
        return Ok(ProjClass::HarmonicChar3);
    }
    match is_fully_extendable_projective(set)?.witness {
        Some(witness) => Ok(ProjClass::NotHomogeneous { witness }),
        None => Err(Error::Inconsistent(
            "every transposition extends but the point set is neither independent, a simplex, nor harmonic in characteristic 3".into(),
        )),
    }
}

/// Rescales `u` so that it maps `x` to `y` exactly, keeping its class in `PGL`.
pub fn normalize_lift(u: &Matrix, x: &Vector, y: &Vector) -> Result<Matrix> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let image = u.apply(x)?;
    let a = image.ratio_to(y).filter(|a| !a.is_zero()).ok_or(Error::NotCollinear)?;
    Ok(u.scale(&a.inv().expect("nonzero")))
}

/// The element of `PGL` sending `src[i]` to `dst[i]` for two `n`-simplices
/// in `P(F^n)`, built from their normal forms.
pub fn unique_simplex_map(src: &ProjSet, dst: &ProjSet) -> Result<PglElement> {
    src.field.check(dst.field)?;
    if src.dim != dst.dim {
        return Err(Error::DimensionMismatch {
            expected: src.dim,
            found: dst.dim,
        });
    }
    let n = src.dim;
    if is_simplex(src) != Some(n) || is_simplex(dst) != Some(n) {
        return Err(Error::NotSimplex);
    }
    let x = Matrix::from_columns(src.field, n, &simplex_normal_form(src)?)?;
    let y = Matrix::from_columns(src.field, n, &simplex_normal_form(dst)?)?;
    let x_inv = x.inverse()?.ok_or(Error::Singular)?;
    PglElement::new(y.mul(&x_inv)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::RATIONALS
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn swap(k: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(k, i, j).unwrap()
    }

    fn harmonic(f: Field) -> ProjSet {
        let minus_one = f.characteristic() as i64 - 1;
        ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, minus_one]]).unwrap()
    }

    #[test]
    fn points_normalize() {
        let f = gf(5);
        let p = ProjPoint::from_i64(f, &[0, 3, 1]).unwrap();
        assert_eq!(p.rep(), &Vector::from_i64(f, &[0, 1, 2]));
        assert_eq!(ProjPoint::from_i64(f, &[0, 0, 0]), Err(Error::ZeroPoint));
        assert_eq!(
            ProjSet::from_i64(f, 2, &[&[1, 2], &[2, 4]]),
            Err(Error::Duplicate { index: 1, first: 0 })
        );
    }

    #[test]
    fn independence() {
        let f = q();
        assert!(is_independent(&ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1]]).unwrap()));
        assert!(!is_independent(
            &ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
        ));
        assert!(is_independent(
            &ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
        ));
    }

    #[test]
    fn simplices() {
        let f = q();
        assert_eq!(
            is_simplex(&ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()),
            Some(2)
        );
        assert_eq!(
            is_simplex(&ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()),
            Some(3)
        );
        assert_eq!(is_simplex(&harmonic(gf(5))), None);
        // three collinear points in dim 3 form a 2-simplex
        assert_eq!(
            is_simplex(&ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[1, 2, 0]]).unwrap()),
            Some(2)
        );
        // a face is dependent
        assert_eq!(
            is_simplex(&ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()),
            None
        );
    }

    #[test]
    fn simplex_normal_forms() {
        let f = q();
        let s = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert_eq!(
            simplex_normal_form(&s).unwrap(),
            vec![Vector::from_i64(f, &[1, 0]), Vector::from_i64(f, &[0, 1])]
        );

        // The expected pair (2,0),(0,3) up to one common scalar.
        let f = gf(5);
        let s = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[2, 3]]).unwrap();
        let nf = simplex_normal_form(&s).unwrap();
        let c = Vector::from_i64(f, &[2, 0]).ratio_to(&nf[0]).unwrap();
        assert_eq!(nf[1].scale(&c), Vector::from_i64(f, &[0, 3]));

        let s = ProjSet::from_i64(f, 2, &[&[1, 1], &[1, 4], &[1, 0]]).unwrap();
        let nf = simplex_normal_form(&s).unwrap();
        assert!(s.points()[0].contains(&nf[0]));
        assert!(s.points()[1].contains(&nf[1]));
        assert!(s.points()[2].contains(&nf[0].add(&nf[1]).unwrap()));

        assert_eq!(simplex_normal_form(&harmonic(gf(5))), Err(Error::NotSimplex));
    }

    #[test]
    fn harmonic_detection() {
        let f = gf(5);
        let (x, y) = is_harmonic(&harmonic(f)).unwrap();
        assert_eq!((x, y), (Vector::from_i64(f, &[1, 0]), Vector::from_i64(f, &[0, 1])));

        let f = gf(7);
        let s = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]]).unwrap();
        let (x, y) = is_harmonic(&s).unwrap();
        let expected: Vec<ProjPoint> = [x.clone(), y.clone(), x.add(&y).unwrap(), x.sub(&y).unwrap()]
            .iter()
            .map(|v| ProjPoint::new(v).unwrap())
            .collect();
        assert!(s.points().iter().all(|p| expected.contains(p)));

        let s = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1], &[1, 3]]).unwrap();
        assert_eq!(is_harmonic(&s), None);
    }

    #[test]
    fn harmonic_never_in_characteristic_two() {
        let f = gf(2);
        let all: Vec<Vector> = (1..8)
            .map(|i| Vector::from_i64(f, &[i & 1, (i >> 1) & 1, (i >> 2) & 1]))
            .collect();
        for quad in all.iter().cloned().combinations(4) {
            let s = ProjSet::from_vectors(f, 3, &quad).unwrap();
            assert_eq!(is_harmonic(&s), None);
        }
    }

    #[test]
    fn projective_extension_examples() {
        let f = q();
        let s = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let a = extend_permutation_projective(&s, &swap(3, 0, 1)).unwrap().unwrap();
        assert!(pgl_equal(a.matrix(), &Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]])).unwrap());

        let f = gf(3);
        let a = extend_permutation_projective(&harmonic(f), &swap(4, 1, 2))
            .unwrap()
            .unwrap();
        // columns (-1,0) and (1,1)
        let expected = Matrix::from_i64_rows(f, &[&[-1, 1], &[0, 1]]);
        assert!(pgl_equal(a.matrix(), &expected).unwrap());
        let x_minus_y = Vector::from_i64(f, &[1, -1]);
        assert!(expected.apply(&x_minus_y).unwrap().is_proportional(&x_minus_y));

        assert!(extend_permutation_projective(&harmonic(gf(5)), &swap(4, 0, 2))
            .unwrap()
            .is_none());
    }

    #[test]
    fn full_extendability_and_classification() {
        let f = gf(5);
        let indep = ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(is_fully_extendable_projective(&indep).unwrap().extendable);
        assert_eq!(classify_projective(&indep).unwrap(), ProjClass::Independent);

        let simplex = ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 3]]).unwrap();
        assert!(is_fully_extendable_projective(&simplex).unwrap().extendable);
        assert_eq!(classify_projective(&simplex).unwrap(), ProjClass::Simplex { m: 3 });

        let r = is_fully_extendable_projective(&harmonic(f)).unwrap();
        assert!(!r.extendable);
        assert_eq!(r.witness, Some(swap(4, 0, 2)));
        assert!(matches!(
            classify_projective(&harmonic(f)).unwrap(),
            ProjClass::NotHomogeneous { .. }
        ));

        assert_eq!(classify_projective(&harmonic(gf(3))).unwrap(), ProjClass::HarmonicChar3);

        let single = ProjSet::from_i64(f, 2, &[&[1, 0]]).unwrap();
        assert!(matches!(
            classify_projective(&single),
            Err(Error::TooFewElements { .. })
        ));
    }

    #[test]
    fn normalize_lift_examples() {
        let f = gf(5);
        let u = Matrix::identity(f, 2).scale(&Scalar::residue(f, 2));
        let e1 = Vector::basis(f, 2, 0);
        assert!(normalize_lift(&u, &e1, &e1).unwrap().is_identity());

        let f = gf(7);
        let u = Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]]);
        let x = Vector::from_i64(f, &[1, 0]);
        let y = Vector::from_i64(f, &[0, 3]);
        let lifted = normalize_lift(&u, &x, &y).unwrap();
        assert_eq!(lifted, Matrix::from_i64_rows(f, &[&[0, 3], &[3, 0]]));
        assert_eq!(lifted.apply(&x).unwrap(), y);

        let id = Matrix::identity(f, 2);
        assert_eq!(
            normalize_lift(&id, &x, &Vector::basis(f, 2, 1)),
            Err(Error::NotCollinear)
        );
    }

    #[test]
    fn unique_simplex_maps() {
        let f = gf(5);
        let base = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(unique_simplex_map(&base, &base).unwrap().is_identity());

        let rotated = ProjSet::from_i64(f, 2, &[&[0, 1], &[1, 1], &[1, 0]]).unwrap();
        let a = unique_simplex_map(&base, &rotated).unwrap();
        assert!(!a.is_identity());
        let cube = a.compose(&a).unwrap().compose(&a).unwrap();
        assert!(cube.is_identity());

        let dst = ProjSet::from_i64(f, 2, &[&[1, 0], &[0, 1], &[2, 3]]).unwrap();
        let a = unique_simplex_map(&base, &dst).unwrap();
        assert!(pgl_equal(a.matrix(), &Matrix::from_i64_rows(f, &[&[2, 0], &[0, 3]])).unwrap());

        assert_eq!(unique_simplex_map(&harmonic(f), &base).unwrap_err(), Error::NotSimplex);
        // a 2-simplex in dimension 3 is not an n-simplex
        let low = ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap();
        assert_eq!(unique_simplex_map(&low, &low).unwrap_err(), Error::NotSimplex);
    }

    #[test]
    fn pgl_equality() {
        let f = gf(7);
        let id = Matrix::identity(f, 2);
        assert!(pgl_equal(&id, &id.scale(&Scalar::residue(f, 3))).unwrap());
        assert!(!pgl_equal(
            &Matrix::identity(q(), 2),
            &Matrix::from_i64_rows(q(), &[&[1, 0], &[0, 2]])
        )
        .unwrap());
        assert!(pgl_equal(
            &Matrix::from_i64_rows(f, &[&[2, 0], &[0, 3]]),
            &Matrix::from_i64_rows(f, &[&[4, 0], &[0, 6]])
        )
        .unwrap());
        assert!(pgl_equal(&id, &Matrix::identity(f, 3)).is_err());
        assert!(pgl_equal(&id, &Matrix::identity(q(), 2)).is_err());
    }

    #[test]
    fn diagonal_maps_fix_a_frame_but_are_not_trivial() {
        let f = gf(7);
        let d = Matrix::diagonal(f, &[1, 2, 3].map(|v| Scalar::residue(f, v)));
        let frame = ProjSet::from_i64(f, 3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(frame.induced_permutation(&d).unwrap(), Some(Permutation::identity(3)));
        assert!(!pgl_equal(&d, &Matrix::identity(f, 3)).unwrap());
    }
}
