//! Symmetric-group representations generated by matrices: relations, orbits,
//! faithfulness, invariant subspaces, and the two recognition results for
//! groups isomorphic to `S_m` acting on an orbit of size `m`.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{linalg, Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use crate::linear::{self, LinearClass, VectorSet};
use crate::perm::{self, factorial};
use crate::projective::{self, pgl_equal, PglElement, ProjClass, ProjPoint, ProjSet};

pub const DEFAULT_ORBIT_CAP: usize = 10_000;
pub const DEFAULT_GROUP_CAP: usize = 40_320;
/// Largest number of vectors `p^n` for which the line-by-line scan runs.
pub const LINE_SCAN_LIMIT: u64 = 1 << 20;
const HEURISTIC_ORBIT_LIMIT: usize = 64;

/// Generators of a matrix group, all invertible `dim x dim` over `field`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixGroupGens {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

impl MatrixGroupGens {
    pub fn new(field: Field, dim: usize, gens: Vec<Matrix>) -> Result<MatrixGroupGens> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall(dim));
        }
        for g in &gens {
            field.check(g.field())?;
            if !g.is_square() {
                return Err(Error::NotSquare {
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
            if g.rows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.rows(),
                });
            }
            if !g.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(MatrixGroupGens { field, dim, gens })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }
}

/// `S_{n+1}` acting on `{e_1, ..., e_n, -(e_1 + ... + e_n)}`: the swaps of
/// `e_i, e_{i+1}` for `i < n`, then the map fixing `e_1, ..., e_{n-1}` with
/// `e_n -> -(e_1 + ... + e_n)`.
pub fn standard_negsum_rep(n: usize, field: Field) -> Result<MatrixGroupGens> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut gens = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut cols: Vec<Vector> = (0..n).map(|j| Vector::basis(field, n, j)).collect();
        cols.swap(i, i + 1);
        gens.push(Matrix::from_columns(field, n, &cols)?);
    }
    let mut cols: Vec<Vector> = (0..n).map(|j| Vector::basis(field, n, j)).collect();
    cols[n - 1] = Vector::new(field, vec![-field.one(); n])?;
    gens.push(Matrix::from_columns(field, n, &cols)?);
    MatrixGroupGens::new(field, n, gens)
}

fn coxeter_relations(gens: &MatrixGroupGens, trivial: impl Fn(&Matrix) -> bool) -> bool {
    let s = &gens.gens;
    let order_divides = |m: &Matrix, k: u32| m.pow(k).is_ok_and(|p| trivial(&p));
    for i in 0..s.len() {
        if !order_divides(&s[i], 2) {
            return false;
        }
        for j in i + 1..s.len() {
            let k = if j == i + 1 { 3 } else { 2 };
            match s[i].mul(&s[j]) {
                Ok(prod) if order_divides(&prod, k) => {}
                _ => return false,
            }
        }
    }
    true
}

/// The Coxeter relations of `S_{k+1}` for generators `s_1, ..., s_k`, exactly.
pub fn coxeter_check(gens: &MatrixGroupGens) -> bool {
    coxeter_relations(gens, Matrix::is_identity)
}

/// As [`coxeter_check`], with each relation holding up to a scalar.
pub fn coxeter_check_projective(gens: &MatrixGroupGens) -> bool {
    let one = Matrix::identity(gens.field, gens.dim);
    coxeter_relations(gens, |m| pgl_equal(m, &one).unwrap_or(false))
}

fn closure<T: Clone + Eq + Hash>(
    seed: T,
    gens: &[Matrix],
    cap: usize,
    what: &'static str,
    step: impl Fn(&Matrix, &T) -> Result<T>,
) -> Result<Vec<T>> {
    let mut seen: HashSet<T> = HashSet::from([seed.clone()]);
    let mut order = vec![seed];
    let mut next = 0;
    while next < order.len() {
        for g in gens {
            let t = step(g, &order[next])?;
            if seen.insert(t.clone()) {
                if order.len() == cap {
                    return Err(Error::CapExceeded { what, cap });
                }
                order.push(t);
            }
        }
        next += 1;
    }
    Ok(order)
}

fn check_vector(gens: &MatrixGroupGens, v: &Vector) -> Result<()> {
    gens.field.check(v.field())?;
    if v.dim() != gens.dim {
        return Err(Error::DimensionMismatch {
            expected: gens.dim,
            found: v.dim(),
        });
    }
    Ok(())
}

/// Orbit of a nonzero vector in breadth-first discovery order.
pub fn orbit(gens: &MatrixGroupGens, seed: &Vector, cap: usize) -> Result<Vec<Vector>> {
    check_vector(gens, seed)?;
    if seed.is_zero() {
        return Err(Error::ZeroPoint);
    }
    closure(seed.clone(), &gens.gens, cap, "orbit", |g, v| g.apply(v))
}

/// Orbit of a point under the projective action.
pub fn orbit_points(gens: &MatrixGroupGens, seed: &ProjPoint, cap: usize) -> Result<Vec<ProjPoint>> {
    check_vector(gens, seed.rep())?;
    closure(seed.clone(), &gens.gens, cap, "orbit", |g, p| {
        ProjPoint::new(&g.apply(p.rep())?)
    })
}

/// All elements of the generated group, identity first.
pub fn group_closure(gens: &MatrixGroupGens, cap: usize) -> Result<Vec<Matrix>> {
    let one = Matrix::identity(gens.field, gens.dim);
    closure(one, &gens.gens, cap, "group", |g, h| g.mul(h))
}

/// All elements of the image of the generated group in `PGL`.
pub fn projective_group_closure(gens: &MatrixGroupGens, cap: usize) -> Result<Vec<PglElement>> {
    let one = PglElement::identity(gens.field, gens.dim);
    closure(one, &gens.gens, cap, "group", |g, h| {
        PglElement::new(g.mul(h.matrix())?)
    })
}

/// Whether the identity is the only group element fixing every vector of `xs`.
pub fn is_faithful_on(gens: &MatrixGroupGens, xs: &[Vector], cap: usize) -> Result<bool> {
    for x in xs {
        check_vector(gens, x)?;
    }
    for g in group_closure(gens, cap)? {
        if !g.is_identity() && xs.iter().all(|x| g.apply(x).is_ok_and(|y| y == *x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the identity of `PGL` is the only element fixing every point.
pub fn is_faithful_on_points(gens: &MatrixGroupGens, xs: &[ProjPoint], cap: usize) -> Result<bool> {
    for x in xs {
        check_vector(gens, x.rep())?;
    }
    for g in projective_group_closure(gens, cap)? {
        if !g.is_identity() && xs.iter().all(|x| g.apply_point(x).is_ok_and(|y| y == *x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest subspace containing the seeds and invariant under every
/// generator, as a reduced row-echelon basis.
pub fn spin(gens: &MatrixGroupGens, seeds: &[Vector]) -> Result<Vec<Vector>> {
    let (field, dim) = (gens.field, gens.dim);
    let mut basis: Vec<Vector> = Vec::new();
    let mut queue: VecDeque<Vector> = VecDeque::new();
    for s in seeds {
        check_vector(gens, s)?;
        if !linalg::in_span(field, dim, &basis, s)? {
            basis.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if basis.len() == dim {
            break;
        }
        for g in &gens.gens {
            let w = g.apply(&v)?;
            if !linalg::in_span(field, dim, &basis, &w)? {
                basis.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    linalg::span_basis(field, dim, &basis)
}

/// Result of searching for a proper nonzero invariant subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantScan {
    pub subspace: Option<Vec<Vector>>,
    /// `true` when a negative answer is definitive (every line was spun).
    pub complete: bool,
}

/// Looks for a proper nonzero invariant subspace by spinning one-dimensional
/// seeds. Over a finite field with at most [`LINE_SCAN_LIMIT`] vectors every
/// line is tried in lexicographic order of normalized representatives, which
/// decides the question. Otherwise the seeds are the standard basis, the
/// caller's vectors, and the differences and sums of their (truncated) orbits,
/// and a negative answer is marked incomplete.
pub fn invariant_subspace_scan(gens: &MatrixGroupGens, extra_seeds: &[Vector]) -> Result<InvariantScan> {
    let (field, dim) = (gens.field, gens.dim);
    let proper = |seed: &Vector| -> Result<Option<Vec<Vector>>> {
        if seed.is_zero() {
            return Ok(None);
        }
        let w = spin(gens, std::slice::from_ref(seed))?;
        Ok((w.len() < dim).then_some(w))
    };

    let scannable = field
        .order()
        .and_then(|q| q.checked_pow(dim as u32))
        .is_some_and(|size| size <= LINE_SCAN_LIMIT);
    if scannable {
        let elements: Vec<Scalar> = field.elements().expect("finite field").collect();
        for coords in (0..dim).map(|_| elements.iter().cloned()).multi_cartesian_product() {
            let v = Vector::new(field, coords)?;
            if v.normalized().as_ref() != Some(&v) {
                continue;
            }
            if let Some(w) = proper(&v)? {
                return Ok(InvariantScan {
                    subspace: Some(w),
                    complete: true,
                });
            }
        }
        return Ok(InvariantScan {
            subspace: None,
            complete: true,
        });
    }

    let mut seeds: Vec<Vector> = (0..dim).map(|i| Vector::basis(field, dim, i)).collect();
    for s in extra_seeds {
        check_vector(gens, s)?;
        seeds.push(s.clone());
    }
    let mut derived = Vec::new();
    for s in seeds.iter().filter(|s| !s.is_zero()) {
        let orb = partial_orbit(gens, s, HEURISTIC_ORBIT_LIMIT)?;
        for o in &orb[1..] {
            derived.push(o.sub(&orb[0])?);
        }
        if let Some(sum) = Vector::sum(&orb)? {
            derived.push(sum);
        }
    }
    for s in seeds.iter().chain(&derived) {
        if let Some(w) = proper(s)? {
            return Ok(InvariantScan {
                subspace: Some(w),
                complete: false,
            });
        }
    }
    Ok(InvariantScan {
        subspace: None,
        complete: false,
    })
}

fn partial_orbit(gens: &MatrixGroupGens, seed: &Vector, limit: usize) -> Result<Vec<Vector>> {
    match orbit(gens, seed, limit) {
        Err(Error::CapExceeded { .. }) => {
            let mut out = vec![seed.clone()];
            let mut seen = HashSet::from([seed.clone()]);
            let mut next = 0;
            while next < out.len() && out.len() < limit {
                for g in &gens.gens {
                    let t = g.apply(&out[next])?;
                    if out.len() < limit && seen.insert(t.clone()) {
                        out.push(t);
                    }
                }
                next += 1;
            }
            Ok(out)
        }
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryStatus {
    /// Hypotheses and conclusions hold.
    Verified,
    /// Some hypothesis fails; conclusions were not evaluated.
    Inapplicable,
    /// Hypotheses hold but a conclusion fails.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub generator_count: usize,
    pub coxeter_relations: bool,
    pub group_order: usize,
    /// `m - 1` generators satisfying the Coxeter relations of `S_m` and
    /// generating a group of order `m!`.
    pub isomorphic_to_symmetric: bool,
    pub orbit: Vec<Vector>,
    pub orbit_size_matches: bool,
    pub faithful: bool,
    pub invariant_subspace: Option<Vec<Vector>>,
    pub invariant_scan_complete: bool,
    pub all_hold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conclusion {
    pub verdict: String,
    pub verdict_allowed: bool,
    /// Whether the group equals the image of the permutation group of the
    /// orbit; `None` when not asserted.
    pub group_equality: Option<bool>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub corollary: u8,
    pub field: Field,
    pub dim: usize,
    pub m: usize,
    pub hypotheses: Hypotheses,
    pub conclusion: Option<Conclusion>,
    pub status: CorollaryStatus,
}

fn symmetric_order(m: usize) -> Option<usize> {
    (m <= 20).then(|| factorial(m))
}

fn finish(
    corollary: u8,
    gens: &MatrixGroupGens,
    m: usize,
    hypotheses: Hypotheses,
    conclusion: Option<Conclusion>,
) -> CorollaryReport {
    let status = match &conclusion {
        None => CorollaryStatus::Inapplicable,
        Some(c) if c.holds => CorollaryStatus::Verified,
        Some(_) => CorollaryStatus::Violated,
    };
    CorollaryReport {
        corollary,
        field: gens.field,
        dim: gens.dim,
        m,
        hypotheses,
        conclusion,
        status,
    }
}

/// Checks the hypotheses of the linear recognition result for `G = <gens>`
/// acting on the orbit of `seed`, and when they hold, that the orbit is a
/// basis or a basis plus its negative sum and that `G = G(X)`.
pub fn verify_corollary1(gens: &MatrixGroupGens, m: usize, seed: &Vector) -> Result<CorollaryReport> {
    let (field, dim) = (gens.field, gens.dim);
    let coxeter = coxeter_check(gens);
    let group = group_closure(gens, DEFAULT_GROUP_CAP)?;
    let orb = orbit(gens, seed, DEFAULT_ORBIT_CAP)?;
    let faithful = is_faithful_on(gens, &orb, DEFAULT_GROUP_CAP)?;
    let scan = invariant_subspace_scan(gens, std::slice::from_ref(seed))?;
    let iso = m >= 1 && gens.gens.len() == m - 1 && coxeter && symmetric_order(m) == Some(group.len());
    let size_ok = m >= 2 && orb.len() == m;
    let all_hold = iso && size_ok && faithful && scan.subspace.is_none();
    let hypotheses = Hypotheses {
        generator_count: gens.gens.len(),
        coxeter_relations: coxeter,
        group_order: group.len(),
        isomorphic_to_symmetric: iso,
        orbit: orb.clone(),
        orbit_size_matches: size_ok,
        faithful,
        invariant_subspace: scan.subspace,
        invariant_scan_complete: scan.complete,
        all_hold,
    };
    if !all_hold {
        return Ok(finish(1, gens, m, hypotheses, None));
    }

    let set = VectorSet::new(field, dim, orb)?;
    let class = linear::classify_linear(&set)?;
    let verdict_allowed = match class {
        LinearClass::Independent => set.rank() == dim,
        LinearClass::BasisPlusNegativeSum { rank } => rank == dim,
        LinearClass::NotHomogeneous { .. } => false,
    };
    let mut equal = true;
    for g in &group {
        let same = match set.induced_permutation(g)? {
            Some(sigma) => linear::alpha_extension(&set, &sigma).is_ok_and(|a| a == *g),
            None => false,
        };
        if !same {
            equal = false;
            break;
        }
    }
    let conclusion = Conclusion {
        verdict: class.label(),
        verdict_allowed,
        group_equality: Some(equal),
        holds: verdict_allowed && equal,
    };
    Ok(finish(1, gens, m, hypotheses, Some(conclusion)))
}

/// The unique element of `PGL` inducing `sigma` on an `n`-simplex in
/// `P(F^n)` or on a harmonic quadruple in `P(F^2)`.
fn unique_extension(set: &ProjSet, class: &ProjClass, sigma: &perm::Permutation) -> Result<Option<PglElement>> {
    let image = ProjSet::new(set.field(), set.dim(), sigma.permute(set.points()))?;
    match class {
        ProjClass::Simplex { .. } => projective::unique_simplex_map(set, &image).map(Some),
        ProjClass::HarmonicChar3 => {
            let head = |s: &ProjSet| ProjSet::new(s.field(), s.dim(), s.points()[..3].to_vec());
            let u = projective::unique_simplex_map(&head(set)?, &head(&image)?)?;
            let fourth_ok = u.apply_point(&set.points()[3])? == image.points()[3];
            Ok(fourth_ok.then_some(u))
        }
        _ => Ok(None),
    }
}

/// Projective analogue of [`verify_corollary1`]: `G` is the image of
/// `<gens>` in `PGL`, acting on the orbit of the point `seed`.
pub fn verify_corollary2(gens: &MatrixGroupGens, m: usize, seed: &ProjPoint) -> Result<CorollaryReport> {
    let (field, dim) = (gens.field, gens.dim);
    let coxeter = coxeter_check_projective(gens);
    let group = projective_group_closure(gens, DEFAULT_GROUP_CAP)?;
    let orb = orbit_points(gens, seed, DEFAULT_ORBIT_CAP)?;
    let faithful = is_faithful_on_points(gens, &orb, DEFAULT_GROUP_CAP)?;
    let scan = invariant_subspace_scan(gens, std::slice::from_ref(seed.rep()))?;
    let iso = m >= 1 && gens.gens.len() == m - 1 && coxeter && symmetric_order(m) == Some(group.len());
    let size_ok = m >= 2 && orb.len() == m;
    let all_hold = iso && size_ok && faithful && scan.subspace.is_none();
    let hypotheses = Hypotheses {
        generator_count: gens.gens.len(),
        coxeter_relations: coxeter,
        group_order: group.len(),
        isomorphic_to_symmetric: iso,
        orbit: orb.iter().map(|p| p.rep().clone()).collect(),
        orbit_size_matches: size_ok,
        faithful,
        invariant_subspace: scan.subspace,
        invariant_scan_complete: scan.complete,
        all_hold,
    };
    if !all_hold {
        return Ok(finish(2, gens, m, hypotheses, None));
    }

    let set = ProjSet::new(field, dim, orb)?;
    let class = projective::classify_projective(&set)?;
    let verdict_allowed = match class {
        ProjClass::Independent => set.len() == dim,
        ProjClass::Simplex { m } => m == dim,
        ProjClass::HarmonicChar3 => true,
        ProjClass::NotHomogeneous { .. } => false,
    };
    let group_equality = if verdict_allowed && class != ProjClass::Independent {
        let mut equal = true;
        for g in &group {
            let same = match set.induced_permutation(g.matrix())? {
                Some(sigma) => unique_extension(&set, &class, &sigma)?.is_some_and(|u| u == *g),
                None => false,
            };
            if !same {
                equal = false;
                break;
            }
        }
        Some(equal)
    } else {
        None
    };
    let conclusion = Conclusion {
        verdict: class.label(),
        verdict_allowed,
        group_equality,
        holds: verdict_allowed && group_equality != Some(false),
    };
    Ok(finish(2, gens, m, hypotheses, Some(conclusion)))
}

/// For `X = {x_1, ..., x_n, -(x_1 + ... + x_n)}` spanning `F^n`, whether the
/// classes of `G(X)` in `PGL` are exactly the unique extensions of the
/// permutations of the induced `n`-simplex.
pub fn projectivize_group_equality(set: &VectorSet) -> Result<bool> {
    let dim = set.dim();
    if linear::classify_linear(set)? != (LinearClass::BasisPlusNegativeSum { rank: dim }) {
        return Err(Error::NotSimplex);
    }
    let linear_side: HashSet<PglElement> = linear::group_of_set(set)?
        .into_iter()
        .map(PglElement::new)
        .collect::<Result<_>>()?;
    let points = ProjSet::from_vectors(set.field(), dim, set.vectors())?;
    let mut projective_side: HashSet<PglElement> = HashSet::new();
    for sigma in perm::all_permutations(points.len())? {
        let image = ProjSet::new(points.field(), dim, sigma.permute(points.points()))?;
        projective_side.insert(projective::unique_simplex_map(&points, &image)?);
    }
    Ok(linear_side.len() == factorial(set.len()) && linear_side == projective_side)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn q() -> Field {
        Field::RATIONALS
    }

    fn e(field: Field, n: usize, i: usize) -> Vector {
        Vector::basis(field, n, i)
    }

    fn swap_rep(field: Field, n: usize) -> MatrixGroupGens {
        let gens = (0..n - 1)
            .map(|i| {
                let mut cols: Vec<Vector> = (0..n).map(|j| e(field, n, j)).collect();
                cols.swap(i, i + 1);
                Matrix::from_columns(field, n, &cols).unwrap()
            })
            .collect();
        MatrixGroupGens::new(field, n, gens).unwrap()
    }

    #[test]
    fn negsum_rep_examples() {
        let g = standard_negsum_rep(2, q()).unwrap();
        assert_eq!(g.gens()[0], Matrix::from_i64_rows(q(), &[&[0, 1], &[1, 0]]));
        assert_eq!(g.gens()[1], Matrix::from_i64_rows(q(), &[&[1, -1], &[0, -1]]));
        let negsum = Vector::from_i64(q(), &[-1, -1]);
        assert_eq!(g.gens()[1].apply(&negsum).unwrap(), e(q(), 2, 1));
        let prod = g.gens()[0].mul(&g.gens()[1]).unwrap();
        assert!(prod.pow(3).unwrap().is_identity());

        let g = standard_negsum_rep(3, gf(5)).unwrap();
        assert_eq!(g.gens().len(), 3);
        assert!(g.gens().iter().all(|s| s.pow(2).unwrap().is_identity()));
        assert_eq!(standard_negsum_rep(1, q()).err(), Some(Error::DimensionTooSmall(1)));
    }

    #[test]
    fn negsum_generators_permute_the_set() {
        for field in [q(), gf(2), gf(5)] {
            for n in 2..=6 {
                let g = standard_negsum_rep(n, field).unwrap();
                let x = VectorSet::basis_plus_negative_sum(field, n).unwrap();
                for s in g.gens() {
                    assert!(x.induced_permutation(s).unwrap().is_some());
                }
                assert!(coxeter_check(&g), "{field} n={n}");
            }
        }
    }

    #[test]
    fn negsum_group_orders() {
        for n in 2..=5 {
            let g = standard_negsum_rep(n, q()).unwrap();
            assert_eq!(group_closure(&g, DEFAULT_GROUP_CAP).unwrap().len(), factorial(n + 1));
        }
    }

    #[test]
    fn coxeter_examples() {
        assert!(coxeter_check(&standard_negsum_rep(2, q()).unwrap()));
        assert!(coxeter_check(&swap_rep(q(), 4)));
        let two =
            MatrixGroupGens::new(q(), 2, vec![Matrix::identity(q(), 2).scale(&Scalar::from_i64(q(), 2))]).unwrap();
        assert!(!coxeter_check(&two));
        assert!(!coxeter_check_projective(
            &MatrixGroupGens::new(q(), 2, vec![Matrix::from_i64_rows(q(), &[&[1, 1], &[0, 1]])]).unwrap()
        ));
        assert!(coxeter_check_projective(&two));
    }

    #[test]
    fn orbit_examples() {
        let g = standard_negsum_rep(2, q()).unwrap();
        let orb = orbit(&g, &e(q(), 2, 0), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orb, vec![e(q(), 2, 0), e(q(), 2, 1), Vector::from_i64(q(), &[-1, -1])]);

        let id = MatrixGroupGens::new(q(), 2, vec![Matrix::identity(q(), 2)]).unwrap();
        assert_eq!(orbit(&id, &Vector::from_i64(q(), &[3, 7]), 10).unwrap().len(), 1);

        let g = standard_negsum_rep(3, gf(5)).unwrap();
        assert_eq!(orbit(&g, &e(gf(5), 3, 0), DEFAULT_ORBIT_CAP).unwrap().len(), 4);

        let shear = MatrixGroupGens::new(q(), 2, vec![Matrix::from_i64_rows(q(), &[&[1, 1], &[0, 1]])]).unwrap();
        assert_eq!(
            orbit(&shear, &e(q(), 2, 1), 50).err(),
            Some(Error::CapExceeded { what: "orbit", cap: 50 })
        );
    }

    #[test]
    fn faithfulness_examples() {
        let g = standard_negsum_rep(2, q()).unwrap();
        let orb = orbit(&g, &e(q(), 2, 0), DEFAULT_ORBIT_CAP).unwrap();
        assert!(is_faithful_on(&g, &orb, DEFAULT_GROUP_CAP).unwrap());

        let flip = MatrixGroupGens::new(q(), 2, vec![Matrix::from_i64_rows(q(), &[&[1, 0], &[0, -1]])]).unwrap();
        assert!(!is_faithful_on(&flip, &[e(q(), 2, 0)], DEFAULT_GROUP_CAP).unwrap());

        let s3 = swap_rep(q(), 3);
        let basis: Vec<Vector> = (0..3).map(|i| e(q(), 3, i)).collect();
        assert!(is_faithful_on(&s3, &basis, DEFAULT_GROUP_CAP).unwrap());
    }

    #[test]
    fn invariant_scan_examples() {
        let scan = invariant_subspace_scan(&standard_negsum_rep(2, gf(3)).unwrap(), &[]).unwrap();
        assert_eq!(scan.subspace, Some(vec![Vector::from_i64(gf(3), &[1, 2])]));
        assert!(scan.complete);

        let scan = invariant_subspace_scan(&standard_negsum_rep(2, gf(2)).unwrap(), &[]).unwrap();
        assert_eq!(
            scan,
            InvariantScan {
                subspace: None,
                complete: true
            }
        );

        let shear = MatrixGroupGens::new(q(), 2, vec![Matrix::from_i64_rows(q(), &[&[1, 1], &[0, 1]])]).unwrap();
        let scan = invariant_subspace_scan(&shear, &[]).unwrap();
        assert_eq!(scan.subspace, Some(vec![e(q(), 2, 0)]));
        assert!(!scan.complete);

        let scan = invariant_subspace_scan(&standard_negsum_rep(3, q()).unwrap(), &[]).unwrap();
        assert_eq!(scan.subspace, None);
        assert!(!scan.complete);
    }

    #[test]
    fn corollary1_examples() {
        let r = verify_corollary1(&standard_negsum_rep(2, gf(2)).unwrap(), 3, &e(gf(2), 2, 0)).unwrap();
        assert_eq!(r.status, CorollaryStatus::Verified);
        let c = r.conclusion.unwrap();
        assert_eq!(c.verdict, "basis_plus_negsum(2)");
        assert_eq!(c.group_equality, Some(true));

        let r = verify_corollary1(&swap_rep(gf(2), 2), 2, &e(gf(2), 2, 0)).unwrap();
        assert_eq!(r.status, CorollaryStatus::Inapplicable);
        assert_eq!(
            r.hypotheses.invariant_subspace,
            Some(vec![Vector::from_i64(gf(2), &[1, 1])])
        );
        assert!(r.conclusion.is_none());

        let r = verify_corollary1(&standard_negsum_rep(2, gf(3)).unwrap(), 3, &e(gf(3), 2, 0)).unwrap();
        assert_eq!(r.status, CorollaryStatus::Inapplicable);
        assert_eq!(
            r.hypotheses.invariant_subspace,
            Some(vec![Vector::from_i64(gf(3), &[1, 2])])
        );
    }

    #[test]
    fn corollary2_examples() {
        let seed = ProjPoint::from_i64(gf(2), &[1, 0]).unwrap();
        let r = verify_corollary2(&standard_negsum_rep(2, gf(2)).unwrap(), 3, &seed).unwrap();
        assert_eq!(r.status, CorollaryStatus::Verified);
        let c = r.conclusion.unwrap();
        assert_eq!(c.verdict, "simplex(2)");
        assert_eq!(c.group_equality, Some(true));

        let seed = ProjPoint::from_i64(gf(5), &[1, 0, 0]).unwrap();
        let r = verify_corollary2(&standard_negsum_rep(3, gf(5)).unwrap(), 4, &seed).unwrap();
        assert_eq!(r.status, CorollaryStatus::Verified);
        assert_eq!(r.conclusion.unwrap().verdict, "simplex(3)");

        let id = MatrixGroupGens::new(gf(5), 2, vec![Matrix::identity(gf(5), 2)]).unwrap();
        let r = verify_corollary2(&id, 1, &ProjPoint::from_i64(gf(5), &[1, 0]).unwrap()).unwrap();
        assert_eq!(r.status, CorollaryStatus::Inapplicable);
        assert!(!r.hypotheses.orbit_size_matches);
    }

    #[test]
    fn faithful_orbits_have_at_least_m_elements() {
        for p in [2, 3, 5] {
            for n in 2..=3 {
                let field = gf(p);
                let g = standard_negsum_rep(n, field).unwrap();
                let elements: Vec<Scalar> = field.elements().unwrap().collect();
                for coords in (0..n).map(|_| elements.iter().cloned()).multi_cartesian_product() {
                    let seed = Vector::new(field, coords).unwrap();
                    if seed.is_zero() {
                        continue;
                    }
                    let orb = orbit(&g, &seed, DEFAULT_ORBIT_CAP).unwrap();
                    if is_faithful_on(&g, &orb, DEFAULT_GROUP_CAP).unwrap() {
                        assert!(
                            orb.len() > n,
                            "GF({p}) seed {seed}: faithful orbit of size {}",
                            orb.len()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn projectivized_group_examples() {
        for (field, n) in [(gf(5), 2), (q(), 2), (gf(7), 3)] {
            let x = VectorSet::basis_plus_negative_sum(field, n).unwrap();
            assert!(projectivize_group_equality(&x).unwrap(), "{field} n={n}");
        }
        let basis = VectorSet::from_i64(q(), 2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(projectivize_group_equality(&basis).err(), Some(Error::NotSimplex));
    }
}
