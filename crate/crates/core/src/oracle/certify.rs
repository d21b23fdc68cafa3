//! Exhaustive certification of the two classifications against `GL(n, p)`.
//!
//! One pass over the group records, for every subset of the universe, which
//! permutations of it are induced by some matrix (a bitset over lexicographic
//! ranks). The constructive deciders are then compared against those bits.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use super::gl::{GlRows, Space};
use super::SearchBudget;
use crate::algebra::{Field, Matrix, Scalar, Vector};
use crate::error::{Error, Result};
use crate::linear::{self, VectorSet};
use crate::perm::{self, factorial, Permutation};
use crate::projective::{self, ProjSet};

pub const MAX_THEOREM1_SIZE: usize = 6;
pub const MAX_THEOREM2_SIZE: usize = 8;
const MAX_UNIVERSE: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    /// `transposition`, `classification`, `generator_reduction`, `soundness`
    /// or `error`.
    pub kind: String,
    pub subset: Vec<Vector>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub theorem: u8,
    pub n: usize,
    pub p: u64,
    pub max_size: usize,
    pub group_order: u128,
    pub universe_size: usize,
    pub subsets_checked: u64,
    pub verdicts: BTreeMap<String, u64>,
    pub transposition_queries: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl CertificationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Linear,
    Projective,
}

/// Certifies the linear classification on every set of 2 to `max_size`
/// nonzero vectors of `GF(p)^n`.
pub fn exhaustive_theorem1_check(
    n: usize,
    p: u64,
    max_size: usize,
    budget: &SearchBudget,
) -> Result<CertificationReport> {
    run(Mode::Linear, n, p, max_size, budget)
}

/// Certifies the projective classification on every set of 2 to `max_size`
/// points of `P(GF(p)^n)`.
pub fn exhaustive_theorem2_check(
    n: usize,
    p: u64,
    max_size: usize,
    budget: &SearchBudget,
) -> Result<CertificationReport> {
    run(Mode::Projective, n, p, max_size, budget)
}

fn run(mode: Mode, n: usize, p: u64, max_size: usize, budget: &SearchBudget) -> Result<CertificationReport> {
    let field = Field::prime(p)?;
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let cap = match mode {
        Mode::Linear => MAX_THEOREM1_SIZE,
        Mode::Projective => MAX_THEOREM2_SIZE,
    };
    if max_size > cap {
        return Err(Error::SizeLimit { size: max_size, cap });
    }
    let group_order = budget.admit(n, p)?;
    let space = Space::new(n, p as u32);

    let universe: Vec<usize> = match mode {
        Mode::Linear => (1..space.size).collect(),
        Mode::Projective => (1..space.size).filter(|&v| space.normalize(v) == v).collect(),
    };
    if universe.len() > MAX_UNIVERSE {
        return Err(Error::SizeLimit {
            size: universe.len(),
            cap: MAX_UNIVERSE,
        });
    }
    let slot: Vec<Option<usize>> = {
        let mut slot = vec![None; space.size];
        for (i, &v) in universe.iter().enumerate() {
            slot[v] = Some(i);
        }
        slot
    };

    let subsets: Vec<u64> = (2..=max_size.min(universe.len()))
        .flat_map(|k| (0..universe.len()).combinations(k))
        .map(|c| c.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect();

    let bits = sweep(mode, &space, &universe, &slot, &subsets, budget.worker_count());

    let vectors: Vec<Vector> = universe
        .iter()
        .map(|&v| {
            let coords = space
                .coords(v)
                .iter()
                .map(|&c| Scalar::residue(field, c as u64))
                .collect();
            Vector::new(field, coords).expect("residue coordinates")
        })
        .collect();

    let mut report = CertificationReport {
        theorem: if mode == Mode::Linear { 1 } else { 2 },
        n,
        p,
        max_size,
        group_order,
        universe_size: universe.len(),
        subsets_checked: subsets.len() as u64,
        verdicts: BTreeMap::new(),
        transposition_queries: 0,
        discrepancies: Vec::new(),
    };
    for (mask, extendable) in subsets.iter().zip(&bits) {
        let members: Vec<Vector> = members(*mask).map(|i| vectors[i].clone()).collect();
        if let Err(e) = compare(mode, field, n, &members, extendable, &mut report) {
            report.discrepancies.push(Discrepancy {
                kind: "error".into(),
                subset: members,
                detail: e.to_string(),
            });
        }
    }
    Ok(report)
}

fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            i
        })
    })
}

fn bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// For each subset, the bitset of lex ranks of induced permutations.
fn sweep(
    mode: Mode,
    space: &Space,
    universe: &[usize],
    slot: &[Option<usize>],
    subsets: &[u64],
    workers: usize,
) -> Vec<Vec<u64>> {
    let empty: Vec<Vec<u64>> = subsets
        .iter()
        .map(|m| vec![0u64; factorial(m.count_ones() as usize).div_ceil(64)])
        .collect();
    let partials: Vec<Vec<Vec<u64>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let mut acc = empty.clone();
                scope.spawn(move || {
                    let mut image = vec![0usize; universe.len()];
                    let mut images = Vec::with_capacity(universe.len());
                    for rows in GlRows::new(space.clone(), w, workers) {
                        for (i, &v) in universe.iter().enumerate() {
                            let mut t = space.apply(&rows, v);
                            if mode == Mode::Projective {
                                t = space.normalize(t);
                            }
                            image[i] = slot[t].expect("nonzero image lies in the universe");
                        }
                        for (mask, acc) in subsets.iter().zip(acc.iter_mut()) {
                            let moved = members(*mask).fold(0u64, |m, i| m | 1 << image[i]);
                            if moved != *mask {
                                continue;
                            }
                            images.clear();
                            images.extend(
                                members(*mask).map(|i| (*mask & ((1u64 << image[i]) - 1)).count_ones() as usize),
                            );
                            let r = perm::lex_rank(&images);
                            acc[r / 64] |= 1 << (r % 64);
                        }
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut merged = empty;
    for part in partials {
        for (m, b) in merged.iter_mut().zip(part) {
            for (x, y) in m.iter_mut().zip(b) {
                *x |= y;
            }
        }
    }
    merged
}

fn compare(
    mode: Mode,
    field: Field,
    n: usize,
    members: &[Vector],
    extendable: &[u64],
    report: &mut CertificationReport,
) -> Result<()> {
    let k = members.len();
    let total = factorial(k);
    let count = extendable.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    let oracle_full = count == total;

    let (label, class_full) = match mode {
        Mode::Linear => {
            let class = linear::classify_linear(&VectorSet::new(field, n, members.to_vec())?)?;
            (class.label(), class.is_fully_extendable())
        }
        Mode::Projective => {
            let class = projective::classify_projective(&ProjSet::from_vectors(field, n, members)?)?;
            (class.label(), class.is_fully_extendable())
        }
    };
    *report.verdicts.entry(label.clone()).or_insert(0) += 1;

    let mut disagree = |kind: &str, detail: String| {
        report.discrepancies.push(Discrepancy {
            kind: kind.into(),
            subset: members.to_vec(),
            detail,
        })
    };

    if class_full != oracle_full {
        disagree(
            "classification",
            format!("verdict {label}, oracle finds {count} of {total} permutations induced"),
        );
    }

    let mut all_stars = true;
    for t in perm::star_transpositions(k) {
        let found = bit(extendable, t.lex_rank());
        all_stars &= found;
        let built = match mode {
            Mode::Linear => {
                let set = VectorSet::new(field, n, members.to_vec())?;
                linear::extend_permutation_linear(&set, &t)?
            }
            Mode::Projective => {
                let set = ProjSet::from_vectors(field, n, members)?;
                projective::extend_permutation_projective(&set, &t)?.map(|g| g.into_matrix())
            }
        };
        report.transposition_queries += 1;
        if built.is_some() != found {
            disagree(
                "transposition",
                format!("{t}: constructive {}, oracle {}", built.is_some(), found),
            );
        }
        if let Some(u) = built {
            if !realizes(mode, &u, members, &t)? {
                disagree(
                    "soundness",
                    format!("{t}: constructed matrix {:?} is not an extension", u.to_string_rows()),
                );
            }
        }
    }
    if all_stars != oracle_full {
        disagree(
            "generator_reduction",
            format!("all transpositions (0 i) induced: {all_stars}, full group induced: {oracle_full}"),
        );
    }
    Ok(())
}

fn realizes(mode: Mode, u: &Matrix, members: &[Vector], sigma: &Permutation) -> Result<bool> {
    if !u.is_invertible() {
        return Ok(false);
    }
    for (i, x) in members.iter().enumerate() {
        let image = u.apply(x)?;
        let target = &members[sigma.apply(i)];
        let ok = match mode {
            Mode::Linear => image == *target,
            Mode::Projective => image.is_proportional(target),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_small_sweeps() {
        let budget = SearchBudget::with_workers(2);
        let r = exhaustive_theorem1_check(2, 2, 6, &budget).unwrap();
        assert_eq!(r.universe_size, 3);
        assert_eq!(r.subsets_checked, 4);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
        assert_eq!(r.verdicts.get("basis_plus_negsum(2)"), Some(&1));

        let r = exhaustive_theorem1_check(2, 3, 6, &budget).unwrap();
        assert_eq!(r.universe_size, 8);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
    }

    #[test]
    fn theorem2_small_sweeps() {
        let budget = SearchBudget::with_workers(3);
        let r = exhaustive_theorem2_check(2, 3, 8, &budget).unwrap();
        assert_eq!(r.universe_size, 4);
        assert_eq!(r.subsets_checked, 11);
        assert!(r.is_clean(), "{:?}", r.discrepancies);
        assert_eq!(r.verdicts.get("harmonic_char3"), Some(&1));

        let r = exhaustive_theorem2_check(2, 5, 8, &budget).unwrap();
        assert!(r.is_clean(), "{:?}", r.discrepancies);
        assert_eq!(r.verdicts.get("harmonic_char3"), None);
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let one = exhaustive_theorem2_check(2, 5, 6, &SearchBudget::with_workers(1)).unwrap();
        let four = exhaustive_theorem2_check(2, 5, 6, &SearchBudget::with_workers(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn guards() {
        let budget = SearchBudget::default();
        assert_eq!(
            exhaustive_theorem1_check(2, 2, 7, &budget).err(),
            Some(Error::SizeLimit { size: 7, cap: 6 })
        );
        assert!(matches!(
            exhaustive_theorem1_check(4, 5, 3, &budget),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            exhaustive_theorem1_check(2, 4, 3, &budget).err(),
            Some(Error::NotPrime(4))
        );
    }
}
