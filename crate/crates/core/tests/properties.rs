//! Algebraic laws checked against plain integer arithmetic.

use permext::algebra::{linalg, Field, Matrix, Scalar, Vector};
use permext::linear::{alpha_extension, VectorSet};
use permext::perm::Permutation;
use proptest::prelude::*;
use proptest::sample::Index;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 31, 2_147_483_647];

fn residue(p: u64, v: u64) -> Scalar {
    Scalar::residue(Field::prime(p).unwrap(), v)
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::rational(n, d).unwrap()
}

fn small_matrix(field: Field, n: usize, entries: &[i64]) -> Matrix {
    let rows = entries
        .chunks(n)
        .map(|r| r.iter().map(|&x| Scalar::from_i64(field, x)).collect())
        .collect();
    Matrix::from_rows(field, rows).unwrap()
}

proptest! {
    #[test]
    fn prime_field_matches_integers_mod_p(pi in 0..PRIMES.len(), a in any::<u64>(), b in any::<u64>()) {
        let p = PRIMES[pi];
        let (a, b) = (a % p, b % p);
        let (x, y) = (residue(p, a), residue(p, b));
        prop_assert_eq!(&x + &y, residue(p, (a + b) % p));
        prop_assert_eq!(&x - &y, residue(p, (a + p - b) % p));
        prop_assert_eq!(&x * &y, residue(p, ((a as u128 * b as u128) % p as u128) as u64));
        if b != 0 {
            let q = &x / &y;
            prop_assert_eq!(&q * &y, x.clone());
        }
        prop_assert_eq!(Scalar::parse(x.field(), &x.to_string()).unwrap(), x);
    }

    #[test]
    fn rationals_match_cross_multiplication(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let (x, y) = (frac(a, b), frac(c, d));
        prop_assert_eq!(&x + &y, frac(a * d + c * b, b * d));
        prop_assert_eq!(&x * &y, frac(a * c, b * d));
        if a != 0 {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(Scalar::parse(Field::RATIONALS, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn rank_nullity_and_inverse(pi in 0..4usize, n in 2usize..5, entries in prop::collection::vec(-3i64..4, 25)) {
        let field = if pi == 0 { Field::RATIONALS } else { Field::prime(PRIMES[pi]).unwrap() };
        let m = small_matrix(field, n, &entries[..n * n]);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), n);
        for k in &kernel {
            prop_assert!(m.apply(k).unwrap().is_zero());
        }
        let det = m.determinant().unwrap();
        match m.inverse().unwrap() {
            Some(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert!(m.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&m).unwrap().is_identity());
            }
            None => prop_assert!(det.is_zero() && m.rank() < n),
        }
    }

    #[test]
    fn relations_annihilate(k in 2usize..6, coords in prop::collection::vec(-2i64..3, 18)) {
        let field = Field::RATIONALS;
        let xs: Vec<Vector> = coords.chunks(3).take(k).map(|c| Vector::from_i64(field, c)).collect();
        let rel = linalg::relation_space(field, 3, &xs).unwrap();
        prop_assert_eq!(rel.len(), k - linalg::rank_of(field, 3, &xs).unwrap());
        for c in &rel {
            let combo = xs.iter().zip(c.coords()).fold(Vector::zero(field, 3), |acc, (x, a)| acc.add(&x.scale(a)).unwrap());
            prop_assert!(combo.is_zero());
        }
    }

    #[test]
    fn alpha_is_a_homomorphism(
        n in 2usize..5,
        s in any::<Index>(),
        t in any::<Index>(),
    ) {
        let x = VectorSet::basis_plus_negative_sum(Field::RATIONALS, n).unwrap();
        let all: Vec<Permutation> = permext::perm::all_permutations(n + 1).unwrap().collect();
        let (s, t) = (s.get(&all), t.get(&all));
        let st = alpha_extension(&x, &s.compose(t).unwrap()).unwrap();
        let product = alpha_extension(&x, s).unwrap().mul(&alpha_extension(&x, t).unwrap()).unwrap();
        prop_assert_eq!(st, product);
    }
}
