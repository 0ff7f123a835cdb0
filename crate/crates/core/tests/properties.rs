mod common;

use std::sync::Arc;

use graded_rings::geometry::{unproject_term, ConifoldLedger, WeightedPlane};
use graded_rings::orbifold::{assemble, orbifold_term, standard_basket, Basket, InitialData, QuotientSingularity};
use graded_rings::pfaffian::{is_jerry, is_tom, maximal_pfaffians, Ring, SkewMatrix5, SparsePoly, TriangularIdeal};
use graded_rings::recognition::{analyse, recognize, RecognitionConfig};
use graded_rings::series::{IntPolynomial, RationalSeries, WeightVector};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn series() -> impl Strategy<Value = RationalSeries> {
    (proptest::collection::vec((0u32..12, -5i64..=5), 0..6), proptest::collection::vec(1u32..7, 1..6))
        .prop_map(|(terms, w)| RationalSeries::new(IntPolynomial::from_terms(terms), WeightVector::new(w).unwrap()))
}

fn matrix_seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

fn small_ring() -> Arc<Ring> {
    Ring::new([("x", 1), ("y", 1), ("u", 1), ("v", 1)]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_is_linear(a in series(), b in series()) {
        let n = 30;
        prop_assert_eq!(a.add(&b).expand(n), a.expand(n).add(&b.expand(n)));
    }

    #[test]
    fn equality_ignores_common_factors(p in series(), extra in 1u32..8) {
        let mut den = p.denominator.clone();
        den.push(extra);
        let q = RationalSeries::new(p.numerator.mul_factor(extra, 1), den);
        prop_assert!(q.equals(&p));
        prop_assert_eq!(q.expand(25), p.expand(25));
    }

    #[test]
    fn pfaffians_are_syzygies_of_the_matrix(seed in matrix_seed()) {
        let ring = small_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let upper: Vec<SparsePoly> = (0..10).map(|_| common::random_poly(&ring, &mut rng, 3, 2)).collect();
        let m = SkewMatrix5::from_upper(upper).unwrap();
        let pf = maximal_pfaffians(&m);
        for i in 1..=5 {
            let mut row = SparsePoly::zero(&ring);
            for j in 1..=5 {
                let term = &m.get(i, j) * &pf[j - 1];
                row = if j % 2 == 1 { &row + &term } else { &row - &term };
            }
            prop_assert!(row.is_zero(), "row {}", i);
        }
    }

    #[test]
    fn entries_multiplied_into_the_ideal_give_jerry(seed in matrix_seed()) {
        let ring = small_ring();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = SparsePoly::var(&ring, "u").unwrap();
        let v = SparsePoly::var(&ring, "v").unwrap();
        let ideal = TriangularIdeal::new(&[u.clone(), v.clone()]).unwrap();
        let upper: Vec<SparsePoly> = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
            .iter()
            .map(|&(a, b)| {
                let r = common::random_poly(&ring, &mut rng, 3, 2);
                if a >= 4 || b >= 4 {
                    let s = common::random_poly(&ring, &mut rng, 3, 2);
                    &(&r * &u) + &(&s * &v)
                } else {
                    r
                }
            })
            .collect();
        let m = SkewMatrix5::from_upper(upper).unwrap();
        prop_assert!(is_jerry(&m, &ideal, 4, 5));
        // Column 5 is already in the ideal, so Tom_4 hinges on the top-left block.
        let tom4 = [(1, 2), (1, 3), (2, 3)].iter().all(|&(a, b)| ideal.is_member(&m.get(a, b)));
        prop_assert_eq!(is_tom(&m, &ideal, 4), tom4);
    }

    #[test]
    fn recognised_candidates_round_trip(p1 in 1u32..6, extra in 0u32..8, n in 0u32..4, m in 0u32..3) {
        let p2 = 3 * p1 + extra;
        let d = InitialData { p1, p2 };
        let series = assemble(d, &standard_basket(n, m)).unwrap();
        let analysis = analyse(d, &standard_basket(n, m), &Default::default(), &RecognitionConfig::default()).unwrap();
        if let Some(c) = analysis.candidate() {
            let sign = if c.codim % 2 == 0 { 1 } else { -1 };
            prop_assert!(c.numerator.is_palindromic(c.k, sign));
            prop_assert!(RationalSeries::new(c.numerator.clone(), c.weights.clone()).equals(&series));
        }
    }

    #[test]
    fn ledger_difference_is_twice_the_shared_count(chi in -300i64..300, nodes in 0i64..60, shared in 0i64..10) {
        let a = ConifoldLedger::new(chi).resolve_nodes(nodes).current();
        let b = ConifoldLedger::new(chi).resolve_nodes(nodes - shared).current();
        prop_assert_eq!(a - b, 2 * shared);
    }

    #[test]
    fn basket_text_round_trips(n in 0u32..9, m in 0u32..9) {
        let b = standard_basket(n, m);
        prop_assert_eq!(b.to_string().parse::<Basket>().unwrap(), b);
    }
}

#[test]
fn registry_identity() {
    let q3 = QuotientSingularity::new(3, 1, 1, 1).unwrap();
    let q5 = QuotientSingularity::new(5, 1, 1, 3).unwrap();
    let rhs = unproject_term(WeightedPlane::new(1, 1, 3).unwrap(), 5).add(&orbifold_term(&q3).unwrap());
    assert!(orbifold_term(&q5).unwrap().equals(&rhs));
}

#[test]
fn quintic_recognises_as_hypersurface() {
    let p = assemble(InitialData { p1: 5, p2: 15 }, &Basket::new()).unwrap();
    let c = recognize(&p, &RecognitionConfig::default()).unwrap();
    assert_eq!(c.weights.as_slice(), &[1; 5]);
    assert_eq!(c.numerator, IntPolynomial::from_terms([(0, 1), (5, -1)]));
    assert_eq!(c.degree_a3, num_rational::BigRational::from_integer(BigInt::from(5)));
}
