mod common;

use common::*;
use homcert::groebner::Ring;
use homcert::resolution::{has_k_summand, minimal_resolution, profile, GradedModule};
use homcert::series::{golod_bounds, hilbert_series, lescot_poincare, multiplicity};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<Ring> {
    vec![
        ring(1, |v| vec![v[0].pow(2)]),
        ring(2, |v| vec![v[0].pow(2), v[1].pow(2)]),
        ring(2, |v| vec![v[0].pow(2), v[0].mul(&v[1]), v[1].pow(2)]),
        ring(2, |v| vec![v[0].pow(2), v[0].mul(&v[1]), v[1].pow(3)]),
        ring(3, |v| vec![v[0].pow(2), v[0].mul(&v[1])]),
        ring(1, |v| vec![v[0].pow(7)]),
        ring(3, |v| vec![v[0].mul(&v[1]).sub(&v[2].pow(2))]),
        ring(2, |_| Vec::new()),
    ]
}

#[test]
fn hilbert_series_matches_standard_monomials_on_fixtures() {
    for r in fixtures() {
        let h = hilbert_series(&GradedModule::ring_module(&r)).unwrap();
        let coeffs = h.expand(15);
        for (d, c) in coeffs.iter().enumerate() {
            assert_eq!(*c, BigInt::from(r.graded_piece_dim(d as i32)), "{r} degree {d}");
        }
        assert_eq!(multiplicity(&r).unwrap(), h.multiplicity());
    }
}

#[test]
fn bounds_and_complete_intersections_on_fixtures() {
    for r in fixtures() {
        let b = golod_bounds(&r, 10).unwrap();
        assert!(b.lower.le_coefficientwise(&b.actual), "{r}");
        assert!(b.actual.le_coefficientwise(&b.upper), "{r}");
        assert_eq!(b.at_lower(), profile(&r).unwrap().is_ci, "{r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bounds_hold_on_random_rings(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (r, only_powers) = random_artinian(&mut rng, 3);
        let b = golod_bounds(&r, 8).unwrap();
        prop_assert!(b.lower.le_coefficientwise(&b.actual));
        prop_assert!(b.actual.le_coefficientwise(&b.upper));
        let p = profile(&r).unwrap();
        prop_assert_eq!(b.at_lower(), p.is_ci);
        prop_assert_eq!(p.is_ci, p.num_relations == p.edim - p.dim);
        if only_powers {
            prop_assert!(p.is_ci);
        }
    }
}

/// Random short rings `k[x_1..x_n]/(m^3 + quadrics)` and cyclic modules by
/// linear forms; whenever `M` is exceptional its Betti numbers follow
/// `H_M(-z)/H_R(-z)`.
#[test]
fn exceptional_modules_follow_the_hilbert_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut exceptional = 0;
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let mut gens: Vec<_> = homcert::arith::Monomial::all_of_degree(n, 3)
            .into_iter()
            .map(|m| homcert::arith::Poly::monomial(m, field().one()))
            .collect();
        for _ in 0..rng.gen_range(0..=n) {
            gens.push(random_form(&mut rng, n, 2));
        }
        let r = homcert::groebner::GradedRing::new(field(), homcert::arith::default_var_names(n), gens).unwrap();
        let k = rng.gen_range(1..n);
        let lin: Vec<_> = (0..k).map(|_| random_form(&mut rng, n, 1)).collect();
        let m = GradedModule::quotient(&r, &lin).unwrap();
        if m.is_zero() || m.dim(2) != 0 {
            continue;
        }
        let res = minimal_resolution(&m, 9).unwrap();
        let mut is_exceptional = !has_k_summand(&m).unwrap();
        for i in 1..=4 {
            is_exceptional &= !has_k_summand(&res.syzygy_module(i).unwrap()).unwrap();
        }
        if !is_exceptional {
            continue;
        }
        exceptional += 1;
        let hm = hilbert_series(&m).unwrap();
        let hr = hilbert_series(&GradedModule::ring_module(&r)).unwrap();
        let predicted = lescot_poincare(&hm, &hr, 8).unwrap();
        let betti: Vec<BigInt> = (0..=8).map(|i| BigInt::from(res.rank(i))).collect();
        assert_eq!(predicted.coeffs(), betti.as_slice(), "{r} / {m:?}");
    }
    assert!(exceptional >= 5, "only {exceptional} exceptional modules generated");
}

#[test]
fn lescot_series_examples() {
    use homcert::arith::UniPoly;
    use homcert::series::HilbertSeries;
    let h = |c: &[i64]| HilbertSeries::from_polynomial(UniPoly::from_i64s(c));
    let ones = lescot_poincare(&h(&[1, 1]), &h(&[1, 2, 1]), 6).unwrap();
    assert_eq!(ones.coeffs(), vec![BigInt::from(1); 7].as_slice());
    let powers = lescot_poincare(&h(&[1]), &h(&[1, 2]), 5).unwrap();
    let expect: Vec<BigInt> = (0..6).map(|i| BigInt::from(1 << i)).collect();
    assert_eq!(powers.coeffs(), expect.as_slice());
}
