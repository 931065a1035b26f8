mod common;

use common::*;
use homcert::groebner::GradedRing;
use homcert::homology::{is_regular_sequence, koszul_homology, tor_table};
use homcert::resolution::{betti_table, minimal_resolution, DegreeWindow, GradedModule};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_module(rng: &mut ChaCha8Rng, r: &homcert::groebner::Ring) -> GradedModule {
    let n = r.nvars();
    let rows = rng.gen_range(1..=2);
    let cols = rng.gen_range(1..=2);
    let c = random_linear_columns(rng, n, rows, cols);
    GradedModule::from_rows(r.clone(), &rows_of(&c, rows, n)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tor_shifts_along_syzygies(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (r, _) = random_artinian(&mut rng, 3);
        let m = random_module(&mut rng, &r);
        let n = random_module(&mut rng, &r);
        let t = tor_table(&m, &n, 4, None).unwrap();
        let omega = minimal_resolution(&m, 2).unwrap().syzygy_module(1).unwrap();
        let t1 = tor_table(&omega, &n, 3, None).unwrap();
        for i in 2..=4 {
            prop_assert_eq!(t.ranks[i], t1.ranks[i - 1], "Tor_{}", i);
            prop_assert_eq!(&t.graded[i], &t1.graded[i - 1]);
        }
        let s = tor_table(&n, &m, 4, None).unwrap();
        prop_assert_eq!(&t.ranks, &s.ranks);
    }

    #[test]
    fn koszul_homology_of_regular_sequences(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let q = GradedRing::polynomial(field(), n);
        let c = rng.gen_range(1..=n);
        let f: Vec<_> = (0..c)
            .map(|_| {
                let d = rng.gen_range(1..=2);
                random_form(&mut rng, n, d)
            })
            .collect();
        prop_assume!(f.iter().all(|p| !p.is_zero()));
        prop_assume!(is_regular_sequence(&q, &f).unwrap());
        let w = DegreeWindow::new(0, 8).unwrap();
        let h = koszul_homology(&q, &f, Some(w)).unwrap();
        for (i, hi) in h.iter().enumerate().skip(1) {
            prop_assert!(hi.values().all(|&v| v == 0), "H_{} = {:?}", i, hi);
        }
        let mut gens = q.ideal().generators().to_vec();
        gens.extend(f.iter().cloned());
        let quotient = GradedRing::new(field(), q.names().to_vec(), gens).unwrap();
        for d in 0..=8 {
            prop_assert_eq!(h[0].get(&d).copied().unwrap_or(0), quotient.graded_piece_dim(d), "H_0 in degree {}", d);
        }
    }
}

#[test]
fn non_regular_sequences_have_first_homology() {
    // x, x over k[x, y]
    let q = GradedRing::polynomial(field(), 2);
    let x = q.var(0);
    assert!(!is_regular_sequence(&q, &[x.clone(), x.clone()]).unwrap());
    let h = koszul_homology(&q, &[x.clone(), x], Some(DegreeWindow::new(0, 6).unwrap())).unwrap();
    assert!(h[1].values().any(|&v| v > 0));
}

#[test]
fn rigidity_fixture() {
    // Q = k[x, y], Q' = Q/(x^2), N = Q' ⊕ Q'(-1): Tor^{Q'}_i(N, N) = 0 for i >= 1,
    // pdim_Q N = 1, and the Q-Betti numbers of N ⊗ N are constant from index 2 on.
    let q = GradedRing::polynomial(field(), 2);
    let x2 = q.var(0).pow(2);
    let qp = ring(2, |v| vec![v[0].pow(2)]);
    let n = GradedModule::cokernel(qp.clone(), vec![0, 1], Vec::new()).unwrap();
    let w = DegreeWindow::new(0, 8).unwrap();
    let t = tor_table(&n, &n, 4, Some(w)).unwrap();
    assert!(t.ranks[1..].iter().all(|&r| r == 0), "{:?}", t.ranks);
    let over_q = |twists: Vec<i32>| {
        let rels = (0..twists.len())
            .map(|j| homcert::groebner::FreeModElem::single(j, x2.clone()))
            .collect();
        GradedModule::cokernel(q.clone(), twists, rels).unwrap()
    };
    assert_eq!(betti_table(&over_q(vec![0, 1]), 3).unwrap().projective_dimension(), Some(1));
    // N ⊗_{Q'} N = Q' ⊕ Q'(-1)^2 ⊕ Q'(-2)
    let tensor = betti_table(&over_q(vec![0, 1, 1, 2]), 6).unwrap().totals();
    assert_eq!(tensor[..2], [4, 4]);
    assert!(tensor[2..].windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn dense_oracle_reproduces_betti_numbers_of_k() {
    let r = ring(2, |v| vec![v[0].pow(2), v[0].mul(&v[1]), v[1].pow(2)]);
    let res = dense_resolution(&r, &[0], &residue_relations(&r), 5);
    for i in 0..=4 {
        let t = dense_tor(&r, &res, &[0], &residue_relations(&r), i);
        assert_eq!(t.values().sum::<usize>(), 1 << i);
        assert_eq!(t.keys().copied().collect::<Vec<_>>(), vec![i as i32]);
    }
}
