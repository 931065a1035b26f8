//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use homcert::arith::{is_irreducible, upoly_factor, Poly, SeriesTrunc, UniPoly};
use homcert::criteria::{
    check_short_hilbert, classify_main_theorem, good_factorization_search, selmer_factor, short_hilbert_certificates,
    ClauseStatus, Evidence, Property, Verdict,
};
use homcert::groebner::Ring;
use homcert::homology::{koszul_homology_algebra, tor_table, tor_vanishes};
use homcert::linalg::SparseVec;
use homcert::resolution::{
    betti_table, has_k_summand, minimal_resolution, profile, DegreeWindow, GradedModule,
};
use homcert::series::{golod_bounds, hilbert_series, lescot_poincare};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn up(c: &[i64]) -> UniPoly {
    UniPoly::from_i64s(c)
}

fn sq(x: &Poly) -> Poly {
    x.mul(x)
}

// 1 -------------------------------------------------------------------------

fn golod_sandwich() -> Outcome {
    let cases: Vec<(&str, Ring, &str)> = vec![
        ("k[x]/(x^2)", ring(1, |v| vec![sq(&v[0])]), "lower"),
        ("k[x,y]/(x^2,y^2)", ring(2, |v| vec![sq(&v[0]), sq(&v[1])]), "lower"),
        (
            "k[x,y]/(x,y)^2",
            ring(2, |v| vec![sq(&v[0]), v[0].mul(&v[1]), sq(&v[1])]),
            "upper",
        ),
        (
            "k[x,y]/(x^2,xy,y^3)",
            ring(2, |v| vec![sq(&v[0]), v[0].mul(&v[1]), v[1].pow(3)]),
            "",
        ),
    ];
    for (name, r, expect) in cases {
        let b = ok(golod_bounds(&r, 12))?;
        ensure!(
            b.lower.le_coefficientwise(&b.actual) && b.actual.le_coefficientwise(&b.upper),
            "{name}: sandwich fails"
        );
        ensure!(b.actual.order() == 12, "{name}: truncation order {}", b.actual.order());
        match expect {
            "lower" => ensure!(b.at_lower(), "{name}: not at the lower bound"),
            "upper" => {
                let powers: Vec<i64> = (0..=12).map(|i| 1 << i).collect();
                ensure!(b.at_upper(), "{name}: not at the upper bound");
                ensure!(b.actual == SeriesTrunc::from_i64s(&powers), "{name}: {:?}", b.actual);
            }
            _ => {}
        }
    }
    Ok("four rings between the bounds to order 12; CI rings at the lower bound, (x,y)^2 at 1,2,4,...,4096".into())
}

// 2 -------------------------------------------------------------------------

fn short_hilbert_data() -> Outcome {
    let h = homcert::series::HilbertSeries::from_polynomial(up(&[1, 4, 3]));
    let (friendly, persistent) = ok(short_hilbert_certificates("1+4z+3z^2", &h))?;
    ensure!(persistent.verdict == Verdict::Certified, "persistent not certified");
    ensure!(friendly.verdict == Verdict::Inconclusive, "friendly not inconclusive");
    ensure!(
        persistent.statement.as_deref() == Some("the ring is Tor-persistent"),
        "statement {:?}",
        persistent.statement
    );
    let Some(Evidence::ShortHilbert {
        e,
        s,
        discriminant,
        discriminant_sqrt,
        uv,
        ..
    }) = persistent.evidence.first()
    else {
        return Err("no short Hilbert evidence".into());
    };
    ensure!((*e, *s, *discriminant) == (4, 3, 4), "e={e} s={s} disc={discriminant}");
    ensure!(*discriminant_sqrt == Some(2), "sqrt {discriminant_sqrt:?}");
    ensure!(*uv == Some((1, 3)), "uv {uv:?}");
    // a ring with this Hilbert series
    let gap = ring(4, |v| {
        let f = field();
        vec![
            v[0].mul(&v[2]).scale(&f.from_i64(2)).add(&v[1].mul(&v[2])),
            v[0].mul(&v[3]).add(&v[1].mul(&v[3])),
            v[2].mul(&v[3]),
            sq(&v[0]),
            sq(&v[1]),
            sq(&v[2]),
            sq(&v[3]),
        ]
    });
    let hr = ok(hilbert_series(&GradedModule::ring_module(&gap)))?;
    ensure!(hr.numerator == up(&[1, 4, 3]) && hr.pole_order == 0, "ring Hilbert series {hr:?}");
    let (f2, p2) = ok(check_short_hilbert(&gap))?;
    ensure!(p2.is_certified() && !f2.is_certified(), "ring verdicts differ from the data verdicts");
    Ok("1+4z+3z^2: persistent certified, friendly inconclusive; e=4, s=3, e^2-4s=4=2^2; also on a ring with that series".into())
}

// 3 -------------------------------------------------------------------------

fn good_factorizations() -> Outcome {
    let sq1 = up(&[1, 1]).pow(2);
    let fixtures: [(&str, &[i64]); 4] = [
        ("D2", &[1, -2, -2, 5, -2, -2, 1]),
        ("E3", &[1, -2, -2, 5, -2, -4, 1, 1]),
        ("F4", &[1, -2, -2, 5, -2, -7, 1, 4, 0, -1]),
        ("F*", &[1, -2, -2, 5, -3, -9, 1, 2, -1]),
    ];
    for (name, p) in fixtures {
        let d = up(p).mul(&sq1);
        let g = ok(good_factorization_search(&d))?.ok_or(format!("{name}: no good factorization"))?;
        ok(g.verify(&homcert::arith::default_tolerance()))?;
        ensure!(g.r.is_one(), "{name}: r = {}", g.r);
        ensure!(g.p.mul(&g.q).mul(&g.r) == d, "{name}: product");
        if name == "F*" {
            ensure!(g.q == up(&[1, 1]).pow(5), "{name}: q = {}", g.q);
            ensure!(g.p == up(&[1, -5, 10, -11, 5, -1]), "{name}: p = {}", g.p);
        } else {
            ensure!(g.q == sq1, "{name}: q = {}", g.q);
            ensure!(g.p == up(p), "{name}: p = {}", g.p);
        }
        ensure!(is_irreducible(&g.p), "{name}: p reducible");
        ensure!(ok(upoly_factor(&g.p))?.is_irreducible(), "{name}: factorizer splits p");
    }
    Ok("D2, E3, F4 with q=(1+z)^2 and F* with q=(1+z)^5; r=1 and p irreducible in every case".into())
}

// 4 -------------------------------------------------------------------------

fn selmer_dichotomy() -> Outcome {
    let cyclo = up(&[1, -1, 1]);
    for m in 2..=20u32 {
        let rep = ok(selmer_factor(m))?;
        let f = up(&[1, -1]).pow(m).sub(&UniPoly::z());
        let fa = ok(upoly_factor(&f))?;
        ensure!(fa.expand() == f, "m={m}: factorization does not expand back");
        ensure!(rep.irreducible == fa.is_irreducible(), "m={m}: selmer and factorizer disagree");
        ensure!(rep.irreducible == (m % 6 != 5), "m={m}: irreducible = {}", rep.irreducible);
        if m % 6 == 5 {
            ensure!(f.div_exact(&cyclo).is_some(), "m={m}: z^2-z+1 does not divide");
        } else {
            ensure!(f.div_exact(&cyclo).is_none(), "m={m}: z^2-z+1 divides");
        }
    }
    Ok("2 <= m <= 20: irreducible iff m != 5 mod 6; z^2-z+1 divides for m = 5, 11, 17".into())
}

// 5 -------------------------------------------------------------------------

fn third_syzygy() -> Outcome {
    let p4 = ring(4, |_| Vec::new());
    let k = GradedModule::residue_field(&p4);
    let res = ok(minimal_resolution(&k, 4))?;
    let m = ok(res.syzygy_module(3))?;
    let mres = ok(minimal_resolution(&m, 6))?;
    ensure!(mres.projective_dimension() == Some(1), "pdim {:?}", mres.projective_dimension());
    ensure!(ok(betti_table(&m, 3))?.totals()[..2] == [4, 1], "Betti numbers");
    let w = ok(DegreeWindow::new(0, 10))?;
    let t = ok(tor_table(&m, &m, 6, Some(w)))?;
    ensure!(t.ranks[0] > 0, "Tor_0 vanishes");
    ensure!(t.ranks[1..].iter().all(|&r| r == 0), "Tor ranks {:?}", t.ranks);
    ensure!(ok(tor_vanishes(&m, &m, 1))?, "Tor_1 nonzero as a module");
    Ok(format!(
        "pdim 1; Tor_0 has {} basis elements in degrees 0..10, Tor_1..Tor_6 vanish (Tor_1 exactly)",
        t.ranks[0]
    ))
}

// 6 -------------------------------------------------------------------------

fn lescot_formula() -> Outcome {
    let r = ring(2, |v| vec![sq(&v[0]), sq(&v[1])]);
    ensure!(r.graded_piece_dim(3) == 0, "m^3 != 0");
    let x = r.var(0);
    let y = r.var(1);
    for gen in [x.clone(), x.add(&y)] {
        let m = ok(GradedModule::quotient(&r, &[gen.clone()]))?;
        // m^2 M = 0 and no syzygy has k as a summand
        ensure!(m.dim(2) == 0, "m^2 M != 0");
        let res = ok(minimal_resolution(&m, 11))?;
        ensure!(!ok(has_k_summand(&m))?, "k splits off M");
        for i in 1..=4 {
            let syz = ok(res.syzygy_module(i))?;
            ensure!(!ok(has_k_summand(&syz))?, "k splits off syzygy {i}");
        }
        let hm = ok(hilbert_series(&m))?;
        let hr = ok(hilbert_series(&GradedModule::ring_module(&r)))?;
        let predicted = ok(lescot_poincare(&hm, &hr, 10))?;
        let betti: Vec<BigInt> = (0..=10).map(|i| BigInt::from(res.rank(i))).collect();
        ensure!(predicted.coeffs() == betti.as_slice(), "{betti:?} vs {predicted:?}");
    }
    Ok("R/(x) and R/(x+y) over k[x,y]/(x^2,y^2): exceptional, beta_0..beta_10 = H_M(-z)/H_R(-z)".into())
}

// 7 -------------------------------------------------------------------------

fn sign(i: usize, j: usize) -> bool {
    i * j % 2 == 1
}

fn koszul_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = field();
    let mut gorenstein_checked = 0;
    for trial in 0..25 {
        let (r, only_powers) = random_artinian(&mut rng, 3);
        let b = ok(koszul_homology_algebra(&r))?;
        let deg: Vec<usize> = b.classes().iter().map(|c| c.hom_degree).collect();
        let len = b.len();
        for a in 0..len {
            for c in 0..len {
                let ab = b.product(a, c);
                let ba = b.product(c, a);
                let expect: SparseVec = if sign(deg[a], deg[c]) {
                    ba.iter().map(|(k, v)| (*k, v.neg())).collect()
                } else {
                    ba.clone()
                };
                ensure!(*ab == expect, "trial {trial} ({r}): graded commutativity at ({a},{c})");
                ensure!(
                    ab.iter().all(|(k, _)| deg[*k] == deg[a] + deg[c]),
                    "trial {trial}: product leaves H_{}",
                    deg[a] + deg[c]
                );
                if a == c && deg[a] % 2 == 1 {
                    ensure!(ab.is_empty(), "trial {trial}: odd class squares to nonzero");
                }
            }
        }
        // random odd elements square to zero; products are associative and bilinear
        for i in (1..deg.iter().max().copied().unwrap_or(0) + 1).step_by(2) {
            let u: SparseVec = b
                .classes_in(i)
                .into_iter()
                .map(|k| (k, f.from_i64(rng.gen_range(1..P as i64))))
                .collect();
            ensure!(b.multiply(&u, &u).is_empty(), "trial {trial}: odd element squares to nonzero");
        }
        let rand_elem = |rng: &mut ChaCha8Rng| -> SparseVec {
            let mut v = Vec::new();
            for k in 0..len {
                if rng.gen_bool(0.5) {
                    v.push((k, f.from_i64(rng.gen_range(1..P as i64))));
                }
            }
            v
        };
        for _ in 0..4 {
            let (u, v, w) = (rand_elem(&mut rng), rand_elem(&mut rng), rand_elem(&mut rng));
            let left = b.multiply(&b.multiply(&u, &v), &w);
            let right = b.multiply(&u, &b.multiply(&v, &w));
            ensure!(left == right, "trial {trial}: associativity");
            let mut vw: BTreeMap<usize, _> = v.iter().cloned().collect();
            for (k, c) in &w {
                let e = vw.entry(*k).or_insert_with(|| f.zero());
                *e = e.add(c);
            }
            let vw: SparseVec = vw.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let mut sum: BTreeMap<usize, _> = b.multiply(&u, &v).into_iter().collect();
            for (k, c) in b.multiply(&u, &w) {
                let e = sum.entry(k).or_insert_with(|| f.zero());
                *e = e.add(&c);
            }
            let sum: SparseVec = sum.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            ensure!(b.multiply(&u, &vw) == sum, "trial {trial}: bilinearity");
        }
        if only_powers {
            ensure!(b.top_pairing_nondegenerate(), "trial {trial}: complete intersection pairing degenerate");
            gorenstein_checked += 1;
        }
    }
    let ci = ring(2, |v| vec![sq(&v[0]), sq(&v[1])]);
    let b = ok(koszul_homology_algebra(&ci))?;
    ensure!(b.ranks() == vec![1, 2, 1], "ranks {:?}", b.ranks());
    ensure!(b.top_pairing_nondegenerate(), "k[x,y]/(x^2,y^2): pairing degenerate");
    Ok(format!(
        "25 random rings satisfy the laws; top pairing nondegenerate on k[x,y]/(x^2,y^2) and {gorenstein_checked} random complete intersections"
    ))
}

// 8 -------------------------------------------------------------------------

fn nonzero(m: &BTreeMap<i32, usize>) -> BTreeMap<i32, usize> {
    m.iter().filter(|(_, v)| **v > 0).map(|(k, v)| (*k, *v)).collect()
}

struct Instance {
    twists: Vec<i32>,
    relations: Vec<Elem>,
    module: GradedModule,
}

fn random_module(rng: &mut ChaCha8Rng, r: &Ring) -> Instance {
    let n = r.nvars();
    if rng.gen_bool(0.25) {
        return Instance {
            twists: vec![0],
            relations: residue_relations(r),
            module: GradedModule::residue_field(r),
        };
    }
    let rows = rng.gen_range(1..=2);
    let cols = rng.gen_range(1..=2);
    let c = random_linear_columns(rng, n, rows, cols);
    let module = GradedModule::from_rows(r.clone(), &rows_of(&c, rows, n)).unwrap();
    Instance {
        twists: vec![0; rows],
        relations: c,
        module,
    }
}

fn tor_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    let mut nonzero_higher = 0;
    while done < 50 {
        let (r, _) = random_artinian(&mut rng, 3);
        if r.length().unwrap() > 12 {
            continue;
        }
        let m = random_module(&mut rng, &r);
        let n = random_module(&mut rng, &r);
        let lib = ok(tor_table(&m.module, &n.module, 4, None))?;
        let swapped = ok(tor_table(&n.module, &m.module, 4, None))?;
        let res_m = dense_resolution(&r, &m.twists, &m.relations, 5);
        let res_n = dense_resolution(&r, &n.twists, &n.relations, 5);
        for i in 0..=4 {
            let oracle = dense_tor(&r, &res_m, &n.twists, &n.relations, i);
            let oracle_swapped = dense_tor(&r, &res_n, &m.twists, &m.relations, i);
            ensure!(
                nonzero(&lib.graded[i]) == oracle,
                "instance {done} over {r}: Tor_{i} {:?} vs oracle {:?}",
                lib.graded[i],
                oracle
            );
            ensure!(oracle == oracle_swapped, "instance {done}: oracle not balanced at Tor_{i}");
            ensure!(
                nonzero(&swapped.graded[i]) == oracle,
                "instance {done}: Tor_{i} not symmetric"
            );
            if i > 0 && !oracle.is_empty() {
                nonzero_higher += 1;
            }
        }
        done += 1;
    }
    Ok(format!(
        "50 instances (dim R <= 12, i <= 4) agree degree by degree; symmetry and balance hold; {nonzero_higher} nonzero higher Tor groups compared"
    ))
}

// 9 -------------------------------------------------------------------------

#[derive(Debug, PartialEq)]
struct Row {
    edim: usize,
    dim: usize,
    depth: usize,
    mult: u64,
    socle: Option<usize>,
    gorenstein: bool,
    ci: bool,
}

fn row(edim: usize, dim: usize, depth: usize, mult: u64, socle: Option<usize>, gorenstein: bool, ci: bool) -> Row {
    Row {
        edim,
        dim,
        depth,
        mult,
        socle,
        gorenstein,
        ci,
    }
}

fn satisfied(c: &homcert::criteria::Certificate, key: &str) -> bool {
    c.evidence.iter().any(|e| match e {
        Evidence::MainTheoremClauses { clauses } => clauses
            .iter()
            .any(|cl| cl.clause == key && cl.status == ClauseStatus::Satisfied),
        _ => false,
    })
}

fn profiles_and_classification() -> Outcome {
    let table: Vec<(&str, Ring, Row)> = vec![
        ("k[x]/(x^2)", ring(1, |v| vec![sq(&v[0])]), row(1, 0, 0, 2, Some(1), true, true)),
        (
            "k[x,y]/(x^2,y^2)",
            ring(2, |v| vec![sq(&v[0]), sq(&v[1])]),
            row(2, 0, 0, 4, Some(1), true, true),
        ),
        (
            "k[x,y]/(x,y)^2",
            ring(2, |v| vec![sq(&v[0]), v[0].mul(&v[1]), sq(&v[1])]),
            row(2, 0, 0, 3, Some(2), false, false),
        ),
        (
            "k[x,y]/(x^2,xy,y^3)",
            ring(2, |v| vec![sq(&v[0]), v[0].mul(&v[1]), v[1].pow(3)]),
            row(2, 0, 0, 4, Some(2), false, false),
        ),
        (
            "k[x,y,z]/(x^2,xy)",
            ring(3, |v| vec![sq(&v[0]), v[0].mul(&v[1])]),
            row(3, 2, 1, 1, None, false, false),
        ),
        ("k[x]/(x^7)", ring(1, |v| vec![v[0].pow(7)]), row(1, 0, 0, 7, Some(1), true, true)),
    ];
    for (name, r, expect) in &table {
        let p = ok(profile(r))?;
        let got = row(p.edim, p.dim, p.depth, p.multiplicity, p.socle_dim, p.is_gorenstein, p.is_ci);
        ensure!(&got == expect, "{name}: {got:?}");
        ensure!(p.codepth == p.edim - p.depth, "{name}: codepth");
    }
    let ci = classify_main_theorem(&table[1].1).map_err(|e| e.to_string())?;
    ensure!(
        ci.clause.as_deref() == Some("main/complete-intersection"),
        "k[x,y]/(x^2,y^2): {:?}",
        ci.clause
    );
    let low = classify_main_theorem(&table[4].1).map_err(|e| e.to_string())?;
    ensure!(
        low.clause.as_deref() == Some("main/codepth-at-most-3"),
        "k[x,y,z]/(x^2,xy): {:?}",
        low.clause
    );
    let septic = classify_main_theorem(&table[5].1).map_err(|e| e.to_string())?;
    ensure!(
        septic.is_certified()
            && septic.property == Property::TorPersistent
            && satisfied(&septic, "complete-intersection")
            && satisfied(&septic, "cm-multiplicity-at-most-7"),
        "k[x]/(x^7): {:?}",
        septic.clause
    );
    Ok("six fixture profiles match; CI clause for k[x,y]/(x^2,y^2), codepth clause for k[x,y,z]/(x^2,xy), CI and multiplicity clauses for k[x]/(x^7)".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Poincare bounds sandwich", golod_sandwich),
        ("short Hilbert series 1+4z+3z^2", short_hilbert_data),
        ("good factorizations of the four denominators", good_factorizations),
        ("Selmer dichotomy", selmer_dichotomy),
        ("third syzygy of k over k[x1..x4]", third_syzygy),
        ("Poincare series of exceptional modules", lescot_formula),
        ("Koszul homology algebra laws", koszul_laws),
        ("Tor against a dense oracle", tor_oracle),
        ("ring profiles and structural classification", profiles_and_classification),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("acceptance {}: PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {}: FAIL  {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
