//! Helpers shared by the integration tests: ring builders, seeded random
//! instances and a dense Tor oracle that only uses normal forms of the ring.

#![allow(dead_code)]

use std::collections::BTreeMap;

use homcert::arith::{default_var_names, Coef, Field, Monomial, Poly};
use homcert::groebner::{GradedRing, Ring};
use rand::Rng;

pub const P: u64 = 32003;

pub fn field() -> Field {
    Field::Prime(P)
}

pub fn vars(n: usize) -> Vec<Poly> {
    (0..n).map(|i| Poly::var(n, field(), i)).collect()
}

pub fn ring(n: usize, gens: impl Fn(&[Poly]) -> Vec<Poly>) -> Ring {
    GradedRing::new(field(), default_var_names(n), gens(&vars(n))).unwrap()
}

pub fn ring_over(f: Field, n: usize, gens: impl Fn(&[Poly]) -> Vec<Poly>) -> Ring {
    let v: Vec<Poly> = (0..n).map(|i| Poly::var(n, f, i)).collect();
    GradedRing::new(f, default_var_names(n), gens(&v)).unwrap()
}

pub fn random_form(rng: &mut impl Rng, n: usize, degree: u32) -> Poly {
    let mut terms = Vec::new();
    for m in Monomial::all_of_degree(n, degree) {
        if rng.gen_bool(0.6) {
            terms.push((m, field().from_i64(rng.gen_range(1..P as i64))));
        }
    }
    Poly::from_terms(n, field(), terms)
}

/// Pure powers of degree 2 or 3 in every variable plus up to two random
/// forms of degree 2 or 3; the ring is artinian.
pub fn random_artinian(rng: &mut impl Rng, max_vars: usize) -> (Ring, bool) {
    let n = rng.gen_range(1..=max_vars);
    let v = vars(n);
    let mut gens: Vec<Poly> = v.iter().map(|x| x.pow(rng.gen_range(2..=3))).collect();
    let extra = rng.gen_range(0..=2);
    for _ in 0..extra {
        let d = rng.gen_range(2..=3);
        let f = random_form(rng, n, d);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    let only_powers = gens.len() == n;
    (GradedRing::new(field(), default_var_names(n), gens).unwrap(), only_powers)
}

/// A presentation matrix with entries that are zero or random linear forms,
/// given column by column.
pub fn random_linear_columns(rng: &mut impl Rng, n: usize, rows: usize, cols: usize) -> Vec<Vec<Poly>> {
    (0..cols)
        .map(|_| {
            (0..rows)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Poly::zero(n, field())
                    } else {
                        random_form(rng, n, 1)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn rows_of(cols: &[Vec<Poly>], rows: usize, n: usize) -> Vec<Vec<Poly>> {
    (0..rows)
        .map(|j| {
            cols.iter()
                .map(|c| c.get(j).cloned().unwrap_or_else(|| Poly::zero(n, field())))
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_P.

fn inv(a: u64) -> u64 {
    let (mut b, mut e, mut r) = (a % P, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Row echelon form built incrementally.
#[derive(Default)]
pub struct Span {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    fn reduce(&self, v: &mut [u64]) {
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[p]);
        for x in v.iter_mut() {
            *x = *x * s % P;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank(vs: &[Vec<u64>]) -> usize {
    let mut s = Span::default();
    vs.iter().filter(|v| s.insert(v)).count()
}

/// Kernel of the map sending the `j`-th basis vector to `cols[j]`.
pub fn nullspace(cols: &[Vec<u64>], target_dim: usize) -> Vec<Vec<u64>> {
    let n = cols.len();
    let mut s = Span::default();
    let mut out = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        let mut v = c.clone();
        v.resize(target_dim, 0);
        v.extend((0..n).map(|k| u64::from(k == j)));
        s.insert(&v);
    }
    for (p, row) in &s.rows {
        if *p >= target_dim {
            out.push(row[target_dim..].to_vec());
        }
    }
    out
}

fn val(c: &Coef) -> u64 {
    match c {
        Coef::Mod(v, _) => *v,
        Coef::Rat(_) => panic!("oracle works over F_p"),
    }
}

// ---------------------------------------------------------------------------
// Graded free modules over an artinian ring, elements as polynomial vectors.

pub type Elem = Vec<Poly>;

fn dim_free(r: &Ring, twists: &[i32], d: i32) -> usize {
    twists.iter().map(|t| r.graded_piece_dim(d - t)).sum()
}

fn coords(r: &Ring, twists: &[i32], v: &Elem, d: i32) -> Vec<u64> {
    let mut out = Vec::new();
    for (j, t) in twists.iter().enumerate() {
        let len = r.graded_piece_dim(d - t);
        let mut part = vec![0; len];
        if len > 0 && !v[j].is_zero() {
            for (i, c) in r.coords(&v[j], d - t) {
                part[i] = val(&c);
            }
        }
        out.extend(part);
    }
    out
}

fn from_coords(r: &Ring, twists: &[i32], v: &[u64], d: i32) -> Elem {
    let mut pos = 0;
    twists
        .iter()
        .map(|t| {
            let len = r.graded_piece_dim(d - t);
            let sv = v[pos..pos + len]
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| (i, field().from_i64(*x as i64)))
                .collect();
            pos += len;
            r.from_coords(&sv, d - t)
        })
        .collect()
}

fn scale(r: &Ring, v: &Elem, m: &Monomial) -> Elem {
    let mp = Poly::monomial(m.clone(), field().one());
    v.iter().map(|p| r.mul(p, &mp)).collect()
}

/// Coordinates of every `m * g` of degree `d`, `m` a standard monomial.
fn multiples(r: &Ring, twists: &[i32], gens: &[(i32, Elem)], d: i32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for (e, g) in gens {
        if *e > d {
            continue;
        }
        for m in &r.std_basis(d - e).monos {
            out.push(coords(r, twists, &scale(r, g, m), d));
        }
    }
    out
}

fn top(r: &Ring) -> i32 {
    r.top_degree().expect("artinian ring") as i32
}

fn degree_range(r: &Ring, twists: &[i32]) -> std::ops::RangeInclusive<i32> {
    let lo = twists.iter().copied().min().unwrap_or(0);
    let hi = twists.iter().copied().max().unwrap_or(-1) + top(r);
    lo..=hi
}

/// Minimal generators among `cands`, taken degree by degree.
fn minimal_gens(r: &Ring, twists: &[i32], mut cands: Vec<(i32, Elem)>) -> Vec<(i32, Elem)> {
    cands.sort_by_key(|(d, _)| *d);
    let mut chosen: Vec<(i32, Elem)> = Vec::new();
    let mut i = 0;
    while i < cands.len() {
        let d = cands[i].0;
        let mut span = Span::default();
        for v in multiples(r, twists, &chosen, d) {
            span.insert(&v);
        }
        while i < cands.len() && cands[i].0 == d {
            if span.insert(&coords(r, twists, &cands[i].1, d)) {
                chosen.push(cands[i].clone());
            }
            i += 1;
        }
    }
    chosen
}

/// A minimal free resolution computed with dense linear algebra alone:
/// `maps[i]` lists the images of the basis of `F_i` in `F_{i-1}`.
pub struct DenseResolution {
    pub twists: Vec<Vec<i32>>,
    pub maps: Vec<Vec<(i32, Elem)>>,
}

pub fn dense_resolution(r: &Ring, twists: &[i32], relations: &[Elem], len: usize) -> DenseResolution {
    let rels: Vec<(i32, Elem)> = relations
        .iter()
        .filter_map(|c| {
            let d = c
                .iter()
                .zip(twists)
                .find_map(|(p, t)| r.normal_form(p).degree().map(|e| e as i32 + t))?;
            Some((d, c.clone()))
        })
        .collect();
    let mut out = DenseResolution {
        twists: vec![twists.to_vec()],
        maps: vec![Vec::new()],
    };
    let mut gens = minimal_gens(r, twists, rels);
    for i in 1..=len {
        out.twists.push(gens.iter().map(|(d, _)| *d).collect());
        out.maps.push(gens);
        if i == len {
            break;
        }
        let (src, tgt) = (&out.twists[i], &out.twists[i - 1]);
        let cols = &out.maps[i];
        let mut cands = Vec::new();
        for d in degree_range(r, src) {
            let images: Vec<Vec<u64>> = cols
                .iter()
                .zip(src)
                .flat_map(|((_, c), t)| {
                    r.std_basis(d - t)
                        .monos
                        .iter()
                        .map(|m| coords(r, tgt, &scale(r, c, m), d))
                        .collect::<Vec<_>>()
                })
                .collect();
            for k in nullspace(&images, dim_free(r, tgt, d)) {
                cands.push((d, from_coords(r, src, &k, d)));
            }
        }
        gens = minimal_gens(r, src, cands);
    }
    out
}

/// `dim_k Tor_i(M, N)_d` for every degree `d`, as the homology of `F ⊗ N`
/// with `N = coker(relations_n)`, each chain group written as a free module
/// modulo the image of `F_i ⊗ relations`.
pub fn dense_tor(
    r: &Ring,
    res: &DenseResolution,
    n_twists: &[i32],
    n_relations: &[Elem],
    i: usize,
) -> BTreeMap<i32, usize> {
    let nr = n_twists.len();
    let n_rels: Vec<(i32, Elem)> = n_relations
        .iter()
        .filter_map(|c| {
            let d = c
                .iter()
                .zip(n_twists)
                .find_map(|(p, t)| r.normal_form(p).degree().map(|e| e as i32 + t))?;
            Some((d, c.clone()))
        })
        .collect();
    let zero = Poly::zero(r.nvars(), field());
    let tw = |k: usize| -> Vec<i32> {
        res.twists[k]
            .iter()
            .flat_map(|a| n_twists.iter().map(move |b| a + b))
            .collect()
    };
    // F_k ⊗ relations
    let boundary = |k: usize| -> Vec<(i32, Elem)> {
        let rk = res.twists[k].len();
        let mut out = Vec::new();
        for (j, a) in res.twists[k].iter().enumerate() {
            for (e, rel) in &n_rels {
                let mut v = vec![zero.clone(); rk * nr];
                for l in 0..nr {
                    v[j * nr + l] = rel[l].clone();
                }
                out.push((a + e, v));
            }
        }
        out
    };
    // images of e_j ⊗ f_l under ∂_k ⊗ 1
    let diff = |k: usize| -> Vec<(i32, Elem)> {
        if k == 0 || k >= res.maps.len() {
            return Vec::new();
        }
        let rt = res.twists[k - 1].len();
        let mut out = Vec::new();
        for (d, col) in &res.maps[k] {
            for (l, b) in n_twists.iter().enumerate() {
                let mut v = vec![zero.clone(); rt * nr];
                for (j, p) in col.iter().enumerate() {
                    v[j * nr + l] = p.clone();
                }
                out.push((d + b, v));
            }
        }
        out
    };
    assert!(i + 1 < res.maps.len(), "resolution too short for Tor_{i}");
    let ti = tw(i);
    let mut out = BTreeMap::new();
    for d in degree_range(r, &ti) {
        let dim_c = dim_free(r, &ti, d);
        let mut cycles_rank = dim_c;
        if i > 0 {
            let prev = tw(i - 1);
            let b_prev = multiples(r, &prev, &boundary(i - 1), d);
            let mut both = multiples(r, &prev, &diff(i), d);
            both.extend(b_prev.iter().cloned());
            cycles_rank = dim_c + rank(&b_prev) - rank(&both);
        }
        let mut bounds = multiples(r, &ti, &diff(i + 1), d);
        bounds.extend(multiples(r, &ti, &boundary(i), d));
        let h = cycles_rank - rank(&bounds);
        if h > 0 {
            out.insert(d, h);
        }
    }
    out
}

pub fn residue_relations(r: &Ring) -> Vec<Elem> {
    (0..r.nvars()).map(|i| vec![r.var(i)]).collect()
}
