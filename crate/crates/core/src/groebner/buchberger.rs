//! Buchberger's algorithm for homogeneous submodules of free modules over a
//! polynomial ring, with position-over-term order and Gebauer–Möller pair
//! pruning. Ideals are the rank-one case.

use std::collections::{BTreeMap, HashMap};

use super::free::FreeModElem;
use crate::arith::{Coef, Monomial, Poly};

#[derive(Clone, Debug)]
struct GbElem {
    v: FreeModElem,
    pos: usize,
    lm: Monomial,
    lc: Coef,
}

impl GbElem {
    fn new(v: FreeModElem) -> Self {
        let (pos, lm, lc) = v.lead().map(|(p, m, c)| (p, m.clone(), c.clone())).expect("nonzero");
        GbElem { v, pos, lm, lc }
    }
}

/// A list of module elements used as reducers, indexed by leading position.
#[derive(Clone, Debug, Default)]
pub struct Reducer {
    elems: Vec<GbElem>,
    by_pos: HashMap<usize, Vec<usize>>,
}

impl Reducer {
    pub fn new(basis: &[FreeModElem]) -> Self {
        let mut r = Reducer::default();
        for b in basis {
            if !b.is_zero() {
                r.push(b.clone());
            }
        }
        r
    }

    fn push(&mut self, v: FreeModElem) {
        let e = GbElem::new(v);
        self.by_pos.entry(e.pos).or_default().push(self.elems.len());
        self.elems.push(e);
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &FreeModElem> {
        self.elems.iter().map(|e| &e.v)
    }

    /// Leading positions and monomials of the reducers.
    pub fn leads(&self) -> impl Iterator<Item = (usize, &Monomial)> {
        self.elems.iter().map(|e| (e.pos, &e.lm))
    }

    fn find_divisor(&self, pos: usize, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.by_pos
            .get(&pos)?
            .iter()
            .copied()
            .find(|&i| Some(i) != skip && self.elems[i].lm.divides(m))
    }

    /// True if the module monomial `m * e_pos` is a leading term multiple.
    pub fn is_reducible(&self, pos: usize, m: &Monomial) -> bool {
        self.find_divisor(pos, m, None).is_some()
    }

    /// Full normal form: no term of the result is divisible by a leading term.
    pub fn reduce(&self, v: &FreeModElem) -> FreeModElem {
        self.reduce_skipping(v, None)
    }

    fn reduce_skipping(&self, v: &FreeModElem, skip: Option<usize>) -> FreeModElem {
        let mut rest: BTreeMap<usize, Poly> = v.comps().iter().cloned().collect();
        let mut out: Vec<(usize, Poly)> = Vec::new();
        while let Some((p, mut poly)) = rest.pop_first() {
            let mut kept: Vec<(Monomial, Coef)> = Vec::new();
            let (nvars, field) = (poly.nvars(), poly.field());
            let mut tail_start = 0usize;
            loop {
                let terms = poly.terms();
                // Skip over leading terms that are already irreducible.
                let mut found = None;
                while tail_start < terms.len() {
                    let (m, c) = &terms[tail_start];
                    if let Some(gi) = self.find_divisor(p, m, skip) {
                        found = Some((gi, m.clone(), c.clone()));
                        break;
                    }
                    kept.push((m.clone(), c.clone()));
                    tail_start += 1;
                }
                let Some((gi, m, c)) = found else { break };
                let g = &self.elems[gi];
                let q = g.lm.quotient_of(&m);
                let coef = c.div(&g.lc).expect("monic leading coefficient").neg();
                let remaining = Poly::from_sorted_terms(nvars, field, poly.terms()[tail_start..].to_vec());
                poly = remaining.add(&g.v.get(p).expect("lead component").mul_term(&q, &coef));
                tail_start = 0;
                for (p2, comp) in g.v.comps() {
                    if *p2 <= p {
                        continue;
                    }
                    let delta = comp.mul_term(&q, &coef);
                    let entry = rest.entry(*p2).or_insert_with(|| Poly::zero(nvars, field));
                    *entry = entry.add(&delta);
                    if entry.is_zero() {
                        rest.remove(p2);
                    }
                }
            }
            if !kept.is_empty() {
                out.push((p, Poly::from_sorted_terms(nvars, field, kept)));
            }
        }
        FreeModElem::from_sparse(out)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i32,
}

fn monic(v: &FreeModElem) -> FreeModElem {
    let (_, _, c) = v.lead().expect("nonzero");
    v.scale(&c.inv().expect("nonzero"))
}

fn s_element(a: &GbElem, b: &GbElem, lcm: &Monomial) -> FreeModElem {
    let qa = a.lm.quotient_of(lcm);
    let qb = b.lm.quotient_of(lcm);
    let ca = a.lc.inv().unwrap();
    let cb = b.lc.inv().unwrap().neg();
    a.v.mul_term(&qa, &ca).add(&b.v.mul_term(&qb, &cb))
}

/// Reduced Gröbner basis of the submodule generated by homogeneous `gens`.
///
/// `twists` gives the degrees of the ambient basis vectors. With
/// `ideal_case` set (rank one), the coprime-leading-term criterion is used.
pub fn groebner(gens: &[FreeModElem], twists: &[i32], ideal_case: bool) -> Vec<FreeModElem> {
    let mut pending: Vec<(i32, usize, FreeModElem)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| (g.degree(twists).expect("homogeneous generator"), k, g.clone()))
        .collect();
    pending.sort_by_key(|(d, k, _)| (*d, *k));
    let mut pending = std::collections::VecDeque::from(pending);
    let mut basis = Reducer::default();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let dp = pairs.iter().map(|p| p.deg).min();
        let dg = pending.front().map(|(d, _, _)| *d);
        let d = match (dp, dg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let mut todo: Vec<FreeModElem> = Vec::new();
        let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| p.deg == d);
        pairs = later;
        let mut now = now;
        now.sort_by_key(|p| (p.j, p.i));
        for p in &now {
            todo.push(s_element(&basis.elems[p.i], &basis.elems[p.j], &p.lcm));
        }
        while pending.front().is_some_and(|(dd, _, _)| *dd == d) {
            todo.push(pending.pop_front().unwrap().2);
        }
        for cand in todo {
            let h = basis.reduce(&cand);
            if h.is_zero() {
                continue;
            }
            let h = monic(&h);
            update(&mut basis, &mut pairs, h, twists, ideal_case);
        }
    }
    interreduce(&basis)
}

fn update(basis: &mut Reducer, pairs: &mut Vec<Pair>, h: FreeModElem, twists: &[i32], ideal_case: bool) {
    let t = basis.elems.len();
    let he = GbElem::new(h);
    let twist = twists[he.pos];
    let mut c: Vec<(Pair, bool)> = basis
        .by_pos
        .get(&he.pos)
        .map(|v| v.as_slice())
        .unwrap_or(&[])
        .iter()
        .map(|&i| {
            let lcm = basis.elems[i].lm.lcm(&he.lm);
            let coprime = ideal_case && basis.elems[i].lm.is_coprime(&he.lm);
            let deg = lcm.degree() as i32 + twist;
            (Pair { i, j: t, lcm, deg }, coprime)
        })
        .collect();
    // Chain criterion on the new pairs.
    let mut d: Vec<(Pair, bool)> = Vec::new();
    while !c.is_empty() {
        let (p, coprime) = c.remove(0);
        let dominated = c
            .iter()
            .chain(d.iter())
            .any(|(q, _)| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push((p, coprime));
        }
    }
    let e: Vec<Pair> = d.into_iter().filter(|(_, coprime)| !coprime).map(|(p, _)| p).collect();
    // Drop old pairs made redundant by the new leading term.
    pairs.retain(|p| {
        if basis.elems[p.i].pos != he.pos {
            return true;
        }
        if !he.lm.divides(&p.lcm) {
            return true;
        }
        let li = basis.elems[p.i].lm.lcm(&he.lm);
        let lj = basis.elems[p.j].lm.lcm(&he.lm);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(e);
    basis.by_pos.entry(he.pos).or_default().push(t);
    basis.elems.push(he);
}

fn interreduce(basis: &Reducer) -> Vec<FreeModElem> {
    let n = basis.elems.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            let e = &basis.elems[i];
            !(0..n).any(|j| {
                j != i
                    && basis.elems[j].pos == e.pos
                    && basis.elems[j].lm.divides(&e.lm)
                    && (basis.elems[j].lm != e.lm || j < i)
            })
        })
        .collect();
    let minimal = Reducer::new(&keep.iter().map(|&i| basis.elems[i].v.clone()).collect::<Vec<_>>());
    let mut out: Vec<FreeModElem> = (0..minimal.elems.len())
        .map(|k| monic(&minimal.reduce_skipping(&minimal.elems[k].v, Some(k))))
        .collect();
    out.sort_by(|a, b| {
        let (pa, ma, _) = a.lead().unwrap();
        let (pb, mb, _) = b.lead().unwrap();
        pa.cmp(&pb).then_with(|| ma.cmp(mb))
    });
    out
}

/// Checks Buchberger's criterion: every S-element of `basis` reduces to zero.
pub fn is_groebner(basis: &[FreeModElem]) -> bool {
    let r = Reducer::new(basis);
    for i in 0..r.elems.len() {
        for j in i + 1..r.elems.len() {
            if r.elems[i].pos != r.elems[j].pos {
                continue;
            }
            let lcm = r.elems[i].lm.lcm(&r.elems[j].lm);
            let s = s_element(&r.elems[i], &r.elems[j], &lcm);
            if !r.reduce(&s).is_zero() {
                return false;
            }
        }
    }
    true
}
