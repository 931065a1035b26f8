use std::collections::{BTreeMap, HashMap};

use super::complex::{node_homology_graded, node_homology_module, FreeMap, Node};
use crate::arith::{Poly, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::{Deformation, FreeModElem, GradedRing, Ring};
use crate::resolution::{DegreeWindow, GradedModule};
use crate::series::{hilbert_series, HilbertSeries};

/// Subsets of `0..c` of size `i`, in lexicographic order.
pub(crate) fn subsets(c: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, c: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..=(c - left) {
            cur.push(s);
            go(s + 1, c, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= c {
        go(0, c, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Sign of `e_S ∧ e_T` relative to `e_{S ∪ T}`, or `None` if they meet.
pub(crate) fn wedge_sign(s: &[usize], t: &[usize]) -> Option<bool> {
    let mut inversions = 0usize;
    for a in s {
        for b in t {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    Some(inversions % 2 == 1)
}

/// `K(f; R)`: `C_i = ⊕_{|S|=i} R(-deg f_S)` with
/// `∂ e_S = Σ_t (-1)^t f_{s_t} e_{S \ s_t}`.
#[derive(Clone, Debug)]
pub struct KoszulComplex {
    ring: Ring,
    elements: Vec<Poly>,
    degrees: Vec<i32>,
    subsets: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

fn element_degrees(ring: &Ring, f: &[Poly]) -> Result<Vec<i32>> {
    f.iter()
        .enumerate()
        .map(|(i, p)| {
            ring.check_poly(p)?;
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous { index: i });
            }
            p.degree()
                .map(|d| d as i32)
                .ok_or_else(|| Error::InvalidInput(format!("element {i} is zero and has no degree")))
        })
        .collect()
}

impl KoszulComplex {
    pub fn new(ring: &Ring, f: &[Poly]) -> Result<Self> {
        let degrees = element_degrees(ring, f)?;
        let c = f.len();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=c).map(|i| subsets(c, i)).collect();
        let index = subsets
            .iter()
            .map(|ss| ss.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect())
            .collect();
        Ok(KoszulComplex {
            ring: ring.clone(),
            elements: f.iter().map(|p| ring.normal_form(p)).collect(),
            degrees,
            subsets,
            index,
        })
    }

    /// The Koszul complex on the variables.
    pub fn on_variables(ring: &Ring) -> Self {
        let f: Vec<Poly> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self::new(ring, &f).expect("variables are homogeneous of degree one")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn subsets(&self, i: usize) -> &[Vec<usize>] {
        &self.subsets[i]
    }

    pub fn subset_index(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len())?.get(s).copied()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.subsets.get(i).map_or(0, |s| s.len())
    }

    pub fn twists(&self, i: usize) -> Vec<i32> {
        self.subsets[i]
            .iter()
            .map(|s| s.iter().map(|&t| self.degrees[t]).sum())
            .collect()
    }

    /// `∂_i : C_i -> C_{i-1}` for `1 <= i <= c`.
    pub fn differential(&self, i: usize) -> FreeMap {
        let cols = self.subsets[i]
            .iter()
            .map(|s| {
                let mut comps = Vec::with_capacity(s.len());
                for (t, &st) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(t);
                    let f = &self.elements[st];
                    let f = if t % 2 == 0 { f.clone() } else { f.neg() };
                    comps.push((self.index[i - 1][&rest], f));
                }
                FreeModElem::from_sparse(comps)
            })
            .collect();
        FreeMap::new(self.twists(i), self.twists(i - 1), cols)
    }

    pub fn node(&self, i: usize) -> Node {
        let c = self.len();
        Node {
            twists: self.twists(i),
            out: (i >= 1).then(|| self.differential(i)),
            inc: (i < c).then(|| self.differential(i + 1)),
        }
    }

    /// Image of a chain under a map, reduced modulo the ideal.
    pub fn apply(&self, map: &FreeMap, v: &FreeModElem) -> FreeModElem {
        let mut acc = FreeModElem::zero();
        for (k, p) in v.comps() {
            acc = acc.add(&map.cols[*k].mul_poly(p));
        }
        acc.map_comps(|p| self.ring.normal_form(p))
    }

    /// `a ∧ b` for `a ∈ C_i`, `b ∈ C_j`.
    pub fn wedge(&self, a: &FreeModElem, i: usize, b: &FreeModElem, j: usize) -> FreeModElem {
        let mut comps: BTreeMap<usize, Poly> = BTreeMap::new();
        if i + j > self.len() {
            return FreeModElem::zero();
        }
        for (ka, pa) in a.comps() {
            for (kb, pb) in b.comps() {
                let (s, t) = (&self.subsets[i][*ka], &self.subsets[j][*kb]);
                let Some(neg) = wedge_sign(s, t) else { continue };
                let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
                u.sort_unstable();
                let k = self.index[i + j][&u];
                let prod = self.ring.mul(pa, pb);
                let prod = if neg { prod.neg() } else { prod };
                let e = comps.entry(k).or_insert_with(|| self.ring.zero());
                *e = e.add(&prod);
            }
        }
        FreeModElem::from_sparse(comps.into_iter().filter(|(_, p)| !p.is_zero()).collect())
    }

    /// Checks `∂_{i-1} ∂_i = 0` on every basis element.
    pub fn verify(&self) -> Result<()> {
        for i in 2..=self.len() {
            let (d, e) = (self.differential(i), self.differential(i - 1));
            for (k, col) in d.cols.iter().enumerate() {
                if !self.apply(&e, col).is_zero() {
                    return Err(Error::MathematicalDiscrepancy(format!(
                        "Koszul differential squares to a nonzero map on e_{:?}",
                        self.subsets[i][k]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Graded dimensions of `H_i(K(f; R))` for `0 <= i <= c`.
///
/// Exact over artinian rings. Otherwise the homology is computed as a module
/// and must have finite length unless an internal-degree window is given.
pub fn koszul_homology(r: &Ring, f: &[Poly], window: Option<DegreeWindow>) -> Result<Vec<BTreeMap<i32, usize>>> {
    let kc = KoszulComplex::new(r, f)?;
    let rm = GradedModule::ring_module(r);
    (0..=kc.len())
        .map(|i| {
            let node = kc.node(i);
            if r.is_artinian() || window.is_some() {
                return node_homology_graded(&node, &rm, window);
            }
            let h = node_homology_module(&node, &rm)?;
            let (lo, hi) = h.degree_range().ok_or(Error::RequiresDegreeBound)?;
            Ok((lo..=hi)
                .zip(h.hilbert_values(lo, hi))
                .filter(|(_, v)| *v > 0)
                .collect())
        })
        .collect()
}

/// Whether `f` is a `Q`-regular sequence, by comparing
/// `H_{Q/(f)}(z)` with `H_Q(z) Π (1 - z^{deg f_i})`.
pub fn is_regular_sequence(q: &Ring, f: &[Poly]) -> Result<bool> {
    if f.iter().any(|p| p.is_zero()) {
        return Ok(false);
    }
    let degrees = element_degrees(q, f)?;
    if let Some(i) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::InvalidInput(format!("element {i} has degree zero")));
    }
    if f.is_empty() {
        return Ok(true);
    }
    let hq = hilbert_series(&GradedModule::ring_module(q))?;
    let mut num = hq.numerator.clone();
    for d in degrees {
        let mut c = vec![0i64; d as usize + 1];
        c[0] = 1;
        c[d as usize] = -1;
        num = num.mul(&UniPoly::from_i64s(&c));
    }
    let expected = HilbertSeries {
        numerator: num,
        pole_order: hq.pole_order,
        shift: 0,
        reduced: false,
    }
    .reduce();
    let quotient = quotient_ring(q, f, None)?;
    let got = hilbert_series(&GradedModule::ring_module(&quotient))?;
    Ok(expected.numerator == got.numerator && expected.pole_order == got.pole_order)
}

fn quotient_ring(q: &Ring, f: &[Poly], deformation: Option<Deformation>) -> Result<Ring> {
    let mut gens = q.ideal().generators().to_vec();
    gens.extend(f.iter().cloned());
    GradedRing::build(String::new(), q.field(), q.names().to_vec(), gens, deformation)
}

/// `Q/(f)` carrying the provenance `(Q, f)`. For a homogeneous sequence that
/// is not regular, `H_1` of the Koszul complex is already nonzero.
pub fn deformation_quotient(q: &Ring, f: &[Poly]) -> Result<Ring> {
    if !is_regular_sequence(q, f)? {
        return Err(Error::NotRegularSequence { first_nonzero: 1 });
    }
    quotient_ring(
        q,
        f,
        Some(Deformation {
            base: q.clone(),
            sequence: f.to_vec(),
        }),
    )
}
