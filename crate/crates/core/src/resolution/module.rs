use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{Coef, Monomial, Poly};
use crate::error::{Error, Result};
use crate::groebner::{FreeModElem, FreeModule, Reducer, Ring, SubmodulePres};
use crate::linalg::SparseVec;

/// Basis of one graded piece of a module: standard module monomials `m e_j`.
#[derive(Debug)]
pub struct ModulePiece {
    pub degree: i32,
    pub monos: Vec<(usize, Monomial)>,
    pub index: HashMap<(usize, Monomial), usize>,
}

impl ModulePiece {
    pub fn dim(&self) -> usize {
        self.monos.len()
    }
}

type ActionKey = (Poly, i32);

/// Finitely presented graded module `coker(⊕R(-b_k) -> ⊕R(-a_j))`.
///
/// Graded pieces are computed from a Gröbner basis of the relations (with the
/// ring's ideal appended), so every element has a canonical representative.
pub struct GradedModule {
    label: String,
    pres: SubmodulePres,
    reducer: OnceLock<Reducer>,
    pieces: Mutex<HashMap<i32, Arc<ModulePiece>>>,
    actions: Mutex<HashMap<ActionKey, Arc<Vec<SparseVec>>>>,
}

impl Clone for GradedModule {
    fn clone(&self) -> Self {
        GradedModule::from_pres(&self.label, self.pres.clone())
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedModule({}: coker over {} of {} relations on twists {:?})",
            self.label,
            self.ring(),
            self.pres.generators().len(),
            self.pres.twists()
        )
    }
}

impl GradedModule {
    pub fn from_pres(label: &str, pres: SubmodulePres) -> Self {
        GradedModule {
            label: label.to_string(),
            pres,
            reducer: OnceLock::new(),
            pieces: Mutex::new(HashMap::new()),
            actions: Mutex::new(HashMap::new()),
        }
    }

    /// Cokernel of the matrix whose columns are `relations`.
    pub fn cokernel(ring: Ring, twists: Vec<i32>, relations: Vec<FreeModElem>) -> Result<Self> {
        let relations: Vec<FreeModElem> = relations
            .into_iter()
            .map(|r| r.map_comps(|p| ring.normal_form(p)))
            .collect();
        let mut gens = Vec::new();
        let mut degrees = Vec::new();
        for (k, r) in relations.into_iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            degrees.push(r.degree(&twists).ok_or(Error::NotHomogeneous { index: k })?);
            gens.push(r);
        }
        let pres = SubmodulePres::with_degrees(ring, twists, gens, degrees)?;
        Ok(Self::from_pres("", pres))
    }

    /// Cokernel of a dense matrix given row by row, all generators in degree 0.
    pub fn from_rows(ring: Ring, rows: &[Vec<Poly>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged presentation matrix".into()));
        }
        let cols = (0..c)
            .map(|k| FreeModElem::from_dense((0..r).map(|j| rows[j][k].clone()).collect()))
            .collect();
        Self::cokernel(ring, vec![0; r], cols)
    }

    pub fn free(ring: Ring, twists: Vec<i32>) -> Self {
        Self::cokernel(ring, twists, Vec::new()).expect("no relations")
    }

    /// The ring as a module over itself.
    pub fn ring_module(ring: &Ring) -> Self {
        Self::free(ring.clone(), vec![0]).labeled("R")
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: &Ring) -> Self {
        let rels = (0..ring.nvars()).map(|i| FreeModElem::single(0, ring.var(i))).collect();
        Self::cokernel(ring.clone(), vec![0], rels).expect("variables are homogeneous").labeled("k")
    }

    /// Cyclic module `R/J`.
    pub fn quotient(ring: &Ring, gens: &[Poly]) -> Result<Self> {
        Self::cokernel(ring.clone(), vec![0], gens.iter().map(|g| FreeModElem::single(0, g.clone())).collect())
    }

    pub fn labeled(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ring(&self) -> &Ring {
        self.pres.ring()
    }

    pub fn twists(&self) -> &[i32] {
        self.pres.twists()
    }

    pub fn rank(&self) -> usize {
        self.pres.ambient_rank()
    }

    pub fn relations(&self) -> &[FreeModElem] {
        self.pres.generators()
    }

    pub fn relation_degrees(&self) -> &[i32] {
        self.pres.degrees()
    }

    pub fn presentation(&self) -> &SubmodulePres {
        &self.pres
    }

    pub fn ambient(&self) -> FreeModule {
        self.pres.ambient()
    }

    pub fn reducer(&self) -> &Reducer {
        self.reducer.get_or_init(|| self.pres.reducer())
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule> {
        if !Arc::ptr_eq(self.ring(), other.ring()) && self.ring().to_string() != other.ring().to_string() {
            return Err(Error::InputMismatch("direct sum of modules over different rings".into()));
        }
        let shift = self.rank();
        let mut twists = self.twists().to_vec();
        twists.extend_from_slice(other.twists());
        let mut rels = self.relations().to_vec();
        rels.extend(other.relations().iter().map(|r| r.reindex(|i| Some(i + shift))));
        Ok(GradedModule::cokernel(self.ring().clone(), twists, rels)?
            .labeled(&format!("{} ⊕ {}", self.label, other.label)))
    }

    /// Basis of `M_d`.
    pub fn piece(&self, d: i32) -> Arc<ModulePiece> {
        if let Some(p) = self.pieces.lock().unwrap().get(&d) {
            return p.clone();
        }
        let red = self.reducer();
        let n = self.ring().nvars();
        let mut monos = Vec::new();
        for (j, &a) in self.twists().iter().enumerate() {
            if d < a {
                continue;
            }
            for m in Monomial::all_of_degree(n, (d - a) as u32) {
                if !red.is_reducible(j, &m) {
                    monos.push((j, m));
                }
            }
        }
        let index = monos.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let p = Arc::new(ModulePiece { degree: d, monos, index });
        self.pieces.lock().unwrap().insert(d, p.clone());
        p
    }

    pub fn dim(&self, d: i32) -> usize {
        self.piece(d).dim()
    }

    /// Coordinates in `M_d` of a homogeneous element of the cover of degree `d`.
    pub fn coords(&self, v: &FreeModElem, d: i32) -> SparseVec {
        let nf = self.reducer().reduce(v);
        let piece = self.piece(d);
        let mut out: SparseVec = Vec::new();
        for (j, p) in nf.comps() {
            for (m, c) in p.terms() {
                let idx = piece.index[&(*j, m.clone())];
                out.push((idx, c.clone()));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Canonical representative in the cover of a coordinate vector of `M_d`.
    pub fn element(&self, v: &SparseVec, d: i32) -> FreeModElem {
        let piece = self.piece(d);
        FreeModElem::from_sparse(
            v.iter()
                .map(|(i, c)| {
                    let (j, m) = &piece.monos[*i];
                    (*j, Poly::monomial(m.clone(), c.clone()))
                })
                .collect(),
        )
    }

    /// Columns of the multiplication map `f: M_d -> M_{d + deg f}`.
    pub fn action(&self, f: &Poly, d: i32) -> Arc<Vec<SparseVec>> {
        let key = (f.clone(), d);
        if let Some(a) = self.actions.lock().unwrap().get(&key) {
            return a.clone();
        }
        let e = f.degree().unwrap_or(0) as i32;
        let piece = self.piece(d);
        let cols: Vec<SparseVec> = piece
            .monos
            .iter()
            .map(|(j, m)| {
                let t = FreeModElem::single(*j, f.mul_term(m, &self.ring().field().one()));
                if f.is_zero() {
                    Vec::new()
                } else {
                    self.coords(&t, d + e)
                }
            })
            .collect();
        let a = Arc::new(cols);
        self.actions.lock().unwrap().insert(key, a.clone());
        a
    }

    /// `f * v` for `v` in `M_d`.
    pub fn act(&self, f: &Poly, v: &SparseVec, d: i32) -> SparseVec {
        let cols = self.action(f, d);
        let mut acc: std::collections::BTreeMap<usize, Coef> = std::collections::BTreeMap::new();
        for (i, c) in v {
            for (r, a) in &cols[*i] {
                let e = acc.entry(*r).or_insert_with(|| c.field().zero());
                *e = e.add(&c.mul(a));
            }
        }
        crate::linalg::sv_from_map(acc)
    }

    /// Exact finite-length test: the relations' leading terms contain a pure
    /// power of every variable in every component.
    pub fn pure_power_exponents(&self) -> Option<Vec<Vec<u32>>> {
        let n = self.ring().nvars();
        let mut out = vec![vec![u32::MAX; n]; self.rank()];
        for (j, m) in self.reducer().leads() {
            let e = m.exps();
            let nz: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
            if nz.len() == 1 {
                out[j][nz[0]] = out[j][nz[0]].min(e[nz[0]]);
            } else if nz.is_empty() {
                out[j] = vec![0; n];
            }
        }
        if out.iter().all(|row| row.iter().all(|&a| a != u32::MAX)) {
            Some(out)
        } else {
            None
        }
    }

    pub fn is_finite_length(&self) -> bool {
        self.pure_power_exponents().is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.pure_power_exponents()
            .is_some_and(|rows| rows.iter().all(|r| r.iter().all(|&a| a == 0)))
    }

    /// Smallest and largest degree with `M_d != 0`, for finite-length modules.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let pp = self.pure_power_exponents()?;
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for (j, row) in pp.iter().enumerate() {
            if row.iter().any(|&a| a == 0) {
                continue;
            }
            let a = self.twists()[j];
            lo = lo.min(a);
            hi = hi.max(a + row.iter().map(|&e| e as i32 - 1).sum::<i32>());
        }
        if lo > hi {
            return Some((0, -1));
        }
        while lo <= hi && self.dim(lo) == 0 {
            lo += 1;
        }
        while hi >= lo && self.dim(hi) == 0 {
            hi -= 1;
        }
        Some((lo, hi))
    }

    pub fn length(&self) -> Option<usize> {
        let (lo, hi) = self.degree_range()?;
        Some((lo..=hi).map(|d| self.dim(d)).sum())
    }

    /// Minimal presentation: unit entries removed, redundant relations dropped.
    pub fn minimalized(&self) -> GradedModule {
        let ring = self.ring().clone();
        let mut twists = self.twists().to_vec();
        let mut rels: Vec<FreeModElem> = self.relations().to_vec();
        loop {
            // First unit entry in reading order: row (component) first, then column.
            let mut unit: Option<(usize, usize, Coef)> = None;
            'search: for j in 0..twists.len() {
                for (k, r) in rels.iter().enumerate() {
                    if let Some(p) = r.get(j) {
                        if p.degree() == Some(0) {
                            unit = Some((j, k, p.constant_term()));
                            break 'search;
                        }
                    }
                }
            }
            let Some((j, k, c)) = unit else { break };
            let pivot = rels.remove(k);
            let inv = c.inv().expect("nonzero unit");
            rels = rels
                .into_iter()
                .map(|r| match r.get(j) {
                    Some(p) => r.sub(&pivot.mul_poly(&p.scale(&inv))),
                    None => r,
                })
                .map(|r| r.reindex(|i| if i == j { None } else if i > j { Some(i - 1) } else { Some(i) }))
                .map(|r| r.map_comps(|p| ring.normal_form(p)))
                .filter(|r| !r.is_zero())
                .collect();
            twists.remove(j);
        }
        let m = GradedModule::cokernel(ring, twists, rels).expect("homogeneous after elimination");
        let pres = m.pres.minimalized();
        GradedModule::from_pres(&self.label, pres)
    }

    /// True when no relation has a unit entry and the relations are minimal.
    pub fn is_minimally_presented(&self) -> bool {
        self.relations()
            .iter()
            .all(|r| r.comps().iter().all(|(_, p)| p.degree() != Some(0)))
            && self.pres.minimal_subset().len() == self.relations().len()
    }

    /// Generators of `M` that survive in `M / mM`: `e_j` with no unit relation.
    pub fn num_generators(&self) -> usize {
        self.minimalized().rank()
    }

    /// Dimensions of `M_d` for `d` in `lo..=hi`.
    pub fn hilbert_values(&self, lo: i32, hi: i32) -> Vec<usize> {
        (lo..=hi).map(|d| self.dim(d)).collect()
    }
}
