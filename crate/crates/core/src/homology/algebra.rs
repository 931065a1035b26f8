use std::collections::BTreeMap;

use serde::Serialize;

use super::koszul::KoszulComplex;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::{FreeModElem, Ring};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::resolution::GradedModule;

/// Tags at or above this mark boundaries inside a tracking echelon.
const BOUNDARY_TAG: usize = 1 << 40;

/// A basis class of `H_i(K(x; R))` in internal degree `d`.
#[derive(Clone, Debug)]
pub struct HomologyClass {
    pub hom_degree: usize,
    pub internal_degree: i32,
    /// A cycle of `K_i` representing the class.
    pub rep: FreeModElem,
}

struct Piece {
    start: usize,
    basis: Echelon,
}

/// `H(K(x_1..x_n; R))` for artinian `R`, with products of cycle
/// representatives reduced modulo boundaries.
pub struct KoszulHomologyAlgebra {
    ring: Ring,
    complex: KoszulComplex,
    classes: Vec<HomologyClass>,
    /// `table[a][b]` is `a · b` in the basis of classes.
    table: Vec<Vec<SparseVec>>,
    pieces: BTreeMap<(usize, i32), Piece>,
}

fn chain_coords(f: &GradedModule, v: &FreeModElem, d: i32) -> SparseVec {
    f.coords(v, d)
}

impl KoszulHomologyAlgebra {
    pub fn new(r: &Ring) -> Result<Self> {
        if !r.is_artinian() {
            return Err(Error::RequiresFiniteLength);
        }
        let r = r.minimalize()?;
        let kc = KoszulComplex::on_variables(&r);
        kc.verify()?;
        let n = kc.len();
        let top = r.top_degree().unwrap_or(0) as i32;
        let field = r.field();
        let frees: Vec<GradedModule> = (0..=n)
            .map(|i| GradedModule::free(r.clone(), kc.twists(i)))
            .collect();
        let diffs: Vec<_> = (1..=n).map(|i| kc.differential(i)).collect();
        // Matrix of ∂_i in degree d, as columns in F_{i-1}.
        let image_cols = |i: usize, d: i32| -> Vec<SparseVec> {
            let dim = frees[i].dim(d);
            (0..dim)
                .map(|t| {
                    let v = frees[i].element(&vec![(t, field.one())], d);
                    let w = kc.apply(&diffs[i - 1], &v);
                    chain_coords(&frees[i - 1], &w, d)
                })
                .collect()
        };
        let mut classes = Vec::new();
        let mut pieces = BTreeMap::new();
        for i in 0..=n {
            for d in (i as i32)..=(i as i32 + top) {
                let dim = frees[i].dim(d);
                if dim == 0 {
                    continue;
                }
                let cycles: Vec<SparseVec> = if i == 0 {
                    (0..dim).map(|t| vec![(t, field.one())]).collect()
                } else {
                    kernel(field, &image_cols(i, d))
                };
                let bounds: Vec<SparseVec> = if i < n { image_cols(i + 1, d) } else { Vec::new() };
                let mut eb = Echelon::new(field);
                for b in &bounds {
                    eb.insert(b);
                }
                let mut ez = Echelon::new(field);
                for z in &cycles {
                    ez.insert(&eb.reduce(z));
                }
                let reps = ez.reduced_basis();
                if reps.is_empty() {
                    continue;
                }
                let mut tracked = Echelon::tracking(field);
                for (j, b) in bounds.iter().enumerate() {
                    tracked.insert_tagged(b, BOUNDARY_TAG + j);
                }
                let start = classes.len();
                for (t, z) in reps.iter().enumerate() {
                    if tracked.insert_tagged(z, t).is_some() {
                        return Err(Error::MathematicalDiscrepancy(
                            "Koszul homology representatives are dependent modulo boundaries".into(),
                        ));
                    }
                    classes.push(HomologyClass {
                        hom_degree: i,
                        internal_degree: d,
                        rep: frees[i].element(z, d),
                    });
                }
                pieces.insert((i, d), Piece { start, basis: tracked });
            }
        }
        let mut alg = KoszulHomologyAlgebra {
            ring: r.clone(),
            complex: kc,
            classes,
            table: Vec::new(),
            pieces,
        };
        let m = alg.classes.len();
        let mut table = vec![vec![Vec::new(); m]; m];
        for a in 0..m {
            for b in 0..m {
                table[a][b] = alg.product_of_reps(a, b, &frees)?;
            }
        }
        alg.table = table;
        alg.check_laws()?;
        Ok(alg)
    }

    fn product_of_reps(&self, a: usize, b: usize, frees: &[GradedModule]) -> Result<SparseVec> {
        let (ca, cb) = (&self.classes[a], &self.classes[b]);
        let i = ca.hom_degree + cb.hom_degree;
        let d = ca.internal_degree + cb.internal_degree;
        if i > self.complex.len() {
            return Ok(Vec::new());
        }
        let w = self.complex.wedge(&ca.rep, ca.hom_degree, &cb.rep, cb.hom_degree);
        let v = chain_coords(&frees[i], &w, d);
        if v.is_empty() {
            return Ok(Vec::new());
        }
        let Some(piece) = self.pieces.get(&(i, d)) else {
            // No homology there: the product must be a boundary.
            return Ok(Vec::new());
        };
        let (rem, combo) = piece.basis.reduce_tracked(&v);
        if !rem.is_empty() {
            return Err(Error::MathematicalDiscrepancy(
                "product of Koszul cycles is not a cycle".into(),
            ));
        }
        Ok(combo
            .into_iter()
            .filter(|(t, _)| *t < BOUNDARY_TAG)
            .map(|(t, c)| (piece.start + t, c))
            .collect())
    }

    fn check_laws(&self) -> Result<()> {
        let m = self.classes.len();
        for a in 0..m {
            for b in 0..m {
                let sign_neg = (self.classes[a].hom_degree * self.classes[b].hom_degree) % 2 == 1;
                let lhs = &self.table[a][b];
                let rhs: SparseVec = self.table[b][a]
                    .iter()
                    .map(|(k, c)| (*k, if sign_neg { c.neg() } else { c.clone() }))
                    .collect();
                if *lhs != rhs {
                    return Err(Error::MathematicalDiscrepancy(format!(
                        "Koszul homology is not graded-commutative on classes {a}, {b}"
                    )));
                }
            }
            if self.classes[a].hom_degree % 2 == 1 && !self.table[a][a].is_empty() {
                return Err(Error::MathematicalDiscrepancy(format!(
                    "odd class {a} has nonzero square"
                )));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn classes(&self) -> &[HomologyClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `a · b` in the class basis.
    pub fn product(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    /// Product of two arbitrary elements given in the class basis.
    pub fn multiply(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, crate::arith::Coef> = BTreeMap::new();
        for (a, ca) in u {
            for (b, cb) in v {
                let s = ca.mul(cb);
                for (k, c) in &self.table[*a][*b] {
                    let e = acc.entry(*k).or_insert_with(|| self.field().zero());
                    *e = e.add(&s.mul(c));
                }
            }
        }
        crate::linalg::sv_from_map(acc)
    }

    /// Total dimension of `H_i` for each `i`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = vec![0; self.complex.len() + 1];
        for c in &self.classes {
            out[c.hom_degree] += 1;
        }
        out
    }

    pub fn graded(&self) -> Vec<BTreeMap<i32, usize>> {
        let mut out = vec![BTreeMap::new(); self.complex.len() + 1];
        for c in &self.classes {
            *out[c.hom_degree].entry(c.internal_degree).or_insert(0) += 1;
        }
        out
    }

    /// Class indices of `H_i`.
    pub fn classes_in(&self, i: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&a| self.classes[a].hom_degree == i).collect()
    }

    /// Whether `H_i × H_{c-i} -> H_c` is a perfect pairing for every `i`,
    /// with `c` the top nonvanishing degree and `dim H_c = 1`.
    pub fn top_pairing_nondegenerate(&self) -> bool {
        let ranks = self.ranks();
        let Some(c) = ranks.iter().rposition(|&r| r > 0) else {
            return false;
        };
        if ranks[c] != 1 {
            return false;
        }
        let top = self.classes_in(c)[0];
        (0..=c).all(|i| {
            let (left, right) = (self.classes_in(i), self.classes_in(c - i));
            if left.len() != right.len() {
                return false;
            }
            let rows: Vec<SparseVec> = left
                .iter()
                .map(|&a| {
                    right
                        .iter()
                        .enumerate()
                        .filter_map(|(k, &b)| {
                            self.table[a][b]
                                .iter()
                                .find(|(t, _)| *t == top)
                                .map(|(_, v)| (k, v.clone()))
                        })
                        .collect()
                })
                .collect();
            crate::linalg::rank(self.field(), &rows) == left.len()
        })
    }

    pub fn summary(&self) -> KoszulAlgebraSummary {
        let mut products = Vec::new();
        for a in 0..self.len() {
            for b in a..self.len() {
                if !self.table[a][b].is_empty() {
                    products.push(ProductEntry {
                        left: a,
                        right: b,
                        result: self.table[a][b].iter().map(|(k, c)| (*k, c.to_string())).collect(),
                    });
                }
            }
        }
        KoszulAlgebraSummary {
            ring: self.ring.to_string(),
            ranks: self.ranks(),
            graded: self.graded(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassEntry {
                    hom_degree: c.hom_degree,
                    internal_degree: c.internal_degree,
                })
                .collect(),
            nonzero_products: products,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub hom_degree: usize,
    pub internal_degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductEntry {
    pub left: usize,
    pub right: usize,
    pub result: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulAlgebraSummary {
    pub ring: String,
    pub ranks: Vec<usize>,
    pub graded: Vec<BTreeMap<i32, usize>>,
    pub classes: Vec<ClassEntry>,
    pub nonzero_products: Vec<ProductEntry>,
}

pub fn koszul_homology_algebra(r: &Ring) -> Result<KoszulHomologyAlgebra> {
    KoszulHomologyAlgebra::new(r)
}

/// The two-sided annihilator of `B_{>=1}` inside `B_{>=1}`. Evidence only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialExtensionWitness {
    /// Basis vectors of `W` in the class basis, coefficients in decimal.
    pub w_basis: Vec<Vec<(usize, String)>>,
    /// `dim W ∩ H_i`.
    pub w_dims: Vec<usize>,
    pub is_nontrivial: bool,
}

pub fn trivial_extension_witness(b: &KoszulHomologyAlgebra) -> TrivialExtensionWitness {
    let m = b.len();
    let positive: Vec<usize> = (0..m).filter(|&a| b.classes[a].hom_degree >= 1).collect();
    let mut w_basis = Vec::new();
    let mut w_dims = vec![0; b.ranks().len()];
    // W is graded, so solve piece by piece.
    for &(i, d) in b.pieces.keys() {
        if i == 0 {
            continue;
        }
        let members: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&a| b.classes[a].hom_degree == i && b.classes[a].internal_degree == d)
            .collect();
        let vectors: Vec<SparseVec> = members
            .iter()
            .map(|&t| {
                let mut v: BTreeMap<usize, crate::arith::Coef> = BTreeMap::new();
                for (slot, &a) in positive.iter().enumerate() {
                    for (k, c) in &b.table[a][t] {
                        v.insert(2 * (slot * m + k), c.clone());
                    }
                    for (k, c) in &b.table[t][a] {
                        v.insert(2 * (slot * m + k) + 1, c.clone());
                    }
                }
                crate::linalg::sv_from_map(v)
            })
            .collect();
        for rel in kernel(b.field(), &vectors) {
            w_dims[i] += 1;
            w_basis.push(rel.iter().map(|(k, c)| (members[*k], c.to_string())).collect());
        }
    }
    let is_nontrivial = !w_basis.is_empty();
    TrivialExtensionWitness {
        w_basis,
        w_dims,
        is_nontrivial,
    }
}
