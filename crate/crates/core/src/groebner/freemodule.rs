use std::sync::Arc;

use super::free::FreeModElem;
use super::ring::{Ring, StdBasis};
use crate::arith::{Monomial, Poly};
use crate::linalg::SparseVec;

/// Graded free module `⊕_j R(-a_j)` with degree-wise coordinates.
///
/// A basis of the degree `d` piece is the list, over `j`, of the standard
/// monomials of `R_{d-a_j}` times `e_j`; coordinates are indices into that list.
#[derive(Clone, Debug)]
pub struct FreeModule {
    ring: Ring,
    twists: Vec<i32>,
}

/// Basis of one graded piece of a free module.
#[derive(Clone, Debug)]
pub struct FreePiece {
    pub degree: i32,
    pub offsets: Vec<usize>,
    pub blocks: Vec<Arc<StdBasis>>,
    pub dim: usize,
}

impl FreePiece {
    /// Component and monomial of a coordinate index.
    pub fn locate(&self, idx: usize) -> (usize, &Monomial) {
        // Empty blocks share their offset with the next block; take the last.
        let j = self.offsets.partition_point(|&o| o <= idx) - 1;
        (j, &self.blocks[j].monos[idx - self.offsets[j]])
    }

    pub fn index_of(&self, j: usize, m: &Monomial) -> Option<usize> {
        self.blocks[j].index.get(m).map(|k| self.offsets[j] + k)
    }
}

impl FreeModule {
    pub fn new(ring: Ring, twists: Vec<i32>) -> Self {
        FreeModule { ring, twists }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn piece(&self, d: i32) -> FreePiece {
        let mut offsets = Vec::with_capacity(self.rank());
        let mut blocks = Vec::with_capacity(self.rank());
        let mut dim = 0;
        for &a in &self.twists {
            offsets.push(dim);
            let b = self.ring.std_basis(d - a);
            dim += b.len();
            blocks.push(b);
        }
        FreePiece {
            degree: d,
            offsets,
            blocks,
            dim,
        }
    }

    pub fn dim(&self, d: i32) -> usize {
        self.twists.iter().map(|&a| self.ring.graded_piece_dim(d - a)).sum()
    }

    /// Coordinates of a homogeneous element of degree `piece.degree`.
    /// Components are reduced modulo the ring's ideal first.
    pub fn coords(&self, v: &FreeModElem, piece: &FreePiece) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (j, p) in v.comps() {
            let nf = self.ring.normal_form(p);
            for (m, c) in nf.terms() {
                let idx = piece.index_of(*j, m).expect("term of the expected degree");
                out.push((idx, c.clone()));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn element(&self, v: &SparseVec, piece: &FreePiece) -> FreeModElem {
        let n = self.ring.nvars();
        let f = self.ring.field();
        let mut comps: Vec<(usize, Vec<(Monomial, _)>)> = Vec::new();
        for (idx, c) in v {
            let (j, m) = piece.locate(*idx);
            match comps.last_mut() {
                Some((jj, terms)) if *jj == j => terms.push((m.clone(), c.clone())),
                _ => comps.push((j, vec![(m.clone(), c.clone())])),
            }
        }
        FreeModElem::from_sparse(
            comps
                .into_iter()
                .map(|(j, t)| (j, Poly::from_terms(n, f, t)))
                .collect(),
        )
    }

    /// The basis element with the given coordinate index, as a module element.
    pub fn basis_element(&self, idx: usize, piece: &FreePiece) -> FreeModElem {
        let (j, m) = piece.locate(idx);
        FreeModElem::single(j, Poly::monomial(m.clone(), self.ring.field().one()))
    }

    /// Multiplies a coordinate vector in degree `from.degree` by a homogeneous
    /// polynomial, landing in `to`.
    pub fn mul_coords(&self, f: &Poly, v: &SparseVec, from: &FreePiece, to: &FreePiece) -> SparseVec {
        let e = self.element(v, from).mul_poly(f);
        self.coords(&e, to)
    }
}
