//! Homology of complexes of the form `C ⊗ N` with `C` a complex of graded free
//! modules, computed either degree by degree or as a finitely presented module.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{FreeModElem, Ring, SubmodulePres};
use crate::linalg::{rank, SparseVec};
use crate::resolution::{DegreeWindow, GradedModule};

/// A homogeneous map of graded free modules given by its columns.
#[derive(Clone, Debug)]
pub struct FreeMap {
    pub src: Vec<i32>,
    pub tgt: Vec<i32>,
    pub cols: Vec<FreeModElem>,
}

impl FreeMap {
    pub fn new(src: Vec<i32>, tgt: Vec<i32>, cols: Vec<FreeModElem>) -> Self {
        debug_assert_eq!(src.len(), cols.len());
        FreeMap { src, tgt, cols }
    }

    /// The dual map `Hom(tgt, R) -> Hom(src, R)` between the dual free modules.
    pub fn transpose(&self) -> FreeMap {
        let mut cols: Vec<Vec<(usize, crate::arith::Poly)>> = vec![Vec::new(); self.tgt.len()];
        for (l, col) in self.cols.iter().enumerate() {
            for (k, p) in col.comps() {
                cols[*k].push((l, p.clone()));
            }
        }
        FreeMap {
            src: self.tgt.iter().map(|t| -t).collect(),
            tgt: self.src.iter().map(|t| -t).collect(),
            cols: cols.into_iter().map(FreeModElem::from_sparse).collect(),
        }
    }
}

/// One spot of a complex: the free module there with its outgoing and
/// incoming maps. Homology is `ker(out ⊗ N) / im(inc ⊗ N)`.
#[derive(Clone, Debug)]
pub struct Node {
    pub twists: Vec<i32>,
    pub out: Option<FreeMap>,
    pub inc: Option<FreeMap>,
}

/// Block layout of `(⊕_l R(-b_l) ⊗ N)_d = ⊕_l N_{d - b_l}`.
struct Layout {
    offsets: Vec<usize>,
    dim: usize,
}

fn layout(n: &GradedModule, twists: &[i32], d: i32) -> Layout {
    let mut offsets = Vec::with_capacity(twists.len());
    let mut dim = 0;
    for &b in twists {
        offsets.push(dim);
        dim += n.dim(d - b);
    }
    Layout { offsets, dim }
}

/// Columns of `(f ⊗ N)_d`.
pub fn tensor_matrix(f: &FreeMap, n: &GradedModule, d: i32) -> Vec<SparseVec> {
    let tl = layout(n, &f.tgt, d);
    let mut cols = Vec::new();
    for (l, col) in f.cols.iter().enumerate() {
        let dl = d - f.src[l];
        let dim = n.dim(dl);
        if dim == 0 {
            continue;
        }
        let mut block: Vec<BTreeMap<usize, crate::arith::Coef>> = vec![BTreeMap::new(); dim];
        for (k, p) in col.comps() {
            let act = n.action(p, dl);
            for (t, image) in act.iter().enumerate() {
                for (r, c) in image {
                    let e = block[t].entry(tl.offsets[*k] + r).or_insert_with(|| c.field().zero());
                    *e = e.add(c);
                }
            }
        }
        cols.extend(block.into_iter().map(crate::linalg::sv_from_map));
    }
    cols
}

/// `dim_k H_d` at a node.
pub fn node_homology_dim(node: &Node, n: &GradedModule, d: i32) -> usize {
    let here = layout(n, &node.twists, d).dim;
    if here == 0 {
        return 0;
    }
    let field = n.ring().field();
    let r_out = node.out.as_ref().map_or(0, |f| rank(field, &tensor_matrix(f, n, d)));
    let r_in = node.inc.as_ref().map_or(0, |f| rank(field, &tensor_matrix(f, n, d)));
    here - r_out - r_in
}

/// Internal degrees where `(node ⊗ N)_d` can be nonzero, for finite-length `N`.
pub fn support_degrees(twists: &[i32], n: &GradedModule) -> Option<Vec<i32>> {
    let (lo, hi) = n.degree_range()?;
    let mut ds: Vec<i32> = twists.iter().flat_map(|&b| (b + lo)..=(b + hi)).collect();
    ds.sort();
    ds.dedup();
    Some(ds)
}

/// Graded dimensions of the homology at a node: over the support when `N`
/// has finite length, else over the given window.
pub fn node_homology_graded(
    node: &Node,
    n: &GradedModule,
    window: Option<DegreeWindow>,
) -> Result<BTreeMap<i32, usize>> {
    let degrees: Vec<i32> = match (support_degrees(&node.twists, n), window) {
        (Some(ds), Some(w)) => ds.into_iter().filter(|d| w.contains(*d)).collect(),
        (Some(ds), None) => ds,
        (None, Some(w)) => (w.lo..=w.hi).collect(),
        (None, None) => return Err(Error::RequiresDegreeBound),
    };
    let mut out = BTreeMap::new();
    for d in degrees {
        let h = node_homology_dim(node, n, d);
        if h > 0 {
            out.insert(d, h);
        }
    }
    Ok(out)
}

/// The free cover `⊕_{l,t} R(-(b_l + g_t))` of `⊕_l R(-b_l) ⊗ N`, `N = G/U`.
fn cover_twists(twists: &[i32], n: &GradedModule) -> Vec<i32> {
    twists
        .iter()
        .flat_map(|&b| n.twists().iter().map(move |&g| b + g))
        .collect()
}

/// `f ⊗ G` on free covers, as columns.
fn lift_map(f: &FreeMap, n: &GradedModule) -> Vec<FreeModElem> {
    let r = n.rank();
    let mut cols = Vec::with_capacity(f.cols.len() * r);
    for col in &f.cols {
        for t in 0..r {
            cols.push(FreeModElem::from_sparse(
                col.comps().iter().map(|(k, p)| (k * r + t, p.clone())).collect(),
            ));
        }
    }
    cols
}

/// `U` placed in every block of the cover, with degrees.
fn relation_blocks(twists: &[i32], n: &GradedModule) -> (Vec<FreeModElem>, Vec<i32>) {
    let r = n.rank();
    let mut gens = Vec::new();
    let mut degs = Vec::new();
    for (l, &b) in twists.iter().enumerate() {
        for (u, &du) in n.relations().iter().zip(n.relation_degrees()) {
            gens.push(u.reindex(|t| Some(l * r + t)));
            degs.push(du + b);
        }
    }
    (gens, degs)
}

/// Homology at a node as a finitely presented graded module.
///
/// Cycles are the preimage of `U` under the lifted outgoing map, found as
/// syzygies; the homology is presented on a minimal set of cycles with
/// relations coming from the syzygies of cycles against boundaries and `U`.
pub fn node_homology_module(node: &Node, n: &GradedModule) -> Result<GradedModule> {
    let ring: &Ring = n.ring();
    let cover = cover_twists(&node.twists, n);
    let m = cover.len();
    let (u_here, u_here_deg) = relation_blocks(&node.twists, n);
    // Cycles.
    let cycles: Vec<(FreeModElem, i32)> = match &node.out {
        None => (0..m)
            .map(|k| {
                (
                    FreeModElem::basis(k, ring.nvars(), ring.field()),
                    cover[k],
                )
            })
            .collect(),
        Some(f) => {
            let tgt_cover = cover_twists(&f.tgt, n);
            let (u_there, u_there_deg) = relation_blocks(&f.tgt, n);
            let mut gens = lift_map(f, n);
            let mut degs = cover.clone();
            gens.extend(u_there);
            degs.extend(u_there_deg);
            let syz = SubmodulePres::with_degrees(ring.clone(), tgt_cover, gens, degs)?.syzygies();
            let mut out: Vec<(FreeModElem, i32)> = Vec::new();
            for (s, d) in syz.generators().iter().zip(syz.degrees()) {
                let z = s.reindex(|k| if k < m { Some(k) } else { None });
                if !z.is_zero() {
                    out.push((z, *d));
                }
            }
            let pres = SubmodulePres::with_degrees(
                ring.clone(),
                cover.clone(),
                out.iter().map(|p| p.0.clone()).collect(),
                out.iter().map(|p| p.1).collect(),
            )?
            .minimalized();
            pres.generators()
                .iter()
                .cloned()
                .zip(pres.degrees().iter().copied())
                .collect()
        }
    };
    if cycles.is_empty() {
        return Ok(GradedModule::free(ring.clone(), Vec::new()));
    }
    // Boundaries plus U.
    let mut bounds: Vec<FreeModElem> = Vec::new();
    let mut bdeg: Vec<i32> = Vec::new();
    if let Some(g) = &node.inc {
        let src_cover = cover_twists(&g.src, n);
        bounds.extend(lift_map(g, n));
        bdeg.extend(src_cover);
    }
    bounds.extend(u_here);
    bdeg.extend(u_here_deg);
    let c = cycles.len();
    let mut gens: Vec<FreeModElem> = cycles.iter().map(|p| p.0.clone()).collect();
    let mut degs: Vec<i32> = cycles.iter().map(|p| p.1).collect();
    gens.extend(bounds);
    degs.extend(bdeg);
    let syz = SubmodulePres::with_degrees(ring.clone(), cover, gens, degs)?.syzygies();
    let rels: Vec<FreeModElem> = syz
        .generators()
        .iter()
        .map(|s| s.reindex(|k| if k < c { Some(k) } else { None }))
        .filter(|s| !s.is_zero())
        .collect();
    let twists: Vec<i32> = cycles.iter().map(|p| p.1).collect();
    Ok(GradedModule::cokernel(ring.clone(), twists, rels)?.minimalized())
}
