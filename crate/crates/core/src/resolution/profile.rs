use serde::Serialize;

use super::module::GradedModule;
use super::resolve::minimal_resolution;
use crate::error::{Error, Result};
use crate::groebner::{FreeModElem, Ring};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::series::hilbert_series;

/// Numerical invariants of a graded ring `R = P/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingProfile {
    pub edim: usize,
    pub dim: usize,
    pub depth: usize,
    pub codepth: usize,
    pub multiplicity: u64,
    /// Number of minimal generators of the defining ideal.
    pub num_relations: usize,
    /// Last nonzero Betti number of `R` over `P`.
    pub cm_type: usize,
    /// Socle dimension, for artinian rings.
    pub socle_dim: Option<usize>,
    pub is_cohen_macaulay: bool,
    pub is_gorenstein: bool,
    pub is_ci: bool,
    pub is_almost_ci: bool,
    /// Largest `N` up to which the Poincaré series of `k` was found to meet
    /// the upper (Golod) bound; filled in by the series module on request.
    pub golod_up_to: Option<usize>,
    /// Betti numbers of `R` over `P`.
    pub betti_over_p: Vec<usize>,
}

/// `R` viewed as a module over its ambient polynomial ring.
pub fn ring_over_ambient(r: &Ring) -> GradedModule {
    let p = r.ambient();
    let rels = r
        .ideal()
        .generators()
        .iter()
        .map(|g| FreeModElem::single(0, g.clone()))
        .collect();
    GradedModule::cokernel(p, vec![0], rels).expect("generators are homogeneous")
}

/// A module over `R` viewed as a module over the ambient polynomial ring.
pub fn module_over_ambient(m: &GradedModule) -> GradedModule {
    let r = m.ring();
    let p = r.ambient();
    let mut rels = m.relations().to_vec();
    for j in 0..m.rank() {
        for g in r.ideal().generators() {
            rels.push(FreeModElem::single(j, g.clone()));
        }
    }
    GradedModule::cokernel(p, m.twists().to_vec(), rels).expect("homogeneous relations")
}

/// Edim, dim, depth, multiplicity, socle and the CI / Gorenstein flags.
///
/// The ring is first minimalized. Depth comes from the Auslander–Buchsbaum
/// formula applied to the finite resolution of `R` over `P`, dim and
/// multiplicity from the reduced Hilbert series.
pub fn profile(r: &Ring) -> Result<RingProfile> {
    let r = r.minimalize()?;
    let n = r.nvars();
    let res = minimal_resolution(&ring_over_ambient(&r), n + 1)?;
    let pd = res.projective_dimension().ok_or_else(|| {
        Error::MathematicalDiscrepancy("resolution over a polynomial ring did not terminate".into())
    })?;
    let betti: Vec<usize> = (0..=pd).map(|i| res.rank(i)).collect();
    let h = hilbert_series(&GradedModule::ring_module(&r))?;
    let dim = h.pole_order;
    let depth = n - pd;
    let c = betti.get(1).copied().unwrap_or(0);
    let cm = depth == dim;
    let cm_type = betti[pd];
    let socle_dim = if r.is_artinian() {
        Some(socle(&GradedModule::ring_module(&r))?.dim)
    } else {
        None
    };
    if let Some(s) = socle_dim {
        if s != cm_type {
            return Err(Error::MathematicalDiscrepancy(format!(
                "socle dimension {s} differs from the last Betti number {cm_type} over P"
            )));
        }
    }
    Ok(RingProfile {
        edim: n,
        dim,
        depth,
        codepth: n - depth,
        multiplicity: h.multiplicity(),
        num_relations: c,
        cm_type,
        socle_dim,
        is_cohen_macaulay: cm,
        is_gorenstein: cm && cm_type == 1,
        is_ci: c == n - dim,
        is_almost_ci: c == n - dim + 1,
        golod_up_to: None,
        betti_over_p: betti,
    })
}

/// Socle `(0 :_M m)` of a finite-length module with containment flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleInfo {
    pub dim: usize,
    /// `(degree, dimension)` of the nonzero graded pieces.
    pub dims_by_degree: Vec<(i32, usize)>,
    /// Representatives in the cover of `M`, one per basis vector, with degrees.
    #[serde(skip)]
    pub basis: Vec<(i32, FreeModElem)>,
    /// Socle contained in `mM`.
    pub in_m_m: bool,
    /// Socle contained in `m^2 M`.
    pub in_m2_m: bool,
}

/// Images of `mM_{d-1}`-type subspaces: span of `x_v * basis` for every variable.
fn multiply_span(m: &GradedModule, basis: &[SparseVec], d_from: i32) -> Vec<SparseVec> {
    let r = m.ring();
    let mut out = Vec::new();
    for v in 0..r.nvars() {
        let x = r.var(v);
        for b in basis {
            let w = m.act(&x, b, d_from);
            if !w.is_empty() {
                out.push(w);
            }
        }
    }
    out
}

pub fn socle(m: &GradedModule) -> Result<SocleInfo> {
    let (lo, hi) = m.degree_range().ok_or(Error::RequiresFiniteLength)?;
    let r = m.ring();
    let field = r.field();
    let mut info = SocleInfo {
        dim: 0,
        dims_by_degree: Vec::new(),
        basis: Vec::new(),
        in_m_m: true,
        in_m2_m: true,
    };
    // Bases of mM and m^2 M in the previous degree.
    let mut mm_prev: Vec<SparseVec> = Vec::new();
    let mut full_prev: Vec<SparseVec> = Vec::new();
    for d in lo..=hi {
        let dim = m.dim(d);
        let unit = |i: usize| vec![(i, field.one())];
        let full: Vec<SparseVec> = (0..dim).map(unit).collect();
        let (mm, m2m) = if d == lo {
            (Vec::new(), Vec::new())
        } else {
            (
                multiply_span(m, &full_prev, d - 1),
                multiply_span(m, &mm_prev, d - 1),
            )
        };
        let next = m.dim(d + 1);
        let cols: Vec<SparseVec> = (0..dim)
            .map(|i| {
                let mut col = Vec::new();
                for v in 0..r.nvars() {
                    for (k, c) in m.act(&r.var(v), &unit(i), d) {
                        col.push((v * next + k, c));
                    }
                }
                col
            })
            .collect();
        let soc = kernel(field, &cols);
        if !soc.is_empty() {
            let mut e1 = Echelon::new(field);
            for v in &mm {
                e1.insert(v);
            }
            let mut e2 = Echelon::new(field);
            for v in &m2m {
                e2.insert(v);
            }
            for s in &soc {
                info.in_m_m &= e1.contains(s);
                info.in_m2_m &= e2.contains(s);
                info.basis.push((d, m.element(s, d)));
            }
            info.dim += soc.len();
            info.dims_by_degree.push((d, soc.len()));
        }
        full_prev = full;
        mm_prev = {
            let mut e = Echelon::new(field);
            for v in &mm {
                e.insert(v);
            }
            e.rows().cloned().collect()
        };
    }
    Ok(info)
}

/// `k` is a direct summand of `M` exactly when the socle is not inside `mM`.
pub fn has_k_summand(m: &GradedModule) -> Result<bool> {
    Ok(!socle(m)?.in_m_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{default_var_names, Field, Poly};
    use crate::groebner::GradedRing;

    fn ring(n: usize, gens: impl Fn(&[Poly]) -> Vec<Poly>) -> Ring {
        let f = Field::Prime(32003);
        let v: Vec<Poly> = (0..n).map(|i| Poly::var(n, f, i)).collect();
        GradedRing::new(f, default_var_names(n), gens(&v)).unwrap()
    }

    #[test]
    fn socle_of_short_ring() {
        // k[x,y]/(x^2, xy, y^3): socle spanned by x and y^2
        let r = ring(2, |v| vec![v[0].mul(&v[0]), v[0].mul(&v[1]), v[1].pow(3)]);
        let s = socle(&GradedModule::ring_module(&r)).unwrap();
        assert_eq!(s.dim, 2);
        assert_eq!(s.dims_by_degree, vec![(1, 1), (2, 1)]);
        assert!(!s.in_m2_m);
        assert!(s.in_m_m);
    }

    #[test]
    fn socle_of_complete_intersection() {
        let r = ring(2, |v| vec![v[0].mul(&v[0]), v[1].mul(&v[1])]);
        let s = socle(&GradedModule::ring_module(&r)).unwrap();
        assert_eq!(s.dim, 1);
        assert!(s.in_m2_m);
        assert!(!has_k_summand(&GradedModule::ring_module(&r)).unwrap());
    }

    #[test]
    fn residue_field_socle() {
        let r = ring(2, |v| vec![v[0].mul(&v[0]), v[1].mul(&v[1])]);
        let k = GradedModule::residue_field(&r);
        let s = socle(&k).unwrap();
        assert_eq!(s.dim, 1);
        assert!(!s.in_m_m);
        assert!(has_k_summand(&k).unwrap());
    }

    #[test]
    fn maximal_ideal_of_square_zero_ring() {
        // m in k[x,y]/(x,y)^2 is k^2, so it has k as a summand.
        let r = ring(2, |v| vec![v[0].mul(&v[0]), v[0].mul(&v[1]), v[1].mul(&v[1])]);
        let mideal = GradedModule::cokernel(
            r.clone(),
            vec![1, 1],
            vec![
                FreeModElem::from_dense(vec![r.var(0), r.zero()]),
                FreeModElem::from_dense(vec![r.var(1), r.zero()]),
                FreeModElem::from_dense(vec![r.zero(), r.var(0)]),
                FreeModElem::from_dense(vec![r.zero(), r.var(1)]),
            ],
        )
        .unwrap();
        assert!(has_k_summand(&mideal).unwrap());
        let ksum = GradedModule::residue_field(&r).direct_sum(&GradedModule::ring_module(&r)).unwrap();
        assert!(has_k_summand(&ksum).unwrap());
    }

    #[test]
    fn non_artinian_socle_rejected() {
        let r = ring(2, |v| vec![v[0].mul(&v[0])]);
        assert_eq!(socle(&GradedModule::ring_module(&r)).unwrap_err(), Error::RequiresFiniteLength);
    }

    #[test]
    fn profiles() {
        let ci = profile(&ring(2, |v| vec![v[0].mul(&v[0]), v[1].mul(&v[1])])).unwrap();
        assert_eq!((ci.edim, ci.dim, ci.depth, ci.multiplicity), (2, 0, 0, 4));
        assert_eq!(ci.socle_dim, Some(1));
        assert!(ci.is_gorenstein && ci.is_ci);

        let sq = profile(&ring(2, |v| vec![v[0].mul(&v[0]), v[0].mul(&v[1]), v[1].mul(&v[1])])).unwrap();
        assert_eq!((sq.edim, sq.dim, sq.multiplicity, sq.socle_dim), (2, 0, 3, Some(2)));
        assert!(!sq.is_gorenstein && !sq.is_ci);

        let p = profile(&ring(3, |v| vec![v[0].mul(&v[0]), v[0].mul(&v[1])])).unwrap();
        assert_eq!((p.edim, p.dim, p.depth, p.codepth), (3, 2, 1, 2));
        assert!(!p.is_cohen_macaulay);
        assert!(p.is_almost_ci);
    }
}
