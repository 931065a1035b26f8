use serde::Serialize;

use super::module::GradedModule;
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::groebner::{FreeModElem, FreeModule, Ring, SubmodulePres};
use crate::linalg::{kernel, Echelon, SparseVec};

/// Inclusive range of internal degrees used to truncate infinite computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub lo: i32,
    pub hi: i32,
}

impl DegreeWindow {
    pub fn new(lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty degree window [{lo}, {hi}]")));
        }
        Ok(DegreeWindow { lo, hi })
    }

    pub fn contains(&self, d: i32) -> bool {
        self.lo <= d && d <= self.hi
    }
}

/// Minimal graded free resolution `... -> F_2 -> F_1 -> F_0`, possibly truncated.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Ring,
    twists: Vec<Vec<i32>>,
    maps: Vec<Vec<FreeModElem>>,
    complete: bool,
    window: Option<DegreeWindow>,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Largest `i` for which `F_i` is known.
    pub fn length_computed(&self) -> usize {
        self.twists.len() - 1
    }

    /// True when the resolution is known to stop: `F_{i} = 0` past the last term.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Internal-degree truncation: twists above `hi` were not computed.
    pub fn window(&self) -> Option<DegreeWindow> {
        self.window
    }

    /// Twists of `F_i`; empty past the end of a complete resolution.
    pub fn twists(&self, i: usize) -> &[i32] {
        self.twists.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists(i).len()
    }

    /// Columns of `∂_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> &[FreeModElem] {
        if i == 0 {
            return &[];
        }
        self.maps.get(i - 1).map_or(&[], |v| v.as_slice())
    }

    /// Projective dimension, when the resolution is complete.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        Some(self.twists.iter().rposition(|t| !t.is_empty()).unwrap_or(0))
    }

    /// Checks `∂_i ∂_{i+1} = 0` and that no entry has a nonzero constant term.
    pub fn verify(&self) -> Result<()> {
        for i in 1..self.twists.len() {
            for (k, col) in self.differential(i).iter().enumerate() {
                if col.comps().iter().any(|(_, p)| p.degree() == Some(0)) {
                    return Err(Error::MathematicalDiscrepancy(format!(
                        "column {k} of differential {i} has a unit entry"
                    )));
                }
                if i >= 2 {
                    let prev = self.differential(i - 1);
                    let mut img = FreeModElem::zero();
                    for (j, p) in col.comps() {
                        img = img.add(&prev[*j].mul_poly(p));
                    }
                    let img = img.map_comps(|p| self.ring.normal_form(p));
                    if !img.is_zero() {
                        return Err(Error::MathematicalDiscrepancy(format!(
                            "differential {} composed with {} is nonzero on column {k}",
                            i - 1,
                            i
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Ω^i M = coker(∂_{i+1} : F_{i+1} -> F_i)`; requires `i + 1 <= length_computed()`
    /// unless the resolution is complete.
    pub fn syzygy_module(&self, i: usize) -> Result<GradedModule> {
        if i + 1 > self.length_computed() && !self.complete {
            return Err(Error::InsufficientWindow {
                got: self.length_computed(),
                need: i + 1,
            });
        }
        GradedModule::cokernel(self.ring.clone(), self.twists(i).to_vec(), self.differential(i + 1).to_vec())
            .map(|m| m.labeled(&format!("syz{i}")))
    }
}

/// Minimal graded free resolution of `M` up to homological degree `max_i`.
///
/// Over artinian rings the kernels are computed degree by degree with linear
/// algebra; otherwise syzygies come from Gröbner bases and the computation
/// stops early once a kernel vanishes.
pub fn minimal_resolution(m: &GradedModule, max_i: usize) -> Result<FreeResolution> {
    resolve(m, max_i, None)
}

/// Minimal resolution truncated to generators of internal degree `<= window.hi`.
/// Betti numbers `β_{i,j}` with `j <= window.hi` are exact.
pub fn minimal_resolution_in_window(m: &GradedModule, max_i: usize, window: DegreeWindow) -> Result<FreeResolution> {
    resolve(m, max_i, Some(window))
}

fn resolve(m: &GradedModule, max_i: usize, window: Option<DegreeWindow>) -> Result<FreeResolution> {
    let ring = m.ring().clone();
    let min = m.minimalized();
    let mut twists: Vec<Vec<i32>> = vec![min.twists().to_vec()];
    let mut maps: Vec<Vec<FreeModElem>> = Vec::new();
    let mut complete = twists[0].is_empty();
    let top = ring.top_degree();
    let linear = top.is_some() || window.is_some();
    if max_i >= 1 && !complete {
        let mut f1: Vec<(i32, FreeModElem)> = min
            .relation_degrees()
            .iter()
            .copied()
            .zip(min.relations().iter().cloned())
            .filter(|(d, _)| window.is_none_or(|w| *d <= w.hi))
            .collect();
        f1.sort_by_key(|(d, _)| *d);
        complete = min.relations().is_empty();
        twists.push(f1.iter().map(|(d, _)| *d).collect());
        maps.push(f1.into_iter().map(|(_, c)| c).collect());
    }
    let mut i = 1;
    while i < max_i && !complete {
        let src = &twists[i];
        let tgt = &twists[i - 1];
        let cols = &maps[i - 1];
        let (nt, nc) = if src.is_empty() {
            (Vec::new(), Vec::new())
        } else if linear {
            let hi = match (top, window) {
                (Some(t), Some(w)) => (src.iter().max().unwrap() + t as i32).min(w.hi),
                (Some(t), None) => src.iter().max().unwrap() + t as i32,
                (None, Some(w)) => w.hi,
                (None, None) => unreachable!(),
            };
            kernel_step_linear(&ring, src, tgt, cols, *src.iter().min().unwrap(), hi)
        } else {
            kernel_step_groebner(&ring, src, tgt, cols)?
        };
        complete = nt.is_empty() && window.is_none();
        twists.push(nt);
        maps.push(nc);
        i += 1;
    }
    Ok(FreeResolution {
        ring,
        twists,
        maps,
        complete,
        window,
    })
}

/// New generators of `ker(∂: F_src -> F_tgt)` in degrees `lo..=hi`, found as
/// complements of `m * ker` in each graded piece of the kernel.
fn kernel_step_linear(
    ring: &Ring,
    src: &[i32],
    tgt: &[i32],
    cols: &[FreeModElem],
    lo: i32,
    hi: i32,
) -> (Vec<i32>, Vec<FreeModElem>) {
    let field = ring.field();
    let fs = FreeModule::new(ring.clone(), src.to_vec());
    let ft = FreeModule::new(ring.clone(), tgt.to_vec());
    let vars: Vec<Poly> = (0..ring.nvars()).map(|v| ring.var(v)).collect();
    let mut new_twists = Vec::new();
    let mut new_cols = Vec::new();
    let mut prev: Option<(crate::groebner::FreePiece, Vec<SparseVec>)> = None;
    for d in lo..=hi {
        let sp = fs.piece(d);
        if sp.dim == 0 {
            prev = Some((sp, Vec::new()));
            continue;
        }
        let tp = ft.piece(d);
        let images: Vec<SparseVec> = (0..sp.dim)
            .map(|idx| {
                let (j, mono) = sp.locate(idx);
                ft.coords(&cols[j].mul_term(mono, &field.one()), &tp)
            })
            .collect();
        let ker = kernel(field, &images);
        let mut ech = Echelon::new(field);
        if let Some((pp, pk)) = &prev {
            for v in pk {
                for x in &vars {
                    ech.insert(&fs.mul_coords(x, v, pp, &sp));
                }
            }
        }
        for v in &ker {
            if ech.insert(v) {
                new_twists.push(d);
                new_cols.push(fs.element(v, &sp));
            }
        }
        prev = Some((sp, ker));
    }
    (new_twists, new_cols)
}

fn kernel_step_groebner(
    ring: &Ring,
    src: &[i32],
    tgt: &[i32],
    cols: &[FreeModElem],
) -> Result<(Vec<i32>, Vec<FreeModElem>)> {
    let pres = SubmodulePres::with_degrees(ring.clone(), tgt.to_vec(), cols.to_vec(), src.to_vec())?;
    let syz = pres.syzygies().minimalized();
    let mut pairs: Vec<(i32, FreeModElem)> = syz
        .degrees()
        .iter()
        .copied()
        .zip(syz.generators().iter().cloned())
        .collect();
    pairs.sort_by_key(|(d, _)| *d);
    Ok(pairs.into_iter().unzip())
}
