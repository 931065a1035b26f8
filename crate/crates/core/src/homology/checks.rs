use std::collections::BTreeMap;

use serde::Serialize;

use super::tor::ext_table;
use crate::arith::Coef;
use crate::error::{Error, Result};
use crate::linalg::{rank, sv_from_map};
use crate::resolution::{minimal_resolution, DegreeWindow, GradedModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemidualizingVerdict {
    SemidualizingInWindow,
    NotSemidualizing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemidualizingCheck {
    /// `dim_k Ext^i(M, M)` for `0 <= i <= max_i`.
    pub ext_ranks: Vec<usize>,
    pub ring_length: usize,
    /// Rank of the homothety map `R -> Hom_R(M, M)`.
    pub homothety_rank: usize,
    pub homothety_bijective: bool,
    pub max_i: usize,
    pub verdict: SemidualizingVerdict,
}

/// Rank of `r ↦ (m ↦ r m)` from `R` into `End_k(M)`.
fn homothety_rank(m: &GradedModule) -> Result<usize> {
    let r = m.ring();
    let (lo, hi) = m.degree_range().ok_or(Error::RequiresFiniteLength)?;
    let top = r.top_degree().ok_or(Error::RequiresFiniteLength)? as i32;
    let mut offsets = BTreeMap::new();
    let mut total = 0;
    for d in lo..=hi {
        offsets.insert(d, total);
        total += m.dim(d);
    }
    let mut images = Vec::new();
    for e in 0..=top {
        for mono in r.std_basis(e).monos.iter() {
            let f = crate::arith::Poly::monomial(mono.clone(), r.field().one());
            let mut v: BTreeMap<usize, Coef> = BTreeMap::new();
            for d in lo..=(hi - e) {
                let act = m.action(&f, d);
                for (t, col) in act.iter().enumerate() {
                    for (k, c) in col {
                        v.insert((offsets[&d] + t) * total + offsets[&(d + e)] + k, c.clone());
                    }
                }
            }
            images.push(sv_from_map(v));
        }
    }
    Ok(rank(r.field(), &images))
}

/// Tests `Ext^i(M, M) = 0` for `1 <= i <= max_i` and bijectivity of the
/// homothety map `R -> Hom_R(M, M)`, over an artinian ring.
pub fn semidualizing_check(m: &GradedModule, max_i: usize) -> Result<SemidualizingCheck> {
    let r = m.ring();
    if !r.is_artinian() {
        return Err(Error::RequiresFiniteLength);
    }
    let ring_length = r.length().ok_or(Error::RequiresFiniteLength)?;
    let ext = ext_table(m, m, max_i, None)?;
    let homothety_rank = if m.is_zero() { 0 } else { homothety_rank(m)? };
    let homothety_bijective = homothety_rank == ring_length && ext.ranks[0] == ring_length;
    let vanishing = ext.ranks.iter().skip(1).all(|&x| x == 0);
    Ok(SemidualizingCheck {
        verdict: if vanishing && homothety_bijective {
            SemidualizingVerdict::SemidualizingInWindow
        } else {
            SemidualizingVerdict::NotSemidualizing
        },
        ext_ranks: ext.ranks,
        ring_length,
        homothety_rank,
        homothety_bijective,
        max_i,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArVerdict {
    /// The last nonzero `Ext^i(M, R ⊕ M)` sits at `pdim M`.
    ConsistentFinitePd,
    /// No terminal vanishing and no finite resolution in the window.
    ConsistentNoVanishing,
    /// Ext vanishes at the end of the window but the resolution has not
    /// terminated there; nothing can be concluded from finite data.
    UndeterminedInWindow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuslanderReitenWindow {
    /// `dim_k Ext^i(M, R ⊕ M)` for `0 <= i <= max_i`.
    pub ext_ranks: Vec<usize>,
    pub last_nonzero: Option<usize>,
    pub terminal_zero_run: usize,
    pub projective_dimension: Option<usize>,
    pub max_i: usize,
    pub internal_window: Option<DegreeWindow>,
    pub verdict: ArVerdict,
}

/// Compares `sup{i : Ext^i(M, R ⊕ M) ≠ 0}` in `[0, max_i]` with the
/// projective dimension read off the minimal resolution.
pub fn auslander_reiten_window(
    m: &GradedModule,
    max_i: usize,
    window: Option<DegreeWindow>,
) -> Result<AuslanderReitenWindow> {
    let target = GradedModule::ring_module(m.ring()).direct_sum(m)?;
    let ext = ext_table(m, &target, max_i, window)?;
    let res = minimal_resolution(m, max_i + 1)?;
    let pdim = res.projective_dimension();
    let last_nonzero = ext.ranks.iter().rposition(|&x| x > 0);
    let terminal_zero_run = ext.ranks.iter().rev().take_while(|&&x| x == 0).count();
    let verdict = match pdim {
        Some(p) if last_nonzero == Some(p) => ArVerdict::ConsistentFinitePd,
        Some(p) => {
            return Err(Error::MathematicalDiscrepancy(format!(
                "projective dimension {p} but the last nonzero Ext^i(M, R+M) is at {last_nonzero:?}"
            )))
        }
        None if terminal_zero_run == 0 => ArVerdict::ConsistentNoVanishing,
        None => ArVerdict::UndeterminedInWindow,
    };
    Ok(AuslanderReitenWindow {
        ext_ranks: ext.ranks,
        last_nonzero,
        terminal_zero_run,
        projective_dimension: pdim,
        max_i,
        internal_window: window,
        verdict,
    })
}
