use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::complex::{node_homology_graded, node_homology_module, FreeMap, Node};
use crate::error::{Error, Result};
use crate::resolution::{minimal_resolution, minimal_resolution_in_window, DegreeWindow, FreeResolution, GradedModule};

/// Ranks of `Tor_i` or `Ext^i` for `0 <= i <= max_i`, with graded refinement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomTable {
    pub ranks: Vec<usize>,
    /// `graded[i]` maps internal degree to dimension.
    pub graded: Vec<BTreeMap<i32, usize>>,
    pub max_i: usize,
    pub m: String,
    pub n: String,
    pub ring: String,
    /// Internal degrees the ranks are restricted to, when pieces are infinite.
    pub window: Option<DegreeWindow>,
    /// True when the second argument was resolved instead of the first.
    pub via_second_argument: bool,
}

pub type TorTable = HomTable;
pub type ExtTable = HomTable;

fn check_same_ring(m: &GradedModule, n: &GradedModule) -> Result<()> {
    if Arc::ptr_eq(m.ring(), n.ring()) || m.ring().to_string() == n.ring().to_string() {
        Ok(())
    } else {
        Err(Error::InputMismatch(format!(
            "modules over different rings: {} and {}",
            m.ring(),
            n.ring()
        )))
    }
}

fn tor_node(res: &FreeResolution, i: usize) -> Node {
    let map = |j: usize| -> Option<FreeMap> {
        if j == 0 || res.rank(j) == 0 {
            return None;
        }
        Some(FreeMap::new(
            res.twists(j).to_vec(),
            res.twists(j - 1).to_vec(),
            res.differential(j).to_vec(),
        ))
    };
    Node {
        twists: res.twists(i).to_vec(),
        out: map(i),
        inc: map(i + 1),
    }
}

fn ext_node(res: &FreeResolution, i: usize) -> Node {
    let node = tor_node(res, i);
    Node {
        twists: node.twists.iter().map(|t| -t).collect(),
        out: node.inc.map(|f| f.transpose()),
        inc: node.out.map(|f| f.transpose()),
    }
}

fn table(
    graded: Vec<BTreeMap<i32, usize>>,
    m: &GradedModule,
    n: &GradedModule,
    window: Option<DegreeWindow>,
    swapped: bool,
) -> HomTable {
    HomTable {
        ranks: graded.iter().map(|g| g.values().sum()).collect(),
        max_i: graded.len() - 1,
        graded,
        m: m.label().to_string(),
        n: n.label().to_string(),
        ring: m.ring().to_string(),
        window,
        via_second_argument: swapped,
    }
}

/// `dim_k Tor_i^R(M, N)` for `i <= max_i`, from the minimal resolution of `M`.
///
/// When `N` has infinite length but `M` does not, `N` is resolved instead.
/// When both are infinite, a window of internal degrees is required.
pub fn tor_table(m: &GradedModule, n: &GradedModule, max_i: usize, window: Option<DegreeWindow>) -> Result<TorTable> {
    check_same_ring(m, n)?;
    let (res, tensor, swapped) = if n.is_finite_length() {
        (minimal_resolution(m, max_i + 1)?, n, false)
    } else if m.is_finite_length() && window.is_none() {
        (minimal_resolution(n, max_i + 1)?, m, true)
    } else if let Some(w) = window {
        let nlo = n.twists().iter().copied().min().unwrap_or(0);
        let res = if m.ring().is_artinian() {
            minimal_resolution(m, max_i + 1)?
        } else {
            minimal_resolution_in_window(m, max_i + 1, DegreeWindow::new(w.lo, w.hi - nlo)?)?
        };
        (res, n, false)
    } else {
        return Err(Error::RequiresDegreeBound);
    };
    let graded = (0..=max_i)
        .map(|i| node_homology_graded(&tor_node(&res, i), tensor, window))
        .collect::<Result<Vec<_>>>()?;
    Ok(table(graded, m, n, window, swapped))
}

/// `dim_k Ext^i_R(M, N)` for `i <= max_i`, graded by the degree of maps.
pub fn ext_table(m: &GradedModule, n: &GradedModule, max_i: usize, window: Option<DegreeWindow>) -> Result<ExtTable> {
    check_same_ring(m, n)?;
    if !n.is_finite_length() && window.is_none() {
        return Err(Error::RequiresDegreeBound);
    }
    let res = minimal_resolution(m, max_i + 1)?;
    let graded = (0..=max_i)
        .map(|i| node_homology_graded(&ext_node(&res, i), n, window))
        .collect::<Result<Vec<_>>>()?;
    Ok(table(graded, m, n, window, false))
}

/// `Tor_i^R(M, N)` as a finitely presented graded module (exact, no window).
pub fn tor_module(m: &GradedModule, n: &GradedModule, i: usize) -> Result<GradedModule> {
    check_same_ring(m, n)?;
    let res = minimal_resolution(m, i + 1)?;
    Ok(node_homology_module(&tor_node(&res, i), n)?.labeled(&format!("Tor_{i}")))
}

/// `Ext^i_R(M, N)` as a finitely presented graded module.
pub fn ext_module(m: &GradedModule, n: &GradedModule, i: usize) -> Result<GradedModule> {
    check_same_ring(m, n)?;
    let res = minimal_resolution(m, i + 1)?;
    Ok(node_homology_module(&ext_node(&res, i), n)?.labeled(&format!("Ext^{i}")))
}

/// Exact test for `Tor_i^R(M, N) = 0`.
pub fn tor_vanishes(m: &GradedModule, n: &GradedModule, i: usize) -> Result<bool> {
    Ok(tor_module(m, n, i)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowVerdict {
    VanishesInWindow,
    NonvanishingInWindow,
}

/// Terminal run of zeros in a computed range. Evidence about a window only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingWindow {
    pub first_zero_run_start: Option<usize>,
    pub run_length: usize,
    pub verdict: WindowVerdict,
    pub window: (usize, usize),
}

pub fn vanishing_window(ranks: &[usize]) -> VanishingWindow {
    let run = ranks.iter().rev().take_while(|&&r| r == 0).count();
    let last = ranks.len().saturating_sub(1);
    if run == 0 {
        VanishingWindow {
            first_zero_run_start: None,
            run_length: 0,
            verdict: WindowVerdict::NonvanishingInWindow,
            window: (0, last),
        }
    } else {
        VanishingWindow {
            first_zero_run_start: Some(ranks.len() - run),
            run_length: run,
            verdict: WindowVerdict::VanishesInWindow,
            window: (0, last),
        }
    }
}
