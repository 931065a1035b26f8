use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::module::GradedModule;
use super::resolve::{minimal_resolution, FreeResolution};
use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}` of a minimal resolution, up to a homological bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `entries[i]` maps internal degree `j` to `β_{i,j}`.
    pub entries: Vec<BTreeMap<i32, usize>>,
    /// Largest homological degree computed.
    pub truncation: usize,
    /// True when all `β_i` past the table are known to vanish.
    pub complete: bool,
}

impl BettiTable {
    pub fn from_resolution(res: &FreeResolution) -> Self {
        let entries = (0..=res.length_computed())
            .map(|i| {
                let mut row = BTreeMap::new();
                for &t in res.twists(i) {
                    *row.entry(t).or_insert(0) += 1;
                }
                row
            })
            .collect();
        BettiTable {
            entries,
            truncation: res.length_computed(),
            complete: res.is_complete(),
        }
    }

    /// Builds a table from total Betti numbers only (all placed in degree `i`).
    pub fn from_totals(totals: &[usize]) -> Self {
        let entries = totals
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let mut row = BTreeMap::new();
                if b > 0 {
                    row.insert(i as i32, b);
                }
                row
            })
            .collect();
        BettiTable {
            entries,
            truncation: totals.len().saturating_sub(1),
            complete: false,
        }
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(i).and_then(|r| r.get(&j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.get(i).map_or(0, |r| r.values().sum())
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.truncation).map(|i| self.total(i)).collect()
    }

    /// Largest `i` with `β_i != 0`, if the table is complete.
    pub fn projective_dimension(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        Some((0..=self.truncation).rev().find(|&i| self.total(i) > 0).unwrap_or(0))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Macaulay2 layout: row r holds β_{i, i+r}.
        let mut rows: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (&j, &b) in row {
                rows.entry(j - i as i32).or_insert_with(|| vec![0; self.truncation + 1])[i] = b;
            }
        }
        let w = self
            .totals()
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        write!(f, "{:>6}", "total:")?;
        for t in self.totals() {
            write!(f, " {t:>w$}")?;
        }
        for (r, vals) in rows {
            writeln!(f)?;
            write!(f, "{:>5}:", r)?;
            for v in vals {
                if v == 0 {
                    write!(f, " {:>w$}", ".")?;
                } else {
                    write!(f, " {v:>w$}")?;
                }
            }
        }
        Ok(())
    }
}

/// Graded and total Betti numbers of `M` up to homological degree `max_i`.
pub fn betti_table(m: &GradedModule, max_i: usize) -> Result<BettiTable> {
    Ok(BettiTable::from_resolution(&minimal_resolution(m, max_i)?))
}

/// Growth class suggested by a finite stretch of Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "degree")]
pub enum GrowthClass {
    FinitePd,
    Bounded,
    Polynomial(u32),
    ExponentialLike,
}

/// Heuristic reading of Betti growth. This is evidence only, never a proof.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexityEvidence {
    pub cx_lower_evidence: u32,
    pub classification: GrowthClass,
    /// Homological degrees `[from, to]` the fit was made on.
    pub window: (usize, usize),
}

/// Fits the top half of the Betti sequence.
///
/// A vanishing tail reads as finite projective dimension, a constant tail as
/// bounded. Otherwise `log β_n` is fitted both against `log(n+1)` and against
/// `n`; the better fit decides between polynomial growth of the fitted degree
/// and exponential-like growth.
pub fn complexity_estimate(b: &BettiTable) -> Result<ComplexityEvidence> {
    const NEED: usize = 6;
    if b.truncation < NEED {
        return Err(Error::InsufficientWindow {
            got: b.truncation,
            need: NEED,
        });
    }
    let totals = b.totals();
    let n = b.truncation;
    let from = n / 2;
    let window = (from, n);
    let tail = &totals[from..=n];
    if tail.iter().all(|&t| t == 0) || b.complete {
        return Ok(ComplexityEvidence {
            cx_lower_evidence: 0,
            classification: GrowthClass::FinitePd,
            window,
        });
    }
    if tail.iter().all(|&t| t == tail[0]) {
        return Ok(ComplexityEvidence {
            cx_lower_evidence: 1,
            classification: GrowthClass::Bounded,
            window,
        });
    }
    let pts: Vec<(f64, f64)> = (from..=n)
        .filter(|&i| totals[i] > 0)
        .map(|i| (i as f64, (totals[i] as f64).ln()))
        .collect();
    let poly_pts: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| ((x + 1.0).ln(), y)).collect();
    let (poly_slope, poly_res) = least_squares(&poly_pts);
    let (exp_slope, exp_res) = least_squares(&pts);
    let degree = poly_slope.round().max(0.0) as u32;
    let classification = if exp_res < poly_res && exp_slope > 0.05 {
        GrowthClass::ExponentialLike
    } else if degree == 0 {
        GrowthClass::Bounded
    } else {
        GrowthClass::Polynomial(degree + 1)
    };
    Ok(ComplexityEvidence {
        cx_lower_evidence: degree + 1,
        classification,
        window,
    })
}

/// Slope and residual sum of squares of the least-squares line.
fn least_squares(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return (0.0, 0.0);
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let res = pts
        .iter()
        .map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2))
        .sum();
    (slope, res)
}
