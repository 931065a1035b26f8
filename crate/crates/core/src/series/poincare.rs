use num_bigint::BigInt;
use serde::Serialize;

use super::hilbert::HilbertSeries;
use crate::arith::{series_of_rational, SeriesTrunc, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::Ring;
use crate::resolution::{minimal_resolution, profile, GradedModule};

/// `β_0, ..., β_N` of a module, as a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareTruncation {
    pub series: SeriesTrunc,
    pub module: String,
    pub ring: String,
}

pub fn poincare_truncation(m: &GradedModule, n: usize) -> Result<PoincareTruncation> {
    let res = minimal_resolution(m, n)?;
    let coeffs = (0..=n).map(|i| BigInt::from(res.rank(i))).collect();
    Ok(PoincareTruncation {
        series: SeriesTrunc::new(coeffs),
        module: m.label().to_string(),
        ring: m.ring().to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundPosition {
    AtLower,
    AtUpper,
    /// Both bounds agree with the series (complete intersection and Golod).
    AtBoth,
    StrictlyBetween,
}

/// The Poincaré series of `k` between the complete-intersection and Golod bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodBounds {
    pub lower: SeriesTrunc,
    pub upper: SeriesTrunc,
    pub actual: SeriesTrunc,
    pub position: BoundPosition,
    pub order: usize,
    pub edim: usize,
    pub num_relations: usize,
}

impl GolodBounds {
    pub fn at_lower(&self) -> bool {
        matches!(self.position, BoundPosition::AtLower | BoundPosition::AtBoth)
    }

    pub fn at_upper(&self) -> bool {
        matches!(self.position, BoundPosition::AtUpper | BoundPosition::AtBoth)
    }
}

/// Compares `P^R_k(z)` with `(1+z)^e/(1-z^2)^c` and `(1+z)^e/(1+z-z P^P_R(z))`
/// up to order `n`. Violating either inequality is reported as an error, as is
/// disagreement between equality on the left and the numerical CI test.
pub fn golod_bounds(r: &Ring, n: usize) -> Result<GolodBounds> {
    let r = r.minimalize()?;
    let prof = profile(&r)?;
    let e = prof.edim as u32;
    let c = prof.num_relations as u32;
    let one_plus_z_e = UniPoly::from_i64s(&[1, 1]).pow(e);
    let lower = series_of_rational(&one_plus_z_e, &UniPoly::from_i64s(&[1, 0, -1]).pow(c), n)?;
    // 1 + z - z * Σ β_i^P z^i = 1 - Σ_{i>=1} β_i^P z^{i+1}
    let mut den = vec![BigInt::from(1)];
    for (i, b) in prof.betti_over_p.iter().enumerate().skip(1) {
        den.resize(i + 2, BigInt::from(0));
        den[i + 1] -= BigInt::from(*b);
    }
    let upper = series_of_rational(&one_plus_z_e, &UniPoly::new(den), n)?;
    let actual = poincare_truncation(&GradedModule::residue_field(&r), n)?.series;
    for d in 0..=n {
        if lower.coeff(d) > actual.coeff(d) || actual.coeff(d) > upper.coeff(d) {
            return Err(Error::BoundsViolated {
                degree: d,
                detail: format!(
                    "lower {} / actual {} / upper {}",
                    lower.coeff(d),
                    actual.coeff(d),
                    upper.coeff(d)
                ),
            });
        }
    }
    let lo = lower == actual;
    let hi = upper == actual;
    if n >= 3 && lo != prof.is_ci {
        return Err(Error::MathematicalDiscrepancy(format!(
            "lower bound equality up to {n} is {lo} but the numerical complete intersection test gives {}",
            prof.is_ci
        )));
    }
    let position = match (lo, hi) {
        (true, true) => BoundPosition::AtBoth,
        (true, false) => BoundPosition::AtLower,
        (false, true) => BoundPosition::AtUpper,
        (false, false) => BoundPosition::StrictlyBetween,
    };
    Ok(GolodBounds {
        lower,
        upper,
        actual,
        position,
        order: n,
        edim: prof.edim,
        num_relations: prof.num_relations,
    })
}

/// Expansion of `H_M(-z)/H_R(-z)` to order `n`.
pub fn lescot_poincare(hm: &HilbertSeries, hr: &HilbertSeries, n: usize) -> Result<SeriesTrunc> {
    if hm.shift < 0 || hr.shift != 0 {
        return Err(Error::InvalidInput(
            "Hilbert series must start in nonnegative degree, the ring's in degree 0".into(),
        ));
    }
    let one_plus_z = UniPoly::from_i64s(&[1, 1]);
    let sign_shift = UniPoly::monomial(BigInt::from(if hm.shift % 2 == 0 { 1 } else { -1 }), hm.shift as usize);
    let num = hm
        .numerator
        .reflect()
        .mul(&sign_shift)
        .mul(&one_plus_z.pow(hr.pole_order as u32));
    let den = hr.numerator.reflect().mul(&one_plus_z.pow(hm.pole_order as u32));
    series_of_rational(&num, &den, n)
}
