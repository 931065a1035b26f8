use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{series_of_rational, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::Ring;
use crate::resolution::{minimal_resolution, module_over_ambient, GradedModule};

/// `H_M(z) = z^shift * h(z) / (1-z)^pole_order` with `h(1) != 0` when reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: UniPoly,
    pub pole_order: usize,
    /// Lowest possible degree; the numerator is stored with this factor removed.
    pub shift: i32,
    pub reduced: bool,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries {
            numerator: UniPoly::zero(),
            pole_order: 0,
            shift: 0,
            reduced: true,
        }
    }

    /// A polynomial Hilbert function `1 + e z + s z^2 + ...` of a finite-length module.
    pub fn from_polynomial(h: UniPoly) -> Self {
        HilbertSeries {
            numerator: h,
            pole_order: 0,
            shift: 0,
            reduced: true,
        }
        .reduce()
    }

    /// Divides out common factors `1 - z` between numerator and denominator.
    pub fn reduce(mut self) -> Self {
        let one_minus_z = UniPoly::from_i64s(&[1, -1]);
        while self.pole_order > 0 && !self.numerator.is_zero() && self.numerator.eval(&BigInt::one()).is_zero() {
            self.numerator = self.numerator.div_exact(&one_minus_z).expect("root at 1");
            self.pole_order -= 1;
        }
        self.reduced = true;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `h(1)` of the reduced numerator.
    pub fn multiplicity(&self) -> u64 {
        self.numerator.eval(&BigInt::one()).to_u64().unwrap_or(0)
    }

    /// Coefficients of `z^shift, ..., z^(shift + n)`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let den = UniPoly::from_i64s(&[1, -1]).pow(self.pole_order as u32);
        series_of_rational(&self.numerator, &den, n)
            .expect("unit constant term")
            .coeffs()
            .to_vec()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        let lead = match self.shift {
            0 => String::new(),
            1 => "z*".to_string(),
            s => format!("z^{s}*"),
        };
        match self.pole_order {
            0 => write!(f, "{lead}({num})"),
            1 => write!(f, "{lead}({num})/(1 - z)"),
            p => write!(f, "{lead}({num})/(1 - z)^{p}"),
        }
    }
}

/// Exact Hilbert series from the resolution over the ambient polynomial ring:
/// `H_M(z)(1-z)^n = Σ_i (-1)^i Σ_j β_{ij} z^j`, reduced by powers of `1 - z`,
/// then cross-checked against standard-monomial counts in low degrees.
pub fn hilbert_series(m: &GradedModule) -> Result<HilbertSeries> {
    let n = m.ring().nvars();
    if m.rank() == 0 || m.is_zero() {
        return Ok(HilbertSeries::zero());
    }
    let over_p = module_over_ambient(m);
    let res = minimal_resolution(&over_p, n + 1)?;
    if !res.is_complete() {
        return Err(Error::MathematicalDiscrepancy(
            "resolution over a polynomial ring did not terminate".into(),
        ));
    }
    let shift = *res.twists(0).iter().min().unwrap_or(&0);
    let top = (0..=res.length_computed())
        .flat_map(|i| res.twists(i).iter().copied())
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); (top - shift + 1) as usize];
    for i in 0..=res.length_computed() {
        for &t in res.twists(i) {
            let c = &mut coeffs[(t - shift) as usize];
            if i % 2 == 0 {
                *c += 1;
            } else {
                *c -= 1;
            }
        }
    }
    let h = HilbertSeries {
        numerator: UniPoly::new(coeffs),
        pole_order: n,
        shift,
        reduced: false,
    }
    .reduce();
    // Staircase cross-check over a range covering every twist and beyond.
    let span = (top - shift) as usize + n + 2;
    let expect = h.expand(span);
    for (k, e) in expect.iter().enumerate() {
        let d = shift + k as i32;
        let got = m.dim(d);
        if BigInt::from(got) != *e {
            return Err(Error::MathematicalDiscrepancy(format!(
                "Hilbert function in degree {d}: resolution gives {e}, standard monomials give {got}"
            )));
        }
    }
    Ok(h)
}

/// `h_R(1)` for the reduced Hilbert numerator of `R`.
pub fn multiplicity(r: &Ring) -> Result<u64> {
    Ok(hilbert_series(&GradedModule::ring_module(r))?.multiplicity())
}
