use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 z + ... + c_N z^N` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesTrunc {
    coeffs: Vec<BigInt>,
}

impl SeriesTrunc {
    /// Series with exactly the given coefficients; order is `len - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncation has at least one coefficient");
        SeriesTrunc { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        SeriesTrunc::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Truncation of a polynomial to order `n`.
    pub fn from_poly(p: &UniPoly, n: usize) -> Self {
        SeriesTrunc::new((0..=n).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn truncate(&self, n: usize) -> SeriesTrunc {
        SeriesTrunc::new(self.coeffs[..=n.min(self.order())].to_vec())
    }

    /// Coefficientwise `self <= other` on the common range.
    pub fn le_coefficientwise(&self, other: &SeriesTrunc) -> bool {
        self.coeffs.iter().zip(other.coeffs.iter()).all(|(a, b)| a <= b)
    }

    /// First index where the coefficients differ, on the common range.
    pub fn first_difference(&self, other: &SeriesTrunc) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .position(|(a, b)| a != b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeriesTrunc{self}")
    }
}

impl Serialize for SeriesTrunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Coefficients of `num/den` up to `z^n` by exact long division.
///
/// The constant term of `den` must be a unit (`1` or `-1`), so the expansion
/// stays integral.
pub fn series_of_rational(num: &UniPoly, den: &UniPoly, n: usize) -> Result<SeriesTrunc> {
    let d0 = den.constant_term();
    if !d0.abs().is_one() {
        return Err(Error::NotASeriesUnit(d0.to_string()));
    }
    let dc = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num.coeff(k);
        for j in 1..dc.len().min(k + 1) {
            acc -= &dc[j] * &out[k - j];
        }
        let (q, r) = acc.div_rem(&d0);
        debug_assert!(r.is_zero());
        out.push(q);
    }
    Ok(SeriesTrunc::new(out))
}
