use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{
    default_tolerance, is_irreducible, minimal_modulus_condition, upoly_factor, RootCondition, UniPoly,
};
use crate::error::{Error, Result};

/// `d = p q r` with `p` one or irreducible, `q` with non-negative
/// coefficients, and `r` one or irreducible with no positive real root among
/// its roots of minimal modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodFactorization {
    pub d: UniPoly,
    pub p: UniPoly,
    pub q: UniPoly,
    pub r: UniPoly,
}

impl GoodFactorization {
    /// Re-checks the three conditions and the product from scratch.
    pub fn verify(&self, tol: &BigRational) -> Result<()> {
        let fail = |what: &str| Err(Error::MathematicalDiscrepancy(format!("not a good factorization: {what}")));
        if self.p.mul(&self.q).mul(&self.r) != self.d {
            return fail("p q r differs from d");
        }
        if !self.p.is_one() && !is_irreducible(&self.p) {
            return fail("p is reducible");
        }
        if !self.q.has_nonnegative_coeffs() {
            return fail("q has a negative coefficient");
        }
        if !self.r.is_one() {
            if !is_irreducible(&self.r) {
                return fail("r is reducible");
            }
            match minimal_modulus_condition(&self.r, tol)? {
                RootCondition::Holds => {}
                RootCondition::Fails => return fail("a root of r of minimal modulus is a positive real"),
                RootCondition::Undecided => return Err(Error::ToleranceUndecided(tol.to_string())),
            }
        }
        Ok(())
    }
}

fn root_condition_holds(r: &UniPoly, tol: &BigRational) -> Result<bool> {
    match minimal_modulus_condition(r, tol)? {
        RootCondition::Holds => Ok(true),
        RootCondition::Fails => Ok(false),
        RootCondition::Undecided => Err(Error::ToleranceUndecided(tol.to_string())),
    }
}

/// Fixes signs so that `q` is non-negative, moving a `-1` into `p` or `r`.
fn try_assignment(
    d: &UniPoly,
    p: &UniPoly,
    r: &UniPoly,
    tol: &BigRational,
) -> Result<Option<GoodFactorization>> {
    let Some(q) = d.div_exact(&p.mul(r)) else {
        return Ok(None);
    };
    let (p, q, r) = if q.has_nonnegative_coeffs() {
        (p.clone(), q, r.clone())
    } else if q.neg().has_nonnegative_coeffs() && !p.is_one() {
        (p.neg(), q.neg(), r.clone())
    } else if q.neg().has_nonnegative_coeffs() && !r.is_one() {
        (p.clone(), q.neg(), r.neg())
    } else {
        return Ok(None);
    };
    if !r.is_one() && !root_condition_holds(&r, tol)? {
        return Ok(None);
    }
    Ok(Some(GoodFactorization { d: d.clone(), p, q, r }))
}

/// Searches for a good factorization of `d`.
///
/// First every irreducible factor with non-negative coefficients is kept in
/// `q` and the remaining factors (at most two) are tried as `p` and `r`,
/// larger degree first as `p`. Failing that, all choices of `p` and `r`
/// among `1` and the irreducible factors are tried in factor order.
pub fn good_factorization_search(d: &UniPoly) -> Result<Option<GoodFactorization>> {
    good_factorization_search_with(d, &default_tolerance())
}

pub fn good_factorization_search_with(d: &UniPoly, tol: &BigRational) -> Result<Option<GoodFactorization>> {
    if d.is_zero() {
        return Err(Error::InvalidInput("zero denominator".into()));
    }
    let fa = upoly_factor(d)?;
    let one = UniPoly::one();
    let distinct: Vec<UniPoly> = fa.factors.iter().map(|(f, _)| f.clone()).collect();
    let mut troubled: Vec<UniPoly> = Vec::new();
    for (f, m) in &fa.factors {
        if !f.has_nonnegative_coeffs() {
            for _ in 0..*m {
                troubled.push(f.clone());
            }
        }
    }
    troubled.sort_by(|a, b| b.deg().cmp(&a.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let staged: Vec<(UniPoly, UniPoly)> = match troubled.as_slice() {
        [] => vec![(one.clone(), one.clone())],
        [a] => vec![(a.clone(), one.clone()), (one.clone(), a.clone())],
        [a, b] => vec![(a.clone(), b.clone()), (b.clone(), a.clone())],
        _ => Vec::new(),
    };
    for (p, r) in &staged {
        if let Some(g) = try_assignment(d, p, r, tol)? {
            return Ok(Some(g));
        }
    }
    let choices: Vec<UniPoly> = std::iter::once(one).chain(distinct).collect();
    for p in &choices {
        for r in &choices {
            if let Some(g) = try_assignment(d, p, r, tol)? {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Factorization of `f(z) = (1-z)^m - z` compared with the prediction:
/// irreducible for `m ≢ 5 (mod 6)`, else `z^2 - z + 1` times an irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelmerReport {
    pub m: u32,
    pub f: UniPoly,
    pub factors: Vec<(UniPoly, u32)>,
    pub irreducible: bool,
    pub predicted_irreducible: bool,
    pub p: UniPoly,
    pub r: UniPoly,
}

pub fn selmer_polynomial(m: u32) -> UniPoly {
    UniPoly::from_i64s(&[1, -1]).pow(m).sub(&UniPoly::z())
}

pub fn selmer_factor(m: u32) -> Result<SelmerReport> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("m = {m}; need m >= 2")));
    }
    let f = selmer_polynomial(m);
    let fa = upoly_factor(&f)?;
    let irreducible = fa.is_irreducible();
    let predicted_irreducible = m % 6 != 5;
    let cyclo = UniPoly::from_i64s(&[1, -1, 1]);
    let (p, r) = if predicted_irreducible {
        if !irreducible {
            return Err(Error::MathematicalDiscrepancy(format!(
                "(1-z)^{m} - z factors although m is not 5 mod 6"
            )));
        }
        (f.clone(), UniPoly::one())
    } else {
        let h = f.div_exact(&cyclo).ok_or_else(|| {
            Error::MathematicalDiscrepancy(format!("z^2 - z + 1 does not divide (1-z)^{m} - z"))
        })?;
        let two_factors = fa.factors.len() == 2 && fa.factors.iter().all(|(_, e)| *e == 1);
        if !two_factors || !is_irreducible(&h) {
            return Err(Error::MathematicalDiscrepancy(format!(
                "(1-z)^{m} - z does not split as z^2 - z + 1 times an irreducible"
            )));
        }
        (h, cyclo)
    };
    debug_assert_eq!(p.mul(&r), f);
    Ok(SelmerReport {
        m,
        f,
        factors: fa.factors,
        irreducible,
        predicted_irreducible,
        p,
        r,
    })
}

/// `((1-z)^m - z)(1+z)^(e-m)` with its good factorization
/// `p = f / r`, `q = (1+z)^(e-m)`, `r` from the dichotomy.
pub fn linkage_denominator(m: u32, e: u32) -> Result<GoodFactorization> {
    if e < m {
        return Err(Error::InvalidInput(format!("e = {e} is smaller than m = {m}")));
    }
    let s = selmer_factor(m)?;
    let q = UniPoly::from_i64s(&[1, 1]).pow(e - m);
    let g = GoodFactorization {
        d: s.f.mul(&q),
        p: s.p,
        q,
        r: s.r,
    };
    g.verify(&default_tolerance())?;
    Ok(g)
}
