use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::certificate::{Certificate, Evidence, Property};
use crate::arith::is_perfect_square;
use crate::error::{Error, Result};
use crate::groebner::Ring;
use crate::resolution::{socle, GradedModule};
use crate::series::{hilbert_series, HilbertSeries};

pub const SHORT_FRIENDLY: &str = "short-hilbert/friendly";
pub const SHORT_PERSISTENT: &str = "short-hilbert/persistent";
pub const SOCLE_NOT_IN_M2: &str = "socle-not-in-m2";

/// `(e, s)` when `H = 1 + e z + s z^2`.
pub fn short_shape(h: &HilbertSeries) -> Result<(i64, i64)> {
    let c = h.numerator.coeffs();
    let ok = h.pole_order == 0 && h.shift == 0 && !c.is_empty() && c.len() <= 3 && c[0] == BigInt::from(1);
    if !ok {
        return Err(Error::CriterionInapplicable(format!(
            "Hilbert series {h} is not of the form 1 + ez + sz^2"
        )));
    }
    let get = |i: usize| c.get(i).and_then(|x| x.to_i64()).unwrap_or(0);
    Ok((get(1), get(2)))
}

fn discriminant_root(disc: i64) -> Option<i64> {
    if disc < 0 {
        return None;
    }
    is_perfect_square(&BigInt::from(disc))
        .ok()
        .flatten()
        .and_then(|r| r.to_i64())
}

/// Positive integers `u <= v` with `1 + ez + sz^2 = (1 + uz)(1 + vz)`, if any.
pub fn find_uv_factorization(h: &HilbertSeries) -> Result<Option<(i64, i64)>> {
    let (e, s) = short_shape(h)?;
    if s < 1 {
        return Err(Error::CriterionInapplicable(format!("s = {s}; need s >= 1")));
    }
    Ok(uv(e, s))
}

fn uv(e: i64, s: i64) -> Option<(i64, i64)> {
    let root = discriminant_root(e * e - 4 * s)?;
    if (e - root) % 2 != 0 {
        return None;
    }
    let (u, v) = ((e - root) / 2, (e + root) / 2);
    (u > 0 && v > 0).then_some((u, v))
}

/// Both certificates from Hilbert data `1 + ez + sz^2` alone:
/// friendly when `s = 0` or `e^2 - 4s` is not a square, persistent when
/// `s = 0` or `e^2 - 4s != 0`.
pub fn short_hilbert_certificates(target: &str, h: &HilbertSeries) -> Result<(Certificate, Certificate)> {
    let (e, s) = short_shape(h)?;
    let disc = e * e - 4 * s;
    let root = discriminant_root(disc);
    let evidence = Evidence::ShortHilbert {
        hilbert_series: h.clone(),
        e,
        s,
        discriminant: disc,
        discriminant_sqrt: root,
        uv: if s >= 1 { uv(e, s) } else { None },
    };
    let friendly = s == 0 || root.is_none();
    let persistent = s == 0 || disc != 0;
    if friendly && !persistent {
        return Err(Error::MathematicalDiscrepancy(
            "short Hilbert criterion certified friendliness without persistence".into(),
        ));
    }
    let make = |ok: bool, property: Property, clause: &str| {
        if ok {
            Certificate::certified(target, property, clause)
        } else {
            Certificate::inconclusive(target, property)
        }
        .with_evidence(evidence.clone())
    };
    Ok((
        make(friendly, Property::TorFriendly, SHORT_FRIENDLY),
        make(persistent, Property::TorPersistent, SHORT_PERSISTENT),
    ))
}

/// The short-Hilbert criterion applied to the Hilbert series of `R`.
pub fn check_short_hilbert(r: &Ring) -> Result<(Certificate, Certificate)> {
    let h = hilbert_series(&GradedModule::ring_module(r))?;
    short_hilbert_certificates(&target_name(r), &h)
}

/// Tor-friendliness when the socle of an artinian ring is not inside `m^2`.
pub fn socle_criterion(r: &Ring) -> Result<Certificate> {
    if !r.is_artinian() {
        return Err(Error::RequiresFiniteLength);
    }
    let info = socle(&GradedModule::ring_module(r))?;
    let target = target_name(r);
    let cert = if info.in_m2_m {
        Certificate::inconclusive(&target, Property::TorFriendly)
    } else {
        Certificate::certified(&target, Property::TorFriendly, SOCLE_NOT_IN_M2)
    };
    Ok(cert.with_evidence(Evidence::Socle { socle: info }))
}

pub(crate) fn target_name(r: &Ring) -> String {
    if r.label().is_empty() {
        r.to_string()
    } else {
        r.label().to_string()
    }
}
