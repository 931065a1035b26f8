use serde::Serialize;

use super::certificate::{Certificate, ClauseReport, ClauseStatus, Evidence, Property, WindowDisclosure};
use super::factorization::good_factorization_search_with;
use super::short::{check_short_hilbert, socle_criterion, target_name};
use crate::arith::{default_tolerance, Field, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::Ring;
use crate::resolution::profile;
use crate::series::golod_bounds;

pub const HYPERSURFACE: &str = "hypersurface";
pub const GOOD_FACTORIZATION: &str = "good-factorization";
pub const FRIENDLY_TO_EXT: &str = "friendly-implies-ext-persistent";

/// Options for the structural classification and the orchestrator.
#[derive(Clone, Debug, Serialize)]
pub struct CertifyOptions {
    /// The caller vouches that the base ring is Golod.
    pub declared_golod: bool,
    /// Order of the Poincaré truncation used as Golod evidence.
    pub series_order: usize,
    /// Common denominators of Poincaré series supplied by the caller.
    pub denominators: Vec<UniPoly>,
    #[serde(skip)]
    pub tolerance: num_rational::BigRational,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            declared_golod: false,
            series_order: 12,
            denominators: Vec::new(),
            tolerance: default_tolerance(),
        }
    }
}

fn clause(key: &str, condition: &str, ok: bool, detail: Option<String>) -> ClauseReport {
    ClauseReport {
        clause: key.to_string(),
        condition: condition.to_string(),
        status: if ok { ClauseStatus::Satisfied } else { ClauseStatus::NotSatisfied },
        detail,
    }
}

/// Structural clauses evaluated on the base `Q` of the deformation (or on
/// `R` itself): complete intersection, codepth at most 3, Gorenstein of
/// codepth 4, Cohen–Macaulay almost complete intersection of codepth 4 with
/// `1/2` in the ring, Cohen–Macaulay of multiplicity at most 7, and Golod.
/// The first satisfied clause certifies that `R` is Tor-persistent.
pub fn classify_main_theorem(r: &Ring) -> Result<Certificate> {
    classify_main_theorem_with(r, &CertifyOptions::default())
}

pub fn classify_main_theorem_with(r: &Ring, opts: &CertifyOptions) -> Result<Certificate> {
    let target = target_name(r);
    let mut evidence = Vec::new();
    let mut windows = Vec::new();
    let q = match r.deformation() {
        Some(def) => {
            evidence.push(Evidence::Deformation {
                base: def.base.to_string(),
                sequence: def.sequence.iter().map(|f| f.fmt_with(r.names())).collect(),
            });
            def.base.clone()
        }
        None => r.clone(),
    };
    let q = q.minimalize()?;
    let prof = profile(&q)?;
    evidence.push(Evidence::Profile {
        ring: q.to_string(),
        profile: prof.clone(),
    });
    let half = !matches!(q.field(), Field::Prime(2));
    let codepth = prof.codepth;
    let mut clauses = vec![
        clause("complete-intersection", "Q is a complete intersection", prof.is_ci, None),
        clause(
            "codepth-at-most-3",
            "edim Q - depth Q <= 3",
            codepth <= 3,
            Some(format!("codepth {codepth}")),
        ),
        clause(
            "gorenstein-codepth-4",
            "Q is Gorenstein and edim Q - depth Q = 4",
            prof.is_gorenstein && codepth == 4,
            None,
        ),
        clause(
            "cm-almost-ci-codepth-4",
            "Q is Cohen-Macaulay, almost complete intersection, edim Q - depth Q = 4, and 1/2 is in Q",
            prof.is_cohen_macaulay && prof.is_almost_ci && codepth == 4 && half,
            Some(format!("characteristic {}", q.field().characteristic())),
        ),
        clause(
            "cm-multiplicity-at-most-7",
            "Q is Cohen-Macaulay and mult Q <= 7",
            prof.is_cohen_macaulay && prof.multiplicity <= 7,
            Some(format!("multiplicity {}", prof.multiplicity)),
        ),
    ];
    // Golod: authorized by m^2 = 0 or by declaration; a truncation alone is evidence.
    let m2_zero = q.graded_piece_dim(2) == 0;
    let golod = if m2_zero {
        clause("golod", "Q is Golod", true, Some("authorized by m^2 = 0".into()))
    } else if opts.declared_golod {
        let b = golod_bounds(&q, opts.series_order)?;
        windows.push(WindowDisclosure {
            quantity: "Poincare series of k over Q".into(),
            lo: 0,
            hi: opts.series_order as i64,
        });
        evidence.push(Evidence::GolodTruncation {
            position: b.position,
            order: b.order,
        });
        if b.at_upper() {
            clause("golod", "Q is Golod", true, Some("authorized by declaration".into()))
        } else {
            clause(
                "golod",
                "Q is Golod",
                false,
                Some("declared Golod but the truncation misses the upper bound".into()),
            )
        }
    } else {
        ClauseReport {
            clause: "golod".into(),
            condition: "Q is Golod".into(),
            status: ClauseStatus::NotAuthorized,
            detail: Some("needs m^2 = 0 or a declaration".into()),
        }
    };
    clauses.push(golod);
    for (key, cond) in [
        ("one-link-from-ci", "Q is one link from a complete intersection"),
        ("two-links-from-ci-gorenstein", "Q is two links from a complete intersection and Gorenstein"),
    ] {
        clauses.push(ClauseReport {
            clause: key.into(),
            condition: cond.into(),
            status: ClauseStatus::NotImplemented,
            detail: Some("linkage detection is not implemented".into()),
        });
    }
    let fired = clauses
        .iter()
        .find(|c| c.status == ClauseStatus::Satisfied)
        .map(|c| format!("main/{}", c.clause));
    evidence.push(Evidence::MainTheoremClauses { clauses });
    if r.deformation().is_some() {
        evidence.push(Evidence::Note {
            text: "only explicit deformations Q -> R are modeled; maps of finite flat dimension are not".into(),
        });
    }
    let mut cert = match fired {
        Some(key) => Certificate::certified(&target, Property::TorPersistent, &key),
        None => Certificate::inconclusive(&target, Property::TorPersistent),
    };
    cert.evidence = evidence;
    cert.windows = windows;
    Ok(cert)
}

/// A hypersurface `P/(f)` is Tor-friendly.
fn hypersurface_check(r: &Ring) -> Result<Certificate> {
    let min = r.minimalize()?;
    let c = min.ideal().generators().len();
    let target = target_name(r);
    let cert = if c <= 1 {
        Certificate::certified(&target, Property::TorFriendly, HYPERSURFACE)
    } else {
        Certificate::inconclusive(&target, Property::TorFriendly)
    };
    Ok(cert.with_evidence(Evidence::Hypersurface { num_relations: c }))
}

fn inapplicable(criterion: &str, e: &Error) -> Evidence {
    Evidence::Inapplicable {
        criterion: criterion.to_string(),
        reason: e.to_string(),
    }
}

/// Keeps a certificate's evidence when a sub-check does not fire.
fn absorb(bundle: &mut Vec<Evidence>, windows: &mut Vec<WindowDisclosure>, c: &Certificate) {
    bundle.extend(c.evidence.iter().cloned());
    windows.extend(c.windows.iter().cloned());
}

fn soft<T>(criterion: &str, r: Result<T>, bundle: &mut Vec<Evidence>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::CriterionInapplicable(_) | Error::RequiresFiniteLength | Error::RequiresDegreeBound)) => {
            bundle.push(inapplicable(criterion, &e));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Searches for a Tor-friendliness certificate: hypersurface, short Hilbert
/// series, socle, then the supplied denominators.
fn friendly_search(r: &Ring, opts: &CertifyOptions, bundle: &mut Vec<Evidence>, windows: &mut Vec<WindowDisclosure>) -> Result<Option<Certificate>> {
    let target = target_name(r);
    let h = hypersurface_check(r)?;
    if h.is_certified() {
        return Ok(Some(h));
    }
    absorb(bundle, windows, &h);
    if let Some((f, _)) = soft("short-hilbert", check_short_hilbert(r), bundle)? {
        if f.is_certified() {
            return Ok(Some(f));
        }
        absorb(bundle, windows, &f);
    }
    if let Some(s) = soft("socle", socle_criterion(r), bundle)? {
        if s.is_certified() {
            return Ok(Some(s));
        }
        absorb(bundle, windows, &s);
    }
    for d in &opts.denominators {
        match good_factorization_search_with(d, &opts.tolerance)? {
            Some(g) => {
                g.verify(&opts.tolerance)?;
                return Ok(Some(
                    Certificate::certified(&target, Property::TorFriendly, GOOD_FACTORIZATION)
                        .with_evidence(Evidence::Note {
                            text: "denominator supplied by the caller as a common denominator of Poincare series".into(),
                        })
                        .with_evidence(Evidence::GoodFactorization { factorization: g }),
                ));
            }
            None => bundle.push(Evidence::NoGoodFactorization { denominator: d.clone() }),
        }
    }
    Ok(None)
}

/// Runs the criteria in a fixed order and returns the first certificate for
/// `property`, or an inconclusive one carrying all evidence gathered.
pub fn certify(r: &Ring, property: Property) -> Result<Certificate> {
    certify_with(r, property, &CertifyOptions::default())
}

pub fn certify_with(r: &Ring, property: Property, opts: &CertifyOptions) -> Result<Certificate> {
    let target = target_name(r);
    let mut bundle = Vec::new();
    let mut windows = Vec::new();
    match property {
        Property::TorPersistent => {
            let main = classify_main_theorem_with(r, opts)?;
            if main.is_certified() {
                return Ok(main);
            }
            absorb(&mut bundle, &mut windows, &main);
            if let Some((_, p)) = soft("short-hilbert", check_short_hilbert(r), &mut bundle)? {
                if p.is_certified() {
                    return Ok(p);
                }
            }
            if let Some(f) = friendly_search(r, opts, &mut bundle, &mut windows)? {
                let clause = f.clause.clone().unwrap_or_default();
                let mut c = Certificate::certified(&target, Property::TorPersistent, &clause);
                c.evidence = f.evidence;
                c.evidence.push(Evidence::Upgrade {
                    from: Property::TorFriendly,
                    to: Property::TorPersistent,
                });
                c.windows = f.windows;
                return Ok(c);
            }
        }
        Property::TorFriendly => {
            if let Some(f) = friendly_search(r, opts, &mut bundle, &mut windows)? {
                return Ok(f);
            }
        }
        Property::ExtPersistent => {
            if let Some(f) = friendly_search(r, opts, &mut bundle, &mut windows)? {
                let mut c = Certificate::certified(&target, Property::ExtPersistent, FRIENDLY_TO_EXT);
                c.evidence = f.evidence;
                c.evidence.push(Evidence::Note {
                    text: format!("Tor-friendly via {}", f.clause.unwrap_or_default()),
                });
                c.evidence.push(Evidence::Upgrade {
                    from: Property::TorFriendly,
                    to: Property::ExtPersistent,
                });
                c.evidence.push(Evidence::Note {
                    text: "Ext-persistent local rings have the Auslander-Reiten property".into(),
                });
                c.windows = f.windows;
                return Ok(c);
            }
        }
    }
    let mut c = Certificate::inconclusive(&target, property);
    c.evidence = bundle;
    c.windows = windows;
    Ok(c)
}
