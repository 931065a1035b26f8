use serde::Serialize;

use super::factorization::GoodFactorization;
use crate::resolution::{RingProfile, SocleInfo};
use crate::series::{BoundPosition, HilbertSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    TorPersistent,
    TorFriendly,
    ExtPersistent,
}

impl Property {
    pub fn parse(s: &str) -> Option<Property> {
        match s {
            "tor_persistent" => Some(Property::TorPersistent),
            "tor_friendly" => Some(Property::TorFriendly),
            "ext_persistent" => Some(Property::ExtPersistent),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Property::TorPersistent => "tor_persistent",
            Property::TorFriendly => "tor_friendly",
            Property::ExtPersistent => "ext_persistent",
        }
    }

    pub fn sentence(&self) -> &'static str {
        match self {
            Property::TorPersistent => "the ring is Tor-persistent",
            Property::TorFriendly => "the ring is Tor-friendly",
            Property::ExtPersistent => "the ring is Ext-persistent",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Inconclusive,
}

/// How one clause of the structural classification fared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseStatus {
    Satisfied,
    NotSatisfied,
    /// Needs an authorization (such as a Golod declaration) that was not given.
    NotAuthorized,
    NotImplemented,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub clause: String,
    pub condition: String,
    pub status: ClauseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A finite range of indices or degrees some piece of evidence depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowDisclosure {
    pub quantity: String,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Profile {
        ring: String,
        profile: RingProfile,
    },
    Deformation {
        base: String,
        sequence: Vec<String>,
    },
    MainTheoremClauses {
        clauses: Vec<ClauseReport>,
    },
    GolodTruncation {
        position: BoundPosition,
        order: usize,
    },
    ShortHilbert {
        hilbert_series: HilbertSeries,
        #[serde(serialize_with = "decimal")]
        e: i64,
        #[serde(serialize_with = "decimal")]
        s: i64,
        #[serde(serialize_with = "decimal")]
        discriminant: i64,
        #[serde(serialize_with = "decimal_opt")]
        discriminant_sqrt: Option<i64>,
        #[serde(serialize_with = "decimal_pair")]
        uv: Option<(i64, i64)>,
    },
    Socle {
        socle: SocleInfo,
    },
    Hypersurface {
        num_relations: usize,
    },
    GoodFactorization {
        factorization: GoodFactorization,
    },
    NoGoodFactorization {
        denominator: crate::arith::UniPoly,
    },
    Upgrade {
        from: Property,
        to: Property,
    },
    Inapplicable {
        criterion: String,
        reason: String,
    },
    Note {
        text: String,
    },
}

fn decimal<S: serde::Serializer>(v: &i64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn decimal_opt<S: serde::Serializer>(v: &Option<i64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

fn decimal_pair<S: serde::Serializer>(v: &Option<(i64, i64)>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some((a, b)) => s.serialize_some(&[a.to_string(), b.to_string()]),
        None => s.serialize_none(),
    }
}

/// The outcome of a criterion applied to a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub target: String,
    pub property: Property,
    pub verdict: Verdict,
    /// Key of the criterion that fired, when certified.
    pub clause: Option<String>,
    /// Conclusion in words, when certified.
    pub statement: Option<String>,
    pub evidence: Vec<Evidence>,
    pub windows: Vec<WindowDisclosure>,
}

impl Certificate {
    pub fn inconclusive(target: &str, property: Property) -> Self {
        Certificate {
            target: target.to_string(),
            property,
            verdict: Verdict::Inconclusive,
            clause: None,
            statement: None,
            evidence: Vec::new(),
            windows: Vec::new(),
        }
    }

    pub fn certified(target: &str, property: Property, clause: &str) -> Self {
        Certificate {
            target: target.to_string(),
            property,
            verdict: Verdict::Certified,
            clause: Some(clause.to_string()),
            statement: Some(property.sentence().to_string()),
            evidence: Vec::new(),
            windows: Vec::new(),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn with_evidence(mut self, e: Evidence) -> Self {
        self.evidence.push(e);
        self
    }
}
