//! Certificates for Tor-persistence, Tor-friendliness and Ext-persistence.

mod certificate;
mod classify;
mod factorization;
mod short;

pub use certificate::{
    Certificate, ClauseReport, ClauseStatus, Evidence, Property, Verdict, WindowDisclosure,
};
pub use classify::{
    certify, certify_with, classify_main_theorem, classify_main_theorem_with, CertifyOptions,
    FRIENDLY_TO_EXT, GOOD_FACTORIZATION, HYPERSURFACE,
};
pub use factorization::{
    good_factorization_search, good_factorization_search_with, linkage_denominator,
    selmer_factor, selmer_polynomial, GoodFactorization, SelmerReport,
};
pub use short::{
    check_short_hilbert, find_uv_factorization, short_hilbert_certificates, short_shape,
    socle_criterion, SHORT_FRIENDLY, SHORT_PERSISTENT, SOCLE_NOT_IN_M2,
};
