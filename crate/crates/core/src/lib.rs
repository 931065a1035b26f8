//! Exact commutative algebra for standard-graded quotient rings: Gröbner
//! bases, minimal resolutions, Tor and Ext, Koszul homology, Hilbert and
//! Poincaré series, and certificates for Tor-persistence and Tor-friendliness.

pub mod arith;
pub mod criteria;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod resolution;
pub mod series;

pub use error::{Error, Result};
