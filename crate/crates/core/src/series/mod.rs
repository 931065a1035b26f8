//! Hilbert series, Poincaré series truncations, the Golod / complete
//! intersection bounds and Lescot's formula for exceptional modules.

mod hilbert;
mod poincare;

pub use hilbert::{hilbert_series, multiplicity, HilbertSeries};
pub use poincare::{
    golod_bounds, lescot_poincare, poincare_truncation, BoundPosition, GolodBounds, PoincareTruncation,
};
