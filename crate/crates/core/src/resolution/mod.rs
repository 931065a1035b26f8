//! Graded modules, minimal free resolutions, Betti tables and ring profiles.

mod betti;
mod module;
mod profile;
mod resolve;

pub use betti::{betti_table, complexity_estimate, BettiTable, ComplexityEvidence, GrowthClass};
pub use module::{GradedModule, ModulePiece};
pub use profile::{has_k_summand, module_over_ambient, profile, ring_over_ambient, socle, RingProfile, SocleInfo};
pub use resolve::{minimal_resolution, minimal_resolution_in_window, DegreeWindow, FreeResolution};
