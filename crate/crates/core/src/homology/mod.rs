//! Tor, Ext and Koszul homology over graded quotient rings.

mod algebra;
mod checks;
mod complex;
mod koszul;
mod tor;

pub use algebra::{
    koszul_homology_algebra, trivial_extension_witness, ClassEntry, HomologyClass, KoszulAlgebraSummary,
    KoszulHomologyAlgebra, ProductEntry, TrivialExtensionWitness,
};
pub use checks::{
    auslander_reiten_window, semidualizing_check, ArVerdict, AuslanderReitenWindow, SemidualizingCheck,
    SemidualizingVerdict,
};
pub use complex::{node_homology_dim, node_homology_graded, node_homology_module, support_degrees, tensor_matrix, FreeMap, Node};
pub use koszul::{deformation_quotient, is_regular_sequence, koszul_homology, KoszulComplex};
pub use tor::{
    ext_module, ext_table, tor_module, tor_table, tor_vanishes, vanishing_window, ExtTable, HomTable, TorTable,
    VanishingWindow, WindowVerdict,
};
