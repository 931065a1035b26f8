//! Gröbner bases for ideals and submodules of graded free modules, graded
//! quotient rings and degree-wise coordinates.

pub mod buchberger;
pub mod free;
pub mod freemodule;
pub mod ring;
pub mod submodule;

pub use buchberger::{groebner, is_groebner, Reducer};
pub use free::FreeModElem;
pub use freemodule::{FreeModule, FreePiece};
pub use ring::{change_field, groebner_basis, normal_form, Deformation, GradedRing, Ideal, Ring, StdBasis};
pub use submodule::SubmodulePres;
