//! Exact coefficient fields, polynomials, power series and integer utilities.

pub mod coef;
pub mod factor;
pub mod integer;
pub mod monomial;
pub mod poly;
pub mod roots;
pub mod series;
pub mod upoly;

pub use coef::{Coef, Field};
pub use factor::{is_irreducible, upoly_factor, Factorization};
pub use integer::is_perfect_square;
pub use monomial::Monomial;
pub use poly::{default_var_names, poly_arith, ArithOp, Poly};
pub use roots::{default_tolerance, minimal_modulus_condition, upoly_roots, Root, RootCondition};
pub use series::{series_of_rational, SeriesTrunc};
pub use upoly::UniPoly;
