use thiserror::Error;

/// Errors raised by the algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input mismatch: {0}")]
    InputMismatch(String),

    #[error("denominator constant term {0} is not a unit in Z[[z]]")]
    NotASeriesUnit(String),

    #[error("tolerance must be positive")]
    InvalidTolerance,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("computation requires a module of finite length")]
    RequiresFiniteLength,

    #[error("graded pieces are infinite in number; supply an internal-degree window")]
    RequiresDegreeBound,

    #[error("sequence is not regular: Koszul homology H_{first_nonzero} is nonzero")]
    NotRegularSequence { first_nonzero: usize },

    #[error("window of length {got} is too short (need at least {need})")]
    InsufficientWindow { got: usize, need: usize },

    #[error("criterion not applicable: {0}")]
    CriterionInapplicable(String),

    #[error("root condition undecided at tolerance {0}")]
    ToleranceUndecided(String),

    #[error("mathematical discrepancy: {0}")]
    MathematicalDiscrepancy(String),

    #[error("Poincare series bound violated at degree {degree}: {detail}")]
    BoundsViolated { degree: usize, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
