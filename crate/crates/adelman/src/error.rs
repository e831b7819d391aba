use thiserror::Error;

/// Errors raised by the checked entry points of this crate.
///
/// Dimension and object mismatches flag ill-typed input; the remaining
/// variants report genuine mathematical failures of a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimensions(String),
    #[error("objects do not match: {0}")]
    Mismatch(String),
    #[error("naturality square {0} does not commute")]
    Square(u8),
    #[error("composite is not zero, so no factorisation exists")]
    NonzeroComposite,
    #[error("morphism is not null-homotopic")]
    NotNullHomotopic,
    #[error("component {0} is not invertible")]
    NotInvertible(u8),
    #[error("matrix does not induce a morphism of presented groups: no lift of the relations exists")]
    NoLift,
}

pub type Result<T> = std::result::Result<T, Error>;
