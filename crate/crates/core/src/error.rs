use thiserror::Error;

use crate::bodies::Diagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0}")]
    InvalidDimension(usize),

    #[error("direction vector is zero or not finite")]
    DegenerateDirection,

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveFactor(f64),

    #[error("invalid body: {}", join_diagnostics(.0))]
    InvalidBody(Vec<Diagnostic>),

    #[error("alpha = {alpha} is outside the admissible range ({lo}, {hi})")]
    AlphaOutOfRange { alpha: f64, lo: f64, hi: f64 },

    #[error("{name} = {value} is out of range, expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("z = {0} lies in the excluded interval (-1, 0)")]
    ForbiddenZ(f64),

    #[error("bodies of revolution only support the directions +axis and -axis")]
    OffAxisDirection,

    #[error("bodies of revolution only support translation along their axis")]
    NonAxialTranslation,

    #[error("cannot represent a numeric profile in the body file format")]
    NotSerializable,

    #[error("parse error: {0}")]
    Parse(String),
}

fn join_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
