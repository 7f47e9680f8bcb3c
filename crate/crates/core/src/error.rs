use thiserror::Error;

use crate::sekine::StateReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid irrep label {label} for n = {n}: {reason}")]
    InvalidLabel {
        label: String,
        n: usize,
        reason: String,
    },

    #[error("cannot parse label {0}")]
    LabelSyntax(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element is not central (projection residual {residual:.3e})")]
    NotCentral { residual: f64 },

    #[error("coefficients do not define a state: {0}")]
    NotAState(StateReport),

    #[error("invalid idempotent spec: {0}")]
    InvalidSpec(String),

    #[error("enumeration cap exceeded: n = {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("classification ambiguous: {0}")]
    Ambiguous(String),
}
