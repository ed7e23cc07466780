use std::fmt;

use hx_core::klbasis::KlError;
use hx_core::positivity::PositivityError;
use hx_core::{CoxeterError, HeckeError};

/// A failed run, grouped by exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, config or input files.
    Usage(String),
    /// The input is valid but the computation does not apply to it.
    Gating(String),
    /// An invariant that must hold did not.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Gating(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Gating(m) => write!(f, "not applicable: {m}"),
            Failure::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::InfiniteGroup | CoxeterError::Reducible | CoxeterError::TooLarge(_) => {
                Failure::Gating(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<HeckeError> for Failure {
    fn from(e: HeckeError) -> Self {
        match e {
            HeckeError::Coxeter(c) => c.into(),
            HeckeError::InfiniteGroup
            | HeckeError::OutsideBall
            | HeckeError::RadiusTooSmall { .. } => Failure::Gating(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<KlError> for Failure {
    fn from(e: KlError) -> Self {
        match e {
            KlError::Hecke(h) => h.into(),
            KlError::InfiniteGroup => Failure::Gating(e.to_string()),
            KlError::Inconsistent(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<PositivityError> for Failure {
    fn from(e: PositivityError) -> Self {
        match e {
            PositivityError::Hecke(h) => h.into(),
            PositivityError::Coxeter(c) => c.into(),
            PositivityError::InfiniteGroup | PositivityError::UnequalParameters => {
                Failure::Gating(e.to_string())
            }
            PositivityError::Inconsistent { .. } => Failure::Internal(e.to_string()),
        }
    }
}
