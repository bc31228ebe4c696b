use thiserror::Error;

/// Failure modes of the evaluators.
///
/// Every variant has a stable upper-snake-case name (see [`Error::name`])
/// which the command-line front end prints on domain errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    Pole(String),
    #[error("gamma function pole in prefactor: {0}")]
    GammaPole(String),
    #[error("denominator parameter {0} is a nonpositive integer")]
    DenominatorPole(String),
    #[error("series did not converge after {terms} terms (last relative movement {last_rel_change:e})")]
    NoConvergence { terms: usize, last_rel_change: f64 },
    #[error("series with p = q + 1 requires |z| < 1, got |z| = {0}")]
    OutsideDisk(f64),
    #[error("connection formula needs c - a - b outside the integers, got {0}")]
    DegenerateConnection(String),
    #[error("argument lies on a branch cut: {0}")]
    BranchCut(String),
    #[error("point outside the domain of this representation: {0}")]
    OutsideDomain(String),
    #[error("degenerate parameters for this representation: {0}")]
    DegenerateCase(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("quadrature did not converge within {levels} levels (relative change {rel_change:e})")]
    MaxLevelExceeded { levels: u32, rel_change: f64 },
    #[error("integrand returned a non-finite value at t = {0}")]
    NonFinite(f64),
    #[error("no evaluation method applies: {0}")]
    NoApplicableMethod(String),
    #[error("parameter outside the admissible sector: {0}")]
    SectorViolation(String),
    #[error("integer degeneracy: {0}")]
    IntegerDegeneracy(String),
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("invalid control settings: {0}")]
    InvalidControl(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Pole(_) => "POLE",
            Error::GammaPole(_) => "GAMMA_POLE",
            Error::DenominatorPole(_) => "DENOMINATOR_POLE",
            Error::NoConvergence { .. } => "NO_CONVERGENCE",
            Error::OutsideDisk(_) => "OUTSIDE_DISK",
            Error::DegenerateConnection(_) => "DEGENERATE_CONNECTION",
            Error::BranchCut(_) => "BRANCH_CUT",
            Error::OutsideDomain(_) => "OUTSIDE_DOMAIN",
            Error::DegenerateCase(_) => "DEGENERATE_CASE",
            Error::ConstraintViolation(_) => "CONSTRAINT_VIOLATION",
            Error::MaxLevelExceeded { .. } => "MAX_LEVEL_EXCEEDED",
            Error::NonFinite(_) => "NON_FINITE",
            Error::NoApplicableMethod(_) => "NO_APPLICABLE_METHOD",
            Error::SectorViolation(_) => "SECTOR_VIOLATION",
            Error::IntegerDegeneracy(_) => "INTEGER_DEGENERACY",
            Error::ShapeViolation(_) => "SHAPE_VIOLATION",
            Error::DomainViolation(_) => "DOMAIN_VIOLATION",
            Error::InvalidControl(_) => "INVALID_CONTROL",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
