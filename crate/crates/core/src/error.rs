use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the order cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group of order {order} is not a p-group")]
    NotAPGroup { order: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("prime {p} does not divide the group order {order}")]
    PNotDividing { p: u64, order: usize },

    #[error("group is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("group of order {order} is cyclic")]
    CyclicGroup { order: usize },

    #[error("group is the generalized quaternion group Q({n})")]
    QuaternionGroup { n: u32 },

    #[error("no admissible index-p refinement at chain position {position}")]
    NoForcingCandidate { position: usize },

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("certificate did not verify: {0}")]
    UnverifiedCertificate(String),

    #[error("degenerate degree {d}: need d >= 2")]
    DegenerateDegree { d: u64 },

    #[error("no base exponent formula for p = 2; supply an override")]
    EvenPrimeBase,

    #[error("elementary abelian base needs rank > 1, got {r}")]
    RankOne { r: u32 },

    #[error("Sylow-{p} factor violates the hypotheses: {reason}")]
    SylowHypothesisViolated { p: u64, reason: String },

    #[error("invalid analytic constants: {0}")]
    InvalidConstants(String),

    #[error("trace does not replay: {0}")]
    TraceMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse group spec `{spec}`: {reason}")]
    SpecParse { spec: String, reason: String },

    #[error("unknown schema version `{0}`")]
    SchemaVersionUnknown(String),

    #[error("digest mismatch: stored {stored}, computed {computed}")]
    DigestMismatch { stored: String, computed: String },

    #[error("malformed document at byte {offset}: {reason}")]
    Malformed { offset: usize, reason: String },
}

impl Error {
    /// Stable variant name, used in structured CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OrderCapExceeded { .. } => "OrderCapExceeded",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::NotAPGroup { .. } => "NotAPGroup",
            Error::NotNormal => "NotNormal",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::PNotDividing { .. } => "PNotDividing",
            Error::NotNilpotent(_) => "NotNilpotent",
            Error::CyclicGroup { .. } => "CyclicGroup",
            Error::QuaternionGroup { .. } => "QuaternionGroup",
            Error::NoForcingCandidate { .. } => "NoForcingCandidate",
            Error::MalformedCertificate(_) => "MalformedCertificate",
            Error::UnverifiedCertificate(_) => "UnverifiedCertificate",
            Error::DegenerateDegree { .. } => "DegenerateDegree",
            Error::EvenPrimeBase => "EvenPrimeBase",
            Error::RankOne { .. } => "RankOne",
            Error::SylowHypothesisViolated { .. } => "SylowHypothesisViolated",
            Error::InvalidConstants(_) => "InvalidConstants",
            Error::TraceMismatch(_) => "TraceMismatch",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::SpecParse { .. } => "SpecParse",
            Error::SchemaVersionUnknown(_) => "SchemaVersionUnknown",
            Error::DigestMismatch { .. } => "DigestMismatch",
            Error::Malformed { .. } => "Malformed",
        }
    }
}
