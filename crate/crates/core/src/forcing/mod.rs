//! Forcing extensions and forcing sequences of p-groups.

mod builder;
mod verify;
mod witness;

pub use builder::{
    build_forcing_sequence, build_forcing_sequence_traced, BuildTrace, ForcingCertificate,
    ForcingStep, BUILDER_VERSION,
};
pub use verify::{verify_certificate, Condition, ConditionResult, VerificationReport};
pub use witness::{central_step_witness, is_forcing, ForcingWitness};
