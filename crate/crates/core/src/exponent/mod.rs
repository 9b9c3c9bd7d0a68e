//! Exact evaluation of the saving exponent.

mod formulas;
mod rational;
mod report;

pub use formulas::{
    base_delta_elementary_abelian, closed_form_lower_bound, compositum_delta, compositum_fold,
    crossover_report, delta_b, delta_cap, delta_s, eta0, extend_delta, t0, AnalyticConstants,
    CrossoverReport,
};
pub use rational::Rational;
pub use report::{
    delta_for_nilpotent, delta_for_p_group, parse_base_overrides, replay, BaseOverrides,
    BaseSource, ClosedFormCheck, DeltaReport, TraceRecord,
};
