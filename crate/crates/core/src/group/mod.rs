//! Finite groups realized by full enumeration: permutations, subgroups,
//! quotients, series and conjugacy classes.

mod conjugacy;
mod finite_group;
mod permutation;
mod presets;
mod quotient;
mod series;
mod spec;
mod subgroup;

pub use conjugacy::ConjugacyClass;
pub use finite_group::{FiniteGroup, DEFAULT_ORDER_CAP};
pub use permutation::Permutation;
pub use presets::Preset;
pub use quotient::QuotientMap;
pub use spec::GroupSpec;
pub use subgroup::Subgroup;
