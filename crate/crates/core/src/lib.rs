pub mod arith;
pub mod catalog;
pub mod certificate_io;
pub mod classify;
pub mod error;
pub mod exponent;
pub mod forcing;
pub mod group;

pub use error::{Error, Result};
