//! Discrete logarithms modulo a safe prime, extended to `pq` and lifted to
//! `p²q²`, where composite Fermat quotients and non-canonical lifts expose
//! the exponent linearly.

pub mod arith;
pub mod demo;
pub mod error;
pub mod instance;
pub mod lifts;
pub mod noncanonical;
pub mod oracle;
pub mod report;
pub mod suite;
pub mod sweep;

pub use error::{Error, Result};
