//! Exact power-series engine for arcsine powers and a verifier for the
//! central binomial coefficient identities that follow from them.
//!
//! * [`exactnum`]: rationals, the `Q + Q pi^2` extension, factorials,
//!   binomials, Catalan numbers and half-integer trigamma values.
//! * [`powerseries`]: truncated formal power series over rationals.
//! * [`catalog`]: the named arcsine series and their consistency checks.
//! * [`identities`]: hand-coded identity checkers and range sweeps.
//! * [`dsl`]: a small text language for stating new identities.
//! * [`cli`]: the batch command-line frontend.

pub mod catalog;
pub mod cli;
pub mod dsl;
pub mod exactnum;
pub mod identities;
pub mod powerseries;
