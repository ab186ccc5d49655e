//! Certifying graph library for clique-minor coloring theorems at desk scale.
//!
//! The central entry point is [`colorer::color_or_minor`]: for an input graph
//! and a [`colorer::Regime`] it returns either a proper coloring within the
//! regime's color budget or an explicit clique-minor model (branch sets).
//! Both certificate kinds are independently checkable — see
//! [`minor::verify_model`] and [`colorer::verify_certificate`] — without
//! trusting the search that produced them.
//!
//! Everything here is exact and bounded: the configured search budgets live in
//! [`limits`], and operations that would exceed them return errors instead of
//! approximate answers.

#![forbid(unsafe_code)]

pub mod bits;
pub mod cockade;
pub mod colorer;
pub mod connect;
pub mod enumerate;
mod error;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod kempe;
pub mod limits;
pub mod minor;
pub mod named;
pub mod oracle;
pub mod structure;

mod graph;

pub use error::Error;
pub use graph::Graph;

/// Schema tag stamped on every JSON document this crate emits.
pub const SCHEMA: &str = "minorcolor/1";
