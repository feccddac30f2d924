//! A laboratory for exact density and rank computations on small graph
//! minors: canonical forms, isomorph-free enumeration, minor operations
//! and densest-minor search, fan constructions, multigraph minors, and an
//! exhaustive verification harness over desk-scale graphs.

pub mod canon;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod fan;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod multigraph;
pub mod rational;
pub mod spectrum;

pub use error::Error;
pub use graph::SimpleGraph;
pub use rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

/// Default guardrail for closure-based searches; override explicitly for
/// longer runs.
pub const DEFAULT_GUARDRAIL: usize = 10;

/// Hard ceiling on isomorph-free enumeration.
pub const ENUMERATION_GUARDRAIL: usize = 12;
