//! Exact-arithmetic core for a computational workbench around smash and
//! crossed coproduct Hopf algebras.
//!
//! Everything is computed over exact coefficient fields (rationals,
//! cyclotomic fields, prime fields): finite groups and their 2-cocycle
//! calculus, finite dimensional algebras given by structure constants with
//! optional Hopf structure, module operations (tensor, dual, conjugate,
//! graded components, induction, restriction), projectivity oracles and
//! rank-variety membership probes, and bar-complex cohomology in low
//! degrees.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON formats and the command
//! line live in the companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cocycle;
pub mod cohomology;
pub mod coproduct;
pub mod corpus;
pub mod error;
pub mod group;
pub mod matrix;
pub mod module;
pub mod projectivity;
pub mod scalar;
pub mod taft;

pub use error::Error;
pub use scalar::{FieldSpec, Scalar};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
