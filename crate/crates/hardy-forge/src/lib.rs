//! Construction and numerical verification of optimal Hardy-weight families
//! for second-order elliptic operators with mixed Robin/Dirichlet boundary
//! conditions on model domains.
//!
//! The library is organized around the objects of criticality theory:
//!
//! * [`domain`] — model domains, boundary decompositions, exhaustions;
//! * [`operator`] — divergence-form operator coefficients and Robin data;
//! * [`green`] — closed-form Green kernels by the method of images;
//! * [`potential`] — Green potentials of compactly supported densities,
//!   by singular-safe adaptive quadrature;
//! * [`hardy`] — the weight families built from `u·f_w(G_φ/u)` ground
//!   states, plus the oscillatory solutions used in optimality proofs;
//! * [`oned`] — the divergence-test characterization of optimal
//!   Dirichlet-Hardy-weights of `-y''` on the half-line;
//! * [`discrete`] — finite-difference discretizations, generalized
//!   principal eigenvalues, maximum-principle probes, discrete Green
//!   functions;
//! * [`probes`] — Khas'minskii, flux-constancy, null-criticality and
//!   optimality-at-infinity verification probes;
//! * [`pipeline`] — end-to-end reproductions of the model examples,
//!   emitting CSV/JSON artifacts.

pub mod config;
pub mod discrete;
pub mod domain;
pub mod error;
pub mod expr;
pub mod field;
pub mod green;
pub mod hardy;
pub mod linalg;
pub mod oned;
pub mod operator;
pub mod pipeline;
pub mod potential;
pub mod probes;
pub mod quad;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use field::ScalarField;

/// Schema tag stamped into every emitted JSON manifest/report.
pub const SCHEMA: &str = "hardy-forge/1";
