//! Numerical toolkit for parabolic geometry in the plane: points and
//! cylinders of the parabolic metric |Δx| + |Δt|^{1/2}, domain models with
//! boundary queries, corkscrew/Harnack-chain certification of non-tangential
//! accessibility, parabolic surface measure and its regularity functionals
//! (Ahlfors constants, β-numbers, Carleson norms, BMO), an adjoint-heat
//! solver for the Green function with pole at infinity together with its
//! Poisson kernel, and boundary-rescaling (blowup) diagnostics.
//!
//! Everything works at a declared finite window and finite resolution; every
//! "for all points and scales" statement is certified over an explicit
//! lattice which the reports name.

pub mod blowup;
pub mod boundary;
pub mod bump;
pub mod caloric;
pub mod domain;
pub mod domain_io;
pub mod error;
pub mod geometry;
pub mod measure;
pub mod nta;
pub mod oscillation;
pub mod parallel;
pub mod sampled;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{para_dist, ParaCylinder, ParaPoint};

/// Library version string, embedded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
