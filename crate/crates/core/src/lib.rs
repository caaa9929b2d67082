//! Construction and exact verification of divisible design graphs.
//!
//! A divisible design graph (DDG) is a `k`-regular graph whose vertex set
//! splits into `m` classes of size `n` such that same-class vertex pairs have
//! `λ1` common neighbours and cross-class pairs have `λ2`. This crate builds
//! such graphs from affine resolvable designs and symmetric 2-designs, builds
//! the symplectic-type graphs over finite local rings, and checks every
//! claimed parameter by independent brute-force counting, partition
//! discovery, and isomorphism testing.
//!
//! Module map:
//! - [`algebra`]: finite fields, local rings, projective-like classes.
//! - [`designs`]: affine resolvable designs (hyperplane and Hadamard types).
//! - [`symdesigns`]: symmetric 2-design matrices and row labelings.
//! - [`construct`]: the DDG constructions and their parameter formulas.
//! - [`symplectic`]: the graphs `X(2e,K)` and `Y(2e,K)` over local rings.
//! - [`verify`]: brute-force DDG checking, partition discovery, isomorphism.
//! - [`graph6`], [`descriptor`], [`catalog`]: interchange formats and the
//!   batch runner.

pub mod algebra;
pub mod bounds;
pub mod designs;
pub mod symdesigns;
pub mod verify;
pub mod construct;
pub mod symplectic;
pub mod graph;
pub mod params;

pub use bounds::Bounds;
pub use graph::{Graph, Partition};
pub use params::{DdgParams, IdentityCheck};
