//! Sharp inequalities for hyperplane cuts of convex bodies.
//!
//! For a convex body `K` in `R^n` with centroid at the origin, a unit
//! direction `ξ` and `α ∈ (-1, n)`, consider the half-space
//! `H_α⁺ = {x : ⟨x, ξ⟩ ≥ α h_K(-ξ)}` and its bounding hyperplane `H_α`.
//! This crate computes the sharp constants in
//!
//! ```text
//! C1(α, n) ≤ |K ∩ H_α⁺| / |K| ≤ C2(α, n)
//! |K ∩ H_α| ≥ D(α, n) · max_t |K ∩ (ξ⊥ + tξ)|
//! ```
//!
//! builds the bodies that attain them, and checks the inequalities on
//! arbitrary polytopes and bodies of revolution, with an independent
//! Monte Carlo oracle for cross-validation.
//!
//! Module map:
//!
//! - [`bodies`]: polytopes, bodies of revolution, directions, cuts.
//! - [`measure`]: support function, sections, cut-off volume, centroid,
//!   Schwarz symmetrization, maximal section.
//! - [`constants`]: `C1`, `C2`, `D` and their auxiliary functions.
//! - [`extremal`]: the equality bodies.
//! - [`oracle`]: Monte Carlo estimators and random body generators.
//! - [`verify`]: centering, ratios, per-inequality reports, fuzzing.
//! - [`cli`]: the `grunbaum` command-line surface and its file formats.
//!
//! ```
//! use grunbaum::{constants, extremal, verify, bodies::{Body, CutSpec, Direction}};
//!
//! let cone = Body::Profile(extremal::grunbaum_cone(3).unwrap());
//! let cut = CutSpec::new(Direction::axis(3, 0).unwrap(), 0.0).unwrap();
//! let ratio = verify::cut_ratio(&cone, &cut).unwrap();
//! assert!((ratio - constants::grunbaum_bound(3)).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bodies;
pub mod cli;
pub mod constants;
pub mod error;
pub mod extremal;
mod hull;
pub mod json;
pub mod measure;
pub mod optimize;
pub mod oracle;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
