//! # divbound
//!
//! Divergence measures on the strictly positive probability simplex, the
//! bound machinery that brackets them, and a verification harness that
//! certifies the inequalities and identities tying the family together.
//!
//! ## What lives where
//!
//! - [`simplex`]: validated distributions, pairs with cached likelihood
//!   ratio extremes [r, R], deterministic sampling, file ingestion.
//! - [`fdiv`]: generic f-divergence sums `Σ q f(p/q)` for convex normalized
//!   generators, the E/A/B upper-bound constructions, the inverse
//!   logarithmic mean, and numeric curvature-ratio extrema.
//! - [`catalog`]: the thirteen named measures, their generators, the
//!   transcribed closed-form bounds, and the identity suite (including the
//!   KL parallelogram law).
//! - [`relations`]: the ten sandwich relations `m·rhs ≤ lhs ≤ M·rhs`, the
//!   classical chains among the symmetric measures, and the ζ/ξ ratio
//!   certificates contained in [r, R].
//! - [`verify`]: the whole check suite on one pair, plus deterministic fuzz
//!   campaigns over seeded random pairs.
//! - [`report`]: JSON/CSV reports with lossless 17-digit floats.
//! - [`cli`]: the `divbound` binary's subcommands
//!   (`compute`, `bounds`, `verify`, `fuzz`, `relate`).
//!
//! Every runnable capability also has a standalone example under
//! `examples/`; start with `cargo run --example compute_measures`.
//!
//! Known discrepancies between commonly transcribed closed forms and the
//! mechanical constructions are documented in `ERRATA.md` at the repository
//! root; the library ships the corrected forms.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod cli;
pub mod fdiv;
pub mod relations;
pub mod report;
pub mod simplex;
pub mod verify;

pub use catalog::{CatalogError, MeasureId};
pub use fdiv::{DragomirBounds, FdivError, Generator, GeneratorError, RatioExtrema};
pub use relations::{RatioCertificate, Relation, RelationError};
pub use report::{Check, Report};
pub use simplex::{Distribution, DistributionPair, SimplexError};
