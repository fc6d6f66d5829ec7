//! Intrinsic geometry of Bour's minimal surfaces and crochet patterns for them.
//!
//! The surfaces `B_m` are intrinsically surfaces of revolution, so a round
//! of crochet at a fixed intrinsic distance from the centre needs the same
//! number of stitches no matter how the surface twists in space. This crate
//! evaluates the surfaces and their metric, measures circumferences and
//! radial arc lengths, tracks the self-intersection of Enneper's surface,
//! and turns all of that into stitch counts for a given gauge.

// domain checks are written so that NaN fails them
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arc_length;
pub mod error;
pub mod intersection;
pub mod mesh;
pub mod pattern;
pub mod quadrature;
pub mod reference;
pub mod surface;
pub mod validate;

pub use error::{Error, Result};
pub use surface::{FundamentalForm, ParamPoint, SurfacePoint, SurfaceSpec, Vec3};
