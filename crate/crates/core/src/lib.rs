//! Compatible triangulations of simple polygons.
//!
//! Two simple `n`-gons have compatible triangulations when, under a common
//! counter-clockwise numbering, they can be triangulated with the same set of
//! diagonal index pairs. This crate provides:
//!
//! * exact integer geometry and polygon validation ([`geometry`]),
//! * ear-clipping triangulation and balanced decomposition trees
//!   ([`triangulation`], [`decomposition`]),
//! * a constant-time vertex-visibility index ([`visibility`]),
//! * the search for all rotations of `Q` compatible with a fixed
//!   triangulation of `P` ([`rotation`]),
//! * the block-recursive interval DP deciding, extracting and counting
//!   triangulations inside a graph on a convex polygon ([`dp`]),
//! * brute-force reference implementations ([`oracles`]) and a random
//!   polygon generator ([`generate`]).

pub mod decomposition;
pub mod dp;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod oracles;
pub mod rotation;
pub mod triangulation;
pub mod visibility;

pub use decomposition::DecompositionTree;
pub use error::{Error, Result};
pub use geometry::{IndexPair, Point, Polygon, Rational};
pub use triangulation::{DiagonalFan, Triangulation};
pub use visibility::VisibilityIndex;
