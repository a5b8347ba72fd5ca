//! Trigonality detection for algebraic curves.
//!
//! The canonical image of a curve of genus at least 3 is examined through the
//! quadrics containing it. Their common zero locus is a rational normal
//! scroll exactly when the curve is trigonal; the Lie algebra of that variety
//! recognizes the scroll, and its `sl2` part produces the ruling, hence a
//! degree-3 map to the projective line and a radical parametrization.

pub mod algebra;
pub mod curves;
pub mod error;
pub mod format;
pub mod liealg;
pub mod pipeline;
pub mod quadrics;
pub mod radical;
pub mod scroll;
pub mod selftest;
pub mod sl2;

pub use error::{Error, Result};
