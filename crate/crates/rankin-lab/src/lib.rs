//! Exact highest-weight combinatorics for pairs of GL(n) representations:
//! tensor and exterior decompositions, restriction across a doubled group,
//! critical-shift scans, compatibility windows, distinguished lowest
//! pieces, and relative Lie-algebra cohomology profiles. All arithmetic is
//! integral; nothing in this crate rounds.

#![forbid(unsafe_code)]

pub mod charring;
pub mod cli;
pub mod cohomology;
pub mod compat;
pub mod error;
pub mod ktypes;
pub mod ltheory;
pub mod oracle;
pub mod sweep;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{GlWeight, HalfInt, PureWeight};
