//! Reconstruction of binary images from their row and column sums.
//!
//! * [`hv`] finds hv-convex polyomino realizations by reducing each choice
//!   of anchor rows to a 2SAT instance ([`formula`], [`twosat`]).
//! * [`centered`] handles instances with a full row in linear time.
//! * [`ryser`] is the unconstrained baseline.
//! * [`oracle`] enumerates small objects by brute force for testing.

pub mod centered;
pub mod error;
pub mod formula;
pub mod grid;
pub mod hv;
pub mod oracle;
pub mod result;
pub mod ryser;
pub mod twosat;

pub use error::{Error, Result};
pub use grid::{BinaryGrid, Projections};
pub use result::{Anchor, Outcome, ReconstructionResult, Stats};
