//! Exact iterated binomial transforms of the Padovan and Perrin matrix sequences.
//!
//! Every identity in [`analysis`] is checked against the definitional
//! transform in [`transform::iterated_oracle`]; nothing is assumed.

pub mod analysis;
pub mod bench;
pub mod error;
pub mod exactmat;
pub mod sequences;
pub mod transform;

pub use error::{DivisionError, Error, Result};
pub use exactmat::{Mat3, RatMat3};
pub use sequences::{SeqKind, Term, Terms};
