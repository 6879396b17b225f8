//! Cellular resolutions of monomial ideals and lattice ideals: Taylor, Scarf
//! and hull complexes, exactness checks and multigraded Betti numbers.

mod bitset;
pub mod cli;
pub mod complex;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod input;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod resolution;

pub use error::{Error, Result};
pub use linalg::Field;
pub use monomial::{ExponentVector, GeneratorSet};
