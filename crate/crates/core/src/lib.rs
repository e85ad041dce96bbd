//! Exact-arithmetic toolkit for finite-dimensional Lie algebras over the
//! rationals: structure constants, Killing form, solvable radical,
//! representations, and a decision procedure for elements that act
//! nilpotently in every finite-dimensional representation.

pub mod catalog;
pub mod cli;
mod error;
pub mod exactlinalg;
pub mod liecore;
pub mod oracle;
pub mod reps;
pub mod semisimple;

pub use error::{Error, Result};
pub use exactlinalg::{Matrix, Scalar, Subspace};
pub use liecore::{Element, LieAlgebra, QuotientMap};
pub use reps::Representation;
