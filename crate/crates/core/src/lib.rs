//! Exact computations for finite complex reflection groups: group
//! enumeration from generating matrices, polynomial invariants and
//! coinvariants, and coset complexes with their homology.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coinvariants;
pub mod complexes;
pub mod error;
pub mod field;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
