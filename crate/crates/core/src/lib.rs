//! Weight cones attached to a reductive group with Frobenius and a cocharacter,
//! computed combinatorially from a based root datum.
//!
//! The crate is organised bottom up:
//!
//! * [`rootdata`]: based root data, Cartan matrices and Frobenius data.
//! * [`weyl`]: Weyl group elements as lattice automorphisms.
//! * [`cones`]: exact rational polyhedral cones (double description, with a
//!   Fourier–Motzkin oracle).
//! * [`zipcones`]: the cones of a zip context.
//! * [`hasse`]: the Hasse-type criterion and the classification of Dynkin triples.
//! * [`catalog`]: preset contexts and reproduction of worked examples.

pub mod arith;
pub mod catalog;
pub mod cones;
mod error;
pub mod hasse;
pub mod par;
pub mod rootdata;
pub mod weyl;
pub mod zipcones;

pub use error::{Error, Result};
