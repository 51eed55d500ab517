//! Exact computations around r-Tamari posets, r-parking functions and
//! trivariate diagonal harmonics.

pub mod symcore;
pub mod util;

pub use symcore::{Basis, Composition, Partition, QPoly3, SymFunc};
pub mod parking;
pub mod tamari;
pub mod harmonics;
pub mod nabla3;
pub mod series;
pub mod verify;
