//! Bier spheres of simplicial complexes, their face vectors and shellings, and Bier posets.
//!
//! [`poset`] holds finite bounded posets and order complexes, [`bier_poset`] the
//! general construction `Bier(P, I)`, [`complex`] abstract simplicial complexes
//! with their face-vector calculus, and [`sphere`] the boolean case
//! `Bier(B_n, Δ)`. [`enumerate`] walks all complexes on a small ground set.

mod bitset;
pub mod bier_poset;
pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod poset;
pub mod report;
pub mod sphere;
pub mod suites;

pub use error::{Error, Result};
