//! McKay correspondence for finite subgroups of SL(2,C) and SL(3,C), affine
//! Cartan matrices, and the Poincaré series of invariants and covariants.

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod cli;
pub mod dump;
pub mod error;
pub mod groups;
pub mod mckay;
pub mod poly;
pub mod report;
pub mod series;

pub use error::{Error, Result};
