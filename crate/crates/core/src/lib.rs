//! Exact generalized differential forms of types N = 0, 1, 2 valued in Lie
//! algebras, Lie 2-algebras and Lie 3-algebras, with the higher gauge theory
//! built on top of them.

pub mod algebra;
pub mod checks;
pub mod error;
pub mod exterior;
pub mod gauge;
pub mod genform;
pub mod group;
pub mod linalg;
pub mod models;
pub mod plain;
pub mod poly;
pub mod random;
pub mod rational;
pub mod validate;
pub mod wire;

pub use error::{Error, Result};
pub use rational::Q;
