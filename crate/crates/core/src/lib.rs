//! Exact computations with cocommutative Hopf algebras `U(L) ⋊ K[G]` over ℚ.

pub mod action;
pub mod endo;
pub mod center;
pub mod classifier;
pub mod corpus;
pub mod error;
pub mod group;
pub mod hopf;
pub mod lincomb;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod rational;
pub mod tasks;
pub mod workspace;

pub use error::{Error, Result};
pub use rational::Q;
