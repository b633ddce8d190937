//! Conclusive dense coding capacities of shared pure states.

pub mod linalg;

pub use linalg::{CMatrix, CVector, C64};
