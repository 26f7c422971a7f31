//! Sweeps, figure data and verification for the cat-qubit channel model.

pub mod config;
pub mod figure;
pub mod format;
pub mod sweep;
pub mod verify;
