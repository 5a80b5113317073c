//! Structure reports, DOT export and verification sweeps on top of
//! `linqh-core`. The `linqh` binary is a thin wrapper around this crate.

pub mod dot;
pub mod report;
pub mod sweep;
pub mod verify;
