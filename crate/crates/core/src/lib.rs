//! Nonabelian first cohomology of finite group actions.
//!
//! A finite acting group `GG` acts on a finite group `G` by automorphisms.
//! This crate enumerates cocycles, builds `H^1(GG, G)` as a pointed set, and
//! exhaustively checks the surrounding machinery: the six-term exact sequence
//! of a subgroup, twisting by a cocycle, forms classified by
//! `H^1(GG, Aut G)`, torsors, and the fiber-counting identities that bound
//! `|H^1(GG, G)|` through a normal subgroup.

pub mod actions;
pub mod cohomology;
pub mod error;
pub mod exec;
pub mod forms;
pub mod group;
pub mod io;
pub mod oracle;
pub mod torsors;
pub mod twisting;
pub mod verify;

pub use error::{Error, Result};
pub use exec::{Exec, Settings};
