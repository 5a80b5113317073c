//! Quasi-hereditary structures on path algebras of linear quivers.
//!
//! Every adapted order on a uniformly oriented linear quiver is equivalent to
//! the order read off a binary search tree. This crate turns such trees into
//! the standard, costandard and tilting modules, the Ext-algebra of standard
//! modules and the Ringel dual as quivers with quadratic monomial relations,
//! and the regular exact Borel subalgebra. Quivers of arbitrary linear
//! orientation are handled by cutting them at sinks and sources into uniform
//! segments and gluing the per-segment answers back together.
//!
//! All closed forms can be checked against [`rep_oracle`], which works with
//! explicit quiver representations over the rationals and knows nothing about
//! trees.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod borel;
pub mod error;
pub mod intervals;
pub mod linalg;
pub mod linquiver;
pub mod presentations;
pub mod qh;
pub mod rep_oracle;
pub mod treeorder;

pub use error::{Error, Result};
pub use intervals::{Interval, StructureTable};
pub use linquiver::{Deconcatenation, Direction, LinearQuiver, Path, Segment};
pub use presentations::MonomialPresentation;
pub use qh::LinearQh;
pub use treeorder::{BinaryTree, LabeledTree, PartialOrder};

/// Vertex label. Vertices of a quiver with `n` vertices are `1..=n`.
pub type Vertex = usize;
