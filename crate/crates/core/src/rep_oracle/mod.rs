//! Ground truth from explicit representations over the rationals.
//!
//! Nothing here knows about trees: Hom spaces are kernels of intertwiner
//! systems, Ext¹ comes from minimal projective resolutions and, separately,
//! from the Euler form, and Yoneda products are computed on syzygies.

mod cache;
mod rep;
mod resolution;
mod yoneda;

pub use cache::IntervalOracle;
pub use rep::{euler_form, hom_basis, hom_dim_oracle, rep_of_interval, QuiverRep, RepMap};
pub use resolution::{ext1_dim_oracle, std_resolution, ProjectiveSum, TwoTermResolution};
pub use yoneda::{Element, ModuleFamily};
