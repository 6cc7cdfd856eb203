//! Gaussoids, their oriented and valuated refinements, and the algebra of
//! principal and almost-principal minors of symmetric matrices.

pub mod algebra;
pub mod bitset;
pub mod cube;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod gaussoid;
pub mod linalg;
pub mod oriented;
pub mod realize;
pub mod symmetry;
pub mod valuated;

pub use cube::{GroundSet, Subset, Symbol, Trinomial};
pub use bitset::BitSet;
pub use gaussoid::{Gaussoid, Graph};
pub use oriented::OrientedGaussoid;
pub use symmetry::{CubeSymmetry, Group, GroupAction};
pub use error::{Error, Result};
pub use exec::Strategy;
