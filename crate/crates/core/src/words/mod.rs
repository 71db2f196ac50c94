//! Word calculus on the generators `T` and `J` and the Farey tree it
//! generates on prime lattice points.

mod branches;
mod tree;
mod word;

pub use branches::{branch_report, daughter_slope, mother_origin, mother_slope, BranchQuery, BranchReport};
pub use tree::{children_of, FareyNode, FareyTree};
pub use word::{GeneratorWord, IntMatrix2, LatticePoint, Letter};
