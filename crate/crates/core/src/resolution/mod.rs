//! The resolution dynamical system: truncation maps, locking zones,
//! basins, structure classification, and the pruned tree.

mod basin;
mod map;
mod tree;
mod zones;

pub use basin::{
    basin, classify_rational, classify_surd, transit_fixed_point_quadratic, Basin, ZoneClass, ZoneClassTag,
};
pub use map::{
    in_invariant_set, in_invariant_set_cf, in_invariant_set_surd, orbit, resolve, truncate_word,
    ResolutionBound, Terminal, TruncatedWord,
};
pub use tree::{resolution_tree, ResolutionNode, ResolutionTree};
pub use zones::{
    approximation_error, error_profile, functional_check, nu_minus, nu_plus, zone, LockingZone,
};

pub(crate) use zones::locking_interval;
