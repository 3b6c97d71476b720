pub mod arrangement;
pub mod assembly;
pub mod error;
pub mod fraction;
pub mod localhodge;
pub mod pointcount;
pub mod repring;

pub use error::{Error, Result};

pub use arrangement::{
    comb_invariants, parse_arrangement, weak_comb_data, Builtin, CombInvariants, LineArrangement, WeakCombData,
};
pub use assembly::{assemble_all, check_identities, spectrum, Report, Spectrum, SurfaceH3Data};
pub use localhodge::{local_hodge_table, LocalHodgeTable, OrdinarySing};
pub use pointcount::{CountTable, Target};
pub use repring::{CharacterClass, EquivPoly, HodgeTable, ReprClass};
