//! Structural theorems made executable: bijections, explicit avoiders,
//! recursive shape templates and the verification registry.

pub mod bijection;
pub mod canonical;
pub mod shapes;
pub mod theorem;
pub mod verify;

pub use bijection::{
    composition_to_d2_231, cycle_decomposition, d2_231_to_composition, d2_3142_decompose,
    d2_3142_to_dyck, dyck_to_d2_3142, CycleDecomposition, Decomposition3142, DyckPath, Step,
    WeakComposition,
};
pub use canonical::{canonical_avoider, has_canonical};
pub use shapes::{has_shape, matches_shape, shape_instances, shape_min_n};
pub use theorem::TheoremId;
pub use verify::{
    verify_all, verify_theorem, Row, Value, VerificationReport, SINGLE_PATTERN_TABLE, TABLE_MAX_N,
};
