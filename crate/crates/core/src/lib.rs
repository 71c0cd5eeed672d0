//! Pattern avoidance in Dumont permutations.
//!
//! Exhaustive generation of both kinds of Dumont permutations (and their
//! complemented variants), pattern containment, exact counting sequences and
//! generating functions, explicit bijections, and a registry that checks
//! every enumerative claim against brute force.

pub mod dumont;
pub mod error;
pub mod perm;
pub mod sequences;
pub mod structure;
pub mod wilf;

pub use dumont::{genocchi, is_member, DumontKind, Enumerator};
pub use error::{Error, Result};
pub use perm::{Occurrence, PatternSet, Permutation, Symmetry};
pub use sequences::{GfId, PowerSeries, Rational, SequenceId};
pub use structure::{CycleDecomposition, DyckPath, TheoremId, VerificationReport, WeakComposition};
pub use wilf::{wilf_classes, WilfClass, WilfClassTable};
