//! Colouring number, col-critical and double-col-critical graphs.
//!
//! The colouring number `col(G)` is one more than the degeneracy of `G`.
//! This crate computes it, decides the criticality predicates built on it,
//! constructs the named graph families around them, and enumerates small
//! graphs exhaustively to check structural claims.

pub mod canon;
pub mod cli;
pub mod census;
pub mod classifier;
pub mod criticality;
pub mod degeneracy;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod limits;
pub mod properties;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use classifier::{classify_dcc5, ClassLabel};
pub use criticality::{criticality_report, CriticalityReport};
pub use degeneracy::{colouring_number, degeneracy_ordering, DegeneracyCertificate};
pub use error::{Error, Result};
pub use families::BrickKind;
pub use graph::{DegreeProfile, Edge, Graph};
