//! Horizontal Schubert varieties of rational homogeneous varieties `G/P`,
//! computed purely from root-system data.
//!
//! The pipeline: parse a marked Dynkin diagram ([`dynkin`]), generate the
//! positive roots and the grading-element eigenspaces ([`roots`]), enumerate
//! minimal coset representatives ([`weyl`]), test horizontality and build
//! Schubert data and Hasse posets ([`schubert`]), decide smoothness and the
//! cominuscule product decomposition ([`classify`]), and transport Schubert
//! varieties along line rulings ([`tits`]). An independent combinatorial
//! model of `OG(2, C^m)` ([`isotropic`]) cross-validates the whole pipeline
//! ([`crosscheck`]).
//!
//! All structures are immutable after construction and every operation is a
//! pure function, safe to call concurrently.

pub mod classify;
pub mod crosscheck;
pub mod dynkin;
pub mod error;
pub mod isotropic;
pub mod roots;
pub mod schubert;
pub mod tits;
pub mod weyl;

pub use error::{Error, Result};
