//! Exact laboratory for edge-chromatic critical graphs.
//!
//! The crate is organized around small desk-scale graphs: exact chromatic
//! index and independence number, the color-set machinery around an
//! uncolored edge, auditors for the adjacency lemmas, and a discharging
//! engine whose charge bookkeeping and inequality certificates are carried
//! out in exact rational (or outward-rounded interval) arithmetic.

pub mod chi;
pub mod claims;
pub mod coloring;
pub mod discharge;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod mis;
pub mod palette;
pub mod params;
pub mod real;
pub mod report;
pub mod scalar;
pub mod vizing;

/// Exact rational scalar used for all graph-level verdicts.
pub type Rat = num::BigRational;
/// Arbitrary-precision big integer.
pub type Int = num::BigInt;
/// Enclosing interval with exact rational endpoints.
pub type Iv = interval::Interval;

pub use chi::{chromatic_index, is_delta_critical, ClassResult, Classification};
pub use coloring::EdgeColoring;
pub use error::Error;
pub use graph::{DegreeProfile, Graph};
pub use mis::{max_independent_set, IndependentSetResult};
pub use palette::{AuditReport, AuditStatus, PaletteAnalysis};
pub use params::Params;
pub use vizing::vizing_color;
