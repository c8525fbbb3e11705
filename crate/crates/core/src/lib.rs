//! Finite lattices, orthocomplemented structures, and primorial-lattice decomposition
//! of symbolic sequences.

pub mod boolean;
pub mod catalog;
pub mod classify;
pub mod compose;
pub mod dot;
pub mod dposet;
pub mod enumerate;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod laws;
pub mod negation;
pub mod ortho;
pub mod poset;
pub mod primorial;
pub mod probability;
pub mod projection;
pub mod reduce;
pub mod scalar;
pub mod seqproc;
pub mod text;
pub mod valuation;

pub use boolean::{format_mask, parse_mask, parse_mask_list, BooleanCarrier, Level, Mask};
pub use classify::{classify, ComplementationClass, PropertyReport};
pub use error::*;
pub use lattice::FiniteLattice;
pub use poset::{FinitePoset, Relation};
pub use scalar::Scalar;

/// Exact rational scalar used by default.
pub type Rational = num_rational::Ratio<i64>;
