//! Computable combinatorics of Schreier families and the exact norms of
//! their p-convexified combinatorial Banach spaces, together with a
//! verification harness for the rigidity of unit-sphere isometries:
//! on these spaces, every surjective sphere isometry acts as a diagonal
//! sign map, and the harness checks finite traces of candidate maps
//! against that description.
//!
//! The main pieces:
//!
//! * [`ordinal`] — ordinal notations below `w^2` with canonical
//!   approximating sequences at limits;
//! * [`family`] — membership, maximality, enumeration, and block
//!   decomposition for the families `S_alpha`;
//! * [`norm`] — exact rational evaluation of the norms, norming sets,
//!   sphere tests, diagonal maps;
//! * [`one_sets`] — the p = 1 analysis: 1-sets, the gap below 1, and the
//!   non-maximal 1-set structure at order 1;
//! * [`tingley`] — verification contracts and witness generators for
//!   tabulated sphere maps;
//! * [`oracle`] — slow definition-literal reference implementations used
//!   as ground truth;
//! * [`suites`] — named randomized property sweeps shared by the test
//!   suite and the CLI.

pub mod budget;
pub mod error;
pub mod family;
pub mod finset;
pub mod gen;
pub mod norm;
pub mod one_sets;
pub mod oracle;
pub mod ordinal;
pub mod rational;
pub mod signs;
pub mod suites;
pub mod tingley;
pub mod vector;

pub use budget::Budget;
pub use error::Error;
pub use finset::FinSet;
pub use norm::{Exponent, NormValue};
pub use ordinal::{Ordinal, OrdinalClass};
pub use signs::SignSeq;
pub use vector::FinVector;

/// Convenient alias for the crate's result type.
pub type Result<T> = std::result::Result<T, Error>;
