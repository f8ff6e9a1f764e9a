//! Workbench for 3-uniform linear hypergraphs (partial triple systems).
//!
//! * [`system`] and [`io`]: the [`LinearTripleSystem`] type, validation and the
//!   line-oriented text format.
//! * [`canon`]: canonical forms for isomorphism rejection at small orders.
//! * [`patterns`]: exact detectors for the wicket, grid, (6,3)-configuration
//!   and Berge 4-cycle, with embedding certificates.
//! * [`generators`]: random, Steiner, affine-plane, Behrend-based and greedy
//!   pattern-free instances.
//! * [`extremal`]: exact linear Turán numbers at small orders.
//! * [`pipeline`]: the two randomized reductions that locate a wicket inside
//!   a dense system through (6,3)-configurations.

pub mod canon;
pub mod extremal;
pub mod generators;
pub mod io;
pub mod patterns;
pub mod pipeline;
pub mod seed;
pub mod system;

pub use canon::{canonical_form, CanonicalForm};
pub use patterns::{Embedding, Pattern};
pub use system::{EdgeId, LinearTripleSystem, SystemError, Triple, Vertex};
