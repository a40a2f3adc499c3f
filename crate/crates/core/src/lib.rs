//! Twin-width toolkit: trigraph contraction machinery, certificate
//! verification, graph generators, constructive width bounds with verified
//! certificates, an exact solver for small instances, and the lattice-path
//! counting behind the randomized bound analysis.

mod canon;
pub mod catalog;
pub mod constructions;
pub mod exact;
pub mod field;
pub mod generators;
pub mod lattice;
pub mod sequence;
pub mod trigraph;

pub use constructions::BoundedSequence;
pub use sequence::{apply_sequence, ContractionSequence, ContractionStep, VerificationReport};
pub use trigraph::{EdgeColor, Trigraph, VertexId};

/// Seed used wherever a default is needed (CLI defaults, frozen tests).
pub const DEFAULT_SEED: u64 = 42;
