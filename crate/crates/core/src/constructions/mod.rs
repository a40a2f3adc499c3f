//! Constructive twin-width bounds: every algorithm here emits a
//! [`ContractionSequence`] whose width is re-verified by an independent
//! replay, never trusted from construction bookkeeping.

mod bounds;
mod cograph;
mod dispatch;
mod pairs;
mod paley_seq;
mod partition;
mod structural;
mod theorem1;
mod theorem2;

pub use bounds::{theorem1_bound, theorem2_bound, theorem3_threshold};
pub use cograph::{cograph_sequence, is_cograph};
pub use dispatch::best_upper_bound;
pub use pairs::{
    find_disjoint_pairs, lower_bound_min_symdiff, order_bound_check, order_step_values, PairSet,
};
pub use paley_seq::paley_sequence;
pub use partition::{partition_by_weight, WeightPartition};
pub use structural::{caterpillar_sequence, is_caterpillar, tree_sequence, unicyclic_sequence};
pub use theorem1::theorem1_sequence;
pub use theorem2::theorem2_sequence;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::generators::GeneratorError;
use crate::sequence::{apply_sequence, ContractionSequence, ContractionStep, SequenceError};
use crate::trigraph::{Trigraph, TrigraphError, VertexId};

#[derive(Debug, Error, PartialEq)]
pub enum ConstructionError {
    #[error("operation requires a plain graph ({0} red edges present)")]
    NotPlain(usize),
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("input is not a tree")]
    NotATree,
    #[error("input tree is not a caterpillar")]
    NotACaterpillar,
    #[error("input is not a cograph")]
    NotACograph,
    #[error("component containing vertex {0} has more than one cycle")]
    ComponentHasTwoCycles(VertexId),
    #[error("negative weight at index {0}")]
    NegativeWeight(usize),
    #[error("k must be positive, got {0}")]
    NonPositiveK(f64),
    #[error("order is not a permutation of the pair indices")]
    BadOrder,
    #[error("pairs are not pairwise disjoint")]
    OverlappingPairs,
    #[error(transparent)]
    Trigraph(#[from] TrigraphError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

/// A contraction sequence together with its replay-verified width and the
/// bound the producing construction claims for it.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedSequence {
    pub sequence: ContractionSequence,
    /// Width measured by [`apply_sequence`], not by the construction.
    pub width: u32,
    /// The theorem formula value for this instance.
    pub claimed_bound: f64,
    /// Whether the producing construction's own success test held (each
    /// construction documents strict vs non-strict comparison).
    pub bound_met: bool,
}

pub(crate) fn ensure_plain(g: &Trigraph) -> Result<(), ConstructionError> {
    if g.is_plain() {
        Ok(())
    } else {
        Err(ConstructionError::NotPlain(g.red_edge_count()))
    }
}

/// Steps that fold `survivors` into its smallest member: repeatedly
/// contracts the two lowest-labeled surviving vertices.
pub(crate) fn fold_into_lowest(survivors: &BTreeSet<VertexId>) -> Vec<ContractionStep> {
    let mut it = survivors.iter();
    let Some(&lowest) = it.next() else {
        return Vec::new();
    };
    it.map(|&v| ContractionStep::new(lowest, v)).collect()
}

/// Survivor set after applying `steps` to the full vertex set of `g`.
pub(crate) fn survivors_after(g: &Trigraph, steps: &[ContractionStep]) -> BTreeSet<VertexId> {
    let mut alive = g.vertex_set();
    for s in steps {
        alive.remove(&s.drop);
    }
    alive
}

/// Replays `seq` on `g` and packages the verified width with a claimed
/// bound. `met` judges success from the measured width.
pub(crate) fn verified(
    g: &Trigraph,
    sequence: ContractionSequence,
    claimed_bound: f64,
    met: impl Fn(u32) -> bool,
) -> Result<BoundedSequence, ConstructionError> {
    let report = apply_sequence(g, &sequence)?;
    let width = report.width;
    Ok(BoundedSequence {
        sequence,
        width,
        claimed_bound,
        bound_met: met(width),
    })
}
