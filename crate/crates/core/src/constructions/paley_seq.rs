//! The optimal contraction sequence for Paley graphs.

use super::{fold_into_lowest, survivors_after, verified, BoundedSequence, ConstructionError};
use crate::field::FiniteField;
use crate::generators::paley;
use crate::sequence::{ContractionSequence, ContractionStep};
use crate::trigraph::VertexId;

/// Builds the width-(q-1)/2 sequence for the Paley graph P(q): first
/// contract one representative pair {u, -u} per orbit of negation (the
/// lexicographically smaller encoding is kept), then fold the remaining
/// (q+1)/2 vertices into the lowest label. The verified width is exactly
/// (q-1)/2, matching the conference-graph lower bound.
pub fn paley_sequence(q: u64) -> Result<BoundedSequence, ConstructionError> {
    let g = paley(q)?;
    let field = FiniteField::new(q).map_err(crate::generators::GeneratorError::from)?;
    let mut seq = ContractionSequence::default();
    for u in 1..q {
        let neg = field.neg(u);
        if u < neg {
            seq.push(ContractionStep::new(u as VertexId, neg as VertexId));
        }
    }
    debug_assert_eq!(seq.len() as u64, (q - 1) / 2);
    for step in fold_into_lowest(&survivors_after(&g, &seq.steps)) {
        seq.push(step);
    }
    let claimed = (q - 1) as f64 / 2.0;
    verified(&g, seq, claimed, |w| w as f64 <= claimed)
}
