//! The vertex-count bound construction: contract a maximal disjoint pair set
//! in a random order, then fold the rest.

use rand::seq::SliceRandom;

use super::{
    find_disjoint_pairs, fold_into_lowest, survivors_after, theorem1_bound, verified,
    BoundedSequence, ConstructionError,
};
use crate::generators::{derive_seed, seeded_rng};
use crate::sequence::{ContractionSequence, ContractionStep};
use crate::trigraph::Trigraph;

/// Ordering note: a uniformly random permutation of the disjoint pair set is
/// contracted first, then the survivors are folded into the lowest label.
/// Each attempt is replay-verified against the n-vertex bound
/// [`theorem1_bound`]; the first attempt strictly below it is returned.
/// A witness permutation always exists, but a sampled one may fail, so up to
/// `max_attempts` fresh permutations (streams split off `seed` by attempt
/// index) are tried; on exhaustion the best attempt is returned with
/// `bound_met` false.
pub fn theorem1_sequence(
    g: &Trigraph,
    seed: u64,
    max_attempts: u32,
) -> Result<BoundedSequence, ConstructionError> {
    super::ensure_plain(g)?;
    let n = g.vertex_count();
    let claimed = theorem1_bound(n);
    if n <= 2 {
        let seq = ContractionSequence::new(fold_into_lowest(&g.vertex_set()));
        return verified(g, seq, claimed, |w| (w as f64) < claimed);
    }
    let pairs = find_disjoint_pairs(g)?;
    let mut best: Option<BoundedSequence> = None;
    for attempt in 0..max_attempts.max(1) {
        let mut rng = seeded_rng(derive_seed(seed, attempt as u64));
        let mut order: Vec<usize> = (0..pairs.pairs.len()).collect();
        order.shuffle(&mut rng);
        let mut seq = ContractionSequence::default();
        for idx in order {
            let (a, b) = pairs.pairs[idx];
            seq.push(ContractionStep::new(a.min(b), a.max(b)));
        }
        for step in fold_into_lowest(&survivors_after(g, &seq.steps)) {
            seq.push(step);
        }
        let cand = verified(g, seq, claimed, |w| (w as f64) < claimed)?;
        if cand.bound_met {
            return Ok(cand);
        }
        if best.as_ref().is_none_or(|b| cand.width < b.width) {
            best = Some(cand);
        }
    }
    Ok(best.expect("at least one attempt runs"))
}
