//! Routing front end: picks the cheapest applicable construction.

use std::collections::BTreeSet;

use super::structural::is_tree;
use super::{
    caterpillar_sequence, cograph_sequence, ensure_plain, fold_into_lowest, is_caterpillar,
    is_cograph, survivors_after, theorem1_sequence, theorem2_sequence, unicyclic_sequence,
    verified, BoundedSequence, ConstructionError,
};
use crate::sequence::ContractionSequence;
use crate::trigraph::{Trigraph, VertexId};

const DISPATCH_SEED: u64 = 0x2b4d_9910;
const DISPATCH_ATTEMPTS: u32 = 50;

/// Best verified upper bound available: width 0 for cographs, 1 for
/// caterpillar forests, 2 when every component has at most one cycle, and
/// otherwise the smaller of the two general constructions.
pub fn best_upper_bound(g: &Trigraph) -> Result<BoundedSequence, ConstructionError> {
    ensure_plain(g)?;
    if is_cograph(g)? {
        return cograph_sequence(g);
    }
    if let Some(bs) = caterpillar_forest_sequence(g)? {
        return Ok(bs);
    }
    let comps = g.components();
    if comps.iter().all(|c| component_edges(g, c) <= c.len()) {
        return unicyclic_sequence(g);
    }
    let t1 = theorem1_sequence(g, DISPATCH_SEED, DISPATCH_ATTEMPTS)?;
    let t2 = theorem2_sequence(g)?;
    Ok(if t1.width <= t2.width { t1 } else { t2 })
}

fn component_edges(g: &Trigraph, comp: &[VertexId]) -> usize {
    let set: BTreeSet<VertexId> = comp.iter().copied().collect();
    comp.iter()
        .map(|&v| {
            g.neighbors(v)
                .filter(|(u, _)| set.contains(u) && *u > v)
                .count()
        })
        .sum()
}

/// Width <= 1 sequence when every component is a caterpillar; None when the
/// graph is not a forest of caterpillars.
fn caterpillar_forest_sequence(g: &Trigraph) -> Result<Option<BoundedSequence>, ConstructionError> {
    let mut seq = ContractionSequence::default();
    for comp in g.components() {
        let set: BTreeSet<VertexId> = comp.iter().copied().collect();
        let sub = g.induced_subgraph(&set)?;
        if !is_tree(&sub) || !is_caterpillar(&sub)? {
            return Ok(None);
        }
        let part = caterpillar_sequence(&sub)?;
        seq.extend(&part.sequence);
    }
    for step in fold_into_lowest(&survivors_after(g, &seq.steps)) {
        seq.push(step);
    }
    Ok(Some(verified(g, seq, 1.0, |w| w <= 1)?))
}
