//! Contraction sequences and their replay-based verification.
//!
//! A sequence of `keep drop` pairs is the portable certificate format: replay
//! it with [`apply_sequence`] to obtain the per-step maximum red degrees, the
//! achieved width, and the mapping from original vertices to survivors.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::trigraph::{Trigraph, TrigraphError, VertexId};

/// One contraction: merge `drop` into `keep`; the merged vertex keeps the
/// label `keep`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionStep {
    pub keep: VertexId,
    pub drop: VertexId,
}

impl ContractionStep {
    pub fn new(keep: VertexId, drop: VertexId) -> Self {
        Self { keep, drop }
    }
}

/// Ordered list of contraction steps. A full sequence of an n-vertex graph
/// has n-1 steps and ends at a single vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionSequence {
    pub steps: Vec<ContractionStep>,
}

impl ContractionSequence {
    pub fn new(steps: Vec<ContractionStep>) -> Self {
        Self { steps }
    }

    pub fn push(&mut self, step: ContractionStep) {
        self.steps.push(step);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ContractionStep> {
        self.steps.iter()
    }

    pub fn extend(&mut self, other: &ContractionSequence) {
        self.steps.extend_from_slice(&other.steps);
    }

    /// Applies a vertex bijection to every step.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Self, SequenceError> {
        let mut steps = Vec::with_capacity(self.steps.len());
        for (index, s) in self.steps.iter().enumerate() {
            let keep = *map.get(&s.keep).ok_or(SequenceError::BadStep {
                index,
                source: TrigraphError::UnknownVertex(s.keep),
            })?;
            let drop = *map.get(&s.drop).ok_or(SequenceError::BadStep {
                index,
                source: TrigraphError::UnknownVertex(s.drop),
            })?;
            steps.push(ContractionStep { keep, drop });
        }
        Ok(Self { steps })
    }
}

impl FromIterator<ContractionStep> for ContractionSequence {
    fn from_iter<T: IntoIterator<Item = ContractionStep>>(iter: T) -> Self {
        Self {
            steps: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("malformed certificate at step {index}: {source}")]
    BadStep { index: usize, source: TrigraphError },
}

/// Result of replaying a contraction sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Maximum red degree after each step.
    pub step_max_red_degrees: Vec<u32>,
    /// Maximum red degree over the whole replay, the starting trigraph
    /// included.
    pub width: u32,
    /// Final image of every original vertex.
    pub sigma: BTreeMap<VertexId, VertexId>,
    /// For each surviving vertex, how many originals were merged into it.
    pub preimage_sizes: BTreeMap<VertexId, usize>,
}

impl VerificationReport {
    /// Originals mapped to `survivor`.
    pub fn preimage(&self, survivor: VertexId) -> BTreeSet<VertexId> {
        self.sigma
            .iter()
            .filter(|&(_, &s)| s == survivor)
            .map(|(&v, _)| v)
            .collect()
    }
}

/// Replays `seq` on a working copy of `g` and reports the achieved width.
///
/// The empty sequence yields the identity mapping and width equal to the
/// maximum red degree of `g` itself. A step naming a dead or unknown vertex
/// fails with the offending step index.
pub fn apply_sequence(
    g: &Trigraph,
    seq: &ContractionSequence,
) -> Result<VerificationReport, SequenceError> {
    let mut work = g.clone();
    let mut preimages: BTreeMap<VertexId, Vec<VertexId>> =
        g.vertices().map(|v| (v, vec![v])).collect();
    let mut step_max_red_degrees = Vec::with_capacity(seq.len());
    let mut width = work.max_red_degree();
    for (index, step) in seq.iter().enumerate() {
        work.contract_in_place(step.keep, step.drop)
            .map_err(|source| SequenceError::BadStep { index, source })?;
        let dropped = preimages.remove(&step.drop).expect("drop vertex tracked");
        preimages
            .get_mut(&step.keep)
            .expect("keep vertex tracked")
            .extend(dropped);
        let d = work.max_red_degree();
        step_max_red_degrees.push(d);
        width = width.max(d);
    }
    let mut sigma = BTreeMap::new();
    let mut preimage_sizes = BTreeMap::new();
    for (survivor, originals) in preimages {
        preimage_sizes.insert(survivor, originals.len());
        for v in originals {
            sigma.insert(v, survivor);
        }
    }
    Ok(VerificationReport {
        step_max_red_degrees,
        width,
        sigma,
        preimage_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full_fold(n: usize) -> ContractionSequence {
        (1..n as VertexId)
            .map(|v| ContractionStep::new(0, v))
            .collect()
    }

    #[test]
    fn k4_any_full_sequence_has_width_zero() {
        let k4 = Trigraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let report = apply_sequence(&k4, &full_fold(4)).unwrap();
        assert_eq!(report.width, 0);
        assert_eq!(report.step_max_red_degrees, vec![0, 0, 0]);
        assert_eq!(report.preimage_sizes, BTreeMap::from([(0, 4)]));
    }

    #[test]
    fn p4_spine_fold_has_width_one() {
        // 0-1-2-3, absorb along the path.
        let p4 = Trigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let seq = ContractionSequence::new(vec![
            ContractionStep::new(1, 0),
            ContractionStep::new(2, 1),
            ContractionStep::new(3, 2),
        ]);
        let report = apply_sequence(&p4, &seq).unwrap();
        assert_eq!(report.width, 1);
        assert_eq!(report.sigma[&0], 3);
    }

    #[test]
    fn empty_sequence_reports_identity() {
        let mut g = Trigraph::with_vertex_count(3);
        g.add_red_edge(0, 1).unwrap();
        let report = apply_sequence(&g, &ContractionSequence::default()).unwrap();
        assert_eq!(report.width, 1);
        assert!(report.step_max_red_degrees.is_empty());
        assert_eq!(report.sigma, BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
        assert_eq!(report.preimage_sizes.values().sum::<usize>(), 3);
    }

    #[test]
    fn dead_vertex_reports_failing_step_index() {
        let p4 = Trigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let seq = ContractionSequence::new(vec![
            ContractionStep::new(1, 0),
            ContractionStep::new(2, 0), // 0 is already gone
        ]);
        let err = apply_sequence(&p4, &seq).unwrap_err();
        assert_eq!(
            err,
            SequenceError::BadStep {
                index: 1,
                source: TrigraphError::UnknownVertex(0)
            }
        );
    }

    #[test]
    fn replay_does_not_modify_input() {
        let p4 = Trigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let before = p4.clone();
        let _ = apply_sequence(&p4, &full_fold(4)).unwrap();
        assert_eq!(p4, before);
    }
}
