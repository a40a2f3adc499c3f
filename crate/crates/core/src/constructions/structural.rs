//! Structural sequences for trees, caterpillars, and graphs whose
//! components have at most one cycle. Every output is replay-verified, never
//! assumed correct from the construction.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    ensure_plain, fold_into_lowest, survivors_after, verified, BoundedSequence, ConstructionError,
};
use crate::sequence::{ContractionSequence, ContractionStep};
use crate::trigraph::{Trigraph, VertexId};

pub(crate) fn is_tree(g: &Trigraph) -> bool {
    g.is_plain()
        && g.vertex_count() >= 1
        && g.is_connected()
        && g.edge_count() == g.vertex_count() - 1
}

fn ensure_tree(g: &Trigraph) -> Result<(), ConstructionError> {
    ensure_plain(g)?;
    if is_tree(g) {
        Ok(())
    } else {
        Err(ConstructionError::NotATree)
    }
}

/// True iff the tree is a caterpillar: removing all leaves leaves a path
/// (equivalently, no subdivided 3-ray star occurs as a subgraph).
pub fn is_caterpillar(g: &Trigraph) -> Result<bool, ConstructionError> {
    ensure_tree(g)?;
    if g.vertex_count() <= 2 {
        return Ok(true);
    }
    let internal: BTreeSet<VertexId> = g
        .vertices()
        .filter(|&v| g.degree(v).unwrap() >= 2)
        .collect();
    // The internal vertices of a tree always induce a subtree; it is a path
    // iff no vertex has three internal neighbors.
    for &v in &internal {
        let deg = g.neighbors(v).filter(|(u, _)| internal.contains(u)).count();
        if deg > 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The spine of a caterpillar with at least 3 vertices: the internal
/// vertices ordered along their path, starting from the endpoint with the
/// smaller label.
fn spine(g: &Trigraph) -> Vec<VertexId> {
    let internal: BTreeSet<VertexId> = g
        .vertices()
        .filter(|&v| g.degree(v).unwrap() >= 2)
        .collect();
    debug_assert!(!internal.is_empty());
    if internal.len() == 1 {
        return internal.into_iter().collect();
    }
    let ends: Vec<VertexId> = internal
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).filter(|(u, _)| internal.contains(u)).count() == 1)
        .collect();
    let start = ends[0].min(ends[1]);
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while order.len() < internal.len() {
        let next = g
            .neighbors(cur)
            .map(|(u, _)| u)
            .find(|&u| internal.contains(&u) && Some(u) != prev)
            .expect("spine path continues");
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

/// Width <= 1 sequence for a caterpillar: leaves sharing a spine vertex are
/// folded together (they are twins), then one sweep absorbs each remaining
/// vertex into the next along the order leaf-before-spine-vertex.
pub fn caterpillar_sequence(g: &Trigraph) -> Result<BoundedSequence, ConstructionError> {
    if !is_caterpillar(g)? {
        return Err(ConstructionError::NotACaterpillar);
    }
    let n = g.vertex_count();
    if n <= 2 {
        let seq = ContractionSequence::new(fold_into_lowest(&g.vertex_set()));
        return verified(g, seq, 1.0, |w| w <= 1);
    }
    let spine = spine(g);
    let on_spine: BTreeSet<VertexId> = spine.iter().copied().collect();
    let mut seq = ContractionSequence::default();
    let mut sweep: Vec<VertexId> = Vec::with_capacity(2 * spine.len());
    for &s in &spine {
        let leaves: Vec<VertexId> = g
            .neighbors(s)
            .map(|(u, _)| u)
            .filter(|u| !on_spine.contains(u))
            .collect();
        if let Some((&first, rest)) = leaves.split_first() {
            for &l in rest {
                seq.push(ContractionStep::new(first, l));
            }
            sweep.push(first);
        }
        sweep.push(s);
    }
    for pair in sweep.windows(2) {
        seq.push(ContractionStep::new(pair[1], pair[0]));
    }
    verified(g, seq, 1.0, |w| w <= 1)
}

/// Rooted-tree collapse: working up from the deepest vertices, each vertex
/// folds its already-collapsed children into a single accumulator pendant,
/// so no vertex ever carries more than two red edges. With `finish` the
/// root absorbs its accumulator as the very last step and the return value
/// is None; without it the subtree stops at the root plus at most one
/// pendant, which is returned.
fn collapse_tree(
    g: &Trigraph,
    root: VertexId,
    exclude: &BTreeSet<VertexId>,
    finish: bool,
    seq: &mut ContractionSequence,
) -> Option<VertexId> {
    let mut children: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut order = Vec::new();
    let mut stack = vec![(root, None::<VertexId>)];
    let mut visited = BTreeSet::from([root]);
    while let Some((v, parent)) = stack.pop() {
        order.push(v);
        children.insert(v, Vec::new());
        if let Some(p) = parent {
            children.get_mut(&p).unwrap().push(v);
        }
        for (u, _) in g.neighbors(v) {
            if !exclude.contains(&u) && visited.insert(u) {
                stack.push((u, Some(v)));
            }
        }
    }
    // Children were collected in stack order; sort for determinism.
    for kids in children.values_mut() {
        kids.sort_unstable();
    }
    let mut acc: BTreeMap<VertexId, Option<VertexId>> = BTreeMap::new();
    for &v in order.iter().rev() {
        let mut pending: Option<VertexId> = None;
        for &c in &children[&v] {
            // c's own subtree is already collapsed into c plus acc[c].
            if let Some(&Some(rep)) = acc.get(&c) {
                seq.push(ContractionStep::new(c, rep));
            }
            match pending {
                None => pending = Some(c),
                Some(a) => {
                    seq.push(ContractionStep::new(a, c));
                }
            }
        }
        acc.insert(v, pending);
    }
    let pendant = acc.get(&root).copied().flatten();
    if finish {
        if let Some(rep) = pendant {
            seq.push(ContractionStep::new(root, rep));
        }
        None
    } else {
        pendant
    }
}

/// Width <= 2 sequence for a tree that touches the root only in the final
/// contraction.
pub fn tree_sequence(g: &Trigraph, root: VertexId) -> Result<BoundedSequence, ConstructionError> {
    ensure_tree(g)?;
    if !g.has_vertex(root) {
        return Err(ConstructionError::Trigraph(
            crate::trigraph::TrigraphError::UnknownVertex(root),
        ));
    }
    let mut seq = ContractionSequence::default();
    collapse_tree(g, root, &BTreeSet::new(), true, &mut seq);
    verified(g, seq, 2.0, |w| w <= 2)
}

/// Width <= 2 sequence for a graph all of whose components have at most one
/// cycle. Components are processed independently; tree components collapse
/// by [`tree_sequence`], cyclic components collapse their hanging trees to
/// pendants, absorb the pendants around the cycle, and then fold the cycle.
pub fn unicyclic_sequence(g: &Trigraph) -> Result<BoundedSequence, ConstructionError> {
    ensure_plain(g)?;
    let mut seq = ContractionSequence::default();
    for comp in g.components() {
        let set: BTreeSet<VertexId> = comp.iter().copied().collect();
        let sub = g.induced_subgraph(&set)?;
        let (nc, mc) = (sub.vertex_count(), sub.edge_count());
        if mc > nc {
            return Err(ConstructionError::ComponentHasTwoCycles(comp[0]));
        }
        if mc + 1 == nc {
            collapse_tree(&sub, comp[0], &BTreeSet::new(), true, &mut seq);
        } else {
            cyclic_component_sequence(&sub, &mut seq);
        }
    }
    // Component survivors are isolated; folding them stays red-free.
    for step in fold_into_lowest(&survivors_after(g, &seq.steps)) {
        seq.push(step);
    }
    verified(g, seq, 2.0, |w| w <= 2)
}

/// One connected component with exactly one cycle: find the cycle
/// v_1..v_l, collapse the tree hanging off each v_i to a single pendant
/// w_i, contract w_1 into v_1 and each remaining w_i into v_{i-1}, then
/// absorb the cycle into v_1.
fn cyclic_component_sequence(sub: &Trigraph, seq: &mut ContractionSequence) {
    let cycle = find_cycle(sub);
    let on_cycle: BTreeSet<VertexId> = cycle.iter().copied().collect();
    let mut pendants: Vec<Option<VertexId>> = Vec::with_capacity(cycle.len());
    for &v in &cycle {
        let mut exclude = on_cycle.clone();
        exclude.remove(&v);
        pendants.push(collapse_tree(sub, v, &exclude, false, seq));
    }
    let l = cycle.len();
    if let Some(w) = pendants[0] {
        seq.push(ContractionStep::new(cycle[0], w));
    }
    for i in 1..l {
        if let Some(w) = pendants[i] {
            seq.push(ContractionStep::new(cycle[i - 1], w));
        }
    }
    for i in 1..l {
        seq.push(ContractionStep::new(cycle[0], cycle[i]));
    }
}

/// The unique cycle of a connected component with |E| = |V|, rotated to
/// start at its smallest vertex and oriented toward that vertex's smaller
/// cycle neighbor.
fn find_cycle(g: &Trigraph) -> Vec<VertexId> {
    // Peel degree-1 vertices; what remains is exactly the cycle.
    let mut degree: BTreeMap<VertexId, usize> =
        g.vertices().map(|v| (v, g.degree(v).unwrap())).collect();
    let mut queue: Vec<VertexId> = degree
        .iter()
        .filter(|(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .collect();
    let mut removed: BTreeSet<VertexId> = BTreeSet::new();
    while let Some(v) = queue.pop() {
        removed.insert(v);
        for (u, _) in g.neighbors(v) {
            if removed.contains(&u) {
                continue;
            }
            let d = degree.get_mut(&u).unwrap();
            *d -= 1;
            if *d == 1 {
                queue.push(u);
            }
        }
    }
    let on_cycle: BTreeSet<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
    debug_assert!(on_cycle.len() >= 3);
    let start = *on_cycle.iter().next().unwrap();
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while order.len() < on_cycle.len() {
        let next = g
            .neighbors(cur)
            .map(|(u, _)| u)
            .find(|&u| on_cycle.contains(&u) && Some(u) != prev)
            .expect("cycle closes");
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{caterpillar, complete, cycle, path, random_tree, star_subdivision};
    use crate::sequence::apply_sequence;

    #[test]
    fn caterpillar_recognition() {
        assert!(is_caterpillar(&path(5).unwrap()).unwrap());
        assert!(is_caterpillar(&caterpillar(&[2, 0, 3]).unwrap()).unwrap());
        assert!(is_caterpillar(&caterpillar(&[4]).unwrap()).unwrap()); // star
        assert!(!is_caterpillar(&star_subdivision(3).unwrap()).unwrap());
        assert!(is_caterpillar(&star_subdivision(2).unwrap()).unwrap()); // P5
        assert!(matches!(
            is_caterpillar(&cycle(4).unwrap()),
            Err(ConstructionError::NotATree)
        ));
        assert!(matches!(is_caterpillar(&complete(1).unwrap()), Ok(true)));
    }

    #[test]
    fn p5_sequence_has_width_one() {
        let bs = caterpillar_sequence(&path(5).unwrap()).unwrap();
        assert_eq!(bs.width, 1);
        assert!(bs.bound_met);
        assert_eq!(bs.sequence.len(), 4);
    }

    #[test]
    fn star_folds_to_width_zero() {
        // K_{1,4}: the leaves are twins, so the fold is red-free.
        let bs = caterpillar_sequence(&caterpillar(&[4]).unwrap()).unwrap();
        assert_eq!(bs.width, 0);
    }

    #[test]
    fn non_caterpillar_is_rejected() {
        assert!(matches!(
            caterpillar_sequence(&star_subdivision(3).unwrap()),
            Err(ConstructionError::NotACaterpillar)
        ));
    }

    #[test]
    fn random_caterpillars_stay_under_one() {
        let mut rng = crate::generators::seeded_rng(5);
        use rand::Rng;
        for trial in 0..60 {
            let s = rng.gen_range(1..12);
            let counts: Vec<usize> = (0..s).map(|_| rng.gen_range(0..4)).collect();
            let g = caterpillar(&counts).unwrap();
            let bs = caterpillar_sequence(&g).unwrap();
            assert!(bs.width <= 1, "trial {trial}: width {}", bs.width);
            assert_eq!(bs.sequence.len(), g.vertex_count() - 1);
        }
    }

    #[test]
    fn tree_sequence_examples() {
        let single = Trigraph::with_vertex_count(1);
        let bs = tree_sequence(&single, 0).unwrap();
        assert_eq!((bs.width, bs.sequence.len()), (0, 0));

        // K_{1,5} rooted at the center.
        let star = caterpillar(&[5]).unwrap();
        let bs = tree_sequence(&star, 0).unwrap();
        assert!(bs.width <= 2);
        assert_eq!(bs.sequence.steps.last().unwrap().keep, 0);
    }

    #[test]
    fn tree_sequence_keeps_root_untouched_until_last() {
        for seed in 0..40 {
            let n = 2 + (seed as usize * 13) % 120;
            let g = random_tree(n, seed).unwrap();
            let root = (seed % n as u64) as VertexId;
            let bs = tree_sequence(&g, root).unwrap();
            assert!(bs.width <= 2, "seed {seed}: width {}", bs.width);
            assert_eq!(bs.sequence.len(), n - 1);
            for (i, step) in bs.sequence.iter().enumerate() {
                let touches_root = step.keep == root || step.drop == root;
                if i + 1 < bs.sequence.len() {
                    assert!(!touches_root, "seed {seed}: root touched at step {i}");
                } else {
                    assert!(touches_root && step.keep == root);
                }
            }
            let report = apply_sequence(&g, &bs.sequence).unwrap();
            assert_eq!(report.sigma.values().collect::<BTreeSet<_>>().len(), 1);
        }
    }

    #[test]
    fn tree_sequence_rejects_non_trees() {
        assert!(matches!(
            tree_sequence(&cycle(4).unwrap(), 0),
            Err(ConstructionError::NotATree)
        ));
        let forest = Trigraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            tree_sequence(&forest, 0),
            Err(ConstructionError::NotATree)
        ));
    }

    #[test]
    fn plain_cycles_fold_at_width_two() {
        for n in [3usize, 4, 5, 7, 12] {
            let bs = unicyclic_sequence(&cycle(n).unwrap()).unwrap();
            assert!(bs.width <= 2, "C{n}: width {}", bs.width);
            assert_eq!(bs.sequence.len(), n - 1);
        }
    }

    #[test]
    fn cycle_with_pendants() {
        // C5 with one pendant vertex per cycle vertex.
        let mut g = cycle(5).unwrap();
        for i in 0..5u32 {
            g.add_vertex(5 + i);
            g.add_black_edge(i, 5 + i).unwrap();
        }
        let bs = unicyclic_sequence(&g).unwrap();
        assert!(bs.width <= 2, "width {}", bs.width);
    }

    #[test]
    fn mixed_components() {
        // A tree plus a triangle.
        let mut g = Trigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for v in 4..7 {
            g.add_vertex(v);
        }
        g.add_black_edge(4, 5).unwrap();
        g.add_black_edge(5, 6).unwrap();
        g.add_black_edge(4, 6).unwrap();
        let bs = unicyclic_sequence(&g).unwrap();
        assert!(bs.width <= 2);
        assert_eq!(bs.sequence.len(), 6);
    }

    #[test]
    fn two_cycles_in_a_component_is_rejected() {
        let g = Trigraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)]).unwrap();
        assert!(matches!(
            unicyclic_sequence(&g),
            Err(ConstructionError::ComponentHasTwoCycles(0))
        ));
    }

    #[test]
    fn random_unicyclic_graphs_stay_under_two() {
        use rand::Rng;
        let mut rng = crate::generators::seeded_rng(77);
        for trial in 0..60 {
            let n = rng.gen_range(3..80);
            let g = random_unicyclic(n, rng.gen());
            let bs = unicyclic_sequence(&g).unwrap();
            assert!(bs.width <= 2, "trial {trial}: width {}", bs.width);
            assert_eq!(bs.sequence.len(), g.vertex_count() - 1);
        }
    }

    /// Random connected unicyclic graph: a random tree plus one random
    /// non-edge.
    fn random_unicyclic(n: usize, seed: u64) -> Trigraph {
        use rand::Rng;
        assert!(n >= 3);
        let mut g = random_tree(n, seed).unwrap();
        let mut rng = crate::generators::seeded_rng(seed ^ 0xabcd);
        loop {
            let u = rng.gen_range(0..n) as VertexId;
            let v = rng.gen_range(0..n) as VertexId;
            if u != v && !g.has_edge(u, v) {
                g.add_black_edge(u, v).unwrap();
                return g;
            }
        }
    }
}
