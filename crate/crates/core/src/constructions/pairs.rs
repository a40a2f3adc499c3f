//! Pairwise symmetric-difference machinery: the certified lower bound, the
//! disjoint pair set used by the vertex-count construction, and the explicit
//! ordering bound.

use super::{ensure_plain, ConstructionError};
use crate::trigraph::{Trigraph, VertexId};

/// Minimum over all vertex pairs of |(N(u) △ N(v)) \ {u, v}|; a certified
/// lower bound on the twin-width of a plain graph.
pub fn lower_bound_min_symdiff(g: &Trigraph) -> Result<u32, ConstructionError> {
    ensure_plain(g)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(ConstructionError::TooFewVertices { needed: 2, got: n });
    }
    let (_, rows) = g.neighbor_bitsets();
    let mut best = u32::MAX;
    for i in 0..n {
        for j in i + 1..n {
            let d = bitset_symdiff(&rows[i], &rows[j], i, j);
            if d < best {
                best = d;
                if best == 0 {
                    return Ok(0);
                }
            }
        }
    }
    Ok(best)
}

/// Symmetric difference of two neighbor bitsets, the pair itself excluded.
/// Bit i appears in the xor iff the pair is adjacent, and likewise bit j,
/// so adjacency is subtracted twice.
pub(crate) fn bitset_symdiff(ri: &[u64], rj: &[u64], i: usize, j: usize) -> u32 {
    let mut count: u32 = ri.iter().zip(rj).map(|(a, b)| (a ^ b).count_ones()).sum();
    if rj[i / 64] >> (i % 64) & 1 == 1 {
        count -= 2;
    }
    debug_assert!(rj[i / 64] >> (i % 64) & 1 == ri[j / 64] >> (j % 64) & 1);
    count
}

/// A set of pairwise disjoint vertex pairs, each with symmetric difference
/// at most `threshold`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairSet {
    pub pairs: Vec<(VertexId, VertexId)>,
    pub threshold: f64,
}

/// Greedily builds a maximal set of disjoint pairs whose symmetric
/// difference is at most (n + sqrt(n) - 1) / 2, repeatedly taking the
/// minimum-symmetric-difference pair among the remaining vertices (ties by
/// smallest labels). The averaging argument over the leftover vertices
/// guarantees more than (n - sqrt(n)) / 2 pairs.
pub fn find_disjoint_pairs(g: &Trigraph) -> Result<PairSet, ConstructionError> {
    ensure_plain(g)?;
    let n = g.vertex_count();
    if n < 3 {
        return Err(ConstructionError::TooFewVertices { needed: 3, got: n });
    }
    let threshold = (n as f64 + (n as f64).sqrt() - 1.0) / 2.0;
    let (vs, rows) = g.neighbor_bitsets();
    let mut symdiff = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = bitset_symdiff(&rows[i], &rows[j], i, j);
            symdiff[i][j] = d;
            symdiff[j][i] = d;
        }
    }
    let mut alive = vec![true; n];
    let mut pairs = Vec::new();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in 0..n {
            if !alive[i] {
                continue;
            }
            for j in i + 1..n {
                if !alive[j] {
                    continue;
                }
                let d = symdiff[i][j];
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
        match best {
            Some((d, i, j)) if (d as f64) <= threshold => {
                alive[i] = false;
                alive[j] = false;
                pairs.push((vs[i], vs[j]));
            }
            _ => break,
        }
    }
    Ok(PairSet { pairs, threshold })
}

/// Evaluates the explicit ordering bound for contracting disjoint `pairs`
/// in the given order: the maximum of n - s - 1 and, over 1 <= i <= j <=
/// s-1, the merged red degree of pair i plus the accumulated step-function
/// values x_i(1..j). Each x_i(j) is the red-degree change of pair i's merged
/// vertex caused by contracting pair j, always in {-1, 0, 1}.
pub fn order_bound_check(
    g: &Trigraph,
    pairs: &PairSet,
    order: &[usize],
) -> Result<u32, ConstructionError> {
    ensure_plain(g)?;
    let s = pairs.pairs.len();
    let n = g.vertex_count();
    let mut seen = vec![false; s];
    if order.len() != s {
        return Err(ConstructionError::BadOrder);
    }
    for &idx in order {
        if idx >= s || seen[idx] {
            return Err(ConstructionError::BadOrder);
        }
        seen[idx] = true;
    }
    let mut used = std::collections::BTreeSet::new();
    for &(a, b) in &pairs.pairs {
        if a == b || !used.insert(a) || !used.insert(b) {
            return Err(ConstructionError::OverlappingPairs);
        }
    }
    let ordered: Vec<(VertexId, VertexId)> = order.iter().map(|&i| pairs.pairs[i]).collect();
    let merged: Vec<Trigraph> = ordered
        .iter()
        .map(|&(a, b)| g.contract(a.min(b), a.max(b)))
        .collect::<Result<_, _>>()?;
    let base: Vec<i64> = ordered
        .iter()
        .zip(&merged)
        .map(|(&(a, b), gi)| gi.red_degree(a.min(b)).map(|d| d as i64))
        .collect::<Result<_, _>>()?;
    let mut x = vec![vec![0i64; s]; s];
    for i in 0..s {
        let vi = ordered[i].0.min(ordered[i].1);
        for (j, &(a, b)) in ordered.iter().enumerate() {
            if i == j {
                continue;
            }
            let gij = merged[i].contract(a.min(b), a.max(b))?;
            x[i][j] = gij.red_degree(vi)? as i64 - base[i];
            debug_assert!((-1..=1).contains(&x[i][j]));
        }
    }
    let mut bound = n as i64 - s as i64 - 1;
    for i in 0..s {
        let mut acc = base[i];
        for (j, xi) in x[i].iter().enumerate() {
            acc += xi;
            if j + 1 < s && j >= i {
                // 1-indexed: i <= j <= s-1, prefix sum over k = 1..=j.
                bound = bound.max(acc);
            }
        }
    }
    Ok(bound.max(0) as u32)
}

/// The x_i step-function values for the identity order; exposed for
/// property checks.
pub fn order_step_values(
    g: &Trigraph,
    pairs: &PairSet,
) -> Result<Vec<Vec<i64>>, ConstructionError> {
    ensure_plain(g)?;
    let s = pairs.pairs.len();
    let merged: Vec<Trigraph> = pairs
        .pairs
        .iter()
        .map(|&(a, b)| g.contract(a.min(b), a.max(b)))
        .collect::<Result<_, _>>()?;
    let mut x = vec![vec![0i64; s]; s];
    for i in 0..s {
        let vi = pairs.pairs[i].0.min(pairs.pairs[i].1);
        let base = merged[i].red_degree(vi)? as i64;
        for (j, &(a, b)) in pairs.pairs.iter().enumerate() {
            if i == j {
                continue;
            }
            let gij = merged[i].contract(a.min(b), a.max(b))?;
            x[i][j] = gij.red_degree(vi)? as i64 - base;
        }
    }
    Ok(x)
}
