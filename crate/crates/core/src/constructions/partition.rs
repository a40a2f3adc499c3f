//! Weight-balanced partitioning for the edge-count construction.

use super::ConstructionError;

/// Result of [`partition_by_weight`]: fewer than k removed indices and at
/// most ceil(k) blocks of the rest, each with weight sum at most the
/// budget d n / k (d the mean weight of the original call).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightPartition {
    pub removed: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub budget: f64,
}

/// Splits the index set 0..weights.len() into blocks of weight sum at most
/// d n / k plus a removed set of size less than k.
///
/// Recursive strategy: when 1 < k <= n, fill a maximal under-budget block
/// greedily by ascending weight (ties by index), remove the largest-weight
/// leftover, and recurse on the rest with k - 1 and that level's own
/// tighter budget. k <= 1 keeps everything in one block; k > n removes
/// everything.
pub fn partition_by_weight(weights: &[f64], k: f64) -> Result<WeightPartition, ConstructionError> {
    if let Some(i) = weights.iter().position(|w| *w < 0.0 || !w.is_finite()) {
        return Err(ConstructionError::NegativeWeight(i));
    }
    if k.is_nan() || k <= 0.0 {
        return Err(ConstructionError::NonPositiveK(k));
    }
    let total: f64 = weights.iter().sum();
    let budget = total / k;
    let items: Vec<usize> = (0..weights.len()).collect();
    let (removed, blocks) = split(weights, items, k);
    Ok(WeightPartition {
        removed,
        blocks,
        budget,
    })
}

fn split(weights: &[f64], items: Vec<usize>, k: f64) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = items.len();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    if k <= 1.0 {
        return (Vec::new(), vec![items]);
    }
    if k > n as f64 {
        return (items, Vec::new());
    }
    let total: f64 = items.iter().map(|&i| weights[i]).sum();
    let budget = total / k;

    // Maximal under-budget block, filled by ascending weight.
    let mut by_weight = items.clone();
    by_weight.sort_by(|&a, &b| weights[a].partial_cmp(&weights[b]).unwrap().then(a.cmp(&b)));
    let mut block = Vec::new();
    let mut sum = 0.0;
    let mut rest = Vec::new();
    for &i in &by_weight {
        if sum + weights[i] <= budget {
            sum += weights[i];
            block.push(i);
        } else {
            rest.push(i);
        }
    }
    if rest.is_empty() {
        // All weights fit under the budget (only possible when the total is
        // dominated by slack, e.g. all-zero weights): one block suffices.
        return (Vec::new(), vec![items]);
    }
    // Remove the largest-weight leftover (ties by smallest index).
    let r_pos = rest
        .iter()
        .enumerate()
        .max_by(|(_, &a), (_, &b)| weights[a].partial_cmp(&weights[b]).unwrap().then(b.cmp(&a)))
        .map(|(pos, _)| pos)
        .unwrap();
    let r = rest.swap_remove(r_pos);
    rest.sort_unstable();
    let (mut removed, mut blocks) = split(weights, rest, k - 1.0);
    removed.push(r);
    removed.sort_unstable();
    blocks.push(block);
    (removed, blocks)
}
