//! Small-graph catalogs up to isomorphism, built by extending each
//! (n-1)-vertex graph with one new vertex over every neighbor subset and
//! deduplicating on canonical keys. Every connected graph keeps a
//! non-cut vertex, so restricting to nonempty neighbor subsets of connected
//! parents enumerates exactly the connected graphs.

use std::collections::BTreeMap;

use crate::canon::state_key;
use crate::trigraph::{Trigraph, VertexId};

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, deterministically ordered. Practical for n <= 7.
pub fn all_graphs(n: usize) -> Vec<Trigraph> {
    catalog(n, false)
}

/// All connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Trigraph> {
    catalog(n, true)
}

fn catalog(n: usize, connected: bool) -> Vec<Trigraph> {
    assert!(n >= 1, "catalog needs at least one vertex");
    let mut current: BTreeMap<Vec<u8>, Trigraph> = BTreeMap::new();
    let single = Trigraph::with_vertex_count(1);
    current.insert(state_key(&single), single);
    for size in 2..=n {
        let mut next: BTreeMap<Vec<u8>, Trigraph> = BTreeMap::new();
        let new_vertex = (size - 1) as VertexId;
        for parent in current.values() {
            let subsets = 1u64 << (size - 1);
            let start = if connected { 1 } else { 0 };
            for mask in start..subsets {
                let mut g = parent.clone();
                g.add_vertex(new_vertex);
                for bit in 0..size - 1 {
                    if mask >> bit & 1 == 1 {
                        g.add_black_edge(bit as VertexId, new_vertex).unwrap();
                    }
                }
                let key = state_key(&g);
                next.entry(key).or_insert(g);
            }
        }
        current = next;
    }
    current.into_values().collect()
}
