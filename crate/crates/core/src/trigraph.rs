//! Trigraphs: graphs with disjoint black and red edge sets, plus the vertex
//! contraction operation that drives every twin-width computation.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

/// Vertex label. Labels are stable across contractions: the merged vertex
/// keeps the label of the first argument of [`Trigraph::contract`].
pub type VertexId = u32;

/// Color of a trigraph edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    Black,
    Red,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TrigraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("cannot contract vertex {0} with itself")]
    SelfContraction(VertexId),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(VertexId),
    #[error("operation requires a plain graph but {0} red edges are present")]
    RedEdgesPresent(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct VertexData {
    nbrs: BTreeMap<VertexId, EdgeColor>,
    red_deg: u32,
}

/// Tracks the multiset of red degrees so the maximum is available in O(1).
#[derive(Clone, Debug, Default)]
struct RedDegreeHistogram {
    counts: Vec<u32>,
    max: usize,
}

impl RedDegreeHistogram {
    fn insert(&mut self, d: u32) {
        let d = d as usize;
        if self.counts.len() <= d {
            self.counts.resize(d + 1, 0);
        }
        self.counts[d] += 1;
        if d > self.max {
            self.max = d;
        }
    }

    fn remove(&mut self, d: u32) {
        let d = d as usize;
        debug_assert!(self.counts[d] > 0);
        self.counts[d] -= 1;
        while self.max > 0 && self.counts[self.max] == 0 {
            self.max -= 1;
        }
    }

    fn max(&self) -> u32 {
        self.max as u32
    }
}

/// A trigraph: a vertex set together with disjoint black and red edge sets.
/// A plain graph is a trigraph with no red edges.
///
/// Adjacency is stored per vertex with a color tag per neighbor, so a
/// contraction costs O(deg u + deg v) map operations.
#[derive(Clone, Debug, Default)]
pub struct Trigraph {
    verts: BTreeMap<VertexId, VertexData>,
    hist: RedDegreeHistogram,
    black_edges: usize,
    red_edges: usize,
}

/// Equality is structural: same labeled vertices and colored edges. The
/// histogram and edge counters are derived state whose internal layout can
/// differ between mutation histories.
impl PartialEq for Trigraph {
    fn eq(&self, other: &Self) -> bool {
        self.verts == other.verts
    }
}

impl Eq for Trigraph {}

impl Trigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Trigraph on vertices `0..n` with no edges.
    pub fn with_vertex_count(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n as VertexId {
            g.add_vertex(v);
        }
        g
    }

    /// Plain graph on vertices `0..n` with the given black edges.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, TrigraphError> {
        let mut g = Self::with_vertex_count(n);
        for (u, v) in edges {
            g.add_black_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts an isolated vertex. Returns false if it was already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.verts.contains_key(&v) {
            return false;
        }
        self.verts.insert(v, VertexData::default());
        self.hist.insert(0);
        true
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.verts.contains_key(&v)
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.verts.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.verts.keys().copied().collect()
    }

    pub fn black_edge_count(&self) -> usize {
        self.black_edges
    }

    pub fn red_edge_count(&self) -> usize {
        self.red_edges
    }

    pub fn edge_count(&self) -> usize {
        self.black_edges + self.red_edges
    }

    /// True when there are no red edges, i.e. the trigraph is a plain graph.
    pub fn is_plain(&self) -> bool {
        self.red_edges == 0
    }

    pub(crate) fn ensure_plain(&self) -> Result<(), TrigraphError> {
        if self.is_plain() {
            Ok(())
        } else {
            Err(TrigraphError::RedEdgesPresent(self.red_edges))
        }
    }

    fn ensure_vertex(&self, v: VertexId) -> Result<(), TrigraphError> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(TrigraphError::UnknownVertex(v))
        }
    }

    /// Color of the edge between `u` and `v`, or None when absent (or when
    /// either endpoint is unknown).
    pub fn edge_color(&self, u: VertexId, v: VertexId) -> Option<EdgeColor> {
        self.verts.get(&u).and_then(|d| d.nbrs.get(&v).copied())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_color(u, v).is_some()
    }

    /// Neighbors of `v` with their edge colors, ascending by label.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeColor)> + '_ {
        self.verts
            .get(&v)
            .into_iter()
            .flat_map(|d| d.nbrs.iter().map(|(&u, &c)| (u, c)))
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeColor)> + '_ {
        use std::ops::Bound;
        self.verts.iter().flat_map(|(&u, d)| {
            d.nbrs
                .range((Bound::Excluded(u), Bound::Unbounded))
                .map(move |(&v, &c)| (u, v, c))
        })
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, TrigraphError> {
        self.ensure_vertex(v)?;
        Ok(self.verts[&v].nbrs.len())
    }

    /// Number of red edges incident with `v`.
    pub fn red_degree(&self, v: VertexId) -> Result<u32, TrigraphError> {
        self.ensure_vertex(v)?;
        Ok(self.verts[&v].red_deg)
    }

    /// Maximum red degree over all vertices; 0 for the empty trigraph.
    pub fn max_red_degree(&self) -> u32 {
        self.hist.max()
    }

    fn bump_red(&mut self, v: VertexId, delta: i32) {
        let data = self.verts.get_mut(&v).expect("bump_red on live vertex");
        let old = data.red_deg;
        let new = (old as i32 + delta) as u32;
        data.red_deg = new;
        self.hist.remove(old);
        self.hist.insert(new);
    }

    /// Inserts the edge `uv` with the given color, or recolors it if present.
    pub fn set_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        color: EdgeColor,
    ) -> Result<(), TrigraphError> {
        if u == v {
            return Err(TrigraphError::SelfLoop(u));
        }
        self.ensure_vertex(u)?;
        self.ensure_vertex(v)?;
        let prev = self.verts.get_mut(&u).unwrap().nbrs.insert(v, color);
        self.verts.get_mut(&v).unwrap().nbrs.insert(u, color);
        match (prev, color) {
            (None, EdgeColor::Black) => self.black_edges += 1,
            (None, EdgeColor::Red) => {
                self.red_edges += 1;
                self.bump_red(u, 1);
                self.bump_red(v, 1);
            }
            (Some(EdgeColor::Black), EdgeColor::Red) => {
                self.black_edges -= 1;
                self.red_edges += 1;
                self.bump_red(u, 1);
                self.bump_red(v, 1);
            }
            (Some(EdgeColor::Red), EdgeColor::Black) => {
                self.red_edges -= 1;
                self.black_edges += 1;
                self.bump_red(u, -1);
                self.bump_red(v, -1);
            }
            (Some(EdgeColor::Black), EdgeColor::Black) | (Some(EdgeColor::Red), EdgeColor::Red) => {
            }
        }
        Ok(())
    }

    pub fn add_black_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), TrigraphError> {
        self.set_edge(u, v, EdgeColor::Black)
    }

    pub fn add_red_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), TrigraphError> {
        self.set_edge(u, v, EdgeColor::Red)
    }

    /// Removes the edge `uv` if present; returns whether it existed.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, TrigraphError> {
        self.ensure_vertex(u)?;
        self.ensure_vertex(v)?;
        let prev = self.verts.get_mut(&u).unwrap().nbrs.remove(&v);
        self.verts.get_mut(&v).unwrap().nbrs.remove(&u);
        match prev {
            None => Ok(false),
            Some(EdgeColor::Black) => {
                self.black_edges -= 1;
                Ok(true)
            }
            Some(EdgeColor::Red) => {
                self.red_edges -= 1;
                self.bump_red(u, -1);
                self.bump_red(v, -1);
                Ok(true)
            }
        }
    }

    /// Removes a vertex and all incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), TrigraphError> {
        self.ensure_vertex(v)?;
        let nbrs: Vec<VertexId> = self.verts[&v].nbrs.keys().copied().collect();
        for u in nbrs {
            self.remove_edge(v, u)?;
        }
        let data = self.verts.remove(&v).unwrap();
        debug_assert_eq!(data.red_deg, 0);
        self.hist.remove(0);
        Ok(())
    }

    /// Contracts `drop` into `keep` in place. For every other vertex x the
    /// merged vertex gets a black edge iff both `keep`x and `drop`x were
    /// black, no edge iff neither existed, and a red edge otherwise.
    pub fn contract_in_place(
        &mut self,
        keep: VertexId,
        drop: VertexId,
    ) -> Result<(), TrigraphError> {
        if keep == drop {
            return Err(TrigraphError::SelfContraction(keep));
        }
        self.ensure_vertex(keep)?;
        self.ensure_vertex(drop)?;
        let drop_nbrs: Vec<(VertexId, EdgeColor)> =
            self.neighbors(drop).filter(|&(x, _)| x != keep).collect();
        self.remove_vertex(drop)?;
        let keep_nbrs: Vec<(VertexId, EdgeColor)> = self.neighbors(keep).collect();
        let mut seen: BTreeMap<VertexId, (Option<EdgeColor>, Option<EdgeColor>)> = BTreeMap::new();
        for (x, c) in keep_nbrs {
            seen.entry(x).or_default().0 = Some(c);
        }
        for (x, c) in drop_nbrs {
            seen.entry(x).or_default().1 = Some(c);
        }
        for (x, (ck, cd)) in seen {
            let color = match (ck, cd) {
                (Some(EdgeColor::Black), Some(EdgeColor::Black)) => EdgeColor::Black,
                _ => EdgeColor::Red,
            };
            self.set_edge(keep, x, color)?;
        }
        Ok(())
    }

    /// Contraction on a copy; the receiver is unchanged.
    pub fn contract(&self, keep: VertexId, drop: VertexId) -> Result<Trigraph, TrigraphError> {
        let mut g = self.clone();
        g.contract_in_place(keep, drop)?;
        Ok(g)
    }

    /// Number of edges (black and red) with exactly one end in `a`.
    pub fn boundary_size(&self, a: &BTreeSet<VertexId>) -> Result<usize, TrigraphError> {
        for &v in a {
            self.ensure_vertex(v)?;
        }
        let mut count = 0;
        for &v in a {
            count += self.neighbors(v).filter(|(u, _)| !a.contains(u)).count();
        }
        Ok(count)
    }

    /// |(N(u) △ N(v)) \ {u, v}| on a plain graph. This equals the red degree
    /// of the merged vertex in the contraction of u and v.
    pub fn symmetric_difference_size(
        &self,
        u: VertexId,
        v: VertexId,
    ) -> Result<usize, TrigraphError> {
        self.ensure_plain()?;
        if u == v {
            return Err(TrigraphError::SelfContraction(u));
        }
        self.ensure_vertex(u)?;
        self.ensure_vertex(v)?;
        let nu: BTreeSet<VertexId> = self.neighbors(u).map(|(x, _)| x).collect();
        let nv: BTreeSet<VertexId> = self.neighbors(v).map(|(x, _)| x).collect();
        Ok(nu
            .symmetric_difference(&nv)
            .filter(|&&x| x != u && x != v)
            .count())
    }

    /// Induced sub-trigraph on the given vertices, labels preserved.
    pub fn induced_subgraph(&self, set: &BTreeSet<VertexId>) -> Result<Trigraph, TrigraphError> {
        let mut g = Trigraph::new();
        for &v in set {
            self.ensure_vertex(v)?;
            g.add_vertex(v);
        }
        for &v in set {
            for (u, c) in self.neighbors(v) {
                if u > v && set.contains(&u) {
                    g.set_edge(v, u, c)?;
                }
            }
        }
        Ok(g)
    }

    /// Applies a vertex bijection; every vertex must be a key of `map`.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<Trigraph, TrigraphError> {
        let mut g = Trigraph::new();
        for v in self.vertices() {
            let &nv = map.get(&v).ok_or(TrigraphError::UnknownVertex(v))?;
            if !g.add_vertex(nv) {
                return Err(TrigraphError::SelfLoop(nv));
            }
        }
        for (u, v, c) in self.edges() {
            g.set_edge(map[&u], map[&v], c)?;
        }
        Ok(g)
    }

    /// Connected components (over black and red edges), each sorted, and the
    /// list sorted by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            seen.insert(v);
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for (u, _) in self.neighbors(x) {
                    if seen.insert(u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Neighbor bitsets in the order of the sorted vertex list; a fast path
    /// for all-pairs symmetric difference scans.
    pub(crate) fn neighbor_bitsets(&self) -> (Vec<VertexId>, Vec<Vec<u64>>) {
        let vs: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let words = vs.len().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; vs.len()];
        for (i, &v) in vs.iter().enumerate() {
            for (u, _) in self.neighbors(v) {
                let j = index[&u];
                rows[i][j / 64] |= 1 << (j % 64);
            }
        }
        (vs, rows)
    }
}
