//! Graph family construction: Paley graphs over prime-power fields, seeded
//! Erdos-Renyi samples, and the structured families (paths, cycles, stars,
//! subdivisions, caterpillars, random trees, grids).
//!
//! Randomness convention: every seeded generator uses ChaCha8 keyed by a
//! 64-bit seed, so identical parameters reproduce identical graphs on every
//! platform. Independent streams are derived with [`derive_seed`], which
//! XOR-folds a multiplied stream index into the master seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{FieldError, FiniteField};
use crate::trigraph::{Trigraph, TrigraphError, VertexId};

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("Paley graphs need q = 1 (mod 4), got q = {0}")]
    NotOneModFour(u64),
    #[error("edge probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("invalid {family} parameters: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
    #[error("complement requires a plain graph ({0} red edges present)")]
    NotPlain(usize),
    #[error(transparent)]
    Trigraph(#[from] TrigraphError),
}

/// Folds a stream index into a master seed. Used to split one master seed
/// into per-sample and per-attempt RNG streams.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    master ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Seeded RNG with the crate-wide generator choice.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The Paley graph P(q): vertices are the elements of F_q, with an edge
/// between a and b iff a - b is a nonzero square. Requires a prime power
/// q = 1 (mod 4), which makes adjacency symmetric.
///
/// Vertex i is the field element whose base-p digits are the polynomial
/// coefficients of the element, least significant first.
pub fn paley(q: u64) -> Result<Trigraph, GeneratorError> {
    if q % 4 != 1 {
        // Preserves the more specific error for non prime powers.
        FiniteField::new(q)?;
        return Err(GeneratorError::NotOneModFour(q));
    }
    let field = FiniteField::new(q)?;
    let squares = field.nonzero_squares();
    let mut g = Trigraph::with_vertex_count(q as usize);
    for a in 0..q {
        for b in a + 1..q {
            if squares.contains(&field.sub(a, b)) {
                g.add_black_edge(a as VertexId, b as VertexId)?;
            }
        }
    }
    Ok(g)
}

/// True iff `g` is a conference graph: n = 1 (mod 4), (n-1)/2-regular,
/// adjacent pairs share (n-5)/4 common neighbors and nonadjacent pairs
/// (n-1)/4.
pub fn is_conference_graph(g: &Trigraph) -> bool {
    if !g.is_plain() {
        return false;
    }
    let n = g.vertex_count();
    if n < 5 || n % 4 != 1 {
        return false;
    }
    let target = (n - 1) / 2;
    let vs: Vec<VertexId> = g.vertices().collect();
    for &v in &vs {
        if g.degree(v).unwrap() != target {
            return false;
        }
    }
    for (i, &u) in vs.iter().enumerate() {
        let nu: BTreeSet<VertexId> = g.neighbors(u).map(|(x, _)| x).collect();
        for &v in &vs[i + 1..] {
            let common = g.neighbors(v).filter(|(x, _)| nu.contains(x)).count();
            let expected = if g.has_edge(u, v) {
                (n - 5) / 4
            } else {
                (n - 1) / 4
            };
            if common != expected {
                return false;
            }
        }
    }
    true
}

/// Erdos-Renyi sample G(n, p): every one of the C(n, 2) pairs is included
/// independently with probability p. Pairs are visited in lexicographic
/// order, one uniform draw each, so a (n, p, seed) triple is reproducible
/// byte for byte.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Trigraph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::ProbabilityOutOfRange(p));
    }
    let mut rng = seeded_rng(seed);
    let mut g = Trigraph::with_vertex_count(n);
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen::<f64>() < p {
                g.add_black_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complement of a plain graph: black edge iff non-edge in `g`.
pub fn complement(g: &Trigraph) -> Result<Trigraph, GeneratorError> {
    if !g.is_plain() {
        return Err(GeneratorError::NotPlain(g.red_edge_count()));
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = Trigraph::new();
    for &v in &vs {
        out.add_vertex(v);
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.has_edge(u, v) {
                out.add_black_edge(u, v)?;
            }
        }
    }
    Ok(out)
}

/// A graph family and its parameters, with a compact string form (see
/// [`GraphFamilySpec::from_str`]). Vertex labelings are canonical and
/// documented per constructor.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamilySpec {
    /// `paley:q`
    Paley { q: u64 },
    /// `gnp:n:p:seed`
    Gnp { n: usize, p: f64, seed: u64 },
    /// `path:n`: vertices 0..n, edges i(i+1)
    Path { n: usize },
    /// `cycle:n`: vertices 0..n, edges i(i+1 mod n), n >= 3
    Cycle { n: usize },
    /// `complete:n`
    Complete { n: usize },
    /// `star-subdivision:t`: K_{1,t} with every edge subdivided once;
    /// center 0, midpoints 1..=t, leaf i+t attached to midpoint i
    StarSubdivision { rays: usize },
    /// `caterpillar:l1,l2,...,ls`: spine 0..s, then leaves appended in
    /// spine order: spine vertex i carries leaves labeled after the spine
    Caterpillar { leaf_counts: Vec<usize> },
    /// `random-tree:n:seed`: uniform labeled tree via Pruefer decoding
    RandomTree { n: usize, seed: u64 },
    /// `grid:RxC`: vertex (r, c) is r*C + c
    Grid { rows: usize, cols: usize },
}

impl GraphFamilySpec {
    pub fn build(&self) -> Result<Trigraph, GeneratorError> {
        match *self {
            GraphFamilySpec::Paley { q } => paley(q),
            GraphFamilySpec::Gnp { n, p, seed } => gnp(n, p, seed),
            GraphFamilySpec::Path { n } => path(n),
            GraphFamilySpec::Cycle { n } => cycle(n),
            GraphFamilySpec::Complete { n } => complete(n),
            GraphFamilySpec::StarSubdivision { rays } => star_subdivision(rays),
            GraphFamilySpec::Caterpillar { ref leaf_counts } => caterpillar(leaf_counts),
            GraphFamilySpec::RandomTree { n, seed } => random_tree(n, seed),
            GraphFamilySpec::Grid { rows, cols } => grid(rows, cols),
        }
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamilySpec::Paley { q } => write!(f, "paley:{q}"),
            GraphFamilySpec::Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
            GraphFamilySpec::Path { n } => write!(f, "path:{n}"),
            GraphFamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            GraphFamilySpec::Complete { n } => write!(f, "complete:{n}"),
            GraphFamilySpec::StarSubdivision { rays } => write!(f, "star-subdivision:{rays}"),
            GraphFamilySpec::Caterpillar { leaf_counts } => {
                let parts: Vec<String> = leaf_counts.iter().map(|c| c.to_string()).collect();
                write!(f, "caterpillar:{}", parts.join(","))
            }
            GraphFamilySpec::RandomTree { n, seed } => write!(f, "random-tree:{n}:{seed}"),
            GraphFamilySpec::Grid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse family spec {input:?}: {reason}")]
pub struct ParseFamilyError {
    pub input: String,
    pub reason: String,
}

impl FromStr for GraphFamilySpec {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseFamilyError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| err("expected family:params"))?;
        let fields: Vec<&str> = rest.split(':').collect();
        let usize_at = |i: usize| -> Result<usize, ParseFamilyError> {
            fields
                .get(i)
                .ok_or_else(|| err("missing parameter"))?
                .parse()
                .map_err(|_| err("bad integer"))
        };
        let u64_at = |i: usize| -> Result<u64, ParseFamilyError> {
            fields
                .get(i)
                .ok_or_else(|| err("missing parameter"))?
                .parse()
                .map_err(|_| err("bad integer"))
        };
        match tag {
            "paley" if fields.len() == 1 => Ok(GraphFamilySpec::Paley { q: u64_at(0)? }),
            "gnp" if fields.len() == 3 => Ok(GraphFamilySpec::Gnp {
                n: usize_at(0)?,
                p: fields[1].parse().map_err(|_| err("bad probability"))?,
                seed: u64_at(2)?,
            }),
            "path" if fields.len() == 1 => Ok(GraphFamilySpec::Path { n: usize_at(0)? }),
            "cycle" if fields.len() == 1 => Ok(GraphFamilySpec::Cycle { n: usize_at(0)? }),
            "complete" if fields.len() == 1 => Ok(GraphFamilySpec::Complete { n: usize_at(0)? }),
            "star-subdivision" if fields.len() == 1 => {
                Ok(GraphFamilySpec::StarSubdivision { rays: usize_at(0)? })
            }
            "caterpillar" if fields.len() == 1 => {
                let leaf_counts = fields[0]
                    .split(',')
                    .map(|t| t.parse().map_err(|_| err("bad leaf count")))
                    .collect::<Result<Vec<usize>, _>>()?;
                Ok(GraphFamilySpec::Caterpillar { leaf_counts })
            }
            "random-tree" if fields.len() == 2 => Ok(GraphFamilySpec::RandomTree {
                n: usize_at(0)?,
                seed: u64_at(1)?,
            }),
            "grid" if fields.len() == 1 => {
                let (r, c) = fields[0]
                    .split_once('x')
                    .ok_or_else(|| err("expected RxC"))?;
                Ok(GraphFamilySpec::Grid {
                    rows: r.parse().map_err(|_| err("bad integer"))?,
                    cols: c.parse().map_err(|_| err("bad integer"))?,
                })
            }
            _ => Err(err("unknown family or wrong parameter count")),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn family(spec: &GraphFamilySpec) -> Result<Trigraph, GeneratorError> {
    spec.build()
}

pub fn path(n: usize) -> Result<Trigraph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::InvalidParameters {
            family: "path",
            reason: "need at least one vertex".into(),
        });
    }
    Trigraph::from_edges(n, (1..n as VertexId).map(|v| (v - 1, v))).map_err(Into::into)
}

pub fn cycle(n: usize) -> Result<Trigraph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::InvalidParameters {
            family: "cycle",
            reason: format!("need at least 3 vertices, got {n}"),
        });
    }
    let edges = (0..n as VertexId).map(|v| (v, (v + 1) % n as VertexId));
    let edges: Vec<_> = edges.map(|(u, v)| (u.min(v), u.max(v))).collect();
    Trigraph::from_edges(n, edges).map_err(Into::into)
}

pub fn complete(n: usize) -> Result<Trigraph, GeneratorError> {
    let mut g = Trigraph::with_vertex_count(n);
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            g.add_black_edge(u, v)?;
        }
    }
    Ok(g)
}

/// The 1-subdivision of K_{1,t}: the star with t rays, each edge subdivided
/// once. 2t + 1 vertices, 2t edges, center vertex 0 of degree t.
pub fn star_subdivision(rays: usize) -> Result<Trigraph, GeneratorError> {
    if rays == 0 {
        return Err(GeneratorError::InvalidParameters {
            family: "star-subdivision",
            reason: "need at least one ray".into(),
        });
    }
    let t = rays as VertexId;
    let mut g = Trigraph::with_vertex_count(2 * rays + 1);
    for i in 1..=t {
        g.add_black_edge(0, i)?;
        g.add_black_edge(i, i + t)?;
    }
    Ok(g)
}

/// Caterpillar with spine length `leaf_counts.len()` and `leaf_counts[i]`
/// leaves hanging off spine vertex i. Spine vertices come first, leaves are
/// numbered afterwards in spine order.
pub fn caterpillar(leaf_counts: &[usize]) -> Result<Trigraph, GeneratorError> {
    let s = leaf_counts.len();
    if s == 0 {
        return Err(GeneratorError::InvalidParameters {
            family: "caterpillar",
            reason: "need at least one spine vertex".into(),
        });
    }
    let n = s + leaf_counts.iter().sum::<usize>();
    let mut g = Trigraph::with_vertex_count(n);
    for i in 1..s as VertexId {
        g.add_black_edge(i - 1, i)?;
    }
    let mut next = s as VertexId;
    for (i, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            g.add_black_edge(i as VertexId, next)?;
            next += 1;
        }
    }
    Ok(g)
}

/// Uniform random labeled tree on n vertices, by decoding a uniform Prüfer
/// sequence drawn from the seeded generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Trigraph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::InvalidParameters {
            family: "random-tree",
            reason: "need at least one vertex".into(),
        });
    }
    let mut g = Trigraph::with_vertex_count(n);
    if n == 1 {
        return Ok(g);
    }
    if n == 2 {
        g.add_black_edge(0, 1)?;
        return Ok(g);
    }
    let mut rng = seeded_rng(seed);
    let pruefer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &pruefer {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &pruefer {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_black_edge(leaf as VertexId, v as VertexId)?;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut last = leaves.into_iter();
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    g.add_black_edge(a as VertexId, b as VertexId)?;
    Ok(g)
}

pub fn grid(rows: usize, cols: usize) -> Result<Trigraph, GeneratorError> {
    if rows == 0 || cols == 0 {
        return Err(GeneratorError::InvalidParameters {
            family: "grid",
            reason: "rows and cols must be positive".into(),
        });
    }
    let mut g = Trigraph::with_vertex_count(rows * cols);
    let at = |r: usize, c: usize| (r * cols + c) as VertexId;
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_black_edge(at(r, c), at(r, c + 1))?;
            }
            if r + 1 < rows {
                g.add_black_edge(at(r, c), at(r + 1, c))?;
            }
        }
    }
    Ok(g)
}
