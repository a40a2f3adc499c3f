//! North-East lattice path counting and crossing probabilities.
//!
//! A path from (0,0) to (a,b) intersects the line y = x + t when its point
//! set meets both closed half-planes of the line. Tracking h = y - x along
//! the path (a walk started at 0 with steps +1 for North, -1 for East), the
//! path intersects iff t lies between the walk minimum and maximum.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Counting query: paths to (a, b) against the line y = x + t.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeQuery {
    /// East steps.
    pub a: u64,
    /// North steps.
    pub b: u64,
    /// Line offset.
    pub t: i64,
}

impl LatticeQuery {
    pub fn new(a: u64, b: u64, t: i64) -> Self {
        Self { a, b, t }
    }
}

/// Binomial coefficient with the convention binom(n, k) = 0 for k < 0 or
/// k > n.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of North-East lattice paths from (0,0) to (a,b) intersecting the
/// line y = x + t.
///
/// For t >= 0 and a + t > b this is binom(a+b, a+t); outside that range the
/// count falls back to a dynamic program over (position, reached-flag).
pub fn count_crossing_paths(q: LatticeQuery) -> BigUint {
    if q.t >= 0 && q.a + q.t as u64 > q.b {
        return binomial(q.a + q.b, q.t + q.a as i64);
    }
    count_crossing_paths_dp(q)
}

/// Direct count by dynamic programming, independent of the closed-form
/// branch. Since every path starts at h = 0, a path intersects y = x + t
/// iff it reaches h >= t (for t >= 0) or h <= t (for t < 0).
fn count_crossing_paths_dp(q: LatticeQuery) -> BigUint {
    let (a, b) = (q.a as usize, q.b as usize);
    // reached[x][y], pending[x][y]: path prefixes ending at (x, y) that have
    // / have not yet met the threshold.
    let hit = |x: usize, y: usize| -> bool {
        let h = y as i64 - x as i64;
        if q.t >= 0 {
            h >= q.t
        } else {
            h <= q.t
        }
    };
    let mut reached = vec![vec![BigUint::zero(); b + 1]; a + 1];
    let mut pending = vec![vec![BigUint::zero(); b + 1]; a + 1];
    if hit(0, 0) {
        reached[0][0] = BigUint::one();
    } else {
        pending[0][0] = BigUint::one();
    }
    for x in 0..=a {
        for y in 0..=b {
            if x == 0 && y == 0 {
                continue;
            }
            let mut r = BigUint::zero();
            let mut p = BigUint::zero();
            if x > 0 {
                r += &reached[x - 1][y];
                p += &pending[x - 1][y];
            }
            if y > 0 {
                r += &reached[x][y - 1];
                p += &pending[x][y - 1];
            }
            if hit(x, y) {
                r += p;
                p = BigUint::zero();
            }
            reached[x][y] = r;
            pending[x][y] = p;
        }
    }
    reached[a][b].clone()
}

/// Exact probability that a uniformly random North-East path from (0,0) to
/// (a,b) intersects y = x + t, as a reduced rational.
pub fn crossing_probability(q: LatticeQuery) -> Ratio<BigUint> {
    let total = binomial(q.a + q.b, q.a as i64);
    Ratio::new(count_crossing_paths(q), total)
}

/// The closed-form upper bound (b / (a + t))^t for t >= 1; always at least
/// the exact probability.
pub fn crossing_probability_bound(q: LatticeQuery) -> f64 {
    assert!(q.t >= 1, "bound requires t >= 1");
    (q.b as f64 / (q.a as f64 + q.t as f64)).powi(q.t as i32)
}
