//! The closed-form bound values that the constructions are measured against.

/// Vertex-count bound: (n + sqrt(n ln n) + sqrt(n) + 2 ln n) / 2.
pub fn theorem1_bound(n: usize) -> f64 {
    let n = n as f64;
    let ln = if n >= 1.0 { n.ln() } else { 0.0 };
    (n + (n * ln).sqrt() + n.sqrt() + 2.0 * ln) / 2.0
}

/// Edge-count bound: sqrt(3m) + m^{1/4} sqrt(ln m) / (4 * 3^{1/4})
/// + 3 m^{1/4} / 2, for m >= 1.
pub fn theorem2_bound(m: usize) -> f64 {
    let m = m as f64;
    let q4 = m.powf(0.25);
    let ln = if m >= 1.0 { m.ln() } else { 0.0 };
    (3.0 * m).sqrt() + q4 * ln.sqrt() / (4.0 * 3f64.powf(0.25)) + 1.5 * q4
}

/// Random-graph lower-bound threshold:
/// 2 p (1-p) n - (2 sqrt 2 + eps) sqrt(p (1-p) n ln n).
pub fn theorem3_threshold(n: usize, p: f64, eps: f64) -> f64 {
    let n = n as f64;
    let s = p * (1.0 - p);
    2.0 * s * n - (2.0 * 2f64.sqrt() + eps) * (s * n * n.ln()).sqrt()
}
