//! Prime-power finite field arithmetic.
//!
//! Elements of F_{p^k} are encoded as the integers 0..p^k: the base-p digits
//! of an element are the coefficients of its polynomial representative, least
//! significant digit first. For prime q the arithmetic is plain integer
//! arithmetic mod p.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("no built-in modulus for order {0}; supply an irreducible polynomial")]
    MissingModulus(u64),
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    WrongModulusDegree { expected: u32, got: usize },
    #[error("modulus is reducible over F_{p}: divisible by a degree-{degree} factor")]
    ReducibleModulus { p: u64, degree: usize },
}

/// Irreducible moduli for the extension fields of every prime power q <= 169
/// with k >= 2, coefficients least significant first.
const MODULUS_TABLE: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),                // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),             // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),          // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]),       // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),    // x^6 + x + 1
    (2, 7, &[1, 0, 0, 1, 0, 0, 0, 1]), // x^7 + x^3 + 1
    (3, 2, &[1, 0, 1]),                // x^2 + 1
    (3, 3, &[1, 2, 0, 1]),             // x^3 + 2x + 1
    (3, 4, &[2, 1, 0, 0, 1]),          // x^4 + x + 2
    (5, 2, &[2, 0, 1]),                // x^2 + 2
    (5, 3, &[1, 1, 0, 1]),             // x^3 + x + 1
    (7, 2, &[1, 0, 1]),                // x^2 + 1
    (11, 2, &[1, 0, 1]),               // x^2 + 1
    (13, 2, &[11, 0, 1]),              // x^2 + 11 = x^2 - 2
];

/// Decomposes q into (p, k) with p prime and q = p^k, k >= 1.
pub fn prime_power_decompose(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let mut p = 0;
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Ok((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Ok((p, k))
    } else {
        Err(FieldError::NotPrimePower(q))
    }
}

/// The field F_q for a prime power q = p^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    /// Monic irreducible modulus, coefficients low to high, length k + 1.
    /// For k = 1 this is the polynomial x, so elements are scalars mod p.
    modulus: Vec<u64>,
}

impl FiniteField {
    /// Field of order q with the built-in modulus (all prime powers <= 169;
    /// any prime works at any size).
    pub fn new(q: u64) -> Result<Self, FieldError> {
        let (p, k) = prime_power_decompose(q)?;
        if k == 1 {
            return Ok(Self {
                p,
                k,
                q,
                modulus: vec![0, 1],
            });
        }
        let entry = MODULUS_TABLE
            .iter()
            .find(|&&(tp, tk, _)| tp == p && tk == k)
            .ok_or(FieldError::MissingModulus(q))?;
        Self::with_modulus(q, entry.2.to_vec())
    }

    /// Field of order q = p^k with a caller-supplied monic modulus of degree
    /// k, verified irreducible by exhaustive divisor search.
    pub fn with_modulus(q: u64, mut modulus: Vec<u64>) -> Result<Self, FieldError> {
        let (p, k) = prime_power_decompose(q)?;
        for c in modulus.iter_mut() {
            *c %= p;
        }
        if modulus.len() != k as usize + 1 || modulus[k as usize] != 1 {
            return Err(FieldError::WrongModulusDegree {
                expected: k,
                got: modulus.len().saturating_sub(1),
            });
        }
        verify_irreducible(p, &modulus)?;
        Ok(Self { p, k, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let mut out = vec![0; self.k as usize];
        let mut a = a;
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn pack_digits(&self, digits: &[u64]) -> u64 {
        let mut v = 0;
        for &d in digits.iter().rev() {
            v = v * self.p + d % self.p;
        }
        v
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.q);
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (self.p - x) % self.p).collect();
        self.pack_digits(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return a * b % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(self.p, &prod, &self.modulus);
        let mut digits = vec![0; self.k as usize];
        digits[..rem.len()].copy_from_slice(&rem);
        self.pack_digits(&digits)
    }

    /// The set of nonzero squares {c^2 : c in F_q \ {0}}.
    pub fn nonzero_squares(&self) -> std::collections::BTreeSet<u64> {
        (1..self.q).map(|c| self.mul(c, c)).collect()
    }
}

/// Remainder of `a` divided by monic `m`, both over F_p, low-to-high
/// coefficients. The result has fewer coefficients than `m`.
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut rem: Vec<u64> = a.iter().map(|&c| c % p).collect();
    if rem.is_empty() {
        return vec![0];
    }
    let deg_m = m.len() - 1;
    while rem.len() > deg_m {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - deg_m;
            for (i, &mc) in m.iter().enumerate() {
                let sub = lead * (mc % p) % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    while rem.len() > 1 && *rem.last().unwrap() == 0 {
        rem.pop();
    }
    rem
}

/// Exhaustive irreducibility check: no monic divisor of degree 1..=k/2.
fn verify_irreducible(p: u64, modulus: &[u64]) -> Result<(), FieldError> {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        // All monic polynomials of degree d over F_p.
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut e = enc;
            for _ in 0..d {
                cand.push(e % p);
                e /= p;
            }
            cand.push(1);
            let rem = poly_rem(p, modulus, &cand);
            if rem.iter().all(|&c| c == 0) {
                return Err(FieldError::ReducibleModulus { p, degree: d });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_is_integer_arithmetic() {
        let f = FiniteField::new(13).unwrap();
        assert_eq!(f.characteristic(), 13);
        assert_eq!(f.extension_degree(), 1);
        assert_eq!(f.add(7, 9), 3);
        assert_eq!(f.mul(5, 8), 1);
        assert_eq!(f.neg(4), 9);
    }

    #[test]
    fn f9_has_square_root_of_minus_one() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // The element x (encoded 3) squares to -1 = 2.
        assert_eq!(f.mul(3, 3), f.neg(1));
        assert!(f.nonzero_squares().contains(&f.neg(1)));
    }

    #[test]
    fn non_prime_power_rejected() {
        assert_eq!(
            FiniteField::new(12).unwrap_err(),
            FieldError::NotPrimePower(12)
        );
        assert_eq!(
            FiniteField::new(1).unwrap_err(),
            FieldError::NotPrimePower(1)
        );
        assert_eq!(
            FiniteField::new(0).unwrap_err(),
            FieldError::NotPrimePower(0)
        );
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 2x + 1 = (x + 1)^2 over F_3.
        let err = FiniteField::with_modulus(9, vec![1, 2, 1]).unwrap_err();
        assert_eq!(err, FieldError::ReducibleModulus { p: 3, degree: 1 });
    }

    #[test]
    fn whole_modulus_table_verifies() {
        for &(p, k, _) in MODULUS_TABLE {
            let q = p.pow(k);
            let f = FiniteField::new(q).expect("table entry constructs");
            assert_eq!((f.characteristic(), f.extension_degree()), (p, k));
        }
    }

    #[test]
    fn field_axioms_on_sampled_triples() {
        for q in [4, 8, 9, 16, 25, 27, 49, 81, 121, 125, 169] {
            let f = FiniteField::new(q).unwrap();
            // Deterministic sample of triples.
            let pick = |i: u64| (i * 2654435761 + 1) % q;
            for i in 0..40 {
                let (a, b, c) = (pick(3 * i), pick(3 * i + 1), pick(3 * i + 2));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
            }
            // Nonzero elements form a group: a * b = 0 only if a or b is 0.
            for a in 1..q.min(20) {
                for b in 1..q.min(20) {
                    assert_ne!(f.mul(a, b), 0, "zero divisor in F_{q}: {a} * {b}");
                }
            }
        }
    }
}
