//! Finite fields `F_q` with `q = p^r`, used as residue fields of chain rings.
//!
//! Elements are addressed by their index in the canonical enumeration: the
//! element with polynomial coordinates `(c_0, ..., c_{r-1})` over `F_p` has
//! index `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`. Index 0 is the zero element
//! and index 1 is the identity.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Fields up to this order precompute full add/mul/inv tables.
const TABLE_LIMIT: u64 = 1024;

/// Trial-division primality test; inputs are desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Writes `q` as `p^r` with `p` prime, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1)); // q itself is prime
    }
    let mut rest = q;
    let mut r = 0u32;
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    if rest == 1 {
        Some((p, r))
    } else {
        None
    }
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, m);
        }
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Degree of a coefficient vector, ignoring leading zeros. Zero poly -> None.
fn poly_degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Remainder of `f` modulo monic `g` over `F_p`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = poly_degree(g).expect("divisor must be nonzero");
    debug_assert_eq!(g[dg], 1, "divisor must be monic");
    let mut rem = f.to_vec();
    while let Some(dr) = poly_degree(&rem) {
        if dr < dg {
            break;
        }
        let lead = rem[dr];
        for j in 0..=dg {
            let idx = dr - dg + j;
            let sub = mod_mul(lead, g[j], p);
            rem[idx] = (rem[idx] + p - sub) % p;
        }
    }
    rem
}

/// True iff monic `f` has no monic factor of degree `1..=deg(f)/2`,
/// established by trial division over all candidate divisors.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = match poly_degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if r == 1 {
        return true;
    }
    for d in 1..=r / 2 {
        // all monic polynomials of degree d, low coefficients in odometer order
        let combos = (p as u128).pow(d as u32);
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        for idx in 0..combos {
            let mut k = idx;
            for c in g.iter_mut().take(d) {
                *c = (k % p as u128) as u64;
                k /= p as u128;
            }
            if poly_degree(&poly_rem(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

#[derive(Debug)]
struct FieldTables {
    add: Vec<u64>,
    mul: Vec<u64>,
    inv: Vec<u64>,
}

/// Descriptor of `F_q` with `q = p^r`: the prime, the extension degree and a
/// monic irreducible modulus of degree `r` (coefficients low-to-high).
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    r: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Arc<FieldTables>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.r.hash(state);
        self.modulus.hash(state);
    }
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldSpec {
    /// Builds `F_{p^r}` from an explicit monic irreducible modulus.
    pub fn new(p: u64, r: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 {
            return Err(Error::InvalidParameter("extension degree r must be >= 1".into()));
        }
        if modulus.len() != r as usize + 1 {
            return Err(Error::InvalidParameter(format!(
                "modulus must have degree {r} (got {} coefficients)",
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter("modulus coefficient out of range".into()));
        }
        if modulus[r as usize] != 1 {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        let q = (p as u128).checked_pow(r).and_then(|q| u64::try_from(q).ok()).ok_or_else(
            || Error::InvalidParameter(format!("field order {p}^{r} is out of range")),
        )?;
        let mut field = FieldSpec { p, r, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    /// Builds `F_{p^r}` with the lexicographically least monic irreducible
    /// modulus: candidates `x^r + c_{r-1} x^{r-1} + ... + c_0` are ordered by
    /// the value `c_0 + c_1 p + ...` and the first irreducible one wins.
    pub fn generate(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 {
            return Err(Error::InvalidParameter("extension degree r must be >= 1".into()));
        }
        let combos = (p as u128).checked_pow(r).ok_or_else(|| {
            Error::InvalidParameter(format!("field order {p}^{r} is out of range"))
        })?;
        for idx in 0..combos {
            let mut modulus = vec![0u64; r as usize + 1];
            modulus[r as usize] = 1;
            let mut k = idx;
            for c in modulus.iter_mut().take(r as usize) {
                *c = (k % p as u128) as u64;
                k /= p as u128;
            }
            if is_irreducible(&modulus, p) {
                return Self::new(p, r, modulus);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Field order `q = p^r`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn build_tables(&self) -> FieldTables {
        let q = self.q as usize;
        let mut add = vec![0u64; q * q];
        let mut mul = vec![0u64; q * q];
        let mut inv = vec![0u64; q];
        for a in 0..self.q {
            for b in 0..self.q {
                let i = (a * self.q + b) as usize;
                add[i] = self.add_direct(a, b);
                let m = self.mul_direct(a, b);
                mul[i] = m;
                if m == 1 {
                    inv[a as usize] = b;
                }
            }
        }
        FieldTables { add, mul, inv }
    }

    fn coords(&self, a: u64, out: &mut [u64]) {
        let mut k = a;
        for c in out.iter_mut().take(self.r as usize) {
            *c = k % self.p;
            k /= self.p;
        }
    }

    fn uncoords(&self, coords: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &c in coords[..self.r as usize].iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    fn add_direct(&self, a: u64, b: u64) -> u64 {
        if self.r == 1 {
            return (a + b) % self.p;
        }
        let mut ca = [0u64; 64];
        let mut cb = [0u64; 64];
        self.coords(a, &mut ca);
        self.coords(b, &mut cb);
        for i in 0..self.r as usize {
            ca[i] = (ca[i] + cb[i]) % self.p;
        }
        self.uncoords(&ca)
    }

    fn mul_direct(&self, a: u64, b: u64) -> u64 {
        if self.r == 1 {
            return mod_mul(a, b, self.p);
        }
        let r = self.r as usize;
        let mut ca = [0u64; 64];
        let mut cb = [0u64; 64];
        self.coords(a, &mut ca);
        self.coords(b, &mut cb);
        let mut prod = [0u64; 127];
        for i in 0..r {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..r {
                prod[i + j] = (prod[i + j] + mod_mul(ca[i], cb[j], self.p)) % self.p;
            }
        }
        // reduce by the monic modulus
        for k in (r..2 * r - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..r {
                let sub = mod_mul(lead, self.modulus[j], self.p);
                prod[k - r + j] = (prod[k - r + j] + self.p - sub) % self.p;
            }
        }
        self.uncoords(&prod)
    }

    fn inv_direct(&self, a: u64) -> u64 {
        debug_assert_ne!(a, 0, "zero has no inverse");
        if self.r == 1 {
            return mod_pow(a, self.p - 2, self.p);
        }
        // a^(q-2) by square and multiply
        let mut acc = 1u64;
        let mut base = a;
        let mut exp = self.q - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        match &self.tables {
            Some(t) => t.add[(a * self.q + b) as usize],
            None => self.add_direct(a, b),
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        match &self.tables {
            Some(t) => t.mul[(a * self.q + b) as usize],
            None => self.mul_direct(a, b),
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.q);
        if self.r == 1 {
            return (self.p - a) % self.p;
        }
        let mut ca = [0u64; 64];
        self.coords(a, &mut ca);
        for c in ca.iter_mut().take(self.r as usize) {
            *c = (self.p - *c) % self.p;
        }
        self.uncoords(&ca)
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(0 < a && a < self.q);
        match &self.tables {
            Some(t) => t.inv[a as usize],
            None => self.inv_direct(a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(1_000_001)); // 101 * 9901
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn f4_has_standard_modulus() {
        // x^2 + x + 1 is the least irreducible of degree 2 over F_2
        let f4 = FieldSpec::generate(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(f4.q(), 4);
    }

    #[test]
    fn f4_multiplication() {
        let f4 = FieldSpec::generate(2, 2).unwrap();
        // index 2 is x; x * x = x + 1 = index 3
        assert_eq!(f4.mul(2, 2), 3);
        // x * (x + 1) = x^2 + x = 1
        assert_eq!(f4.mul(2, 3), 1);
        assert_eq!(f4.inv(2), 3);
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(matches!(
            FieldSpec::new(2, 2, vec![1, 0, 1]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(FieldSpec::generate(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn field_axioms_f8_and_f9() {
        for (p, r) in [(2u64, 3u32), (3, 2)] {
            let f = FieldSpec::generate(p, r).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn direct_path_matches_tables() {
        let f = FieldSpec::generate(3, 2).unwrap();
        for a in 0..f.q() {
            for b in 0..f.q() {
                assert_eq!(f.add(a, b), f.add_direct(a, b));
                assert_eq!(f.mul(a, b), f.mul_direct(a, b));
            }
            if a != 0 {
                assert_eq!(f.inv(a), f.inv_direct(a));
            }
        }
    }
}
