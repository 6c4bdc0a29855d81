//! Commutative finite chain rings, their quotients, and product rings.
//!
//! Two chain-ring families are provided and every count in this crate depends
//! only on their residue-field order `q` and nilpotency index `e`:
//!
//! * `Zpe` — the integers modulo `p^e`, maximal ideal generated by `p`;
//! * `Fqu` — `F_q[u]/(u^e)`, maximal ideal generated by `u`.
//!
//! A ring element is stored as its canonical code: the digits
//! `a_0 + a_1 γ + ... + a_{e-1} γ^{e-1}` of its γ-adic expansion read as a
//! base-`q` integer (each digit addressed by its index in the residue field
//! enumeration). Two elements are equal iff their codes are equal, and code
//! order is the enumeration order, starting `0, 1, ...`.

pub mod field;
pub mod grammar;

use crate::error::{Error, Result};
pub use field::{is_prime, prime_power, FieldSpec};

/// The two implemented chain-ring families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Integers modulo `p^e`.
    Zpe,
    /// `F_q[u]/(u^e)` truncated polynomials.
    Fqu,
}

/// Canonical element of a chain ring; see the module docs for the encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement(u64);

impl RingElement {
    /// The canonical code, also the element's position in enumeration order.
    pub fn code(self) -> u64 {
        self.0
    }
}

/// Arithmetic selector for the checked entry point [`ChainRingSpec::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Immutable descriptor of a commutative finite chain ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainRingSpec {
    family: Family,
    p: u64,
    r: u32,
    e: u32,
    q: u64,
    cardinality: u64,
    field: FieldSpec,
}

impl ChainRingSpec {
    /// Builds a chain-ring descriptor. For `Fqu` the residue-field modulus is
    /// the lexicographically least irreducible polynomial, so equal parameters
    /// always produce identical specs.
    pub fn new(family: Family, p: u64, r: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r < 1 {
            return Err(Error::InvalidParameter("extension degree r must be >= 1".into()));
        }
        if e < 1 {
            return Err(Error::InvalidParameter("nilpotency index e must be >= 1".into()));
        }
        if family == Family::Zpe && r != 1 {
            return Err(Error::InvalidParameter(
                "the Z_{p^e} family has residue field F_p; use the Fqu family for r > 1".into(),
            ));
        }
        let field = FieldSpec::generate(p, r)?;
        let q = field.q();
        let cardinality = (q as u128)
            .checked_pow(e)
            .filter(|&c| c < 1 << 63)
            .and_then(|c| u64::try_from(c).ok())
            .ok_or_else(|| {
                Error::InvalidParameter(format!("ring cardinality {q}^{e} is out of range"))
            })?;
        Ok(ChainRingSpec { family, p, r, e, q, cardinality, field })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Nilpotency index `e`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Residue-field order `q = p^r`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `|R| = q^e`.
    pub fn size(&self) -> u64 {
        self.cardinality
    }

    pub fn residue_field(&self) -> &FieldSpec {
        &self.field
    }

    /// `|U(R)| = (q - 1) q^(e-1)`.
    pub fn unit_count(&self) -> u64 {
        (self.q - 1) * self.q.pow(self.e - 1)
    }

    pub fn contains(&self, a: RingElement) -> bool {
        a.0 < self.cardinality
    }

    fn check(&self, a: RingElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "element code {} out of range for a ring of {} elements",
                a.0, self.cardinality
            )))
        }
    }

    /// Element with the given canonical code, i.e. the `code`-th element of
    /// the enumeration.
    pub fn element_from_code(&self, code: u64) -> Result<RingElement> {
        let el = RingElement(code);
        self.check(el)?;
        Ok(el)
    }

    /// Element with the given γ-adic digits (low first). Up to `e` digits,
    /// each a residue-field index; missing high digits are zero.
    pub fn element_from_digits(&self, digits: &[u64]) -> Result<RingElement> {
        if digits.is_empty() || digits.len() > self.e as usize {
            return Err(Error::InvalidParameter(format!(
                "expected 1..={} digits, got {}",
                self.e,
                digits.len()
            )));
        }
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            if d >= self.q {
                return Err(Error::InvalidParameter(format!(
                    "digit {d} out of range for residue field of order {}",
                    self.q
                )));
            }
            code = code * self.q + d;
        }
        Ok(RingElement(code))
    }

    /// γ-adic digit vector of `a`, low first, always `e` entries.
    pub fn digits(&self, a: RingElement) -> Vec<u64> {
        let mut digits = vec![0u64; self.e as usize];
        let mut code = a.0;
        for d in digits.iter_mut() {
            *d = code % self.q;
            code /= self.q;
        }
        digits
    }

    /// Enumerates all `q^e` elements in canonical (odometer) order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> {
        (0..self.cardinality).map(RingElement)
    }

    fn add_raw(&self, a: u64, b: u64) -> u64 {
        match self.family {
            Family::Zpe => ((a as u128 + b as u128) % self.cardinality as u128) as u64,
            Family::Fqu => {
                let mut acc = 0u64;
                let mut pow = 1u64;
                let (mut x, mut y) = (a, b);
                for _ in 0..self.e {
                    acc += self.field.add(x % self.q, y % self.q) * pow;
                    x /= self.q;
                    y /= self.q;
                    pow = pow.saturating_mul(self.q);
                }
                acc
            }
        }
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        match self.family {
            Family::Zpe => ((a as u128 * b as u128) % self.cardinality as u128) as u64,
            Family::Fqu => {
                let e = self.e as usize;
                let mut da = [0u64; 64];
                let mut db = [0u64; 64];
                let mut dc = [0u64; 64];
                let (mut x, mut y) = (a, b);
                for i in 0..e {
                    da[i] = x % self.q;
                    db[i] = y % self.q;
                    x /= self.q;
                    y /= self.q;
                }
                // truncated polynomial product in u, u^e = 0
                for i in 0..e {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..e - i {
                        let t = self.field.mul(da[i], db[j]);
                        dc[i + j] = self.field.add(dc[i + j], t);
                    }
                }
                let mut acc = 0u64;
                for i in (0..e).rev() {
                    acc = acc * self.q + dc[i];
                }
                acc
            }
        }
    }

    fn neg_raw(&self, a: u64) -> u64 {
        match self.family {
            Family::Zpe => (self.cardinality - a) % self.cardinality,
            Family::Fqu => {
                let mut acc = 0u64;
                let mut pow = 1u64;
                let mut x = a;
                for _ in 0..self.e {
                    acc += self.field.neg(x % self.q) * pow;
                    x /= self.q;
                    pow = pow.saturating_mul(self.q);
                }
                acc
            }
        }
    }

    /// Checked arithmetic on validated elements.
    pub fn arith(&self, op: ArithOp, a: RingElement, b: RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let code = match op {
            ArithOp::Add => self.add_raw(a.0, b.0),
            ArithOp::Sub => self.add_raw(a.0, self.neg_raw(b.0)),
            ArithOp::Mul => self.mul_raw(a.0, b.0),
        };
        Ok(RingElement(code))
    }

    /// γ-adic valuation of `a`: the index of its first nonzero digit, with
    /// `v(0) = e`.
    pub fn valuation(&self, a: RingElement) -> u32 {
        debug_assert!(self.contains(a));
        if a.0 == 0 {
            return self.e;
        }
        let mut code = a.0;
        let mut s = 0u32;
        while code % self.q == 0 {
            code /= self.q;
            s += 1;
        }
        s
    }

    /// Writes `a = γ^s b` with `b` a unit: returns the valuation `s` and, for
    /// `a != 0`, the canonical unit part (digits shifted down by `s`, zero
    /// filled at the top).
    pub fn unit_decompose(&self, a: RingElement) -> (u32, Option<RingElement>) {
        debug_assert!(self.contains(a));
        if a.0 == 0 {
            return (self.e, None);
        }
        let s = self.valuation(a);
        (s, Some(RingElement(a.0 / self.q.pow(s))))
    }

    /// The maximal-ideal generator γ as an element (zero when `e = 1`).
    pub fn gamma(&self) -> RingElement {
        self.gamma_pow(1)
    }

    /// `γ^s` for `0 <= s <= e`; `γ^e = 0`.
    pub fn gamma_pow(&self, s: u32) -> RingElement {
        assert!(s <= self.e, "gamma exponent out of range");
        if s == self.e {
            RingElement(0)
        } else {
            RingElement(self.q.pow(s))
        }
    }

    /// The quotient ring `R/γ^k R`: same family and residue field, nilpotency
    /// index `k`. The trivial ring `k = 0` is not modeled.
    pub fn quotient(&self, k: u32) -> Result<ChainRingSpec> {
        if k < 1 || k > self.e {
            return Err(Error::InvalidParameter(format!(
                "quotient index must lie in 1..={}, got {k}",
                self.e
            )));
        }
        ChainRingSpec::new(self.family, self.p, self.r, k)
    }

    /// Projects `a` into `R/γ^k R` by keeping its low `k` digits; returns the
    /// quotient spec together with the image.
    pub fn quotient_project(&self, k: u32, a: RingElement) -> Result<(ChainRingSpec, RingElement)> {
        self.check(a)?;
        let qspec = self.quotient(k)?;
        let image = RingElement(a.0 % qspec.cardinality);
        Ok((qspec, image))
    }
}

/// Ordered product of chain rings: the general commutative finite principal
/// ideal ring. When built by factoring an integer modulus `m`, elements can
/// also be read and written as integers mod `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductRingSpec {
    components: Vec<ChainRingSpec>,
    modulus: Option<u128>,
    cardinality: u128,
}

/// Element of a product ring: one chain-ring element per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductElement(Vec<RingElement>);

impl ProductElement {
    pub fn parts(&self) -> &[RingElement] {
        &self.0
    }
}

impl ProductRingSpec {
    pub fn new(components: Vec<ChainRingSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter("product ring needs at least one component".into()));
        }
        let mut cardinality = 1u128;
        for c in &components {
            cardinality = cardinality.checked_mul(c.size() as u128).ok_or_else(|| {
                Error::InvalidParameter("product ring cardinality is out of range".into())
            })?;
        }
        Ok(ProductRingSpec { components, modulus: None, cardinality })
    }

    /// Factors `m = p_1^{e_1} ... p_k^{e_k}` by trial division (ascending
    /// primes) and returns the product of the `Z_{p_i^{e_i}}` components.
    pub fn factor_integer(m: u128) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("modulus must be >= 2, got {m}")));
        }
        let mut components = Vec::new();
        let mut rest = m;
        let mut d = 2u128;
        while d * d <= rest {
            if rest % d == 0 {
                let mut e = 0u32;
                while rest % d == 0 {
                    rest /= d;
                    e += 1;
                }
                let p = u64::try_from(d).expect("trial divisor fits u64");
                components.push(ChainRingSpec::new(Family::Zpe, p, 1, e)?);
            }
            d += 1;
        }
        if rest > 1 {
            let p = u64::try_from(rest).map_err(|_| {
                Error::InvalidParameter(format!("prime factor {rest} is out of range"))
            })?;
            components.push(ChainRingSpec::new(Family::Zpe, p, 1, 1)?);
        }
        let mut spec = Self::new(components)?;
        spec.modulus = Some(m);
        Ok(spec)
    }

    pub fn components(&self) -> &[ChainRingSpec] {
        &self.components
    }

    /// The integer modulus this spec was factored from, if any.
    pub fn modulus(&self) -> Option<u128> {
        self.modulus
    }

    pub fn size(&self) -> u128 {
        self.cardinality
    }

    pub fn element(&self, parts: Vec<RingElement>) -> Result<ProductElement> {
        if parts.len() != self.components.len() {
            return Err(Error::DomainMismatch(format!(
                "expected {} components, got {}",
                self.components.len(),
                parts.len()
            )));
        }
        for (c, &p) in self.components.iter().zip(&parts) {
            c.check(p)?;
        }
        Ok(ProductElement(parts))
    }

    pub fn contains(&self, a: &ProductElement) -> bool {
        a.0.len() == self.components.len()
            && self.components.iter().zip(&a.0).all(|(c, &p)| c.contains(p))
    }

    /// Residue tuple of `x` under `Z_m ~ Π Z_{p_i^{e_i}}`. Only available on
    /// specs built by [`ProductRingSpec::factor_integer`].
    pub fn int_to_element(&self, x: u128) -> Result<ProductElement> {
        let m = self.modulus.ok_or_else(|| {
            Error::InvalidParameter("ring was not built from an integer modulus".into())
        })?;
        let x = x % m;
        let parts = self
            .components
            .iter()
            .map(|c| RingElement((x % c.size() as u128) as u64))
            .collect();
        Ok(ProductElement(parts))
    }

    /// Inverse of [`ProductRingSpec::int_to_element`] via CRT recombination.
    pub fn element_to_int(&self, a: &ProductElement) -> Result<u128> {
        let _ = self.modulus.ok_or_else(|| {
            Error::InvalidParameter("ring was not built from an integer modulus".into())
        })?;
        if !self.contains(a) {
            return Err(Error::DomainMismatch("element does not belong to this ring".into()));
        }
        let mut x = 0u128;
        let mut m = 1u128;
        for (c, &part) in self.components.iter().zip(&a.0) {
            let mi = c.size() as u128;
            let ri = part.code() as u128;
            // x += m * t with t = (ri - x) / m  (mod mi)
            let minv = mod_inverse_u128(m % mi, mi);
            let diff = (ri + mi - x % mi) % mi;
            let t = diff * minv % mi;
            x += m * t;
            m *= mi;
        }
        Ok(x)
    }

    /// Per-component γ-adic valuations; the class key of `a`.
    pub fn valuations(&self, a: &ProductElement) -> Vec<u32> {
        self.components.iter().zip(&a.0).map(|(c, &p)| c.valuation(p)).collect()
    }

    pub fn arith(&self, op: ArithOp, a: &ProductElement, b: &ProductElement) -> Result<ProductElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::DomainMismatch("element does not belong to this ring".into()));
        }
        let parts = self
            .components
            .iter()
            .zip(a.0.iter().zip(&b.0))
            .map(|(c, (&x, &y))| c.arith(op, x, y))
            .collect::<Result<_>>()?;
        Ok(ProductElement(parts))
    }
}

/// Extended-Euclid inverse of `a` modulo `m`, for coprime inputs.
fn mod_inverse_u128(a: u128, m: u128) -> u128 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let quot = r / new_r;
        (t, new_t) = (new_t, t - quot * new_t);
        (r, new_r) = (new_r, r - quot * new_r);
    }
    assert_eq!(r, 1, "inputs must be coprime");
    if t < 0 {
        t += m as i128;
    }
    t as u128
}

/// Uniform interface over chain rings and product rings: exact arithmetic
/// plus a canonical enumeration by index. All implementors are immutable
/// values, safe to share across threads.
pub trait Ring: Send + Sync {
    type Elem: Clone + Eq + std::hash::Hash + std::fmt::Debug + Send + Sync;

    fn cardinality(&self) -> u128;
    /// The `idx`-th element in canonical enumeration order.
    fn element_at(&self, idx: u128) -> Self::Elem;
    /// Position of `a` in the canonical enumeration.
    fn index_of(&self, a: &Self::Elem) -> u128;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Inverse of a unit, found by Hensel lifting of the residue-field
    /// inverse. Panics on non-units.
    fn unit_inverse(&self, a: &Self::Elem) -> Self::Elem;
}

impl Ring for ChainRingSpec {
    type Elem = RingElement;

    fn cardinality(&self) -> u128 {
        self.cardinality as u128
    }

    fn element_at(&self, idx: u128) -> RingElement {
        debug_assert!(idx < self.cardinality as u128);
        RingElement(idx as u64)
    }

    fn index_of(&self, a: &RingElement) -> u128 {
        a.0 as u128
    }

    fn zero(&self) -> RingElement {
        RingElement(0)
    }

    fn one(&self) -> RingElement {
        RingElement(1)
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        debug_assert!(self.contains(*a) && self.contains(*b));
        RingElement(self.add_raw(a.0, b.0))
    }

    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        debug_assert!(self.contains(*a) && self.contains(*b));
        RingElement(self.add_raw(a.0, self.neg_raw(b.0)))
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        debug_assert!(self.contains(*a) && self.contains(*b));
        RingElement(self.mul_raw(a.0, b.0))
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        debug_assert!(self.contains(*a));
        RingElement(self.neg_raw(a.0))
    }

    fn is_unit(&self, a: &RingElement) -> bool {
        debug_assert!(self.contains(*a));
        a.0 % self.q != 0
    }

    fn unit_inverse(&self, a: &RingElement) -> RingElement {
        assert!(self.is_unit(a), "unit_inverse called on a non-unit");
        // invert the residue digit, then lift: x <- x(2 - ax) doubles the
        // number of correct γ-adic digits each round
        let mut x = RingElement(self.field.inv(a.0 % self.q));
        let two = self.add(&self.one(), &self.one());
        let mut prec = 1u32;
        while prec < self.e {
            let ax = self.mul(a, &x);
            x = self.mul(&x, &self.sub(&two, &ax));
            prec *= 2;
        }
        debug_assert_eq!(self.mul(a, &x), self.one());
        x
    }
}

impl Ring for ProductRingSpec {
    type Elem = ProductElement;

    fn cardinality(&self) -> u128 {
        self.cardinality
    }

    fn element_at(&self, idx: u128) -> ProductElement {
        debug_assert!(idx < self.cardinality);
        let mut rest = idx;
        let parts = self
            .components
            .iter()
            .map(|c| {
                let card = c.size() as u128;
                let code = (rest % card) as u64;
                rest /= card;
                RingElement(code)
            })
            .collect();
        ProductElement(parts)
    }

    fn index_of(&self, a: &ProductElement) -> u128 {
        debug_assert!(self.contains(a));
        let mut idx = 0u128;
        let mut stride = 1u128;
        for (c, &part) in self.components.iter().zip(&a.0) {
            idx += stride * part.code() as u128;
            stride *= c.size() as u128;
        }
        idx
    }

    fn zero(&self) -> ProductElement {
        ProductElement(self.components.iter().map(|c| c.zero()).collect())
    }

    fn one(&self) -> ProductElement {
        ProductElement(self.components.iter().map(|c| c.one()).collect())
    }

    fn add(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        self.zip_with(a, b, |c, x, y| c.add(&x, &y))
    }

    fn sub(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        self.zip_with(a, b, |c, x, y| c.sub(&x, &y))
    }

    fn mul(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        self.zip_with(a, b, |c, x, y| c.mul(&x, &y))
    }

    fn neg(&self, a: &ProductElement) -> ProductElement {
        ProductElement(self.components.iter().zip(&a.0).map(|(c, &x)| c.neg(&x)).collect())
    }

    fn is_unit(&self, a: &ProductElement) -> bool {
        self.components.iter().zip(&a.0).all(|(c, x)| c.is_unit(x))
    }

    fn unit_inverse(&self, a: &ProductElement) -> ProductElement {
        ProductElement(
            self.components.iter().zip(&a.0).map(|(c, x)| c.unit_inverse(x)).collect(),
        )
    }
}

impl ProductRingSpec {
    fn zip_with(
        &self,
        a: &ProductElement,
        b: &ProductElement,
        f: impl Fn(&ChainRingSpec, RingElement, RingElement) -> RingElement,
    ) -> ProductElement {
        debug_assert!(self.contains(a) && self.contains(b));
        ProductElement(
            self.components
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(c, (&x, &y))| f(c, x, y))
                .collect(),
        )
    }
}

/// A parsed ring spec: either a single chain ring or a product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyRingSpec {
    Chain(ChainRingSpec),
    Product(ProductRingSpec),
}

/// An element of an [`AnyRingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyElement {
    Chain(RingElement),
    Product(ProductElement),
}

impl AnyRingSpec {
    pub fn cardinality(&self) -> u128 {
        match self {
            AnyRingSpec::Chain(c) => c.cardinality as u128,
            AnyRingSpec::Product(p) => p.cardinality,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, e: u32) -> ChainRingSpec {
        ChainRingSpec::new(Family::Zpe, p, 1, e).unwrap()
    }

    fn fqu(p: u64, r: u32, e: u32) -> ChainRingSpec {
        ChainRingSpec::new(Family::Fqu, p, r, e).unwrap()
    }

    #[test]
    fn construction_examples() {
        let z4 = z(2, 2);
        assert_eq!((z4.q(), z4.e(), z4.size()), (2, 2, 4));
        let f4u = fqu(2, 2, 2);
        assert_eq!((f4u.q(), f4u.size()), (4, 16));
        assert_eq!(
            ChainRingSpec::new(Family::Zpe, 4, 1, 1).unwrap_err(),
            Error::NotPrime(4)
        );
        assert!(ChainRingSpec::new(Family::Zpe, 2, 2, 1).is_err());
        assert!(ChainRingSpec::new(Family::Zpe, 2, 1, 0).is_err());
        assert!(ChainRingSpec::new(Family::Fqu, 2, 0, 2).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let z4 = z(2, 2);
        let a = z4.element_from_code(2).unwrap();
        let b = z4.element_from_code(3).unwrap();
        assert_eq!(z4.arith(ArithOp::Add, a, b).unwrap().code(), 1);

        let f2u = fqu(2, 1, 2);
        let u = f2u.element_from_digits(&[0, 1]).unwrap();
        assert_eq!(f2u.arith(ArithOp::Mul, u, u).unwrap().code(), 0);
        let one_plus_u = f2u.element_from_digits(&[1, 1]).unwrap();
        assert_eq!(f2u.arith(ArithOp::Mul, one_plus_u, one_plus_u).unwrap().code(), 1);
    }

    #[test]
    fn arithmetic_rejects_foreign_elements() {
        let z4 = z(2, 2);
        let bad = RingElement(7);
        assert!(matches!(
            z4.arith(ArithOp::Add, bad, z4.zero()),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn enumeration_order() {
        let z4 = z(2, 2);
        let codes: Vec<u64> = z4.elements().map(|a| a.code()).collect();
        assert_eq!(codes, vec![0, 1, 2, 3]);

        let f2u = fqu(2, 1, 2);
        let digits: Vec<Vec<u64>> = f2u.elements().map(|a| f2u.digits(a)).collect();
        assert_eq!(digits, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);

        assert_eq!(z(3, 2).elements().count(), 9);
    }

    #[test]
    fn unit_decompose_examples() {
        let z8 = z(2, 3);
        let six = z8.element_from_code(6).unwrap();
        let (s, b) = z8.unit_decompose(six);
        assert_eq!((s, b.unwrap().code()), (1, 3));

        let (s, b) = z8.unit_decompose(z8.zero());
        assert_eq!((s, b), (3, None));

        let five = z8.element_from_code(5).unwrap();
        assert_eq!(z8.unit_decompose(five), (0, Some(five)));
    }

    #[test]
    fn unit_decompose_roundtrip_and_unit_counts() {
        for spec in [z(2, 3), z(3, 2), fqu(2, 2, 2), fqu(2, 1, 3)] {
            let mut units = 0u64;
            for a in spec.elements() {
                let (s, b) = spec.unit_decompose(a);
                if a.code() == 0 {
                    assert_eq!(s, spec.e());
                    assert!(b.is_none());
                } else {
                    let b = b.unwrap();
                    assert!(spec.is_unit(&b));
                    let recomposed = spec.mul(&spec.gamma_pow(s), &b);
                    assert_eq!(recomposed, a);
                }
                if spec.is_unit(&a) {
                    units += 1;
                    let inv = spec.unit_inverse(&a);
                    assert_eq!(spec.mul(&a, &inv), spec.one());
                }
            }
            assert_eq!(units, spec.unit_count());
            // |γ^j R| = q^(e-j)
            for j in 0..=spec.e() {
                let count = spec.elements().filter(|&a| spec.valuation(a) >= j).count() as u64;
                assert_eq!(count, spec.q().pow(spec.e() - j));
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_small() {
        for spec in [z(2, 2), fqu(2, 1, 2), z(13, 1), fqu(2, 2, 2)] {
            let els: Vec<RingElement> = spec.elements().collect();
            if els.len() > 16 {
                continue; // sampled coverage lives in the proptests
            }
            for &a in &els {
                assert_eq!(spec.add(&a, &spec.zero()), a);
                assert_eq!(spec.mul(&a, &spec.one()), a);
                assert_eq!(spec.add(&a, &spec.neg(&a)), spec.zero());
                for &b in &els {
                    assert_eq!(spec.add(&a, &b), spec.add(&b, &a));
                    assert_eq!(spec.mul(&a, &b), spec.mul(&b, &a));
                    for &c in &els {
                        assert_eq!(
                            spec.mul(&a, &spec.add(&b, &c)),
                            spec.add(&spec.mul(&a, &b), &spec.mul(&a, &c))
                        );
                        assert_eq!(
                            spec.mul(&a, &spec.mul(&b, &c)),
                            spec.mul(&spec.mul(&a, &b), &c)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_projection() {
        let z8 = z(2, 3);
        let six = z8.element_from_code(6).unwrap();
        let (q2, img) = z8.quotient_project(2, six).unwrap();
        assert_eq!((q2.size(), img.code()), (4, 2));
        let (q3, img) = z8.quotient_project(3, six).unwrap();
        assert_eq!((q3.size(), img.code()), (8, 6));

        let f4u = fqu(2, 2, 2);
        let u = f4u.element_from_digits(&[0, 1]).unwrap();
        let (f4, img) = f4u.quotient_project(1, u).unwrap();
        assert_eq!((f4.size(), f4.e(), img.code()), (4, 1, 0));

        assert!(z8.quotient_project(0, six).is_err());
        assert!(z8.quotient_project(4, six).is_err());
    }

    #[test]
    fn quotient_is_ring_homomorphism() {
        let z8 = z(2, 3);
        for k in 1..=3 {
            let qr = z8.quotient(k).unwrap();
            for a in z8.elements() {
                for b in z8.elements() {
                    let (_, pa) = z8.quotient_project(k, a).unwrap();
                    let (_, pb) = z8.quotient_project(k, b).unwrap();
                    let (_, psum) = z8.quotient_project(k, z8.add(&a, &b)).unwrap();
                    let (_, pprod) = z8.quotient_project(k, z8.mul(&a, &b)).unwrap();
                    assert_eq!(qr.add(&pa, &pb), psum);
                    assert_eq!(qr.mul(&pa, &pb), pprod);
                }
            }
            // surjective: every element of the quotient is hit
            let images: std::collections::HashSet<u64> = z8
                .elements()
                .map(|a| z8.quotient_project(k, a).unwrap().1.code())
                .collect();
            assert_eq!(images.len() as u64, qr.size());
        }
    }

    #[test]
    fn integer_factorization() {
        let z12 = ProductRingSpec::factor_integer(12).unwrap();
        let sizes: Vec<u64> = z12.components().iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![4, 3]);
        assert_eq!(z12.int_to_element(7).unwrap().parts()[0].code(), 3);
        assert_eq!(z12.int_to_element(7).unwrap().parts()[1].code(), 1);

        let z6 = ProductRingSpec::factor_integer(6).unwrap();
        let three = z6.int_to_element(3).unwrap();
        assert_eq!(three.parts().iter().map(|p| p.code()).collect::<Vec<_>>(), vec![1, 0]);

        assert!(ProductRingSpec::factor_integer(1).is_err());
        assert!(ProductRingSpec::factor_integer(0).is_err());
    }

    #[test]
    fn int_to_product_is_ring_isomorphism() {
        for m in [6u128, 12, 36, 100] {
            let ring = ProductRingSpec::factor_integer(m).unwrap();
            // bijective
            let mut seen = std::collections::HashSet::new();
            for x in 0..m {
                let el = ring.int_to_element(x).unwrap();
                assert_eq!(ring.element_to_int(&el).unwrap(), x);
                seen.insert(el);
            }
            assert_eq!(seen.len() as u128, m);
            // commutes with add and mul
            for x in 0..m {
                for y in 0..m {
                    let ex = ring.int_to_element(x).unwrap();
                    let ey = ring.int_to_element(y).unwrap();
                    assert_eq!(ring.add(&ex, &ey), ring.int_to_element((x + y) % m).unwrap());
                    assert_eq!(ring.mul(&ex, &ey), ring.int_to_element(x * y % m).unwrap());
                }
            }
        }
    }

    #[test]
    fn product_element_indexing_roundtrip() {
        let ring = ProductRingSpec::factor_integer(12).unwrap();
        for idx in 0..ring.cardinality() {
            let el = ring.element_at(idx);
            assert_eq!(ring.index_of(&el), idx);
        }
    }

    #[test]
    fn product_arity_mismatch() {
        let z6 = ProductRingSpec::factor_integer(6).unwrap();
        assert!(matches!(
            z6.element(vec![RingElement(1)]),
            Err(Error::DomainMismatch(_))
        ));
    }
}
