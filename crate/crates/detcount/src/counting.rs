//! Closed-form counts of `n x n` matrices with a fixed determinant over a
//! chain ring with residue field `F_q` and nilpotency index `e`.
//!
//! Every count is evaluated twice:
//!
//! * through an integer rearrangement (prime-power times a product of
//!   `q^i - 1` factors) that never leaves the integers, and
//! * in debug builds, through the literal rational form in [`rational`],
//!   which must cancel to an integer exactly.
//!
//! A mismatch or a leftover denominator aborts; counts are never rounded.
//!
//! The count `d_n(R, a)` depends on `a` only through its γ-adic valuation
//! `s`: `s = 0` (units), `1 <= s <= e-1` (zero divisors), and `s = e`
//! (zero) are the three regimes, and product rings multiply componentwise.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{
    prime_power, AnyRingSpec, ChainRingSpec, ProductElement, ProductRingSpec, RingElement,
};

fn qpow(q: u64, exp: i128) -> BigUint {
    let exp = u32::try_from(exp).expect("exponent must be a small nonnegative integer");
    num_traits::Pow::pow(BigUint::from(q), exp)
}

fn validate(q: u64, e: u32, n: u32) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidParameter(format!("q must be a prime power >= 2, got {q}")));
    }
    if e < 1 {
        return Err(Error::InvalidParameter("nilpotency index e must be >= 1".into()));
    }
    if n < 1 {
        return Err(Error::InvalidParameter("matrix dimension n must be >= 1".into()));
    }
    Ok(())
}

/// `|GL_n(R)| = q^{en^2} Π_{i=1..n} (1 - q^{-i})`, evaluated as
/// `q^{en^2 - n(n+1)/2} Π_{i=1..n} (q^i - 1)`.
pub fn count_gl(q: u64, e: u32, n: u32) -> Result<BigUint> {
    validate(q, e, n)?;
    let (e, n) = (e as i128, n as i128);
    let exp = e * n * n - n * (n + 1) / 2;
    debug_assert!(exp >= 0);
    let mut acc = qpow(q, exp);
    for i in 1..=n {
        acc *= qpow(q, i) - 1u32;
    }
    debug_assert_eq!(acc, rational::count_gl(q, e as u32, n as u32).unwrap());
    Ok(acc)
}

/// `d_n(R, b) = q^{e(n^2-1)} Π_{i=2..n} (1 - q^{-i})` for every unit `b`,
/// evaluated as `q^{e(n^2-1) - (n(n+1)/2 - 1)} Π_{i=2..n} (q^i - 1)`.
/// Also re-derived as `|GL_n(R)| / |U(R)|`, which must divide exactly.
pub fn count_det_one(q: u64, e: u32, n: u32) -> Result<BigUint> {
    validate(q, e, n)?;
    let (ei, ni) = (e as i128, n as i128);
    let exp = ei * (ni * ni - 1) - (ni * (ni + 1) / 2 - 1);
    debug_assert!(exp >= 0);
    let mut acc = qpow(q, exp);
    for i in 2..=ni {
        acc *= qpow(q, i) - 1u32;
    }
    // |GL_n(R)| = |U(R)| d_n(R,1): division must be exact
    let units = class_size(q, e, 0)?;
    let gl = count_gl(q, e, n)?;
    assert!((&gl % &units).is_zero(), "|U(R)| must divide |GL_n(R)|");
    assert_eq!(&gl / &units, acc, "unit-count route disagrees with the closed form");
    debug_assert_eq!(acc, rational::count_det_one(q, e, n).unwrap());
    Ok(acc)
}

/// `d_n(R, 0) = q^{en^2} (1 - Π_{i=0..n-1} (1 - q^{-e-i}))`, evaluated as
/// `q^{en^2} - q^{en^2 - Σ(e+i)} Π_{i=0..n-1} (q^{e+i} - 1)`.
pub fn count_det_zero(q: u64, e: u32, n: u32) -> Result<BigUint> {
    validate(q, e, n)?;
    let (ei, ni) = (e as i128, n as i128);
    let total_exp = ei * ni * ni;
    let exp = total_exp - (ei * ni + ni * (ni - 1) / 2);
    debug_assert!(exp >= 0);
    let mut survivors = qpow(q, exp);
    for i in 0..ni {
        survivors *= qpow(q, ei + i) - 1u32;
    }
    let acc = qpow(q, total_exp) - survivors;
    debug_assert_eq!(acc, rational::count_det_zero(q, e, n).unwrap());
    Ok(acc)
}

/// `d_n(R, γ^s) = ((q^n - 1)/(q - 1)) q^{en^2 - n - e + 1}
/// Π_{i=1..n-1} (1 - q^{-s-i})` for zero divisors, `1 <= s <= e-1`.
/// The geometric quotient is evaluated as `1 + q + ... + q^{n-1}`.
pub fn count_det_gamma(q: u64, e: u32, n: u32, s: u32) -> Result<BigUint> {
    validate(q, e, n)?;
    if e < 2 {
        return Err(Error::InvalidParameter(
            "zero-divisor counts need nilpotency e >= 2".into(),
        ));
    }
    if s < 1 || s >= e {
        return Err(Error::InvalidParameter(format!(
            "zero-divisor valuation must lie in 1..={}, got {s}",
            e - 1
        )));
    }
    let (ei, ni, si) = (e as i128, n as i128, s as i128);
    let mut geom = BigUint::zero();
    for i in 0..ni {
        geom += qpow(q, i);
    }
    let exp = ei * ni * ni - ni - ei + 1 - ((ni - 1) * si + ni * (ni - 1) / 2);
    debug_assert!(exp >= 0);
    let mut acc = geom * qpow(q, exp);
    for i in 1..ni {
        acc *= qpow(q, si + i) - 1u32;
    }
    debug_assert_eq!(acc, rational::count_det_gamma(q, e, n, s).unwrap());
    Ok(acc)
}

/// Number of ring elements of γ-adic valuation `s`: `(q-1) q^{e-1-s}` for
/// `s < e`, and 1 for the zero class `s = e`.
pub fn class_size(q: u64, e: u32, s: u32) -> Result<BigUint> {
    validate(q, e, 1)?;
    if s > e {
        return Err(Error::InvalidParameter(format!(
            "valuation must lie in 0..={e}, got {s}"
        )));
    }
    if s == e {
        Ok(BigUint::one())
    } else {
        Ok(BigUint::from(q - 1) * qpow(q, (e - 1 - s) as i128))
    }
}

/// `d_n(R, a)` for any `a` of valuation `s`: dispatches to the unit, zero, or
/// zero-divisor formula.
pub fn count_for_valuation(q: u64, e: u32, n: u32, s: u32) -> Result<BigUint> {
    if s > e {
        return Err(Error::InvalidParameter(format!(
            "valuation must lie in 0..={e}, got {s}"
        )));
    }
    if s == 0 {
        count_det_one(q, e, n)
    } else if s == e {
        count_det_zero(q, e, n)
    } else {
        count_det_gamma(q, e, n, s)
    }
}

/// `d_n(R, a)` over a chain ring; depends on `a` only through its valuation.
pub fn count_det(spec: &ChainRingSpec, a: RingElement, n: u32) -> Result<BigUint> {
    if !spec.contains(a) {
        return Err(Error::DomainMismatch(format!(
            "element code {} out of range for a ring of {} elements",
            a.code(),
            spec.size()
        )));
    }
    count_for_valuation(spec.q(), spec.e(), n, spec.valuation(a))
}

/// `d_n(R, r)` over a product ring: the product of the component counts at
/// the component projections of `r`.
pub fn count_det_product(pspec: &ProductRingSpec, r: &ProductElement, n: u32) -> Result<BigUint> {
    if !pspec.contains(r) {
        return Err(Error::DomainMismatch("element does not belong to this ring".into()));
    }
    let mut acc = BigUint::one();
    for (comp, &part) in pspec.components().iter().zip(r.parts()) {
        acc *= count_det(comp, part, n)?;
    }
    Ok(acc)
}

/// One valuation class of a [`ClassTable`].
#[derive(Debug, Clone)]
pub struct ClassRow {
    /// Component valuations (a single entry for chain rings).
    pub key: Vec<u32>,
    pub label: String,
    pub class_size: BigUint,
    pub count_per_element: BigUint,
    pub class_total: BigUint,
}

/// Counts per valuation class, with the grand total asserted equal to the
/// number of all `n x n` matrices.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub n: u32,
    pub rows: Vec<ClassRow>,
    pub grand_total: BigUint,
}

/// JSON form of a class row; big integers are decimal strings.
#[derive(Debug, Serialize)]
pub struct ClassRowJson {
    pub s: String,
    pub class_size: String,
    pub count_per_element: String,
    pub class_total: String,
}

/// JSON form of a class table.
#[derive(Debug, Serialize)]
pub struct ClassTableJson {
    pub ring: String,
    pub n: u32,
    pub rows: Vec<ClassRowJson>,
    pub grand_total: String,
}

impl ClassTable {
    fn from_rows(n: u32, rows: Vec<ClassRow>, expected_total: BigUint) -> Self {
        let grand_total: BigUint = rows.iter().map(|r| &r.class_total).sum();
        assert_eq!(
            grand_total, expected_total,
            "class totals must sum to the full matrix count"
        );
        ClassTable { n, rows, grand_total }
    }

    pub fn to_json_doc(&self, ring: &str) -> ClassTableJson {
        ClassTableJson {
            ring: ring.to_string(),
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| ClassRowJson {
                    s: r.label.clone(),
                    class_size: r.class_size.to_string(),
                    count_per_element: r.count_per_element.to_string(),
                    class_total: r.class_total.to_string(),
                })
                .collect(),
            grand_total: self.grand_total.to_string(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,class_size,count_per_element,class_total,grand_total\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.label, r.class_size, r.count_per_element, r.class_total, self.grand_total
            ));
        }
        out
    }
}

/// Per-valuation-class table for a chain ring: one row per `s` in `0..=e`.
pub fn full_table(spec: &ChainRingSpec, n: u32) -> Result<ClassTable> {
    let (q, e) = (spec.q(), spec.e());
    validate(q, e, n)?;
    let mut rows = Vec::with_capacity(e as usize + 1);
    for s in 0..=e {
        let class_size = class_size(q, e, s)?;
        let count_per_element = count_for_valuation(q, e, n, s)?;
        let class_total = &class_size * &count_per_element;
        rows.push(ClassRow { key: vec![s], label: s.to_string(), class_size, count_per_element, class_total });
    }
    let sizes: BigUint = rows.iter().map(|r| &r.class_size).sum();
    assert_eq!(sizes, BigUint::from(spec.size()), "class sizes must sum to |R|");
    let expected = qpow(q, e as i128 * (n as i128) * (n as i128));
    Ok(ClassTable::from_rows(n, rows, expected))
}

/// Per-class table for a product ring: one row per tuple of component
/// valuations, in odometer order (last component fastest).
pub fn product_table(pspec: &ProductRingSpec, n: u32) -> Result<ClassTable> {
    if n < 1 {
        return Err(Error::InvalidParameter("matrix dimension n must be >= 1".into()));
    }
    let comps = pspec.components();
    let mut key: Vec<u32> = vec![0; comps.len()];
    let mut rows = Vec::new();
    loop {
        let mut size = BigUint::one();
        let mut per = BigUint::one();
        for (c, &s) in comps.iter().zip(&key) {
            size *= class_size(c.q(), c.e(), s)?;
            per *= count_for_valuation(c.q(), c.e(), n, s)?;
        }
        let label = format!(
            "({})",
            key.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("|")
        );
        rows.push(ClassRow {
            key: key.clone(),
            label,
            class_size: size.clone(),
            count_per_element: per.clone(),
            class_total: size * per,
        });
        // odometer increment, last component fastest
        let mut pos = comps.len();
        loop {
            if pos == 0 {
                let mut expected = BigUint::one();
                for c in comps {
                    expected *= qpow(c.q(), c.e() as i128 * (n as i128) * (n as i128));
                }
                return Ok(ClassTable::from_rows(n, rows, expected));
            }
            pos -= 1;
            if key[pos] < comps[pos].e() {
                key[pos] += 1;
                break;
            }
            key[pos] = 0;
        }
    }
}

/// Class table for any parsed ring.
pub fn table_for(ring: &AnyRingSpec, n: u32) -> Result<ClassTable> {
    match ring {
        AnyRingSpec::Chain(spec) => full_table(spec, n),
        AnyRingSpec::Product(spec) => product_table(spec, n),
    }
}

/// Checks the zero-count recurrence
/// `d_n(R,0) = (q^{en} - q^{(e-1)n}) q^{e(n-1)} d_{n-1}(R,0)
///  + q^{(n-1)n} d_n(R/γ^{e-1}R, 0)` exactly. Needs `e >= 2` (the quotient)
/// and `n >= 2` (the paper gives no `d_0` convention).
pub fn check_zero_recurrence(q: u64, e: u32, n: u32) -> Result<bool> {
    validate(q, e, n)?;
    if e < 2 || n < 2 {
        return Err(Error::InvalidParameter(
            "the zero-count recurrence needs e >= 2 and n >= 2".into(),
        ));
    }
    let (ei, ni) = (e as i128, n as i128);
    let lhs = count_det_zero(q, e, n)?;
    let first = (qpow(q, ei * ni) - qpow(q, (ei - 1) * ni))
        * qpow(q, ei * (ni - 1))
        * count_det_zero(q, e, n - 1)?;
    let second = qpow(q, (ni - 1) * ni) * count_det_zero(q, e - 1, n)?;
    Ok(lhs == first + second)
}

/// Checks the zero-divisor lifting identity
/// `d_n(R, γ^s) = q^{f(n^2-1)} d_n(R/γ^eR, γ^s)` for a ring of nilpotency
/// `e + f`, with `e >= 2`, `f >= 1`, `1 <= s < e`. Exact comparison.
pub fn check_lift_identity(q: u64, e: u32, f: u32, n: u32, s: u32) -> Result<bool> {
    validate(q, e, n)?;
    if e < 2 || f < 1 || s < 1 || s >= e {
        return Err(Error::InvalidParameter(
            "the lifting identity needs e >= 2, f >= 1 and 1 <= s < e".into(),
        ));
    }
    let lifted = count_det_gamma(q, e + f, n, s)?;
    let ni = n as i128;
    let rhs = qpow(q, f as i128 * (ni * ni - 1)) * count_det_gamma(q, e, n, s)?;
    Ok(lifted == rhs)
}

/// The closed forms in their literal rational shape. Each evaluation asserts
/// that the rationals cancel to an exact integer; any remainder panics. Used
/// as the cross-route for the integer rearrangements in the parent module.
pub mod rational {
    use num_bigint::{BigInt, BigUint};
    use num_rational::BigRational;
    use num_traits::{One, Pow, Signed};

    use super::validate;
    use crate::error::{Error, Result};

    fn q_ratio_pow(q: u64, exp: i64) -> BigRational {
        let mag = Pow::pow(BigInt::from(q), exp.unsigned_abs() as u32);
        if exp >= 0 {
            BigRational::from_integer(mag)
        } else {
            BigRational::new(BigInt::one(), mag)
        }
    }

    fn one_minus_qpow(q: u64, exp: i64) -> BigRational {
        BigRational::one() - q_ratio_pow(q, exp)
    }

    fn finish(value: BigRational, what: &str) -> BigUint {
        assert!(
            value.is_integer(),
            "{what} left a denominator of {}; the formula must cancel exactly",
            value.denom()
        );
        assert!(!value.is_negative(), "{what} must be nonnegative");
        value.to_integer().to_biguint().expect("nonnegative integer")
    }

    pub fn count_gl(q: u64, e: u32, n: u32) -> Result<BigUint> {
        validate(q, e, n)?;
        let mut acc = q_ratio_pow(q, e as i64 * (n as i64).pow(2));
        for i in 1..=n as i64 {
            acc *= one_minus_qpow(q, -i);
        }
        Ok(finish(acc, "|GL_n|"))
    }

    pub fn count_det_one(q: u64, e: u32, n: u32) -> Result<BigUint> {
        validate(q, e, n)?;
        let mut acc = q_ratio_pow(q, e as i64 * ((n as i64).pow(2) - 1));
        for i in 2..=n as i64 {
            acc *= one_minus_qpow(q, -i);
        }
        Ok(finish(acc, "d_n(R,1)"))
    }

    pub fn count_det_zero(q: u64, e: u32, n: u32) -> Result<BigUint> {
        validate(q, e, n)?;
        let mut prod = BigRational::one();
        for i in 0..n as i64 {
            prod *= one_minus_qpow(q, -(e as i64) - i);
        }
        let acc = q_ratio_pow(q, e as i64 * (n as i64).pow(2)) * (BigRational::one() - prod);
        Ok(finish(acc, "d_n(R,0)"))
    }

    pub fn count_det_gamma(q: u64, e: u32, n: u32, s: u32) -> Result<BigUint> {
        validate(q, e, n)?;
        if e < 2 || s < 1 || s >= e {
            return Err(Error::InvalidParameter(
                "zero-divisor counts need e >= 2 and 1 <= s < e".into(),
            ));
        }
        let (ei, ni) = (e as i64, n as i64);
        let geom = BigRational::new(
            Pow::pow(BigInt::from(q), n) - BigInt::one(),
            BigInt::from(q) - BigInt::one(),
        );
        let mut acc = geom * q_ratio_pow(q, ei * ni * ni - ni - ei + 1);
        for i in 1..ni {
            acc *= one_minus_qpow(q, -(s as i64) - i);
        }
        Ok(finish(acc, "d_n(R,γ^s)"))
    }

    /// Valuation dispatch, mirroring [`super::count_for_valuation`].
    pub fn count_for_valuation(q: u64, e: u32, n: u32, s: u32) -> Result<BigUint> {
        if s == 0 {
            count_det_one(q, e, n)
        } else if s == e {
            count_det_zero(q, e, n)
        } else {
            count_det_gamma(q, e, n, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Family;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn gl_counts() {
        assert_eq!(count_gl(2, 1, 2).unwrap(), big(6));
        assert_eq!(count_gl(2, 2, 2).unwrap(), big(96));
        assert_eq!(count_gl(3, 1, 1).unwrap(), big(2));
    }

    #[test]
    fn unit_determinant_counts() {
        assert_eq!(count_det_one(2, 2, 2).unwrap(), big(48));
        assert_eq!(count_det_one(2, 3, 2).unwrap(), big(384));
        for (q, e) in [(2, 1), (3, 2), (4, 2), (9, 1)] {
            assert_eq!(count_det_one(q, e, 1).unwrap(), big(1));
        }
    }

    #[test]
    fn zero_determinant_counts() {
        assert_eq!(count_det_zero(2, 2, 2).unwrap(), big(88));
        assert_eq!(count_det_zero(2, 1, 2).unwrap(), big(10));
        for (q, e) in [(2, 1), (3, 2), (4, 2), (9, 1)] {
            assert_eq!(count_det_zero(q, e, 1).unwrap(), big(1));
        }
    }

    #[test]
    fn zero_divisor_counts() {
        assert_eq!(count_det_gamma(2, 2, 2, 1).unwrap(), big(72));
        assert_eq!(count_det_gamma(2, 3, 2, 2).unwrap(), big(672));
        assert_eq!(count_det_gamma(2, 3, 2, 1).unwrap(), big(576));
        for (q, e, s) in [(2, 2, 1), (3, 3, 2), (4, 2, 1)] {
            assert_eq!(count_det_gamma(q, e, 1, s).unwrap(), big(1));
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(count_gl(6, 1, 2).is_err()); // not a prime power
        assert!(count_gl(2, 0, 2).is_err());
        assert!(count_gl(2, 1, 0).is_err());
        assert!(count_det_gamma(2, 1, 2, 1).is_err()); // fields have no zero divisors
        assert!(count_det_gamma(2, 3, 2, 0).is_err());
        assert!(count_det_gamma(2, 3, 2, 3).is_err());
        assert!(class_size(2, 3, 4).is_err());
        assert!(check_zero_recurrence(2, 1, 2).is_err());
        assert!(check_zero_recurrence(2, 2, 1).is_err());
        assert!(check_lift_identity(2, 2, 0, 2, 1).is_err());
        assert!(check_lift_identity(2, 1, 1, 2, 1).is_err());
        assert!(check_lift_identity(2, 3, 1, 2, 3).is_err());
    }

    #[test]
    fn dispatch_by_valuation() {
        let z4 = ChainRingSpec::new(Family::Zpe, 2, 1, 2).unwrap();
        let el = |c| z4.element_from_code(c).unwrap();
        assert_eq!(count_det(&z4, el(3), 2).unwrap(), big(48));
        assert_eq!(count_det(&z4, el(1), 2).unwrap(), big(48));
        assert_eq!(count_det(&z4, el(2), 2).unwrap(), big(72));
        assert_eq!(count_det(&z4, el(0), 2).unwrap(), big(88));
        assert!(count_det(&z4, RingElement::from_code_unchecked_for_tests(9), 2).is_err());
    }

    #[test]
    fn product_counts_over_z6() {
        let z6 = ProductRingSpec::factor_integer(6).unwrap();
        let d = |x: u128| count_det_product(&z6, &z6.int_to_element(x).unwrap(), 2).unwrap();
        assert_eq!(d(1), big(144));
        assert_eq!(d(3), big(198));
        assert_eq!(d(0), big(330));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(2, 3, 1).unwrap(), big(2));
        assert_eq!(class_size(2, 3, 3).unwrap(), big(1));
        assert_eq!(class_size(3, 2, 0).unwrap(), big(6));
    }

    #[test]
    fn chain_ring_tables() {
        let z4 = ChainRingSpec::new(Family::Zpe, 2, 1, 2).unwrap();
        let t = full_table(&z4, 2).unwrap();
        let rows: Vec<(u64, u64)> = t
            .rows
            .iter()
            .map(|r| {
                (
                    u64::try_from(&r.class_size).unwrap(),
                    u64::try_from(&r.count_per_element).unwrap(),
                )
            })
            .collect();
        assert_eq!(rows, vec![(2, 48), (1, 72), (1, 88)]);
        assert_eq!(t.grand_total, big(256));

        let z8 = ChainRingSpec::new(Family::Zpe, 2, 1, 3).unwrap();
        let t = full_table(&z8, 2).unwrap();
        let rows: Vec<(u64, u64)> = t
            .rows
            .iter()
            .map(|r| {
                (
                    u64::try_from(&r.class_size).unwrap(),
                    u64::try_from(&r.count_per_element).unwrap(),
                )
            })
            .collect();
        assert_eq!(rows, vec![(4, 384), (2, 576), (1, 672), (1, 736)]);
        assert_eq!(t.grand_total, big(4096));

        let f2 = ChainRingSpec::new(Family::Zpe, 2, 1, 1).unwrap();
        let t = full_table(&f2, 1).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.grand_total, big(2));
        for r in &t.rows {
            assert_eq!(r.class_size, big(1));
            assert_eq!(r.count_per_element, big(1));
        }
    }

    #[test]
    fn product_tables_match_componentwise_products() {
        let z6 = ProductRingSpec::factor_integer(6).unwrap();
        let t = product_table(&z6, 2).unwrap();
        assert_eq!(t.rows.len(), 4); // (0|0), (0|1), (1|0), (1|1)
        assert_eq!(t.grand_total, big(1296));
        let labels: Vec<&str> = t.rows.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, vec!["(0|0)", "(0|1)", "(1|0)", "(1|1)"]);
    }

    #[test]
    fn recurrence_examples() {
        assert!(check_zero_recurrence(2, 2, 2).unwrap());
        assert!(check_zero_recurrence(2, 3, 2).unwrap());
        assert!(check_zero_recurrence(3, 2, 2).unwrap());
    }

    #[test]
    fn lift_examples() {
        assert!(check_lift_identity(2, 2, 1, 2, 1).unwrap());
        assert!(check_lift_identity(2, 2, 2, 2, 1).unwrap());
        assert!(check_lift_identity(3, 2, 1, 2, 1).unwrap());
    }

    #[test]
    fn rational_route_agrees() {
        for q in [2u64, 3, 4, 9] {
            for e in 1..=3 {
                for n in 1..=3 {
                    assert_eq!(count_gl(q, e, n).unwrap(), rational::count_gl(q, e, n).unwrap());
                    assert_eq!(
                        count_det_zero(q, e, n).unwrap(),
                        rational::count_det_zero(q, e, n).unwrap()
                    );
                    for s in 1..e {
                        assert_eq!(
                            count_det_gamma(q, e, n, s).unwrap(),
                            rational::count_det_gamma(q, e, n, s).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn csv_and_json_shapes() {
        let z4 = ChainRingSpec::new(Family::Zpe, 2, 1, 2).unwrap();
        let t = full_table(&z4, 2).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("s,class_size,count_per_element,class_total,grand_total\n"));
        assert!(csv.contains("1,1,72,72,256"));
        let doc = t.to_json_doc("zpe:2^2");
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["rows"][0]["count_per_element"], "48");
        assert_eq!(json["grand_total"], "256");
    }
}
