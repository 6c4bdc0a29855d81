//! Exact `n x n` matrix arithmetic and determinants over chain and product
//! rings.
//!
//! The workhorse determinant is fraction-free unit-pivot elimination: scan
//! each column for a unit pivot, clear the entries below it, and accumulate
//! the pivots. Over a local ring a column without a unit entry consists
//! entirely of zero divisors; those columns are handled by Laplace expansion,
//! which stays exact over any commutative ring. Product rings are handled
//! componentwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rings::{AnyRingSpec, ChainRingSpec, Family, ProductElement, ProductRingSpec, Ring, RingElement};

/// Square matrix in row-major order. Plain data; all arithmetic goes through
/// an explicit ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(n: usize, entries: Vec<E>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be >= 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "a {n}x{n} matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Matrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn at(&self, row: usize, col: usize) -> &E {
        &self.entries[row * self.n + col]
    }
}

/// Identity matrix over `ring`.
pub fn identity<R: Ring>(ring: &R, n: usize) -> Result<Matrix<R::Elem>> {
    diagonal(ring, &vec![ring.one(); n])
}

/// Diagonal matrix with the given entries.
pub fn diagonal<R: Ring>(ring: &R, diag: &[R::Elem]) -> Result<Matrix<R::Elem>> {
    let n = diag.len();
    let mut entries = vec![ring.zero(); n * n];
    for (i, d) in diag.iter().enumerate() {
        entries[i * n + i] = d.clone();
    }
    Matrix::new(n, entries)
}

/// Exact matrix product.
pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.n != b.n {
        return Err(Error::DomainMismatch(format!(
            "cannot multiply a {0}x{0} matrix by a {1}x{1} matrix",
            a.n, b.n
        )));
    }
    let n = a.n;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = ring.zero();
            for k in 0..n {
                acc = ring.add(&acc, &ring.mul(a.at(i, k), b.at(k, j)));
            }
            entries.push(acc);
        }
    }
    Matrix::new(n, entries)
}

/// Determinant by unit-pivot elimination with Laplace fallback, destroying
/// the row-major scratch buffer. `n = 0` yields the empty product 1.
pub(crate) fn det_in_scratch<R: Ring>(ring: &R, n: usize, a: &mut [R::Elem]) -> R::Elem {
    debug_assert_eq!(a.len(), n * n);
    let mut acc = ring.one();
    let mut negate = false;
    for k in 0..n {
        // first unit entry in column k, scanning top to bottom
        let pivot_row = (k..n).find(|&i| ring.is_unit(&a[i * n + k]));
        let Some(i) = pivot_row else {
            let tail = expand_column(ring, n, a, k);
            let tail = if negate { ring.neg(&tail) } else { tail };
            return ring.mul(&acc, &tail);
        };
        if i != k {
            for c in k..n {
                a.swap(i * n + c, k * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        let pivot_inv = ring.unit_inverse(&pivot);
        for j in k + 1..n {
            let factor = ring.mul(&a[j * n + k], &pivot_inv);
            for c in k..n {
                let sub = ring.mul(&factor, &a[k * n + c]);
                a[j * n + c] = ring.sub(&a[j * n + c], &sub);
            }
        }
        acc = ring.mul(&acc, &pivot);
    }
    if negate {
        ring.neg(&acc)
    } else {
        acc
    }
}

/// Laplace expansion of the trailing block `a[k.., k..]` along its first
/// column, reached when that column holds no unit.
fn expand_column<R: Ring>(ring: &R, n: usize, a: &[R::Elem], k: usize) -> R::Elem {
    let m = n - k;
    let mut acc = ring.zero();
    for (off, i) in (k..n).enumerate() {
        let coeff = &a[i * n + k];
        if *coeff == ring.zero() {
            continue;
        }
        let mut minor = Vec::with_capacity((m - 1) * (m - 1));
        for row in k..n {
            if row == i {
                continue;
            }
            for col in k + 1..n {
                minor.push(a[row * n + col].clone());
            }
        }
        let sub = det_in_scratch(ring, m - 1, &mut minor);
        let term = ring.mul(coeff, &sub);
        acc = if off % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Determinant by unit-pivot elimination (with Laplace fallback); valid over
/// any commutative ring, O(n^3) ring operations on the unit-pivot path.
pub fn det_eliminate<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let mut scratch = m.entries.clone();
    det_in_scratch(ring, m.n, &mut scratch)
}

/// Determinant by pure cofactor expansion along the first row. Exponential;
/// kept as an independent route for cross-checking `det_eliminate`.
pub fn det_cofactor<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    fn go<R: Ring>(ring: &R, n: usize, a: &[R::Elem]) -> R::Elem {
        if n == 1 {
            return a[0].clone();
        }
        let mut acc = ring.zero();
        for j in 0..n {
            if a[j] == ring.zero() {
                continue;
            }
            let mut minor = Vec::with_capacity((n - 1) * (n - 1));
            for row in 1..n {
                for col in 0..n {
                    if col != j {
                        minor.push(a[row * n + col].clone());
                    }
                }
            }
            let term = ring.mul(&a[j], &go(ring, n - 1, &minor));
            acc = if j % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
        }
        acc
    }
    go(ring, m.n, &m.entries)
}

/// Ring-specific determinant dispatch.
pub trait Determinant: Ring {
    fn determinant(&self, m: &Matrix<Self::Elem>) -> Self::Elem;
}

impl Determinant for ChainRingSpec {
    fn determinant(&self, m: &Matrix<RingElement>) -> RingElement {
        det_eliminate(self, m)
    }
}

impl Determinant for ProductRingSpec {
    /// Componentwise: project per component, eliminate there, recombine.
    fn determinant(&self, m: &Matrix<ProductElement>) -> ProductElement {
        let parts = self
            .components()
            .iter()
            .enumerate()
            .map(|(idx, comp)| {
                let mut scratch: Vec<RingElement> =
                    m.entries.iter().map(|e| e.parts()[idx]).collect();
                det_in_scratch(comp, m.n, &mut scratch)
            })
            .collect();
        self.element(parts).expect("projection preserves validity")
    }
}

/// Uniform matrix with entries drawn independently and uniformly from the
/// canonical enumeration; fully determined by `(ring, n, seed)`.
pub fn random_matrix<R: Ring>(ring: &R, n: usize, seed: u64) -> Result<Matrix<R::Elem>> {
    if n == 0 {
        return Err(Error::InvalidParameter("matrix dimension must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let card = ring.cardinality();
    let entries = (0..n * n).map(|_| ring.element_at(rng.gen_range(0..card))).collect();
    Matrix::new(n, entries)
}

/// Parses the row-major matrix literal `a,b;c,d` over a chain ring. Entries
/// are canonical element codes; for `zpe` rings (where the code is the
/// integer itself) they are reduced into the ring.
pub fn parse_matrix(spec: &ChainRingSpec, s: &str) -> Result<Matrix<RingElement>> {
    let rows: Vec<&str> = s.trim().split(';').collect();
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for row in &rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} entries per row, got {} in `{row}`",
                cells.len()
            )));
        }
        for cell in cells {
            let code = cell
                .trim()
                .parse::<u128>()
                .map_err(|_| Error::Parse(format!("bad matrix entry `{cell}`")))?;
            let code = match spec.family() {
                Family::Zpe => (code % spec.size() as u128) as u64,
                Family::Fqu => u64::try_from(code)
                    .map_err(|_| Error::Parse(format!("bad matrix entry `{cell}`")))?,
            };
            entries.push(spec.element_from_code(code)?);
        }
    }
    Matrix::new(n, entries)
}

/// Determinant of a matrix literal over any parsed ring, as a canonical
/// element literal. Convenience wrapper used by tests.
pub fn determinant_of_literal(ring: &AnyRingSpec, s: &str) -> Result<String> {
    match ring {
        AnyRingSpec::Chain(spec) => {
            let m = parse_matrix(spec, s)?;
            let det = spec.determinant(&m);
            ring.format_element(&crate::rings::AnyElement::Chain(det))
        }
        AnyRingSpec::Product(spec) => {
            let chain_entries: Vec<Vec<RingElement>> = s
                .trim()
                .split(';')
                .flat_map(|row| row.split(','))
                .map(|cell| {
                    let x = cell.trim().parse::<u128>().map_err(|_| {
                        Error::Parse(format!("bad matrix entry `{cell}`"))
                    })?;
                    Ok(spec.int_to_element(x)?.parts().to_vec())
                })
                .collect::<Result<_>>()?;
            let n = s.trim().split(';').count();
            let entries = chain_entries
                .into_iter()
                .map(|parts| spec.element(parts))
                .collect::<Result<Vec<_>>>()?;
            let m = Matrix::new(n, entries)?;
            let det = spec.determinant(&m);
            ring.format_element(&crate::rings::AnyElement::Product(det))
        }
    }
}
