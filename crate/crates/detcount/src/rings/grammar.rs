//! Text forms of ring specs and elements.
//!
//! Ring specs: `zpe:p^e`, `fqu:q,e` (with `q` a prime power), `z:m` (the
//! integers mod `m`, auto-factored into chain rings), and
//! `prod:(spec;spec;...)` for explicit products.
//!
//! Elements: plain integers for `zpe` and `z:m` rings (reduced into the
//! ring), comma-separated γ-adic digit lists for `fqu` rings (digits index
//! the residue-field enumeration, missing high digits are zero), and
//! `(lit|lit|...)` tuples for `prod` rings.

use super::{AnyElement, AnyRingSpec, ChainRingSpec, Family, ProductRingSpec};
use crate::error::{Error, Result};

impl std::fmt::Display for ChainRingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family() {
            Family::Zpe => write!(f, "zpe:{}^{}", self.p(), self.e()),
            Family::Fqu => write!(f, "fqu:{},{}", self.q(), self.e()),
        }
    }
}

impl std::fmt::Display for ProductRingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(m) = self.modulus() {
            return write!(f, "z:{m}");
        }
        let parts: Vec<String> = self.components().iter().map(|c| c.to_string()).collect();
        write!(f, "prod:({})", parts.join(";"))
    }
}

impl std::fmt::Display for AnyRingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyRingSpec::Chain(c) => c.fmt(f),
            AnyRingSpec::Product(p) => p.fmt(f),
        }
    }
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("expected an integer {what}, got `{s}`")))
}

fn parse_chain_spec(s: &str) -> Result<ChainRingSpec> {
    if let Some(rest) = s.strip_prefix("zpe:") {
        let (p, e) = rest
            .split_once('^')
            .ok_or_else(|| Error::Parse(format!("expected `zpe:p^e`, got `{s}`")))?;
        let p = parse_u64(p, "prime p")?;
        let e = parse_u64(e, "nilpotency index e")?;
        let e = u32::try_from(e).map_err(|_| Error::Parse(format!("e too large in `{s}`")))?;
        return ChainRingSpec::new(Family::Zpe, p, 1, e);
    }
    if let Some(rest) = s.strip_prefix("fqu:") {
        let (q, e) = rest
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `fqu:q,e`, got `{s}`")))?;
        let q = parse_u64(q, "prime power q")?;
        let e = parse_u64(e, "nilpotency index e")?;
        let e = u32::try_from(e).map_err(|_| Error::Parse(format!("e too large in `{s}`")))?;
        let (p, r) = super::prime_power(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        return ChainRingSpec::new(Family::Fqu, p, r, e);
    }
    Err(Error::Parse(format!("unknown ring spec `{s}`")))
}

/// Parses a ring spec string.
pub fn parse_ring_spec(s: &str) -> Result<AnyRingSpec> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("z:") {
        let m = rest
            .trim()
            .parse::<u128>()
            .map_err(|_| Error::Parse(format!("expected an integer modulus, got `{rest}`")))?;
        return Ok(AnyRingSpec::Product(ProductRingSpec::factor_integer(m)?));
    }
    if let Some(rest) = s.strip_prefix("prod:") {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `prod:(spec;...)`, got `{s}`")))?;
        let components = inner
            .split(';')
            .map(|part| parse_chain_spec(part.trim()))
            .collect::<Result<Vec<_>>>()?;
        return Ok(AnyRingSpec::Product(ProductRingSpec::new(components)?));
    }
    Ok(AnyRingSpec::Chain(parse_chain_spec(s)?))
}

fn parse_chain_element(spec: &ChainRingSpec, s: &str) -> Result<super::RingElement> {
    let s = s.trim();
    match spec.family() {
        Family::Zpe => {
            let x = s
                .parse::<u128>()
                .map_err(|_| Error::Parse(format!("expected an integer element, got `{s}`")))?;
            spec.element_from_code((x % spec.size() as u128) as u64)
        }
        Family::Fqu => {
            let digits = s
                .split(',')
                .map(|d| parse_u64(d, "γ-adic digit"))
                .collect::<Result<Vec<_>>>()?;
            spec.element_from_digits(&digits)
        }
    }
}

impl AnyRingSpec {
    /// Parses an element literal in this ring's dialect.
    pub fn parse_element(&self, s: &str) -> Result<AnyElement> {
        let s = s.trim();
        match self {
            AnyRingSpec::Chain(spec) => Ok(AnyElement::Chain(parse_chain_element(spec, s)?)),
            AnyRingSpec::Product(spec) => {
                if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                    let lits: Vec<&str> = inner.split('|').collect();
                    if lits.len() != spec.components().len() {
                        return Err(Error::Parse(format!(
                            "expected {} components, got {}",
                            spec.components().len(),
                            lits.len()
                        )));
                    }
                    let parts = spec
                        .components()
                        .iter()
                        .zip(lits)
                        .map(|(c, lit)| parse_chain_element(c, lit))
                        .collect::<Result<Vec<_>>>()?;
                    return Ok(AnyElement::Product(spec.element(parts)?));
                }
                if spec.modulus().is_some() {
                    let x = s.parse::<u128>().map_err(|_| {
                        Error::Parse(format!("expected an integer element, got `{s}`"))
                    })?;
                    return Ok(AnyElement::Product(spec.int_to_element(x)?));
                }
                Err(Error::Parse(format!("expected `(lit|lit|...)` element, got `{s}`")))
            }
        }
    }

    /// Canonical literal of an element, parseable by [`AnyRingSpec::parse_element`].
    pub fn format_element(&self, a: &AnyElement) -> Result<String> {
        match (self, a) {
            (AnyRingSpec::Chain(spec), AnyElement::Chain(el)) => {
                if !spec.contains(*el) {
                    return Err(Error::DomainMismatch("element does not belong to this ring".into()));
                }
                Ok(match spec.family() {
                    Family::Zpe => el.code().to_string(),
                    Family::Fqu => spec
                        .digits(*el)
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                })
            }
            (AnyRingSpec::Product(spec), AnyElement::Product(el)) => {
                if !spec.contains(el) {
                    return Err(Error::DomainMismatch("element does not belong to this ring".into()));
                }
                if spec.modulus().is_some() {
                    return Ok(spec.element_to_int(el)?.to_string());
                }
                let parts = spec
                    .components()
                    .iter()
                    .zip(el.parts())
                    .map(|(c, &p)| {
                        AnyRingSpec::Chain(c.clone()).format_element(&AnyElement::Chain(p))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(format!("({})", parts.join("|")))
            }
            _ => Err(Error::DomainMismatch("element kind does not match ring kind".into())),
        }
    }
}
