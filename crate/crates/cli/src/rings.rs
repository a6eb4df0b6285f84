use std::str::FromStr;

use commutator_core::json::descriptor_from_json;
use commutator_core::ring::{is_prime, Integers, IntegersMod, PolyRing, RingDescriptor};
use commutator_core::{Error, Result};
use num_bigint::BigUint;

/// A concrete ring chosen at run time.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Z(Integers),
    Poly(PolyRing),
    ModN(IntegersMod),
}

impl AnyRing {
    pub fn from_descriptor(d: &RingDescriptor) -> Result<Self> {
        d.validate()?;
        Ok(match d {
            RingDescriptor::Integers => AnyRing::Z(Integers),
            RingDescriptor::PolyOverPrimeField { p } => AnyRing::Poly(PolyRing::new(*p)?),
            RingDescriptor::IntegersModN { n } => AnyRing::ModN(IntegersMod::new(n.clone())),
        })
    }

    /// The prime `p` when the ring is the field `Z/p`.
    pub fn prime_field(&self) -> Option<&IntegersMod> {
        match self {
            AnyRing::ModN(r) if is_prime(r.modulus().magnitude()) => Some(r),
            _ => None,
        }
    }
}

/// Accepts `Z`, `Z/N`, `F<p>[x]`, `Fp[x]:<p>` or a JSON descriptor.
pub fn parse_ring_flag(s: &str) -> Result<RingDescriptor> {
    let s = s.trim();
    let bad = || Error::Parse(format!("unrecognised ring {s:?}; use Z, Z/N or F<p>[x]"));
    let d = if s.starts_with('{') {
        let v = serde_json::from_str(s).map_err(|e| Error::Parse(format!("ring descriptor: {e}")))?;
        return descriptor_from_json(&v);
    } else if s == "Z" {
        RingDescriptor::Integers
    } else if let Some(n) = s.strip_prefix("Z/") {
        RingDescriptor::IntegersModN {
            n: BigUint::from_str(n).map_err(|_| bad())?,
        }
    } else if let Some(p) = s.strip_prefix("Fp[x]:") {
        RingDescriptor::PolyOverPrimeField {
            p: p.parse().map_err(|_| bad())?,
        }
    } else if let Some(p) = s.strip_prefix('F').and_then(|r| r.strip_suffix("[x]")) {
        RingDescriptor::PolyOverPrimeField {
            p: p.parse().map_err(|_| bad())?,
        }
    } else {
        return Err(bad());
    };
    d.validate().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(d)
}
