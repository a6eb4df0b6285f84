//! JSON encoding of ring descriptors, matrices and witnesses.
//!
//! Integers travel as decimal strings and polynomials as arrays of
//! decimal-string coefficients, constant term first.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::commutator::CommutatorWitness;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, SimilarityWitness};
use crate::regularity::RegularityCertificate;
use crate::ring::{FpPoly, Integers, IntegersMod, ModInt, PolyRing, Ring, RingDescriptor};
use crate::similarity::{LaffeyReamsForm, ProbeRecord};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn descriptor_to_json(d: &RingDescriptor) -> Map<String, Value> {
    let mut m = Map::new();
    match d {
        RingDescriptor::Integers => {
            m.insert("ring".into(), json!("Z"));
        }
        RingDescriptor::PolyOverPrimeField { p } => {
            m.insert("ring".into(), json!("Fp[x]"));
            m.insert("p".into(), json!(p));
        }
        RingDescriptor::IntegersModN { n } => {
            m.insert("ring".into(), json!("Z/N"));
            m.insert("N".into(), json!(n.to_string()));
        }
    }
    m
}

/// Reads the descriptor fields of an object; extra keys are ignored.
pub fn descriptor_from_json(v: &Value) -> Result<RingDescriptor> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("ring descriptor must be an object"))?;
    let tag = obj
        .get("ring")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing \"ring\" tag"))?;
    let d = match tag {
        "Z" => RingDescriptor::Integers,
        "Fp[x]" => {
            let p = match obj.get("p") {
                Some(Value::Number(n)) => n.as_u64(),
                Some(Value::String(s)) => s.parse().ok(),
                _ => None,
            }
            .ok_or_else(|| parse_err("Fp[x] needs an integer \"p\""))?;
            RingDescriptor::PolyOverPrimeField { p }
        }
        "Z/N" => {
            let n = obj
                .get("N")
                .and_then(|n| match n {
                    Value::String(s) => BigUint::from_str(s).ok(),
                    Value::Number(n) => n.as_u64().map(BigUint::from),
                    _ => None,
                })
                .ok_or_else(|| parse_err("Z/N needs a decimal \"N\""))?;
            RingDescriptor::IntegersModN { n }
        }
        other => return Err(parse_err(format!("unknown ring tag {other:?}"))),
    };
    d.validate().map_err(|e| parse_err(e.to_string()))?;
    Ok(d)
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| parse_err(format!("bad integer {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| parse_err(format!("integer {n} must be given as a decimal string"))),
        other => Err(parse_err(format!("expected an integer, got {other}"))),
    }
}

/// A ring whose elements have a JSON encoding.
pub trait JsonRing: Ring {
    fn json_descriptor(&self) -> RingDescriptor;
    fn elem_to_json(&self, e: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

impl JsonRing for Integers {
    fn json_descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }
    fn elem_to_json(&self, e: &BigInt) -> Value {
        Value::String(e.to_string())
    }
    fn elem_from_json(&self, v: &Value) -> Result<BigInt> {
        int_from_json(v)
    }
}

impl JsonRing for PolyRing {
    fn json_descriptor(&self) -> RingDescriptor {
        RingDescriptor::PolyOverPrimeField { p: self.p() }
    }
    fn elem_to_json(&self, e: &FpPoly) -> Value {
        Value::Array(e.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Result<FpPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| parse_err(format!("expected a coefficient array, got {v}")))?;
        let p = BigInt::from(self.p());
        let coeffs = arr
            .iter()
            .map(|c| {
                let r = ((int_from_json(c)? % &p) + &p) % &p;
                Ok(r.to_u64().expect("residue below p"))
            })
            .collect::<Result<Vec<u64>>>()?;
        Ok(FpPoly::new(self.p(), coeffs))
    }
}

impl JsonRing for IntegersMod {
    fn json_descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegersModN {
            n: self.modulus().magnitude().clone(),
        }
    }
    fn elem_to_json(&self, e: &ModInt) -> Value {
        Value::String(e.value().to_string())
    }
    fn elem_from_json(&self, v: &Value) -> Result<ModInt> {
        Ok(self.elem(int_from_json(v)?))
    }
}

pub fn vector_to_json<R: JsonRing>(ring: &R, v: &[R::Elem]) -> Value {
    Value::Array(v.iter().map(|e| ring.elem_to_json(e)).collect())
}

pub fn vector_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<Vec<R::Elem>> {
    v.as_array()
        .ok_or_else(|| parse_err("expected an array"))?
        .iter()
        .map(|e| ring.elem_from_json(e))
        .collect()
}

pub fn matrix_to_json<R: JsonRing>(ring: &R, m: &Matrix<R::Elem>) -> Value {
    let mut obj = descriptor_to_json(&ring.json_descriptor());
    obj.insert("n".into(), json!(m.rows()));
    let entries = m.to_rows().iter().map(|r| vector_to_json(ring, r)).collect();
    obj.insert("entries".into(), Value::Array(entries));
    Value::Object(obj)
}

/// Parses a matrix, rejecting a ring tag that differs from `ring`.
pub fn matrix_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<Matrix<R::Elem>> {
    let d = descriptor_from_json(v)?;
    let want = ring.json_descriptor();
    if d != want {
        return Err(parse_err(format!("ring tag {d} does not match {want}")));
    }
    let rows = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("matrix needs an \"entries\" array"))?;
    let n = match v.get("n") {
        None => rows.len(),
        Some(n) => n
            .as_u64()
            .ok_or_else(|| parse_err("\"n\" must be a non-negative integer"))? as usize,
    };
    if rows.len() != n {
        return Err(parse_err(format!("\"n\" is {n} but there are {} rows", rows.len())));
    }
    if n == 0 {
        return Err(parse_err("empty matrix"));
    }
    let parsed = rows
        .iter()
        .map(|r| {
            let r = vector_from_json(ring, r)?;
            if r.len() != n {
                return Err(parse_err(format!("row of length {} in a {n}x{n} matrix", r.len())));
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing \"{key}\"")))
}

pub fn similarity_witness_to_json<R: JsonRing>(ring: &R, w: &SimilarityWitness<R::Elem>) -> Value {
    json!({
        "g": matrix_to_json(ring, &w.g),
        "gInverse": matrix_to_json(ring, &w.g_inv),
        "det": ring.elem_to_json(&w.det()),
    })
}

/// The stored `det` is informational and not trusted.
pub fn similarity_witness_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<SimilarityWitness<R::Elem>> {
    let g = matrix_from_json(ring, field(v, "g")?)?;
    let g_inv = matrix_from_json(ring, field(v, "gInverse")?)?;
    if g.n() != g_inv.n() {
        return Err(parse_err("g and gInverse differ in size"));
    }
    Ok(SimilarityWitness { g, g_inv })
}

pub fn commutator_witness_to_json<R: JsonRing>(ring: &R, w: &CommutatorWitness<R::Elem>) -> Value {
    json!({
        "X": matrix_to_json(ring, &w.x),
        "Y": matrix_to_json(ring, &w.y),
        "log": w.log,
    })
}

pub fn commutator_witness_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<CommutatorWitness<R::Elem>> {
    let x = matrix_from_json(ring, field(v, "X")?)?;
    let y = matrix_from_json(ring, field(v, "Y")?)?;
    let log = match v.get("log") {
        None => Vec::new(),
        Some(l) => serde_json::from_value(l.clone()).map_err(|e| parse_err(format!("bad log: {e}")))?,
    };
    Ok(CommutatorWitness { x, y, log })
}

pub fn certificate_to_json<R: JsonRing>(ring: &R, c: &RegularityCertificate<R::Elem>) -> Value {
    json!({
        "vector": vector_to_json(ring, &c.vector),
        "krylovDet": ring.elem_to_json(&c.krylov_det),
    })
}

pub fn certificate_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<RegularityCertificate<R::Elem>> {
    Ok(RegularityCertificate {
        vector: vector_from_json(ring, field(v, "vector")?)?,
        krylov_det: ring.elem_from_json(field(v, "krylovDet")?)?,
    })
}

fn probe_to_json<R: JsonRing>(ring: &R, p: &ProbeRecord<R::Elem>) -> Value {
    json!({
        "probe": p.probe,
        "pivotBefore": ring.elem_to_json(&p.pivot_before),
        "pivotAfter": ring.elem_to_json(&p.pivot_after),
        "factorsBefore": p.factors_before,
        "factorsAfter": p.factors_after,
    })
}

fn probe_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<ProbeRecord<R::Elem>> {
    let count = |key: &str| {
        field(v, key)?
            .as_u64()
            .ok_or_else(|| parse_err(format!("\"{key}\" must be a count")))
    };
    Ok(ProbeRecord {
        probe: field(v, "probe")?
            .as_str()
            .ok_or_else(|| parse_err("\"probe\" must be a string"))?
            .to_string(),
        pivot_before: ring.elem_from_json(field(v, "pivotBefore")?)?,
        pivot_after: ring.elem_from_json(field(v, "pivotAfter")?)?,
        factors_before: count("factorsBefore")?,
        factors_after: count("factorsAfter")?,
    })
}

pub fn lr_form_to_json<R: JsonRing>(ring: &R, f: &LaffeyReamsForm<R::Elem>) -> Value {
    json!({
        "B": matrix_to_json(ring, &f.b),
        "witness": similarity_witness_to_json(ring, &f.witness),
        "pivot": ring.elem_to_json(&f.pivot),
        "probeLog": f.probe_log.iter().map(|p| probe_to_json(ring, p)).collect::<Vec<_>>(),
    })
}

pub fn lr_form_from_json<R: JsonRing>(ring: &R, v: &Value) -> Result<LaffeyReamsForm<R::Elem>> {
    let log = match v.get("probeLog") {
        None => Vec::new(),
        Some(l) => l
            .as_array()
            .ok_or_else(|| parse_err("\"probeLog\" must be an array"))?
            .iter()
            .map(|p| probe_from_json(ring, p))
            .collect::<Result<_>>()?,
    };
    Ok(LaffeyReamsForm {
        b: matrix_from_json(ring, field(v, "B")?)?,
        witness: similarity_witness_from_json(ring, field(v, "witness")?)?,
        pivot: ring.elem_from_json(field(v, "pivot")?)?,
        probe_log: log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{trace_zero_int, trace_zero_mod, trace_zero_poly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn descriptors_round_trip() {
        for d in [
            RingDescriptor::Integers,
            RingDescriptor::PolyOverPrimeField { p: 5 },
            RingDescriptor::IntegersModN {
                n: BigUint::from(12u32),
            },
        ] {
            let v = Value::Object(descriptor_to_json(&d));
            assert_eq!(descriptor_from_json(&v).unwrap(), d);
        }
        assert_eq!(
            Value::Object(descriptor_to_json(&RingDescriptor::IntegersModN {
                n: BigUint::from(12u32)
            })),
            json!({"ring": "Z/N", "N": "12"})
        );
    }

    #[test]
    fn bad_descriptors() {
        for v in [
            json!({"ring": "Q"}),
            json!({"ring": "Fp[x]", "p": 4}),
            json!({"ring": "Z/N", "N": "1"}),
            json!(3),
        ] {
            assert!(matches!(descriptor_from_json(&v), Err(Error::Parse(_))), "{v}");
        }
    }

    #[test]
    fn big_integers_survive() {
        let big = -num_traits::Pow::pow(BigInt::from(3), 100u32);
        let m = Matrix::from_rows(vec![vec![big.clone(), BigInt::from(1)], vec![BigInt::from(0), -big]]).unwrap();
        let v = matrix_to_json(&Integers, &m);
        assert!(v["entries"][0][0]
            .as_str()
            .unwrap()
            .starts_with("-5153775207320113310364611297656212727"));
        assert_eq!(matrix_from_json(&Integers, &v).unwrap(), m);
    }

    #[test]
    fn polynomial_encoding() {
        let r = PolyRing::new(3).unwrap();
        let f = r.poly(&[1, 0, 2]);
        assert_eq!(r.elem_to_json(&f), json!(["1", "0", "2"]));
        assert_eq!(r.elem_to_json(&r.zero()), json!([]));
        assert_eq!(r.elem_from_json(&json!(["4", "-1"])).unwrap(), r.poly(&[1, 2]));
    }

    #[test]
    fn ring_mismatch_is_a_parse_error() {
        let m = Matrix::from_rows(vec![vec![BigInt::from(1)]]).unwrap();
        let v = matrix_to_json(&Integers, &m);
        let r = PolyRing::new(3).unwrap();
        assert!(matches!(matrix_from_json(&r, &v), Err(Error::Parse(_))));
    }

    #[test]
    fn ragged_rows_rejected() {
        let v = json!({"ring": "Z", "n": 2, "entries": [["1", "2"], ["3"]]});
        assert!(matches!(matrix_from_json(&Integers, &v), Err(Error::Parse(_))));
        let v = json!({"ring": "Z", "n": 3, "entries": [["1", "2"], ["3", "4"]]});
        assert!(matches!(matrix_from_json(&Integers, &v), Err(Error::Parse(_))));
    }

    #[test]
    fn witnesses_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = trace_zero_int(&mut rng, 3, 9);
        let w = crate::commutator::decompose(&Integers, &a).unwrap();
        let back = commutator_witness_from_json(&Integers, &commutator_witness_to_json(&Integers, &w)).unwrap();
        assert_eq!((back.x.clone(), back.y.clone(), back.log.clone()), (w.x, w.y, w.log));

        let f = crate::similarity::lr_form(&Integers, &a).unwrap();
        let back = lr_form_from_json(&Integers, &lr_form_to_json(&Integers, &f)).unwrap();
        assert_eq!(back.b, f.b);
        assert_eq!(back.witness, f.witness);
        assert_eq!(back.pivot, f.pivot);
        assert_eq!(back.probe_log.len(), f.probe_log.len());

        let r = PolyRing::new(3).unwrap();
        let ap = trace_zero_poly(&mut rng, 3, 3, 2);
        assert_eq!(matrix_from_json(&r, &matrix_to_json(&r, &ap)).unwrap(), ap);

        let zn = IntegersMod::new(BigUint::from(12u32));
        let am = trace_zero_mod(&mut rng, &zn, 3);
        assert_eq!(matrix_from_json(&zn, &matrix_to_json(&zn, &am)).unwrap(), am);
    }
}
