use commutator_core::commutator::{
    decompose as decompose_pid, decompose_3x3_regular, decompose_mod_n, field_commutator, CommutatorWitness,
};
use commutator_core::json::{
    certificate_to_json, commutator_witness_from_json, commutator_witness_to_json, lr_form_to_json, matrix_from_json,
    matrix_to_json, similarity_witness_from_json, similarity_witness_to_json, vector_to_json, JsonRing,
};
use commutator_core::matrix::Matrix;
use commutator_core::matrix::SimilarityWitness;
use commutator_core::oracle::{
    brute_regularity, reduce_int, small_commutator, small_mul, to_small, SmallMatrix, VECTOR_BUDGET,
};
use commutator_core::regularity::{
    find_cyclic_vector, is_regular_field, is_regular_mod_prime, is_regular_over_fractions,
};
use commutator_core::ring::{Pid, RingElem};
use commutator_core::similarity::{lr_form, zero_diagonal_form};
use commutator_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::rings::AnyRing;

/// Primes used by the oracle when checking integer data.
const ORACLE_PRIMES_Z: [u64; 4] = [2, 3, 5, 7];

fn witness_json<R: JsonRing>(ring: &R, a: &Matrix<R::Elem>, w: &CommutatorWitness<R::Elem>) -> Value {
    let mut v = commutator_witness_to_json(ring, w);
    v["A"] = matrix_to_json(ring, a);
    v["verified"] = json!(true);
    v
}

fn decompose_over<R: Pid + JsonRing>(ring: &R, item: &Value, regular_x: bool) -> Result<Value> {
    let a = matrix_from_json(ring, item)?;
    if !regular_x {
        let w = decompose_pid(ring, &a)?;
        w.verify(&a)?;
        return Ok(witness_json(ring, &a, &w));
    }
    let r = decompose_3x3_regular(ring, &a)?;
    r.witness.verify(&a)?;
    if !r.certificate_holds() {
        return Err(Error::WitnessInvalid(
            "X(X + y) differs from E31 in normal-form coordinates".into(),
        ));
    }
    let mut v = witness_json(ring, &a, &r.witness);
    v["y"] = ring.elem_to_json(&r.y);
    v["XNormal"] = matrix_to_json(ring, &r.x_normal);
    v["conjugator"] = similarity_witness_to_json(ring, &r.conjugator);
    v["certificateHolds"] = json!(true);
    Ok(v)
}

pub fn decompose(ring: &AnyRing, item: &Value, regular_x: bool) -> Result<Value> {
    match ring {
        AnyRing::Z(r) => decompose_over(r, item, regular_x),
        AnyRing::Poly(r) => decompose_over(r, item, regular_x),
        AnyRing::ModN(_) if regular_x => Err(Error::Precondition("--regular-x needs Z or Fp[x]".into())),
        AnyRing::ModN(r) => {
            let a = matrix_from_json(r, item)?;
            let w = decompose_mod_n(r, &a)?;
            w.verify(&a)?;
            Ok(witness_json(r, &a, &w))
        }
    }
}

pub fn field_decompose(ring: &AnyRing, item: &Value) -> Result<Value> {
    let field = ring
        .prime_field()
        .ok_or_else(|| Error::Precondition("field-decompose needs a prime field Z/p".into()))?;
    let a = matrix_from_json(field, item)?;
    let w = field_commutator(&a)?;
    w.verify(&a)?;
    let reg = is_regular_field(&w.x);
    let mut v = witness_json(field, &a, &w);
    v["xRegular"] = json!(reg.regular);
    v["cyclicVector"] = reg.cyclic_vector.map_or(Value::Null, |c| vector_to_json(field, &c));
    Ok(v)
}

fn normal_form_over<R: Pid + JsonRing>(ring: &R, item: &Value) -> Result<Value> {
    let a = matrix_from_json(ring, item)?;
    let f = lr_form(ring, &a)?;
    f.witness.verify(&a, &f.b)?;
    let mut v = lr_form_to_json(ring, &f);
    v["A"] = matrix_to_json(ring, &a);
    v["verified"] = json!(true);
    Ok(v)
}

fn zero_diag_over<R: Pid + JsonRing>(ring: &R, item: &Value) -> Result<Value> {
    let a = matrix_from_json(ring, item)?;
    let (b, w) = zero_diagonal_form(ring, &a)?;
    w.verify(&a, &b)?;
    Ok(json!({
        "A": matrix_to_json(ring, &a),
        "B": matrix_to_json(ring, &b),
        "witness": similarity_witness_to_json(ring, &w),
        "verified": true,
    }))
}

fn needs_pid(verb: &str) -> Error {
    Error::Precondition(format!("{verb} needs a principal ideal domain: Z or Fp[x]"))
}

pub fn normal_form(ring: &AnyRing, item: &Value) -> Result<Value> {
    match ring {
        AnyRing::Z(r) => normal_form_over(r, item),
        AnyRing::Poly(r) => normal_form_over(r, item),
        AnyRing::ModN(_) => Err(needs_pid("normal-form")),
    }
}

pub fn zero_diag(ring: &AnyRing, item: &Value) -> Result<Value> {
    match ring {
        AnyRing::Z(r) => zero_diag_over(r, item),
        AnyRing::Poly(r) => zero_diag_over(r, item),
        AnyRing::ModN(_) => Err(needs_pid("zero-diag")),
    }
}

/// The part of a verify job that is checked exactly.
enum Claim<E> {
    Commutator {
        a: Matrix<E>,
        x: Matrix<E>,
        y: Matrix<E>,
    },
    Similar {
        a: Matrix<E>,
        b: Matrix<E>,
        g: Matrix<E>,
        g_inv: Matrix<E>,
    },
}

fn parse_claim<R: JsonRing>(ring: &R, item: &Value) -> Result<Claim<R::Elem>> {
    let a = matrix_from_json(ring, item.get("A").ok_or_else(|| Error::Parse("missing \"A\"".into()))?)?;
    if item.get("X").is_some() {
        let w = commutator_witness_from_json(ring, item)?;
        return Ok(Claim::Commutator { a, x: w.x, y: w.y });
    }
    if let (Some(b), Some(w)) = (item.get("B"), item.get("witness")) {
        let b = matrix_from_json(ring, b)?;
        let w = similarity_witness_from_json(ring, w)?;
        return Ok(Claim::Similar {
            a,
            b,
            g: w.g,
            g_inv: w.g_inv,
        });
    }
    Err(Error::Parse(
        "verify needs \"X\" and \"Y\", or \"B\" and \"witness\"".into(),
    ))
}

fn check_claim<E: RingElem>(claim: &Claim<E>) -> Result<&'static str> {
    match claim {
        Claim::Commutator { a, x, y } => {
            CommutatorWitness::new(x.clone(), y.clone()).verify(a)?;
            Ok("commutator")
        }
        Claim::Similar { a, b, g, g_inv } => {
            a.check_same_shape(b)?;
            let w = SimilarityWitness {
                g: g.clone(),
                g_inv: g_inv.clone(),
            };
            w.verify(a, b)?;
            Ok("similarity")
        }
    }
}

/// Re-checks a claim modulo `p` in plain machine arithmetic.
fn oracle_check<E>(claim: &Claim<E>, p: u64, small: impl Fn(&Matrix<E>) -> SmallMatrix) -> Result<Value> {
    match claim {
        Claim::Commutator { a, x, y } => {
            let xs = small(x);
            if small_commutator(&xs, &small(y), p) != small(a) {
                return Err(Error::WitnessInvalid(format!("oracle: [X, Y] differs from A mod {p}")));
            }
            let regular = match p.checked_pow(xs.len() as u32) {
                Some(total) if total <= VECTOR_BUDGET => json!(brute_regularity(&xs, p)?),
                _ => Value::Null,
            };
            Ok(json!({"p": p, "agrees": true, "xRegular": regular}))
        }
        Claim::Similar { a, b, g, .. } => {
            let gs = small(g);
            if small_mul(&gs, &small(a), p) != small_mul(&small(b), &gs, p) {
                return Err(Error::WitnessInvalid(format!("oracle: gA differs from Bg mod {p}")));
            }
            Ok(json!({"p": p, "agrees": true}))
        }
    }
}

fn prime_modulus(ring: &AnyRing, verb: &str) -> Result<u64> {
    ring.prime_field()
        .and_then(|f| u64::try_from(f.modulus()).ok())
        .filter(|p| *p < 1 << 31)
        .ok_or_else(|| Error::Precondition(format!("{verb} --oracle needs Z or a prime field Z/p with p < 2^31")))
}

pub fn verify(ring: &AnyRing, item: &Value, oracle: bool) -> Result<Value> {
    let (kind, report) = match ring {
        AnyRing::Z(r) => {
            let claim = parse_claim(r, item)?;
            let kind = check_claim(&claim)?;
            let report = if oracle {
                let checks = ORACLE_PRIMES_Z
                    .iter()
                    .map(|&p| oracle_check(&claim, p, |m: &Matrix<BigInt>| reduce_int(m, p)))
                    .collect::<Result<Vec<_>>>()?;
                Some(Value::Array(checks))
            } else {
                None
            };
            (kind, report)
        }
        AnyRing::Poly(r) => {
            if oracle {
                return Err(Error::Precondition(
                    "verify --oracle needs Z or a prime field Z/p".into(),
                ));
            }
            (check_claim(&parse_claim(r, item)?)?, None)
        }
        AnyRing::ModN(r) => {
            let claim = parse_claim(r, item)?;
            let kind = check_claim(&claim)?;
            let report = if oracle {
                let p = prime_modulus(ring, "verify")?;
                Some(Value::Array(vec![oracle_check(&claim, p, to_small)?]))
            } else {
                None
            };
            (kind, report)
        }
    };
    let mut v = json!({"verified": true, "kind": kind});
    if let Some(r) = report {
        v["oracle"] = r;
    }
    Ok(v)
}

fn regular_check_pid<R: Pid + JsonRing>(ring: &R, x: &Matrix<R::Elem>) -> Value {
    let cert = find_cyclic_vector(x);
    json!({
        "X": matrix_to_json(ring, x),
        "regularOverFractions": is_regular_over_fractions(x),
        "certificate": cert.map_or(Value::Null, |c| certificate_to_json(ring, &c)),
    })
}

pub fn regular_check(ring: &AnyRing, item: &Value, oracle: bool) -> Result<Value> {
    match ring {
        AnyRing::Z(r) => {
            let x = matrix_from_json(r, item)?;
            let mut v = regular_check_pid(r, &x);
            if oracle {
                let mut checks = Vec::new();
                for p in ORACLE_PRIMES_Z {
                    if p.checked_pow(x.n() as u32).map_or(true, |t| t > VECTOR_BUDGET) {
                        continue;
                    }
                    let prime = r.prime_element(BigInt::from(p));
                    let min_poly = is_regular_mod_prime(r, &x, &prime).regular;
                    let brute = brute_regularity(&reduce_int(&x, p), p)?;
                    if min_poly != brute {
                        return Err(Error::Internal(format!(
                            "oracle disagrees mod {p}: min-poly {min_poly}, enumeration {brute}"
                        )));
                    }
                    checks.push(json!({"p": p, "regular": brute, "agrees": true}));
                }
                v["oracle"] = Value::Array(checks);
            }
            Ok(v)
        }
        AnyRing::Poly(r) => {
            if oracle {
                return Err(Error::Precondition(
                    "regular-check --oracle needs Z or a prime field Z/p".into(),
                ));
            }
            Ok(regular_check_pid(r, &matrix_from_json(r, item)?))
        }
        AnyRing::ModN(r) => {
            if ring.prime_field().is_none() {
                return Err(Error::Precondition("regular-check over Z/N needs N prime".into()));
            }
            let x = matrix_from_json(r, item)?;
            let reg = is_regular_field(&x);
            let mut v = json!({
                "X": matrix_to_json(r, &x),
                "regular": reg.regular,
                "minPolyDegree": reg.min_poly_degree,
                "cyclicVector": reg.cyclic_vector.as_ref().map_or(Value::Null, |c| vector_to_json(r, c)),
            });
            if oracle {
                let p = prime_modulus(ring, "regular-check")?;
                let brute = brute_regularity(&to_small(&x), p)?;
                if brute != reg.regular {
                    return Err(Error::Internal(format!(
                        "oracle disagrees mod {p}: min-poly {}, enumeration {brute}",
                        reg.regular
                    )));
                }
                v["oracle"] = json!([{"p": p, "regular": brute, "agrees": true}]);
            }
            Ok(v)
        }
    }
}
