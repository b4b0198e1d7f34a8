use num_traits::ToPrimitive;
use serde_json::{json, Value};

use schinzel::coprime::{AvVerdict, CoprimeWitness, Outcome};
use schinzel::ring::RingDescriptor;
use schinzel::{GcdDomain, Poly, PolyRing, Ring};

pub const SCHEMA: u32 = 1;

/// Ring elements become JSON numbers when they are machine-sized integers,
/// strings otherwise.
pub fn el<R: Ring>(r: &R, e: &R::Elem) -> Value {
    let s = r.render(e);
    if r.descriptor() == RingDescriptor::IntegerRing {
        if let Ok(n) = s.parse::<i64>() {
            return json!(n);
        }
    }
    Value::String(s)
}

pub fn els<R: Ring>(r: &R, es: &[R::Elem]) -> Value {
    Value::Array(es.iter().map(|e| el(r, e)).collect())
}

pub fn polys<R: Ring>(r: &PolyRing<R>, ps: &[Poly<R::Elem>]) -> Vec<String> {
    ps.iter().map(|p| r.render(p)).collect()
}

/// Verdict with every survivor and content witness re-checked against
/// `family`, the polynomials the verdict speaks about.
pub fn verdict<R: GcdDomain>(ring: &PolyRing<R>, family: &[Poly<R::Elem>], v: &AvVerdict<R::Elem>) -> (Value, bool) {
    let base = ring.base();
    let divides = |p: &R::Elem, x: &R::Elem| base.is_zero(x) || base.divide(x, p).is_some();
    let mut all_ok = true;
    let evidence: Vec<Value> = v
        .evidence
        .iter()
        .map(|e| {
            let prime = el(base, &e.prime);
            match &e.outcome {
                Outcome::Survivor { residue, index } => {
                    let ok = !divides(&e.prime, &ring.eval(&family[*index], residue));
                    all_ok &= ok;
                    json!({"prime": prime, "outcome": "survivor", "residue": el(base, residue), "index": index, "rechecked": ok})
                }
                Outcome::ContentWitness => {
                    let ok = family.iter().flat_map(|p| p.coeffs()).all(|c| divides(&e.prime, c));
                    all_ok &= ok;
                    json!({"prime": prime, "outcome": "divides every coefficient", "rechecked": ok})
                }
                Outcome::AllResiduesVanish { scanned } => {
                    json!({"prime": prime, "outcome": "every residue vanishes", "scanned": scanned})
                }
            }
        })
        .collect();
    let failing = v.failing_prime.as_ref().map_or(Value::Null, |p| el(base, p));
    (json!({"holds": v.holds, "failing_prime": failing, "evidence": evidence}), all_ok)
}

/// Witness fields plus an independent recomputation of the values' gcd.
pub fn witness<R: GcdDomain>(ring: &PolyRing<R>, ps: &[Poly<R::Elem>], w: &CoprimeWitness<R::Elem>) -> (Value, Value) {
    let base = ring.base();
    let mut result = json!({
        "m": el(base, &w.m),
        "values": els(base, &w.values),
        "gcd": el(base, &w.gcd),
        "method": w.method,
    });
    if let Some(c) = &w.integer_content {
        result["integer_content"] = el(&schinzel::IntegerRing, c);
    }
    let values: Vec<R::Elem> = ps.iter().map(|p| ring.eval(p, &w.m)).collect();
    let g = base.gcd_all(values.iter());
    let ok = base.is_unit(&g) && values == w.values;
    (result, json!({"values_recomputed": true, "gcd_is_unit": ok, "verified": ok && w.verified}))
}

pub fn failing_prime_value(s: &str) -> Value {
    s.parse::<i64>().map_or_else(|_| json!(s), |n| json!(n))
}

pub fn small(n: &schinzel::Integer) -> Value {
    n.to_i64().map_or_else(|| json!(n.to_string()), |v| json!(v))
}

/// Human-readable rendering: one `path: value` line per scalar, long
/// arrays truncated.
pub fn table(doc: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<String>) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, out);
                }
            }
            Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
                let shown: Vec<String> = xs.iter().take(24).map(scalar).collect();
                let more = if xs.len() > 24 { format!(", … ({} total)", xs.len()) } else { String::new() };
                out.push(format!("{prefix:<36} [{}{more}]", shown.join(", ")));
            }
            Value::Array(xs) => {
                for (i, x) in xs.iter().take(24).enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
                if xs.len() > 24 {
                    out.push(format!("{prefix:<36} … ({} total)", xs.len()));
                }
            }
            _ => out.push(format!("{prefix:<36} {}", scalar(v))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
            other => other.to_string(),
        }
    }
    let mut out = Vec::new();
    walk("", doc, &mut out);
    out.join("\n")
}
