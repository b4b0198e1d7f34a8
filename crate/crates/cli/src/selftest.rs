use rand::SeedableRng;
use serde_json::{json, Value};

use schinzel::{IntegerRing, PrimeField, RationalField};

use crate::commands::Reply;
use crate::rings::{self, parse_in, Named, Sample};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*]
    };
}

/// Bundled fixtures: arguments, expected exit status, and a fragment the
/// report must contain.
pub const FIXTURES: &[(&str, &str)] = fixtures!(
    "av1_consecutive",
    "av_check_f2u_pair",
    "av_check_parity",
    "common_factor",
    "delta_y_y2",
    "density_y_y30",
    "dstar_y_y6",
    "find_coprime_f2u",
    "find_coprime_parity",
    "find_coprime_qu",
    "find_coprime_y_y2",
    "find_coprime_zu",
    "goldbach_2_4",
    "goldbach_8_3",
    "goldbach_odd",
    "hilbert_progression_ty",
    "hilbert_scan_exhausted",
    "hilbert_scan_y2_t",
    "min_delta_y2p1_y",
    "mod_n_y2p1_3",
    "oracle_parity",
    "parse_swan",
    "polyring_scan_f2u",
    "polyring_scan_zu",
    "profile_y_y2",
    "ring_mismatch",
    "syntax_error",
    "unknown_variable",
    "unsupported_ring",
);

/// Every key of `expect` is present in `actual` with a matching value;
/// arrays match elementwise and must have equal length.
pub fn contains(actual: &Value, expect: &Value, path: &str) -> Result<(), String> {
    match (expect, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, v) in e {
                let p = format!("{path}.{k}");
                let got = a.get(k).ok_or_else(|| format!("{p} missing"))?;
                contains(got, v, &p)?;
            }
            Ok(())
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                return Err(format!("{path}: expected {} elements, got {}", e.len(), a.len()));
            }
            for (i, (x, y)) in e.iter().zip(a).enumerate() {
                contains(y, x, &format!("{path}[{i}]"))?;
            }
            Ok(())
        }
        _ if expect == actual => Ok(()),
        _ => Err(format!("{path}: expected {expect}, got {actual}")),
    }
}

/// Run one fixture in process.
pub fn check_fixture(text: &str) -> Result<(), String> {
    let fx: Value = serde_json::from_str(text).map_err(|e| format!("bad fixture: {e}"))?;
    let args: Vec<String> = fx["args"]
        .as_array()
        .ok_or("fixture without args")?
        .iter()
        .map(|a| a.as_str().map(String::from).ok_or("non-string argument"))
        .collect::<Result<_, _>>()?;
    let out = crate::execute(std::iter::once("schinzel".to_string()).chain(args), None);
    let want = fx["exit"].as_i64().ok_or("fixture without exit")?;
    if i64::from(out.code) != want {
        return Err(format!("exit {} instead of {want}: {}{}", out.code, out.stdout, out.stderr));
    }
    let doc = out.doc.ok_or("no report")?;
    contains(&doc, &fx["expect"], "")
}

/// Render then parse `n` random elements; the number that fail to come back.
pub fn round_trip<R: Named + Sample>(ring: &R, g: &mut impl rand::Rng, n: usize) -> usize {
    (0..n)
        .filter(|i| {
            let p = ring.sample(g, 1 + i % 4);
            parse_in(ring, &ring.render(&p)).ok() != Some(p)
        })
        .count()
}

pub fn run(seed: u64) -> Reply {
    let mut cases = Vec::new();
    let mut failed = 0;
    for (name, text) in FIXTURES {
        match check_fixture(text) {
            Ok(()) => cases.push(json!({"name": name, "ok": true})),
            Err(why) => {
                failed += 1;
                cases.push(json!({"name": name, "ok": false, "detail": why}));
            }
        }
    }
    let mut g = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = 200;
    let trips = [
        ("Z[y]", round_trip(&rings::zy(), &mut g, n)),
        ("Z[t][y]", round_trip(&rings::over(IntegerRing, "t"), &mut g, n)),
        ("Q[u][y]", round_trip(&rings::over(RationalField::default(), "u"), &mut g, n)),
        ("F2[u][y]", round_trip(&rings::fpu(2), &mut g, n)),
        ("F7[u][y]", round_trip(&rings::over(PrimeField::new(7).expect("prime"), "u"), &mut g, n)),
        ("Z[u][y]", round_trip(&rings::zu(), &mut g, n)),
        ("Z[u][t][y]", round_trip(&rings::over2(IntegerRing), &mut g, n)),
    ];
    let trip_failures: usize = trips.iter().map(|(_, f)| f).sum();
    let round_trips: Vec<Value> = trips.iter().map(|(r, f)| json!({"ring": r, "samples": n, "failures": f})).collect();
    let result = json!({
        "fixtures": FIXTURES.len(),
        "passed": FIXTURES.len() - failed,
        "failed": failed,
        "cases": cases,
        "round_trips": round_trips,
    });
    Reply {
        ring: "-".into(),
        inputs: Vec::new(),
        result,
        verification: json!({"all_passed": failed == 0 && trip_failures == 0}),
        code: if failed == 0 && trip_failures == 0 { 0 } else { 1 },
    }
}
