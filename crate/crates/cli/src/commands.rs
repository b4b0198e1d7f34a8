use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use schinzel::arith::is_prime;
use schinzel::bezout::{bezout_delta, delta_result, verify_certificate};
use schinzel::coprime::{
    brute_force_coprime, check_av1, check_av1_by_content, check_av2, check_av2_by_content, density_good_m, dstar,
    find_coprime_infinite_field, find_coprime_pid, find_coprime_polyring, fp_poly_box, gcd_profile, int_poly_box,
    integer_box, AvVerdict, ContentDomain, CoprimeWitness, ScanDomain,
};
use schinzel::hilbert::{
    goldbach_mod_n, irreducible_specializations, mod_n_schinzel, primitive_at, primitivity_progression, specialize,
    specialize_polyring_irreducible, specialize_polyring_irreducible_fp, SpecStatus, SpecializationReport,
};
use schinzel::{EuclideanDomain, Error, GcdDomain, Integer, IntegerRing, Limits, Poly, PolyRing, Ring};

use crate::output::{el, els, polys, small, verdict, witness};
use crate::parse::ParseError;
use crate::rings::{self, parse_in, ring_name, Named, RingSel};

#[derive(Debug)]
pub enum Failure {
    Parse { input: usize, error: ParseError },
    Config(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub struct Reply {
    pub ring: String,
    pub inputs: Vec<String>,
    pub result: Value,
    pub verification: Value,
    /// Nonzero when the run ended early (scan cap or interrupt).
    pub code: i32,
}

fn parse_inputs<R: Named>(ring: &R, texts: &[String]) -> Result<Vec<R::Elem>, Failure> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_in(ring, t).map_err(|error| Failure::Parse { input: i, error }))
        .collect()
}

fn reply<R: Ring>(ring: &PolyRing<R>, ps: &[Poly<R::Elem>], result: Value, verification: Value) -> Reply {
    Reply { ring: ring_name(ring), inputs: polys(ring, ps), result, verification, code: 0 }
}

fn unsupported(command: &str, sel: RingSel, allowed: &str) -> Failure {
    Failure::Core(Error::RingMismatch(format!("{command} is not available over {sel}; use {allowed}")))
}

// ---- delta ----------------------------------------------------------------

fn delta_in<R: GcdDomain + Named>(ring: &PolyRing<R>, texts: &[String]) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let cert = bezout_delta(ring, &ps)?;
    let base = ring.base();
    let verified = verify_certificate(ring, &cert, &ps);
    let result = json!({"delta": el(base, &cert.delta), "cofactors": polys(ring, &cert.cofactors), "verified": verified});
    let mut verification = json!({"identity": "sum of cofactor times input equals delta", "holds": verified});
    if let Some(r) = &cert.resultant {
        verification["resultant"] = el(base, r);
        if ps.iter().any(|p| p.degree() != Some(0)) {
            verification["delta_divides_resultant"] = json!(base.divide(r, &cert.delta).is_some());
        }
    }
    Ok(reply(ring, &ps, result, verification))
}

pub fn delta(sel: RingSel, texts: &[String]) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => delta_in(&rings::zy(), texts),
        RingSel::Qu => delta_in(&rings::qu(), texts),
        RingSel::Fpu(p) => delta_in(&rings::fpu(p), texts),
        RingSel::Zu => delta_in(&rings::zu(), texts),
    }
}

// ---- min-delta ------------------------------------------------------------

fn min_delta_in<R: EuclideanDomain + Named>(
    ring: &PolyRing<R>,
    texts: &[String],
    bound: Option<usize>,
) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let dr = delta_result(ring, &ps, bound)?;
    let base = ring.base();
    let best = dr.best();
    let minimal = dr.minimal_delta.as_ref().map_or(Value::Null, |d| el(base, d));
    let result = json!({
        "bezout_delta": el(base, &dr.bezout.delta),
        "minimal_delta": minimal,
        "degree_bound": dr.degree_bound_used,
        "best": el(base, best),
    });
    // the gcd of values at any point divides every element of the ideal
    let samples_ok = (-12..=12).all(|m| {
        let m = base.from_i64(m);
        let g = base.gcd_all(ps.iter().map(|p| ring.eval(p, &m)).collect::<Vec<_>>().iter());
        base.is_zero(&g) || base.divide(best, &g).is_some()
    });
    let verification = json!({
        "best_divides_bezout_delta": base.divide(&dr.bezout.delta, best).is_some(),
        "value_gcds_divide_best": samples_ok,
        "bezout_certificate": verify_certificate(ring, &dr.bezout, &ps),
    });
    Ok(reply(ring, &ps, result, verification))
}

pub fn min_delta(sel: RingSel, texts: &[String], bound: Option<usize>) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => min_delta_in(&rings::zy(), texts, bound),
        RingSel::Qu => min_delta_in(&rings::qu(), texts, bound),
        RingSel::Fpu(p) => min_delta_in(&rings::fpu(p), texts, bound),
        RingSel::Zu => Err(unsupported("min-delta", sel, "Z, Q[u] or Fp[u]:p")),
    }
}

// ---- av-check -------------------------------------------------------------

fn av_report<R: GcdDomain + Named>(
    ring: &PolyRing<R>,
    ps: &[Poly<R::Elem>],
    av1: Option<AvVerdict<R::Elem>>,
    av2: AvVerdict<R::Elem>,
    av1_family: &[Poly<R::Elem>],
) -> Reply {
    let (v2, ok2) = verdict(ring, ps, &av2);
    let mut result = json!({"av2": v2});
    let mut ok = ok2;
    if let Some(v) = av1 {
        let (v1, ok1) = verdict(ring, av1_family, &v);
        result["av1"] = v1;
        ok &= ok1;
    }
    reply(ring, ps, result, json!({"evidence_rechecked": ok}))
}

fn av_scan<D: ScanDomain + Named>(ring: &PolyRing<D>, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let av2 = check_av2(ring, &ps, limits)?;
    let av1 = check_av1(ring, &ps, limits)?;
    let product = [ps.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p))];
    Ok(av_report(ring, &ps, Some(av1), av2, &product))
}

fn av_content<D: ContentDomain + Named>(ring: &PolyRing<D>, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let av2 = check_av2_by_content(ring, &ps, limits)?;
    let av1 = check_av1_by_content(ring, &ps, limits)?;
    let (v2, ok2) = verdict(ring, &ps, &av2);
    // each AV1 content witness speaks about one input
    let ok1 = av1.evidence.iter().all(|e| {
        ps.iter().any(|p| p.coeffs().iter().all(|c| ring.base().is_zero(c) || ring.base().divide(c, &e.prime).is_some()))
    });
    let base = ring.base();
    let v1 = json!({
        "holds": av1.holds,
        "failing_prime": av1.failing_prime.as_ref().map_or(Value::Null, |p| el(base, p)),
        "evidence": av1
            .evidence
            .iter()
            .map(|e| json!({"prime": el(base, &e.prime), "outcome": "divides the content of an input"}))
            .collect::<Vec<_>>(),
    });
    Ok(reply(ring, &ps, json!({"av1": v1, "av2": v2}), json!({"evidence_rechecked": ok1 && ok2})))
}

pub fn av_check(sel: RingSel, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => av_scan(&rings::zy(), texts, limits),
        RingSel::Fpu(p) => av_scan(&rings::fpu(p), texts, limits),
        RingSel::Qu => av_content(&rings::qu(), texts, limits),
        RingSel::Zu => av_content(&rings::zu(), texts, limits),
    }
}

// ---- find-coprime and oracle ---------------------------------------------

fn witness_reply<R: GcdDomain>(ring: &PolyRing<R>, ps: &[Poly<R::Elem>], w: &CoprimeWitness<R::Elem>) -> Reply {
    let (result, verification) = witness(ring, ps, w);
    reply(ring, ps, result, verification)
}

pub fn find_coprime(sel: RingSel, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => {
            let r = rings::zy();
            let ps = parse_inputs(&r, texts)?;
            Ok(witness_reply(&r, &ps, &find_coprime_pid(&r, &ps, limits)?))
        }
        RingSel::Fpu(p) => {
            let r = rings::fpu(p);
            let ps = parse_inputs(&r, texts)?;
            Ok(witness_reply(&r, &ps, &find_coprime_pid(&r, &ps, limits)?))
        }
        RingSel::Qu => {
            let r = rings::qu();
            let ps = parse_inputs(&r, texts)?;
            Ok(witness_reply(&r, &ps, &find_coprime_infinite_field(&r, &ps, limits)?))
        }
        RingSel::Zu => {
            let r = rings::zu();
            let ps = parse_inputs(&r, texts)?;
            Ok(witness_reply(&r, &ps, &find_coprime_polyring(&r, &ps, limits)?))
        }
    }
}

pub struct OracleBox {
    pub range: i64,
    pub max_deg: usize,
    pub height: i64,
}

fn oracle_in<R: GcdDomain + Named>(
    ring: &PolyRing<R>,
    texts: &[String],
    candidates: impl Iterator<Item = R::Elem>,
    searched: String,
) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    if ps.len() < 2 {
        return Err(Error::Precondition(format!("need at least two polynomials, got {}", ps.len())).into());
    }
    Ok(match brute_force_coprime(ring, &ps, candidates) {
        Some(w) => {
            let (mut result, verification) = witness(ring, &ps, &w);
            result["found"] = json!(true);
            result["searched"] = json!(searched);
            reply(ring, &ps, result, verification)
        }
        None => reply(ring, &ps, json!({"found": false, "searched": searched}), json!({"exhaustive_over_box": true})),
    })
}

pub fn oracle(sel: RingSel, texts: &[String], b: &OracleBox) -> Result<Reply, Failure> {
    let r = b.range;
    match sel {
        RingSel::Z => oracle_in(&rings::zy(), texts, integer_box(-r, r), format!("integers in [{}, {r}]", -r)),
        RingSel::Qu => {
            let ring = rings::qu();
            let base = ring.base().clone();
            let cands = integer_box(-r, r).map(move |n| base.from_integer(&n));
            oracle_in(&ring, texts, cands, format!("integer constants in [{}, {r}]", -r))
        }
        RingSel::Fpu(p) => oracle_in(
            &rings::fpu(p),
            texts,
            fp_poly_box(p, b.max_deg),
            format!("all polynomials over F_{p} of degree at most {}", b.max_deg),
        ),
        RingSel::Zu => {
            let zu = PolyRing::new(IntegerRing, "u");
            let cands: Vec<Poly<Integer>> = int_poly_box(&zu, b.max_deg, b.height).collect();
            let searched = format!("integer polynomials of degree at most {} and height at most {}", b.max_deg, b.height);
            oracle_in(&rings::zu(), texts, cands.into_iter(), searched)
        }
    }
}

// ---- profile, dstar, density ----------------------------------------------

fn profile_in<D: ScanDomain + Named>(ring: &PolyRing<D>, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let prof = gcd_profile(ring, &ps, limits)?;
    let base = ring.base();
    let table: Vec<Value> = prof.table.iter().map(|(m, d)| json!([el(base, m), el(base, d)])).collect();
    let step = (prof.table.len() / 16).max(1);
    let resampled = prof.table.iter().step_by(step).all(|(m, d)| {
        let g = base.gcd_all(ps.iter().map(|p| ring.eval(p, m)).collect::<Vec<_>>().iter());
        g == *d && base.divide(&prof.delta, d).is_some()
    });
    let result = json!({"delta": el(base, &prof.delta), "period": prof.table.len(), "table": table});
    let verification = json!({"periodicity_checks": prof.periodicity_checks, "table_resampled": resampled});
    Ok(reply(ring, &ps, result, verification))
}

pub fn profile(sel: RingSel, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => profile_in(&rings::zy(), texts, limits),
        RingSel::Fpu(p) => profile_in(&rings::fpu(p), texts, limits),
        _ => Err(unsupported("profile", sel, "Z or Fp[u]:p")),
    }
}

fn dstar_in<D: ScanDomain + Named>(ring: &PolyRing<D>, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    let ps = parse_inputs(ring, texts)?;
    let ds = dstar(ring, &ps, limits)?;
    let base = ring.base();
    let closed = ds.divisors.iter().all(|a| ds.divisors.iter().all(|b| ds.divisors.contains(&base.gcd(a, b))));
    let result = json!({
        "divisors": els(base, &ds.divisors),
        "d_star": el(base, &ds.d_star),
        "av2_holds": ds.av2.holds,
    });
    let verification = json!({
        "closed_under_gcd": closed,
        "d_star_is_unit_iff_av2": base.is_unit(&ds.d_star) == ds.av2.holds,
    });
    Ok(reply(ring, &ps, result, verification))
}

pub fn dstar_cmd(sel: RingSel, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    match sel {
        RingSel::Z => dstar_in(&rings::zy(), texts, limits),
        RingSel::Fpu(p) => dstar_in(&rings::fpu(p), texts, limits),
        _ => Err(unsupported("dstar", sel, "Z or Fp[u]:p")),
    }
}

pub fn density(sel: RingSel, texts: &[String], lo: i64, hi: Option<i64>, limits: &Limits) -> Result<Reply, Failure> {
    if sel != RingSel::Z {
        return Err(unsupported("density", sel, "Z"));
    }
    let r = rings::zy();
    let ps = parse_inputs(&r, texts)?;
    let lo = Integer::from(lo);
    let hi = match hi {
        Some(h) => Integer::from(h),
        None => &lo + delta_result(&r, &ps, None)?.best().abs(),
    };
    let d = density_good_m(&r, &ps, &lo, &hi, limits)?;
    let result = json!({"density": d.to_string(), "lo": small(&lo), "hi": small(&hi)});
    let len = &hi - &lo;
    let verification = if len <= Integer::from(200_000) {
        let mut good = 0u64;
        let mut m = lo.clone();
        while m < hi {
            let g = IntegerRing.gcd_all(ps.iter().map(|p| r.eval(p, &m)).collect::<Vec<_>>().iter());
            if g.is_one() {
                good += 1;
            }
            m += 1;
        }
        json!({"recounted": true, "matches": schinzel::Rational::new(good.into(), len) == d})
    } else {
        json!({"recounted": false})
    };
    Ok(reply(&r, &ps, result, verification))
}

// ---- Hilbert specializations ---------------------------------------------

fn zty() -> rings::Over<IntegerRing> {
    rings::over(IntegerRing, "t")
}

fn status_json<R: Ring>(ry: &PolyRing<R>, s: &SpecStatus<R::Elem>) -> Value {
    match s {
        SpecStatus::Irreducible { certified } => json!({"status": "irreducible", "certified": certified}),
        SpecStatus::Reducible { factor } => json!({"status": "reducible", "factor": ry.render(factor)}),
        SpecStatus::NotPrimitive { content } => json!({"status": "not primitive", "content": el(ry.base(), content)}),
        SpecStatus::Constant => json!({"status": "constant"}),
        SpecStatus::Inconclusive { reason } => json!({"status": "inconclusive", "reason": reason}),
    }
}

fn report_json<R: Ring>(ry: &PolyRing<R>, rep: &SpecializationReport<R::Elem>) -> Value {
    let base = ry.base();
    let entries: Vec<Value> = rep
        .entries
        .iter()
        .map(|e| {
            json!({"m": el(base, &e.m), "hit": e.is_hit(), "statuses": e.statuses.iter().map(|s| status_json(ry, s)).collect::<Vec<_>>()})
        })
        .collect();
    json!({
        "hits": rep.hits,
        "want": rep.want,
        "cap": rep.cap,
        "exhausted": rep.exhausted,
        "interrupted": rep.interrupted,
        "evidence_only": rep.evidence_only,
        "search_bound": rep.search_bound,
        "hit_values": rep.hit_values().map(|m| el(base, m)).collect::<Vec<_>>(),
        "entries": entries,
    })
}

fn early_exit<E>(rep: &SpecializationReport<E>) -> i32 {
    if rep.exhausted || rep.interrupted {
        3
    } else {
        0
    }
}

/// Every reported factor divides its specialization, and every reported
/// content is the content.
fn recheck_entries<B: GcdDomain>(
    ring: &rings::Over<B>,
    ry: &PolyRing<B>,
    ps: &[Poly<Poly<B::Elem>>],
    rep: &SpecializationReport<B::Elem>,
) -> bool {
    rep.entries.iter().all(|e| {
        e.statuses.iter().zip(ps).all(|(s, p)| {
            let q = specialize(ring, p, &e.m);
            match s {
                SpecStatus::Reducible { factor } => ry.divide(&q, factor).is_some(),
                SpecStatus::NotPrimitive { content } => ry.base().normalize(&ry.content(&q)) == *content,
                _ => true,
            }
        })
    })
}

pub fn hilbert_progression(sel: RingSel, texts: &[String], limits: &Limits) -> Result<Reply, Failure> {
    if sel != RingSel::Z {
        return Err(unsupported("hilbert-progression", sel, "Z (with t as the parameter)"));
    }
    let ring = zty();
    let ps = parse_inputs(&ring, texts)?;
    let w = primitivity_progression(&ring, &ps, limits)?;
    let records: Vec<Value> = w
        .records
        .iter()
        .map(|r| json!({"prime": small(&r.prime), "residue": small(&r.residue), "coefficient_degree": r.coefficient_degree}))
        .collect();
    let result = json!({
        "a0": small(&w.a0),
        "b0": small(&w.b0),
        "deltas": w.deltas.iter().map(small).collect::<Vec<_>>(),
        "records": records,
    });
    let checked: Vec<Integer> = (-10..=10).map(|k| w.term(k)).collect();
    let ok = checked.iter().all(|t| primitive_at(&ring, &ps, t));
    let verification = json!({"terms_checked": checked.len(), "all_primitive": ok});
    Ok(reply(&ring, &ps, result, verification))
}

pub fn hilbert_scan(sel: RingSel, texts: &[String], want: usize, cap: usize, limits: &Limits) -> Result<Reply, Failure> {
    if sel != RingSel::Z {
        return Err(unsupported("hilbert-scan", sel, "Z (with t as the parameter)"));
    }
    let ring = zty();
    let ps = parse_inputs(&ring, texts)?;
    let w = primitivity_progression(&ring, &ps, limits)?;
    let rep = irreducible_specializations(&ring, &ps, &w, want, cap, limits)?;
    let ry = rings::zy();
    let mut result = report_json(&ry, &rep);
    result["progression"] = json!({"a0": small(&w.a0), "b0": small(&w.b0)});
    let hits_primitive = rep.hit_values().all(|m| primitive_at(&ring, &ps, m));
    let verification =
        json!({"entries_rechecked": recheck_entries(&ring, &ry, &ps, &rep), "hits_primitive": hits_primitive});
    let mut out = reply(&ring, &ps, result, verification);
    out.code = early_exit(&rep);
    Ok(out)
}

pub fn polyring_scan(
    sel: RingSel,
    text: &str,
    want: usize,
    max_deg: usize,
    height: i64,
    limits: &Limits,
) -> Result<Reply, Failure> {
    let texts = [text.to_string()];
    match sel {
        RingSel::Zu => {
            let ring = rings::over2(IntegerRing);
            let p = parse_inputs(&ring, &texts)?.remove(0);
            let zu = PolyRing::new(IntegerRing, "u");
            let rep = specialize_polyring_irreducible(&ring, &p, int_poly_box(&zu, max_deg, height), want, limits)?;
            let ry = PolyRing::new(zu.clone(), "y");
            let sub = PolyRing::new(PolyRing::new(zu.clone(), "t"), "y");
            let ok = recheck_nested(&sub, &ry, &p, &rep);
            let mut out = reply(&ring, std::slice::from_ref(&p), report_json(&ry, &rep), json!({"entries_rechecked": ok}));
            out.code = early_exit(&rep);
            Ok(out)
        }
        RingSel::Fpu(q) => {
            let fp = schinzel::PrimeField::new(q).map_err(Failure::Core)?;
            let ring = rings::over2(fp);
            let p = parse_inputs(&ring, &texts)?.remove(0);
            let fu = PolyRing::new(fp, "u");
            let rep = specialize_polyring_irreducible_fp(&ring, &p, fp_poly_box(q, max_deg), want, limits)?;
            let ry = PolyRing::new(fu.clone(), "y");
            let sub = PolyRing::new(PolyRing::new(fu.clone(), "t"), "y");
            let ok = recheck_nested(&sub, &ry, &p, &rep);
            let mut out = reply(&ring, std::slice::from_ref(&p), report_json(&ry, &rep), json!({"entries_rechecked": ok}));
            out.code = early_exit(&rep);
            Ok(out)
        }
        _ => Err(unsupported("polyring-scan", sel, "Z[u] or Fp[u]:p")),
    }
}

/// Reducible verdicts over B[u][y]: the factor divides `P(m(u), y)`.
fn recheck_nested<B: GcdDomain>(
    bivariate: &rings::Over<PolyRing<B>>,
    ry: &PolyRing<PolyRing<B>>,
    p: &Poly<Poly<Poly<B::Elem>>>,
    rep: &SpecializationReport<Poly<B::Elem>>,
) -> bool {
    rep.entries.iter().all(|e| {
        let q = specialize(bivariate, p, &e.m);
        e.statuses.iter().all(|s| match s {
            SpecStatus::Reducible { factor } => ry.divide(&q, factor).is_some(),
            _ => true,
        })
    })
}

// ---- mod-N ----------------------------------------------------------------

fn certifies(value: &Integer, prime: &Integer, n: &Integer) -> bool {
    is_prime(prime) && prime.gcd(n).is_one() && (prime - value).mod_floor(n).is_zero()
}

pub fn mod_n(sel: RingSel, texts: &[String], n: i64, want: usize, limits: &Limits) -> Result<Reply, Failure> {
    if sel != RingSel::Z {
        return Err(unsupported("mod-n", sel, "Z"));
    }
    let r = rings::zy();
    let ps = parse_inputs(&r, texts)?;
    let n = Integer::from(n);
    let ws = mod_n_schinzel(&r, &ps, &n, want, limits)?;
    let mut ok = true;
    let witnesses: Vec<Value> = ws
        .iter()
        .map(|w| {
            let entries: Vec<Value> = w
                .entries
                .iter()
                .zip(&ps)
                .map(|(e, p)| {
                    ok &= e.value == r.eval(p, &w.m) && certifies(&e.value, &e.prime, &n);
                    json!({"value": small(&e.value), "prime": small(&e.prime)})
                })
                .collect();
            json!({"m": small(&w.m), "entries": entries})
        })
        .collect();
    let interrupted = ws.len() < want;
    let result = json!({"modulus": small(&n), "witnesses": witnesses, "interrupted": interrupted});
    let mut out = reply(&r, &ps, result, json!({"all_verified": ok}));
    if interrupted {
        out.code = 3;
    }
    Ok(out)
}

pub fn goldbach(two_n: i64, n: i64, want: usize, limits: &Limits) -> Result<Reply, Failure> {
    let (t, m) = (Integer::from(two_n), Integer::from(n));
    let ws = goldbach_mod_n(&t, &m, want, limits)?;
    let mut ok = true;
    let witnesses: Vec<Value> = ws
        .iter()
        .map(|w| {
            ok &= is_prime(&w.p) && is_prime(&w.q) && w.p.gcd(&m).is_one() && w.q.gcd(&m).is_one();
            ok &= (&w.p + &w.q - &t).mod_floor(&m).is_zero();
            json!({"m": small(&w.m), "p": small(&w.p), "q": small(&w.q)})
        })
        .collect();
    let interrupted = ws.len() < want;
    let result = json!({"two_n": two_n, "modulus": n, "witnesses": witnesses, "interrupted": interrupted});
    let r = rings::zy();
    let ps = [r.gen(), r.from_coeffs(vec![t.clone(), -Integer::one()])];
    let mut out = reply(&r, &ps, result, json!({"all_verified": ok}));
    if interrupted {
        out.code = 3;
    }
    Ok(out)
}
