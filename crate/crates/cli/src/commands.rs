use std::fs;

use ceresa_core::arith::{factor_integer, Fp, IntPolynomial, Rational};
use ceresa_core::elliptic::{CurvePoint, WeierstrassCurve};
use ceresa_core::ffcert::{
    certify_infinite, count_curve, frobenius_det, lpoly, parse_certificate, validate_certificate,
    CertificateHints, InfinitudeCertificate,
};
use ceresa_core::heights::{canonical_height, northcott_scan, HeightValue};
use ceresa_core::picard::{
    associated_curves, decide_ceresa, enumerate_torsion_locus, CeresaVerdict, PicardCurve,
};
use ceresa_core::Error;
use serde_json::{json, Value};

use crate::args::{Command, CurveArgs};
use crate::cache::Cache;

/// A failed command: exit status plus message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateCurve
            | Error::BadReduction(_)
            | Error::InvalidInput(_)
            | Error::InvalidHint(_) => 2,
            Error::NoCertificateFound(_) => 3,
            Error::FactorizationFailure(_) | Error::InvalidCertificate(_) | Error::Internal(_) => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<Value, Failure>;

fn invalid(message: String) -> Failure {
    Failure { code: 2, message }
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn coeffs(f: &IntPolynomial) -> Value {
    Value::Array(f.coeffs().iter().map(s).collect())
}

fn height_json(h: &HeightValue) -> Value {
    json!({ "value": h.value, "error_bound": h.error_bound })
}

/// Representative of the `λ^6` class of `(a, b)`: exponents of `a` reduced
/// into `0..6`, or of `b` into `0..12` when `a = 0`. Falls back to `(a, b)`
/// when a coefficient cannot be factored.
pub fn canonical_model(c: &PicardCurve) -> PicardCurve {
    let reduce = |x: &Rational, k: i64| -> Option<Rational> {
        let mut num = ceresa_core::arith::int(if x < &ceresa_core::arith::int(0) { -1 } else { 1 });
        for (part, sign) in [(x.numer(), 1i64), (x.denom(), -1)] {
            for (p, e) in factor_integer(part)? {
                let r = (sign * e as i64).rem_euclid(k) as u32;
                num *= Rational::from_integer(p.pow(r));
            }
        }
        Some(num)
    };
    let zero = ceresa_core::arith::int(0);
    let (a, b) = (c.a(), c.b());
    let canon = if *a != zero {
        reduce(a, 6).map(|a2| {
            let l6 = &a2 / a;
            (a2, b * &l6 * &l6)
        })
    } else {
        reduce(b, 12).map(|b2| (zero.clone(), b2))
    };
    canon
        .and_then(|(a2, b2)| PicardCurve::new(a2, b2).ok())
        .unwrap_or_else(|| c.clone())
}

fn verdict_json(model: &PicardCurve, v: &CeresaVerdict) -> Value {
    json!({
        "status": v.status.as_str(),
        "q_order": v.q_order,
        "evidence": v.evidence,
        "model": { "a": s(model.a()), "b": s(model.b()) },
    })
}

fn decide_cached(c: &PicardCurve, cache: Option<&Cache>) -> Outcome {
    let model = canonical_model(c);
    let key = format!("decide|{}|{}", model.a(), model.b());
    with_cache(cache, &key, || Ok(verdict_json(&model, &decide_ceresa(&model)?)))
}

fn with_cache(cache: Option<&Cache>, key: &str, compute: impl FnOnce() -> Outcome) -> Outcome {
    if let Some(v) = cache.and_then(|c| c.get(key)) {
        return Ok(v);
    }
    let v = compute()?;
    if let Some(c) = cache {
        // A failed write only costs a recomputation next time.
        let _ = c.put(key, &v);
    }
    Ok(v)
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Some(m), Value::Object(e)) = (base.as_object_mut(), extra) {
        m.extend(e);
    }
    base
}

fn curve(args: &CurveArgs) -> Result<PicardCurve, Failure> {
    Ok(PicardCurve::new(args.a.clone(), args.b.clone())?)
}

fn reduce_mod(x: &Rational, p: u64) -> Result<Fp, Failure> {
    ceresa_core::arith::PrimeField::new(p)?;
    Fp::from_rational(x, p).ok_or_else(|| invalid(format!("{x} has no reduction mod {p}")))
}

fn cert_json(cert: &InfinitudeCertificate) -> Value {
    let claims = cert.claims();
    json!({
        "a": s(&claims.a),
        "b": s(&claims.b),
        "v": claims.v,
        "ell": claims.ell,
        "q": claims.q,
        "sigma": claims.sigma.map(|(x, y)| json!([x, y])),
        "sigma_order": claims.sigma_order,
        "det_value": s(&claims.det_value),
        "untwisted_det": s(&claims.untwisted_det),
        "unit_mod_ell": cert.det.unit_mod_ell,
        "evidence": cert.evidence,
        "certificate": claims.to_text(),
    })
}

pub fn run(cmd: &Command, cache: Option<&Cache>) -> Outcome {
    match cmd {
        Command::Decide { curve: args } => {
            let c = curve(args)?;
            let v = decide_cached(&c, cache)?;
            Ok(merge(v, json!({ "a": s(&args.a), "b": s(&args.b) })))
        }
        Command::DecideT { t } => {
            let c = PicardCurve::from_t(t)?;
            let v = decide_cached(&c, cache)?;
            Ok(merge(v, json!({ "t": s(t), "a": s(c.a()), "b": s(c.b()) })))
        }
        Command::Certify { curve: args, v, ell, q, v_max, out } => {
            let c = curve(args)?;
            let hints = match (v, ell, q) {
                (Some(v), Some(ell), Some(q)) => Some(CertificateHints { v: *v, ell: *ell, q: *q }),
                _ => None,
            };
            let key = format!("certify|{}|{}|{hints:?}|{v_max}", c.a(), c.b());
            let value = with_cache(cache, &key, || Ok(cert_json(&certify_infinite(&c, hints, *v_max)?)))?;
            if let Some(path) = out {
                let text = value["certificate"].as_str().unwrap_or_default();
                fs::write(path, text).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(value)
        }
        Command::EnumerateTorsion { n_max } => {
            with_cache(cache, &format!("enumerate-torsion|{n_max}"), || {
                let entries: Vec<Value> = enumerate_torsion_locus(*n_max)
                    .iter()
                    .map(|e| {
                        let polys: Vec<Value> = e
                            .t_minimal_polynomials
                            .iter()
                            .map(|g| json!({ "display": g.display_with("t"), "coefficients": coeffs(g) }))
                            .collect();
                        let rational: Vec<Value> =
                            e.rational_model_factors().iter().map(|g| s(g.display_with("t"))).collect();
                        json!({ "order": e.order, "t_minimal_polynomials": polys, "rational_model_factors": rational })
                    })
                    .collect();
                Ok(json!({ "n_max": n_max, "entries": entries }))
            })
        }
        Command::Height { d, x, y, a, b } => {
            let (e, pt, label) = match (d, x, y, a, b) {
                (Some(d), Some(x), Some(y), None, None) => {
                    let e = WeierstrassCurve::new(d.clone())?;
                    let pt = e.point(x.clone(), y.clone())?;
                    (e, pt, json!({ "d": s(d) }))
                }
                (None, None, None, Some(a), Some(b)) => {
                    let ac = associated_curves(&PicardCurve::new(a.clone(), b.clone())?)?;
                    (ac.e_delta, ac.q, json!({ "a": s(a), "b": s(b) }))
                }
                _ => return Err(Failure { code: 64, message: "height needs --d --x --y or --a --b".into() }),
            };
            let key = format!("height|{}|{pt}", e.d());
            let h = with_cache(cache, &key, || Ok(height_json(&canonical_height(&e, &pt)?)))?;
            let (px, py) = match &pt {
                CurvePoint::Affine(px, py) => (s(px), s(py)),
                CurvePoint::Infinity => (Value::Null, Value::Null),
            };
            Ok(merge(
                label,
                json!({ "curve_d": s(e.d()), "x": px, "y": py, "height": h }),
            ))
        }
        Command::Scan { bound_b, bound } => {
            let bound_key = if bound.is_finite() { bound.to_string() } else { "inf".into() };
            with_cache(cache, &format!("scan|{bound_b}|{bound_key}"), || {
                let rows: Vec<Value> = northcott_scan(*bound_b, *bound)?
                    .iter()
                    .map(|r| {
                        json!({
                            "t": s(&r.t),
                            "status": r.verdict.status.as_str(),
                            "q_order": r.verdict.q_order,
                            "height": r.height.value,
                            "error_bound": r.height.error_bound,
                        })
                    })
                    .collect();
                let bound_json = if bound.is_finite() { json!(bound) } else { json!("inf") };
                Ok(json!({ "b": bound_b, "bound": bound_json, "rows": rows }))
            })
        }
        Command::Count { curve: args, p, i } => {
            let (fa, fb) = (reduce_mod(&args.a, *p)?, reduce_mod(&args.b, *p)?);
            with_cache(cache, &format!("count|{fa}|{fb}|{p}|{i}"), || {
                let r = count_curve(fa, fb, *i)?;
                Ok(json!({ "a": fa.value(), "b": fb.value(), "p": p, "i": i, "curve_count": r.curve_count }))
            })
        }
        Command::Lpoly { curve: args, p } => {
            let (fa, fb) = (reduce_mod(&args.a, *p)?, reduce_mod(&args.b, *p)?);
            with_cache(cache, &format!("lpoly|{fa}|{fb}|{p}"), || {
                let l = lpoly(fa, fb)?;
                Ok(json!({
                    "a": fa.value(),
                    "b": fb.value(),
                    "p": p,
                    "l_c": coeffs(&l.l_c),
                    "l_e": coeffs(&l.l_e),
                    "l_p": coeffs(&l.l_p),
                    "jacobian_order": s(l.jacobian_order()),
                }))
            })
        }
        Command::Frobdet { curve: args, q, ell } => {
            let c = curve(args)?;
            with_cache(cache, &format!("frobdet|{}|{}|{q}|{ell}", c.a(), c.b()), || {
                let d = frobenius_det(&c, *q, *ell)?;
                Ok(json!({
                    "a": s(c.a()),
                    "b": s(c.b()),
                    "q": q,
                    "ell": ell,
                    "det_value": s(&d.det_value),
                    "untwisted_det": s(&d.untwisted_det),
                    "unit_mod_ell": d.unit_mod_ell,
                }))
            })
        }
        Command::CheckCert { path } => {
            let text = fs::read_to_string(path)
                .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
            let claims = parse_certificate(&text)?;
            let cert = validate_certificate(&claims)?;
            Ok(merge(json!({ "valid": true }), cert_json(&cert)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ceresa_core::arith::{int, rat};

    #[test]
    fn canonical_models_agree_on_isomorphic_curves() {
        let base = PicardCurve::new(int(1), int(1)).unwrap();
        for lam in [int(2), int(3), rat(1, 2), rat(5, 3)] {
            assert_eq!(canonical_model(&base.scale(&lam)), base);
        }
        let c = PicardCurve::new(int(0), int(5)).unwrap();
        assert_eq!(canonical_model(&c.scale(&rat(2, 7))), c);
        let c = PicardCurve::new(int(-128), int(3)).unwrap();
        assert_eq!(canonical_model(&c).a(), &int(-2));
    }

    #[test]
    fn error_codes() {
        assert_eq!(Failure::from(Error::DegenerateCurve).code, 2);
        assert_eq!(Failure::from(Error::NoCertificateFound(9)).code, 3);
        assert_eq!(Failure::from(Error::InvalidCertificate("x".into())).code, 4);
    }
}
