use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::frob::{frobenius_det_values, is_ell_unit};
use super::{good_reduction, lift_sum, FrobeniusDetResult, LiftSumResult};
use crate::arith::{factor_u64, is_prime, parse_rational, primes_up_to, Rational};
use crate::elliptic::Genus1Point;
use crate::picard::PicardCurve;
use crate::{Error, Result};

pub const CERTIFICATE_HEADER: &str = "ceresa-certificate v1";

/// Primes `(v, ell, q)` proposed for a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateHints {
    pub v: u64,
    pub ell: u64,
    pub q: u64,
}

/// A checked witness that the Ceresa cycle has infinite order: `ell` divides
/// the order of `σ` over `F_v`, and `det(Frob_q - 1)` on `V` is an
/// `ell`-adic unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinitudeCertificate {
    pub a: Rational,
    pub b: Rational,
    pub v: u64,
    pub ell: u64,
    pub q: u64,
    pub lift: LiftSumResult,
    pub det: FrobeniusDetResult,
    pub evidence: String,
}

/// The fields of a certificate file as written, before any checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateClaims {
    pub a: Rational,
    pub b: Rational,
    pub v: u64,
    pub ell: u64,
    pub q: u64,
    /// `None` for the point at infinity.
    pub sigma: Option<(u64, u64)>,
    pub sigma_order: u64,
    pub det_value: Rational,
    pub untwisted_det: BigInt,
}

fn sigma_coords(s: &Genus1Point<crate::arith::Fp>) -> Option<(u64, u64)> {
    match s {
        Genus1Point::Infinity => None,
        Genus1Point::Affine(x, y) => Some((x.value(), y.value())),
    }
}

impl InfinitudeCertificate {
    pub fn claims(&self) -> CertificateClaims {
        CertificateClaims {
            a: self.a.clone(),
            b: self.b.clone(),
            v: self.v,
            ell: self.ell,
            q: self.q,
            sigma: sigma_coords(&self.lift.sigma),
            sigma_order: self.lift.sigma_order,
            det_value: self.det.det_value.clone(),
            untwisted_det: self.det.untwisted_det.clone(),
        }
    }

    /// Canonical text form; see [`parse_certificate`].
    pub fn to_text(&self) -> String {
        self.claims().to_text()
    }
}

impl CertificateClaims {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{CERTIFICATE_HEADER}");
        let _ = writeln!(s, "a {}", self.a);
        let _ = writeln!(s, "b {}", self.b);
        let _ = writeln!(s, "v {}", self.v);
        let _ = writeln!(s, "ell {}", self.ell);
        let _ = writeln!(s, "q {}", self.q);
        match self.sigma {
            Some((x, y)) => {
                let _ = writeln!(s, "sigma {x} {y}");
            }
            None => {
                let _ = writeln!(s, "sigma inf");
            }
        }
        let _ = writeln!(s, "sigma_order {}", self.sigma_order);
        let _ = writeln!(s, "det_value {}", self.det_value);
        let _ = writeln!(s, "untwisted_det {}", self.untwisted_det);
        s
    }
}

const FIELDS: [&str; 9] =
    ["a", "b", "v", "ell", "q", "sigma", "sigma_order", "det_value", "untwisted_det"];

/// Parses the text form: the header line, then one `key value` line per
/// field, each exactly once. Blank lines are ignored.
pub fn parse_certificate(text: &str) -> Result<CertificateClaims> {
    let bad = |m: String| Error::InvalidCertificate(m);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    if lines.next() != Some(CERTIFICATE_HEADER) {
        return Err(bad(format!("missing header line '{CERTIFICATE_HEADER}'")));
    }
    let mut map = BTreeMap::new();
    for line in lines {
        let (k, v) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        if !FIELDS.contains(&k) {
            return Err(bad(format!("unknown field '{k}'")));
        }
        if map.insert(k, v.trim()).is_some() {
            return Err(bad(format!("duplicate field '{k}'")));
        }
    }
    let get = |k: &str| map.get(k).copied().ok_or_else(|| bad(format!("missing field '{k}'")));
    let rational = |k: &str| {
        get(k).and_then(|s| parse_rational(s).ok_or_else(|| bad(format!("malformed {k}"))))
    };
    let small = |k: &str| get(k).and_then(|s| s.parse::<u64>().map_err(|_| bad(format!("malformed {k}"))));
    let sigma = match get("sigma")? {
        "inf" => None,
        s => {
            let parts: Vec<&str> = s.split_whitespace().collect();
            let [x, y] = parts[..] else {
                return Err(bad("malformed sigma".into()));
            };
            let parse = |t: &str| t.parse::<u64>().map_err(|_| bad("malformed sigma".into()));
            Some((parse(x)?, parse(y)?))
        }
    };
    Ok(CertificateClaims {
        a: rational("a")?,
        b: rational("b")?,
        v: small("v")?,
        ell: small("ell")?,
        q: small("q")?,
        sigma,
        sigma_order: small("sigma_order")?,
        det_value: rational("det_value")?,
        untwisted_det: get("untwisted_det")?
            .parse()
            .map_err(|_| bad("malformed untwisted_det".into()))?,
    })
}

fn evidence(c: &PicardCurve, lift: &LiftSumResult, det: &FrobeniusDetResult) -> String {
    let sigma = match sigma_coords(&lift.sigma) {
        Some((x, y)) => format!("({x}, {y})"),
        None => "infinity".into(),
    };
    format!(
        "over F_{v}, sigma = {sigma} on y^3 = x^2 + {a}x + {b} has order {n}, divisible by ell = {ell}; \
         2D = pi^*(sigma) and ker(pi^*) has order dividing 4 (assumed, not recomputed), so ell divides the order of D; \
         det(Frob_{q} - 1) on V = {det} is an ell-adic unit, so H^1(Gal_Q, V) has no ell-torsion; \
         hence the Ceresa cycle of {c} has infinite order",
        v = lift.v,
        a = lift.a,
        b = lift.b,
        n = lift.sigma_order,
        ell = det.ell,
        q = det.q,
        det = det.det_value,
    )
}

/// Runs every check for the triple `(v, ell, q)`; the error names the first failure.
fn build(c: &PicardCurve, v: u64, ell: u64, q: u64) -> std::result::Result<InfinitudeCertificate, String> {
    if ell <= 3 {
        return Err("ell must exceed 3".into());
    }
    for (name, n) in [("v", v), ("ell", ell), ("q", q)] {
        if !is_prime(n) {
            return Err(format!("{name} = {n} is not prime"));
        }
    }
    if ell == v {
        return Err("ell must differ from v".into());
    }
    if ell == q {
        return Err("ell must differ from q".into());
    }
    for (name, n) in [("v", v), ("q", q)] {
        if !good_reduction(c, n) {
            return Err(format!("bad reduction at {name} = {n}"));
        }
    }
    let lift = lift_sum(c, v).map_err(|e| e.to_string())?;
    if lift.sigma_order % ell != 0 {
        return Err(format!("ell = {ell} does not divide sigma_order = {}", lift.sigma_order));
    }
    let (det_value, untwisted_det) = frobenius_det_values(c, q).map_err(|e| e.to_string())?;
    let unit_mod_ell = is_ell_unit(&det_value, ell);
    if !unit_mod_ell {
        return Err(format!("det_value is not a unit mod ell = {ell}"));
    }
    let det = FrobeniusDetResult { q, ell, det_value, untwisted_det, unit_mod_ell };
    Ok(InfinitudeCertificate {
        a: c.a().clone(),
        b: c.b().clone(),
        v,
        ell,
        q,
        evidence: evidence(c, &lift, &det),
        lift,
        det,
    })
}

/// Re-derives every field of a parsed certificate and compares.
pub fn validate_certificate(claims: &CertificateClaims) -> Result<InfinitudeCertificate> {
    let bad = |m: String| Error::InvalidCertificate(m);
    if claims.ell <= 3 {
        return Err(bad("ell must exceed 3".into()));
    }
    let c = PicardCurve::new(claims.a.clone(), claims.b.clone())
        .map_err(|_| bad("degenerate curve: Delta=0".into()))?;
    let cert = build(&c, claims.v, claims.ell, claims.q);
    let cert = match cert {
        Ok(cert) => cert,
        // Report a tampered order before the divisibility it breaks.
        Err(m) if m.contains("does not divide sigma_order") => {
            let lift = lift_sum(&c, claims.v)?;
            if lift.sigma_order != claims.sigma_order {
                return Err(bad("sigma_order mismatch".into()));
            }
            return Err(bad(m));
        }
        Err(m) => return Err(bad(m)),
    };
    if sigma_coords(&cert.lift.sigma) != claims.sigma {
        return Err(bad("sigma mismatch".into()));
    }
    if cert.lift.sigma_order != claims.sigma_order {
        return Err(bad("sigma_order mismatch".into()));
    }
    if cert.det.det_value != claims.det_value {
        return Err(bad("det_value mismatch".into()));
    }
    if cert.det.untwisted_det != claims.untwisted_det {
        return Err(bad("untwisted_det mismatch".into()));
    }
    Ok(cert)
}

/// Certificate from hints, or by search over primes up to `v_max`.
///
/// The search visits `v` ascending, then the prime factors `ell > 3` of the
/// order of `σ` ascending, then `q` ascending, and returns the first
/// triple that passes, so the result does not depend on scheduling.
/// `NoCertificateFound` is not evidence of torsion.
pub fn certify_infinite(
    c: &PicardCurve,
    hints: Option<CertificateHints>,
    v_max: u64,
) -> Result<InfinitudeCertificate> {
    if let Some(h) = hints {
        return build(c, h.v, h.ell, h.q).map_err(Error::InvalidHint);
    }
    let primes: Vec<u64> = primes_up_to(v_max).into_iter().filter(|&p| p > 3).collect();
    let mut dets: HashMap<u64, Option<Rational>> = HashMap::new();
    for &v in &primes {
        if !good_reduction(c, v) {
            continue;
        }
        let lift = lift_sum(c, v)?;
        for (ell, _) in factor_u64(lift.sigma_order) {
            if ell <= 3 || ell == v {
                continue;
            }
            for &q in &primes {
                if q == ell || !good_reduction(c, q) {
                    continue;
                }
                let det = dets
                    .entry(q)
                    .or_insert_with(|| frobenius_det_values(c, q).ok().map(|(d, _)| d));
                if det.as_ref().is_some_and(|d| is_ell_unit(d, ell)) {
                    return build(c, v, ell, q).map_err(Error::Internal);
                }
            }
        }
    }
    Err(Error::NoCertificateFound(v_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn worked() -> InfinitudeCertificate {
        let c = PicardCurve::new(int(1), int(1)).unwrap();
        certify_infinite(&c, Some(CertificateHints { v: 41, ell: 7, q: 11 }), 200).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let cert = worked();
        let text = cert.to_text();
        assert!(text.contains("sigma 37 15\n"));
        let claims = parse_certificate(&text).unwrap();
        assert_eq!(claims, cert.claims());
        assert_eq!(validate_certificate(&claims).unwrap(), cert);
    }

    #[test]
    fn tampering_is_named() {
        let text = worked().to_text();
        let edit = |from: &str, to: &str| {
            let claims = parse_certificate(&text.replace(from, to)).unwrap();
            validate_certificate(&claims).unwrap_err()
        };
        assert_eq!(edit("sigma_order 7", "sigma_order 6"), Error::InvalidCertificate("sigma_order mismatch".into()));
        assert_eq!(edit("ell 7", "ell 3"), Error::InvalidCertificate("ell must exceed 3".into()));
        assert_eq!(edit("sigma 37 15", "sigma 37 16"), Error::InvalidCertificate("sigma mismatch".into()));
    }

    #[test]
    fn bad_hints_are_named() {
        let c = PicardCurve::new(int(1), int(1)).unwrap();
        let e = certify_infinite(&c, Some(CertificateHints { v: 41, ell: 5, q: 11 }), 200).unwrap_err();
        assert!(matches!(e, Error::InvalidHint(m) if m.contains("does not divide")));
    }
}
