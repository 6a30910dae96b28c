//! Néron–Tate heights on `y^2 = x^3 + d` over `Q` and the Northcott scan
//! over the `t`-line.
//!
//! Heights use the normalization `ĥ(P) ≈ h(x(P))/2` and are the sum of an
//! archimedean local height (Tate's series) and non-archimedean local
//! heights at the primes dividing `6d` on an integral model. Torsion points
//! are detected exactly and get height `0` with no floating computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{factor_integer, nth_root_exact, to_f64_lossy, Rational};
use crate::elliptic::{torsion_j0_q, CurvePoint, WeierstrassCurveQ};
use crate::picard::{associated_curves, decide_ceresa_t, CeresaStatus, CeresaVerdict, PicardCurve};
use crate::{Error, Result};

/// A height and an upper bound on its absolute error.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct HeightValue {
    pub value: f64,
    pub error_bound: f64,
}

impl HeightValue {
    pub const ZERO: HeightValue = HeightValue { value: 0.0, error_bound: 0.0 };
}

/// One parameter of the scan with its verdict and the height of `Q_t`.
#[derive(Clone, PartialEq, Debug)]
pub struct NorthcottRow {
    pub t: Rational,
    pub verdict: CeresaVerdict,
    pub height: HeightValue,
}

fn log_abs_int(n: &BigInt) -> f64 {
    let n = n.magnitude();
    let bits = n.bits();
    if bits < 1000 {
        n.to_f64().unwrap().ln()
    } else {
        let shift = bits - 900;
        (n >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `log max(|m|, n)` for `x = m/n` in lowest terms; `h(0) = 0`.
pub fn naive_height(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    log_abs_int(x.numer()).max(log_abs_int(x.denom()))
}

/// `v_p` of a nonzero rational; `None` for zero.
fn valuation(x: &Rational, p: &BigInt) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let count = |n: &BigInt| {
        let mut n = n.clone();
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        k
    };
    Some(count(x.numer()) - count(x.denom()))
}

/// Archimedean local height by Tate's series on the model shifted by
/// `x = X - r`, with `r` chosen so that `X >= 1` on all real points.
fn archimedean(d: &BigInt, x: &Rational) -> (f64, f64) {
    let r = if d.is_positive() {
        nth_root_exact(d, 3).unwrap_or_else(|| d.cbrt()) + 2
    } else {
        BigInt::one()
    };
    let rf = r.to_f64().unwrap();
    let dm = d - &r * &r * &r;
    let b2 = -12.0 * rf;
    let b4 = 6.0 * rf * rf;
    let b6 = (&dm * 4u32).to_f64().unwrap();
    let b8 = (-(&r * 12u32) * &dm - r.pow(4) * 9u32).to_f64().unwrap();
    let big_x = x + Rational::from_integer(r);
    let mut lam = 0.5 * (log_abs_int(big_x.numer()) - log_abs_int(big_x.denom()));
    let mut t = to_f64_lossy(&big_x.recip());
    let mut scale = 0.125;
    let mut magnitude = lam.abs();
    for _ in 0..40 {
        let z = 1.0 - b4 * t * t - 2.0 * b6 * t.powi(3) - b8 * t.powi(4);
        let w = 4.0 * t + b2 * t * t + 2.0 * b4 * t.powi(3) + b6 * t.powi(4);
        let term = scale * z.abs().ln();
        lam += term;
        magnitude += term.abs();
        t = w / z;
        scale /= 4.0;
    }
    (lam, magnitude)
}

/// `L_p` with the local height at `p` equal to `L_p log(p) / 2`, for a
/// non-torsion point of the integral model `y^2 = x^3 + d`.
fn non_archimedean_index(d: &BigInt, x: &Rational, y: &Rational, p: &BigInt) -> f64 {
    let q = |v: i64| Rational::from_integer(v.into());
    let dd = Rational::from_integer(d.clone());
    let vx = valuation(x, p).unwrap_or(i64::MAX);
    let a = valuation(&(q(3) * x * x), p).unwrap_or(i64::MAX);
    let b = valuation(&(q(2) * y), p).unwrap_or(i64::MAX);
    if a <= 0 || b <= 0 {
        return (-vx).max(0) as f64;
    }
    let c = valuation(&(q(3) * x * x * x * x + q(12) * &dd * x), p).unwrap_or(i64::MAX);
    // c4 = 0 for these curves, so the multiplicative branch never applies.
    if c >= 3 * b {
        -2.0 * b as f64 / 3.0
    } else {
        -(c as f64) / 4.0
    }
}

/// Canonical height of a rational point, exactly `0` for torsion points.
pub fn canonical_height(e: &WeierstrassCurveQ, pt: &CurvePoint<Rational>) -> Result<HeightValue> {
    if !e.contains(pt) {
        return Err(Error::InvalidInput("point is not on the curve".into()));
    }
    let CurvePoint::Affine(x, y) = pt else {
        return Ok(HeightValue::ZERO);
    };
    if torsion_j0_q(e.d())?.order_of(e, pt).is_some() {
        return Ok(HeightValue::ZERO);
    }
    // Integral model via (x, y) -> (n^2 x, n^3 y), d -> n^6 d.
    let n = Rational::from_integer(e.d().denom().clone());
    let d = (e.d() * num_traits::pow(n.clone(), 6)).to_integer();
    let x = x * &n * &n;
    let y = y * &n * &n * &n;

    let (arch, magnitude) = archimedean(&d, &x);
    let mut fin = 0.5 * log_abs_int(x.denom());
    let bad = factor_integer(&(&d * 6))
        .ok_or_else(|| Error::Internal(format!("could not factor 6d = {}", &d * 6)))?;
    for (p, _) in bad {
        let logp = log_abs_int(&p);
        let naive = (-valuation(&x, &p).unwrap_or(0)).max(0) as f64;
        fin += 0.5 * (non_archimedean_index(&d, &x, &y, &p) - naive) * logp;
    }
    let value = arch + fin;
    let error_bound = 1e-12 * (1.0 + magnitude + fin.abs());
    Ok(HeightValue { value, error_bound })
}

/// Every `t = m/n` in lowest terms with `max(|m|, n) <= b`, `t != ±1`, with
/// its verdict and `ĥ(Q_t)`, ascending in `t`; rows above `bound` are dropped.
pub fn northcott_scan(b: u64, bound: f64) -> Result<Vec<NorthcottRow>> {
    let b = b as i64;
    let mut ts = Vec::new();
    for den in 1..=b {
        for num in -b..=b {
            if num.gcd(&den) == 1 && !(den == 1 && num.abs() == 1) {
                ts.push(Rational::new(num.into(), den.into()));
            }
        }
    }
    ts.sort();
    let rows: Result<Vec<NorthcottRow>> = ts
        .into_par_iter()
        .map(|t| {
            let verdict = decide_ceresa_t(&t)?;
            let ac = associated_curves(&PicardCurve::from_t(&t)?)?;
            let height = canonical_height(&ac.e_delta, &ac.q)?;
            debug_assert_eq!(verdict.status == CeresaStatus::Torsion, height.value == 0.0);
            Ok(NorthcottRow { t, verdict, height })
        })
        .collect();
    Ok(rows?.into_iter().filter(|r| r.height.value <= bound).collect())
}
