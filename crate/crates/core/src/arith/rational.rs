use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"m/n"` or `"m"`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Option<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => parse_int(s).map(Rational::from_integer),
    }
}

/// Exact `k`-th root of an integer, if it exists in `Z`.
pub fn nth_root_exact(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return nth_root_exact(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// Exact `k`-th root of a rational, if it exists in `Q`. For even `k` the
/// nonnegative root is returned.
pub fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = nth_root_exact(q.numer(), k)?;
    let d = nth_root_exact(q.denom(), k)?;
    Some(Rational::new(n, d))
}

/// Floating approximation that survives numerators and denominators beyond
/// the `f64` exponent range, as long as the quotient itself is representable.
pub fn to_f64_lossy(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() && (v != 0.0 || q.is_zero()) {
            return v;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    (n / d) * 2f64.powi((shift_n - shift_d) as i32)
}
