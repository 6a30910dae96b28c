use num_bigint::BigInt;
use num_traits::Zero;

use super::{lpoly, reduce_curve};
use crate::arith::{is_prime, RatPolynomial, Rational, RationalMatrix};
use crate::picard::PicardCurve;
use crate::{Error, Result};

/// `det(Frob_q - 1)` on `V = H^1(C)(1) ⊕ H^3(J)(2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDetResult {
    pub q: u64,
    pub ell: u64,
    /// `det(M/q - I) · det(Λ^3 M / q^2 - I)` with `M` the Frobenius companion matrix.
    pub det_value: Rational,
    /// The same product without the Tate twists, `det(M - I) · det(Λ^3 M - I)`.
    pub untwisted_det: BigInt,
    /// Numerator and denominator of `det_value` are both prime to `ell`.
    pub unit_mod_ell: bool,
}

/// Characteristic polynomial `T^6 L_C(1/T)` of Frobenius on `H^1`.
pub fn frobenius_char_poly(c: &PicardCurve, q: u64) -> Result<RatPolynomial> {
    let (a, b) = reduce_curve(c, q)?;
    let l = lpoly(a, b)?;
    let mut coeffs: Vec<Rational> =
        l.l_c.coeffs().iter().map(|v| Rational::from_integer(v.clone())).collect();
    coeffs.reverse();
    Ok(RatPolynomial::new(coeffs))
}

pub fn frobenius_det(c: &PicardCurve, q: u64, ell: u64) -> Result<FrobeniusDetResult> {
    if ell <= 3 || !is_prime(ell) {
        return Err(Error::InvalidInput(format!("ell = {ell} must be a prime greater than 3")));
    }
    if ell == q {
        return Err(Error::InvalidInput("ell must differ from q".into()));
    }
    let (det_value, untwisted_det) = frobenius_det_values(c, q)?;
    let unit_mod_ell = is_ell_unit(&det_value, ell);
    Ok(FrobeniusDetResult { q, ell, det_value, untwisted_det, unit_mod_ell })
}

pub(crate) fn is_ell_unit(x: &Rational, ell: u64) -> bool {
    let l = BigInt::from(ell);
    !x.is_zero() && !(x.numer() % &l).is_zero() && !(x.denom() % &l).is_zero()
}

/// Both determinants from the characteristic polynomials of `M` and `Λ^3 M`:
/// `det(M/q - I) = P(q)/q^6`, `det(Λ^3 M/q^2 - I) = χ(q^2)/q^40`, and the
/// untwisted factors are `P(1)` and `χ(1)`.
pub(crate) fn frobenius_det_values(c: &PicardCurve, q: u64) -> Result<(Rational, BigInt)> {
    let p = frobenius_char_poly(c, q)?;
    let m = RationalMatrix::companion(&p);
    let chi = m.exterior_power(3).char_poly();
    let qr = Rational::from_integer(q.into());
    let one = Rational::from_integer(1.into());
    let h1 = p.eval(&qr) / num_traits::pow(qr.clone(), 6);
    let h3 = chi.eval(&(&qr * &qr)) / num_traits::pow(qr, 40);
    let untwisted = p.eval(&one) * chi.eval(&one);
    if !untwisted.is_integer() {
        return Err(Error::Internal("untwisted determinant is not integral".into()));
    }
    let untwisted = untwisted.to_integer();
    Ok((h1 * h3, untwisted))
}
