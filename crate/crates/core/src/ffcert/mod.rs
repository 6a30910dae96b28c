//! Finite-field side: point counts on the Picard family, L-polynomials and
//! the splitting `L_C = L_E L_P`, the lift-set sum `σ`, the Frobenius
//! determinant on `V`, and infinite-order certificates built from them.

mod cert;
mod count;
mod field;
mod frob;
mod lift;

pub use cert::{
    certify_infinite, parse_certificate, validate_certificate, CertificateClaims,
    CertificateHints, InfinitudeCertificate, CERTIFICATE_HEADER,
};
pub use count::{count_curve, lpoly, CountRecord, LPolyRecord};
pub use field::{ExtElem, ExtField};
pub use frob::{frobenius_char_poly, frobenius_det, FrobeniusDetResult};
pub use lift::{lift_sum, LiftSumResult};

use crate::arith::{is_prime, Fp};
use crate::picard::PicardCurve;
use crate::{Error, Result};

/// `(a, b)` of the integral model `(λ^6 a, λ^12 b)` reduced mod `p`, or
/// `BadReduction` when `p <= 3`, `p` is not prime, or `p` divides its `Δ`.
pub fn reduce_curve(c: &PicardCurve, p: u64) -> Result<(Fp, Fp)> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::BadReduction(p));
    }
    let (m, _) = c.integral_model();
    let a = Fp::from_bigint(&m.a().to_integer(), p);
    let b = Fp::from_bigint(&m.b().to_integer(), p);
    count::check_good(a, b)?;
    Ok((a, b))
}

/// `p > 3` prime not dividing `Δ` of the integral model.
pub fn good_reduction(c: &PicardCurve, p: u64) -> bool {
    reduce_curve(c, p).is_ok()
}
