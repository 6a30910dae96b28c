//! The family `y^3 = x^4 + a x^2 + b`: invariants, isomorphism over `Q` and
//! over the algebraic closure, the associated elliptic curves, the torsion
//! decision through the marked point, and the torsion locus in `t`.

mod locus;

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{rational_nth_root, Rational};
use crate::elliptic::{torsion_j0_q, CurvePoint, WeierstrassCurveQ};
use crate::{Error, Result};

pub use locus::{enumerate_torsion_locus, reduction_check, TorsionLocusEntry};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `16 b (a^2 - 4b)`.
pub fn discriminant(a: &Rational, b: &Rational) -> Rational {
    q(16) * b * (a * a - q(4) * b)
}

/// A nondegenerate curve `y^3 = x^4 + a x^2 + b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PicardCurve {
    a: Rational,
    b: Rational,
}

impl PicardCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if discriminant(&a, &b).is_zero() {
            return Err(Error::DegenerateCurve);
        }
        Ok(PicardCurve { a, b })
    }

    /// The one-parameter model `(a, b) = (2t, 1)`.
    pub fn from_t(t: &Rational) -> Result<Self> {
        Self::new(t * q(2), Rational::one())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn invariants(&self) -> PicardInvariants {
        PicardInvariants {
            delta: discriminant(&self.a, &self.b),
            j: (q(4) * &self.b - &self.a * &self.a) / (q(4) * &self.b),
        }
    }

    /// The isomorphic curve `(λ^6 a, λ^12 b)`.
    pub fn scale(&self, lambda: &Rational) -> Self {
        let l6 = num_traits::pow(lambda.clone(), 6);
        PicardCurve { a: &self.a * &l6, b: &self.b * &l6 * &l6 }
    }

    /// An integral model `(λ^6 a, λ^12 b)` with `λ` the least common
    /// denominator of `a` and `b`, together with that `λ`.
    pub fn integral_model(&self) -> (PicardCurve, Rational) {
        let l = num_integer::Integer::lcm(self.a.denom(), self.b.denom());
        let lambda = Rational::from_integer(l);
        (self.scale(&lambda), lambda)
    }
}

impl fmt::Display for PicardCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^3 = x^4 + ({})x^2 + ({})", self.a, self.b)
    }
}

/// Discriminant and `j`-invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PicardInvariants {
    pub delta: Rational,
    pub j: Rational,
}

/// Invariants of `(a, b)`, or `DegenerateCurve` when `Δ = 0`.
pub fn invariants(a: &Rational, b: &Rational) -> Result<PicardInvariants> {
    Ok(PicardCurve::new(a.clone(), b.clone())?.invariants())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsomorphismMode {
    OverQ,
    OverClosure,
}

/// Evidence of an isomorphism. Over `Q` it carries the positive `λ` with
/// `(a2, b2) = (λ^6 a1, λ^12 b1)`; over the closure equality of `j` suffices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsomorphismWitness {
    pub lambda: Option<Rational>,
}

pub fn is_isomorphic(
    c1: &PicardCurve,
    c2: &PicardCurve,
    mode: IsomorphismMode,
) -> Option<IsomorphismWitness> {
    match mode {
        IsomorphismMode::OverClosure => (c1.invariants().j == c2.invariants().j)
            .then_some(IsomorphismWitness { lambda: None }),
        IsomorphismMode::OverQ => {
            let lambda = if !c1.a.is_zero() {
                if c2.a.is_zero() {
                    return None;
                }
                let r = &c2.a / &c1.a;
                if r.is_negative() {
                    return None;
                }
                rational_nth_root(&r, 6)?
            } else {
                if !c2.a.is_zero() {
                    return None;
                }
                let r = &c2.b / &c1.b;
                if r.is_negative() {
                    return None;
                }
                rational_nth_root(&r, 12)?
            };
            (c1.scale(&lambda) == *c2).then_some(IsomorphismWitness { lambda: Some(lambda) })
        }
    }
}

/// `E: y^2 = x^3 + 16(a^2 - 4b)`, the twist `E^Δ: y^2 = x^3 + 4b(a^2 - 4b)^2`,
/// and the marked point `Q = (a^2 - 4b, a(a^2 - 4b))` on `E^Δ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssociatedCurves {
    pub e: WeierstrassCurveQ,
    pub e_delta: WeierstrassCurveQ,
    pub q: CurvePoint<Rational>,
}

pub fn associated_curves(c: &PicardCurve) -> Result<AssociatedCurves> {
    let (a, b) = (&c.a, &c.b);
    let m = a * a - q(4) * b;
    let e = WeierstrassCurveQ::new(q(16) * &m)?;
    let e_delta = WeierstrassCurveQ::new(q(4) * b * &m * &m)?;
    let pt = CurvePoint::Affine(m.clone(), a * &m);
    if !e_delta.contains(&pt) {
        return Err(Error::Internal(format!("marked point off E^Delta for {c}")));
    }
    Ok(AssociatedCurves { e, e_delta, q: pt })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CeresaStatus {
    Torsion,
    Infinite,
}

impl CeresaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CeresaStatus::Torsion => "torsion",
            CeresaStatus::Infinite => "infinite",
        }
    }
}

/// Torsion decision for the Ceresa cycle at the point at infinity.
///
/// `q_order` is the order of the marked point `Q`, present exactly when the
/// cycle is torsion; the order of the cycle itself is not determined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CeresaVerdict {
    pub status: CeresaStatus,
    pub q_order: Option<u64>,
    pub evidence: String,
}

/// The cycle is torsion exactly when `Q` is a torsion point of `E^Δ(Q)`.
pub fn decide_ceresa(c: &PicardCurve) -> Result<CeresaVerdict> {
    let ac = associated_curves(c)?;
    let tors = torsion_j0_q(ac.e_delta.d())?;
    let group = format!("{:?}", tors.structure);
    let curve = format!("y^2 = x^3 + ({})", ac.e_delta.d());
    Ok(match tors.order_of(&ac.e_delta, &ac.q) {
        Some(n) => CeresaVerdict {
            status: CeresaStatus::Torsion,
            q_order: Some(n),
            evidence: format!(
                "Q = {} on {curve} has order {n} in the rational torsion subgroup {group}",
                ac.q
            ),
        },
        None => CeresaVerdict {
            status: CeresaStatus::Infinite,
            q_order: None,
            evidence: format!(
                "Q = {} on {curve} lies outside the rational torsion subgroup {group}",
                ac.q
            ),
        },
    })
}

/// [`decide_ceresa`] on `(2t, 1)`.
pub fn decide_ceresa_t(t: &Rational) -> Result<CeresaVerdict> {
    decide_ceresa(&PicardCurve::from_t(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn c(a: i64, b: i64) -> PicardCurve {
        PicardCurve::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn invariant_examples() {
        let i = invariants(&int(0), &int(1)).unwrap();
        assert_eq!((i.delta, i.j), (int(-64), int(1)));
        let i = invariants(&int(1), &int(1)).unwrap();
        assert_eq!((i.delta, i.j), (int(-48), rat(3, 4)));
        assert_eq!(invariants(&int(2), &int(1)), Err(Error::DegenerateCurve));
    }

    #[test]
    fn isomorphism_examples() {
        let w = is_isomorphic(&c(1, 1), &c(64, 4096), IsomorphismMode::OverQ).unwrap();
        assert_eq!(w.lambda, Some(int(2)));
        assert!(is_isomorphic(&c(0, 1), &c(0, 64), IsomorphismMode::OverQ).is_none());
        assert!(is_isomorphic(&c(0, 1), &c(0, 64), IsomorphismMode::OverClosure).is_some());
        let w = is_isomorphic(&c(6, -3), &c(6, -3), IsomorphismMode::OverQ).unwrap();
        assert_eq!(w.lambda, Some(int(1)));
    }

    #[test]
    fn associated_curve_examples() {
        let ac = associated_curves(&c(6, -3)).unwrap();
        assert_eq!(*ac.e.d(), int(768));
        assert_eq!(*ac.e_delta.d(), int(-27648));
        assert_eq!(ac.q, CurvePoint::Affine(int(48), int(288)));
        assert_eq!(associated_curves(&c(0, 1)).unwrap().q, CurvePoint::Affine(int(-4), int(0)));
        let t = rat(5, 7);
        let ac = associated_curves(&PicardCurve::from_t(&t).unwrap()).unwrap();
        let m = int(4) * &t * &t - int(4);
        assert_eq!(ac.q, CurvePoint::Affine(m.clone(), int(2) * &t * m));
    }

    #[test]
    fn decision_examples() {
        let v = decide_ceresa(&c(0, 1)).unwrap();
        assert_eq!((v.status, v.q_order), (CeresaStatus::Torsion, Some(2)));
        let v = decide_ceresa(&c(6, 1)).unwrap();
        assert_eq!((v.status, v.q_order), (CeresaStatus::Torsion, Some(6)));
        let v = decide_ceresa(&c(6, -3)).unwrap();
        assert_eq!((v.status, v.q_order), (CeresaStatus::Torsion, Some(3)));
        let v = decide_ceresa(&c(4, 1)).unwrap();
        assert_eq!((v.status, v.q_order), (CeresaStatus::Infinite, None));
        assert_eq!(decide_ceresa_t(&int(1)), Err(Error::DegenerateCurve));
        assert_eq!(decide_ceresa_t(&int(3)).unwrap().q_order, Some(6));
    }
}
