use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use crate::arith::{factor_u64, legendre, Fp, Rational};
use crate::{Error, Result};

/// Base fields the group law runs over.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;
    /// The integer `v` in the same field as `self`.
    fn int_like(&self, v: i64) -> Self;
}

impl Field for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn int_like(&self, v: i64) -> Self {
        Rational::from_integer(v.into())
    }
}

impl Field for Fp {
    fn is_zero(&self) -> bool {
        Fp::is_zero(self)
    }
    fn int_like(&self, v: i64) -> Self {
        Fp::from_i64(v, self.modulus())
    }
}

/// A point of `y^2 = x^3 + d`, affine or at infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CurvePoint<F> {
    Infinity,
    Affine(F, F),
}

impl<F> CurvePoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            CurvePoint::Affine(x, _) => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            CurvePoint::Affine(_, y) => Some(y),
            CurvePoint::Infinity => None,
        }
    }
}

impl<F: fmt::Display> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

/// `y^2 = x^3 + d` with `d != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassCurve<F> {
    d: F,
}

pub type WeierstrassCurveQ = WeierstrassCurve<Rational>;
pub type WeierstrassCurveFp = WeierstrassCurve<Fp>;

impl<F: Field> WeierstrassCurve<F> {
    pub fn new(d: F) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DegenerateCurve);
        }
        Ok(WeierstrassCurve { d })
    }

    pub fn d(&self) -> &F {
        &self.d
    }

    fn rhs(&self, x: &F) -> F {
        x.clone() * x.clone() * x.clone() + self.d.clone()
    }

    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => y.clone() * y.clone() == self.rhs(x),
        }
    }

    /// Point from coordinates, checked to lie on the curve.
    pub fn point(&self, x: F, y: F) -> Result<CurvePoint<F>> {
        let p = CurvePoint::Affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::InvalidInput(format!("{p:?} is not on y^2 = x^3 + {:?}", self.d)))
        }
    }

    pub fn neg(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y.clone()),
        }
    }

    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1.clone() + y2.clone()).is_zero() {
                return CurvePoint::Infinity;
            }
            let three = x1.int_like(3);
            let two = x1.int_like(2);
            three * x1.clone() * x1.clone() / (two * y1.clone())
        } else {
            (y2.clone() - y1.clone()) / (x2.clone() - x1.clone())
        };
        let x3 = slope.clone() * slope.clone() - x1.clone() - x2.clone();
        let y3 = slope * (x1.clone() - x3.clone()) - y1.clone();
        CurvePoint::Affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        self.add(p, &self.neg(q))
    }

    /// `n * p` by double-and-add.
    pub fn mul(&self, n: i64, p: &CurvePoint<F>) -> CurvePoint<F> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.double(&pow);
            }
        }
        acc
    }

    /// Sum of a sequence of points.
    pub fn sum<'a>(&self, pts: impl IntoIterator<Item = &'a CurvePoint<F>>) -> CurvePoint<F>
    where
        F: 'a,
    {
        pts.into_iter().fold(CurvePoint::Infinity, |acc, q| self.add(&acc, q))
    }
}

impl WeierstrassCurveQ {
    pub fn from_rational(d: Rational) -> Result<Self> {
        Self::new(d)
    }

    /// Reduction modulo `p`, or `BadReduction` when `p` divides a
    /// denominator of `d` or the discriminant `-432 d^2`.
    pub fn reduce(&self, p: u64) -> Result<WeierstrassCurveFp> {
        if p <= 3 {
            return Err(Error::BadReduction(p));
        }
        let d = Fp::from_rational(&self.d, p).ok_or(Error::BadReduction(p))?;
        WeierstrassCurve::new(d).map_err(|_| Error::BadReduction(p))
    }

    pub fn reduce_point(&self, pt: &CurvePoint<Rational>, p: u64) -> Option<CurvePoint<Fp>> {
        match pt {
            CurvePoint::Infinity => Some(CurvePoint::Infinity),
            CurvePoint::Affine(x, y) => Some(CurvePoint::Affine(
                Fp::from_rational(x, p)?,
                Fp::from_rational(y, p)?,
            )),
        }
    }
}

impl WeierstrassCurveFp {
    pub fn modulus(&self) -> u64 {
        self.d.modulus()
    }

    /// All points, infinity first, affine points sorted.
    pub fn points(&self) -> Vec<CurvePoint<Fp>> {
        let p = self.modulus();
        let mut out = vec![CurvePoint::Infinity];
        for xv in 0..p {
            let x = Fp::new(xv, p);
            if let Some((r, s)) = crate::arith::sqrt_mod(self.rhs(&x)) {
                out.push(CurvePoint::Affine(x, r));
                if r != s {
                    out.push(CurvePoint::Affine(x, s));
                }
            }
        }
        out
    }
}

/// `#E(F_p) = 1 + sum_x (1 + (x^3 + d | p))`.
pub fn group_order_fp(e: &WeierstrassCurveFp) -> u64 {
    let p = e.modulus();
    let mut n: i64 = 1 + p as i64;
    for xv in 0..p {
        let x = Fp::new(xv, p);
        n += legendre(e.rhs(&x)) as i64;
    }
    n as u64
}

/// Exact order of `pt`, by stripping prime factors from the group order.
pub fn order_fp(e: &WeierstrassCurveFp, pt: &CurvePoint<Fp>) -> u64 {
    order_dividing(e, pt, group_order_fp(e))
}

/// Exact order of `pt`, given a multiple `n` of it.
pub(crate) fn order_dividing(e: &WeierstrassCurveFp, pt: &CurvePoint<Fp>, n: u64) -> u64 {
    let mut n = n;
    for (q, k) in factor_u64(n) {
        for _ in 0..k {
            if e.mul((n / q) as i64, pt).is_infinity() {
                n /= q;
            } else {
                break;
            }
        }
    }
    debug_assert!(e.mul(n as i64, pt).is_infinity());
    n
}

impl<F: Field> WeierstrassCurve<F> {
    /// True when `n * p = O`.
    pub fn is_killed_by(&self, n: i64, p: &CurvePoint<F>) -> bool {
        self.mul(n, p).is_infinity()
    }
}
