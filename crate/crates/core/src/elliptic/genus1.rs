use super::{CurvePoint, Field, WeierstrassCurve};
use crate::Result;

/// A point of the genus-1 model `y^3 = x^2 + a x + b`, affine or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Genus1Point<F> {
    Infinity,
    Affine(F, F),
}

/// `(x, y) -> (4y, 8x + 4a)`, landing on `y^2 = x^3 + 16(a^2 - 4b)`; infinity goes to `O`.
pub fn genus1_to_weierstrass<F: Field>(a: &F, p: &Genus1Point<F>) -> CurvePoint<F> {
    match p {
        Genus1Point::Infinity => CurvePoint::Infinity,
        Genus1Point::Affine(x, y) => {
            let four = a.int_like(4);
            let eight = a.int_like(8);
            CurvePoint::Affine(four.clone() * y.clone(), eight * x.clone() + four * a.clone())
        }
    }
}

/// Inverse of [`genus1_to_weierstrass`].
pub fn weierstrass_to_genus1<F: Field>(a: &F, p: &CurvePoint<F>) -> Genus1Point<F> {
    match p {
        CurvePoint::Infinity => Genus1Point::Infinity,
        CurvePoint::Affine(u, v) => {
            let four = a.int_like(4);
            let eight = a.int_like(8);
            Genus1Point::Affine(
                (v.clone() - four.clone() * a.clone()) / eight,
                u.clone() / four,
            )
        }
    }
}

/// `y^3 = x^2 + a x + b` with `a^2 != 4b`, group law transported from its
/// Weierstrass model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Genus1Curve<F> {
    a: F,
    b: F,
    w: WeierstrassCurve<F>,
}

impl<F: Field> Genus1Curve<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        let sixteen = a.int_like(16);
        let four = a.int_like(4);
        let w = WeierstrassCurve::new(sixteen * (a.clone() * a.clone() - four * b.clone()))?;
        Ok(Genus1Curve { a, b, w })
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    pub fn weierstrass(&self) -> &WeierstrassCurve<F> {
        &self.w
    }

    pub fn contains(&self, p: &Genus1Point<F>) -> bool {
        match p {
            Genus1Point::Infinity => true,
            Genus1Point::Affine(x, y) => {
                y.clone() * y.clone() * y.clone()
                    == x.clone() * x.clone() + self.a.clone() * x.clone() + self.b.clone()
            }
        }
    }

    pub fn to_weierstrass(&self, p: &Genus1Point<F>) -> CurvePoint<F> {
        genus1_to_weierstrass(&self.a, p)
    }

    pub fn from_weierstrass(&self, p: &CurvePoint<F>) -> Genus1Point<F> {
        weierstrass_to_genus1(&self.a, p)
    }

    pub fn add(&self, p: &Genus1Point<F>, q: &Genus1Point<F>) -> Genus1Point<F> {
        self.from_weierstrass(&self.w.add(&self.to_weierstrass(p), &self.to_weierstrass(q)))
    }

    pub fn neg(&self, p: &Genus1Point<F>) -> Genus1Point<F> {
        self.from_weierstrass(&self.w.neg(&self.to_weierstrass(p)))
    }

    pub fn mul(&self, n: i64, p: &Genus1Point<F>) -> Genus1Point<F> {
        self.from_weierstrass(&self.w.mul(n, &self.to_weierstrass(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Fp, Rational};

    #[test]
    fn map_examples() {
        let g = Genus1Curve::new(int(1), int(1)).unwrap();
        assert_eq!(*g.weierstrass().d(), int(-48));
        let p = Genus1Point::Affine(int(0), int(1));
        let w = g.to_weierstrass(&p);
        assert_eq!(w, CurvePoint::Affine(int(4), int(4)));
        assert!(g.weierstrass().contains(&w));
        assert_eq!(g.from_weierstrass(&w), p);
        assert_eq!(g.to_weierstrass(&Genus1Point::<Rational>::Infinity), CurvePoint::Infinity);

        let f = |v| Fp::new(v, 41);
        let g41 = Genus1Curve::new(f(1), f(1)).unwrap();
        let s = Genus1Point::Affine(f(37), f(15));
        assert!(g41.contains(&s));
        assert_eq!(g41.to_weierstrass(&s), CurvePoint::Affine(f(19), f(13)));
    }

    #[test]
    fn negation_reflects_x() {
        let g = Genus1Curve::new(int(3), int(-2)).unwrap();
        let q = Genus1Point::Affine(int(2), int(2));
        assert!(g.contains(&q));
        assert_eq!(g.neg(&q), Genus1Point::Affine(int(-5), int(2)));
    }
}
