use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{CurvePoint, WeierstrassCurveQ};
use crate::arith::{nth_root_exact, Rational};
use crate::Result;

/// Isomorphism type of the rational torsion subgroup; always a subgroup of `Z/6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TorsionStructure {
    Trivial,
    Z2,
    Z3,
    Z6,
}

impl TorsionStructure {
    pub fn order(self) -> u64 {
        match self {
            TorsionStructure::Trivial => 1,
            TorsionStructure::Z2 => 2,
            TorsionStructure::Z3 => 3,
            TorsionStructure::Z6 => 6,
        }
    }
}

/// Rational torsion of `y^2 = x^3 + d` with a generator (none when trivial).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionGroupQ {
    pub structure: TorsionStructure,
    pub generators: Vec<CurvePoint<Rational>>,
}

impl TorsionGroupQ {
    /// Every torsion point, ordered as multiples `0, g, 2g, ...` of the generator.
    pub fn elements(&self, e: &WeierstrassCurveQ) -> Vec<CurvePoint<Rational>> {
        let n = self.structure.order() as i64;
        match self.generators.first() {
            None => vec![CurvePoint::Infinity],
            Some(g) => (0..n).map(|k| e.mul(k, g)).collect(),
        }
    }

    /// Order of `p` if it is torsion, `None` otherwise.
    pub fn order_of(&self, e: &WeierstrassCurveQ, p: &CurvePoint<Rational>) -> Option<u64> {
        if !self.elements(e).contains(p) {
            return None;
        }
        (1..=6u64).find(|&k| e.mul(k as i64, p).is_infinity())
    }
}

fn sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        None
    } else {
        nth_root_exact(n, 2)
    }
}

/// Rational torsion subgroup of `y^2 = x^3 + d`.
///
/// `d` is first scaled by `λ^6` with `λ` its denominator to an integer `D`.
/// A 2-torsion point exists iff `D` is a cube (root of `x^3 + D`); a 3-torsion
/// point exists iff `D` is a square (`x = 0`) or `-4D` is a cube with `-3D` a
/// square (`x^3 = -4D`). Generators are mapped back by `(x, y) -> (x/λ^2, y/λ^3)`
/// and normalized to have positive `y` where there is a choice.
pub fn torsion_j0_q(d: &Rational) -> Result<TorsionGroupQ> {
    let e = WeierstrassCurveQ::new(d.clone())?;
    let lam = d.denom().clone();
    let big_d = (d * Rational::from_integer(lam.pow(6))).to_integer();
    let back = |x: BigInt, y: BigInt| {
        CurvePoint::Affine(
            Rational::new(x, lam.pow(2)),
            Rational::new(y, lam.pow(3)),
        )
    };

    let p2 = nth_root_exact(&-&big_d, 3).map(|x| back(x, BigInt::zero()));
    let p3 = if let Some(y) = sqrt_int(&big_d) {
        Some(back(BigInt::zero(), y))
    } else {
        nth_root_exact(&(&big_d * -4), 3)
            .zip(sqrt_int(&(&big_d * -3)))
            .map(|(x, y)| back(x, y))
    };
    let positive_y = |p: CurvePoint<Rational>| match &p {
        CurvePoint::Affine(_, y) if y.is_negative() => e.neg(&p),
        _ => p,
    };
    let (structure, generators) = match (p2, p3) {
        (None, None) => (TorsionStructure::Trivial, vec![]),
        (Some(a), None) => (TorsionStructure::Z2, vec![a]),
        (None, Some(b)) => (TorsionStructure::Z3, vec![positive_y(b)]),
        (Some(a), Some(b)) => (TorsionStructure::Z6, vec![positive_y(e.add(&a, &b))]),
    };
    Ok(TorsionGroupQ { structure, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn pt(x: i64, y: i64) -> CurvePoint<Rational> {
        CurvePoint::Affine(int(x), int(y))
    }

    #[test]
    fn classification_examples() {
        let t = torsion_j0_q(&int(1)).unwrap();
        assert_eq!(t.structure, TorsionStructure::Z6);
        assert_eq!(t.generators, vec![pt(2, 3)]);
        assert_eq!(torsion_j0_q(&int(2)).unwrap().structure, TorsionStructure::Trivial);
        let t = torsion_j0_q(&int(-432)).unwrap();
        assert_eq!(t.structure, TorsionStructure::Z3);
        assert_eq!(t.generators, vec![pt(12, 36)]);
        let t = torsion_j0_q(&int(8)).unwrap();
        assert_eq!(t.structure, TorsionStructure::Z2);
        assert_eq!(t.generators, vec![pt(-2, 0)]);
    }

    #[test]
    fn generators_have_declared_order_for_fractional_d() {
        for d in [rat(1, 64), rat(-432, 729), rat(8, 27), rat(9, 4), rat(5, 7)] {
            let e = WeierstrassCurveQ::new(d.clone()).unwrap();
            let t = torsion_j0_q(&d).unwrap();
            let n = t.structure.order() as i64;
            for g in &t.generators {
                assert!(e.contains(g));
                assert!(e.mul(n, g).is_infinity());
                assert!((1..n).all(|k| !e.mul(k, g).is_infinity()));
            }
        }
        assert_eq!(torsion_j0_q(&rat(1, 64)).unwrap().structure, TorsionStructure::Z6);
        assert_eq!(torsion_j0_q(&rat(9, 4)).unwrap().structure, TorsionStructure::Z3);
    }
}
