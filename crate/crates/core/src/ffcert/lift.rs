use std::collections::BTreeSet;

use super::reduce_curve;
use crate::arith::{cube_roots, Fp};
use crate::elliptic::{order_fp, CurvePoint, Genus1Curve, Genus1Point};
use crate::picard::PicardCurve;
use crate::{Error, Result};

/// The point `σ` on `y^3 = x^2 + a x + b` over `F_v` with `2D = π^*(σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSumResult {
    pub v: u64,
    /// Reduced coefficients of the model the sum was taken on.
    pub a: Fp,
    pub b: Fp,
    pub sigma: Genus1Point<Fp>,
    pub sigma_weierstrass: CurvePoint<Fp>,
    pub sigma_order: u64,
    /// Number of non-branch points of `E(F_v)` in the image of `C(F_v)`.
    pub lift_set_size: usize,
    /// Images `(0, y)` of the finite ramification points, `y^3 = b`.
    pub ramified_contributions: Vec<Genus1Point<Fp>>,
    pub curve_count: u64,
}

/// `σ = Σ_r π(r) + 2 Σ_{q in lift set} q` on the quotient by `(x, y) -> (-x, y)`,
/// where `π(x, y) = (x^2, y)`, `r` runs over the ramification points `(0, y)`
/// and the lift set is the image of `C(F_v)` minus the branch points.
pub fn lift_sum(c: &PicardCurve, v: u64) -> Result<LiftSumResult> {
    let (a, b) = reduce_curve(c, v)?;
    let g = Genus1Curve::new(a, b).map_err(|_| Error::BadReduction(v))?;
    let mut image = BTreeSet::new();
    let mut affine = 0u64;
    for xv in 0..v {
        let x = Fp::new(xv, v);
        let x2 = x * x;
        for y in cube_roots(x2 * x2 + a * x2 + b) {
            affine += 1;
            image.insert(Genus1Point::Affine(x2, y));
        }
    }
    let zero = Fp::new(0, v);
    let ramified: Vec<Genus1Point<Fp>> =
        cube_roots(b).into_iter().map(|y| Genus1Point::Affine(zero, y)).collect();
    let lift: Vec<&Genus1Point<Fp>> = image.iter().filter(|q| !ramified.contains(q)).collect();

    let lift_total = lift.iter().fold(Genus1Point::Infinity, |acc, q| g.add(&acc, q));
    let sigma = ramified.iter().fold(g.mul(2, &lift_total), |acc, r| g.add(&acc, r));
    debug_assert!(g.contains(&sigma));
    let sigma_weierstrass = g.to_weierstrass(&sigma);
    let sigma_order = order_fp(g.weierstrass(), &sigma_weierstrass);
    Ok(LiftSumResult {
        v,
        a,
        b,
        sigma,
        sigma_weierstrass,
        sigma_order,
        lift_set_size: lift.len(),
        ramified_contributions: ramified,
        curve_count: affine + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn worked_example_at_41() {
        let c = PicardCurve::new(int(1), int(1)).unwrap();
        let r = lift_sum(&c, 41).unwrap();
        let f = |v| Fp::new(v, 41);
        assert_eq!(r.sigma, Genus1Point::Affine(f(37), f(15)));
        assert_eq!(r.sigma_weierstrass, CurvePoint::Affine(f(19), f(13)));
        assert_eq!(r.sigma_order, 7);
        assert_eq!(r.ramified_contributions, vec![Genus1Point::Affine(f(0), f(1))]);
        assert_eq!(r.lift_set_size, 20);
        assert_eq!(r.curve_count, 42);
    }

    #[test]
    fn small_prime_sigma_is_on_curve() {
        let c = PicardCurve::new(int(0), int(1)).unwrap();
        let r = lift_sum(&c, 7).unwrap();
        let g = Genus1Curve::new(r.a, r.b).unwrap();
        assert!(g.contains(&r.sigma));
        let n = crate::elliptic::group_order_fp(g.weierstrass());
        assert_eq!(n % r.sigma_order, 0);
    }
}
