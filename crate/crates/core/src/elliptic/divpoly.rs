use num_traits::{Signed, Zero};

use super::{torsion_j0_q, CurvePoint, WeierstrassCurveQ};
use crate::arith::{rational_nth_root, rational_roots, IntPolynomial, RatPolynomial, Rational};
use crate::{Error, Result};

/// `f_0, ..., f_n` where `ψ_k = f_k` for odd `k` and `ψ_k = 2y f_k` for even `k`.
fn f_table(d: &Rational, n: usize) -> Vec<RatPolynomial> {
    let c = |v: i64| Rational::from_integer(v.into());
    let mut f = vec![
        RatPolynomial::zero(),
        RatPolynomial::one(),
        RatPolynomial::one(),
        RatPolynomial::new(vec![c(0), d * c(12), c(0), c(0), c(3)]),
        RatPolynomial::new(vec![
            -(d * d) * c(16),
            c(0),
            c(0),
            d * c(40),
            c(0),
            c(0),
            c(2),
        ]),
    ];
    let big_f = RatPolynomial::new(vec![d * c(4), c(0), c(0), c(4)]);
    let f2 = &big_f * &big_f;
    for k in 5..=n {
        let m = k / 2;
        let next = if k % 2 == 1 {
            let a = &f[m + 2] * &f[m].pow(3);
            let b = &f[m - 1] * &f[m + 1].pow(3);
            if m % 2 == 0 {
                &(&f2 * &a) - &b
            } else {
                &a - &(&f2 * &b)
            }
        } else {
            let inner = &(&f[m + 2] * &f[m - 1].pow(2)) - &(&f[m - 2] * &f[m + 1].pow(2));
            &f[m] * &inner
        };
        f.push(next);
    }
    f.truncate(n + 1);
    f
}

/// The `n`-th division polynomial of `y^2 = x^3 + d` as a polynomial in `x`.
///
/// Odd `n` gives `ψ_n`; even `n` gives `ψ_n^2 / (4 y)` rewritten as
/// `f_n (x^3 + d)`, so `n = 2` yields `x^3 + d` and `n = 3` yields
/// `3x^4 + 12dx`. Non-integral `d` has its denominators cleared, which keeps
/// the root set. Panics for `n = 0`.
pub fn division_poly(e: &WeierstrassCurveQ, n: u32) -> IntPolynomial {
    assert!(n >= 1, "division polynomials start at n = 1");
    let d = e.d();
    let f = f_table(d, (n as usize).max(4)).swap_remove(n as usize);
    let out = if n.is_multiple_of(2) {
        let cubic = RatPolynomial::new(vec![
            d.clone(),
            Rational::zero(),
            Rational::zero(),
            Rational::from_integer(1.into()),
        ]);
        &f * &cubic
    } else {
        f
    };
    out.clear_denominators()
}

/// `(num, den)` with `x(nP) = num(x) / den(x)` for `n >= 1`.
pub fn multiplication_x_map(e: &WeierstrassCurveQ, n: u32) -> (RatPolynomial, RatPolynomial) {
    assert!(n >= 1);
    let n = n as usize;
    let d = e.d();
    if n == 1 {
        return (RatPolynomial::x(), RatPolynomial::one());
    }
    let f = f_table(d, (n + 1).max(4));
    let c = |v: i64| Rational::from_integer(v.into());
    let big_f = RatPolynomial::new(vec![d * c(4), c(0), c(0), c(4)]);
    let x = RatPolynomial::x();
    let fn2 = f[n].pow(2);
    let cross = &f[n - 1] * &f[n + 1];
    if n % 2 == 1 {
        (&(&x * &fn2) - &(&big_f * &cross), fn2)
    } else {
        let den = &big_f * &fn2;
        (&(&x * &den) - &cross, den)
    }
}

/// All rational `P` with `n P = q`, sorted.
///
/// Candidate abscissae are the rational roots of `num - x(q) den` for the
/// multiplication-by-`n` map; each is completed to points and filtered.
pub fn divide_point(
    e: &WeierstrassCurveQ,
    n: u32,
    q: &CurvePoint<Rational>,
) -> Result<Vec<CurvePoint<Rational>>> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot divide by 0".into()));
    }
    if !e.contains(q) {
        return Err(Error::InvalidInput("point is not on the curve".into()));
    }
    let mut out = match q {
        CurvePoint::Infinity => torsion_j0_q(e.d())?
            .elements(e)
            .into_iter()
            .filter(|p| e.mul(n as i64, p).is_infinity())
            .collect(),
        CurvePoint::Affine(xq, _) => {
            if n == 1 {
                return Ok(vec![q.clone()]);
            }
            let (num, den) = multiplication_x_map(e, n);
            let eqn = &num - &den.scale(xq);
            let mut pts = Vec::new();
            for x in rational_roots(&eqn.clear_denominators()) {
                let rhs = &x * &x * &x + e.d();
                if rhs.is_negative() {
                    continue;
                }
                let Some(y) = rational_nth_root(&rhs, 2) else {
                    continue;
                };
                for cand in [CurvePoint::Affine(x.clone(), y.clone()), CurvePoint::Affine(x.clone(), -y.clone())] {
                    if e.mul(n as i64, &cand) == *q && !pts.contains(&cand) {
                        pts.push(cand);
                    }
                }
            }
            pts
        }
    };
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn pt(x: i64, y: i64) -> CurvePoint<Rational> {
        CurvePoint::Affine(int(x), int(y))
    }

    #[test]
    fn low_division_polynomials() {
        let e = WeierstrassCurveQ::new(int(5)).unwrap();
        assert_eq!(division_poly(&e, 1), IntPolynomial::from_i64s(&[1]));
        assert_eq!(division_poly(&e, 2), IntPolynomial::from_i64s(&[5, 0, 0, 1]));
        assert_eq!(division_poly(&e, 3), IntPolynomial::from_i64s(&[0, 60, 0, 0, 3]));
    }

    #[test]
    fn multiplication_map_matches_group_law() {
        let e = WeierstrassCurveQ::new(int(36)).unwrap();
        let p = pt(-3, -3);
        for n in 1..=6u32 {
            let (num, den) = multiplication_x_map(&e, n);
            let x = int(-3);
            let got = num.eval(&x) / den.eval(&x);
            assert_eq!(Some(&got), e.mul(n as i64, &p).x(), "n={n}");
        }
    }

    #[test]
    fn halving_on_y2_x3_plus_1() {
        let e = WeierstrassCurveQ::new(int(1)).unwrap();
        assert_eq!(divide_point(&e, 2, &pt(0, 1)).unwrap(), vec![pt(0, -1), pt(2, 3)]);
        assert_eq!(divide_point(&e, 1, &pt(0, 1)).unwrap(), vec![pt(0, 1)]);
    }

    #[test]
    fn marked_point_is_primitive() {
        let e = WeierstrassCurveQ::new(int(36)).unwrap();
        for n in [2, 3, 5] {
            assert!(divide_point(&e, n, &pt(-3, -3)).unwrap().is_empty());
        }
        // (0, ±6) is rational 3-torsion, so 3Q has three preimages Q + T.
        let thrice = e.mul(3, &pt(-3, -3));
        assert_eq!(
            divide_point(&e, 3, &thrice).unwrap(),
            vec![pt(-3, -3), pt(4, 10), pt(12, -42)]
        );
    }
}
