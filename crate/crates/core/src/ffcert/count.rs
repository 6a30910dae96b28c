use num_bigint::BigInt;
use rayon::prelude::*;

use super::field::ExtField;
use crate::arith::{is_prime, Fp, IntPolynomial};
use crate::elliptic::{group_order_fp, WeierstrassCurveFp};
use crate::{Error, Result};

/// `#C(F_{p^i})` for `C: y^3 = x^4 + a x^2 + b` reduced mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRecord {
    pub a: Fp,
    pub b: Fp,
    pub p: u64,
    pub i: u32,
    pub curve_count: u64,
}

/// L-polynomials of `C`, of `E: y^2 = x^3 + 16(a^2 - 4b)`, and their quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolyRecord {
    pub p: u64,
    pub l_c: IntPolynomial,
    pub l_e: IntPolynomial,
    pub l_p: IntPolynomial,
}

impl LPolyRecord {
    /// `#J(F_p) = L_C(1)`.
    pub fn jacobian_order(&self) -> BigInt {
        self.l_c.coeffs().iter().sum()
    }
}

pub(crate) fn check_good(a: Fp, b: Fp) -> Result<u64> {
    let p = a.modulus();
    if p <= 3 || !is_prime(p) || b.modulus() != p {
        return Err(Error::BadReduction(p));
    }
    let f = |v| Fp::from_i64(v, p);
    let delta = f(16) * b * (a * a - f(4) * b);
    if delta.is_zero() {
        return Err(Error::BadReduction(p));
    }
    Ok(p)
}

/// `1 + sum over x in F_{p^i} of #{y : y^3 = x^4 + a x^2 + b}`; the `1`
/// is the single point at infinity.
pub fn count_curve(a: Fp, b: Fp, i: u32) -> Result<CountRecord> {
    let p = check_good(a, b)?;
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidInput(format!("extension degree {i} not in 1..=3")));
    }
    let field = ExtField::new(p, i as usize);
    let q = field.order();
    let curve_count = if q % 3 == 2 {
        // Cubing is a bijection, so each x contributes exactly one point.
        q + 1
    } else {
        let (ae, be) = (field.constant(a.value()), field.constant(b.value()));
        1 + (0..q)
            .into_par_iter()
            .map(|n| {
                let x = field.element(n);
                let x2 = field.mul(&x, &x);
                let z = field.add(&field.mul(&x2, &field.add(&x2, &ae)), &be);
                field.cube_root_count(&z)
            })
            .sum::<u64>()
    };
    Ok(CountRecord { a, b, p, i, curve_count })
}

/// `L_C` from the counts over `F_p, F_{p^2}, F_{p^3}` by Newton's identities
/// and the functional equation; `L_E` from `#E(F_p)`; `L_P = L_C / L_E`.
pub fn lpoly(a: Fp, b: Fp) -> Result<LPolyRecord> {
    let p = check_good(a, b)?;
    let pi = p as i64;
    let n: Vec<i64> = (1..=3)
        .map(|i| count_curve(a, b, i).map(|r| r.curve_count as i64))
        .collect::<Result<_>>()?;
    let s: Vec<i64> = (0..3).map(|k| pi.pow(k as u32 + 1) + 1 - n[k]).collect();
    let e1 = s[0];
    let e2 = (e1 * s[0] - s[1]) / 2;
    let e3 = (e2 * s[0] - e1 * s[1] + s[2]) / 3;
    let l_c = IntPolynomial::from_i64s(&[1, -e1, e2, -e3, pi * e2, -pi * pi * e1, pi * pi * pi]);

    let f = |v| Fp::from_i64(v, p);
    let e = WeierstrassCurveFp::new(f(16) * (a * a - f(4) * b)).map_err(|_| Error::BadReduction(p))?;
    let ap = pi + 1 - group_order_fp(&e) as i64;
    let l_e = IntPolynomial::from_i64s(&[1, -ap, pi]);
    let l_p = l_c.exact_div(&l_e).ok_or(Error::FactorizationFailure(p))?;
    Ok(LPolyRecord { p, l_c, l_e, l_p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cube_roots;

    fn naive_count(a: Fp, b: Fp) -> u64 {
        let p = a.modulus();
        let mut n = 1;
        for xv in 0..p {
            let x = Fp::new(xv, p);
            for yv in 0..p {
                let y = Fp::new(yv, p);
                if y * y * y == x * x * x * x + a * x * x + b {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn count_examples() {
        let f = |v| Fp::new(v, 5);
        assert_eq!(count_curve(f(0), f(1), 1).unwrap().curve_count, 6);
        let g = |v| Fp::new(v, 41);
        assert_eq!(count_curve(g(1), g(1), 1).unwrap().curve_count, naive_count(g(1), g(1)));
        assert_eq!(count_curve(g(1), g(1), 1).unwrap().curve_count, 42);
        assert_eq!(count_curve(f(2), f(1), 1), Err(Error::BadReduction(5)));
    }

    #[test]
    fn first_counts_agree_with_double_loop() {
        for p in [5u64, 7, 11, 13, 19, 31, 37, 43] {
            for (a, b) in [(1, 1), (0, 1), (3, 5), (2, 7)] {
                let (a, b) = (Fp::from_i64(a, p), Fp::from_i64(b, p));
                if check_good(a, b).is_err() {
                    continue;
                }
                assert_eq!(count_curve(a, b, 1).unwrap().curve_count, naive_count(a, b));
            }
        }
    }

    #[test]
    fn frobenius_eleven() {
        let f = |v| Fp::new(v, 11);
        let counts: Vec<u64> =
            (1..=3).map(|i| count_curve(f(1), f(1), i).unwrap().curve_count).collect();
        assert_eq!(counts, vec![12, 176, 1332]);
        let r = lpoly(f(1), f(1)).unwrap();
        assert_eq!(r.l_c, IntPolynomial::from_i64s(&[1, 0, 27, 0, 297, 0, 1331]));
        assert_eq!(&r.l_e * &r.l_p, r.l_c);
    }

    #[test]
    fn lifted_cube_root_count_matches_fp() {
        let p = 13;
        let field = ExtField::new(p, 1);
        for z in 0..p {
            assert_eq!(
                field.cube_root_count(&field.constant(z)),
                cube_roots(Fp::new(z, p)).len() as u64
            );
        }
    }
}
