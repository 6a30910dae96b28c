//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

pub mod jacobian;

use ceresa_core::arith::{IntPolynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Divisors of `|n|`, `n != 0`, by trial division.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            if &d * &d != n {
                out.push(&n / &d);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots by the rational root theorem: every `±u/v` with
/// `u | a_0`, `v | lc`, tested by exact evaluation.
pub fn rational_roots_by_divisors(f: &IntPolynomial) -> Vec<Rational> {
    let mut out = Vec::new();
    let k = f.low_order();
    if k > 0 {
        out.push(Rational::zero());
    }
    let g = f.shift_down(k);
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    for u in divisors(&g.coeff(0)) {
        for v in divisors(&g.leading()) {
            for s in [u.clone(), -u.clone()] {
                let r = Rational::new(s, v.clone());
                if g.eval_rational(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

fn is_int_power(n: &BigInt, k: u32) -> bool {
    if n.is_negative() && k.is_multiple_of(2) {
        return false;
    }
    let r = n.abs().nth_root(k);
    r.pow(k) == n.abs()
}

/// Torsion order of `y^2 = x^3 + d` for integral `d` by the classical
/// criteria: a rational 2-torsion point iff `d` is a cube; a rational
/// 3-torsion point iff `d` is a square or `d = -432 m^6`.
pub fn torsion_order_by_criteria(d: &BigInt) -> u64 {
    let two = is_int_power(d, 3);
    let minus_432 = BigInt::from(-432);
    let three = (d.is_positive() && is_int_power(d, 2))
        || (d.is_multiple_of(&minus_432) && {
            let m6 = d / &minus_432;
            m6.is_positive() && is_int_power(&m6, 6)
        });
    match (two, three) {
        (false, false) => 1,
        (true, false) => 2,
        (false, true) => 3,
        (true, true) => 6,
    }
}

/// `det(M/q - I) det(Λ^3 M / q^2 - I)` and its untwisted version, from the
/// power sums of the Frobenius eigenvalues alone. The eigenvalue power sums
/// come from Newton's identities on `L_C`; the power sums of the triple
/// products `α_i α_j α_k` are `e_3(α^m)` of the `m`-th powers; Newton again
/// turns those into the characteristic polynomial of the triple products.
pub fn frobenius_det_by_power_sums(l_c: &IntPolynomial, q: u64) -> (Rational, BigInt) {
    // P(T) = T^6 + c1 T^5 + ... + c6, with c_i = L_C coefficient i.
    let c: Vec<BigInt> = (0..=6).map(|i| l_c.coeff(i)).collect();
    let n_max = 60;
    // Newton: s_k + c1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0 (c_k = 0 for k > 6).
    let mut s = vec![BigInt::from(6)];
    for k in 1..=n_max {
        let mut acc = BigInt::zero();
        for i in 1..k.min(7) {
            acc += &c[i] * &s[k - i];
        }
        if k <= 6 {
            acc += &c[k] * BigInt::from(k);
        }
        s.push(-acc);
    }
    // Power sums of the 20 triple products.
    let t: Vec<BigInt> = (0..=20)
        .map(|m| {
            if m == 0 {
                return BigInt::from(20);
            }
            let (a, b, cc) = (&s[m], &s[2 * m], &s[3 * m]);
            (a * a * a - 3 * a * b + 2 * cc) / 6
        })
        .collect();
    // Newton back to e_k of the triple products, then χ(x) = Σ (-1)^k e_k x^{20-k}.
    let mut e = vec![Rational::one()];
    for k in 1..=20usize {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * Rational::from_integer(t[i].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    let chi = |x: &Rational| -> Rational {
        (0..=20)
            .map(|k| {
                let v = &e[k] * num_traits::pow(x.clone(), 20 - k);
                if k % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .sum()
    };
    let p_at = |x: &Rational| -> Rational {
        (0..=6)
            .map(|i| Rational::from_integer(c[i].clone()) * num_traits::pow(x.clone(), 6 - i))
            .sum()
    };
    let qr = Rational::from_integer(q.into());
    let one = Rational::one();
    let twisted = p_at(&qr) / num_traits::pow(qr.clone(), 6) * chi(&(&qr * &qr))
        / num_traits::pow(qr, 40);
    let untwisted = (p_at(&one) * chi(&one)).to_integer();
    (twisted, untwisted)
}
