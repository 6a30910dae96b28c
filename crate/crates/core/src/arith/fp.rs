use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::integer::{is_prime, mul_mod_u64, pow_mod_u64};
use super::Rational;
use crate::{Error, Result};

/// A validated prime modulus `p > 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime > 3")));
        }
        // Keeps u128 products and the 2p-1 exponent in range.
        if p >= 1 << 62 {
            return Err(Error::InvalidInput(format!("modulus {p} too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::from_i64(v, self.p)
    }

    pub fn zero(&self) -> Fp {
        Fp { value: 0, modulus: self.p }
    }

    pub fn one(&self) -> Fp {
        Fp { value: 1, modulus: self.p }
    }

    /// Reduction of a rational whose denominator is prime to `p`.
    pub fn reduce(&self, q: &Rational) -> Option<Fp> {
        Fp::from_rational(q, self.p)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp { value: v, modulus: self.p })
    }
}

/// Element of `F_p`; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    /// `modulus` must be a prime greater than 3; see [`PrimeField::new`].
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp { value: value % modulus, modulus }
    }

    pub fn from_i64(v: i64, modulus: u64) -> Self {
        Fp { value: v.rem_euclid(modulus as i64) as u64, modulus }
    }

    pub fn from_bigint(v: &BigInt, modulus: u64) -> Self {
        let r = v.mod_floor(&BigInt::from(modulus));
        Fp { value: r.to_u64().expect("reduced below modulus"), modulus }
    }

    pub fn from_rational(q: &Rational, modulus: u64) -> Option<Self> {
        let den = Fp::from_bigint(q.denom(), modulus);
        if den.is_zero() {
            return None;
        }
        Some(Fp::from_bigint(q.numer(), modulus) * den.inv()?)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, e: u64) -> Fp {
        Fp { value: pow_mod_u64(self.value, e, self.modulus), modulus: self.modulus }
    }

    pub fn inv(&self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        Some(self.pow(self.modulus - 2))
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    fn with(&self, value: u64) -> Fp {
        Fp { value, modulus: self.modulus }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.value + rhs.value;
        self.with(if s >= self.modulus { s - self.modulus } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.with(mul_mod_u64(self.value, rhs.value, self.modulus))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with(if self.value == 0 { 0 } else { self.modulus - self.value })
    }
}

impl Div for Fp {
    type Output = Fp;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

/// Legendre symbol as `-1, 0, 1`.
pub(crate) fn legendre(z: Fp) -> i32 {
    if z.is_zero() {
        return 0;
    }
    if z.pow((z.modulus - 1) / 2).value == 1 {
        1
    } else {
        -1
    }
}

/// Square roots `(r, -r)` with `r <= -r` as integers, or `None` for a non-residue.
pub fn sqrt_mod(z: Fp) -> Option<(Fp, Fp)> {
    let p = z.modulus;
    if z.is_zero() {
        return Some((z, z));
    }
    if legendre(z) != 1 {
        return None;
    }
    let r = if p % 4 == 3 {
        z.pow((p + 1) / 4)
    } else {
        // Tonelli–Shanks
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let mut nonres = z.with(2);
        while legendre(nonres) != -1 {
            nonres = nonres.with(nonres.value + 1);
        }
        let mut m = s;
        let mut c = nonres.pow(q);
        let mut t = z.pow(q);
        let mut r = z.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        r
    };
    let (a, b) = (r, -r);
    Some(if a.value <= b.value { (a, b) } else { (b, a) })
}

/// All cube roots of `z` in `F_p`, ascending.
pub fn cube_roots(z: Fp) -> Vec<Fp> {
    let p = z.modulus;
    if z.is_zero() {
        return vec![z];
    }
    if p % 3 == 2 {
        // Cubing is a bijection; its inverse is the exponent (2p-1)/3.
        return vec![z.pow((2 * p - 1) / 3)];
    }
    if z.pow((p - 1) / 3).value != 1 {
        return Vec::new();
    }
    // p - 1 = 3^s * t with 3 ∤ t.
    let mut s = 0u32;
    let mut t = p - 1;
    while t.is_multiple_of(3) {
        t /= 3;
        s += 1;
    }
    let mut c = z.with(2);
    while c.pow((p - 1) / 3).value == 1 {
        c = c.with(c.value + 1);
    }
    // g generates the 3-Sylow subgroup of F_p^*, of order 3^s.
    let g = c.pow(t);
    let omega = g.pow(3u64.pow(s - 1));
    // x0^3 = z * e with e in the Sylow subgroup.
    let u = inverse_mod(3, t);
    let x0 = z.pow(u);
    let e = x0 * x0 * x0 / z;
    // Discrete log of e base g, digit by digit in base 3.
    let mut k: u64 = 0;
    let mut gk = z.with(1);
    for i in 0..s {
        let h = (e / gk).pow(3u64.pow(s - 1 - i));
        let digit = if h.value == 1 {
            0
        } else if h == omega {
            1
        } else {
            2
        };
        k += digit * 3u64.pow(i);
        gk = g.pow(k);
    }
    debug_assert_eq!(k % 3, 0);
    let order = 3u64.pow(s);
    let y = g.pow((order - k / 3 % order) % order);
    let x = x0 * y;
    let mut roots = vec![x, x * omega, x * omega * omega];
    roots.sort();
    roots
}

/// Inverse of `a` modulo `m` for coprime `a`, `m` with `m >= 1`.
fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    e.x.rem_euclid(m as i128) as u64
}
