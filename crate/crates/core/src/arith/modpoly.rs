use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::integer::{mul_mod_u64, pow_mod_u64};
use super::IntPolynomial;

/// Polynomial over `F_p` for a small prime `p`, coefficients lowest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for v in c.iter_mut() {
            *v %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let m = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| (mul_mod_u64(acc, x, self.p) + a) % self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(self.p, (0..n).map(|i| (g(&self.c, i) + g(&o.c, i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let g = |v: &Vec<u64>, i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n).map(|i| (g(&self.c, i) + self.p - g(&o.c, i)) % self.p).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u128; self.c.len() + o.c.len() - 1];
        let p = self.p as u128;
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|v| v as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mul_mod_u64(a, k, self.p)).collect())
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod_u64(a, self.p - 2, self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.inv(self.leading()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        if self.c.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let li = self.inv(d.leading());
        let mut r = self.c.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod_u64(r[k + dd], li, self.p);
            if c != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - mul_mod_u64(c, b, self.p)) % self.p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = self.inv(r0.leading());
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| mul_mod_u64(a, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.p).rem(m);
        let mut base = self.rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        result
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Distinct roots in `F_p`, ascending, from the split part `gcd(f, x^p - x)`.
    pub fn roots(&self) -> Vec<u64> {
        let p = self.p;
        if self.is_zero() {
            return (0..p).collect();
        }
        let x = Self::x(p);
        let split = x.pow_mod(&BigUint::from(p), self).sub(&x).gcd(self);
        if split.deg() == 0 {
            return Vec::new();
        }
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(p);
        let mut out = Vec::new();
        let mut lin = Vec::new();
        equal_degree(&split, 1, &mut rng, &mut lin);
        for l in lin {
            out.push((p - l.c[0]) % p);
        }
        out.sort_unstable();
        out
    }

    /// Roots in `F_p` by exhaustion; intended for small `p`.
    pub fn roots_brute(&self) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        let pe = BigUint::from(p);
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(&pe, &f);
            let g = h.sub(&x).gcd(&f);
            if g.deg() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let k = f.deg();
            out.push((f, k));
        }
        out
    }

    /// Full factorization of a monic squarefree polynomial into monic
    /// irreducibles, sorted. `p` must be odd.
    pub fn factor_squarefree<R: rand::Rng>(&self, rng: &mut R) -> Vec<Self> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            equal_degree(&g, d, rng, &mut out);
        }
        out.sort();
        out
    }
}

fn equal_degree<R: rand::Rng>(g: &ModPoly, d: usize, rng: &mut R, out: &mut Vec<ModPoly>) {
    let n = g.deg();
    if n == d {
        out.push(g.clone());
        return;
    }
    let p = g.p;
    let e: BigUint = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = a.pow_mod(&e, g).sub(&ModPoly::one(p));
        let c = b.gcd(g);
        if !c.is_zero() && c.deg() > 0 && c.deg() < n {
            let (q, _) = g.div_rem(&c);
            equal_degree(&c, d, rng, out);
            equal_degree(&q.monic(), d, rng, out);
            return;
        }
    }
}

impl ModPoly {
    /// Lift of the coefficients to `[0, p)` as an integer polynomial.
    pub fn to_int(&self) -> IntPolynomial {
        IntPolynomial::new(self.c.iter().map(|&v| BigInt::from(v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_product_of_known_irreducibles() {
        let p = 7;
        // (x^2 + 1)(x + 3)(x^3 + x + 1) over F_7; x^2+1 is irreducible since 7 ≡ 3 mod 4.
        let a = ModPoly::new(p, vec![1, 0, 1]);
        let b = ModPoly::new(p, vec![3, 1]);
        let c = ModPoly::new(p, vec![1, 1, 0, 1]);
        assert!(c.roots_brute().is_empty());
        let f = a.mul(&b).mul(&c);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let got = f.factor_squarefree(&mut rng);
        let mut want = vec![a, b, c];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn ext_gcd_identity() {
        let p = 11;
        let a = ModPoly::new(p, vec![1, 2, 3, 1]);
        let b = ModPoly::new(p, vec![5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn fast_roots_match_exhaustion() {
        for p in [5u64, 7, 13, 101, 409] {
            for seed in 0..20u64 {
                let c: Vec<u64> = (0..7).map(|i| (seed * 31 + i * i * 17 + i) % p).collect();
                let f = ModPoly::new(p, c);
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                assert_eq!(f.roots(), f.roots_brute(), "p={p} f={f:?}");
            }
        }
    }
}
