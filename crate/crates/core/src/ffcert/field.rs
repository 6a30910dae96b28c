use crate::arith::ModPoly;

/// Element of `F_{p^k}` (`k <= 3`) as coefficients of a polynomial of degree `< k`.
pub type ExtElem = [u64; 3];

/// `F_{p^k}` for `k` in `1..=3`, realized as `F_p[t]/(m)` with `m` the
/// lexicographically smallest monic irreducible of degree `k`, comparing
/// coefficients from `t^{k-1}` down to the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    k: usize,
    m: [u64; 4],
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl ExtField {
    /// Panics unless `1 <= k <= 3`.
    pub fn new(p: u64, k: usize) -> Self {
        assert!((1..=3).contains(&k), "extension degree must be 1, 2 or 3");
        let mut m = [0u64; 4];
        m[k] = 1;
        if k == 1 {
            return ExtField { p, k, m };
        }
        // For degree 2 and 3, irreducible is the same as having no root.
        for n in 0..p.pow(k as u32) {
            let mut c = vec![0u64; k + 1];
            let mut r = n;
            for slot in c.iter_mut().take(k) {
                *slot = r % p;
                r /= p;
            }
            c[k] = 1;
            let f = ModPoly::new(p, c.clone());
            if f.roots().is_empty() {
                m[..=k].copy_from_slice(&c);
                return ExtField { p, k, m };
            }
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    /// The defining modulus, coefficients lowest first.
    pub fn modulus(&self) -> Vec<u64> {
        self.m[..=self.k].to_vec()
    }

    /// The `n`-th element in base-`p` digit order, `0 <= n < p^k`.
    pub fn element(&self, mut n: u64) -> ExtElem {
        let mut e = [0u64; 3];
        for slot in e.iter_mut().take(self.k) {
            *slot = n % self.p;
            n /= self.p;
        }
        e
    }

    pub fn constant(&self, c: u64) -> ExtElem {
        [c % self.p, 0, 0]
    }

    pub fn is_zero(&self, a: &ExtElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.p;
        [(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p]
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let (p, k) = (self.p, self.k);
        let mut prod = [0u64; 5];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
            }
        }
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for j in 0..k {
                prod[top - k + j] = (prod[top - k + j] + p - mulmod(c, self.m[j], p)) % p;
            }
        }
        [prod[0], prod[1], prod[2]]
    }

    pub fn pow(&self, a: &ExtElem, mut e: u64) -> ExtElem {
        let mut acc = self.constant(1);
        let mut base = *a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Number of `y` with `y^3 = z`.
    pub fn cube_root_count(&self, z: &ExtElem) -> u64 {
        let q = self.order();
        if self.is_zero(z) || q % 3 == 2 {
            return 1;
        }
        if self.pow(z, (q - 1) / 3) == self.constant(1) {
            3
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_moduli() {
        // x^2 + 1 is irreducible mod 7 and nothing smaller in the order is.
        assert_eq!(ExtField::new(7, 2).modulus(), vec![1, 0, 1]);
        // mod 5: x^2 + 2 is the first irreducible (x^2, x^2+1, x^2+4 split... x^2+1 = (x-2)(x+2)).
        assert_eq!(ExtField::new(5, 2).modulus(), vec![2, 0, 1]);
        let f = ExtField::new(5, 3);
        assert_eq!(f.modulus(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_right_order() {
        for (p, k) in [(5u64, 2usize), (7, 3), (11, 2)] {
            let f = ExtField::new(p, k);
            let q = f.order();
            for n in 1..q {
                let a = f.element(n);
                assert_eq!(f.pow(&a, q - 1), f.constant(1), "p={p} k={k} n={n}");
            }
        }
    }
}
