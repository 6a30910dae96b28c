use std::ops::{Mul, Sub};

use num_traits::{One, Zero};

use super::{RatPolynomial, Rational};

/// Dense square matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    a: Vec<Rational>,
}

impl RationalMatrix {
    /// Builds from rows; panics unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RationalMatrix { n, a: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, a: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = Rational::one();
        }
        m
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal,
    /// negated coefficients in the last column.
    pub fn companion(f: &RatPolynomial) -> Self {
        let f = f.monic();
        let n = f.degree().expect("nonconstant polynomial");
        let mut m = Self::zeros(n);
        for i in 1..n {
            m.a[i * n + i - 1] = Rational::one();
        }
        for i in 0..n {
            m.a[i * n + n - 1] = -f.coeff(i);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix { n: self.n, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by Gaussian elimination over `Q`.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.a.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Rational::zero();
            };
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            let p = a[k * n + k].clone();
            det *= &p;
            for i in k + 1..n {
                let f = &a[i * n + k] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = &f * &a[k * n + j];
                    a[i * n + j] -= t;
                }
            }
        }
        det
    }

    /// `det(x I - self)` by the Faddeev–LeVerrier recurrence.
    pub fn char_poly(&self) -> RatPolynomial {
        let n = self.n;
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut m = Self::zeros(n);
        let id = Self::identity(n);
        for k in 1..=n {
            m = &(self * &m) + &id.scale(&c[n - k + 1]);
            c[n - k] = -(self * &m).trace() / Rational::from_integer(k.into());
        }
        RatPolynomial::new(c)
    }

    /// Matrix of the induced map on the `k`-th exterior power, in the basis
    /// of `k`-subsets ordered lexicographically.
    pub fn exterior_power(&self, k: usize) -> Self {
        let subsets = k_subsets(self.n, k);
        let m = subsets.len();
        let mut out = Self::zeros(m);
        for (i, rows) in subsets.iter().enumerate() {
            for (j, cols) in subsets.iter().enumerate() {
                let minor = Self::from_rows(
                    rows.iter()
                        .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
                        .collect(),
                );
                out.a[i * m + j] = minor.determinant();
            }
        }
        out
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for s in k_subsets(n - 1, k - 1) {
        let mut s = s;
        s.push(n - 1);
        out.push(s);
    }
    out.extend(k_subsets(n - 1, k));
    out.sort();
    out
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = RationalMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let x = &self.a[i * n + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += x * &o.a[l * n + j];
                }
            }
        }
        out
    }
}

impl std::ops::Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, o.n);
        RationalMatrix { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, o: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.n, o.n);
        RationalMatrix { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect() }
    }
}
