use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};

use super::Rational;

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<Rational>;

impl<T: Num + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![T::zero(), T::one()] }
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        let mut v = vec![T::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = T::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(c.clone() * k.clone());
            }
            k = k + T::one();
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Polynomial `q` with `q(x^k) = self(x)`, if every exponent is a multiple of `k`.
    pub fn deflate(&self, k: usize) -> Option<Self> {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % k == 0 {
                out.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(Self::new(out))
    }

    /// Multiplicity of the root `0`.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn map<U: Num + Clone>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Num + Clone> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Num + Clone> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Num + Clone> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = t + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Num + Clone + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Num + Clone> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Num + Clone + fmt::Display + Signed> Polynomial<T> {
    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match i {
                0 => s.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        s.push_str(&mag.to_string());
                        s.push('*');
                    }
                    s.push_str(var);
                    if i > 1 {
                        s.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        s
    }
}

impl<T: Num + Clone + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl<T: Num + Clone + fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

impl IntPolynomial {
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Exact quotient over `Z`, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        if n <= dd {
            return None;
        }
        let lc = divisor.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    r[k + j] -= &c * b;
                }
            }
            q[k] = c;
        }
        r[..dd].iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.to_rational().eval(x)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl RatPolynomial {
    /// Multiplies through by the common denominator; the result is an integer
    /// polynomial with the same roots, not made primitive.
    pub fn clear_denominators(&self) -> IntPolynomial {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        Polynomial::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let f = IntPolynomial::from_i64s(&[-1, 0, 1]);
        let g = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!((&f * &g).coeffs(), IntPolynomial::from_i64s(&[-1, -1, 1, 1]).coeffs());
        assert_eq!(f.exact_div(&g), Some(IntPolynomial::from_i64s(&[-1, 1])));
        assert_eq!(f.exact_div(&IntPolynomial::from_i64s(&[2, 1])), None);
        assert_eq!(IntPolynomial::from_i64s(&[3, 0, 1]).display_with("t"), "t^2 + 3");
        assert_eq!(IntPolynomial::from_i64s(&[-3, 1]).display_with("t"), "t - 3");
        assert_eq!(IntPolynomial::from_i64s(&[0, 12, 0, 0, 3]).to_string(), "3*x^4 + 12*x");
        assert_eq!((&f - &f).degree(), None);
    }

    #[test]
    fn compose_and_deflate() {
        // h(u) = u + 4 ; h(t^2 - 1) = t^2 + 3
        let h = IntPolynomial::from_i64s(&[4, 1]);
        let inner = IntPolynomial::from_i64s(&[-1, 0, 1]);
        assert_eq!(h.compose(&inner), IntPolynomial::from_i64s(&[3, 0, 1]));
        let f = IntPolynomial::from_i64s(&[0, 12, 0, 0, 3]);
        assert_eq!(f.low_order(), 1);
        assert_eq!(f.shift_down(1).deflate(3), Some(IntPolynomial::from_i64s(&[12, 3])));
        assert_eq!(f.deflate(3), None);
    }

    #[test]
    fn primitive_and_derivative() {
        let f = IntPolynomial::from_i64s(&[6, -4, -2]);
        assert_eq!(f.primitive_part(), IntPolynomial::from_i64s(&[-3, 2, 1]));
        assert_eq!(f.derivative(), IntPolynomial::from_i64s(&[-4, -4]));
    }
}
