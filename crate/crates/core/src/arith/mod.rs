//! Exact scalar, polynomial, and matrix arithmetic shared by every other module.

mod factor;
mod fp;
mod integer;
mod matrix;
mod modpoly;
mod poly;
mod rational;

pub use factor::{factor_over_q, poly_gcd, rational_roots, resultant, squarefree_part};
pub use fp::{cube_roots, sqrt_mod, Fp, PrimeField};
pub use integer::{factor_integer, is_prime, next_prime, primes_up_to, radical};
pub use matrix::RationalMatrix;
pub use modpoly::ModPoly;
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};
pub use rational::{
    int, nth_root_exact, parse_rational, rat, rational_nth_root, to_f64_lossy, Rational,
};

pub(crate) use fp::legendre;
pub(crate) use integer::factor_u64;
