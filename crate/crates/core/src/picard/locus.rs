use rayon::prelude::*;

use crate::arith::{
    cube_roots, factor_over_q, is_prime, Fp, IntPolynomial, ModPoly, Rational,
};
use crate::elliptic::{division_poly, order_fp, CurvePoint, WeierstrassCurveFp, WeierstrassCurveQ};
use crate::{Error, Result};

/// Parameters `t` for which `Q_t` has exact order `order` on `y^2 = x^3 + 1`,
/// as irreducible minimal polynomials over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionLocusEntry {
    pub order: u32,
    pub t_minimal_polynomials: Vec<IntPolynomial>,
}

impl TorsionLocusEntry {
    /// The factors whose roots have rational square, i.e. the parameters `t`
    /// whose curve `C_t` has `j = 1 - t^2` in `Q` and so a model over `Q`.
    pub fn rational_model_factors(&self) -> Vec<IntPolynomial> {
        self.t_minimal_polynomials
            .iter()
            .filter(|g| match g.degree() {
                Some(1) => true,
                Some(2) => g.coeff(1) == 0.into(),
                _ => false,
            })
            .cloned()
            .collect()
    }
}

/// Polynomial in `x` whose roots are the abscissae of points of exact order
/// `n` on `y^2 = x^3 + 1`, for every `n <= n_max` (index 0 and 1 unused).
fn exact_order_polys(n_max: u32) -> Vec<IntPolynomial> {
    let e = WeierstrassCurveQ::new(Rational::from_integer(1.into())).expect("d = 1");
    let mut out = vec![IntPolynomial::one(), IntPolynomial::one()];
    for n in 2..=n_max {
        let mut f = division_poly(&e, n).primitive_part();
        for m in 2..n {
            if n % m == 0 {
                f = f.exact_div(&out[m as usize]).expect("lower orders divide");
            }
        }
        out.push(f.primitive_part());
    }
    out
}

/// `x`-polynomial `Λ(x) = x^r h(x^3)` to the `t`-polynomial `h(t^2 - 1)`.
/// The factor `x^r` only carries `t = ±1`, which is degenerate.
fn to_t_polynomial(lambda: &IntPolynomial) -> IntPolynomial {
    let h = lambda
        .shift_down(lambda.low_order())
        .deflate(3)
        .expect("μ3 acts on the x-coordinates of torsion points");
    let t2m1 = IntPolynomial::from_i64s(&[-1, 0, 1]);
    h.compose(&t2m1)
}

/// Torsion locus for each order `2..=n_max`, ordered by order.
///
/// Division polynomials of `y^2 = x^3 + 1` with the lower orders divided out
/// give the exact-order abscissae; since `x^3 = t^2 - 1` on the curve, the
/// substitution `x^3 -> t^2 - 1` eliminates `x`. Factors `t ∓ 1` are dropped.
pub fn enumerate_torsion_locus(n_max: u32) -> Vec<TorsionLocusEntry> {
    if n_max < 2 {
        return Vec::new();
    }
    let lambdas = exact_order_polys(n_max);
    (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let t_poly = to_t_polynomial(&lambdas[n as usize]);
            let mut factors = Vec::new();
            for (g, _) in factor_over_q(&t_poly) {
                let deg1 = g.degree() == Some(1);
                if deg1 && g.coeff(0).magnitude() == g.coeff(1).magnitude() {
                    log::debug!("order {n}: dropping degenerate factor {g}");
                    continue;
                }
                factors.push(g);
            }
            TorsionLocusEntry { order: n, t_minimal_polynomials: factors }
        })
        .collect()
}

/// Checks by reduction that the roots of `g` give points of exact order
/// `order` on `y^2 = x^3 + 1`: finds `count` primes `p > 3`, `p ∤ order·lc(g)`,
/// with `g mod p` squarefree and a root `t0` such that `t0^2 - 1` is a cube
/// `x0^3`, and verifies that `(x0, t0)` has order `order` in `E(F_p)`.
/// Returns the primes used.
pub fn reduction_check(order: u32, g: &IntPolynomial, count: usize) -> Result<Vec<u64>> {
    let mut used = Vec::new();
    let lc = g.leading();
    for p in (5u64..100_000).filter(|&p| is_prime(p)) {
        if u64::from(order) % p == 0 || (&lc % p as i64) == 0.into() {
            continue;
        }
        let gb = ModPoly::from_int(g, p);
        if !gb.is_squarefree() {
            continue;
        }
        let e = WeierstrassCurveFp::new(Fp::new(1, p)).expect("d = 1");
        let hit = gb.roots().into_iter().find_map(|t0| {
            let t = Fp::new(t0, p);
            let x = cube_roots(t * t - Fp::new(1, p)).into_iter().next()?;
            Some(order_fp(&e, &CurvePoint::Affine(x, t)))
        });
        match hit {
            Some(n) if n == u64::from(order) => {
                used.push(p);
                if used.len() == count {
                    return Ok(used);
                }
            }
            Some(n) => {
                return Err(Error::Internal(format!(
                    "root of {g} reduces mod {p} to a point of order {n}, expected {order}"
                )))
            }
            None => {}
        }
    }
    Err(Error::Internal(format!("no split primes found for {g}")))
}
