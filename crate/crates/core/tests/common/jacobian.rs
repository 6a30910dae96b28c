//! Brute-force Jacobian arithmetic on `C: y^3 = x^4 + a x^2 + b` over a
//! small prime field, used to check `2D ~ π^*(σ - O)` directly.
//!
//! An effective divisor `G` of degree `K` is linearly equivalent to `K ∞`
//! exactly when some nonzero `f` in `L(K ∞)` vanishes on `G`. `L(K ∞)` has
//! the basis `x^i y^j` with `j <= 2` and `3i + 4j <= K`, since `x` and `y`
//! have poles of orders 3 and 4 at the single point at infinity.

use std::collections::BTreeMap;

use ceresa_core::arith::{cube_roots, sqrt_mod, Fp};
use ceresa_core::elliptic::Genus1Point;

type Series = Vec<Fp>;

fn series_mul(a: &Series, b: &Series, m: usize, p: u64) -> Series {
    let mut out = vec![Fp::new(0, p); m];
    for (i, x) in a.iter().enumerate().take(m) {
        for (j, y) in b.iter().enumerate().take(m - i) {
            out[i + j] = out[i + j] + *x * *y;
        }
    }
    out
}

struct Curve {
    p: u64,
    a: Fp,
    b: Fp,
}

impl Curve {
    fn g_series(&self, x: &Series, m: usize) -> Series {
        let x2 = series_mul(x, x, m, self.p);
        let x4 = series_mul(&x2, &x2, m, self.p);
        let mut out = vec![Fp::new(0, self.p); m];
        for k in 0..m {
            out[k] = x4[k] + self.a * x2[k];
        }
        out[0] = out[0] + self.b;
        out
    }

    /// `(x(s), y(s))` to order `m` in a local parameter at the affine point.
    fn local_expansion(&self, x0: Fp, y0: Fp, m: usize) -> (Series, Series) {
        let p = self.p;
        let zero = Fp::new(0, p);
        let mut xs = vec![zero; m];
        let mut ys = vec![zero; m];
        xs[0] = x0;
        ys[0] = y0;
        if !y0.is_zero() {
            if m > 1 {
                xs[1] = Fp::new(1, p);
            }
            let inv = (Fp::new(3, p) * y0 * y0).inv().unwrap();
            for _ in 0..m {
                let y3 = series_mul(&series_mul(&ys, &ys, m, p), &ys, m, p);
                let g = self.g_series(&xs, m);
                for k in 0..m {
                    ys[k] = ys[k] - (y3[k] - g[k]) * inv;
                }
            }
        } else {
            if m > 1 {
                ys[1] = Fp::new(1, p);
            }
            let dg = Fp::new(4, p) * x0 * x0 * x0 + Fp::new(2, p) * self.a * x0;
            let inv = dg.inv().expect("smooth point");
            let y3 = series_mul(&series_mul(&ys, &ys, m, p), &ys, m, p);
            for _ in 0..m {
                let g = self.g_series(&xs, m);
                for k in 0..m {
                    xs[k] = xs[k] - (g[k] - y3[k]) * inv;
                }
            }
        }
        (xs, ys)
    }
}

fn rank(mut rows: Vec<Vec<Fp>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r][c].inv().unwrap();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] * inv;
                for j in c..cols {
                    let t = rows[r][j] * f;
                    rows[i][j] = rows[i][j] - t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Affine points of `C(F_p)`.
pub fn affine_points(p: u64, a: Fp, b: Fp) -> Vec<(Fp, Fp)> {
    let mut out = Vec::new();
    for xv in 0..p {
        let x = Fp::new(xv, p);
        for y in cube_roots(x * x * x * x + a * x * x + b) {
            out.push((x, y));
        }
    }
    out
}

/// Whether `2 Σ_{c in C(F_p)} (c - ∞)` and `π^*(σ - O)` agree in `Pic^0(C)`,
/// where `π(x, y) = (x^2, y)` maps to `y^3 = x^2 + a x + b`.
pub fn doubled_divisor_matches(p: u64, a: Fp, b: Fp, sigma: &Genus1Point<Fp>) -> bool {
    let curve = Curve { p, a, b };
    let pts = affine_points(p, a, b);
    let n = pts.len();
    let mut mult: BTreeMap<(Fp, Fp), usize> = pts.iter().map(|&c| (c, 2)).collect();
    // π^*(σ) ~ 4∞ - π^*(-σ), so test 2Σc + π^*(-σ) ~ (2n + 2)∞.
    let mut place: Option<(Fp, Fp)> = None;
    let k = match sigma {
        Genus1Point::Infinity => 2 * n,
        Genus1Point::Affine(u, v) => {
            let u2 = -a - *u;
            if u2.is_zero() {
                *mult.entry((u2, *v)).or_insert(0) += 2;
            } else if let Some((r, s)) = sqrt_mod(u2) {
                *mult.entry((r, *v)).or_insert(0) += 1;
                *mult.entry((s, *v)).or_insert(0) += 1;
            } else {
                place = Some((u2, *v));
            }
            2 * n + 2
        }
    };
    let basis: Vec<(usize, usize)> = (0..=k / 3)
        .flat_map(|i| (0..=2).map(move |j| (i, j)))
        .filter(|&(i, j)| 3 * i + 4 * j <= k)
        .collect();
    let mut rows = Vec::new();
    for (&(x0, y0), &m) in &mult {
        let (xs, ys) = curve.local_expansion(x0, y0, m);
        let mut xp = vec![vec![Fp::new(1, p)]];
        xp[0].resize(m, Fp::new(0, p));
        let mut yp = xp.clone();
        for _ in 0..k / 3 {
            xp.push(series_mul(xp.last().unwrap(), &xs, m, p));
        }
        for _ in 0..2 {
            yp.push(series_mul(yp.last().unwrap(), &ys, m, p));
        }
        for order in 0..m {
            rows.push(
                basis
                    .iter()
                    .map(|&(i, j)| series_mul(&xp[i], &yp[j], m, p)[order])
                    .collect(),
            );
        }
    }
    if let Some((u2, v)) = place {
        // Reduce x^i y^j modulo (x^2 - u2, y - v) to A + B x.
        let mut row_a = Vec::new();
        let mut row_b = Vec::new();
        for &(i, j) in &basis {
            let coef = u2.pow((i / 2) as u64) * v.pow(j as u64);
            if i % 2 == 0 {
                row_a.push(coef);
                row_b.push(Fp::new(0, p));
            } else {
                row_a.push(Fp::new(0, p));
                row_b.push(coef);
            }
        }
        rows.push(row_a);
        rows.push(row_b);
    }
    rank(rows, basis.len()) < basis.len()
}
