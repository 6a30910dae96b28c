//! Gcds, squarefree parts, rational roots, and irreducible factorization
//! over `Q` by modular factorization, Hensel lifting, and recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;

use super::integer::is_prime;
use super::{IntPolynomial, ModPoly, Rational};

/// `lc(b)^(deg a - deg b + 1) * a mod b`, computed over `Z`.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lc = b.leading();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let c = r.leading();
        let shifted = IntPolynomial::monomial(c, dr - db);
        r = &r.scale(&lc) - &(&shifted * b);
    }
    r
}

/// Primitive gcd with positive leading coefficient; contents are ignored.
pub fn poly_gcd(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    if f.is_zero() {
        return g.primitive_part();
    }
    if g.is_zero() {
        return f.primitive_part();
    }
    let (mut a, mut b) = (f.primitive_part(), g.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() { r } else { r.primitive_part() };
    }
    a.primitive_part()
}

/// Primitive polynomial with the same roots as `f`, each simple.
pub fn squarefree_part(f: &IntPolynomial) -> IntPolynomial {
    let g = poly_gcd(f, &f.derivative());
    if g.degree() == Some(0) {
        return f.primitive_part();
    }
    f.primitive_part()
        .exact_div(&g)
        .expect("gcd divides")
        .primitive_part()
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// First primes `p >= 5` not dividing the leading coefficient with `f mod p` squarefree.
fn good_primes(f: &IntPolynomial) -> impl Iterator<Item = u64> + '_ {
    let lc = f.leading();
    (5u64..)
        .filter(|&p| is_prime(p))
        .filter(move |&p| !(&lc % BigInt::from(p)).is_zero())
        .filter(move |&p| ModPoly::from_int(f, p).is_squarefree())
}

/// All rational roots of a nonzero polynomial, ascending, without multiplicity.
///
/// Roots are found modulo a small prime, Newton-lifted to a modulus above
/// `2 |lc| |a_0|`, and confirmed by exact evaluation, so no integer
/// factorization of the coefficients is needed.
pub fn rational_roots(f: &IntPolynomial) -> Vec<Rational> {
    let mut roots = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let k0 = f.low_order();
    if k0 > 0 {
        roots.push(Rational::zero());
    }
    let g = squarefree_part(&f.shift_down(k0));
    if g.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let p = good_primes(&g).next().expect("some prime works");
    let bp = BigInt::from(p);
    let lc = g.leading();
    let bound = lc.abs() * g.coeff(0).abs() * 2;
    let mut pk = bp.clone();
    let mut k = 1u32;
    while pk <= bound {
        pk *= &bp;
        k += 1;
    }
    let gbar = ModPoly::from_int(&g, p);
    let dg = g.derivative();
    for r0 in gbar.roots_brute() {
        // Newton lifting of a simple root, quadratic in the exponent.
        let mut r = BigInt::from(r0);
        let mut e = 1u32;
        while e < k {
            e = (2 * e).min(k);
            let m = bp.pow(e);
            let fv = eval_int(&g, &r).mod_floor(&m);
            let dv = eval_int(&dg, &r).mod_floor(&m);
            let inv = mod_inverse(&dv, &m).expect("simple root mod p");
            r = (&r - fv * inv).mod_floor(&m);
        }
        let c = sym_mod(&(&lc * &r), &pk);
        let cand = Rational::new(c, lc.clone());
        if g.eval_rational(&cand).is_zero() {
            roots.push(cand);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn eval_int(f: &IntPolynomial, x: &BigInt) -> BigInt {
    f.coeffs()
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Irreducible factorization over `Q`: primitive factors with positive
/// leading coefficient and their multiplicities, sorted by degree then
/// coefficients. Constants (content and sign) are dropped.
pub fn factor_over_q(f: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut rest = f.primitive_part();
    let k0 = rest.low_order();
    if k0 > 0 {
        out.push((IntPolynomial::x(), k0 as u32));
        rest = rest.shift_down(k0);
    }
    if rest.degree() == Some(0) {
        return out;
    }
    let sqf = squarefree_part(&rest);
    for g in zassenhaus(&sqf) {
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&g) {
            rest = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        out.push((g, mult));
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    out
}

/// Irreducible factors of a primitive squarefree polynomial with `f(0) != 0`.
fn zassenhaus(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.primitive_part()];
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    // Prefer the prime with the fewest modular factors among a few candidates.
    let (p, modular) = good_primes(f)
        .take(16)
        .map(|p| {
            let fb = ModPoly::from_int(f, p).monic();
            let count: usize = fb.distinct_degree().iter().map(|(g, d)| g.degree().unwrap() / d).sum();
            (count, p)
        })
        .min()
        .map(|(_, p)| {
            let fb = ModPoly::from_int(f, p).monic();
            (p, fb.factor_squarefree(&mut rng))
        })
        .expect("good primes exist");
    if modular.len() == 1 {
        return vec![f.primitive_part()];
    }

    // Lift until p^k exceeds twice |lc| times the Mignotte bound 2^n ||f||_2.
    let lc = f.leading();
    let norm2 = f.coeffs().iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = lc.abs() * norm2 * (BigInt::one() << n) * 2;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = bp.clone();
    while pk <= bound {
        pk *= &bp;
        k += 1;
    }
    let lifted: Vec<IntPolynomial> = modular
        .iter()
        .map(|g| {
            let others = modular
                .iter()
                .filter(|h| *h != g)
                .fold(ModPoly::one(p), |acc, h| acc.mul(h))
                .scale(ModPoly::from_int(&IntPolynomial::constant(lc.clone()), p).coeffs()[0]);
            hensel_lift(f, g, &others, p, k)
        })
        .collect();

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for subset in combinations(&remaining, s) {
            let lcur = current.leading();
            let prod = subset.iter().fold(IntPolynomial::constant(lcur.clone()), |acc, &i| {
                let m = &acc * &lifted[i];
                IntPolynomial::new(m.coeffs().iter().map(|c| c.mod_floor(&pk)).collect())
            });
            let cand = IntPolynomial::new(prod.coeffs().iter().map(|c| sym_mod(c, &pk)).collect())
                .primitive_part();
            // Cheap necessary condition before the full division.
            let c0 = cand.coeff(0);
            if c0.is_zero() || !(current.coeff(0) % &c0).is_zero() {
                continue;
            }
            if let Some(q) = current.exact_div(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                current = q;
                remaining.retain(|i| !subset.contains(i));
            }
            None => s += 1,
        }
    }
    if current.degree().unwrap_or(0) > 0 {
        found.push(current.primitive_part());
    }
    found
}

/// Lifts `f ≡ g*h (mod p)` with `g` monic to a monic `G ≡ g` with
/// `G | f (mod p^k)`; returns `G` with coefficients in `[0, p^k)`.
fn hensel_lift(f: &IntPolynomial, g: &ModPoly, h: &ModPoly, p: u64, k: u32) -> IntPolynomial {
    let (one, s, t) = g.ext_gcd(h);
    debug_assert_eq!(one, ModPoly::one(p));
    let bp = BigInt::from(p);
    let mut gi = g.to_int();
    let mut hi = h.to_int();
    let mut m = bp.clone();
    for _ in 1..k {
        let diff = f - &(&gi * &hi);
        let e_int = IntPolynomial::new(diff.coeffs().iter().map(|c| c / &m).collect());
        let e = ModPoly::from_int(&e_int, p);
        let (q, r) = t.mul(&e).div_rem(g);
        let dh = s.mul(&e).add(&q.mul(h));
        gi = &gi + &r.to_int().scale(&m);
        hi = &hi + &dh.to_int().scale(&m);
        m *= &bp;
    }
    IntPolynomial::new(gi.coeffs().iter().map(|c| c.mod_floor(&m)).collect())
}

/// Resultant by fraction-free elimination of the Sylvester matrix.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            a[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(a)
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// All `k`-element subsets of `items`, in lexicographic index order.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
