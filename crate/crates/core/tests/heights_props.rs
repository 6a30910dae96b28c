use ceresa_core::arith::{int, Rational};
use ceresa_core::elliptic::{torsion_j0_q, CurvePoint, WeierstrassCurve, WeierstrassCurveQ};
use ceresa_core::heights::{canonical_height, naive_height, northcott_scan};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn aff(x: Rational, y: Rational) -> CurvePoint<Rational> {
    CurvePoint::Affine(x, y)
}

/// `ĥ(P) ≈ h(x(2^n P)) / (2 · 4^n)` with projective doubling on integers.
/// The error is at most the height-difference constant over `4^n`.
fn naive_limit(d: i64, x: &Rational, n: u32) -> f64 {
    let d = BigInt::from(d);
    let (four, eight) = (BigInt::from(4), BigInt::from(8));
    let (mut xn, mut zn) = (x.numer().clone(), x.denom().clone());
    for _ in 0..n {
        let x3 = &xn * &xn * &xn;
        let z3 = &zn * &zn * &zn;
        let nx = &xn * (&x3 - &d * &eight * &z3);
        let nz = &zn * (&x3 + &d * &z3) * &four;
        let g = nx.gcd(&nz);
        xn = nx / &g;
        zn = nz / &g;
    }
    let log_abs = |v: &BigInt| -> f64 {
        let bits = v.bits();
        let shift = bits.saturating_sub(60);
        let top: f64 = num_traits::ToPrimitive::to_f64(&(v.abs() >> shift)).unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    };
    let h = log_abs(&xn).max(log_abs(&zn));
    h / 2.0 / 4f64.powi(n as i32)
}

/// Non-torsion points of small height on a few curves `y^2 = x^3 + d`.
fn sample_points() -> Vec<(i64, CurvePoint<Rational>)> {
    vec![
        (36, aff(int(-3), int(-3))),
        (17, aff(int(-1), int(4))),
        (17, aff(int(2), int(5))),
        (17, aff(int(8), int(23))),
        (-2, aff(int(3), int(5))),
        (2, aff(int(-1), int(1))),
        (-11, aff(int(3), int(4))),
        (-7, aff(int(2), int(1))),
        (3, aff(int(1), int(2))),
        (5, aff(int(-1), int(2))),
        (8, aff(int(1), int(3))),
        (9, aff(int(-2), int(1))),
        (10, aff(int(-1), int(3))),
        (-15, aff(int(4), int(7))),
        (-26, aff(int(3), int(1))),
        (-28, aff(int(4), int(6))),
        (24, aff(int(-2), int(4))),
        (-4, aff(int(2), int(2))),
        (15, aff(int(1), int(4))),
        (-19, aff(int(7), int(18))),
    ]
}

#[test]
fn sample_points_are_valid_and_non_torsion() {
    for (d, p) in sample_points() {
        let e = WeierstrassCurve::new(int(d)).unwrap();
        assert!(e.contains(&p), "d={d} {p:?}");
        let t = torsion_j0_q(&int(d)).unwrap();
        assert!(t.order_of(&e, &p).is_none(), "d={d}");
    }
}

#[test]
fn height_scales_quadratically() {
    for (d, p) in sample_points() {
        let e: WeierstrassCurveQ = WeierstrassCurve::new(int(d)).unwrap();
        let h = canonical_height(&e, &p).unwrap();
        assert!(h.value > 0.0 && h.error_bound <= 1e-6);
        for n in [2i64, 3, 5] {
            let hn = canonical_height(&e, &e.mul(n, &p)).unwrap();
            let n2 = (n * n) as f64;
            assert!((hn.value - n2 * h.value).abs() < n2 * 1e-6, "d={d} n={n}: {} vs {}", hn.value, n2 * h.value);
        }
    }
}

#[test]
fn height_matches_doubling_limit() {
    // 4^-9 times a band constant below 10 keeps the limit within 1e-4.
    for (d, p) in sample_points().into_iter().take(8) {
        let e = WeierstrassCurve::new(int(d)).unwrap();
        let h = canonical_height(&e, &p).unwrap().value;
        let lim = naive_limit(d, p.x().unwrap(), 9);
        assert!((h - lim).abs() < 1e-4, "d={d}: {h} vs {lim}");
    }
}

#[test]
fn height_difference_band() {
    for (d, p) in sample_points().into_iter().take(5) {
        let e = WeierstrassCurve::new(int(d)).unwrap();
        let mut worst: f64 = 0.0;
        for n in 1..=50i64 {
            let q = e.mul(n, &p);
            let h = canonical_height(&e, &q).unwrap().value;
            worst = worst.max((h - naive_height(q.x().unwrap()) / 2.0).abs());
        }
        println!("d={d}: max |ĥ - h/2| over 50 multiples = {worst:.6}");
        assert!(worst.is_finite());
        // The band is a property of the curve, not of the multiple.
        assert!(worst < 10.0 + (d.abs() as f64).ln());
    }
}

#[test]
fn torsion_iff_zero_height() {
    for d in [1i64, -432, 8, 36, 4, -27] {
        let e = WeierstrassCurve::new(int(d)).unwrap();
        let t = torsion_j0_q(&int(d)).unwrap();
        for p in t.elements(&e) {
            assert_eq!(canonical_height(&e, &p).unwrap().value, 0.0);
        }
    }
    for (d, p) in sample_points() {
        let e = WeierstrassCurve::new(int(d)).unwrap();
        assert!(canonical_height(&e, &p).unwrap().value > 0.0);
    }
}

#[test]
fn northcott_counts_are_monotone() {
    let bounds = [0.0, 1.0, 3.0, 6.0, f64::INFINITY];
    let mut prev_by_bound = vec![0usize; bounds.len()];
    for b in 1..=6u64 {
        let mut prev = 0;
        for (i, &x) in bounds.iter().enumerate() {
            let rows = northcott_scan(b, x).unwrap();
            for r in &rows {
                assert_eq!(r.verdict.status.as_str() == "torsion", r.height.value == 0.0);
                assert!(!r.t.denom().is_zero());
                assert!(!(r.t.abs() == int(1)));
            }
            assert!(rows.len() >= prev, "B={b} X={x}");
            assert!(rows.len() >= prev_by_bound[i], "B={b} X={x}");
            prev = rows.len();
            prev_by_bound[i] = rows.len();
        }
    }
    let rows = northcott_scan(1, f64::INFINITY).unwrap();
    assert_eq!(rows.iter().map(|r| r.t.clone()).collect::<Vec<_>>(), vec![int(0)]);
    assert!(northcott_scan(5, f64::INFINITY)
        .unwrap()
        .iter()
        .all(|r| r.verdict.status.as_str() == "torsion" || r.height.value > 0.0));
}
