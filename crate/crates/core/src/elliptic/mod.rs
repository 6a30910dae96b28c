//! Curves `y^2 = x^3 + d` over `Q` and `F_p`.
//!
//! The group law is written once, generically over [`Field`]; the rational
//! torsion classification, division polynomials, and point division live
//! in submodules. The genus-1 model `y^3 = x^2 + a x + b` gets its group
//! structure by transport through [`genus1_to_weierstrass`].

mod curve;
mod divpoly;
mod genus1;
mod torsion;

pub use curve::{
    group_order_fp, order_fp, CurvePoint, Field, WeierstrassCurve, WeierstrassCurveFp,
    WeierstrassCurveQ,
};
pub use divpoly::{divide_point, division_poly, multiplication_x_map};
pub use genus1::{genus1_to_weierstrass, weierstrass_to_genus1, Genus1Curve, Genus1Point};
pub use torsion::{torsion_j0_q, TorsionGroupQ, TorsionStructure};
