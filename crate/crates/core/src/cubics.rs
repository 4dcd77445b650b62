//! Binary cubic and quadratic forms over ℚ and their covariants.
//!
//! A binary cubic `A x³ + B x²y + C xy² + D y³` carries three classical
//! covariants: the discriminant, the Hessian quadratic μ and the Poisson
//! bracket cubic G = Qₓ μ_y − Q_y μₓ.  At every vector v they satisfy
//! the Eisenstein identity
//!
//! ```text
//! 16·27·Disc(Q)·Q(v)² + μ(Q)(v)³ = −G(Q)(v)²
//! ```
//!
//! The forms here are "twisted": their values live in an integer power of
//! the determinant line, recorded in the `weight` field.  The discriminant
//! of a weight −1 cubic has weight 2.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{is_square, rat, rat_serde, square_class, Rat, SquareClass};
use crate::invariants::TwistedScalar;
use crate::poly::{self, Poly};
use crate::{Error, Result};

/// A x³ + B x²y + C xy² + D y³, with values in L^weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCubic {
    #[serde(with = "rat_serde")]
    pub a: Rat,
    #[serde(with = "rat_serde")]
    pub b: Rat,
    #[serde(with = "rat_serde")]
    pub c: Rat,
    #[serde(with = "rat_serde")]
    pub d: Rat,
    pub weight: i32,
}

/// qa x² + qb xy + qc y², with values in L^weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryQuadratic {
    #[serde(with = "rat_serde")]
    pub qa: Rat,
    #[serde(with = "rat_serde")]
    pub qb: Rat,
    #[serde(with = "rat_serde")]
    pub qc: Rat,
    pub weight: i32,
}

impl BinaryCubic {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, weight: i32) -> Self {
        BinaryCubic { a, b, c, d, weight }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let x2 = x * x;
        let y2 = y * y;
        &self.a * &x2 * x + &self.b * &x2 * y + &self.c * x * &y2 + &self.d * &y2 * y
    }

    /// Coefficients of the dehomogenisation q(t, 1), ascending in t.
    fn dehom(&self) -> Poly {
        vec![
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
        ]
    }
}

impl BinaryQuadratic {
    pub fn is_zero(&self) -> bool {
        self.qa.is_zero() && self.qb.is_zero() && self.qc.is_zero()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        &self.qa * x * x + &self.qb * x * y + &self.qc * y * y
    }

    /// qb² − 4·qa·qc.
    pub fn discriminant(&self) -> Rat {
        &self.qb * &self.qb - rat(4) * &self.qa * &self.qc
    }
}

/// Discriminant 18ABCD + B²C² − 4AC³ − 4B³D − 27A²D² of a binary cubic.
/// Quartic in the coefficients, so the weight quadruples.
pub fn cubic_discriminant(q: &BinaryCubic) -> TwistedScalar {
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    let value = rat(18) * a * b * c * d + b * b * c * c
        - rat(4) * a * c * c * c
        - rat(4) * b * b * b * d
        - rat(27) * a * a * d * d;
    TwistedScalar {
        value,
        weight: 4 * q.weight + 6,
    }
}

/// Hessian covariant μ(Q) = Qₓₓ Q_yy − Qₓy².
pub fn hessian(q: &BinaryCubic) -> BinaryQuadratic {
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    BinaryQuadratic {
        qa: rat(12) * a * c - rat(4) * b * b,
        qb: rat(36) * a * d - rat(4) * b * c,
        qc: rat(12) * b * d - rat(4) * c * c,
        weight: 2 * q.weight + 2,
    }
}

/// Poisson bracket covariant G(Q) = Qₓ μ_y − Q_y μₓ.
pub fn g_covariant(q: &BinaryCubic) -> BinaryCubic {
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    let m = hessian(q);
    let (ma, mb, mc) = (&m.qa, &m.qb, &m.qc);
    BinaryCubic {
        a: rat(3) * a * mb - rat(2) * b * ma,
        b: rat(6) * a * mc + b * mb - rat(4) * c * ma,
        c: rat(4) * b * mc - c * mb - rat(6) * d * ma,
        d: rat(2) * c * mc - rat(3) * d * mb,
        weight: 3 * q.weight + 3,
    }
}

/// Check the classical Eisenstein identity at a point, exactly.
pub fn eisenstein_check(q: &BinaryCubic, x: &Rat, y: &Rat) -> bool {
    let disc = cubic_discriminant(q).value;
    let qv = q.eval(x, y);
    let mv = hessian(q).eval(x, y);
    let gv = g_covariant(q).eval(x, y);
    let lhs = rat(16 * 27) * disc * &qv * &qv + &mv * &mv * &mv;
    lhs == -(&gv * &gv)
}

/// How a cubic splits over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDescriptor {
    /// Degree of the splitting field of the distinct-root part: 1, 2, 3 or 6.
    pub degree: u8,
    /// Square class of the discriminant of the distinct-root part.
    pub disc_class: SquareClass,
    /// The affine rational roots found (a root "at infinity", i.e. a factor
    /// of y, is reflected in the degree but has no affine coordinate).
    #[serde(with = "crate::arith::rat_vec_serde")]
    pub roots: Vec<Rat>,
    /// True when the cubic has a repeated factor.
    pub has_repeated: bool,
    pub cubic: BinaryCubic,
}

/// Splitting analysis of a nonzero binary cubic.
pub fn splitting_descriptor(q: &BinaryCubic) -> Result<SplittingDescriptor> {
    if q.is_zero() {
        return Err(Error::Domain("splitting of the zero cubic".into()));
    }
    let p = q.dehom();
    let deg = poly::degree(&p).unwrap();
    let inf_mult = 3 - deg; // multiplicity of the factor y
    let roots = poly::rational_roots(&p)?;
    let has_repeated =
        inf_mult >= 2 || roots.iter().any(|(_, m)| *m >= 2) || (inf_mult == 1 && deg == 0);
    // deflate every rational root completely; what is left is either a
    // constant or an irreducible quadratic/cubic
    let mut rem = p.clone();
    for (r, m) in &roots {
        for _ in 0..*m {
            rem = poly::deflate(&rem, r);
        }
    }
    let rem_deg = poly::degree(&rem).unwrap_or(0);
    let (degree, disc_class) = match rem_deg {
        0 => (1u8, SquareClass(num::BigInt::one())),
        2 => {
            let d2 = &rem[1] * &rem[1] - rat(4) * &rem[2] * &rem[0];
            (2u8, square_class(&d2)?)
        }
        3 => {
            let disc = cubic_discriminant(q).value;
            let degree = if is_square(&disc) { 3u8 } else { 6u8 };
            (degree, square_class(&disc)?)
        }
        _ => {
            // a degree-1 remainder would still have a rational root
            return Err(Error::Internal("inconsistent root deflation".into()));
        }
    };
    Ok(SplittingDescriptor {
        degree,
        disc_class,
        roots: roots.into_iter().map(|(r, _)| r).collect(),
        has_repeated,
        cubic: q.clone(),
    })
}

/// The repeated projective root of a degenerate cubic, with its
/// multiplicity, or `None` when the discriminant is nonzero.
pub fn repeated_root(q: &BinaryCubic) -> Result<Option<((Rat, Rat), usize)>> {
    if q.is_zero() {
        return Err(Error::Domain("repeated root of the zero cubic".into()));
    }
    if !cubic_discriminant(q).value.is_zero() {
        return Ok(None);
    }
    let p = q.dehom();
    let deg = poly::degree(&p).unwrap();
    let inf_mult = 3 - deg;
    if inf_mult >= 2 {
        return Ok(Some(((rat(1), rat(0)), inf_mult)));
    }
    for (r, m) in poly::rational_roots(&p)? {
        if m >= 2 {
            return Ok(Some(((r, rat(1)), m)));
        }
    }
    // a cubic with zero discriminant always has a rational repeated root
    Err(Error::Internal("degenerate cubic without rational repeated root".into()))
}

/// Action of g ∈ GL₂(ℚ) on a twisted cubic: precompose with g⁻¹ and twist
/// by det(g)^(−weight).
pub fn gl_act_cubic(g: &[[Rat; 2]; 2], q: &BinaryCubic) -> Result<BinaryCubic> {
    let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
    if det.is_zero() {
        return Err(Error::Domain("singular matrix".into()));
    }
    // columns of g⁻¹
    let inv = [
        [&g[1][1] / &det, -&g[0][1] / &det],
        [-&g[1][0] / &det, &g[0][0] / &det],
    ];
    // (x, y) ↦ g⁻¹ (x, y): substitute linear forms into the cubic
    let (p, q11, r, s) = (&inv[0][0], &inv[0][1], &inv[1][0], &inv[1][1]);
    // new coefficient of x^k y^(3-k) from expanding
    // a(px+qy)³ + b(px+qy)²(rx+sy) + c(px+qy)(rx+sy)² + d(rx+sy)³
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    let na = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
    let nb = rat(3) * a * p * p * q11
        + b * (p * p * s + rat(2) * p * q11 * r)
        + c * (rat(2) * p * r * s + q11 * r * r)
        + rat(3) * d * r * r * s;
    let nc = rat(3) * a * p * q11 * q11
        + b * (q11 * q11 * r + rat(2) * p * q11 * s)
        + c * (p * s * s + rat(2) * q11 * r * s)
        + rat(3) * d * r * s * s;
    let nd = a * q11 * q11 * q11 + b * q11 * q11 * s + c * q11 * s * s + d * s * s * s;
    // twist: values in L^weight pick up det^weight, and we normalise the
    // coefficients so the new form again has plain values
    let tw = pow_int(&det, -(q.weight as i64));
    Ok(BinaryCubic {
        a: na * &tw,
        b: nb * &tw,
        c: nc * &tw,
        d: nd * &tw,
        weight: q.weight,
    })
}

/// det^k for integer k (k may be negative).
pub fn pow_int(x: &Rat, k: i64) -> Rat {
    let mut acc = Rat::one();
    let xa = if k >= 0 { x.clone() } else { Rat::one() / x };
    for _ in 0..k.unsigned_abs() {
        acc *= &xa;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use num::BigInt;

    fn cubic(a: i64, b: i64, c: i64, d: i64) -> BinaryCubic {
        BinaryCubic::new(rat(a), rat(b), rat(c), rat(d), -1)
    }

    #[test]
    fn discriminant_examples() {
        // x²y − xy²
        assert_eq!(cubic_discriminant(&cubic(0, 1, -1, 0)).value, rat(1));
        // x³ − 2 (as a y-form): disc = −108
        assert_eq!(cubic_discriminant(&cubic(1, 0, 0, -2)).value, rat(-108));
    }

    #[test]
    fn hessian_example() {
        let m = hessian(&cubic(0, 1, -1, 0));
        assert_eq!((m.qa, m.qb, m.qc), (rat(-4), rat(4), rat(-4)));
    }

    #[test]
    fn g_vanishes_for_split_form_at_trace_point() {
        let g = g_covariant(&cubic(0, 1, -1, 0));
        assert_eq!(g.eval(&rat(1), &rat(-1)), rat(0));
    }

    #[test]
    fn eisenstein_on_samples() {
        let forms = [
            cubic(0, 1, -1, 0),
            cubic(1, 0, -7, 6),
            cubic(2, -3, 5, 11),
            cubic(1, 0, 0, -2),
        ];
        let pts = [(rat(1), rat(2)), (ratio(1, 3), rat(-5)), (rat(0), rat(1))];
        for f in &forms {
            for (x, y) in &pts {
                assert!(eisenstein_check(f, x, y));
            }
        }
    }

    #[test]
    fn splitting_split_cubic() {
        // x³ − 7x + 6 = (x−1)(x−2)(x+3)
        let d = splitting_descriptor(&cubic(1, 0, -7, 6)).unwrap();
        assert_eq!(d.degree, 1);
        assert_eq!(d.roots, vec![rat(-3), rat(1), rat(2)]);
        assert!(!d.has_repeated);
    }

    #[test]
    fn splitting_degree_two() {
        // x(x² + 1)
        let d = splitting_descriptor(&cubic(1, 0, 1, 0)).unwrap();
        assert_eq!(d.degree, 2);
        assert_eq!(d.disc_class.0, BigInt::from(-1));
    }

    #[test]
    fn splitting_irreducible() {
        // x³ − 2: degree 6, disc class −3
        let d = splitting_descriptor(&cubic(1, 0, 0, -2)).unwrap();
        assert_eq!(d.degree, 6);
        assert_eq!(d.disc_class.0, BigInt::from(-3));
        // x³ − 3x + 1: cyclic, degree 3
        let d = splitting_descriptor(&cubic(1, 0, -3, 1)).unwrap();
        assert_eq!(d.degree, 3);
        assert_eq!(d.disc_class.0, BigInt::from(1));
    }

    #[test]
    fn splitting_with_repeated_factor() {
        // x²y
        let d = splitting_descriptor(&cubic(0, 1, 0, 0)).unwrap();
        assert_eq!(d.degree, 1);
        assert!(d.has_repeated);
    }

    #[test]
    fn repeated_roots() {
        assert_eq!(repeated_root(&cubic(1, 0, -7, 6)).unwrap(), None);
        // x²y: double root in the x-direction... the form vanishes to order 2
        // where the linear factor x is repeated, i.e. along (0 : 1)
        let rr = repeated_root(&cubic(0, 1, 0, 0)).unwrap().unwrap();
        assert_eq!(rr, ((rat(0), rat(1)), 2));
        // y³ (triple factor y, projective root (1 : 0))
        let rr = repeated_root(&cubic(0, 0, 0, 1)).unwrap().unwrap();
        assert_eq!(rr, ((rat(1), rat(0)), 3));
    }

    #[test]
    fn gl_action_scales_discriminant() {
        let q = cubic(2, -3, 5, 11);
        let g = [[rat(2), rat(1)], [rat(3), rat(2)]]; // det 1
        let q2 = gl_act_cubic(&g, &q).unwrap();
        assert_eq!(
            cubic_discriminant(&q2).value,
            cubic_discriminant(&q).value
        );
        let g = [[rat(3), rat(0)], [rat(0), rat(1)]]; // det 3
        let q3 = gl_act_cubic(&g, &q).unwrap();
        // Disc has weight 2: picks up det⁻²
        assert_eq!(
            cubic_discriminant(&q3).value,
            cubic_discriminant(&q).value / rat(9)
        );
    }
}
