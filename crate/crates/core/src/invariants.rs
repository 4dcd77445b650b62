//! Twisted polynomial invariants of a two-dimensional commutative algebra.
//!
//! To each algebra m we attach a fundamental binary cubic Q_m (vanishing on
//! the directions that generate subalgebras) and a trace covector T_m, and
//! from them five scalar invariants with values in powers of the
//! determinant line:
//!
//! * p̃₃ = −8·Q_m(T_m)            (weight 2)
//! * p̃₂ = μ(Q_m)(T_m)            (weight 2, μ the Hessian)
//! * Inv = (1/54)·G(Q_m)(T_m)     (weight 3, G the Poisson bracket cubic)
//! * Disc(Q_m)                    (weight 2)
//! * Disc(D_m)                    (weight 2, D the determinant form)
//!
//! Each invariant has two independent computation paths: evaluation of the
//! covariants at the trace covector, and an expanded polynomial in the six
//! structure constants.  The expanded path is used for the value and the
//! covariant path is asserted against it in debug builds.  They satisfy two
//! exact identities used as self-tests throughout the crate:
//!
//! ```text
//! 27·Disc(Q_m)·p̃₃² + 4·p̃₂³ = −(4·27)²·Inv²
//! 27·Disc(D_m)      = p̃₃ − p̃₂ − Disc(Q_m)
//! ```

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{det_form, trace_form, Algebra, Covector};
use crate::arith::{rat, rat_serde, Rat};
use crate::cubics::{cubic_discriminant, g_covariant, hessian, BinaryCubic, BinaryQuadratic};
use crate::{Error, Result};

/// A scalar with values in L^weight: under a basis change g the value is
/// multiplied by det(g)^(−weight).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedScalar {
    #[serde(with = "rat_serde")]
    pub value: Rat,
    pub weight: i32,
}

/// A point of the moduli plane: (p₃, p₂) = (p̃₃/Disc, p̃₂/Disc).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliPoint {
    #[serde(with = "rat_serde")]
    pub p3: Rat,
    #[serde(with = "rat_serde")]
    pub p2: Rat,
}

impl ModuliPoint {
    pub fn new(p3: Rat, p2: Rat) -> Self {
        ModuliPoint { p3, p2 }
    }

    /// 27p₃² + 4p₂³; the Cardano curve is its zero locus.
    pub fn cardano(&self) -> Rat {
        rat(27) * &self.p3 * &self.p3 + rat(4) * &self.p2 * &self.p2 * &self.p2
    }

    pub fn is_origin(&self) -> bool {
        self.p3.is_zero() && self.p2.is_zero()
    }
}

/// The fundamental cubic Q_m = −b x³ + (a−2f) x²y + (2e−d) xy² + c y³,
/// with values in L⁻¹.
pub fn fundamental_cubic(m: &Algebra) -> BinaryCubic {
    BinaryCubic::new(
        -m.b.clone(),
        &m.a - rat(2) * &m.f,
        rat(2) * &m.e - &m.d,
        m.c.clone(),
        -1,
    )
}

/// Evaluate a twisted cubic at the trace covector: the pairing uses the
/// vector (t₂, −t₁) and raises the weight by 3.
pub fn eval_cubic_at_trace(q: &BinaryCubic, t: &Covector) -> TwistedScalar {
    TwistedScalar {
        value: q.eval(&t.t2, &-t.t1.clone()),
        weight: q.weight + 3,
    }
}

/// Evaluate a twisted quadratic at the trace covector (weight rises by 2).
pub fn eval_quadratic_at_trace(p: &BinaryQuadratic, t: &Covector) -> TwistedScalar {
    TwistedScalar {
        value: p.eval(&t.t2, &-t.t1.clone()),
        weight: p.weight + 2,
    }
}

// --- expanded polynomials in the structure constants -----------------------

fn disc_q_expanded(m: &Algebra) -> Rat {
    let (a, b, c, d, e, f) = (&m.a, &m.b, &m.c, &m.d, &m.e, &m.f);
    rat(-36) * b * c * f * d
        + rat(72) * b * c * f * e
        + rat(18) * b * c * a * d
        - rat(36) * b * c * a * e
        + rat(4) * f * f * d * d
        - rat(16) * f * f * d * e
        + rat(16) * f * f * e * e
        - rat(4) * f * a * d * d
        + rat(16) * f * a * d * e
        - rat(16) * f * a * e * e
        + a * a * d * d
        - rat(4) * a * a * d * e
        + rat(4) * a * a * e * e
        - rat(4) * b * d * d * d
        + rat(24) * b * d * d * e
        - rat(48) * b * d * e * e
        + rat(32) * b * e * e * e
        + rat(32) * c * f * f * f
        - rat(48) * c * f * f * a
        + rat(24) * c * f * a * a
        - rat(4) * c * a * a * a
        - rat(27) * b * b * c * c
}

fn p3_expanded(m: &Algebra) -> Rat {
    let (a, b, c, d, e, f) = (&m.a, &m.b, &m.c, &m.d, &m.e, &m.f);
    rat(-32) * f * a * d * e
        + rat(24) * b * d * e * e
        + rat(24) * b * d * d * e
        + rat(24) * c * f * a * a
        + rat(24) * c * f * f * a
        + rat(8) * a * a * d * e
        - rat(40) * f * a * e * e
        + rat(8) * f * a * d * d
        - rat(40) * f * f * d * e
        - rat(8) * f * f * d * d
        - rat(32) * f * f * e * e
        + rat(16) * a * a * d * d
        - rat(8) * a * a * e * e
        + rat(8) * b * d * d * d
        + rat(8) * b * e * e * e
        + rat(8) * c * f * f * f
        + rat(8) * c * a * a * a
}

fn p2_expanded(m: &Algebra) -> Rat {
    let (a, b, c, d, e, f) = (&m.a, &m.b, &m.c, &m.d, &m.e, &m.f);
    rat(36) * b * c * f * d
        + rat(36) * b * c * f * e
        + rat(36) * b * c * a * d
        + rat(36) * b * c * a * e
        + rat(60) * f * a * d * e
        - rat(36) * b * d * e * e
        - rat(36) * c * f * f * a
        + rat(12) * a * a * d * e
        - rat(24) * f * a * e * e
        + rat(12) * f * a * d * d
        - rat(24) * f * f * d * e
        - rat(12) * f * f * d * d
        - rat(48) * f * f * e * e
        - rat(12) * a * a * d * d
        - rat(12) * a * a * e * e
        + rat(12) * b * d * d * d
        - rat(24) * b * e * e * e
        - rat(24) * c * f * f * f
        + rat(12) * c * a * a * a
}

fn inv_expanded(m: &Algebra) -> Rat {
    let (a, b, c, d, e, f) = (&m.a, &m.b, &m.c, &m.d, &m.e, &m.f);
    rat(-2) * a * a * a * c * d * f
        - rat(4) * a * a * a * c * e * f
        - rat(6) * a * a * b * c * c * f
        + rat(6) * b * b * c * d * e * e
        - rat(6) * a * a * d * e * e * f
        + rat(4) * b * d * d * d * e * f
        - rat(12) * b * d * e * e * e * f
        + rat(12) * a * c * e * f * f * f
        - rat(8) * d * e * e * f * f * f
        + rat(6) * a * a * b * c * e * e
        + rat(2) * a * c * d * f * f * f
        + rat(4) * a * a * e * e * e * f
        - rat(2) * a * b * d * d * d * d
        - rat(4) * a * b * e * e * e * e
        + rat(2) * a * d * d * d * f * f
        + rat(8) * a * e * e * e * f * f
        + rat(2) * b * b * c * d * d * d
        + rat(2) * b * b * c * e * e * e
        - rat(2) * b * c * c * f * f * f
        - rat(8) * b * e * e * e * e * f
        + rat(4) * c * d * f * f * f * f
        + rat(8) * c * e * f * f * f * f
        - rat(4) * d * d * e * f * f * f
        - rat(2) * a * b * d * e * e * e
        + rat(6) * a * b * d * d * e * e
        - rat(2) * a * a * d * d * d * f
        - rat(2) * a * a * a * d * e * e
        + rat(2) * a * a * a * a * c * d
        - rat(2) * a * a * a * b * c * c
        + rat(2) * a * a * a * d * d * e
        + rat(6) * b * b * c * d * d * e
        + rat(2) * a * b * d * d * d * e
        - rat(6) * b * c * d * d * f * f
        + rat(6) * a * d * d * e * f * f
        - rat(6) * a * b * c * c * f * f
        - rat(6) * b * c * d * e * f * f
        + rat(6) * a * b * c * e * e * f
        - rat(6) * a * b * c * d * d * f
        + rat(6) * a * a * b * c * d * e
        - rat(6) * a * a * c * d * f * f
}

fn disc_d_expanded(m: &Algebra) -> Rat {
    let (a, b, c, d, e, f) = (&m.a, &m.b, &m.c, &m.d, &m.e, &m.f);
    a * a * d * d - rat(2) * b * c * a * d + b * b * c * c - rat(4) * f * a * d * e
        + rat(4) * c * f * f * a
        + rat(4) * b * d * e * e
        - rat(4) * b * c * f * e
}

// --- the invariants ---------------------------------------------------------

/// p̃₃ via covariant evaluation: −8·Q_m(T_m).
pub fn p3_tilde_via_covariants(m: &Algebra) -> TwistedScalar {
    let ev = eval_cubic_at_trace(&fundamental_cubic(m), &trace_form(m));
    TwistedScalar {
        value: rat(-8) * ev.value,
        weight: ev.weight,
    }
}

/// p̃₂ via covariant evaluation: μ(Q_m)(T_m).
pub fn p2_tilde_via_covariants(m: &Algebra) -> TwistedScalar {
    eval_quadratic_at_trace(&hessian(&fundamental_cubic(m)), &trace_form(m))
}

/// Inv via covariant evaluation: (1/54)·G(Q_m)(T_m).
pub fn inv_via_covariants(m: &Algebra) -> TwistedScalar {
    let ev = eval_cubic_at_trace(&g_covariant(&fundamental_cubic(m)), &trace_form(m));
    TwistedScalar {
        value: ev.value / rat(54),
        weight: ev.weight,
    }
}

/// Disc(Q_m) via the cubic discriminant of the fundamental cubic.
pub fn disc_q_via_covariants(m: &Algebra) -> TwistedScalar {
    cubic_discriminant(&fundamental_cubic(m))
}

/// Disc(D_m) via the quadratic-form discriminant of the determinant form.
pub fn disc_d_via_det_form(m: &Algebra) -> TwistedScalar {
    TwistedScalar {
        value: det_form(m).discriminant(),
        weight: 2,
    }
}

macro_rules! dual_path {
    ($name:ident, $expanded:ident, $covariant:ident, $weight:expr, $doc:expr) => {
        #[doc = $doc]
        pub fn $name(m: &Algebra) -> TwistedScalar {
            let value = $expanded(m);
            debug_assert_eq!(
                value,
                $covariant(m).value,
                "expanded/covariant paths disagree in {}",
                stringify!($name)
            );
            TwistedScalar {
                value,
                weight: $weight,
            }
        }
    };
}

dual_path!(p3_tilde, p3_expanded, p3_tilde_via_covariants, 2,
    "p̃₃(m), weight 2.  Expanded polynomial; checked against −8·Q_m(T_m) in debug builds.");
dual_path!(p2_tilde, p2_expanded, p2_tilde_via_covariants, 2,
    "p̃₂(m), weight 2.  Expanded polynomial; checked against μ(Q_m)(T_m) in debug builds.");
dual_path!(inv_m, inv_expanded, inv_via_covariants, 3,
    "Inv(m), weight 3.  Expanded polynomial; checked against (1/54)·G(Q_m)(T_m) in debug builds.");
dual_path!(disc_q, disc_q_expanded, disc_q_via_covariants, 2,
    "Disc(Q_m), weight 2.  Expanded polynomial; checked against the cubic discriminant in debug builds.");
dual_path!(disc_d, disc_d_expanded, disc_d_via_det_form, 2,
    "Disc(D_m), weight 2.  Expanded polynomial; checked against disc(det form) in debug builds.");

/// All invariants of an algebra in one bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub q: BinaryCubic,
    pub t: Covector,
    pub disc_q: TwistedScalar,
    pub p2_tilde: TwistedScalar,
    pub p3_tilde: TwistedScalar,
    pub disc_d: TwistedScalar,
    pub inv: TwistedScalar,
}

pub fn bundle(m: &Algebra) -> InvariantBundle {
    InvariantBundle {
        q: fundamental_cubic(m),
        t: trace_form(m),
        disc_q: disc_q(m),
        p2_tilde: p2_tilde(m),
        p3_tilde: p3_tilde(m),
        disc_d: disc_d(m),
        inv: inv_m(m),
    }
}

/// The moduli point ν(m) = (p̃₃/Disc, p̃₂/Disc); requires Disc(Q_m) ≠ 0.
pub fn moduli(m: &Algebra) -> Result<ModuliPoint> {
    let disc = disc_q(m).value;
    if disc.is_zero() {
        return Err(Error::Domain(
            "moduli point needs a nonzero discriminant".into(),
        ));
    }
    Ok(ModuliPoint::new(
        p3_tilde(m).value / &disc,
        p2_tilde(m).value / disc,
    ))
}

/// Exact check of 27·Disc·p̃₃² + 4·p̃₂³ = −(4·27)²·Inv².
pub fn check_eisenstein(m: &Algebra) -> bool {
    let disc = disc_q(m).value;
    let p3 = p3_tilde(m).value;
    let p2 = p2_tilde(m).value;
    let inv = inv_m(m).value;
    rat(27) * disc * &p3 * &p3 + rat(4) * &p2 * &p2 * &p2 == rat(-11664) * &inv * &inv
}

/// Exact check of 27·Disc(D) = p̃₃ − p̃₂ − Disc(Q).
pub fn check_discd_identity(m: &Algebra) -> bool {
    rat(27) * disc_d(m).value == p3_tilde(m).value - p2_tilde(m).value - disc_q(m).value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn split_algebra_invariants() {
        let m = Algebra::split();
        assert_eq!(p3_tilde(&m).value, rat(16));
        assert_eq!(p2_tilde(&m).value, rat(-12));
        assert_eq!(inv_m(&m).value, rat(0));
        assert_eq!(disc_q(&m).value, rat(1));
        assert_eq!(disc_d(&m).value, rat(1));
        let nu = moduli(&m).unwrap();
        assert_eq!((nu.p3, nu.p2), (rat(16), rat(-12)));
    }

    #[test]
    fn quadratic_field_invariants() {
        // e₁² = e₁, e₂² = λe₁, e₁e₂ = ½e₂: p̃₂ = 0, p̃₃ = 27λ, Inv = 0,
        // Disc(D) = λ
        for lam in [2i64, -1, 5, -6] {
            let m = Algebra::rank1_row(rat(lam));
            assert_eq!(p2_tilde(&m).value, rat(0));
            assert_eq!(p3_tilde(&m).value, rat(27 * lam));
            assert_eq!(inv_m(&m).value, rat(0));
            assert_eq!(disc_q(&m).value, rat(0));
            assert_eq!(disc_d(&m).value, rat(lam));
        }
    }

    #[test]
    fn rank2_row_invariants() {
        // e₁² = e₁, e₂² = e₂, e₁e₂ = ½e₁ + νe₂
        for nu_i in [0i64, 2, -3] {
            let nu = rat(nu_i);
            let m = Algebra::new(rat(1), rat(0), rat(0), rat(1), ratio(1, 2), nu.clone());
            let two_nu_m1 = rat(2) * &nu - rat(1);
            assert_eq!(disc_q(&m).value, rat(0));
            assert_eq!(p2_tilde(&m).value, rat(-9) * &two_nu_m1 * &two_nu_m1);
            assert_eq!(
                p3_tilde(&m).value,
                rat(-18) * &two_nu_m1 * (&nu + rat(1))
            );
            assert_eq!(
                inv_m(&m).value,
                ratio(-1, 2) * &two_nu_m1 * &two_nu_m1 * &two_nu_m1
            );
            assert_eq!(disc_d(&m).value, rat(1) - rat(2) * &nu);
        }
    }

    #[test]
    fn identities_on_fixed_samples() {
        let samples = [
            Algebra::split(),
            Algebra::quadratic_field(rat(-7)),
            Algebra::from_i64([3, -1, 4, 1, -5, 9]),
            Algebra::from_i64([0, 2, -6, 5, 3, -8]),
            Algebra::from_i64([0, 0, 0, 0, 0, 1]),
        ];
        for m in &samples {
            assert!(check_eisenstein(m));
            assert!(check_discd_identity(m));
        }
    }

    #[test]
    fn weights() {
        let m = Algebra::from_i64([3, -1, 4, 1, -5, 9]);
        assert_eq!(fundamental_cubic(&m).weight, -1);
        assert_eq!(disc_q(&m).weight, 2);
        assert_eq!(p2_tilde(&m).weight, 2);
        assert_eq!(p3_tilde(&m).weight, 2);
        assert_eq!(disc_d(&m).weight, 2);
        assert_eq!(inv_m(&m).weight, 3);
    }
}
