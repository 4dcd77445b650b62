//! Gauss composition through two-dimensional algebras.
//!
//! The determinant form D_m(v) = det(L_v) identifies SL×SL-classes of
//! algebras of fixed non-square discriminant Δ with SL-classes of binary
//! quadratic forms of discriminant Δ, and those in turn with the group
//! G_Δ = ℚ*/𝔽*_Δ by evaluating a form at any non-isotropic vector.  The
//! group law transports back to a structure-constant product rule.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{apply, det_form, inverse, multiply, Algebra, LinMap, Vec2};
use crate::arith::{is_square, norm_class_equal, rat, Rat, NormClass};
use crate::cubics::BinaryQuadratic;
use crate::{Error, Result};

/// SL-class of a binary quadratic form of non-square discriminant Δ,
/// recorded by the norm class of one of its nonzero values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormClass {
    #[serde(with = "crate::arith::rat_serde")]
    pub delta: Rat,
    pub rep_value: NormClass,
}

/// Discriminant qb² − 4·qa·qc of q = qa·x² + qb·xy + qc·y².
pub fn form_discriminant(q: &BinaryQuadratic) -> Rat {
    q.discriminant()
}

fn require_anisotropic(q: &BinaryQuadratic) -> Result<Rat> {
    let delta = form_discriminant(q);
    if delta.is_zero() || is_square(&delta) {
        return Err(Error::Unsupported(
            "the group law is defined for non-square discriminants only".into(),
        ));
    }
    Ok(delta)
}

/// The SL-class of an anisotropic form: the norm class of q(e₁).  For a
/// non-square discriminant qa ≠ 0 automatically.
pub fn form_class(q: &BinaryQuadratic) -> Result<FormClass> {
    let delta = require_anisotropic(q)?;
    debug_assert!(!q.qa.is_zero());
    Ok(FormClass {
        rep_value: NormClass::new(delta.clone(), q.qa.clone())?,
        delta,
    })
}

/// Substitute v ↦ g⁻¹v in a weight-0 quadratic form.
pub fn transform_form(g: &LinMap, q: &BinaryQuadratic) -> Result<BinaryQuadratic> {
    let gi = inverse(g)?;
    let eval = |v: &Vec2| -> Rat {
        &q.qa * &v.0 * &v.0 + &q.qb * &v.0 * &v.1 + &q.qc * &v.1 * &v.1
    };
    let c1 = apply(&gi, &(rat(1), rat(0)));
    let c2 = apply(&gi, &(rat(0), rat(1)));
    let c12 = apply(&gi, &(rat(1), rat(1)));
    let qa = eval(&c1);
    let qc = eval(&c2);
    let qb = eval(&c12) - &qa - &qc;
    Ok(BinaryQuadratic { qa, qb, qc, weight: q.weight })
}

/// Shear x ↦ x + k·y with the smallest k ≥ 0 making the mixed coefficient
/// nonzero.  For anisotropic forms the outer coefficients stay nonzero.
fn shear_to_mixed(q: &BinaryQuadratic) -> BinaryQuadratic {
    let mut k: i64 = 0;
    loop {
        let kk = rat(k);
        let qb = rat(2) * &q.qa * &kk + &q.qb;
        if !qb.is_zero() {
            let qc = &q.qa * &kk * &kk + &q.qb * &kk + &q.qc;
            return BinaryQuadratic {
                qa: q.qa.clone(),
                qb,
                qc,
                weight: q.weight,
            };
        }
        k += 1;
    }
}

/// The algebra m₀ = (2, 0, 0, β, γ/β, α/2) with det_form(m₀) = q; needs a
/// nonzero mixed coefficient qb = 2β.
pub fn quadratic_to_algebra(q: &BinaryQuadratic) -> Result<Algebra> {
    if q.qb.is_zero() {
        return Err(Error::Domain(
            "the construction needs a nonzero mixed coefficient; shear first".into(),
        ));
    }
    let beta = &q.qb / rat(2);
    let m = Algebra::new(
        rat(2),
        rat(0),
        rat(0),
        beta.clone(),
        &q.qc / &beta,
        &q.qa / rat(2),
    );
    debug_assert_eq!(det_form(&m), *q);
    Ok(m)
}

/// SL-equivalence of two forms of equal non-square discriminant: their
/// values lie in the same norm class.
pub fn sl2_equivalent_forms(q1: &BinaryQuadratic, q2: &BinaryQuadratic) -> Result<bool> {
    let d1 = require_anisotropic(q1)?;
    let d2 = require_anisotropic(q2)?;
    if d1 != d2 {
        return Err(Error::Domain("the forms have different discriminants".into()));
    }
    norm_class_equal(&form_class(q1)?.rep_value, &form_class(q2)?.rep_value)
}

/// Representative of the composed form: with q = αx² + 2βxy + γy² and q′
/// likewise, the composite is ((ββ′)² − Δ/4)/(γγ′)·x² + 2ββ′·xy + γγ′·y².
pub fn compose_forms(q1: &BinaryQuadratic, q2: &BinaryQuadratic) -> Result<BinaryQuadratic> {
    let d1 = require_anisotropic(q1)?;
    let d2 = require_anisotropic(q2)?;
    if d1 != d2 {
        return Err(Error::Domain("the forms have different discriminants".into()));
    }
    let s1 = shear_to_mixed(q1);
    let s2 = shear_to_mixed(q2);
    let (b1, b2) = (&s1.qb / rat(2), &s2.qb / rat(2));
    let bb = &b1 * &b2;
    let gg = &s1.qc * &s2.qc;
    let qa = (&bb * &bb - &d1 / rat(4)) / &gg;
    let out = BinaryQuadratic {
        qa,
        qb: rat(2) * &bb,
        qc: gg,
        weight: 0,
    };
    debug_assert_eq!(form_discriminant(&out), d1);
    Ok(out)
}

/// Gauss composition on classes.
pub fn gauss_compose(q1: &BinaryQuadratic, q2: &BinaryQuadratic) -> Result<FormClass> {
    form_class(&compose_forms(q1, q2)?)
}

/// The SL×SL action: (g₁, g₂)·m = g₁ ∘ m ∘ (g₂⁻¹ × g₂⁻¹).  For a det-1
/// pair the determinant form transforms by g₂ alone.
pub fn slxsl_act(g1: &LinMap, g2: &LinMap, m: &Algebra) -> Result<Algebra> {
    let g2i = inverse(g2)?;
    let e1 = apply(&g2i, &(rat(1), rat(0)));
    let e2 = apply(&g2i, &(rat(0), rat(1)));
    let m11 = apply(g1, &multiply(m, &e1, &e1));
    let m22 = apply(g1, &multiply(m, &e2, &e2));
    let m12 = apply(g1, &multiply(m, &e1, &e2));
    Ok(Algebra::new(m11.0, m11.1, m22.0, m22.1, m12.0, m12.1))
}

/// Composition of algebra classes of equal non-square determinant-form
/// discriminant, by the structure-constant product rule in the canonical
/// gauge a₀ = 2, b₀ = c₀ = 0.
pub fn compose_algebra_classes(m1: &Algebra, m2: &Algebra) -> Result<Algebra> {
    let q1 = det_form(m1);
    let q2 = det_form(m2);
    let d1 = form_discriminant(&q1);
    let d2 = form_discriminant(&q2);
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::Domain("degenerate determinant form".into()));
    }
    if is_square(&d1) || is_square(&d2) {
        return Err(Error::Unsupported(
            "the group law is defined for non-square discriminants only".into(),
        ));
    }
    if d1 != d2 {
        return Err(Error::Domain(
            "the determinant forms have different discriminants".into(),
        ));
    }
    let a1 = quadratic_to_algebra(&shear_to_mixed(&q1))?;
    let a2 = quadratic_to_algebra(&shear_to_mixed(&q2))?;
    // m″₀: a = 2, b = c = 0, d = d₀d₀′, e = e₀e₀′, f from the composed form
    let dd = &a1.d * &a2.d;
    let ee = &a1.e * &a2.e;
    let f = (&dd * &dd - &d1 / rat(4)) / (rat(2) * &ee * &dd);
    let m = Algebra::new(rat(2), rat(0), rat(0), dd, ee, f);
    debug_assert_eq!(form_discriminant(&det_form(&m)), d1);
    Ok(m)
}

/// SL×SL-equivalence via the determinant-form correspondence; defined for
/// non-degenerate determinant forms of non-square discriminant.
pub fn slxsl_equivalent(m1: &Algebra, m2: &Algebra) -> Result<bool> {
    let q1 = det_form(m1);
    let q2 = det_form(m2);
    let d1 = form_discriminant(&q1);
    let d2 = form_discriminant(&q2);
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::Unsupported("degenerate determinant form".into()));
    }
    if is_square(&d1) || is_square(&d2) {
        return Err(Error::Unsupported(
            "SL×SL comparison is implemented for non-square discriminants only".into(),
        ));
    }
    if d1 != d2 {
        return Ok(false);
    }
    sl2_equivalent_forms(&q1, &q2)
}
