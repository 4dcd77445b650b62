//! Two-dimensional commutative algebras over ℚ.
//!
//! An algebra is a commutative bilinear product m on V = ℚ² with a fixed
//! basis (e₁, e₂), stored through six structure constants:
//!
//! ```text
//! m(e₁,e₁) = a e₁ + b e₂
//! m(e₂,e₂) = c e₁ + d e₂
//! m(e₁,e₂) = e e₁ + f e₂
//! ```
//!
//! No unit and no associativity are assumed.  GL₂(ℚ) acts by
//! (g·m)(v, w) = g(m(g⁻¹v, g⁻¹w)); all the invariants in this crate are
//! polynomial in (a, …, f) and equivariant for this action.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat, rat_serde, ratio, Rat};
use crate::cubics::{BinaryCubic, BinaryQuadratic};
use crate::invariants::fundamental_cubic;
use crate::{Error, Result};

/// A vector x e₁ + y e₂.
pub type Vec2 = (Rat, Rat);

/// A 2×2 rational matrix; `g[i][j]` is the entry in row i, column j, so
/// g(e₁) = g[0][0] e₁ + g[1][0] e₂.
pub type LinMap = [[Rat; 2]; 2];

/// A linear form t₁ ε₁ + t₂ ε₂ on V.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Covector {
    #[serde(with = "rat_serde")]
    pub t1: Rat,
    #[serde(with = "rat_serde")]
    pub t2: Rat,
}

impl Covector {
    pub fn eval(&self, v: &Vec2) -> Rat {
        &self.t1 * &v.0 + &self.t2 * &v.1
    }

    pub fn is_zero(&self) -> bool {
        self.t1.is_zero() && self.t2.is_zero()
    }
}

/// Structure constants of a commutative product on ℚ².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algebra {
    #[serde(with = "rat_serde")]
    pub a: Rat,
    #[serde(with = "rat_serde")]
    pub b: Rat,
    #[serde(with = "rat_serde")]
    pub c: Rat,
    #[serde(with = "rat_serde")]
    pub d: Rat,
    #[serde(with = "rat_serde")]
    pub e: Rat,
    #[serde(with = "rat_serde")]
    pub f: Rat,
}

impl Algebra {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat, f: Rat) -> Self {
        Algebra { a, b, c, d, e, f }
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        Algebra::new(rat(c[0]), rat(c[1]), rat(c[2]), rat(c[3]), rat(c[4]), rat(c[5]))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.b.is_zero()
            && self.c.is_zero()
            && self.d.is_zero()
            && self.e.is_zero()
            && self.f.is_zero()
    }

    /// The split algebra ℚ × ℚ in its standard basis.
    pub fn split() -> Self {
        Algebra::from_i64([1, 0, 0, 1, 0, 0])
    }

    /// The unital quadratic algebra ℚ(√λ): e₁ unit, e₂² = λ e₁.
    pub fn quadratic_field(lambda: Rat) -> Self {
        Algebra::new(rat(1), rat(0), lambda, rat(0), rat(0), rat(1))
    }

    /// The rank-one normal form: e₁² = e₁, e₂² = λ e₁, e₁e₂ = ½ e₂.
    pub fn rank1_row(lambda: Rat) -> Self {
        Algebra::new(rat(1), rat(0), lambda, rat(0), rat(0), ratio(1, 2))
    }
}

/// The product m(u, v).
pub fn multiply(m: &Algebra, u: &Vec2, v: &Vec2) -> Vec2 {
    let xx = &u.0 * &v.0;
    let yy = &u.1 * &v.1;
    let xy = &u.0 * &v.1 + &u.1 * &v.0;
    (
        &m.a * &xx + &m.c * &yy + &m.e * &xy,
        &m.b * &xx + &m.d * &yy + &m.f * &xy,
    )
}

/// The trace form T(v) = tr(L_v) where L_v is left multiplication by v.
pub fn trace_form(m: &Algebra) -> Covector {
    Covector {
        t1: &m.a + &m.f,
        t2: &m.e + &m.d,
    }
}

/// The quadratic form D(v) = det(L_v).
pub fn det_form(m: &Algebra) -> BinaryQuadratic {
    BinaryQuadratic {
        qa: &m.a * &m.f - &m.b * &m.e,
        qb: &m.a * &m.d - &m.b * &m.c,
        qc: &m.e * &m.d - &m.c * &m.f,
        weight: 0,
    }
}

/// The companion quadratic form D″(v); it agrees with D(v) exactly when the
/// trace form vanishes.
pub fn second_det_form(m: &Algebra) -> BinaryQuadratic {
    BinaryQuadratic {
        qa: &m.b * &m.d - &m.f * &m.f,
        qb: rat(2) * &m.e * &m.f - &m.a * &m.d - &m.b * &m.c,
        qc: &m.a * &m.c - &m.e * &m.e,
        weight: 0,
    }
}

pub fn det(g: &LinMap) -> Rat {
    &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0]
}

pub fn inverse(g: &LinMap) -> Result<LinMap> {
    let d = det(g);
    if d.is_zero() {
        return Err(Error::Domain("singular matrix".into()));
    }
    Ok([
        [&g[1][1] / &d, -&g[0][1] / &d],
        [-&g[1][0] / &d, &g[0][0] / &d],
    ])
}

pub fn apply(g: &LinMap, v: &Vec2) -> Vec2 {
    (
        &g[0][0] * &v.0 + &g[0][1] * &v.1,
        &g[1][0] * &v.0 + &g[1][1] * &v.1,
    )
}

/// Basis change: (g·m)(v, w) = g(m(g⁻¹v, g⁻¹w)).
pub fn gl_act(g: &LinMap, m: &Algebra) -> Result<Algebra> {
    let h = inverse(g)?;
    let he1 = apply(&h, &(rat(1), rat(0)));
    let he2 = apply(&h, &(rat(0), rat(1)));
    let m11 = apply(g, &multiply(m, &he1, &he1));
    let m22 = apply(g, &multiply(m, &he2, &he2));
    let m12 = apply(g, &multiply(m, &he1, &he2));
    Ok(Algebra::new(m11.0, m11.1, m22.0, m22.1, m12.0, m12.1))
}

/// The associator (u, v, w) ↦ m(m(u,v),w) − m(u,m(v,w)).
pub fn associator(m: &Algebra, u: &Vec2, v: &Vec2, w: &Vec2) -> Vec2 {
    let l = multiply(m, &multiply(m, u, v), w);
    let r = multiply(m, u, &multiply(m, v, w));
    (&l.0 - &r.0, &l.1 - &r.1)
}

/// Split m into its trace part k (with k(v,v) = (2/3)T(v)·v) and its
/// trace-free part; the trace part carries all of T and none of Q, the
/// trace-free part all of Q and none of T.
pub fn decompose(m: &Algebra) -> (Algebra, Algebra) {
    let t = trace_form(m);
    let third = ratio(1, 3);
    let k = Algebra::new(
        rat(2) * &third * &t.t1,
        rat(0),
        rat(0),
        rat(2) * &third * &t.t2,
        &third * &t.t2,
        &third * &t.t1,
    );
    let rest = Algebra::new(
        &m.a - &k.a,
        &m.b - &k.b,
        &m.c - &k.c,
        &m.d - &k.d,
        &m.e - &k.e,
        &m.f - &k.f,
    );
    (k, rest)
}

/// The unique trace-free algebra whose fundamental cubic is the given form
/// (α x³ + β x²y + γ xy² + δ y³).
pub fn exceptional_from_cubic(q: &BinaryCubic) -> Algebra {
    let third = ratio(1, 3);
    Algebra::new(
        &third * &q.b,
        -q.a.clone(),
        q.d.clone(),
        -&third * &q.c,
        &third * &q.c,
        -&third * &q.b,
    )
}

/// The set of idempotents of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Idempotents {
    /// Finitely many (possibly none): the rational directions annihilating
    /// the fundamental cubic, rescaled.
    Finite(Vec<Vec2>),
    /// The fundamental cubic vanishes identically and the trace form does
    /// not: every v with T(v) = 3/2 is idempotent.
    Line(Covector),
}

/// All rational idempotents m(v,v) = v, v ≠ 0.
pub fn idempotents(m: &Algebra) -> Result<Idempotents> {
    let q = fundamental_cubic(m);
    if q.is_zero() {
        let t = trace_form(m);
        if t.is_zero() {
            return Ok(Idempotents::Finite(vec![]));
        }
        return Ok(Idempotents::Line(t));
    }
    // idempotent directions are the projective rational roots of Q
    let mut dirs: Vec<Vec2> = Vec::new();
    let dehom = vec![q.d.clone(), q.c.clone(), q.b.clone(), q.a.clone()];
    for (r, _) in crate::poly::rational_roots(&dehom)? {
        dirs.push((r, rat(1)));
    }
    if q.a.is_zero() {
        dirs.push((rat(1), rat(0)));
    }
    let mut out = Vec::new();
    for v0 in dirs {
        let w = multiply(m, &v0, &v0);
        // w is parallel to v0; extract the scale
        let kappa = if !v0.0.is_zero() {
            &w.0 / &v0.0
        } else {
            &w.1 / &v0.1
        };
        if kappa.is_zero() {
            continue;
        }
        let v = (&v0.0 / &kappa, &v0.1 / &kappa);
        debug_assert_eq!(multiply(m, &v, &v), v);
        out.push(v);
    }
    Ok(Idempotents::Finite(out))
}

/// Identity matrix scaled by λ.
pub fn scalar_map(lambda: &Rat) -> LinMap {
    [
        [lambda.clone(), Rat::zero()],
        [Rat::zero(), lambda.clone()],
    ]
}

/// The identity map.
pub fn identity_map() -> LinMap {
    scalar_map(&Rat::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;

    #[test]
    fn split_product() {
        let m = Algebra::split();
        let u = (rat(2), rat(3));
        let v = (rat(5), rat(-1));
        assert_eq!(multiply(&m, &u, &v), (rat(10), rat(-3)));
    }

    #[test]
    fn trace_and_det_forms() {
        let m = Algebra::split();
        let t = trace_form(&m);
        assert_eq!((t.t1, t.t2), (rat(1), rat(1)));
        let d = det_form(&m);
        assert_eq!((d.qa, d.qb, d.qc), (rat(0), rat(1), rat(0)));
    }

    #[test]
    fn second_det_agrees_when_trace_free() {
        let q = BinaryCubic::new(rat(2), rat(-1), rat(3), rat(5), -1);
        let m = exceptional_from_cubic(&q);
        assert!(trace_form(&m).is_zero());
        let d1 = det_form(&m);
        let d2 = second_det_form(&m);
        assert_eq!((d1.qa, d1.qb, d1.qc), (d2.qa, d2.qb, d2.qc));
    }

    #[test]
    fn gl_act_by_scalar_scales_constants() {
        let m = Algebra::from_i64([1, 2, 3, 4, 5, 6]);
        let g = scalar_map(&rat(2));
        let m2 = gl_act(&g, &m).unwrap();
        assert_eq!(m2.a, ratio(1, 2));
        assert_eq!(m2.f, rat(3));
    }

    #[test]
    fn gl_act_is_a_group_action() {
        let m = Algebra::from_i64([1, -2, 0, 3, 5, -1]);
        let g = [[rat(1), rat(2)], [rat(0), rat(1)]];
        let h = [[rat(3), rat(1)], [rat(1), rat(1)]];
        let gh = [
            [
                &g[0][0] * &h[0][0] + &g[0][1] * &h[1][0],
                &g[0][0] * &h[0][1] + &g[0][1] * &h[1][1],
            ],
            [
                &g[1][0] * &h[0][0] + &g[1][1] * &h[1][0],
                &g[1][0] * &h[0][1] + &g[1][1] * &h[1][1],
            ],
        ];
        let lhs = gl_act(&g, &gl_act(&h, &m).unwrap()).unwrap();
        let rhs = gl_act(&gh, &m).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn decompose_splits_trace_and_cubic() {
        let m = Algebra::from_i64([1, -2, 0, 3, 5, -1]);
        let (k, rest) = decompose(&m);
        assert!(trace_form(&rest).is_zero());
        assert!(fundamental_cubic(&k).is_zero());
        assert_eq!(fundamental_cubic(&rest), fundamental_cubic(&m));
        let back = Algebra::new(
            &k.a + &rest.a,
            &k.b + &rest.b,
            &k.c + &rest.c,
            &k.d + &rest.d,
            &k.e + &rest.e,
            &k.f + &rest.f,
        );
        assert_eq!(back, m);
    }

    #[test]
    fn exceptional_from_cubic_example() {
        // x²y − xy² gives e₁² = (1/3)e₁, e₂² = (1/3)e₂,
        // e₁e₂ = −(1/3)e₁ − (1/3)e₂
        let q = BinaryCubic::new(rat(0), rat(1), rat(-1), rat(0), -1);
        let m = exceptional_from_cubic(&q);
        assert_eq!(
            m,
            Algebra::new(
                ratio(1, 3),
                rat(0),
                rat(0),
                ratio(1, 3),
                ratio(-1, 3),
                ratio(-1, 3)
            )
        );
        assert_eq!(invariants::fundamental_cubic(&m), q);
        assert!(trace_form(&m).is_zero());
    }

    #[test]
    fn idempotents_of_split() {
        let m = Algebra::split();
        match idempotents(&m).unwrap() {
            Idempotents::Finite(v) => {
                assert_eq!(v.len(), 3);
                assert!(v.contains(&(rat(1), rat(0))));
                assert!(v.contains(&(rat(0), rat(1))));
                assert!(v.contains(&(rat(1), rat(1))));
            }
            _ => panic!("expected finite idempotent set"),
        }
    }

    #[test]
    fn idempotents_empty_for_null_rows() {
        // e₁² = 0, e₂² = 0, e₁e₂ = e₂
        let m = Algebra::from_i64([0, 0, 0, 0, 0, 1]);
        assert_eq!(idempotents(&m).unwrap(), Idempotents::Finite(vec![]));
    }

    #[test]
    fn associator_vanishes_for_split() {
        let m = Algebra::split();
        let u = (rat(1), rat(4));
        let v = (rat(-2), rat(3));
        let w = (rat(7), rat(1));
        assert_eq!(associator(&m, &u, &v, &w), (rat(0), rat(0)));
    }
}
