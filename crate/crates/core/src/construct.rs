//! Inverse maps: algebras realizing prescribed moduli.
//!
//! Every constructor ends by recomputing the invariants of its output and
//! asserting the prescription holds bit-exactly, so any selection subtlety
//! fails loudly instead of silently returning a wrong representative.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{gl_act, Algebra};
use crate::arith::{rat, ratio, sqrt_exact, square_class, Rat};
use crate::invariants::{bundle, disc_q, inv_m, moduli};
use crate::{Error, Result};

/// A point of the Eisenstein hypersurface 27DA² + 4B³ + 2⁴3⁶C² = 0 in the
/// weighted space of (p̃₃, p̃₂, Disc, Inv) values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EisensteinPoint {
    #[serde(rename = "A", with = "crate::arith::rat_serde")]
    pub a: Rat,
    #[serde(rename = "B", with = "crate::arith::rat_serde")]
    pub b: Rat,
    #[serde(rename = "D", with = "crate::arith::rat_serde")]
    pub d: Rat,
    #[serde(rename = "C", with = "crate::arith::rat_serde")]
    pub c: Rat,
}

impl EisensteinPoint {
    pub fn new(a: Rat, b: Rat, d: Rat, c: Rat) -> Result<Self> {
        if a.is_zero() && b.is_zero() && d.is_zero() && c.is_zero() {
            return Err(Error::Domain("the origin is not an Eisenstein point".into()));
        }
        let lhs = rat(27) * &d * &a * &a + rat(4) * &b * &b * &b + rat(11664) * &c * &c;
        if !lhs.is_zero() {
            return Err(Error::Domain(format!(
                "not on the Eisenstein surface: 27DA^2 + 4B^3 + 11664C^2 = {}",
                crate::arith::format_rat(&lhs)
            )));
        }
        Ok(EisensteinPoint { a, b, d, c })
    }
}

/// Generic algebra with moduli exactly (p₃, p₂), off the Cardano curve.
pub fn from_moduli_generic(p3: &Rat, p2: &Rat) -> Result<Algebra> {
    let s = rat(-27) * p3 * p3 - rat(4) * p2 * p2 * p2;
    if s.is_zero() {
        return Err(Error::Domain(
            "point lies on the Cardano curve; use from_moduli_cardano".into(),
        ));
    }
    let s2 = &s * &s;
    let m = Algebra::new(
        (&s - rat(9) * p2 * p3) / (rat(3) * &s2),
        (rat(2) * p2 * p2 * p2 + rat(27) * p3 * p3) / (rat(3) * &s2),
        rat(9) * p3 / &s2,
        rat(2) * p2 * p2 / &s2,
        rat(-2) * p2 * p2 / &s2,
        (ratio(-2, 3) * p2 * p2 * p2 - ratio(9, 2) * p3 * p3 + rat(3) * p2 * p3) / &s2,
    );
    let nu = moduli(&m)?;
    assert_eq!((&nu.p3, &nu.p2), (p3, p2), "moduli round-trip failed");
    Ok(m)
}

/// Algebra on the Cardano curve with moduli (p₃, p₂) = (−2Δ³, −3Δ²) and
/// prescribed square class of Disc(Q); Disc(Q) = 9/(4a³) for the squarefree
/// representative a.
pub fn from_moduli_cardano(p3: &Rat, p2: &Rat, ext: &Rat) -> Result<Algebra> {
    if p3.is_zero() && p2.is_zero() {
        return Err(Error::Domain("the origin needs the exceptional constructors".into()));
    }
    let curve = rat(27) * p3 * p3 + rat(4) * p2 * p2 * p2;
    if !curve.is_zero() {
        return Err(Error::Domain("point is off the Cardano curve".into()));
    }
    if ext.is_zero() {
        return Err(Error::Input("extension class representative must be nonzero".into()));
    }
    // the double root of the modular cubic x³ + p₂x − p₃
    let delta = rat(3) * p3 / (rat(2) * p2);
    let a = Rat::from_integer(square_class(ext)?.0);
    let m = Algebra::new(
        rat(0),
        ratio(-1, 6),
        rat(0),
        (rat(2) * &delta + rat(1)) / (rat(2) * &a),
        (&delta - rat(1)) / (rat(2) * &a),
        rat(0),
    );
    let nu = moduli(&m)?;
    assert_eq!((&nu.p3, &nu.p2), (p3, p2), "Cardano moduli round-trip failed");
    debug_assert_eq!(square_class(&disc_q(&m).value).unwrap(), square_class(&a).unwrap());
    Ok(m)
}

/// Exceptional algebra (T = 0, ν = (0,0)) whose fundamental cubic has the
/// same splitting field as x³ + d₂x − d₃.
pub fn from_cubic_exceptional(d2: &Rat, d3: &Rat) -> Result<Algebra> {
    let dsq = rat(-27) * d3 * d3 - rat(4) * d2 * d2 * d2;
    if dsq.is_zero() {
        return Err(Error::Domain("the cubic has a repeated root".into()));
    }
    let m = Algebra::new(
        rat(-3) * d2 * d3 / &dsq,
        (rat(27) * d3 * d3 + rat(2) * d2 * d2 * d2) / (rat(3) * &dsq),
        rat(9) * d3 / &dsq,
        rat(2) * d2 * d2 / &dsq,
        rat(-2) * d2 * d2 / &dsq,
        rat(3) * d2 * d3 / &dsq,
    );
    debug_assert!(crate::algebra::trace_form(&m).is_zero());
    let nu = moduli(&m)?;
    assert!(nu.is_origin(), "exceptional constructor left the origin");
    Ok(m)
}

/// Prescribed reduced idemvalues: three distinct rationals, or one rational
/// plus a conjugate quadratic pair given by its trace and norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TripleData {
    Rational {
        #[serde(with = "crate::arith::rat_serde")]
        delta1: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        delta2: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        delta3: Rat,
    },
    Pair {
        #[serde(with = "crate::arith::rat_serde")]
        delta1: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        trace: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        norm: Rat,
    },
}

/// Algebra whose reduced idemvalues are exactly the prescribed Δᵢ.
pub fn from_triple_data(data: &TripleData) -> Result<Algebra> {
    let (p3, p2) = match data {
        TripleData::Rational { delta1, delta2, delta3 } => {
            if !(delta1 + delta2 + delta3).is_zero() {
                return Err(Error::Domain("reduced idemvalues must sum to zero".into()));
            }
            if delta1 == delta2 || delta2 == delta3 || delta1 == delta3 {
                return Err(Error::Domain(
                    "repeated idemvalues lie on the Cardano curve; use from_moduli_cardano".into(),
                ));
            }
            (
                delta1 * delta2 * delta3,
                delta1 * delta2 + delta2 * delta3 + delta3 * delta1,
            )
        }
        TripleData::Pair { delta1, trace, norm } => {
            if !(delta1 + trace).is_zero() {
                return Err(Error::Domain("reduced idemvalues must sum to zero".into()));
            }
            (delta1 * norm, delta1 * trace + norm)
        }
    };
    from_moduli_generic(&p3, &p2).map_err(|e| match e {
        Error::Domain(_) => Error::Domain(
            "repeated idemvalues lie on the Cardano curve; use from_moduli_cardano".into(),
        ),
        other => other,
    })
}

/// Algebra with (p̃₃, p̃₂, Disc(Q), Inv) = (A, B, D, C) exactly.
pub fn from_eisenstein(pt: &EisensteinPoint) -> Result<Algebra> {
    let (aa, bb, dd, cc) = (&pt.a, &pt.b, &pt.d, &pt.c);
    let m = if dd.is_zero() {
        if !bb.is_zero() {
            // boundary, stable rank two: gauge b = c = 0, d = 2, e = 1 and
            // solve the linear system for (a, f): a − 2f = −9C/B and
            // a + f = −AB/(648C); the surface equation makes the quadratic
            // constraint consistent, and it forces C ≠ 0 here
            if cc.is_zero() {
                return Err(Error::Internal("B ≠ 0, C = D = 0 is off the surface".into()));
            }
            let s = rat(-9) * cc / bb;
            let t = -aa * bb / (rat(648) * cc);
            let a = (rat(2) * &t + &s) / rat(3);
            let f = (&t - &s) / rat(3);
            Algebra::new(a, rat(0), rat(0), rat(2), rat(1), f)
        } else if !aa.is_zero() {
            // boundary, stable rank one: c = A/27 (B = C = 0 on the surface)
            Algebra::new(rat(1), rat(0), aa / rat(27), rat(0), rat(0), ratio(1, 2))
        } else {
            return Err(Error::Unsupported(
                "no constructor branch covers this Eisenstein point".into(),
            ));
        }
    } else if !cc.is_zero() {
        // off the Cardano curve
        let m0 = from_moduli_generic(&(aa / dd), &(bb / dd))?;
        // a determinant-t change of basis scales weight-2 values by t⁻² and
        // Inv by t⁻³; matching both Inv and Disc pins t
        let t = inv_m(&m0).value * dd / (cc * disc_q(&m0).value);
        let g = [[t, rat(0)], [rat(0), rat(1)]];
        gl_act(&g, &m0)?
    } else if !bb.is_zero() {
        // Cardano branch: moduli (A/D, B/D) with the extension class of D
        let m0 = from_moduli_cardano(&(aa / dd), &(bb / dd), dd)?;
        let t = sqrt_exact(&(disc_q(&m0).value / dd)).ok_or_else(|| {
            Error::Unsupported("no rational rescaling matches the prescribed Disc".into())
        })?;
        let g = [[t, rat(0)], [rat(0), rat(1)]];
        gl_act(&g, &m0)?
    } else if aa.is_zero() {
        // exceptional fiber: the d₃ = 0 family x³ − ax with a the squarefree
        // representative of D's class
        let a = Rat::from_integer(square_class(dd)?.0);
        let m0 = from_cubic_exceptional(&-&a, &rat(0))?;
        let t = sqrt_exact(&(disc_q(&m0).value / dd)).ok_or_else(|| {
            Error::Unsupported("no rational rescaling matches the prescribed Disc".into())
        })?;
        let g = [[t, rat(0)], [rat(0), rat(1)]];
        gl_act(&g, &m0)?
    } else {
        return Err(Error::Internal("A ≠ 0, B = C = 0, D ≠ 0 is off the surface".into()));
    };
    let bun = bundle(&m);
    assert_eq!(
        (&bun.p3_tilde.value, &bun.p2_tilde.value, &bun.disc_q.value, &bun.inv.value),
        (aa, bb, dd, cc),
        "Eisenstein recomputation failed"
    );
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{equivalent_gl, is_associative, is_division, Equivalence};
    use crate::invariants::{fundamental_cubic, p2_tilde, p3_tilde};

    #[test]
    fn generic_example() {
        let m = from_moduli_generic(&rat(0), &rat(-3)).unwrap();
        assert_eq!(
            m,
            Algebra::new(
                ratio(1, 324),
                ratio(-1, 648),
                rat(0),
                ratio(1, 648),
                ratio(-1, 648),
                ratio(1, 648)
            )
        );
        assert!(from_moduli_generic(&rat(16), &rat(-12)).is_err());
    }

    #[test]
    fn cardano_example() {
        let m = from_moduli_cardano(&rat(-2), &rat(-3), &rat(2)).unwrap();
        assert_eq!(
            m,
            Algebra::new(rat(0), ratio(-1, 6), rat(0), ratio(3, 4), rat(0), rat(0))
        );
        assert_eq!(disc_q(&m).value, ratio(9, 32));
        // the split class and the ℚ(√2) class over (16, −12)
        let m1 = from_moduli_cardano(&rat(16), &rat(-12), &rat(1)).unwrap();
        assert!(is_associative(&m1));
        assert!(!is_division(&m1).unwrap());
        let m2 = from_moduli_cardano(&rat(16), &rat(-12), &rat(2)).unwrap();
        assert!(is_associative(&m2));
        assert!(is_division(&m2).unwrap());
        assert_eq!(
            equivalent_gl(&m2, &Algebra::quadratic_field(rat(2))).unwrap(),
            Equivalence::Yes
        );
    }

    #[test]
    fn exceptional_example() {
        let m = from_cubic_exceptional(&rat(-7), &rat(-6)).unwrap();
        assert_eq!(
            m,
            Algebra::new(
                ratio(-63, 200),
                ratio(143, 600),
                ratio(-27, 200),
                ratio(49, 200),
                ratio(-49, 200),
                ratio(63, 200)
            )
        );
        assert!(crate::algebra::trace_form(&m).is_zero());
        let s1 = crate::cubics::splitting_descriptor(&fundamental_cubic(
            &from_cubic_exceptional(&rat(-1), &rat(0)).unwrap(),
        ))
        .unwrap();
        assert_eq!(s1.degree, 1);
        let s6 = crate::cubics::splitting_descriptor(&fundamental_cubic(
            &from_cubic_exceptional(&rat(0), &rat(2)).unwrap(),
        ))
        .unwrap();
        assert_eq!(s6.degree, 6);
        assert!(from_cubic_exceptional(&rat(-3), &rat(-2)).is_err());
    }

    #[test]
    fn cube_proportionality() {
        // in an exceptional algebra every cube is proportional to the element
        let m = from_cubic_exceptional(&rat(-7), &rat(-6)).unwrap();
        for (x, y) in [(1i64, 2i64), (3, -1), (5, 7), (-2, 9)] {
            let v = (rat(x), rat(y));
            let vv = crate::algebra::multiply(&m, &v, &v);
            let vvv = crate::algebra::multiply(&m, &vv, &v);
            assert!((&vvv.0 * &v.1 - &vvv.1 * &v.0).is_zero());
        }
    }

    #[test]
    fn triple_data() {
        let m = from_triple_data(&TripleData::Rational {
            delta1: rat(1),
            delta2: rat(2),
            delta3: rat(-3),
        })
        .unwrap();
        let nu = moduli(&m).unwrap();
        assert_eq!((nu.p3.clone(), nu.p2.clone()), (rat(-6), rat(-7)));
        assert!(from_triple_data(&TripleData::Rational {
            delta1: rat(-2),
            delta2: rat(-2),
            delta3: rat(4),
        })
        .is_err());
        let m = from_triple_data(&TripleData::Pair {
            delta1: rat(0),
            trace: rat(0),
            norm: rat(-3),
        })
        .unwrap();
        let nu = moduli(&m).unwrap();
        assert_eq!((nu.p3.clone(), nu.p2.clone()), (rat(0), rat(-3)));
        assert_ne!(
            equivalent_gl(&m, &from_moduli_generic(&rat(0), &rat(-3)).unwrap()).unwrap(),
            Equivalence::No
        );
    }

    #[test]
    fn eisenstein_branches() {
        // split class
        let m = from_eisenstein(&EisensteinPoint::new(rat(16), rat(-12), rat(1), rat(0)).unwrap())
            .unwrap();
        assert!(is_associative(&m));
        // off-Cardano with C ≠ 0: any generic algebra's own bundle
        let g = Algebra::from_i64([3, -1, 4, 1, -5, 9]);
        let b = bundle(&g);
        let pt = EisensteinPoint::new(
            b.p3_tilde.value.clone(),
            b.p2_tilde.value.clone(),
            b.disc_q.value.clone(),
            b.inv.value.clone(),
        )
        .unwrap();
        from_eisenstein(&pt).unwrap();
        // boundary D = 0 with B, C ≠ 0: Table-1-row-2 style values
        let m = from_eisenstein(&EisensteinPoint::new(rat(-36), rat(-36), rat(0), rat(-4)).unwrap())
            .unwrap();
        assert_eq!(p2_tilde(&m).value, rat(-36));
        assert_eq!(p3_tilde(&m).value, rat(-36));
        // stable rank one boundary
        let m = from_eisenstein(&EisensteinPoint::new(rat(54), rat(0), rat(0), rat(0)).unwrap())
            .unwrap();
        assert_eq!(m, Algebra::new(rat(1), rat(0), rat(2), rat(0), rat(0), ratio(1, 2)));
        // exceptional fiber
        let m = from_eisenstein(&EisensteinPoint::new(rat(0), rat(0), rat(3), rat(0)).unwrap())
            .unwrap();
        let nu = moduli(&m).unwrap();
        assert!(nu.is_origin());
        // surface validation
        assert!(EisensteinPoint::new(rat(1), rat(1), rat(1), rat(1)).is_err());
        assert!(EisensteinPoint::new(rat(0), rat(0), rat(0), rat(0)).is_err());
    }
}
