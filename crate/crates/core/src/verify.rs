//! Deterministic fuzz suites: identity checks, equivariance, constructor
//! round-trips, classification stability, and the Gauss group law.
//!
//! Everything is driven by a seeded ChaCha stream so a report is a pure
//! function of (seed, count, coeff_bound).  Each failed check is recorded
//! with a serialized reproducer instead of panicking, so a single run can
//! surface every broken property at once.

use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{det, det_form, gl_act, Algebra, LinMap};
use crate::arith::{is_square, norm_class_equal, rat, ratio, square_class, Rat};
use crate::classify::{
    classify_gl, equivalent_gl, equivalent_sl, idemvalue_moduli, is_associative,
    is_division, ClassDescriptor, Equivalence, SLEquivalence,
};
use crate::construct::{
    from_cubic_exceptional, from_eisenstein, from_moduli_cardano, from_moduli_generic,
    from_triple_data, EisensteinPoint, TripleData,
};
use crate::cubics::{eisenstein_check, pow_int, BinaryCubic, BinaryQuadratic};
use crate::gauss::{
    compose_forms, form_class, form_discriminant, gauss_compose, slxsl_act, transform_form,
};
use crate::invariants::{
    bundle, check_discd_identity, check_eisenstein, disc_d, disc_d_via_det_form,
    disc_q_via_covariants, inv_via_covariants, moduli, p2_tilde_via_covariants,
    p3_tilde_via_covariants,
};
use crate::Result;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub coeff_bound: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, count: 10_000, coeff_bound: 20 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub suite: String,
    pub check: String,
    /// JSON reproducer: the offending inputs.
    pub reproducer: serde_json::Value,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct Summary {
    pub checks_run: usize,
    pub failures: Vec<Failure>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, suite: &str, check: &str, pass: bool, repro: impl Fn() -> serde_json::Value) {
        self.checks_run += 1;
        if !pass {
            self.failures.push(Failure {
                suite: suite.into(),
                check: check.into(),
                reproducer: repro(),
            });
        }
    }
}

// --- random generators -------------------------------------------------------

pub fn rand_algebra(rng: &mut ChaCha8Rng, bound: i64) -> Algebra {
    let mut c = [0i64; 6];
    for x in &mut c {
        *x = rng.gen_range(-bound..=bound);
    }
    Algebra::from_i64(c)
}

fn rand_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound.max(1));
    ratio(n, d)
}

fn rand_nonzero_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    loop {
        let x = rand_rat(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn rand_gl(rng: &mut ChaCha8Rng, bound: i64) -> LinMap {
    loop {
        let g = [
            [rat(rng.gen_range(-bound..=bound)), rat(rng.gen_range(-bound..=bound))],
            [rat(rng.gen_range(-bound..=bound)), rat(rng.gen_range(-bound..=bound))],
        ];
        if !det(&g).is_zero() {
            return g;
        }
    }
}

/// A rational matrix of determinant exactly 1: scale one column of a random
/// invertible matrix by 1/det.
pub fn rand_sl(rng: &mut ChaCha8Rng, bound: i64) -> LinMap {
    let g = rand_gl(rng, bound);
    let d = det(&g);
    [
        [&g[0][0] / &d, g[0][1].clone()],
        [&g[1][0] / &d, g[1][1].clone()],
    ]
}

fn algebra_json(m: &Algebra) -> serde_json::Value {
    serde_json::to_value(m).expect("algebra serializes")
}

// --- suites ------------------------------------------------------------------

/// Twisted Eisenstein identity, the Disc(D) identity, and dual-path
/// agreement on random algebras across all strata.
pub fn suite_identities(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x1d);
    for _ in 0..cfg.count {
        let m = rand_algebra(&mut rng, cfg.coeff_bound);
        let b = bundle(&m);
        out.check("identities", "eisenstein", check_eisenstein(&m), || algebra_json(&m));
        out.check("identities", "disc_d", check_discd_identity(&m), || algebra_json(&m));
        let dual = b.p3_tilde.value == p3_tilde_via_covariants(&m).value
            && b.p2_tilde.value == p2_tilde_via_covariants(&m).value
            && b.inv.value == inv_via_covariants(&m).value
            && b.disc_q.value == disc_q_via_covariants(&m).value
            && b.disc_d.value == disc_d_via_det_form(&m).value;
        out.check("identities", "dual_path", dual, || algebra_json(&m));
    }
}

/// The classical covariant identity on random (cubic, point) pairs.
pub fn suite_classical_eisenstein(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x2e);
    let b = cfg.coeff_bound;
    for _ in 0..cfg.count {
        let q = BinaryCubic::new(
            rand_rat(&mut rng, b),
            rand_rat(&mut rng, b),
            rand_rat(&mut rng, b),
            rand_rat(&mut rng, b),
            -1,
        );
        let x = rand_rat(&mut rng, b);
        let y = rand_rat(&mut rng, b);
        out.check("classical", "eisenstein_covariant", eisenstein_check(&q, &x, &y), || {
            serde_json::json!({ "cubic": q, "x": crate::arith::format_rat(&x), "y": crate::arith::format_rat(&y) })
        });
    }
}

/// Associativity: moduli anchor and agreement of the two criteria.
pub fn suite_associativity(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x3f);
    // fixed anchors
    let split = Algebra::split();
    let nu = moduli(&split).unwrap();
    out.check(
        "associativity",
        "split_anchor",
        nu.p3 == rat(16) && nu.p2 == rat(-12) && is_associative(&split),
        || algebra_json(&split),
    );
    for a in [2i64, 3, 5, -1, -7] {
        let f = Algebra::quadratic_field(rat(a));
        let nu = moduli(&f).unwrap();
        out.check(
            "associativity",
            "field_anchor",
            nu.p3 == rat(16) && nu.p2 == rat(-12) && is_associative(&f),
            || algebra_json(&f),
        );
    }
    // the moduli criterion agrees with the basis associator on generic fuzz;
    // is_associative computes both and debug-asserts, so exercise it on
    // generic samples and record the agreement explicitly
    let mut done = 0;
    while done < cfg.count {
        let m = rand_algebra(&mut rng, cfg.coeff_bound);
        let Ok(nu) = moduli(&m) else { continue };
        done += 1;
        let by_moduli = nu.p3 == rat(16) && nu.p2 == rat(-12);
        out.check("associativity", "criterion_agreement", by_moduli == is_associative(&m), || {
            algebra_json(&m)
        });
    }
}

/// Idemvalue oracle: algebras built from prescribed triples, then twisted.
pub fn suite_idemvalues(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x4a);
    let b = cfg.coeff_bound;
    let mut done = 0;
    while done < cfg.count {
        let data = if rng.gen_bool(0.5) {
            let d1 = rand_rat(&mut rng, b);
            let d2 = rand_rat(&mut rng, b);
            TripleData::Rational { delta3: -(&d1 + &d2), delta1: d1, delta2: d2 }
        } else {
            let d1 = rand_rat(&mut rng, b);
            TripleData::Pair { trace: -&d1, norm: rand_rat(&mut rng, b), delta1: d1 }
        };
        let Ok(m0) = from_triple_data(&data) else { continue };
        done += 1;
        let g = rand_gl(&mut rng, 5);
        let m = gl_act(&g, &m0).unwrap();
        let pass = match (moduli(&m), idemvalue_moduli(&m)) {
            (Ok(a), Ok(b)) => a.p3 == b.p3 && a.p2 == b.p2,
            _ => false,
        };
        out.check("idemvalues", "oracle_matches_moduli", pass, || algebra_json(&m));
    }
}

/// Constructor round-trips; the constructors assert internally, so the
/// suite converts panics into recorded failures only via explicit checks.
pub fn suite_constructors(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5b);
    let b = cfg.coeff_bound;
    let n = cfg.count;

    // generic moduli
    let mut done = 0;
    while done < n {
        let p3 = rand_rat(&mut rng, b);
        let p2 = rand_rat(&mut rng, b);
        let Ok(m) = from_moduli_generic(&p3, &p2) else { continue };
        done += 1;
        let nu = moduli(&m).unwrap();
        out.check("constructors", "generic_round_trip", nu.p3 == p3 && nu.p2 == p2, || {
            serde_json::json!({"p3": crate::arith::format_rat(&p3), "p2": crate::arith::format_rat(&p2)})
        });
    }

    // Cardano points across five extension classes
    let exts = [1i64, 2, 3, 5, -1];
    for _ in 0..n.div_ceil(5).max(1) {
        let delta = rand_nonzero_rat(&mut rng, b);
        let p3 = rat(-2) * pow_int(&delta, 3);
        let p2 = rat(-3) * &delta * &delta;
        for a in exts {
            let m = match from_moduli_cardano(&p3, &p2, &rat(a)) {
                Ok(m) => m,
                Err(_) => {
                    out.check("constructors", "cardano_round_trip", false, || {
                        serde_json::json!({"delta": crate::arith::format_rat(&delta), "ext": a})
                    });
                    continue;
                }
            };
            let nu = moduli(&m).unwrap();
            let cls = square_class(&crate::invariants::disc_q(&m).value).unwrap();
            out.check(
                "constructors",
                "cardano_round_trip",
                nu.p3 == p3 && nu.p2 == p2 && cls == square_class(&rat(a)).unwrap(),
                || serde_json::json!({"delta": crate::arith::format_rat(&delta), "ext": a}),
            );
        }
    }

    // exceptional algebras from cubics
    let mut done = 0;
    while done < n {
        let d2 = rand_rat(&mut rng, b);
        let d3 = rand_rat(&mut rng, b);
        let Ok(m) = from_cubic_exceptional(&d2, &d3) else { continue };
        done += 1;
        let nu = moduli(&m).unwrap();
        out.check(
            "constructors",
            "exceptional_trace_free",
            crate::algebra::trace_form(&m).is_zero() && nu.is_origin(),
            || serde_json::json!({"d2": crate::arith::format_rat(&d2), "d3": crate::arith::format_rat(&d3)}),
        );
    }

    // Eisenstein surface points, all branches
    let check_pt = |pt: &EisensteinPoint, out: &mut Summary| {
        let pass = match from_eisenstein(pt) {
            Ok(m) => {
                let bb = bundle(&m);
                bb.p3_tilde.value == pt.a
                    && bb.p2_tilde.value == pt.b
                    && bb.disc_q.value == pt.d
                    && bb.inv.value == pt.c
            }
            Err(_) => false,
        };
        out.check("constructors", "eisenstein_round_trip", pass, || {
            serde_json::to_value(pt).unwrap()
        });
    };
    let mut done = 0;
    while done < n {
        match rng.gen_range(0..4u8) {
            0 => {
                // generic: the bundle of a random generic algebra
                let m = rand_algebra(&mut rng, b);
                let bb = bundle(&m);
                if bb.disc_q.value.is_zero() || bb.inv.value.is_zero() {
                    continue;
                }
                let pt = EisensteinPoint::new(
                    bb.p3_tilde.value,
                    bb.p2_tilde.value,
                    bb.disc_q.value,
                    bb.inv.value,
                )
                .unwrap();
                check_pt(&pt, out);
            }
            1 => {
                // Cardano: bundle of a Cardano constructor output, rescaled
                let delta = rand_nonzero_rat(&mut rng, b);
                let a = [1i64, 2, 3, 5, -1][rng.gen_range(0..5)];
                let p3 = rat(-2) * pow_int(&delta, 3);
                let p2 = rat(-3) * &delta * &delta;
                let Ok(m0) = from_moduli_cardano(&p3, &p2, &rat(a)) else { continue };
                let t = rand_nonzero_rat(&mut rng, 6);
                let g = [[t, rat(0)], [rat(0), rat(1)]];
                let m = gl_act(&g, &m0).unwrap();
                let bb = bundle(&m);
                let pt = EisensteinPoint::new(
                    bb.p3_tilde.value,
                    bb.p2_tilde.value,
                    bb.disc_q.value,
                    bb.inv.value,
                )
                .unwrap();
                check_pt(&pt, out);
            }
            2 => {
                // exceptional fiber: A = B = C = 0, any nonzero D
                let d = rand_nonzero_rat(&mut rng, b);
                let pt = EisensteinPoint::new(rat(0), rat(0), d, rat(0)).unwrap();
                check_pt(&pt, out);
            }
            _ => {
                // boundary: D = 0 with (s, t) the gauge parameters, or the
                // rank-one ray
                let s = rand_nonzero_rat(&mut rng, b);
                if rng.gen_bool(0.5) {
                    let t = rand_rat(&mut rng, b);
                    let pt = EisensteinPoint::new(
                        rat(72) * &t * &s,
                        rat(-36) * &s * &s,
                        rat(0),
                        rat(4) * pow_int(&s, 3),
                    )
                    .unwrap();
                    check_pt(&pt, out);
                } else {
                    let pt = EisensteinPoint::new(s, rat(0), rat(0), rat(0)).unwrap();
                    check_pt(&pt, out);
                }
            }
        }
        done += 1;
    }
}

/// Equivariance of the invariants and stability of the descriptors.
pub fn suite_equivariance(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6c);
    for _ in 0..cfg.count {
        let m = rand_algebra(&mut rng, cfg.coeff_bound);
        let g = rand_gl(&mut rng, 5);
        let d = det(&g);
        let gm = gl_act(&g, &m).unwrap();
        let b0 = bundle(&m);
        let b1 = bundle(&gm);
        let w2 = pow_int(&d, -2);
        let w3 = pow_int(&d, -3);
        let scaled = b1.p3_tilde.value == &b0.p3_tilde.value * &w2
            && b1.p2_tilde.value == &b0.p2_tilde.value * &w2
            && b1.disc_q.value == &b0.disc_q.value * &w2
            && b1.disc_d.value == &b0.disc_d.value * &w2
            && b1.inv.value == &b0.inv.value * &w3;
        out.check("equivariance", "weights", scaled, || {
            serde_json::json!({"m": algebra_json(&m), "g": format!("{g:?}")})
        });
        // GL descriptors are unchanged (heuristic allowed for irreducible
        // exceptional cubics)
        let same = matches!(
            equivalent_gl(&m, &gm),
            Ok(Equivalence::Yes) | Ok(Equivalence::HeuristicYes)
        );
        out.check("equivariance", "classify_gl_stable", same, || {
            serde_json::json!({"m": algebra_json(&m), "g": format!("{g:?}")})
        });
        // SL descriptors under a det-1 map, generic inputs only
        if !b0.disc_q.value.is_zero() {
            let s = rand_sl(&mut rng, 5);
            let sm = gl_act(&s, &m).unwrap();
            let same = matches!(
                equivalent_sl(&m, &sm),
                Ok(SLEquivalence::Yes) | Ok(SLEquivalence::YesUpToZ2)
            );
            out.check("equivariance", "classify_sl_stable", same, || {
                serde_json::json!({"m": algebra_json(&m), "g": format!("{s:?}")})
            });
        }
    }
}

/// Division criterion versus the direct anisotropy test.
pub fn suite_division(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7d);
    let mut done = 0;
    while done < cfg.count {
        let m = rand_algebra(&mut rng, cfg.coeff_bound);
        let Ok(by_cases) = is_division(&m) else { continue };
        done += 1;
        let direct = !is_square(&disc_d(&m).value);
        out.check("division", "criterion_vs_direct", by_cases == direct, || algebra_json(&m));
    }
    // worked example: the trace-free algebra of x³ − 7x + 6
    let m = from_cubic_exceptional(&rat(-7), &rat(-6)).unwrap();
    out.check("division", "worked_example", matches!(is_division(&m), Ok(true)), || {
        algebra_json(&m)
    });
}

/// Normal-form rows: random parameters, random basis changes, exact
/// parameter recovery.
pub fn suite_tables(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x8e);
    let params = cfg.count.max(1);
    let twists = 20;
    for _ in 0..params {
        let g_pool: Vec<LinMap> = (0..twists).map(|_| rand_gl(&mut rng, 5)).collect();
        // stable rank two, parameter ν ≠ 1/2
        let nu = loop {
            let x = rand_rat(&mut rng, cfg.coeff_bound);
            if x != ratio(1, 2) {
                break x;
            }
        };
        let row = Algebra::new(rat(1), rat(0), rat(0), rat(1), ratio(1, 2), nu.clone());
        for g in &g_pool {
            let m = gl_act(g, &row).unwrap();
            let pass = classify_gl(&m) == Ok(ClassDescriptor::StableRank2 { nu: nu.clone() });
            out.check("tables", "rank2_row", pass, || algebra_json(&m));
        }
        // stable rank two, degenerate row
        let row = Algebra::new(rat(0), rat(0), rat(0), rat(1), ratio(1, 2), rat(1));
        for g in &g_pool {
            let m = gl_act(g, &row).unwrap();
            let pass = classify_gl(&m) == Ok(ClassDescriptor::StableRank2Degenerate);
            out.check("tables", "rank2_degenerate", pass, || algebra_json(&m));
        }
        // stable rank one, parameter λ ≠ 0 up to squares
        let lam = rand_nonzero_rat(&mut rng, cfg.coeff_bound);
        let row = Algebra::rank1_row(lam.clone());
        let want = square_class(&lam).unwrap();
        for g in &g_pool {
            let m = gl_act(g, &row).unwrap();
            let pass = classify_gl(&m)
                == Ok(ClassDescriptor::StableRank1 { lambda_class: want.clone() });
            out.check("tables", "rank1_row", pass, || algebra_json(&m));
        }
        // non-stable rows
        let nu2 = loop {
            let x = rand_rat(&mut rng, cfg.coeff_bound);
            if x != ratio(1, 2) {
                break x;
            }
        };
        let rows: Vec<(Algebra, ClassDescriptor)> = vec![
            (
                Algebra::new(rat(1), rat(0), rat(0), rat(0), rat(0), nu2.clone()),
                ClassDescriptor::NonStable {
                    row: 1,
                    nu: Some(crate::arith::format_rat(&nu2)),
                    delta: None,
                },
            ),
            (
                Algebra::from_i64([0, 0, 0, 0, 0, 1]),
                ClassDescriptor::NonStable { row: 2, nu: None, delta: None },
            ),
            (
                Algebra::from_i64([0, 0, 1, 0, 0, 0]),
                ClassDescriptor::NonStable { row: 3, nu: None, delta: Some(0) },
            ),
            (
                Algebra::new(rat(0), rat(0), rat(1), rat(1), ratio(1, 2), rat(0)),
                ClassDescriptor::NonStable { row: 3, nu: None, delta: Some(1) },
            ),
            (
                Algebra::new(rat(1), rat(0), rat(0), rat(0), rat(0), ratio(1, 2)),
                ClassDescriptor::NonStable { row: 4, nu: None, delta: None },
            ),
        ];
        for (row, want) in &rows {
            for g in &g_pool {
                let m = gl_act(g, row).unwrap();
                let pass = classify_gl(&m).as_ref() == Ok(want);
                out.check("tables", "non_stable_row", pass, || algebra_json(&m));
            }
        }
    }
}

fn rand_form_of_disc(rng: &mut ChaCha8Rng, delta: &Rat, bound: i64) -> BinaryQuadratic {
    let qa = rand_nonzero_rat(rng, bound);
    let qb = rand_rat(rng, bound);
    let qc = (&qb * &qb - delta) / (rat(4) * &qa);
    BinaryQuadratic { qa, qb, qc, weight: 0 }
}

/// Gauss group law over fixed non-square discriminants, checked against
/// the norm-class multiplication oracle.
pub fn suite_gauss(cfg: &VerifyConfig, out: &mut Summary) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9f);
    let deltas = [rat(-4), rat(-3), rat(5), rat(-8)];
    let per = (cfg.count / 4).max(1);
    for delta in &deltas {
        for _ in 0..per {
            let q1 = rand_form_of_disc(&mut rng, delta, 6);
            let q2 = rand_form_of_disc(&mut rng, delta, 6);
            let q3 = rand_form_of_disc(&mut rng, delta, 6);
            let repro = || serde_json::json!({"q1": q1, "q2": q2, "q3": q3});
            // oracle: the composed value class is the product of the classes
            let c12 = gauss_compose(&q1, &q2).unwrap();
            let oracle = crate::arith::NormClass::new(delta.clone(), &q1.qa * &q2.qa).unwrap();
            out.check(
                "gauss",
                "oracle_product",
                norm_class_equal(&c12.rep_value, &oracle).unwrap(),
                repro,
            );
            // identity element
            let unit = rand_form_of_disc(&mut rng, delta, 6);
            let unit = BinaryQuadratic {
                qa: rat(1),
                qb: unit.qb.clone(),
                qc: (&unit.qb * &unit.qb - delta) / rat(4),
                weight: 0,
            };
            let ce = gauss_compose(&q1, &unit).unwrap();
            out.check(
                "gauss",
                "identity",
                norm_class_equal(&ce.rep_value, &form_class(&q1).unwrap().rep_value).unwrap(),
                repro,
            );
            // inverse: a form with the reciprocal value class
            let inv = BinaryQuadratic {
                qa: rat(1) / &q1.qa,
                qb: rat(0),
                qc: -delta * &q1.qa / rat(4),
                weight: 0,
            };
            let ci = gauss_compose(&q1, &inv).unwrap();
            out.check(
                "gauss",
                "inverse",
                norm_class_equal(&ci.rep_value, &form_class(&unit).unwrap().rep_value).unwrap(),
                repro,
            );
            // associativity
            let left = gauss_compose(&compose_forms(&q1, &q2).unwrap(), &q3).unwrap();
            let right = gauss_compose(&q1, &compose_forms(&q2, &q3).unwrap()).unwrap();
            out.check(
                "gauss",
                "associativity",
                norm_class_equal(&left.rep_value, &right.rep_value).unwrap(),
                repro,
            );
            // SL-invariance of the class
            let g = rand_sl(&mut rng, 4);
            let qt = transform_form(&g, &q1).unwrap();
            out.check(
                "gauss",
                "class_sl_invariant",
                crate::gauss::sl2_equivalent_forms(&q1, &qt).unwrap(),
                repro,
            );
        }
    }
    // Disc(D) is SL×SL-invariant
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa1);
    for _ in 0..cfg.count {
        let m = rand_algebra(&mut rng, cfg.coeff_bound);
        let g1 = rand_sl(&mut rng, 4);
        let g2 = rand_sl(&mut rng, 4);
        let mt = slxsl_act(&g1, &g2, &m).unwrap();
        let pass = form_discriminant(&det_form(&mt)) == form_discriminant(&det_form(&m));
        out.check("gauss", "disc_d_slxsl_invariant", pass, || algebra_json(&m));
    }
    // fixed anchor: [3] ⋆ [3] = [1] in Δ = −4
    let q3 = BinaryQuadratic { qa: rat(3), qb: rat(2), qc: ratio(2, 3), weight: 0 };
    let unit = BinaryQuadratic { qa: rat(1), qb: rat(0), qc: rat(1), weight: 0 };
    let c = gauss_compose(&q3, &q3).unwrap();
    out.check(
        "gauss",
        "three_squared_is_identity",
        norm_class_equal(&c.rep_value, &form_class(&unit).unwrap().rep_value).unwrap(),
        || serde_json::json!({"delta": "-4"}),
    );
}

/// Run all suites with per-suite sample counts scaled from the configured
/// total.
pub fn run(cfg: &VerifyConfig) -> Result<Summary> {
    if cfg.count == 0 {
        return Err(crate::Error::Input("count must be at least 1".into()));
    }
    let mut out = Summary::default();
    let scaled = |frac: usize| VerifyConfig {
        seed: cfg.seed,
        count: (cfg.count / frac).max(1),
        coeff_bound: cfg.coeff_bound,
    };
    suite_identities(cfg, &mut out);
    suite_classical_eisenstein(&scaled(5), &mut out);
    suite_associativity(&scaled(5), &mut out);
    suite_idemvalues(&scaled(20), &mut out);
    suite_constructors(&scaled(20), &mut out);
    suite_equivariance(&scaled(10), &mut out);
    suite_division(&scaled(10), &mut out);
    suite_tables(&scaled(500), &mut out);
    suite_gauss(&scaled(25), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_deterministic_run_is_clean() {
        let cfg = VerifyConfig { seed: 7, count: 60, coeff_bound: 8 };
        let s1 = run(&cfg).unwrap();
        assert!(s1.ok(), "failures: {:?}", s1.failures);
        let s2 = run(&cfg).unwrap();
        assert_eq!(s1.checks_run, s2.checks_run);
    }

    #[test]
    fn zero_count_rejected() {
        let cfg = VerifyConfig { seed: 1, count: 0, coeff_bound: 5 };
        assert!(run(&cfg).is_err());
    }
}
