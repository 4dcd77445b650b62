//! Classification of two-dimensional commutative algebras.
//!
//! The moduli space stratifies by which of Disc(Q), p̃₂, p̃₃ vanish:
//!
//! * generic (Disc ≠ 0): classified up to GL by the moduli point
//!   ν = (p₃, p₂), refined by a square class on the Cardano curve
//!   27p₃² + 4p₂³ = 0 and by the splitting of Q_m at the origin;
//! * stable rank two (Disc = 0, p̃₂ ≠ 0): a one-parameter family plus one
//!   degenerate row;
//! * stable rank one (Disc = p̃₂ = 0, p̃₃ ≠ 0): classified by a square class;
//! * non-stable (all three vanish): four discrete rows.
//!
//! SL-classification appends one more invariant to the GL data.  Generic
//! algebras also carry a fundamental triple (f₁, f₂, f₃) of "idempotent
//! directions" with f₁+f₂+f₃ = 0, m(fᵢ,fᵢ) = γᵢfᵢ and Σγᵢ = −1, possibly
//! over a quadratic extension; the reduced idemvalues Δᵢ = 3γᵢ + 1 are the
//! roots of the modular cubic x³ + p₂x − p₃ and recover ν by symmetric
//! functions — an independent oracle for the invariant computations.

use num::bigint::BigInt;
use num::{Integer, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    associator, idempotents, multiply, trace_form, Algebra, Idempotents, Vec2,
};
use crate::arith::{is_square, rat, square_class, Rat, SquareClass};
use crate::cubics::{splitting_descriptor, BinaryCubic, SplittingDescriptor};
use crate::invariants::{
    disc_d, disc_q, fundamental_cubic, inv_m, moduli, p2_tilde, p3_tilde, ModuliPoint,
};
use crate::poly;
use crate::quad::QuadNum;
use crate::{Error, Result};

/// Coarse stratification by vanishing of the three quartic invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stratum {
    Generic,
    StableRank2,
    StableRank1,
    NonStable,
}

pub fn stratum(m: &Algebra) -> Stratum {
    if !disc_q(m).value.is_zero() {
        Stratum::Generic
    } else if !p2_tilde(m).value.is_zero() {
        Stratum::StableRank2
    } else if !p3_tilde(m).value.is_zero() {
        Stratum::StableRank1
    } else {
        Stratum::NonStable
    }
}

/// Complete GL-equivalence descriptor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "stratum")]
pub enum ClassDescriptor {
    GenericOffCardano {
        #[serde(with = "crate::arith::rat_serde")]
        p3: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        p2: Rat,
    },
    GenericCardano {
        #[serde(with = "crate::arith::rat_serde")]
        p3: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        p2: Rat,
        ext: SquareClass,
    },
    GenericExceptional {
        split: SplittingDescriptor,
    },
    StableRank2 {
        #[serde(with = "crate::arith::rat_serde")]
        nu: Rat,
    },
    StableRank2Degenerate,
    StableRank1 {
        lambda_class: SquareClass,
    },
    NonStable {
        row: u8,
        #[serde(skip_serializing_if = "Option::is_none")]
        nu: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        delta: Option<u8>,
    },
    Zero,
}

/// GL-classification of an arbitrary algebra.
pub fn classify_gl(m: &Algebra) -> Result<ClassDescriptor> {
    match stratum(m) {
        Stratum::Generic => {
            let nu = moduli(m)?;
            if nu.is_origin() {
                let split = splitting_descriptor(&fundamental_cubic(m))?;
                Ok(ClassDescriptor::GenericExceptional { split })
            } else if nu.cardano().is_zero() {
                let ext = square_class(&disc_q(m).value)?;
                Ok(ClassDescriptor::GenericCardano {
                    p3: nu.p3,
                    p2: nu.p2,
                    ext,
                })
            } else {
                Ok(ClassDescriptor::GenericOffCardano {
                    p3: nu.p3,
                    p2: nu.p2,
                })
            }
        }
        Stratum::StableRank2 => {
            // on the rank-two rows p̃₃/p̃₂ = 2(ν+1)/(2ν−1), which equals 1
            // exactly on the degenerate row
            let r = p3_tilde(m).value / p2_tilde(m).value;
            if r.is_one() {
                debug_assert!(disc_d(m).value.is_zero());
                Ok(ClassDescriptor::StableRank2Degenerate)
            } else {
                let nu = (&r + rat(2)) / (rat(2) * &r - rat(2));
                Ok(ClassDescriptor::StableRank2 { nu })
            }
        }
        Stratum::StableRank1 => {
            // p̃₃ = 27λ on the rank-one row; weight-2 rescaling moves λ by
            // squares only
            let lambda_class = square_class(&(p3_tilde(m).value / rat(27)))?;
            Ok(ClassDescriptor::StableRank1 { lambda_class })
        }
        Stratum::NonStable => classify_non_stable(m),
    }
}

fn classify_non_stable(m: &Algebra) -> Result<ClassDescriptor> {
    if m.is_zero() {
        return Ok(ClassDescriptor::Zero);
    }
    let q = fundamental_cubic(m);
    if q.is_zero() {
        // pure trace part with T ≠ 0: the k-row
        return Ok(ClassDescriptor::NonStable {
            row: 4,
            nu: None,
            delta: None,
        });
    }
    let (dir, mult) = crate::cubics::repeated_root(&q)?
        .ok_or_else(|| Error::Internal("non-stable algebra with squarefree cubic".into()))?;
    if mult == 3 {
        let delta = if trace_form(m).is_zero() { 0 } else { 1 };
        return Ok(ClassDescriptor::NonStable {
            row: 3,
            nu: None,
            delta: Some(delta),
        });
    }
    // double + simple factor: row 1 (a rational idempotent exists) or row 2
    match idempotents(m)? {
        Idempotents::Finite(ref v) if v.len() == 1 => {
            let u = &v[0];
            // ν is the eigenvalue of multiplication by the idempotent on the
            // repeated root direction
            let w = dir;
            let lw = multiply(m, u, &w);
            let nu = if !w.0.is_zero() {
                &lw.0 / &w.0
            } else {
                &lw.1 / &w.1
            };
            Ok(ClassDescriptor::NonStable {
                row: 1,
                nu: Some(crate::arith::format_rat(&nu)),
                delta: None,
            })
        }
        Idempotents::Finite(ref v) if v.is_empty() => Ok(ClassDescriptor::NonStable {
            row: 2,
            nu: None,
            delta: None,
        }),
        other => Err(Error::Internal(format!(
            "unexpected idempotent structure on a non-stable algebra: {other:?}"
        ))),
    }
}

/// Outcome of a GL-equivalence test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Equivalence {
    Yes,
    No,
    /// Equal necessary invariants and identical prime-splitting patterns;
    /// used only for irreducible cubics (splitting degree 3 or 6) where
    /// exact field-isomorphism testing is out of scope.
    HeuristicYes,
}

/// GL-equivalence test via descriptors.
pub fn equivalent_gl(m1: &Algebra, m2: &Algebra) -> Result<Equivalence> {
    let d1 = classify_gl(m1)?;
    let d2 = classify_gl(m2)?;
    use ClassDescriptor::*;
    Ok(match (&d1, &d2) {
        (GenericExceptional { split: s1 }, GenericExceptional { split: s2 }) => {
            compare_splittings(s1, s2)?
        }
        _ => {
            if d1 == d2 {
                Equivalence::Yes
            } else {
                Equivalence::No
            }
        }
    })
}

fn compare_splittings(s1: &SplittingDescriptor, s2: &SplittingDescriptor) -> Result<Equivalence> {
    if s1.degree != s2.degree || s1.disc_class != s2.disc_class {
        return Ok(Equivalence::No);
    }
    match s1.degree {
        1 | 2 => Ok(Equivalence::Yes),
        _ => {
            if same_field_heuristic(&s1.cubic, &s2.cubic)? {
                Ok(Equivalence::HeuristicYes)
            } else {
                Ok(Equivalence::No)
            }
        }
    }
}

// --- prime-splitting heuristic ---------------------------------------------

const HEURISTIC_PRIME_BOUND: u64 = 10_000;

fn primes_upto(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if sieve[p] {
            out.push(p as u64);
            let mut k = p * p;
            while k <= n {
                sieve[k] = false;
                k += p;
            }
        }
    }
    out
}

/// Primitive integer coefficients of the dehomogenised cubic, ascending.
fn primitive_int_cubic(q: &BinaryCubic) -> [BigInt; 4] {
    use num::Integer;
    let coeffs = [&q.d, &q.c, &q.b, &q.a];
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut ints {
            *c /= &g;
        }
    }
    [
        ints[0].clone(),
        ints[1].clone(),
        ints[2].clone(),
        ints[3].clone(),
    ]
}

/// Number of distinct roots of a monic-izable cubic modulo p, or None if p
/// is a bad prime (divides the leading coefficient or the discriminant).
fn root_count_mod_p(c: &[u64; 4], disc_mod_p_zero: bool, p: u64) -> Option<usize> {
    if c[3] % p == 0 || disc_mod_p_zero {
        return None;
    }
    // make monic: f = x³ + f2x² + f1x + f0 over F_p
    let inv = mod_inv(c[3] % p, p)?;
    let f = [
        mulp(c[0] % p, inv, p),
        mulp(c[1] % p, inv, p),
        mulp(c[2] % p, inv, p),
    ];
    // r = x^p mod f, then deg gcd(r − x, f) counts the distinct roots
    let xp = pow_x_mod_cubic(&f, p);
    let rx = [xp[0], (xp[1] + p - 1) % p, xp[2]];
    Some(gcd_degree_with_cubic(&f, rx, p))
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    // Fermat
    Some(pow_mod(a, p - 2, p))
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulp(acc, a, p);
        }
        a = mulp(a, a, p);
        e >>= 1;
    }
    acc
}

/// Multiply two residues (degree < 3) modulo the monic cubic x³+f2x²+f1x+f0.
fn mul_mod_cubic(u: &[u64; 3], v: &[u64; 3], f: &[u64; 3], p: u64) -> [u64; 3] {
    let mut prod = [0u64; 5];
    for (i, &ui) in u.iter().enumerate() {
        for (j, &vj) in v.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulp(ui, vj, p)) % p;
        }
    }
    // reduce degrees 4 and 3
    for d in (3..5).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        // x^d = -(f2 x^(d-1) + f1 x^(d-2) + f0 x^(d-3))
        prod[d - 1] = (prod[d - 1] + p - mulp(c, f[2], p) % p) % p;
        prod[d - 2] = (prod[d - 2] + p - mulp(c, f[1], p) % p) % p;
        prod[d - 3] = (prod[d - 3] + p - mulp(c, f[0], p) % p) % p;
    }
    [prod[0], prod[1], prod[2]]
}

/// x^p modulo the monic cubic, by binary exponentiation.
fn pow_x_mod_cubic(f: &[u64; 3], p: u64) -> [u64; 3] {
    let mut base = [0u64, 1, 0]; // x
    let mut acc = [1u64, 0, 0];
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_cubic(&acc, &base, f, p);
        }
        base = mul_mod_cubic(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// Degree of gcd(f, r) where f is the monic cubic and deg r ≤ 2.
fn gcd_degree_with_cubic(f: &[u64; 3], r: [u64; 3], p: u64) -> usize {
    // Euclid on coefficient vectors (ascending, degree ≤ 3)
    let mut a = vec![f[0], f[1], f[2], 1];
    let mut b = vec![r[0], r[1], r[2]];
    loop {
        while let Some(&0) = b.last() {
            b.pop();
        }
        if b.is_empty() {
            break;
        }
        // a mod b
        let db = b.len() - 1;
        let lead_inv = mod_inv(b[db], p).unwrap();
        while a.len() >= b.len() {
            while let Some(&0) = a.last() {
                a.pop();
            }
            if a.len() < b.len() {
                break;
            }
            let da = a.len() - 1;
            let q = mulp(a[da], lead_inv, p);
            for i in 0..=db {
                let t = mulp(q, b[i], p);
                a[da - db + i] = (a[da - db + i] + p - t) % p;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    while let Some(&0) = a.last() {
        a.pop();
    }
    a.len().saturating_sub(1)
}

/// Compare the factorization type of two irreducible cubics modulo every
/// good prime up to the heuristic bound.
fn same_field_heuristic(q1: &BinaryCubic, q2: &BinaryCubic) -> Result<bool> {
    let c1 = primitive_int_cubic(q1);
    let c2 = primitive_int_cubic(q2);
    let d1 = crate::cubics::cubic_discriminant(q1).value;
    let d2 = crate::cubics::cubic_discriminant(q2).value;
    let dd = d1.numer() * d1.denom() * d2.numer() * d2.denom();
    for p in primes_upto(HEURISTIC_PRIME_BOUND) {
        let pb = BigInt::from(p);
        let bad = (&dd % &pb).is_zero();
        let to_u = |x: &BigInt| -> u64 {
            x.mod_floor(&pb).to_u64().unwrap()
        };
        let u1 = [to_u(&c1[0]), to_u(&c1[1]), to_u(&c1[2]), to_u(&c1[3])];
        let u2 = [to_u(&c2[0]), to_u(&c2[1]), to_u(&c2[2]), to_u(&c2[3])];
        match (
            root_count_mod_p(&u1, bad, p),
            root_count_mod_p(&u2, bad, p),
        ) {
            (Some(r1), Some(r2)) => {
                if r1 != r2 {
                    return Ok(false);
                }
            }
            _ => continue,
        }
    }
    Ok(true)
}

// --- fundamental triples ----------------------------------------------------

/// The triple (fᵢ, γᵢ) with f₁+f₂+f₃ = 0, m(fᵢ,fᵢ) = γᵢfᵢ, Σγᵢ = −1, and the
/// reduced idemvalues Δᵢ = 3γᵢ + 1, possibly over a quadratic extension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FundamentalTriple {
    /// Coordinates of f₁, f₂, f₃ in the ambient basis.
    pub f: [[QuadNum; 2]; 3],
    pub gamma: [QuadNum; 3],
    pub deltas: [QuadNum; 3],
}

type QVec = [QuadNum; 2];

fn multiply_quad(m: &Algebra, u: &QVec, v: &QVec) -> QVec {
    let lift = |r: &Rat| QuadNum::from_rat(r.clone());
    let xx = &u[0] * &v[0];
    let yy = &u[1] * &v[1];
    let xy = &(&u[0] * &v[1]) + &(&u[1] * &v[0]);
    [
        &(&(&lift(&m.a) * &xx) + &(&lift(&m.c) * &yy)) + &(&lift(&m.e) * &xy),
        &(&(&lift(&m.b) * &xx) + &(&lift(&m.d) * &yy)) + &(&lift(&m.f) * &xy),
    ]
}

fn wedge(u: &QVec, v: &QVec) -> QuadNum {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

/// The projective root directions of the fundamental cubic, as vectors over
/// ℚ or a quadratic extension.  Requires a squarefree cubic.
fn root_directions(q: &BinaryCubic) -> Result<Vec<QVec>> {
    let dehom = vec![q.d.clone(), q.c.clone(), q.b.clone(), q.a.clone()];
    let mut rational: Vec<QVec> = Vec::new();
    let mut rem = dehom.clone();
    for (r, mult) in poly::rational_roots(&dehom)? {
        debug_assert_eq!(mult, 1);
        rem = poly::deflate(&rem, &r);
        rational.push([QuadNum::from_rat(r), QuadNum::from_rat(rat(1))]);
    }
    if q.a.is_zero() {
        rational.push([QuadNum::from_rat(rat(1)), QuadNum::from_rat(rat(0))]);
    }
    match rational.len() {
        3 => Ok(rational),
        1 => {
            // remaining factor is an irreducible quadratic At² + Bt + C
            debug_assert_eq!(poly::degree(&rem), Some(2));
            let (aa, bb) = (&rem[2], &rem[1]);
            let disc = bb * bb - rat(4) * aa * &rem[0];
            debug_assert!(!is_square(&disc));
            let half = Rat::one() / (rat(2) * aa);
            let x0 = -bb * &half;
            for sign in [1i64, -1] {
                rational.push([
                    QuadNum::new(x0.clone(), rat(sign) * &half, disc.clone()),
                    QuadNum::from_rat(rat(1)),
                ]);
            }
            // keep the rational direction first
            rational.rotate_left(1);
            let mut out = rational;
            out.rotate_right(1);
            Ok(out)
        }
        0 => Err(Error::Unsupported(
            "fundamental triple needs a splitting field of degree at most 2".into(),
        )),
        n => Err(Error::Internal(format!(
            "cubic with {n} rational roots but no full splitting"
        ))),
    }
}

/// Compute the fundamental triple of a generic algebra whose cubic splits
/// over ℚ or a quadratic extension.
pub fn fundamental_triple(m: &Algebra) -> Result<FundamentalTriple> {
    if disc_q(m).value.is_zero() {
        return Err(Error::Domain("fundamental triple needs a generic algebra".into()));
    }
    let q = fundamental_cubic(m);
    let dirs = root_directions(&q)?;
    let (v1, v2, v3) = (&dirs[0], &dirs[1], &dirs[2]);
    // the kernel of (v₁ v₂ v₃): λ₁v₁ + λ₂v₂ + λ₃v₃ = 0
    let lam = [wedge(v2, v3), wedge(v3, v1), wedge(v1, v2)];
    // m(vᵢ,vᵢ) = cᵢ·vᵢ since Q(vᵢ) = 0
    let mut cs = Vec::with_capacity(3);
    for v in &dirs {
        let w = multiply_quad(m, v, v);
        let c = if !v[0].is_zero() {
            &w[0] / &v[0]
        } else {
            &w[1] / &v[1]
        };
        debug_assert_eq!(&v[1] * &c, w[1]);
        cs.push(c);
    }
    // scale so the γ's sum to −1
    let mut s = QuadNum::from_rat(rat(0));
    for i in 0..3 {
        s = &s + &(&lam[i] * &cs[i]);
    }
    if s.is_zero() {
        return Err(Error::Internal("vanishing normalisation sum".into()));
    }
    let t = &(-&QuadNum::from_rat(rat(1))) / &s;
    let mut entries: Vec<(QVec, QuadNum, QuadNum)> = Vec::with_capacity(3);
    for i in 0..3 {
        let tl = &t * &lam[i];
        let f = [&tl * &dirs[i][0], &tl * &dirs[i][1]];
        let gamma = &tl * &cs[i];
        let delta = &(&QuadNum::from_rat(rat(3)) * &gamma) + &QuadNum::from_rat(rat(1));
        entries.push((f, gamma, delta));
    }
    // canonical order: rational Δ ascending (ties by the f coordinates),
    // then the conjugate pair with positive irrational part first
    entries.sort_by(|a, b| {
        let (da, db) = (&a.2, &b.2);
        match (da.is_rational(), db.is_rational()) {
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            (true, true) => (&da.x, &a.0[0].x, &a.0[1].x).cmp(&(&db.x, &b.0[0].x, &b.0[1].x)),
            (false, false) => db.y.cmp(&da.y),
        }
    });
    let tri = FundamentalTriple {
        f: [entries[0].0.clone(), entries[1].0.clone(), entries[2].0.clone()],
        gamma: [entries[0].1.clone(), entries[1].1.clone(), entries[2].1.clone()],
        deltas: [entries[0].2.clone(), entries[1].2.clone(), entries[2].2.clone()],
    };
    debug_assert!(check_triple(m, &tri));
    Ok(tri)
}

/// Verify the defining identities of a fundamental triple, exactly.
pub fn check_triple(m: &Algebra, tri: &FundamentalTriple) -> bool {
    let zero = QuadNum::from_rat(rat(0));
    // f₁ + f₂ + f₃ = 0
    for j in 0..2 {
        let s = &(&tri.f[0][j] + &tri.f[1][j]) + &tri.f[2][j];
        if s != zero {
            return false;
        }
    }
    // m(fᵢ,fᵢ) = γᵢ fᵢ
    for i in 0..3 {
        let w = multiply_quad(m, &tri.f[i], &tri.f[i]);
        for j in 0..2 {
            if w[j] != &tri.gamma[i] * &tri.f[i][j] {
                return false;
            }
        }
    }
    // Σγ = −1
    let s = &(&tri.gamma[0] + &tri.gamma[1]) + &tri.gamma[2];
    s == QuadNum::from_rat(rat(-1))
}

/// Recover the moduli point from the reduced idemvalues: p₃ = Δ₁Δ₂Δ₃ and
/// p₂ = Δ₁Δ₂ + Δ₂Δ₃ + Δ₃Δ₁.  Independent oracle for `moduli`.
pub fn idemvalue_moduli(m: &Algebra) -> Result<ModuliPoint> {
    let tri = fundamental_triple(m)?;
    let d = &tri.deltas;
    let p3 = &(&d[0] * &d[1]) * &d[2];
    let p2 = &(&(&d[0] * &d[1]) + &(&d[1] * &d[2])) + &(&d[2] * &d[0]);
    Ok(ModuliPoint::new(
        p3.expect_rational("idemvalue p3"),
        p2.expect_rational("idemvalue p2"),
    ))
}

// --- automorphisms, associativity, division ---------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AutKind {
    Trivial,
    Z2,
    Z3,
    S3,
}

/// Automorphism group of a generic algebra: over the splitting field of Q_m
/// and, when determined, over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    pub split: AutKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<AutKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn automorphism_group(m: &Algebra) -> Result<AutGroup> {
    if disc_q(m).value.is_zero() {
        return Err(Error::Unsupported(
            "automorphism groups are computed for generic algebras only".into(),
        ));
    }
    if !inv_m(m).value.is_zero() {
        return Ok(AutGroup {
            split: AutKind::Trivial,
            rational: Some(AutKind::Trivial),
            note: None,
        });
    }
    let nu = moduli(m)?;
    if nu.is_origin() {
        let deg = splitting_descriptor(&fundamental_cubic(m))?.degree;
        let rational = match deg {
            1 => AutKind::S3,
            2 => AutKind::Z2,
            3 => AutKind::Z3,
            _ => AutKind::Trivial,
        };
        return Ok(AutGroup {
            split: AutKind::S3,
            rational: Some(rational),
            note: None,
        });
    }
    // on the Cardano curve away from the origin the split group is Z₂; the
    // swap is rational exactly when the two equal idemvalues are rational
    let ext = square_class(&disc_q(m).value)?;
    if ext.is_trivial() {
        Ok(AutGroup {
            split: AutKind::Z2,
            rational: Some(AutKind::Z2),
            note: None,
        })
    } else {
        Ok(AutGroup {
            split: AutKind::Z2,
            rational: None,
            note: Some(
                "Z2 over the splitting field; the rational group depends on whether \
                 the swapped idempotents are conjugate-rational"
                    .into(),
            ),
        })
    }
}

/// Exact associativity test.  For generic algebras this is equivalent to
/// ν = (16, −12); both routes are computed and compared in debug builds.
pub fn is_associative(m: &Algebra) -> bool {
    let basis: [Vec2; 2] = [(rat(1), rat(0)), (rat(0), rat(1))];
    let mut by_associator = true;
    'outer: for u in &basis {
        for v in &basis {
            for w in &basis {
                let a = associator(m, u, v, w);
                if !a.0.is_zero() || !a.1.is_zero() {
                    by_associator = false;
                    break 'outer;
                }
            }
        }
    }
    if !disc_q(m).value.is_zero() {
        let nu = moduli(m).expect("generic");
        let by_moduli = nu.p3 == rat(16) && nu.p2 == rat(-12);
        debug_assert_eq!(by_moduli, by_associator);
        return by_moduli;
    }
    by_associator
}

/// Division test for generic algebras: no zero divisors, equivalently the
/// determinant form is anisotropic over ℚ.  Computed by the moduli-space
/// case split and cross-checked against the direct discriminant test.
pub fn is_division(m: &Algebra) -> Result<bool> {
    let disc = disc_q(m).value;
    if disc.is_zero() {
        return Err(Error::Domain("division criterion needs a generic algebra".into()));
    }
    let nu = moduli(m)?;
    let crit = &rat(-3) * (&nu.p2 - &nu.p3 + rat(1));
    let by_cases = if nu.is_origin() {
        // division iff −3 is not a square in the splitting field
        !is_square(&(rat(-3) * &disc))
    } else if nu.cardano().is_zero() {
        // multiply by a representative of the extension class
        let a = square_class(&disc)?.0;
        !is_square(&(crit * Rat::from_integer(a)))
    } else {
        let w = rat(-27) * &nu.p3 * &nu.p3 - rat(4) * &nu.p2 * &nu.p2 * &nu.p2;
        !is_square(&(crit * w))
    };
    let direct = !is_square(&disc_d(m).value);
    debug_assert_eq!(by_cases, direct, "division criterion disagrees with direct test");
    Ok(by_cases)
}

// --- SL classification -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "stratum")]
pub enum SLDescriptor {
    OffCardano {
        #[serde(with = "crate::arith::rat_serde")]
        p3: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        p2: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        inv_over_disc: Rat,
    },
    CardanoNonzero {
        #[serde(with = "crate::arith::rat_serde")]
        p3: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        p2: Rat,
        #[serde(with = "crate::arith::rat_serde")]
        disc_q: Rat,
    },
    ExceptionalReducible {
        split: SplittingDescriptor,
        #[serde(with = "crate::arith::rat_serde")]
        disc_q: Rat,
    },
    ExceptionalIrreducible {
        split: SplittingDescriptor,
        #[serde(with = "crate::arith::rat_serde")]
        disc_q: Rat,
        up_to_z2: bool,
    },
}

/// SL-classification of a generic algebra: the GL data plus one further
/// invariant.
pub fn classify_sl(m: &Algebra) -> Result<SLDescriptor> {
    let disc = disc_q(m).value;
    if disc.is_zero() {
        return Err(Error::Unsupported(
            "SL classification is implemented for generic algebras".into(),
        ));
    }
    let nu = moduli(m)?;
    if nu.is_origin() {
        let split = splitting_descriptor(&fundamental_cubic(m))?;
        if split.degree <= 2 {
            Ok(SLDescriptor::ExceptionalReducible { split, disc_q: disc })
        } else {
            Ok(SLDescriptor::ExceptionalIrreducible {
                split,
                disc_q: disc,
                up_to_z2: true,
            })
        }
    } else if nu.cardano().is_zero() {
        Ok(SLDescriptor::CardanoNonzero {
            p3: nu.p3,
            p2: nu.p2,
            disc_q: disc,
        })
    } else {
        let inv_over_disc = inv_m(m).value / &disc;
        Ok(SLDescriptor::OffCardano {
            p3: nu.p3,
            p2: nu.p2,
            inv_over_disc,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SLEquivalence {
    Yes,
    No,
    /// The invariants agree but, for irreducible cubics, they pin the class
    /// only up to a two-element ambiguity.
    YesUpToZ2,
}

/// SL-equivalence test via SL descriptors; both inputs must be generic.
pub fn equivalent_sl(m1: &Algebra, m2: &Algebra) -> Result<SLEquivalence> {
    let d1 = classify_sl(m1)?;
    let d2 = classify_sl(m2)?;
    use SLDescriptor::*;
    Ok(match (&d1, &d2) {
        (
            ExceptionalReducible { split: s1, disc_q: q1 },
            ExceptionalReducible { split: s2, disc_q: q2 },
        ) => {
            if q1 == q2 && matches!(compare_splittings(s1, s2)?, Equivalence::Yes) {
                SLEquivalence::Yes
            } else {
                SLEquivalence::No
            }
        }
        (
            ExceptionalIrreducible { split: s1, disc_q: q1, .. },
            ExceptionalIrreducible { split: s2, disc_q: q2, .. },
        ) => {
            if q1 == q2
                && matches!(compare_splittings(s1, s2)?, Equivalence::HeuristicYes)
            {
                SLEquivalence::YesUpToZ2
            } else {
                SLEquivalence::No
            }
        }
        _ => {
            if d1 == d2 {
                SLEquivalence::Yes
            } else {
                SLEquivalence::No
            }
        }
    })
}
