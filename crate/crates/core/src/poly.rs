//! Small dense univariate polynomials over ℚ — just enough for exact
//! rational root finding on the cubics handled elsewhere in the crate.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::arith::{factorize, Rat};
use crate::Result;

/// Coefficients in ascending degree order, no trailing-zero guarantee.
pub type Poly = Vec<Rat>;

pub fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Deflate by the root `r`: divide by (x − r).  The caller must know `r`
/// is a root.
pub fn deflate(p: &[Rat], r: &Rat) -> Poly {
    let d = degree(p).expect("deflating zero polynomial");
    let mut q = vec![Rat::zero(); d];
    let mut carry = p[d].clone();
    for i in (0..d).rev() {
        q[i] = carry.clone();
        carry = &p[i] + carry * r;
    }
    debug_assert!(carry.is_zero(), "deflate called with a non-root");
    q
}

/// All positive divisors of |n|.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let f = factorize(&n.abs())?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Ok(divs)
}

/// The rational roots of `p`, each with its multiplicity, found exactly via
/// the rational root theorem on the primitive integer model of `p`.
pub fn rational_roots(p: &[Rat]) -> Result<Vec<(Rat, usize)>> {
    let mut work: Poly = p.to_vec();
    let mut roots: Vec<(Rat, usize)> = Vec::new();
    // peel off x = 0 roots first
    while matches!(degree(&work), Some(d) if d >= 1) && work[0].is_zero() {
        work.remove(0);
        bump(&mut roots, Rat::zero());
    }
    loop {
        let d = match degree(&work) {
            Some(d) if d >= 1 => d,
            _ => break,
        };
        // clear denominators to get integer coefficients
        let mut denlcm = BigInt::one();
        for c in &work[..=d] {
            denlcm = denlcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = work[..=d]
            .iter()
            .map(|c| c.numer() * (&denlcm / c.denom()))
            .collect();
        let lead = &ints[d];
        let trail = &ints[0];
        debug_assert!(!trail.is_zero());
        let found = match d {
            1 => Some(Rat::new(-&ints[0], ints[1].clone())),
            2 => {
                let disc = &ints[1] * &ints[1] - BigInt::from(4) * &ints[2] * &ints[0];
                if disc.is_negative() {
                    None
                } else {
                    let s = disc.sqrt();
                    if &(&s * &s) == &disc {
                        Some(Rat::new(-&ints[1] + s, BigInt::from(2) * &ints[2]))
                    } else {
                        None
                    }
                }
            }
            3 => {
                // rational roots of the cubic are y/a₃ for the integer roots
                // of the monic model y³ + a₂y² + a₁a₃y + a₀a₃²
                let c2 = ints[2].clone();
                let c1 = &ints[1] * &ints[3];
                let c0 = &ints[0] * &ints[3] * &ints[3];
                monic_cubic_integer_root(&c0, &c1, &c2)
                    .map(|y| Rat::new(y, ints[3].clone()))
            }
            _ => {
                // rational root theorem by divisor enumeration
                let mut found = None;
                'search: for pnum in divisors(trail)? {
                    for qden in divisors(lead)? {
                        for sgn in [1i8, -1] {
                            let cand = Rat::new(BigInt::from(sgn) * &pnum, qden.clone());
                            if eval(&work, &cand).is_zero() {
                                found = Some(cand);
                                break 'search;
                            }
                        }
                    }
                }
                found
            }
        };
        match found {
            Some(r) => {
                work = deflate(&work, &r);
                bump(&mut roots, r);
            }
            None => break,
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

fn eval_monic_cubic(c0: &BigInt, c1: &BigInt, c2: &BigInt, y: &BigInt) -> BigInt {
    ((y + c2) * y + c1) * y + c0
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

/// One integer root of y³ + c₂y² + c₁y + c₀, if any, found by exact sign
/// bisection on the monotone pieces cut out by the critical points.
fn monic_cubic_integer_root(c0: &BigInt, c1: &BigInt, c2: &BigInt) -> Option<BigInt> {
    let bound = BigInt::one() + c0.abs().max(c1.abs()).max(c2.abs());
    let three = BigInt::from(3);
    // the derivative 3y² + 2c₂y + c₁ has quarter-discriminant c₂² − 3c₁
    let dq = c2 * c2 - &three * c1;
    let mut intervals: Vec<(BigInt, BigInt)> = Vec::new();
    let mut singles: Vec<BigInt> = Vec::new();
    if dq.is_positive() {
        let s = dq.sqrt();
        // integer brackets around the critical points (−c₂ ∓ √dq)/3
        let lo1 = (-(c2) - &s - BigInt::one()).div_floor(&three);
        let hi1 = ceil_div(&(-(c2) - &s), &three);
        let lo2 = (-(c2) + &s).div_floor(&three);
        let hi2 = ceil_div(&(-(c2) + &s + BigInt::one()), &three);
        // a few integers may fall between a bracket pair; test them directly
        let mut k = lo1.clone();
        while k <= hi1 {
            singles.push(k.clone());
            k += 1;
        }
        let mut k = lo2.clone();
        while k <= hi2 {
            singles.push(k.clone());
            k += 1;
        }
        intervals.push((-&bound, lo1));
        intervals.push((hi1, lo2));
        intervals.push((hi2, bound.clone()));
    } else {
        intervals.push((-&bound, bound.clone()));
    }
    for y in singles {
        if eval_monic_cubic(c0, c1, c2, &y).is_zero() {
            return Some(y);
        }
    }
    for (mut a, mut b) in intervals {
        if a > b {
            continue;
        }
        let mut ga = eval_monic_cubic(c0, c1, c2, &a);
        if ga.is_zero() {
            return Some(a);
        }
        let gb = eval_monic_cubic(c0, c1, c2, &b);
        if gb.is_zero() {
            return Some(b);
        }
        if ga.is_positive() == gb.is_positive() {
            continue;
        }
        // the piece is monotone, so at most one sign change
        while &b - &a > BigInt::one() {
            let mid: BigInt = (&a + &b) >> 1;
            let gm = eval_monic_cubic(c0, c1, c2, &mid);
            if gm.is_zero() {
                return Some(mid);
            }
            if gm.is_positive() == ga.is_positive() {
                a = mid;
                ga = gm;
            } else {
                b = mid;
            }
        }
    }
    None
}

fn bump(roots: &mut Vec<(Rat, usize)>, r: Rat) {
    if let Some(entry) = roots.iter_mut().find(|(x, _)| *x == r) {
        entry.1 += 1;
    } else {
        roots.push((r, 1));
    }
}
