//! Exact rational arithmetic, square classes and Hilbert symbols.
//!
//! `Rat` is an arbitrary-precision rational, always stored in lowest terms
//! with a positive denominator (guaranteed by `num_rational`).  On top of it
//! we provide the square-class group ℚ*/ℚ*² (represented by signed squarefree
//! integers), integer factorization (trial division + Pollard rho), local
//! Hilbert symbols, and equality in the norm group 𝔽*_Δ = {a² − Δb²}.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for n/d.  Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `"p"` or `"p/q"` notation.  Rejects `q = 0`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| Error::Input(format!("bad numerator in {s:?}")))?;
    let d = BigInt::from_str(den).map_err(|_| Error::Input(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Input(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Render a rational as `"p"` or `"p/q"` (q > 0, lowest terms).
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// serde adapter: rationals as `"p/q"` strings in JSON.
pub mod rat_serde {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Like `rat_serde`, for `Vec<Rat>`.
pub mod rat_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(format_rat).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// True iff `x` is a square in ℚ (0 counts as a square).
pub fn is_square(x: &Rat) -> bool {
    if x.is_zero() {
        return true;
    }
    if x.is_negative() {
        return false;
    }
    is_square_int(x.numer()) && is_square_int(x.denom())
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Exact square root of a rational square, if it is one.  Returns the
/// non-negative root.
pub fn sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// An element of ℚ*/ℚ*², stored as its unique signed squarefree
/// representative.  Serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass(pub BigInt);

impl Serialize for SquareClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for SquareClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let n = BigInt::from_str(&s).map_err(serde::de::Error::custom)?;
        Ok(SquareClass(n))
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl SquareClass {
    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }
}

/// Squarefree representative of the class of a nonzero rational.
///
/// `x = n/d ~ n·d (mod squares)`, so the class is the squarefree part of
/// `n·d`, keeping the sign.
pub fn square_class(x: &Rat) -> Result<SquareClass> {
    if x.is_zero() {
        return Err(Error::Domain("square_class of zero".into()));
    }
    let nd = x.numer() * x.denom();
    let f = factorize(&nd)?;
    let mut rep = BigInt::from(f.sign);
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            rep *= p;
        }
    }
    Ok(SquareClass(rep))
}

/// Product of two square classes.
pub fn square_class_mul(a: &SquareClass, b: &SquareClass) -> Result<SquareClass> {
    square_class(&Rat::from_integer(&a.0 * &b.0))
}

/// Factorization of a nonzero integer: sign and sorted prime powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

const TRIAL_BOUND: u64 = 10_000;

fn small_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_BOUND as usize;
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
    })
}

/// Factor a nonzero integer by trial division over the primes up to 10^4
/// with a Pollard rho fallback for larger cofactors.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Domain("factorize(0)".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += e;
        } else {
            factors.push((p, e));
        }
    };
    for &d in small_primes() {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &db).is_zero() {
            m /= &db;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut factors);
        }
    }
    if !m.is_one() {
        // cofactor: prime or a product of primes > 10^6
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if is_prime(&c) {
                push(c, 1, &mut factors);
            } else {
                let f = pollard_rho(&c)?;
                stack.push(&c / &f);
                stack.push(f);
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { sign, factors })
}

/// Deterministic Miller-Rabin (the fixed base set is exact below 3.3·10²⁴).
pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let pb = BigInt::from(p);
        if *n == pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u8), n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent variant) for a known-composite odd input with no small
/// factors.
fn pollard_rho(n: &BigInt) -> Result<BigInt> {
    if (n % BigInt::from(2)).is_zero() {
        return Ok(BigInt::from(2));
    }
    let one = BigInt::one();
    for c in 1u64..64 {
        let cb = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &cb) % n;
        let mut x = BigInt::from(2u8);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return Ok(d);
        }
    }
    Err(Error::Internal(format!("pollard rho failed on {n}")))
}

/// A place of ℚ: the real place or a finite prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Place {
    Infinity,
    Prime(BigInt),
}

/// Legendre symbol (a/p) for odd prime p, a coprime to p.
fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let e = (p - 1u8) >> 1;
    let r = a.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else if r.is_zero() {
        0
    } else {
        -1
    }
}

/// ε(u) = (u−1)/2 mod 2 for odd u.
fn eps2(u: &BigInt) -> u8 {
    let r = u.mod_floor(&BigInt::from(4));
    if r == BigInt::from(3) {
        1
    } else {
        0
    }
}

/// ω(u) = (u²−1)/8 mod 2 for odd u.
fn omega2(u: &BigInt) -> u8 {
    let r = u.mod_floor(&BigInt::from(8));
    if r == BigInt::from(3) || r == BigInt::from(5) {
        1
    } else {
        0
    }
}

/// Hilbert symbol (x, y)_v ∈ {±1} for nonzero rationals x, y.
pub fn hilbert_symbol(x: &Rat, y: &Rat, place: &Place) -> Result<i8> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::Domain("hilbert symbol of zero".into()));
    }
    // x ~ numer·denom modulo squares, so work with integers
    let a = x.numer() * x.denom();
    let b = y.numer() * y.denom();
    match place {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() {
            -1
        } else {
            1
        }),
        Place::Prime(p) => {
            if *p == BigInt::from(2) {
                let (alpha, u) = split_valuation(&a, p);
                let (beta, v) = split_valuation(&b, p);
                let exp = eps2(&u) * eps2(&v)
                    + (alpha % 2) as u8 * omega2(&v)
                    + (beta % 2) as u8 * omega2(&u);
                Ok(if exp % 2 == 0 { 1 } else { -1 })
            } else if p.is_negative() || !is_prime(p) {
                Err(Error::Domain(format!("{p} is not a prime")))
            } else {
                let (alpha, u) = split_valuation(&a, p);
                let (beta, v) = split_valuation(&b, p);
                let mut s: i8 = 1;
                if alpha % 2 == 1 && beta % 2 == 1 && eps2(&(p.clone())) == 1 {
                    s = -s;
                }
                if beta % 2 == 1 {
                    s *= legendre(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= legendre(&v, p);
                }
                Ok(s)
            }
        }
    }
}

/// Write n = p^k · u and return (k, u).
fn split_valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut k = 0u32;
    let mut u = n.clone();
    while (&u % p).is_zero() {
        u /= p;
        k += 1;
    }
    (k, u)
}

/// The odd primes at which a rational can have nontrivial local behaviour.
fn odd_support(x: &Rat) -> Result<Vec<BigInt>> {
    let nd = x.numer() * x.denom();
    let f = factorize(&nd)?;
    Ok(f.factors
        .into_iter()
        .filter(|(p, _)| *p != BigInt::from(2))
        .map(|(p, _)| p)
        .collect())
}

/// True iff `x` is a norm from ℚ(√Δ), i.e. x = a² − Δb² for some a, b ∈ ℚ.
///
/// Decided by Hilbert symbols: x is a norm iff (x, Δ)_v = 1 at every place,
/// and only ∞, 2 and the odd primes in the supports of x and Δ can fail.
pub fn is_norm(x: &Rat, delta: &Rat) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::Domain("is_norm of zero".into()));
    }
    if is_square(delta) {
        // ℚ(√Δ) = ℚ ⊕ ℚ (or Δ = 0): every nonzero rational is a norm
        return Ok(true);
    }
    let mut places = vec![Place::Infinity, Place::Prime(BigInt::from(2))];
    let mut odd = odd_support(x)?;
    odd.extend(odd_support(delta)?);
    odd.sort();
    odd.dedup();
    places.extend(odd.into_iter().map(Place::Prime));
    for v in &places {
        if hilbert_symbol(x, delta, v)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A class in 𝔽*/𝔽*_Δ: a nonzero rational `rep` considered modulo the norms
/// of ℚ(√Δ), for a fixed non-square Δ.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormClass {
    #[serde(with = "rat_serde")]
    pub delta: Rat,
    #[serde(with = "rat_serde")]
    pub rep: Rat,
}

impl NormClass {
    pub fn new(delta: Rat, rep: Rat) -> Result<Self> {
        if is_square(&delta) {
            return Err(Error::Domain(
                "norm class needs a non-square discriminant".into(),
            ));
        }
        if rep.is_zero() {
            return Err(Error::Domain("norm class representative must be nonzero".into()));
        }
        Ok(NormClass { delta, rep })
    }
}

/// Equality in 𝔽*/𝔽*_Δ.  The two classes must carry the same Δ.
pub fn norm_class_equal(p: &NormClass, q: &NormClass) -> Result<bool> {
    if p.delta != q.delta {
        return Err(Error::Domain(
            "norm classes live over different discriminants".into(),
        ));
    }
    is_norm(&(&p.rep / &q.rep), &p.delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rat(&parse_rat("3/6").unwrap()), "1/2");
        assert_eq!(format_rat(&parse_rat("-4/2").unwrap()), "-2");
        assert_eq!(format_rat(&parse_rat("7").unwrap()), "7");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn squares() {
        assert!(is_square(&ratio(4, 9)));
        assert!(is_square(&rat(0)));
        assert!(!is_square(&rat(-4)));
        assert!(!is_square(&ratio(2, 3)));
        assert_eq!(sqrt_exact(&ratio(49, 4)).unwrap(), ratio(7, 2));
        assert_eq!(sqrt_exact(&rat(8)), None);
    }

    #[test]
    fn square_classes() {
        assert_eq!(square_class(&rat(8)).unwrap().0, BigInt::from(2));
        assert_eq!(square_class(&ratio(-4, 3)).unwrap().0, BigInt::from(-3));
        assert_eq!(square_class(&ratio(9, 16)).unwrap().0, BigInt::from(1));
        assert_eq!(square_class(&ratio(1, 2)).unwrap().0, BigInt::from(2));
    }

    #[test]
    fn factorize_small() {
        let f = factorize(&BigInt::from(-1200)).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(
            f.factors,
            vec![
                (BigInt::from(2), 4),
                (BigInt::from(3), 1),
                (BigInt::from(5), 2)
            ]
        );
    }

    #[test]
    fn factorize_large_semiprime() {
        // 1000003 * 1000033, both above the trial-division bound
        let n = BigInt::from(1000003u64) * BigInt::from(1000033u64);
        let f = factorize(&n).unwrap();
        assert_eq!(
            f.factors,
            vec![(BigInt::from(1000003u64), 1), (BigInt::from(1000033u64), 1)]
        );
    }

    #[test]
    fn hilbert_examples() {
        // (2,3) at 3: 2 is not a QR mod 3
        assert_eq!(
            hilbert_symbol(&rat(2), &rat(3), &Place::Prime(BigInt::from(3))).unwrap(),
            -1
        );
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(-1), &Place::Infinity).unwrap(),
            -1
        );
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(-1), &Place::Prime(BigInt::from(2))).unwrap(),
            -1
        );
        assert_eq!(
            hilbert_symbol(&rat(-1), &rat(2), &Place::Prime(BigInt::from(2))).unwrap(),
            1
        );
    }

    #[test]
    fn hilbert_product_formula() {
        // over all places the symbols multiply to +1
        let xs = [rat(-6), ratio(10, 3), rat(35), ratio(-7, 8), rat(15)];
        for x in &xs {
            for y in &xs {
                let mut places = vec![Place::Infinity, Place::Prime(BigInt::from(2))];
                let mut odd = odd_support(x).unwrap();
                odd.extend(odd_support(y).unwrap());
                odd.sort();
                odd.dedup();
                places.extend(odd.into_iter().map(Place::Prime));
                let prod: i32 = places
                    .iter()
                    .map(|v| hilbert_symbol(x, y, v).unwrap() as i32)
                    .product();
                assert_eq!(prod, 1, "product formula failed for {x}, {y}");
            }
        }
    }

    #[test]
    fn norm_class_delta8() {
        // -1 = 1² - 8·(1/2)² is a norm from ℚ(√8)
        let p = NormClass::new(rat(8), rat(-1)).unwrap();
        let q = NormClass::new(rat(8), rat(1)).unwrap();
        assert!(norm_class_equal(&p, &q).unwrap());
    }

    #[test]
    fn norm_class_delta_m4() {
        // norms of ℚ(i) are the sums of two squares: 3 is not one
        let p = NormClass::new(rat(-4), rat(3)).unwrap();
        let q = NormClass::new(rat(-4), rat(1)).unwrap();
        assert!(!norm_class_equal(&p, &q).unwrap());
        // but 5 = 1² + 2² is
        let r = NormClass::new(rat(-4), rat(5)).unwrap();
        assert!(norm_class_equal(&r, &q).unwrap());
        // and 9 = 3² is a square hence a norm
        let s = NormClass::new(rat(-4), rat(9)).unwrap();
        assert!(norm_class_equal(&s, &q).unwrap());
    }
}
