//! Exact arithmetic substrate: rationals, half-integers, factorial-type
//! combinatorics and the symbolic scalar ring `Q × 2^{h/2} × π^q × i^r`.
//!
//! Every normalization constant in the crate is a [`SymScalar`]. Values are
//! kept in a canonical form (positive odd-part rational, signs folded into the
//! power of `i`) so that structural equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| bad())?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let magnitude = int_part.abs() * &scale + frac_part;
        let numer = if negative { -magnitude } else { magnitude };
        return Ok(Rat::new(numer, scale));
    }
    BigInt::from_str(s)
        .map(Rat::from_integer)
        .map_err(|_| bad())
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Rising factorial `a(a+1)⋯(a+k−1)`; equal to one when `k = 0`.
pub fn rising(a: i64, k: u64) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, j| acc * (a + j))
}

/// Rising factorial with a rational base.
pub fn rising_rat(a: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        x += Rat::one();
    }
    acc
}

/// `∏_{j=1}^{n-1} j!`, the superfactorial that keeps appearing in volumes.
pub fn superfactorial(n: u64) -> BigInt {
    (1..n).map(factorial).product()
}

/// Binomial coefficient for `0 ≤ k ≤ n`, zero otherwise.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64))
}

/// Half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    /// True when `self − other` is an integer.
    pub fn same_class(self, other: HalfInt) -> bool {
        (self.doubled - other.doubled) % 2 == 0
    }

    pub fn to_rat(self) -> Rat {
        rat(self.doubled, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }

    pub fn from_rat(r: &Rat) -> Result<Self> {
        let twice = r * rat_int(2);
        if !twice.is_integer() {
            return Err(Error::Parse(format!(
                "{} is not a half-integer",
                rat_to_string(r)
            )));
        }
        twice
            .to_integer()
            .to_i64()
            .map(HalfInt::from_doubled)
            .ok_or_else(|| Error::Parse("half-integer out of range".into()))
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"3/2"`, `"1.5"`, `"-2"` and the like.
    fn from_str(s: &str) -> Result<Self> {
        HalfInt::from_rat(&parse_rat(s)?)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact scalar `rat · 2^{half_log2/2} · π^{pi_pow} · i^{i_pow}`.
///
/// Canonical form: `rat` is positive with odd numerator and denominator, the
/// sign lives in `i_pow`, and every power of two lives in `half_log2`. The
/// zero scalar has all exponents zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymScalar {
    rat: Rat,
    half_log2: i64,
    pi_pow: i64,
    i_pow: u8,
}

impl SymScalar {
    pub fn zero() -> Self {
        SymScalar {
            rat: Rat::zero(),
            half_log2: 0,
            pi_pow: 0,
            i_pow: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn new(rat: Rat, half_log2: i64, pi_pow: i64, i_pow: i64) -> Self {
        let mut s = SymScalar {
            rat,
            half_log2,
            pi_pow,
            i_pow: i_pow.rem_euclid(4) as u8,
        };
        s.normalize();
        s
    }

    pub fn from_rat(rat: Rat) -> Self {
        Self::new(rat, 0, 0, 0)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// `2^{h/2}`
    pub fn sqrt2_pow(h: i64) -> Self {
        Self::new(Rat::one(), h, 0, 0)
    }

    pub fn pi_pow(q: i64) -> Self {
        Self::new(Rat::one(), 0, q, 0)
    }

    pub fn i_pow(r: i64) -> Self {
        Self::new(Rat::one(), 0, 0, r)
    }

    /// `(2π)^n`
    pub fn two_pi_pow(n: i64) -> Self {
        Self::new(Rat::one(), 2 * n, n, 0)
    }

    fn normalize(&mut self) {
        if self.rat.is_zero() {
            *self = SymScalar::zero();
            return;
        }
        if self.rat.is_negative() {
            self.rat = -self.rat.clone();
            self.i_pow = (self.i_pow + 2) % 4;
        }
        let numer = self.rat.numer().clone();
        let denom = self.rat.denom().clone();
        let (numer, vn) = strip_twos(numer);
        let (denom, vd) = strip_twos(denom);
        self.half_log2 += 2 * (vn as i64 - vd as i64);
        self.rat = Rat::new(numer, denom);
    }

    pub fn rat(&self) -> &Rat {
        &self.rat
    }

    pub fn half_log2(&self) -> i64 {
        self.half_log2
    }

    pub fn pi_power(&self) -> i64 {
        self.pi_pow
    }

    pub fn i_power(&self) -> u8 {
        self.i_pow
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero()
    }

    /// Modulus: drops the phase.
    pub fn abs(&self) -> Self {
        let mut s = self.clone();
        s.i_pow = 0;
        s
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(SymScalar::new(
            self.rat.recip(),
            -self.half_log2,
            -self.pi_pow,
            -(self.i_pow as i64),
        ))
    }

    pub fn div(&self, rhs: &SymScalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return SymScalar::one();
        }
        if self.is_zero() {
            return SymScalar::zero();
        }
        let base = if n > 0 {
            self.clone()
        } else {
            self.inv().unwrap()
        };
        let m = n.unsigned_abs() as usize;
        SymScalar::new(
            num_traits::pow(base.rat.clone(), m),
            base.half_log2 * m as i64,
            base.pi_pow * m as i64,
            base.i_pow as i64 * m as i64,
        )
    }

    pub fn modulus_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        rat_to_f64(&self.rat)
            * 2f64.powf(self.half_log2 as f64 / 2.0)
            * std::f64::consts::PI.powi(self.pi_pow as i32)
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let m = self.modulus_f64();
        match self.i_pow {
            0 => num_complex::Complex64::new(m, 0.0),
            1 => num_complex::Complex64::new(0.0, m),
            2 => num_complex::Complex64::new(-m, 0.0),
            _ => num_complex::Complex64::new(0.0, -m),
        }
    }
}

fn strip_twos(mut n: BigInt) -> (BigInt, u64) {
    let mut v = 0;
    let two = BigInt::from(2);
    while !n.is_zero() && n.is_even() {
        n /= &two;
        v += 1;
    }
    (n, v)
}

impl<'a> Mul<&'a SymScalar> for &'a SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: &SymScalar) -> SymScalar {
        if self.is_zero() || rhs.is_zero() {
            return SymScalar::zero();
        }
        SymScalar::new(
            &self.rat * &rhs.rat,
            self.half_log2 + rhs.half_log2,
            self.pi_pow + rhs.pi_pow,
            self.i_pow as i64 + rhs.i_pow as i64,
        )
    }
}

impl Mul for SymScalar {
    type Output = SymScalar;
    fn mul(self, rhs: SymScalar) -> SymScalar {
        &self * &rhs
    }
}

impl Neg for SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        &self * &SymScalar::i_pow(2)
    }
}

impl fmt::Display for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", rat_to_string(&self.rat))?;
        match self.half_log2.cmp(&0) {
            Ordering::Equal => {}
            _ if self.half_log2 % 2 == 0 => write!(f, "·2^{}", self.half_log2 / 2)?,
            _ => write!(f, "·2^({}/2)", self.half_log2)?,
        }
        if self.pi_pow != 0 {
            write!(f, "·π^{}", self.pi_pow)?;
        }
        if self.i_pow != 0 {
            write!(f, "·i^{}", self.i_pow)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct SymScalarWire {
    rat: String,
    sqrt2_pow: i64,
    pi_pow: i64,
    i_pow: u8,
}

impl Serialize for SymScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymScalarWire {
            rat: rat_to_string(&self.rat),
            sqrt2_pow: self.half_log2,
            pi_pow: self.pi_pow,
            i_pow: self.i_pow,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SymScalarWire::deserialize(d)?;
        let r = parse_rat(&w.rat).map_err(serde::de::Error::custom)?;
        Ok(SymScalar::new(r, w.sqrt2_pow, w.pi_pow, w.i_pow as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        // ∏_{j=1}^{2} j! in the vol(U_3) denominator
        assert_eq!(superfactorial(3), BigInt::from(2));
    }

    #[test]
    fn rising_values() {
        assert_eq!(rising(7, 0), BigInt::one());
        assert_eq!(rising(-2, 1), BigInt::from(-2));
        assert_eq!(rising(3, 3), BigInt::from(60));
        assert_eq!(rising(-2, 3), BigInt::zero());
    }

    #[test]
    fn sym_abs_and_products() {
        let x = SymScalar::i_pow(3) * SymScalar::sqrt2_pow(1) * SymScalar::pi_pow(1);
        assert_eq!(x.abs(), SymScalar::sqrt2_pow(1) * SymScalar::pi_pow(1));
        assert_eq!(
            SymScalar::sqrt2_pow(1) * SymScalar::sqrt2_pow(1),
            SymScalar::from_int(2)
        );
        let vol_u2 = SymScalar::from_int(8) * SymScalar::pi_pow(3);
        assert_eq!(vol_u2.rat(), &Rat::one());
        assert_eq!(vol_u2.half_log2(), 6);
        assert_eq!(vol_u2.pi_power(), 3);
        assert_eq!(vol_u2, SymScalar::two_pi_pow(3));
    }

    #[test]
    fn signs_fold_into_i() {
        let m = SymScalar::from_int(-3);
        assert_eq!(m.i_power(), 2);
        assert_eq!(m.rat(), &rat_int(3));
        assert_eq!(-SymScalar::one(), SymScalar::i_pow(2));
        assert_eq!(SymScalar::i_pow(4), SymScalar::one());
        assert!(SymScalar::from_int(0).is_zero());
    }

    #[test]
    fn json_shape() {
        let s = SymScalar::new(rat(-3, 4), 1, 2, 1);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"rat":"3","sqrt2_pow":-3,"pi_pow":2,"i_pow":3})
        );
        let back: SymScalar = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn half_int_parse_and_print() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_doubled(3));
        assert_eq!("1.5".parse::<HalfInt>().unwrap(), HalfInt::from_doubled(3));
        assert_eq!(
            "-0.5".parse::<HalfInt>().unwrap(),
            HalfInt::from_doubled(-1)
        );
        assert_eq!("-2".parse::<HalfInt>().unwrap(), HalfInt::from_int(-2));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
        assert_eq!(HalfInt::from_doubled(-5).to_string(), "-5/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
    }

    fn arb_sym() -> impl Strategy<Value = SymScalar> {
        (-50i64..50, 1i64..50, -6i64..6, -4i64..4, 0i64..4)
            .prop_map(|(p, q, h, pi, i)| SymScalar::new(rat(p, q), h, pi, i))
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rat_ring_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn sym_mul_associative_commutative(a in arb_sym(), b in arb_sym(), c in arb_sym()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn sym_abs_multiplicative(a in arb_sym(), b in arb_sym()) {
            prop_assert_eq!((&a * &b).abs(), &a.abs() * &b.abs());
        }

        #[test]
        fn sym_matches_complex_value(a in arb_sym(), b in arb_sym()) {
            let exact = (&a * &b).to_complex();
            let float = a.to_complex() * b.to_complex();
            prop_assert!((exact - float).norm() <= 1e-9 * (1.0 + float.norm()));
        }

        #[test]
        fn sym_inverse(a in arb_sym()) {
            if let Some(inv) = a.inv() {
                prop_assert_eq!(&a * &inv, SymScalar::one());
            } else {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn rising_vs_factorial(a in 1i64..20, k in 0u64..15) {
            prop_assert_eq!(
                rising(a, k),
                factorial((a as u64) + k - 1) / factorial(a as u64 - 1)
            );
        }
    }
}
