//! The polynomial family `P_{a,b,2}`, its mirror `P_{a,b,-2}` and the
//! piecewise function built from them.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, rat_to_f64, rat_to_string, rising, Rat};

/// Dense univariate polynomial, `coeffs[k]` multiplies `ξ^k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    /// `p(−ξ)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            write!(f, "{}", rat_to_string(&c.abs()))?;
            match k {
                0 => {}
                1 => write!(f, "ξ")?,
                _ => write!(f, "ξ^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(rat_to_string))
    }
}

/// `P_{a,b,2}(ξ) = Σ_{k=0}^{b−1} a(a+1)⋯(a+k−1) / (k!(b−1−k)!) · 2^{−a−k} ξ^{b−1−k}`,
/// and zero when `b ≤ 0`.
pub fn pab2(a: i64, b: i64) -> UniPoly {
    if b <= 0 {
        return UniPoly::zero();
    }
    let n = (b - 1) as u64;
    let mut coeffs = vec![Rat::zero(); b as usize];
    for k in 0..=n {
        let num = Rat::from_integer(rising(a, k));
        let den = Rat::from_integer(factorial(k) * factorial(n - k));
        coeffs[(n - k) as usize] = num / den * pow2(-a - k as i64);
    }
    UniPoly::new(coeffs)
}

/// `P_{a,b,−2}(ξ) = P_{b,a,2}(−ξ)`
pub fn pab_minus2(a: i64, b: i64) -> UniPoly {
    pab2(b, a).reflect()
}

/// `2π (P_{a,b,2}(ξ)·[ξ>0] + P_{a,b,−2}(ξ)·[ξ<0])`; zero at the origin.
pub fn pab_piecewise_eval(a: i64, b: i64, xi: f64) -> f64 {
    let branch = if xi > 0.0 {
        pab2(a, b).eval_f64(xi)
    } else if xi < 0.0 {
        pab_minus2(a, b).eval_f64(xi)
    } else {
        0.0
    };
    2.0 * std::f64::consts::PI * branch
}

/// `P_{a,b,2}(0) = 2^{1−a−b} a(a+1)⋯(a+b−2) / (b−1)!`
pub fn pab_value_at_zero(a: i64, b: i64) -> Result<Rat> {
    if b <= 0 {
        return Err(Error::Invalid(format!("b must be positive, got {b}")));
    }
    let n = (b - 1) as u64;
    Ok(Rat::new(rising(a, n), factorial(n)) * pow2(1 - a - b))
}

/// Alternative form of [`pab_value_at_zero`], valid when `a ≤ 0` and `a + b ≤ 1`:
/// `(−1)^{b−1} 2^{1−a−b} binom(−a, −a−b+1)`.
pub fn pab_value_at_zero_binomial(a: i64, b: i64) -> Result<Rat> {
    if b <= 0 || a > 0 || a + b > 1 {
        return Err(Error::Invalid(format!(
            "binomial form needs b >= 1, a <= 0, a + b <= 1; got a = {a}, b = {b}"
        )));
    }
    let sign = if (b - 1) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    };
    Ok(sign * Rat::from_integer(binomial(-a, -a - b + 1)) * pow2(1 - a - b))
}

/// Generalized Laguerre polynomial `L_n^α(x)` by the three-term recurrence.
pub fn laguerre(n: u64, alpha: i64, x: f64) -> f64 {
    let alpha = alpha as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(−1)^{b−1} 2^{−a−b+1} L^{−a−b+1}_{b−1}(2ξ)`, the Laguerre form of `P_{a,b,2}`.
pub fn pab2_via_laguerre(a: i64, b: i64, xi: f64) -> f64 {
    if b <= 0 {
        return 0.0;
    }
    let sign = if (b - 1) % 2 == 0 { 1.0 } else { -1.0 };
    sign * 2f64.powi((1 - a - b) as i32) * laguerre((b - 1) as u64, 1 - a - b, 2.0 * xi)
}

/// Both sides of `P_{a,b,2}(ξ) ξ^c = 2^c (b+c−1)!/(b−1)! · P_{a+c,b+c,2}(ξ)`.
/// `None` unless `b ≥ 1`, `c ≥ 0` and `a + b + c = 1`.
pub fn shift_identity(a: i64, b: i64, c: i64) -> Option<(UniPoly, UniPoly)> {
    if b < 1 || c < 0 || a + b + c != 1 {
        return None;
    }
    let lhs = pab2(a, b).mul(&UniPoly::monomial(Rat::one(), c as usize));
    let k = Rat::new(factorial((b + c - 1) as u64), factorial((b - 1) as u64)) * pow2(c);
    Some((lhs, pab2(a + c, b + c).scale(&k)))
}

/// Both sides of `P_{a,b,−2}(ξ) (−ξ)^c = κ · P_{a+c,b+c,−2}(ξ)` with the
/// given constant `κ`. `None` unless `a ≥ 1`, `c ≥ 0` and `a + b + c = 1`.
fn mirror_sides(a: i64, b: i64, c: i64, kappa: Rat) -> Option<(UniPoly, UniPoly)> {
    if a < 1 || c < 0 || a + b + c != 1 {
        return None;
    }
    let sign = if c % 2 == 0 { Rat::one() } else { -Rat::one() };
    let lhs = pab_minus2(a, b).mul(&UniPoly::monomial(sign, c as usize));
    Some((lhs, pab_minus2(a + c, b + c).scale(&kappa)))
}

/// Mirror of [`shift_identity`] through `P_{a,b,−2}(ξ) = P_{b,a,2}(−ξ)`:
/// `P_{a,b,−2}(ξ)(−ξ)^c = 2^c (a+c−1)!/(a−1)! · P_{a+c,b+c,−2}(ξ)`.
pub fn mirror_shift_identity(a: i64, b: i64, c: i64) -> Option<(UniPoly, UniPoly)> {
    if a < 1 || c < 0 {
        return None;
    }
    let kappa = Rat::new(factorial((a + c - 1) as u64), factorial((a - 1) as u64)) * pow2(c);
    mirror_sides(a, b, c, kappa)
}

/// Same as [`mirror_shift_identity`] but with the constant
/// `(a+c−1)!/((a−1)! 2^c)`. Only holds for `c = 0`; kept so the discrepancy
/// can be reported.
pub fn mirror_shift_identity_inverse_power(a: i64, b: i64, c: i64) -> Option<(UniPoly, UniPoly)> {
    if a < 1 || c < 0 {
        return None;
    }
    let kappa = Rat::new(factorial((a + c - 1) as u64), factorial((a - 1) as u64)) * pow2(-c);
    mirror_sides(a, b, c, kappa)
}

pub(crate) fn pow2(e: i64) -> Rat {
    let p = num_traits::pow(num_bigint::BigInt::from(2), e.unsigned_abs() as usize);
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(num_bigint::BigInt::one(), p)
    }
}
