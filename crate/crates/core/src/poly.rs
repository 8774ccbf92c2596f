//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat_to_f64, rat_to_string, Rat};
use crate::pab::UniPoly;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// `c · z^e`
    pub fn monomial(e: Exponent, c: Rat) -> Self {
        let mut p = Self::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// `z_var`
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Self::monomial(e, Rat::one())
    }

    /// A univariate polynomial placed in variable `var`.
    pub fn from_uni(nvars: usize, var: usize, u: &UniPoly) -> Self {
        let mut p = Self::zero(nvars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Highest power of `var` appearing.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add_term(&mut self, e: Exponent, c: Rat) {
        assert_eq!(e.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &MultiPoly) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `P(z_{σ(1)}, …, z_{σ(n)})`, i.e. variable `j` is replaced by `z_{σ(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (j, &k) in e.iter().enumerate() {
                f[sigma[j]] = k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|j| {
            let mut s: Vec<usize> = (0..self.nvars).collect();
            s.swap(j, j + 1);
            &self.permute(&s) == self
        })
    }

    pub fn is_skew(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|j| {
            let mut s: Vec<usize> = (0..self.nvars).collect();
            s.swap(j, j + 1);
            self.permute(&s) == self.scale(&-Rat::one())
        })
    }

    /// `∂^k/∂z_var^k`
    pub fn derivative(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] < k {
                continue;
            }
            let falling: u64 = ((e[var] - k + 1)..=e[var]).map(u64::from).product();
            let mut f = e.clone();
            f[var] -= k;
            out.add_term(f, c * Rat::from_integer(falling.into()));
        }
        out
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn eval(&self, z: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(z).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }

    pub fn eval_f64(&self, z: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(z)
                    .fold(rat_to_f64(c), |acc, (&k, x)| acc * x.powi(k as i32))
            })
            .sum()
    }

    /// Terms by exponent vector in descending lexicographic order.
    pub fn terms_descending(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter().rev()
    }

    /// Pretty-printed LaTeX.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms_descending().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                if a.denom().is_one() {
                    out.push_str(&a.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()));
                }
            }
            for (j, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => out.push_str(&format!("z_{{{}}}", j + 1)),
                    _ => out.push_str(&format!("z_{{{}}}^{{{}}}", j + 1, k)),
                }
            }
        }
        out
    }

    /// If `self = c · other` for a rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &MultiPoly) -> Option<Rat> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (e, c) = other.terms.iter().next()?;
        let r = self.terms.get(e)? / c;
        (other.scale(&r) == *self).then_some(r)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_latex())
    }
}

#[derive(Serialize)]
struct TermWire<'a> {
    exp: &'a [u32],
    coeff: String,
}

impl Serialize for MultiPoly {
    /// `[{"exp":[…],"coeff":"p/q"}, …]`, descending exponents.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms_descending() {
            seq.serialize_element(&TermWire {
                exp: e,
                coeff: rat_to_string(c),
            })?;
        }
        seq.end()
    }
}

/// Sign of a permutation given as images `s[j]`.
pub fn perm_sign(s: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    (0..n)
        .permutations(n)
        .map(|s| {
            let sg = perm_sign(&s);
            (s, sg)
        })
        .collect()
}

/// `Σ_s sgn(s) P∘s`
pub fn skew_symmetrize(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars);
    for (s, sg) in permutations(p.nvars) {
        let q = p.permute(&s);
        out = if sg > 0 { out.add(&q) } else { out.sub(&q) };
    }
    out
}

/// `∏_{j<k} (z_j − z_k)`
pub fn vandermonde(n: usize) -> MultiPoly {
    let mut v = MultiPoly::one(n);
    for j in 0..n {
        for k in j + 1..n {
            v = v.mul(&MultiPoly::var(n, j).sub(&MultiPoly::var(n, k)));
        }
    }
    v
}

/// Exact division by `z_j − z_k`, treating the dividend as a polynomial in
/// `z_j`. Fails on a nonzero remainder.
pub fn divide_by_difference(p: &MultiPoly, j: usize, k: usize) -> Result<MultiPoly> {
    let n = p.nvars;
    let Some(deg) = p.degree_in(j) else {
        return Ok(MultiPoly::zero(n));
    };
    // coefficient polynomials c_d (free of z_j)
    let mut c: Vec<MultiPoly> = vec![MultiPoly::zero(n); deg as usize + 1];
    for (e, v) in &p.terms {
        let mut f = e.clone();
        f[j] = 0;
        c[e[j] as usize].add_term(f, v.clone());
    }
    let zk = MultiPoly::var(n, k);
    let zj = MultiPoly::var(n, j);
    let mut quotient = MultiPoly::zero(n);
    let mut carry = MultiPoly::zero(n);
    for d in (1..=deg as usize).rev() {
        carry = c[d].add(&carry.mul(&zk));
        let mut zjd = MultiPoly::one(n);
        for _ in 0..d - 1 {
            zjd = zjd.mul(&zj);
        }
        quotient = quotient.add(&carry.mul(&zjd));
    }
    let remainder = c[0].add(&carry.mul(&zk));
    if !remainder.is_zero() {
        return Err(Error::NotDivisible);
    }
    Ok(quotient)
}

/// Exact quotient by `∏_{j<k} (z_j − z_k)`.
pub fn divide_by_vandermonde(p: &MultiPoly) -> Result<MultiPoly> {
    let mut q = p.clone();
    for j in 0..p.nvars {
        for k in j + 1..p.nvars {
            q = divide_by_difference(&q, j, k)?;
        }
    }
    Ok(q)
}

/// `∂(π)F(0)` for `π = ∏_{j<k}(z_j − z_k)`, i.e. the constant term of
/// `Σ_s sgn(s) ∏_j ∂_j^{n−s(j)−1} F` read off from the coefficients.
pub fn vandermonde_operator_at_zero(p: &MultiPoly) -> Rat {
    let n = p.nvars;
    let mut total = Rat::zero();
    for (s, sg) in permutations(n) {
        let e: Exponent = s.iter().map(|&sj| (n - 1 - sj) as u32).collect();
        let c = p.coeff(&e);
        if c.is_zero() {
            continue;
        }
        let w: num_bigint::BigInt = e.iter().map(|&k| factorial(k as u64)).product();
        total += c * Rat::from_integer(w) * Rat::from_integer(sg.into());
    }
    total
}
