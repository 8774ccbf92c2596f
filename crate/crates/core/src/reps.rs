//! Weights, Harish-Chandra parameters, occurrence, the correspondence map and
//! dimension formulas for the dual pair `(U_l, U_{l'})`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{factorial, HalfInt, Rat, SymScalar};

/// The pair `(U_l, U_{l'})`. Most operations assume `l ≤ l'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualPair {
    pub l: usize,
    pub lp: usize,
}

impl DualPair {
    pub fn new(l: usize, lp: usize) -> Result<Self> {
        if l == 0 || lp == 0 {
            return Err(Error::InvalidPair(format!(
                "ranks must be positive, got ({l}, {lp})"
            )));
        }
        Ok(DualPair { l, lp })
    }

    /// Like [`DualPair::new`] but also rejects `l > l'`.
    pub fn ordered(l: usize, lp: usize) -> Result<Self> {
        let p = Self::new(l, lp)?;
        p.require_ordered()?;
        Ok(p)
    }

    pub fn swapped(self) -> Self {
        DualPair {
            l: self.lp,
            lp: self.l,
        }
    }

    pub fn require_ordered(self) -> Result<()> {
        if self.l > self.lp {
            return Err(Error::RankOrder {
                l: self.l,
                lp: self.lp,
            });
        }
        Ok(())
    }

    /// `l(l−1)/2`, the number of positive roots of `U_l`.
    pub fn n_roots(self) -> i64 {
        (self.l * (self.l - 1) / 2) as i64
    }
}

/// `δ = (l' − l + 1)/2`
pub fn delta_of(pair: DualPair) -> HalfInt {
    HalfInt::from_doubled(pair.lp as i64 - pair.l as i64 + 1)
}

/// `δ' = (l − l' + 1)/2`
pub fn delta_prime_of(pair: DualPair) -> HalfInt {
    HalfInt::from_doubled(pair.l as i64 - pair.lp as i64 + 1)
}

/// Strictly decreasing list of half-integers sharing one parity class.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HCParam(Vec<HalfInt>);

impl HCParam {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Invalid("empty parameter".into()));
        }
        if entries.windows(2).any(|w| !w[0].same_class(w[1])) {
            return Err(Error::Parity);
        }
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDominant);
        }
        Ok(HCParam(entries))
    }

    /// Sorts a Weyl-orbit representative into dominant order. Returns the
    /// parameter and the sign of the sorting permutation.
    pub fn from_orbit(mut entries: Vec<HalfInt>) -> Result<(Self, i8)> {
        let mut sign = 1i8;
        for i in 0..entries.len() {
            for j in 0..entries.len() - 1 - i {
                if entries[j] < entries[j + 1] {
                    entries.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        Ok((Self::new(entries)?, sign))
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> HalfInt {
        self.0.iter().fold(HalfInt::ZERO, |acc, &x| acc + x)
    }
}

impl fmt::Debug for HCParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl<'de> Deserialize<'de> for HCParam {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<HalfInt>::deserialize(d)?;
        HCParam::new(v).map_err(serde::de::Error::custom)
    }
}

/// Weakly decreasing list of half-integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HighestWeight(Vec<HalfInt>);

impl HighestWeight {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        Ok(HighestWeight(entries))
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.0
    }
}

/// `ρ(n)_j = (n+1)/2 − j`
pub fn rho(n: usize) -> Vec<HalfInt> {
    (1..=n as i64)
        .map(|j| HalfInt::from_doubled(n as i64 + 1 - 2 * j))
        .collect()
}

/// `ρ''_j = δ − j` for `j = 1..l'−l`.
pub fn rho_pp(pair: DualPair) -> Result<Vec<HalfInt>> {
    pair.require_ordered()?;
    let d = delta_of(pair);
    Ok((1..=(pair.lp - pair.l) as i64)
        .map(|j| d - HalfInt::from_int(j))
        .collect())
}

/// Which member of the pair a weight belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    G,
    GPrime,
}

impl Side {
    fn rank(self, pair: DualPair) -> (usize, usize) {
        match self {
            Side::G => (pair.l, pair.lp),
            Side::GPrime => (pair.lp, pair.l),
        }
    }
}

/// `μ = λ + ρ`. The weight must be genuine: every `λ_j − m/2` integral, with
/// `m` the rank of the other member.
pub fn hc_param(lambda: &HighestWeight, pair: DualPair, side: Side) -> Result<HCParam> {
    let (n, other) = side.rank(pair);
    check_len(lambda.entries(), n)?;
    let shift = HalfInt::from_doubled(other as i64);
    if lambda.entries().iter().any(|&x| !x.same_class(shift)) {
        return Err(Error::Parity);
    }
    HCParam::new(
        lambda
            .entries()
            .iter()
            .zip(rho(n))
            .map(|(&x, r)| x + r)
            .collect(),
    )
}

/// Inverse of [`hc_param`].
pub fn hw_of(mu: &HCParam, pair: DualPair, side: Side) -> Result<HighestWeight> {
    let (n, _) = side.rank(pair);
    check_len(mu.entries(), n)?;
    HighestWeight::new(
        mu.entries()
            .iter()
            .zip(rho(n))
            .map(|(&x, r)| x - r)
            .collect(),
    )
}

fn check_len(v: &[HalfInt], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::Length {
            expected,
            got: v.len(),
        });
    }
    Ok(())
}

/// Why a parameter does or does not occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Occurs,
    /// Entries are in the wrong class modulo `Z`.
    Parity,
    /// Some entry lies below the admissible range.
    Bound,
    /// The `ρ''` tail does not match.
    Tail,
}

impl Reason {
    pub fn occurs(self) -> bool {
        self == Reason::Occurs
    }
}

/// Occurrence test on the `U_l` side with the reason. `l ≤ l'` required.
pub fn occurrence_g(mu: &HCParam, pair: DualPair) -> Result<Reason> {
    pair.require_ordered()?;
    check_len(mu.entries(), pair.l)?;
    let d = delta_of(pair);
    if !mu.entries()[0].same_class(d) {
        return Ok(Reason::Parity);
    }
    if mu.entries().iter().any(|&m| m < d) {
        return Ok(Reason::Bound);
    }
    Ok(Reason::Occurs)
}

/// Every `μ_j ∈ δ + Z_{≥0}`.
pub fn occurs_g(mu: &HCParam, pair: DualPair) -> Result<bool> {
    occurrence_g(mu, pair).map(Reason::occurs)
}

/// `(s₀μ')_j = μ'_{l'−l+j}` for `j ≤ l` and `μ'_{j−l}` for `j > l`.
pub fn s0_apply(mu_p: &[HalfInt], pair: DualPair) -> Result<Vec<HalfInt>> {
    pair.require_ordered()?;
    check_len(mu_p, pair.lp)?;
    let k = pair.lp - pair.l;
    Ok(mu_p[k..].iter().chain(&mu_p[..k]).copied().collect())
}

/// Occurrence test on the `U_{l'}` side with the reason.
pub fn occurrence_gprime(mu_p: &HCParam, pair: DualPair) -> Result<Reason> {
    let s = s0_apply(mu_p.entries(), pair)?;
    let d = delta_of(pair);
    if !s[0].same_class(d) {
        return Ok(Reason::Parity);
    }
    if s[..pair.l].iter().any(|&m| -m < d) {
        return Ok(Reason::Bound);
    }
    if s[pair.l..] != rho_pp(pair)?[..] {
        return Ok(Reason::Tail);
    }
    Ok(Reason::Occurs)
}

/// For `l' > l`: `−(s₀μ')_j ∈ δ + Z_{≥0}` for `j ≤ l` and the tail equals
/// `ρ''`. For `l' = l` this is `−μ'_j ∈ δ' + Z_{≥0}`.
pub fn occurs_gprime(mu_p: &HCParam, pair: DualPair) -> Result<bool> {
    occurrence_gprime(mu_p, pair).map(Reason::occurs)
}

/// `μ'_{l'+1−j} = −μ_j` for `j ≤ l`, preceded by the `ρ''` string.
pub fn correspond(mu: &HCParam, pair: DualPair) -> Result<HCParam> {
    let reason = occurrence_g(mu, pair)?;
    if !reason.occurs() {
        return Err(Error::NotOccurring(format!("{mu:?} ({reason:?})")));
    }
    let mut out = rho_pp(pair)?;
    out.extend(mu.entries().iter().rev().map(|&m| -m));
    HCParam::new(out)
}

/// Inverse of [`correspond`].
pub fn correspond_back(mu_p: &HCParam, pair: DualPair) -> Result<HCParam> {
    let reason = occurrence_gprime(mu_p, pair)?;
    if !reason.occurs() {
        return Err(Error::NotOccurring(format!("{mu_p:?} ({reason:?})")));
    }
    HCParam::new(
        mu_p.entries()[pair.lp - pair.l..]
            .iter()
            .rev()
            .map(|&m| -m)
            .collect(),
    )
}

/// Weyl's formula `∏_{j<k} (μ_j − μ_k)/(k − j)`.
pub fn dim_weyl(mu: &HCParam) -> BigInt {
    let e = mu.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..e.len() {
        for k in j + 1..e.len() {
            num *= (e[j] - e[k]).doubled();
            den *= 2 * (k - j) as i64;
        }
    }
    debug_assert!((&num % &den) == BigInt::from(0));
    num / den
}

fn fact(h: HalfInt) -> BigInt {
    let n = h.to_integer().expect("integral factorial argument");
    factorial(u64::try_from(n).expect("nonnegative factorial argument"))
}

/// Dimension of `Π'` from its occurrence data:
/// `∏_{j≤l}(l'−j)!^{−1} · ∏_{j>l'−l} (δ−μ'_j−1)!/(−μ'_j−δ)! · ∏_{l'−l<j<k} (μ'_j − μ'_k)`.
pub fn dim_piprime(mu_p: &HCParam, pair: DualPair) -> Result<BigInt> {
    let reason = occurrence_gprime(mu_p, pair)?;
    if !reason.occurs() {
        return Err(Error::NotOccurring(format!("{mu_p:?} ({reason:?})")));
    }
    let d = delta_of(pair);
    let one = HalfInt::from_int(1);
    let block = &mu_p.entries()[pair.lp - pair.l..];
    let mut num = BigInt::one();
    let mut den: BigInt = (1..=pair.l)
        .map(|j| factorial((pair.lp - j) as u64))
        .product();
    for &m in block {
        num *= fact(d - m - one);
        den *= fact(-m - d);
    }
    for j in 0..block.len() {
        for k in j + 1..block.len() {
            num *= (block[j] - block[k]).to_integer().expect("same class");
        }
    }
    Ok(num / den)
}

/// `a_j = −μ_j − δ + 1`, `b_j = μ_j − δ + 1`.
pub fn ab_params(mu: &HCParam, pair: DualPair) -> Result<Vec<(i64, i64)>> {
    let d = delta_of(pair);
    let one = HalfInt::from_int(1);
    mu.entries()
        .iter()
        .map(|&m| {
            let a = (-m - d + one).to_integer().ok_or(Error::Parity)?;
            let b = (m - d + one).to_integer().ok_or(Error::Parity)?;
            Ok((a, b))
        })
        .collect()
}

/// `(−1)^{Σμ_j}` as the unit `i^{2Σμ_j}`; defined for every parameter.
pub fn central_character(mu: &HCParam) -> SymScalar {
    SymScalar::i_pow(mu.sum().doubled())
}

/// `(−1)^{Σμ_j}`; errors when the sum is not an integer.
pub fn central_sign(mu: &HCParam) -> Result<i8> {
    let s = mu.sum().to_integer().ok_or(Error::NonIntegralSum)?;
    Ok(if s.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `∏_{j≤l} (−(s₀μ')_j + δ − 1)! / (−(s₀μ')_j − δ)!`
pub fn mysterious_factor(mu_p: &HCParam, pair: DualPair) -> Result<SymScalar> {
    let reason = occurrence_gprime(mu_p, pair)?;
    if !reason.occurs() {
        return Err(Error::NotOccurring(format!("{mu_p:?} ({reason:?})")));
    }
    let s = s0_apply(mu_p.entries(), pair)?;
    let d = delta_of(pair);
    let one = HalfInt::from_int(1);
    let mut r = Rat::one();
    for &m in &s[..pair.l] {
        r *= Rat::new(fact(-m + d - one), fact(-m - d));
    }
    Ok(SymScalar::from_rat(r))
}

/// `(dim Π'/dim Π) ∏_{j≤l} (l'−j)!/(l−j)!`, which equals the modulus of
/// [`mysterious_factor`].
pub fn mysterious_factor_from_dims(
    mu: &HCParam,
    mu_p: &HCParam,
    pair: DualPair,
) -> Result<SymScalar> {
    let mut r = Rat::new(dim_piprime(mu_p, pair)?, dim_weyl(mu));
    for j in 1..=pair.l {
        r *= Rat::new(
            factorial((pair.lp - j) as u64),
            factorial((pair.l - j) as u64),
        );
    }
    Ok(SymScalar::from_rat(r))
}

/// All occurring `μ` for `pair` with every `|μ_j| ≤ bound`.
pub fn occurring_params(pair: DualPair, bound: HalfInt) -> Result<Vec<HCParam>> {
    pair.require_ordered()?;
    let d = delta_of(pair);
    let mut top = bound;
    if !top.same_class(d) {
        top = top - HalfInt::from_doubled(1);
    }
    if top < d {
        return Ok(Vec::new());
    }
    let values: Vec<HalfInt> = (0..=((top - d).doubled() / 2))
        .map(|k| top - HalfInt::from_int(k))
        .collect();
    use itertools::Itertools;
    Ok(values
        .into_iter()
        .combinations(pair.l)
        .map(|c| HCParam::new(c).expect("combinations are strictly decreasing"))
        .collect())
}

/// The pairs `(l, l')` with `1 ≤ l ≤ max_l`, `l ≤ l' ≤ max_lp`.
pub fn pairs_up_to(max_l: usize, max_lp: usize) -> Vec<DualPair> {
    (1..=max_l)
        .flat_map(|l| (l..=max_lp).map(move |lp| DualPair { l, lp }))
        .collect()
}

pub fn dim_to_u64(d: &BigInt) -> u64 {
    d.to_u64().expect("dimension fits in u64")
}
