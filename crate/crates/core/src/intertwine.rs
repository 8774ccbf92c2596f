//! Intertwining distributions as explicit functions on `W = M_{l×l'}(C)`.
//!
//! On the Cartan slice a distribution is
//! `prefactor · e^{−Σ z_j} · Q(z)` with `z_j = 2π y_j`, where `y_j` are the
//! eigenvalues of `w w^*` and `Q` is the symmetric quotient of a skew sum
//! by `∏_{j<k}(z_j − z_k)`.

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::constants::{constants, vol_u};
use crate::error::{Error, Result};
use crate::exact::{factorial, HalfInt, Rat, SymScalar};
use crate::linalg::{moment_eigenvalues, CMat};
use crate::pab::pab2;
use crate::poly::{
    divide_by_vandermonde, skew_symmetrize, vandermonde_operator_at_zero, MultiPoly,
};
use crate::reps::{
    ab_params, central_character, correspond, delta_of, dim_piprime, mysterious_factor,
    mysterious_factor_from_dims, occurrence_g, occurrence_gprime, s0_apply, DualPair, HCParam,
    Reason,
};

pub const GAUSSIAN: &str = "exp(-sum z_j)";
pub const VARIABLES: &str = "z_j = 2*pi*y_j";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionData {
    pub prefactor: SymScalar,
    pub poly: MultiPoly,
}

impl DistributionData {
    pub fn zero(nvars: usize) -> Self {
        DistributionData {
            prefactor: SymScalar::zero(),
            poly: MultiPoly::zero(nvars),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prefactor.is_zero() || self.poly.is_zero()
    }

    /// Value at `w = 0`: `prefactor · Q(0)`.
    pub fn value_at_zero(&self) -> SymScalar {
        &self.prefactor * &SymScalar::from_rat(self.poly.constant_term())
    }

    /// `|prefactor| e^{−Σz} Q(z)` at Cartan coordinates `y` (`z = 2πy`).
    pub fn eval_cartan(&self, y: &[f64]) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let z: Vec<f64> = y.iter().map(|v| 2.0 * std::f64::consts::PI * v).collect();
        self.prefactor.modulus_f64() * (-z.iter().sum::<f64>()).exp() * self.poly.eval_f64(&z)
    }

    /// Evaluates at an `l × l'` matrix through the eigenvalues of `w w^*`.
    pub fn eval_on_w(&self, w: &CMat) -> Result<f64> {
        if w.nrows() != self.poly.nvars() {
            return Err(Error::Dimension(format!(
                "matrix has {} rows, expected {}",
                w.nrows(),
                self.poly.nvars()
            )));
        }
        Ok(self.eval_cartan(&moment_eigenvalues(w)?))
    }
}

impl Serialize for DistributionData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_zero() {
            let mut m = s.serialize_map(Some(1))?;
            m.serialize_entry("zero", &true)?;
            return m.end();
        }
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("prefactor", &self.prefactor)?;
        m.serialize_entry("poly", &self.poly)?;
        m.serialize_entry("gaussian", GAUSSIAN)?;
        m.serialize_entry("variables", VARIABLES)?;
        m.end()
    }
}

fn product_poly(l: usize, ab: &[(i64, i64)]) -> MultiPoly {
    ab.iter()
        .enumerate()
        .fold(MultiPoly::one(l), |acc, (j, &(a, b))| {
            acc.mul(&MultiPoly::from_uni(l, j, &pab2(a, b)))
        })
}

/// `P_μ(z) = ∏_j P_{a_j,b_j,2}(z_j)`
pub fn p_mu_product(mu: &HCParam, pair: DualPair) -> Result<MultiPoly> {
    pair.require_ordered()?;
    Ok(product_poly(pair.l, &ab_params(mu, pair)?))
}

/// `(b_{s₀,j}, a_{s₀,j})` with `a_{s₀,j} = −(s₀μ')_j − δ + 1`,
/// `b_{s₀,j} = (s₀μ')_j − δ + 1`, already swapped for the `U_{l'}` side.
pub fn ab_params_prime(mu_p: &HCParam, pair: DualPair) -> Result<Vec<(i64, i64)>> {
    let s = s0_apply(mu_p.entries(), pair)?;
    let d = delta_of(pair);
    let one = HalfInt::from_int(1);
    s[..pair.l]
        .iter()
        .map(|&m| {
            let a = (-m - d + one).to_integer().ok_or(Error::Parity)?;
            let b = (m - d + one).to_integer().ok_or(Error::Parity)?;
            Ok((b, a))
        })
        .collect()
}

/// `∏_j P_{b_{s₀,j}, a_{s₀,j}, 2}(z_j)`
pub fn p_mu_prime_product(mu_p: &HCParam, pair: DualPair) -> Result<MultiPoly> {
    Ok(product_poly(pair.l, &ab_params_prime(mu_p, pair)?))
}

/// Skew sum divided by the Vandermonde product.
pub fn invariant_poly(p: &MultiPoly) -> Result<MultiPoly> {
    divide_by_vandermonde(&skew_symmetrize(p))
}

/// `(2π)^{l(l−1)/2} i^{l(l−1)/2}` from `1/π_{g/h}` in the `z` variables.
fn root_factor(pair: DualPair) -> SymScalar {
    let n2 = pair.n_roots();
    SymScalar::two_pi_pow(n2) * SymScalar::i_pow(n2)
}

/// The distribution attached to `Π` with parameter `μ` on the `U_l` side.
/// Zero exactly when `Π` does not occur; wrong parity is an error.
pub fn distribution_g(mu: &HCParam, pair: DualPair) -> Result<DistributionData> {
    if occurrence_g(mu, pair)? == Reason::Parity {
        return Err(Error::Parity);
    }
    let poly = invariant_poly(&p_mu_product(mu, pair)?)?;
    if poly.is_zero() {
        return Ok(DistributionData::zero(pair.l));
    }
    let prefactor = constants(pair).c_bullet * central_character(mu) * root_factor(pair);
    Ok(DistributionData { prefactor, poly })
}

/// The distribution attached to `Π'` with parameter `μ'` on the `U_{l'}`
/// side, written on the same Cartan slice.
pub fn distribution_gprime(mu_p: &HCParam, pair: DualPair) -> Result<DistributionData> {
    match occurrence_gprime(mu_p, pair)? {
        Reason::Parity => return Err(Error::Parity),
        Reason::Occurs => {}
        _ => return Ok(DistributionData::zero(pair.l)),
    }
    let poly = invariant_poly(&p_mu_prime_product(mu_p, pair)?)?;
    let prefactor = constants(pair).c_bullet
        * central_character(mu_p)
        * mysterious_factor(mu_p, pair)?
        * root_factor(pair);
    Ok(DistributionData { prefactor, poly })
}

/// The scalar `c` with `T_Π = c · T_{Π'}`; fails unless the two invariant
/// polynomials are proportional.
pub fn proportionality(mu: &HCParam, mu_p: &HCParam, pair: DualPair) -> Result<SymScalar> {
    let g = distribution_g(mu, pair)?;
    let gp = distribution_gprime(mu_p, pair)?;
    if g.is_zero() || gp.is_zero() {
        return Err(Error::NotOccurring(
            "both distributions must be nonzero".into(),
        ));
    }
    let r = g.poly.ratio_to(&gp.poly).ok_or(Error::NotProportional)?;
    let ratio = g.prefactor.div(&gp.prefactor).expect("nonzero prefactor");
    Ok(ratio * SymScalar::from_rat(r))
}

/// Predicted modulus of [`proportionality`]: `(dim Π / dim Π') ∏ (l−j)!/(l'−j)!`.
pub fn predicted_ratio_modulus(mu: &HCParam, mu_p: &HCParam, pair: DualPair) -> Result<SymScalar> {
    Ok(mysterious_factor_from_dims(mu, mu_p, pair)?
        .inv()
        .expect("nonzero"))
}

fn fact_half(h: HalfInt) -> BigInt {
    factorial(
        h.to_integer()
            .and_then(|n| u64::try_from(n).ok())
            .expect("natural number"),
    )
}

fn require_occurs(mu: &HCParam, pair: DualPair) -> Result<()> {
    let r = occurrence_g(mu, pair)?;
    if !r.occurs() {
        return Err(Error::NotOccurring(format!("{mu:?} ({r:?})")));
    }
    Ok(())
}

/// `2^{ll'−l(l+1)/2} ∏_j (μ_j+δ−1)!/((l'−j)!(μ_j−δ)!) ∏_{j<k}(μ_j−μ_k)`
pub fn closed_bracket(mu: &HCParam, pair: DualPair) -> Result<Rat> {
    require_occurs(mu, pair)?;
    let (l, lp) = (pair.l as i64, pair.lp as i64);
    let d = delta_of(pair);
    let one = HalfInt::from_int(1);
    let e = mu.entries();
    let mut r = crate::pab::pow2(l * lp - l * (l + 1) / 2);
    for (j, &m) in e.iter().enumerate() {
        r *= Rat::new(
            fact_half(m + d - one),
            factorial((pair.lp - j - 1) as u64) * fact_half(m - d),
        );
    }
    for j in 0..e.len() {
        for k in j + 1..e.len() {
            r *= Rat::new(BigInt::from((e[j] - e[k]).doubled()), BigInt::from(2));
        }
    }
    Ok(r)
}

/// Modulus of the value at zero in closed form:
/// `C_• (2π)^{l(l−1)/2} l! · bracket / ∏_{k≤l} k!`.
pub fn value_at_zero_closed(mu: &HCParam, pair: DualPair) -> Result<SymScalar> {
    let bracket = closed_bracket(mu, pair)?;
    let w: BigInt = (1..=pair.l as u64).map(factorial).product();
    let k = Rat::new(factorial(pair.l as u64), w);
    Ok((constants(pair).c_bullet
        * SymScalar::two_pi_pow(pair.n_roots())
        * SymScalar::from_rat(bracket * k))
    .abs())
}

/// Value at zero via the operator `∂(π)` applied to the skew sum, without
/// dividing: `Q(0) = ∂(π)(Σ_s sgn(s) P_μ∘s)(0) / ∏_{k≤l} k!`.
pub fn value_at_zero_oracle(mu: &HCParam, pair: DualPair) -> Result<SymScalar> {
    require_occurs(mu, pair)?;
    let skew = skew_symmetrize(&p_mu_product(mu, pair)?);
    let w: BigInt = (1..=pair.l as u64).map(factorial).product();
    let q0 = vandermonde_operator_at_zero(&skew) / Rat::from_integer(w);
    let prefactor = constants(pair).c_bullet * central_character(mu) * root_factor(pair);
    Ok(prefactor * SymScalar::from_rat(q0))
}

/// `2 vol(U_l) dim Π'`
pub fn multiplicity_one_target(mu: &HCParam, pair: DualPair) -> Result<SymScalar> {
    let mu_p = correspond(mu, pair)?;
    Ok(SymScalar::from_int(2) * vol_u(pair.l) * SymScalar::from_int(dim_piprime(&mu_p, pair)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityOne {
    pub assembled: SymScalar,
    pub closed: SymScalar,
    pub oracle: SymScalar,
    pub target: SymScalar,
    pub holds: bool,
}

/// Compares the three evaluations of `|T(0)|` with `2 vol(U_l) dim Π'`.
pub fn multiplicity_one(mu: &HCParam, pair: DualPair) -> Result<MultiplicityOne> {
    require_occurs(mu, pair)?;
    let assembled = distribution_g(mu, pair)?.value_at_zero().abs();
    let closed = value_at_zero_closed(mu, pair)?;
    let oracle = value_at_zero_oracle(mu, pair)?.abs();
    let target = multiplicity_one_target(mu, pair)?;
    let holds = assembled == target && closed == target && oracle == target;
    Ok(MultiplicityOne {
        assembled,
        closed,
        oracle,
        target,
        holds,
    })
}

pub fn multiplicity_one_check(mu: &HCParam, pair: DualPair) -> Result<bool> {
    multiplicity_one(mu, pair).map(|m| m.holds)
}

/// `T_Π(w)` for an `l × l'` complex matrix.
pub fn eval_on_w(mu: &HCParam, pair: DualPair, w: &CMat) -> Result<f64> {
    require_occurs(mu, pair)?;
    if w.ncols() != pair.lp {
        return Err(Error::Dimension(format!(
            "matrix has {} columns, expected {}",
            w.ncols(),
            pair.lp
        )));
    }
    distribution_g(mu, pair)?.eval_on_w(w)
}

/// `true` iff the polynomial is fixed by every transposition.
pub fn is_invariant(d: &DistributionData) -> bool {
    d.poly.is_symmetric()
}
