//! Named groups of checks with a uniform pass/fail record, as run by the
//! `verify` command.

use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constants::{c_bullet_closed, constants, vol_u};
use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rat_int, HalfInt, Rat, SymScalar};
use crate::intertwine::{
    distribution_g, distribution_gprime, multiplicity_one, predicted_ratio_modulus,
};
use crate::pab::{mirror_shift_identity, pab2, pab2_via_laguerre, shift_identity};
use crate::par::{self, Exec};
use crate::reps::{
    central_character, central_sign, correspond, correspond_back, delta_of, dim_piprime, dim_weyl,
    mysterious_factor, mysterious_factor_from_dims, occurring_params, occurs_g, occurs_gprime,
    pairs_up_to, DualPair, HCParam,
};
use crate::verify::{
    cayley_invariance_check, cayley_volume_check, cw_identity_check, dan_determinant,
    distribution_invariance, forrester_warnaar_check, gaussian_vandermonde, haar_moment,
    vandermonde_identity, McReport,
};

/// Largest `l` and `l'` of the exhaustive parameter sweep.
pub const SWEEP_PAIRS: (usize, usize) = (3, 5);

/// `|μ_j| ≤ 13/2` in the exhaustive sweep.
pub const SWEEP_BOUND_DOUBLED: i64 = 13;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Polynomials,
    Correspondence,
    Distributions,
    Multiplicity,
    Constants,
    Integrals,
    Invariance,
    Determinants,
    Cayley,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "all",
        "polynomials",
        "correspondence",
        "distributions",
        "multiplicity",
        "constants",
        "integrals",
        "invariance",
        "determinants",
        "cayley",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "polynomials" => Suite::Polynomials,
            "correspondence" => Suite::Correspondence,
            "distributions" => Suite::Distributions,
            "multiplicity" => Suite::Multiplicity,
            "constants" => Suite::Constants,
            "integrals" => Suite::Integrals,
            "invariance" => Suite::Invariance,
            "determinants" => Suite::Determinants,
            "cayley" => Suite::Cayley,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// One check. Numeric checks carry their [`McReport`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub report: Option<McReport>,
}

impl Check {
    fn exact(name: &str, pass: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: Some(detail),
            report: None,
        }
    }

    fn numeric(report: McReport, tol: f64) -> Self {
        Check {
            name: report.name.clone(),
            pass: report.rel_error < tol,
            detail: None,
            report: Some(report),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub suite: String,
    pub seed: u64,
    pub samples: u64,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub seed: u64,
    pub samples: u64,
    pub exec: Exec,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 42,
            samples: 1_000_000,
            exec: Exec::Parallel,
        }
    }
}

pub fn run(suite: Suite, name: &str, s: Settings) -> Result<SuiteResult> {
    let mut checks = Vec::new();
    let want = |x: Suite| suite == Suite::All || suite == x;
    let cases = if [
        Suite::Correspondence,
        Suite::Distributions,
        Suite::Multiplicity,
        Suite::Invariance,
    ]
    .into_iter()
    .any(want)
    {
        sweep_cases()?
    } else {
        Vec::new()
    };
    if want(Suite::Polynomials) {
        checks.extend(polynomials());
    }
    if want(Suite::Correspondence) {
        checks.push(correspondence(&cases, s.exec)?);
    }
    if want(Suite::Distributions) {
        checks.extend(distributions(&cases)?);
    }
    if want(Suite::Multiplicity) {
        checks.extend(multiplicity(&cases, s.exec)?);
    }
    if want(Suite::Constants) {
        checks.extend(constant_chain()?);
    }
    if want(Suite::Integrals) {
        checks.extend(integrals(s));
    }
    if want(Suite::Invariance) {
        checks.push(invariance(&cases, s)?);
    }
    if want(Suite::Determinants) {
        checks.extend(determinants(s.seed));
    }
    if want(Suite::Cayley) {
        checks.extend(cayley(s.seed)?);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    Ok(SuiteResult {
        checks,
        summary: Summary {
            suite: name.into(),
            seed: s.seed,
            samples: s.samples,
            passed,
            failed,
            pass: failed == 0,
        },
    })
}

/// Every occurring `μ` with `l ≤ 3`, `l' ≤ 5`, `|μ_j| ≤ 13/2`.
pub fn sweep_cases() -> Result<Vec<(DualPair, HCParam)>> {
    let bound = HalfInt::from_doubled(SWEEP_BOUND_DOUBLED);
    let mut out = Vec::new();
    for p in pairs_up_to(SWEEP_PAIRS.0, SWEEP_PAIRS.1) {
        out.extend(occurring_params(p, bound)?.into_iter().map(|m| (p, m)));
    }
    Ok(out)
}

/// Dominant parameters of the right parity within the sweep bound that do not occur.
pub fn non_occurring_cases() -> Result<Vec<(DualPair, HCParam)>> {
    let mut out = Vec::new();
    for p in pairs_up_to(SWEEP_PAIRS.0, SWEEP_PAIRS.1) {
        let d = delta_of(p);
        let values: Vec<HalfInt> = (-SWEEP_BOUND_DOUBLED..=SWEEP_BOUND_DOUBLED)
            .rev()
            .map(HalfInt::from_doubled)
            .filter(|v| v.same_class(d))
            .collect();
        for c in values.into_iter().combinations(p.l) {
            let m = HCParam::new(c)?;
            if !occurs_g(&m, p)? {
                out.push((p, m));
            }
        }
    }
    Ok(out)
}

fn polynomials() -> Vec<Check> {
    let mut out = Vec::new();
    let derivative = (-8..=8)
        .cartesian_product(0..=8)
        .all(|(a, b)| pab2(a, b).derivative() == pab2(a, b - 1));
    out.push(Check::exact(
        "pab_derivative",
        derivative,
        "a in [-8,8], b in [0,8]".into(),
    ));
    let (mut shift, mut mirror, mut ok_shift, mut ok_mirror) = (0, 0, true, true);
    for a in -8..=8 {
        for b in -8..=8 {
            for c in 0..=8 {
                if let Some((l, r)) = shift_identity(a, b, c) {
                    shift += 1;
                    ok_shift &= l == r;
                }
                if let Some((l, r)) = mirror_shift_identity(a, b, c) {
                    mirror += 1;
                    ok_mirror &= l == r;
                }
            }
        }
    }
    out.push(Check::exact(
        "pab_shift",
        ok_shift && shift > 0,
        format!("{shift} admissible triples"),
    ));
    out.push(Check::exact(
        "pab_mirror_shift",
        ok_mirror && mirror > 0,
        format!("{mirror} admissible triples"),
    ));
    let mut err = 0.0f64;
    for b in 1..=6 {
        for a in -6..=0 {
            let p = pab2(a, b);
            for k in -50..=50 {
                let xi = k as f64 / 10.0;
                err = err.max((p.eval_f64(xi) - pab2_via_laguerre(a, b, xi)).abs());
            }
        }
    }
    out.push(Check::exact(
        "pab_laguerre",
        err < 1e-9,
        format!("max error {err:.3e}"),
    ));
    out
}

fn correspondence(cases: &[(DualPair, HCParam)], exec: Exec) -> Result<Check> {
    let ok = par::map(exec, cases, |(p, m)| -> Result<bool> {
        let mp = correspond(m, *p)?;
        Ok(occurs_gprime(&mp, *p)?
            && correspond_back(&mp, *p)? == *m
            && dim_piprime(&mp, *p)? == dim_weyl(&mp)
            && mysterious_factor(&mp, *p)? == mysterious_factor_from_dims(m, &mp, *p)?)
    })
    .into_iter()
    .collect::<Result<Vec<bool>>>()?;
    let failed = ok.iter().filter(|&&b| !b).count();
    Ok(Check::exact(
        "correspondence",
        failed == 0,
        format!("{} parameters, {failed} failures", cases.len()),
    ))
}

fn distributions(cases: &[(DualPair, HCParam)]) -> Result<Vec<Check>> {
    let mut quotients = true;
    let mut proportional = true;
    for (p, m) in cases {
        let g = distribution_g(m, *p)?;
        let mp = correspond(m, *p)?;
        let gp = distribution_gprime(&mp, *p)?;
        quotients &=
            !g.is_zero() && g.poly.is_symmetric() && !gp.is_zero() && gp.poly.is_symmetric();
        proportional &= match g.poly.ratio_to(&gp.poly) {
            Some(r) => {
                let ratio =
                    g.prefactor.div(&gp.prefactor).expect("nonzero") * SymScalar::from_rat(r);
                ratio.abs() == predicted_ratio_modulus(m, &mp, *p)?
            }
            None => false,
        };
    }
    let non = non_occurring_cases()?;
    let mut zero = true;
    for (p, m) in &non {
        zero &= distribution_g(m, *p)?.is_zero();
    }
    Ok(vec![
        Check::exact(
            "invariant_quotients",
            quotients,
            format!("{} parameters", cases.len()),
        ),
        Check::exact(
            "vanishing_iff_not_occurring",
            zero,
            format!("{} non-occurring parameters", non.len()),
        ),
        Check::exact(
            "proportionality",
            proportional,
            format!("{} corresponding pairs", cases.len()),
        ),
    ])
}

fn multiplicity(cases: &[(DualPair, HCParam)], exec: Exec) -> Result<Vec<Check>> {
    let rows = par::map(exec, cases, |(p, m)| -> Result<(bool, bool)> {
        let holds = multiplicity_one(m, *p)?.holds;
        let mp = correspond(m, *p)?;
        let central = match (central_sign(m), central_sign(&mp)) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => central_character(m) * central_character(&mp) == SymScalar::one(),
            _ => false,
        };
        Ok((holds, central))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Check::exact(
            "multiplicity_one",
            rows.iter().all(|r| r.0),
            format!(
                "{} parameters, three evaluations of the value at zero",
                cases.len()
            ),
        ),
        Check::exact(
            "central_characters",
            rows.iter().all(|r| r.1),
            format!("{} parameters", cases.len()),
        ),
    ])
}

fn constant_chain() -> Result<Vec<Check>> {
    let mut out = vec![
        Check::exact(
            "vol_u1",
            vol_u(1) == SymScalar::two_pi_pow(1),
            vol_u(1).to_string(),
        ),
        Check::exact(
            "vol_u2",
            vol_u(2) == SymScalar::from_int(8) * SymScalar::pi_pow(3),
            vol_u(2).to_string(),
        ),
    ];
    for p in pairs_up_to(3, 4) {
        let r = cw_identity_check(p)?;
        out.push(Check::exact(
            &format!("c_w_{}_{}", p.l, p.lp),
            r.holds,
            format!("{} = {}", r.lhs, r.rhs),
        ));
    }
    let chain = pairs_up_to(4, 6)
        .into_iter()
        .all(|p| constants(p).c_bullet == c_bullet_closed(p));
    out.push(Check::exact(
        "c_bullet_closed_form",
        chain,
        "l <= 4, l' <= 6".into(),
    ));
    Ok(out)
}

fn integrals(s: Settings) -> Vec<Check> {
    let mut out = vec![
        Check::numeric(forrester_warnaar_check(1), 1e-12),
        Check::numeric(forrester_warnaar_check(2), 1e-4),
        Check::numeric(cayley_volume_check(1, 0, s.seed, s.exec), 1e-6),
        Check::numeric(cayley_volume_check(2, s.samples, s.seed, s.exec), 0.02),
    ];
    for l in 1..=3 {
        for c in 0..=3 {
            let (exact, mc) = gaussian_vandermonde(l, c, s.samples, s.seed, s.exec);
            let mut check = Check::numeric(mc, 0.01);
            check.pass &=
                BigInt::from(check.report.as_ref().map_or(0.0, |r| r.target) as i64) == exact;
            out.push(check);
        }
    }
    let mut haar = Check::numeric(
        haar_moment(3, (s.samples / 10).max(1000) as usize, s.seed, s.exec),
        1.0,
    );
    haar.pass = haar.report.as_ref().is_some_and(|r| r.within_sigma(5.0));
    out.push(haar);
    out
}

fn invariance(cases: &[(DualPair, HCParam)], s: Settings) -> Result<Check> {
    let mut worst = 0.0f64;
    let mut n = 0;
    for (i, (p, m)) in cases.iter().filter(|(p, _)| p.l <= 2).enumerate() {
        worst = worst.max(distribution_invariance(
            m,
            *p,
            100,
            s.seed + i as u64,
            s.exec,
        )?);
        n += 1;
    }
    Ok(Check::exact(
        "distribution_invariance",
        worst < 1e-9,
        format!("{n} parameters, max relative deviation {worst:.3e}"),
    ))
}

fn determinants(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dan = true;
    for n in 2..=6 {
        let expect = Rat::from_integer((1..n as u64).map(factorial).product());
        for _ in 0..20 {
            let a = rat(rng.random_range(-1000..1000), rng.random_range(1..1000));
            dan &= dan_determinant(&a, n) == expect;
        }
    }
    let mut vdm = true;
    for m in 1..=5usize {
        let sign = rat_int(if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 });
        for _ in 0..100 {
            let z: Vec<Rat> = (0..m)
                .map(|_| rat(rng.random_range(-500..500), rng.random_range(1..50)))
                .collect();
            let (lhs, rhs) = vandermonde_identity(&z);
            vdm &= lhs == &rhs * &sign;
        }
    }
    vec![
        Check::exact(
            "rising_factorial_determinant",
            dan,
            "n <= 6, 20 random rationals each".into(),
        ),
        Check::exact(
            "vandermonde_sign",
            vdm,
            "m <= 5, 100 random vectors each".into(),
        ),
    ]
}

fn cayley(seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let r = cayley_invariance_check(n, 50, seed + n as u64)?;
        out.push(Check::exact(
            &format!("cayley_u{n}"),
            r.invariance < 1e-10 && r.involution < 1e-12 && r.inverse < 1e-12,
            format!(
                "density {:.2e}, involution {:.2e}, inverse {:.2e}, composition {:.2e}",
                r.invariance, r.involution, r.inverse, r.composition
            ),
        ));
    }
    Ok(out)
}
