use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hd_core::constants::vol_u;
use hd_core::exact::{factorial, rat, rat_int, HalfInt, Rat, SymScalar};
use hd_core::intertwine::{
    distribution_g, distribution_gprime, multiplicity_one, predicted_ratio_modulus,
    DistributionData,
};
use hd_core::pab::{
    mirror_shift_identity, mirror_shift_identity_inverse_power, pab2, pab2_via_laguerre,
    shift_identity,
};
use hd_core::par::Exec;
use hd_core::reps::{
    central_character, central_sign, correspond, correspond_back, delta_of, dim_piprime, dim_weyl,
    mysterious_factor, mysterious_factor_from_dims, occurring_params, occurs_g, occurs_gprime,
    pairs_up_to, DualPair, HCParam,
};
use hd_core::verify::{
    cayley_invariance_check, cayley_volume_check, cw_identity_check, dan_determinant,
    distribution_invariance, forrester_warnaar_check, gaussian_vandermonde, vandermonde_identity,
};

const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn bound() -> HalfInt {
    HalfInt::from_doubled(13)
}

fn occurring_cases() -> Vec<(DualPair, HCParam)> {
    pairs_up_to(3, 5)
        .into_iter()
        .flat_map(|p| {
            occurring_params(p, bound())
                .unwrap()
                .into_iter()
                .map(move |m| (p, m))
        })
        .collect()
}

/// Parity-correct, dominant parameters with `|μ_j| ≤ 13/2` that do not occur.
fn non_occurring_cases() -> Vec<(DualPair, HCParam)> {
    let mut out = Vec::new();
    for p in pairs_up_to(3, 5) {
        let d = delta_of(p);
        let values: Vec<HalfInt> = (-14..=14)
            .map(HalfInt::from_doubled)
            .filter(|v| v.same_class(d) && v.doubled().abs() <= 13)
            .rev()
            .collect();
        for c in values.into_iter().combinations(p.l) {
            let m = HCParam::new(c).unwrap();
            if !occurs_g(&m, p).unwrap() {
                out.push((p, m));
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let mut deriv = 0;
    for a in -8..=8 {
        for b in 0..=8 {
            if pab2(a, b).derivative() != pab2(a, b - 1) {
                return outcome(false, format!("derivative identity fails at ({a}, {b})"));
            }
            deriv += 1;
        }
    }
    let (mut shift, mut mirror, mut inverse_power_fails) = (0, 0, 0);
    for a in -8..=8 {
        for b in -8..=8 {
            for c in 0..=8 {
                if let Some((lhs, rhs)) = shift_identity(a, b, c) {
                    if lhs != rhs {
                        return outcome(false, format!("shift identity fails at ({a}, {b}, {c})"));
                    }
                    shift += 1;
                }
                if let Some((lhs, rhs)) = mirror_shift_identity(a, b, c) {
                    if lhs != rhs {
                        return outcome(false, format!("mirror identity fails at ({a}, {b}, {c})"));
                    }
                    mirror += 1;
                }
                if let Some((lhs, rhs)) = mirror_shift_identity_inverse_power(a, b, c) {
                    if lhs != rhs {
                        inverse_power_fails += 1;
                    }
                }
            }
        }
    }
    let mut max_err = 0.0f64;
    for b in 1..=6 {
        for a in -6..=0 {
            let p = pab2(a, b);
            for k in -50..=50 {
                let xi = k as f64 / 10.0;
                max_err = max_err.max((p.eval_f64(xi) - pab2_via_laguerre(a, b, xi)).abs());
            }
        }
    }
    outcome(
        max_err < 1e-9 && shift > 0 && mirror > 0,
        format!(
            "derivative {deriv} cases, shift {shift}, mirror {mirror} exact (constant 2^c (a+c-1)!/(a-1)!; \
             the 2^-c variant fails on {inverse_power_fails}), Laguerre max err {max_err:.1e}"
        ),
    )
}

fn criterion_2(cases: &[(DualPair, HCParam)]) -> Outcome {
    for (p, m) in cases {
        let mp = match correspond(m, *p) {
            Ok(x) => x,
            Err(e) => return outcome(false, format!("{p:?} {m:?}: {e}")),
        };
        let ok = occurs_gprime(&mp, *p).unwrap()
            && correspond_back(&mp, *p).unwrap() == *m
            && dim_piprime(&mp, *p).unwrap() == dim_weyl(&mp)
            && mysterious_factor(&mp, *p).unwrap()
                == mysterious_factor_from_dims(m, &mp, *p).unwrap();
        if !ok {
            return outcome(false, format!("fails at {p:?} {m:?}"));
        }
    }
    outcome(
        true,
        format!(
            "{} occurring parameters, l <= 3, l' <= 5, |mu_j| <= 13/2",
            cases.len()
        ),
    )
}

type Row = (HCParam, DistributionData, DistributionData);

fn criterion_3(cases: &[(DualPair, HCParam)]) -> Outcome {
    let mut by_pair: Vec<(DualPair, Vec<Row>)> = Vec::new();
    for (p, m) in cases {
        let g = match distribution_g(m, *p) {
            Ok(d) => d,
            Err(e) => return outcome(false, format!("{p:?} {m:?}: {e}")),
        };
        if g.is_zero() || !g.poly.is_symmetric() {
            return outcome(
                false,
                format!("{p:?} {m:?}: zero or non-symmetric quotient"),
            );
        }
        let mp = correspond(m, *p).unwrap();
        let gp = distribution_gprime(&mp, *p).unwrap();
        if gp.is_zero() || !gp.poly.is_symmetric() {
            return outcome(
                false,
                format!("{p:?} {mp:?}: zero or non-symmetric quotient"),
            );
        }
        match by_pair.last_mut() {
            Some((q, v)) if q == p => v.push((m.clone(), g, gp)),
            _ => by_pair.push((*p, vec![(m.clone(), g, gp)])),
        }
    }
    let non = non_occurring_cases();
    for (p, m) in &non {
        if !distribution_g(m, *p).unwrap().is_zero() {
            return outcome(
                false,
                format!("{p:?} {m:?}: nonzero for a non-occurring parameter"),
            );
        }
    }
    let (mut matched, mut crossed) = (0usize, 0usize);
    for (p, v) in &by_pair {
        for (m, g, _) in v {
            for (m2, _, gp) in v {
                let r = g.poly.ratio_to(&gp.poly);
                if m == m2 {
                    let Some(r) = r else {
                        return outcome(false, format!("{p:?} {m:?}: not proportional"));
                    };
                    let ratio = g.prefactor.div(&gp.prefactor).unwrap() * SymScalar::from_rat(r);
                    let mp = correspond(m, *p).unwrap();
                    if ratio.abs() != predicted_ratio_modulus(m, &mp, *p).unwrap() {
                        return outcome(false, format!("{p:?} {m:?}: ratio modulus {ratio}"));
                    }
                    matched += 1;
                } else if r.is_some() {
                    return outcome(
                        false,
                        format!("{p:?}: {m:?} proportional to image of {m2:?}"),
                    );
                } else {
                    crossed += 1;
                }
            }
        }
    }
    outcome(
        true,
        format!(
            "{} quotients exact and symmetric, {} non-occurring give zero, {matched} matched pairs \
             proportional with predicted modulus, {crossed} mismatched pairs not proportional",
            cases.len(),
            non.len()
        ),
    )
}

fn criterion_4(cases: &[(DualPair, HCParam)]) -> Outcome {
    let (mut signs, mut conjugate) = (0, 0);
    for (p, m) in cases {
        match multiplicity_one(m, *p) {
            Ok(r) if r.holds => {}
            Ok(r) => return outcome(false, format!("{p:?} {m:?}: {r:?}")),
            Err(e) => return outcome(false, format!("{p:?} {m:?}: {e}")),
        }
        let mp = correspond(m, *p).unwrap();
        match (central_sign(m), central_sign(&mp)) {
            (Ok(a), Ok(b)) if a == b => signs += 1,
            (Err(_), Err(_))
                if central_character(m) * central_character(&mp) == SymScalar::one() =>
            {
                conjugate += 1
            }
            _ => return outcome(false, format!("{p:?} {m:?}: central characters differ")),
        }
    }
    let p = DualPair::new(1, 2).unwrap();
    let spot = multiplicity_one(&HCParam::new(vec![HalfInt::from_int(2)]).unwrap(), p).unwrap();
    let eight_pi = SymScalar::from_int(8) * SymScalar::pi_pow(1);
    let ok = spot.holds && spot.target == eight_pi;
    outcome(
        ok,
        format!(
            "assembled = closed form = operator oracle = 2 vol(U_l) dim Pi' on {} parameters; \
             central signs agree on {signs}, characters conjugate on {conjugate} half-integral sums; \
             (1,2), mu=(2): {}",
            cases.len(),
            spot.assembled
        ),
    )
}

fn criterion_5() -> Outcome {
    let v1 = vol_u(1) == SymScalar::two_pi_pow(1);
    let v2 = vol_u(2) == SymScalar::from_int(8) * SymScalar::pi_pow(3);
    let mut detail = format!("vol(U_1) = {}, vol(U_2) = {}", vol_u(1), vol_u(2));
    let mut ok = v1 && v2;
    for (l, lp) in [(1, 1), (1, 2), (2, 2)] {
        let r = cw_identity_check(DualPair::new(l, lp).unwrap()).unwrap();
        ok &= r.holds;
        detail.push_str(&format!("; C_W ({l},{lp}): {} = {}", r.lhs, r.rhs));
    }
    outcome(ok, detail)
}

fn criterion_6() -> Outcome {
    let fw1 = forrester_warnaar_check(1);
    let fw2 = forrester_warnaar_check(2);
    let cv1 = cayley_volume_check(1, 0, SEED, Exec::Parallel);
    let cv2 = cayley_volume_check(2, 1_000_000, SEED, Exec::Parallel);
    let mut ok = (fw1.estimate - std::f64::consts::PI).abs() < 1e-12
        && fw2.rel_error < 1e-4
        && cv1.rel_error < 1e-6
        && cv2.rel_error < 0.02;
    let mut worst = (0.0f64, String::new());
    for l in 1..=3 {
        for c in 0..=3 {
            let (exact, mc) = gaussian_vandermonde(l, c, 1_000_000, SEED, Exec::Parallel);
            ok &= mc.rel_error < 0.01 && BigInt::from(mc.target as i64) == exact;
            if mc.rel_error >= worst.0 {
                worst = (mc.rel_error, mc.name.clone());
            }
        }
    }
    outcome(
        ok,
        format!(
            "FW n=1 {:.3e}, n=2 rel {:.1e}; Cayley n=1 rel {:.1e}, n=2 rel {:.2e} ({} samples); \
             gaussian Vandermonde worst rel {:.2e} ({})",
            fw1.estimate,
            fw2.rel_error,
            cv1.rel_error,
            cv2.rel_error,
            cv2.samples,
            worst.0,
            worst.1
        ),
    )
}

fn criterion_7(cases: &[(DualPair, HCParam)]) -> Outcome {
    let mut worst = 0.0f64;
    let mut n = 0;
    for (i, (p, m)) in cases.iter().filter(|(p, _)| p.l <= 2).enumerate() {
        let d = distribution_invariance(m, *p, 100, SEED + i as u64, Exec::Parallel).unwrap();
        worst = worst.max(d);
        n += 1;
    }
    outcome(
        worst < 1e-9,
        format!("{n} parameters x 100 trials, max relative deviation {worst:.2e}"),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 2..=6 {
        let expect = Rat::from_integer((1..n as u64).map(factorial).product());
        for _ in 0..20 {
            let a = rat(rng.random_range(-1000..1000), rng.random_range(1..1000));
            if dan_determinant(&a, n) != expect {
                return outcome(false, format!("D({a}, {n}) != {expect}"));
            }
        }
    }
    for m in 1..=5usize {
        let sign = rat_int(if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 });
        for _ in 0..100 {
            let z: Vec<Rat> = (0..m)
                .map(|_| rat(rng.random_range(-500..500), rng.random_range(1..50)))
                .collect();
            let (lhs, rhs) = vandermonde_identity(&z);
            if lhs != &rhs * &sign {
                return outcome(false, format!("m = {m}: {lhs} vs {rhs}"));
            }
        }
    }
    outcome(
        true,
        "D(a,n) = prod_{k<n} k! for 20 random a, n <= 6; lhs = (-1)^{m(m-1)/2} rhs exactly, m <= 5, 100 vectors each",
    )
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=3 {
        let r = cayley_invariance_check(n, 50, SEED + n as u64).unwrap();
        ok &= r.invariance < 1e-10 && r.involution < 1e-12 && r.inverse < 1e-12;
        detail.push(format!(
            "n={n}: density {:.1e}, c(c(x)) {:.1e}, c(-x) {:.1e}",
            r.invariance, r.involution, r.inverse
        ));
    }
    outcome(ok, detail.join("; "))
}

fn run(name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let el = t.elapsed();
    let in_time = limit.is_none_or(|l| el <= l);
    let pass = o.pass && in_time;
    let limit_s = limit
        .map(|l| format!(" / {}s", l.as_secs()))
        .unwrap_or_default();
    println!(
        "[{}] {name} ({:.2}s{limit_s}): {}",
        if pass { "PASS" } else { "FAIL" },
        el.as_secs_f64(),
        o.detail
    );
    pass
}

fn main() -> ExitCode {
    let cases = occurring_cases();
    let secs = Duration::from_secs;
    let results = [
        run("1 polynomial identities", Some(secs(5)), criterion_1),
        run("2 correspondence", Some(secs(10)), || criterion_2(&cases)),
        run("3 distributions", Some(secs(60)), || criterion_3(&cases)),
        run("4 multiplicity one", Some(secs(60)), || criterion_4(&cases)),
        run("5 constant chain", None, criterion_5),
        run("6 numeric integrals", Some(secs(120)), criterion_6),
        run("7 invariance", None, || criterion_7(&cases)),
        run("8 Vandermonde determinants", None, criterion_8),
        run("9 Cayley transform", None, criterion_9),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
