//! Independent numeric and combinatorial checks of the integrals and
//! identities behind the constants.

use std::f64::consts::{FRAC_PI_2, PI};
use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use serde::Serialize;

use crate::constants::{c_h1, constants, vol_s_h1, vol_u};
use crate::error::Result;
use crate::exact::{factorial, rat_int, rat_to_f64, rising_rat, Rat, SymScalar};
use crate::intertwine::distribution_g;
use crate::linalg::{cayley, cayley_jacobian, ch, identity, max_abs_diff, u_element, CMat};
use crate::par::{self, Exec};
use crate::poly::permutations;
use crate::reps::{DualPair, HCParam};
use crate::rng::stream;

/// Samples drawn per independent stream.
pub const CHUNK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McReport {
    pub name: String,
    pub estimate: f64,
    pub target: f64,
    pub rel_error: f64,
    /// Standard error of the estimate; zero for deterministic quadrature.
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McReport {
    pub fn new(
        name: &str,
        estimate: f64,
        target: f64,
        std_error: f64,
        samples: u64,
        seed: u64,
    ) -> Self {
        McReport {
            name: name.into(),
            estimate,
            target,
            rel_error: (estimate - target).abs() / target.abs(),
            std_error,
            samples,
            seed,
        }
    }

    /// Relative error within `k` standard errors.
    pub fn within_sigma(&self, k: f64) -> bool {
        (self.estimate - self.target).abs() <= k * self.std_error
    }
}

/// Doubling the sample count must not make the error grow beyond `3σ` of the
/// larger run.
pub fn doubling_consistent(small: &McReport, large: &McReport) -> bool {
    large.rel_error <= small.rel_error + 3.0 * large.std_error / large.target.abs()
}

#[derive(Clone, Copy, Default)]
struct Moments {
    n: u64,
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        self.sum += x;
        self.sum_sq += x * x;
    }

    fn merge(self, o: Moments) -> Moments {
        Moments {
            n: self.n + o.n,
            sum: self.sum + o.sum,
            sum_sq: self.sum_sq + o.sum_sq,
        }
    }

    fn mean(&self) -> f64 {
        self.sum / self.n as f64
    }

    fn var(&self) -> f64 {
        let m = self.mean();
        (self.sum_sq / self.n as f64 - m * m).max(0.0) * self.n as f64
            / (self.n as f64 - 1.0).max(1.0)
    }
}

fn complex_gaussian<R: Rng>(rng: &mut R, scale: f64) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * (scale * std::f64::consts::FRAC_1_SQRT_2)
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of `diag(R)` moved into `Q`.
pub fn haar_unitary<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let z = CMat::from_fn(n, n, |_, _| complex_gaussian(rng, 1.0));
    let qr = z.qr();
    let (q, r) = (qr.q(), qr.r());
    let d = CMat::from_diagonal(&nalgebra::DVector::from_fn(n, |i, _| {
        let x = r[(i, i)];
        if x.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x / x.norm()
        }
    }));
    q * d
}

/// `max ‖U U^* − I‖` and `max ||det U| − 1|` over `draws` samples.
pub fn haar_unitarity(n: usize, draws: usize, seed: u64) -> (f64, f64) {
    let mut rng = stream(seed, 0);
    let mut worst = (0.0f64, 0.0f64);
    for _ in 0..draws {
        let u = haar_unitary(n, &mut rng);
        worst.0 = worst.0.max(max_abs_diff(&(&u * u.adjoint()), &identity(n)));
        worst.1 = worst.1.max((u.determinant().norm() - 1.0).abs());
    }
    worst
}

/// Mean of `|U_11|^2`, which is `1/n` for Haar measure.
pub fn haar_moment(n: usize, draws: usize, seed: u64, exec: Exec) -> McReport {
    let chunks = draws.div_ceil(CHUNK);
    let m = par::map_fold(
        exec,
        chunks,
        |c| {
            let mut rng = stream(seed, c as u64);
            let mut m = Moments::default();
            for _ in 0..CHUNK.min(draws - c * CHUNK) {
                m.push(haar_unitary(n, &mut rng)[(0, 0)].norm_sqr());
            }
            m
        },
        Moments::default(),
        Moments::merge,
    );
    McReport::new(
        "haar_moment",
        m.mean(),
        1.0 / n as f64,
        (m.var() / m.n as f64).sqrt(),
        m.n,
        seed,
    )
}

fn gauss_legendre(deg: usize) -> GaussLegendre {
    GaussLegendre::new(NonZeroUsize::new(deg).expect("positive degree"))
}

/// Integrand of the Cayley volume after `t_k = tan θ_k`:
/// `2^{n²} ch(x)^{−2n} ∏ sec² θ_k`.
fn cayley_volume_integrand(n: usize, theta: &[f64]) -> f64 {
    let t: Vec<f64> = theta.iter().map(|x| x.tan()).collect();
    let x = u_element(n, &t);
    let jac: f64 = theta.iter().map(|x| 1.0 / x.cos().powi(2)).product();
    2f64.powi((n * n) as i32) * ch(&x).powi(-2 * n as i32) * jac
}

/// Radial tail exponent of the `n = 2` proposal, `p(x) ~ |x|^{−4−ν}`.
const CAYLEY_NU: f64 = 0.5;

/// `∫_{u_n} 2^{n²} ch(x)^{−2n} dx` against `vol(U_n)`. For `n = 1` Gauss–Legendre
/// after `x = tan θ`. For `n = 2` Monte Carlo with `x = rω`, `ω` uniform on `S³`
/// and `P(|x| ≤ r) = 1 − (1+r⁴)^{−ν/4}`, stratified in the radial variable.
pub fn cayley_volume_check(n: usize, samples: u64, seed: u64, exec: Exec) -> McReport {
    let target = vol_u(n).modulus_f64();
    match n {
        1 => {
            let est = gauss_legendre(64)
                .integrate(-FRAC_PI_2, FRAC_PI_2, |t| cayley_volume_integrand(1, &[t]));
            McReport::new("cayley_volume_n1", est, target, 0.0, 64, seed)
        }
        2 => {
            let strata = 256usize;
            let per = (samples as usize).div_ceil(strata).max(2);
            let nu = CAYLEY_NU;
            let sphere = 2.0 * PI * PI;
            let parts = par::map_range(exec, strata, |s| {
                let mut rng = stream(seed, s as u64);
                let mut m = Moments::default();
                for _ in 0..per {
                    let u = (s as f64 + rng.random::<f64>()) / strata as f64;
                    let r4 = (1.0 - u).powf(-4.0 / nu) - 1.0;
                    let r = r4.powf(0.25);
                    let g: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
                    let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
                    let t: Vec<f64> = g.iter().map(|v| r * v / norm).collect();
                    let density = nu * (1.0 + r4).powf(-nu / 4.0 - 1.0) / sphere;
                    m.push(16.0 * ch(&u_element(2, &t)).powi(-4) / density);
                }
                (
                    m.mean() / strata as f64,
                    m.var() / (strata * strata * per) as f64,
                )
            });
            let (est, var) = parts
                .into_iter()
                .fold((0.0, 0.0), |a, b| (a.0 + b.0, a.1 + b.1));
            McReport::new(
                "cayley_volume_n2",
                est,
                target,
                var.sqrt(),
                (per * strata) as u64,
                seed,
            )
        }
        _ => panic!("cayley_volume_check supports n = 1, 2"),
    }
}

/// `∫_{R^n} ∏(1+y_j²)^{−n} ∏_{j<k}(y_j−y_k)² dy` against
/// `(2π)^n 2^{−n²} n!`, by tensor Gauss–Legendre after `y = tan θ`.
pub fn forrester_warnaar_check(n: usize) -> McReport {
    let target = (2.0 * PI).powi(n as i32)
        * 2f64.powi(-((n * n) as i32))
        * factorial(n as u64).to_f64().expect("small");
    let deg = 48;
    let gl = gauss_legendre(deg);
    let f = |theta: &[f64]| -> f64 {
        let y: Vec<f64> = theta.iter().map(|t| t.tan()).collect();
        let mut v = 1.0;
        for j in 0..n {
            for k in j + 1..n {
                v *= (y[j] - y[k]).powi(2);
            }
        }
        let w: f64 = theta
            .iter()
            .map(|t| t.cos().powi(2 * n as i32 - 2))
            .product();
        v * w
    };
    let est = match n {
        1 => gl.integrate(-FRAC_PI_2, FRAC_PI_2, |a| f(&[a])),
        2 => gl.integrate(-FRAC_PI_2, FRAC_PI_2, |a| {
            gl.integrate(-FRAC_PI_2, FRAC_PI_2, |b| f(&[a, b]))
        }),
        _ => panic!("forrester_warnaar_check supports n = 1, 2"),
    };
    McReport::new(
        &format!("forrester_warnaar_n{n}"),
        est,
        target,
        0.0,
        (deg.pow(n as u32)) as u64,
        0,
    )
}

/// Exact determinant over `Q` by Gaussian elimination.
pub fn det_rat(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// `l! det[(j+k+c−2)!]_{j,k=1..l}`, the value of
/// `∫_{R_+^l} ∏ y_j^c ∏_{j<k}(y_j−y_k)² e^{−Σy} dy`.
pub fn gaussian_vandermonde_exact(l: usize, c: usize) -> BigInt {
    let m = (0..l)
        .map(|j| {
            (0..l)
                .map(|k| Rat::from_integer(factorial((j + k + c) as u64)))
                .collect()
        })
        .collect();
    let d = det_rat(m) * Rat::from_integer(factorial(l as u64));
    assert!(d.is_integer());
    d.to_integer()
}

/// The same integral as `Σ_{s,t} sgn(st) ∏_j (s(j)+t(j)+c−2)!`.
pub fn gaussian_vandermonde_double_sum(l: usize, c: usize) -> BigInt {
    let perms = permutations(l);
    let mut total = BigInt::zero();
    for (s, ss) in &perms {
        for (t, st) in &perms {
            let p: BigInt = (0..l)
                .map(|j| factorial((s[j] + t[j] + c) as u64))
                .product();
            total += p * (ss * st);
        }
    }
    total
}

/// Monte Carlo estimate of the same integral with `y_j ~ Gamma(c+1, θ)`,
/// `θ = (c+2l−1)/(c+1)`, reweighted to the target density.
pub fn gaussian_vandermonde_mc(
    l: usize,
    c: usize,
    samples: u64,
    seed: u64,
    exec: Exec,
) -> McReport {
    let alpha = (c + 1) as f64;
    let theta = (c + 2 * l - 1) as f64 / alpha;
    let gamma = Gamma::new(alpha, theta).expect("valid shape");
    let log_scale = ln_gamma_int(c + 1) + alpha * theta.ln();
    let decay = 1.0 - 1.0 / theta;
    let samples = samples as usize;
    let chunks = samples.div_ceil(CHUNK);
    let m = par::map_fold(
        exec,
        chunks,
        |ci| {
            let mut rng = stream(seed, ci as u64);
            let mut m = Moments::default();
            let mut y = vec![0.0; l];
            for _ in 0..CHUNK.min(samples - ci * CHUNK) {
                for v in y.iter_mut() {
                    *v = gamma.sample(&mut rng);
                }
                let mut w = 1.0;
                for j in 0..l {
                    for k in j + 1..l {
                        w *= (y[j] - y[k]).powi(2);
                    }
                }
                let log_ratio: f64 = y.iter().map(|v| log_scale - decay * v).sum();
                m.push(w * log_ratio.exp());
            }
            m
        },
        Moments::default(),
        Moments::merge,
    );
    let target = gaussian_vandermonde_exact(l, c).to_f64().expect("finite");
    McReport::new(
        &format!("gaussian_vandermonde_l{l}_c{c}"),
        m.mean(),
        target,
        (m.var() / m.n as f64).sqrt(),
        m.n,
        seed,
    )
}

fn ln_gamma_int(a: usize) -> f64 {
    (1..a).map(|k| (k as f64).ln()).sum()
}

/// Exact value and Monte Carlo report.
pub fn gaussian_vandermonde(
    l: usize,
    c: usize,
    samples: u64,
    seed: u64,
    exec: Exec,
) -> (BigInt, McReport) {
    (
        gaussian_vandermonde_exact(l, c),
        gaussian_vandermonde_mc(l, c, samples, seed, exec),
    )
}

/// `(Σ_s sgn(s) ∏_j ∏_{k=1}^{s(j)−1} (z_j − k), ∏_{j<k}(z_j − z_k))`.
/// The two sides differ by `(−1)^{m(m−1)/2}`.
pub fn vandermonde_identity(z: &[Rat]) -> (Rat, Rat) {
    let m = z.len();
    let mut lhs = Rat::zero();
    for (s, sg) in permutations(m) {
        let mut p = rat_int(sg);
        for (j, zj) in z.iter().enumerate() {
            for k in 1..=s[j] as i64 {
                p *= zj - rat_int(k);
            }
        }
        lhs += p;
    }
    let mut rhs = Rat::one();
    for j in 0..m {
        for k in j + 1..m {
            rhs *= &z[j] - &z[k];
        }
    }
    (lhs, rhs)
}

/// `det[a^{(k)}_{i}]` with entries the rising factorials `(a+i)(a+i+1)⋯(a+i+k−1)`,
/// `0 ≤ i, k < n`.
pub fn dan_determinant(a: &Rat, n: usize) -> Rat {
    let m = (0..n)
        .map(|i| {
            let base = a + rat_int(i as i64);
            (0..n).map(|k| rising_rat(&base, k as u64)).collect()
        })
        .collect();
    det_rat(m)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CayleyResiduals {
    pub invariance: f64,
    pub involution: f64,
    pub inverse: f64,
    pub composition: f64,
    pub pairs: usize,
}

fn random_u<R: Rng>(n: usize, rng: &mut R) -> CMat {
    let t: Vec<f64> = (0..n * n).map(|_| StandardNormal.sample(rng)).collect();
    u_element(n, &t)
}

/// For random `x, y ∈ u_n`: the Haar-density identity
/// `ch(c(c(x)c(y)))^{−2n} j_y(x) = ch(x)^{−2n}` (relative residual),
/// `c(c(x)) = x`, `c(−x) = c(x)^{−1}` and
/// `c(c(x)c(y)) = (y−1)(x+y)^{−1}(x−1) + 1`.
pub fn cayley_invariance_check(n: usize, pairs: usize, seed: u64) -> Result<CayleyResiduals> {
    let mut rng = stream(seed, 0);
    let mut out = CayleyResiduals {
        pairs,
        ..Default::default()
    };
    let r = 2.0 * n as f64;
    let one = identity(n);
    for _ in 0..pairs {
        let x = random_u(n, &mut rng);
        let y = random_u(n, &mut rng);
        let cx = cayley(&x)?;
        let cy = cayley(&y)?;
        let u = cayley(&(&cx * &cy))?;
        let lhs = ch(&u).powf(-r) * cayley_jacobian(&x, &y, r)?;
        let rhs = ch(&x).powf(-r);
        out.invariance = out.invariance.max((lhs - rhs).abs() / rhs);
        out.involution = out.involution.max(max_abs_diff(&cayley(&cx)?, &x));
        let inv = cx.clone().try_inverse().expect("unitary");
        out.inverse = out.inverse.max(max_abs_diff(&cayley(&(-&x))?, &inv));
        let howe =
            (&y - &one) * (&x + &y).try_inverse().expect("x + y invertible") * (&x - &one) + &one;
        out.composition = out.composition.max(max_abs_diff(&u, &howe));
    }
    Ok(out)
}

/// Maximum relative change of `T_Π(w)` under `w ↦ g w g'^{−1}` over random
/// Haar `g, g'` and Gaussian `w`.
pub fn distribution_invariance(
    mu: &HCParam,
    pair: DualPair,
    trials: usize,
    seed: u64,
    exec: Exec,
) -> Result<f64> {
    let d = distribution_g(mu, pair)?;
    let devs = par::map_range(exec, trials, |i| -> Result<f64> {
        let mut rng = stream(seed, i as u64);
        let scale = (1.0 / (2.0 * PI)).sqrt();
        let w = CMat::from_fn(pair.l, pair.lp, |_, _| complex_gaussian(&mut rng, scale));
        let g = haar_unitary(pair.l, &mut rng);
        let gp = haar_unitary(pair.lp, &mut rng);
        let moved = &g * &w * gp.adjoint();
        let a = d.eval_on_w(&w)?;
        let b = d.eval_on_w(&moved)?;
        Ok(if a == 0.0 && b == 0.0 {
            0.0
        } else {
            (a - b).abs() / a.abs()
        })
    });
    devs.into_iter().try_fold(0.0f64, |m, d| Ok(m.max(d?)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CwReport {
    pub pair: DualPair,
    pub lhs: SymScalar,
    pub rhs: SymScalar,
    pub holds: bool,
}

/// The Gaussian `e^{−tr(w w^*)}` integrated over `W` directly, `(4π)^{ll'}`,
/// and through the Weyl integration formula,
/// `|C(h̄₁)| C_W vol(U_l) vol(U_{l'}) I(l, l'−l) / (vol(S^{h̄₁}) l!)`.
pub fn cw_identity_check(pair: DualPair) -> Result<CwReport> {
    pair.require_ordered()?;
    let ll = (pair.l * pair.lp) as i64;
    let lhs = SymScalar::sqrt2_pow(4 * ll) * SymScalar::pi_pow(ll);
    let integral = gaussian_vandermonde_exact(pair.l, pair.lp - pair.l);
    let rhs = (c_h1(pair)
        * constants(pair).c_w
        * vol_u(pair.l)
        * vol_u(pair.lp)
        * SymScalar::from_int(integral)
        * vol_s_h1(pair).inv().expect("nonzero")
        * SymScalar::from_rat(Rat::new(BigInt::one(), factorial(pair.l as u64))))
    .abs();
    let holds = lhs == rhs;
    Ok(CwReport {
        pair,
        lhs,
        rhs,
        holds,
    })
}

pub fn rat_close(a: &Rat, b: f64, tol: f64) -> bool {
    (rat_to_f64(a) - b).abs() <= tol * b.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::reps::pairs_up_to;
    use proptest::prelude::*;

    #[test]
    fn haar_is_unitary() {
        for n in 1..=4 {
            let (res, det) = haar_unitarity(n, 100, 5);
            assert!(res < 1e-12 && det < 1e-12, "{n}: {res} {det}");
        }
    }

    #[test]
    fn haar_first_moment() {
        let r = haar_moment(3, 100_000, 9, Exec::Parallel);
        assert!(r.rel_error < 0.01, "{r:?}");
    }

    #[test]
    fn cayley_volume_one() {
        let r = cayley_volume_check(1, 0, 0, Exec::Sequential);
        assert!(r.rel_error < 1e-6, "{r:?}");
    }

    #[test]
    fn cayley_volume_two_is_deterministic() {
        let a = cayley_volume_check(2, 20_000, 3, Exec::Parallel);
        let b = cayley_volume_check(2, 20_000, 3, Exec::Sequential);
        assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
        assert!(a.rel_error < 0.05, "{a:?}");
    }

    #[test]
    fn forrester_warnaar() {
        let r1 = forrester_warnaar_check(1);
        assert!((r1.estimate - PI).abs() < 1e-12);
        let r2 = forrester_warnaar_check(2);
        assert!((r2.target - PI * PI / 2.0).abs() < 1e-12);
        assert!(r2.rel_error < 1e-4, "{r2:?}");
    }

    #[test]
    fn gaussian_vandermonde_small() {
        for k in 0..6 {
            assert_eq!(gaussian_vandermonde_exact(1, k), factorial(k as u64));
        }
        assert_eq!(gaussian_vandermonde_exact(2, 0), BigInt::from(2));
        for l in 1..=4 {
            for c in 0..=4 {
                assert_eq!(
                    gaussian_vandermonde_exact(l, c),
                    gaussian_vandermonde_double_sum(l, c)
                );
            }
        }
        let r = gaussian_vandermonde_mc(2, 1, 200_000, 1, Exec::Parallel);
        assert!(r.rel_error < 0.02, "{r:?}");
    }

    #[test]
    fn vandermonde_identity_small() {
        assert_eq!(vandermonde_identity(&[rat(3, 7)]), (Rat::one(), Rat::one()));
        let (z1, z2) = (rat(5, 3), rat(-2, 9));
        let (lhs, rhs) = vandermonde_identity(&[z1.clone(), z2.clone()]);
        assert_eq!(lhs, &z2 - &z1);
        assert_eq!(rhs, z1 - z2);
    }

    #[test]
    fn dan_small() {
        assert_eq!(dan_determinant(&rat(7, 3), 2), Rat::one());
        assert_eq!(dan_determinant(&rat_int(5), 3), rat_int(2));
        assert_eq!(dan_determinant(&rat_int(0), 4), rat_int(12));
        assert_eq!(dan_determinant(&rat_int(7), 4), rat_int(12));
    }

    #[test]
    fn cayley_identities() {
        for n in 1..=3 {
            let r = cayley_invariance_check(n, 50, 17).unwrap();
            assert!(r.invariance < 1e-10, "{r:?}");
            assert!(
                r.involution < 1e-12 && r.inverse < 1e-12 && r.composition < 1e-10,
                "{r:?}"
            );
        }
    }

    #[test]
    fn invariance_example() {
        let m = HCParam::new(vec!["2".parse().unwrap()]).unwrap();
        let p = DualPair::new(1, 2).unwrap();
        let a = distribution_invariance(&m, p, 100, 4, Exec::Parallel).unwrap();
        let b = distribution_invariance(&m, p, 100, 4, Exec::Sequential).unwrap();
        assert!(a < 1e-9);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn cw_identity_small_pairs() {
        for p in pairs_up_to(3, 4) {
            let r = cw_identity_check(p).unwrap();
            assert!(r.holds, "{r:?}");
        }
        let r = cw_identity_check(DualPair::new(1, 1).unwrap()).unwrap();
        assert_eq!(r.lhs, SymScalar::from_int(4) * SymScalar::pi_pow(1));
    }

    proptest! {
        #[test]
        fn dan_independent_of_a(p in -30i64..30, q in 1i64..30, n in 2usize..=6) {
            let expect: BigInt = (1..n as u64).map(factorial).product();
            prop_assert_eq!(dan_determinant(&rat(p, q), n), Rat::from_integer(expect));
        }

        #[test]
        fn vandermonde_sign(z in proptest::collection::vec((-40i64..40, 1i64..9), 1..=5)) {
            let z: Vec<Rat> = z.into_iter().map(|(p, q)| rat(p, q)).collect();
            let m = z.len();
            let (lhs, rhs) = vandermonde_identity(&z);
            let sign = if (m * (m - 1) / 2).is_multiple_of(2) { 1 } else { -1 };
            prop_assert_eq!(lhs, rhs * rat_int(sign));
        }
    }
}
