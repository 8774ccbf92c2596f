//! Small dense complex linear algebra: Hermitian eigenvalues by cyclic
//! Jacobi, and the Cayley transform on `u_n`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = DMatrix<Complex64>;

pub const JACOBI_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi, ascending.
pub fn jacobi_symmetric(mut a: DMatrix<f64>, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let n = a.nrows();
    let scale = a
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    for _ in 0..max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)] * a[(p, q)])
            .sum::<f64>()
            .sqrt();
        if off <= tol * scale {
            let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
            ev.sort_by(f64::total_cmp);
            return Ok(ev);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::NoConvergence)
}

/// Eigenvalues of a Hermitian matrix, ascending. Runs Jacobi on the real
/// `2n × 2n` embedding `[[A, −B], [B, A]]` and keeps every other value.
pub fn hermitian_eigenvalues(h: &CMat) -> Result<Vec<f64>> {
    let n = h.nrows();
    let mut r = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            r[(i, j)] = z.re;
            r[(i + n, j + n)] = z.re;
            r[(i, j + n)] = -z.im;
            r[(i + n, j)] = z.im;
        }
    }
    let ev = jacobi_symmetric(r, JACOBI_TOL, JACOBI_MAX_SWEEPS)?;
    Ok(ev.into_iter().step_by(2).collect())
}

/// Eigenvalues of `w w^*` for an `l × l'` matrix `w`, clamped at zero.
pub fn moment_eigenvalues(w: &CMat) -> Result<Vec<f64>> {
    let h = w * w.adjoint();
    Ok(hermitian_eigenvalues(&h)?
        .into_iter()
        .map(|x| x.max(0.0))
        .collect())
}

pub fn identity(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// `c(x) = (x + 1)(x − 1)^{−1}`
pub fn cayley(x: &CMat) -> Result<CMat> {
    let n = x.nrows();
    let inv = (x - identity(n))
        .try_inverse()
        .ok_or_else(|| Error::Invalid("x − 1 is singular".into()))?;
    Ok((x + identity(n)) * inv)
}

/// `ch(x) = |det(1 − x)|`
pub fn ch(x: &CMat) -> f64 {
    (identity(x.nrows()) - x).determinant().norm()
}

/// `j_y(x) = |det((y − 1)(x + y)^{−1})|^{r}`
pub fn cayley_jacobian(x: &CMat, y: &CMat, r: f64) -> Result<f64> {
    let n = x.nrows();
    let inv = (x + y)
        .try_inverse()
        .ok_or_else(|| Error::Invalid("x + y is singular".into()))?;
    Ok(((y - identity(n)) * inv).determinant().norm().powf(r))
}

/// Orthonormal basis of `u_n` for the form `−tr(xy)`: `iE_jj`,
/// `(E_jk − E_kj)/√2`, `i(E_jk + E_kj)/√2`.
pub fn u_basis(n: usize) -> Vec<CMat> {
    let i = Complex64::i();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        let mut m = CMat::zeros(n, n);
        m[(j, j)] = i;
        out.push(m);
    }
    for j in 0..n {
        for k in j + 1..n {
            let mut a = CMat::zeros(n, n);
            a[(j, k)] = Complex64::new(s, 0.0);
            a[(k, j)] = Complex64::new(-s, 0.0);
            out.push(a);
            let mut b = CMat::zeros(n, n);
            b[(j, k)] = i * s;
            b[(k, j)] = i * s;
            out.push(b);
        }
    }
    out
}

/// `Σ_k t_k B_k` in the basis [`u_basis`].
pub fn u_element(n: usize, t: &[f64]) -> CMat {
    u_basis(n)
        .iter()
        .zip(t)
        .fold(CMat::zeros(n, n), |acc, (b, &c)| {
            acc + b * Complex64::new(c, 0.0)
        })
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().fold(0.0, |m, z| m.max(z.norm()))
}

pub fn real_vector(v: &[f64]) -> DVector<f64> {
    DVector::from_row_slice(v)
}
