//! Measure normalizations and the chain of constants leading to `C_•`.

use num_traits::One;
use serde::Serialize;

use crate::exact::{superfactorial, Rat, SymScalar};
use crate::reps::DualPair;

/// `vol(U_n) = (2π)^{n(n+1)/2} / ∏_{j<n} j!`
pub fn vol_u(n: usize) -> SymScalar {
    let n = n as i64;
    SymScalar::two_pi_pow(n * (n + 1) / 2) * inv_int(superfactorial(n as u64))
}

/// `vol(H) = (2π)^n` for the diagonal torus of `U_n`.
pub fn vol_torus(n: usize) -> SymScalar {
    SymScalar::two_pi_pow(n as i64)
}

/// `c_Weyl = (2π)^{n(n−1)/2} / ∏_{j<n} j!`
pub fn c_weyl(n: usize) -> SymScalar {
    let n = n as i64;
    SymScalar::two_pi_pow(n * (n - 1) / 2) * inv_int(superfactorial(n as u64))
}

/// `vol(S^{h̄₁}) = 2^{l/2} (2π)^{(l'−l)(l'−l+1)/2 + l} / ∏_{j<l'−l} j!`
pub fn vol_s_h1(pair: DualPair) -> SymScalar {
    let (l, d) = (pair.l as i64, (pair.lp - pair.l) as i64);
    SymScalar::sqrt2_pow(l)
        * SymScalar::two_pi_pow(d * (d + 1) / 2 + l)
        * inv_int(superfactorial(d as u64))
}

/// `C(h̄₁) = (−1)^{l(l'−l)} i^{l(l'−1)}`
pub fn c_h1(pair: DualPair) -> SymScalar {
    let (l, lp) = (pair.l as i64, pair.lp as i64);
    SymScalar::i_pow(2 * l * (lp - l) + l * (lp - 1))
}

fn inv_int(n: num_bigint::BigInt) -> SymScalar {
    SymScalar::from_rat(Rat::new(num_bigint::BigInt::one(), n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constants {
    pub c_w: SymScalar,
    pub c_z: SymScalar,
    pub c_1: SymScalar,
    pub c_2: SymScalar,
    pub c_bullet: SymScalar,
    pub vol_g: SymScalar,
    pub vol_gprime: SymScalar,
    pub vol_h: SymScalar,
    pub vol_s_h1: SymScalar,
    pub c_weyl: SymScalar,
    pub c_h1: SymScalar,
}

/// The full set of constants for `pair` (`l ≤ l'` assumed).
///
/// `C_2` is taken with the sign `(−1)^{l(l−1)/2}`; `C_•` is the modulus of
/// `2(2π)^l C_W^{−1} C_1 C_2`.
pub fn constants(pair: DualPair) -> Constants {
    let (l, lp) = (pair.l as i64, pair.lp as i64);
    let n2 = pair.n_roots();
    let c_w = SymScalar::sqrt2_pow(l * (2 * lp + 1));
    let c_z = SymScalar::i_pow(-n2) * SymScalar::two_pi_pow(l);
    let c_1 = SymScalar::i_pow(l * lp)
        * SymScalar::sqrt2_pow(2 * l * (l - lp))
        * SymScalar::pi_pow(n2)
        * inv_int(superfactorial(l as u64));
    let vol_g = vol_u(pair.l);
    let c_2 = SymScalar::i_pow(2 * n2)
        * SymScalar::two_pi_pow(l)
        * c_w.clone()
        * vol_g.inv().expect("volume is nonzero");
    let c_bullet = (SymScalar::from_int(2)
        * SymScalar::two_pi_pow(l)
        * c_w.inv().expect("nonzero")
        * c_1.clone()
        * c_2.clone())
    .abs();
    Constants {
        c_w,
        c_z,
        c_1,
        c_2,
        c_bullet,
        vol_g,
        vol_gprime: vol_u(pair.lp),
        vol_h: vol_torus(pair.l),
        vol_s_h1: vol_s_h1(pair),
        c_weyl: c_weyl(pair.l),
        c_h1: c_h1(pair),
    }
}

/// `C_• = 2 (2π)^l 2^{l(l−l') − l(l−1)/2}`, the simplified form of the chain.
pub fn c_bullet_closed(pair: DualPair) -> SymScalar {
    let (l, lp) = (pair.l as i64, pair.lp as i64);
    SymScalar::from_int(2)
        * SymScalar::two_pi_pow(l)
        * SymScalar::sqrt2_pow(2 * (l * (l - lp) - pair.n_roots()))
}

/// The r-exponent of the Cayley-transform Jacobian for the three classical
/// families, `r = n − 1`, `n`, `n + 1/2` for `O_n`, `U_n`, `Sp_n`. Only the
/// unitary entry is exercised numerically.
pub const CAYLEY_R_TABLE: [(&str, &str); 3] = [("O_n", "n-1"), ("U_n", "n"), ("Sp_n", "n+1/2")];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::pairs_up_to;

    fn pair(l: usize, lp: usize) -> DualPair {
        DualPair::new(l, lp).unwrap()
    }

    #[test]
    fn volumes() {
        assert_eq!(vol_u(1), SymScalar::two_pi_pow(1));
        assert_eq!(vol_u(2), SymScalar::from_int(8) * SymScalar::pi_pow(3));
        // (2π)^6 / 2
        assert_eq!(vol_u(3), SymScalar::from_int(32) * SymScalar::pi_pow(6));
        assert_eq!(vol_torus(3), SymScalar::two_pi_pow(3));
        assert_eq!(c_weyl(1), SymScalar::one());
        assert_eq!(
            vol_s_h1(pair(1, 1)),
            SymScalar::sqrt2_pow(1) * SymScalar::two_pi_pow(1)
        );
    }

    #[test]
    fn chain_values() {
        assert_eq!(constants(pair(1, 1)).c_w, SymScalar::sqrt2_pow(3));
        assert_eq!(constants(pair(1, 2)).c_bullet, SymScalar::two_pi_pow(1));
        assert_eq!(
            constants(pair(2, 2)).c_bullet,
            SymScalar::from_int(4) * SymScalar::pi_pow(2)
        );
        for p in pairs_up_to(4, 6) {
            assert_eq!(constants(p).c_bullet, c_bullet_closed(p));
        }
    }

    #[test]
    fn phases() {
        assert_eq!(c_h1(pair(1, 1)), SymScalar::one());
        assert_eq!(c_h1(pair(1, 2)), SymScalar::i_pow(3));
        assert_eq!(constants(pair(2, 3)).c_z.i_power(), 3);
    }
}
