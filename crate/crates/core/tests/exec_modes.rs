use hd_core::par::Exec;
use hd_core::reps::occurring_params;
use hd_core::verify::{
    cayley_volume_check, distribution_invariance, gaussian_vandermonde_mc, haar_moment,
};
use hd_core::{DualPair, HalfInt};

#[test]
fn monte_carlo_is_bit_identical_across_modes() {
    for seed in [0, 42] {
        let s = cayley_volume_check(2, 20_000, seed, Exec::Sequential);
        let p = cayley_volume_check(2, 20_000, seed, Exec::Parallel);
        assert_eq!(s.estimate.to_bits(), p.estimate.to_bits());
        assert_eq!(s.std_error.to_bits(), p.std_error.to_bits());

        let s = gaussian_vandermonde_mc(3, 1, 50_000, seed, Exec::Sequential);
        let p = gaussian_vandermonde_mc(3, 1, 50_000, seed, Exec::Parallel);
        assert_eq!(s, p);

        let s = haar_moment(3, 10_000, seed, Exec::Sequential);
        let p = haar_moment(3, 10_000, seed, Exec::Parallel);
        assert_eq!(s, p);
    }
}

#[test]
fn invariance_is_bit_identical_across_modes() {
    let pair = DualPair::new(2, 3).unwrap();
    for mu in occurring_params(pair, HalfInt::from_doubled(7))
        .unwrap()
        .iter()
        .take(5)
    {
        let s = distribution_invariance(mu, pair, 20, 9, Exec::Sequential).unwrap();
        let p = distribution_invariance(mu, pair, 20, 9, Exec::Parallel).unwrap();
        assert_eq!(s.to_bits(), p.to_bits());
    }
}

#[test]
fn seeds_change_estimates() {
    let a = gaussian_vandermonde_mc(2, 1, 10_000, 1, Exec::Parallel);
    let b = gaussian_vandermonde_mc(2, 1, 10_000, 2, Exec::Parallel);
    assert_ne!(a.estimate, b.estimate);
}
