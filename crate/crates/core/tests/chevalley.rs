use cilie::chevalley::{
    ce_cohomology, chevalley_cochain, cochain_dims, d_squared_vanishes, euler_characteristic, extract_bracket,
};
use cilie::polyring::{is_regular_sequence, RingPresentation};
use cilie::sample::{random_lie_algebra, random_map_at_point};
use cilie::tangentlie::{tangent_lie, TangentLieAlgebra};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_algebra(seed: u64, max_a: usize, max_b: usize) -> TangentLieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(0..=max_a);
    let b = rng.gen_range(0..=max_b);
    random_lie_algebra(&mut rng, a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_round_trip(seed in any::<u64>()) {
        let g = random_algebra(seed, 4, 3);
        prop_assert_eq!(extract_bracket(&chevalley_cochain(&g)), g.bracket);
    }

    #[test]
    fn round_trip_on_tangent_algebras(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (f, z) = random_map_at_point(&mut rng, n, m, 3);
        let g = tangent_lie(&f, &z).unwrap().algebra;
        prop_assert_eq!(extract_bracket(&chevalley_cochain(&g)), g.bracket);
    }

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>()) {
        let ce = chevalley_cochain(&random_algebra(seed, 4, 3));
        prop_assert!(d_squared_vanishes(&ce, 4));
    }

    /// The alternating sum over each total weight is the same for cochains
    /// and cohomology.
    #[test]
    fn euler_characteristic_is_preserved(seed in any::<u64>()) {
        let ce = chevalley_cochain(&random_algebra(seed, 3, 3));
        let d = 6;
        let h = ce_cohomology(&ce, d);
        let c = cochain_dims(&ce, d);
        // slices with t + 2p <= d are complete
        prop_assert_eq!(euler_characteristic(&h, d), euler_characteristic(&c, d));
    }

    /// For a regular sequence of quadrics the complex is a Koszul resolution:
    /// cohomology sits in `p = 0` and equals the quotient ring.
    #[test]
    fn regular_quadrics_give_the_quotient(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(1..=3);
        let b = rng.gen_range(1..=a.min(2));
        let ce = chevalley_cochain(&random_lie_algebra(&mut rng, a, b));
        let ring = ce.even_ring();
        let q = ce.quadrics().to_vec();
        if q.iter().any(|p| p.is_zero()) || !is_regular_sequence(&ring, &q).unwrap() {
            return Ok(());
        }
        let d = 8;
        let h = ce_cohomology(&ce, d);
        for p in 1..=b {
            prop_assert!(h.row(p).iter().all(|&x| x == 0));
        }
        let quotient = RingPresentation::graded(ring, q).unwrap().hilbert_function(d).unwrap();
        prop_assert_eq!(h.row(0).to_vec(), quotient);
    }
}
