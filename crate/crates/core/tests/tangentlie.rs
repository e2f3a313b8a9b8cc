use cilie::exactq::{int, rat, RatMatrix, Rational};
use cilie::polyring::{Poly, PolyRing};
use cilie::sample::random_map_at_point;
use cilie::tangentlie::{hessian_direct, hessian_snake, hessian_snake_with_lifts, jacobian_at, tangent_lie};
use cilie::ErrorKind;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_case(seed: u64) -> (Vec<Poly>, Vec<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=4);
    let deg = rng.gen_range(1..=4);
    random_map_at_point(&mut rng, n, m, deg)
}

/// Lower unitriangular times upper triangular with nonzero diagonal.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    let mut a = RatMatrix::zeros(n, n);
    for i in 0..n {
        a.set(i, i, rat(if rng.gen_bool(0.5) { 1 } else { -2 }, 1));
        for j in i + 1..n {
            a.set(i, j, int(rng.gen_range(-2..=2)));
        }
    }
    let mut lower = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, int(rng.gen_range(-1..=1)));
        }
    }
    lower.mul(&a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn direct_and_snake_agree(seed in any::<u64>()) {
        let (f, z) = random_case(seed);
        let t = tangent_lie(&f, &z).unwrap();
        prop_assert!(t.agree);
        prop_assert!(t.direct.is_symmetric());
        prop_assert_eq!(t.direct.dim(), t.fiber.g1_dim());
        prop_assert_eq!(t.direct.target_dim(), t.fiber.g2_dim());
        let rank = t.fiber.jacobian.rank();
        prop_assert_eq!(t.fiber.g1_dim(), z.len() - rank);
        prop_assert_eq!(t.fiber.g2_dim(), f.len() - rank);
    }

    #[test]
    fn snake_ignores_lift_choices(seed in any::<u64>()) {
        let (f, z) = random_case(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
        prop_assert_eq!(hessian_snake_with_lifts(&f, &z, &mut rng).unwrap(), hessian_snake(&f, &z).unwrap());
    }

    /// Linear changes of coordinates in source and target move the bracket
    /// by isomorphisms, so its dimensions and rank are unchanged.
    #[test]
    fn invariant_under_coordinate_change(seed in any::<u64>()) {
        let (f, z) = random_case(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        let n = z.len();
        let a = random_invertible(&mut rng, n);
        let b = random_invertible(&mut rng, f.len());
        let images: Vec<Poly> = (0..n)
            .map(|i| {
                let mut p = Poly::constant(n, z[i].clone());
                for j in 0..n {
                    p = &p + &Poly::var(n, j).scale(a.get(i, j));
                }
                p
            })
            .collect();
        let pulled: Vec<Poly> = f.iter().map(|p| p.compose(&images).unwrap()).collect();
        let mixed: Vec<Poly> = (0..f.len())
            .map(|k| {
                pulled.iter().enumerate().fold(Poly::zero(n), |acc, (l, p)| &acc + &p.scale(b.get(k, l)))
            })
            .collect();
        let origin = vec![int(0); n];
        let before = hessian_direct(&f, &z).unwrap();
        let after = hessian_direct(&mixed, &origin).unwrap();
        prop_assert_eq!(before.dim(), after.dim());
        prop_assert_eq!(before.target_dim(), after.target_dim());
        prop_assert_eq!(before.rank(), after.rank());
        prop_assert_eq!(after, hessian_snake(&mixed, &origin).unwrap());
    }
}

/// Along a curve `γ(t) = z + t v` with `v` in the kernel, the second
/// derivative of `f ∘ γ` at 0 projects to `B(v, v)` in the cokernel.
#[test]
fn bracket_is_second_derivative_along_kernel_lines() {
    for seed in 0..40u64 {
        let (f, z) = random_case(seed);
        let t = tangent_lie(&f, &z).unwrap();
        let n = z.len();
        for (idx, v) in t.fiber.g1_basis.iter().enumerate() {
            let line: Vec<Poly> = (0..n)
                .map(|i| &Poly::constant(1, z[i].clone()) + &Poly::var(1, 0).scale(&v[i]))
                .collect();
            let second: Vec<Rational> = f
                .iter()
                .map(|p| {
                    let g = p.compose(&line).unwrap();
                    g.derivative(0).unwrap().derivative(0).unwrap().evaluate(&[int(0)]).unwrap()
                })
                .collect();
            let projected = t.fiber.g2_projection.mul_vec(&second).unwrap();
            let mut e = vec![int(0); t.fiber.g1_dim()];
            e[idx] = int(1);
            assert_eq!(projected, t.direct.eval(&e, &e).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn fixed_suite() {
    let xy = PolyRing::standard(&["x", "y"]);
    let origin = vec![int(0), int(0)];
    let cases: Vec<(Vec<&str>, Vec<Rational>, RatMatrix)> = vec![
        (vec!["x^2 + y^2"], origin.clone(), RatMatrix::from_i64(&[&[2, 0], &[0, 2]])),
        (vec!["x^2 + y^3"], origin.clone(), RatMatrix::from_i64(&[&[2, 0], &[0, 0]])),
        (vec!["x^2 - y", "y^2 - x"], vec![int(1), int(1)], RatMatrix::zeros(0, 0)),
    ];
    for (f, z, component) in cases {
        let f = xy.parse_all(&f).unwrap();
        let t = tangent_lie(&f, &z).unwrap();
        assert!(t.agree);
        if t.direct.target_dim() > 0 {
            assert_eq!(t.direct.component(0), component);
        } else {
            assert_eq!(t.direct.dim(), 0);
        }
    }
    let t = tangent_lie(&xy.parse_all(&["x^2", "y^2"]).unwrap(), &origin).unwrap();
    assert!(t.agree);
    assert_eq!(t.direct.component(0), RatMatrix::from_i64(&[&[2, 0], &[0, 0]]));
    assert_eq!(t.direct.component(1), RatMatrix::from_i64(&[&[0, 0], &[0, 2]]));
}

#[test]
fn off_locus_is_a_precondition_error() {
    let xy = PolyRing::standard(&["x", "y"]);
    let f = xy.parse_all(&["x^2 + y^2"]).unwrap();
    let err = jacobian_at(&f, &[int(1), int(0)]).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Precondition);
}
