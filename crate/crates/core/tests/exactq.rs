use cilie::exactq::{
    cokernel_presentation, kernel_basis, rat, rref, snake_boundary, snake_boundary_with_lifts, solve, ExactRow, RatMatrix,
    Rational, VerticalMaps,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), r * c).prop_map(move |v| {
            let entries: Vec<Rational> = v.into_iter().map(|(n, d)| if n % 3 == 0 { rat(0, 1) } else { rat(n, d) }).collect();
            RatMatrix::new(r, c, entries).unwrap()
        })
    })
}

/// Plain Gauss-Jordan over the rationals.
fn naive_rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != rat(0, 1)) else { continue };
        a.swap(p, r);
        let inv = rat(1, 1) / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = a[r][j].clone() * f.clone();
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (RatMatrix::from_rows(cols, a).unwrap(), pivots)
}

proptest! {
    #[test]
    fn rref_matches_plain_elimination(m in matrix()) {
        let e = rref(&m);
        let (form, pivots) = naive_rref(&m);
        prop_assert_eq!(e.form, form);
        prop_assert_eq!(e.rank, pivots.len());
        prop_assert_eq!(e.pivots, pivots);
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len() + m.rank(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == rat(0, 1)));
        }
    }

    #[test]
    fn cokernel_kills_image(m in matrix()) {
        let p = cokernel_presentation(&m);
        prop_assert_eq!(p.rows(), m.rows() - m.rank());
        prop_assert!(p.mul(&m).unwrap().is_zero());
        prop_assert_eq!(p.rank(), p.rows());
    }

    #[test]
    fn solve_finds_preimages(m in matrix(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<Rational> = (0..m.cols()).map(|_| rat(rng.gen_range(-5..=5), 1)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    /// A split diagram `0 -> A -> A ⊕ C -> C -> 0` with a random middle map
    /// that respects the inclusion; the boundary must not depend on lifts.
    #[test]
    fn snake_boundary_is_lift_independent(seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, c) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let (a2, c2) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let row = |a: usize, c: usize| {
            let mut inc = RatMatrix::zeros(a + c, a);
            for i in 0..a { inc.set(i, i, rat(1, 1)); }
            let mut proj = RatMatrix::zeros(c, a + c);
            for i in 0..c { proj.set(i, a + i, rat(1, 1)); }
            ExactRow::new(inc, proj)
        };
        let mut rand_matrix = |r: usize, k: usize| {
            let e = (0..r * k).map(|_| rat(rng.gen_range(-2..=2), 1)).collect();
            RatMatrix::new(r, k, e).unwrap()
        };
        let left = rand_matrix(a2, a);
        let right = rand_matrix(c2, c);
        let corner = rand_matrix(a2, c);
        let mut middle = RatMatrix::zeros(a2 + c2, a + c);
        for i in 0..a2 { for j in 0..a { middle.set(i, j, left.get(i, j).clone()); } }
        for i in 0..a2 { for j in 0..c { middle.set(i, a + j, corner.get(i, j).clone()); } }
        for i in 0..c2 { for j in 0..c { middle.set(a2 + i, a + j, right.get(i, j).clone()); } }
        let v = VerticalMaps { left, middle, right };
        let (top, bottom) = (row(a, c), row(a2, c2));
        let plain = snake_boundary(&top, &bottom, &v).unwrap();
        let mut lifts = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let moved = snake_boundary_with_lifts(&top, &bottom, &v, &mut lifts).unwrap();
        prop_assert_eq!(plain, moved);
    }
}
