//! Random inputs for randomized checks: polynomial maps vanishing at a
//! rational point, tangent Lie algebras, and semifree DG modules with known
//! cohomology.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ciext::DGModule;
use crate::exactq::{rat, Rational};
use crate::polyring::{monomials_of_degree, Exponent, Poly, PolyMatrix};
use crate::tangentlie::{SymmetricBilinear, TangentLieAlgebra};

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// A random polynomial in `n` variables with terms of total degree in
/// `lo..=hi`, each monomial present with probability one half.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: u32, hi: u32) -> Poly {
    let ones = vec![1; n];
    let mut terms = Vec::new();
    for d in lo..=hi {
        for m in monomials_of_degree(&ones, d as u64) {
            if rng.gen_bool(0.5) {
                terms.push((m, small_rational(rng)));
            }
        }
    }
    Poly::from_terms(n, terms)
}

/// A map `f: A^n -> A^m` of degree at most `max_degree` and a rational
/// point `z` with `f(z) = 0`.
///
/// Each component is `p(x - z)` for a random `p` without constant term;
/// roughly half of them also lack a linear part, so the tangent Lie algebra
/// is usually nontrivial.
pub fn random_map_at_point<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, max_degree: u32) -> (Vec<Poly>, Vec<Rational>) {
    let z: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
    let shift: Vec<Poly> = (0..n)
        .map(|i| &Poly::var(n, i) - &Poly::constant(n, z[i].clone()))
        .collect();
    let f = (0..m)
        .map(|_| {
            let lo = if rng.gen_bool(0.5) { 2 } else { 1 };
            let p = random_poly(rng, n, lo.min(max_degree), max_degree);
            p.compose(&shift).expect("shift has n entries")
        })
        .collect();
    (f, z)
}

/// A Lie algebra with `dim g¹ = a`, `dim g² = b` and a random bracket.
pub fn random_lie_algebra<R: Rng + ?Sized>(rng: &mut R, a: usize, b: usize) -> TangentLieAlgebra {
    let bracket = SymmetricBilinear::from_fn(a, b, |_, _| (0..b).map(|_| small_rational(rng)).collect())
        .expect("dimensions agree");
    TangentLieAlgebra::new(bracket)
}

fn random_homogeneous<R: Rng + ?Sized>(rng: &mut R, c: usize, degree: i64) -> Poly {
    if degree < 0 || degree % 2 != 0 {
        return Poly::zero(c);
    }
    let weights = vec![2; c];
    let mut terms: Vec<(Exponent, Rational)> = Vec::new();
    for m in monomials_of_degree(&weights, degree as u64) {
        if rng.gen_bool(0.6) {
            terms.push((m, small_rational(rng)));
        }
    }
    Poly::from_terms(c, terms)
}

/// A semifree DG module over `k[χ_1..χ_c]` with at most `max_generators`
/// generators.
///
/// It is a direct sum of free generators with zero differential, pairs
/// `d(g) = χ^α h` and contractible pairs `d(g) = u h` with `u` a nonzero
/// constant, conjugated by a random unipotent automorphism so that the
/// unit entries are hidden among the others.
pub fn random_dg_module<R: Rng + ?Sized>(rng: &mut R, c: usize, max_generators: usize) -> DGModule {
    let mut degrees: Vec<i64> = Vec::new();
    let mut arrows: Vec<(usize, usize, Poly)> = Vec::new();
    while degrees.len() < max_generators {
        let room = max_generators - degrees.len();
        let kind = if room >= 2 { rng.gen_range(0..3) } else { 0 };
        let base = rng.gen_range(-3..=3);
        match kind {
            0 => degrees.push(base),
            1 if c > 0 => {
                let k = rng.gen_range(1..=2);
                let chi: Poly = loop {
                    let p = random_homogeneous(rng, c, 2 * k);
                    if !p.is_zero() {
                        break p;
                    }
                };
                degrees.push(base + 2 * k - 1);
                degrees.push(base);
                arrows.push((degrees.len() - 1, degrees.len() - 2, chi));
            }
            _ => {
                degrees.push(base);
                degrees.push(base + 1);
                let mut u = small_rational(rng);
                if num_traits::Zero::is_zero(&u) {
                    u = rat(1, 1);
                }
                arrows.push((degrees.len() - 1, degrees.len() - 2, Poly::constant(c, u)));
            }
        }
        if rng.gen_bool(0.2) {
            break;
        }
    }

    let n = degrees.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let position: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &g) in order.iter().enumerate() {
            p[g] = i;
        }
        p
    };
    let degrees: Vec<i64> = order.iter().map(|&g| degrees[g]).collect();
    let mut d = PolyMatrix::zeros(c, n, n);
    for (target, source, p) in arrows {
        d.set(position[target], position[source], p);
    }

    // P = I + N with N strictly upper triangular and homogeneous of degree
    // deg g_j - deg g_i; d' = P d P⁻¹.
    let mut nil = PolyMatrix::zeros(c, n, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                nil.set(i, j, random_homogeneous(rng, c, degrees[j] - degrees[i]));
            }
        }
    }
    let identity = PolyMatrix::identity(c, n);
    let p = add(&identity, &nil);
    let mut inverse = identity.clone();
    let mut power = identity;
    for k in 1..n.max(1) {
        power = power.mul(&nil).expect("square");
        inverse = if k % 2 == 1 { inverse.sub(&power).expect("square") } else { add(&inverse, &power) };
    }
    let conj = p.mul(&d).and_then(|pd| pd.mul(&inverse)).expect("square");
    DGModule::new(c, degrees, conj).expect("conjugate of a complex is a complex")
}

fn add(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let neg = b.map(|p| -p);
    a.sub(&neg).expect("same shape")
}
