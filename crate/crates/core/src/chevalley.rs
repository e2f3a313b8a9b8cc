//! Chevalley–Eilenberg cochains of a tangent Lie algebra.
//!
//! With `g¹` of dimension `a` and `g²` of dimension `b`, the cochain algebra
//! is `k[y_1..y_a] ⊗ Λ(ε_1..ε_b)` with `d(y_i) = 0` and `d(ε_j) = q_j`, the
//! quadric obtained by polarizing the `j`-th bracket component. It is the
//! Koszul complex on `q_1..q_b`.
//!
//! Slices are indexed by the number `p` of odd generators (the cohomological
//! degree, `0..=b`) and the polynomial degree `t` in the `y`'s. The
//! differential maps slice `(p, t)` to `(p - 1, t + 2)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::Result;
use crate::exactq::{rat, RatMatrix, Rational};
use crate::polyring::{monomials_of_degree, Exponent, Poly, PolyRing};
use crate::tangentlie::{SymmetricBilinear, TangentLieAlgebra};

/// `k[y_1..y_a] ⊗ Λ(ε_1..ε_b)` with `d(ε_j) = q_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyComplex {
    even: usize,
    quadrics: Vec<Poly>,
}

impl ChevalleyComplex {
    /// A complex from explicit images of the odd generators, polynomials in
    /// `a` variables.
    pub fn from_quadrics(a: usize, quadrics: Vec<Poly>) -> Result<Self> {
        for q in &quadrics {
            if q.nvars() != a {
                return Err(crate::Error::Dimension(format!("quadric has {} variables, expected {a}", q.nvars())));
            }
            if !q.is_zero() && q.homogeneous_degree(&vec![1; a]) != Some(2) {
                return Err(crate::Error::Grading("odd generators must map to quadrics".into()));
            }
        }
        Ok(ChevalleyComplex { even: a, quadrics })
    }

    pub fn even_count(&self) -> usize {
        self.even
    }

    pub fn odd_count(&self) -> usize {
        self.quadrics.len()
    }

    /// `d(ε_j)`.
    pub fn quadrics(&self) -> &[Poly] {
        &self.quadrics
    }

    /// The polynomial ring `k[y_1..y_a]`.
    pub fn even_ring(&self) -> PolyRing {
        let names: Vec<String> = (1..=self.even).map(|i| format!("y{i}")).collect();
        PolyRing::new(names, vec![1; self.even]).expect("generated names are valid")
    }

    /// Matrix of `d` from slice `(p, t)` to `(p - 1, t + 2)`. Rows and
    /// columns follow [`slice_basis`].
    pub fn differential(&self, p: usize, t: u64) -> RatMatrix {
        let source = slice_basis(self.even, self.odd_count(), p, t);
        if p == 0 {
            return RatMatrix::zeros(0, source.len());
        }
        let target = slice_basis(self.even, self.odd_count(), p - 1, t + 2);
        let index: BTreeMap<&(Vec<usize>, Exponent), usize> = target.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut m = RatMatrix::zeros(target.len(), source.len());
        for (col, (set, mono)) in source.iter().enumerate() {
            for (r, &j) in set.iter().enumerate() {
                let mut rest = set.clone();
                rest.remove(r);
                let sign = if r % 2 == 0 { Rational::one() } else { -Rational::one() };
                for (e, c) in self.quadrics[j].terms() {
                    let prod: Exponent = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                    let row = index[&(rest.clone(), prod)];
                    let v = m.get(row, col) + &sign * c;
                    m.set(row, col, v);
                }
            }
        }
        m
    }
}

/// Basis of slice `(p, t)`: pairs of an increasing `p`-subset of the odd
/// generators and a degree-`t` monomial in the even ones.
pub fn slice_basis(a: usize, b: usize, p: usize, t: u64) -> Vec<(Vec<usize>, Exponent)> {
    let monos = monomials_of_degree(&vec![1; a], t);
    let mut out = Vec::new();
    for set in subsets(b, p) {
        for m in &monos {
            out.push((set.clone(), m.clone()));
        }
    }
    out
}

fn subsets(b: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(b: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..b {
            cur.push(i);
            rec(b, p, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= b {
        rec(b, p, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Dimensions indexed by cohomological degree `p` and polynomial degree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    table: Vec<Vec<u64>>,
}

impl GradedDims {
    pub fn new(table: Vec<Vec<u64>>) -> Self {
        GradedDims { table }
    }

    /// Entry at `(p, t)`; zero outside the computed range.
    pub fn get(&self, p: usize, t: usize) -> u64 {
        self.table.get(p).and_then(|row| row.get(t)).copied().unwrap_or(0)
    }

    /// Row of cohomological degree `p`.
    pub fn row(&self, p: usize) -> &[u64] {
        self.table.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(|&d| d == 0)
    }
}

/// The complex of `g`: `q_j(y) = ½ Σ_{k,l} B_j(k, l) y_k y_l`.
pub fn chevalley_cochain(g: &TangentLieAlgebra) -> ChevalleyComplex {
    let a = g.g1_dim();
    let b = &g.bracket;
    let half = rat(1, 2);
    let quadrics = (0..g.g2_dim())
        .map(|j| {
            let mut terms = Vec::new();
            for k in 0..a {
                for l in k..a {
                    let mut e = vec![0u32; a];
                    e[k] += 1;
                    e[l] += 1;
                    let c = if k == l { &b.get(k, k)[j] * &half } else { b.get(k, l)[j].clone() };
                    terms.push((e, c));
                }
            }
            Poly::from_terms(a, terms)
        })
        .collect();
    ChevalleyComplex { even: a, quadrics }
}

/// Reads the bracket back off the quadratic part of `d`.
pub fn extract_bracket(ce: &ChevalleyComplex) -> SymmetricBilinear {
    let a = ce.even;
    let two = Rational::from_integer(2.into());
    SymmetricBilinear::from_fn(a, ce.odd_count(), |k, l| {
        let mut e = vec![0u32; a];
        e[k] += 1;
        e[l] += 1;
        ce.quadrics
            .iter()
            .map(|q| if k == l { q.coeff(&e) * &two } else { q.coeff(&e) })
            .collect()
    })
    .expect("indices in range")
}

/// Dimensions of the cochain slices for `t <= d`.
pub fn cochain_dims(ce: &ChevalleyComplex, d: u64) -> GradedDims {
    let b = ce.odd_count();
    GradedDims::new(
        (0..=b)
            .map(|p| (0..=d).map(|t| slice_basis(ce.even, b, p, t).len() as u64).collect())
            .collect(),
    )
}

/// Cohomology dimensions for `p in 0..=b`, `t <= d`.
pub fn ce_cohomology(ce: &ChevalleyComplex, d: u64) -> GradedDims {
    let b = ce.odd_count();
    let rank = |p: usize, t: u64| -> u64 {
        if p == 0 || p > b {
            0
        } else {
            ce.differential(p, t).rank() as u64
        }
    };
    let table = (0..=b)
        .map(|p| {
            (0..=d)
                .map(|t| {
                    let dim = slice_basis(ce.even, b, p, t).len() as u64;
                    let incoming = if t >= 2 { rank(p + 1, t - 2) } else { 0 };
                    dim - rank(p, t) - incoming
                })
                .collect()
        })
        .collect();
    GradedDims::new(table)
}

/// Whether `d ∘ d = 0` on every slice with `t <= d`.
pub fn d_squared_vanishes(ce: &ChevalleyComplex, d: u64) -> bool {
    let b = ce.odd_count();
    (2..=b).all(|p| {
        (0..=d).all(|t| {
            let first = ce.differential(p, t);
            let second = ce.differential(p - 1, t + 2);
            second.mul(&first).map(|m| m.is_zero()).unwrap_or(false)
        })
    })
}

/// Alternating sums `Σ_p (-1)^p dims(p, w - 2p)` for each total weight
/// `w <= d`. The differential preserves `w = t + 2p`.
pub fn euler_characteristic(dims: &GradedDims, d: u64) -> Vec<i64> {
    (0..=d as usize)
        .map(|w| {
            (0..dims.rows().len())
                .filter(|&p| 2 * p <= w)
                .map(|p| {
                    let v = dims.get(p, w - 2 * p) as i64;
                    if p % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> TangentLieAlgebra {
        TangentLieAlgebra::new(
            SymmetricBilinear::from_components(2, &[RatMatrix::from_i64(&[&[2, 0], &[0, 2]])]).unwrap(),
        )
    }

    fn ce(a: usize, qs: &[&str]) -> ChevalleyComplex {
        let names: Vec<String> = (1..=a).map(|i| format!("y{i}")).collect();
        let r = PolyRing::new(names, vec![1; a]).unwrap();
        ChevalleyComplex::from_quadrics(a, r.parse_all(qs).unwrap()).unwrap()
    }

    #[test]
    fn cochain_of_a1() {
        let c = chevalley_cochain(&a1());
        assert_eq!((c.even_count(), c.odd_count()), (2, 1));
        assert_eq!(c.even_ring().format(&c.quadrics()[0]), "y1^2 + y2^2");
    }

    #[test]
    fn cochain_of_zero_and_abelian() {
        let c = chevalley_cochain(&TangentLieAlgebra::zero());
        assert_eq!((c.even_count(), c.odd_count()), (0, 0));
        let g = TangentLieAlgebra::new(SymmetricBilinear::zero(1, 1));
        let c = chevalley_cochain(&g);
        assert!(c.quadrics()[0].is_zero());
    }

    #[test]
    fn cohomology_of_a1() {
        let h = ce_cohomology(&ce(2, &["y1^2 + y2^2"]), 4);
        assert_eq!(h.row(0), &[1, 2, 2, 2, 2]);
        assert_eq!(h.row(1), &[0, 0, 0, 0, 0]);
    }

    #[test]
    fn cohomology_of_trivial_complexes() {
        let h = ce_cohomology(&ChevalleyComplex::from_quadrics(0, vec![]).unwrap(), 3);
        assert_eq!(h.row(0), &[1, 0, 0, 0]);
        let h = ce_cohomology(&ce(1, &["0"]), 3);
        assert_eq!(h.row(0), &[1, 1, 1, 1]);
        assert_eq!(h.row(1), &[1, 1, 1, 1]);
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract_bracket(&ce(2, &["y1^2 + y2^2"])).component(0), RatMatrix::from_i64(&[&[2, 0], &[0, 2]]));
        assert_eq!(extract_bracket(&ce(2, &["y1*y2"])).component(0), RatMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert!(extract_bracket(&ce(2, &["0"])).is_zero());
    }

    #[test]
    fn round_trip_of_a1() {
        assert_eq!(extract_bracket(&chevalley_cochain(&a1())), a1().bracket);
    }

    #[test]
    fn koszul_signs_square_to_zero() {
        let c = ce(3, &["y1^2", "y2*y3", "y1*y3 - y2^2"]);
        assert!(d_squared_vanishes(&c, 4));
        let h = ce_cohomology(&c, 6);
        assert!(h.row(3).iter().all(|&d| d == 0));
    }

    #[test]
    fn rejects_non_quadrics() {
        let r = PolyRing::standard(&["y1"]);
        assert!(ChevalleyComplex::from_quadrics(1, vec![r.parse("y1^3").unwrap()]).is_err());
        assert!(ChevalleyComplex::from_quadrics(2, vec![r.parse("y1^2").unwrap()]).is_err());
    }

    #[test]
    fn euler_characteristic_matches_cochains() {
        let c = ce(2, &["y1^2", "y1*y2"]);
        let d = 6;
        let h = ce_cohomology(&c, d);
        let k = cochain_dims(&c, d);
        assert_eq!(euler_characteristic(&h, d), euler_characteristic(&k, d));
        assert_eq!(k.get(1, 0), 2);
    }
}
