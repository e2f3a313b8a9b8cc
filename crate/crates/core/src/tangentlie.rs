//! The tangent Lie algebra of a complete intersection at a rational point.
//!
//! For `f: A^n -> A^m` and `z` with `f(z) = 0`, the fiber of the tangent
//! complex is the two-term complex `k^n --df--> k^m` in degrees 1 and 2, so
//! `g¹ = Ker df|_z` and `g² = Coker df|_z`. The only nonzero bracket
//! component is `g¹ ⊗ g¹ -> g²`, the Hessian of `f` restricted to the kernel
//! and projected to the cokernel.
//!
//! Two constructions are provided: [`hessian_direct`] reads second partials,
//! and [`hessian_snake`] builds the diagram of differential operators of
//! order at most two and takes its snake boundary. They must agree exactly.
//!
//! `B(u, u)` is the full second derivative, so `f = x²` gives `B(e, e) = 2`.
//! Divided-power conventions differ from this by a factor of two.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactq::{
    cokernel_presentation, kernel_basis, snake_boundary, snake_boundary_with_lifts, ExactRow, RatMatrix, Rational,
    SubquotientMap, VerticalMaps,
};
use crate::polyring::Poly;
use num_traits::Zero;

/// The complex `k^n -> k^m` given by the Jacobian at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentComplexFiber {
    pub jacobian: RatMatrix,
    pub g1_basis: Vec<Vec<Rational>>,
    pub g2_projection: RatMatrix,
}

impl TangentComplexFiber {
    pub fn new(jacobian: RatMatrix) -> Self {
        let g1_basis = kernel_basis(&jacobian);
        let g2_projection = cokernel_presentation(&jacobian);
        TangentComplexFiber { jacobian, g1_basis, g2_projection }
    }

    pub fn g1_dim(&self) -> usize {
        self.g1_basis.len()
    }

    pub fn g2_dim(&self) -> usize {
        self.g2_projection.rows()
    }
}

/// A symmetric bilinear map `k^a × k^a -> k^b`, stored on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBilinear {
    dim: usize,
    target_dim: usize,
    values: Vec<Vec<Rational>>,
}

impl SymmetricBilinear {
    pub fn zero(dim: usize, target_dim: usize) -> Self {
        SymmetricBilinear { dim, target_dim, values: vec![vec![Rational::zero(); target_dim]; dim * dim] }
    }

    /// Builds the map from its values on `(e_i, e_j)`, `i <= j`.
    pub fn from_fn(dim: usize, target_dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Result<Self> {
        let mut b = Self::zero(dim, target_dim);
        for i in 0..dim {
            for j in i..dim {
                b.set(i, j, f(i, j))?;
            }
        }
        Ok(b)
    }

    /// Builds the map from one symmetric `a × a` matrix per target coordinate.
    pub fn from_components(dim: usize, components: &[RatMatrix]) -> Result<Self> {
        for c in components {
            if c.rows() != dim || c.cols() != dim {
                return Err(Error::Dimension(format!("component is {}x{}, expected {dim}x{dim}", c.rows(), c.cols())));
            }
            if *c != c.transpose() {
                return Err(Error::InvalidArgument("bracket component is not symmetric".into()));
            }
        }
        Self::from_fn(dim, components.len(), |i, j| components.iter().map(|c| c.get(i, j).clone()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        &self.values[i * self.dim + j]
    }

    /// Sets `B(e_i, e_j)` and `B(e_j, e_i)`.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Rational>) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::IndexOutOfRange { index: i.max(j), len: self.dim });
        }
        if value.len() != self.target_dim {
            return Err(Error::Dimension(format!("value has length {}, expected {}", value.len(), self.target_dim)));
        }
        self.values[j * self.dim + i] = value.clone();
        self.values[i * self.dim + j] = value;
        Ok(())
    }

    /// `B(u, v)` for arbitrary coordinate vectors.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::Dimension("argument length differs from the source dimension".into()));
        }
        let mut out = vec![Rational::zero(); self.target_dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for (o, b) in out.iter_mut().zip(self.get(i, j)) {
                    *o += &c * b;
                }
            }
        }
        Ok(out)
    }

    /// The `a × a` matrix of target coordinate `k`.
    pub fn component(&self, k: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.set(i, j, self.get(i, j)[k].clone());
            }
        }
        m
    }

    pub fn components(&self) -> Vec<RatMatrix> {
        (0..self.target_dim).map(|k| self.component(k)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    /// Rank of the induced linear map `Sym²(k^a) -> k^b`.
    pub fn rank(&self) -> usize {
        let mut cols = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                cols.push(self.get(i, j).to_vec());
            }
        }
        match RatMatrix::from_columns(self.target_dim, &cols) {
            Ok(m) => m.rank(),
            Err(_) => 0,
        }
    }
}

/// `g = g¹ ⊕ g²` with its bracket `g¹ × g¹ -> g²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentLieAlgebra {
    pub bracket: SymmetricBilinear,
}

impl TangentLieAlgebra {
    pub fn new(bracket: SymmetricBilinear) -> Self {
        TangentLieAlgebra { bracket }
    }

    pub fn zero() -> Self {
        TangentLieAlgebra { bracket: SymmetricBilinear::zero(0, 0) }
    }

    pub fn g1_dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn g2_dim(&self) -> usize {
        self.bracket.target_dim()
    }
}

/// Everything [`tangent_lie`] computed at a point.
#[derive(Clone, Debug)]
pub struct TangentLieComputation {
    pub fiber: TangentComplexFiber,
    pub algebra: TangentLieAlgebra,
    pub direct: SymmetricBilinear,
    pub snake: SymmetricBilinear,
    pub agree: bool,
}

/// The diagram of order `<= 2` differential operators modulo order 0 at a
/// point, with its symmetrization map.
///
/// Top row: `0 -> k^n -> F₂/F₀ -> Sym²(k^n) -> 0` with `F₂/F₀` on the basis
/// `∂_1..∂_n, ∂_i∂_j (i <= j)`; the bottom row is the same for `k^m`. The
/// middle map pushes an operator forward through `f`.
#[derive(Clone, Debug)]
pub struct DiffOpFiber {
    pub top: ExactRow,
    pub bottom: ExactRow,
    pub verticals: VerticalMaps,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

fn sym2_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

fn filtered_row(n: usize) -> ExactRow {
    let s = sym2_dim(n);
    let mut inclusion = RatMatrix::zeros(n + s, n);
    for i in 0..n {
        inclusion.set(i, i, Rational::from_integer(1.into()));
    }
    let mut projection = RatMatrix::zeros(s, n + s);
    for p in 0..s {
        projection.set(p, n + p, Rational::from_integer(1.into()));
    }
    ExactRow::new(inclusion, projection)
}

fn check_point(f: &[Poly], z: &[Rational]) -> Result<()> {
    for (k, p) in f.iter().enumerate() {
        if p.nvars() != z.len() {
            return Err(Error::Dimension(format!("component {k} has {} variables, point has {}", p.nvars(), z.len())));
        }
        let v = p.evaluate(z)?;
        if !v.is_zero() {
            return Err(Error::OffLocus(format!("component {k} takes the value {v} at the point")));
        }
    }
    Ok(())
}

/// First partials of `f` at `z`, an `m × n` matrix.
pub fn jacobian_at(f: &[Poly], z: &[Rational]) -> Result<RatMatrix> {
    check_point(f, z)?;
    let n = z.len();
    let mut j = RatMatrix::zeros(f.len(), n);
    for (k, p) in f.iter().enumerate() {
        for i in 0..n {
            j.set(k, i, p.derivative(i)?.evaluate(z)?);
        }
    }
    Ok(j)
}

/// `H[k][i][j] = ∂²f_k/∂x_i∂x_j (z)`.
fn second_partials(f: &[Poly], z: &[Rational]) -> Result<Vec<RatMatrix>> {
    let n = z.len();
    f.iter()
        .map(|p| {
            let mut h = RatMatrix::zeros(n, n);
            for i in 0..n {
                let di = p.derivative(i)?;
                for j in i..n {
                    let v = di.derivative(j)?.evaluate(z)?;
                    h.set(j, i, v.clone());
                    h.set(i, j, v);
                }
            }
            Ok(h)
        })
        .collect()
}

/// Hessian bracket from second partials, in the kernel and cokernel bases
/// of [`TangentComplexFiber`].
pub fn hessian_direct(f: &[Poly], z: &[Rational]) -> Result<SymmetricBilinear> {
    let fiber = TangentComplexFiber::new(jacobian_at(f, z)?);
    let hess = second_partials(f, z)?;
    let basis = &fiber.g1_basis;
    SymmetricBilinear::from_fn(fiber.g1_dim(), fiber.g2_dim(), |a, b| {
        let (u, v) = (&basis[a], &basis[b]);
        let raw: Vec<Rational> = hess
            .iter()
            .map(|h| {
                let hv = h.mul_vec(v).expect("square Hessian");
                u.iter().zip(&hv).map(|(x, y)| x * y).sum()
            })
            .collect();
        fiber.g2_projection.mul_vec(&raw).expect("projection has m columns")
    })
}

/// Assembles the differential-operator diagram of `f` at `z`.
pub fn diff_op_fiber(f: &[Poly], z: &[Rational]) -> Result<DiffOpFiber> {
    let jac = jacobian_at(f, z)?;
    let hess = second_partials(f, z)?;
    let (m, n) = (jac.rows(), jac.cols());
    let (sn, sm) = (sym2_dim(n), sym2_dim(m));

    let mut right = RatMatrix::zeros(sm, sn);
    for i in 0..n {
        for j in i..n {
            let col = pair_index(n, i, j);
            for k in 0..m {
                for l in k..m {
                    let v = if k == l {
                        jac.get(k, i) * jac.get(k, j)
                    } else {
                        jac.get(k, i) * jac.get(l, j) + jac.get(l, i) * jac.get(k, j)
                    };
                    right.set(pair_index(m, k, l), col, v);
                }
            }
        }
    }

    let mut middle = RatMatrix::zeros(m + sm, n + sn);
    for i in 0..n {
        for k in 0..m {
            middle.set(k, i, jac.get(k, i).clone());
        }
    }
    for i in 0..n {
        for j in i..n {
            let col = n + pair_index(n, i, j);
            for k in 0..m {
                middle.set(k, col, hess[k].get(i, j).clone());
            }
            for r in 0..sm {
                middle.set(m + r, col, right.get(r, col - n).clone());
            }
        }
    }

    Ok(DiffOpFiber {
        top: filtered_row(n),
        bottom: filtered_row(m),
        verticals: VerticalMaps { left: jac, middle, right },
    })
}

/// The symmetric product `u·v` in the `∂_i∂_j (i <= j)` basis of `Sym²(k^n)`.
fn symmetric_product(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = u.len();
    let mut out = vec![Rational::zero(); sym2_dim(n)];
    for i in 0..n {
        for j in i..n {
            out[pair_index(n, i, j)] = if i == j { &u[i] * &v[i] } else { &u[i] * &v[j] + &u[j] * &v[i] };
        }
    }
    out
}

fn bracket_from_boundary(fiber: &TangentComplexFiber, boundary: &SubquotientMap) -> Result<SymmetricBilinear> {
    let basis = &fiber.g1_basis;
    let mut b = SymmetricBilinear::zero(fiber.g1_dim(), fiber.g2_dim());
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let w = symmetric_product(&basis[i], &basis[j]);
            b.set(i, j, boundary.apply(&w)?)?;
        }
    }
    Ok(b)
}

/// Hessian bracket as the snake boundary of [`diff_op_fiber`] composed with
/// `Sym²(Ker df) -> Ker Sym²(df)`.
pub fn hessian_snake(f: &[Poly], z: &[Rational]) -> Result<SymmetricBilinear> {
    let d = diff_op_fiber(f, z)?;
    let fiber = TangentComplexFiber::new(d.verticals.left.clone());
    let boundary = snake_boundary(&d.top, &d.bottom, &d.verticals)?;
    bracket_from_boundary(&fiber, &boundary)
}

/// [`hessian_snake`] with randomly perturbed lifts in the boundary map.
pub fn hessian_snake_with_lifts<R: Rng>(f: &[Poly], z: &[Rational], rng: &mut R) -> Result<SymmetricBilinear> {
    let d = diff_op_fiber(f, z)?;
    let fiber = TangentComplexFiber::new(d.verticals.left.clone());
    let boundary = snake_boundary_with_lifts(&d.top, &d.bottom, &d.verticals, rng)?;
    bracket_from_boundary(&fiber, &boundary)
}

/// Computes `g_{Z,z}` and cross-checks the two Hessian constructions.
pub fn tangent_lie(f: &[Poly], z: &[Rational]) -> Result<TangentLieComputation> {
    let fiber = TangentComplexFiber::new(jacobian_at(f, z)?);
    let direct = hessian_direct(f, z)?;
    let snake = hessian_snake(f, z)?;
    let agree = direct == snake;
    Ok(TangentLieComputation { fiber, algebra: TangentLieAlgebra::new(direct.clone()), direct, snake, agree })
}
