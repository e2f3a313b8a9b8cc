//! Dense exact linear algebra over the rationals.
//!
//! Every basis this module hands out follows a fixed pivot convention
//! (first nonzero entry per column, scanning rows top-down), so matrices
//! built downstream are reproducible exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `a` or `a/b` (optional leading sign).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to type empty row lists.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.extend(row);
        }
        Ok(RatMatrix { rows: n, cols, entries })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!("column {j} has {} entries, expected {rows}", col.len())));
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Integer matrix literal; handy in tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, data).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in addition".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("row count mismatch in hstack".into()));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub form: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination; the pivot in each column is the first usable
/// nonzero entry scanning top-down.
///
/// Rows are scaled to integers and eliminated fraction-free, so every
/// intermediate entry is a minor of the scaled matrix and each division is
/// exact. Rationals appear only in the final normalization.
pub fn rref(m: &RatMatrix) -> Echelon {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            let scale = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&scale / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(found, prow);
        let (head, rest) = a.split_at_mut(prow);
        let (pivot_row, tail) = rest.split_first_mut().expect("prow < rows");
        let p = pivot_row[col].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let factor = std::mem::take(&mut row[col]);
            for c in 0..cols {
                if c == col {
                    continue;
                }
                let mut v = &p * &row[c];
                if !factor.is_zero() && !pivot_row[c].is_zero() {
                    v -= &factor * &pivot_row[c];
                }
                row[c] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = p;
        pivots.push(col);
        prow += 1;
    }
    let rank = pivots.len();
    let mut entries = Vec::with_capacity(rows * cols);
    for (r, row) in a.into_iter().enumerate() {
        if r < rank {
            let p = row[pivots[r]].clone();
            entries.extend(row.into_iter().map(|x| Rational::new(x, p.clone())));
        } else {
            entries.extend(std::iter::repeat_n(Rational::zero(), cols));
        }
    }
    Echelon { form: RatMatrix { rows, cols, entries }, pivots, rank }
}

/// One kernel vector per non-pivot column, with that free coordinate set to
/// 1 and the other free coordinates 0, listed in column order.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let Echelon { form, pivots, .. } = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -form.get(r, free).clone();
            }
            v
        })
        .collect()
}

/// A surjection from the codomain of `m` onto `codomain / image(m)`.
///
/// Rows are the kernel basis of `mᵀ`, so `cokernel_presentation(m) * m = 0`
/// and the result has `m.rows() - rank(m)` rows.
pub fn cokernel_presentation(m: &RatMatrix) -> RatMatrix {
    let rows = kernel_basis(&m.transpose());
    RatMatrix::from_rows(m.rows, rows).expect("kernel vectors have codomain length")
}

/// Some solution of `m x = b` (free coordinates zero), or `None`.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows
        )));
    }
    let column = RatMatrix::from_columns(m.rows, &[b.to_vec()])?;
    let aug = m.hstack(&column)?;
    let Echelon { form, pivots, .. } = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = form.get(r, m.cols).clone();
    }
    Ok(Some(x))
}

/// A linear map out of a subspace into a quotient space.
///
/// The subspace is spanned by `domain_basis`; the quotient is presented by
/// `codomain_projection`. Column `k` of `map` is the image of basis vector
/// `k` in quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubquotientMap {
    pub domain_basis: Vec<Vec<Rational>>,
    pub codomain_projection: RatMatrix,
    pub map: RatMatrix,
}

impl SubquotientMap {
    pub fn domain_dim(&self) -> usize {
        self.domain_basis.len()
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_projection.rows()
    }

    /// Evaluates the map on a vector of the ambient domain space that lies in
    /// the spanned subspace.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let basis = RatMatrix::from_columns(v.len(), &self.domain_basis)?;
        let coords = solve(&basis, v)?
            .ok_or_else(|| Error::Dimension("vector outside the domain subspace".into()))?;
        self.map.mul_vec(&coords)
    }
}

/// A short exact sequence `0 -> A -> B -> C -> 0` of coordinate spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRow {
    pub inclusion: RatMatrix,
    pub projection: RatMatrix,
}

impl ExactRow {
    pub fn new(inclusion: RatMatrix, projection: RatMatrix) -> Self {
        ExactRow { inclusion, projection }
    }

    fn dims(&self) -> (usize, usize, usize) {
        (self.inclusion.cols(), self.inclusion.rows(), self.projection.rows())
    }

    fn check(&self, label: &str) -> Result<()> {
        let (a, b, c) = self.dims();
        if self.projection.cols() != b {
            return Err(Error::Dimension(format!("{label}: projection has {} columns, expected {b}", self.projection.cols())));
        }
        if !self.projection.mul(&self.inclusion)?.is_zero() {
            return Err(Error::Exactness(format!("{label}: composite is nonzero")));
        }
        let ri = self.inclusion.rank();
        let rp = self.projection.rank();
        if ri != a {
            return Err(Error::Exactness(format!("{label}: inclusion is not injective")));
        }
        if rp != c {
            return Err(Error::Exactness(format!("{label}: projection is not surjective")));
        }
        if ri + rp != b {
            return Err(Error::Exactness(format!("{label}: not exact in the middle")));
        }
        Ok(())
    }
}

/// The three vertical maps between two exact rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalMaps {
    pub left: RatMatrix,
    pub middle: RatMatrix,
    pub right: RatMatrix,
}

/// Connecting map `Ker(right) -> Coker(left)` of the snake lemma.
///
/// Each kernel vector is lifted through the top projection, pushed down by
/// the middle map, pulled back through the bottom inclusion and projected
/// onto the cokernel of the left map. The connecting map carries no sign.
pub fn snake_boundary(top: &ExactRow, bottom: &ExactRow, verticals: &VerticalMaps) -> Result<SubquotientMap> {
    connecting_map(top, bottom, verticals, |_| None)
}

/// [`snake_boundary`] with each lift perturbed by a random element of the
/// top inclusion's image. The result must not depend on the perturbation.
pub fn snake_boundary_with_lifts<R: Rng>(
    top: &ExactRow,
    bottom: &ExactRow,
    verticals: &VerticalMaps,
    rng: &mut R,
) -> Result<SubquotientMap> {
    let a = top.inclusion.cols();
    connecting_map(top, bottom, verticals, |_| {
        let coeffs: Vec<Rational> = (0..a).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        Some(top.inclusion.mul_vec(&coeffs).expect("inclusion has a columns"))
    })
}

fn connecting_map(
    top: &ExactRow,
    bottom: &ExactRow,
    verticals: &VerticalMaps,
    mut perturb: impl FnMut(usize) -> Option<Vec<Rational>>,
) -> Result<SubquotientMap> {
    top.check("top row")?;
    bottom.check("bottom row")?;
    let (a, b, c) = top.dims();
    let (a2, b2, c2) = bottom.dims();
    let shape_ok = |m: &RatMatrix, r: usize, c: usize| m.rows() == r && m.cols() == c;
    if !shape_ok(&verticals.left, a2, a) || !shape_ok(&verticals.middle, b2, b) || !shape_ok(&verticals.right, c2, c) {
        return Err(Error::Dimension("vertical maps do not match the rows".into()));
    }
    if verticals.middle.mul(&top.inclusion)? != bottom.inclusion.mul(&verticals.left)? {
        return Err(Error::Diagram("left square".into()));
    }
    if verticals.right.mul(&top.projection)? != bottom.projection.mul(&verticals.middle)? {
        return Err(Error::Diagram("right square".into()));
    }

    let domain_basis = kernel_basis(&verticals.right);
    let codomain_projection = cokernel_presentation(&verticals.left);
    let mut columns = Vec::with_capacity(domain_basis.len());
    for (k, v) in domain_basis.iter().enumerate() {
        let mut lift = solve(&top.projection, v)?.expect("projection is surjective");
        if let Some(shift) = perturb(k) {
            for (x, s) in lift.iter_mut().zip(shift) {
                *x += s;
            }
        }
        let pushed = verticals.middle.mul_vec(&lift)?;
        let pulled = solve(&bottom.inclusion, &pushed)?
            .ok_or_else(|| Error::Diagram("pushed lift is not in the bottom inclusion's image".into()))?;
        columns.push(codomain_projection.mul_vec(&pulled)?);
    }
    let map = RatMatrix::from_columns(codomain_projection.rows(), &columns)?;
    Ok(SubquotientMap { domain_basis, codomain_projection, map })
}

/// Renders a rational as `a` or `a/b`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
