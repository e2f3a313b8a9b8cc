use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactq::{RatMatrix, Rational};
use crate::polyring::{monomials_of_degree, Exponent, Poly, PolyMatrix};

/// A semifree DG module over `A = k[χ_1..χ_c]` with `deg χ_j = 2`.
///
/// Generator `g_k` has degree `degrees[k]`; `d(g_l) = Σ_k d[k][l] g_k` and
/// `d` raises degree by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGModule {
    operators: usize,
    degrees: Vec<i64>,
    differential: PolyMatrix,
}

impl DGModule {
    pub fn new(operators: usize, degrees: Vec<i64>, differential: PolyMatrix) -> Result<Self> {
        let n = degrees.len();
        if differential.rows() != n || differential.cols() != n {
            return Err(Error::Dimension(format!(
                "differential is {}x{} for {n} generators",
                differential.rows(),
                differential.cols()
            )));
        }
        if n > 0 && differential.nvars() != operators {
            return Err(Error::Dimension(format!(
                "entries have {} variables, expected {operators}",
                differential.nvars()
            )));
        }
        let weights = vec![2; operators];
        for k in 0..n {
            for l in 0..n {
                let e = differential.get(k, l);
                if e.is_zero() {
                    continue;
                }
                let want = degrees[l] + 1 - degrees[k];
                if e.homogeneous_degree(&weights).map(|d| d as i64) != Some(want) {
                    return Err(Error::Grading(format!(
                        "entry ({k}, {l}) must be homogeneous of degree {want}"
                    )));
                }
            }
        }
        if !differential.mul(&differential)?.is_zero() {
            return Err(Error::NotAComplex("d² is not zero".into()));
        }
        Ok(DGModule { operators, degrees, differential })
    }

    pub fn operator_count(&self) -> usize {
        self.operators
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn differential(&self) -> &PolyMatrix {
        &self.differential
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Position `(row, column)` of the first entry with nonzero constant
    /// term, scanning columns left to right.
    pub fn first_unit_entry(&self) -> Option<(usize, usize)> {
        (0..self.rank()).find_map(|l| {
            (0..self.rank()).find(|&k| !self.differential.get(k, l).constant_term().is_zero()).map(|k| (k, l))
        })
    }

    pub fn is_minimal(&self) -> bool {
        self.first_unit_entry().is_none()
    }
}

/// Dimensions for consecutive degrees starting at `first`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub first: i64,
    pub dims: Vec<u64>,
}

impl DegreeTable {
    /// Zero outside the stored range.
    pub fn get(&self, t: i64) -> u64 {
        if t < self.first {
            return 0;
        }
        self.dims.get((t - self.first) as usize).copied().unwrap_or(0)
    }

    pub fn last(&self) -> i64 {
        self.first + self.dims.len() as i64 - 1
    }
}

fn degree_basis(m: &DGModule, t: i64) -> Vec<(usize, Exponent)> {
    let weights = vec![2; m.operators];
    let mut out = Vec::new();
    for (k, &a) in m.degrees.iter().enumerate() {
        if t >= a {
            for mono in monomials_of_degree(&weights, (t - a) as u64) {
                out.push((k, mono));
            }
        }
    }
    out
}

/// Matrix of `d: M^t -> M^{t+1}` on the bases `χ^α g_k`.
fn degree_differential(m: &DGModule, t: i64) -> RatMatrix {
    let source = degree_basis(m, t);
    let target = degree_basis(m, t + 1);
    let index: std::collections::BTreeMap<&(usize, Exponent), usize> =
        target.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut out = RatMatrix::zeros(target.len(), source.len());
    for (col, (l, alpha)) in source.iter().enumerate() {
        for k in 0..m.rank() {
            for (e, c) in m.differential.get(k, *l).terms() {
                let mono: Exponent = e.iter().zip(alpha).map(|(a, b)| a + b).collect();
                let row = index[&(k, mono)];
                let v = out.get(row, col) + c;
                out.set(row, col, v);
            }
        }
    }
    out
}

/// `dim H^t(M)` for `t` from the lowest generator degree through `up_to`.
pub fn dg_cohomology(m: &DGModule, up_to: i64) -> DegreeTable {
    let first = m.degrees.iter().copied().min().unwrap_or(0).min(up_to);
    let ranks: Vec<u64> = (first..=up_to).map(|t| degree_differential(m, t).rank() as u64).collect();
    let dims = (first..=up_to)
        .enumerate()
        .map(|(i, t)| {
            let size = degree_basis(m, t).len() as u64;
            let incoming = if i == 0 { 0 } else { ranks[i - 1] };
            size - ranks[i] - incoming
        })
        .collect();
    DegreeTable { first, dims }
}

/// Output of [`minimize_dg`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModel {
    pub module: DGModule,
    /// Whether the minimal model has finitely many generators.
    pub perfect: bool,
    pub cohomology: DegreeTable,
}

/// Cancels unit entries one at a time until the differential lies in the
/// augmentation ideal, then reports `H*` through degree `up_to`.
///
/// Cancelling `d[i][j] = u` removes `g_i, g_j` and replaces `d[k][l]` by
/// `d[k][l] - d[k][j] u⁻¹ d[i][l]`.
pub fn minimize_dg(m: &DGModule, up_to: i64) -> Result<MinimalModel> {
    let mut degrees = m.degrees.clone();
    let mut d: Vec<Vec<Poly>> = (0..m.rank()).map(|k| m.differential.row(k).to_vec()).collect();
    let nvars = m.operators;
    loop {
        let size = degrees.len();
        let found = (0..size).find_map(|l| (0..size).find(|&k| !d[k][l].constant_term().is_zero()).map(|k| (k, l)));
        let Some((i, j)) = found else { break };
        let inv: Rational = d[i][j].constant_term().recip();
        let keep: Vec<usize> = (0..size).filter(|&k| k != i && k != j).collect();
        let next: Vec<Vec<Poly>> = keep
            .iter()
            .map(|&k| {
                keep.iter()
                    .map(|&l| {
                        if d[k][j].is_zero() || d[i][l].is_zero() {
                            d[k][l].clone()
                        } else {
                            &d[k][l] - &(&d[k][j] * &d[i][l]).scale(&inv)
                        }
                    })
                    .collect()
            })
            .collect();
        degrees = keep.iter().map(|&k| degrees[k]).collect();
        d = next;
    }
    let differential = PolyMatrix::from_rows(nvars, degrees.len(), d)?;
    let module = DGModule::new(m.operators, degrees, differential)?;
    let cohomology = dg_cohomology(&module, up_to);
    Ok(MinimalModel { module, perfect: true, cohomology })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(c: usize, degrees: Vec<i64>, rows: Vec<Vec<Poly>>) -> Result<DGModule> {
        let n = degrees.len();
        DGModule::new(c, degrees, PolyMatrix::from_rows(c, n, rows).unwrap())
    }

    #[test]
    fn free_rank_one() {
        let m = dg(1, vec![0], vec![vec![Poly::zero(1)]]).unwrap();
        let out = minimize_dg(&m, 6).unwrap();
        assert_eq!(out.module, m);
        assert!(out.perfect);
        assert_eq!(out.cohomology.dims, vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn identity_cone_vanishes() {
        let m = dg(1, vec![0, 1], vec![vec![Poly::zero(1), Poly::zero(1)], vec![Poly::one(1), Poly::zero(1)]]).unwrap();
        let out = minimize_dg(&m, 6).unwrap();
        assert_eq!(out.module.rank(), 0);
        assert!(out.cohomology.dims.iter().all(|&d| d == 0));
        assert!(dg_cohomology(&m, 6).dims.iter().all(|&d| d == 0));
    }

    #[test]
    fn cone_of_chi() {
        let chi = Poly::var(1, 0);
        let z = Poly::zero(1);
        let m = dg(1, vec![1, 0], vec![vec![z.clone(), z.clone()], vec![chi, z]]).unwrap();
        let out = minimize_dg(&m, 6).unwrap();
        assert_eq!(out.module, m);
        assert_eq!(out.cohomology.first, 0);
        assert_eq!(out.cohomology.dims, vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn rejects_non_complexes_and_bad_degrees() {
        let one = Poly::one(1);
        let z = Poly::zero(1);
        let bad = dg(1, vec![0, 1], vec![vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]]);
        assert!(bad.is_err());
        let twisted = dg(1, vec![0, 0], vec![vec![z.clone(), z.clone()], vec![one, z]]);
        assert!(matches!(twisted, Err(Error::Grading(_))));
    }

    #[test]
    fn cancellation_keeps_the_rest() {
        // g0 (deg 0) -> g1 (deg 1) by 1, plus g2 (deg 1) -> g3 (deg 0) by χ, with cross terms.
        let c = 1;
        let chi = Poly::var(c, 0);
        let z = Poly::zero(c);
        let one = Poly::one(c);
        let mut rows = vec![vec![z.clone(); 4]; 4];
        rows[1][0] = one.clone();
        rows[3][2] = chi.clone();
        let m = dg(c, vec![0, 1, 1, 0], rows).unwrap();
        let out = minimize_dg(&m, 8).unwrap();
        assert_eq!(out.module.degrees(), &[1, 0]);
        assert!(out.module.is_minimal());
        for t in -1..=8 {
            assert_eq!(out.cohomology.get(t), dg_cohomology(&m, 8).get(t));
        }
    }
}
