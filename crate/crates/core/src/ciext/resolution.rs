use super::{column_degree, CiRing, GradedModulePresentation};
use crate::error::{Error, Result};
use crate::exactq::{RatMatrix, Rational};
use crate::polyring::{module_basis, module_syzygies, monomials_of_degree, Exponent, Poly, PolyMatrix};

/// Free modules `F_0..F_D` and differentials `d_i: F_i -> F_{i-1}`.
///
/// `twists[i]` lists the generator degrees of `F_i`; `differentials[i - 1]`
/// is `d_i`, with `rank F_{i-1}` rows and `rank F_i` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    pub twists: Vec<Vec<i64>>,
    pub differentials: Vec<PolyMatrix>,
    pub minimal: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(Vec::len).collect()
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn d(&self, i: usize) -> &PolyMatrix {
        &self.differentials[i - 1]
    }

    /// Whether `d_{i-1} d_i` vanishes in `R` for every `i`.
    pub fn is_complex(&self, ring: &CiRing) -> bool {
        (2..=self.length()).all(|i| match self.d(i - 1).mul(self.d(i)) {
            Ok(m) => m.entries().iter().all(|e| ring.normal_form(e).is_zero()),
            Err(_) => false,
        })
    }

    /// Whether every entry of every differential lies in the maximal ideal.
    pub fn entries_in_maximal_ideal(&self) -> bool {
        self.differentials.iter().all(|d| d.constant_part().is_zero())
    }

    /// `dim Ext^i(M, k) = β_i - rank(d_i ⊗ k) - rank(d_{i+1} ⊗ k)` for
    /// `i < length`.
    pub fn ext_dims_from_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(|d| d.constant_part().rank()).collect();
        (0..self.length())
            .map(|i| {
                let incoming = if i == 0 { 0 } else { ranks[i - 1] };
                self.twists[i].len() - incoming - ranks[i]
            })
            .collect()
    }
}

fn vector_degree(ring: &CiRing, v: &[Poly], twists: &[i64]) -> i64 {
    column_degree(ring, v, twists).expect("homogeneous by construction").expect("nonzero vector")
}

fn reduce_vector(ring: &CiRing, v: &[Poly]) -> Vec<Poly> {
    v.iter().map(|e| ring.normal_form(e)).collect()
}

/// Removes generators made redundant by relations with a unit entry.
fn prune_units(ring: &CiRing, twists: &[i64], columns: &[Vec<Poly>]) -> (Vec<i64>, Vec<Vec<Poly>>) {
    let mut twists = twists.to_vec();
    let mut cols: Vec<Vec<Poly>> = columns.to_vec();
    loop {
        let found = cols.iter().enumerate().find_map(|(j, col)| {
            col.iter().position(|e| !e.is_zero() && e.is_constant()).map(|i| (i, j))
        });
        let Some((i, j)) = found else { break };
        let pivot = cols.remove(j);
        let inv = pivot[i].constant_term().recip();
        for col in cols.iter_mut() {
            if col[i].is_zero() {
                continue;
            }
            let factor = col[i].scale(&inv);
            for (e, p) in col.iter_mut().zip(&pivot) {
                *e = ring.normal_form(&(&*e - &(&factor * p)));
            }
        }
        for col in cols.iter_mut() {
            col.remove(i);
        }
        twists.remove(i);
    }
    cols.retain(|c| c.iter().any(|e| !e.is_zero()));
    (twists, cols)
}

/// Generators of the kernel over `R` of the map `R^q -> R^p` given by
/// `columns`, as vectors in `R^q`.
fn kernel(ring: &CiRing, columns: &[Vec<Poly>], row_twists: &[i64], col_twists: &[i64]) -> Result<Vec<Vec<Poly>>> {
    let (p, q) = (row_twists.len(), columns.len());
    let n = ring.nvars();
    if q == 0 {
        return Ok(Vec::new());
    }
    if p == 0 {
        return Ok((0..q)
            .map(|k| (0..q).map(|l| if k == l { Poly::one(n) } else { Poly::zero(n) }).collect())
            .collect());
    }
    let gb = ring.presentation().gb().generators();
    let mut all: Vec<Vec<Poly>> = columns.to_vec();
    let mut degrees: Vec<i64> = col_twists.to_vec();
    for g in gb {
        let dg = ring.degree_of(g).expect("nonzero basis element");
        for k in 0..p {
            let mut v = vec![Poly::zero(n); p];
            v[k] = g.clone();
            all.push(v);
            degrees.push(dg + row_twists[k]);
        }
    }
    let syz = module_syzygies(&all, p, row_twists, &degrees, ring.order(), ring.limits())?;
    Ok(syz
        .into_iter()
        .map(|s| reduce_vector(ring, &s[..q]))
        .filter(|v| v.iter().any(|e| !e.is_zero()))
        .collect())
}

/// Basis of `(⊕R(-twists))_t` by standard monomials.
fn slice_basis(ring: &CiRing, twists: &[i64], t: i64) -> Vec<(usize, Exponent)> {
    let mut out = Vec::new();
    for (k, &a) in twists.iter().enumerate() {
        if t >= a {
            for m in ring.presentation().standard_monomials((t - a) as u64) {
                out.push((k, m));
            }
        }
    }
    out
}

fn coordinates(v: &[Poly], basis: &[(usize, Exponent)]) -> Vec<Rational> {
    basis.iter().map(|(k, m)| v[*k].coeff(m)).collect()
}

/// A canonical minimal generating set of the submodule of `⊕R(-twists)`
/// spanned by `gens`.
///
/// The reduced Gröbner basis of the preimage in `S^q` depends only on the
/// submodule; its images in `R^q` are scanned by degree and kept when they
/// are not in the span of the ones kept so far.
fn minimal_generators(ring: &CiRing, gens: &[Vec<Poly>], twists: &[i64]) -> Result<Vec<(i64, Vec<Poly>)>> {
    let q = twists.len();
    let n = ring.nvars();
    if gens.is_empty() || q == 0 {
        return Ok(Vec::new());
    }
    let mut inputs: Vec<Vec<Poly>> = gens.to_vec();
    for g in ring.presentation().gb().generators() {
        for k in 0..q {
            let mut v = vec![Poly::zero(n); q];
            v[k] = g.clone();
            inputs.push(v);
        }
    }
    let basis = module_basis(&inputs, q, twists, ring.order(), ring.limits())?;
    let mut candidates: Vec<(i64, Vec<Poly>)> = basis
        .iter()
        .map(|v| reduce_vector(ring, v))
        .filter(|v| v.iter().any(|e| !e.is_zero()))
        .map(|v| (vector_degree(ring, &v, twists), v))
        .collect();
    candidates.sort_by_key(|(d, _)| *d);

    let mut kept: Vec<(i64, Vec<Poly>)> = Vec::new();
    let mut idx = 0;
    while idx < candidates.len() {
        let t = candidates[idx].0;
        let slice = slice_basis(ring, twists, t);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (s, w) in &kept {
            for mono in monomials_of_degree(ring.weights(), (t - s) as u64) {
                let shifted: Vec<Poly> = w.iter().map(|e| ring.normal_form(&e.mul_monomial(&mono, &Rational::from_integer(1.into())))).collect();
                rows.push(coordinates(&shifted, &slice));
            }
        }
        let mut rank = span_rank(&rows, slice.len());
        while idx < candidates.len() && candidates[idx].0 == t {
            let c = candidates[idx].1.clone();
            rows.push(coordinates(&c, &slice));
            let r = span_rank(&rows, slice.len());
            if r > rank {
                rank = r;
                kept.push((t, c));
            } else {
                rows.pop();
            }
            idx += 1;
        }
    }
    Ok(kept)
}

fn span_rank(rows: &[Vec<Rational>], width: usize) -> usize {
    if rows.is_empty() || width == 0 {
        return 0;
    }
    RatMatrix::from_rows(width, rows.to_vec()).expect("uniform rows").rank()
}

fn matrix_of(ring: &CiRing, rows: usize, columns: &[Vec<Poly>]) -> PolyMatrix {
    PolyMatrix::from_columns(ring.nvars(), rows, columns).expect("columns have the row count")
}

fn check_width(ring: &CiRing, i: usize, rank: usize) -> Result<()> {
    if rank > ring.limits().max_width {
        return Err(Error::ResourceLimit(format!(
            "F_{i} has rank {rank}, above the width cap {}",
            ring.limits().max_width
        )));
    }
    Ok(())
}

/// Minimal graded free resolution of `m` through homological degree `d`.
pub fn minimal_resolution(ring: &CiRing, m: &GradedModulePresentation, d: usize) -> Result<FreeResolution> {
    let (t0, rels) = prune_units(ring, m.twists(), &m.relations().columns());
    check_width(ring, 0, t0.len())?;
    let mut twists = vec![t0];
    let mut differentials = Vec::new();
    let mut gens = rels;
    for i in 1..=d {
        let prev = twists.last().expect("F_0 exists").clone();
        let chosen = minimal_generators(ring, &gens, &prev)?;
        check_width(ring, i, chosen.len())?;
        let cols: Vec<Vec<Poly>> = chosen.iter().map(|(_, v)| v.clone()).collect();
        let degs: Vec<i64> = chosen.iter().map(|(t, _)| *t).collect();
        differentials.push(matrix_of(ring, prev.len(), &cols));
        if i < d {
            gens = kernel(ring, &cols, &prev, &degs)?;
        }
        twists.push(degs);
    }
    Ok(FreeResolution { twists, differentials, minimal: true })
}

/// A graded free resolution through degree `d` that takes every kernel
/// generator produced by the syzygy computation, without minimizing.
pub fn nonminimal_resolution(ring: &CiRing, m: &GradedModulePresentation, d: usize) -> Result<FreeResolution> {
    let t0 = m.twists().to_vec();
    let mut twists = vec![t0];
    let mut differentials = Vec::new();
    let mut gens: Vec<Vec<Poly>> =
        m.relations().columns().into_iter().filter(|c| c.iter().any(|e| !e.is_zero())).collect();
    for i in 1..=d {
        let prev = twists.last().expect("F_0 exists").clone();
        check_width(ring, i, gens.len())?;
        let degs: Vec<i64> = gens.iter().map(|v| vector_degree(ring, v, &prev)).collect();
        differentials.push(matrix_of(ring, prev.len(), &gens));
        let next = if i < d { kernel(ring, &gens, &prev, &degs)? } else { Vec::new() };
        twists.push(degs);
        gens = next;
    }
    let minimal = differentials.iter().all(|d| d.constant_part().is_zero());
    Ok(FreeResolution { twists, differentials, minimal })
}
