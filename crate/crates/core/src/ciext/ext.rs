use rand::{Rng, RngCore};

use super::{minimal_resolution, CiRing, FreeResolution, GradedModulePresentation};
use crate::error::{Error, Result};
use crate::exactq::{rat, RatMatrix};
use crate::polyring::{monomials_of_degree, Poly, PolyMatrix};

/// Degree-2 chain operators `χ_j(i): F_i -> F_{i-2}` over `R`.
///
/// `chain_maps[j][i - 2]` is `χ_j(i)` for `2 <= i <= length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisenbudOperators {
    pub chain_maps: Vec<Vec<PolyMatrix>>,
}

impl EisenbudOperators {
    /// `χ_j(i)` for `i >= 2`.
    pub fn chi(&self, j: usize, i: usize) -> &PolyMatrix {
        &self.chain_maps[j][i - 2]
    }

    /// Induced maps `Ext^k -> Ext^{k+2}`: `ext_maps()[j][k]` is the
    /// transpose of the constant part of `χ_j(k + 2)`.
    pub fn ext_maps(&self) -> Vec<Vec<RatMatrix>> {
        self.chain_maps
            .iter()
            .map(|maps| maps.iter().map(|m| m.constant_part().transpose()).collect())
            .collect()
    }

    /// Whether `d_{i-2} χ_j(i) = χ_j(i-1) d_i` in `R` for `3 <= i <= length`.
    pub fn are_chain_maps(&self, ring: &CiRing, res: &FreeResolution) -> bool {
        self.chain_maps.iter().enumerate().all(|(j, maps)| {
            (3..maps.len() + 2).all(|i| {
                let left = res.d(i - 2).mul(self.chi(j, i));
                let right = self.chi(j, i - 1).mul(res.d(i));
                match (left, right) {
                    (Ok(l), Ok(r)) => match l.sub(&r) {
                        Ok(diff) => diff.entries().iter().all(|e| ring.normal_form(e).is_zero()),
                        Err(_) => false,
                    },
                    _ => false,
                }
            })
        })
    }
}

fn random_homogeneous<R: Rng + ?Sized>(ring: &CiRing, degree: i64, rng: &mut R) -> Poly {
    let n = ring.nvars();
    if degree < 0 {
        return Poly::zero(n);
    }
    let terms = monomials_of_degree(ring.weights(), degree as u64)
        .into_iter()
        .map(|m| (m, rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))));
    Poly::from_terms(n, terms)
}

fn check_operator_input(ring: &CiRing, res: &FreeResolution) -> Result<()> {
    for f in ring.relations() {
        if f.terms().any(|(e, _)| e.iter().sum::<u32>() <= 1) {
            return Err(Error::ReduceVariables(format!(
                "`{}` has a nonzero linear part at the origin",
                ring.ring().format(f)
            )));
        }
    }
    if !res.minimal {
        return Err(Error::InvalidArgument("cohomology operators need a minimal resolution".into()));
    }
    Ok(())
}

/// Lifts `d` to the polynomial ring, writes `d̃_{i-1} d̃_i = Σ f_j t̃_j` with
/// Gröbner certificates and reduces `t̃_j` to `R`.
pub fn eisenbud_ops(ring: &CiRing, res: &FreeResolution) -> Result<EisenbudOperators> {
    build_operators(ring, res, None)
}

/// [`eisenbud_ops`] with random lifts: multiples of the `f_j` are added to
/// the lifted differentials and Koszul relations to the certificates.
pub fn eisenbud_ops_randomized<R: Rng>(ring: &CiRing, res: &FreeResolution, rng: &mut R) -> Result<EisenbudOperators> {
    build_operators(ring, res, Some(rng as &mut dyn RngCore))
}

fn build_operators(ring: &CiRing, res: &FreeResolution, mut rng: Option<&mut dyn RngCore>) -> Result<EisenbudOperators> {
    check_operator_input(ring, res)?;
    let f = ring.relations();
    let c = f.len();
    let fdeg: Vec<i64> = ring.degrees().iter().map(|&d| d as i64).collect();
    let gb = ring.presentation().gb();

    let lifted: Vec<PolyMatrix> = res
        .differentials
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let Some(rng) = rng.as_deref_mut() else { return d.clone() };
            let (rows, cols) = (&res.twists[k], &res.twists[k + 1]);
            let mut out = d.clone();
            for r in 0..d.rows() {
                for s in 0..d.cols() {
                    let mut e = d.get(r, s).clone();
                    for j in 0..c {
                        let h = random_homogeneous(ring, cols[s] - rows[r] - fdeg[j], rng);
                        e = &e + &(&f[j] * &h);
                    }
                    out.set(r, s, e);
                }
            }
            out
        })
        .collect();

    let mut chain_maps = vec![Vec::new(); c];
    for i in 2..=res.length() {
        let prod = lifted[i - 2].mul(&lifted[i - 1])?;
        let (rows, cols) = (&res.twists[i - 2], &res.twists[i]);
        let mut t = vec![PolyMatrix::zeros(ring.nvars(), prod.rows(), prod.cols()); c];
        for r in 0..prod.rows() {
            for s in 0..prod.cols() {
                let mut h = gb
                    .lift(prod.get(r, s))
                    .ok_or_else(|| Error::NotAComplex(format!("d_{} d_{i} is not zero modulo the ideal", i - 1)))?;
                if let Some(rng) = rng.as_deref_mut() {
                    if c >= 2 {
                        let deg = cols[s] - rows[r] - fdeg[0] - fdeg[1];
                        let k = random_homogeneous(ring, deg, rng);
                        h[0] = &h[0] + &(&f[1] * &k);
                        h[1] = &h[1] - &(&f[0] * &k);
                    }
                }
                for j in 0..c {
                    t[j].set(r, s, ring.normal_form(&h[j]));
                }
            }
        }
        for (j, m) in t.into_iter().enumerate() {
            chain_maps[j].push(m);
        }
    }
    Ok(EisenbudOperators { chain_maps })
}

/// Evidence that a finite-generation verdict holds in all degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `d_{start+2} = d_start` and `d_{start+3} = d_{start+1}` as matrices,
    /// with twists shifted by `shift`.
    Periodic { start: usize, shift: i64 },
    /// `F_i = 0` from `length` on.
    Terminates { length: usize },
}

/// `Ext^i_R(M, k)` for `i <= D` with the operators `Ext^i -> Ext^{i+2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtModule {
    dims: Vec<usize>,
    operators: Vec<Vec<RatMatrix>>,
    certificate: Option<Certificate>,
}

impl ExtModule {
    /// `operators[j][k]` maps `Ext^k -> Ext^{k+2}` and must be
    /// `dims[k+2] × dims[k]`.
    pub fn new(dims: Vec<usize>, operators: Vec<Vec<RatMatrix>>) -> Result<Self> {
        let expected = dims.len().saturating_sub(2);
        for (j, maps) in operators.iter().enumerate() {
            if maps.len() != expected {
                return Err(Error::Dimension(format!("operator {j} has {} maps, expected {expected}", maps.len())));
            }
            for (k, m) in maps.iter().enumerate() {
                if m.rows() != dims[k + 2] || m.cols() != dims[k] {
                    return Err(Error::Dimension(format!(
                        "operator {j} in degree {k} is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        dims[k + 2],
                        dims[k]
                    )));
                }
            }
        }
        Ok(ExtModule { dims, operators, certificate: None })
    }

    pub fn with_certificate(mut self, certificate: Option<Certificate>) -> Self {
        self.certificate = certificate;
        self
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn operator_count(&self) -> usize {
        self.operators.len()
    }

    /// `χ_j: Ext^k -> Ext^{k+2}`.
    pub fn operator(&self, j: usize, k: usize) -> &RatMatrix {
        &self.operators[j][k]
    }

    pub fn operators(&self) -> &[Vec<RatMatrix>] {
        &self.operators
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }

    /// Whether `χ_j χ_l = χ_l χ_j` on `Ext^k` for every `k <= up_to`.
    pub fn operators_commute(&self, up_to: usize) -> bool {
        let c = self.operators.len();
        (0..=up_to).filter(|k| k + 4 <= self.max_degree()).all(|k| {
            (0..c).all(|j| {
                (j + 1..c).all(|l| {
                    let a = self.operator(j, k + 2).mul(self.operator(l, k));
                    let b = self.operator(l, k + 2).mul(self.operator(j, k));
                    matches!((a, b), (Ok(a), Ok(b)) if a == b)
                })
            })
        })
    }

    /// `dim Ext^i - dim Σ_j χ_j(Ext^{i-2})` for every `i`.
    pub fn minimal_generator_counts(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|i| {
                if i < 2 || self.operators.is_empty() {
                    return self.dims[i];
                }
                let mut image = RatMatrix::zeros(self.dims[i], 0);
                for maps in &self.operators {
                    image = image.hstack(&maps[i - 2]).expect("row counts agree");
                }
                self.dims[i] - image.rank()
            })
            .collect()
    }
}

/// The first periodicity or termination witness in `res`.
///
/// Periodicity is only reported for codimension at most one.
pub fn periodicity_certificate(res: &FreeResolution, codim: usize) -> Option<Certificate> {
    if let Some(pos) = res.twists.iter().position(Vec::is_empty) {
        return Some(Certificate::Terminates { length: pos });
    }
    if codim > 1 {
        return None;
    }
    let len = res.length();
    (1..=len.saturating_sub(3)).find_map(|i| {
        if res.d(i + 2) != res.d(i) || res.d(i + 3) != res.d(i + 1) {
            return None;
        }
        let shift = |a: usize, b: usize| -> Option<i64> {
            let (x, y) = (&res.twists[a], &res.twists[b]);
            if x.len() != y.len() {
                return None;
            }
            let s = x.first().zip(y.first()).map(|(p, q)| p - q).unwrap_or(0);
            x.iter().zip(y).all(|(p, q)| p - q == s).then_some(s)
        };
        let s = shift(i + 2, i)?;
        (shift(i + 3, i + 1) == Some(s) && shift(i + 1, i - 1) == Some(s))
            .then_some(Certificate::Periodic { start: i, shift: s })
    })
}

/// `Ext` from a minimal resolution: dimensions are Betti numbers.
pub fn ext_from_resolution(ring: &CiRing, res: &FreeResolution) -> Result<ExtModule> {
    let ops = eisenbud_ops(ring, res)?;
    let dims = res.betti();
    let ext = ExtModule::new(dims, ops.ext_maps())?;
    Ok(ext.with_certificate(periodicity_certificate(res, ring.codim())))
}

/// `Ext^i_R(M, k)` for `i <= d` with its operators.
pub fn ext_module(ring: &CiRing, m: &GradedModulePresentation, d: usize) -> Result<ExtModule> {
    let res = minimal_resolution(ring, m, d)?;
    ext_from_resolution(ring, &res)
}

/// Degree window `[lo, hi]` for the finite-generation test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
}

impl Window {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo < 2 {
            return Err(Error::Window(format!("lower end {lo} must be at least 2")));
        }
        if hi < lo + 2 {
            return Err(Error::Window(format!("upper end {hi} must be at least {}", lo + 2)));
        }
        Ok(Window { lo, hi })
    }

    /// `[⌈hi/2⌉, hi]`.
    pub fn ending_at(hi: usize) -> Result<Self> {
        Self::new(hi.div_ceil(2), hi)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window { lo: 5, hi: 10 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FGStatus {
    CertifiedFG,
    WindowFG,
    NotFGWithinWindow,
}

impl FGStatus {
    pub fn is_fg(self) -> bool {
        self != FGStatus::NotFGWithinWindow
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGVerdict {
    pub status: FGStatus,
    /// Degrees below the window, each repeated by its number of minimal
    /// generators.
    pub generator_degrees: Vec<usize>,
    pub window: Window,
    /// Degrees in the window that still need new generators.
    pub offending: Vec<usize>,
    pub certificate: Option<Certificate>,
}

/// Finite generation of `Ext` over `k[χ_1..χ_c]`, judged on a window.
pub fn fg_check(e: &ExtModule, window: Window) -> Result<FGVerdict> {
    Window::new(window.lo, window.hi)?;
    if window.hi > e.max_degree() {
        return Err(Error::Window(format!("upper end {} exceeds the computed degree {}", window.hi, e.max_degree())));
    }
    let counts = e.minimal_generator_counts();
    let generator_degrees =
        (0..window.lo).flat_map(|i| std::iter::repeat_n(i, counts[i])).collect();
    let offending: Vec<usize> = (window.lo..=window.hi).filter(|&i| counts[i] > 0).collect();
    let certificate = e.certificate().cloned();
    let status = match (offending.is_empty(), &certificate) {
        (false, _) => FGStatus::NotFGWithinWindow,
        (true, Some(Certificate::Periodic { start, .. })) if *start + 3 <= window.hi => FGStatus::CertifiedFG,
        (true, Some(Certificate::Terminates { .. })) => FGStatus::CertifiedFG,
        (true, _) => FGStatus::WindowFG,
    };
    let certificate = if status == FGStatus::CertifiedFG { certificate } else { None };
    Ok(FGVerdict { status, generator_degrees, window, offending, certificate })
}

/// Resolution, `Ext`, operators and verdict for one module.
#[derive(Clone, Debug)]
pub struct CoherenceReport {
    pub resolution: FreeResolution,
    pub ext: ExtModule,
    pub operators: EisenbudOperators,
    pub verdict: FGVerdict,
}

impl CoherenceReport {
    pub fn betti(&self) -> Vec<usize> {
        self.resolution.betti()
    }
}

pub fn coherence_report(ring: &CiRing, m: &GradedModulePresentation, window: Window) -> Result<CoherenceReport> {
    let window = Window::new(window.lo, window.hi)?;
    let resolution = minimal_resolution(ring, m, window.hi)?;
    let operators = eisenbud_ops(ring, &resolution)?;
    let ext = ExtModule::new(resolution.betti(), operators.ext_maps())?
        .with_certificate(periodicity_certificate(&resolution, ring.codim()));
    let verdict = fg_check(&ext, window)?;
    Ok(CoherenceReport { resolution, ext, operators, verdict })
}
