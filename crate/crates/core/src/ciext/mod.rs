//! Free resolutions and Ext over a graded complete intersection
//! `R = Q[x]/(f_1..f_c)`.
//!
//! Modules are given by presentations `⊕R(-b_l) -> ⊕R(-a_k) -> M -> 0`.
//! [`minimal_resolution`] resolves them, [`ext_module`] reads off
//! `Ext_R(M, k)` together with the degree-2 operators of the complete
//! intersection, and [`fg_check`] decides finite generation over the
//! operator ring on a window of degrees. [`minimize_dg`] cancels units in
//! semifree DG modules over `k[χ_1..χ_c]`.

mod dg;
mod ext;
mod resolution;

pub use dg::{dg_cohomology, minimize_dg, DGModule, DegreeTable, MinimalModel};
pub use ext::{
    coherence_report, eisenbud_ops, eisenbud_ops_randomized, ext_from_resolution, ext_module, fg_check,
    periodicity_certificate, Certificate, CoherenceReport, EisenbudOperators, ExtModule, FGStatus, FGVerdict, Window,
};
pub use resolution::{minimal_resolution, nonminimal_resolution, FreeResolution};

use crate::error::{Error, Result};
use crate::polyring::{is_regular_sequence, Limits, MonomialOrder, Poly, PolyMatrix, PolyRing, RingPresentation};

/// A graded complete intersection with the resource caps used on it.
#[derive(Clone, Debug)]
pub struct CiRing {
    presentation: RingPresentation,
    degrees: Vec<u64>,
    limits: Limits,
}

impl CiRing {
    /// Checks that `f` is a homogeneous regular sequence and computes a
    /// Gröbner basis in `order`.
    pub fn new(ring: PolyRing, f: Vec<Poly>, order: &MonomialOrder, limits: Limits) -> Result<Self> {
        for p in &f {
            if p.nvars() != ring.nvars() {
                return Err(Error::Dimension("generator lives in a different ring".into()));
            }
            if !p.is_zero() && !p.is_homogeneous(ring.weights()) {
                return Err(Error::Grading(format!(
                    "`{}` is not homogeneous; resolutions need graded input (use the tangent command for pointwise invariants)",
                    ring.format(p)
                )));
            }
        }
        if !is_regular_sequence(&ring, &f)? {
            return Err(Error::NotCompleteIntersection("the generators do not form a regular sequence".into()));
        }
        let presentation = RingPresentation::with_limits(ring, f, order, limits)?;
        let degrees = presentation.generator_degrees()?;
        Ok(CiRing { presentation, degrees, limits })
    }

    /// Weighted grevlex order and default limits.
    pub fn graded(ring: PolyRing, f: Vec<Poly>) -> Result<Self> {
        let order = MonomialOrder::grevlex(ring.weights());
        Self::new(ring, f, &order, Limits::default())
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn ring(&self) -> &PolyRing {
        self.presentation.ring()
    }

    pub fn nvars(&self) -> usize {
        self.presentation.nvars()
    }

    pub fn weights(&self) -> &[u32] {
        self.ring().weights()
    }

    /// `f_1..f_c`.
    pub fn relations(&self) -> &[Poly] {
        self.presentation.generators()
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// Weighted degrees of `f_1..f_c`.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn order(&self) -> &MonomialOrder {
        self.presentation.gb().order()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.presentation.normal_form(p)
    }

    pub(crate) fn degree_of(&self, p: &Poly) -> Option<i64> {
        p.weighted_degree(self.weights()).map(|d| d as i64)
    }
}

/// Cokernel of a homogeneous matrix between graded free `R`-modules.
///
/// Generator `k` has degree `twists[k]`; column `l` of `relations` is a
/// relation whose entries are in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModulePresentation {
    twists: Vec<i64>,
    relations: PolyMatrix,
}

impl GradedModulePresentation {
    /// Validates homogeneity and reduces the entries. `columns[l][k]` is the
    /// coefficient of generator `k` in relation `l`.
    pub fn new(ring: &CiRing, twists: Vec<i64>, columns: Vec<Vec<Poly>>) -> Result<Self> {
        let p = twists.len();
        let mut reduced = Vec::with_capacity(columns.len());
        for (l, col) in columns.into_iter().enumerate() {
            if col.len() != p {
                return Err(Error::Dimension(format!("relation {l} has {} entries for {p} generators", col.len())));
            }
            let col: Vec<Poly> = col.iter().map(|e| ring.normal_form(e)).collect();
            column_degree(ring, &col, &twists).map_err(|e| match e {
                Error::Grading(msg) => Error::Grading(format!("relation {l}: {msg}")),
                other => other,
            })?;
            reduced.push(col);
        }
        let relations = PolyMatrix::from_columns(ring.nvars(), p, &reduced)?;
        Ok(GradedModulePresentation { twists, relations })
    }

    /// The residue field `k = R/(x_1..x_n)`.
    pub fn residue_field(ring: &CiRing) -> Self {
        let n = ring.nvars();
        let cols = (0..n).map(|i| vec![Poly::var(n, i)]).collect();
        Self::new(ring, vec![0], cols).expect("variables are homogeneous")
    }

    /// `R/(g_1..g_s)` generated in degree 0.
    pub fn cyclic(ring: &CiRing, gens: &[Poly]) -> Result<Self> {
        Self::new(ring, vec![0], gens.iter().map(|g| vec![g.clone()]).collect())
    }

    /// The zero module.
    pub fn zero() -> Self {
        GradedModulePresentation { twists: Vec::new(), relations: PolyMatrix::zeros(0, 0, 0) }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn generator_count(&self) -> usize {
        self.twists.len()
    }
}

/// Degree of a homogeneous vector of `⊕R(-twists)`; `None` for zero.
pub(crate) fn column_degree(ring: &CiRing, col: &[Poly], twists: &[i64]) -> Result<Option<i64>> {
    let mut deg = None;
    for (k, e) in col.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if !e.is_homogeneous(ring.weights()) {
            return Err(Error::Grading(format!("entry `{}` is not homogeneous", ring.ring().format(e))));
        }
        let d = ring.degree_of(e).expect("nonzero") + twists[k];
        match deg {
            None => deg = Some(d),
            Some(prev) if prev != d => {
                return Err(Error::Grading(format!("entries have degrees {prev} and {d} after twisting")));
            }
            _ => {}
        }
    }
    Ok(deg)
}
