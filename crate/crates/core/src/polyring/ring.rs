use crate::error::{Error, Result};
use crate::polyring::groebner::{buchberger_with_limits, GroebnerBasis, Limits, MonomialOrder};
use crate::polyring::poly::{Exponent, Poly, PolyRing};

/// A quotient `Q[x]/(f_1..f_c)` with a Gröbner basis attached.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    ring: PolyRing,
    generators: Vec<Poly>,
    gb: GroebnerBasis,
}

impl RingPresentation {
    pub fn new(ring: PolyRing, generators: Vec<Poly>, order: &MonomialOrder) -> Result<Self> {
        Self::with_limits(ring, generators, order, Limits::default())
    }

    pub fn with_limits(ring: PolyRing, generators: Vec<Poly>, order: &MonomialOrder, limits: Limits) -> Result<Self> {
        if order.nvars() != ring.nvars() {
            return Err(Error::Dimension("monomial order and ring disagree on variable count".into()));
        }
        let gb = buchberger_with_limits(&generators, order, limits)?;
        Ok(RingPresentation { ring, generators, gb })
    }

    /// Weighted grevlex presentation.
    pub fn graded(ring: PolyRing, generators: Vec<Poly>) -> Result<Self> {
        let order = MonomialOrder::grevlex(ring.weights());
        Self::new(ring, generators, &order)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        self.gb.normal_form(p)
    }

    /// Weighted degrees of the ideal generators; fails on inhomogeneous input.
    pub fn generator_degrees(&self) -> Result<Vec<u64>> {
        homogeneous_degrees(&self.ring, &self.generators)
    }

    /// Monomials of weighted degree `d` outside the leading-term ideal.
    pub fn standard_monomials(&self, d: u64) -> Vec<Exponent> {
        let leads = self.gb.leading_exponents();
        monomials_of_degree(self.ring.weights(), d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.iter().zip(m).all(|(a, b)| a <= b)))
            .collect()
    }

    /// Dimensions of the graded pieces of degrees `0..=up_to`.
    pub fn hilbert_function(&self, up_to: u64) -> Result<Vec<u64>> {
        self.generator_degrees()?;
        Ok((0..=up_to).map(|d| self.standard_monomials(d).len() as u64).collect())
    }

    /// Krull dimension from the leading-term ideal; `None` for the zero ring.
    pub fn krull_dimension(&self) -> Option<usize> {
        monomial_ideal_dimension(self.nvars(), &self.gb.leading_exponents())
    }
}

fn homogeneous_degrees(ring: &PolyRing, gens: &[Poly]) -> Result<Vec<u64>> {
    gens.iter()
        .map(|g| {
            if g.is_zero() {
                return Ok(0);
            }
            g.homogeneous_degree(ring.weights())
                .ok_or_else(|| Error::Grading(format!("`{}` is not homogeneous for the declared weights", ring.format(g))))
        })
        .collect()
}

/// All exponent vectors of weighted degree exactly `d`.
pub fn monomials_of_degree(weights: &[u32], d: u64) -> Vec<Exponent> {
    fn rec(weights: &[u32], i: usize, left: u64, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i] as u64;
        let max = left / w;
        for a in (0..=max).rev() {
            cur[i] = a as u32;
            rec(weights, i + 1, left - a * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    out
}

/// Dimension of `Q[x]/(monomials)` as the largest set of variables carrying
/// none of the generators.
fn monomial_ideal_dimension(nvars: usize, gens: &[Exponent]) -> Option<usize> {
    if gens.iter().any(|g| g.iter().all(|&a| a == 0)) {
        return None;
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|g| g.iter().enumerate().filter(|(_, &a)| a > 0).fold(0u64, |m, (i, _)| m | (1 << i)))
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    Some(best)
}

/// Whether homogeneous `gens` form a regular sequence, tested by comparing
/// the Krull dimension of the quotient with `n - c`.
pub fn is_regular_sequence(ring: &PolyRing, gens: &[Poly]) -> Result<bool> {
    homogeneous_degrees(ring, gens)?;
    if gens.iter().any(|g| g.is_zero()) {
        return Ok(false);
    }
    let pres = RingPresentation::graded(ring.clone(), gens.to_vec())?;
    Ok(match pres.krull_dimension() {
        None => false,
        Some(d) => d + gens.len() == ring.nvars(),
    })
}

/// The thickening `Q[x]/(f_1^n, .., f_s^n)`.
pub fn tower_ring(ring: &PolyRing, gens: &[Poly], n: u32) -> Result<RingPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("tower index must be positive".into()));
    }
    let powers = gens.iter().map(|f| f.pow(n)).collect();
    RingPresentation::graded(ring.clone(), powers)
}

/// True iff every pairwise product of `ideal` vanishes in `ring`.
pub fn is_square_zero(ring: &RingPresentation, ideal: &[Poly]) -> bool {
    for (i, a) in ideal.iter().enumerate() {
        for b in &ideal[i..] {
            if !ring.normal_form(&(a * b)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Products `f^α` over all multi-indices with `|α| = k`.
fn ideal_power(nvars: usize, gens: &[Poly], k: u32) -> Vec<Poly> {
    fn rec(gens: &[Poly], start: usize, left: u32, cur: Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..gens.len() {
            rec(gens, i, left - 1, &cur * &gens[i], out);
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, k, Poly::one(nvars), &mut out);
    out
}

/// For `k = n-1` down to `1`, whether `J^k` squares to zero in
/// `Q[x]/(J^{k+1} + (f_1^n..f_s^n))`, where `J = (f)`.
pub fn square_zero_filtration(ring: &PolyRing, gens: &[Poly], n: u32) -> Result<Vec<bool>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tower index must be positive".into()));
    }
    let nvars = ring.nvars();
    let powers: Vec<Poly> = gens.iter().map(|f| f.pow(n)).collect();
    let mut stages = Vec::new();
    for k in (1..n).rev() {
        let mut rel = ideal_power(nvars, gens, k + 1);
        rel.extend(powers.iter().cloned());
        let stage = RingPresentation::new(ring.clone(), rel, &MonomialOrder::grevlex(ring.weights()))?;
        stages.push(is_square_zero(&stage, &ideal_power(nvars, gens, k)));
    }
    Ok(stages)
}
