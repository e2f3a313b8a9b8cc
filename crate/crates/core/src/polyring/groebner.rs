//! Buchberger's algorithm over `Q[x]`, for ideals and for submodules of
//! free modules.
//!
//! Module elements are sparse maps from an order key to a coefficient. The
//! key of a term `x^a e_k` encodes the component first (position over term,
//! lower component index is larger) and then the monomial order, so the
//! leading term of a vector is the last map entry.
//!
//! Representations and syzygies are tracked by appending tail components:
//! input `i` becomes `(v_i, e_i)`, so the tail of every basis element records
//! how it was built from the inputs. Components below `head_rank` are the
//! head; an element whose head vanishes is a syzygy.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::polyring::poly::{exponent_degree, Exponent, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
}

/// A monomial order; grevlex compares weighted degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn grevlex(weights: &[u32]) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, weights: weights.to_vec() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, weights: vec![1; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.key(0, a).cmp(&self.key(0, b))
    }

    /// Largest exponent of `p` under this order.
    pub fn leading_exponent<'a>(&self, p: &'a Poly) -> Option<&'a Exponent> {
        p.terms().map(|(e, _)| e).max_by(|a, b| self.cmp(a, b))
    }

    fn key(&self, comp: usize, e: &[u32]) -> Key {
        let n = e.len();
        let mut k = Vec::with_capacity(n + 2);
        k.push(-(comp as i64));
        match self.kind {
            OrderKind::Grevlex => {
                k.push(exponent_degree(e, &self.weights) as i64);
                k.extend(e.iter().rev().map(|&a| -(a as i64)));
            }
            OrderKind::Lex => k.extend(e.iter().map(|&a| a as i64)),
        }
        k
    }

    fn decode(&self, key: &[i64]) -> (usize, Exponent) {
        let comp = (-key[0]) as usize;
        let e = match self.kind {
            OrderKind::Grevlex => key[2..].iter().rev().map(|&a| (-a) as u32).collect(),
            OrderKind::Lex => key[1..].iter().map(|&a| a as u32).collect(),
        };
        (comp, e)
    }
}

/// Caps on the size of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of monomials held by one Gröbner run.
    pub max_terms: usize,
    /// Maximum rank of a free module in a resolution.
    pub max_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_terms: 1_000_000, max_width: 1_000 }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits { max_terms: usize::MAX, max_width: usize::MAX }
    }
}

type Key = Vec<i64>;
pub(crate) type MVec = BTreeMap<Key, Rational>;

struct Elem {
    vec: MVec,
    comp: usize,
    lead: Exponent,
}

pub(crate) struct Engine<'a> {
    pub order: &'a MonomialOrder,
    pub head_rank: usize,
    /// Degree shift of each component, used for pair selection.
    pub comp_degrees: Vec<i64>,
    pub collect_syzygies: bool,
    pub limits: Limits,
}

pub(crate) struct EngineOutput {
    pub basis: Vec<MVec>,
    pub syzygies: Vec<MVec>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_keys(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<'a> Engine<'a> {
    pub fn vector(&self, parts: &[(usize, &Poly)]) -> MVec {
        let mut v = MVec::new();
        for &(comp, p) in parts {
            for (e, c) in p.terms() {
                v.insert(self.order.key(comp, e), c.clone());
            }
        }
        v
    }

    /// Extracts component `comp` of `v` as a polynomial.
    pub fn component(&self, v: &MVec, comp: usize) -> Poly {
        let n = self.order.nvars();
        let lo = self.order.key(comp, &vec![0; n]);
        let terms = v
            .range(lo[..1].to_vec()..)
            .take_while(|(k, _)| k[0] == lo[0])
            .map(|(k, c)| (self.order.decode(k).1, c.clone()));
        Poly::from_terms(n, terms)
    }

    fn lead(&self, v: &MVec) -> Option<(usize, Exponent)> {
        v.keys().next_back().map(|k| self.order.decode(k))
    }

    fn is_head(&self, comp: usize) -> bool {
        comp < self.head_rank
    }

    fn shift_key(&self, m: &[u32]) -> Key {
        self.order.key(0, m)
    }

    fn subtract_multiple(&self, v: &mut MVec, factor: &Rational, m: &[u32], g: &MVec) {
        let shift = self.shift_key(m);
        for (k, c) in g {
            let key = add_keys(k, &shift);
            let delta = factor * c;
            match v.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }

    fn find_reducer(&self, basis: &[Elem], by_comp: &BTreeMap<usize, Vec<usize>>, comp: usize, e: &[u32], skip: Option<usize>) -> Option<usize> {
        by_comp
            .get(&comp)?
            .iter()
            .copied()
            .find(|&i| Some(i) != skip && divides(&basis[i].lead, e))
    }

    /// Reduces `v` by the basis. With `full`, every reducible head term is
    /// eliminated; otherwise only leading terms.
    fn reduce(&self, v: &mut MVec, basis: &[Elem], by_comp: &BTreeMap<usize, Vec<usize>>, full: bool, skip: Option<usize>) {
        let mut upper: Option<Key> = None;
        loop {
            let next = match &upper {
                None => v.iter().next_back(),
                Some(u) => v.range(..u.clone()).next_back(),
            };
            let Some((key, coeff)) = next else { return };
            let (comp, e) = self.order.decode(key);
            if !self.is_head(comp) {
                return;
            }
            match self.find_reducer(basis, by_comp, comp, &e, skip) {
                Some(i) => {
                    let m: Exponent = e.iter().zip(&basis[i].lead).map(|(a, b)| a - b).collect();
                    let factor = coeff.clone();
                    let key = key.clone();
                    self.subtract_multiple(v, &factor, &m, &basis[i].vec);
                    upper = Some(key);
                }
                None => {
                    if !full {
                        return;
                    }
                    upper = Some(key.clone());
                }
            }
        }
    }

    fn make_monic(v: &mut MVec) {
        let Some(lc) = v.values().next_back().cloned() else { return };
        if lc.is_one() {
            return;
        }
        let inv = lc.recip();
        for c in v.values_mut() {
            *c *= &inv;
        }
    }

    fn lcm_degree(&self, comp: usize, lcm: &[u32]) -> i64 {
        exponent_degree(lcm, &self.order.weights) as i64 + self.comp_degrees.get(comp).copied().unwrap_or(0)
    }

    pub fn run(&self, inputs: Vec<MVec>) -> Result<EngineOutput> {
        let mut basis: Vec<Elem> = Vec::new();
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut syzygies: Vec<MVec> = Vec::new();
        let mut queue: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut held_terms = 0usize;
        let product_criterion = self.head_rank == 1 && !self.collect_syzygies;

        let mut admit = |mut v: MVec,
                         basis: &mut Vec<Elem>,
                         by_comp: &mut BTreeMap<usize, Vec<usize>>,
                         syzygies: &mut Vec<MVec>,
                         queue: &mut BTreeSet<(i64, usize, usize)>,
                         pending: &mut BTreeSet<(usize, usize)>|
         -> Result<()> {
            self.reduce(&mut v, basis, by_comp, true, None);
            let Some((comp, lead)) = self.lead(&v) else { return Ok(()) };
            held_terms += v.len();
            if held_terms > self.limits.max_terms {
                return Err(Error::ResourceLimit(format!(
                    "Gröbner computation exceeded {} monomials",
                    self.limits.max_terms
                )));
            }
            if !self.is_head(comp) {
                if self.collect_syzygies {
                    syzygies.push(v);
                }
                return Ok(());
            }
            Self::make_monic(&mut v);
            let idx = basis.len();
            if let Some(others) = by_comp.get(&comp) {
                for &i in others {
                    let l: Exponent = basis[i].lead.iter().zip(&lead).map(|(a, b)| *a.max(b)).collect();
                    queue.insert((self.lcm_degree(comp, &l), i, idx));
                    pending.insert((i, idx));
                }
            }
            by_comp.entry(comp).or_default().push(idx);
            basis.push(Elem { vec: v, comp, lead });
            Ok(())
        };

        for v in inputs {
            admit(v, &mut basis, &mut by_comp, &mut syzygies, &mut queue, &mut pending)?;
        }

        while let Some((_, i, j)) = queue.pop_first() {
            pending.remove(&(i, j));
            let comp = basis[i].comp;
            let lcm: Exponent = basis[i].lead.iter().zip(&basis[j].lead).map(|(a, b)| *a.max(b)).collect();
            if product_criterion && basis[i].lead.iter().zip(&basis[j].lead).all(|(a, b)| *a == 0 || *b == 0) {
                continue;
            }
            let chain = by_comp[&comp].iter().any(|&k| {
                k != i
                    && k != j
                    && divides(&basis[k].lead, &lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let mi: Exponent = lcm.iter().zip(&basis[i].lead).map(|(a, b)| a - b).collect();
            let mj: Exponent = lcm.iter().zip(&basis[j].lead).map(|(a, b)| a - b).collect();
            let mut s = MVec::new();
            self.subtract_multiple(&mut s, &-Rational::one(), &mi, &basis[i].vec);
            self.subtract_multiple(&mut s, &Rational::one(), &mj, &basis[j].vec);
            admit(s, &mut basis, &mut by_comp, &mut syzygies, &mut queue, &mut pending)?;
        }

        // Minimalize: drop elements whose leading term is divisible by another's.
        let n = basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && keep[j]
                    && basis[i].comp == basis[j].comp
                    && divides(&basis[j].lead, &basis[i].lead)
                    && (basis[j].lead != basis[i].lead || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let minimal: Vec<Elem> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in minimal.iter().enumerate() {
            by_comp.entry(e.comp).or_default().push(i);
        }
        let mut reduced: Vec<MVec> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let mut v = minimal[i].vec.clone();
            self.reduce(&mut v, &minimal, &by_comp, true, Some(i));
            reduced.push(v);
        }
        reduced.sort_by(|a, b| a.keys().next_back().cmp(&b.keys().next_back()));
        Ok(EngineOutput { basis: reduced, syzygies })
    }

    /// Fully reduces `v` by an already reduced basis (head-led elements only).
    pub fn normal_form(&self, v: &mut MVec, basis: &[MVec]) {
        let elems: Vec<Elem> = basis
            .iter()
            .map(|b| {
                let (comp, lead) = self.lead(b).expect("basis elements are nonzero");
                Elem { vec: b.clone(), comp, lead }
            })
            .collect();
        let mut by_comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in elems.iter().enumerate() {
            by_comp.entry(e.comp).or_default().push(i);
        }
        self.reduce(v, &elems, &by_comp, true, None);
    }
}

/// A reduced Gröbner basis of an ideal, with each element written in terms
/// of the original generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    inputs: Vec<Poly>,
    generators: Vec<Poly>,
    representation: Vec<Vec<Poly>>,
    heads: Vec<MVec>,
    extended: Vec<MVec>,
}

/// Buchberger with representation tracking. Pairs are processed by lowest
/// lcm degree, then by pair indices.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> GroebnerBasis {
    buchberger_with_limits(gens, order, Limits::unlimited()).expect("no limits to exceed")
}

pub fn buchberger_with_limits(gens: &[Poly], order: &MonomialOrder, limits: Limits) -> Result<GroebnerBasis> {
    let nvars = order.nvars();
    if let Some(p) = gens.iter().find(|p| p.nvars() != nvars) {
        return Err(Error::Dimension(format!(
            "generator with {} variables in a ring of {nvars}",
            p.nvars()
        )));
    }
    let mut comp_degrees = vec![0i64];
    comp_degrees.extend(gens.iter().map(|g| g.weighted_degree(&order.weights).unwrap_or(0) as i64));
    let engine = Engine { order, head_rank: 1, comp_degrees, collect_syzygies: false, limits };
    let one = Poly::one(nvars);
    let inputs: Vec<MVec> = gens.iter().enumerate().map(|(i, g)| engine.vector(&[(0, g), (i + 1, &one)])).collect();
    let out = engine.run(inputs)?;
    let generators: Vec<Poly> = out.basis.iter().map(|v| engine.component(v, 0)).collect();
    let representation: Vec<Vec<Poly>> = out
        .basis
        .iter()
        .map(|v| (0..gens.len()).map(|i| engine.component(v, i + 1)).collect())
        .collect();
    let heads = generators.iter().map(|g| engine.vector(&[(0, g)])).collect();
    Ok(GroebnerBasis {
        order: order.clone(),
        nvars,
        inputs: gens.to_vec(),
        generators,
        representation,
        heads,
        extended: out.basis,
    })
}

/// Remainder of `p` on division by a reduced Gröbner basis.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    gb.normal_form(p)
}

impl GroebnerBasis {
    fn engine(&self) -> Engine<'_> {
        Engine {
            order: &self.order,
            head_rank: 1,
            comp_degrees: vec![],
            collect_syzygies: false,
            limits: Limits::unlimited(),
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Monic, inter-reduced basis elements in increasing order of leading term.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// `representation()[k][i]` is the coefficient of input `i` in generator `k`.
    pub fn representation(&self) -> &[Vec<Poly>] {
        &self.representation
    }

    pub fn inputs(&self) -> &[Poly] {
        &self.inputs
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_exponents(&self) -> Vec<Exponent> {
        self.generators
            .iter()
            .map(|g| self.order.leading_exponent(g).expect("nonzero generator").clone())
            .collect()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.nvars, "polynomial from a different ring");
        if self.heads.is_empty() || p.is_zero() {
            return p.clone();
        }
        let engine = self.engine();
        let mut v = engine.vector(&[(0, p)]);
        engine.normal_form(&mut v, &self.heads);
        engine.component(&v, 0)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Coefficients `a` with `p = Σ a_i · inputs[i]`, or `None` if `p` is not
    /// in the ideal.
    pub fn lift(&self, p: &Poly) -> Option<Vec<Poly>> {
        let s = self.inputs.len();
        if p.is_zero() {
            return Some(vec![Poly::zero(self.nvars); s]);
        }
        if self.extended.is_empty() {
            return None;
        }
        let engine = self.engine();
        let mut v = engine.vector(&[(0, p)]);
        engine.normal_form(&mut v, &self.extended);
        if !engine.component(&v, 0).is_zero() {
            return None;
        }
        Some((0..s).map(|i| -&engine.component(&v, i + 1)).collect())
    }
}

/// Generators of the syzygy module of `columns`, each a vector in `S^rank`.
///
/// `comp_degrees[k]` is the degree of basis vector `e_k` and
/// `column_degrees[i]` the degree of column `i`. Each returned syzygy has
/// one polynomial per column.
pub(crate) fn module_syzygies(
    columns: &[Vec<Poly>],
    rank: usize,
    comp_degrees: &[i64],
    column_degrees: &[i64],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<Vec<Vec<Poly>>> {
    let n = order.nvars();
    let mut degrees = comp_degrees.to_vec();
    degrees.extend_from_slice(column_degrees);
    let engine = Engine { order, head_rank: rank, comp_degrees: degrees, collect_syzygies: true, limits };
    let one = Poly::one(n);
    let inputs: Vec<MVec> = columns
        .iter()
        .enumerate()
        .map(|(i, col)| {
            let mut parts: Vec<(usize, &Poly)> = col.iter().enumerate().collect();
            parts.push((rank + i, &one));
            engine.vector(&parts)
        })
        .collect();
    let out = engine.run(inputs)?;
    Ok(out
        .syzygies
        .iter()
        .map(|v| (0..columns.len()).map(|i| engine.component(v, rank + i)).collect())
        .collect())
}

/// Reduced Gröbner basis of the submodule of `S^rank` spanned by `columns`.
pub(crate) fn module_basis(
    columns: &[Vec<Poly>],
    rank: usize,
    comp_degrees: &[i64],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<Vec<Vec<Poly>>> {
    let engine = Engine { order, head_rank: rank, comp_degrees: comp_degrees.to_vec(), collect_syzygies: false, limits };
    let inputs: Vec<MVec> = columns
        .iter()
        .map(|col| {
            let parts: Vec<(usize, &Poly)> = col.iter().enumerate().collect();
            engine.vector(&parts)
        })
        .collect();
    let out = engine.run(inputs)?;
    Ok(out.basis.iter().map(|v| (0..rank).map(|k| engine.component(v, k)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::PolyRing;

    #[test]
    fn grevlex_and_lex_compare() {
        let o = MonomialOrder::grevlex(&[1, 1, 1]);
        // equal degree: the smaller exponent in the last variable wins
        assert_eq!(o.cmp(&[1, 1, 1], &[1, 0, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 3, 0], &[1, 0, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 0, 1]), Ordering::Greater);
        let l = MonomialOrder::lex(2);
        assert_eq!(l.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
    }

    #[test]
    fn weighted_grevlex_uses_weights() {
        let o = MonomialOrder::grevlex(&[3, 2]);
        // x has weight 3, y^2 weight 4
        assert_eq!(o.cmp(&[0, 2], &[1, 0]), Ordering::Greater);
    }

    #[test]
    fn basis_of_two_conics() {
        let r = PolyRing::standard(&["x", "y"]);
        let gens = r.parse_all(&["x^2 - y", "y^2 - x"]).unwrap();
        let gb = buchberger(&gens, &MonomialOrder::grevlex(r.weights()));
        let mut got: Vec<String> = gb.generators().iter().map(|g| r.format(g)).collect();
        got.sort();
        assert_eq!(got, vec!["x^2 - y", "y^2 - x"]);
    }

    #[test]
    fn single_and_empty_bases() {
        let r = PolyRing::standard(&["x", "y"]);
        let gb = buchberger(&[r.parse("x").unwrap()], &MonomialOrder::grevlex(r.weights()));
        assert_eq!(gb.generators(), &[r.parse("x").unwrap()]);
        let gb = buchberger(&[], &MonomialOrder::grevlex(r.weights()));
        assert!(gb.generators().is_empty());
        let p = r.parse("x^3 + y").unwrap();
        assert_eq!(gb.normal_form(&p), p);
    }

    #[test]
    fn normal_form_examples() {
        let r = PolyRing::standard(&["x", "y"]);
        let gb = buchberger(&[r.parse("x^2 - y").unwrap()], &MonomialOrder::lex(2));
        assert_eq!(gb.normal_form(&r.parse("x^3").unwrap()), r.parse("x*y").unwrap());
        let gb = buchberger(&[r.parse("y^2").unwrap()], &MonomialOrder::grevlex(r.weights()));
        assert!(gb.normal_form(&r.parse("y^5").unwrap()).is_zero());
    }

    #[test]
    fn representation_reproduces_generators() {
        let r = PolyRing::standard(&["x", "y", "z"]);
        let gens = r.parse_all(&["x*y - z", "y*z - x", "x*z - y^2"]).unwrap();
        let gb = buchberger(&gens, &MonomialOrder::grevlex(r.weights()));
        for (g, row) in gb.generators().iter().zip(gb.representation()) {
            let mut acc = r.zero();
            for (a, f) in row.iter().zip(&gens) {
                acc = &acc + &(a * f);
            }
            assert_eq!(&acc, g);
        }
    }

    #[test]
    fn lift_certifies_membership() {
        let r = PolyRing::standard(&["x", "y"]);
        let gens = r.parse_all(&["x^2", "y^2"]).unwrap();
        let gb = buchberger(&gens, &MonomialOrder::grevlex(r.weights()));
        let p = r.parse("x^3*y + 2*x*y^2 - y^4").unwrap();
        let a = gb.lift(&p).unwrap();
        let back = &(&a[0] * &gens[0]) + &(&a[1] * &gens[1]);
        assert_eq!(back, p);
        assert!(gb.lift(&r.parse("x*y").unwrap()).is_none());
    }

    #[test]
    fn syzygies_of_two_variables() {
        let r = PolyRing::standard(&["x", "y"]);
        let cols = vec![vec![r.parse("x").unwrap()], vec![r.parse("y").unwrap()]];
        let order = MonomialOrder::grevlex(r.weights());
        let syz = module_syzygies(&cols, 1, &[0], &[1, 1], &order, Limits::unlimited()).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        let combo = &(&s[0] * &cols[0][0]) + &(&s[1] * &cols[1][0]);
        assert!(combo.is_zero());
        assert!(!s[0].is_zero());
    }

    #[test]
    fn resource_limit_trips() {
        let r = PolyRing::standard(&["x", "y", "z"]);
        let gens = r.parse_all(&["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"]).unwrap();
        let res = buchberger_with_limits(&gens, &MonomialOrder::grevlex(r.weights()), Limits { max_terms: 6, max_width: 1 });
        assert!(matches!(res, Err(Error::ResourceLimit(_))));
    }
}
