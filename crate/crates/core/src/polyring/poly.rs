use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactq::{fmt_rational, Rational};

pub type Exponent = Vec<u32>;

/// A multivariate polynomial with rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// Variable names and weights live in [`PolyRing`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal the variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&a| a == 0))
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, exp: &[u32], c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), x * c))
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in variable `index`.
    pub fn derivative(&self, index: usize) -> Result<Poly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange { index, len: self.nvars });
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[index] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[index] -= 1;
            out.add_term(d, c * Rational::from_integer(BigInt::from(e[index])));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(e) {
                if a > 0 {
                    t *= num_traits::pow(x.clone(), a as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x_i := images[i]`. All images share one variable count.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "{} substitutions for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::Dimension("substituted polynomials live in different rings".into()));
        }
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (img, &a) in images.iter().zip(e) {
                if a > 0 {
                    t = &t * &img.pow(a);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Largest weighted degree of a term, `None` for the zero polynomial.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.keys().map(|e| exponent_degree(e, weights)).max()
    }

    /// Smallest total (unweighted) degree of a term.
    pub fn low_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.iter().map(|&a| a as u64).sum()).min()
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.keys().map(|e| exponent_degree(e, weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Common weighted degree of all terms; `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        if self.is_zero() || !self.is_homogeneous(weights) {
            None
        } else {
            self.weighted_degree(weights)
        }
    }
}

pub(crate) fn exponent_degree(e: &[u32], weights: &[u32]) -> u64 {
    e.iter().zip(weights).map(|(&a, &w)| a as u64 * w as u64).sum()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials from different rings");
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Variable names and positive weights of a polynomial ring `Q[x_1..x_n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::Dimension(format!("{} names but {} weights", names.len(), weights.len())));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidArgument(format!("weight of `{}` must be positive", names[i])));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidArgument(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("variable `{n}` declared twice")));
            }
        }
        Ok(PolyRing { names, weights })
    }

    /// All weights equal to one.
    pub fn standard(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()])
            .expect("valid standard ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn degree_of(&self, e: &[u32]) -> u64 {
        exponent_degree(e, &self.weights)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self.nvars())
    }

    pub fn one(&self) -> Poly {
        Poly::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars(), i)
    }

    /// Entries of `m` rendered row by row.
    pub fn format_matrix(&self, m: &PolyMatrix) -> Vec<Vec<String>> {
        (0..m.rows()).map(|r| m.row(r).iter().map(|p| self.format(p)).collect()).collect()
    }

    /// Parses a polynomial string over this ring's variables.
    ///
    /// Grammar (whitespace ignored):
    /// `poly := ['+'|'-'] term (('+'|'-') term)*`,
    /// `term := coeff ('*' varpow)* | varpow ('*' varpow)*`,
    /// `varpow := name ('^' nat)?`, `coeff := int ('/' posint)?`.
    pub fn parse(&self, input: &str) -> Result<Poly> {
        Parser::new(self, input).parse()
    }

    pub fn parse_all<S: AsRef<str>>(&self, inputs: &[S]) -> Result<Vec<Poly>> {
        inputs.iter().map(|s| self.parse(s.as_ref())).collect()
    }

    /// Variable names used by `input` that are not declared in this ring.
    pub fn undeclared_names(&self, input: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        let chars: Vec<char> = input.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_ascii_alphabetic() || chars[i] == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                if !self.names.contains(&name) && !out.contains(&name) {
                    out.push(name);
                }
            } else {
                i += 1;
            }
        }
        out
    }

    /// Deterministic rendering: terms by descending weighted degree, then
    /// descending exponent vector.
    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Exponent, &Rational)> = p.terms().collect();
        terms.sort_by(|a, b| self.degree_of(b.0).cmp(&self.degree_of(a.0)).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], a) })
                .collect();
            if vars.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&fmt_rational(&mag));
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    ring: &'a PolyRing,
    chars: Vec<char>,
    pos: usize,
    source: &'a str,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a PolyRing, source: &'a str) -> Self {
        let chars = source.chars().filter(|c| !c.is_whitespace()).collect();
        Parser { ring, chars, pos: 0, source }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.source))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        let n = self.ring.nvars();
        let mut out = Poly::zero(n);
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut sign = Rational::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, c * &sign);
            match self.peek() {
                None => break,
                Some('+') => sign = Rational::one(),
                Some('-') => sign = -Rational::one(),
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Exponent, Rational)> {
        let mut exp = vec![0u32; self.ring.nvars()];
        let mut coeff = Rational::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coeff()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                } else {
                    return Ok((exp, coeff));
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.err("expected a coefficient or variable")),
        }
        loop {
            let (idx, power) = self.varpow()?;
            exp[idx] += power;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((exp, coeff));
            }
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("invalid integer"))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.nat()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.nat()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn varpow(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos || self.chars[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.err("expected a variable"));
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let idx = self
            .ring
            .names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| Error::Parse(format!("undeclared variable `{name}` in `{}`", self.source)))?;
        let mut power = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let p = self.nat()?;
            power = u32::try_from(p).map_err(|_| self.err("exponent too large"))?;
        }
        Ok((idx, power))
    }
}

/// Dense matrix of polynomials; `entry(r, c)` is row `r`, column `c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix { nvars, rows, cols, entries: vec![Poly::zero(nvars); rows * cols] }
    }

    pub fn identity(nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(nvars, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(nvars));
        }
        m
    }

    pub fn from_columns(nvars: usize, rows: usize, columns: &[Vec<Poly>]) -> Result<Self> {
        let mut m = Self::zeros(nvars, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!("column {j} has {} entries, expected {rows}", col.len())));
            }
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn from_rows(nvars: usize, cols: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            entries.extend(row);
        }
        Ok(PolyMatrix { nvars, rows: n, cols, entries })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn column(&self, c: usize) -> Vec<Poly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn map(&self, mut f: impl FnMut(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix { nvars: self.nvars, rows: self.rows, cols: self.cols, entries: self.entries.iter().map(&mut f).collect() }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.nvars, self.rows, other.cols);
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
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(PolyMatrix { nvars: self.nvars, rows: self.rows, cols: self.cols, entries })
    }

    /// The matrix of constant terms.
    pub fn constant_part(&self) -> crate::exactq::RatMatrix {
        let entries = self.entries.iter().map(Poly::constant_term).collect();
        crate::exactq::RatMatrix::new(self.rows, self.cols, entries).expect("shape preserved")
    }
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::{int, rat};

    fn xy() -> PolyRing {
        PolyRing::standard(&["x", "y"])
    }

    #[test]
    fn parse_and_format_round_trip() {
        let r = xy();
        let p = r.parse("x^2 + y^2").unwrap();
        assert_eq!(r.format(&p), "x^2 + y^2");
        let q = r.parse(" - 2*x*y + 1/2 - y^3").unwrap();
        assert_eq!(r.format(&q), "-y^3 - 2*x*y + 1/2");
        assert_eq!(r.parse(&r.format(&q)).unwrap(), q);
        assert_eq!(r.parse("3/6*x").unwrap(), Poly::var(2, 0).scale(&rat(1, 2)));
    }

    #[test]
    fn parse_errors() {
        let r = xy();
        assert!(matches!(r.parse("x^^2"), Err(Error::Parse(_))));
        assert!(matches!(r.parse("x + "), Err(Error::Parse(_))));
        assert!(matches!(r.parse("2x"), Err(Error::Parse(_))));
        assert!(matches!(r.parse(""), Err(Error::Parse(_))));
        let e = r.parse("x + z").unwrap_err();
        assert!(e.to_string().contains("`z`"));
        assert_eq!(r.undeclared_names("x*z + w^2 - y"), vec!["z".to_string(), "w".to_string()]);
    }

    #[test]
    fn derivative_examples() {
        let r = xy();
        let d = r.parse("x^2 + y^2").unwrap().derivative(0).unwrap();
        assert_eq!(d, r.parse("2*x").unwrap());
        let d = r.parse("x^2 + y^3").unwrap().derivative(1).unwrap();
        assert_eq!(d, r.parse("3*y^2").unwrap());
        assert!(r.parse("y^5").unwrap().derivative(0).unwrap().is_zero());
        assert!(matches!(
            r.parse("x").unwrap().derivative(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let r = xy();
        assert_eq!(r.parse("x^2 + y^2").unwrap().evaluate(&[int(0), int(0)]).unwrap(), int(0));
        let p = r.parse("x^2 - y").unwrap();
        assert_eq!(p.evaluate(&[int(1), int(1)]).unwrap(), int(0));
        assert_eq!(p.evaluate(&[int(2), int(1)]).unwrap(), int(3));
        assert!(matches!(p.evaluate(&[int(1)]), Err(Error::Dimension(_))));
    }

    #[test]
    fn compose_translates() {
        let r = xy();
        let p = r.parse("x^2 - y").unwrap();
        let shifted = p.compose(&[r.parse("x + 1").unwrap(), r.parse("y + 1").unwrap()]).unwrap();
        assert_eq!(shifted, r.parse("x^2 + 2*x - y").unwrap());
    }

    #[test]
    fn homogeneity() {
        let r = PolyRing::new(vec!["x".into(), "y".into()], vec![3, 2]).unwrap();
        let p = r.parse("x^2 + y^3").unwrap();
        assert_eq!(p.homogeneous_degree(r.weights()), Some(6));
        assert!(!r.parse("x + y").unwrap().is_homogeneous(r.weights()));
        assert!(Poly::zero(2).is_homogeneous(r.weights()));
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(vec!["x".into(), "x".into()], vec![1, 1]).is_err());
        assert!(PolyRing::new(vec!["x".into()], vec![0]).is_err());
        assert!(PolyRing::new(vec!["1x".into()], vec![1]).is_err());
    }
}
