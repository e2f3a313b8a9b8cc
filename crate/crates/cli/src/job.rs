//! Job files: a TOML description of a ring, a map or relations, an optional
//! point, module or DG module, and parameters.

use std::fmt;

use cilie::ciext::{CiRing, DGModule, GradedModulePresentation, Window};
use cilie::exactq::parse_rational;
use cilie::polyring::{Limits, MonomialOrder, Poly, PolyMatrix, PolyRing};
use cilie::{Error, Rational, Result};
use serde::Deserialize;

pub const MAX_DEGREE: usize = 64;
pub const MAX_TOWER: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Tangent,
    Chevalley,
    Resolve,
    Ext,
    Fgcheck,
    Tower,
    Squarezero,
    Minimize,
    Validate,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Tangent => "tangent",
            Command::Chevalley => "chevalley",
            Command::Resolve => "resolve",
            Command::Ext => "ext",
            Command::Fgcheck => "fgcheck",
            Command::Tower => "tower",
            Command::Squarezero => "squarezero",
            Command::Minimize => "minimize",
            Command::Validate => "validate",
        }
    }

    fn needs_point(self) -> bool {
        matches!(self, Command::Tangent | Command::Chevalley)
    }

    fn needs_ring(self) -> bool {
        !matches!(self, Command::Minimize | Command::Validate)
    }

    fn uses_module(self) -> bool {
        matches!(self, Command::Resolve | Command::Ext | Command::Fgcheck)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rational written either as a TOML integer or as a string `"a/b"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn parse(&self) -> Result<Rational> {
        match self {
            Number::Int(n) => Ok(cilie::exactq::int(*n)),
            Number::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    /// Generator degrees.
    pub twists: Vec<i64>,
    /// One list per relation, holding its coefficient on each generator.
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DgSpec {
    /// Names of the degree-2 operators.
    pub operators: Vec<String>,
    pub degrees: Vec<i64>,
    /// `differential[k][l]` is the coefficient of `g_k` in `d(g_l)`.
    pub differential: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    pub degree: Option<usize>,
    pub window: Option<[usize; 2]>,
    pub order: Option<String>,
    pub n: Option<u32>,
    pub max_terms: Option<usize>,
    pub max_width: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub command: Option<Command>,
    #[serde(default)]
    pub variables: Vec<String>,
    pub weights: Option<Vec<u32>>,
    #[serde(default)]
    pub map: Vec<String>,
    pub point: Option<Vec<Number>>,
    pub module: Option<ModuleSpec>,
    pub dg: Option<DgSpec>,
    #[serde(default)]
    pub parameters: Parameters,
}

/// Command-line values that override the job's parameters.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub degree: Option<usize>,
    pub window: Option<(usize, usize)>,
    pub order: Option<String>,
    pub n: Option<u32>,
    pub max_terms: Option<usize>,
    pub max_width: Option<usize>,
}

/// Parameters after applying overrides; degree and window defaults depend
/// on the command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub degree: Option<usize>,
    pub window: Option<(usize, usize)>,
    pub order: String,
    pub n: u32,
    pub limits: Limits,
}

impl Settings {
    pub fn degree_or(&self, default: usize) -> usize {
        self.degree.unwrap_or(default)
    }

    /// The explicit window, else `[⌈D/2⌉, D]` with `D` the degree (10 by
    /// default).
    pub fn window(&self) -> Result<Window> {
        match self.window {
            Some((lo, hi)) => Window::new(lo, hi),
            None => Window::ending_at(self.degree_or(10)),
        }
    }
}

impl JobFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.message().to_string()))
    }

    pub fn settings(&self, o: &Overrides) -> Settings {
        let p = &self.parameters;
        Settings {
            degree: o.degree.or(p.degree),
            window: o.window.or(p.window.map(|[a, b]| (a, b))),
            order: o.order.clone().or(p.order.clone()).unwrap_or_else(|| "grevlex".into()),
            n: o.n.or(p.n).unwrap_or(4),
            limits: Limits {
                max_terms: o.max_terms.or(p.max_terms).unwrap_or(1_000_000),
                max_width: o.max_width.or(p.max_width).unwrap_or(1_000),
            },
        }
    }

    /// Every problem that would stop `command` from running, without
    /// computing anything.
    pub fn findings(&self, command: Option<Command>, o: &Overrides) -> Vec<String> {
        let mut out = Vec::new();
        if let (Some(asked), Some(declared)) = (command, self.command) {
            if asked != declared && asked != Command::Validate {
                out.push(format!("job declares command `{declared}` but `{asked}` was requested"));
            }
        }
        let command = match command {
            Some(Command::Validate) | None => self.command,
            c => c,
        };

        let ring = match self.ring() {
            Ok(r) => Some(r),
            Err(e) => {
                out.push(e.to_string());
                None
            }
        };
        if let Some(ring) = &ring {
            for (i, s) in self.map.iter().enumerate() {
                check_poly(ring, s, &format!("map[{i}]"), &mut out);
            }
            if let Some(point) = &self.point {
                if point.len() != ring.nvars() {
                    out.push(format!("point has {} coordinates for {} variables", point.len(), ring.nvars()));
                }
            }
            if let Some(m) = &self.module {
                for (l, rel) in m.relations.iter().enumerate() {
                    if rel.len() != m.twists.len() {
                        out.push(format!(
                            "module relation {l} has {} entries for {} generators",
                            rel.len(),
                            m.twists.len()
                        ));
                    }
                    for (k, s) in rel.iter().enumerate() {
                        check_poly(ring, s, &format!("module relation {l}, entry {k}"), &mut out);
                    }
                }
            }
        }
        for (i, z) in self.point.iter().flatten().enumerate() {
            if let Err(e) = z.parse() {
                out.push(format!("point[{i}]: {e}"));
            }
        }
        if let Some(dg) = &self.dg {
            dg_findings(dg, &mut out);
        }

        let s = self.settings(o);
        if s.window.is_some() || command == Some(Command::Fgcheck) {
            if let Err(e) = s.window() {
                out.push(e.to_string());
            }
        }
        if let Some(d) = s.degree {
            if d == 0 || d > MAX_DEGREE {
                out.push(format!("degree {d} outside 1..={MAX_DEGREE}"));
            }
        }
        if s.n == 0 || s.n > MAX_TOWER {
            out.push(format!("n = {} outside 1..={MAX_TOWER}", s.n));
        }
        if s.order != "grevlex" && s.order != "lex" {
            out.push(format!("unknown monomial order `{}` (expected grevlex or lex)", s.order));
        }
        if s.limits.max_terms == 0 || s.limits.max_width == 0 {
            out.push("resource caps must be positive".into());
        }

        if let Some(c) = command {
            if c.needs_ring() && self.variables.is_empty() && self.map.is_empty() {
                out.push(format!("command `{c}` needs `variables` and `map`"));
            }
            if c.needs_point() && self.point.is_none() {
                out.push(format!("command `{c}` needs a `point`"));
            }
            if c == Command::Minimize && self.dg.is_none() {
                out.push("command `minimize` needs a `[dg]` table".into());
            }
            if let (Command::Fgcheck, Some((_, hi)), Some(d)) = (c, s.window, s.degree) {
                if hi != d {
                    out.push(format!("window end {hi} differs from degree {d}"));
                }
            }
            if self.module.is_some() && !c.uses_module() {
                out.push(format!("command `{c}` ignores the `[module]` table"));
            }
        }
        out
    }

    pub fn ring(&self) -> Result<PolyRing> {
        let weights = match &self.weights {
            Some(w) => {
                if w.len() != self.variables.len() {
                    return Err(Error::Dimension(format!(
                        "{} weights for {} variables",
                        w.len(),
                        self.variables.len()
                    )));
                }
                w.clone()
            }
            None => vec![1; self.variables.len()],
        };
        PolyRing::new(self.variables.clone(), weights)
    }

    pub fn map_polys(&self, ring: &PolyRing) -> Result<Vec<Poly>> {
        ring.parse_all(&self.map)
    }

    pub fn point(&self) -> Result<Vec<Rational>> {
        self.point
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("the job has no point".into()))?
            .iter()
            .map(Number::parse)
            .collect()
    }

    pub fn ci_ring(&self, s: &Settings) -> Result<CiRing> {
        let ring = self.ring()?;
        let f = self.map_polys(&ring)?;
        let order = match s.order.as_str() {
            "lex" => MonomialOrder::lex(ring.nvars()),
            _ => MonomialOrder::grevlex(ring.weights()),
        };
        CiRing::new(ring, f, &order, s.limits)
    }

    /// The declared module, or the residue field when none is given.
    pub fn module(&self, r: &CiRing) -> Result<GradedModulePresentation> {
        let Some(m) = &self.module else {
            return Ok(GradedModulePresentation::residue_field(r));
        };
        let columns = m
            .relations
            .iter()
            .map(|rel| r.ring().parse_all(rel))
            .collect::<Result<Vec<_>>>()?;
        GradedModulePresentation::new(r, m.twists.clone(), columns)
    }

    pub fn dg_module(&self) -> Result<DGModule> {
        let dg = self.dg.as_ref().ok_or_else(|| Error::InvalidArgument("the job has no [dg] table".into()))?;
        let ring = dg_ring(dg)?;
        let n = dg.degrees.len();
        if dg.differential.len() != n {
            return Err(Error::Dimension(format!("differential has {} rows for {n} generators", dg.differential.len())));
        }
        let rows = dg.differential.iter().map(|row| ring.parse_all(row)).collect::<Result<Vec<_>>>()?;
        let d = PolyMatrix::from_rows(ring.nvars(), n, rows)?;
        DGModule::new(ring.nvars(), dg.degrees.clone(), d)
    }
}

pub fn dg_ring(dg: &DgSpec) -> Result<PolyRing> {
    PolyRing::new(dg.operators.clone(), vec![2; dg.operators.len()])
}

fn check_poly(ring: &PolyRing, s: &str, what: &str, out: &mut Vec<String>) {
    let unknown = ring.undeclared_names(s);
    if !unknown.is_empty() {
        for name in unknown {
            out.push(format!("{what}: undeclared variable `{name}`"));
        }
    } else if let Err(e) = ring.parse(s) {
        out.push(format!("{what}: {e}"));
    }
}

fn dg_findings(dg: &DgSpec, out: &mut Vec<String>) {
    let ring = match dg_ring(dg) {
        Ok(r) => r,
        Err(e) => {
            out.push(format!("dg: {e}"));
            return;
        }
    };
    let n = dg.degrees.len();
    if dg.differential.len() != n {
        out.push(format!("dg: differential has {} rows for {n} generators", dg.differential.len()));
    }
    for (k, row) in dg.differential.iter().enumerate() {
        if row.len() != n {
            out.push(format!("dg: differential row {k} has {} entries for {n} generators", row.len()));
        }
        for (l, s) in row.iter().enumerate() {
            check_poly(&ring, s, &format!("dg differential ({k}, {l})"), out);
        }
    }
}
