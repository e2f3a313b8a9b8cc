//! One payload builder per command. Payloads are JSON values; rationals are
//! strings so they stay exact.

use cilie::chevalley::{
    ce_cohomology, chevalley_cochain, cochain_dims, d_squared_vanishes, euler_characteristic, extract_bracket,
};
use cilie::ciext::{
    coherence_report, dg_cohomology, ext_from_resolution, minimal_resolution, minimize_dg, Certificate, DGModule,
    DegreeTable, FGVerdict,
};
use cilie::exactq::{fmt_rational, RatMatrix};
use cilie::polyring::{monomials_of_degree, square_zero_filtration, tower_ring, PolyMatrix, PolyRing};
use cilie::tangentlie::tangent_lie;
use cilie::{Error, Rational, Result};
use serde_json::{json, Value};

use crate::job::{dg_ring, Command, JobFile, Settings};

/// Payload plus named cross-checks.
pub struct Outcome {
    pub result: Value,
    pub checks: Vec<(String, bool)>,
}

pub fn run(command: Command, job: &JobFile, s: &Settings) -> Result<Outcome> {
    match command {
        Command::Tangent => tangent(job),
        Command::Chevalley => chevalley(job, s),
        Command::Resolve => resolve(job, s),
        Command::Ext => ext(job, s),
        Command::Fgcheck => fgcheck(job, s),
        Command::Tower => tower(job, s),
        Command::Squarezero => squarezero(job, s),
        Command::Minimize => minimize(job, s),
        Command::Validate => Err(Error::InvalidArgument("validate has no payload".into())),
    }
}

fn rationals(v: &[Rational]) -> Value {
    Value::from(v.iter().map(fmt_rational).collect::<Vec<_>>())
}

fn matrix(m: &RatMatrix) -> Value {
    Value::from((0..m.rows()).map(|r| rationals(m.row(r))).collect::<Vec<_>>())
}

fn poly_matrix(ring: &PolyRing, m: &PolyMatrix) -> Value {
    json!(ring.format_matrix(m))
}

fn tangent(job: &JobFile) -> Result<Outcome> {
    let ring = job.ring()?;
    let f = job.map_polys(&ring)?;
    let t = tangent_lie(&f, &job.point()?)?;
    let result = json!({
        "jacobian": matrix(&t.fiber.jacobian),
        "g1_dim": t.fiber.g1_dim(),
        "g2_dim": t.fiber.g2_dim(),
        "g1_basis": t.fiber.g1_basis.iter().map(|v| rationals(v)).collect::<Vec<_>>(),
        "g2_projection": matrix(&t.fiber.g2_projection),
        "bracket": t.direct.components().iter().map(matrix).collect::<Vec<_>>(),
        "bracket_rank": t.direct.rank(),
    });
    Ok(Outcome { result, checks: vec![("direct = snake".into(), t.agree)] })
}

fn chevalley(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let ring = job.ring()?;
    let f = job.map_polys(&ring)?;
    let t = tangent_lie(&f, &job.point()?)?;
    let ce = chevalley_cochain(&t.algebra);
    let d = s.degree_or(8) as u64;
    let even = ce.even_ring();
    let cochains = cochain_dims(&ce, d);
    let cohomology = ce_cohomology(&ce, d);
    let result = json!({
        "even_generators": ce.even_count(),
        "odd_generators": ce.odd_count(),
        "differential": ce.quadrics().iter().map(|q| even.format(q)).collect::<Vec<_>>(),
        "degree": d,
        "cochain_dims": cochains.rows(),
        "cohomology_dims": cohomology.rows(),
        "euler_characteristic": euler_characteristic(&cohomology, d),
    });
    let checks = vec![
        ("direct = snake".into(), t.agree),
        ("d^2 = 0".into(), d_squared_vanishes(&ce, d)),
        ("bracket round trip".into(), extract_bracket(&ce) == t.algebra.bracket),
        (
            "euler characteristic".into(),
            euler_characteristic(&cohomology, d) == euler_characteristic(&cochains, d),
        ),
    ];
    Ok(Outcome { result, checks })
}

fn resolve(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let r = job.ci_ring(s)?;
    let m = job.module(&r)?;
    let d = s.degree_or(10);
    let res = minimal_resolution(&r, &m, d)?;
    let result = json!({
        "degree": d,
        "betti": res.betti(),
        "twists": res.twists,
        "differentials": res.differentials.iter().map(|x| poly_matrix(r.ring(), x)).collect::<Vec<_>>(),
    });
    let checks = vec![
        ("d^2 = 0".into(), res.is_complex(&r)),
        ("minimal".into(), res.entries_in_maximal_ideal()),
    ];
    Ok(Outcome { result, checks })
}

fn certificate(c: Option<&Certificate>) -> Value {
    match c {
        None => Value::Null,
        Some(Certificate::Periodic { start, shift }) => json!({"kind": "periodic", "start": start, "shift": shift}),
        Some(Certificate::Terminates { length }) => json!({"kind": "terminates", "length": length}),
    }
}

fn ext(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let r = job.ci_ring(s)?;
    let m = job.module(&r)?;
    let d = s.degree_or(10);
    let res = minimal_resolution(&r, &m, d)?;
    let e = ext_from_resolution(&r, &res)?;
    let operators: Vec<Value> = e
        .operators()
        .iter()
        .map(|maps| Value::from(maps.iter().map(matrix).collect::<Vec<_>>()))
        .collect();
    let result = json!({
        "degree": d,
        "dims": e.dims(),
        "operators": operators,
        "certificate": certificate(e.certificate()),
    });
    let checks = vec![(
        "operators commute".into(),
        e.operators_commute(d.saturating_sub(4)),
    )];
    Ok(Outcome { result, checks })
}

fn verdict(v: &FGVerdict) -> Value {
    json!({
        "status": format!("{:?}", v.status),
        "generator_degrees": v.generator_degrees,
        "window": [v.window.lo, v.window.hi],
        "offending": v.offending,
        "certificate": certificate(v.certificate.as_ref()),
    })
}

fn fgcheck(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let r = job.ci_ring(s)?;
    let m = job.module(&r)?;
    let window = s.window()?;
    let report = coherence_report(&r, &m, window)?;
    let result = json!({
        "betti": report.betti(),
        "dims": report.ext.dims(),
        "verdict": verdict(&report.verdict),
    });
    let checks = vec![
        ("d^2 = 0".into(), report.resolution.is_complex(&r)),
        ("chain maps".into(), report.operators.are_chain_maps(&r, &report.resolution)),
        ("operators commute".into(), report.ext.operators_commute(window.hi.saturating_sub(4))),
    ];
    Ok(Outcome { result, checks })
}

fn tower(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let ring = job.ring()?;
    let f = job.map_polys(&ring)?;
    let d = s.degree_or(10) as u64;
    let ambient: Vec<u64> = (0..=d).map(|k| monomials_of_degree(ring.weights(), k).len() as u64).collect();
    let lowest = f.iter().filter_map(|p| p.homogeneous_degree(ring.weights())).min();
    let mut stages = Vec::new();
    let mut converged = true;
    for n in 1..=s.n {
        let h = tower_ring(&ring, &f, n)?.hilbert_function(d)?;
        // below n times the lowest relation degree nothing is cut out
        for (k, (&got, &full)) in h.iter().zip(&ambient).enumerate() {
            if lowest.is_none_or(|m| (k as u64) < n as u64 * m) && got != full {
                converged = false;
            }
        }
        stages.push(json!({"n": n, "hilbert": h}));
    }
    let result = json!({"degree": d, "ambient": ambient, "stages": stages});
    Ok(Outcome { result, checks: vec![("agrees with ambient below n·deg f".into(), converged)] })
}

fn squarezero(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let ring = job.ring()?;
    let f = job.map_polys(&ring)?;
    let stages = square_zero_filtration(&ring, &f, s.n)?;
    let result = json!({"n": s.n, "stages": stages});
    let all = stages.iter().all(|&b| b);
    Ok(Outcome { result, checks: vec![("all stages square-zero".into(), all)] })
}

fn degree_table(t: &DegreeTable) -> Value {
    json!({"first": t.first, "dims": t.dims})
}

fn dg_payload(ring: &PolyRing, m: &DGModule) -> Value {
    json!({"degrees": m.degrees(), "differential": poly_matrix(ring, m.differential())})
}

fn minimize(job: &JobFile, s: &Settings) -> Result<Outcome> {
    let m = job.dg_module()?;
    let ring = dg_ring(job.dg.as_ref().expect("dg_module succeeded"))?;
    let d = s.degree_or(10) as i64;
    let out = minimize_dg(&m, d)?;
    let before = dg_cohomology(&m, d);
    let first = before.first.min(out.cohomology.first);
    let preserved = (first..=d).all(|t| before.get(t) == out.cohomology.get(t));
    let result = json!({
        "minimal": dg_payload(&ring, &out.module),
        "perfect": out.perfect,
        "cohomology": degree_table(&out.cohomology),
    });
    let checks = vec![
        ("cohomology preserved".into(), preserved),
        ("no unit entries".into(), out.module.is_minimal()),
    ];
    Ok(Outcome { result, checks })
}
