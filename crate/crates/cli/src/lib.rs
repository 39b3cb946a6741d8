//! Command-line driver for `equiloc-core`.
//!
//! [`run`] executes a [`JobSpec`] and returns the exit code together with
//! the rendered report, so the binary is a thin wrapper and the commands can
//! be tested in-process.

mod error;
mod input;
mod job;
mod sweep;

use equiloc_core::equivalence::{
    compare_s, hirzebruch_subtype, reparam_test, s2xs2_decide, type_test, vertex_multiset_test, HirzebruchSubtype,
    S2xS2Mode,
};
use equiloc_core::expsum::LatexOptions;
use equiloc_core::toric::{kappa_toric, s_class_general_with, s_class_parametric_with, type_signature};
use equiloc_core::{
    coadjoint, exp_sum_equal, DelzantPolytope, ExpSum, Frequency, LatticeVector, ModelKind, ParametricPolytope,
    Probe, Rational, Status, Verdict,
};
use equiloc_core::numeric::Scalar;
use serde::Serialize;
use serde_json::{json, Value};

pub use error::{error_name, CliError};
pub use job::{Command, Format, JobSpec};

/// Exit code and output streams of one job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(job: &JobSpec) -> Outcome {
    match dispatch(job) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(job: &JobSpec) -> Result<String, CliError> {
    let mut out = match job.command {
        Command::Check => check(job)?,
        Command::SClass => s_class(job)?,
        Command::Compare => compare(job)?,
        Command::Classify => classify(job)?,
        Command::Decide => decide(job)?,
        Command::OrbitSClass => orbit_s_class(job)?,
        Command::OrbitCompare => orbit_compare(job)?,
        Command::Sweep => sweep::sweep(job)?,
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn point(v: &[Rational]) -> String {
    format!("({})", v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
}

fn render_exp_sum<C: Scalar>(s: &ExpSum<C>, format: Format, prefactor: Option<Frequency>) -> String {
    match format {
        Format::Text => s.to_text(),
        Format::Json => s.to_json().to_string(),
        Format::Latex => match prefactor {
            Some(q) => s.shift_frequency(&q.neg()).to_latex(&LatexOptions { prefactor: Some(q) }),
            None => s.to_latex(&LatexOptions::default()),
        },
    }
}

fn render_verdict(v: &Verdict, format: Format) -> String {
    match format {
        Format::Json => to_json(v),
        Format::Text | Format::Latex => v.to_string(),
    }
}

fn check(job: &JobSpec) -> Result<String, CliError> {
    let t = input::load_toric(job)?;
    let p = &t.polytope;
    let vertices: Vec<Vec<String>> =
        p.vertex_points().iter().map(|v| v.iter().map(|r| r.to_string()).collect()).collect();
    let volume = p.volume();
    let cm = p.center_of_mass();
    Ok(match job.format {
        Format::Json => to_json(&json!({
            "delzant": true,
            "dim": p.dim(),
            "vertices": vertices,
            "volume": volume.to_string(),
            "center_of_mass": cm.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })),
        Format::Text | Format::Latex => {
            let mut s = format!("Delzant: pass ({} vertices)\n", vertices.len());
            for v in p.vertex_points() {
                s.push_str(&format!("  {}\n", point(&v)));
            }
            s.push_str(&format!("volume: {volume}\ncenter of mass: {}\n", point(&cm)));
            s
        }
    })
}

fn s_class(job: &JobSpec) -> Result<String, CliError> {
    if job.param_mode {
        let model = match input::parametric_from_flags(job)? {
            Some(m) => m,
            None => {
                let t = input::load_toric(job)?;
                let kind = t.model.ok_or_else(|| CliError::schema("--param-mode needs a named model"))?;
                input::parametric_model(&kind)
            }
        };
        let pp = ParametricPolytope::new(&model)?;
        let x = input::lattice_vector(&job.vector, "vector", pp.dim())?;
        let s = s_class_parametric_with(&pp, &x, job.truncation)?;
        return Ok(render_exp_sum(&s, job.format, None));
    }
    let t = input::load_toric(job)?;
    let x = input::lattice_vector(&job.vector, "vector", t.polytope.dim())?;
    let s = s_class_general_with(&t.polytope, &x, &Probe::Auto, job.truncation)?;
    let q = Frequency::scalar(x.pair(&t.polytope.center_of_mass()));
    Ok(render_exp_sum(&s, job.format, Some(q)))
}

/// Type, S, vertex multiset and reparametrization tests, stopping at the first decisive one.
fn necessary_chain(p: &DelzantPolytope, x: &LatticeVector, y: &LatticeVector) -> Result<Verdict, CliError> {
    let v = type_test(p, x, y)?
        .then(|| compare_s(p, x, y))?
        .then(|| if p.face_type(x)? == 0 { vertex_multiset_test(p, x, y) } else { Ok(Verdict::inconclusive(None, "vertex_multiset(skipped)")) })?
        .then(|| if p.face_type(x)? == 0 { reparam_test(p, x, y) } else { Ok(Verdict::inconclusive(None, "reparam(skipped)")) })?;
    Ok(v)
}

fn compare(job: &JobSpec) -> Result<String, CliError> {
    let t = input::load_toric(job)?;
    let d = t.polytope.dim();
    let x = input::lattice_vector(&job.vector, "vector", d)?;
    let y = input::lattice_vector(&job.vector2, "vector2", d)?;
    Ok(render_verdict(&necessary_chain(&t.polytope, &x, &y)?, job.format))
}

#[derive(Serialize)]
struct Classification {
    #[serde(rename = "type")]
    type_s: usize,
    kappa: String,
    profile: Vec<(String, i32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subtype: Option<HirzebruchSubtype>,
}

fn classify(job: &JobSpec) -> Result<String, CliError> {
    let t = input::load_toric(job)?;
    let x = input::lattice_vector(&job.vector, "vector", t.polytope.dim())?;
    let sig = type_signature(&t.polytope, &x)?;
    let kappa = kappa_toric(&t.polytope, &x)?;
    let subtype = match &t.model {
        Some(ModelKind::Hirzebruch { k, sigma, tau }) if *k != 0 => Some(hirzebruch_subtype(*k, sigma, tau, &x)?),
        _ => None,
    };
    let c = Classification {
        type_s: sig.s,
        kappa: kappa.value.to_string(),
        profile: sig.profile.iter().map(|(f, d)| (f.to_string(), *d)).collect(),
        subtype,
    };
    Ok(match job.format {
        Format::Json => to_json(&c),
        Format::Text | Format::Latex => {
            let mut s = format!("Type({})\nkappa: {}\n", c.type_s, c.kappa);
            if let Some(st) = c.subtype {
                let name = serde_json::to_value(st).expect("subtype serializes");
                s.push_str(&format!("subtype: {}\n", name.as_str().unwrap_or_default()));
            }
            for (f, d) in &c.profile {
                s.push_str(&format!("  e^{{{f} u}}: degree {d}\n"));
            }
            s
        }
    })
}

/// Verdict for a pair on a named model, or on an arbitrary polytope.
pub(crate) fn decide_pair(
    job: &JobSpec,
    t: Option<&input::Toric>,
    b: &LatticeVector,
    b2: &LatticeVector,
) -> Result<Verdict, CliError> {
    if job.incommensurable {
        return Ok(s2xs2_decide(&S2xS2Mode::Incommensurable, b, b2)?);
    }
    let t = t.expect("concrete decisions carry a polytope");
    Ok(match &t.model {
        Some(ModelKind::Hirzebruch { k, sigma, tau }) if *k != 0 => {
            equiloc_core::equivalence::hirzebruch_decide(*k, sigma, tau, b, b2)?
        }
        Some(ModelKind::Hirzebruch { sigma, tau, .. }) | Some(ModelKind::ProductOfSegments { sigma, tau }) => {
            s2xs2_decide(&S2xS2Mode::Concrete { sigma: sigma.clone(), tau: tau.clone() }, b, b2)?
        }
        Some(ModelKind::PlBundle { a, .. }) if equiloc_core::equivalence::pl_equiv(a, b, b2) => {
            Verdict::equivalent("Thm-PL(≡)", "pl_equiv")
        }
        _ => necessary_chain(&t.polytope, b, b2)?,
    })
}

fn check_incommensurable(job: &JobSpec) -> Result<(), CliError> {
    let name = job.model.as_deref().map(input::model_kind_name).transpose()?;
    if name != Some("product_of_segments") || job.file.is_some() {
        return Err(CliError::schema("--incommensurable applies to --model s2xs2 only"));
    }
    Ok(())
}

fn decide(job: &JobSpec) -> Result<String, CliError> {
    let v = if job.incommensurable {
        check_incommensurable(job)?;
        let b = input::lattice_vector(&job.vector, "b", 2)?;
        let b2 = input::lattice_vector(&job.vector2, "b2", 2)?;
        decide_pair(job, None, &b, &b2)?
    } else {
        let t = input::load_toric(job)?;
        let d = t.polytope.dim();
        let b = input::lattice_vector(&job.vector, "b", d)?;
        let b2 = input::lattice_vector(&job.vector2, "b2", d)?;
        decide_pair(job, Some(&t), &b, &b2)?
    };
    Ok(render_verdict(&v, job.format))
}

fn orbit_s_class(job: &JobSpec) -> Result<String, CliError> {
    let o = input::load_orbit(job)?;
    let x = input::su_vector(&o.vector, "vector", o.spec.n())?;
    let s = coadjoint::s_class_orbit_with(&o.spec, &x, job.truncation)?;
    let kappa = coadjoint::kappa_orbit(&o.spec, &x)?;
    Ok(render_exp_sum(&s, job.format, Some(Frequency::scalar(kappa))))
}

/// Runs `next` while `prev` is inconclusive and merges the logs.
fn chain(prev: Verdict, next: impl FnOnce() -> Result<Verdict, CliError>) -> Result<Verdict, CliError> {
    if prev.status != Status::InconclusiveNecessaryPassed {
        return Ok(prev);
    }
    let mut v = next()?;
    let mut tests = prev.tests_run;
    tests.append(&mut v.tests_run);
    v.tests_run = tests;
    if v.status == Status::InconclusiveNecessaryPassed && v.witness.is_none() {
        v.witness = prev.witness;
    }
    Ok(v)
}

#[derive(Serialize)]
pub(crate) struct OrbitComparison {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub reparam: Option<Verdict>,
}

pub(crate) fn orbit_pair(
    spec: &equiloc_core::OrbitSpec,
    x: &equiloc_core::SuVector,
    y: &equiloc_core::SuVector,
) -> Result<OrbitComparison, CliError> {
    let blocks = spec.blocks();
    let n = spec.n();
    let regular = x.is_regular() && y.is_regular();
    let projective = blocks == [1, n - 1] || blocks == [n - 1, 1];
    let v = coadjoint::weyl_orbit_test(x, y);
    let v = if projective {
        chain(v, || Ok(coadjoint::cpn_decide(spec, x, y)?))?
    } else {
        chain(v, || {
            let equal = exp_sum_equal(&coadjoint::s_class_orbit(spec, x)?, &coadjoint::s_class_orbit(spec, y)?)?;
            Ok(if equal {
                Verdict::inconclusive(Some("S equal".into()), "compare_s")
            } else {
                Verdict::not_equivalent("compare_s: S differs", "compare_s")
            })
        })?
    };
    let v = if regular && blocks.len() == 2 && blocks.iter().all(|&m| m >= 2) {
        chain(v, || Ok(coadjoint::grassmann_necessary(spec, x, y)?))?
    } else if regular && blocks.iter().all(|&m| m == 1) {
        chain(v, || Ok(coadjoint::flag_necessary(spec, x, y)?))?
    } else {
        v
    };
    let (v, reparam) = if regular {
        let report = coadjoint::orbit_value_tests(spec, x, y)?;
        (chain(v, || Ok(report.translation))?, Some(report.reparam))
    } else {
        (v, None)
    };
    Ok(OrbitComparison { verdict: v, reparam })
}

fn orbit_compare(job: &JobSpec) -> Result<String, CliError> {
    let o = input::load_orbit(job)?;
    let x = input::su_vector(&o.vector, "vector", o.spec.n())?;
    let y = input::su_vector(&o.vector2, "vector2", o.spec.n())?;
    let c = orbit_pair(&o.spec, &x, &y)?;
    Ok(match job.format {
        Format::Json => to_json(&c),
        Format::Text | Format::Latex => {
            let mut s = c.verdict.to_string();
            if let Some(r) = &c.reparam {
                s.push_str(&format!("\nreparametrized: {r}"));
            }
            s
        }
    })
}

pub(crate) fn verdict_row(v: &Verdict) -> Value {
    json!({"status": v.status, "witness": v.witness})
}
