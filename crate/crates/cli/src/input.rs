//! Loading manifolds and vectors from files and flags.

use std::fs;

use equiloc_core::polytope::HalfSpace;
use equiloc_core::{
    build_model, DelzantPolytope, LatticeVector, ModelKind, OrbitSpec, ParametricModel, Rational, SuVector,
};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::job::JobSpec;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHalfSpace {
    normal: Vec<i64>,
    offset: Rational,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolytope {
    n: usize,
    halfspaces: Vec<RawHalfSpace>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    model: ModelKind,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrbit {
    n: usize,
    spectrum: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrbitFile {
    orbit: RawOrbit,
    vector: Option<Vec<i64>>,
    vector2: Option<Vec<i64>>,
}

/// A toric manifold, with the builder that produced it when known.
pub struct Toric {
    pub polytope: DelzantPolytope,
    pub model: Option<ModelKind>,
}

pub struct Orbit {
    pub spec: OrbitSpec,
    pub vector: Option<Vec<i64>>,
    pub vector2: Option<Vec<i64>>,
}

enum FileContent {
    Toric(Toric),
    Orbit(Orbit),
}

fn read_file(job: &JobSpec) -> Result<Option<FileContent>, CliError> {
    let Some(path) = &job.file else {
        return Ok(None);
    };
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::schema(format!("{name}: {e}")))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::json(&name, &e))?;
    let keys = value.as_object().ok_or_else(|| CliError::schema(format!("{name}: top level must be an object")))?;
    if keys.contains_key("halfspaces") {
        let raw: RawPolytope = serde_json::from_str(&text).map_err(|e| CliError::json(&name, &e))?;
        let hs = raw
            .halfspaces
            .into_iter()
            .map(|h| HalfSpace::new(h.normal, h.offset))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(FileContent::Toric(Toric { polytope: DelzantPolytope::new(raw.n, hs)?, model: None })))
    } else if keys.contains_key("model") {
        let raw: RawModel = serde_json::from_str(&text).map_err(|e| CliError::json(&name, &e))?;
        Ok(Some(FileContent::Toric(Toric { polytope: build_model(&raw.model)?, model: Some(raw.model) })))
    } else if keys.contains_key("orbit") {
        let raw: RawOrbitFile = serde_json::from_str(&text).map_err(|e| CliError::json(&name, &e))?;
        Ok(Some(FileContent::Orbit(Orbit {
            spec: orbit_spec(raw.orbit.n, raw.orbit.spectrum)?,
            vector: raw.vector,
            vector2: raw.vector2,
        })))
    } else {
        Err(CliError::schema(format!("{name}: expected one of the keys `halfspaces`, `model`, `orbit`")))
    }
}

fn orbit_spec(n: usize, spectrum: Vec<Rational>) -> Result<OrbitSpec, CliError> {
    if spectrum.len() != n {
        return Err(CliError::schema(format!("orbit: spectrum has {} entries, n = {n}", spectrum.len())));
    }
    Ok(OrbitSpec::new(spectrum)?)
}

/// Canonical model name as used in the `kind` tag.
pub fn model_kind_name(name: &str) -> Result<&'static str, CliError> {
    Ok(match name.replace('-', "_").as_str() {
        "simplex" => "simplex",
        "hirzebruch" => "hirzebruch",
        "pl_bundle" | "bundle" => "pl_bundle",
        "s2xs2" | "product_of_segments" => "product_of_segments",
        other => return Err(CliError::schema(format!("unknown model `{other}`"))),
    })
}

/// The builder named by `--model` and its parameter flags.
pub fn model_from_flags(job: &JobSpec) -> Result<Option<ModelKind>, CliError> {
    let Some(name) = &job.model else {
        return Ok(None);
    };
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(model_kind_name(name)?));
    if let Some(n) = job.n {
        obj.insert("n".into(), json!(n));
    }
    if let Some(k) = job.k {
        obj.insert("k".into(), json!(k));
    }
    if let Some(a) = &job.a {
        obj.insert("a".into(), json!(a));
    }
    for (key, v) in [("sigma", &job.sigma), ("tau", &job.tau)] {
        if let Some(v) = v {
            obj.insert(key.into(), json!(v.to_string()));
        }
    }
    serde_json::from_value(Value::Object(obj))
        .map(Some)
        .map_err(|e| CliError::schema(format!("--model {name}: {e}")))
}

fn exactly_one<T>(a: Option<T>, b: Option<T>, what: &str) -> Result<T, CliError> {
    match (a, b) {
        (Some(x), None) | (None, Some(x)) => Ok(x),
        (Some(_), Some(_)) => Err(CliError::schema(format!("give either --file or --{what}, not both"))),
        (None, None) => Err(CliError::schema(format!("missing input: --file or --{what}"))),
    }
}

pub fn load_toric(job: &JobSpec) -> Result<Toric, CliError> {
    let from_file = match read_file(job)? {
        Some(FileContent::Toric(t)) => Some(t),
        Some(FileContent::Orbit(_)) => return Err(CliError::schema("expected a polytope, found an orbit")),
        None => None,
    };
    let from_flags = match model_from_flags(job)? {
        Some(kind) => Some(Toric { polytope: build_model(&kind)?, model: Some(kind) }),
        None => None,
    };
    exactly_one(from_file, from_flags, "model")
}

pub fn load_orbit(job: &JobSpec) -> Result<Orbit, CliError> {
    let from_file = match read_file(job)? {
        Some(FileContent::Orbit(o)) => Some(o),
        Some(FileContent::Toric(_)) => return Err(CliError::schema("expected an orbit, found a polytope")),
        None => None,
    };
    let from_flags = match &job.spectrum {
        Some(r) => Some(Orbit { spec: orbit_spec(r.len(), r.clone())?, vector: None, vector2: None }),
        None => None,
    };
    let mut orbit = exactly_one(from_file, from_flags, "spectrum")?;
    if job.vector.is_some() {
        orbit.vector = job.vector.clone();
    }
    if job.vector2.is_some() {
        orbit.vector2 = job.vector2.clone();
    }
    Ok(orbit)
}

pub fn parametric_model(kind: &ModelKind) -> ParametricModel {
    match kind {
        ModelKind::Simplex { n, .. } => ParametricModel::Simplex { n: *n },
        ModelKind::Hirzebruch { k, .. } => ParametricModel::Hirzebruch { k: *k },
        ModelKind::PlBundle { a, .. } => ParametricModel::PlBundle { a: a.clone() },
        ModelKind::ProductOfSegments { .. } => ParametricModel::ProductOfSegments,
    }
}

fn required(v: &Option<Vec<i64>>, flag: &str) -> Result<Vec<i64>, CliError> {
    v.clone().ok_or_else(|| CliError::schema(format!("missing --{flag}")))
}

pub fn lattice_vector(v: &Option<Vec<i64>>, flag: &str, dim: usize) -> Result<LatticeVector, CliError> {
    let v = required(v, flag)?;
    if v.len() != dim {
        return Err(CliError::schema(format!("--{flag} has {} entries, dimension is {dim}", v.len())));
    }
    Ok(LatticeVector(v))
}

pub fn su_vector(v: &Option<Vec<i64>>, flag: &str, n: usize) -> Result<SuVector, CliError> {
    let v = required(v, flag)?;
    if v.len() != n {
        return Err(CliError::schema(format!("--{flag} has {} entries, n = {n}", v.len())));
    }
    Ok(SuVector::new(v)?)
}

/// Parametric model from `--model` without requiring `--sigma`/`--tau`.
pub fn parametric_from_flags(job: &JobSpec) -> Result<Option<ParametricModel>, CliError> {
    let Some(name) = &job.model else {
        return Ok(None);
    };
    let missing = |flag: &str| CliError::schema(format!("--model {name} needs --{flag}"));
    Ok(Some(match model_kind_name(name)? {
        "simplex" => ParametricModel::Simplex { n: job.n.ok_or_else(|| missing("n"))? },
        "hirzebruch" => ParametricModel::Hirzebruch { k: job.k.ok_or_else(|| missing("k"))? },
        "pl_bundle" => ParametricModel::PlBundle { a: job.a.clone().ok_or_else(|| missing("a"))? },
        _ => ParametricModel::ProductOfSegments,
    }))
}
