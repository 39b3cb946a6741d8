//! Exhaustive pair grids.

use equiloc_core::{LatticeVector, Status, SuVector};
use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input;
use crate::job::{Format, JobSpec};
use crate::{decide_pair, orbit_pair, verdict_row};

/// All vectors in `[-r, r]^d`, lexicographic.
fn cartesian(d: usize, r: i64) -> Vec<Vec<i64>> {
    (0..d).map(|_| -r..=r).multi_cartesian_product().collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn row(index: usize, b: &[i64], b2: &[i64], result: Result<Value, CliError>) -> Value {
    match result {
        Ok(v) => {
            let mut r = json!({"index": index, "b": b, "b2": b2});
            r.as_object_mut().expect("object").extend(v.as_object().expect("object").clone());
            r
        }
        Err(e) => json!({"index": index, "b": b, "b2": b2, "error": e.to_string()}),
    }
}

/// Every unordered pair of admissible vectors, one verdict row each.
pub fn sweep(job: &JobSpec) -> Result<String, CliError> {
    let r = job.range.unwrap_or(3);
    if r < 1 {
        return Err(CliError::schema("--range must be at least 1"));
    }
    let rows: Vec<Value> = if job.spectrum.is_some() || is_orbit_file(job) {
        let o = input::load_orbit(job)?;
        let vectors: Vec<Vec<i64>> = cartesian(o.spec.n(), r)
            .into_iter()
            .filter(|v| v.iter().sum::<i64>() == 0 && v.iter().any(|&x| x != 0))
            .collect();
        pairs(vectors.len())
            .into_par_iter()
            .enumerate()
            .map(|(idx, (i, j))| {
                let (a, b) = (&vectors[i], &vectors[j]);
                let result = SuVector::new(a.clone())
                    .and_then(|x| Ok((x, SuVector::new(b.clone())?)))
                    .map_err(CliError::from)
                    .and_then(|(x, y)| orbit_pair(&o.spec, &x, &y))
                    .map(|c| verdict_row(&c.verdict));
                row(idx, a, b, result)
            })
            .collect()
    } else {
        let toric = if job.incommensurable { None } else { Some(input::load_toric(job)?) };
        let s2xs2 = job.incommensurable
            || matches!(
                toric.as_ref().and_then(|t| t.model.as_ref()),
                Some(equiloc_core::ModelKind::ProductOfSegments { .. })
                    | Some(equiloc_core::ModelKind::Hirzebruch { k: 0, .. })
            );
        let dim = toric.as_ref().map_or(2, |t| t.polytope.dim());
        let vectors: Vec<Vec<i64>> = cartesian(dim, r)
            .into_iter()
            .filter(|v| if s2xs2 { v.iter().all(|&x| x != 0) } else { v.iter().any(|&x| x != 0) })
            .collect();
        pairs(vectors.len())
            .into_par_iter()
            .enumerate()
            .map(|(idx, (i, j))| {
                let (a, b) = (&vectors[i], &vectors[j]);
                let result = decide_pair(job, toric.as_ref(), &LatticeVector(a.clone()), &LatticeVector(b.clone()))
                    .map(|v| verdict_row(&v));
                row(idx, a, b, result)
            })
            .collect()
    };
    let count = |s: Status| rows.iter().filter(|r| r["status"] == json!(s)).count();
    let errors = rows.iter().filter(|r| r.get("error").is_some()).count();
    let summary = json!({
        "pairs": rows.len(),
        "equivalent": count(Status::Equivalent),
        "not_equivalent": count(Status::NotEquivalent),
        "inconclusive": count(Status::InconclusiveNecessaryPassed),
        "errors": errors,
    });
    let out = match job.format {
        Format::Json => json!({"rows": rows, "summary": summary}).to_string(),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &rows {
                let outcome = match r.get("error") {
                    Some(e) => format!("error: {}", e.as_str().unwrap_or_default()),
                    None => {
                        let w = r["witness"].as_str().map(|w| format!(" [{w}]")).unwrap_or_default();
                        format!("{}{w}", r["status"].as_str().unwrap_or_default())
                    }
                };
                s.push_str(&format!("{}\t{}\t{}\t{outcome}\n", r["index"], r["b"], r["b2"]));
            }
            s.push_str(&format!("summary: {summary}\n"));
            s
        }
    };
    if errors > 0 {
        return Err(CliError::Math { name: "SweepErrors".into(), message: format!("{errors} rows failed\n{out}") });
    }
    Ok(out)
}

fn is_orbit_file(job: &JobSpec) -> bool {
    job.file
        .as_ref()
        .and_then(|p| std::fs::read_to_string(p).ok())
        .and_then(|t| serde_json::from_str::<Value>(&t).ok())
        .is_some_and(|v| v.get("orbit").is_some())
}
