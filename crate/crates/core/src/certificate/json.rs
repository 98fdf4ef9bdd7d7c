//! Canonical JSON form of a grid certificate:
//!
//! ```text
//! { "grid": {"n": 16, "m": 2},
//!   "S": [[1,1], [1,2], ...],
//!   "paths": [ {"pair": [[1,1],[1,2]], "waypoints": [[1,1],[1,2]]}, ... ] }
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Deserialize;

use super::{Assignment, Certificate, Pair};
use crate::error::DecodeError;
use crate::grid::{GridSpec, Path, Vertex};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    grid: RawGrid,
    #[serde(rename = "S")]
    set: Vec<[i64; 2]>,
    paths: Vec<RawPath>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    n: i64,
    m: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPath {
    pair: [[i64; 2]; 2],
    waypoints: Vec<[i64; 2]>,
}

fn point(v: Vertex) -> String {
    format!("[{},{}]", v.x, v.y)
}

fn points(vs: impl IntoIterator<Item = Vertex>) -> String {
    let inner: Vec<String> = vs.into_iter().map(point).collect();
    format!("[{}]", inner.join(","))
}

/// Canonical text: fixed key order, one path per line, trailing newline.
pub fn to_json(c: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"grid\": {{\"n\": {}, \"m\": {}}},", c.spec.n(), c.spec.m()).unwrap();
    writeln!(out, "  \"S\": {},", points(c.set.iter().copied())).unwrap();
    if c.assignments.is_empty() {
        writeln!(out, "  \"paths\": []").unwrap();
    } else {
        writeln!(out, "  \"paths\": [").unwrap();
        for (i, a) in c.assignments.iter().enumerate() {
            let sep = if i + 1 == c.assignments.len() { "" } else { "," };
            writeln!(
                out,
                "    {{\"pair\": {}, \"waypoints\": {}}}{sep}",
                points([a.pair.lo(), a.pair.hi()]),
                points(a.path.vertices().iter().copied())
            )
            .unwrap();
        }
        writeln!(out, "  ]").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn vertex(spec: GridSpec, field: &str, raw: [i64; 2]) -> Result<Vertex, DecodeError> {
    for (axis, value, bound) in [("x", raw[0], spec.n()), ("y", raw[1], spec.m())] {
        if value < 1 || value as u64 > bound as u64 {
            return Err(DecodeError::invalid(
                format!("{field}.{axis}"),
                format!("coordinate {value} outside 1..={bound} (coordinates are 1-based)"),
            ));
        }
    }
    Ok(Vertex::new(raw[0] as usize, raw[1] as usize))
}

/// Parses and validates a certificate. Syntax and schema errors carry serde's line/column;
/// semantic errors name the offending field, e.g. `paths[2].waypoints[4].x`.
pub fn from_json(text: &str) -> Result<Certificate, DecodeError> {
    let raw: RawCertificate =
        serde_json::from_str(text).map_err(|e| DecodeError::Syntax(e.to_string()))?;
    let dim = |field: &str, value: i64| -> Result<usize, DecodeError> {
        if value < 1 {
            Err(DecodeError::invalid(field, format!("must be at least 1, got {value}")))
        } else {
            Ok(value as usize)
        }
    };
    let spec = GridSpec::new(dim("grid.n", raw.grid.n)?, dim("grid.m", raw.grid.m)?)
        .expect("dimensions checked");

    let mut set = BTreeSet::new();
    for (i, &p) in raw.set.iter().enumerate() {
        let v = vertex(spec, &format!("S[{i}]"), p)?;
        if !set.insert(v) {
            return Err(DecodeError::invalid(format!("S[{i}]"), format!("duplicate vertex {v}")));
        }
    }

    let mut assignments = Vec::with_capacity(raw.paths.len());
    for (i, rp) in raw.paths.iter().enumerate() {
        let base = format!("paths[{i}]");
        let a = vertex(spec, &format!("{base}.pair[0]"), rp.pair[0])?;
        let b = vertex(spec, &format!("{base}.pair[1]"), rp.pair[1])?;
        for (j, v) in [a, b].into_iter().enumerate() {
            if !set.contains(&v) {
                return Err(DecodeError::invalid(
                    format!("{base}.pair[{j}]"),
                    format!("{v} is not a member of S"),
                ));
            }
        }
        if a == b {
            return Err(DecodeError::invalid(format!("{base}.pair"), "endpoints must differ"));
        }
        let mut waypoints = Vec::with_capacity(rp.waypoints.len());
        for (j, &p) in rp.waypoints.iter().enumerate() {
            let field = format!("{base}.waypoints[{j}]");
            let w = vertex(spec, &field, p)?;
            if let Some(&prev) = waypoints.last() {
                if !spec.is_edge(prev, w) {
                    return Err(DecodeError::invalid(
                        field,
                        format!("{w} is not adjacent to the previous waypoint {prev}"),
                    ));
                }
            }
            waypoints.push(w);
        }
        let pair = Pair::new(a, b);
        let ends = match (waypoints.first(), waypoints.last()) {
            (Some(&s), Some(&t)) => Some(Pair::new(s, t)),
            _ => None,
        };
        if ends != Some(pair) {
            return Err(DecodeError::invalid(
                format!("{base}.waypoints"),
                format!("waypoints must start and end at the pair {pair}"),
            ));
        }
        assignments.push(Assignment {
            pair,
            path: Path::new(waypoints),
        });
    }

    Ok(Certificate {
        spec,
        set,
        assignments,
    })
}
