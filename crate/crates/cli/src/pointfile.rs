//! Plain-text point files: one `x y` pair per line, `#` starts a comment.

use std::collections::HashMap;

use intcircle::{LatticePoint, PointSet};
use num_bigint::BigInt;

use crate::CliError;

pub fn parse(text: &str) -> Result<PointSet, CliError> {
    let mut seen: HashMap<LatticePoint, usize> = HashMap::new();
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(CliError::Parse { line, message: format!("expected two integers, found {}", fields.len()) });
        };
        let coord = |s: &str| {
            s.parse::<BigInt>().map_err(|_| CliError::Parse { line, message: format!("not an integer: {s:?}") })
        };
        let p = LatticePoint::new(coord(x)?, coord(y)?);
        if let Some(&first) = seen.get(&p) {
            return Err(CliError::Parse { line, message: format!("duplicate point {p} (first on line {first})") });
        }
        seen.insert(p.clone(), line);
        points.push(p);
    }
    Ok(PointSet::new(points))
}

pub fn read(path: &std::path::Path) -> Result<PointSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })?;
    parse(&text)
}
