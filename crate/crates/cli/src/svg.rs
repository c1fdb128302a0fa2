//! SVG 1.1 rendering of the Farey starburst.

use std::fmt::Write;

use intcircle::LatticePoint;

/// A closed polyline through `points` in order, in a `[-B-1, B+1]²` view box
/// with the y axis pointing up.
pub fn starburst_svg(points: &[LatticePoint], bound: u64) -> String {
    let half = bound + 1;
    let side = 2 * half;
    let mut path = String::new();
    for p in points.iter().chain(points.first()) {
        if !path.is_empty() {
            path.push(' ');
        }
        write!(path, "{},{}", p.x, p.y).expect("writing to a string");
    }
    let mut dots = String::new();
    for p in points {
        writeln!(dots, r#"    <circle cx="{}" cy="{}" r="0.1"/>"#, p.x, p.y).expect("writing to a string");
    }
    format!(
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="-{half} -{half} {side} {side}" width="{px}" height="{px}">
  <title>Farey starburst, bound {bound}</title>
  <g transform="scale(1,-1)">
    <polyline points="{path}" fill="none" stroke="black" stroke-width="1" vector-effect="non-scaling-stroke"/>
{dots}  </g>
</svg>
"#,
        px = 40 * side
    )
}
