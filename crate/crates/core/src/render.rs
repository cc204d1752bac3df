//! Deterministic SVG pictures of rank-2 deformations.

use std::fmt::Write;

use crate::deform::{deform_terms, EquivMult};
use crate::error::{Error, Result};
use crate::poset::chambers;
use crate::rootsys::RootSystem;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 20.0;
const CAPTION: f64 = 28.0;
const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Orthonormal basis (Gram-Schmidt, floating point) of the span of the
/// roots; the picture plane.
fn plane_basis(rs: &RootSystem) -> [Vec<f64>; 2] {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for r in rs.positive_roots() {
        let mut v: Vec<f64> = r.iter().map(|&x| x as f64).collect();
        for b in &basis {
            let d: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
        }
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-9 {
            basis.push(v.into_iter().map(|x| x / n).collect());
        }
        if basis.len() == 2 {
            break;
        }
    }
    [basis[0].clone(), basis[1].clone()]
}

/// Clips `a x + b y = c` to the square `[-r, r]^2`.
fn clip(a: f64, b: f64, c: f64, r: f64) -> Option<((f64, f64), (f64, f64))> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-9;
    if b.abs() > eps {
        for x in [-r, r] {
            let y = (c - a * x) / b;
            if y.abs() <= r + eps {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > eps {
        for y in [-r, r] {
            let x = (c - b * y) / a;
            if x.abs() <= r + eps {
                pts.push((x, y));
            }
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < eps && (p.1 - q.1).abs() < eps);
    match pts.as_slice() {
        [p, .., q] => Some((*p, *q)),
        _ => None,
    }
}

/// Fixed-precision number without a negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// SVG of `A^[-a,b]` for a rank-2 type: one line per hyperplane, colored by
/// orbit, clipped to a square, with the Möbius chamber count as caption.
pub fn render_svg(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<String> {
    if rs.rank() != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: rs.rank(),
        });
    }
    let terms = deform_terms(rs, a, b)?;
    let arr = crate::deform::deform(rs, a, b)?;
    let count = chambers(&arr)?;
    let [u, v] = plane_basis(rs);

    let lines: Vec<(usize, f64, f64, f64)> = terms
        .iter()
        .map(|t| {
            let root = &rs.positive_roots()[t.root];
            let dot = |w: &[f64]| root.iter().zip(w).map(|(&x, y)| x as f64 * y).sum::<f64>();
            (rs.orbit_of(t.root), dot(&u), dot(&v), t.level as f64)
        })
        .collect();
    let reach = lines
        .iter()
        .map(|&(_, a, b, c)| c.abs() / (a * a + b * b).sqrt())
        .fold(0.0f64, f64::max);
    let r = reach * 1.5 + 1.0;
    let scale = (SIZE - 2.0 * MARGIN) / (2.0 * r);
    let to_px = |(x, y): (f64, f64)| (SIZE / 2.0 + x * scale, SIZE / 2.0 - y * scale);

    let mut out = String::new();
    let h = SIZE + CAPTION;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(SIZE),
        h = num(h)
    )
    .expect("write to string");
    writeln!(
        out,
        r#"<rect x="0.000" y="0.000" width="{w}" height="{h}" fill="white"/>"#,
        w = num(SIZE),
        h = num(h)
    )
    .expect("write to string");
    for (orbit, a, b, c) in &lines {
        if let Some((p, q)) = clip(*a, *b, *c, r) {
            let (p, q) = (to_px(p), to_px(q));
            writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1.500"/>"#,
                num(p.0),
                num(p.1),
                num(q.0),
                num(q.1),
                PALETTE[orbit % PALETTE.len()]
            )
            .expect("write to string");
        }
    }
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="monospace" font-size="14">{} {} {}  chambers: {}</text>"#,
        num(MARGIN),
        num(SIZE + CAPTION / 2.0 + 5.0),
        rs.label(),
        a,
        b,
        count
    )
    .expect("write to string");
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn svg(label: &str, a: &[u32], b: &[u32]) -> String {
        let rs = build_root_system(label.parse().unwrap()).unwrap();
        render_svg(&rs, &EquivMult::new(a.to_vec()), &EquivMult::new(b.to_vec())).unwrap()
    }

    #[test]
    fn line_counts_and_caption() {
        let s = svg("G2", &[1, 1], &[1, 1]);
        assert_eq!(s.matches("<line").count(), 18);
        assert!(s.contains("chambers: "));
        assert_eq!(svg("A2", &[0], &[0]).matches("<line").count(), 3);
        assert_eq!(svg("B2", &[0, 0], &[1, 1]).matches("<line").count(), 8);
    }

    #[test]
    fn deterministic() {
        assert_eq!(svg("G2", &[1, 0], &[1, 0]), svg("G2", &[1, 0], &[1, 0]));
    }

    #[test]
    fn rank_must_be_two() {
        let rs = build_root_system("A3".parse().unwrap()).unwrap();
        assert!(render_svg(&rs, &EquivMult::new(vec![0]), &EquivMult::new(vec![0])).is_err());
    }

    #[test]
    fn clip_horizontal() {
        let ((x1, y1), (x2, y2)) = clip(0.0, 1.0, 0.5, 2.0).unwrap();
        assert_eq!((x1, y1, x2, y2), (-2.0, 0.5, 2.0, 0.5));
        assert!(clip(0.0, 1.0, 5.0, 2.0).is_none());
    }
}
