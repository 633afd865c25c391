//! Figure data for a claim's witness: a JSON document and an SVG drawing.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::{decimal17, BigRat};
use crate::geometry::{Circle, Line, Point};
use crate::theorems::{ClaimId, Element, Witness};

/// A labeled object with coordinates as 17-digit decimals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureElement {
    pub name: String,
    /// `point`, `line`, `circle` or `segment`.
    pub kind: String,
    /// `x y`; `u v w` of `u·x + v·y + w = 0`; `d e f` of
    /// `x² + y² + d·x + e·y + f = 0`; `x1 y1 x2 y2`.
    pub coordinates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureDoc {
    pub claim: ClaimId,
    pub params: Vec<String>,
    pub holds: bool,
    pub elements: Vec<FigureElement>,
    /// `min_x, min_y, max_x, max_y`.
    pub bounding_box: [String; 4],
}

impl FigureDoc {
    pub fn from_witness(
        claim: ClaimId,
        params: Vec<String>,
        holds: bool,
        w: &Witness<BigRat>,
    ) -> Self {
        let elements = w
            .entries()
            .iter()
            .map(|(name, e)| FigureElement {
                name: name.clone(),
                kind: e.kind().to_string(),
                coordinates: e.coords().into_iter().map(decimal17).collect(),
            })
            .collect();
        FigureDoc {
            claim,
            params,
            holds,
            elements,
            bounding_box: bounding_box(w).map(|q| decimal17(&q)),
        }
    }

    /// The elements read back as floats.
    pub fn to_witness(&self) -> Witness<f64> {
        let mut w = Witness::new(None);
        for e in &self.elements {
            let c: Vec<f64> = e
                .coordinates
                .iter()
                .map(|s| s.parse().unwrap_or(f64::NAN))
                .collect();
            let _ = match e.kind.as_str() {
                "point" => w.point(&e.name, Point::new(c[0], c[1])).map(drop),
                "line" => w
                    .line(
                        &e.name,
                        Line {
                            u: c[0],
                            v: c[1],
                            w: c[2],
                        },
                    )
                    .map(drop),
                "circle" => w
                    .circle(
                        &e.name,
                        Circle {
                            d: c[0],
                            e: c[1],
                            f: c[2],
                        },
                    )
                    .map(drop),
                _ => w.segment(&e.name, &Point::new(c[0], c[1]), &Point::new(c[2], c[3])),
            };
        }
        w
    }

    pub fn bbox(&self) -> [f64; 4] {
        self.bounding_box.clone().map(|s| s.parse().unwrap_or(0.0))
    }
}

/// Box around every point and segment end, widened by 10% of its extent
/// on each side (1 when the extent is zero).
fn bounding_box(w: &Witness<BigRat>) -> [BigRat; 4] {
    let mut pts: Vec<&Point<BigRat>> = Vec::new();
    for (_, e) in w.entries() {
        match e {
            Element::Point(p) => pts.push(p),
            Element::Segment(p, q) => pts.extend([p, q]),
            _ => {}
        }
    }
    let zero = BigRat::from_integer(0.into());
    let range = |f: &dyn Fn(&Point<BigRat>) -> &BigRat| {
        let lo = pts
            .iter()
            .map(|p| f(p))
            .min()
            .cloned()
            .unwrap_or_else(|| zero.clone());
        let hi = pts
            .iter()
            .map(|p| f(p))
            .max()
            .cloned()
            .unwrap_or_else(|| zero.clone());
        let extent = &hi - &lo;
        let margin = if extent == zero {
            BigRat::from_integer(1.into())
        } else {
            extent / BigRat::from_integer(10.into())
        };
        (&lo - &margin, &hi + &margin)
    };
    let (x0, x1) = range(&|p| &p.x);
    let (y0, y1) = range(&|p| &p.y);
    [x0, y0, x1, y1]
}

/// The part of `u·x + v·y + w = 0` inside the box, if any.
pub fn clip_line(l: &Line<f64>, bbox: [f64; 4]) -> Option<([f64; 2], [f64; 2])> {
    let [x0, y0, x1, y1] = bbox;
    let mut hits: Vec<[f64; 2]> = Vec::new();
    let eps = 1e-12 * (x1 - x0).abs().max((y1 - y0).abs()).max(1.0);
    if l.v != 0.0 {
        for x in [x0, x1] {
            let y = -(l.u * x + l.w) / l.v;
            if y >= y0 - eps && y <= y1 + eps {
                hits.push([x, y]);
            }
        }
    }
    if l.u != 0.0 {
        for y in [y0, y1] {
            let x = -(l.v * y + l.w) / l.u;
            if x >= x0 - eps && x <= x1 + eps {
                hits.push([x, y]);
            }
        }
    }
    let first = *hits.first()?;
    let far = hits.iter().copied().max_by(|a, b| {
        let da = (a[0] - first[0]).hypot(a[1] - first[1]);
        let db = (b[0] - first[0]).hypot(b[1] - first[1]);
        da.total_cmp(&db)
    })?;
    (far != first).then_some((first, far))
}

const WIDTH: f64 = 800.0;

/// SVG 1.1 drawing with `y` pointing up, lines clipped to the box.
pub fn render_svg(doc: &FigureDoc) -> String {
    let [x0, y0, x1, y1] = doc.bbox();
    let scale = WIDTH / (x1 - x0).max(f64::MIN_POSITIVE);
    let height = ((y1 - y0) * scale).max(1.0);
    let sx = |x: f64| (x - x0) * scale;
    let sy = |y: f64| (y1 - y) * scale;
    let w = doc.to_witness();
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.3} {height:.3}">"#
    );
    let _ = writeln!(
        s,
        "  <title>{} ({})</title>",
        doc.claim,
        doc.params.join(", ")
    );
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    for (name, e) in w.entries() {
        match e {
            Element::Segment(p, q) => {
                let _ = writeln!(
                    s,
                    r#"  <line id="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="2"/>"#,
                    xml(name),
                    sx(p.x),
                    sy(p.y),
                    sx(q.x),
                    sy(q.y)
                );
            }
            Element::Line(l) => {
                if let Some((a, b)) = clip_line(l, [x0, y0, x1, y1]) {
                    let _ = writeln!(
                        s,
                        r#"  <line id="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="steelblue" stroke-width="1"/>"#,
                        xml(name),
                        sx(a[0]),
                        sy(a[1]),
                        sx(b[0]),
                        sy(b[1])
                    );
                }
            }
            Element::Circle(c) => {
                let center = Point::new(-c.d / 2.0, -c.e / 2.0);
                let r2 = center.x * center.x + center.y * center.y - c.f;
                if r2 > 0.0 {
                    let _ = writeln!(
                        s,
                        r#"  <circle id="{}" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="seagreen" stroke-width="1"/>"#,
                        xml(name),
                        sx(center.x),
                        sy(center.y),
                        r2.sqrt() * scale
                    );
                }
            }
            Element::Point(_) => {}
        }
    }
    // Points last so they sit on top.
    for (name, e) in w.entries() {
        if let Element::Point(p) = e {
            let (px, py) = (sx(p.x), sy(p.y));
            let _ = writeln!(
                s,
                r#"  <circle id="{}" cx="{px:.3}" cy="{py:.3}" r="3" fill="crimson"/>"#,
                xml(name)
            );
            let _ = writeln!(
                s,
                r#"  <text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12">{}</text>"#,
                px + 5.0,
                py - 5.0,
                xml(name)
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn xml(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('\'', "&apos;")
        .replace('"', "&quot;")
}
