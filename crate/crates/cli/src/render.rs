//! SVG figures. Geometry stays exact until the final float conversion.

use cevian::conics::second_intersection;
use cevian::frame::Cartesian;
use cevian::projective::join;
use cevian::{CevianConfig, Conic, ProjPoint, Rat};
use num_traits::{Signed, ToPrimitive, Zero};
use svg::node::element::path::Data;
use svg::node::element::{Circle, Line, Path, Polygon, Rectangle, Text};
use svg::Document;

pub const SAMPLES: i64 = 128;

/// Polyline runs of a sampled conic, each flagged closed or open.
pub type Runs = Vec<(Vec<[f64; 2]>, bool)>;
const WIDTH: f64 = 800.0;
const PAD: f64 = 40.0;
/// Points farther than this many triangle extents are left out of the fit.
const FIT_REACH: f64 = 4.0;

const LABELED: [&str; 12] = ["A", "B", "C", "G", "P", "P'", "Q", "H", "O", "D", "E", "F"];
const CONICS: [(&str, &str, &str); 4] = [
    ("circumcircle", "#999999", "6 4"),
    ("circumconic_O", "#c0392b", ""),
    ("inconic", "#2e64b0", ""),
    ("cevian_conic", "#27864a", ""),
];

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Copy)]
struct View {
    min: [f64; 2],
    max: [f64; 2],
    scale: f64,
}

impl View {
    fn fit(pts: &[[f64; 2]]) -> Self {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in pts {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]).max(1e-9);
        View { min, max, scale: (WIDTH - 2.0 * PAD) / span }
    }

    fn height(&self) -> f64 {
        round((self.max[1] - self.min[1]) * self.scale + 2.0 * PAD)
    }

    /// Screen coordinates, y pointing down, rounded to 0.01.
    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (round((p[0] - self.min[0]) * self.scale + PAD), round((self.max[1] - p[1]) * self.scale + PAD))
    }

    fn near(&self, p: [f64; 2]) -> bool {
        let (x, y) = self.map(p);
        let lim = 3.0 * WIDTH;
        (-lim..=lim).contains(&x) && (-lim..=lim).contains(&y)
    }
}

fn round(v: f64) -> f64 {
    let r = (v * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Pencil parameter `t_k ∈ (−1, 1)`; the direction `(1 − t², 2t)` sweeps
/// half a turn as `k` runs over the samples.
fn pencil_param(k: i64) -> Rat {
    Rat::new((2 * k + 1 - SAMPLES).into(), SAMPLES.into())
}

fn direction(t: &Rat) -> Cartesian {
    [Rat::from_integer(1.into()) - t * t, t * Rat::from_integer(2.into())]
}

fn dot(u: &Cartesian, v: &Cartesian) -> Rat {
    &u[0] * &v[0] + &u[1] * &v[1]
}

/// Pencil parameter of the tangent at `base`, in `[−1, 1]`.
fn tangent_param(cfg: &CevianConfig, c: &Conic, base: &ProjPoint) -> Option<f64> {
    let d = cfg.frame().direction_to_cartesian(&c.tangent_at(base).ok()?.direction().ok()?);
    let (dx, dy) = (f(&d[0]), f(&d[1]));
    let theta = if dx == 0.0 { std::f64::consts::FRAC_PI_2 } else { (dy / dx).atan() };
    Some((theta / 2.0).tan())
}

/// Samples `c` through the pencil at the ordinary point `base` on it.
/// Returns polyline runs and whether each is closed. Along each pencil
/// line the signed offset of the sample from `base` changes sign either
/// through zero (the tangent, where `base` itself is inserted) or through
/// infinity (an asymptotic direction, where the run is broken).
pub fn sample_conic(cfg: &CevianConfig, c: &Conic, base: &ProjPoint) -> Runs {
    let frame = cfg.frame();
    let Some(x0) = frame.to_cartesian(base) else { return Vec::new() };
    let b0 = [f(&x0[0]), f(&x0[1])];
    let t_tan = tangent_param(cfg, c, base).unwrap_or(1.0);
    let mut runs: Vec<Vec<[f64; 2]>> = vec![Vec::new()];
    let mut prev: Option<(f64, bool)> = None;
    for k in 0..SAMPLES {
        let t = pencil_param(k);
        let d = direction(&t);
        let Ok(line) = frame.direction_to_bary(&d).and_then(|dir| join(base, &dir)) else { continue };
        let Some(yc) = second_intersection(c, &line, base).ok().and_then(|y| frame.to_cartesian(&y)) else {
            runs.push(Vec::new());
            prev = None;
            continue;
        };
        let s = dot(&[&yc[0] - &x0[0], &yc[1] - &x0[1]], &d);
        let tf = f(&t);
        let sign = if s.is_zero() { prev.map(|(_, sg)| sg) } else { Some(s.is_positive()) };
        if let (Some((tp, a)), Some(b)) = (prev, sign) {
            if a != b {
                if tp < t_tan && t_tan <= tf {
                    runs.last_mut().expect("nonempty").push(b0);
                } else {
                    runs.push(Vec::new());
                }
            }
        }
        prev = sign.map(|sg| (tf, sg));
        runs.last_mut().expect("nonempty").push([f(&yc[0]), f(&yc[1])]);
    }
    runs.retain(|r| r.len() > 1);
    let closed = runs.len() == 1 && no_infinite_points(c);
    if closed && (t_tan > f(&pencil_param(SAMPLES - 1)) || t_tan <= f(&pencil_param(0))) {
        runs[0].push(b0);
    }
    runs.into_iter().map(|r| (r, closed)).collect()
}

/// True for ellipses: the conic misses the line at infinity.
fn no_infinite_points(c: &Conic) -> bool {
    // restrict to x + y + z = 0 via (u, v, −u−v); the binary form has no
    // real root when its discriminant is negative
    let m = c.matrix();
    let q = |i: usize, j: usize| m[i][j].clone();
    let a = q(0, 0) - q(0, 2) * 2 + q(2, 2);
    let b = (q(0, 1) - q(0, 2) - q(1, 2) + q(2, 2)) * 2;
    let cc = q(1, 1) - q(1, 2) * 2 + q(2, 2);
    &b * &b - a * cc * 4 < Zero::zero()
}

fn base_point(cfg: &CevianConfig, c: &Conic) -> Option<ProjPoint> {
    let mut cands: Vec<ProjPoint> = ProjPoint::vertices().to_vec();
    if let Ok(t) = cfg.cevian_triangle() {
        cands.extend(t.vertices().iter().cloned());
    }
    cands.into_iter().find(|p| !p.is_infinite() && c.contains(p))
}

fn path(runs: &Runs, view: &View) -> Option<Data> {
    let mut data = Data::new();
    let mut any = false;
    for (run, closed) in runs {
        let mut pen_up = true;
        for &p in run {
            if !view.near(p) {
                pen_up = true;
                continue;
            }
            let xy = view.map(p);
            data = if pen_up { data.move_to(xy) } else { data.line_to(xy) };
            pen_up = false;
            any = true;
        }
        if *closed && run.iter().all(|&p| view.near(p)) {
            data = data.close();
        }
    }
    any.then_some(data)
}

/// Renders the configuration: triangle, cevians, cevian triangle, the
/// named conics as sampled polylines and labeled points.
pub fn render(cfg: &CevianConfig) -> String {
    let frame = cfg.frame();
    let named = cfg.named_points();
    let ordinary: Vec<(&str, [f64; 2])> = LABELED
        .iter()
        .filter_map(|&name| {
            let (_, p) = named.iter().find(|(n, _)| *n == name)?;
            let c = frame.to_cartesian(p.as_ref().ok()?)?;
            Some((name, [f(&c[0]), f(&c[1])]))
        })
        .collect();

    let tri: Vec<[f64; 2]> = frame.vertices().iter().map(|v| [f(&v[0]), f(&v[1])]).collect();
    let tri_view = View::fit(&tri);
    let extent = (tri_view.max[0] - tri_view.min[0]).max(tri_view.max[1] - tri_view.min[1]);
    let mid = [(tri_view.max[0] + tri_view.min[0]) / 2.0, (tri_view.max[1] + tri_view.min[1]) / 2.0];
    let conics = cfg.named_conics();
    let sampled: Vec<(&str, &str, &str, Runs)> = CONICS
        .iter()
        .filter_map(|&(name, colour, dash)| {
            let (_, c) = conics.iter().find(|(n, _)| *n == name)?;
            let c = c.as_ref().ok()?;
            Some((name, colour, dash, sample_conic(cfg, c, &base_point(cfg, c)?)))
        })
        .collect();
    // closed conics join the labeled points in the fit
    let closed = sampled.iter().flat_map(|s| &s.3).filter(|(_, closed)| *closed).flat_map(|(r, _)| r.iter().copied());
    let fit: Vec<[f64; 2]> = ordinary
        .iter()
        .map(|(_, p)| *p)
        .chain(closed)
        .filter(|p| (p[0] - mid[0]).abs() <= FIT_REACH * extent && (p[1] - mid[1]).abs() <= FIT_REACH * extent)
        .collect();
    let view = View::fit(&fit);
    let height = view.height();

    let mut doc = Document::new()
        .set("version", "1.1")
        .set("width", WIDTH)
        .set("height", height)
        .set("viewBox", (0, 0, WIDTH, height))
        .add(Rectangle::new().set("width", WIDTH).set("height", height).set("fill", "white"));

    let at = |name: &str| ordinary.iter().find(|(n, _)| *n == name).map(|(_, p)| view.map(*p));

    let corners: Vec<String> = tri.iter().map(|p| view.map(*p)).map(|(x, y)| format!("{x},{y}")).collect();
    doc = doc.add(
        Polygon::new()
            .set("points", corners.join(" "))
            .set("fill", "none")
            .set("stroke", "black")
            .set("stroke-width", 1.5),
    );
    for (v, foot) in [("A", "D"), ("B", "E"), ("C", "F")] {
        if let (Some(a), Some(b)) = (at(v), at(foot)) {
            doc = doc.add(segment(a, b, "#777777", "3 3"));
        }
    }
    if let (Some(d), Some(e), Some(fp)) = (at("D"), at("E"), at("F")) {
        for (a, b) in [(d, e), (e, fp), (fp, d)] {
            doc = doc.add(segment(a, b, "#2e64b0", ""));
        }
    }

    for (name, colour, dash, runs) in &sampled {
        let Some(data) = path(runs, &view) else { continue };
        let mut p = Path::new()
            .set("d", data)
            .set("fill", "none")
            .set("stroke", *colour)
            .set("stroke-width", 1)
            .set("class", *name);
        if !dash.is_empty() {
            p = p.set("stroke-dasharray", *dash);
        }
        doc = doc.add(p);
    }

    for (name, p) in &ordinary {
        if !view.near(*p) {
            continue;
        }
        let (x, y) = view.map(*p);
        doc = doc.add(Circle::new().set("cx", x).set("cy", y).set("r", 3).set("fill", "black"));
        doc = doc.add(
            Text::new(*name)
                .set("x", round(x + 5.0))
                .set("y", round(y - 5.0))
                .set("font-family", "sans-serif")
                .set("font-size", 13),
        );
    }
    doc = doc.add(
        Text::new(cevian::suite::describe(cfg))
            .set("x", 8)
            .set("y", 16)
            .set("font-family", "monospace")
            .set("font-size", 11),
    );
    let mut out = doc.to_string();
    out.push('\n');
    out
}

fn segment(a: (f64, f64), b: (f64, f64), colour: &str, dash: &str) -> Line {
    let l = Line::new()
        .set("x1", a.0)
        .set("y1", a.1)
        .set("x2", b.0)
        .set("y2", b.1)
        .set("stroke", colour)
        .set("stroke-width", 1);
    if dash.is_empty() {
        l
    } else {
        l.set("stroke-dasharray", dash)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cevian::frame::cart_i;

    fn gergonne() -> CevianConfig {
        let q = |n: i64, d: i64| Rat::new(n.into(), d.into());
        CevianConfig::from_cartesian(cart_i(0, 0), cart_i(4, 0), cart_i(0, 3), &[q(8, 11), q(9, 11)]).unwrap()
    }

    #[test]
    fn incircle_samples_lie_on_the_unit_circle() {
        let cfg = gergonne();
        let c = cfg.inconic().unwrap();
        let base = base_point(&cfg, &c).unwrap();
        let runs = sample_conic(&cfg, &c, &base);
        assert_eq!(runs.len(), 1);
        let (pts, closed) = &runs[0];
        assert!(closed);
        assert!(pts.len() >= SAMPLES as usize);
        for p in pts {
            let r2 = (p[0] - 1.0).powi(2) + (p[1] - 1.0).powi(2);
            assert!((r2 - 1.0).abs() < 1e-12, "{p:?}");
        }
    }

    #[test]
    fn hyperbola_splits_into_branches() {
        // yz + zx − xy = 0 meets the line at infinity in two real points
        let cfg = gergonne();
        let c = Conic::from_entries([0, 0, 0, -1, 1, 1].map(Into::into)).unwrap();
        assert!(!no_infinite_points(&c));
        let runs = sample_conic(&cfg, &c, &ProjPoint::vertex_a());
        assert!(runs.len() >= 2);
        assert!(runs.iter().all(|(_, closed)| !closed));
    }

    #[test]
    fn svg_is_deterministic_and_labeled() {
        let a = render(&gergonne());
        let b = render(&gergonne());
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        for l in ["A", "B", "C", "P", "Q", "H"] {
            assert!(a.contains(&format!(">\n{l}\n</text>")), "missing label {l}");
        }
        assert!(a.contains("class=\"inconic\""));
    }
}
