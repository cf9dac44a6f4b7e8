//! Cartesian reference triangle: conversion between Cartesian input and the
//! barycentric coordinates used internally, plus the little metric data the
//! kernel needs (squared side lengths for the circumcircle and isogonal map).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::collineations::QuadMap;
use crate::conics::Conic;
use crate::error::{GeometryError, Result};
use crate::linalg;
use crate::projective::{ProjLine, ProjPoint, Rat};

pub type Cartesian = [Rat; 2];

pub fn cart(x: Rat, y: Rat) -> Cartesian {
    [x, y]
}

/// Integer shorthand for tests and examples.
pub fn cart_i(x: i64, y: i64) -> Cartesian {
    [Rat::from_integer(x.into()), Rat::from_integer(y.into())]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    vertices: [Cartesian; 3],
}

fn det2(u: &Cartesian, v: &Cartesian) -> Rat {
    &u[0] * &v[1] - &u[1] * &v[0]
}

fn sub(u: &Cartesian, v: &Cartesian) -> Cartesian {
    [&u[0] - &v[0], &u[1] - &v[1]]
}

/// Signed double area of a Cartesian triangle.
fn area2(p: &Cartesian, q: &Cartesian, r: &Cartesian) -> Rat {
    det2(&sub(q, p), &sub(r, p))
}

impl Frame {
    pub fn new(a: Cartesian, b: Cartesian, c: Cartesian) -> Result<Self> {
        if area2(&a, &b, &c).is_zero() {
            return Err(GeometryError::CollinearInput);
        }
        Ok(Self { vertices: [a, b, c] })
    }

    pub fn vertices(&self) -> &[Cartesian; 3] {
        &self.vertices
    }

    /// Barycentric coordinates of a Cartesian point (signed sub-areas).
    pub fn to_bary(&self, p: &Cartesian) -> ProjPoint {
        let [a, b, c] = &self.vertices;
        ProjPoint::from_rats(&[area2(p, b, c), area2(a, p, c), area2(a, b, p)]).expect("frame is nondegenerate")
    }

    /// The point at infinity in Cartesian direction `d`.
    pub fn direction_to_bary(&self, d: &Cartesian) -> Result<ProjPoint> {
        if d[0].is_zero() && d[1].is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        let a = &self.vertices[0];
        let moved = self.to_bary(&[&a[0] + &d[0], &a[1] + &d[1]]);
        let w = moved.normalized_weights().expect("ordinary");
        ProjPoint::from_rats(&[&w[0] - Rat::one(), w[1].clone(), w[2].clone()])
    }

    /// Cartesian coordinates of an ordinary point.
    pub fn to_cartesian(&self, p: &ProjPoint) -> Option<Cartesian> {
        let w = p.normalized_weights()?;
        let [a, b, c] = &self.vertices;
        Some(std::array::from_fn(|k| &w[0] * &a[k] + &w[1] * &b[k] + &w[2] * &c[k]))
    }

    /// Cartesian direction vector of a point at infinity.
    pub fn direction_to_cartesian(&self, p: &ProjPoint) -> Cartesian {
        let [a, b, c] = &self.vertices;
        let r = p.to_rats();
        std::array::from_fn(|k| &r[0] * &a[k] + &r[1] * &b[k] + &r[2] * &c[k])
    }

    /// Barycentric → Cartesian homogeneous `(X, Y, W)`.
    fn lift(&self) -> [[Rat; 3]; 3] {
        let [a, b, c] = &self.vertices;
        [
            [a[0].clone(), b[0].clone(), c[0].clone()],
            [a[1].clone(), b[1].clone(), c[1].clone()],
            [Rat::one(), Rat::one(), Rat::one()],
        ]
    }

    /// Line `u·x + v·y + w = 0` in barycentrics.
    pub fn line_to_bary(&self, u: &Rat, v: &Rat, w: &Rat) -> Result<ProjLine> {
        let l = self.lift();
        let coeffs: [Rat; 3] = std::array::from_fn(|j| u * &l[0][j] + v * &l[1][j] + w * &l[2][j]);
        ProjLine::from_rats(&coeffs)
    }

    /// Cartesian conic `[X Y W]·C·[X Y W]ᵀ = 0` in barycentrics: `LᵀCL`.
    pub fn conic_to_bary(&self, c: &[[Rat; 3]; 3]) -> Result<Conic> {
        let l = self.lift();
        let cl: [[Rat; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &c[i][k] * &l[k][j]).sum()));
        let m: [[Rat; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &l[k][i] * &cl[k][j]).sum()));
        let flat: [Rat; 9] = std::array::from_fn(|k| m[k / 3][k % 3].clone());
        Conic::from_matrix(&linalg::unflatten(linalg::integerize(&flat)))
    }

    /// Circle with Cartesian center and squared radius.
    pub fn circle(&self, center: &Cartesian, r2: &Rat) -> Result<Conic> {
        let (h, k) = (&center[0], &center[1]);
        let z = Rat::zero;
        let c = [
            [Rat::one(), z(), -h.clone()],
            [z(), Rat::one(), -k.clone()],
            [-h.clone(), -k.clone(), h * h + k * k - r2],
        ];
        self.conic_to_bary(&c)
    }

    /// `[a², b², c²]`, squared lengths of the sides opposite A, B, C.
    pub fn squared_sides(&self) -> [Rat; 3] {
        let [a, b, c] = &self.vertices;
        let sq = |u: &Cartesian, v: &Cartesian| {
            let d = sub(u, v);
            &d[0] * &d[0] + &d[1] * &d[1]
        };
        [sq(b, c), sq(c, a), sq(a, b)]
    }

    pub fn circumcircle(&self) -> Conic {
        Conic::circumcircle(&self.squared_sides())
    }

    /// Classical isogonal conjugation: pole `(a² : b² : c²)`.
    pub fn isogonal(&self) -> QuadMap {
        let pole = ProjPoint::from_vec(linalg::integerize(&self.squared_sides())).expect("nonzero sides");
        QuadMap::new(pole).expect("squared sides are positive")
    }

    /// Squared Euclidean distance between two ordinary points.
    pub fn dist2(&self, p: &ProjPoint, q: &ProjPoint) -> Option<Rat> {
        let (u, v) = (self.to_cartesian(p)?, self.to_cartesian(q)?);
        let d = sub(&u, &v);
        Some(&d[0] * &d[0] + &d[1] * &d[1])
    }

    /// Cartesian dot product of two directions (points at infinity).
    pub fn direction_dot(&self, p: &ProjPoint, q: &ProjPoint) -> Rat {
        let (u, v) = (self.direction_to_cartesian(p), self.direction_to_cartesian(q));
        &u[0] * &v[0] + &u[1] * &v[1]
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || GeometryError::InvalidArgument(format!("malformed rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::projective::midpoint;

    fn right_345() -> Frame {
        Frame::new(cart_i(0, 0), cart_i(4, 0), cart_i(0, 3)).unwrap()
    }

    #[test]
    fn round_trip_cartesian() {
        let f = right_345();
        let p = [rat(8, 11), rat(9, 11)];
        let b = f.to_bary(&p);
        assert_eq!(f.to_cartesian(&b).unwrap(), p);
        assert_eq!(f.to_bary(&cart_i(0, 0)), ProjPoint::vertex_a());
    }

    #[test]
    fn cartesian_midpoint() {
        let f = right_345();
        let m = midpoint(&f.to_bary(&[rat(1, 3), rat(2, 1)]), &f.to_bary(&[rat(5, 3), rat(4, 1)])).unwrap();
        assert_eq!(f.to_cartesian(&m).unwrap(), cart_i(1, 3));
    }

    #[test]
    fn circumcircle_matches_cartesian_circle() {
        let f = right_345();
        // hypotenuse midpoint is the circumcenter, radius 5/2
        let c = f.circle(&[rat(2, 1), rat(3, 2)], &rat(25, 4)).unwrap();
        assert_eq!(c, f.circumcircle());
    }

    #[test]
    fn symmedian_is_isogonal_of_centroid() {
        let f = right_345();
        assert_eq!(f.squared_sides(), [rat(25, 1), rat(9, 1), rat(16, 1)]);
        let k = f.isogonal().apply(&ProjPoint::centroid()).unwrap();
        assert_eq!(k, ProjPoint::new(25, 9, 16).unwrap());
    }

    #[test]
    fn isogonal_oracle_by_angle_bisector_reflection() {
        // reflect the cevian AG in the bisector of angle A (the line y = x),
        // likewise at B; the reflected cevians meet at the isogonal image
        let f = right_345();
        let g = f.to_cartesian(&ProjPoint::centroid()).unwrap();
        // A = origin; bisector y = x swaps coordinates
        let a_ref = [g[1].clone(), g[0].clone()];
        // at B = (4,0): unit vectors to A (−1,0) and to C (−4/5, 3/5);
        // bisector direction (−9/5, 3/5) ∝ (−3, 1)
        let reflect = |v: Cartesian, dir: Cartesian| -> Cartesian {
            let dd = &dir[0] * &dir[0] + &dir[1] * &dir[1];
            let k = (&v[0] * &dir[0] + &v[1] * &dir[1]) * Rat::from_integer(2.into()) / dd;
            [&k * &dir[0] - &v[0], &k * &dir[1] - &v[1]]
        };
        let bg = sub(&g, &cart_i(4, 0));
        let b_ref = reflect(bg, cart_i(-3, 1));
        let la = crate::projective::join(&ProjPoint::vertex_a(), &f.direction_to_bary(&a_ref).unwrap()).unwrap();
        let lb = crate::projective::join(&ProjPoint::vertex_b(), &f.direction_to_bary(&b_ref).unwrap()).unwrap();
        let oracle = crate::projective::meet(&la, &lb).unwrap();
        assert_eq!(oracle, ProjPoint::new(25, 9, 16).unwrap());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7, 1));
        assert!(parse_rat("3/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(format_rat(&rat(-4, 6)), "-2/3");
        assert_eq!(format_rat(&rat(5, 1)), "5");
    }
}
