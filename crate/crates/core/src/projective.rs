//! Homogeneous points and lines over ℚ.
//!
//! Coordinates are barycentric with respect to the reference triangle
//! `A = (1:0:0)`, `B = (0:1:0)`, `C = (0:0:1)`; the line at infinity is
//! `[1:1:1]`. Both points and lines are stored in canonical form: coprime
//! integers with the first nonzero entry positive, so derived equality and
//! hashing agree with projective equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::linalg::{self, Vec3};

pub type Rat = BigRational;

/// A rational value or ∞, the range of the cross-ratio.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Finite(Rat),
    Infinity,
}

impl ExtRat {
    pub fn finite(n: i64, d: i64) -> Self {
        ExtRat::Finite(linalg::rat(n, d))
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::Infinity => f.write_str("inf"),
        }
    }
}

macro_rules! homogeneous {
    ($name:ident, $open:literal, $close:literal) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            c: Vec3,
        }

        impl $name {
            pub fn from_vec(v: Vec3) -> Result<Self> {
                linalg::primitive(v).map(|c| Self { c }).ok_or(GeometryError::ZeroVector)
            }

            pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
                Self::from_vec(linalg::vec3(x, y, z))
            }

            pub fn from_rats(v: &[Rat; 3]) -> Result<Self> {
                Self::from_vec(linalg::integerize(v))
            }

            pub fn coords(&self) -> &Vec3 {
                &self.c
            }

            pub fn to_rats(&self) -> [Rat; 3] {
                self.c.clone().map(Rat::from_integer)
            }

            /// Canonical form is already applied on construction; this is a
            /// no-op kept for the idempotence contract.
            pub fn normalized(&self) -> Self {
                Self::from_vec(self.c.clone()).expect("canonical vectors are nonzero")
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($open, "{}:{}:{}", $close), self.c[0], self.c[1], self.c[2])
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

homogeneous!(ProjPoint, "(", ")");
homogeneous!(ProjLine, "[", "]");

impl ProjPoint {
    pub fn vertex_a() -> Self {
        Self::new(1, 0, 0).unwrap()
    }
    pub fn vertex_b() -> Self {
        Self::new(0, 1, 0).unwrap()
    }
    pub fn vertex_c() -> Self {
        Self::new(0, 0, 1).unwrap()
    }
    pub fn vertices() -> [Self; 3] {
        [Self::vertex_a(), Self::vertex_b(), Self::vertex_c()]
    }
    pub fn centroid() -> Self {
        Self::new(1, 1, 1).unwrap()
    }

    /// Coordinate sum; zero exactly for points at infinity.
    pub fn weight(&self) -> BigInt {
        self.c.iter().sum()
    }

    pub fn is_infinite(&self) -> bool {
        self.weight().is_zero()
    }

    pub fn lies_on(&self, l: &ProjLine) -> bool {
        linalg::dot(&self.c, l.coords()).is_zero()
    }

    /// True when no coordinate vanishes, i.e. the point is off all side lines.
    pub fn off_sides(&self) -> bool {
        self.c.iter().all(|x| !x.is_zero())
    }

    pub fn is_vertex(&self) -> bool {
        self.c.iter().filter(|x| x.is_zero()).count() == 2
    }

    /// Point with each coordinate squared.
    pub fn squared(&self) -> Self {
        Self::from_vec(self.c.clone().map(|x| &x * &x)).expect("nonzero")
    }

    /// Affine coordinates normalized to sum one; `None` at infinity.
    pub fn normalized_weights(&self) -> Option<[Rat; 3]> {
        let w = self.weight();
        if w.is_zero() {
            return None;
        }
        Some(self.c.clone().map(|x| Rat::new(x, w.clone())))
    }
}

impl ProjLine {
    pub fn infinity() -> Self {
        Self::new(1, 1, 1).unwrap()
    }
    pub fn side_bc() -> Self {
        Self::new(1, 0, 0).unwrap()
    }
    pub fn side_ca() -> Self {
        Self::new(0, 1, 0).unwrap()
    }
    pub fn side_ab() -> Self {
        Self::new(0, 0, 1).unwrap()
    }
    /// Sides opposite A, B, C in that order.
    pub fn sides() -> [Self; 3] {
        [Self::side_bc(), Self::side_ca(), Self::side_ab()]
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.lies_on(self)
    }

    pub fn is_infinity(&self) -> bool {
        *self == Self::infinity()
    }

    /// The point at infinity of this line.
    pub fn direction(&self) -> Result<ProjPoint> {
        meet(self, &Self::infinity()).map_err(|_| GeometryError::InfiniteArgument)
    }
}

pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    ProjLine::from_vec(linalg::cross(p.coords(), q.coords())).map_err(|_| GeometryError::EqualPoints)
}

pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    ProjPoint::from_vec(linalg::cross(l.coords(), m.coords())).map_err(|_| GeometryError::EqualLines)
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    linalg::det3(p.coords(), q.coords(), r.coords()).is_zero()
}

pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    linalg::det3(l.coords(), m.coords(), n.coords()).is_zero()
}

/// All points on one line (vacuous for fewer than three distinct points).
pub fn all_collinear(points: &[ProjPoint]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return true;
    };
    let l = join(first, second).expect("distinct");
    points.iter().all(|p| p.lies_on(&l))
}

/// Common point of three lines, verified exactly.
pub fn common_point(lines: &[ProjLine; 3], what: &'static str) -> Result<ProjPoint> {
    if !concurrent(&lines[0], &lines[1], &lines[2]) {
        return Err(GeometryError::NotConcurrent(what));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if let Ok(p) = meet(&lines[i], &lines[j]) {
            return Ok(p);
        }
    }
    Err(GeometryError::Inconsistent(format!("{what}: all three lines coincide")))
}

/// A point not on `l`, used as the reference for bracket determinants.
fn off_line_reference(l: &ProjLine) -> Vec3 {
    for i in 0..3 {
        if !l.coords()[i].is_zero() {
            let mut e = linalg::vec3(0, 0, 0);
            e[i] = BigInt::one();
            return e;
        }
    }
    unreachable!("lines are nonzero")
}

/// Cross-ratio `(a,b;c,d) = [a,c][b,d] / ([b,c][a,d])`, where `[p,q]` is the
/// bracket of two points on the common line. Equals
/// `(a−c)(b−d) / ((b−c)(a−d))` in an affine parameter.
pub fn cross_ratio(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<ExtRat> {
    let pts = [a, b, c, d];
    let Some(line) = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).find_map(|(i, j)| join(pts[i], pts[j]).ok())
    else {
        return Err(GeometryError::DegenerateQuadruple);
    };
    if !pts.iter().all(|p| p.lies_on(&line)) {
        return Err(GeometryError::NotCollinear);
    }
    let o = off_line_reference(&line);
    let br = |p: &ProjPoint, q: &ProjPoint| linalg::dot(&linalg::cross(p.coords(), q.coords()), &o);
    let num = br(a, c) * br(b, d);
    let den = br(b, c) * br(a, d);
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(GeometryError::DegenerateQuadruple),
        (false, true) => Ok(ExtRat::Infinity),
        _ => Ok(ExtRat::Finite(Rat::new(num, den))),
    }
}

/// The fourth harmonic point `d` with `(a,b;c,d) = −1`.
pub fn harmonic_conjugate(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> Result<ProjPoint> {
    if c == a || c == b {
        return Err(GeometryError::CoincidentArgument);
    }
    let ab = join(a, b).map_err(|_| GeometryError::CoincidentArgument)?;
    if !c.lies_on(&ab) {
        return Err(GeometryError::NotCollinear);
    }
    // c = αa + βb  ⇒  d = αa − βb
    let n = ab.coords();
    let alpha = linalg::dot(&linalg::cross(c.coords(), b.coords()), n);
    let beta = linalg::dot(&linalg::cross(a.coords(), c.coords()), n);
    ProjPoint::from_vec(linalg::lin_comb(&alpha, a.coords(), &-beta, b.coords()))
}

pub fn midpoint(p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    let (wp, wq) = (p.weight(), q.weight());
    if wp.is_zero() || wq.is_zero() {
        return Err(GeometryError::InfiniteArgument);
    }
    ProjPoint::from_vec(linalg::lin_comb(&wq, p.coords(), &wp, q.coords()))
}

/// Point reflection of `p` through the ordinary point `center`.
pub fn point_reflection(p: &ProjPoint, center: &ProjPoint) -> Result<ProjPoint> {
    let (wp, wc) = (p.weight(), center.weight());
    if wc.is_zero() {
        return Err(GeometryError::InfiniteArgument);
    }
    if wp.is_zero() {
        return Ok(p.clone());
    }
    // 2·center/wc − p/wp
    ProjPoint::from_vec(linalg::lin_comb(&(BigInt::from(2) * wp), center.coords(), &-wc, p.coords()))
}

/// Line through `p` parallel to `l`.
pub fn parallel_through(p: &ProjPoint, l: &ProjLine) -> Result<ProjLine> {
    join(p, &l.direction()?)
}

/// True when two lines share their point at infinity.
pub fn parallel(l: &ProjLine, m: &ProjLine) -> bool {
    concurrent(l, m, &ProjLine::infinity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_axis(x: i64) -> ProjPoint {
        // affine points on a line through A and B, parametrized by x
        ProjPoint::new(1 - x, x, 0).unwrap()
    }

    #[test]
    fn join_and_meet_examples() {
        let a = ProjPoint::new(1, 0, 0).unwrap();
        let b = ProjPoint::new(0, 1, 0).unwrap();
        let c = ProjPoint::new(0, 0, 1).unwrap();
        assert_eq!(join(&a, &b).unwrap(), ProjLine::new(0, 0, 1).unwrap());
        assert_eq!(join(&a, &c).unwrap(), ProjLine::new(0, 1, 0).unwrap());
        assert_eq!(join(&a, &ProjPoint::new(2, 0, 0).unwrap()), Err(GeometryError::EqualPoints));
        let l = ProjLine::new(0, 0, 1).unwrap();
        let m = ProjLine::new(0, 1, 0).unwrap();
        assert_eq!(meet(&l, &m).unwrap(), a);
        assert_eq!(
            meet(&ProjLine::new(1, 2, 3).unwrap(), &ProjLine::new(2, 4, 6).unwrap()),
            Err(GeometryError::EqualLines)
        );
    }

    #[test]
    fn parallels_meet_at_infinity() {
        // two lines through distinct points, both parallel to BC
        let l = parallel_through(&ProjPoint::new(1, 1, 1).unwrap(), &ProjLine::side_bc()).unwrap();
        let m = parallel_through(&ProjPoint::new(3, 1, 2).unwrap(), &ProjLine::side_bc()).unwrap();
        assert_ne!(l, m);
        assert!(meet(&l, &m).unwrap().is_infinite());
    }

    #[test]
    fn cross_ratio_examples() {
        let v = cross_ratio(&x_axis(0), &x_axis(2), &x_axis(1), &x_axis(3)).unwrap();
        assert_eq!(v, ExtRat::finite(-1, 3));
        let inf = ProjPoint::new(-1, 1, 0).unwrap();
        let v = cross_ratio(&x_axis(0), &x_axis(2), &x_axis(1), &inf).unwrap();
        assert_eq!(v, ExtRat::finite(-1, 1));
        let v = cross_ratio(&x_axis(0), &x_axis(2), &x_axis(1), &x_axis(1)).unwrap();
        assert_eq!(v, ExtRat::finite(1, 1));
        let v = cross_ratio(&x_axis(0), &x_axis(2), &x_axis(2), &x_axis(1)).unwrap();
        assert_eq!(v, ExtRat::Infinity);
        assert_eq!(
            cross_ratio(&x_axis(0), &x_axis(0), &x_axis(0), &x_axis(1)),
            Err(GeometryError::DegenerateQuadruple)
        );
        assert_eq!(
            cross_ratio(&x_axis(0), &x_axis(2), &x_axis(1), &ProjPoint::new(0, 0, 1).unwrap()),
            Err(GeometryError::NotCollinear)
        );
    }

    #[test]
    fn harmonic_examples() {
        let inf = ProjPoint::new(-1, 1, 0).unwrap();
        assert_eq!(harmonic_conjugate(&x_axis(0), &x_axis(4), &x_axis(2)).unwrap(), inf);
        assert_eq!(harmonic_conjugate(&x_axis(0), &x_axis(4), &inf).unwrap(), x_axis(2));
        let d = harmonic_conjugate(&x_axis(0), &x_axis(4), &x_axis(1)).unwrap();
        assert_eq!(harmonic_conjugate(&x_axis(0), &x_axis(4), &d).unwrap(), x_axis(1));
        assert_eq!(harmonic_conjugate(&x_axis(0), &x_axis(4), &x_axis(0)), Err(GeometryError::CoincidentArgument));
        assert_eq!(
            harmonic_conjugate(&x_axis(0), &x_axis(4), &ProjPoint::centroid()),
            Err(GeometryError::NotCollinear)
        );
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(midpoint(&x_axis(0), &x_axis(4)).unwrap(), x_axis(2));
        assert_eq!(midpoint(&x_axis(0), &x_axis(0)).unwrap(), x_axis(0));
        let inf = ProjPoint::new(-1, 1, 0).unwrap();
        assert_eq!(midpoint(&x_axis(0), &inf), Err(GeometryError::InfiniteArgument));
        // harmonic with the line's infinite point
        let m = midpoint(&x_axis(1), &x_axis(5)).unwrap();
        assert_eq!(harmonic_conjugate(&x_axis(1), &x_axis(5), &inf).unwrap(), m);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(ProjPoint::new(0, 0, 0), Err(GeometryError::ZeroVector));
    }
}
