//! Conics as symmetric integer matrices up to scale.
//!
//! Every fitting routine is linear in the six matrix entries
//! `(c00, c11, c22, c01, c02, c12)`, so constructions never leave ℚ.
//! Tangency at a known point is encoded as "polar of the point is
//! proportional to the tangent line", which is two linear conditions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::collineations::ProjMap;
use crate::error::{GeometryError, Result};
use crate::linalg::{self, Mat3, Vec3};
use crate::projective::{self, join, meet, midpoint, ProjLine, ProjPoint};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    m: Mat3,
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.entries();
        write!(f, "Conic[{a} {b} {c} | {d} {e} {g}]")
    }
}

impl Conic {
    /// From the six entries `(c00, c11, c22, c01, c02, c12)`.
    pub fn from_entries(e: [BigInt; 6]) -> Result<Self> {
        let [a, b, c, d, f, g] = linalg::primitive(e).ok_or(GeometryError::ZeroVector)?;
        Ok(Self { m: [[a, d.clone(), f.clone()], [d, b, g.clone()], [f, g, c]] })
    }

    pub fn from_matrix(m: &Mat3) -> Result<Self> {
        for i in 0..3 {
            for j in 0..3 {
                if m[i][j] != m[j][i] {
                    return Err(GeometryError::InvalidArgument("conic matrix must be symmetric".into()));
                }
            }
        }
        Self::from_entries([
            m[0][0].clone(),
            m[1][1].clone(),
            m[2][2].clone(),
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][2].clone(),
        ])
    }

    pub fn entries(&self) -> [BigInt; 6] {
        let m = &self.m;
        [m[0][0].clone(), m[1][1].clone(), m[2][2].clone(), m[0][1].clone(), m[0][2].clone(), m[1][2].clone()]
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    /// Circumcircle of the reference triangle for squared side lengths
    /// `a², b², c²`: `a²yz + b²zx + c²xy = 0`.
    pub fn circumcircle(sq: &[BigRational; 3]) -> Self {
        let [a2, b2, c2] = linalg::integerize(sq);
        Self::from_entries([BigInt::zero(), BigInt::zero(), BigInt::zero(), c2, b2, a2]).expect("nonzero")
    }

    /// Steiner circumellipse `xy + yz + zx = 0`.
    pub fn steiner_circumellipse() -> Self {
        Self::from_entries([0, 0, 0, 1, 1, 1].map(BigInt::from)).unwrap()
    }

    pub fn is_degenerate(&self) -> bool {
        linalg::det(&self.m).is_zero()
    }

    fn quad(&self, p: &Vec3, q: &Vec3) -> BigInt {
        linalg::dot(p, &linalg::mat_vec(&self.m, q))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.quad(p.coords(), p.coords()).is_zero()
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(GeometryError::DegenerateConic)
        } else {
            Ok(())
        }
    }

    pub fn polar(&self, p: &ProjPoint) -> Result<ProjLine> {
        self.require_nondegenerate()?;
        ProjLine::from_vec(linalg::mat_vec(&self.m, p.coords()))
    }

    pub fn pole(&self, l: &ProjLine) -> Result<ProjPoint> {
        self.require_nondegenerate()?;
        ProjPoint::from_vec(linalg::mat_vec(&linalg::adjugate(&self.m), l.coords()))
    }

    /// Pole of the line at infinity.
    pub fn center(&self) -> Result<ProjPoint> {
        self.pole(&ProjLine::infinity())
    }

    pub fn tangent_at(&self, p: &ProjPoint) -> Result<ProjLine> {
        if !self.contains(p) {
            return Err(GeometryError::KnownNotIncident);
        }
        self.polar(p)
    }

    /// Image under a collineation: `M⁻ᵀ·C·M⁻¹`.
    pub fn transform(&self, t: &ProjMap) -> Self {
        let inv = linalg::adjugate(t.matrix());
        let m = linalg::mat_mul(&linalg::transpose(&inv), &linalg::mat_mul(&self.m, &inv));
        Self::from_matrix(&m).expect("congruence keeps symmetry and rank")
    }
}

/// One homogeneous linear condition on the six conic entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCondition(pub [BigInt; 6]);

impl ConicCondition {
    /// `pᵀCp = 0`
    pub fn through(p: &ProjPoint) -> Self {
        let [x, y, z] = p.coords();
        let two = BigInt::from(2);
        Self([x * x, y * y, z * z, &two * x * y, &two * x * z, &two * y * z])
    }

    /// Coefficients of `(C·p)_i` as linear forms in the entries.
    fn polar_rows(p: &ProjPoint) -> [[BigInt; 6]; 3] {
        let [x, y, z] = p.coords().clone();
        let o = BigInt::zero;
        [
            [x.clone(), o(), o(), y.clone(), z.clone(), o()],
            [o(), y.clone(), o(), x.clone(), o(), z.clone()],
            [o(), o(), z.clone(), o(), x, y],
        ]
    }

    /// `C·p ∝ l`, written as the three components of `(C·p) × l` (rank two).
    pub fn polar_is(p: &ProjPoint, l: &ProjLine) -> Vec<Self> {
        let r = Self::polar_rows(p);
        let l = l.coords();
        let comb = |i: usize, j: usize| -> [BigInt; 6] {
            // (C p)_i · l_j − (C p)_j · l_i
            std::array::from_fn(|k| &r[i][k] * &l[j] - &r[j][k] * &l[i])
        };
        vec![Self(comb(1, 2)), Self(comb(2, 0)), Self(comb(0, 1))]
    }

    /// Tangent to `l` at `p` (implies incidence when `p` is on `l`).
    pub fn tangent_at(p: &ProjPoint, l: &ProjLine) -> Vec<Self> {
        Self::polar_is(p, l)
    }

    /// Center at `o`: polar of `o` proportional to the line at infinity.
    pub fn center_at(o: &ProjPoint) -> Vec<Self> {
        Self::polar_is(o, &ProjLine::infinity())
    }
}

fn condition_rows(conds: &[ConicCondition]) -> Vec<Vec<BigRational>> {
    conds.iter().map(|c| c.0.iter().cloned().map(BigRational::from_integer).collect()).collect()
}

/// The conic cut out by conditions of rank exactly five.
pub fn conic_from_conditions(conds: &[ConicCondition]) -> Result<Conic> {
    let rows = condition_rows(conds);
    let kernel = linalg::nullspace(&rows, 6);
    match kernel.len() {
        0 => Err(GeometryError::Overconstrained),
        1 => {
            let v: [BigRational; 6] = kernel[0].clone().try_into().expect("six entries");
            Conic::from_entries(linalg::integerize(&v))
        }
        _ => Err(GeometryError::RankDeficient),
    }
}

pub fn conic_through_five(pts: &[ProjPoint; 5]) -> Result<Conic> {
    for skip in 0..5 {
        let four: Vec<ProjPoint> = (0..5).filter(|&i| i != skip).map(|i| pts[i].clone()).collect();
        if four.iter().collect::<std::collections::HashSet<_>>().len() == 4 && projective::all_collinear(&four) {
            return Err(GeometryError::FourCollinear);
        }
    }
    let conds: Vec<_> = pts.iter().map(ConicCondition::through).collect();
    conic_from_conditions(&conds).map_err(|e| match e {
        GeometryError::RankDeficient => GeometryError::UnderDetermined,
        e => e,
    })
}

/// True when the points all lie on a common conic (rank of the incidence
/// system below six).
pub fn on_common_conic(pts: &[ProjPoint]) -> bool {
    let conds: Vec<_> = pts.iter().map(ConicCondition::through).collect();
    linalg::rank(&condition_rows(&conds), 6) < 6
}

/// Conic through three points with prescribed center.
pub fn circumconic_with_center(vertices: &[ProjPoint; 3], center: &ProjPoint) -> Result<Conic> {
    let mut conds: Vec<_> = vertices.iter().map(ConicCondition::through).collect();
    conds.extend(ConicCondition::center_at(center));
    conic_from_conditions(&conds)
}

/// Second point where `l` meets `c`, given one known intersection.
///
/// Along `s·known + t·w` the restriction is `t·(2s·kCw + t·wCw)`, so the
/// residual root is `(wCw : −2·kCw)`; no square roots are taken.
pub fn second_intersection(c: &Conic, l: &ProjLine, known: &ProjPoint) -> Result<ProjPoint> {
    if !c.contains(known) || !l.contains(known) {
        return Err(GeometryError::KnownNotIncident);
    }
    let w = other_point_on(l, known);
    let k = known.coords();
    let kcw = c.quad(k, w.coords());
    let wcw = c.quad(w.coords(), w.coords());
    if kcw.is_zero() && wcw.is_zero() {
        return Err(GeometryError::DegenerateConic);
    }
    let two = BigInt::from(2);
    ProjPoint::from_vec(linalg::lin_comb(&wcw, k, &(-&two * kcw), w.coords()))
}

/// A point of `l` different from `p`, chosen deterministically.
fn other_point_on(l: &ProjLine, p: &ProjPoint) -> ProjPoint {
    line_chart(l).into_iter().find(|q| q != p).expect("a chart has two distinct points")
}

/// Deterministic two-point basis of a line: intersections with the
/// coordinate lines `x = 0`, `y = 0`, `z = 0`, first two distinct ones.
pub fn line_chart(l: &ProjLine) -> [ProjPoint; 2] {
    let mut pts: Vec<ProjPoint> = Vec::with_capacity(2);
    for side in ProjLine::sides() {
        if let Ok(p) = meet(l, &side) {
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if pts.len() == 2 {
            break;
        }
    }
    [pts[0].clone(), pts[1].clone()]
}

/// A projective involution on a line, as a 2×2 matrix acting on
/// coordinates with respect to `line_chart(base_line)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LineInvolution {
    base_line: ProjLine,
    basis: [ProjPoint; 2],
    action: [[BigInt; 2]; 2],
}

impl fmt::Debug for LineInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.action;
        write!(f, "LineInvolution({} : [[{} {}] [{} {}]])", self.base_line, a[0][0], a[0][1], a[1][0], a[1][1])
    }
}

/// Coordinates `(s, t)` of `v = s·b0 + t·b1`, for `v` on the span.
fn chart_coords(basis: &[ProjPoint; 2], v: &Vec3) -> [BigInt; 2] {
    let (b0, b1) = (basis[0].coords(), basis[1].coords());
    let n = linalg::cross(b0, b1);
    // v × b1 = s (b0 × b1), b0 × v = t (b0 × b1); common factor |n|²
    let s = linalg::dot(&linalg::cross(v, b1), &n);
    let t = linalg::dot(&linalg::cross(b0, v), &n);
    [s, t]
}

impl LineInvolution {
    /// Builds the involution from a linear map on the line's vectors.
    fn from_linear(base_line: ProjLine, f: impl Fn(&Vec3) -> Vec3) -> Result<Self> {
        let basis = line_chart(&base_line);
        let c0 = chart_coords(&basis, &f(basis[0].coords()));
        let c1 = chart_coords(&basis, &f(basis[1].coords()));
        let action = [[c0[0].clone(), c1[0].clone()], [c0[1].clone(), c1[1].clone()]];
        let flat =
            linalg::primitive([action[0][0].clone(), action[0][1].clone(), action[1][0].clone(), action[1][1].clone()])
                .ok_or(GeometryError::TangentLine)?;
        let [a, b, c, d] = flat;
        let action = [[a, b], [c, d]];
        let det = &action[0][0] * &action[1][1] - &action[0][1] * &action[1][0];
        if det.is_zero() {
            return Err(GeometryError::TangentLine);
        }
        let trace = &action[0][0] + &action[1][1];
        if !trace.is_zero() {
            return Err(GeometryError::Inconsistent("induced map is not an involution".into()));
        }
        Ok(Self { base_line, basis, action })
    }

    pub fn base_line(&self) -> &ProjLine {
        &self.base_line
    }

    pub fn action(&self) -> &[[BigInt; 2]; 2] {
        &self.action
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if !self.base_line.contains(p) {
            return Err(GeometryError::NotCollinear);
        }
        let [s, t] = chart_coords(&self.basis, p.coords());
        let a = &self.action;
        let s2 = &a[0][0] * &s + &a[0][1] * &t;
        let t2 = &a[1][0] * &s + &a[1][1] * &t;
        ProjPoint::from_vec(linalg::lin_comb(&s2, self.basis[0].coords(), &t2, self.basis[1].coords()))
    }
}

/// Conjugate-point involution on `l`: `p ↦ polar(p) ∩ l`.
pub fn induced_involution(c: &Conic, l: &ProjLine) -> Result<LineInvolution> {
    c.require_nondegenerate()?;
    let lc = l.coords().clone();
    let m = c.matrix().clone();
    LineInvolution::from_linear(l.clone(), move |v| linalg::cross(&linalg::mat_vec(&m, v), &lc))
}

pub fn involutions_equal(i1: &LineInvolution, i2: &LineInvolution) -> Result<bool> {
    if i1.base_line != i2.base_line {
        return Err(GeometryError::DifferentBaseLines);
    }
    Ok(i1.action == i2.action)
}

/// Conic through the six side midpoints and three diagonal points of a
/// quadrangle; fitted from five of them, the other four asserted.
pub fn nine_point_conic(quad: &[ProjPoint; 4]) -> Result<Conic> {
    for i in 0..4 {
        if quad[i].is_infinite() {
            return Err(GeometryError::InfiniteInput);
        }
        for j in i + 1..4 {
            for k in j + 1..4 {
                if quad[i] == quad[j] || projective::collinear(&quad[i], &quad[j], &quad[k]) {
                    return Err(GeometryError::DegenerateQuadrangle);
                }
            }
        }
    }
    let mut pts = Vec::with_capacity(9);
    for i in 0..4 {
        for j in i + 1..4 {
            pts.push(midpoint(&quad[i], &quad[j])?);
        }
    }
    for (a, b, c, d) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
        pts.push(meet(&join(&quad[a], &quad[b])?, &join(&quad[c], &quad[d])?)?);
    }
    let five: [ProjPoint; 5] = std::array::from_fn(|i| pts[i].clone());
    let conic = conic_through_five(&five)?;
    if let Some(p) = pts.iter().find(|p| !conic.contains(p)) {
        return Err(GeometryError::Inconsistent(format!("nine-point conic misses {p}")));
    }
    Ok(conic)
}

/// The unique conic through three non-collinear ordinary points whose
/// polarity induces `psi` on the line at infinity.
///
/// The center is the meet of the diameters `L·ψ(R)` and `M·ψ(S)`, with `L`,
/// `M` the midpoints of `ab`, `ac` and `R`, `S` their directions. When the
/// center sits on a side (then it is that side's midpoint) the conic is
/// fitted from the tangents `b·ψ(T)` and `c·ψ(T)` instead.
pub fn conic_with_involution_through(pts: &[ProjPoint; 3], psi: &LineInvolution) -> Result<Conic> {
    let [a, b, c] = pts;
    if !psi.base_line().is_infinity() {
        return Err(GeometryError::DegenerateInput("involution must live on the line at infinity"));
    }
    if projective::collinear(a, b, c) || pts.iter().any(ProjPoint::is_infinite) {
        return Err(GeometryError::DegenerateInput("points must be an ordinary triangle"));
    }
    let ab = join(a, b)?;
    let ac = join(a, c)?;
    let d1 = join(&midpoint(a, b)?, &psi.apply(&ab.direction()?)?)?;
    let d2 = join(&midpoint(a, c)?, &psi.apply(&ac.direction()?)?)?;
    let center = meet(&d1, &d2).map_err(|_| GeometryError::DegenerateInput("diameters coincide"))?;

    for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
        if projective::collinear(p, q, &center) {
            let t = join(p, q)?.direction()?;
            let tangent_dir = psi.apply(&t)?;
            let mut conds = vec![ConicCondition::through(r)];
            conds.extend(ConicCondition::tangent_at(p, &join(p, &tangent_dir)?));
            conds.extend(ConicCondition::tangent_at(q, &join(q, &tangent_dir)?));
            return conic_from_conditions(&conds);
        }
    }
    let a_star = projective::point_reflection(a, &center)?;
    let b_star = projective::point_reflection(b, &center)?;
    conic_through_five(&[a.clone(), b.clone(), c.clone(), a_star, b_star])
}
