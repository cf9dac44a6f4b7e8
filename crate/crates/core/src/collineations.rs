//! Collineations as 3×3 integer matrices up to scale, and the quadratic
//! reciprocal conjugations `(r:s:t) ↦ (l/r : m/s : n/t)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::linalg::{self, Mat3, Vec3};
use crate::projective::{ProjLine, ProjPoint};

/// An invertible collineation `p ↦ M·p`, stored in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMap {
    m: Mat3,
}

impl ProjMap {
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        if linalg::det(&m).is_zero() {
            return Err(GeometryError::SingularMatrix);
        }
        let flat = linalg::primitive(linalg::flatten(&m)).expect("nonsingular is nonzero");
        Ok(Self { m: linalg::unflatten(flat) })
    }

    pub fn from_rational(m: &[[BigRational; 3]; 3]) -> Result<Self> {
        let flat: [BigRational; 9] = std::array::from_fn(|k| m[k / 3][k % 3].clone());
        Self::from_matrix(linalg::unflatten(linalg::integerize(&flat)))
    }

    pub fn identity() -> Self {
        Self { m: linalg::identity() }
    }

    /// The complement map: each vertex to the midpoint of the opposite side.
    pub fn complement() -> Self {
        Self::from_matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]].map(|r| r.map(BigInt::from))).unwrap()
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::from_vec(linalg::mat_vec(&self.m, p.coords())).expect("invertible")
    }

    /// Image of a line: `M⁻ᵀ·l`.
    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        let adj_t = linalg::transpose(&linalg::adjugate(&self.m));
        ProjLine::from_vec(linalg::mat_vec(&adj_t, l.coords())).expect("invertible")
    }

    pub fn inverse(&self) -> Self {
        Self::from_matrix(linalg::adjugate(&self.m)).expect("invertible")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_matrix(linalg::mat_mul(&self.m, &other.m)).expect("product of invertibles")
    }

    /// Maps the line at infinity to itself (equal column sums in barycentrics).
    pub fn is_affine(&self) -> bool {
        self.apply_line(&ProjLine::infinity()).is_infinity()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    fn column_sum(&self) -> BigInt {
        (0..3).map(|i| self.m[i][0].clone()).sum()
    }
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ProjMap{:?}",
            self.m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        )
    }
}

/// Matrix whose columns are the points normalized to weight one.
fn weighted_columns(pts: &[ProjPoint; 3]) -> Result<[[BigRational; 3]; 3]> {
    let cols =
        pts.iter().map(|p| p.normalized_weights().ok_or(GeometryError::InfiniteInput)).collect::<Result<Vec<_>>>()?;
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone())))
}

fn rational_matrix(m: &Mat3) -> [[BigRational; 3]; 3] {
    m.clone().map(|r| r.map(BigRational::from_integer))
}

/// The unique affine map sending `src[i]` to `dst[i]`.
///
/// With weight-normalized columns `S` and `D`, the map is `D·S⁻¹`; both sides
/// preserve coordinate sums, so the product fixes the line at infinity.
pub fn affine_from_triangles(src: &[ProjPoint; 3], dst: &[ProjPoint; 3]) -> Result<ProjMap> {
    for t in [src, dst] {
        if crate::projective::collinear(&t[0], &t[1], &t[2]) {
            return Err(GeometryError::CollinearInput);
        }
    }
    let s = weighted_columns(src)?;
    let d = weighted_columns(dst)?;
    let s_int = ProjMap::from_rational(&s)?;
    let s_inv = rational_matrix(&s_int.inverse().m);
    let prod: [[BigRational; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &d[i][k] * &s_inv[k][j]).sum()));
    ProjMap::from_rational(&prod)
}

/// Columns `λᵢ·pᵢ` with `p₄ = Σ λᵢ·pᵢ`: the map sending the reference
/// simplex and unit point to the four given points.
fn frame_matrix(pts: &[ProjPoint; 4]) -> Result<Mat3> {
    let cols: [Vec3; 3] = std::array::from_fn(|i| pts[i].coords().clone());
    let base = linalg::from_columns(&cols);
    let d = linalg::det(&base);
    if d.is_zero() {
        return Err(GeometryError::DegeneratePosition);
    }
    // λ ∝ adj(base)·p₄ (common factor det drops out)
    let lambda = linalg::mat_vec(&linalg::adjugate(&base), pts[3].coords());
    if lambda.iter().any(Zero::is_zero) {
        return Err(GeometryError::DegeneratePosition);
    }
    let scaled: [Vec3; 3] = std::array::from_fn(|i| linalg::scale(&cols[i], &lambda[i]));
    Ok(linalg::from_columns(&scaled))
}

/// The unique collineation with `src[i] ↦ dst[i]` for four points in
/// general position.
pub fn map_from_four_points(src: &[ProjPoint; 4], dst: &[ProjPoint; 4]) -> Result<ProjMap> {
    let s = frame_matrix(src)?;
    let d = frame_matrix(dst)?;
    ProjMap::from_matrix(linalg::mat_mul(&d, &linalg::adjugate(&s)))
}

/// Affine reflection (harmonic homology) with the given axis whose center is
/// the point at infinity `direction`: `(a·d)·I − 2·d·aᵀ`.
pub fn affine_reflection(axis: &ProjLine, direction: &ProjPoint) -> Result<ProjMap> {
    if axis.is_infinity() || !direction.is_infinite() {
        return Err(GeometryError::NotADirection);
    }
    if direction.lies_on(axis) {
        return Err(GeometryError::DirectionOnAxis);
    }
    let a = axis.coords();
    let d = direction.coords();
    let ad = linalg::dot(a, d);
    let two = BigInt::from(2);
    let m: Mat3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let diag = if i == j { ad.clone() } else { BigInt::zero() };
            diag - &two * &d[i] * &a[j]
        })
    });
    ProjMap::from_matrix(m)
}

/// The isolated ordinary fixed point of an affine map (center of a
/// homothety, or of any affine map whose fixed ordinary set is one point).
///
/// For an affine `M` with column sum `s`, ordinary fixed points satisfy
/// `M·x = s·x`, so the fixed ordinary set is read off `ker(M − s·I)`.
pub fn fixed_point(m: &ProjMap) -> Result<ProjPoint> {
    if !m.is_affine() {
        return Err(GeometryError::NotAffine);
    }
    let s = m.column_sum();
    let rows: Vec<Vec<BigInt>> =
        (0..3).map(|i| (0..3).map(|j| if i == j { &m.m[i][j] - &s } else { m.m[i][j].clone() }).collect()).collect();
    let kernel = linalg::int_nullspace(&rows, 3);
    let ordinary = |v: &Vec<BigInt>| !v.iter().sum::<BigInt>().is_zero();
    match kernel.len() {
        1 if ordinary(&kernel[0]) => {
            ProjPoint::from_vec([kernel[0][0].clone(), kernel[0][1].clone(), kernel[0][2].clone()])
        }
        1 => Err(GeometryError::TranslationNoFixedPoint),
        2 if !kernel.iter().any(ordinary) => Err(GeometryError::TranslationNoFixedPoint),
        0 => Err(GeometryError::TranslationNoFixedPoint),
        _ => Err(GeometryError::NonIsolatedFixedPoints),
    }
}

/// Reciprocal conjugation with a given pole (`(1:1:1)` is the isotomic map).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadMap {
    pole: ProjPoint,
}

impl QuadMap {
    pub fn new(pole: ProjPoint) -> Result<Self> {
        if !pole.off_sides() {
            return Err(GeometryError::OnSideLine);
        }
        Ok(Self { pole })
    }

    pub fn isotomic() -> Self {
        Self { pole: ProjPoint::centroid() }
    }

    pub fn pole(&self) -> &ProjPoint {
        &self.pole
    }

    pub fn apply(&self, x: &ProjPoint) -> Result<ProjPoint> {
        reciprocal_conjugate(&self.pole, x)
    }
}

/// `(r:s:t) ↦ (l·st : m·tr : n·rs)` for pole `(l:m:n)`.
pub fn reciprocal_conjugate(pole: &ProjPoint, x: &ProjPoint) -> Result<ProjPoint> {
    if !pole.off_sides() || !x.off_sides() {
        return Err(GeometryError::OnSideLine);
    }
    let [l, m, n] = pole.coords();
    let [r, s, t] = x.coords();
    ProjPoint::from_vec([l * s * t, m * t * r, n * r * s])
}

/// Half-turn about an ordinary point.
pub fn half_turn(center: &ProjPoint) -> Result<ProjMap> {
    homothety(center, &BigRational::from_integer(-BigInt::one()))
}

/// Homothety `x ↦ center + k·(x − center)`.
pub fn homothety(center: &ProjPoint, ratio: &BigRational) -> Result<ProjMap> {
    let c = center.normalized_weights().ok_or(GeometryError::InfiniteInput)?;
    // k·I + (1−k)·c·𝟙ᵀ on weight-normalized coordinates
    let one_minus = BigRational::one() - ratio;
    let m: [[BigRational; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let diag = if i == j { ratio.clone() } else { BigRational::zero() };
            diag + &one_minus * &c[i]
        })
    });
    ProjMap::from_rational(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::projective::{join, midpoint};

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    #[test]
    fn complement_from_medial_triangle() {
        let abc = ProjPoint::vertices();
        let medial = [pt(0, 1, 1), pt(1, 0, 1), pt(1, 1, 0)];
        let k = affine_from_triangles(&abc, &medial).unwrap();
        assert_eq!(k, ProjMap::complement());
        assert!(k.is_affine());
        assert_eq!(affine_from_triangles(&abc, &abc).unwrap(), ProjMap::identity());
    }

    #[test]
    fn affine_from_triangles_rejects_bad_input() {
        let abc = ProjPoint::vertices();
        let flat = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)];
        assert_eq!(affine_from_triangles(&abc, &flat), Err(GeometryError::CollinearInput));
        let inf = [pt(1, -1, 0), pt(0, 1, 0), pt(0, 0, 1)];
        assert_eq!(affine_from_triangles(&abc, &inf), Err(GeometryError::InfiniteInput));
    }

    #[test]
    fn four_point_maps() {
        let simplex = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)];
        assert_eq!(map_from_four_points(&simplex, &simplex).unwrap(), ProjMap::identity());

        let known = ProjMap::from_matrix([[2, 1, 0], [0, 3, -1], [1, 1, 4]].map(|r| r.map(BigInt::from))).unwrap();
        let src = [pt(1, 2, 3), pt(-1, 0, 2), pt(4, 1, 1), pt(2, -3, 5)];
        let dst = src.clone().map(|p| known.apply(&p));
        let got = map_from_four_points(&src, &dst).unwrap();
        assert_eq!(got, known);
        let fifth = pt(7, -2, 3);
        assert_eq!(got.apply(&fifth), known.apply(&fifth));

        let bad = [pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(1, 2, 3)];
        assert_eq!(map_from_four_points(&bad, &simplex), Err(GeometryError::DegeneratePosition));
    }

    #[test]
    fn affine_reflection_is_involution_fixing_axis() {
        let axis = join(&pt(1, 0, 0), &pt(1, 2, 3)).unwrap();
        let dir = ProjLine::side_bc().direction().unwrap();
        let h = affine_reflection(&axis, &dir).unwrap();
        assert!(h.is_affine());
        assert!(h.compose(&h).is_identity());
        assert_eq!(h.apply(&pt(2, 4, 6)), pt(1, 2, 3));
        let x = pt(3, 1, 5);
        let hx = h.apply(&x);
        // XX' parallel to the direction, midpoint on the axis
        assert!(join(&x, &hx).unwrap().contains(&dir));
        assert!(axis.contains(&midpoint(&x, &hx).unwrap()));
        let on_axis_dir = axis.direction().unwrap();
        assert_eq!(affine_reflection(&axis, &on_axis_dir), Err(GeometryError::DirectionOnAxis));
        assert_eq!(affine_reflection(&axis, &pt(1, 1, 1)), Err(GeometryError::NotADirection));
    }

    #[test]
    fn fixed_points_of_affine_maps() {
        let center = pt(1, 2, 3);
        let h = homothety(&center, &rat(3, 1)).unwrap();
        assert_eq!(fixed_point(&h).unwrap(), center);
        let r = half_turn(&center).unwrap();
        assert_eq!(fixed_point(&r).unwrap(), center);
        assert!(r.compose(&r).is_identity());

        // translation by the vector from A to B
        let t = affine_from_triangles(&ProjPoint::vertices(), &[pt(0, 1, 0), pt(-1, 2, 0), pt(-1, 1, 1)]).unwrap();
        assert_eq!(fixed_point(&t), Err(GeometryError::TranslationNoFixedPoint));
        assert_eq!(fixed_point(&ProjMap::identity()), Err(GeometryError::NonIsolatedFixedPoints));
        let refl = affine_reflection(&ProjLine::side_bc(), &ProjLine::side_ca().direction().unwrap()).unwrap();
        assert_eq!(fixed_point(&refl), Err(GeometryError::NonIsolatedFixedPoints));
    }

    #[test]
    fn reciprocal_conjugate_examples() {
        assert_eq!(reciprocal_conjugate(&pt(1, 1, 1), &pt(1, 2, 3)).unwrap(), pt(6, 3, 2));
        assert_eq!(reciprocal_conjugate(&pt(25, 64, 81), &pt(1, 1, 1)).unwrap(), pt(25, 64, 81));
        let x = pt(2, -3, 7);
        let pole = pt(4, 9, 5);
        let once = reciprocal_conjugate(&pole, &x).unwrap();
        assert_eq!(reciprocal_conjugate(&pole, &once).unwrap(), x);
        assert_eq!(reciprocal_conjugate(&pole, &pt(0, 1, 2)), Err(GeometryError::OnSideLine));
        assert_eq!(QuadMap::isotomic().apply(&pt(1, 2, 3)).unwrap(), pt(6, 3, 2));
    }

    #[test]
    fn conjugation_fixes_point_and_its_anticevian_vertices() {
        let q = pt(5, 8, 9);
        let map = QuadMap::new(q.squared()).unwrap();
        for v in [q.clone(), pt(-5, 8, 9), pt(5, -8, 9), pt(5, 8, -9)] {
            assert_eq!(map.apply(&v).unwrap(), v);
        }
    }
}
