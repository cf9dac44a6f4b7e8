//! The derived-object graph of a triangle `ABC` and a point `P`.
//!
//! `CevianConfig::derive` computes the affine skeleton eagerly (isotomic and
//! complement images, cevian triangles, the maps `T_P`, `T_P'`, `K`, `M`,
//! the three affine reflections, generalized orthocenter and circumcenter)
//! and memoizes the conics and fixed points on first use. Objects whose
//! defining hypotheses fail are reported as `GuardViolation` only when
//! requested.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::collineations::{affine_from_triangles, affine_reflection, fixed_point, reciprocal_conjugate, ProjMap};
use crate::conics::{
    self, circumconic_with_center, conic_from_conditions, conic_through_five, induced_involution, nine_point_conic,
    second_intersection, Conic, ConicCondition, LineInvolution,
};
use crate::error::{GeometryError, Result};
use crate::frame::{Cartesian, Frame};
use crate::projective::{self, common_point, join, meet, ProjLine, ProjPoint};

/// Exact predicates on `P` (and `H`) mirroring the hypotheses of the
/// individual statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Guard {
    OnSide,
    OnAnticomplementarySide,
    OnMedian,
    OnSteinerCircumellipse,
    HIsVertex,
    PEqualsG,
    PInfinite,
}

impl Guard {
    pub const ALL: [Guard; 7] = [
        Guard::OnSide,
        Guard::OnAnticomplementarySide,
        Guard::OnMedian,
        Guard::OnSteinerCircumellipse,
        Guard::HIsVertex,
        Guard::PEqualsG,
        Guard::PInfinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Guard::OnSide => "on_side",
            Guard::OnAnticomplementarySide => "on_anticomplementary_side",
            Guard::OnMedian => "on_median",
            Guard::OnSteinerCircumellipse => "on_steiner_circumellipse",
            Guard::HIsVertex => "H_is_vertex",
            Guard::PEqualsG => "P_equals_G",
            Guard::PInfinite => "P_infinite",
        }
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A required truth value of one guard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypothesis {
    pub guard: Guard,
    pub holds: bool,
}

impl Hypothesis {
    pub const OFF_SIDES: Self = Self::off(Guard::OnSide);
    pub const OFF_ANTICOMPLEMENTARY: Self = Self::off(Guard::OnAnticomplementarySide);
    pub const OFF_STEINER: Self = Self::off(Guard::OnSteinerCircumellipse);
    pub const OFF_MEDIAN: Self = Self::off(Guard::OnMedian);
    pub const ON_MEDIAN: Self = Self::on(Guard::OnMedian);
    pub const H_NOT_VERTEX: Self = Self::off(Guard::HIsVertex);
    pub const P_NOT_G: Self = Self::off(Guard::PEqualsG);
    pub const P_ORDINARY: Self = Self::off(Guard::PInfinite);

    pub const fn off(guard: Guard) -> Self {
        Self { guard, holds: false }
    }

    pub const fn on(guard: Guard) -> Self {
        Self { guard, holds: true }
    }

    /// Short name, e.g. `off_steiner`, `H_not_vertex`, `on_median`.
    pub fn name(&self) -> String {
        let base = match self.guard {
            Guard::OnSide => "sides",
            Guard::OnAnticomplementarySide => "anticomplementary",
            Guard::OnMedian => "median",
            Guard::OnSteinerCircumellipse => "steiner",
            Guard::HIsVertex => return if self.holds { "H_is_vertex".into() } else { "H_not_vertex".into() },
            Guard::PEqualsG => return if self.holds { "P_is_G".into() } else { "P_not_G".into() },
            Guard::PInfinite => return if self.holds { "P_infinite".into() } else { "P_ordinary".into() },
        };
        format!("{}_{base}", if self.holds { "on" } else { "off" })
    }

    pub fn parse(s: &str) -> Option<Self> {
        let all = Guard::ALL.iter().flat_map(|&g| [Self::on(g), Self::off(g)]);
        all.into_iter().find(|h| h.name() == s)
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Guard flags of one configuration; `true` means the degenerate situation
/// occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Guards {
    pub on_side: bool,
    pub on_anticomplementary_side: bool,
    pub on_median: bool,
    pub on_steiner_circumellipse: bool,
    pub h_is_vertex: bool,
    pub p_equals_g: bool,
    pub p_infinite: bool,
}

impl Guards {
    pub fn of_point(p: &ProjPoint) -> Self {
        let [x, y, z] = p.coords();
        Guards {
            on_side: !p.off_sides(),
            on_anticomplementary_side: ((y + z) * (z + x) * (x + y)).is_zero(),
            on_median: x == y || y == z || z == x,
            on_steiner_circumellipse: (y * z + z * x + x * y).is_zero(),
            h_is_vertex: false,
            p_equals_g: x == y && y == z,
            p_infinite: p.is_infinite(),
        }
    }

    pub fn get(&self, g: Guard) -> bool {
        match g {
            Guard::OnSide => self.on_side,
            Guard::OnAnticomplementarySide => self.on_anticomplementary_side,
            Guard::OnMedian => self.on_median,
            Guard::OnSteinerCircumellipse => self.on_steiner_circumellipse,
            Guard::HIsVertex => self.h_is_vertex,
            Guard::PEqualsG => self.p_equals_g,
            Guard::PInfinite => self.p_infinite,
        }
    }

    pub fn satisfies(&self, h: &Hypothesis) -> bool {
        self.get(h.guard) == h.holds
    }

    /// First hypothesis that fails, if any.
    pub fn first_violation(&self, hyps: &[Hypothesis]) -> Option<Hypothesis> {
        hyps.iter().copied().find(|h| !self.satisfies(h))
    }
}

/// Three ordered, non-collinear vertices (possibly at infinity).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangle {
    v: [ProjPoint; 3],
}

impl Triangle {
    pub fn new(v: [ProjPoint; 3]) -> Result<Self> {
        if projective::collinear(&v[0], &v[1], &v[2]) {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(Self { v })
    }

    pub fn reference() -> Self {
        Self { v: ProjPoint::vertices() }
    }

    /// Traces of `AP, BP, CP` on the opposite sides.
    pub fn cevian_of(p: &ProjPoint) -> Result<Self> {
        if !p.off_sides() {
            return Err(GeometryError::OnSideLine);
        }
        let [x, y, z] = p.coords().clone();
        let o = num_bigint::BigInt::zero;
        Self::new([
            ProjPoint::from_vec([o(), y.clone(), z.clone()])?,
            ProjPoint::from_vec([x.clone(), o(), z])?,
            ProjPoint::from_vec([x, y, o()])?,
        ])
    }

    /// Triangle having `ABC` as the cevian triangle of `q`.
    pub fn anticevian_of(q: &ProjPoint) -> Result<Self> {
        let [x, y, z] = q.coords().clone();
        Self::new([
            ProjPoint::from_vec([-x.clone(), y.clone(), z.clone()])?,
            ProjPoint::from_vec([x.clone(), -y.clone(), z.clone()])?,
            ProjPoint::from_vec([x, y, -z])?,
        ])
    }

    pub fn medial() -> Self {
        Self::cevian_of(&ProjPoint::centroid()).expect("centroid is interior")
    }

    pub fn vertices(&self) -> &[ProjPoint; 3] {
        &self.v
    }

    pub fn vertex(&self, i: usize) -> &ProjPoint {
        &self.v[i]
    }

    /// Side opposite vertex `i`.
    pub fn side(&self, i: usize) -> ProjLine {
        join(&self.v[(i + 1) % 3], &self.v[(i + 2) % 3]).expect("nondegenerate")
    }

    pub fn map(&self, t: &ProjMap) -> Self {
        Self { v: self.v.clone().map(|p| t.apply(&p)) }
    }
}

/// Eagerly computed part of the graph; requires P off the sides of `ABC`
/// and of its anticomplementary triangle.
#[derive(Debug, Clone)]
struct Skeleton {
    p_prime: ProjPoint,
    q: ProjPoint,
    q_prime: ProjPoint,
    cevian: Triangle,
    cevian_prime: Triangle,
    anticevian: Triangle,
    t_p: ProjMap,
    t_p_prime: ProjMap,
    m: ProjMap,
    /// Points at infinity of `QD`, `QE`, `QF`.
    directions: [ProjPoint; 3],
    /// `h_a`, `h_b`, `h_c`.
    reflections: [ProjMap; 3],
    h: ProjPoint,
    o: ProjPoint,
}

#[derive(Debug, Clone, Default)]
struct Memo {
    inconic: OnceLock<Result<Conic>>,
    circumconic: OnceLock<Result<Conic>>,
    cevian_conic: OnceLock<Result<Conic>>,
    psi: OnceLock<Result<LineInvolution>>,
    s: OnceLock<Result<ProjPoint>>,
    x: OnceLock<Result<ProjPoint>>,
    x_prime: OnceLock<Result<ProjPoint>>,
}

/// A validated `(A, B, C, P)` instance with its derived objects.
#[derive(Debug, Clone)]
pub struct CevianConfig {
    frame: Frame,
    p: ProjPoint,
    guards: Guards,
    skeleton: std::result::Result<Skeleton, GeometryError>,
    perturbed: bool,
    memo: Memo,
}

fn vertex(i: usize) -> ProjPoint {
    ProjPoint::vertices()[i].clone()
}

impl CevianConfig {
    /// Builds the configuration for barycentric `p` over the Cartesian frame.
    pub fn derive(frame: Frame, p: ProjPoint) -> Result<Self> {
        if p.is_vertex() {
            return Err(GeometryError::VertexInput);
        }
        let mut guards = Guards::of_point(&p);
        let skeleton = if guards.on_side {
            Err(GeometryError::GuardViolation(Guard::OnSide))
        } else if guards.on_anticomplementary_side {
            Err(GeometryError::GuardViolation(Guard::OnAnticomplementarySide))
        } else {
            Ok(Skeleton::build(&p)?)
        };
        if let Ok(s) = &skeleton {
            guards.h_is_vertex = s.h.is_vertex();
        }
        Ok(Self { frame, p, guards, skeleton, perturbed: false, memo: Memo::default() })
    }

    pub fn from_cartesian(a: Cartesian, b: Cartesian, c: Cartesian, p: &Cartesian) -> Result<Self> {
        let frame = Frame::new(a, b, c)?;
        let p = frame.to_bary(p);
        Self::derive(frame, p)
    }

    /// Negative-control copy: `H` moved by a Cartesian offset while every
    /// other object (including `O`) is kept.
    pub fn with_perturbed_h(&self, offset: &Cartesian) -> Result<Self> {
        let mut out = self.clone();
        let s = out.skeleton.as_mut().map_err(|e| e.clone())?;
        let h = self.frame.to_cartesian(&s.h).ok_or(GeometryError::InfinitePoint)?;
        s.h = self.frame.to_bary(&[&h[0] + &offset[0], &h[1] + &offset[1]]);
        out.guards.h_is_vertex = s.h.is_vertex();
        out.perturbed = true;
        out.memo = Memo::default();
        Ok(out)
    }

    pub fn is_perturbed(&self) -> bool {
        self.perturbed
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn p(&self) -> &ProjPoint {
        &self.p
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    /// Errors with the first failing hypothesis.
    pub fn require(&self, hyps: &[Hypothesis]) -> Result<()> {
        match self.guards.first_violation(hyps) {
            None => Ok(()),
            Some(h) => Err(GeometryError::GuardViolation(h.guard)),
        }
    }

    fn sk(&self) -> Result<&Skeleton> {
        self.skeleton.as_ref().map_err(Clone::clone)
    }

    pub fn p_prime(&self) -> Result<&ProjPoint> {
        Ok(&self.sk()?.p_prime)
    }
    pub fn q(&self) -> Result<&ProjPoint> {
        Ok(&self.sk()?.q)
    }
    pub fn q_prime(&self) -> Result<&ProjPoint> {
        Ok(&self.sk()?.q_prime)
    }
    pub fn h(&self) -> Result<&ProjPoint> {
        Ok(&self.sk()?.h)
    }
    pub fn o(&self) -> Result<&ProjPoint> {
        Ok(&self.sk()?.o)
    }
    pub fn cevian_triangle(&self) -> Result<&Triangle> {
        Ok(&self.sk()?.cevian)
    }
    pub fn cevian_triangle_prime(&self) -> Result<&Triangle> {
        Ok(&self.sk()?.cevian_prime)
    }
    pub fn anticevian_triangle(&self) -> Result<&Triangle> {
        Ok(&self.sk()?.anticevian)
    }
    pub fn t_p(&self) -> Result<&ProjMap> {
        Ok(&self.sk()?.t_p)
    }
    pub fn t_p_prime(&self) -> Result<&ProjMap> {
        Ok(&self.sk()?.t_p_prime)
    }
    /// `M = T_P ∘ K⁻¹ ∘ T_P'`.
    pub fn m_map(&self) -> Result<&ProjMap> {
        Ok(&self.sk()?.m)
    }
    pub fn reflections(&self) -> Result<&[ProjMap; 3]> {
        Ok(&self.sk()?.reflections)
    }
    /// Directions of `QD`, `QE`, `QF`.
    pub fn directions(&self) -> Result<&[ProjPoint; 3]> {
        Ok(&self.sk()?.directions)
    }

    /// Center of `M`.
    pub fn s(&self) -> Result<ProjPoint> {
        self.memo.s.get_or_init(|| fixed_point(self.m_map()?)).clone()
    }

    /// Center of `T_P ∘ T_P'`.
    pub fn x(&self) -> Result<ProjPoint> {
        self.memo
            .x
            .get_or_init(|| {
                let sk = self.sk()?;
                fixed_point(&sk.t_p.compose(&sk.t_p_prime))
            })
            .clone()
    }

    /// Center of `T_P' ∘ T_P`.
    pub fn x_prime(&self) -> Result<ProjPoint> {
        self.memo
            .x_prime
            .get_or_init(|| {
                let sk = self.sk()?;
                fixed_point(&sk.t_p_prime.compose(&sk.t_p))
            })
            .clone()
    }

    /// Inconic tangent to the sides at `D, E, F`; its center is `Q`.
    pub fn inconic(&self) -> Result<Conic> {
        self.memo
            .inconic
            .get_or_init(|| {
                let sk = self.sk()?;
                let [d, e, f] = sk.cevian.vertices();
                let mut conds = ConicCondition::tangent_at(d, &ProjLine::side_bc());
                conds.extend(ConicCondition::tangent_at(e, &ProjLine::side_ca()));
                conds.push(ConicCondition::through(f));
                let c = conic_from_conditions(&conds)?;
                if c.polar(f)? != ProjLine::side_ab() {
                    return Err(GeometryError::Inconsistent("inconic not tangent to AB at F".into()));
                }
                if c.center()? != sk.q {
                    return Err(GeometryError::Inconsistent("inconic center differs from Q".into()));
                }
                Ok(c)
            })
            .clone()
    }

    /// Circumconic with center `O`, built as `T_P'⁻¹` of the nine-point
    /// conic of `ABCP'` (this also covers `H` at a vertex, where the center
    /// alone does not pin the conic down).
    pub fn circumconic(&self) -> Result<Conic> {
        self.memo
            .circumconic
            .get_or_init(|| {
                self.require(&[Hypothesis::OFF_STEINER])?;
                let sk = self.sk()?;
                let [a, b, c] = ProjPoint::vertices();
                let n = nine_point_conic(&[a, b, c, sk.p_prime.clone()])?;
                let conic = n.transform(&sk.t_p_prime.inverse());
                if !ProjPoint::vertices().iter().all(|v| conic.contains(v)) {
                    return Err(GeometryError::Inconsistent("circumconic misses a vertex".into()));
                }
                if !self.perturbed && conic.center()? != sk.o {
                    return Err(GeometryError::Inconsistent("circumconic center differs from O".into()));
                }
                Ok(conic)
            })
            .clone()
    }

    /// The cevian conic `ABCPQ`.
    pub fn cevian_conic(&self) -> Result<Conic> {
        self.memo
            .cevian_conic
            .get_or_init(|| {
                self.require(&[Hypothesis::OFF_MEDIAN])?;
                let sk = self.sk()?;
                let [a, b, c] = ProjPoint::vertices();
                conic_through_five(&[a, b, c, self.p.clone(), sk.q.clone()])
            })
            .clone()
    }

    /// Conjugate-direction involution of the inconic on the line at infinity.
    pub fn psi(&self) -> Result<LineInvolution> {
        self.memo
            .psi
            .get_or_init(|| {
                self.require(&[Hypothesis::OFF_STEINER])?;
                induced_involution(&self.inconic()?, &ProjLine::infinity())
            })
            .clone()
    }

    pub fn circumcircle(&self) -> Conic {
        self.frame.circumcircle()
    }

    /// Generalized isogonal image: common point of `A·h_a(X)`, `B·h_b(X)`,
    /// `C·h_c(X)`.
    pub fn gamma_p(&self, x: &ProjPoint) -> Result<ProjPoint> {
        if x.is_vertex() {
            return Err(GeometryError::VertexInput);
        }
        let sk = self.sk()?;
        let lines: [ProjLine; 3] = std::array::from_fn(|i| {
            join(&vertex(i), &sk.reflections[i].apply(x)).expect("image of a non-vertex is not the vertex")
        });
        common_point(&lines, "generalized isogonal lines")
    }

    /// Generalized isogonal image via the reciprocal conjugation with pole `Q²`.
    pub fn gamma_p_pole(&self, x: &ProjPoint) -> Result<ProjPoint> {
        reciprocal_conjugate(&self.sk()?.q.squared(), x)
    }

    pub fn delta_p(&self, x: &ProjPoint) -> Result<ProjPoint> {
        delta_with(&self.sk()?.t_p, x)
    }

    /// The map `δ_H` built from the affine map taking `ABC` to the cevian
    /// triangle of `H`.
    pub fn delta_h(&self, x: &ProjPoint) -> Result<ProjPoint> {
        self.require(&[Hypothesis::H_NOT_VERTEX])?;
        delta_with(&self.t_h()?, x)
    }

    pub fn t_h(&self) -> Result<ProjMap> {
        let h = self.h()?;
        let cev = Triangle::cevian_of(h).map_err(|_| GeometryError::GuardViolation(Guard::HIsVertex))?;
        affine_from_triangles(&ProjPoint::vertices(), cev.vertices())
            .map_err(|_| GeometryError::DegenerateInput("H on an anticomplementary side"))
    }

    /// Feet on `BC, CA, AB` of the parallels through `r` to `QD, QE, QF`.
    pub fn pedal_triangle(&self, r: &ProjPoint) -> Result<[ProjPoint; 3]> {
        self.require(&[Hypothesis::OFF_STEINER])?;
        if r.is_infinite() {
            return Err(GeometryError::InfinitePoint);
        }
        let dirs = self.directions()?;
        let sides = ProjLine::sides();
        let feet: Vec<ProjPoint> = (0..3).map(|i| meet(&sides[i], &join(r, &dirs[i])?)).collect::<Result<_>>()?;
        Ok(feet.try_into().expect("three feet"))
    }

    /// `R₂ = γ_P(R₁)` together with both pedal triangles and their common
    /// conic.
    pub fn pedal_pair(&self, r1: &ProjPoint) -> Result<PedalPair> {
        self.require(&[Hypothesis::OFF_STEINER])?;
        let sk = self.sk()?;
        if *r1 == sk.q || sk.anticevian.vertices().contains(r1) {
            return Err(GeometryError::FixedPointInput);
        }
        if r1.is_infinite() {
            return Err(GeometryError::InfinitePoint);
        }
        let r2 = self.gamma_p(r1)?;
        if r2.is_infinite() {
            return Err(GeometryError::InfiniteConjugate);
        }
        let feet1 = self.pedal_triangle(r1)?;
        let feet2 = self.pedal_triangle(&r2)?;
        let conds: Vec<_> = feet1.iter().chain(&feet2).map(ConicCondition::through).collect();
        let conic = conic_from_conditions(&conds).map_err(|e| match e {
            GeometryError::Overconstrained => GeometryError::Inconsistent("pedal feet are not on one conic".into()),
            GeometryError::RankDeficient => GeometryError::DegenerateInput("pedal feet coincide"),
            e => e,
        })?;
        Ok(PedalPair { r1: r1.clone(), r2, feet1, feet2, conic })
    }

    pub fn pedal_conic(&self, r1: &ProjPoint) -> Result<Conic> {
        Ok(self.pedal_pair(r1)?.conic)
    }

    /// Line of the (collinear) feet of a point on the circumconic.
    pub fn simson_line(&self, r1: &ProjPoint) -> Result<ProjLine> {
        let c = self.circumconic()?;
        if r1.is_vertex() || !c.contains(r1) {
            return Err(GeometryError::NotOnCircumconic);
        }
        let feet = self.pedal_triangle(r1)?;
        if !projective::all_collinear(&feet) {
            return Err(GeometryError::Inconsistent("feet of a circumconic point are not collinear".into()));
        }
        let second = feet.iter().find(|f| **f != feet[0]).ok_or(GeometryError::DegenerateInput("feet coincide"))?;
        join(&feet[0], second)
    }

    /// TCC-perspector of `γ(Q)` from the closed formula.
    pub fn tcc_perspector(&self) -> Result<ProjPoint> {
        self.require(&[Hypothesis::P_ORDINARY, Hypothesis::OFF_STEINER, Hypothesis::H_NOT_VERTEX])?;
        let gq = self.frame.isogonal().apply(self.q()?)?;
        tcc_formula(&self.frame, &gq)
    }

    /// Same point from the definition: perspector of the tangential
    /// triangle and the circumcevian triangle of `γ(Q)` for the circumcircle.
    pub fn tcc_perspector_by_triangles(&self) -> Result<ProjPoint> {
        self.require(&[Hypothesis::P_ORDINARY, Hypothesis::OFF_STEINER, Hypothesis::H_NOT_VERTEX])?;
        let gq = self.frame.isogonal().apply(self.q()?)?;
        tcc_by_triangles(&self.frame, &gq)
    }

    /// Named points for reports; entries that cannot be built carry the error.
    pub fn named_points(&self) -> Vec<(&'static str, Result<ProjPoint>)> {
        let sk = self.sk();
        let part = |f: &dyn Fn(&Skeleton) -> ProjPoint| sk.clone().map(f);
        let tri = |f: &dyn Fn(&Skeleton) -> &Triangle, i: usize| part(&|s| f(s).vertex(i).clone());
        let [a, b, c] = ProjPoint::vertices();
        vec![
            ("A", Ok(a)),
            ("B", Ok(b)),
            ("C", Ok(c)),
            ("G", Ok(ProjPoint::centroid())),
            ("P", Ok(self.p.clone())),
            ("P'", part(&|s| s.p_prime.clone())),
            ("Q", part(&|s| s.q.clone())),
            ("Q'", part(&|s| s.q_prime.clone())),
            ("H", part(&|s| s.h.clone())),
            ("O", part(&|s| s.o.clone())),
            ("D", tri(&|s| &s.cevian, 0)),
            ("E", tri(&|s| &s.cevian, 1)),
            ("F", tri(&|s| &s.cevian, 2)),
            ("D3", tri(&|s| &s.cevian_prime, 0)),
            ("E3", tri(&|s| &s.cevian_prime, 1)),
            ("F3", tri(&|s| &s.cevian_prime, 2)),
            ("Qa", tri(&|s| &s.anticevian, 0)),
            ("Qb", tri(&|s| &s.anticevian, 1)),
            ("Qc", tri(&|s| &s.anticevian, 2)),
            ("S", self.s()),
            ("X", self.x()),
            ("X'", self.x_prime()),
            ("gamma_P(G)", self.gamma_p(&ProjPoint::centroid())),
        ]
    }

    pub fn named_conics(&self) -> Vec<(&'static str, Result<Conic>)> {
        vec![
            ("inconic", self.inconic()),
            ("circumconic_O", self.circumconic()),
            ("cevian_conic", self.cevian_conic()),
            ("circumcircle", Ok(self.circumcircle())),
        ]
    }
}

impl Skeleton {
    fn build(p: &ProjPoint) -> Result<Self> {
        let abc = ProjPoint::vertices();
        let k = ProjMap::complement();
        let p_prime = crate::collineations::QuadMap::isotomic().apply(p)?;
        let q = k.apply(&p_prime);
        let q_prime = k.apply(p);
        let cevian = Triangle::cevian_of(p)?;
        let cevian_prime = Triangle::cevian_of(&p_prime)?;
        let anticevian = Triangle::anticevian_of(&q)?;
        let t_p = affine_from_triangles(&abc, cevian.vertices())?;
        let t_p_prime = affine_from_triangles(&abc, cevian_prime.vertices())?;
        let m = t_p.compose(&k.inverse()).compose(&t_p_prime);

        let directions: Vec<ProjPoint> =
            cevian.vertices().iter().map(|d| join(&q, d)?.direction()).collect::<Result<_>>()?;
        let directions: [ProjPoint; 3] = directions.try_into().expect("three");

        // h_a about AQ in the direction of EF, and cyclically
        let reflections: Vec<ProjMap> = (0..3)
            .map(|i| {
                let axis = join(&abc[i], &q)?;
                let dir = cevian.side(i).direction()?;
                affine_reflection(&axis, &dir)
            })
            .collect::<Result<_>>()?;
        let reflections: [ProjMap; 3] = reflections.try_into().expect("three");

        let parallels: [ProjLine; 3] =
            std::array::from_fn(|i| join(&abc[i], &directions[i]).expect("vertex is ordinary"));
        let h = common_point(&parallels, "parallels through the vertices to QD, QE, QF")?;
        let o = k.apply(&h);
        let o_check = t_p_prime.inverse().apply(&k.apply(&q));
        if o != o_check {
            return Err(GeometryError::Inconsistent(format!("O = K(H) = {o} but T_P'^-1 K(Q) = {o_check}")));
        }
        Ok(Self {
            p_prime,
            q,
            q_prime,
            cevian,
            cevian_prime,
            anticevian,
            t_p,
            t_p_prime,
            m,
            directions,
            reflections,
            h,
            o,
        })
    }
}

/// Pedal triangles of `r1` and `r2 = γ_P(r1)` and their common conic.
#[derive(Debug, Clone)]
pub struct PedalPair {
    pub r1: ProjPoint,
    pub r2: ProjPoint,
    pub feet1: [ProjPoint; 3],
    pub feet2: [ProjPoint; 3],
    pub conic: Conic,
}

/// `δ` for the affine map `t` taking `ABC` to a cevian triangle: common
/// point of `A·t(AX ∩ BC)`, `B·t(BX ∩ CA)`, `C·t(CX ∩ AB)`.
pub fn delta_with(t: &ProjMap, x: &ProjPoint) -> Result<ProjPoint> {
    if x.is_vertex() {
        return Err(GeometryError::VertexInput);
    }
    let sides = ProjLine::sides();
    let lines: Vec<ProjLine> = (0..3)
        .map(|i| {
            let v = vertex(i);
            let trace = meet(&join(&v, x)?, &sides[i])?;
            join(&v, &t.apply(&trace))
        })
        .collect::<Result<_>>()?;
    common_point(&lines.try_into().expect("three"), "delta lines")
}

/// Second intersections of `AR, BR, CR` with a conic through `base`.
pub fn circumcevian_triangle(c: &Conic, base: &Triangle, r: &ProjPoint) -> Result<Triangle> {
    if base.vertices().contains(r) {
        return Err(GeometryError::VertexInput);
    }
    let v: Vec<ProjPoint> =
        base.vertices().iter().map(|a| second_intersection(c, &join(a, r)?, a)).collect::<Result<_>>()?;
    Triangle::new(v.try_into().expect("three"))
}

/// Triangle of the tangents at the vertices of `base`.
pub fn tangential_triangle(c: &Conic, base: &Triangle) -> Result<Triangle> {
    let tangents: Vec<ProjLine> = base.vertices().iter().map(|v| c.tangent_at(v)).collect::<Result<_>>()?;
    let v: Vec<ProjPoint> =
        (0..3).map(|i| meet(&tangents[(i + 1) % 3], &tangents[(i + 2) % 3])).collect::<Result<_>>()?;
    Triangle::new(v.try_into().expect("three"))
}

/// Common point of the joins of corresponding vertices.
pub fn perspector(t1: &Triangle, t2: &Triangle) -> Result<ProjPoint> {
    let lines: Vec<ProjLine> = (0..3)
        .map(|i| join(t1.vertex(i), t2.vertex(i)).map_err(|_| GeometryError::NotPerspective))
        .collect::<Result<_>>()?;
    common_point(&lines.try_into().expect("three"), "perspectivity").map_err(|e| match e {
        GeometryError::NotConcurrent(_) => GeometryError::NotPerspective,
        e => e,
    })
}

/// `T(Y) = γ ∘ K⁻¹ ∘ T_R⁻¹ ∘ K ∘ γ(Y)` with `R = K⁻¹(γ(Y))`: the
/// TCC-perspector of `Y`.
pub fn tcc_formula(frame: &Frame, y: &ProjPoint) -> Result<ProjPoint> {
    let gamma = frame.isogonal();
    let k = ProjMap::complement();
    let k_inv = k.inverse();
    let gy = gamma.apply(y)?;
    let r = k_inv.apply(&gy);
    let cev = Triangle::cevian_of(&r).map_err(|_| GeometryError::DegenerateInput("R on a side line"))?;
    let t_r = affine_from_triangles(&ProjPoint::vertices(), cev.vertices())
        .map_err(|_| GeometryError::DegenerateInput("R on an anticomplementary side"))?;
    let z = k_inv.apply(&t_r.inverse().apply(&k.apply(&gy)));
    gamma.apply(&z)
}

/// TCC-perspector of `y` from the two triangles on the circumcircle.
pub fn tcc_by_triangles(frame: &Frame, y: &ProjPoint) -> Result<ProjPoint> {
    let circle = frame.circumcircle();
    let abc = Triangle::reference();
    let tangential = tangential_triangle(&circle, &abc)?;
    let cc = circumcevian_triangle(&circle, &abc, y)?;
    perspector(&tangential, &cc)
}

/// Second intersection of the line `v·r` with `c` for a vertex `v` on it;
/// used to sample points of a circumconic.
pub fn point_on_conic_through(c: &Conic, v: &ProjPoint, r: &ProjPoint) -> Result<ProjPoint> {
    conics::second_intersection(c, &join(v, r)?, v)
}

/// Conic through `A, B, C` with center `o` (wrapper used by checks).
pub fn circumconic_centered(o: &ProjPoint) -> Result<Conic> {
    circumconic_with_center(&ProjPoint::vertices(), o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::cart_i;
    use crate::linalg::rat;

    fn right_345() -> Frame {
        Frame::new(cart_i(0, 0), cart_i(4, 0), cart_i(0, 3)).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    #[test]
    fn centroid_config_collapses() {
        let cfg = CevianConfig::derive(right_345(), ProjPoint::centroid()).unwrap();
        let g = ProjPoint::centroid();
        assert_eq!(cfg.q().unwrap(), &g);
        assert_eq!(cfg.o().unwrap(), &g);
        assert_eq!(cfg.h().unwrap(), &g);
        assert_eq!(cfg.cevian_triangle().unwrap(), &Triangle::medial());
        assert_eq!(cfg.circumconic().unwrap(), Conic::steiner_circumellipse());
        assert!(cfg.guards().p_equals_g && cfg.guards().on_median);
        assert_eq!(cfg.s().unwrap(), g);
    }

    #[test]
    fn gergonne_config_on_right_triangle() {
        let f = right_345();
        let p = f.to_bary(&[rat(8, 11), rat(9, 11)]);
        let cfg = CevianConfig::derive(f.clone(), p).unwrap();
        assert_eq!(f.to_cartesian(cfg.q().unwrap()).unwrap(), cart_i(1, 1));
        assert_eq!(cfg.h().unwrap(), &ProjPoint::vertex_a());
        assert!(cfg.guards().h_is_vertex);
        assert_eq!(cfg.inconic().unwrap(), f.circle(&cart_i(1, 1), &rat(1, 1)).unwrap());
        // classical: generalized isogonal map is the isogonal map
        assert_eq!(cfg.gamma_p(&ProjPoint::centroid()).unwrap(), pt(25, 9, 16));
        assert_eq!(cfg.tcc_perspector(), Err(GeometryError::GuardViolation(Guard::HIsVertex)));
    }

    #[test]
    fn guard_violation_on_side() {
        let cfg = CevianConfig::derive(right_345(), pt(0, 1, 2)).unwrap();
        assert!(cfg.guards().on_side);
        assert_eq!(cfg.cevian_triangle().unwrap_err(), GeometryError::GuardViolation(Guard::OnSide));
        assert_eq!(CevianConfig::derive(right_345(), pt(0, 1, 0)).unwrap_err(), GeometryError::VertexInput);
    }

    #[test]
    fn gamma_fixes_q_and_anticevian_vertices() {
        let cfg = CevianConfig::derive(right_345(), pt(2, 3, 7)).unwrap();
        let q = cfg.q().unwrap().clone();
        assert_eq!(cfg.gamma_p(&q).unwrap(), q);
        for v in cfg.anticevian_triangle().unwrap().vertices() {
            assert_eq!(&cfg.gamma_p(v).unwrap(), v);
        }
        // side points go to the opposite vertex
        assert_eq!(cfg.gamma_p(&pt(0, 2, 5)).unwrap(), ProjPoint::vertex_a());
        assert_eq!(cfg.gamma_p(&ProjPoint::vertex_b()), Err(GeometryError::VertexInput));
    }

    #[test]
    fn pole_formula_example() {
        // Q = (5:8:9) comes from P' = K⁻¹(Q) = (12:6:4) ~ (6:3:2), P = ι(P') = (1:2:3)
        let cfg = CevianConfig::derive(right_345(), pt(1, 2, 3)).unwrap();
        assert_eq!(cfg.q().unwrap(), &pt(5, 8, 9));
        assert_eq!(cfg.gamma_p_pole(&ProjPoint::centroid()).unwrap(), pt(25, 64, 81));
        assert_eq!(cfg.gamma_p(&ProjPoint::centroid()).unwrap(), pt(25, 64, 81));
    }

    #[test]
    fn delta_examples() {
        let cfg = CevianConfig::derive(right_345(), pt(2, 3, 7)).unwrap();
        let p = cfg.p().clone();
        assert_eq!(&cfg.delta_p(&p).unwrap(), cfg.q_prime().unwrap());
        let x = pt(3, -1, 4);
        assert_eq!(cfg.delta_p(&cfg.delta_p(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn pedal_triangle_of_q_is_contact_triangle() {
        let cfg = CevianConfig::derive(right_345(), pt(2, 3, 7)).unwrap();
        let q = cfg.q().unwrap().clone();
        assert_eq!(&cfg.pedal_triangle(&q).unwrap(), cfg.cevian_triangle().unwrap().vertices());
        assert_eq!(cfg.pedal_conic(&q), Err(GeometryError::FixedPointInput));
    }

    #[test]
    fn gergonne_pedal_feet_are_altitude_feet() {
        let f = right_345();
        let cfg = CevianConfig::derive(f.clone(), f.to_bary(&[rat(8, 11), rat(9, 11)])).unwrap();
        // feet from R = (1,2): perpendicular to BC (3x + 4y = 12), CA (x = 0), AB (y = 0)
        let r = f.to_bary(&cart_i(1, 2));
        let feet = cfg.pedal_triangle(&r).unwrap();
        let t = rat(12 - 3 - 8, 25); // (12 − 3·1 − 4·2)/25
        let d = [rat(1, 1) + rat(3, 1) * &t, rat(2, 1) + rat(4, 1) * &t];
        assert_eq!(f.to_cartesian(&feet[0]).unwrap(), d);
        assert_eq!(f.to_cartesian(&feet[1]).unwrap(), cart_i(0, 2));
        assert_eq!(f.to_cartesian(&feet[2]).unwrap(), cart_i(1, 0));
    }

    #[test]
    fn perspector_examples() {
        let abc = Triangle::reference();
        assert_eq!(perspector(&abc, &Triangle::medial()).unwrap(), ProjPoint::centroid());
        let circle = Conic::steiner_circumellipse();
        let r = pt(2, 3, 5);
        let cc = circumcevian_triangle(&circle, &abc, &r).unwrap();
        assert_eq!(perspector(&abc, &cc).unwrap(), r);
        let t = Triangle::new([pt(1, 2, 3), pt(5, -1, 2), pt(2, 2, 9)]).unwrap();
        assert_eq!(perspector(&abc, &t), Err(GeometryError::NotPerspective));
    }

    #[test]
    fn tangential_triangle_with_infinite_vertex() {
        // unit circle in the Cartesian-homogeneous reading of coordinates
        let circle = Conic::from_entries([1, 1, -1, 0, 0, 0].map(num_bigint::BigInt::from)).unwrap();
        let base = Triangle::new([pt(1, 0, 1), pt(0, 1, 1), pt(-1, 0, 1)]).unwrap();
        let t = tangential_triangle(&circle, &base).unwrap();
        // vertex opposite (1,0): tangents y = 1 and x = −1 meet at (−1, 1)
        assert_eq!(t.vertex(0), &pt(-1, 1, 1));
        assert_eq!(t.vertex(1), &pt(0, 1, 0));
        assert_eq!(t.vertex(2), &pt(1, 1, 1));
    }

    #[test]
    fn circumcevian_of_point_on_conic_is_degenerate() {
        let circle = Conic::steiner_circumellipse();
        let on = pt(-1, 2, 2);
        assert_eq!(circumcevian_triangle(&circle, &Triangle::reference(), &on), Err(GeometryError::DegenerateTriangle));
        assert_eq!(
            circumcevian_triangle(&circle, &Triangle::reference(), &ProjPoint::vertex_a()),
            Err(GeometryError::VertexInput)
        );
    }

    #[test]
    fn hypothesis_names_round_trip() {
        for g in Guard::ALL {
            for h in [Hypothesis::on(g), Hypothesis::off(g)] {
                assert_eq!(Hypothesis::parse(&h.name()), Some(h));
            }
        }
        assert_eq!(Hypothesis::OFF_STEINER.name(), "off_steiner");
        assert_eq!(Hypothesis::H_NOT_VERTEX.name(), "H_not_vertex");
    }
}
