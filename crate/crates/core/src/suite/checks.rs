//! The registry: one check per verified statement.

#![allow(non_snake_case)]

use num_traits::One;

use super::sampler::combine;
use super::{eq, holds, Outcome, Probe, TheoremCheck, Verdict, BASE};
use crate::collineations::{map_from_four_points, ProjMap, QuadMap};
use crate::conics::{
    conic_through_five, conic_with_involution_through, induced_involution, involutions_equal, on_common_conic,
    second_intersection, Conic,
};
use crate::constructions::{
    circumcevian_triangle, circumconic_centered, perspector, point_on_conic_through, tangential_triangle, CevianConfig,
    Hypothesis as Hy, PedalPair, Triangle,
};
use crate::error::GeometryError;
use crate::projective::{cross_ratio, join, meet, midpoint, point_reflection, ExtRat, ProjLine, ProjPoint, Rat};

const B: &[Hy] = &BASE;
const B_STEINER: &[Hy] = &[Hy::OFF_SIDES, Hy::OFF_ANTICOMPLEMENTARY, Hy::OFF_STEINER];
const B_H: &[Hy] = &[Hy::OFF_SIDES, Hy::OFF_ANTICOMPLEMENTARY, Hy::OFF_STEINER, Hy::H_NOT_VERTEX];
const B_ORD_STEINER: &[Hy] = &[Hy::OFF_SIDES, Hy::OFF_ANTICOMPLEMENTARY, Hy::P_ORDINARY, Hy::OFF_STEINER];
const B_ORD_MEDIAN: &[Hy] = &[Hy::OFF_SIDES, Hy::OFF_ANTICOMPLEMENTARY, Hy::P_ORDINARY, Hy::OFF_MEDIAN];
const B_TCC: &[Hy] = &[Hy::OFF_SIDES, Hy::OFF_ANTICOMPLEMENTARY, Hy::P_ORDINARY, Hy::OFF_STEINER, Hy::H_NOT_VERTEX];

macro_rules! checks {
    ($($id:ident, $hyps:expr, $stmt:expr;)*) => {
        static REGISTRY: &[TheoremCheck] = &[
            $(TheoremCheck { id: stringify!($id), statement: $stmt, hypotheses: $hyps, verify: $id },)*
        ];
    };
}

checks! {
    def_objects, B, "O = K(H) = T_P'^-1 K(Q); H on the three parallels; inconic and circumconic incidences";
    thm_concurrence, B, "A·h_a(R), B·h_b(R), C·h_c(R) are concurrent for R not a vertex";
    gamma_fixed_points, B, "γ_P fixes Q and Q_a, Q_b, Q_c, sends side points to opposite vertices, and is an involution";
    prop_PS, B, "γ_P(P) is the center S of M";
    prop_gpdp_a, B, "γ_P = δ_P ∘ ι ∘ δ_P";
    prop_gpdp_b, B, "the center X of T_P ∘ T_P' satisfies γ_P(X) = Q'";
    prop_gpdp_c, B, "δ_P(S) = ι(Q')";
    thm_pedal_conic, B_STEINER, "pedal triangles of R1 and γ_P(R1) are inscribed in one conic";
    cor_pedal_cross_ratio, B_STEINER, "(F1F2, GJ) = (D1D2, HK)";
    cor_simson_converse, B_STEINER, "collinear feet force γ_P(R1) to infinity; feet of points off the circumconic are not collinear";
    prop_Q2, B, "γ_P is the reciprocal conjugation with pole Q²";
    cor_Q2, B, "Q² = γ_P(G) is the isotomcomplement of H";
    thm_gamma_delta, B_H, "γ_P = δ_H when H is not a vertex";
    cor_gamma_G, B_H, "γ_P(G) = K(ι(H)) = δ_H(G)";
    prop_unique_conic, B_STEINER, "a central involution on l∞ and three points determine one conic";
    prop_pedal_involution, B_STEINER, "the pedal conic induces the inconic's involution on l∞ and is centered at the midpoint of R1R2";
    cor_h_commute, B_STEINER, "h_a, h_b, h_c commute with ψ on l∞";
    lem_line_image, B, "γ_P maps a line through no vertex into a circumconic";
    prop_gamma_linf, B_STEINER, "γ_P(l∞) is the circumconic centered at O";
    prop_parallel_AA, B_STEINER, "for R1 on the circumconic, AA', BB', CC' are parallel";
    thm_simson, B_STEINER, "feet of R1 on the circumconic are collinear, on a line parallel to AA'";
    prop_pedal_converse, B_STEINER, "the conic through D1E1F1 with involution ψ is the pedal conic and meets the sides again at the feet of γ_P(R1)";
    prop_gammaH, B, "γ_P(O) = H";
    prop_OQ, B_ORD_MEDIAN, "γ_P(SQ) = C_P, SQ is tangent to C_P at Q, and S is the pole of QQ'";
    thm_nine_points, B_ORD_MEDIAN, "X, T_P(P'), T_P(G), Q, S, O, M(Q), T_P'^-1(G), T_P'^-1(Q) are collinear, and X = PQ'·SQ";
    thm_eight_poles, B_ORD_MEDIAN, "pole, polar and tangent identities for C_P and its images";
    prop_circumcevian, B_ORD_STEINER, "circumcevian triangle of Q: midpoint image, perspectivity from O, antipodes, parallel sides";
    thm_O_perspector, B_ORD_STEINER, "O is the perspector of the tangential triangle and the circumcevian triangle of Q";
    lem_collineation, B, "γ ∘ γ_P is a collineation fixing A, B, C";
    thm_tcc, B_TCC, "γ(H) is the TCC-perspector of γ(Q)";
    tcc_formula, B_TCC, "γ K^-1 T_R^-1 K γ(Q) with R = K^-1 γ(Q) equals the TCC-perspector";
    thm_persG, B_ORD_STEINER, "ABC and the tangential triangle of the circumconic are perspective from γ_P(G)";
    appendix_kmid, B, "K(R) is the midpoint of T_P(R) and T_P'(R)";
    appendix_commute, B, "T_P K^-1 and T_P' K^-1 commute; M and S are the same for P and P'";
}

pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY
}

fn vertex(i: usize) -> ProjPoint {
    ProjPoint::vertices()[i].clone()
}

fn skip(reason: &str) -> Verdict {
    Verdict::Skip(reason.into())
}

/// Center of a map, or a skip when the map is a translation.
fn center_or_skip(r: crate::error::Result<ProjPoint>, what: &str) -> Result<ProjPoint, Verdict> {
    match r {
        Err(GeometryError::TranslationNoFixedPoint) => Err(skip(&format!("{what} is a translation"))),
        r => Ok(r?),
    }
}

/// Random ordinary point of `c` other than a vertex, via second
/// intersections of lines through `A`.
fn point_on(probe: &mut Probe, c: &Conic) -> Result<ProjPoint, Verdict> {
    for _ in 0..64 {
        let r = probe.point();
        let x = point_on_conic_through(c, &vertex(0), &r)?;
        if !x.is_infinite() && !x.is_vertex() {
            return Ok(x);
        }
    }
    Err(skip("no ordinary point found on the circumconic"))
}

/// Random point of `l` off the side lines.
fn point_on_line(probe: &mut Probe, l: &ProjLine) -> Result<ProjPoint, Verdict> {
    let [u, v] = crate::conics::line_chart(l);
    for _ in 0..64 {
        let d = probe.draw();
        let (s, t) = (d.nonzero(), d.nonzero());
        let x = combine(s, &u, t, &v)?;
        if x.off_sides() {
            return Ok(x);
        }
    }
    Err(skip("no sample point found on the line"))
}

fn pedal_sample(cfg: &CevianConfig, probe: &mut Probe) -> Result<PedalPair, Verdict> {
    for _ in 0..32 {
        let r = probe.point();
        match cfg.pedal_pair(&r) {
            Ok(p) => return Ok(p),
            Err(
                GeometryError::InfiniteConjugate
                | GeometryError::FixedPointInput
                | GeometryError::DegenerateInput("pedal feet coincide"),
            ) => continue,
            Err(e) => {
                probe.record("R1", &r);
                return Err(e.into());
            }
        }
    }
    Err(skip("no admissible R1 sampled"))
}

fn finite(x: ExtRat, what: &str) -> Result<Rat, Verdict> {
    match x {
        ExtRat::Finite(v) => Ok(v),
        ExtRat::Infinity => Err(Verdict::Fail(format!("{what} is infinite"))),
    }
}

fn def_objects(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let (q, h, o) = (cfg.q()?.clone(), cfg.h()?.clone(), cfg.o()?.clone());
    let k = ProjMap::complement();
    let tpp_inv = cfg.t_p_prime()?.inverse();
    eq(p, "O", &o, "K(H)", &k.apply(&h))?;
    eq(p, "O", &o, "T_P'^-1(K(Q))", &tpp_inv.apply(&k.apply(&q)))?;
    for (i, d) in cfg.directions()?.iter().enumerate() {
        holds(h.lies_on(&join(&vertex(i), d)?), format!("H lies on the parallel through vertex {i}"))?;
    }
    let anti = cfg.anticevian_triangle()?;
    for i in 0..3 {
        eq(p, "anticevian vertex", anti.vertex(i), "T_P'^-1(vertex)", &tpp_inv.apply(&vertex(i)))?;
    }
    let inc = cfg.inconic()?;
    let cev = cfg.cevian_triangle()?;
    for i in 0..3 {
        eq(p, "tangent to inconic at cevian vertex", &inc.polar(cev.vertex(i))?, "side", &ProjLine::sides()[i])?;
    }
    eq(p, "center of inconic", &inc.center()?, "Q", &q)?;
    holds(cfg.m_map()?.is_affine(), "M is affine")?;
    if !cfg.guards().on_steiner_circumellipse {
        let dirs = cfg.directions()?;
        holds(dirs[0] != dirs[1] && dirs[1] != dirs[2] && dirs[0] != dirs[2], "QD, QE, QF have distinct directions")?;
        eq(p, "pedal triangle of Q", &cfg.pedal_triangle(&q)?, "DEF", cev.vertices())?;
        let c = cfg.circumconic()?;
        eq(p, "center of circumconic", &c.center()?, "O", &o)?;
        for i in 0..3 {
            holds(c.contains(&vertex(i)), "circumconic passes through the vertices")?;
            let m = midpoint(anti.vertex((i + 1) % 3), anti.vertex((i + 2) % 3))?;
            holds(c.contains(&m), "circumconic passes through the anticevian side midpoints")?;
        }
        if !cfg.guards().h_is_vertex {
            eq(p, "circumconic", &c, "conic through ABC centered at O", &circumconic_centered(&o)?)?;
        }
    }
    Ok(())
}

fn thm_concurrence(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let q = cfg.q()?.clone();
    for _ in 0..5 {
        let x = p.point();
        p.record("R", &x);
        cfg.gamma_p(&x)?;
        // Ceva in cross-ratio form: A(BC, RQ)·B(CA, RQ)·C(AB, RQ) = 1
        let mut prod = Rat::one();
        for i in 0..3 {
            let side = &ProjLine::sides()[i];
            let r1 = meet(&join(&vertex(i), &x)?, side)?;
            let d2 = meet(&join(&vertex(i), &q)?, side)?;
            let cr = cross_ratio(&vertex((i + 1) % 3), &vertex((i + 2) % 3), &r1, &d2)?;
            prod *= finite(cr, "pencil cross-ratio")?;
        }
        eq(p, "A(BC,RQ)·B(CA,RQ)·C(AB,RQ)", &prod, "1", &Rat::one())?;
    }
    Ok(())
}

fn gamma_fixed_points(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let q = cfg.q()?.clone();
    eq(p, "γ_P(Q)", &cfg.gamma_p(&q)?, "Q", &q)?;
    for v in cfg.anticevian_triangle()?.vertices() {
        eq(p, "γ_P(Q_a)", &cfg.gamma_p(v)?, "Q_a", v)?;
    }
    let d = p.draw();
    let side_pt = ProjPoint::new(0, d.nonzero(), d.nonzero())?;
    eq(p, "γ_P(point of BC)", &cfg.gamma_p(&side_pt)?, "A", &vertex(0))?;
    for _ in 0..5 {
        let x = p.point();
        let y = cfg.gamma_p(&x)?;
        eq(p, "γ_P(γ_P(X))", &cfg.gamma_p(&y)?, "X", &x)?;
    }
    Ok(())
}

fn prop_PS(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let s = center_or_skip(cfg.s(), "M")?;
    eq(p, "γ_P(P)", &cfg.gamma_p(cfg.p())?, "S", &s)?;
    if cfg.guards().p_equals_g {
        eq(p, "S", &s, "G", &ProjPoint::centroid())?;
    }
    Ok(())
}

fn prop_gpdp_a(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let iota = QuadMap::isotomic();
    for _ in 0..10 {
        let x = p.point();
        p.record("X", &x);
        let rhs = cfg.delta_p(&iota.apply(&cfg.delta_p(&x)?)?)?;
        eq(p, "γ_P(X)", &cfg.gamma_p(&x)?, "δ_P(ι(δ_P(X)))", &rhs)?;
    }
    Ok(())
}

fn prop_gpdp_b(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let x = center_or_skip(cfg.x(), "T_P ∘ T_P'")?;
    eq(p, "γ_P(X)", &cfg.gamma_p(&x)?, "Q'", cfg.q_prime()?)
}

fn prop_gpdp_c(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let s = center_or_skip(cfg.s(), "M")?;
    let iq = QuadMap::isotomic().apply(cfg.q_prime()?)?;
    eq(p, "δ_P(S)", &cfg.delta_p(&s)?, "ι(Q')", &iq)
}

fn thm_pedal_conic(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    for _ in 0..3 {
        let pair = pedal_sample(cfg, p)?;
        p.record("R1", &pair.r1);
        for f in pair.feet1.iter().chain(&pair.feet2) {
            holds(pair.conic.contains(f), "pedal conic contains all six feet")?;
        }
        holds(!pair.conic.is_degenerate(), "pedal conic is nondegenerate")?;
    }
    Ok(())
}

fn cor_pedal_cross_ratio(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    for _ in 0..3 {
        let pair = pedal_sample(cfg, p)?;
        p.record("R1", &pair.r1);
        let (d1, f1, d2, f2) = (&pair.feet1[0], &pair.feet1[2], &pair.feet2[0], &pair.feet2[2]);
        let (ab, bc) = (ProjLine::side_ab(), ProjLine::side_bc());
        let g = meet(&ab, &join(&pair.r1, d1)?)?;
        let h = meet(&bc, &join(&pair.r1, f1)?)?;
        let j = meet(&ab, &join(&pair.r2, d2)?)?;
        let k = meet(&bc, &join(&pair.r2, f2)?)?;
        eq(p, "(F1F2, GJ)", &cross_ratio(f1, f2, &g, &j)?, "(D1D2, HK)", &cross_ratio(d1, d2, &h, &k)?)?;
    }
    Ok(())
}

fn cor_simson_converse(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    for _ in 0..3 {
        let r = point_on(p, &c)?;
        p.record("R1", &r);
        holds(crate::projective::all_collinear(&cfg.pedal_triangle(&r)?), "feet of a circumconic point are collinear")?;
        holds(cfg.gamma_p(&r)?.is_infinite(), "γ_P(R1) is infinite for R1 on the circumconic")?;
    }
    for _ in 0..20 {
        let r = p.point();
        if c.contains(&r) {
            continue;
        }
        p.record("R1", &r);
        holds(
            !crate::projective::all_collinear(&cfg.pedal_triangle(&r)?),
            "feet of a point off the circumconic are not collinear",
        )?;
        holds(!cfg.gamma_p(&r)?.is_infinite(), "γ_P(R1) is ordinary off the circumconic")?;
    }
    Ok(())
}

fn prop_Q2(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    for _ in 0..20 {
        let x = p.point();
        p.record("X", &x);
        eq(p, "γ_P(X)", &cfg.gamma_p(&x)?, "reciprocal conjugate of X with pole Q²", &cfg.gamma_p_pole(&x)?)?;
    }
    Ok(())
}

/// `(f(g+h) : g(h+f) : h(f+g))` for `H = (f : g : h)`.
fn isotomcomplement(h: &ProjPoint) -> crate::error::Result<ProjPoint> {
    let [f, g, k] = h.coords();
    ProjPoint::from_vec([f * (g + k), g * (k + f), k * (f + g)])
}

fn cor_Q2(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let q2 = cfg.q()?.squared();
    let g = cfg.gamma_p(&ProjPoint::centroid())?;
    eq(p, "γ_P(G)", &g, "Q²", &q2)?;
    if !cfg.guards().h_is_vertex {
        eq(p, "Q²", &q2, "isotomcomplement of H", &isotomcomplement(cfg.h()?)?)?;
    }
    Ok(())
}

fn thm_gamma_delta(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    for _ in 0..10 {
        let x = p.point();
        p.record("X", &x);
        eq(p, "γ_P(X)", &cfg.gamma_p(&x)?, "δ_H(X)", &cfg.delta_h(&x)?)?;
    }
    Ok(())
}

fn cor_gamma_G(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let g = ProjPoint::centroid();
    let kih = ProjMap::complement().apply(&QuadMap::isotomic().apply(cfg.h()?)?);
    eq(p, "γ_P(G)", &cfg.gamma_p(&g)?, "K(ι(H))", &kih)?;
    eq(p, "δ_H(G)", &cfg.delta_h(&g)?, "K(ι(H))", &kih)
}

fn prop_unique_conic(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let psi = cfg.psi()?;
    let c = cfg.circumconic()?;
    eq(
        p,
        "conic through ABC inducing ψ",
        &conic_with_involution_through(&ProjPoint::vertices(), &psi)?,
        "circumconic",
        &c,
    )?;
    let pts = loop {
        let t = [p.point(), p.point(), p.point()];
        if !crate::projective::collinear(&t[0], &t[1], &t[2]) {
            break t;
        }
    };
    p.record("triangle", &pts);
    let fit = conic_with_involution_through(&pts, &psi)?;
    holds(pts.iter().all(|x| fit.contains(x)), "fitted conic passes through the three points")?;
    holds(involutions_equal(&induced_involution(&fit, &ProjLine::infinity())?, &psi)?, "fitted conic induces ψ")
}

fn prop_pedal_involution(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let psi = cfg.psi()?;
    for _ in 0..3 {
        let pair = pedal_sample(cfg, p)?;
        p.record("R1", &pair.r1);
        eq(p, "center of pedal conic", &pair.conic.center()?, "midpoint(R1, R2)", &midpoint(&pair.r1, &pair.r2)?)?;
        let induced = induced_involution(&pair.conic, &ProjLine::infinity())?;
        holds(involutions_equal(&induced, &psi)?, "pedal conic induces ψ on l∞")?;
    }
    Ok(())
}

fn cor_h_commute(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let psi = cfg.psi()?;
    for h in cfg.reflections()? {
        for _ in 0..3 {
            let d = p.infinite_point();
            let lhs = h.apply(&psi.apply(&h.apply(&d))?);
            eq(p, "h ψ h(d)", &lhs, "ψ(d)", &psi.apply(&d)?)?;
        }
    }
    Ok(())
}

fn lem_line_image(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let l = p.line_avoiding_vertices();
    p.record("l", &l);
    let mut pts = ProjPoint::vertices().to_vec();
    while pts.len() < 9 {
        let x = point_on_line(p, &l)?;
        let y = cfg.gamma_p(&x)?;
        if !pts.contains(&y) {
            pts.push(y);
        }
    }
    holds(on_common_conic(&pts), "images of six points of l lie on one conic through A, B, C")
}

fn prop_gamma_linf(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let mut imgs: Vec<ProjPoint> = Vec::new();
    while imgs.len() < 6 {
        let y = cfg.gamma_p(&p.infinite_point())?;
        if !imgs.contains(&y) {
            holds(c.contains(&y), "γ_P of an infinite point lies on the circumconic")?;
            imgs.push(y);
        }
    }
    let five: [ProjPoint; 5] = std::array::from_fn(|i| imgs[i].clone());
    eq(p, "conic fitted to γ_P(l∞)", &conic_through_five(&five)?, "circumconic", &c)?;
    if !cfg.guards().h_is_vertex {
        eq(p, "circumconic", &c, "conic through ABC centered at O", &circumconic_centered(cfg.o()?)?)?;
    }
    Ok(())
}

/// `A'` on the circumconic: second intersection of `R1·foot` other than `R1`.
fn second_points(cfg: &CevianConfig, c: &Conic, r: &ProjPoint) -> Result<Option<[ProjPoint; 3]>, Verdict> {
    let feet = cfg.pedal_triangle(r)?;
    let mut out = Vec::new();
    for (i, f) in feet.iter().enumerate() {
        let a = second_intersection(c, &join(r, f)?, r)?;
        if a == vertex(i) {
            return Ok(None);
        }
        out.push(a);
    }
    Ok(Some(out.try_into().expect("three")))
}

fn prop_parallel_AA(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let mut done = 0;
    for _ in 0..16 {
        let r = point_on(p, &c)?;
        let Some(primes) = second_points(cfg, &c, &r)? else { continue };
        p.record("R1", &r);
        let dirs: Vec<ProjPoint> =
            (0..3).map(|i| join(&vertex(i), &primes[i])?.direction()).collect::<crate::error::Result<_>>()?;
        holds(dirs[0] == dirs[1] && dirs[1] == dirs[2], "AA', BB', CC' are parallel")?;
        done += 1;
        if done == 3 {
            return Ok(());
        }
    }
    Err(skip("A' coincided with a vertex for every sample"))
}

fn thm_simson(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let mut done = 0;
    for _ in 0..16 {
        let r = point_on(p, &c)?;
        p.record("R1", &r);
        let line = cfg.simson_line(&r)?;
        let Some(primes) = second_points(cfg, &c, &r)? else { continue };
        eq(
            p,
            "direction of the Simson line",
            &line.direction()?,
            "direction of AA'",
            &join(&vertex(0), &primes[0])?.direction()?,
        )?;
        done += 1;
        if done == 3 {
            return Ok(());
        }
    }
    Err(skip("A' coincided with a vertex for every sample"))
}

fn prop_pedal_converse(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let psi = cfg.psi()?;
    for _ in 0..3 {
        let pair = pedal_sample(cfg, p)?;
        p.record("R1", &pair.r1);
        let fit = conic_with_involution_through(&pair.feet1, &psi)?;
        eq(p, "conic through D1E1F1 inducing ψ", &fit, "pedal conic", &pair.conic)?;
        for i in 0..3 {
            let other = second_intersection(&fit, &ProjLine::sides()[i], &pair.feet1[i])?;
            eq(p, "second intersection with side", &other, "foot of γ_P(R1)", &pair.feet2[i])?;
        }
    }
    Ok(())
}

fn prop_gammaH(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let o = cfg.o()?.clone();
    p.record("O", &o);
    eq(p, "γ_P(O)", &cfg.gamma_p(&o)?, "H", cfg.h()?)
}

fn prop_OQ(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let s = center_or_skip(cfg.s(), "M")?;
    let (q, qp) = (cfg.q()?.clone(), cfg.q_prime()?.clone());
    holds(s != q, "S ≠ Q")?;
    let sq = join(&s, &q)?;
    let cp = cfg.cevian_conic()?;
    eq(p, "tangent to C_P at Q", &cp.tangent_at(&q)?, "SQ", &sq)?;
    if !cfg.guards().on_steiner_circumellipse {
        holds(cfg.o()?.lies_on(&sq), "O lies on SQ")?;
    }
    eq(p, "pole of QQ' w.r.t. C_P", &cp.pole(&join(&q, &qp)?)?, "S", &s)?;
    for _ in 0..6 {
        let x = point_on_line(p, &sq)?;
        p.record("X on SQ", &x);
        holds(cp.contains(&cfg.gamma_p(&x)?), "γ_P(SQ) lies on C_P")?;
    }
    Ok(())
}

fn thm_nine_points(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let x = center_or_skip(cfg.x(), "T_P ∘ T_P'")?;
    let s = center_or_skip(cfg.s(), "M")?;
    let (tp, tpp_inv, m) = (cfg.t_p()?, cfg.t_p_prime()?.inverse(), cfg.m_map()?);
    let (g, q, pp) = (ProjPoint::centroid(), cfg.q()?.clone(), cfg.p_prime()?.clone());
    let nine = [
        x.clone(),
        tp.apply(&pp),
        tp.apply(&g),
        q.clone(),
        s.clone(),
        cfg.o()?.clone(),
        m.apply(&q),
        tpp_inv.apply(&g),
        tpp_inv.apply(&q),
    ];
    if !crate::projective::all_collinear(&nine) {
        p.record("points", &nine);
        return Err(Verdict::Fail("the nine points are collinear".into()));
    }
    eq(p, "T_P'^-1(Q)", &nine[8], "T_P^-1(H)", &tp.inverse().apply(cfg.h()?))?;
    let meet_pt = meet(&join(cfg.p(), cfg.q_prime()?)?, &join(&s, &q)?)?;
    eq(p, "X", &x, "PQ'·SQ", &meet_pt)
}

fn thm_eight_poles(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let cp = cfg.cevian_conic()?;
    let (tp, tpp, m) = (cfg.t_p()?, cfg.t_p_prime()?, cfg.m_map()?);
    let g = ProjPoint::centroid();
    let (pt, pp, q, qp, h) = (cfg.p(), cfg.p_prime()?, cfg.q()?, cfg.q_prime()?, cfg.h()?);
    let tpg = tp.apply(&g);
    if pt != q {
        eq(p, "pole of PQ w.r.t. C_P", &cp.pole(&join(pt, q)?)?, "T_P(G)", &tpg)?;
    }
    eq(p, "polar of P", &cp.polar(pt)?, "P·T_P(G)", &join(pt, &tpg)?)?;
    if pp != q {
        eq(p, "pole of P'Q w.r.t. C_P", &cp.pole(&join(pp, q)?)?, "M(Q)", &m.apply(q))?;
        let img = cp.transform(tpp);
        eq(p, "tangent to T_P'(C_P) at P'", &img.tangent_at(pp)?, "P'Q", &join(pp, q)?)?;
    }
    let back = cp.transform(&tp.inverse());
    eq(p, "T_P^-1(C_P)", &back, "T_P'^-1(C_P)", &cp.transform(&tpp.inverse()))?;
    eq(p, "pole of QQ' w.r.t. T_P^-1(C_P)", &back.pole(&join(q, qp)?)?, "G", &g)?;
    let k_inv = ProjMap::complement().inverse();
    eq(p, "M(QQ')", &m.apply_line(&join(q, qp)?), "K^-1(PP')", &k_inv.apply_line(&join(pt, pp)?))?;
    // on the Steiner circumellipse H = Q = T_P(P') and the line is undefined
    let tpp_p = tp.apply(pp);
    if *h == tpp_p {
        return holds(cp.contains(h), "H lies on C_P");
    }
    eq(p, "tangent to C_P at H", &cp.tangent_at(h)?, "H·T_P(P')", &join(h, &tpp_p)?)
}

fn prop_circumcevian(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let abc = Triangle::reference();
    let cc = circumcevian_triangle(&c, &abc, cfg.q()?)?;
    let (tpp_inv, pp, o) = (cfg.t_p_prime()?.inverse(), cfg.p_prime()?, cfg.o()?);
    let medial = Triangle::medial();
    let cev = cfg.cevian_triangle()?;
    for i in 0..3 {
        let mid = midpoint(&vertex(i), pp)?;
        eq(p, "circumcevian vertex of Q", cc.vertex(i), "T_P'^-1(midpoint of vertex and P')", &tpp_inv.apply(&mid))?;
        eq(
            p,
            "antipode of circumcevian vertex",
            &point_reflection(cc.vertex(i), o)?,
            "T_P'^-1(side midpoint)",
            &tpp_inv.apply(medial.vertex(i)),
        )?;
        eq(
            p,
            "side direction of A'B'C'",
            &cc.side(i).direction()?,
            "side direction of DEF",
            &cev.side(i).direction()?,
        )?;
    }
    eq(p, "perspector of A'B'C' and D0E0F0", &perspector(&cc, &medial)?, "O", o)
}

fn thm_O_perspector(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let abc = Triangle::reference();
    let cc = circumcevian_triangle(&c, &abc, cfg.q()?)?;
    let tan = tangential_triangle(&c, &abc)?;
    eq(p, "perspector(tangential, circumcevian of Q)", &perspector(&tan, &cc)?, "O", cfg.o()?)
}

fn lem_collineation(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let gamma = cfg.frame().isogonal();
    let w = p.point();
    p.record("W", &w);
    let [a, b, c] = ProjPoint::vertices();
    let img = gamma.apply(&cfg.gamma_p(&w)?)?;
    let map = map_from_four_points(&[a.clone(), b.clone(), c.clone(), w], &[a, b, c, img])?;
    for _ in 0..5 {
        let x = p.point();
        p.record("X", &x);
        eq(p, "collineation(X)", &map.apply(&x), "γ(γ_P(X))", &gamma.apply(&cfg.gamma_p(&x)?)?)?;
    }
    Ok(())
}

fn thm_tcc(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let gh = cfg.frame().isogonal().apply(cfg.h()?)?;
    eq(p, "TCC-perspector of γ(Q)", &cfg.tcc_perspector_by_triangles()?, "γ(H)", &gh)
}

fn tcc_formula(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let gh = cfg.frame().isogonal().apply(cfg.h()?)?;
    let t = cfg.tcc_perspector()?;
    eq(p, "T(γ(Q)) by formula", &t, "γ(H)", &gh)?;
    eq(p, "T(γ(Q)) by formula", &t, "TCC-perspector of γ(Q)", &cfg.tcc_perspector_by_triangles()?)
}

fn thm_persG(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let c = cfg.circumconic()?;
    let abc = Triangle::reference();
    let tan = tangential_triangle(&c, &abc)?;
    eq(p, "perspector(ABC, tangential)", &perspector(&abc, &tan)?, "γ_P(G)", &cfg.gamma_p(&ProjPoint::centroid())?)
}

fn appendix_kmid(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let k = ProjMap::complement();
    let (tp, tpp) = (cfg.t_p()?, cfg.t_p_prime()?);
    for _ in 0..5 {
        let r = p.point();
        p.record("R", &r);
        eq(p, "K(R)", &k.apply(&r), "midpoint(T_P(R), T_P'(R))", &midpoint(&tp.apply(&r), &tpp.apply(&r))?)?;
    }
    Ok(())
}

fn appendix_commute(cfg: &CevianConfig, p: &mut Probe) -> Outcome {
    let k_inv = ProjMap::complement().inverse();
    let a = cfg.t_p()?.compose(&k_inv);
    let b = cfg.t_p_prime()?.compose(&k_inv);
    eq(p, "T_P K^-1 T_P' K^-1", &a.compose(&b), "T_P' K^-1 T_P K^-1", &b.compose(&a))?;
    let swapped = CevianConfig::derive(cfg.frame().clone(), cfg.p_prime()?.clone())?;
    eq(p, "M from P", cfg.m_map()?, "M from P'", swapped.m_map()?)?;
    match (cfg.s(), swapped.s()) {
        (Err(GeometryError::TranslationNoFixedPoint), _) => Ok(()),
        (s1, s2) => eq(p, "S from P", &s1?, "S from P'", &s2?),
    }
}
