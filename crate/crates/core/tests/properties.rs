use cevian::collineations::{map_from_four_points, QuadMap};
use cevian::frame::cart_i;
use cevian::projective::{cross_ratio, harmonic_conjugate, join, meet};
use cevian::{CevianConfig, Frame, ProjMap, ProjPoint};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = ProjPoint> {
    (-30i64..=30, -30i64..=30, -30i64..=30).prop_filter_map("zero vector", |(x, y, z)| ProjPoint::new(x, y, z).ok())
}

fn generic() -> impl Strategy<Value = ProjPoint> {
    point().prop_filter("on a side or at infinity", |p| p.off_sides() && !p.is_infinite())
}

fn frame() -> Frame {
    Frame::new(cart_i(1, 2), cart_i(7, -1), cart_i(3, 5)).unwrap()
}

fn config(p: ProjPoint) -> Option<CevianConfig> {
    let cfg = CevianConfig::derive(frame(), p).ok()?;
    cfg.q().ok()?;
    Some(cfg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_meet_incidence(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        let (l, m) = (join(&a, &b).unwrap(), join(&c, &d).unwrap());
        prop_assert!(a.lies_on(&l) && b.lies_on(&l));
        if l != m {
            let x = meet(&l, &m).unwrap();
            prop_assert!(x.lies_on(&l) && x.lies_on(&m));
        }
    }

    #[test]
    fn cross_ratio_is_projective(a in generic(), b in generic(), s in 1i64..9, t in 1i64..9,
                                 f in [generic(), generic(), generic(), generic()]) {
        prop_assume!(a != b);
        let c = cevian::suite::sampler::combine(s, &a, t, &b).unwrap();
        let d = cevian::suite::sampler::combine(s, &a, -t - 1, &b).unwrap();
        prop_assume!(c != a && c != b && d != a && d != b && c != d);
        let src = [ProjPoint::vertex_a(), ProjPoint::vertex_b(), ProjPoint::vertex_c(), ProjPoint::centroid()];
        if let Ok(t) = map_from_four_points(&src, &f) {
            let before = cross_ratio(&a, &b, &c, &d).unwrap();
            let after = cross_ratio(&t.apply(&a), &t.apply(&b), &t.apply(&c), &t.apply(&d)).unwrap();
            prop_assert_eq!(before, after);
        }
    }

    #[test]
    fn harmonic_conjugate_is_an_involution(a in generic(), b in generic(), s in 1i64..9, t in 1i64..9) {
        prop_assume!(a != b);
        let c = cevian::suite::sampler::combine(s, &a, t, &b).unwrap();
        prop_assume!(c != a && c != b);
        let d = harmonic_conjugate(&a, &b, &c).unwrap();
        prop_assert_eq!(harmonic_conjugate(&a, &b, &d).unwrap(), c);
    }

    #[test]
    fn map_inverse_round_trip(f in [generic(), generic(), generic(), generic()], x in point()) {
        let src = [ProjPoint::vertex_a(), ProjPoint::vertex_b(), ProjPoint::vertex_c(), ProjPoint::centroid()];
        if let Ok(t) = map_from_four_points(&src, &f) {
            prop_assert_eq!(t.inverse().apply(&t.apply(&x)), x.clone());
            prop_assert!(t.compose(&t.inverse()).is_identity());
        }
    }

    #[test]
    fn complement_halves_toward_centroid(x in generic()) {
        let k = ProjMap::complement();
        let mid = cevian::projective::midpoint(&k.apply(&x), &x).unwrap();
        // K(X) = (3G − X)/2, so the midpoint of X and K(X) sits on line GX
        prop_assert!(cevian::projective::collinear(&mid, &x, &ProjPoint::centroid()));
    }

    #[test]
    fn gamma_paths_agree(p in generic(), x in generic()) {
        if let Some(cfg) = config(p) {
            prop_assert_eq!(cfg.gamma_p(&x).unwrap(), cfg.gamma_p_pole(&x).unwrap());
        }
    }

    #[test]
    fn delta_is_an_involution_fixing_p_to_q_prime(p in generic(), x in generic()) {
        if let Some(cfg) = config(p) {
            let y = cfg.delta_p(&x).unwrap();
            prop_assert_eq!(cfg.delta_p(&y).unwrap(), x);
            prop_assert_eq!(&cfg.delta_p(&cfg.p().clone()).unwrap(), cfg.q_prime().unwrap());
        }
    }

    #[test]
    fn isotomic_is_an_involution(x in generic()) {
        let i = QuadMap::isotomic();
        prop_assert_eq!(i.apply(&i.apply(&x).unwrap()).unwrap(), x);
    }
}
