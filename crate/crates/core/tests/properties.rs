use geomint_core::bundles::{tg_inverse, tg_mult, tstarg_inverse, tstarg_mult, ttg_inverse, ttg_mult};
use geomint_core::lifts::{cotangent_lift, cotangent_lift_inverse, tangent_lift, tangent_lift_inverse, tangent_of_rd};
use geomint_core::tulczyjew::{alpha, alpha_inv, beta, beta_inv, kappa};
use geomint_core::{
    Alg, AlgebraVector, CoAlg, CoalgebraVector, DiscretizationMap, LieGroup, TTGPoint, TTStarGPoint, TauFamily,
    TauMap, TrivializedCotangentPoint, TrivializedTangentPoint, SO3,
};
use nalgebra::Vector3;
use proptest::prelude::*;

fn vec3(bound: f64) -> impl Strategy<Value = Vector3<f64>> {
    (-bound..bound, -bound..bound, -bound..bound).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

fn alg(bound: f64) -> impl Strategy<Value = Alg<SO3>> {
    vec3(bound).prop_map(AlgebraVector::new)
}

fn coalg(bound: f64) -> impl Strategy<Value = CoAlg<SO3>> {
    vec3(bound).prop_map(CoalgebraVector::new)
}

/// Rotations with angle below 3.
fn rotation() -> impl Strategy<Value = SO3> {
    vec3(1.7).prop_map(|v| SO3::exp(&AlgebraVector::new(v)))
}

fn tau_map() -> impl Strategy<Value = TauMap> {
    prop_oneof![Just(TauMap::EXP), Just(TauMap::CAYLEY)]
}

fn theta() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.25), Just(0.5), Just(1.0)]
}

fn tg() -> impl Strategy<Value = TrivializedTangentPoint<SO3>> {
    (rotation(), alg(2.0)).prop_map(|(g, xi)| TrivializedTangentPoint::new(g, xi))
}

fn tstarg() -> impl Strategy<Value = TrivializedCotangentPoint<SO3>> {
    (rotation(), coalg(2.0)).prop_map(|(g, mu)| TrivializedCotangentPoint::new(g, mu))
}

fn ttg(bar: f64) -> impl Strategy<Value = TTGPoint<SO3>> {
    (rotation(), alg(2.0), alg(bar), alg(2.0)).prop_map(|(g, a, b, c)| TTGPoint::new(g, a, b, c))
}

fn ttstarg() -> impl Strategy<Value = TTStarGPoint<SO3>> {
    (rotation(), coalg(2.0), alg(0.55), coalg(2.0)).prop_map(|(g, a, b, c)| TTStarGPoint::new(g, a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tangent_bundle_group_axioms(a in tg(), b in tg(), c in tg()) {
        let lhs = tg_mult(&tg_mult(&a, &b), &c);
        let rhs = tg_mult(&a, &tg_mult(&b, &c));
        prop_assert!(lhs.distance(&rhs) < 1e-12);
        prop_assert!(tg_mult(&a, &tg_inverse(&a)).distance(&TrivializedTangentPoint::identity()) < 1e-12);
        prop_assert!(tg_mult(&tg_inverse(&a), &a).distance(&TrivializedTangentPoint::identity()) < 1e-12);
    }

    #[test]
    fn cotangent_bundle_group_axioms(a in tstarg(), b in tstarg(), c in tstarg()) {
        let lhs = tstarg_mult(&tstarg_mult(&a, &b), &c);
        let rhs = tstarg_mult(&a, &tstarg_mult(&b, &c));
        prop_assert!(lhs.distance(&rhs) < 1e-12);
        prop_assert!(tstarg_mult(&a, &tstarg_inverse(&a)).distance(&TrivializedCotangentPoint::identity()) < 1e-12);
    }

    #[test]
    fn second_order_bundle_group_axioms(a in ttg(2.0), b in ttg(2.0), c in ttg(2.0)) {
        let lhs = ttg_mult(&ttg_mult(&a, &b), &c);
        let rhs = ttg_mult(&a, &ttg_mult(&b, &c));
        prop_assert!(lhs.distance(&rhs) < 1e-12);
        prop_assert!(ttg_mult(&a, &ttg_inverse(&a)).distance(&TTGPoint::identity()) < 1e-12);
        prop_assert!(ttg_mult(&ttg_inverse(&a), &a).distance(&TTGPoint::identity()) < 1e-12);
    }

    #[test]
    fn adjoint_and_coadjoint_are_actions(g in rotation(), h in rotation(), xi in alg(2.0), mu in coalg(2.0)) {
        let gh = g.compose(&h);
        prop_assert!((gh.adjoint(&xi) - g.adjoint(&h.adjoint(&xi))).norm() < 1e-12);
        // right action: Ad*_{gh} = Ad*_h Ad*_g
        prop_assert!((gh.coadjoint(&mu) - h.coadjoint(&g.coadjoint(&mu))).norm() < 1e-12);
        let paired = geomint_core::algebra::pairing(&g.coadjoint(&mu), &xi)
            - geomint_core::algebra::pairing(&mu, &g.adjoint(&xi));
        prop_assert!(paired.abs() < 1e-12);
    }

    #[test]
    fn kappa_is_an_involution_swapping_projections(p in ttg(2.0)) {
        prop_assert!(kappa(&kappa(&p)).distance(&p) < 1e-14);
        prop_assert_eq!(kappa(&p).pr12(), p.pr13());
        prop_assert_eq!(kappa(&p).pr13(), p.pr12());
    }

    #[test]
    fn alpha_beta_round_trips(p in ttstarg()) {
        prop_assert!(alpha_inv(&alpha(&p)).distance(&p) < 1e-13);
        prop_assert!(beta_inv(&beta(&p)).distance(&p) < 1e-13);
        let q = alpha(&p);
        prop_assert!(alpha(&alpha_inv(&q)).distance(&q) < 1e-13);
        let r = beta(&p);
        prop_assert!(beta(&beta_inv(&r)).distance(&r) < 1e-13);
    }

    #[test]
    fn tau_inverse_pairs(tau in tau_map(), xi in alg(1.5)) {
        let a = tau.tau::<SO3>(&xi).unwrap();
        let b = tau.tau::<SO3>(&-xi).unwrap();
        prop_assert!(a.compose(&b).distance(&SO3::identity()) < 1e-12);
        prop_assert!((tau.tau_inv(&a).unwrap() - xi).norm() < 1e-11);
        prop_assert!(a.manifold_residual() < 1e-13);
    }

    #[test]
    fn dtau_left_matches_finite_difference(tau in tau_map(), xi in alg(1.15), eta in alg(1.0)) {
        let h = 1e-6;
        let base = tau.tau::<SO3>(&xi).unwrap();
        let moved = tau.tau::<SO3>(&(xi + eta * h)).unwrap();
        let fd = SO3::vee_skew(&((base.matrix().transpose() * (moved.matrix() - base.matrix())) / h));
        let closed = tau.dtau_l::<SO3>(&xi, &eta);
        prop_assert!((closed.into_coords() - fd).norm() < 1e-5);
    }

    #[test]
    fn dtau_inverse_and_dual(tau in tau_map(), xi in alg(1.15), eta in alg(1.0), mu in coalg(1.0)) {
        let d = tau.dtau_l::<SO3>(&xi, &eta);
        prop_assert!((tau.dtau_l_inv::<SO3>(&xi, &d).unwrap() - eta).norm() < 1e-11);
        let lhs = geomint_core::algebra::pairing(&tau.dtau_l_dual::<SO3>(&xi, &mu), &eta);
        let rhs = geomint_core::algebra::pairing(&mu, &d);
        prop_assert!((lhs - rhs).abs() < 1e-12);
        let dual = tau.dtau_l_dual::<SO3>(&xi, &mu);
        prop_assert!((tau.dtau_l_dual_inv::<SO3>(&xi, &dual).unwrap() - mu).norm() < 1e-11);
    }

    #[test]
    fn discretization_conditions(tau in tau_map(), theta in theta(), g in rotation(), v in alg(1.0)) {
        let map = DiscretizationMap::new(tau, theta).unwrap();
        let (a, b) = map.rd(&g, &AlgebraVector::zero()).unwrap();
        prop_assert!(a.distance(&g) < 1e-15 && b.distance(&g) < 1e-15);
        // d/ds R²(s v) − d/ds R¹(s v) = v, trivialized at g
        let h = 1e-6;
        let (ap, bp) = map.rd(&g, &(v * h)).unwrap();
        let (am, bm) = map.rd(&g, &(v * -h)).unwrap();
        let leg = |p: &SO3, m: &SO3| SO3::vee_skew(&((g.matrix().transpose() * (p.matrix() - m.matrix())) / (2.0 * h)));
        let diff = leg(&bp, &bm) - leg(&ap, &am);
        prop_assert!((diff - v.into_coords()).norm() < 1e-8);
    }

    #[test]
    fn rd_round_trips(tau in tau_map(), theta in theta(), g in rotation(), xi in alg(0.9)) {
        let map = DiscretizationMap::new(tau, theta).unwrap();
        let (g0, g1) = map.rd(&g, &xi).unwrap();
        let (gb, xb) = map.rd_inv(&g0, &g1).unwrap();
        prop_assert!(gb.distance(&g) < 1e-11);
        prop_assert!((xb - xi).norm() < 1e-11);
        let (r0, r1) = map.rd(&gb, &xb).unwrap();
        prop_assert!(r0.distance(&g0) < 1e-11 && r1.distance(&g1) < 1e-11);
    }

    #[test]
    fn tangent_lift_round_trips(tau in tau_map(), theta in theta(), p in ttg(1.0)) {
        let map = DiscretizationMap::new(tau, theta).unwrap();
        let (a, b) = tangent_lift(&map, &p).unwrap();
        let back = tangent_lift_inverse(&map, &a, &b).unwrap();
        prop_assert!(back.distance(&p) < 1e-10);
        let (a2, b2) = tangent_lift(&map, &back).unwrap();
        prop_assert!(a2.distance(&a) < 1e-10 && b2.distance(&b) < 1e-10);
        // Eq. 16 diagram: the lift is the tangent map after the flip
        let (c, d) = tangent_of_rd(&map, &kappa(&p)).unwrap();
        prop_assert!(c.distance(&a) < 1e-14 && d.distance(&b) < 1e-14);
    }

    #[test]
    fn cotangent_lift_round_trips(tau in tau_map(), theta in theta(), p in ttstarg()) {
        let map = DiscretizationMap::new(tau, theta).unwrap();
        let (a, b) = cotangent_lift(&map, &p).unwrap();
        let back = cotangent_lift_inverse(&map, &a, &b).unwrap();
        prop_assert!(back.distance(&p) < 1e-10);
        let (a2, b2) = cotangent_lift(&map, &back).unwrap();
        prop_assert!(a2.distance(&a) < 1e-10 && b2.distance(&b) < 1e-10);
        let (g0, g1) = map.rd(&p.g, &p.xi_bar).unwrap();
        prop_assert!(a.g.distance(&g0) < 1e-15 && b.g.distance(&g1) < 1e-15);
    }

    #[test]
    fn lifts_are_linear_in_fibers(tau in tau_map(), p in ttg(1.0), q in ttstarg(), s in -3.0..3.0f64) {
        let map = DiscretizationMap::forward(tau);
        // tangent lift: linear in (xi, xi_tilde) over fixed (g, xi_bar)
        let scaled = TTGPoint::new(p.g, p.xi * s, p.xi_bar, p.xi_tilde * s);
        let (a, b) = tangent_lift(&map, &p).unwrap();
        let (sa, sb) = tangent_lift(&map, &scaled).unwrap();
        prop_assert!((sa.xi - a.xi * s).norm() < 1e-12 && (sb.xi - b.xi * s).norm() < 1e-12);
        // cotangent lift: linear in (mu, mu_tilde) over fixed (g, xi_bar)
        let scaled = TTStarGPoint::new(q.g, q.mu * s, q.xi_bar, q.mu_tilde * s);
        let (a, b) = cotangent_lift(&map, &q).unwrap();
        let (sa, sb) = cotangent_lift(&map, &scaled).unwrap();
        prop_assert!((sa.mu - a.mu * s).norm() < 1e-12 && (sb.mu - b.mu * s).norm() < 1e-12);
    }
}
