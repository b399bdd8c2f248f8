//! Randomized invariants of the projective layer and the disc family.

use hartogs_core::projective::{cplx, project, C3Vector, HomogeneousPolynomial};
use hartogs_core::{radius_schedule, DiscFamilyConfig, Quadric, Tolerances};
use num_complex::Complex64;
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn coord() -> impl Strategy<Value = Complex64> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| cplx(re, im))
}

fn nonzero_vector() -> impl Strategy<Value = C3Vector> {
    (coord(), coord(), coord())
        .prop_map(|(a, b, c)| C3Vector { coords: [a, b, c] })
        .prop_filter("needs norm above the zero threshold", |z| z.norm() > 1e-3)
}

fn scale() -> impl Strategy<Value = Complex64> {
    (0.05..20.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    /// Canonicalization is idempotent: projecting a canonical representative
    /// reproduces it bitwise.
    #[test]
    fn projection_is_idempotent(z in nonzero_vector()) {
        let p = project(&z, &tol()).unwrap();
        let again = project(&C3Vector { coords: *p.rep() }, &tol()).unwrap();
        for (a, b) in p.rep().iter().zip(again.rep().iter()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    /// The class does not depend on the representative's scale.
    #[test]
    fn projection_is_scale_invariant(z in nonzero_vector(), lambda in scale()) {
        let p = project(&z, &tol()).unwrap();
        let q = project(&z.scale(lambda), &tol()).unwrap();
        prop_assert!(p.distance(&q) < 1e-10, "distance {}", p.distance(&q));
    }

    /// Fubini–Study chordal distance obeys the triangle inequality.
    #[test]
    fn distance_satisfies_triangle_inequality(
        a in nonzero_vector(),
        b in nonzero_vector(),
        c in nonzero_vector(),
    ) {
        let t = tol();
        let (pa, pb, pc) = (
            project(&a, &t).unwrap(),
            project(&b, &t).unwrap(),
            project(&c, &t).unwrap(),
        );
        prop_assert!(pa.distance(&pc) <= pa.distance(&pb) + pb.distance(&pc) + 1e-12);
    }

    /// Distance is symmetric and vanishes on the diagonal.
    #[test]
    fn distance_is_a_metric_on_samples(a in nonzero_vector(), b in nonzero_vector()) {
        let t = tol();
        let pa = project(&a, &t).unwrap();
        let pb = project(&b, &t).unwrap();
        prop_assert!((pa.distance(&pb) - pb.distance(&pa)).abs() < 1e-15);
        prop_assert!(pa.distance(&pa) < 1e-15);
        prop_assert!(pa.distance(&pb) <= 1.0 + 1e-12);
    }

    /// Euler's identity for the mixed-degree surface polynomial:
    /// z·∇P(z) = (l·z) + 2·zᵀQz = P(z) + zᵀQz.
    #[test]
    fn euler_identity_for_the_quadric(z in nonzero_vector()) {
        let q = Quadric::standard();
        let lhs = z.dot(&q.gradient(&z));
        let quad_part = q.eval(&z) - q.linear().dot(&z);
        let rhs = q.eval(&z) + quad_part;
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() / scale < 1e-10);
    }

    /// Homogeneous polynomials scale as λ^d.
    #[test]
    fn homogeneity_of_curve_polynomials(
        z in nonzero_vector(),
        lambda in scale(),
        c0 in coord(),
        c1 in coord(),
        c2 in coord(),
    ) {
        let p = HomogeneousPolynomial::from_terms(
            2,
            &[([2, 0, 0], c0), ([0, 1, 1], c1), ([0, 0, 2], c2)],
        ).unwrap();
        let lhs = p.eval(&z.scale(lambda));
        let rhs = lambda * lambda * p.eval(&z);
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() / scale < 1e-10);
    }

    /// The smoothing schedule maps [0, 1] into [1/2, 1] monotonically.
    #[test]
    fn schedule_is_bounded_and_monotone(a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let r_lo = radius_schedule(lo).unwrap();
        let r_hi = radius_schedule(hi).unwrap();
        prop_assert!((0.5..=1.0).contains(&r_lo));
        prop_assert!((0.5..=1.0).contains(&r_hi));
        prop_assert!(r_hi <= r_lo);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Family discs satisfy both defining equations everywhere on the closed
    /// parameter domain, not just on the audit grid.
    #[test]
    fn discs_stay_on_the_variety(t in 0.0..=1.0f64, r in 0.0..=1.0f64, th in 0.0..std::f64::consts::TAU) {
        let cfg = DiscFamilyConfig::standard().unwrap();
        let w = Complex64::from_polar(r, th);
        let z = cfg.disc_eval(t, w).unwrap();
        let c = cfg.phi(t).unwrap();
        prop_assert!(cfg.quadric().eval(&z).norm() < 1e-10);
        prop_assert!((cfg.submersion().eval(&z) - c).norm() < 1e-10);
    }
}
