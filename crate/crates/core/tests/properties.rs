use corrpoly::classical::{correlation_point, BallType, UrnDistribution};
use corrpoly::polytope::{dd_hull, enumerate_vertices, membership, HRepresentation, Rational, Region, Scenario};
use corrpoly::quantum::{
    correlation_operator, correlation_operator_from_projectors, expectation, projector, singlet_correlation,
    spin_operator, Complex64, ComplexMatrix, Direction, Outcome, PureState,
};
use corrpoly::spectral::sz::{mu1, mu2, singlet_sum};
use corrpoly::spectral::{eigh, facet_operator};
use num::{BigInt, Signed, Zero};
use proptest::prelude::*;

fn sz_hull() -> HRepresentation {
    dd_hull(&enumerate_vertices(&Scenario::suppes_zanotti()).unwrap()).unwrap()
}

fn hermitian(max_dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |raw| {
            let mut m = ComplexMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let (re, im) = raw[i * n + j];
                    if i == j {
                        m[(i, i)] += Complex64::new(2.0 * re, 0.0);
                    } else {
                        m[(i, j)] += Complex64::new(re, im);
                        m[(j, i)] += Complex64::new(re, -im);
                    }
                }
            }
            m
        })
    })
}

fn state(dim: usize) -> impl Strategy<Value = PureState> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim)
        .prop_filter_map("zero vector", |v| {
            PureState::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).ok()
        })
}

fn direction() -> impl Strategy<Value = Direction> {
    (0.0f64..std::f64::consts::PI, 0.0f64..std::f64::consts::TAU).prop_map(|(t, p)| Direction::new(t, p))
}

fn rational_urn() -> impl Strategy<Value = UrnDistribution> {
    prop::collection::vec(0u32..50, 8).prop_filter_map("all zero", |w| {
        let total: u32 = w.iter().sum();
        if total == 0 {
            return None;
        }
        let weights = w.iter().enumerate().map(|(k, &x)| {
            (BallType::from_index(3, k), Rational::new(BigInt::from(x), BigInt::from(total)))
        });
        UrnDistribution::new(3, weights).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn eigh_reconstructs(a in hermitian(16)) {
        let es = eigh(&a).unwrap();
        let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
        prop_assert!((&es.reconstruct() - &a).frobenius_norm() <= 1e-9 * scale);
        let v = es.vectors();
        let gram = &v.adjoint() * v;
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(a.rows())) < 1e-10);
        prop_assert!(es.values().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn spin_squares_to_identity(d in direction()) {
        let s = spin_operator(d);
        prop_assert!((&s * &s).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        let total = &projector(Outcome::Plus, d) + &projector(Outcome::Minus, d);
        prop_assert!(total.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn projector_and_kron_forms_agree(d1 in direction(), d2 in direction()) {
        let a = correlation_operator(d1, d2);
        prop_assert!(a.max_abs_diff(&correlation_operator_from_projectors(d1, d2)) < 1e-12);
    }

    #[test]
    fn singlet_correlation_is_minus_cosine(d1 in direction(), d2 in direction()) {
        let [x1, y1, z1] = d1.unit_vector();
        let [x2, y2, z2] = d2.unit_vector();
        let dot = x1 * x2 + y1 * y2 + z1 * z2;
        prop_assert!((singlet_correlation(d1, d2) + dot).abs() < 1e-12);
    }

    #[test]
    fn expectations_are_real(psi in state(4), d1 in direction(), d2 in direction()) {
        let e = expectation(&psi, &correlation_operator(d1, d2)).unwrap();
        prop_assert!((-1.0 - 1e-12..=1.0 + 1e-12).contains(&e));
    }

    #[test]
    fn facet_operator_spectrum_brackets_expectations(
        dirs in prop::collection::vec(direction(), 3),
        states in prop::collection::vec(state(4), 20),
        k in 0usize..4,
    ) {
        let h = sz_hull();
        let facet = &h.facets()[k];
        let ops = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| correlation_operator(dirs[i], dirs[j]));
        let a = facet_operator(facet.normal(), &ops).unwrap();
        let es = eigh(&a).unwrap();
        for psi in &states {
            let e = expectation(psi, &a).unwrap();
            prop_assert!(es.min() - 1e-10 <= e && e <= es.max() + 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_urns_lie_in_the_polytope(urn in rational_urn()) {
        let point = correlation_point(&urn, &Scenario::suppes_zanotti()).unwrap();
        let m = membership(&sz_hull(), &point).unwrap();
        prop_assert!(m.region.contains());
        prop_assert!(m.margins.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn convex_combinations_of_vertices_are_inside(w in prop::collection::vec(0u32..20, 4)) {
        let total: u32 = w.iter().sum();
        prop_assume!(total > 0);
        let v = enumerate_vertices(&Scenario::suppes_zanotti()).unwrap();
        let mut point = vec![Rational::zero(); 3];
        for (vertex, &wk) in v.vertices().iter().zip(&w) {
            let t = Rational::new(BigInt::from(wk), BigInt::from(total));
            for (p, x) in point.iter_mut().zip(vertex) {
                *p += &t * x;
            }
        }
        let m = membership(&sz_hull(), &point).unwrap();
        let expected = if w.iter().all(|&x| x > 0) { Region::Interior } else { Region::Boundary };
        prop_assert_eq!(m.region, expected);
    }

    #[test]
    fn correlation_point_is_linear_in_the_urn(a in rational_urn(), b in rational_urn(), t in 0u32..=10) {
        let t = Rational::new(BigInt::from(t), BigInt::from(10));
        let s = Scenario::suppes_zanotti();
        let mixed = correlation_point(&a.mixture(&b, &t).unwrap(), &s).unwrap();
        let pa = correlation_point(&a, &s).unwrap();
        let pb = correlation_point(&b, &s).unwrap();
        let one = Rational::from_integer(1.into());
        for k in 0..3 {
            prop_assert_eq!(&mixed[k], &(&t * &pa[k] + (&one - &t) * &pb[k]));
        }
    }

    #[test]
    fn equidistant_variational_bounds(theta in 0.0f64..std::f64::consts::PI, psi in state(4)) {
        let a = corrpoly::spectral::sz::sz_operator(theta);
        let e = expectation(&psi, &a).unwrap();
        prop_assert!(e >= mu1(theta) - 1e-10);
        prop_assert!(e <= -mu1(theta) + 1e-10);
    }
}

#[test]
fn singlet_never_beats_the_lowest_eigenvalue() {
    for k in 0..=24 {
        let theta = std::f64::consts::PI * k as f64 / 24.0;
        assert!(singlet_sum(theta) >= mu1(theta) - 1e-10, "theta {theta}");
        assert!(mu1(theta) <= mu2(theta), "theta {theta}");
    }
}
