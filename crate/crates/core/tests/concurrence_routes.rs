use catqubit::coherent::chi_density;
use catqubit::*;
use std::f64::consts::PI;

fn eta(e: f64) -> ChannelParams {
    ChannelParams::new(e).unwrap()
}

fn code(n: i64) -> CodeSpec {
    CodeSpec::new(n).unwrap()
}

fn alpha_grid() -> Vec<f64> {
    (1..=15).map(|i| 0.2 * f64::from(i)).collect()
}

fn eta_grid() -> Vec<f64> {
    (1..=10).map(|i| 0.1 * f64::from(i)).collect()
}

fn is_x_point(w: f64, theta: f64) -> bool {
    w == 0.5 && (theta == 0.0 || theta == PI)
}

#[test]
fn three_routes_agree_for_direct_transmission() {
    let (mut worst_x, mut worst_evo): (f64, f64) = (0.0, 0.0);
    for alpha in alpha_grid() {
        for e in eta_grid() {
            for theta in [0.0, PI / 2.0, PI] {
                for w in [0.1, 0.3, 0.5] {
                    let s = TwoModeCatState::symmetric(alpha, w, theta).unwrap();
                    let rho = transmit_direct(&s, eta(e)).unwrap();
                    let general = concurrence(&rho).unwrap();
                    if is_x_point(w, theta) {
                        let x = XMatrix::from_density(&rho).unwrap();
                        worst_x = worst_x.max((general - concurrence_x(&x)).abs());
                    }
                    let evo = evolved_concurrence(&s, eta(e), CodeSpec::direct()).unwrap();
                    worst_evo = worst_evo.max((general - evo).abs());
                }
            }
        }
    }
    assert!(worst_x < 1e-9, "x route {worst_x:e}");
    assert!(worst_evo < 1e-6, "evolution route {worst_evo:e}");
}

#[test]
fn codes_factorise_for_one_ebit_inputs() {
    // Any state with one ebit is a local unitary away from |φ⁺⟩.
    for n in [1, 3, 5, 11, 51] {
        for alpha in [0.4, 1.0, 2.0] {
            for e in [0.2, 2.0 / 3.0, 0.9] {
                let s = TwoModeCatState::symmetric(alpha, 0.5, PI).unwrap();
                let rho = transmit_encoded(&s, eta(e), code(n)).unwrap();
                let general = concurrence(&rho).unwrap();
                let evo = evolved_concurrence(&s, eta(e), code(n)).unwrap();
                assert!((general - evo).abs() < 1e-9, "n={n} α={alpha} η={e}");
            }
        }
    }
}

#[test]
fn bell_xmatrix_route_equivalence() {
    let x = bell_xmatrix(RealAmplitude::new(1.0).unwrap(), eta(0.9)).unwrap();
    let general = concurrence(&x.to_density()).unwrap();
    assert!((general - concurrence_x(&x)).abs() < 1e-9);
}

#[test]
fn example_triple_route_point() {
    let s = TwoModeCatState::symmetric(1.0, 0.5, PI).unwrap();
    let rho = transmit_direct(&s, eta(2.0 / 3.0)).unwrap();
    let general = concurrence(&rho).unwrap();
    let x = concurrence_x(&XMatrix::from_density(&rho).unwrap());
    let evo = evolved_concurrence(&s, eta(2.0 / 3.0), CodeSpec::direct()).unwrap();
    assert!((general - x).abs() < 1e-9);
    assert!((general - evo).abs() < 1e-9);
}

#[test]
fn initial_concurrence_matches_wootters() {
    for alpha in [0.1, 0.5, 1.0, 2.0, 3.0] {
        for w in [0.0, 0.25, 0.5, 0.75, 1.0] {
            for theta in [0.0, PI / 2.0, PI] {
                let s = TwoModeCatState::symmetric(alpha, w, theta).unwrap();
                let general = concurrence(&chi_density(&s).unwrap()).unwrap();
                assert!((initial_concurrence(&s).unwrap() - general).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn odd_cat_is_maximally_entangled_at_every_size() {
    for i in 1..=100 {
        let alpha = 0.05 * f64::from(i);
        let s = TwoModeCatState::symmetric(alpha, 0.5, PI).unwrap();
        assert!((initial_concurrence(&s).unwrap() - 1.0).abs() < 1e-9);
        assert!((concurrence(&chi_density(&s).unwrap()).unwrap() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn theta_profile_has_fig3_shape() {
    let c: Vec<f64> = (0..50)
        .map(|i| {
            let theta = PI * f64::from(i) / 49.0;
            let s = TwoModeCatState::symmetric(1.0, 0.5, theta).unwrap();
            concurrence(&chi_density(&s).unwrap()).unwrap()
        })
        .collect();
    // (1 - e^{-4α²}) / (1 + e^{-4α²} cos θ): rises monotonically from θ = 0 to θ = π.
    assert!(c.windows(2).all(|p| p[1] >= p[0] - 1e-15));
    let expect0 = (1.0 - (-4.0f64).exp()) / (1.0 + (-4.0f64).exp());
    assert!((c[0] - expect0).abs() < 1e-10);
    assert!((c[49] - 1.0).abs() < 1e-10);
}

#[test]
fn encoding_never_hurts_below_half() {
    for (e, theta) in [(2.0 / 3.0, 0.0), (0.9, 0.0), (2.0 / 3.0, PI), (0.9, PI)] {
        for i in 1..=60 {
            let alpha = 0.05 * f64::from(i);
            let s = TwoModeCatState::symmetric(alpha, 0.5, theta).unwrap();
            let p = flip_prob_state(&s, eta(e)).unwrap();
            if p >= 0.5 {
                continue;
            }
            let mut prev = -1.0;
            for n in [1, 3, 5, 11, 51] {
                let c = concurrence(&transmit_encoded(&s, eta(e), code(n)).unwrap()).unwrap();
                assert!(c >= prev - 1e-10, "η={e} θ={theta} α={alpha} n={n}");
                prev = c;
            }
        }
    }
}

#[test]
fn no_sudden_death_at_fig5_point() {
    for i in 1..=50 {
        let e = 0.02 * f64::from(i);
        let s = TwoModeCatState::symmetric(1.3, 0.5, 0.0).unwrap();
        for n in [1, 3, 5, 11, 51] {
            let c = concurrence(&transmit_encoded(&s, eta(e), code(n)).unwrap()).unwrap();
            assert!(c > 0.0, "η={e} n={n}");
            assert!(evolved_concurrence(&s, eta(e), code(n)).unwrap() > 0.0);
        }
    }
}

#[test]
fn evolved_limits() {
    let s = TwoModeCatState::symmetric(0.8, 0.3, 1.0).unwrap();
    let lossless = evolved_concurrence(&s, ChannelParams::lossless(), code(5)).unwrap();
    assert!((lossless - initial_concurrence(&s).unwrap()).abs() < 1e-12);
    let product = TwoModeCatState::symmetric(0.8, 1.0, 1.0).unwrap();
    assert_eq!(evolved_concurrence(&product, eta(0.3), code(5)).unwrap(), 0.0);
}
