use catqubit::linalg::{eig_hermitian, eig_hermitian_dyn, singular_values, sqrt_psd, Complex4x4, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_hermitian(rng: &mut ChaCha8Rng, scale: f64) -> Complex4x4 {
    let a = Complex4x4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    (a + a.adjoint()).scale(0.5 * scale)
}

#[test]
fn thousand_random_hermitian_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let scale = 10f64.powi(i % 7 - 3);
        let h = random_hermitian(&mut rng, scale);
        let norm = h.frobenius_norm();
        let eig = eig_hermitian(&h).unwrap();
        let v = eig.vectors;
        let residual = (h * v - v * Complex4x4::diag(eig.values)).frobenius_norm();
        assert!(residual < 1e-11 * norm, "case {i}: residual {residual:e}");
        let unitarity = (v.adjoint() * v).max_abs_diff(&Complex4x4::identity());
        assert!(unitarity < 1e-11, "case {i}: unitarity {unitarity:e}");
        assert!(eig.values.windows(2).all(|p| p[0] >= p[1]));
        let sum: f64 = eig.values.iter().sum();
        assert!((sum - h.trace().re).abs() < 1e-12 * norm.max(1.0));
        let prod: f64 = eig.values.iter().product();
        assert!((prod - h.determinant().re).abs() < 1e-10 * norm.powi(4));
        assert!(eig.sweeps <= 100);
    }
}

#[test]
fn off_diagonal_norm_shrinks_every_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let h = random_hermitian(&mut rng, 1.0);
        let d = eig_hermitian_dyn(&h.to_dynamic()).unwrap();
        assert!(d.off_norms.windows(2).all(|p| p[1] <= p[0]));
        assert!(*d.off_norms.last().unwrap() <= 1e-14 * h.frobenius_norm());
    }
}

#[test]
fn eigensolver_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = random_hermitian(&mut rng, 1.0);
    assert_eq!(eig_hermitian(&h).unwrap(), eig_hermitian(&h).unwrap());
}

#[test]
fn products_and_adjoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let a = Complex4x4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let b = Complex4x4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        assert!((a * b).adjoint().max_abs_diff(&(b.adjoint() * a.adjoint())) < 1e-13);
        assert_eq!(a.adjoint().adjoint(), a);
        assert_eq!(a * Complex4x4::identity(), a);
    }
    let yy = Complex4x4::sigma_yy();
    assert_eq!(yy * yy, Complex4x4::identity());
}

#[test]
fn psd_square_root_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let a = Complex4x4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let rho = a * a.adjoint();
        let rho = rho.scale(1.0 / rho.trace().re);
        let root = sqrt_psd(&rho).unwrap();
        assert!(root.hermiticity_error() < 1e-13);
        assert!((root * root).max_abs_diff(&rho) < 1e-10);
        assert!(eig_hermitian(&root).unwrap().values[3] > -1e-10);
    }
}

#[test]
fn singular_values_match_gram_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let m = Complex4x4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let sv = singular_values(&m).unwrap();
        let ev = eig_hermitian(&(m * m.adjoint())).unwrap().values;
        for k in 0..4 {
            assert!((sv[k] * sv[k] - ev[k]).abs() < 1e-12);
        }
    }
}
