use proptest::prelude::*;
use qprob_core::linalg::{hermitian_eig, kron, rk4_step, unitary_exp, unvec, vec, ComplexMatrix, ComplexVector, C64};
use qprob_core::random;
use qprob_core::state::{
    distribution_set, qubit_bloch_check, qubit_density_from_probs, qubit_probs_from_density,
    ququart_density_from_probs, ququart_probs_from_density, tomogram, Direction, ProbVector15, QubitProbs,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex() -> impl Strategy<Value = C64> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn square(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), n * n).prop_map(move |d| ComplexMatrix::new(n, n, d).unwrap())
}

fn direction() -> impl Strategy<Value = Direction> {
    (0.0..std::f64::consts::PI, 0.0..2.0 * std::f64::consts::PI)
        .prop_map(|(theta, phi)| Direction::new(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()).unwrap())
}

proptest! {
    #[test]
    fn vec_unvec_are_inverse(m in (1usize..=4).prop_flat_map(square)) {
        let n = m.rows();
        let v = vec(&m).unwrap();
        prop_assert_eq!(v.dim(), n * n);
        prop_assert_eq!(unvec(&v, n).unwrap(), m.clone());
        prop_assert_eq!(vec(&unvec(&v, n).unwrap()).unwrap(), v);
    }

    #[test]
    fn kron_associative_and_mixed_product(a in square(2), b in square(2), c in square(2), d in square(2)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        let scale = 1.0 + left.frobenius_norm();
        prop_assert!(left.max_abs_diff(&right) <= 1e-13 * scale);

        let lhs = &kron(&a, &b) * &kron(&c, &d);
        let rhs = kron(&(&a * &c), &(&b * &d));
        let scale = 1.0 + lhs.frobenius_norm();
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-13 * scale);
    }

    #[test]
    fn tomogram_antipodes_sum_to_one(p in (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64), n in direction()) {
        let q = QubitProbs::new(p.0, p.1, p.2);
        prop_assume!(qubit_bloch_check(&q).valid);
        let rho = qubit_density_from_probs(&q).unwrap();
        let up = tomogram(&rho, &n).unwrap();
        let down = tomogram(&rho, &n.reversed()).unwrap();
        prop_assert!((up + down - 1.0).abs() <= 1e-12);
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&up));
    }

    #[test]
    fn tomogram_reads_back_the_parameters(p in (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64)) {
        let q = QubitProbs::new(p.0, p.1, p.2);
        prop_assume!(qubit_bloch_check(&q).valid);
        let rho = qubit_density_from_probs(&q).unwrap();
        prop_assert!((tomogram(&rho, &Direction::z()).unwrap() - p.0).abs() <= 1e-15);
        prop_assert!((tomogram(&rho, &Direction::x()).unwrap() - p.1).abs() <= 1e-15);
        prop_assert!((tomogram(&rho, &Direction::y()).unwrap() - p.2).abs() <= 1e-15);
    }

    #[test]
    fn qubit_density_is_hermitian_with_unit_trace(p in (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64)) {
        let rho = qubit_density_from_probs(&QubitProbs::new(p.0, p.1, p.2)).unwrap();
        prop_assert_eq!(rho.hermiticity_defect(), 0.0);
        prop_assert_eq!(rho.trace(), C64::new(1.0, 0.0));
    }

    #[test]
    fn bloch_margin_agrees_with_eigenvalues(p in (0.0..=1.0f64, 0.0..=1.0f64, 0.0..=1.0f64)) {
        let check = qubit_bloch_check(&QubitProbs::new(p.0, p.1, p.2));
        prop_assert_eq!(check.valid, check.margin <= 0.25);
    }

    #[test]
    fn distribution_main_is_normalised(rest in prop::array::uniform12(0.0..=1.0f64), p in (0.67..=1.0f64, 0.67..=1.0f64, 0.67..=1.0f64)) {
        prop_assume!(p.0 + p.1 + p.2 >= 2.0);
        let mut v = [0.0; 15];
        v[..3].copy_from_slice(&[p.0, p.1, p.2]);
        v[3..].copy_from_slice(&rest);
        let set = distribution_set(&ProbVector15(v)).unwrap();
        prop_assert!((set.main.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        prop_assert!(set.main.iter().all(|&x| x >= 0.0));
        prop_assert!(set.dichotomics.iter().all(|d| d[0] + d[1] == 1.0 && d[0] >= 0.0 && d[1] >= 0.0));
    }
}

#[test]
fn eigensolver_reconstructs_random_hermitian_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2, 3, 4, 8, 16] {
        for _ in 0..50 {
            let m = random::hermitian(&mut rng, n);
            let eig = hermitian_eig(&m, 1e-12).unwrap();
            assert!(eig.reconstruct().max_abs_diff(&m) < 1e-10);
            assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
            let sum: f64 = eig.values.iter().sum();
            assert!((sum - m.trace().re).abs() <= 10.0 * 1e-12 * n as f64);
            let v = &eig.vectors;
            assert!((&v.adjoint() * v).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        }
    }
}

#[test]
fn unitary_exp_is_a_one_parameter_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [2, 4] {
        for _ in 0..100 {
            let h = random::hermitian(&mut rng, n);
            let (s, t) = (rand::Rng::gen_range(&mut rng, -3.0..3.0), rand::Rng::gen_range(&mut rng, -3.0..3.0));
            let us = unitary_exp(&h, s).unwrap();
            let ut = unitary_exp(&h, t).unwrap();
            let ust = unitary_exp(&h, s + t).unwrap();
            assert!((&us * &ut).max_abs_diff(&ust) < 1e-10);
            assert!((&ust * &ust.adjoint()).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        }
    }
}

#[test]
fn rk4_oscillator_converges_at_fourth_order() {
    let lambda = 3.0;
    let t_end = 5.0;
    let error = |steps: usize| {
        let dt = t_end / steps as f64;
        let field = |_: f64, y: &ComplexVector| y.scale(C64::new(0.0, -lambda));
        let mut y = ComplexVector::from_real(&[1.0]);
        for k in 0..steps {
            y = rk4_step(field, &y, k as f64 * dt, dt);
        }
        (y[0] - C64::from_polar(1.0, -lambda * t_end)).norm()
    };
    let errors: Vec<f64> = [100, 200, 400, 800].iter().map(|&n| error(n)).collect();
    for pair in errors.windows(2) {
        let order = (pair[0] / pair[1]).log2();
        assert!(order >= 3.8, "observed order {order} from {errors:?}");
    }
}

#[test]
fn state_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..1000 {
        let rho = random::density(&mut rng, 2);
        let p = qubit_probs_from_density(&rho).unwrap();
        assert!(qubit_bloch_check(&p).valid);
        let back = qubit_density_from_probs(&p).unwrap();
        assert!(back.max_abs_diff(&rho) <= 1e-14);
        let again = qubit_probs_from_density(&back).unwrap();
        assert!(again.0.iter().zip(&p.0).all(|(a, b)| (a - b).abs() <= 1e-15));

        let rho = random::density(&mut rng, 4);
        let p = ququart_probs_from_density(&rho).unwrap();
        let back = ququart_density_from_probs(&p).unwrap();
        assert!(back.max_abs_diff(&rho) <= 1e-14);
        assert!(ququart_probs_from_density(&back).unwrap().max_abs_diff(&p) <= 1e-15);
    }
}
