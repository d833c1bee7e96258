use approx::assert_abs_diff_eq;
use monogamy::gallery;
use monogamy::qcore::{
    haar_random_pure, linear_entropy, partial_trace, partial_transpose, schmidt_rank, spin_flip,
    to_density, CMatrix, DensityMatrix, PureState, SubsystemSet, C64,
};
use proptest::prelude::*;

fn set(q: &[usize]) -> SubsystemSet {
    SubsystemSet::new(q.iter().copied()).unwrap()
}

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn bell() -> PureState {
    let a = c(std::f64::consts::FRAC_1_SQRT_2);
    PureState::new(vec![a, c(0.0), c(0.0), a]).unwrap()
}

fn min_eig(m: &CMatrix) -> f64 {
    m.clone().symmetric_eigen().eigenvalues.min()
}

#[test]
fn density_of_examples() {
    let zero = PureState::basis(&[0]).unwrap();
    let rho = to_density(&zero);
    assert_eq!(rho.matrix()[(0, 0)], c(1.0));
    assert_eq!(rho.matrix()[(1, 1)], c(0.0));

    let rho = to_density(&bell());
    let nonzero = rho.matrix().iter().filter(|z| z.norm() > 1e-12).count();
    assert_eq!(nonzero, 4);
    assert_abs_diff_eq!(rho.matrix()[(0, 3)].re, 0.5, epsilon = 1e-15);

    let psi = gallery::gsd3(gallery::gsd3_default(), 0.0).unwrap();
    let rho = to_density(&psi);
    assert_eq!(rho.dim(), 8);
    let ranks = rho.eigenvalues().iter().filter(|&&v| v > 1e-10).count();
    assert_eq!(ranks, 1);
    assert_abs_diff_eq!(rho.matrix().trace().re, 1.0, epsilon = 1e-12);
}

#[test]
fn partial_trace_examples() {
    let r = partial_trace(&to_density(&bell()), &set(&[0])).unwrap();
    assert_abs_diff_eq!(r.matrix()[(0, 0)].re, 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(r.matrix()[(0, 1)].norm(), 0.0, epsilon = 1e-15);

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let product = PureState::new(vec![c(h), c(h), c(0.0), c(0.0)]).unwrap();
    let r = partial_trace(&to_density(&product), &set(&[1])).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_abs_diff_eq!(r.matrix()[(i, j)].re, 0.5, epsilon = 1e-15);
        }
    }

    let r = partial_trace(&to_density(&gallery::fig3()), &set(&[0, 1])).unwrap();
    let want = [2.0 / 3.0, 0.0, 1.0 / 3.0, 0.0];
    for (i, w) in want.iter().enumerate() {
        assert_abs_diff_eq!(r.matrix()[(i, i)].re, *w, epsilon = 1e-12);
    }
    assert!(r.matrix().iter().enumerate().all(|(k, z)| k % 5 == 0 || z.norm() < 1e-12));

    let rho = to_density(&bell());
    assert!(partial_trace(&rho, &set(&[2])).is_err());
    assert!(partial_trace(&rho, &set(&[0, 1])).is_err());
}

#[test]
fn partial_transpose_examples() {
    let mut m = CMatrix::zeros(4, 4);
    for (i, v) in [0.1, 0.2, 0.3, 0.4].iter().enumerate() {
        m[(i, i)] = c(*v);
    }
    let rho = DensityMatrix::new(m.clone()).unwrap();
    assert_eq!(partial_transpose(&rho, &set(&[0])).unwrap(), m);

    let pt = partial_transpose(&to_density(&bell()), &set(&[0])).unwrap();
    assert_abs_diff_eq!(min_eig(&pt), -0.5, epsilon = 1e-12);
    assert!(partial_transpose(&to_density(&bell()), &set(&[4])).is_err());
}

#[test]
fn linear_entropy_examples() {
    assert_abs_diff_eq!(linear_entropy(&to_density(&bell())), 0.0, epsilon = 1e-14);
    assert_abs_diff_eq!(linear_entropy(&DensityMatrix::maximally_mixed(1)), 0.5, epsilon = 1e-15);
    let mut m = CMatrix::zeros(2, 2);
    m[(0, 0)] = c(2.0 / 3.0);
    m[(1, 1)] = c(1.0 / 3.0);
    assert_abs_diff_eq!(linear_entropy(&DensityMatrix::new(m).unwrap()), 4.0 / 9.0, epsilon = 1e-15);
}

#[test]
fn spin_flip_examples() {
    let rho = to_density(&bell());
    let f = spin_flip(&rho).unwrap();
    assert!((&f - rho.matrix()).norm() < 1e-12);

    let mixed = DensityMatrix::maximally_mixed(2);
    assert!((spin_flip(&mixed).unwrap() - mixed.matrix()).norm() < 1e-12);

    let f = spin_flip(&to_density(&PureState::basis(&[0, 0]).unwrap())).unwrap();
    assert_abs_diff_eq!(f[(3, 3)].re, 1.0, epsilon = 1e-15);
    assert_abs_diff_eq!(f.norm(), 1.0, epsilon = 1e-15);

    assert!(spin_flip(&DensityMatrix::maximally_mixed(1)).is_err());
}

#[test]
fn schmidt_rank_examples() {
    let product = PureState::basis(&[0, 1, 0]).unwrap();
    assert_eq!(schmidt_rank(&product, &set(&[0])).unwrap(), 1);
    assert_eq!(schmidt_rank(&bell(), &set(&[0])).unwrap(), 2);
    assert_eq!(schmidt_rank(&gallery::fig3(), &set(&[0, 1])).unwrap(), 2);
    assert!(schmidt_rank(&bell(), &set(&[0, 1])).is_err());
}

fn random_split(n: usize, pick: u32) -> (Vec<usize>, Vec<usize>) {
    (0..n).partition(|&q| pick & (1 << q) != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_trace_composes(seed in any::<u64>(), n in 3usize..=5, pick in 1u32..31) {
        let psi = haar_random_pure(n, seed).unwrap();
        let rho = to_density(&psi);
        let (keep1, _) = random_split(n, pick % ((1 << n) - 1));
        prop_assume!(keep1.len() >= 2);
        let inner = vec![keep1[0]];
        let step1 = partial_trace(&rho, &set(&keep1)).unwrap();
        // Position of `inner` inside the kept register.
        let two_step = partial_trace(&step1, &set(&[0])).unwrap();
        let direct = partial_trace(&rho, &set(&inner)).unwrap();
        prop_assert!((two_step.matrix() - direct.matrix()).norm() < 1e-10);
    }

    #[test]
    fn partial_transpose_is_involutive(seed in any::<u64>(), n in 2usize..=4, pick in 1u32..15) {
        let rho = to_density(&haar_random_pure(n, seed).unwrap());
        let (part, _) = random_split(n, pick & ((1 << n) - 1));
        prop_assume!(!part.is_empty());
        let pt = partial_transpose(&rho, &set(&part)).unwrap();
        prop_assert!((pt.adjoint() - &pt).norm() < 1e-12);
        prop_assert!((pt.trace() - c(1.0)).norm() < 1e-12);
        let back = monogamy::qcore::partial_transpose_matrix(&pt, n, &set(&part)).unwrap();
        prop_assert!((back - rho.matrix()).norm() < 1e-14);
    }

    #[test]
    fn pure_states_have_zero_linear_entropy(seed in any::<u64>(), n in 1usize..=5) {
        let rho = to_density(&haar_random_pure(n, seed).unwrap());
        prop_assert!(linear_entropy(&rho).abs() < 1e-10);
    }

    #[test]
    fn linear_entropy_triangle(seed in any::<u64>(), n in 3usize..=4) {
        let rho = to_density(&haar_random_pure(n, seed).unwrap());
        let t = |keep: &[usize]| linear_entropy(&partial_trace(&rho, &set(keep)).unwrap());
        let (ta, tb, tab) = (t(&[0]), t(&[1]), t(&[0, 1]));
        prop_assert!((ta - tb).abs() <= tab + 1e-10);
        prop_assert!(tab <= ta + tb + 1e-10);
    }

    #[test]
    fn spin_flip_is_psd(seed in any::<u64>(), n in 2usize..=4) {
        let rho = to_density(&haar_random_pure(n, seed).unwrap());
        let pair = if n == 2 { rho } else { partial_trace(&rho, &set(&[0, n - 1])).unwrap() };
        prop_assert!(min_eig(&spin_flip(&pair).unwrap()) >= -1e-9);
    }
}
