use std::f64::consts::PI;

use qspline::bspline::{bspline_hat, integer_samples};
use qspline::fundamental::{coeffs_dft, lq_grid, FilterMethod, LqConfig};
use qspline::sampling::*;
use qspline::{AxialElement, GridFunction, Preset, UniformGrid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_signal(rng: &mut ChaCha8Rng, q: qspline::QuaternionicOrder, k: usize) -> SplineSignal {
    let d = (0..2 * k + 1)
        .map(|_| AxialElement::real(q.axis(), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    SplineSignal::new(q, d).unwrap()
}

#[test]
fn adjacent_ones_give_partition_segment() {
    let q = Preset::Q1.order();
    let s = SplineSignal::new(q, vec![AxialElement::one(q.axis()); 41]).unwrap();
    let f = synthesize(&s, UniformGrid::symmetric(2, 16).unwrap()).unwrap();
    for (_, v) in f.iter() {
        assert!((*v - AxialElement::one(q.axis())).norm() < 1e-6);
    }
}

#[test]
fn synthesis_matches_pointwise_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let q = Preset::Q2.order();
    let s = random_signal(&mut rng, q, 6);
    let f = synthesize(&s, UniformGrid::symmetric(10, 8).unwrap()).unwrap();
    for (t, v) in f.iter().step_by(7) {
        assert!((*v - s.eval(t).unwrap()).norm() < 1e-13);
    }
}

#[test]
fn bspline_from_its_integer_samples() {
    let q = Preset::Q1.order();
    let l = lq_grid(&q, &LqConfig::default()).unwrap();
    let b = integer_samples(&q, 40).unwrap();
    let samples = Sequence::from_symbol(&b);
    let grid = UniformGrid::new(-5.0, 1.0 / 64.0, 641).unwrap();
    let r = reconstruct(&samples, &l, grid, 40).unwrap();
    let s = SplineSignal::new(q, vec![AxialElement::one(q.axis())]).unwrap();
    let direct = synthesize(&s, grid).unwrap();
    assert!(r.max_distance(&direct).unwrap() < 2e-3);
}

#[test]
fn fundamental_spline_reconstructs_itself() {
    let q = Preset::Q2.order();
    let l = lq_grid(&q, &LqConfig::default()).unwrap();
    let delta = Sequence::new(q.axis(), 0, vec![AxialElement::one(q.axis())]);
    let grid = UniformGrid::new(-5.0, 1.0 / 64.0, 641).unwrap();
    let r = reconstruct(&delta, &l, grid, 10).unwrap();
    assert_eq!(r.values(), l.function.window(-5.0, 5.0).unwrap().values());
}

#[test]
fn reconstruction_error_shrinks_as_terms_double() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let q = Preset::Q2.order();
    let l = lq_grid(&q, &LqConfig::default()).unwrap();
    let b = integer_samples(&q, 400).unwrap();
    let s = random_signal(&mut rng, q, 16);
    let grid = UniformGrid::symmetric(40, 64).unwrap();
    let f = synthesize(&s, grid).unwrap();
    let samples = s.integer_samples(&b, -200, 200);
    let errs: Vec<f64> = [16, 32, 64]
        .iter()
        .map(|&n| relative_l2_error(&reconstruct(&samples, &l, grid, n).unwrap(), &f).unwrap())
        .collect();
    assert!(errs[2] < 1e-2, "{errs:?}");
    assert!(
        errs[1] <= 1.1 * errs[0] && errs[2] <= 1.1 * errs[1],
        "{errs:?}"
    );
}

#[test]
fn convolution_identity() {
    // f(m) = (d * b)_m equals the synthesized f at the integers
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = Preset::Q1.order();
    let s = random_signal(&mut rng, q, 4);
    let b = integer_samples(&q, 20).unwrap();
    let f = synthesize(&s, UniformGrid::symmetric(12, 4).unwrap()).unwrap();
    let conv = s.integer_samples(&b, -12, 12);
    for m in -12..=12 {
        assert!((conv.get(m) - f.at(m as f64).unwrap()).norm() < 1e-8);
    }
}

#[test]
fn two_space_round_trip() {
    // d → f(m) = (d * b)_m → (f * c) = d, with c the inverse of b
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let q = Preset::Q1.order();
    let s = random_signal(&mut rng, q, 8);
    let b = integer_samples(&q, 20).unwrap();
    let c = coeffs_dft(&q, 512, FilterMethod::Zeta).unwrap();
    let samples = s.integer_samples(&b, -120, 120);
    let cs = Sequence::new(q.axis(), -256, c.iter().map(|(_, v)| *v).collect());
    let back = samples.convolve(&cs);
    for k in -20..=20 {
        assert!((back.get(k) - s.coeffs.get(k)).norm() < 1e-6, "k = {k}");
    }
}

#[test]
fn plancherel_for_bspline() {
    let q = Preset::Q2.order();
    let s = SplineSignal::new(q, vec![AxialElement::one(q.axis())]).unwrap();
    let f = synthesize(
        &s,
        UniformGrid::new(0.0, 1.0 / 128.0, 200 * 128 + 1).unwrap(),
    )
    .unwrap();
    let (_, time) = l2_pairing(&f, &f).unwrap();
    let h = 1e-3;
    let n = 400_000;
    let mut freq = 0.0;
    for i in -n..=n {
        freq += bspline_hat(&q, i as f64 * h)
            .unwrap()
            .to_complex_quaternion()
            .norm_sqr();
    }
    freq *= h / (2.0 * PI);
    assert!((time - freq).abs() < 1e-3, "{time} vs {freq}");
}

#[test]
fn frame_bounds_are_ordered() {
    for q in [Preset::Q1.order(), Preset::Q2.order()] {
        let b = frame_bounds(&q, 1024, 64).unwrap();
        assert!(b.lower > 0.0 && b.lower <= b.upper && b.upper.is_finite());
    }
}

#[test]
fn pairing_of_zero_function() {
    let g = UniformGrid::symmetric(2, 4).unwrap();
    let z = GridFunction::from_fn(g, qspline::Axis::CANONICAL, |_| {
        Ok(AxialElement::zero(qspline::Axis::CANONICAL))
    })
    .unwrap();
    assert_eq!(l2_pairing(&z, &z).unwrap().1, 0.0);
}
