use num_complex::Complex64;
use qhopf::circle::{
    eval_point, hopf_antipode, hopf_coproduct, hopf_counit, phi_map, w_inverse, w_map, BiLaurent, NumLaurent,
};
use qhopf::glue::chi;
use qhopf::kpair::{index_table, ModuleKind, Representative};
use qhopf::opnum::{
    disc_generator, pi_monomial, shift, toeplitz, trace_finite_rank_default, PiSign, ParamSet, TruncOp,
};
use qhopf::Error;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn bi_eval(f: &BiLaurent<Complex64>, x: Complex64, y: Complex64) -> Complex64 {
    f.terms().map(|((m, n), c)| c * x.powi(m as i32) * y.powi(n as i32)).sum()
}

fn sample() -> NumLaurent {
    NumLaurent::from_terms([(-3, c(0.5)), (0, c(2.0)), (2, Complex64::new(0.0, -1.0)), (5, c(1.5))])
}

#[test]
fn hopf_maps_as_functions_on_the_circle() {
    // Delta f(x, y) = f(xy), kappa f(x) = f(1/x), eps f = f(1).
    let f = sample();
    let (x, y) = (Complex64::from_polar(1.0, 0.7), Complex64::from_polar(1.0, -2.1));
    let delta = hopf_coproduct(&f);
    assert!((bi_eval(&delta, x, y) - eval_point(&f, x * y).unwrap()).norm() < 1e-12);
    let k = hopf_antipode(&f);
    assert!((eval_point(&k, x).unwrap() - eval_point(&f, x.inv()).unwrap()).norm() < 1e-12);
    assert!((hopf_counit(&f) - eval_point(&f, c(1.0)).unwrap()).norm() < 1e-12);
}

#[test]
fn w_as_a_change_of_variables() {
    // W f(x, y) = f(x, xy) and W^-1 f(x, y) = f(x, y/x).
    let f = BiLaurent::from_terms([((1, -2), c(1.0)), ((0, 3), c(-2.0)), ((-4, 1), Complex64::new(0.5, 0.5))]);
    let (x, y) = (Complex64::from_polar(1.0, 1.3), Complex64::from_polar(1.0, 0.4));
    let g = |f: &BiLaurent<Complex64>, x, y| bi_eval(f, x, y);
    assert!((g(&w_map(&f), x, y) - g(&f, x, x * y)).norm() < 1e-12);
    assert!((g(&w_inverse(&f), x, y) - g(&f, x, y / x)).norm() < 1e-12);
    assert_eq!(phi_map(&f), w_map(&f));
}

#[test]
fn eval_point_rejects_points_off_the_circle() {
    assert!(matches!(eval_point(&sample(), c(1.01)), Err(Error::Argument(_))));
}

#[test]
fn disc_generator_weights() {
    let q: f64 = 0.3;
    let z = disc_generator(16, q);
    for n in 0..15 {
        assert!((z.entry(n + 1, n).re - (1.0 - q.powi(n as i32 + 1)).sqrt()).abs() < 1e-15);
    }
    assert_eq!(z.entry(0, 0), c(0.0));
}

#[test]
fn toeplitz_of_u_is_the_shift() {
    let u = NumLaurent::u_pow(1);
    assert_eq!(toeplitz(&u, 10).matrix(), shift(10).matrix());
    let us = toeplitz(&NumLaurent::u_pow(-1), 10);
    let prod = us.mul(&toeplitz(&u, 10)).unwrap();
    // S* S = 1 on the trusted block
    let r = prod.trusted_range();
    for i in r {
        assert_eq!(prod.entry(i, i), c(1.0));
    }
}

#[test]
fn pi_minus_skips_the_origin() {
    let w = 3;
    let plus = pi_monomial(PiSign::Plus, 1, w).unwrap();
    let minus = pi_monomial(PiSign::Minus, 1, w).unwrap();
    // window index of k is k + w
    assert_eq!(plus.entry(w + 1, w), c(1.0));
    assert_eq!(minus.entry(w + 1, w - 1), c(1.0));
    assert_eq!(minus.entry(w + 1, w), c(0.0));
    assert!(matches!(pi_monomial(PiSign::Plus, 4, w), Err(Error::WindowOverflow { power: 4, radius: 3 })));
}

#[test]
fn trace_of_a_rank_one_projection() {
    let mut v = vec![0.0; 12];
    v[2] = 1.0;
    let (t, exact) = trace_finite_rank_default(&TruncOp::diagonal(&v));
    assert_eq!((t, exact), (c(1.0), true));
    // mass at the truncation edge is not certified
    let mut v = vec![0.0; 12];
    v[11] = 1.0;
    assert!(!trace_finite_rank_default(&TruncOp::diagonal(&v)).1);
}

#[test]
fn chi_index_table_shape() {
    let params = ParamSet::default();
    let rows = index_table(-5, 5, &[Representative::Chi], &[ModuleKind::Pr, ModuleKind::PiSigma], &params).unwrap();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r.pass));
    assert!(chi(64, 64).is_err());
}
