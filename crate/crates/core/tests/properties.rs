use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qhopf::circle::{w_inverse, w_map, BiLaurentPoly, NumLaurent};
use qhopf::cli::suites::{random_poly, random_word, truncation_stable};
use qhopf::glue::{chi, coinvariant_pair, en_numeric, iota};
use qhopf::kpair::{pair, FredholmModule, PairMatrix};
use qhopf::opnum::{disc_rep, pi_rep, trusted_diff_norm, trusted_eigenvalues, ParamSet, PiSign};
use qhopf::symalg::{
    build_en, circle_algebra, gaussian_binomial, normal_form, normal_form_with, presets, quantum_disc,
    quantum_sphere_s2, quantum_sphere_s3, quantum_su2, CoefPoly, NCPoly, Param, Presentation, ReduceOptions,
    ReductionOrder,
};

fn preset(i: usize) -> Presentation {
    [quantum_disc, quantum_sphere_s3, quantum_sphere_s2, quantum_su2, circle_algebra][i % 5]()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn reduction_order_does_not_matter(which in 0usize..5, seed in any::<u64>(), order_seed in any::<u64>()) {
        let p = preset(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&p, 3, 7, &mut rng);
        let opts = ReduceOptions { order: ReductionOrder::Random(order_seed), ..Default::default() };
        prop_assert_eq!(normal_form(&x, &p).unwrap(), normal_form_with(&x, &p, &opts).unwrap());
    }

    #[test]
    fn involution_commutes_with_reduction(which in 0usize..5, seed in any::<u64>()) {
        let p = preset(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&p, 3, 6, &mut rng);
        let direct = normal_form(&p.adjoint(&x), &p).unwrap();
        let via_nf = normal_form(&p.adjoint(&normal_form(&x, &p).unwrap()), &p).unwrap();
        prop_assert_eq!(direct, via_nf);
    }

    #[test]
    fn reduction_is_multiplicative(which in 0usize..5, seed in any::<u64>()) {
        let p = preset(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&p, 2, 4, &mut rng);
        let y = random_poly(&p, 2, 4, &mut rng);
        let lhs = normal_form(&(&x * &y), &p).unwrap();
        let rhs = normal_form(&(&normal_form(&x, &p).unwrap() * &normal_form(&y, &p).unwrap()), &p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_preserves_degree(which in 0usize..5, seed in any::<u64>()) {
        let p = preset(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_word(&p, 8, &mut rng);
        let deg = p.word_weight(&w);
        let nf = normal_form(&NCPoly::word(w), &p).unwrap();
        prop_assert!(nf.terms().all(|(v, _)| p.word_weight(v) == deg));
    }

    #[test]
    fn normal_forms_are_reduced(which in 0usize..5, seed in any::<u64>()) {
        let p = preset(which);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nf = normal_form(&random_poly(&p, 3, 6, &mut rng), &p).unwrap();
        prop_assert!(nf.terms().all(|(w, _)| qhopf::symalg::is_reduced(w, &p)));
    }

    #[test]
    fn gaussian_symmetry_and_count(n in 0u32..12, k in 0u32..12) {
        prop_assume!(k <= n);
        let g = gaussian_binomial(n, k, Param::Q).unwrap();
        prop_assert_eq!(&g, &gaussian_binomial(n, n - k, Param::Q).unwrap());
        let at_one = g.eval(1.0, 1.0, 1.0);
        prop_assert_eq!(at_one as u64, binomial(n as u64, k as u64));
    }

    #[test]
    fn disc_representation_respects_relations(seed in any::<u64>(), q in 0.05f64..0.95) {
        let dq = quantum_disc();
        let params = ParamSet { q, d: 48, ..ParamSet::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&dq, 3, 6, &mut rng);
        let nf = normal_form(&x, &dq).unwrap();
        let r = trusted_diff_norm(&disc_rep(&x, &params).unwrap(), &disc_rep(&nf, &params).unwrap()).unwrap();
        prop_assert!(r < 1e-10, "residual {r:e}");
    }

    #[test]
    fn truncation_is_stable_under_doubling(seed in any::<u64>(), d in 16usize..128) {
        let dq = quantum_disc();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = NCPoly::word(random_word(&dq, 8, &mut rng));
        let params = ParamSet { d, ..ParamSet::default() };
        let small = disc_rep(&x, &params).unwrap();
        let large = disc_rep(&x, &params.with_dim(2 * d)).unwrap();
        prop_assert!(truncation_stable(&small, &large));
    }

    #[test]
    fn pi_representations_are_multiplicative(
        f in prop::collection::vec((-3i64..=3, -2.0f64..2.0), 1..4),
        g in prop::collection::vec((-3i64..=3, -2.0f64..2.0), 1..4),
        minus in any::<bool>(),
    ) {
        let to_poly = |v: &[(i64, f64)]| NumLaurent::from_terms(v.iter().map(|&(n, c)| (n, Complex64::new(c, 0.0))));
        let (f, g) = (to_poly(&f), to_poly(&g));
        let sign = if minus { PiSign::Minus } else { PiSign::Plus };
        let w = 10;
        let lhs = pi_rep(sign, &f.mul(&g), w).unwrap();
        let rhs = pi_rep(sign, &f, w).unwrap().mul(&pi_rep(sign, &g, w).unwrap()).unwrap();
        prop_assert!(trusted_diff_norm(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn disc_powers_are_bounded_below(n in 1u32..6, q in 0.05f64..0.95) {
        let dq = quantum_disc();
        let params = ParamSet { q, d: 40, ..ParamSet::default() };
        let x = &dq.gen("z*").pow(n) * &dq.gen("z").pow(n);
        let min = trusted_eigenvalues(&disc_rep(&x, &params).unwrap())[0];
        let bound: f64 = (1..=n as i32).map(|k| 1.0 - q.powi(k)).product();
        prop_assert!(min >= bound - 1e-12, "{min} < {bound}");
    }

    #[test]
    fn iota_preserves_the_involution(seed in any::<u64>(), q in 0.1f64..0.9, p in 0.1f64..0.9) {
        let s3 = quantum_sphere_s3();
        let params = ParamSet { q, p, d: 32, ..ParamSet::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&s3, 3, 4, &mut rng);
        let r = iota(&s3.adjoint(&x), &params).unwrap().diff_norm(&iota(&x, &params).unwrap().adjoint()).unwrap();
        prop_assert!(r < 1e-12);
    }

    #[test]
    fn w_map_is_invertible(terms in prop::collection::vec(((-20i64..20, -20i64..20), -9i64..9), 0..8)) {
        let f = BiLaurentPoly::from_terms(terms.into_iter().map(|(k, c)| (k, CoefPoly::integer(c))));
        prop_assert_eq!(w_inverse(&w_map(&f)), f.clone());
        prop_assert_eq!(w_map(&w_inverse(&f)), f);
    }

    #[test]
    fn chi_pairing_is_independent_of_d(n in -6i64..=6, d in 16usize..96) {
        let params = ParamSet { d, ..ParamSet::default() };
        let m = PairMatrix::single(chi(n, d).unwrap());
        let v = pair(&FredholmModule::pr_pair(params), &m).unwrap();
        prop_assert!(v.exact);
        prop_assert_eq!(v.rounded, n);
        prop_assert_eq!(v.residual, 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    #[test]
    fn en_pairs_match_normal_forms(n in -2i64..=2, q in 0.2f64..0.8, p in 0.2f64..0.8) {
        let params = ParamSet { q, p, d: 32, ..ParamSet::default() };
        let en = en_numeric(n, &params).unwrap();
        let data = build_en(n).unwrap();
        for i in 0..en.size {
            for j in 0..en.size {
                let raw = data.x.get(i, 0) * data.y.get(j, 0);
                let r = coinvariant_pair(&raw, &params).unwrap().diff_norm(en.entry(i, j)).unwrap();
                prop_assert!(r < 1e-10, "entry ({i},{j}) residual {r:e}");
            }
        }
        prop_assert!(en.idempotent_residual().unwrap() < 1e-10);
    }
}

#[test]
fn presets_have_five_members() {
    assert_eq!(presets().len(), 5);
}
