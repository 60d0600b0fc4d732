//! Acceptance criteria, one line each.
//!
//! Criteria listed in `KNOWN_FAILURES` are still run and still print FAIL;
//! they only stop the process from exiting nonzero. If one of them starts
//! passing, that is reported as an error so the list gets updated.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qhopf::circle::{
    counit_left, counit_right, hopf_antipode, hopf_coproduct, hopf_counit, iterated_coproducts, tensor_map,
    w_inverse, w_map, BiLaurentPoly, LaurentPoly,
};
use qhopf::cli::suites::{random_word, s2_images, truncation_stable};
use qhopf::glue::{coinvariant_pair, en_numeric, iota, podles_generators, podles_residuals, chi, FibrePair};
use qhopf::kpair::{pair, FredholmModule, PairMatrix};
use qhopf::opnum::{disc_rep, trusted_diff_norm, ParamSet, TruncOp};
use qhopf::symalg::{
    build_en, build_en_with, circle_algebra, normal_form, normal_form_with, podles_relation_defects,
    quantum_disc, quantum_sphere_s2, quantum_sphere_s3, quantum_su2, CoefPoly, NCPoly, ReduceOptions,
    ReductionOrder, YAssignment, EN_CAP,
};

/// `<pr, E_N>` evaluates to `-N`: the class of `E_N` equals that of `chi_(-N)`
/// under the orientation that makes `<pr, chi_N> = N`.
const KNOWN_FAILURES: &[u32] = &[2];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn params() -> ParamSet {
    ParamSet { d: 64, w: 8, ..ParamSet::default() }
}

fn one_minus(x: CoefPoly) -> CoefPoly {
    &CoefPoly::one() - &x
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = params();
    let pr = FredholmModule::pr_pair(p);
    let pi = FredholmModule::pi_sigma_pair(p);
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for n in -5..=5 {
        let m = PairMatrix::single(chi(n, p.d).unwrap());
        let a = pair(&pr, &m).unwrap();
        let b = pair(&pi, &m).unwrap();
        ok &= a.exact && b.exact && a.rounded == n && b.rounded == 1;
        ok &= a.residual <= 1e-12 && b.residual <= 1e-12;
        worst = worst.max(a.residual).max(b.residual);
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        id: 1,
        title: "<pr, chi_N> = N and <pi, chi_N> = 1 exactly, |N| <= 5, under 5 s",
        pass: ok && secs < 5.0,
        detail: format!("max residual {worst:.1e}, {secs:.2} s"),
    }
}

fn criterion_2() -> Outcome {
    let base = ParamSet { q: 0.5, p: 0.5, ..params() };
    let mut ok = true;
    let mut parts = Vec::new();
    for n in -3i64..=3 {
        let value = |d: usize| {
            let p = base.with_dim(d);
            let m: PairMatrix = en_numeric(n, &p).unwrap().into();
            pair(&FredholmModule::pr_pair(p), &m).unwrap().value.re
        };
        let (v64, v128) = (value(64), value(128));
        let (r64, r128) = ((v64 - n as f64).abs(), (v128 - n as f64).abs());
        ok &= r64 < 1e-6 && r128 <= r64 / 10.0;
        parts.push(format!("N={n}: {v64:.3}"));
    }
    Outcome {
        id: 2,
        title: "<pr, E_N> within 1e-6 of N at d=64, residual shrinks 10x at d=128, |N| <= 3",
        pass: ok,
        detail: parts.join(", "),
    }
}

fn criterion_3() -> Outcome {
    let s3 = quantum_sphere_s3();
    let mut ok = true;
    for n in -3..=3 {
        let data = build_en(n).unwrap();
        ok &= data.y_transpose_x().unwrap() == NCPoly::one();
        ok &= data.idempotency_defect().unwrap().is_zero();
    }
    let literal = build_en_with(1, YAssignment::Literal, EN_CAP).unwrap();
    let witness = normal_form(&(&literal.y_transpose_x().unwrap() - &NCPoly::one()), &s3).unwrap();
    let bb = &s3.gen("b") * &s3.gen("b*");
    let target = normal_form(&(&NCPoly::one() - &bb).scale(&(&CoefPoly::q() - &CoefPoly::p())), &s3).unwrap();
    let proportional = witness == target || witness == -&target;
    Outcome {
        id: 3,
        title: "Y^T X = 1 and E^2 = E for |N| <= 3; literal placement fails at N=1",
        pass: ok && proportional && !witness.is_zero(),
        detail: format!("literal witness {}", s3.format(&witness)),
    }
}

fn s3_relations() -> Vec<NCPoly> {
    let s3 = quantum_sphere_s3();
    let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
    let (q, p) = (CoefPoly::q(), CoefPoly::p());
    let one = NCPoly::one();
    vec![
        &(&(&a_s * &a) - &(&a * &a_s).scale(&q)) - &NCPoly::constant(one_minus(q)),
        &(&(&b_s * &b) - &(&b * &b_s).scale(&p)) - &NCPoly::constant(one_minus(p)),
        &(&a * &b) - &(&b * &a),
        &(&a * &b_s) - &(&b_s * &a),
        &(&one - &(&a * &a_s)) * &(&one - &(&b * &b_s)),
    ]
}

fn criterion_4() -> Outcome {
    let dq = quantum_disc();
    let (z, zs) = (dq.gen("z"), dq.gen("z*"));
    let disc_rel = &(&(&zs * &z) - &(&z * &zs).scale(&CoefPoly::q())) - &NCPoly::constant(one_minus(CoefPoly::q()));
    let s3 = quantum_sphere_s3();
    let s2 = quantum_sphere_s2();
    let images = s2_images(&s3, &s2);
    let s2_rels: Vec<NCPoly> = s2
        .rules()
        .iter()
        .map(|r| (&NCPoly::word(r.lhs.clone()) - &r.rhs).substitute(&images))
        .collect();
    let mut worst: f64 = 0.0;
    for q in [0.4, 0.6] {
        for p in [0.4, 0.6] {
            for s in [0.3, 1.0] {
                let params = ParamSet { q, p, s, ..params() };
                let d = params.d;
                worst = worst.max(trusted_diff_norm(&disc_rep(&disc_rel, &params).unwrap(), &TruncOp::zero(d)).unwrap());
                let zero = iota(&NCPoly::zero(), &params).unwrap();
                for rel in s3_relations() {
                    worst = worst.max(iota(&rel, &params).unwrap().diff_norm(&zero).unwrap());
                }
                for rel in &s2_rels {
                    let pair = coinvariant_pair(rel, &params).unwrap();
                    worst = worst.max(pair.diff_norm(&FibrePair::zero(d, 0)).unwrap());
                }
                let pp = podles_generators(&params).unwrap();
                for (_, r) in podles_residuals(&pp, &params).unwrap() {
                    worst = worst.max(r);
                }
            }
        }
    }
    Outcome {
        id: 4,
        title: "disc, three-sphere, two-sphere and Podles residuals < 1e-10 on the (q,p,s) grid",
        pass: worst < 1e-10,
        detail: format!("max residual {worst:.1e}"),
    }
}

fn criterion_5() -> Outcome {
    let defects = podles_relation_defects().unwrap();
    let su2 = quantum_su2();
    let nonzero: Vec<String> = defects
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(n, x)| format!("{n}: {}", su2.format(x)))
        .collect();
    Outcome {
        id: 5,
        title: "Podles relations reduce to 0 in SU_q(2)",
        pass: defects.len() >= 3 && nonzero.is_empty(),
        detail: format!("{} relations checked", defects.len()),
    }
}

fn criterion_6() -> Outcome {
    let p = params();
    let dq = quantum_disc();
    let (z, zs) = (dq.gen("z"), dq.gen("z*"));
    let mut worst: f64 = 0.0;
    for n in 1..=5u32 {
        let rep = disc_rep(&(&zs.pow(n) * &z.pow(n)), &p).unwrap();
        let diag: Vec<f64> = (0..p.d)
            .map(|m| (1..=n as i32).map(|k| 1.0 - p.q.powi(k) * p.q.powi(m as i32)).product())
            .collect();
        worst = worst.max(trusted_diff_norm(&rep, &TruncOp::diagonal(&diag)).unwrap());
    }
    Outcome {
        id: 6,
        title: "z*^N z^N = prod (1 - q^k t) to 1e-12, N <= 5",
        pass: worst < 1e-12,
        detail: format!("max residual {worst:.1e}"),
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();

    for pres in [quantum_disc(), quantum_sphere_s3(), quantum_sphere_s2(), quantum_su2(), circle_algebra()] {
        let mut agree = 0;
        for i in 0..1000u64 {
            let x = NCPoly::word(random_word(&pres, 8, &mut rng));
            let a = normal_form(&x, &pres).unwrap();
            let opts = ReduceOptions { order: ReductionOrder::Random(i), ..Default::default() };
            agree += (normal_form_with(&x, &pres, &opts).unwrap() == a) as usize;
        }
        if agree != 1000 {
            failures.push(format!("confluence {}: {agree}/1000", pres.name()));
        }
    }

    for n in -10..=10 {
        let f = LaurentPoly::u_pow(n);
        let delta = hopf_coproduct(&f);
        let (l, r) = iterated_coproducts(&f);
        let unit = LaurentPoly::constant(hopf_counit(&f));
        let ok = l == r
            && counit_left(&delta) == f
            && counit_right(&delta) == f
            && tensor_map(&delta, hopf_antipode, |x| x.clone()).multiply_legs() == unit
            && tensor_map(&delta, |x| x.clone(), hopf_antipode).multiply_legs() == unit;
        if !ok {
            failures.push(format!("Hopf axioms at U^{n}"));
        }
    }

    for _ in 0..100 {
        let f = BiLaurentPoly::from_terms((0..6).map(|_| {
            ((rng.gen_range(-8..=8), rng.gen_range(-8..=8)), CoefPoly::integer(rng.gen_range(-9..=9)))
        }));
        if w_inverse(&w_map(&f)) != f || w_map(&w_inverse(&f)) != f {
            failures.push("W bijectivity".into());
            break;
        }
    }

    let p = params();
    let dq = quantum_disc();
    for _ in 0..20 {
        let x = NCPoly::word(random_word(&dq, 6, &mut rng));
        let small = disc_rep(&x, &p).unwrap();
        let large = disc_rep(&x, &p.with_dim(2 * p.d)).unwrap();
        if !truncation_stable(&small, &large) {
            failures.push(format!("truncation stability of {}", dq.format(&x)));
        }
    }

    Outcome {
        id: 7,
        title: "confluence x5 presentations, Hopf axioms |N| <= 10, W bijective, (d, 2d) stability",
        pass: failures.is_empty(),
        detail: if failures.is_empty() { "all properties hold".into() } else { failures.join("; ") },
    }
}

fn main() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ];
    let mut unexpected = 0;
    for o in &outcomes {
        let known = KNOWN_FAILURES.contains(&o.id);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = match (o.pass, known) {
            (false, true) => " [known failure]",
            (true, true) => " [listed as known failure but passed]",
            _ => "",
        };
        println!("{tag} {}: {} ({}){note}", o.id, o.title, o.detail);
        if o.pass == known {
            unexpected += 1;
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("{passed}/{} criteria pass", outcomes.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
