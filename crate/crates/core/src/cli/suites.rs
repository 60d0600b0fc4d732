//! The verification suites. Each returns its records in a fixed order.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::report::{fmt_f64, Record, Status};
use crate::circle::{
    counit_left, counit_right, eval_point, hopf_antipode, hopf_coproduct, hopf_counit,
    iterated_coproducts, phi_map, tensor_map, w_inverse, w_map, BiLaurentPoly, LaurentPoly, NumLaurent,
};
use crate::error::Result;
use crate::glue::{
    chi, coinvariant_pair, en_numeric, extract_degree, iota, make_fibre_pair, podles_generators,
    podles_residuals, psi_inverse, psi_iso, FibrePair,
};
use crate::kpair::{
    boundary_projection, index_table, pair, random_unitary_pair, FredholmModule, ModuleKind, PairMatrix,
    Representative, EN_INDEX_CAP,
};
use crate::opnum::{disc_rep, trusted_eigenvalues, trusted_diff_norm, ParamSet, TruncOp, MAX_DIM};
use crate::symalg::{
    build_en, build_en_with, circle_algebra, normal_form, normal_form_with, podles_relation_defects,
    quantum_disc, quantum_sphere_s2, quantum_sphere_s3, quantum_su2, CoefPoly, Letter, NCPoly,
    Presentation, ReduceOptions, ReductionOrder, Word, YAssignment, EN_CAP,
};

/// Inputs shared by every suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteContext {
    pub params: ParamSet,
    pub nmax: i64,
    pub seed: u64,
}

pub type SuiteFn = fn(&SuiteContext) -> Vec<Record>;

/// Registry order is report order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("disc", disc),
    ("s3", s3),
    ("s2", s2),
    ("su2", su2),
    ("podles", podles),
    ("hopf", hopf),
    ("en-symbolic", en_symbolic),
    ("en-numeric", en_numeric_suite),
    ("chi", chi_suite),
    ("index", index),
    ("convergence", convergence),
    ("confluence", confluence),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn lookup(name: &str) -> Option<SuiteFn> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
}

/// Truncation-stability and factorization checks compare to this, not to `tol`.
const MACHINE_TOL: f64 = 1e-12;
/// Closeness of a pairing value with `E_N` to its integer.
const EN_PAIR_TOL: f64 = 1e-6;
/// Random samples per presentation in the confluence suite.
const CONFLUENCE_WORDS: usize = 1000;
const CONFLUENCE_MAX_LEN: usize = 8;
const HOPF_RANGE: i64 = 10;
const W_SAMPLES: usize = 100;

fn rng_for(ctx: &SuiteContext, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    rng.set_stream(stream);
    rng
}

/// Runs a fallible check; an error becomes a failed record.
fn check(suite: &str, name: &str, anchor: &str, f: impl FnOnce(Record) -> Result<Record>) -> Record {
    match f(Record::new(suite, name, anchor)) {
        Ok(r) => r,
        Err(e) => Record::error(suite, name, anchor, &e),
    }
}

fn c(x: CoefPoly) -> NCPoly {
    NCPoly::constant(x)
}

fn one_minus(x: CoefPoly) -> CoefPoly {
    &CoefPoly::one() - &x
}

/// A random word of length `1..=max_len`.
pub fn random_word(p: &Presentation, max_len: usize, rng: &mut impl Rng) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word((0..len).map(|_| Letter(rng.gen_range(0..p.num_generators()) as u8)).collect())
}

/// A sum of up to `terms` random words with small nonzero integer coefficients.
pub fn random_poly(p: &Presentation, terms: usize, max_len: usize, rng: &mut impl Rng) -> NCPoly {
    let mut x = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        x.add_term(random_word(p, max_len, rng), CoefPoly::integer(k));
    }
    x
}

fn random_laurent(rng: &mut impl Rng, terms: usize, range: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..terms).map(|_| (rng.gen_range(-range..=range), CoefPoly::integer(rng.gen_range(-5..=5)))))
}

fn random_bilaurent(rng: &mut impl Rng, terms: usize, range: i64) -> BiLaurentPoly {
    BiLaurentPoly::from_terms((0..terms).map(|_| {
        (
            (rng.gen_range(-range..=range), rng.gen_range(-range..=range)),
            CoefPoly::integer(rng.gen_range(-5..=5)),
        )
    }))
}

// ---------------------------------------------------------------- disc

fn disc(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "disc";
    let params = ctx.params;
    let dq = quantum_disc();
    let (z, zs) = (dq.gen("z"), dq.gen("z*"));
    let q = CoefPoly::q();
    let relation = &(&(&zs * &z) - &(&z * &zs).scale(&q)) - &c(one_minus(q.clone()));
    let mut out = Vec::new();

    out.push(check(S, "normal form of z*z", "z*z - q zz* = 1 - q", |r| {
        let nf = normal_form(&(&zs * &z), &dq)?;
        let expected = &(&z * &zs).scale(&q) + &c(one_minus(q.clone()));
        Ok(r.equal(dq.format(&nf), dq.format(&expected)))
    }));

    out.push(check(S, "relation residual in the shift representation", "z*z - q zz* = 1 - q", |r| {
        let rep = disc_rep(&relation, &params)?;
        Ok(r.residual(trusted_diff_norm(&rep, &TruncOp::zero(params.d))?, params.tol))
    }));

    let t: Vec<f64> = (0..params.d).map(|n| params.q.powi(n as i32)).collect();
    out.push(check(S, "1 - zz* = t", "1 - zz* = diag(q^n)", |r| {
        let rep = disc_rep(&(&NCPoly::one() - &(&z * &zs)), &params)?;
        Ok(r.residual(trusted_diff_norm(&rep, &TruncOp::diagonal(&t))?, params.tol))
    }));

    for n in 1..=5u32 {
        let x = &zs.pow(n) * &z.pow(n);
        let prod: Vec<f64> = t.iter().map(|tn| (1..=n as i32).map(|k| 1.0 - params.q.powi(k) * tn).product()).collect();
        let anchor = "z*^N z^N = prod_{k=1..N} (1 - q^k t)";
        out.push(check(S, &format!("factorization N={n}"), anchor, |r| {
            let rep = disc_rep(&x, &params)?;
            Ok(r.residual(trusted_diff_norm(&rep, &TruncOp::diagonal(&prod))?, MACHINE_TOL))
        }));
        out.push(check(S, &format!("positivity N={n}"), "spectrum of z*^N z^N >= prod_{k=1..N} (1 - q^k)", |r| {
            let rep = disc_rep(&x, &params)?;
            let min = trusted_eigenvalues(&rep).first().copied().unwrap_or(f64::INFINITY);
            let bound: f64 = (1..=n as i32).map(|k| 1.0 - params.q.powi(k)).product();
            Ok(r.holds(min >= bound - MACHINE_TOL).with_value(fmt_f64(min), format!(">= {}", fmt_f64(bound))))
        }));
    }

    let words: [&[&str]; 4] = [&["z*", "z"], &["z", "z", "z*", "z*", "z*", "z"], &["z*", "z", "z*", "z", "z"], &["z*", "z*", "z", "z"]];
    for w in words {
        let name = format!("truncation stability of {}", w.join(" "));
        out.push(check(S, &name, "top-left trusted block is independent of d", |r| {
            if 2 * params.d > MAX_DIM {
                return Ok(r.with_value("skipped", "2d <= MAX_DIM").with_status(Status::Warn));
            }
            let x = NCPoly::word(dq.word(w)?);
            Ok(r.holds(truncation_stable(&disc_rep(&x, &params)?, &disc_rep(&x, &params.with_dim(2 * params.d))?)))
        }));
    }

    let mut rng = rng_for(ctx, 1);
    let samples: Vec<NCPoly> = (0..20).map(|_| random_poly(&dq, 4, 6, &mut rng)).collect();
    out.push(check(S, "representation of normal forms", "rep(x) = rep(normal_form(x))", |r| {
        let mut worst: f64 = 0.0;
        for x in &samples {
            let nf = normal_form(x, &dq)?;
            worst = worst.max(trusted_diff_norm(&disc_rep(x, &params)?, &disc_rep(&nf, &params)?)?);
        }
        Ok(r.residual(worst, params.tol))
    }));
    out
}

/// Exact equality of the trusted block of `small` with the same corner of `large`.
pub fn truncation_stable(small: &TruncOp, large: &TruncOp) -> bool {
    let r = small.trusted_range();
    let len = r.len();
    small.matrix().view((r.start, r.start), (len, len)) == large.matrix().view((r.start, r.start), (len, len))
}

// ---------------------------------------------------------------- s3

fn s3_relations(s3: &Presentation) -> Vec<(&'static str, NCPoly)> {
    let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
    let (q, p) = (CoefPoly::q(), CoefPoly::p());
    let one = NCPoly::one();
    vec![
        ("a*a - q aa* = 1 - q", &(&(&a_s * &a) - &(&a * &a_s).scale(&q)) - &c(one_minus(q.clone()))),
        ("b*b - p bb* = 1 - p", &(&(&b_s * &b) - &(&b * &b_s).scale(&p)) - &c(one_minus(p.clone()))),
        ("ab = ba", &(&a * &b) - &(&b * &a)),
        ("ab* = b*a", &(&a * &b_s) - &(&b_s * &a)),
        ("a*b = ba*", &(&a_s * &b) - &(&b * &a_s)),
        ("a*b* = b*a*", &(&a_s * &b_s) - &(&b_s * &a_s)),
        ("(1 - aa*)(1 - bb*) = 0", &(&one - &(&a * &a_s)) * &(&one - &(&b * &b_s))),
    ]
}

fn s3(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "s3";
    let params = ctx.params;
    let s3 = quantum_sphere_s3();
    let mut out = Vec::new();

    out.push(check(S, "normal form of aa*bb*", "(1 - aa*)(1 - bb*) = 0", |r| {
        let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
        let nf = normal_form(&(&(&a * &a_s) * &(&b * &b_s)), &s3)?;
        let expected = &(&(&a * &a_s) + &(&b * &b_s)) - &NCPoly::one();
        Ok(r.equal(s3.format(&nf), s3.format(&expected)))
    }));

    let zero = iota(&NCPoly::zero(), &params);
    for (name, rel) in s3_relations(&s3) {
        out.push(check(S, &format!("relation under iota: {name}"), name, |r| {
            let e = iota(&rel, &params)?;
            Ok(r.residual(e.diff_norm(zero.as_ref().map_err(Clone::clone)?)?, params.tol))
        }));
    }

    let mut rng = rng_for(ctx, 2);
    let samples: Vec<NCPoly> = (0..12).map(|_| random_poly(&s3, 3, 4, &mut rng)).collect();
    out.push(check(S, "iota commutes with the involution", "iota(x*) = iota(x)*", |r| {
        let mut worst: f64 = 0.0;
        for x in &samples {
            worst = worst.max(iota(&s3.adjoint(x), &params)?.diff_norm(&iota(x, &params)?.adjoint())?);
        }
        Ok(r.residual(worst, params.tol))
    }));
    out.push(check(S, "iota is multiplicative", "iota(xy) = iota(x) iota(y)", |r| {
        let mut worst: f64 = 0.0;
        for pair in samples.chunks(2) {
            let (x, y) = (&pair[0], &pair[1]);
            let lhs = iota(&(x * y), &params)?;
            let rhs = iota(x, &params)?.mul(&iota(y, &params)?)?;
            worst = worst.max(lhs.diff_norm(&rhs)?);
        }
        Ok(r.residual(worst, params.tol))
    }));
    out.push(check(S, "symbols are W-compatible", "(sigma (x) id) leg 1 = W (sigma (x) id) leg 0", |r| {
        let mut ok = true;
        for x in samples.iter().chain([s3.gen("a"), s3.gen("b")].iter()) {
            ok &= iota(x, &params)?.is_w_compatible();
        }
        Ok(r.holds(ok))
    }));
    out
}

// ---------------------------------------------------------------- s2

/// Images of `A, B, R, R*` in the three-sphere.
pub fn s2_images(s3: &Presentation, s2: &Presentation) -> Vec<NCPoly> {
    let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
    let one = NCPoly::one();
    s2.generators()
        .iter()
        .map(|g| match g.name.as_str() {
            "A" => &one - &(&a * &a_s),
            "B" => &one - &(&b * &b_s),
            "R" => &a * &b,
            "R*" => &b_s * &a_s,
            other => unreachable!("unexpected generator {other}"),
        })
        .collect()
}

fn s2(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "s2";
    let params = ctx.params;
    let s3 = quantum_sphere_s3();
    let s2 = quantum_sphere_s2();
    let images = s2_images(&s3, &s2);
    let mut out = Vec::new();

    out.push(check(S, "images respect the involution", "R* = b*a*, A* = A, B* = B", |r| {
        let mut ok = true;
        for (g, img) in s2.generators().iter().zip(&images) {
            let lhs = s2.adjoint(&NCPoly::letter(s2.letter(&g.name).expect("own generator")));
            let lhs = lhs.substitute(&images);
            ok &= normal_form(&(&lhs - &s3.adjoint(img)), &s3)?.is_zero();
        }
        Ok(r.holds(ok))
    }));

    for rule in s2.rules() {
        let lhs = NCPoly::word(rule.lhs.clone());
        let label = format!("{} = {}", s2.format(&lhs), s2.format(&rule.rhs));
        let rel = (&lhs - &rule.rhs).substitute(&images);
        out.push(check(S, &format!("symbolic: {label}"), &label, |r| {
            let nf = normal_form(&rel, &s3)?;
            Ok(r.equal(s3.format(&nf), "0"))
        }));
        out.push(check(S, &format!("embedded: {label}"), &label, |r| {
            let pair = coinvariant_pair(&rel, &params)?;
            Ok(r.residual(pair.diff_norm(&FibrePair::zero(params.d, 0))?, params.tol))
        }));
    }

    out.push(check(S, "A, B, R as pairs", "A = (1 - zz*, 0), B = (0, 1 - yy*), R = (z, y)", |r| {
        let d = params.d;
        let z = crate::glue::disc(d, params.q);
        let y = crate::glue::disc(d, params.p);
        let id = TruncOp::identity(d);
        let expected = [
            (id.sub(&z.mul(&z.adjoint())?)?, TruncOp::zero(d)),
            (TruncOp::zero(d), id.sub(&y.mul(&y.adjoint())?)?),
            (z.clone(), y.clone()),
        ];
        let mut worst: f64 = 0.0;
        for (img, (t0, t1)) in images.iter().zip(expected) {
            let got = coinvariant_pair(img, &params)?;
            let want = make_fibre_pair(t0, t1, got.sym0().clone(), got.sym1().clone(), 0)?;
            worst = worst.max(got.diff_norm(&want)?);
        }
        Ok(r.residual(worst, params.tol))
    }));
    out
}

// ---------------------------------------------------------------- su2

fn su2(_ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "su2";
    let su2 = quantum_su2();
    let mut out = Vec::new();
    let (a, b, cc) = (su2.gen("a"), su2.gen("b"), su2.gen("c"));
    let one = NCPoly::one();

    out.push(check(S, "a*a + c*c = 1", "a* = d, c* = -q^-1 b", |r| {
        let x = &(&su2.adjoint(&a) * &a) + &(&su2.adjoint(&cc) * &cc);
        Ok(r.equal(su2.format(&normal_form(&(&x - &one), &su2)?), "0"))
    }));
    out.push(check(S, "aa* + bb* = 1", "a* = d, b* = -q c", |r| {
        let x = &(&a * &su2.adjoint(&a)) + &(&b * &su2.adjoint(&b));
        Ok(r.equal(su2.format(&normal_form(&(&x - &one), &su2)?), "0"))
    }));
    out.push(check(S, "relations closed under the involution", "nf(rel*) = 0 for every relation", |r| {
        let mut ok = true;
        for rule in su2.rules() {
            let rel = &NCPoly::word(rule.lhs.clone()) - &rule.rhs;
            ok &= normal_form(&su2.adjoint(&rel), &su2)?.is_zero();
        }
        Ok(r.holds(ok))
    }));

    let anchor = "zeta_s := 1 - (a - q s c)(d + s b), eta_s := (d + q^-1 s b)(b - s d)";
    match podles_relation_defects() {
        Ok(defects) => {
            for (name, defect) in defects {
                out.push(Record::new(S, format!("Podles: {name}"), anchor).equal(su2.format(&defect), "0"));
            }
        }
        Err(e) => out.push(Record::error(S, "Podles relations", anchor, &e)),
    }
    out
}

// ---------------------------------------------------------------- podles

fn podles(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "podles";
    let params = ctx.params;
    let anchor = "zeta_s = (-s^2 q^2 t, q^2 t), eta_s = (S g0(t), S g1(t))";
    let pp = match podles_generators(&params) {
        Ok(pp) => pp,
        Err(e) => return vec![Record::error(S, "generators", anchor, &e)],
    };
    let mut out = Vec::new();
    match podles_residuals(&pp, &params) {
        Ok(res) => {
            for (name, r) in res {
                out.push(Record::new(S, name, anchor).residual(r, params.tol));
            }
        }
        Err(e) => out.push(Record::error(S, "relations", anchor, &e)),
    }
    let s_u = LaurentPoly::monomial(CoefPoly::s(), 1);
    out.push(Record::new(S, "symbol of zeta", "sigma(zeta_s) = 0").equal(
        format!("{:?}", (pp.zeta.sym0().is_zero(), pp.zeta.sym1().is_zero())),
        "(true, true)",
    ));
    out.push(
        Record::new(S, "symbol of eta", "sigma(eta_s) = s U")
            .holds(*pp.eta.sym0() == s_u && *pp.eta.sym1() == s_u),
    );
    out
}

// ---------------------------------------------------------------- hopf

fn hopf(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "hopf";
    let monomials: Vec<LaurentPoly> = (-HOPF_RANGE..=HOPF_RANGE).map(LaurentPoly::u_pow).collect();
    let mut out = Vec::new();

    let coassoc = monomials.iter().all(|f| {
        let (l, r) = iterated_coproducts(f);
        l == r
    });
    out.push(Record::new(S, "coassociativity, |N| <= 10", "(Delta (x) id) Delta = (id (x) Delta) Delta").holds(coassoc));

    let counit = monomials.iter().all(|f| {
        let delta = hopf_coproduct(f);
        counit_left(&delta) == *f && counit_right(&delta) == *f && hopf_counit(f) == CoefPoly::one()
    });
    out.push(Record::new(S, "counit, |N| <= 10", "(eps (x) id) Delta = id = (id (x) eps) Delta").holds(counit));

    let antipode = monomials.iter().all(|f| {
        let delta = hopf_coproduct(f);
        let unit = LaurentPoly::constant(hopf_counit(f));
        tensor_map(&delta, hopf_antipode, |x| x.clone()).multiply_legs() == unit
            && tensor_map(&delta, |x| x.clone(), hopf_antipode).multiply_legs() == unit
    });
    out.push(Record::new(S, "antipode, |N| <= 10", "m (kappa (x) id) Delta = eps 1 = m (id (x) kappa) Delta").holds(antipode));

    let star = monomials.iter().all(|f| hopf_antipode(f) == f.adjoint());
    out.push(Record::new(S, "antipode is the involution on U^N", "kappa(U^N) = U^-N = (U^N)*").holds(star));

    let mut rng = rng_for(ctx, 6);
    let samples: Vec<BiLaurentPoly> = (0..W_SAMPLES).map(|_| random_bilaurent(&mut rng, 5, 6)).collect();
    let inverse = samples.iter().all(|f| w_inverse(&w_map(f)) == *f && w_map(&w_inverse(f)) == *f);
    out.push(Record::new(S, "W is bijective on 100 random elements", "W(U^m (x) U^n) = U^(m+n) (x) U^n").holds(inverse));
    let phi = samples.iter().all(|f| phi_map(f) == w_map(f));
    out.push(Record::new(S, "Phi agrees with W", "Phi(f (x) U^N) = f U^N (x) U^N").holds(phi));
    let mult = samples.chunks(2).all(|p| w_map(&p[0].mul(&p[1])) == w_map(&p[0]).mul(&w_map(&p[1])));
    out.push(Record::new(S, "W is multiplicative", "W(fg) = W(f) W(g)").holds(mult));

    let (q, p, s) = (ctx.params.q, ctx.params.p, ctx.params.s);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let f = random_laurent(&mut rng, 4, 5);
        let g = random_laurent(&mut rng, 4, 5);
        let u = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let num = |x: &LaurentPoly| -> NumLaurent { x.to_numeric(q, p, s) };
        let lhs = eval_point(&num(&f.mul(&g)), u).expect("unit point");
        let rhs = eval_point(&num(&f), u).expect("unit point") * eval_point(&num(&g), u).expect("unit point");
        worst = worst.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
    }
    out.push(Record::new(S, "point evaluation is a character", "ev_u(fg) = ev_u(f) ev_u(g), |u| = 1").residual(worst, MACHINE_TOL));
    out
}

// ---------------------------------------------------------------- en-symbolic

fn en_symbolic(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "en-symbolic";
    let n = ctx.nmax.min(EN_CAP as i64);
    let mut out = Vec::new();
    if ctx.nmax > n {
        out.push(
            Record::new(S, "range", "E_N = X_N Y_N^T")
                .with_value(format!("|N| <= {n}"), format!("|N| <= {}", ctx.nmax))
                .with_status(Status::Warn),
        );
    }
    let s3 = quantum_sphere_s3();
    for k in -n..=n {
        match build_en(k) {
            Ok(data) => {
                out.push(check(S, &format!("Y^T X = 1, N={k}"), "Y_N^T X_N = 1", |r| {
                    Ok(r.equal(s3.format(&data.y_transpose_x()?), "1"))
                }));
                out.push(check(S, &format!("E^2 = E, N={k}"), "E_N = X_N Y_N^T, E_N^2 = E_N", |r| {
                    Ok(r.holds(data.idempotency_defect()?.is_zero()))
                }));
                out.push(check(S, &format!("entries are coinvariant, N={k}"), "E_N has entries of degree 0", |r| {
                    let mut ok = true;
                    for x in data.e.entries() {
                        ok &= s3.degree(x)? == 0;
                    }
                    Ok(r.holds(ok))
                }));
            }
            Err(e) => out.push(Record::error(S, format!("build N={k}"), "E_N = X_N Y_N^T", &e)),
        }
    }
    out.push(check(
        S,
        "literal p/q placement fails at N=1",
        "Y^T X - 1 = (q - p)(1 - bb*) with the two Y parameters exchanged",
        |r| {
            let data = build_en_with(1, YAssignment::Literal, EN_CAP)?;
            let witness = normal_form(&(&data.y_transpose_x()? - &NCPoly::one()), &s3)?;
            let expected = normal_form(
                &(&NCPoly::one() - &(&s3.gen("b") * &s3.gen("b*"))).scale(&(&CoefPoly::q() - &CoefPoly::p())),
                &s3,
            )?;
            Ok(r.equal(s3.format(&witness), s3.format(&expected)))
        },
    ));
    out
}

// ---------------------------------------------------------------- en-numeric

fn en_numeric_suite(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "en-numeric";
    let params = ctx.params;
    let n = ctx.nmax.min(EN_INDEX_CAP);
    let mut out = Vec::new();
    for k in -n..=n {
        let en = match en_numeric(k, &params) {
            Ok(en) => en,
            Err(e) => {
                out.push(Record::error(S, format!("evaluate N={k}"), "E_N under the embedding", &e));
                continue;
            }
        };
        out.push(check(S, &format!("E^2 = E as pairs, N={k}"), "E_N^2 = E_N", |r| {
            Ok(r.residual(en.idempotent_residual()?, params.tol))
        }));
        out.push(Record::new(S, format!("symbol matrix is idempotent, N={k}"), "sigma(E_N)^2 = sigma(E_N)").holds(en.symbol_is_idempotent()));
        out.push(check(S, &format!("unreduced product agrees, N={k}"), "iota(X_N Y_N^T) = iota(normal_form(X_N Y_N^T))", |r| {
            let data = build_en(k)?;
            let size = en.size;
            let mut worst: f64 = 0.0;
            for i in 0..size {
                for j in 0..size {
                    let raw = data.x.get(i, 0) * data.y.get(j, 0);
                    worst = worst.max(coinvariant_pair(&raw, &params)?.diff_norm(en.entry(i, j))?);
                }
            }
            Ok(r.residual(worst, params.tol))
        }));
        let cuts: Vec<usize> = [0, 4, 8, 16].into_iter().filter(|&m| m < params.d / 2).collect();
        let decreasing = (0..en.size).all(|i| en.entry(i, i).tail_diagnostic(&params, &cuts).decreasing);
        out.push(
            Record::new(S, format!("diagonal legs approach their Toeplitz operators, N={k}"), "T - T(sigma(T)) is compact")
                .holds(decreasing)
                .with_status(if decreasing { Status::Pass } else { Status::Warn }),
        );
    }
    out
}

// ---------------------------------------------------------------- chi

fn chi_suite(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "chi";
    let params = ctx.params;
    let s3 = quantum_sphere_s3();
    let mut out = Vec::new();
    for k in -ctx.nmax..=ctx.nmax {
        out.push(check(S, &format!("chi_N is a projection, N={k}"), "chi_N = chi_N^2 = chi_N*", |r| {
            let x = chi(k, params.d)?;
            Ok(r.residual(x.mul(&x)?.diff_norm(&x)?.max(x.adjoint().diff_norm(&x)?), params.tol))
        }));
        out.push(check(S, &format!("Psi_N round trip, N={k}"), "Psi_N(f, g) = (f, g S*^N), image stable under chi_-N", |r| {
            // a*^N has degree N and a^|N| has degree -|N|
            let gen = if k >= 0 { "a*" } else { "a" };
            let x = s3.gen(gen).pow(k.unsigned_abs() as u32);
            let pair = extract_degree(&iota(&x, &params)?, k)?
                .ok_or_else(|| crate::Error::Grading(format!("no degree {k} part")))?;
            let image = psi_iso(&pair)?;
            let stable = image.mul(&chi(-k, params.d)?)?.diff_norm(&image)?;
            let back = psi_inverse(k, &image)?.diff_norm(&pair)?;
            Ok(r.residual(stable.max(back), params.tol))
        }));
    }
    out
}

// ---------------------------------------------------------------- index

/// One record per row of the chi index table.
pub fn chi_index_records(suite: &str, nmax: i64, params: &ParamSet) -> Vec<Record> {
    match index_table(-nmax, nmax, &[Representative::Chi], &[ModuleKind::Pr, ModuleKind::PiSigma], params) {
        Ok(rows) => rows.into_iter().map(|row| index_record(suite, &row)).collect(),
        Err(e) => vec![Record::error(suite, "chi table", "<[(pr1, pr0)], [chi_N]> = N", &e)],
    }
}

fn index_record(suite: &str, row: &crate::kpair::IndexRow) -> Record {
    let rep = match row.representative {
        Representative::Chi => "chi_N",
        Representative::En => "E_N",
    };
    let anchor = match row.module {
        ModuleKind::Pr => format!("<[(pr1, pr0)], [{rep}]> = N"),
        ModuleKind::PiSigma => format!("<[(pi+ sigma, pi- sigma)], [{rep}]> = 1"),
    };
    let mut r = Record::new(suite, format!("<{}, {rep}>, N={}", row.module.name(), row.n), anchor)
        .with_value(row.result.rounded.to_string(), row.expected.to_string())
        .with_residual(row.result.residual);
    if !row.pass {
        r = r.with_status(Status::Fail);
    }
    r
}

fn index(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "index";
    let params = ctx.params;
    let mut out = chi_index_records(S, ctx.nmax, &params);
    let pr = FredholmModule::pr_pair(params);
    let pi = FredholmModule::pi_sigma_pair(params);

    out.push(check(S, "<pr, 1>", "the unit has winding 0", |r| {
        let v = pair(&pr, &PairMatrix::single(FibrePair::identity(params.d)))?;
        Ok(r.equal(v.rounded.to_string(), "0").with_residual(v.residual))
    }));
    out.push(check(S, "<pi, 1>", "the unit has rank 1", |r| {
        let v = pair(&pi, &PairMatrix::single(FibrePair::identity(params.d)))?;
        Ok(r.equal(v.rounded.to_string(), "1").with_residual(v.residual))
    }));
    out.push(check(S, "<pr, (0, 1 - SS*)>", crate::kpair::PR_ORIENTATION, |r| {
        let v = pair(&pr, &PairMatrix::single(boundary_projection(params.d)?))?;
        Ok(r.equal(v.rounded.to_string(), "1").with_residual(v.residual))
    }));
    out.push(check(S, "additivity", "<pr, chi_1 + chi_2> = <pr, chi_1> + <pr, chi_2>", |r| {
        let m = PairMatrix::single(chi(1, params.d)?).direct_sum(&PairMatrix::single(chi(2, params.d)?));
        let v = pair(&pr, &m)?;
        Ok(r.equal(v.rounded.to_string(), "3").with_residual(v.residual))
    }));
    let nmax = ctx.nmax;
    out.push(check(S, "unitary invariance", "<pr, u chi_N u*> = <pr, chi_N>", |r| {
        let mut worst: f64 = 0.0;
        let mut ok = true;
        for k in -nmax.min(3)..=nmax.min(3) {
            let u = random_unitary_pair(params.d, 6, 0.3, ctx.seed.wrapping_add(k as u64))?;
            let conj = PairMatrix::single(chi(k, params.d)?).conjugate(&u)?;
            let v = pair(&pr, &conj)?;
            ok &= v.rounded == k;
            worst = worst.max(v.residual);
        }
        Ok(r.holds(ok).with_residual(worst))
    }));
    for k in -ctx.nmax.min(EN_INDEX_CAP)..=ctx.nmax.min(EN_INDEX_CAP) {
        out.extend(
            index_table(k, k, &[Representative::En], &[ModuleKind::PiSigma], &params)
                .map(|rows| rows.iter().map(|row| index_record(S, row)).collect::<Vec<_>>())
                .unwrap_or_else(|e| vec![Record::error(S, format!("<pi, E_N>, N={k}"), "rank of E_N", &e)]),
        );
    }
    out
}

// ---------------------------------------------------------------- convergence

fn convergence(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "convergence";
    let params = ctx.params;
    let n = ctx.nmax.min(EN_INDEX_CAP);
    let pr_anchor = "<[(pr1, pr0)], [E_N]> = N";
    let mut out = Vec::new();
    if 2 * params.d > MAX_DIM {
        return vec![Record::new(S, "d-sweep", pr_anchor).with_value("skipped", "2d <= MAX_DIM").with_status(Status::Warn)];
    }
    for k in -n..=n {
        let values = [params, params.with_dim(2 * params.d)].map(|p| -> Result<f64> {
            let m: PairMatrix = en_numeric(k, &p)?.into();
            Ok(pair(&FredholmModule::pr_pair(p), &m)?.value.re)
        });
        let (v1, v2) = match values {
            [Ok(a), Ok(b)] => (a, b),
            [Err(e), _] | [_, Err(e)] => {
                out.push(Record::error(S, format!("<pr, E_N>, N={k}"), pr_anchor, &e));
                continue;
            }
        };
        let (r1, r2) = ((v1 - k as f64).abs(), (v2 - k as f64).abs());
        out.push(
            Record::new(S, format!("<pr, E_N> at d={}, N={k}", params.d), pr_anchor)
                .residual(r1, EN_PAIR_TOL)
                .with_value(fmt_f64(v1), k.to_string()),
        );
        out.push(
            Record::new(S, format!("residual shrinks 10x from d={} to d={}, N={k}", params.d, 2 * params.d), pr_anchor)
                .holds(r2 <= r1 / 10.0)
                .with_value(format!("{} -> {}", fmt_f64(r1), fmt_f64(r2)), "ratio >= 10"),
        );
        let matches_chi = (v1 + k as f64).abs() < EN_PAIR_TOL && (v2 + k as f64).abs() < EN_PAIR_TOL;
        out.push(
            Record::new(S, format!("<pr, E_N> = <pr, chi_-N>, N={k}"), "observed sign of the E_N pairing")
                .with_value(fmt_f64(v1), (-k).to_string())
                .with_residual((v1 + k as f64).abs())
                .with_status(if matches_chi { Status::Warn } else { Status::Fail }),
        );
    }
    out
}

// ---------------------------------------------------------------- confluence

fn confluence(ctx: &SuiteContext) -> Vec<Record> {
    const S: &str = "confluence";
    let presentations = [quantum_disc(), quantum_sphere_s3(), quantum_sphere_s2(), quantum_su2(), circle_algebra()];
    let mut out = Vec::new();
    for (i, p) in presentations.iter().enumerate() {
        let mut rng = rng_for(ctx, 100 + i as u64);
        out.push(check(S, &format!("{}: two reduction orders agree", p.name()), "normal forms are unique", |r| {
            let mut agree = 0usize;
            for j in 0..CONFLUENCE_WORDS {
                let x = NCPoly::word(random_word(p, CONFLUENCE_MAX_LEN, &mut rng));
                let left = normal_form(&x, p)?;
                let opts = ReduceOptions { order: ReductionOrder::Random(ctx.seed ^ ((j as u64) << 8)), ..Default::default() };
                if normal_form_with(&x, p, &opts)? == left {
                    agree += 1;
                }
            }
            Ok(r.equal(agree.to_string(), CONFLUENCE_WORDS.to_string()))
        }));
        out.push(check(S, &format!("{}: star compatibility", p.name()), "nf(x*) = nf(nf(x)*)", |r| {
            let mut ok = true;
            for _ in 0..100 {
                let x = random_poly(p, 3, 5, &mut rng);
                ok &= normal_form(&p.adjoint(&x), p)? == normal_form(&p.adjoint(&normal_form(&x, p)?), p)?;
            }
            Ok(r.holds(ok))
        }));
        out.push(check(S, &format!("{}: multiplicativity", p.name()), "nf(xy) = nf(nf(x) nf(y))", |r| {
            let mut ok = true;
            for _ in 0..100 {
                let x = random_poly(p, 3, 4, &mut rng);
                let y = random_poly(p, 3, 4, &mut rng);
                ok &= normal_form(&(&x * &y), p)? == normal_form(&(&normal_form(&x, p)? * &normal_form(&y, p)?), p)?;
            }
            Ok(r.holds(ok))
        }));
        out.push(check(S, &format!("{}: grading is preserved", p.name()), "deg nf(w) = deg w", |r| {
            let mut ok = true;
            for _ in 0..100 {
                let w = random_word(p, CONFLUENCE_MAX_LEN, &mut rng);
                let deg = p.word_weight(&w);
                ok &= normal_form(&NCPoly::word(w), p)?.terms().all(|(v, _)| p.word_weight(v) == deg);
            }
            Ok(r.holds(ok))
        }));
    }
    out
}
