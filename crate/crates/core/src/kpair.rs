//! Fredholm modules given by pairs of representations, and the index pairing
//! `<(rho+, rho-), [P]> = Tr tr((rho+ - rho-)(P))` with projections.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::glue::{chi, en_numeric, make_fibre_pair, EnNumeric, FibrePair};
use crate::opnum::{pi_rep, trace_finite_rank, Lattice, ParamSet, PiSign, TruncOp};

/// Tolerance on `|value - rounded|` for rows built from `chi_N`.
pub const CHI_ROUNDING_TOL: f64 = 1e-12;
/// Tolerance on `|value - rounded|` for rows built from `E_N`.
pub const EN_ROUNDING_TOL: f64 = 1e-3;
/// Largest `|N|` for which `E_N` rows are computed.
pub const EN_INDEX_CAP: i64 = 3;

/// The two Fredholm modules over the glued sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKind {
    /// `(rho+, rho-) = (pr1, pr0)`: the right leg minus the left leg.
    Pr,
    /// `(pi+ o sigma, pi- o sigma)` on the window of `l^2(Z)`.
    PiSigma,
}

impl ModuleKind {
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Pr => "pr",
            ModuleKind::PiSigma => "pi",
        }
    }
}

/// The projections paired in index tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Representative {
    Chi,
    En,
}

impl Representative {
    pub fn name(self) -> &'static str {
        match self {
            Representative::Chi => "chi",
            Representative::En => "en",
        }
    }
}

/// Statement of the pr-pair leg order, echoed in reports.
pub const PR_ORIENTATION: &str = "(rho+, rho-) = (pr1, pr0): right leg minus left leg; <pr, (0, 1 - SS*)> = +1";

#[derive(Debug, Clone, PartialEq)]
pub struct FredholmModule {
    pub kind: ModuleKind,
    pub params: ParamSet,
}

impl FredholmModule {
    pub fn pr_pair(params: ParamSet) -> Self {
        Self { kind: ModuleKind::Pr, params }
    }

    pub fn pi_sigma_pair(params: ParamSet) -> Self {
        Self { kind: ModuleKind::PiSigma, params }
    }

    /// `(rho+(x), rho-(x))`.
    pub fn evaluate(&self, x: &FibrePair) -> Result<(TruncOp, TruncOp)> {
        match self.kind {
            ModuleKind::Pr => Ok((x.t1().clone(), x.t0().clone())),
            ModuleKind::PiSigma => {
                let p = &self.params;
                let sym = x.sym0().to_numeric(p.q, p.p, p.s);
                Ok((pi_rep(PiSign::Plus, &sym, p.w)?, pi_rep(PiSign::Minus, &sym, p.w)?))
            }
        }
    }

    /// `rho+(x) - rho-(x)`.
    pub fn difference(&self, x: &FibrePair) -> Result<TruncOp> {
        let (plus, minus) = self.evaluate(x)?;
        plus.sub(&minus)
    }
}

/// A square matrix of twist-0 pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PairMatrix {
    size: usize,
    entries: Vec<FibrePair>,
}

impl PairMatrix {
    pub fn new(size: usize, entries: Vec<FibrePair>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::Dimension(format!("{} entries for a {size}x{size} matrix", entries.len())));
        }
        Ok(Self { size, entries })
    }

    pub fn single(x: FibrePair) -> Self {
        Self { size: 1, entries: vec![x] }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &FibrePair {
        &self.entries[i * self.size + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::Dimension("matrix sizes differ".into()));
        }
        let n = self.size;
        let d = self.entries[0].dim();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FibrePair::zero(d, 0);
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Ok(Self { size: n, entries })
    }

    /// Largest entrywise trusted-block norm of `P^2 - P`.
    pub fn idempotent_residual(&self) -> Result<f64> {
        let sq = self.mul(self)?;
        let mut worst: f64 = 0.0;
        for (a, b) in sq.entries.iter().zip(&self.entries) {
            worst = worst.max(a.diff_norm(b)?);
        }
        Ok(worst)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.size + other.size;
        let d = self.entries[0].dim();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = if i < self.size && j < self.size {
                    self.get(i, j).clone()
                } else if i >= self.size && j >= self.size {
                    other.get(i - self.size, j - self.size).clone()
                } else {
                    FibrePair::zero(d, 0)
                };
                entries.push(e);
            }
        }
        Self { size: n, entries }
    }

    /// `u P u*` entrywise, for a unitary pair `u`.
    pub fn conjugate(&self, u: &FibrePair) -> Result<Self> {
        let us = u.adjoint();
        let entries = self
            .entries
            .iter()
            .map(|e| u.mul(e)?.mul(&us))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { size: self.size, entries })
    }
}

impl From<EnNumeric> for PairMatrix {
    fn from(e: EnNumeric) -> Self {
        Self { size: e.size, entries: e.pairs }
    }
}

/// Provenance of a pairing value.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingMeta {
    pub n: Option<i64>,
    pub representative: String,
    pub module: ModuleKind,
    pub params: ParamSet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairingResult {
    pub value: Complex64,
    pub rounded: i64,
    /// Every diagonal difference was certified finite rank.
    pub exact: bool,
    /// `|value - rounded|`.
    pub residual: f64,
    pub meta: PairingMeta,
}

/// Pairs a module with an idempotent matrix of twist-0 pairs.
pub fn pair(f: &FredholmModule, p: &PairMatrix) -> Result<PairingResult> {
    pair_labelled(f, p, None, "custom")
}

pub fn pair_labelled(
    f: &FredholmModule,
    p: &PairMatrix,
    n: Option<i64>,
    representative: &str,
) -> Result<PairingResult> {
    let idem = p.idempotent_residual()?;
    if !(idem < f.params.tol) {
        return Err(Error::Precondition(format!(
            "matrix is not idempotent: max residual {idem:e} exceeds {:e}",
            f.params.tol
        )));
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut exact = true;
    for i in 0..p.size() {
        let diff = f.difference(p.get(i, i))?;
        let (v, e) = trace_finite_rank(&diff, 0.0);
        value += v;
        exact &= e;
    }
    let rounded = value.re.round() as i64;
    let residual = (value - Complex64::new(rounded as f64, 0.0)).norm();
    Ok(PairingResult {
        value,
        rounded,
        exact,
        residual,
        meta: PairingMeta { n, representative: representative.to_string(), module: f.kind, params: f.params },
    })
}

/// The representative projection of degree `n`.
pub fn representative_matrix(rep: Representative, n: i64, params: &ParamSet) -> Result<PairMatrix> {
    match rep {
        Representative::Chi => Ok(PairMatrix::single(chi(n, params.d)?)),
        Representative::En => {
            if n.abs() > EN_INDEX_CAP {
                return Err(Error::Size(format!("E_N rows are limited to |N| <= {EN_INDEX_CAP}")));
            }
            Ok(en_numeric(n, params)?.into())
        }
    }
}

/// The value the index theorem predicts for a row.
pub fn expected_value(module: ModuleKind, n: i64) -> i64 {
    match module {
        ModuleKind::Pr => n,
        ModuleKind::PiSigma => 1,
    }
}

/// Reading of a pairing value: the pr-pair counts windings, the pi-pair counts rank.
pub fn winding_interpretation(module: ModuleKind, n: i64) -> String {
    match module {
        ModuleKind::Pr => format!("winding = {n}"),
        ModuleKind::PiSigma => "rank = 1".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexRow {
    pub n: i64,
    pub representative: Representative,
    pub module: ModuleKind,
    pub result: PairingResult,
    pub expected: i64,
    pub interpretation: String,
    pub pass: bool,
}

/// One row per `(N, representative, module)`.
pub fn index_table(
    nmin: i64,
    nmax: i64,
    representatives: &[Representative],
    modules: &[ModuleKind],
    params: &ParamSet,
) -> Result<Vec<IndexRow>> {
    if nmin > nmax {
        return Err(Error::Argument(format!("empty range {nmin}..={nmax}")));
    }
    params.validate()?;
    let mut rows = Vec::new();
    for &rep in representatives {
        for n in nmin..=nmax {
            let pm = representative_matrix(rep, n, params)?;
            for &module in modules {
                let f = FredholmModule { kind: module, params: *params };
                let result = pair_labelled(&f, &pm, Some(n), rep.name())?;
                let expected = expected_value(module, n);
                let tol = match rep {
                    Representative::Chi => CHI_ROUNDING_TOL,
                    Representative::En => EN_ROUNDING_TOL,
                };
                let pass = result.rounded == expected
                    && result.residual <= tol
                    && (rep == Representative::En || result.exact);
                rows.push(IndexRow {
                    n,
                    representative: rep,
                    module,
                    interpretation: winding_interpretation(module, n),
                    result,
                    expected,
                    pass,
                });
            }
        }
    }
    Ok(rows)
}

/// `(0, 1 - SS*)`, the pair whose pr-pairing fixes the sign convention.
pub fn boundary_projection(d: usize) -> Result<FibrePair> {
    let mut v = vec![0.0; d];
    v[0] = 1.0;
    make_fibre_pair(
        TruncOp::zero(d),
        TruncOp::diagonal(&v),
        crate::circle::LaurentPoly::zero(),
        crate::circle::LaurentPoly::zero(),
        0,
    )
}

/// A unitary pair `(exp(i h0), exp(i h1))` with `h` self-adjoint, of norm about
/// `eps` and supported on the top-left `k x k` block.
pub fn random_unitary_pair(d: usize, k: usize, eps: f64, seed: u64) -> Result<FibrePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut leg = || {
        let mut h = DMatrix::<Complex64>::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                h[(i, j)] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        let h = (&h + h.adjoint()) * Complex64::new(eps / (2.0 * k as f64), 0.0);
        let eig = nalgebra::SymmetricEigen::new(h);
        let phases = eig.eigenvalues.map(|x| Complex64::new(0.0, x).exp());
        let v = &eig.eigenvectors;
        let block = v * DMatrix::from_diagonal(&phases) * v.adjoint();
        let mut m = DMatrix::<Complex64>::identity(d, d);
        m.view_mut((0, 0), (k, k)).copy_from(&block);
        TruncOp::new(m, 0, Lattice::Natural)
    };
    let u0 = leg()?;
    let u1 = leg()?;
    let one = crate::circle::LaurentPoly::one();
    make_fibre_pair(u0, u1, one.clone(), one, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ParamSet {
        ParamSet { d: 32, w: 6, ..ParamSet::default() }
    }

    #[test]
    fn chi_pairings_are_exact() {
        let p = params();
        for n in -4..=4 {
            let pm = representative_matrix(Representative::Chi, n, &p).unwrap();
            let pr = pair(&FredholmModule::pr_pair(p), &pm).unwrap();
            assert_eq!((pr.value, pr.exact), (Complex64::new(n as f64, 0.0), true));
            let pi = pair(&FredholmModule::pi_sigma_pair(p), &pm).unwrap();
            assert_eq!((pi.value, pi.exact), (Complex64::new(1.0, 0.0), true));
        }
    }

    #[test]
    fn unit_and_boundary_projection() {
        let p = params();
        let f = FredholmModule::pr_pair(p);
        let one = PairMatrix::single(FibrePair::identity(p.d));
        assert_eq!(pair(&f, &one).unwrap().rounded, 0);
        let b = PairMatrix::single(boundary_projection(p.d).unwrap());
        let r = pair(&f, &b).unwrap();
        assert_eq!((r.rounded, r.residual, r.exact), (1, 0.0, true));
    }

    #[test]
    fn non_idempotent_input_is_rejected() {
        let p = params();
        let x = FibrePair::identity(p.d).scale(&crate::symalg::CoefPoly::integer(2), &p);
        let err = pair(&FredholmModule::pr_pair(p), &PairMatrix::single(x)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn additivity_on_direct_sums() {
        let p = params();
        let f = FredholmModule::pr_pair(p);
        let a = PairMatrix::single(chi(2, p.d).unwrap());
        let b = PairMatrix::single(chi(-3, p.d).unwrap());
        let sum = pair(&f, &a.direct_sum(&b)).unwrap();
        assert_eq!(sum.value, pair(&f, &a).unwrap().value + pair(&f, &b).unwrap().value);
    }

    #[test]
    fn conjugation_does_not_move_the_pairing() {
        let p = params();
        let f = FredholmModule::pr_pair(p);
        let a = PairMatrix::single(chi(3, p.d).unwrap());
        let u = random_unitary_pair(p.d, 8, 0.1, 7).unwrap();
        let b = a.conjugate(&u).unwrap();
        let diff = (pair(&f, &b).unwrap().value - pair(&f, &a).unwrap().value).norm();
        assert!(diff < 1e-8, "{diff}");
    }

    #[test]
    fn en_pairings_carry_the_opposite_winding() {
        // At N = 1 the diagonal of E is (0, 1) on the left leg and (p t, 1 - t) on the
        // right leg, t = 1 - yy* = diag(p^n). The difference sums to (p - 1) t, whose
        // trace is -1.
        let p = ParamSet { d: 64, ..ParamSet::default() };
        for n in -2..=2 {
            let pm = representative_matrix(Representative::En, n, &p).unwrap();
            let r = pair(&FredholmModule::pr_pair(p), &pm).unwrap();
            assert!((r.value.re + n as f64).abs() < 1e-9, "N = {n}: {}", r.value);
            let pi = pair(&FredholmModule::pi_sigma_pair(p), &pm).unwrap();
            assert!((pi.value.re - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn interpretations() {
        assert_eq!(winding_interpretation(ModuleKind::PiSigma, 4), "rank = 1");
        assert_eq!(winding_interpretation(ModuleKind::Pr, -2), "winding = -2");
        assert_eq!(winding_interpretation(ModuleKind::Pr, 0), "winding = 0");
    }
}
