//! Pairs of Toeplitz-type operators glued along their symbols.
//!
//! A [`FibrePair`] `(t0, t1)` of twist `N` satisfies `U^N sym(t0) = sym(t1)`.
//! Twist 0 pairs form the algebra of the quantum sphere glued from two discs;
//! twist `N` pairs form the section module of the line bundle of degree `N`.
//! Symbols are exact data carried alongside the matrices.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::circle::{w_map, BiLaurentPoly, LaurentPoly};
use crate::error::{Error, Result};
use crate::opnum::{
    disc_defect, disc_generator, evaluate, shift, spectral_norm, toeplitz, trusted_diff_norm, Assignment,
    ParamSet, TruncOp,
};
use crate::symalg::{build_en, quantum_sphere_s3, CoefPoly, NCPoly, Presentation};

#[derive(Debug, Clone, PartialEq)]
pub struct FibrePair {
    t0: TruncOp,
    t1: TruncOp,
    sym0: LaurentPoly,
    sym1: LaurentPoly,
    twist: i64,
}

/// Checks `U^N sym0 = sym1` and dimensions, then builds the pair.
pub fn make_fibre_pair(
    t0: TruncOp,
    t1: TruncOp,
    sym0: LaurentPoly,
    sym1: LaurentPoly,
    twist: i64,
) -> Result<FibrePair> {
    if t0.dim() != t1.dim() || t0.lattice() != t1.lattice() {
        return Err(Error::Dimension(format!("legs of dimension {} and {}", t0.dim(), t1.dim())));
    }
    let lhs = sym0.shift(twist);
    if lhs != sym1 {
        let diff = lhs.sub(&sym1);
        let (k, c) = diff.terms().next().expect("nonzero difference");
        return Err(Error::Membership(format!(
            "U^{twist} sym0 and sym1 differ at U^{k} (difference {c})"
        )));
    }
    Ok(FibrePair { t0, t1, sym0, sym1, twist })
}

impl FibrePair {
    pub fn identity(d: usize) -> Self {
        Self {
            t0: TruncOp::identity(d),
            t1: TruncOp::identity(d),
            sym0: LaurentPoly::one(),
            sym1: LaurentPoly::one(),
            twist: 0,
        }
    }

    pub fn zero(d: usize, twist: i64) -> Self {
        Self {
            t0: TruncOp::zero(d),
            t1: TruncOp::zero(d),
            sym0: LaurentPoly::zero(),
            sym1: LaurentPoly::zero(),
            twist,
        }
    }

    pub fn t0(&self) -> &TruncOp {
        &self.t0
    }

    pub fn t1(&self) -> &TruncOp {
        &self.t1
    }

    pub fn sym0(&self) -> &LaurentPoly {
        &self.sym0
    }

    pub fn sym1(&self) -> &LaurentPoly {
        &self.sym1
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn dim(&self) -> usize {
        self.t0.dim()
    }

    /// Componentwise product; twists add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            t0: self.t0.mul(&other.t0)?,
            t1: self.t1.mul(&other.t1)?,
            sym0: self.sym0.mul(&other.sym0),
            sym1: self.sym1.mul(&other.sym1),
            twist: self.twist + other.twist,
        })
    }

    fn check_twist(&self, other: &Self) -> Result<()> {
        if self.twist != other.twist {
            return Err(Error::Membership(format!(
                "cannot add pairs of twist {} and {}",
                self.twist, other.twist
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_twist(other)?;
        Ok(Self {
            t0: self.t0.add(&other.t0)?,
            t1: self.t1.add(&other.t1)?,
            sym0: self.sym0.add(&other.sym0),
            sym1: self.sym1.add(&other.sym1),
            twist: self.twist,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_twist(other)?;
        Ok(Self {
            t0: self.t0.sub(&other.t0)?,
            t1: self.t1.sub(&other.t1)?,
            sym0: self.sym0.sub(&other.sym0),
            sym1: self.sym1.sub(&other.sym1),
            twist: self.twist,
        })
    }

    pub fn adjoint(&self) -> Self {
        Self {
            t0: self.t0.adjoint(),
            t1: self.t1.adjoint(),
            sym0: self.sym0.adjoint(),
            sym1: self.sym1.adjoint(),
            twist: -self.twist,
        }
    }

    /// Scales by an exact coefficient, evaluated numerically on the legs.
    pub fn scale(&self, k: &CoefPoly, params: &ParamSet) -> Self {
        let z = Complex64::new(k.eval(params.q, params.p, params.s), 0.0);
        Self {
            t0: self.t0.scale(z),
            t1: self.t1.scale(z),
            sym0: self.sym0.scale(k),
            sym1: self.sym1.scale(k),
            twist: self.twist,
        }
    }

    /// Largest trusted-block residual of the two legs against another pair.
    pub fn diff_norm(&self, other: &Self) -> Result<f64> {
        Ok(trusted_diff_norm(&self.t0, &other.t0)?.max(trusted_diff_norm(&self.t1, &other.t1)?))
    }

    /// Distance of each leg from the Toeplitz operator of its symbol, measured
    /// on the trusted indices `>= m` for each `m` in `cuts`.
    pub fn tail_diagnostic(&self, params: &ParamSet, cuts: &[usize]) -> TailDiagnostic {
        let mut legs = Vec::new();
        for (t, sym) in [(&self.t0, &self.sym0), (&self.t1, &self.sym1)] {
            let symbol = sym.to_numeric(params.q, params.p, params.s);
            let tp = toeplitz(&symbol, t.dim()).with_bandwidth(t.bandwidth());
            let diff = t.sub(&tp).expect("same shape");
            let r = diff.trusted_range();
            let norms: Vec<f64> = cuts
                .iter()
                .map(|&m| {
                    if m >= r.end {
                        0.0
                    } else {
                        let len = r.end - m;
                        spectral_norm(&diff.matrix().view((m, m), (len, len)).into_owned())
                    }
                })
                .collect();
            legs.push(norms);
        }
        let decreasing = legs
            .iter()
            .all(|v| v.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-9) + 1e-15));
        TailDiagnostic { cuts: cuts.to_vec(), leg0: legs[0].clone(), leg1: legs[1].clone(), decreasing }
    }
}

/// How fast the legs approach Toeplitz operators of their symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct TailDiagnostic {
    pub cuts: Vec<usize>,
    pub leg0: Vec<f64>,
    pub leg1: Vec<f64>,
    pub decreasing: bool,
}

/// `diag(0, ..., 0, 1, 1, ...)` with `n` zeros: `S^n S*^n`, exact in every truncation.
fn range_projection(d: usize, n: usize) -> TruncOp {
    let v: Vec<f64> = (0..d).map(|i| if i < n { 0.0 } else { 1.0 }).collect();
    TruncOp::diagonal(&v)
}

/// `chi_N = (S^N S*^N, 1)` for `N >= 0` and `(1, S^|N| S*^|N|)` for `N < 0`.
pub fn chi(n: i64, d: usize) -> Result<FibrePair> {
    let m = n.unsigned_abs() as usize;
    if d <= m {
        return Err(Error::Size(format!("dimension {d} must exceed |N| = {m}")));
    }
    let p = range_projection(d, m);
    let (t0, t1) = if n >= 0 { (p, TruncOp::identity(d)) } else { (TruncOp::identity(d), p) };
    make_fibre_pair(t0, t1, LaurentPoly::one(), LaurentPoly::one(), 0)
}

/// The orientation used by [`psi_iso`], echoed in reports.
pub const PSI_ORIENTATION: &str =
    "Psi_N(f,g) = (f, g S*^N) for N >= 0 and (f S*^|N|, g) for N < 0; image is stable under chi_(-N)";

/// Maps a twist-`N` pair to a twist-0 pair.
///
/// The co-shift `S*^|N|` goes on the second leg for `N >= 0` and on the first
/// for `N < 0`; this is the placement for which `U^N sym(f) = sym(g)` yields
/// equal symbols. The image is fixed by right multiplication with `chi_(-N)`.
pub fn psi_iso(pair: &FibrePair) -> Result<FibrePair> {
    let n = pair.twist;
    let m = n.unsigned_abs() as usize;
    let d = pair.dim();
    let co = shift(d).adjoint().pow(m as u32);
    let (t0, t1, sym0, sym1) = if n >= 0 {
        (pair.t0.clone(), pair.t1.mul(&co)?, pair.sym0.clone(), pair.sym1.shift(-n))
    } else {
        (pair.t0.mul(&co)?, pair.t1.clone(), pair.sym0.shift(n), pair.sym1.clone())
    };
    make_fibre_pair(t0, t1, sym0, sym1, 0)
}

/// Inverse of [`psi_iso`] on its image: multiplies the shifted leg by `S^|N|`.
pub fn psi_inverse(n: i64, pair: &FibrePair) -> Result<FibrePair> {
    if pair.twist != 0 {
        return Err(Error::Membership(format!("expected a twist-0 pair, got twist {}", pair.twist)));
    }
    let m = n.unsigned_abs() as usize;
    let s = shift(pair.dim()).pow(m as u32);
    let (t0, t1, sym0, sym1) = if n >= 0 {
        (pair.t0.clone(), pair.t1.mul(&s)?, pair.sym0.clone(), pair.sym1.shift(n))
    } else {
        (pair.t0.mul(&s)?, pair.t1.clone(), pair.sym0.shift(-n), pair.sym1.clone())
    };
    make_fibre_pair(t0, t1, sym0, sym1, n)
}

/// `sum_k (T_k (x) U^k, T'_k (x) U^k)` with exact symbols `(sigma (x) id)` of both legs.
#[derive(Debug, Clone, PartialEq)]
pub struct CSfpElement {
    legs: [BTreeMap<i64, TruncOp>; 2],
    symbols: [BiLaurentPoly; 2],
}

impl CSfpElement {
    pub fn leg(&self, i: usize) -> &BTreeMap<i64, TruncOp> {
        &self.legs[i]
    }

    pub fn symbol(&self, i: usize) -> &BiLaurentPoly {
        &self.symbols[i]
    }

    /// Degrees with a nonzero coefficient in some leg.
    pub fn degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.legs[0].keys().chain(self.legs[1].keys()).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `W((sigma (x) id) F) = (sigma (x) id) G`.
    pub fn is_w_compatible(&self) -> bool {
        w_map(&self.symbols[0]) == self.symbols[1]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut legs: [BTreeMap<i64, TruncOp>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for (i, leg) in legs.iter_mut().enumerate() {
            for (k, a) in &self.legs[i] {
                for (l, b) in &other.legs[i] {
                    let prod = a.mul(b)?;
                    match leg.remove(&(k + l)) {
                        Some(acc) => leg.insert(k + l, acc.add(&prod)?),
                        None => leg.insert(k + l, prod),
                    };
                }
            }
        }
        Ok(Self {
            legs,
            symbols: [self.symbols[0].mul(&other.symbols[0]), self.symbols[1].mul(&other.symbols[1])],
        })
    }

    pub fn adjoint(&self) -> Self {
        let flip = |leg: &BTreeMap<i64, TruncOp>| leg.iter().map(|(k, t)| (-k, t.adjoint())).collect();
        let flip_sym = |b: &BiLaurentPoly| BiLaurentPoly::from_terms(b.terms().map(|((m, n), c)| ((-m, -n), c.clone())));
        Self {
            legs: [flip(&self.legs[0]), flip(&self.legs[1])],
            symbols: [flip_sym(&self.symbols[0]), flip_sym(&self.symbols[1])],
        }
    }

    /// Largest trusted-block norm over all coefficients of `self - other`.
    pub fn diff_norm(&self, other: &Self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            let keys: std::collections::BTreeSet<i64> =
                self.legs[i].keys().chain(other.legs[i].keys()).copied().collect();
            for k in keys {
                let a = self.legs[i].get(&k);
                let b = other.legs[i].get(&k);
                let r = match (a, b) {
                    (Some(a), Some(b)) => trusted_diff_norm(a, b)?,
                    (Some(a), None) | (None, Some(a)) => trusted_diff_norm(a, &TruncOp::zero(a.dim()))?,
                    (None, None) => 0.0,
                };
                worst = worst.max(r);
            }
        }
        Ok(worst)
    }
}

/// Generator images for the two legs of the embedding of `O(S^3_pq)`:
/// `a -> (z (x) U*, 1 (x) U*)`, `b -> (1 (x) U, y (x) U)`.
pub fn iota_assignments(params: &ParamSet) -> [Assignment; 2] {
    let d = params.d;
    let mut leg0 = Assignment::disc("a", d, params.q);
    leg0.set("b", TruncOp::identity(d)).set("b*", TruncOp::identity(d));
    let mut leg1 = Assignment::disc("b", d, params.p);
    leg1.set("a", TruncOp::identity(d)).set("a*", TruncOp::identity(d));
    [leg0, leg1]
}

/// Symbol exponent `(sigma power, U power)` contributed by each letter on each leg.
fn letter_symbol(name: &str, leg: usize) -> (i64, i64) {
    match (name, leg) {
        ("a", 0) => (1, -1),
        ("a*", 0) => (-1, 1),
        ("b", 0) => (0, 1),
        ("b*", 0) => (0, -1),
        ("a", _) => (0, -1),
        ("a*", _) => (0, 1),
        ("b", _) => (1, 1),
        ("b*", _) => (-1, -1),
        _ => unreachable!("not a generator of O(S^3_pq)"),
    }
}

/// The embedding of `O(S^3_pq)` into pairs of operator-valued Laurent polynomials.
pub fn iota(x: &NCPoly, params: &ParamSet) -> Result<CSfpElement> {
    let s3 = quantum_sphere_s3();
    iota_in(x, &s3, params)
}

fn iota_in(x: &NCPoly, s3: &Presentation, params: &ParamSet) -> Result<CSfpElement> {
    let asg = iota_assignments(params);
    let mut degrees: Vec<i64> = x.terms().map(|(w, _)| s3.word_weight(w)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut legs: [BTreeMap<i64, TruncOp>; 2] = [BTreeMap::new(), BTreeMap::new()];
    for n in degrees {
        let part = s3.homogeneous_component(x, n);
        for (i, leg) in legs.iter_mut().enumerate() {
            leg.insert(n, evaluate(&part, s3, params, &asg[i])?);
        }
    }
    let mut symbols = [BiLaurentPoly::zero(), BiLaurentPoly::zero()];
    for (i, sym) in symbols.iter_mut().enumerate() {
        let mut acc = BiLaurentPoly::zero();
        for (w, c) in x.terms() {
            let (m, n) = w
                .letters()
                .iter()
                .map(|&l| letter_symbol(s3.generator_name(l), i))
                .fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
            acc = acc.add(&BiLaurentPoly::monomial(c.clone(), m, n));
        }
        *sym = acc;
    }
    Ok(CSfpElement { legs, symbols })
}

/// The degree-`N` coefficient `(t0, t1)` as a twist-`N` pair, or `None` if absent.
pub fn extract_degree(e: &CSfpElement, n: i64) -> Result<Option<FibrePair>> {
    let (Some(t0), Some(t1)) = (e.legs[0].get(&n), e.legs[1].get(&n)) else {
        return Ok(None);
    };
    let sym0 = e.symbols[0].second_leg_slice(n);
    let sym1 = e.symbols[1].second_leg_slice(n);
    make_fibre_pair(t0.clone(), t1.clone(), sym0, sym1, n).map(Some)
}

/// Numeric Podleś sphere generators as twist-0 pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PodlesPair {
    pub zeta: FibrePair,
    pub eta: FibrePair,
    pub s: f64,
}

/// `zeta_s = (-s^2 q^2 t, q^2 t)` and `eta_s = (S g0(t), S g1(t))` with
/// `g0 = s sqrt((1 - q^2 t)(1 + s^2 q^2 t))`, `g1 = sqrt((1 - q^2 t)(s^2 + q^2 t))`
/// and `t = diag(q^(2n))`.
pub fn podles_generators(params: &ParamSet) -> Result<PodlesPair> {
    params.validate()?;
    let (q, s, d) = (params.q, params.s, params.d);
    let q2 = q * q;
    let t = disc_defect(d, q2);
    let tn: Vec<f64> = (0..d).map(|n| q2.powi(n as i32)).collect();
    let re = |x: f64| Complex64::new(x, 0.0);
    let zeta = make_fibre_pair(
        t.scale(re(-s * s * q2)),
        t.scale(re(q2)),
        LaurentPoly::zero(),
        LaurentPoly::zero(),
        0,
    )?;
    let g0: Vec<f64> = tn.iter().map(|&x| s * ((1.0 - q2 * x) * (1.0 + s * s * q2 * x)).sqrt()).collect();
    let g1: Vec<f64> = tn.iter().map(|&x| ((1.0 - q2 * x) * (s * s + q2 * x)).sqrt()).collect();
    let sym = LaurentPoly::monomial(CoefPoly::s(), 1);
    let eta = make_fibre_pair(
        TruncOp::weighted_shift(&g0, 1),
        TruncOp::weighted_shift(&g1, 1),
        sym.clone(),
        sym,
        0,
    )?;
    Ok(PodlesPair { zeta, eta, s })
}

/// Residuals of the Podleś relations and of the polar decomposition `eta = (S, S)|eta|`.
pub fn podles_residuals(pp: &PodlesPair, params: &ParamSet) -> Result<Vec<(&'static str, f64)>> {
    let d = params.d;
    let q2 = CoefPoly::q_pow(2);
    let qi2 = CoefPoly::q_pow(-2);
    let one = FibrePair::identity(d);
    let s2 = one.scale(&CoefPoly::s().pow(2), params);
    let (z, e) = (&pp.zeta, &pp.eta);
    let es = e.adjoint();
    let r1 = z.mul(e)?.diff_norm(&e.mul(z)?.scale(&q2, params))?;
    let r2 = es.mul(e)?.diff_norm(&one.sub(z)?.mul(&s2.add(z)?)?)?;
    let zq = z.scale(&qi2, params);
    let r3 = e.mul(&es)?.diff_norm(&one.sub(&zq)?.mul(&s2.add(&zq)?)?)?;
    let r4 = z.adjoint().diff_norm(z)?;
    let polar = {
        let abs0 = sqrt_psd(&e.t0.adjoint().mul(&e.t0)?);
        let abs1 = sqrt_psd(&e.t1.adjoint().mul(&e.t1)?);
        let s = shift(d);
        trusted_diff_norm(&s.mul(&abs0)?, &e.t0)?.max(trusted_diff_norm(&s.mul(&abs1)?, &e.t1)?)
    };
    Ok(vec![
        ("zeta eta = q^2 eta zeta", r1),
        ("eta* eta = (1 - zeta)(s^2 + zeta)", r2),
        ("eta eta* = (1 - q^-2 zeta)(s^2 + q^-2 zeta)", r3),
        ("zeta* = zeta", r4),
        ("eta = (S, S)|eta|", polar),
    ])
}

/// Square root of a diagonal positive operator.
fn sqrt_psd(t: &TruncOp) -> TruncOp {
    let eig = nalgebra::SymmetricEigen::new(t.matrix().clone());
    let v = &eig.eigenvectors;
    let root = eig.eigenvalues.map(|x| Complex64::new(x.max(0.0).sqrt(), 0.0));
    let m = v * nalgebra::DMatrix::from_diagonal(&root) * v.adjoint();
    TruncOp::new(m, t.bandwidth(), t.lattice()).expect("square")
}

/// `E_N` evaluated in pairs of operators, with its exact symbol matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EnNumeric {
    pub n: i64,
    pub size: usize,
    /// Row-major `size x size` twist-0 pairs.
    pub pairs: Vec<FibrePair>,
    /// Row-major symbols (equal on both legs).
    pub symbols: Vec<LaurentPoly>,
}

impl EnNumeric {
    pub fn entry(&self, i: usize, j: usize) -> &FibrePair {
        &self.pairs[i * self.size + j]
    }

    pub fn symbol(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.symbols[i * self.size + j]
    }

    /// Largest entrywise trusted-block residual of `E^2 - E`.
    pub fn idempotent_residual(&self) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for i in 0..self.size {
            for j in 0..self.size {
                let mut acc = FibrePair::zero(self.pairs[0].dim(), 0);
                for k in 0..self.size {
                    acc = acc.add(&self.entry(i, k).mul(self.entry(k, j))?)?;
                }
                worst = worst.max(acc.diff_norm(self.entry(i, j))?);
            }
        }
        Ok(worst)
    }

    /// Whether the symbol matrix is an idempotent, exactly.
    pub fn symbol_is_idempotent(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let sq = (0..self.size).fold(LaurentPoly::zero(), |acc, k| {
                    acc.add(&self.symbol(i, k).mul(self.symbol(k, j)))
                });
                sq == *self.symbol(i, j)
            })
        })
    }
}

/// Evaluates `E_N` through the embedding, where `A -> (1 - zz*, 0)`, `B -> (0, 1 - yy*)`, `R -> (z, y)`.
pub fn en_numeric(n: i64, params: &ParamSet) -> Result<EnNumeric> {
    let data = build_en(n)?;
    let size = data.e.rows();
    let s3 = quantum_sphere_s3();
    let mut pairs = Vec::with_capacity(size * size);
    let mut symbols = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            let x = data.e.get(i, j);
            let pair = match extract_degree(&iota_in(x, &s3, params)?, 0)? {
                Some(p) => p,
                None => FibrePair::zero(params.d, 0),
            };
            symbols.push(pair.sym0.clone());
            pairs.push(pair);
        }
    }
    Ok(EnNumeric { n, size, pairs, symbols })
}

/// The embedding restricted to coinvariants, `(1 - zz*, 0)` etc., built directly from `x`.
pub fn coinvariant_pair(x: &NCPoly, params: &ParamSet) -> Result<FibrePair> {
    let e = iota(x, params)?;
    if e.degrees().iter().any(|&k| k != 0) {
        return Err(Error::Grading("element is not coinvariant".into()));
    }
    Ok(extract_degree(&e, 0)?.unwrap_or_else(|| FibrePair::zero(params.d, 0)))
}

/// The disc generator in parameter `x`; re-exported for callers building pairs by hand.
pub fn disc(d: usize, x: f64) -> TruncOp {
    disc_generator(d, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ParamSet {
        ParamSet { d: 24, ..ParamSet::default() }
    }

    #[test]
    fn unit_and_membership() {
        let d = 8;
        let unit = make_fibre_pair(
            TruncOp::identity(d),
            TruncOp::identity(d),
            LaurentPoly::one(),
            LaurentPoly::one(),
            0,
        )
        .unwrap();
        assert_eq!(unit, FibrePair::identity(d));
        let n = 2;
        let zs = disc(d, 0.5).adjoint().pow(n as u32);
        assert!(make_fibre_pair(zs, TruncOp::identity(d), LaurentPoly::u_pow(-n), LaurentPoly::one(), n).is_ok());
        let bad = make_fibre_pair(disc(d, 0.5), TruncOp::identity(d), LaurentPoly::u_pow(1), LaurentPoly::one(), 0);
        assert!(matches!(bad, Err(Error::Membership(_))));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(0, 6).unwrap(), FibrePair::identity(6));
        let c2 = chi(2, 6).unwrap();
        let diag: Vec<f64> = (0..6).map(|i| c2.t0().entry(i, i).re).collect();
        assert_eq!(diag, vec![0.0, 0.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(c2.mul(&c2).unwrap(), c2);
        assert!(matches!(chi(6, 6), Err(Error::Size(_))));
    }

    #[test]
    fn psi_is_identity_at_zero_and_round_trips() {
        let p = params();
        let x = FibrePair::identity(p.d);
        assert_eq!(psi_iso(&x).unwrap(), x);
        for n in [-2i64, 3] {
            let m = n.unsigned_abs() as u32;
            let z = disc(p.d, p.q);
            let (t0, sym0) = if n > 0 {
                (z.adjoint().pow(m), LaurentPoly::u_pow(-n))
            } else {
                (z.pow(m), LaurentPoly::u_pow(-n))
            };
            let pair = make_fibre_pair(t0, TruncOp::identity(p.d), sym0, LaurentPoly::one(), n).unwrap();
            let image = psi_iso(&pair).unwrap();
            assert_eq!(image.twist(), 0);
            let stable = image.mul(&chi(-n, p.d).unwrap()).unwrap();
            assert!(stable.diff_norm(&image).unwrap() < 1e-15);
            let back = psi_inverse(n, &image).unwrap();
            assert!(back.diff_norm(&pair).unwrap() < 1e-15);
        }
    }

    #[test]
    fn iota_of_generators() {
        let p = params();
        let s3 = quantum_sphere_s3();
        let eb = iota(&s3.gen("b"), &p).unwrap();
        assert_eq!(eb.degrees(), vec![1]);
        assert_eq!(eb.leg(0)[&1], TruncOp::identity(p.d));
        assert_eq!(eb.leg(1)[&1].matrix(), disc(p.d, p.p).matrix());
        let e1 = iota(&NCPoly::one(), &p).unwrap();
        assert_eq!(extract_degree(&e1, 0).unwrap().unwrap(), FibrePair::identity(p.d));
        let ab = iota(&(&s3.gen("a") * &s3.gen("b")), &p).unwrap();
        assert_eq!(ab.degrees(), vec![0]);
        assert_eq!(ab.leg(0)[&0].matrix(), disc(p.d, p.q).matrix());
        assert!(extract_degree(&iota(&s3.gen("a"), &p).unwrap(), 1).unwrap().is_none());
        assert!(ab.is_w_compatible());
    }

    #[test]
    fn iota_of_star_powers() {
        let p = params();
        let s3 = quantum_sphere_s3();
        let n = 3;
        let e = iota(&s3.gen("a*").pow(n), &p).unwrap();
        let pair = extract_degree(&e, n as i64).unwrap().unwrap();
        assert!(trusted_diff_norm(pair.t0(), &disc(p.d, p.q).adjoint().pow(n)).unwrap() < 1e-15);
        assert_eq!(pair.t1(), &TruncOp::identity(p.d).with_bandwidth(pair.t1().bandwidth()));
    }

    #[test]
    fn podles_zeta_is_diagonal() {
        let p = params();
        let pp = podles_generators(&p).unwrap();
        let q2 = p.q * p.q;
        for n in 0..5 {
            let t = q2.powi(n);
            assert!((pp.zeta.t0().entry(n as usize, n as usize).re + p.s * p.s * q2 * t).abs() < 1e-15);
            assert!((pp.zeta.t1().entry(n as usize, n as usize).re - q2 * t).abs() < 1e-15);
        }
        for (name, r) in podles_residuals(&pp, &p).unwrap() {
            assert!(r < 1e-10, "{name}: {r}");
        }
    }

    #[test]
    fn en_zero_and_symbols() {
        let p = params();
        let e0 = en_numeric(0, &p).unwrap();
        assert_eq!(e0.size, 1);
        assert!(e0.entry(0, 0).diff_norm(&FibrePair::identity(p.d)).unwrap() < 1e-15);
        let e1 = en_numeric(1, &p).unwrap();
        assert!(e1.symbol_is_idempotent());
        assert!(e1.idempotent_residual().unwrap() < 1e-10);
    }

    #[test]
    fn symbols_of_sphere_generators() {
        let p = params();
        let s3 = quantum_sphere_s3();
        let big_a = NCPoly::one() - &s3.gen("a") * &s3.gen("a*");
        let big_b = NCPoly::one() - &s3.gen("b") * &s3.gen("b*");
        let r = &s3.gen("a") * &s3.gen("b");
        assert!(coinvariant_pair(&big_a, &p).unwrap().sym0().is_zero());
        assert!(coinvariant_pair(&big_b, &p).unwrap().sym1().is_zero());
        assert_eq!(coinvariant_pair(&r, &p).unwrap().sym0(), &LaurentPoly::u_pow(1));
    }
}
