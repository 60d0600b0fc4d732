//! Truncated operators on `span{e_0, ..., e_(d-1)}` and on the window
//! `span{e_-w, ..., e_w}` of `l^2(Z)`.
//!
//! A truncation is the compression of an infinite matrix to the first basis
//! vectors. Products of compressions differ from compressions of products only
//! near the cut, so each operator carries a trusted bandwidth `L`: the block
//! of indices at distance at least `L` from the cut agrees with the
//! infinite-dimensional operator. Bandwidths add under products.

use std::collections::HashMap;
use std::ops::Range;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::circle::NumLaurent;
use crate::error::{Error, Result};
use crate::symalg::{NCPoly, Param, Presentation};

/// Largest supported truncation dimension.
pub const MAX_DIM: usize = 512;

/// Width of the band next to the trusted region that must vanish for a trace to count as exact.
pub const GUARD_BAND: usize = 2;

/// Numeric parameters of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub q: f64,
    pub p: f64,
    pub s: f64,
    /// Truncation dimension on `N`.
    pub d: usize,
    /// Window radius on `Z`.
    pub w: usize,
    pub tol: f64,
}

impl Default for ParamSet {
    fn default() -> Self {
        Self { q: 0.5, p: 0.5, s: 1.0, d: 64, w: 8, tol: 1e-10 }
    }
}

impl ParamSet {
    pub fn validate(&self) -> Result<()> {
        let open_unit = |x: f64| x > 0.0 && x < 1.0;
        if !open_unit(self.q) || !open_unit(self.p) {
            return Err(Error::Argument(format!(
                "q and p must lie in (0,1), got q = {}, p = {}",
                self.q, self.p
            )));
        }
        if !(self.s > 0.0 && self.s <= 1.0) {
            return Err(Error::Argument(format!("s must lie in (0,1], got {}", self.s)));
        }
        if self.d < 4 || self.d > MAX_DIM {
            return Err(Error::Argument(format!("d must lie in 4..={MAX_DIM}, got {}", self.d)));
        }
        if self.w < 1 || 2 * self.w + 1 > MAX_DIM {
            return Err(Error::Argument(format!("window radius {} out of range", self.w)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Argument("tolerance must be positive".into()));
        }
        Ok(())
    }

    pub fn with_dim(mut self, d: usize) -> Self {
        self.d = d;
        self
    }

    pub fn param(&self, which: Param) -> f64 {
        match which {
            Param::Q => self.q,
            Param::P => self.p,
            Param::S => self.s,
        }
    }
}

/// Index set of a truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    /// `e_0, ..., e_(d-1)`, cut at the bottom only.
    Natural,
    /// `e_-w, ..., e_w`, cut at both ends. Matrix index `i` is basis vector `e_(i-w)`.
    Integer { radius: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncOp {
    m: DMatrix<Complex64>,
    bandwidth: usize,
    lattice: Lattice,
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl TruncOp {
    pub fn new(m: DMatrix<Complex64>, bandwidth: usize, lattice: Lattice) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!("{}x{} matrix is not square", m.nrows(), m.ncols())));
        }
        if let Lattice::Integer { radius } = lattice {
            if m.nrows() != 2 * radius + 1 {
                return Err(Error::Dimension(format!(
                    "window of radius {radius} needs dimension {}",
                    2 * radius + 1
                )));
            }
        }
        let bandwidth = bandwidth.min(m.nrows());
        Ok(Self { m, bandwidth, lattice })
    }

    pub fn identity(d: usize) -> Self {
        Self { m: DMatrix::identity(d, d), bandwidth: 0, lattice: Lattice::Natural }
    }

    pub fn zero(d: usize) -> Self {
        Self { m: DMatrix::zeros(d, d), bandwidth: 0, lattice: Lattice::Natural }
    }

    pub fn window_identity(radius: usize) -> Self {
        let d = 2 * radius + 1;
        Self { m: DMatrix::identity(d, d), bandwidth: 0, lattice: Lattice::Integer { radius } }
    }

    /// `T e_n = weights[n] e_(n+offset)`, truncated to the natural lattice.
    pub fn weighted_shift(weights: &[f64], offset: isize) -> Self {
        let d = weights.len();
        let mut m = DMatrix::zeros(d, d);
        for (n, &x) in weights.iter().enumerate() {
            let target = n as isize + offset;
            if (0..d as isize).contains(&target) {
                m[(target as usize, n)] = c(x);
            }
        }
        Self { m, bandwidth: offset.unsigned_abs().min(d), lattice: Lattice::Natural }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::weighted_shift(values, 0)
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn with_bandwidth(mut self, l: usize) -> Self {
        self.bandwidth = l.min(self.dim());
        self
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.m[(i, j)]
    }

    /// Matrix indices of the trusted block.
    pub fn trusted_range(&self) -> Range<usize> {
        trusted_range(self.dim(), self.bandwidth, self.lattice)
    }

    pub fn trusted_block(&self) -> DMatrix<Complex64> {
        let r = self.trusted_range();
        self.m.view((r.start, r.start), (r.len(), r.len())).into_owned()
    }

    pub fn adjoint(&self) -> Self {
        Self { m: self.m.adjoint(), bandwidth: self.bandwidth, lattice: self.lattice }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() || self.lattice != other.lattice {
            return Err(Error::Dimension(format!(
                "operands of dimension {} ({:?}) and {} ({:?})",
                self.dim(),
                self.lattice,
                other.dim(),
                other.lattice
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            m: &self.m * &other.m,
            bandwidth: (self.bandwidth + other.bandwidth).min(self.dim()),
            lattice: self.lattice,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            m: &self.m + &other.m,
            bandwidth: self.bandwidth.max(other.bandwidth),
            lattice: self.lattice,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            m: &self.m - &other.m,
            bandwidth: self.bandwidth.max(other.bandwidth),
            lattice: self.lattice,
        })
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self { m: &self.m * z, bandwidth: self.bandwidth, lattice: self.lattice }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self {
            m: DMatrix::identity(self.dim(), self.dim()),
            bandwidth: 0,
            lattice: self.lattice,
        };
        for _ in 0..n {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// The offset `k` such that every nonzero entry sits at `(j + k, j)`, if there is one.
    fn single_diagonal(&self) -> Option<isize> {
        let mut offset = None;
        for j in 0..self.dim() {
            for i in 0..self.dim() {
                if self.m[(i, j)] != Complex64::new(0.0, 0.0) {
                    let k = i as isize - j as isize;
                    match offset {
                        None => offset = Some(k),
                        Some(o) if o != k => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(offset.unwrap_or(0))
    }
}

fn trusted_range(d: usize, l: usize, lattice: Lattice) -> Range<usize> {
    match lattice {
        Lattice::Natural => 0..d.saturating_sub(l),
        Lattice::Integer { .. } => {
            if 2 * l >= d {
                0..0
            } else {
                l..d - l
            }
        }
    }
}

/// `S e_n = e_(n+1)`, compressed so that `S e_(d-1) = 0`.
pub fn shift(d: usize) -> TruncOp {
    TruncOp::weighted_shift(&vec![1.0; d], 1)
}

/// The generator of the quantum disc in parameter `x`: `z e_n = sqrt(1 - x^(n+1)) e_(n+1)`.
pub fn disc_generator(d: usize, x: f64) -> TruncOp {
    let weights: Vec<f64> = (0..d).map(|n| (1.0 - x.powi(n as i32 + 1)).sqrt()).collect();
    TruncOp::weighted_shift(&weights, 1)
}

/// `t = 1 - z z* = diag(x^n)`.
pub fn disc_defect(d: usize, x: f64) -> TruncOp {
    let v: Vec<f64> = (0..d).map(|n| x.powi(n as i32)).collect();
    TruncOp::diagonal(&v)
}

/// Generator images keyed by generator name.
#[derive(Debug, Clone, Default)]
pub struct Assignment {
    map: HashMap<String, TruncOp>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: &str, op: TruncOp) -> &mut Self {
        self.map.insert(name.to_string(), op);
        self
    }

    pub fn get(&self, name: &str) -> Option<&TruncOp> {
        self.map.get(name)
    }

    /// `name -> z`, `name* -> z*` for the disc generator in parameter `x`.
    pub fn disc(name: &str, d: usize, x: f64) -> Self {
        let z = disc_generator(d, x);
        let mut a = Self::new();
        a.set(&format!("{name}*"), z.adjoint());
        a.set(name, z);
        a
    }
}

/// The disc representation of an element of the quantum disc in `q`.
pub fn disc_rep(x: &NCPoly, params: &ParamSet) -> Result<TruncOp> {
    let disc = crate::symalg::quantum_disc();
    evaluate(x, &disc, params, &Assignment::disc("z", params.d, params.q))
}

/// Sends generators to operators and evaluates `x` with numeric parameters.
///
/// The trusted bandwidth is `(max word length) * (max assigned bandwidth)`.
/// When every assigned operator has a single nonzero diagonal, products are
/// formed diagonal by diagonal in `O(d)` per letter.
pub fn evaluate(x: &NCPoly, p: &Presentation, params: &ParamSet, asg: &Assignment) -> Result<TruncOp> {
    let mut letters: Vec<Option<&TruncOp>> = Vec::with_capacity(p.num_generators());
    for g in p.generators() {
        letters.push(asg.get(&g.name));
    }
    let mut dim_lattice: Option<(usize, Lattice)> = None;
    let mut max_bw = 0;
    for l in x.letters() {
        let op = letters
            .get(l.0 as usize)
            .copied()
            .flatten()
            .ok_or_else(|| {
                let name = p.generators().get(l.0 as usize).map_or("?", |g| g.name.as_str());
                Error::MissingLetter(name.to_string())
            })?;
        match dim_lattice {
            None => dim_lattice = Some((op.dim(), op.lattice())),
            Some((d, lat)) if d != op.dim() || lat != op.lattice() => {
                return Err(Error::Dimension(format!(
                    "generator images have dimensions {d} and {}",
                    op.dim()
                )))
            }
            _ => {}
        }
        max_bw = max_bw.max(op.bandwidth());
    }
    let (d, lattice) = dim_lattice.unwrap_or((params.d, Lattice::Natural));
    if let Lattice::Integer { radius } = lattice {
        debug_assert_eq!(d, 2 * radius + 1);
    }
    let bandwidth = (x.max_word_len() * max_bw).min(d);

    let bands: Option<Vec<Option<Band>>> = letters
        .iter()
        .map(|op| match op {
            None => Some(None),
            Some(op) => op.single_diagonal().map(|k| Some(Band::from_op(op, k))),
        })
        .collect();

    let mut out = DMatrix::<Complex64>::zeros(d, d);
    for (w, coef) in x.terms() {
        let k = c(coef.eval(params.q, params.p, params.s));
        match &bands {
            Some(bands) => {
                let mut acc = Band::identity(d);
                for l in w.letters() {
                    acc = acc.mul(bands[l.0 as usize].as_ref().expect("checked above"));
                }
                acc.accumulate(&mut out, k);
            }
            None => {
                let mut acc = DMatrix::<Complex64>::identity(d, d);
                for l in w.letters() {
                    acc = &acc * letters[l.0 as usize].expect("checked above").matrix();
                }
                out += acc * k;
            }
        }
    }
    TruncOp::new(out, bandwidth, lattice)
}

/// A matrix with one nonzero diagonal: column `j` holds `w[j]` in row `j + offset`.
#[derive(Debug, Clone)]
struct Band {
    offset: isize,
    w: Vec<Complex64>,
}

impl Band {
    fn identity(d: usize) -> Self {
        Self { offset: 0, w: vec![c(1.0); d] }
    }

    fn from_op(op: &TruncOp, offset: isize) -> Self {
        let d = op.dim();
        let w = (0..d)
            .map(|j| {
                let i = j as isize + offset;
                if (0..d as isize).contains(&i) {
                    op.m[(i as usize, j)]
                } else {
                    c(0.0)
                }
            })
            .collect();
        Self { offset, w }
    }

    /// `self * other`.
    fn mul(&self, other: &Band) -> Band {
        let d = self.w.len() as isize;
        let w = (0..d)
            .map(|j| {
                let mid = j + other.offset;
                if (0..d).contains(&mid) {
                    self.w[mid as usize] * other.w[j as usize]
                } else {
                    c(0.0)
                }
            })
            .collect();
        Band { offset: self.offset + other.offset, w }
    }

    fn accumulate(&self, out: &mut DMatrix<Complex64>, k: Complex64) {
        let d = self.w.len() as isize;
        for j in 0..d {
            let i = j + self.offset;
            if (0..d).contains(&i) {
                out[(i as usize, j as usize)] += self.w[j as usize] * k;
            }
        }
    }
}

/// Sign of a circle representation on the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiSign {
    /// `U` acts as the bilateral shift.
    Plus,
    /// `U` skips `e_0`: `e_-1 -> e_1`, `e_0 -> 0`.
    Minus,
}

/// The image of `U^n` on the window of radius `w`.
pub fn pi_monomial(sign: PiSign, n: i64, w: usize) -> Result<TruncOp> {
    if n.unsigned_abs() > w as u64 {
        return Err(Error::WindowOverflow { power: n, radius: w });
    }
    let d = 2 * w + 1;
    let r = w as i64;
    let mut m = DMatrix::zeros(d, d);
    for k in -r..=r {
        let target = match sign {
            PiSign::Plus => Some(k + n),
            PiSign::Minus if k == 0 => None,
            PiSign::Minus => {
                // Relabel Z \ {0} as Z, shift, relabel back.
                let flat = if k < 0 { k } else { k - 1 };
                let moved = flat + n;
                Some(if moved < 0 { moved } else { moved + 1 })
            }
        };
        if let Some(t) = target {
            if (-r..=r).contains(&t) {
                m[((t + r) as usize, (k + r) as usize)] = c(1.0);
            }
        }
    }
    TruncOp::new(m, n.unsigned_abs() as usize, Lattice::Integer { radius: w })
}

/// `pi_(+/-)(f)` on the window of radius `w`.
pub fn pi_rep(sign: PiSign, f: &NumLaurent, w: usize) -> Result<TruncOp> {
    let d = 2 * w + 1;
    let mut out = TruncOp::new(DMatrix::zeros(d, d), 0, Lattice::Integer { radius: w })?;
    for (n, coef) in f.terms() {
        out = out.add(&pi_monomial(sign, n, w)?.scale(*coef))?;
    }
    Ok(out)
}

/// The Toeplitz operator of a symbol: `T e_n = sum_k c_k e_(n+k)`, indices kept nonnegative.
pub fn toeplitz(symbol: &NumLaurent, d: usize) -> TruncOp {
    let mut m = DMatrix::zeros(d, d);
    let mut bw = 0;
    for (k, coef) in symbol.terms() {
        bw = bw.max(k.unsigned_abs() as usize);
        for j in 0..d as i64 {
            let i = j + k;
            if (0..d as i64).contains(&i) {
                m[(i as usize, j as usize)] += *coef;
            }
        }
    }
    TruncOp { m, bandwidth: bw.min(d), lattice: Lattice::Natural }
}

/// Trace over the trusted block, and whether the operator is certified finite rank.
///
/// `exact` holds when every entry outside the block shrunk by [`GUARD_BAND`]
/// has modulus at most `tail_tol`.
pub fn trace_finite_rank(a: &TruncOp, tail_tol: f64) -> (Complex64, bool) {
    let r = a.trusted_range();
    let value: Complex64 = r.clone().map(|i| a.m[(i, i)]).sum();
    let inner = match a.lattice {
        Lattice::Natural => 0..r.end.saturating_sub(GUARD_BAND),
        Lattice::Integer { .. } => {
            let lo = r.start + GUARD_BAND;
            let hi = r.end.saturating_sub(GUARD_BAND);
            if lo < hi {
                lo..hi
            } else {
                0..0
            }
        }
    };
    let d = a.dim();
    let mut exact = true;
    'outer: for j in 0..d {
        for i in 0..d {
            if inner.contains(&i) && inner.contains(&j) {
                continue;
            }
            if a.m[(i, j)].norm() > tail_tol {
                exact = false;
                break 'outer;
            }
        }
    }
    (value, exact)
}

/// Default tail tolerance: exact zeros.
pub fn trace_finite_rank_default(a: &TruncOp) -> (Complex64, bool) {
    trace_finite_rank(a, 0.0)
}

/// Spectral norm of `a - b` on the common trusted block.
pub fn trusted_diff_norm(a: &TruncOp, b: &TruncOp) -> Result<f64> {
    a.check_compatible(b)?;
    let l = a.bandwidth.max(b.bandwidth);
    let r = trusted_range(a.dim(), l, a.lattice);
    if r.is_empty() {
        return Ok(0.0);
    }
    let diff = (&a.m - &b.m).view((r.start, r.start), (r.len(), r.len())).into_owned();
    Ok(spectral_norm(&diff))
}

pub fn spectral_norm(m: &DMatrix<Complex64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.singular_values().iter().copied().fold(0.0, f64::max)
}

/// Eigenvalues of a self-adjoint operator on its trusted block, ascending.
pub fn trusted_eigenvalues(a: &TruncOp) -> Vec<f64> {
    let block = a.trusted_block();
    let mut v: Vec<f64> = nalgebra::SymmetricEigen::new(block).eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

/// `|T|^-1 = (T* T)^(-1/2)` on the trusted block of `T* T`, zero elsewhere.
pub fn inverse_abs(t: &TruncOp) -> Result<TruncOp> {
    let tt = t.adjoint().mul(t)?;
    let r = tt.trusted_range();
    let eig = nalgebra::SymmetricEigen::new(tt.trusted_block());
    if let Some(min) = eig.eigenvalues.iter().copied().reduce(f64::min) {
        if min <= 0.0 {
            return Err(Error::Precondition(format!(
                "T*T is not positive definite on the trusted block (min eigenvalue {min:e})"
            )));
        }
    }
    let inv_sqrt = eig.eigenvalues.map(|x| c(1.0 / x.sqrt()));
    let v = &eig.eigenvectors;
    let block = v * DMatrix::from_diagonal(&inv_sqrt) * v.adjoint();
    let mut m = DMatrix::zeros(tt.dim(), tt.dim());
    m.view_mut((r.start, r.start), (r.len(), r.len())).copy_from(&block);
    TruncOp::new(m, tt.bandwidth(), tt.lattice())
}
