//! Matrices over presentations, the line-bundle idempotents `E_N = X_N Y_N^T`
//! and the Podleś sphere generators inside quantum SU(2).

use super::coef::{CoefPoly, Param};
use super::gaussian::gaussian_binomial;
use super::ncpoly::NCPoly;
use super::presentation::{quantum_sphere_s3, quantum_su2, Presentation};
use super::rewrite::normal_form;
use crate::error::{Error, Result};

/// Default bound on `|N|` for [`build_en`].
pub const EN_CAP: u32 = 4;

/// A rectangular matrix of noncommutative polynomials, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<NCPoly>,
}

impl SymMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![NCPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    pub fn column(entries: Vec<NCPoly>) -> Self {
        Self { rows: entries.len(), cols: 1, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: NCPoly) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Product with every entry brought to normal form.
    pub fn mul(&self, other: &SymMatrix, p: &Presentation) -> Result<SymMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = NCPoly::zero();
                for k in 0..self.cols {
                    acc += &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, normal_form(&acc, p)?);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix shapes differ".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn normal_form(&self, p: &Presentation) -> Result<SymMatrix> {
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|x| normal_form(x, p))
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }
}

/// Which deformation parameter accompanies `B` (for `N > 0`) and `A` (for `N < 0`) in `Y_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum YAssignment {
    /// `Y_n` carries `p`-binomials with `B`, `Y_{-n}` carries `q`-binomials with `A`.
    /// With this choice `Y_N^T X_N = 1`.
    #[default]
    Corrected,
    /// `Y_n` with `q`-binomials and `Y_{-n}` with `p`-binomials. Fails `Y_1^T X_1 = 1`
    /// by `(q - p)(1 - bb*)`.
    Literal,
}

/// The column vectors `X_N`, `Y_N` and the idempotent `E_N = X_N Y_N^T` over `O(S^3_pq)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineBundleData {
    pub n: i64,
    pub x: SymMatrix,
    pub y: SymMatrix,
    /// Entries in normal form.
    pub e: SymMatrix,
}

pub fn build_en(n: i64) -> Result<LineBundleData> {
    build_en_with(n, YAssignment::Corrected, EN_CAP)
}

pub fn build_en_with(n: i64, assignment: YAssignment, cap: u32) -> Result<LineBundleData> {
    if n.unsigned_abs() > cap as u64 {
        return Err(Error::Size(format!("|N| = {} exceeds the cap {cap}", n.abs())));
    }
    let s3 = quantum_sphere_s3();
    let m = n.unsigned_abs() as u32;
    let (a, a_s, b, b_s) = (s3.gen("a"), s3.gen("a*"), s3.gen("b"), s3.gen("b*"));
    let big_a = NCPoly::one() - &a * &a_s;
    let big_b = NCPoly::one() - &b * &b_s;

    let param = |positive: bool| match (assignment, positive) {
        (YAssignment::Corrected, true) | (YAssignment::Literal, false) => Param::P,
        _ => Param::Q,
    };
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for k in 0..=m {
        let j = m - k;
        if n >= 0 {
            xs.push(&b.pow(k) * &a_s.pow(j));
            let x = param(true);
            let c = gaussian_binomial(m, k, x)? * CoefPoly::param_pow(x, j as i32);
            ys.push((&(&big_b.pow(j) * &a.pow(j)) * &b_s.pow(k)).scale(&c));
        } else {
            xs.push(&a.pow(k) * &b_s.pow(j));
            let x = param(false);
            let c = gaussian_binomial(m, k, x)? * CoefPoly::param_pow(x, j as i32);
            ys.push((&(&big_a.pow(j) * &b.pow(j)) * &a_s.pow(k)).scale(&c));
        }
    }
    let x = SymMatrix::column(xs);
    let y = SymMatrix::column(ys);
    let e = x.mul(&y.transpose(), &s3)?;
    Ok(LineBundleData { n, x, y, e })
}

impl LineBundleData {
    /// `Y_N^T X_N` in normal form, a 1x1 matrix.
    pub fn y_transpose_x(&self) -> Result<NCPoly> {
        let s3 = quantum_sphere_s3();
        Ok(self.y.transpose().mul(&self.x, &s3)?.get(0, 0).clone())
    }

    /// `E_N^2 - E_N` in normal form.
    pub fn idempotency_defect(&self) -> Result<SymMatrix> {
        let s3 = quantum_sphere_s3();
        self.e.mul(&self.e, &s3)?.sub(&self.e)
    }
}

/// `zeta_s = 1 - (a - q s c)(d + s b)` in quantum SU(2).
pub fn podles_zeta(su2: &Presentation) -> NCPoly {
    let qs = CoefPoly::q() * CoefPoly::s();
    let left = su2.gen("a") - su2.gen("c").scale(&qs);
    let right = su2.gen("d") + su2.gen("b").scale(&CoefPoly::s());
    NCPoly::one() - &left * &right
}

/// `eta_s = (d + q^-1 s b)(b - s d)` in quantum SU(2).
pub fn podles_eta(su2: &Presentation) -> NCPoly {
    let qis = CoefPoly::q_pow(-1) * CoefPoly::s();
    let left = su2.gen("d") + su2.gen("b").scale(&qis);
    let right = su2.gen("b") - su2.gen("d").scale(&CoefPoly::s());
    &left * &right
}

/// The three defining relations of the Podleś sphere, as `lhs - rhs` in quantum SU(2).
pub fn podles_relation_defects() -> Result<Vec<(&'static str, NCPoly)>> {
    let su2 = quantum_su2();
    let zeta = podles_zeta(&su2);
    let eta = podles_eta(&su2);
    let eta_s = su2.adjoint(&eta);
    let one = NCPoly::one();
    let s2 = NCPoly::constant(CoefPoly::s().pow(2));
    let qi2 = CoefPoly::q_pow(-2);
    let q2 = CoefPoly::q_pow(2);
    let rels = vec![
        ("zeta eta = q^2 eta zeta", &zeta * &eta - (&eta * &zeta).scale(&q2)),
        (
            "eta* eta = (1 - zeta)(s^2 + zeta)",
            &eta_s * &eta - &(&one - &zeta) * &(&s2 + &zeta),
        ),
        (
            "eta eta* = (1 - q^-2 zeta)(s^2 + q^-2 zeta)",
            &eta * &eta_s - &(&one - &zeta.scale(&qi2)) * &(&s2 + &zeta.scale(&qi2)),
        ),
        ("zeta* = zeta", su2.adjoint(&zeta) - zeta.clone()),
    ];
    rels.into_iter()
        .map(|(name, x)| Ok((name, normal_form(&x, &su2)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_zero_is_trivial() {
        let d = build_en(0).unwrap();
        assert_eq!(d.x, SymMatrix::column(vec![NCPoly::one()]));
        assert_eq!(d.y, SymMatrix::column(vec![NCPoly::one()]));
        assert_eq!(d.e, SymMatrix::identity(1));
    }

    #[test]
    fn n_one_vectors() {
        let s3 = quantum_sphere_s3();
        let d = build_en(1).unwrap();
        assert_eq!(d.x.get(0, 0), &s3.gen("a*"));
        assert_eq!(d.x.get(1, 0), &s3.gen("b"));
        assert_eq!(d.y.get(1, 0), &s3.gen("b*"));
    }

    #[test]
    fn corrected_assignment_gives_unit() {
        for n in [-1, 1] {
            assert_eq!(build_en(n).unwrap().y_transpose_x().unwrap(), NCPoly::one());
        }
    }

    #[test]
    fn literal_assignment_witness() {
        let s3 = quantum_sphere_s3();
        let d = build_en_with(1, YAssignment::Literal, EN_CAP).unwrap();
        let big_b = NCPoly::one() - &s3.gen("b") * &s3.gen("b*");
        let expected = NCPoly::one() + big_b.scale(&(&CoefPoly::q() - &CoefPoly::p()));
        assert_eq!(d.y_transpose_x().unwrap(), expected);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_en(5), Err(Error::Size(_))));
        assert!(build_en_with(5, YAssignment::Corrected, 5).is_ok());
    }

    #[test]
    fn entries_are_coinvariant() {
        let s3 = quantum_sphere_s3();
        let d = build_en(-2).unwrap();
        for x in d.e.entries() {
            assert_eq!(s3.degree(x).unwrap(), 0);
        }
    }
}
