//! Laurent polynomials in the unitary generator `U` of the circle algebra, the
//! Hopf structure on them, and the two-variable maps `W` and `Phi`.
//!
//! Coefficients are either exact ([`CoefPoly`]) or numeric ([`Complex64`]).
//! The mode is a type parameter, so mixing the two does not compile.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::symalg::CoefPoly;

/// Coefficient field of a Laurent polynomial.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Complex conjugation; the identity on exact coefficients, whose parameters are real.
    fn conjugate(&self) -> Self;
}

impl Scalar for CoefPoly {
    fn zero_value() -> Self {
        CoefPoly::zero()
    }
    fn one_value() -> Self {
        CoefPoly::one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

impl Scalar for Complex64 {
    fn zero_value() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_value() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero_value(&self) -> bool {
        *self == Complex64::new(0.0, 0.0)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
}

fn insert<K: Ord, C: Scalar>(map: &mut BTreeMap<K, C>, k: K, c: C) {
    if c.is_zero_value() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().plus(&c);
            if sum.is_zero_value() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// `sum_n c_n U^n` with finitely many nonzero `c_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Laurent<C: Scalar> {
    terms: BTreeMap<i64, C>,
}

/// Exact Laurent polynomial.
pub type LaurentPoly = Laurent<CoefPoly>;
/// Numeric Laurent polynomial.
pub type NumLaurent = Laurent<Complex64>;

impl<C: Scalar> Default for Laurent<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(C::one_value(), 0)
    }

    /// `c U^n`.
    pub fn monomial(c: C, n: i64) -> Self {
        let mut out = Self::zero();
        insert(&mut out.terms, n, c);
        out
    }

    /// `U^n`.
    pub fn u_pow(n: i64) -> Self {
        Self::monomial(C::one_value(), n)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (n, c) in terms {
            insert(&mut out.terms, n, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn coefficient(&self, n: i64) -> C {
        self.terms.get(&n).cloned().unwrap_or_else(C::zero_value)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            insert(&mut out.terms, *n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (*n, c.negate())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.terms {
            for (m, d) in &other.terms {
                insert(&mut out.terms, n + m, c.times(d));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, d)| (*n, d.times(c))))
    }

    /// Multiplication by `U^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (n + k, c.clone())))
    }

    /// The involution `U* = U^-1` with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (-n, c.conjugate())))
    }

    /// `(U^n) (x) 1`: places the polynomial in the first tensor leg.
    pub fn tensor(&self, other: &Self) -> BiLaurent<C> {
        let mut out = BiLaurent::zero();
        for (n, c) in &self.terms {
            for (m, d) in &other.terms {
                insert(&mut out.terms, (*n, *m), c.times(d));
            }
        }
        out
    }
}

impl LaurentPoly {
    /// Substitutes numeric parameter values in every coefficient.
    pub fn to_numeric(&self, q: f64, p: f64, s: f64) -> NumLaurent {
        NumLaurent::from_terms(
            self.terms
                .iter()
                .map(|(n, c)| (*n, Complex64::new(c.eval(q, p, s), 0.0))),
        )
    }
}

/// `sum c_{m,n} U^m (x) U^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BiLaurent<C: Scalar> {
    terms: BTreeMap<(i64, i64), C>,
}

pub type BiLaurentPoly = BiLaurent<CoefPoly>;

impl<C: Scalar> Default for BiLaurent<C> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> BiLaurent<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: C, m: i64, n: i64) -> Self {
        Self::from_terms([((m, n), c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, i64), C)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            insert(&mut out.terms, k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &C)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, m: i64, n: i64) -> C {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(C::zero_value)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            insert(&mut out.terms, *k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&Self::from_terms(other.terms.iter().map(|(k, c)| (*k, c.negate()))))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((m, n), c) in &self.terms {
            for ((m2, n2), d) in &other.terms {
                insert(&mut out.terms, (m + m2, n + n2), c.times(d));
            }
        }
        out
    }

    fn map_exponents(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> Self {
        Self::from_terms(self.terms.iter().map(|((m, n), c)| (f(*m, *n), c.clone())))
    }

    /// Multiplication of the two legs, `U^m (x) U^n -> U^(m+n)`.
    pub fn multiply_legs(&self) -> Laurent<C> {
        Laurent::from_terms(self.terms.iter().map(|((m, n), c)| (m + n, c.clone())))
    }

    /// The part with second exponent `n`, as a polynomial in the first leg.
    pub fn second_leg_slice(&self, n: i64) -> Laurent<C> {
        Laurent::from_terms(
            self.terms
                .iter()
                .filter(|((_, k), _)| *k == n)
                .map(|((m, _), c)| (*m, c.clone())),
        )
    }

    /// Second exponents that occur.
    pub fn second_leg_degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|(_, n)| *n).collect();
        v.dedup();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// `U^N -> U^N (x) U^N`.
pub fn hopf_coproduct<C: Scalar>(f: &Laurent<C>) -> BiLaurent<C> {
    BiLaurent::from_terms(f.terms().map(|(n, c)| ((n, n), c.clone())))
}

/// `U^N -> 1`: the coefficient sum.
pub fn hopf_counit<C: Scalar>(f: &Laurent<C>) -> C {
    f.terms().fold(C::zero_value(), |acc, (_, c)| acc.plus(c))
}

/// `U^N -> U^-N`.
pub fn hopf_antipode<C: Scalar>(f: &Laurent<C>) -> Laurent<C> {
    Laurent::from_terms(f.terms().map(|(n, c)| (-n, c.clone())))
}

/// `(eps (x) id)(f)`.
pub fn counit_left<C: Scalar>(f: &BiLaurent<C>) -> Laurent<C> {
    Laurent::from_terms(f.terms().map(|((_, n), c)| (n, c.clone())))
}

/// `(id (x) eps)(f)`.
pub fn counit_right<C: Scalar>(f: &BiLaurent<C>) -> Laurent<C> {
    Laurent::from_terms(f.terms().map(|((m, _), c)| (m, c.clone())))
}

/// Three-leg monomials `U^i (x) U^j (x) U^k`.
pub type TriTerms<C> = BTreeMap<(i64, i64, i64), C>;

/// `(Delta (x) id) Delta f` and `(id (x) Delta) Delta f`.
pub fn iterated_coproducts<C: Scalar>(f: &Laurent<C>) -> (TriTerms<C>, TriTerms<C>) {
    let delta = hopf_coproduct(f);
    let mut left = TriTerms::new();
    let mut right = TriTerms::new();
    for ((m, n), c) in delta.terms() {
        for ((i, j), d) in hopf_coproduct(&Laurent::monomial(c.clone(), m)).terms() {
            insert(&mut left, (i, j, n), d.clone());
        }
        for ((j, k), d) in hopf_coproduct(&Laurent::monomial(c.clone(), n)).terms() {
            insert(&mut right, (m, j, k), d.clone());
        }
    }
    (left, right)
}

/// Applies maps to each tensor leg.
pub fn tensor_map<C: Scalar>(
    f: &BiLaurent<C>,
    left: impl Fn(&Laurent<C>) -> Laurent<C>,
    right: impl Fn(&Laurent<C>) -> Laurent<C>,
) -> BiLaurent<C> {
    let mut out = BiLaurent::zero();
    for ((m, n), c) in f.terms() {
        let l = left(&Laurent::u_pow(m));
        let r = right(&Laurent::u_pow(n));
        out = out.add(&l.scale(c).tensor(&r));
    }
    out
}

/// `W(g (x) U^N) = g U^N (x) U^N`: `(m, n) -> (m + n, n)`.
pub fn w_map<C: Scalar>(f: &BiLaurent<C>) -> BiLaurent<C> {
    f.map_exponents(|m, n| (m + n, n))
}

/// `(m, n) -> (m - n, n)`.
pub fn w_inverse<C: Scalar>(f: &BiLaurent<C>) -> BiLaurent<C> {
    f.map_exponents(|m, n| (m - n, n))
}

/// `Phi(f (x) U^N) = f U^N (x) U^N`, computed by splitting `f` along the
/// second leg and multiplying each slice by `U^N`.
pub fn phi_map<C: Scalar>(f: &BiLaurent<C>) -> BiLaurent<C> {
    let mut out = BiLaurent::zero();
    for n in f.second_leg_degrees() {
        let slice = f.second_leg_slice(n).mul(&Laurent::u_pow(n));
        out = out.add(&slice.tensor(&Laurent::u_pow(n)));
    }
    out
}

const UNIT_TOL: f64 = 1e-12;

/// Substitutes `U -> u` for a point `u` of the unit circle.
pub fn eval_point(f: &NumLaurent, u: Complex64) -> Result<Complex64> {
    if (u.norm() - 1.0).abs() > UNIT_TOL {
        return Err(Error::Argument(format!("|u| = {} is not 1", u.norm())));
    }
    Ok(f.terms().map(|(n, c)| c * u.powi(n as i32)).sum())
}

/// Evaluation of an exact polynomial at numeric parameters and a point of the circle.
pub fn eval_point_exact(f: &LaurentPoly, u: Complex64, q: f64, p: f64, s: f64) -> Result<Complex64> {
    eval_point(&f.to_numeric(q, p, s), u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: i64) -> LaurentPoly {
        LaurentPoly::u_pow(n)
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(hopf_coproduct(&u(1)), BiLaurent::monomial(CoefPoly::one(), 1, 1));
        assert_eq!(hopf_coproduct(&LaurentPoly::one()), BiLaurent::monomial(CoefPoly::one(), 0, 0));
        let f = u(1).scale(&CoefPoly::integer(2)).add(&u(-3));
        let expected = BiLaurent::from_terms([((1, 1), CoefPoly::integer(2)), ((-3, -3), CoefPoly::one())]);
        assert_eq!(hopf_coproduct(&f), expected);
    }

    #[test]
    fn counit_and_antipode() {
        assert_eq!(hopf_counit(&u(5)), CoefPoly::one());
        assert_eq!(hopf_antipode(&u(3)), u(-3));
        assert_eq!(hopf_antipode(&LaurentPoly::one()), LaurentPoly::one());
    }

    #[test]
    fn w_examples() {
        let uu = BiLaurentPoly::monomial(CoefPoly::one(), 1, 1);
        let u2u = BiLaurentPoly::monomial(CoefPoly::one(), 2, 1);
        assert_eq!(w_map(&uu), u2u);
        assert_eq!(w_inverse(&u2u), uu);
        let g = BiLaurentPoly::monomial(CoefPoly::q(), 4, 0);
        assert_eq!(w_map(&g), g);
        assert_eq!(phi_map(&u2u), BiLaurentPoly::monomial(CoefPoly::one(), 3, 1));
    }

    #[test]
    fn evaluation() {
        let i = Complex64::new(0.0, 1.0);
        assert_eq!(eval_point(&NumLaurent::u_pow(1), i).unwrap(), i);
        let one = NumLaurent::u_pow(1).mul(&NumLaurent::u_pow(-1));
        assert_eq!(eval_point(&one, Complex64::from_polar(1.0, 0.3)).unwrap(), Complex64::new(1.0, 0.0));
        assert!(matches!(eval_point(&one, Complex64::new(2.0, 0.0)), Err(Error::Argument(_))));
    }
}
