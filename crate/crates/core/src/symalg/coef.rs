//! Exact scalar coefficients: rational polynomials in `s`, Laurent in `q` and `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponents of `q^e_q p^e_p s^e_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub q: i32,
    pub p: i32,
    pub s: u32,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { q: 0, p: 0, s: 0 };

    fn add(self, other: Exponent) -> Exponent {
        Exponent {
            q: self.q + other.q,
            p: self.p + other.p,
            s: self.s + other.s,
        }
    }
}

/// The deformation parameters that may appear in a coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    Q,
    P,
    S,
}

/// A rational-coefficient polynomial in `s`, Laurent in `q` and `p`.
///
/// Zero coefficients are never stored and terms are kept in a sorted map,
/// so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoefPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl CoefPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(c: BigRational) -> Self {
        Self::monomial(c, Exponent::ONE)
    }

    pub fn monomial(c: BigRational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `param^k` with unit coefficient. Negative powers of `s` are rejected.
    pub fn param_pow(param: Param, k: i32) -> Self {
        let e = match param {
            Param::Q => Exponent { q: k, ..Exponent::ONE },
            Param::P => Exponent { p: k, ..Exponent::ONE },
            Param::S => {
                assert!(k >= 0, "s only appears with nonnegative exponents");
                Exponent { s: k as u32, ..Exponent::ONE }
            }
        };
        Self::monomial(BigRational::one(), e)
    }

    pub fn q() -> Self {
        Self::param_pow(Param::Q, 1)
    }

    pub fn p() -> Self {
        Self::param_pow(Param::P, 1)
    }

    pub fn s() -> Self {
        Self::param_pow(Param::S, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::param_pow(Param::Q, k)
    }

    pub fn p_pow(k: i32) -> Self {
        Self::param_pow(Param::P, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponent::ONE)
                .is_some_and(|c| c.is_one())
    }

    /// Whether the coefficient is a single rational number (no parameters).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Exponent::ONE).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes numeric parameter values.
    pub fn eval(&self, q: f64, p: f64, s: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                c.to_f64().unwrap_or(f64::NAN) * q.powi(e.q) * p.powi(e.p) * s.powi(e.s as i32)
            })
            .sum()
    }

    /// Substitutes rational parameter values exactly.
    pub fn eval_exact(&self, q: &BigRational, p: &BigRational, s: &BigRational) -> BigRational {
        let pw = |x: &BigRational, k: i32| -> BigRational {
            if k >= 0 {
                num_traits::pow(x.clone(), k as usize)
            } else {
                num_traits::pow(x.recip(), (-k) as usize)
            }
        };
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            acc + c * pw(q, e.q) * pw(p, e.p) * pw(s, e.s as i32)
        })
    }

    /// The inverse of a single monomial without `s`, if it exists in the ring.
    pub fn inverse_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if e.s != 0 {
            return None;
        }
        Some(Self::monomial(c.recip(), Exponent { q: -e.q, p: -e.p, s: 0 }))
    }

    /// Exchanges the roles of `q` and `p`.
    pub fn swap_qp(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent { q: e.p, p: e.q, s: e.s }, c.clone()))
                .collect(),
        }
    }
}

impl From<i64> for CoefPoly {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add<&CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn add(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CoefPoly {
    type Output = CoefPoly;
    fn add(mut self, rhs: CoefPoly) -> CoefPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&CoefPoly> for CoefPoly {
    fn add_assign(&mut self, rhs: &CoefPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&CoefPoly> for CoefPoly {
    fn sub_assign(&mut self, rhs: &CoefPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn sub(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CoefPoly {
    type Output = CoefPoly;
    fn sub(mut self, rhs: CoefPoly) -> CoefPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        CoefPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        -&self
    }
}

impl Mul<&CoefPoly> for &CoefPoly {
    type Output = CoefPoly;
    fn mul(self, rhs: &CoefPoly) -> CoefPoly {
        let mut out = CoefPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(*e2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for CoefPoly {
    type Output = CoefPoly;
    fn mul(self, rhs: CoefPoly) -> CoefPoly {
        &self * &rhs
    }
}

impl Zero for CoefPoly {
    fn zero() -> Self {
        CoefPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for CoefPoly {
    fn one() -> Self {
        CoefPoly::one()
    }
}

fn fmt_monomial(e: &Exponent) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("q", e.q), ("p", e.p), ("s", e.s as i32)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoefPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = &CoefPoly::q() - &CoefPoly::q();
        assert!(x.is_zero());
        assert_eq!(x, CoefPoly::zero());
    }

    #[test]
    fn laurent_exponents_cancel() {
        let x = &CoefPoly::q_pow(-3) * &CoefPoly::q_pow(3);
        assert!(x.is_one());
    }

    #[test]
    fn display_is_readable() {
        let x = &CoefPoly::one() - &CoefPoly::q();
        assert_eq!(x.to_string(), "1 - q");
        assert_eq!(CoefPoly::q_pow(-1).to_string(), "q^-1");
        let y = CoefPoly::ratio(-3, 2) * CoefPoly::p() * CoefPoly::s().pow(2);
        assert_eq!(y.to_string(), "-3/2*p*s^2");
    }

    #[test]
    fn evaluation_matches_hand_value() {
        // (1 - q)(1 + p s) at q = 0.5, p = 0.25, s = 2  ->  0.5 * 1.5
        let x = (&CoefPoly::one() - &CoefPoly::q()) * (&CoefPoly::one() + &(CoefPoly::p() * CoefPoly::s()));
        assert!((x.eval(0.5, 0.25, 2.0) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn swap_qp_exchanges_parameters() {
        let x = CoefPoly::q_pow(2) * CoefPoly::p_pow(-1);
        assert_eq!(x.swap_qp(), CoefPoly::p_pow(2) * CoefPoly::q_pow(-1));
    }
}
