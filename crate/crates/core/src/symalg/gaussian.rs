//! Gaussian binomial coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coef::{CoefPoly, Exponent, Param};
use crate::error::{Error, Result};

/// `(1-x)...(1-x^n) / ((1-x)...(1-x^k) (1-x)...(1-x^(n-k)))` as a polynomial
/// in `x`, which must be `q` or `p`.
pub fn gaussian_binomial(n: u32, k: u32, which: Param) -> Result<CoefPoly> {
    if k > n {
        return Err(Error::Argument(format!("k = {k} outside 0..={n}")));
    }
    if which == Param::S {
        return Err(Error::Argument("Gaussian binomials are taken in q or p".into()));
    }
    let k = k.min(n - k);
    let mut num = vec![BigInt::one()];
    for i in n - k + 1..=n {
        num = mul_one_minus_power(&num, i as usize);
    }
    let mut den = vec![BigInt::one()];
    for i in 1..=k {
        den = mul_one_minus_power(&den, i as usize);
    }
    let quotient = exact_div(&num, &den);
    let mut out = CoefPoly::zero();
    for (e, c) in quotient.into_iter().enumerate() {
        let exp = match which {
            Param::Q => Exponent { q: e as i32, ..Exponent::ONE },
            _ => Exponent { p: e as i32, ..Exponent::ONE },
        };
        out += &CoefPoly::monomial(BigRational::from_integer(c), exp);
    }
    Ok(out)
}

fn mul_one_minus_power(a: &[BigInt], i: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + i];
    for (j, c) in a.iter().enumerate() {
        out[j] += c;
        out[j + i] -= c;
    }
    out
}

/// Divides integer polynomials (lowest degree first) whose quotient is known to be integral.
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    let dlen = den.len();
    let lead = den.last().expect("nonzero divisor");
    if rem.len() < dlen {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); rem.len() - dlen + 1];
    for i in (0..q.len()).rev() {
        let c = &rem[i + dlen - 1] / lead;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}
