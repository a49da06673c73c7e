//! Hilbert-Poincare series of Yang-Baxter representations as exact rational
//! functions with integer-coefficient numerator and denominator.
//!
//! For a class with rescaled Thoma parameters `(a, b)`,
//!
//! ```text
//!   H^-(z) = prod_i (1 + a_i z) / prod_j (1 - b_j z)
//!   H^+(z) = prod_j (1 + b_j z) / prod_i (1 - a_i z)
//! ```
//!
//! generate the multiplicities of the alternating and trivial
//! representations, respectively.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::PartitionPair;
use crate::poly::{poly_exact_div, poly_gcd, IntPolynomial};

/// Quotient of two integer polynomials, kept reduced (`gcd = 1`) with
/// `denominator(0) = 1`, so it has a well-defined integer power series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        let g = poly_gcd(&numerator, &denominator);
        let mut num = poly_exact_div(&numerator, &g)?;
        let mut den = poly_exact_div(&denominator, &g)?;
        let content = num.content().gcd(&den.content());
        if !content.is_zero() && !content.is_one() {
            num = num.divide_content(&content);
            den = den.divide_content(&content);
        }
        let c0 = den.coeff(0);
        if c0 == BigInt::from(-1) {
            num = num.negate();
            den = den.negate();
        } else if !c0.is_one() {
            return Err(Error::Domain(format!(
                "rational function is not a power series: reduced denominator starts with {c0}"
            )));
        }
        Ok(RationalFunction {
            numerator: num,
            denominator: den,
        })
    }

    pub fn one() -> Self {
        RationalFunction {
            numerator: IntPolynomial::one(),
            denominator: IntPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(
            self.numerator.mul(&other.numerator),
            self.denominator.mul(&other.denominator),
        )
    }

    /// Substitutes `z -> -z`.
    pub fn substitute_neg(&self) -> Result<RationalFunction> {
        RationalFunction::new(
            self.numerator.substitute_neg(),
            self.denominator.substitute_neg(),
        )
    }

    /// Taylor coefficients up to and including order `order`, by long
    /// division. Integral because the denominator has constant term 1.
    pub fn series(&self, order: usize) -> Vec<BigInt> {
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut c = self.numerator.coeff(n);
            let dmax = self.denominator.degree().unwrap_or(0).min(n);
            for k in 1..=dmax {
                c -= self.denominator.coeff(k) * &coeffs[n - k];
            }
            coeffs.push(c);
        }
        coeffs
    }
}

/// Extracts factors `1 + c z` (`c` a nonzero integer) from a polynomial.
/// Returns the constant in front, the factors, and an irreducible residue if
/// one remains.
fn linear_factors(p: &IntPolynomial) -> (BigInt, Vec<i64>, Option<IntPolynomial>) {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    if rest.is_zero() {
        return (BigInt::zero(), factors, None);
    }
    loop {
        match rest.degree() {
            None | Some(0) => break,
            Some(_) => {}
        }
        let lead = rest.coeffs()[rest.degree().unwrap()].clone();
        let mut found = false;
        let bound = lead.abs();
        let mut c = BigInt::one();
        while c <= bound {
            if (&bound % &c).is_zero() {
                for signed in [c.clone(), -c.clone()] {
                    // 1 + signed*z divides iff the root -1/signed does, i.e.
                    // the reversed synthetic division by z + 1/signed; test
                    // by multiplying out: p(z) divisible by (1 + s z)
                    // <=> p(-1/s) = 0 <=> sum p_k (-1)^k s^{deg-k} ... easier:
                    // divide directly.
                    if let Some(q) = divide_by_unit_linear(&rest, &signed) {
                        factors.push(i64::try_from(&signed).unwrap_or(i64::MAX));
                        rest = q;
                        found = true;
                        break;
                    }
                }
            }
            if found {
                break;
            }
            c += 1;
        }
        if !found {
            break;
        }
    }
    match rest.degree() {
        Some(0) => (rest.coeff(0), factors, None),
        None => (BigInt::zero(), factors, None),
        Some(_) => (BigInt::one(), factors, Some(rest)),
    }
}

/// Divides `p` by `1 + c z` if the division is exact.
fn divide_by_unit_linear(p: &IntPolynomial, c: &BigInt) -> Option<IntPolynomial> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    // q_k determined from lowest coefficients upward: p_0 = q_0,
    // p_k = q_k + c q_{k-1}.
    let mut q = vec![BigInt::zero(); deg];
    q[0] = p.coeff(0);
    for k in 1..deg {
        q[k] = p.coeff(k) - c * &q[k - 1];
    }
    let remainder = p.coeff(deg) - c * &q[deg - 1];
    if remainder.is_zero() {
        Some(IntPolynomial::new(q))
    } else {
        None
    }
}

fn factored_string(p: &IntPolynomial) -> String {
    if p.is_one() {
        return "1".into();
    }
    let (constant, mut factors, residue) = linear_factors(p);
    factors.sort_by_key(|c| (std::cmp::Reverse(c.abs()), *c < 0));
    let mut out = String::new();
    if constant != BigInt::one() || factors.is_empty() && residue.is_none() {
        out.push_str(&constant.to_string());
    }
    for c in factors {
        let sign = if c >= 0 { '+' } else { '-' };
        match c.abs() {
            1 => out.push_str(&format!("(1{sign}z)")),
            m => out.push_str(&format!("(1{sign}{m}z)")),
        }
    }
    if let Some(r) = residue {
        out.push_str(&format!("({r})"));
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = factored_string(&self.numerator);
        if self.denominator.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/({})", factored_string(&self.denominator))
        }
    }
}

fn product_of_unit_linears(parts: &[u64], sign: i64) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for &p in parts {
        acc = acc.mul(&IntPolynomial::linear(1, sign * p as i64));
    }
    acc
}

/// Generating function of the alternating-representation multiplicities:
/// `prod_i (1 + a_i z) / prod_j (1 - b_j z)`.
pub fn hilbert_minus(pair: &PartitionPair) -> RationalFunction {
    RationalFunction::new(
        product_of_unit_linears(pair.plus.parts(), 1),
        product_of_unit_linears(pair.minus.parts(), -1),
    )
    .expect("numerator and denominator share no factors")
}

/// Generating function of the trivial-representation multiplicities:
/// `prod_j (1 + b_j z) / prod_i (1 - a_i z)`.
pub fn hilbert_plus(pair: &PartitionPair) -> RationalFunction {
    hilbert_minus(&pair.swapped())
}
