//! Integer polynomials, exact characteristic polynomials and integer-root
//! spectra.
//!
//! The characteristic polynomial is computed with the Faddeev-LeVerrier
//! recursion over exact rationals; the spectrum extraction clears
//! denominators and factors the result by trial division over the candidate
//! integer roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar;

/// Polynomial with integer coefficients, lowest degree first. The zero
/// polynomial is the empty coefficient list; otherwise the leading (last)
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// The linear polynomial `c0 + c1*z`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        IntPolynomial::new(vec![c0.into(), c1.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut acc = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        IntPolynomial::new(acc)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `z -> -z`.
    pub fn substitute_neg(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Divides by `x - root`, returning the quotient if the division is
    /// exact.
    pub fn divide_by_root(&self, root: &BigInt) -> Option<IntPolynomial> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        let mut quotient = vec![BigInt::zero(); deg];
        quotient[deg - 1] = self.coeffs[deg].clone();
        for k in (1..deg).rev() {
            quotient[k - 1] = &self.coeffs[k] + root * &quotient[k];
        }
        let remainder = &self.coeffs[0] + root * &quotient[0];
        if remainder.is_zero() {
            Some(IntPolynomial::new(quotient))
        } else {
            None
        }
    }

    /// Gcd of all coefficients (positive; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn divide_content(&self, g: &BigInt) -> IntPolynomial {
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / g).collect())
    }

    pub fn negate(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn trim_rational(coeffs: &mut Vec<BigRational>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim_rational(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead;
        for k in 0..=db {
            let v = &b[k] * &factor;
            r[dr - db + k] -= v;
        }
        trim_rational(&mut r);
        if r.is_empty() {
            break;
        }
        if r.len() - 1 == dr {
            // guarded by exact arithmetic; the leading term always cancels
            unreachable!("polynomial remainder failed to reduce degree");
        }
    }
    r
}

/// Primitive gcd (positive leading coefficient) of two integer polynomials.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return normalize_primitive(b.clone());
    }
    if b.is_zero() {
        return normalize_primitive(a.clone());
    }
    let mut x = a.to_rational();
    let mut y = b.to_rational();
    trim_rational(&mut x);
    trim_rational(&mut y);
    while !y.is_empty() {
        let r = rational_rem(&x, &y);
        x = y;
        y = r;
    }
    // Scale the rational gcd to a primitive integer polynomial.
    let mut denom_lcm = BigInt::one();
    for c in &x {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    normalize_primitive(IntPolynomial::new(ints))
}

fn normalize_primitive(p: IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return p;
    }
    let content = p.content();
    let mut q = p.divide_content(&content);
    if q.coeffs.last().is_some_and(|c| c.is_negative()) {
        q = q.negate();
    }
    q
}

/// Exact division `a / g`, valid when `g` divides `a` over the rationals and
/// the quotient has integer coefficients.
pub fn poly_exact_div(a: &IntPolynomial, g: &IntPolynomial) -> Result<IntPolynomial> {
    if g.is_zero() {
        return Err(Error::Internal("polynomial division by zero".into()));
    }
    if a.is_zero() {
        return Ok(IntPolynomial::zero());
    }
    let b = g.to_rational();
    let mut r = a.to_rational();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut quotient = vec![BigRational::zero(); r.len()];
    while !r.is_empty() && r.len() >= b.len() {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead;
        quotient[dr - db] = factor.clone();
        for k in 0..=db {
            let v = &b[k] * &factor;
            r[dr - db + k] -= v;
        }
        trim_rational(&mut r);
        if r.is_empty() {
            break;
        }
    }
    if !r.is_empty() {
        return Err(Error::Internal("inexact polynomial division".into()));
    }
    let mut out = Vec::with_capacity(quotient.len());
    for c in quotient {
        if !c.denom().is_one() {
            return Err(Error::Internal(
                "polynomial quotient has non-integer coefficients".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(IntPolynomial::new(out))
}

/// Exact characteristic polynomial `det(xI - A)` as rational coefficients,
/// lowest degree first (the leading coefficient is 1).
///
/// Requires a square matrix whose entries are all real, or which is
/// Hermitian; in both cases the coefficients are real.
pub fn char_poly(a: &Matrix) -> Result<Vec<BigRational>> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "characteristic polynomial needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let all_real = a.entries().iter().all(scalar::is_real);
    if !all_real && !a.is_hermitian() {
        return Err(Error::Domain(
            "characteristic polynomial needs real entries or a Hermitian matrix".into(),
        ));
    }
    let n = a.rows();
    // Faddeev-LeVerrier: M_1 = I, c_1 = -tr(A M_1),
    // M_{k+1} = A M_k + c_k I, c_{k+1} = -tr(A M_{k+1})/(k+1).
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = Matrix::identity(n);
    let mut c_prev = BigRational::zero();
    for k in 1..=n {
        if k > 1 {
            m = a.mat_mul(&m)?;
            let shift = Matrix::identity(n).scale_rational(&c_prev);
            m = m.add(&shift)?;
        }
        let am = a.mat_mul(&m)?;
        let t = scalar::real_part(&am.trace(), "characteristic polynomial trace")?;
        let ck = -t / BigRational::from_integer(BigInt::from(k));
        coeffs[n - k] = ck.clone();
        c_prev = ck;
    }
    Ok(coeffs)
}

/// Clears denominators, turning rational coefficients into an integer
/// polynomial with the same roots.
pub fn clear_denominators(coeffs: &[BigRational]) -> IntPolynomial {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let scale = BigRational::from_integer(lcm);
    IntPolynomial::new(coeffs.iter().map(|c| (c * &scale).to_integer()).collect())
}

/// Eigenvalues with multiplicities of a Hermitian matrix whose spectrum is
/// expected to consist of nonzero integers in `[-bound, bound]`.
///
/// The characteristic polynomial is factored by trial division over the
/// candidate roots; if it does not split, the input cannot be the partial
/// trace of an involutive R-matrix and an error is returned. The result is
/// sorted by descending eigenvalue and its multiplicities sum to the matrix
/// dimension.
pub fn integer_spectrum(a: &Matrix, bound: usize) -> Result<Vec<(i64, usize)>> {
    if !a.is_hermitian() {
        return Err(Error::Domain(
            "integer spectrum extraction needs a Hermitian matrix".into(),
        ));
    }
    let n = a.rows();
    let poly = clear_denominators(&char_poly(a)?);
    let mut rest = poly;
    let mut eigs: Vec<(i64, usize)> = Vec::new();
    for abs in 1..=bound as i64 {
        for lambda in [abs, -abs] {
            let root = BigInt::from(lambda);
            let mut mult = 0usize;
            while let Some(q) = rest.divide_by_root(&root) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                eigs.push((lambda, mult));
            }
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::Spectrum(format!(
            "characteristic polynomial does not split over nonzero integers in [-{bound}, {bound}] \
             (residual factor {rest})"
        )));
    }
    let total: usize = eigs.iter().map(|(_, m)| m).sum();
    if total != n {
        return Err(Error::Internal(format!(
            "spectrum multiplicities sum to {total}, expected {n}"
        )));
    }
    eigs.sort_by_key(|e| std::cmp::Reverse(e.0));
    Ok(eigs)
}
