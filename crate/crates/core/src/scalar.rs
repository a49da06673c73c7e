//! Exact complex scalars: Gaussian rationals, i.e. complex numbers whose real
//! and imaginary parts are arbitrary-precision rationals.
//!
//! `BigRational` keeps itself in lowest terms with a positive denominator, so
//! both invariants of the scalar type hold by construction. The squared
//! modulus `re^2 + im^2` is again an exact rational.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Entry type of all matrices in this crate.
pub type GaussianRational = Complex<BigRational>;

/// The real integer `n` as a scalar.
pub fn int(n: i64) -> GaussianRational {
    Complex::new(BigRational::from_integer(n.into()), BigRational::zero())
}

/// The real rational `p/q` as a scalar.
pub fn ratio(p: i64, q: i64) -> GaussianRational {
    Complex::new(BigRational::new(p.into(), q.into()), BigRational::zero())
}

/// The scalar `p/q + r/s*i`.
pub fn complex(p: i64, q: i64, r: i64, s: i64) -> GaussianRational {
    Complex::new(
        BigRational::new(p.into(), q.into()),
        BigRational::new(r.into(), s.into()),
    )
}

/// The imaginary unit.
pub fn imaginary_unit() -> GaussianRational {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// A purely real scalar from a rational.
pub fn from_rational(r: BigRational) -> GaussianRational {
    Complex::new(r, BigRational::zero())
}

pub fn is_real(z: &GaussianRational) -> bool {
    z.im.is_zero()
}

/// True iff `|z|^2 = 1` exactly.
pub fn is_unit_modulus(z: &GaussianRational) -> bool {
    z.norm_sqr().is_one()
}

/// Extracts the real part of a scalar known to be real.
pub fn real_part(z: &GaussianRational, context: &str) -> Result<BigRational> {
    if z.im.is_zero() {
        Ok(z.re.clone())
    } else {
        Err(Error::Internal(format!(
            "{context}: expected a real value, got imaginary part {}",
            render_rational(&z.im)
        )))
    }
}

pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a scalar in the wire format: `p/q`, `p/q+r/s*i` or `p/q-r/s*i`,
/// whitespace-free, with integers written without the `/1`.
pub fn render(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return render_rational(&z.re);
    }
    let re = render_rational(&z.re);
    let im_abs = render_rational(&z.im.clone().abs());
    let sign = if z.im < BigRational::zero() { '-' } else { '+' };
    format!("{re}{sign}{im_abs}*i")
}

fn parse_rational(s: &str) -> Result<BigRational> {
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let q: BigInt = q
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Parses the wire format produced by [`render`].
pub fn parse(s: &str) -> Result<GaussianRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    // Split at the sign separating the real and imaginary summands. Position
    // 0 is skipped so a leading minus stays with the real part.
    let split = s
        .char_indices()
        .skip(1)
        .find(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i);
    match split {
        None => {
            if s.contains('i') {
                return Err(Error::Parse(format!(
                    "scalar {s:?}: imaginary part must follow an explicit real part"
                )));
            }
            Ok(from_rational(parse_rational(s)?))
        }
        Some(i) => {
            let (re_str, im_str) = s.split_at(i);
            let im_body = im_str
                .strip_suffix("*i")
                .ok_or_else(|| Error::Parse(format!("scalar {s:?}: expected trailing `*i`")))?;
            let re = parse_rational(re_str)?;
            let im = parse_rational(im_body)?;
            Ok(Complex::new(re, im))
        }
    }
}
