//! Evaluation of symmetric functions on finite rational alphabets.
//!
//! The central object is the super-Schur evaluation
//! `[(1 (x) omega) . Delta(s_lambda)](a, b)`, computed through the dual
//! Jacobi-Trudi determinant `det(E_{lambda'_i - i + j})` over the super
//! elementary functions `E_k(a; b) = sum_q e_q(a) h_{k-q}(b)`. Since
//! `(1 (x) omega) . Delta` is a ring homomorphism, the determinantal
//! identity for Schur functions pushes through to these evaluations. When
//! `(a, b)` are the rescaled Thoma parameters of an R-matrix, the value is
//! the multiplicity of the irreducible S_n representation `lambda` in the
//! Yang-Baxter representation on the n-fold tensor power.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{Partition, PartitionPair};

/// Elementary symmetric function `e_k` on a finite alphabet; `e_0 = 1` and
/// `e_k = 0` for `k` larger than the alphabet.
pub fn elementary(k: usize, xs: &[BigRational]) -> BigRational {
    if k > xs.len() {
        return BigRational::zero();
    }
    // Coefficients of prod (1 + x_i t) up to degree k.
    let mut coeffs = vec![BigRational::zero(); k + 1];
    coeffs[0] = BigRational::one();
    for x in xs {
        for j in (1..=k).rev() {
            let add = &coeffs[j - 1] * x;
            coeffs[j] += add;
        }
    }
    coeffs[k].clone()
}

/// Complete homogeneous symmetric function `h_k`: the sum of all degree-`k`
/// monomials with repetition.
pub fn complete(k: usize, xs: &[BigRational]) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    if xs.is_empty() {
        return BigRational::zero();
    }
    // h_k(x_1..x_m) = sum_j x_m^j h_{k-j}(x_1..x_{m-1}): one column of the
    // DP table per variable.
    let mut table = vec![BigRational::zero(); k + 1];
    table[0] = BigRational::one();
    for x in xs {
        for j in 1..=k {
            let add = &table[j - 1] * x;
            table[j] += add;
        }
    }
    table[k].clone()
}

/// Power sum `p_k`, `k >= 1`.
pub fn power_sum(k: usize, xs: &[BigRational]) -> BigRational {
    assert!(k >= 1, "power sums are defined for k >= 1");
    let mut acc = BigRational::zero();
    for x in xs {
        let mut pow = BigRational::one();
        for _ in 0..k {
            pow *= x;
        }
        acc += pow;
    }
    acc
}

/// Super elementary function `E_k(a; b) = sum_q e_q(a) h_{k-q}(b)`, the
/// image of `e_k` under `(1 (x) omega) . Delta` evaluated at `(a, b)`.
pub fn super_elementary(k: usize, a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for q in 0..=k {
        let e = elementary(q, a);
        if e.is_zero() {
            continue;
        }
        acc += e * complete(k - q, b);
    }
    acc
}

/// Determinant by fraction-free Bareiss elimination; exact over the
/// rationals.
fn bareiss_determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut negate = false;
    let mut prev_pivot = BigRational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev_pivot;
            }
            m[i][k] = BigRational::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Schur polynomial evaluation `s_lambda(xs)` via the dual Jacobi-Trudi
/// determinant over elementary symmetric functions.
pub fn schur(lambda: &Partition, xs: &[BigRational]) -> BigRational {
    super_schur(lambda, xs, &[])
}

/// Super-Schur evaluation `[(1 (x) omega) . Delta(s_lambda)](a, b)` via the
/// dual Jacobi-Trudi determinant `det(E_{lambda'_i - i + j})`.
pub fn super_schur(lambda: &Partition, a: &[BigRational], b: &[BigRational]) -> BigRational {
    if lambda.is_empty() {
        return BigRational::one();
    }
    let conj = lambda.conjugate();
    let m = conj.len();
    let rows: Vec<Vec<BigRational>> = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    let idx = conj.part(i - 1) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        super_elementary(idx as usize, a, b)
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(rows)
}

fn pair_alphabets(pair: &PartitionPair) -> (Vec<BigRational>, Vec<BigRational>) {
    let to_rat = |parts: &Partition| {
        parts
            .parts()
            .iter()
            .map(|&p| BigRational::from_integer(p.into()))
            .collect()
    };
    (to_rat(&pair.plus), to_rat(&pair.minus))
}

fn rational_to_nonneg_int(v: &BigRational, context: &str) -> Result<BigInt> {
    if !v.denom().is_one() {
        return Err(Error::Internal(format!(
            "{context} produced the non-integer {v}"
        )));
    }
    let n = v.to_integer();
    if n.is_negative() {
        return Err(Error::Internal(format!(
            "{context} produced the negative value {n}"
        )));
    }
    Ok(n)
}

/// Multiplicity of the irreducible S_n representation `lambda` in the
/// Yang-Baxter representation with rescaled Thoma parameters `pair`.
///
/// Vanishes exactly when `lambda` contains the rectangle of height
/// `len(a) + 1` and width `len(b) + 1`; that case is short-circuited, the
/// rest goes through the super-Schur determinant, asserting that the result
/// is a nonnegative integer.
pub fn multiplicity(lambda: &Partition, pair: &PartitionPair) -> Result<BigInt> {
    if lambda.contains_rectangle(pair.plus.len() + 1, pair.minus.len() as u64 + 1) {
        return Ok(BigInt::zero());
    }
    let (a, b) = pair_alphabets(pair);
    let value = super_schur(lambda, &a, &b);
    rational_to_nonneg_int(&value, "super-Schur multiplicity")
}

/// Product-formula fast path for the multiplicity, valid when `lambda`
/// contains the `len(a) x len(b)` rectangle but not the one with both sides
/// grown by 1:
/// `s_mu(a) * s_nu(b) * prod_{i,j} (a_i + b_j)` with
/// `mu_i = lambda_i - len(b)` for the first `len(a)` rows and
/// `nu_j = lambda'_j - len(a)` for the first `len(b)` columns.
pub fn multiplicity_hook(lambda: &Partition, pair: &PartitionPair) -> Result<BigInt> {
    let la = pair.plus.len();
    let lb = pair.minus.len() as u64;
    if !lambda.contains_rectangle(la, lb) {
        return Err(Error::Domain(format!(
            "{lambda} does not contain the {la}x{lb} rectangle"
        )));
    }
    if lambda.contains_rectangle(la + 1, lb + 1) {
        return Err(Error::Domain(format!(
            "{lambda} contains the {}x{} rectangle, so the multiplicity vanishes \
             and the product formula does not apply",
            la + 1,
            lb + 1
        )));
    }
    let (a, b) = pair_alphabets(pair);
    let mu = Partition::from_unsorted((0..la).map(|i| lambda.part(i) - lb).collect());
    let conj = lambda.conjugate();
    let nu = Partition::from_unsorted((0..lb as usize).map(|j| conj.part(j) - la as u64).collect());
    let mut value = schur(&mu, &a) * schur(&nu, &b);
    for ai in &a {
        for bj in &b {
            value *= ai + bj;
        }
    }
    rational_to_nonneg_int(&value, "hook multiplicity")
}

/// The lambda-ring operation on rescaled Thoma parameters: expand `e_n` over
/// the joint alphabet of `pair`; each monomial contributes its value to the
/// plus diagram when it has an even number of factors from `b`, and to the
/// minus diagram otherwise. `lambda^0 = ([1], [])`; the result degenerates
/// to `([], [])` once `n` exceeds the number of symbols.
pub fn lambda_op(n: usize, pair: &PartitionPair) -> PartitionPair {
    if n == 0 {
        return PartitionPair::new(Partition::single_row(1), Partition::empty());
    }
    let mut symbols: Vec<(u64, bool)> = Vec::new();
    symbols.extend(pair.plus.parts().iter().map(|&p| (p, false)));
    symbols.extend(pair.minus.parts().iter().map(|&p| (p, true)));

    let mut plus = Vec::new();
    let mut minus = Vec::new();
    fn choose(
        symbols: &[(u64, bool)],
        start: usize,
        remaining: usize,
        product: u64,
        odd_minus: bool,
        plus: &mut Vec<u64>,
        minus: &mut Vec<u64>,
    ) {
        if remaining == 0 {
            if odd_minus {
                minus.push(product);
            } else {
                plus.push(product);
            }
            return;
        }
        if symbols.len() - start < remaining {
            return;
        }
        for idx in start..symbols.len() {
            let (value, is_minus) = symbols[idx];
            choose(
                symbols,
                idx + 1,
                remaining - 1,
                product * value,
                odd_minus ^ is_minus,
                plus,
                minus,
            );
        }
    }
    choose(&symbols, 0, n, 1, false, &mut plus, &mut minus);
    PartitionPair::new(
        Partition::from_unsorted(plus),
        Partition::from_unsorted(minus),
    )
}
