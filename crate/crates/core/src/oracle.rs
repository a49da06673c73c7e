//! Independent brute-force verification: decompose the symmetric-group
//! representation generated by an R-matrix into irreducibles via character
//! projections, without going through symmetric functions.
//!
//! The multiplicity of `lambda` at level `n` is
//!
//! ```text
//!   (1/n!) sum_{rho |- n} |C_rho| chi^lambda(rho) Tr(rho_R(sigma_rho))
//! ```
//!
//! where the trace factor is assembled from cycle traces. Two routes are
//! provided for it: products of partial-trace powers (polynomial cost), and
//! the fully explicit tensor-power matrices for the smallest cases, which
//! certify the multiplicative route.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{
    class_size, factorial, hook_dimension, irreducible_character, partitions_of, CycleType,
    Partition, Permutation,
};
use crate::rmatrix::RMatrix;
use crate::scalar;

/// Default budget: the tensor power `d^n` may not exceed `4^6`.
pub const DEFAULT_BUDGET: u64 = 4096;

/// Multiplicities of the irreducible representations at one level `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    n: u64,
    multiplicities: BTreeMap<Partition, BigInt>,
}

impl Decomposition {
    pub fn level(&self) -> u64 {
        self.n
    }

    pub fn multiplicity_of(&self, lambda: &Partition) -> BigInt {
        self.multiplicities
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Entries in descending lexicographic order of the labels, `[n]` first.
    pub fn entries(&self) -> Vec<(&Partition, &BigInt)> {
        self.multiplicities.iter().rev().collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        for (lambda, mult) in self.entries() {
            write!(f, " {lambda}={mult}")?;
        }
        Ok(())
    }
}

fn check_budget(dim: usize, n: u64, budget: u64) -> Result<()> {
    let mut power = 1u64;
    for _ in 0..n {
        power = power.saturating_mul(dim as u64);
        if power > budget {
            return Err(Error::Budget(format!(
                "tensor power {dim}^{n} exceeds the budget of {budget}"
            )));
        }
    }
    Ok(())
}

// Unnormalized cycle traces t_m = Tr((ptr R)^{m-1}) for m = 1..=n; t_1 = d.
fn cycle_traces(r: &RMatrix, n: u64) -> Result<Vec<BigRational>> {
    let ptr = r.partial_trace_left();
    let mut traces = Vec::with_capacity(n as usize + 1);
    traces.push(BigRational::zero()); // unused slot 0
    let mut power = crate::matrix::Matrix::identity(r.dim());
    for _ in 1..=n {
        traces.push(scalar::real_part(&power.trace(), "partial trace power")?);
        power = power.mat_mul(&ptr)?;
    }
    Ok(traces)
}

fn project(
    r_dim: usize,
    n: u64,
    trace_of: impl Fn(&CycleType) -> Result<BigRational>,
) -> Result<Decomposition> {
    let lambdas = partitions_of(n);
    let rhos: Vec<CycleType> = partitions_of(n).into_iter().map(CycleType::new).collect();
    let mut class_traces = Vec::with_capacity(rhos.len());
    for rho in &rhos {
        class_traces.push((BigRational::from_integer(class_size(rho)), trace_of(rho)?));
    }
    let n_fact = BigRational::from_integer(factorial(n));
    let mut multiplicities = BTreeMap::new();
    let mut dimension_total = BigInt::zero();
    for lambda in lambdas {
        let mut acc = BigRational::zero();
        for (rho, (size, trace)) in rhos.iter().zip(&class_traces) {
            let chi = BigRational::from_integer(irreducible_character(&lambda, rho)?);
            acc += size * chi * trace;
        }
        let value = acc / &n_fact;
        if !value.denom().is_one() || value.numer().is_negative() {
            return Err(Error::Internal(format!(
                "projection onto {lambda} gave the non-multiplicity {value}"
            )));
        }
        let mult = value.to_integer();
        dimension_total += &mult * hook_dimension(&lambda);
        multiplicities.insert(lambda, mult);
    }
    let expected = BigInt::from(r_dim).pow(n as u32);
    if dimension_total != expected {
        return Err(Error::Internal(format!(
            "decomposition dimensions sum to {dimension_total}, expected {expected}"
        )));
    }
    Ok(Decomposition { n, multiplicities })
}

/// Decomposition of the level-`n` representation, with the cycle traces
/// computed from partial-trace powers. Uses the default budget.
pub fn decompose(r: &RMatrix, n: u64) -> Result<Decomposition> {
    decompose_with_budget(r, n, DEFAULT_BUDGET)
}

pub fn decompose_with_budget(r: &RMatrix, n: u64, budget: u64) -> Result<Decomposition> {
    check_budget(r.dim(), n, budget)?;
    let traces = cycle_traces(r, n)?;
    project(r.dim(), n, |rho| {
        let mut acc = BigRational::one();
        for &len in rho.parts().parts() {
            acc *= &traces[len as usize];
        }
        Ok(acc)
    })
}

/// Second-level oracle: the trace factors come from fully explicit
/// tensor-power representation matrices. Restricted to `d <= 2`, `n <= 4`.
pub fn decompose_explicit(r: &RMatrix, n: u64) -> Result<Decomposition> {
    if r.dim() > 2 || n > 4 {
        return Err(Error::Budget(format!(
            "explicit matrix oracle is limited to d <= 2 and n <= 4, got d = {}, n = {n}",
            r.dim()
        )));
    }
    project(r.dim(), n, |rho| {
        let perm = Permutation::with_cycle_type(rho);
        scalar::real_part(&r.represent(&perm).trace(), "representation trace")
    })
}

/// Brute-force equivalence: equal dimensions and equal decompositions at
/// every level up to `n_max`.
pub fn equivalent_bruteforce(r: &RMatrix, s: &RMatrix, n_max: u64) -> Result<bool> {
    if r.dim() != s.dim() {
        return Ok(false);
    }
    for n in 1..=n_max {
        if decompose(r, n)? != decompose(s, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
