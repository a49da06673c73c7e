//! Thoma parameters of extremal characters and their finite rational
//! stratum.
//!
//! A parameter point is a pair of weakly decreasing sequences of positive
//! rationals with total sum at most 1. The Yang-Baxter stratum consists of
//! the points with sum exactly 1 (finiteness and rationality are structural
//! in this representation); those are exactly the classes realized by
//! involutive R-matrices, and rescaling by the dimension turns them into
//! pairs of Young diagrams.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{CycleType, Partition, PartitionPair};
use crate::scalar::render_rational;

/// Normalized Thoma parameters `(alpha, beta)`: finite, positive, weakly
/// decreasing rational sequences with `sum(alpha) + sum(beta) <= 1`. Zero
/// entries are dropped on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThomaParams {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl ThomaParams {
    pub fn new(mut alpha: Vec<BigRational>, mut beta: Vec<BigRational>) -> Result<Self> {
        alpha.retain(|a| !a.is_zero());
        beta.retain(|b| !b.is_zero());
        for v in alpha.iter().chain(beta.iter()) {
            if *v < BigRational::zero() || *v > BigRational::one() {
                return Err(Error::Validation(format!(
                    "Thoma parameter {} outside (0, 1]",
                    render_rational(v)
                )));
            }
        }
        let sorted = |xs: &[BigRational]| xs.windows(2).all(|w| w[0] >= w[1]);
        if !sorted(&alpha) || !sorted(&beta) {
            return Err(Error::Validation(
                "Thoma parameters must be weakly decreasing".into(),
            ));
        }
        let total: BigRational = alpha.iter().chain(beta.iter()).sum();
        if total > BigRational::one() {
            return Err(Error::Validation(format!(
                "Thoma parameters sum to {} > 1",
                render_rational(&total)
            )));
        }
        Ok(ThomaParams { alpha, beta })
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }

    pub fn sum(&self) -> BigRational {
        self.alpha.iter().chain(self.beta.iter()).sum()
    }

    /// Membership in the Yang-Baxter stratum, with a diagnosis naming the
    /// failed clause. Finiteness and rationality hold structurally, so the
    /// only condition checked dynamically is that the sum is exactly 1.
    pub fn tyb_diagnosis(&self) -> std::result::Result<(), String> {
        let total = self.sum();
        if total != BigRational::one() {
            return Err(format!(
                "parameter sum is {}, not 1",
                render_rational(&total)
            ));
        }
        Ok(())
    }

    pub fn is_tyb(&self) -> bool {
        self.tyb_diagnosis().is_ok()
    }

    /// Rescales to the pair of Young diagrams `(d*alpha, d*beta)`; fails if
    /// any rescaled entry is not an integer, i.e. the point is not
    /// realizable at dimension `d`.
    pub fn rescale(&self, d: u64) -> Result<PartitionPair> {
        let scale = BigRational::from_integer(d.into());
        let to_parts = |xs: &[BigRational], kind: &str| -> Result<Vec<u64>> {
            xs.iter()
                .map(|x| {
                    let v = x * &scale;
                    if v.denom().is_one() {
                        Ok(v.to_integer().try_into().expect("positive bounded part"))
                    } else {
                        Err(Error::Domain(format!(
                            "{kind} parameter {} does not rescale to an integer at d = {d}",
                            render_rational(x)
                        )))
                    }
                })
                .collect()
        };
        let plus = Partition::new(to_parts(&self.alpha, "alpha")?)?;
        let minus = Partition::new(to_parts(&self.beta, "beta")?)?;
        Ok(PartitionPair::new(plus, minus))
    }

    /// The extremal character value on one `n`-cycle:
    /// `sum_i alpha_i^n + (-1)^{n+1} sum_j beta_j^n`.
    pub fn cycle_value(&self, n: usize) -> BigRational {
        let pow = |x: &BigRational| {
            let mut acc = BigRational::one();
            for _ in 0..n {
                acc *= x;
            }
            acc
        };
        let alpha: BigRational = self.alpha.iter().map(&pow).sum();
        let beta: BigRational = self.beta.iter().map(&pow).sum();
        if n.is_multiple_of(2) {
            alpha - beta
        } else {
            alpha + beta
        }
    }

    /// Character value on a full cycle type, by multiplicativity over
    /// disjoint cycles; fixed points contribute the factor 1.
    pub fn character(&self, cycles: &CycleType) -> BigRational {
        let mut acc = BigRational::one();
        for &len in cycles.parts().parts() {
            if len >= 2 {
                acc *= self.cycle_value(len as usize);
            }
        }
        acc
    }
}

impl fmt::Display for ThomaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join =
            |xs: &[BigRational]| xs.iter().map(render_rational).collect::<Vec<_>>().join(",");
        write!(
            f,
            "alpha=[{}] beta=[{}]",
            join(&self.alpha),
            join(&self.beta)
        )
    }
}

/// Normalizes a pair of Young diagrams to Thoma parameters by dividing every
/// part by the total number of boxes. The result always lies in the
/// Yang-Baxter stratum.
pub fn normalize(pair: &PartitionPair) -> Result<ThomaParams> {
    let d = pair.dimension();
    if d == 0 {
        return Err(Error::Domain("cannot normalize the empty pair".into()));
    }
    let scale = BigRational::new(1.into(), d.into());
    let convert = |parts: &Partition| {
        parts
            .parts()
            .iter()
            .map(|&p| BigRational::from_integer(p.into()) * &scale)
            .collect()
    };
    ThomaParams::new(convert(&pair.plus), convert(&pair.minus))
}

/// Thoma parameters of a box sum: each side is rescaled by its share of the
/// total dimension and the sequences are merged.
pub fn box_sum_params(
    p: &ThomaParams,
    d: u64,
    q: &ThomaParams,
    d_other: u64,
) -> Result<ThomaParams> {
    if d == 0 || d_other == 0 {
        return Err(Error::Domain("box sum needs positive dimensions".into()));
    }
    let total = d + d_other;
    let wp = BigRational::new(d.into(), total.into());
    let wq = BigRational::new(d_other.into(), total.into());
    let merge = |xs: &[BigRational], ys: &[BigRational]| {
        let mut out: Vec<BigRational> = xs
            .iter()
            .map(|x| x * &wp)
            .chain(ys.iter().map(|y| y * &wq))
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    };
    ThomaParams::new(merge(p.alpha(), q.alpha()), merge(p.beta(), q.beta()))
}

/// Box sum on classification pairs: the parts merge as multisets.
pub fn box_sum_pair(p: &PartitionPair, q: &PartitionPair) -> PartitionPair {
    PartitionPair::new(p.plus.union(&q.plus), p.minus.union(&q.minus))
}

/// Box tensor on classification pairs: like signs multiply into the plus
/// diagram, unlike signs into the minus diagram.
pub fn box_tensor_pair(p: &PartitionPair, q: &PartitionPair) -> PartitionPair {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &a in p.plus.parts() {
        for &a2 in q.plus.parts() {
            plus.push(a * a2);
        }
        for &b2 in q.minus.parts() {
            minus.push(a * b2);
        }
    }
    for &b in p.minus.parts() {
        for &b2 in q.minus.parts() {
            plus.push(b * b2);
        }
        for &a2 in q.plus.parts() {
            minus.push(b * a2);
        }
    }
    PartitionPair::new(
        Partition::from_unsorted(plus),
        Partition::from_unsorted(minus),
    )
}
