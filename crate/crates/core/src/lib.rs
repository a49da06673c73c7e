//! Exact-arithmetic construction, verification and classification of
//! unitary involutive solutions of the Yang-Baxter equation.
//!
//! Every such solution generates a coherent family of symmetric-group
//! representations on tensor powers of its base space. Up to the natural
//! representation-theoretic equivalence, the solutions are classified by
//! ordered pairs of Young diagrams whose total box count is the base
//! dimension; the pair can be read off the integer spectrum of the partial
//! trace, and a canonical normal-form solution realizes each class.
//!
//! The crate provides:
//!
//! - exact dense linear algebra over Gaussian rationals ([`matrix`],
//!   [`scalar`], [`poly`]);
//! - Young diagram combinatorics and symmetric-group characters
//!   ([`partitions`]);
//! - symmetric-function evaluations, irreducible multiplicities and
//!   Hilbert-Poincare series ([`symfun`], [`series`]);
//! - the validated R-matrix type with box sums, box tensors, normal forms,
//!   gauge moves, diagonal-type and Temperley-Lieb constructions
//!   ([`rmatrix`]);
//! - Thoma-parameter bookkeeping ([`thoma`]);
//! - an independent brute-force decomposition oracle ([`oracle`]);
//! - the JSON wire format shared with the command-line tool ([`json`]).
//!
//! All arithmetic is exact; every comparison in the crate is a decidable
//! equality of rationals.

pub mod error;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod rmatrix;
pub mod scalar;
pub mod series;
pub mod symfun;
pub mod thoma;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use oracle::{decompose, decompose_explicit, equivalent_bruteforce, Decomposition};
pub use partitions::{CycleType, Partition, PartitionPair, Permutation};
pub use poly::{char_poly, integer_spectrum, IntPolynomial};
pub use rmatrix::{diagonal_type, normal_form, tl_classify, tl_exists, RMatrix, Spectrum};
pub use scalar::GaussianRational;
pub use series::{hilbert_minus, hilbert_plus, RationalFunction};
pub use thoma::{box_sum_pair, box_sum_params, box_tensor_pair, normalize, ThomaParams};

#[cfg(test)]
mod concurrency_contract {
    // every exported value type is immutable after construction and moves
    // freely across threads
    #[test]
    fn exported_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<crate::GaussianRational>();
        check::<crate::Matrix>();
        check::<crate::IntPolynomial>();
        check::<crate::RationalFunction>();
        check::<crate::Partition>();
        check::<crate::PartitionPair>();
        check::<crate::CycleType>();
        check::<crate::Permutation>();
        check::<crate::RMatrix>();
        check::<crate::Spectrum>();
        check::<crate::ThomaParams>();
        check::<crate::Decomposition>();
        check::<crate::Error>();
    }
}
