//! Shared helpers for the integration suites: the fleet of test solutions
//! and seeded random generators.

#![allow(dead_code)]

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use yb_core::matrix::Matrix;
use yb_core::partitions::{pairs_with_total, Partition, PartitionPair};
use yb_core::rmatrix::{diagonal_type, normal_form, RMatrix};
use yb_core::scalar::{self, complex, imaginary_unit, int, GaussianRational};

pub fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn pair(plus: &[u64], minus: &[u64]) -> PartitionPair {
    PartitionPair::new(p(plus), p(minus))
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// All normal forms with at most `d_max` boxes, labelled by their class.
pub fn normal_forms_up_to(d_max: u64) -> Vec<(PartitionPair, RMatrix)> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for cls in pairs_with_total(d) {
            let r = normal_form(&cls).unwrap();
            out.push((cls, r));
        }
    }
    out
}

/// Conjugation by the tensor flip, revalidated from scratch.
pub fn flip_conjugate(r: &RMatrix) -> RMatrix {
    let f = RMatrix::flip(r.dim());
    let mat = f
        .matrix()
        .mat_mul(r.matrix())
        .unwrap()
        .mat_mul(f.matrix())
        .unwrap();
    RMatrix::validate(r.dim(), mat).unwrap()
}

/// A rational rotation, exactly unitary.
pub fn rotation_gauge_2d() -> Matrix {
    Matrix::from_rows(vec![
        vec![scalar::ratio(3, 5), scalar::ratio(4, 5)],
        vec![scalar::ratio(-4, 5), scalar::ratio(3, 5)],
    ])
    .unwrap()
}

pub fn diagonal_gauge(d: usize) -> Matrix {
    let entries = [imaginary_unit(), int(1), -imaginary_unit(), int(-1)];
    Matrix::from_fn(d, d, |i, j| {
        if i == j {
            entries[i % entries.len()].clone()
        } else {
            int(0)
        }
    })
}

pub fn cyclic_permutation_gauge(d: usize) -> Matrix {
    Matrix::from_fn(d, d, |i, j| if i == (j + 1) % d { int(1) } else { int(0) })
}

/// A diverse fleet of validated solutions: every normal form with at most
/// three boxes, gauge-transformed and flip-conjugated variants, and
/// diagonal-type examples.
pub fn fleet() -> Vec<(String, RMatrix)> {
    let mut out: Vec<(String, RMatrix)> = Vec::new();
    for (cls, r) in normal_forms_up_to(3) {
        out.push((format!("normal{cls}"), r));
    }

    let mixed = normal_form(&pair(&[1], &[1])).unwrap();
    out.push((
        "gauge-rotation(1,1)".into(),
        mixed.gauge(&rotation_gauge_2d()).unwrap(),
    ));
    out.push((
        "gauge-diag(1,1)".into(),
        mixed.gauge(&diagonal_gauge(2)).unwrap(),
    ));

    let tl3 = normal_form(&pair(&[], &[2, 1])).unwrap();
    out.push((
        "gauge-perm(,21)".into(),
        tl3.gauge(&cyclic_permutation_gauge(3)).unwrap(),
    ));
    out.push((
        "gauge-diag(,21)".into(),
        tl3.gauge(&diagonal_gauge(3)).unwrap(),
    ));
    out.push(("flipconj(,21)".into(), flip_conjugate(&tl3)));

    let big = normal_form(&pair(&[2, 1], &[])).unwrap();
    out.push(("flipconj(21,)".into(), flip_conjugate(&big)));

    out.push((
        "diagonal-i".into(),
        diagonal_type(
            &Matrix::from_rows(vec![
                vec![int(1), imaginary_unit()],
                vec![-imaginary_unit(), int(-1)],
            ])
            .unwrap(),
        )
        .unwrap(),
    ));
    out.push((
        "diagonal-pyth".into(),
        diagonal_type(
            &Matrix::from_rows(vec![
                vec![int(1), complex(3, 5, 4, 5), int(-1)],
                vec![complex(3, 5, -4, 5), int(-1), imaginary_unit()],
                vec![int(-1), -imaginary_unit(), int(1)],
            ])
            .unwrap(),
        )
        .unwrap(),
    ));
    out
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_partition(rng: &mut StdRng, weight: u64) -> Partition {
    let all = yb_core::partitions::partitions_of(weight);
    all[rng.gen_range(0..all.len())].clone()
}

/// A uniformly chosen split of `d` boxes into a pair of random diagrams.
pub fn random_pair(rng: &mut StdRng, d: u64) -> PartitionPair {
    let plus_weight = rng.gen_range(0..=d);
    PartitionPair::new(
        random_partition(rng, plus_weight),
        random_partition(rng, d - plus_weight),
    )
}

/// Pool of exactly-unit-modulus scalars used for random phase matrices.
pub fn unit_modulus_pool() -> Vec<GaussianRational> {
    vec![
        int(1),
        int(-1),
        imaginary_unit(),
        -imaginary_unit(),
        complex(3, 5, 4, 5),
        complex(3, 5, -4, 5),
        complex(-3, 5, 4, 5),
        complex(5, 13, 12, 13),
        complex(8, 17, -15, 17),
    ]
}

/// A random valid phase matrix: unit-modulus entries, reciprocal under
/// transposition, diagonal in {+1, -1}.
#[allow(clippy::needless_range_loop)] // symmetric two-sided fill
pub fn random_phase_matrix(rng: &mut StdRng, d: usize) -> Matrix {
    let pool = unit_modulus_pool();
    let mut entries = vec![vec![int(0); d]; d];
    for i in 0..d {
        entries[i][i] = if rng.gen_range(0..2) == 0 {
            int(1)
        } else {
            int(-1)
        };
        for j in i + 1..d {
            let lam = pool[rng.gen_range(0..pool.len())].clone();
            entries[j][i] = lam.conj();
            entries[i][j] = lam;
        }
    }
    Matrix::from_rows(entries).unwrap()
}
