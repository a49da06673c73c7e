//! Unitary involutive solutions of the Yang-Baxter equation and their
//! classification.
//!
//! An [`RMatrix`] is a sealed value: the constructor checks unitarity,
//! involutivity and the Yang-Baxter identity exactly, so every value of the
//! type is a genuine solution. The partial trace of such a solution is a
//! Hermitian matrix whose eigenvalues are nonzero integers in
//! `{-d, ..., d}` with multiplicities divisible by the absolute value; the
//! resulting pair of Young diagrams is a complete invariant of the
//! representation-theoretic equivalence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partitions::{CycleType, Partition, PartitionPair, Permutation};
use crate::poly::integer_spectrum;
use crate::scalar::{self, GaussianRational};

/// A validated unitary involutive R-matrix of base dimension `d`, acting on
/// the tensor square by a `d^2 x d^2` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    dim: usize,
    mat: Matrix,
}

/// Integer eigenvalues with multiplicities of a partial trace, sorted by
/// descending eigenvalue.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spectrum {
    eigs: Vec<(i64, usize)>,
}

impl Spectrum {
    /// Validates the structural constraints on the spectrum of the partial
    /// trace of an involutive R-matrix of dimension `d`: eigenvalues are
    /// nonzero integers in `[-d, d]`, each multiplicity is divisible by the
    /// absolute value of its eigenvalue, and multiplicities sum to `d`.
    pub fn from_eigenvalues(mut eigs: Vec<(i64, usize)>, d: usize) -> Result<Self> {
        eigs.sort_by_key(|e| std::cmp::Reverse(e.0));
        let mut total = 0usize;
        for &(value, mult) in &eigs {
            if value == 0 || value.unsigned_abs() as usize > d {
                return Err(Error::Spectrum(format!(
                    "eigenvalue {value} outside the nonzero integers in [-{d}, {d}]"
                )));
            }
            if mult == 0 || mult % value.unsigned_abs() as usize != 0 {
                return Err(Error::Spectrum(format!(
                    "eigenvalue {value} has multiplicity {mult}, not a multiple of {}",
                    value.unsigned_abs()
                )));
            }
            total += mult;
        }
        if total != d {
            return Err(Error::Spectrum(format!(
                "multiplicities sum to {total}, expected the dimension {d}"
            )));
        }
        Ok(Spectrum { eigs })
    }

    pub fn eigenvalues(&self) -> &[(i64, usize)] {
        &self.eigs
    }

    /// The pair of Young diagrams encoded by the spectrum: each positive
    /// eigenvalue `v` becomes `mult/v` rows of length `v` in the plus
    /// diagram, each negative one likewise in the minus diagram.
    pub fn to_pair(&self) -> PartitionPair {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for &(value, mult) in &self.eigs {
            let size = value.unsigned_abs();
            let copies = mult / size as usize;
            let target = if value > 0 { &mut plus } else { &mut minus };
            for _ in 0..copies {
                target.push(size);
            }
        }
        PartitionPair::new(
            Partition::from_unsorted(plus),
            Partition::from_unsorted(minus),
        )
    }
}

fn tensor_index(i: usize, j: usize, d: usize) -> usize {
    i * d + j
}

impl RMatrix {
    /// Checks the three defining identities exactly and seals the value.
    /// The reported error names the first violated identity: shape, then
    /// unitarity, then involutivity, then the Yang-Baxter equation.
    pub fn validate(dim: usize, mat: Matrix) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Shape("base dimension must be positive".into()));
        }
        let d2 = dim * dim;
        if mat.rows() != d2 || mat.cols() != d2 {
            return Err(Error::Shape(format!(
                "R-matrix of dimension {dim} must be {d2}x{d2}, got {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        if !mat.mat_mul(&mat.adjoint())?.is_identity() {
            return Err(Error::Validation("non-unitary: R R* != 1".into()));
        }
        if !mat.mat_mul(&mat)?.is_identity() {
            return Err(Error::Validation("non-involutive: R^2 != 1".into()));
        }
        let id = Matrix::identity(dim);
        let r1 = mat.kron(&id);
        let r2 = id.kron(&mat);
        let lhs = r1.mat_mul(&r2)?.mat_mul(&r1)?;
        let rhs = r2.mat_mul(&r1)?.mat_mul(&r2)?;
        if lhs != rhs {
            return Err(Error::Validation(
                "yang-baxter: (R x 1)(1 x R)(R x 1) != (1 x R)(R x 1)(1 x R)".into(),
            ));
        }
        Ok(RMatrix { dim, mat })
    }

    // For constructions that are valid by general theory; revalidated in
    // debug builds as an implementation-bug tripwire.
    fn new_unchecked(dim: usize, mat: Matrix) -> Self {
        debug_assert!(
            RMatrix::validate(dim, mat.clone()).is_ok(),
            "constructed matrix fails revalidation"
        );
        RMatrix { dim, mat }
    }

    /// The identity solution `1_d`.
    pub fn identity(dim: usize) -> Self {
        RMatrix::new_unchecked(dim, Matrix::identity(dim * dim))
    }

    /// The negative identity `-1_d`.
    pub fn neg_identity(dim: usize) -> Self {
        RMatrix::new_unchecked(dim, Matrix::identity(dim * dim).neg())
    }

    /// The tensor flip `F(v (x) w) = w (x) v`.
    pub fn flip(dim: usize) -> Self {
        let d2 = dim * dim;
        let mat = Matrix::from_fn(d2, d2, |row, col| {
            let (i, j) = (col / dim, col % dim);
            if row == tensor_index(j, i, dim) {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        RMatrix::new_unchecked(dim, mat)
    }

    /// `-R`, which is again a solution.
    pub fn negated(&self) -> Self {
        RMatrix::new_unchecked(self.dim, self.mat.neg())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn trace(&self) -> BigRational {
        scalar::real_part(&self.mat.trace(), "R-matrix trace")
            .expect("sealed R-matrix is selfadjoint")
    }

    /// `1^(k) (x) R (x) 1^(n-k-2)` acting on the `n`-fold tensor power,
    /// `k` 0-based.
    fn generator_matrix(&self, n: usize, k: usize) -> Matrix {
        let left = self.dim.pow(k as u32);
        let right = self.dim.pow((n - k - 2) as u32);
        Matrix::identity(left)
            .kron(&self.mat)
            .kron(&Matrix::identity(right))
    }

    /// The representation matrix of a permutation on the `n`-fold tensor
    /// power, `n` being the number of points the permutation acts on.
    ///
    /// The permutation is written as a product of adjacent transpositions by
    /// bubble sorting its one-line form; involutivity and the Yang-Baxter
    /// equation guarantee that the result does not depend on the chosen
    /// word.
    pub fn represent(&self, perm: &Permutation) -> Matrix {
        let n = perm.size();
        assert!(n >= 1, "representation needs at least one tensor factor");
        let full = self.dim.pow(n as u32);
        let mut word = Vec::new();
        let mut line = perm.images().to_vec();
        loop {
            let mut swapped = false;
            for j in 0..line.len().saturating_sub(1) {
                if line[j] > line[j + 1] {
                    line.swap(j, j + 1);
                    word.push(j);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // Sorting multiplies generators on the right: perm * s_{j1} ... = e,
        // so perm itself is the reversed word.
        word.reverse();
        let mut acc = Matrix::identity(full);
        let mut cache: Vec<Option<Matrix>> = vec![None; n.saturating_sub(1)];
        for j in word {
            if cache[j].is_none() {
                cache[j] = Some(self.generator_matrix(n, j));
            }
            acc = acc
                .mat_mul(cache[j].as_ref().unwrap())
                .expect("square factors");
        }
        acc
    }

    /// Left partial trace `(Tr (x) id)(R)`, a `d x d` Hermitian matrix.
    pub fn partial_trace_left(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d, d, |i, j| {
            let mut acc = GaussianRational::zero();
            for k in 0..d {
                acc += self.mat[(tensor_index(k, i, d), tensor_index(k, j, d))].clone();
            }
            acc
        })
    }

    /// Right partial trace `(id (x) Tr)(R)`.
    pub fn partial_trace_right(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d, d, |i, j| {
            let mut acc = GaussianRational::zero();
            for k in 0..d {
                acc += self.mat[(tensor_index(i, k, d), tensor_index(j, k, d))].clone();
            }
            acc
        })
    }

    /// The normalized character on one `n`-cycle, `n >= 2`, computed as
    /// `d^{-n} Tr((ptr R)^{n-1})`. Cost is polynomial in `d` and `n`.
    pub fn cycle_character(&self, n: usize) -> Result<BigRational> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "cycle character needs n >= 2, got {n}"
            )));
        }
        let ptr = self.partial_trace_left();
        let powered = ptr.pow(n - 1)?;
        let trace = scalar::real_part(&powered.trace(), "partial trace power")?;
        let d_pow = BigRational::from_integer(BigInt::from(self.dim)).pow(n as i32);
        Ok(trace / d_pow)
    }

    /// The same character value through the defining trace
    /// `d^{-n} Tr(R_1 ... R_{n-1})` on the full `n`-fold tensor power.
    /// Exponential in `n`; kept as an independent route for cross-checks.
    pub fn cycle_character_direct(&self, n: usize) -> Result<BigRational> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "cycle character needs n >= 2, got {n}"
            )));
        }
        let full = self.dim.pow(n as u32);
        let mut acc = Matrix::identity(full);
        for k in 0..n - 1 {
            acc = acc.mat_mul(&self.generator_matrix(n, k))?;
        }
        let trace = scalar::real_part(&acc.trace(), "tensor power trace")?;
        let d_pow = BigRational::from_integer(BigInt::from(self.dim)).pow(n as i32);
        Ok(trace / d_pow)
    }

    /// The normalized character on a whole cycle type, by multiplicativity
    /// over disjoint cycles; fixed points contribute the factor 1.
    pub fn character(&self, cycles: &CycleType) -> BigRational {
        let mut acc = BigRational::one();
        for &len in cycles.parts().parts() {
            if len >= 2 {
                acc *= self
                    .cycle_character(len as usize)
                    .expect("cycle length >= 2");
            }
        }
        acc
    }

    /// Eigenvalues of the partial trace with their multiplicities,
    /// validated against the structural constraints.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let eigs = integer_spectrum(&self.partial_trace_left(), self.dim)?;
        Spectrum::from_eigenvalues(eigs, self.dim)
    }

    /// The pair of Young diagrams classifying this solution up to
    /// equivalence.
    pub fn classify(&self) -> Result<PartitionPair> {
        Ok(self.spectrum()?.to_pair())
    }

    /// Representation-theoretic equivalence: same dimension and similar
    /// partial traces, i.e. equal integer spectra with multiplicity.
    pub fn is_equivalent_to(&self, other: &RMatrix) -> bool {
        self.dim == other.dim
            && self
                .spectrum()
                .expect("sealed R-matrix has integer spectrum")
                == other
                    .spectrum()
                    .expect("sealed R-matrix has integer spectrum")
    }

    /// Box sum: acts as `self` on `V (x) V`, as `other` on `W (x) W`, and as
    /// the tensor flip on the mixed blocks. The basis of `V (+) W` lists
    /// V's vectors first.
    pub fn box_sum(&self, other: &RMatrix) -> RMatrix {
        let d1 = self.dim;
        let d2 = other.dim;
        let dd = d1 + d2;
        let mat = Matrix::from_fn(dd * dd, dd * dd, |row, col| {
            let (i, j) = (col / dd, col % dd);
            let (k, l) = (row / dd, row % dd);
            if i < d1 && j < d1 {
                if k < d1 && l < d1 {
                    self.mat[(tensor_index(k, l, d1), tensor_index(i, j, d1))].clone()
                } else {
                    GaussianRational::zero()
                }
            } else if i >= d1 && j >= d1 {
                if k >= d1 && l >= d1 {
                    other.mat[(
                        tensor_index(k - d1, l - d1, d2),
                        tensor_index(i - d1, j - d1, d2),
                    )]
                        .clone()
                } else {
                    GaussianRational::zero()
                }
            } else if k == j && l == i {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        RMatrix::new_unchecked(dd, mat)
    }

    /// Box tensor on `V (x) W`: the middle factors of
    /// `V (x) W (x) V (x) W` are exchanged, the two solutions act on their
    /// own slots.
    pub fn box_tensor(&self, other: &RMatrix) -> RMatrix {
        let d1 = self.dim;
        let d2 = other.dim;
        let dd = d1 * d2;
        let mat = Matrix::from_fn(dd * dd, dd * dd, |row, col| {
            let (row_1, row_2) = (row / dd, row % dd);
            let (v1, w1) = (row_1 / d2, row_1 % d2);
            let (v2, w2) = (row_2 / d2, row_2 % d2);
            let (col_1, col_2) = (col / dd, col % dd);
            let (v1p, w1p) = (col_1 / d2, col_1 % d2);
            let (v2p, w2p) = (col_2 / d2, col_2 % d2);
            let a = &self.mat[(tensor_index(v1, v2, d1), tensor_index(v1p, v2p, d1))];
            if a.is_zero() {
                return GaussianRational::zero();
            }
            let b = &other.mat[(tensor_index(w1, w2, d2), tensor_index(w1p, w2p, d2))];
            a * b
        });
        RMatrix::new_unchecked(dd, mat)
    }

    /// Gauge transformation `(A (x) A) R (A* (x) A*)` by an exactly unitary
    /// `d x d` matrix; the result is equivalent to `R`.
    pub fn gauge(&self, a: &Matrix) -> Result<RMatrix> {
        if a.rows() != self.dim || a.cols() != self.dim {
            return Err(Error::Shape(format!(
                "gauge matrix must be {0}x{0}",
                self.dim
            )));
        }
        if !a.is_unitary() {
            return Err(Error::Validation("gauge matrix is not unitary".into()));
        }
        let aa = a.kron(a);
        let conjugated = aa.mat_mul(&self.mat)?.mat_mul(&aa.adjoint())?;
        Ok(RMatrix::new_unchecked(self.dim, conjugated))
    }

    /// Rank: the multiplicity of the eigenvalue `+1`, computed from the
    /// trace identity `r = (Tr R + d^2) / 2`.
    pub fn rank(&self) -> usize {
        let tr = self.trace();
        assert!(tr.denom().is_one(), "involutive trace is an integer");
        let doubled = tr.to_integer() + BigInt::from(self.dim * self.dim);
        let (half, rem) = num_integer::Integer::div_rem(&doubled, &BigInt::from(2));
        assert!(rem.is_zero(), "trace parity of an involution");
        usize::try_from(half).expect("rank lies in [0, d^2]")
    }

    /// Temperley-Lieb property at loop parameter 2: with `P = (R + 1)/2`,
    /// both relations `P1 P2 P1 = P1/4` and `P2 P1 P2 = P2/4` hold exactly
    /// on the threefold tensor power. Cross-checked against the vanishing
    /// of the trivial-representation multiplicity at level 3.
    pub fn is_temperley_lieb(&self) -> bool {
        let d = self.dim;
        let half = BigRational::new(1.into(), 2.into());
        let quarter = BigRational::new(1.into(), 4.into());
        let p = self
            .mat
            .add(&Matrix::identity(d * d))
            .expect("same shape")
            .scale_rational(&half);
        let id = Matrix::identity(d);
        let p1 = p.kron(&id);
        let p2 = id.kron(&p);
        let lhs1 = p1
            .mat_mul(&p2)
            .and_then(|m| m.mat_mul(&p1))
            .expect("square");
        let lhs2 = p2
            .mat_mul(&p1)
            .and_then(|m| m.mat_mul(&p2))
            .expect("square");
        let relations = lhs1 == p1.scale_rational(&quarter) && lhs2 == p2.scale_rational(&quarter);

        let pair = self.classify().expect("sealed R-matrix classifies");
        let trivial_vanishes = crate::symfun::multiplicity(&Partition::single_row(3), &pair)
            .expect("multiplicity of the trivial representation")
            .is_zero();
        assert_eq!(
            relations, trivial_vanishes,
            "projector relations disagree with the level-3 multiplicity"
        );
        relations
    }
}

/// The normal form representative of a classification pair: the box-sum of
/// identities `1_{a_i}` followed by negative identities `-1_{b_j}`, folded
/// left to right.
pub fn normal_form(pair: &PartitionPair) -> Result<RMatrix> {
    if pair.is_empty() {
        return Err(Error::Domain("no normal form for the empty pair".into()));
    }
    let mut blocks = Vec::new();
    for &a in pair.plus.parts() {
        blocks.push(RMatrix::identity(a as usize));
    }
    for &b in pair.minus.parts() {
        blocks.push(RMatrix::neg_identity(b as usize));
    }
    let mut iter = blocks.into_iter();
    let first = iter.next().expect("nonempty pair has blocks");
    Ok(iter.fold(first, |acc, next| acc.box_sum(&next)))
}

/// Builds a diagonal-type solution `R = DF` from a `d x d` matrix of phases
/// `lambda_{ij}`: requires `|lambda_{ij}| = 1`, `lambda_{ji} =
/// lambda_{ij}^{-1}` (hence `lambda_{ii} = +-1`), and sends
/// `e_i (x) e_j` to `lambda_{ji} e_j (x) e_i`.
pub fn diagonal_type(phases: &Matrix) -> Result<RMatrix> {
    if !phases.is_square() {
        return Err(Error::Shape("phase matrix must be square".into()));
    }
    let d = phases.rows();
    for i in 0..d {
        for j in 0..d {
            let lam = &phases[(i, j)];
            if !scalar::is_unit_modulus(lam) {
                return Err(Error::Validation(format!(
                    "phase ({}, {}) is not unit modulus",
                    i + 1,
                    j + 1
                )));
            }
            // for unit modulus the inverse is the conjugate
            if phases[(j, i)] != lam.conj() {
                return Err(Error::Validation(format!(
                    "phases ({}, {}) and ({}, {}) are not mutually inverse",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
        let diag = &phases[(i, i)];
        if !scalar::is_real(diag) {
            return Err(Error::Validation(format!(
                "diagonal phase ({0}, {0}) must be +1 or -1",
                i + 1
            )));
        }
    }
    let mat = Matrix::from_fn(d * d, d * d, |row, col| {
        let (i, j) = (col / d, col % d);
        if row == tensor_index(j, i, d) {
            phases[(j, i)].clone()
        } else {
            GaussianRational::zero()
        }
    });
    Ok(RMatrix::new_unchecked(d, mat))
}

/// Existence test for Temperley-Lieb solutions with dimension `d` and rank
/// `r`: they exist iff `d^2 - 4r` is a perfect square `k^2`; returns `k`.
pub fn tl_exists(d: usize, r: usize) -> Option<usize> {
    let s = (d * d) as i64 - 4 * r as i64;
    if s < 0 {
        return None;
    }
    let k = (s as f64).sqrt().round() as i64;
    for cand in [k - 1, k, k + 1] {
        if cand >= 0 && cand * cand == s {
            return Some(cand as usize);
        }
    }
    None
}

/// The classification pair of the Temperley-Lieb solution with dimension
/// `d` and rank `r`: two rows of lengths `(d + k)/2` and `(d - k)/2` in the
/// minus diagram, zero-length rows dropped.
pub fn tl_classify(d: usize, r: usize) -> Result<PartitionPair> {
    let k = tl_exists(d, r).ok_or_else(|| {
        Error::Domain(format!(
            "no Temperley-Lieb solution with d = {d}, r = {r}: {} is not a perfect square",
            (d * d) as i64 - 4 * r as i64
        ))
    })?;
    let top = ((d + k) / 2) as u64;
    let bottom = ((d - k) / 2) as u64;
    let minus = Partition::from_unsorted(vec![top, bottom]);
    Ok(PartitionPair::new(Partition::empty(), minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{complex, imaginary_unit, int};

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pair(plus: &[u64], minus: &[u64]) -> PartitionPair {
        PartitionPair::new(p(plus), p(minus))
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn identity_and_flip_validate() {
        assert!(RMatrix::validate(2, Matrix::identity(4)).is_ok());
        let flip = RMatrix::flip(2);
        assert!(RMatrix::validate(2, flip.matrix().clone()).is_ok());
    }

    #[test]
    fn flip_rows_follow_the_basis_convention() {
        let f = RMatrix::flip(2);
        let expected = Matrix::from_rows(vec![
            vec![int(1), int(0), int(0), int(0)],
            vec![int(0), int(0), int(1), int(0)],
            vec![int(0), int(1), int(0), int(0)],
            vec![int(0), int(0), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(f.matrix(), &expected);
        assert_eq!(RMatrix::flip(1).matrix(), &Matrix::identity(1));
    }

    #[test]
    fn validate_names_the_first_violation() {
        let err = RMatrix::validate(2, Matrix::identity(3)).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));

        let nonunitary = Matrix::from_fn(4, 4, |i, j| {
            if i == j && i == 3 {
                int(2)
            } else if i == j {
                int(1)
            } else {
                int(0)
            }
        });
        let err = RMatrix::validate(2, nonunitary).unwrap_err();
        assert!(err.to_string().contains("non-unitary"), "{err}");

        // diag(i, 1, 1, 1) is unitary but not involutive
        let noninv = Matrix::from_fn(4, 4, |i, j| {
            if i == j && i == 0 {
                imaginary_unit()
            } else if i == j {
                int(1)
            } else {
                int(0)
            }
        });
        let err = RMatrix::validate(2, noninv).unwrap_err();
        assert!(err.to_string().contains("non-involutive"), "{err}");

        // diag(1,-1,-1,-1) is unitary and involutive but fails the braid
        // identity
        let nonybe = Matrix::from_fn(4, 4, |i, j| {
            if i == j && i == 0 {
                int(1)
            } else if i == j {
                int(-1)
            } else {
                int(0)
            }
        });
        let err = RMatrix::validate(2, nonybe).unwrap_err();
        assert!(err.to_string().contains("yang-baxter"), "{err}");
    }

    #[test]
    fn representation_of_small_permutations() {
        let f = RMatrix::flip(2);
        let id3 = Permutation::identity(3);
        assert!(f.represent(&id3).is_identity());

        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(f.represent(&swap), *f.matrix());

        // trace of a 3-cycle under the flip representation is d
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        let tr = f.represent(&cycle).trace();
        assert_eq!(tr, int(2));
    }

    #[test]
    fn representation_is_a_homomorphism() {
        let r = normal_form(&pair(&[1], &[1])).unwrap();
        let perms: Vec<Permutation> = [
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ]
        .into_iter()
        .map(|v| Permutation::new(v).unwrap())
        .collect();
        for a in &perms {
            for b in &perms {
                let lhs = r.represent(&a.compose(b));
                let rhs = r.represent(a).mat_mul(&r.represent(b)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn partial_traces_of_basic_solutions() {
        for d in 1..=4 {
            assert_eq!(RMatrix::flip(d).partial_trace_left(), Matrix::identity(d));
            assert_eq!(
                RMatrix::identity(d).partial_trace_left(),
                Matrix::identity(d).scale(&int(d as i64))
            );
            assert_eq!(
                RMatrix::neg_identity(d).partial_trace_left(),
                Matrix::identity(d).scale(&int(-(d as i64)))
            );
        }
    }

    #[test]
    fn mixed_sum_matches_displayed_matrix() {
        let r = RMatrix::identity(1).box_sum(&RMatrix::neg_identity(1));
        let expected = Matrix::from_rows(vec![
            vec![int(1), int(0), int(0), int(0)],
            vec![int(0), int(0), int(1), int(0)],
            vec![int(0), int(1), int(0), int(0)],
            vec![int(0), int(0), int(0), int(-1)],
        ])
        .unwrap();
        assert_eq!(r.matrix(), &expected);

        let ptr = r.partial_trace_left();
        assert_eq!(ptr[(0, 0)], int(1));
        assert_eq!(ptr[(1, 1)], int(-1));
        assert_eq!(r.classify().unwrap(), pair(&[1], &[1]));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn sum_of_unit_identities_is_the_flip() {
        let r = RMatrix::identity(1).box_sum(&RMatrix::identity(1));
        assert_eq!(r, RMatrix::flip(2));
    }

    #[test]
    fn cycle_characters_of_basic_solutions() {
        let f = RMatrix::flip(2);
        assert_eq!(f.cycle_character(2).unwrap(), rat(1, 2));
        assert_eq!(f.cycle_character_direct(2).unwrap(), rat(1, 2));

        let one = RMatrix::identity(3);
        for n in 2..=5 {
            assert_eq!(one.cycle_character(n).unwrap(), rat(1, 1));
        }

        let tl = normal_form(&pair(&[], &[2, 1])).unwrap();
        assert_eq!(tl.cycle_character(2).unwrap(), rat(-5, 9));

        assert!(f.cycle_character(1).is_err());
    }

    #[test]
    fn character_multiplicativity() {
        let f = RMatrix::flip(2);
        let cycles = CycleType::new(p(&[2, 2]));
        assert_eq!(f.character(&cycles), rat(1, 4));
        assert_eq!(f.character(&CycleType::new(p(&[1, 1, 1]))), rat(1, 1));
        let neg = RMatrix::neg_identity(3);
        assert_eq!(neg.character(&CycleType::new(p(&[2]))), rat(-1, 1));
    }

    #[test]
    fn classification_of_basic_solutions() {
        assert_eq!(RMatrix::flip(2).classify().unwrap(), pair(&[1, 1], &[]));
        assert_eq!(
            RMatrix::flip(3).negated().classify().unwrap(),
            pair(&[], &[1, 1, 1])
        );
        assert_eq!(RMatrix::identity(2).classify().unwrap(), pair(&[2], &[]));
        assert_eq!(
            RMatrix::flip(2).spectrum().unwrap().eigenvalues(),
            &[(1, 2)]
        );
    }

    #[test]
    fn equivalence_examples() {
        let flip = RMatrix::flip(2);
        let sum = RMatrix::identity(1).box_sum(&RMatrix::identity(1));
        assert!(flip.is_equivalent_to(&sum));
        assert!(!RMatrix::identity(2).is_equivalent_to(&flip));

        let r = normal_form(&pair(&[1], &[1])).unwrap();
        let frf = RMatrix::validate(
            2,
            flip.matrix()
                .mat_mul(r.matrix())
                .unwrap()
                .mat_mul(flip.matrix())
                .unwrap(),
        )
        .unwrap();
        assert!(r.is_equivalent_to(&frf));
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(normal_form(&pair(&[2], &[])).unwrap(), RMatrix::identity(2));
        assert_eq!(normal_form(&pair(&[1, 1], &[])).unwrap(), RMatrix::flip(2));
        assert!(normal_form(&PartitionPair::new(Partition::empty(), Partition::empty())).is_err());

        let big = normal_form(&pair(&[3, 1], &[2, 2])).unwrap();
        assert_eq!(big.dim(), 8);
        assert_eq!(
            big.spectrum().unwrap().eigenvalues(),
            &[(3, 3), (1, 1), (-2, 4)]
        );
        assert_eq!(big.classify().unwrap(), pair(&[3, 1], &[2, 2]));
    }

    #[test]
    fn gauge_transformations_preserve_the_class() {
        let flip = RMatrix::flip(2);
        let diag_i =
            Matrix::from_rows(vec![vec![imaginary_unit(), int(0)], vec![int(0), int(1)]]).unwrap();
        assert_eq!(flip.gauge(&diag_i).unwrap(), flip);

        let r = normal_form(&pair(&[1], &[1])).unwrap();
        let swap = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        let gauged = r.gauge(&swap).unwrap();
        assert!(r.is_equivalent_to(&gauged));
        assert_eq!(r.gauge(&Matrix::identity(2)).unwrap(), r);

        let skew = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]).unwrap();
        assert!(r.gauge(&skew).is_err());
    }

    #[test]
    fn diagonal_type_solutions() {
        let phases = Matrix::from_rows(vec![
            vec![int(1), imaginary_unit()],
            vec![-imaginary_unit(), int(-1)],
        ])
        .unwrap();
        let r = diagonal_type(&phases).unwrap();
        assert_eq!(r.classify().unwrap(), pair(&[1], &[1]));
        assert_eq!(r.rank(), 2);

        let all_ones = Matrix::from_fn(3, 3, |_, _| int(1));
        assert_eq!(diagonal_type(&all_ones).unwrap(), RMatrix::flip(3));

        let bad_modulus = Matrix::from_rows(vec![
            vec![int(1), int(2)],
            vec![crate::scalar::ratio(1, 2), int(1)],
        ])
        .unwrap();
        assert!(diagonal_type(&bad_modulus).is_err());

        let bad_reciprocal = Matrix::from_rows(vec![
            vec![int(1), imaginary_unit()],
            vec![imaginary_unit(), int(1)],
        ])
        .unwrap();
        assert!(diagonal_type(&bad_reciprocal).is_err());
    }

    #[test]
    fn diagonal_type_with_pythagorean_phase() {
        let phase = complex(3, 5, 4, 5);
        let phases = Matrix::from_rows(vec![
            vec![int(1), phase.clone()],
            vec![phase.conj(), int(1)],
        ])
        .unwrap();
        let r = diagonal_type(&phases).unwrap();
        assert_eq!(r.classify().unwrap(), pair(&[1, 1], &[]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RMatrix::identity(3).rank(), 9);
        assert_eq!(RMatrix::flip(2).rank(), 3);
    }

    #[test]
    fn temperley_lieb_detection() {
        assert!(normal_form(&pair(&[], &[2, 1]))
            .unwrap()
            .is_temperley_lieb());
        assert!(!RMatrix::identity(2).is_temperley_lieb());
        assert!(RMatrix::flip(2).negated().is_temperley_lieb());
    }

    #[test]
    fn temperley_lieb_existence_table() {
        assert_eq!(tl_exists(3, 2), Some(1));
        assert_eq!(tl_exists(4, 2), None);
        assert_eq!(tl_exists(2, 1), Some(0));

        assert_eq!(tl_classify(3, 2).unwrap(), pair(&[], &[2, 1]));
        assert_eq!(tl_classify(2, 1).unwrap(), pair(&[], &[1, 1]));
        assert_eq!(tl_classify(4, 3).unwrap(), pair(&[], &[3, 1]));
        assert_eq!(tl_classify(2, 0).unwrap(), pair(&[], &[2]));
        assert!(tl_classify(4, 2).is_err());
    }

    #[test]
    fn spectrum_validation_rejects_corrupt_data() {
        assert!(Spectrum::from_eigenvalues(vec![(2, 1)], 1).is_err());
        assert!(Spectrum::from_eigenvalues(vec![(1, 1), (2, 3)], 4).is_err());
        assert!(Spectrum::from_eigenvalues(vec![(0, 2)], 2).is_err());
        assert!(Spectrum::from_eigenvalues(vec![(1, 1)], 2).is_err());
        assert!(Spectrum::from_eigenvalues(vec![(-2, 2), (1, 1)], 3).is_ok());
    }
}
