//! Differential and differential-difference operators on polynomials.
//!
//! Functions that only need the hypercomplex basis take the polynomial
//! directly; Dunkl operators also take the multiplicities `k`, indexed
//! `k_1..k_n`. [`OperatorContext`] fixes a partition with admissible
//! multiplicities and exposes the partition-dependent operators.
//!
//! Unit multiplications are always explicit left actions `v_i (v_j a)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::HypercomplexBasis;
use crate::partitions::{MultiplicitySeq, PartitionError, SetPartition};
use crate::poly::Polynomial;
use crate::rational::{half, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorError {
    Partition(PartitionError),
    /// Partition of `{1..found}` used with a basis of `expected` units.
    PartitionSize { expected: usize, found: usize },
    /// The input is not in the kernel of the `S_A` triple, or the spherical
    /// derivative depends on the chosen index.
    NotASliceInput { set: Vec<usize>, reason: String },
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::Partition(e) => write!(f, "{e}"),
            OperatorError::PartitionSize { expected, found } => {
                write!(f, "partition covers 1..={found} but the basis has {expected} units")
            }
            OperatorError::NotASliceInput { set, reason } => {
                write!(f, "input is not slice with respect to {set:?}: {reason}")
            }
        }
    }
}

impl core::error::Error for OperatorError {}

impl From<PartitionError> for OperatorError {
    fn from(e: PartitionError) -> Self {
        OperatorError::Partition(e)
    }
}

fn all_units(f: &Polynomial) -> Vec<usize> {
    (1..=f.basis().n()).collect()
}

/// `d/dx0 f + sum_i v_i (d/dxi f)`.
pub fn cauchy_riemann(f: &Polynomial) -> Polynomial {
    let mut out = f.derivative(0);
    for i in 1..=f.basis().n() {
        out = &out + &f.derivative(i).left_mul_unit(i);
    }
    out
}

/// `d/dx0 f - sum_i v_i (d/dxi f)`.
pub fn conj_cauchy_riemann(f: &Polynomial) -> Polynomial {
    let mut out = f.derivative(0);
    for i in 1..=f.basis().n() {
        out = &out - &f.derivative(i).left_mul_unit(i);
    }
    out
}

/// `sum_{i=0}^n d^2/dxi^2 f`.
pub fn laplacian(f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.basis());
    for i in 0..=f.basis().n() {
        out = &out + &f.derivative(i).derivative(i);
    }
    out
}

/// `(f - ri f) / xi`, computed from the odd part in `xi`.
pub fn delta1(f: &Polynomial, i: usize) -> Polynomial {
    f.reweight_in(i, 1, |e| if e % 2 == 1 { int(2) } else { Rational::zero() })
}

/// `((f - ri f) - 2 xi d/dxi f) / xi^2`.
pub fn delta2(f: &Polynomial, i: usize) -> Polynomial {
    f.reweight_in(i, 2, |e| int(2 * (e % 2) as i64 - 2 * e as i64))
}

/// `Ti f = d/dxi f + ki delta1^i f`.
pub fn dunkl_t(f: &Polynomial, i: usize, ki: &Rational) -> Polynomial {
    &f.derivative(i) + &delta1(f, i).scale(ki)
}

/// `D_A f = sum_{i in A} v_i (Ti f)`.
pub fn dirac_set(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    let mut out = Polynomial::zero(f.basis());
    for &i in set {
        out = &out + &dunkl_t(f, i, k.get(i)).left_mul_unit(i);
    }
    out
}

/// `D_A` over all units.
pub fn dunkl_dirac(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    dirac_set(f, &all_units(f), k)
}

/// `S_A f = x_A (D_A f) + E_A f`, valid when `k` is admissible on `A`.
pub fn casimir_s(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    &dirac_set(f, set, k).left_mul_imaginary(set) + &f.euler(set)
}

/// `S_A f = 1/2 (x_A (D_A f) - D_A (x_A f) - f)`.
pub fn casimir_s_commutator(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    let a = dirac_set(f, set, k).left_mul_imaginary(set);
    let b = dirac_set(&f.left_mul_imaginary(set), set, k);
    (&(&a - &b) - f).scale(&half())
}

/// `sum_{i in A} xi (Ti f) - E_A f`.
pub fn s_tilde(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    let mut out = f.euler(set).neg();
    for &i in set {
        out = &out + &dunkl_t(f, i, k.get(i)).mul_var(i);
    }
    out
}

/// `1/2 S~_A (f + r_A f)`.
pub fn s_prime(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    s_tilde(&(f + &f.reflect_set(set)), set, k).scale(&half())
}

/// `S'_A (x_A f)`.
pub fn s_dprime(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Polynomial {
    s_prime(&f.left_mul_imaginary(set), set, k)
}

/// `(S_A f, S'_A f, S''_A f)`.
pub fn s_triple(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> [Polynomial; 3] {
    [casimir_s(f, set, k), s_prime(f, set, k), s_dprime(f, set, k)]
}

/// `-sum_{i<j} v_i (v_j (L_ij f))` with `L_ij = xi d/dxj - xj d/dxi`.
pub fn spherical_dirac(f: &Polynomial) -> Polynomial {
    let n = f.basis().n();
    let mut out = Polynomial::zero(f.basis());
    for i in 1..=n {
        for j in (i + 1)..=n {
            let l = &f.derivative(j).mul_var(i) - &f.derivative(i).mul_var(j);
            out = &out - &l.left_mul_unit(j).left_mul_unit(i);
        }
    }
    out
}

/// `S_B (r f)`, with `S_B` in commutator form over all units.
pub fn spherical_dunkl_dirac(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    casimir_s_commutator(&f.reflect_all(), &all_units(f), k)
}

/// `d/dx0 f + D_[n] f`.
pub fn dunkl_cr(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    &f.derivative(0) + &dunkl_dirac(f, k)
}

/// `dbar_M f + sum_i ki v_i delta1^i f`.
pub fn dunkl_cr_reflection(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    let mut out = cauchy_riemann(f);
    for i in 1..=f.basis().n() {
        if !k.get(i).is_zero() {
            out = &out + &delta1(f, i).left_mul_unit(i).scale(k.get(i));
        }
    }
    out
}

/// `d/dx0 f - D_[n] f`.
pub fn conj_dunkl_cr(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    &f.derivative(0) - &dunkl_dirac(f, k)
}

/// `Delta_M f - sum_i ki delta2^i f`.
pub fn dunkl_laplacian(f: &Polynomial, k: &MultiplicitySeq) -> Polynomial {
    let mut out = laplacian(f);
    for i in 1..=f.basis().n() {
        if !k.get(i).is_zero() {
            out = &out - &delta2(f, i).scale(k.get(i));
        }
    }
    out
}

/// `1/2 (f + r_A f)`.
pub fn spherical_value(f: &Polynomial, set: &[usize]) -> Polynomial {
    (f + &f.reflect_set(set)).scale(&half())
}

fn spherical_derivative_at(f: &Polynomial, i: usize) -> Polynomial {
    delta1(f, i).left_mul_unit(i).scale(&-half())
}

/// `-1/2 v_i delta1^i f` with `i = min(A)`, after checking that `f` is in the
/// kernel of the `S_A` triple and that `i = max(A)` gives the same result.
pub fn spherical_derivative(f: &Polynomial, set: &[usize], k: &MultiplicitySeq) -> Result<Polynomial, OperatorError> {
    let (Some(&lo), Some(&hi)) = (set.iter().min(), set.iter().max()) else {
        return Err(OperatorError::NotASliceInput {
            set: set.to_vec(),
            reason: String::from("empty index set"),
        });
    };
    for (name, image) in ["S", "S'", "S''"].iter().zip(s_triple(f, set, k)) {
        if let Some(t) = image.leading_term_text() {
            return Err(OperatorError::NotASliceInput {
                set: set.to_vec(),
                reason: alloc::format!("{name} image has term {t}"),
            });
        }
    }
    let d = spherical_derivative_at(f, lo);
    if lo != hi && spherical_derivative_at(f, hi) != d {
        return Err(OperatorError::NotASliceInput {
            set: set.to_vec(),
            reason: alloc::format!("spherical derivative differs between x{lo} and x{hi}"),
        });
    }
    Ok(d)
}

/// How multiplicities are chosen for a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MultiplicityMode {
    /// One zero per block, `-1/2` elsewhere.
    #[default]
    Canonical,
    /// `-1/2 + 1/(2 |A_j|)` throughout block `A_j`.
    Uniform,
}

/// A basis, a partition of its units and admissible multiplicities.
#[derive(Clone, Debug)]
pub struct OperatorContext {
    basis: Arc<HypercomplexBasis>,
    partition: SetPartition,
    k: MultiplicitySeq,
    alphas: Vec<usize>,
}

impl OperatorContext {
    pub fn new(
        basis: &Arc<HypercomplexBasis>,
        partition: SetPartition,
        k: MultiplicitySeq,
    ) -> Result<Self, OperatorError> {
        if partition.n() != basis.n() {
            return Err(OperatorError::PartitionSize { expected: basis.n(), found: partition.n() });
        }
        k.check_admissible(&partition)?;
        let alphas = partition.blocks().iter().map(|b| b[0]).collect();
        Ok(OperatorContext { basis: Arc::clone(basis), partition, k, alphas })
    }

    /// Canonical multiplicities with the default distinguished indices.
    pub fn canonical(basis: &Arc<HypercomplexBasis>, partition: SetPartition) -> Result<Self, OperatorError> {
        Self::with_mode(basis, partition, MultiplicityMode::Canonical, None)
    }

    pub fn uniform(basis: &Arc<HypercomplexBasis>, partition: SetPartition) -> Result<Self, OperatorError> {
        Self::with_mode(basis, partition, MultiplicityMode::Uniform, None)
    }

    /// `alphas[j]` is the distinguished index of block `j`; it sets the zero
    /// multiplicity in canonical mode and the default `alpha` for `delta2`.
    pub fn with_mode(
        basis: &Arc<HypercomplexBasis>,
        partition: SetPartition,
        mode: MultiplicityMode,
        alphas: Option<&[usize]>,
    ) -> Result<Self, OperatorError> {
        if partition.n() != basis.n() {
            return Err(OperatorError::PartitionSize { expected: basis.n(), found: partition.n() });
        }
        let canonical = MultiplicitySeq::canonical(&partition, alphas)?;
        let k = match mode {
            MultiplicityMode::Canonical => canonical,
            MultiplicityMode::Uniform => MultiplicitySeq::uniform(&partition),
        };
        let mut ctx = Self::new(basis, partition, k)?;
        if let Some(a) = alphas {
            ctx.alphas = a.to_vec();
        }
        Ok(ctx)
    }

    /// Same basis and partition with the other multiplicity choice.
    pub fn switched(&self, mode: MultiplicityMode) -> Self {
        Self::with_mode(&self.basis, self.partition.clone(), mode, Some(&self.alphas))
            .expect("already validated")
    }

    /// The same basis with a different partition and canonical multiplicities.
    pub fn for_partition(&self, partition: SetPartition) -> Result<Self, OperatorError> {
        Self::canonical(&self.basis, partition)
    }

    pub fn basis(&self) -> &Arc<HypercomplexBasis> {
        &self.basis
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn multiplicities(&self) -> &MultiplicitySeq {
        &self.k
    }

    /// Distinguished index of each block.
    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    /// `D_P f = d/dx0 f + sum_j D_{A_j} f`.
    pub fn dunkl_cr(&self, f: &Polynomial) -> Polynomial {
        let mut out = f.derivative(0);
        for block in self.partition.blocks() {
            out = &out + &dirac_set(f, block, &self.k);
        }
        out
    }

    /// `D_P` in reflection form, `dbar_M + sum_i ki v_i delta1^i`.
    pub fn dunkl_cr_reflection(&self, f: &Polynomial) -> Polynomial {
        dunkl_cr_reflection(f, &self.k)
    }

    /// `D_P` without the `x0` derivative.
    pub fn dirac(&self, f: &Polynomial) -> Polynomial {
        dunkl_dirac(f, &self.k)
    }

    pub fn conj_dunkl_cr(&self, f: &Polynomial) -> Polynomial {
        conj_dunkl_cr(f, &self.k)
    }

    /// `Delta_M - sum ki delta2^i`.
    pub fn dunkl_laplacian(&self, f: &Polynomial) -> Polynomial {
        dunkl_laplacian(f, &self.k)
    }

    /// `D_P (D^c_P f)`.
    pub fn dunkl_laplacian_composed(&self, f: &Polynomial) -> Polynomial {
        self.dunkl_cr(&self.conj_dunkl_cr(f))
    }

    pub fn block(&self, j: usize) -> Result<&[usize], OperatorError> {
        Ok(self.partition.block(j)?)
    }

    pub fn casimir_s(&self, f: &Polynomial, j: usize) -> Result<Polynomial, OperatorError> {
        Ok(casimir_s(f, self.block(j)?, &self.k))
    }

    pub fn s_triple(&self, f: &Polynomial, j: usize) -> Result<[Polynomial; 3], OperatorError> {
        Ok(s_triple(f, self.block(j)?, &self.k))
    }

    pub fn spherical_value(&self, f: &Polynomial, j: usize) -> Result<Polynomial, OperatorError> {
        Ok(spherical_value(f, self.block(j)?))
    }

    pub fn spherical_derivative(&self, f: &Polynomial, j: usize) -> Result<Polynomial, OperatorError> {
        spherical_derivative(f, self.block(j)?, &self.k)
    }
}

#[cfg(test)]
mod tests;
