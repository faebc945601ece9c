//! Membership in `F_P = ker D_P ∩ ker S_P`, Cauchy-Kovalevskaya extension and
//! bases of homogeneous `P`-Dunkl-regular polynomials.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraElement;
use crate::linalg::polynomial_rank;
use crate::operators::{MultiplicityMode, OperatorContext, OperatorError};
use crate::partitions::SetPartition;
use crate::poly::{PolyError, Polynomial};
use crate::rational::{factorial, Rational};

/// Names of the three operators in `S_A`, in order.
pub const SLICE_OPERATORS: [&str; 3] = ["S", "S'", "S''"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceError {
    Operator(OperatorError),
    Poly(PolyError),
    InputDependsOnX0,
    InputNotPSlice(SliceWitness),
    WrongExponentCount { expected: usize, found: usize },
    /// Division by a power of `q_A` failed in component `component`.
    NotInKernelSA { component: usize, monomial: String },
    /// Canonical and uniform multiplicities gave different verdicts.
    MultiplicityDisagreement,
    BasisCheckFailed(String),
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::Operator(e) => write!(f, "{e}"),
            SpaceError::Poly(e) => write!(f, "{e}"),
            SpaceError::InputDependsOnX0 => f.write_str("input depends on x0"),
            SpaceError::InputNotPSlice(w) => write!(f, "input is not P-slice: {w}"),
            SpaceError::WrongExponentCount { expected, found } => {
                write!(f, "expected {expected} exponents, found {found}")
            }
            SpaceError::NotInKernelSA { component, monomial } => write!(
                f,
                "not in the kernel of S_A: component of degree {component} fails at {monomial}"
            ),
            SpaceError::MultiplicityDisagreement => {
                f.write_str("canonical and uniform multiplicities disagree")
            }
            SpaceError::BasisCheckFailed(why) => write!(f, "basis check failed: {why}"),
        }
    }
}

impl core::error::Error for SpaceError {}

impl From<OperatorError> for SpaceError {
    fn from(e: OperatorError) -> Self {
        SpaceError::Operator(e)
    }
}

impl From<PolyError> for SpaceError {
    fn from(e: PolyError) -> Self {
        SpaceError::Poly(e)
    }
}

/// A nonzero image proving that a polynomial is not `P`-slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceWitness {
    pub block: usize,
    /// Index into [`SLICE_OPERATORS`].
    pub operator: usize,
    pub image: Polynomial,
}

impl fmt::Display for SliceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on block {} gives a term {}",
            SLICE_OPERATORS[self.operator],
            self.block + 1,
            self.image.leading_term_text().unwrap_or_default()
        )
    }
}

/// `Ok` if every `S_{A_j}` triple annihilates `f`, else the first nonzero image.
pub fn p_slice_witness(ctx: &OperatorContext, f: &Polynomial) -> Result<(), SliceWitness> {
    for j in 0..ctx.partition().len() {
        let images = ctx.s_triple(f, j).expect("block index in range");
        for (operator, image) in images.into_iter().enumerate() {
            if !image.is_zero() {
                return Err(SliceWitness { block: j, operator, image });
            }
        }
    }
    Ok(())
}

pub fn is_p_slice(ctx: &OperatorContext, f: &Polynomial) -> bool {
    p_slice_witness(ctx, f).is_ok()
}

/// [`is_p_slice`] under both multiplicity choices, which must agree.
pub fn is_p_slice_strict(ctx: &OperatorContext, f: &Polynomial) -> Result<bool, SpaceError> {
    let a = is_p_slice(&ctx.switched(MultiplicityMode::Canonical), f);
    let b = is_p_slice(&ctx.switched(MultiplicityMode::Uniform), f);
    if a == b {
        Ok(a)
    } else {
        Err(SpaceError::MultiplicityDisagreement)
    }
}

pub fn is_dunkl_monogenic(ctx: &OperatorContext, f: &Polynomial) -> bool {
    ctx.dunkl_cr(f).is_zero()
}

pub fn is_member_fp(ctx: &OperatorContext, f: &Polynomial) -> bool {
    is_dunkl_monogenic(ctx, f) && is_p_slice(ctx, f)
}

/// Combined membership report.
#[derive(Clone, Debug)]
pub struct Membership {
    pub slice_witness: Option<SliceWitness>,
    /// `D_P f`.
    pub dunkl_image: Polynomial,
}

impl Membership {
    pub fn is_p_slice(&self) -> bool {
        self.slice_witness.is_none()
    }

    pub fn is_dunkl_monogenic(&self) -> bool {
        self.dunkl_image.is_zero()
    }

    pub fn in_fp(&self) -> bool {
        self.is_p_slice() && self.is_dunkl_monogenic()
    }
}

pub fn membership(ctx: &OperatorContext, f: &Polynomial) -> Membership {
    Membership {
        slice_witness: p_slice_witness(ctx, f).err(),
        dunkl_image: ctx.dunkl_cr(f),
    }
}

/// `sum_k (-x0)^k / k! D_P^k g` without input checks.
pub(crate) fn ck_unchecked(ctx: &OperatorContext, g: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(g.basis());
    let mut power = g.clone();
    let mut x0k = Polynomial::one(g.basis());
    let bound = g.degree() + 1;
    for k in 0..=bound {
        if power.is_zero() {
            break;
        }
        debug_assert!(k < bound, "the Dunkl-Dirac operator lowers degree");
        let sign = if k % 2 == 0 { Rational::from_integer(1.into()) } else { Rational::from_integer((-1).into()) };
        let term = power.mul_real(&x0k).expect("x0^k is real").scale(&(sign / factorial(k)));
        out = &out + &term;
        power = ctx.dirac(&power);
        x0k = x0k.mul_var(0);
    }
    out
}

/// The unique element of `F_P` restricting to `g` at `x0 = 0`.
pub fn ck_extension(ctx: &OperatorContext, g: &Polynomial) -> Result<Polynomial, SpaceError> {
    if g.depends_on(0) {
        return Err(SpaceError::InputDependsOnX0);
    }
    p_slice_witness(ctx, g).map_err(SpaceError::InputNotPSlice)?;
    Ok(ck_unchecked(ctx, g))
}

/// `[x_P^d, a] = x_{A_1}^{d_1} ( .. (x_{A_l}^{d_l} a) .. )`.
pub fn ordered_imaginary_power(ctx: &OperatorContext, d: &[u32], a: &AlgebraElement) -> Result<Polynomial, SpaceError> {
    let blocks = ctx.partition().blocks();
    if d.len() != blocks.len() {
        return Err(SpaceError::WrongExponentCount { expected: blocks.len(), found: d.len() });
    }
    let mut acc = Polynomial::constant(ctx.basis(), a);
    for (block, &e) in blocks.iter().zip(d).rev() {
        acc = acc.left_mul_imaginary_power(block, e);
    }
    Ok(acc)
}

/// `P_{d,a} = CK[[x_P^d, a]]`.
pub fn basis_polynomial(ctx: &OperatorContext, d: &[u32], a: &AlgebraElement) -> Result<Polynomial, SpaceError> {
    let g = ordered_imaginary_power(ctx, d, a)?;
    Ok(ck_unchecked(ctx, &g))
}

/// Exponent vectors of length `parts` summing to `total`, in lexicographic
/// order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=rest {
            cur.push(e);
            go(rest - e, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `P_{d,v}` for all compositions `d` of `degree` and algebra basis elements
/// `v`, without verification.
pub fn homogeneous_fp_basis_unchecked(ctx: &OperatorContext, degree: u32) -> Vec<Polynomial> {
    let spec = ctx.basis().spec();
    let mut out = Vec::new();
    for d in compositions(degree, ctx.partition().len()) {
        for p in 0..spec.dim() {
            out.push(basis_polynomial(ctx, &d, &spec.basis_element(p)).expect("composition length matches"));
        }
    }
    out
}

/// [`homogeneous_fp_basis_unchecked`], checking membership in `F_P` and
/// linear independence.
pub fn homogeneous_fp_basis(ctx: &OperatorContext, degree: u32) -> Result<Vec<Polynomial>, SpaceError> {
    let basis = homogeneous_fp_basis_unchecked(ctx, degree);
    if let Some(pos) = basis.iter().position(|f| !is_member_fp(ctx, f)) {
        return Err(SpaceError::BasisCheckFailed(alloc::format!("element {pos} is not in F_P")));
    }
    let rank = polynomial_rank(&basis);
    if rank != basis.len() {
        return Err(SpaceError::BasisCheckFailed(alloc::format!(
            "rank {rank} for {} elements",
            basis.len()
        )));
    }
    Ok(basis)
}

/// `binom(l + d - 1, d) * dim A`.
pub fn expected_dimension(parts: usize, degree: u32, algebra_dim: usize) -> u128 {
    let (top, k) = (parts as u128 + degree as u128 - 1, degree as u128);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (top - i) / (i + 1);
    }
    c * algebra_dim as u128
}

/// Writes `f = sum_i x_A^i g_i` with each `g_i` free of the variables of `A`.
pub fn slice_decompose(f: &Polynomial, set: &[usize]) -> Result<Vec<Polynomial>, SpaceError> {
    if f.depends_on(0) {
        return Err(SpaceError::InputDependsOnX0);
    }
    let basis = f.basis();
    let q = Polynomial::norm_sq(basis, set);
    let top = f.degree_in(set);
    let mut parts = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        let component = f.component_in(set, i);
        let (mut numerator, half_power) = if i % 2 == 0 {
            (component, i / 2)
        } else {
            (component.left_mul_imaginary(set), i.div_ceil(2))
        };
        for _ in 0..half_power {
            numerator = numerator.divide_exact_real(&q).map_err(|e| match e {
                PolyError::NotDivisible { monomial, .. } => SpaceError::NotInKernelSA { component: i as usize, monomial },
                other => SpaceError::Poly(other),
            })?;
        }
        if half_power % 2 == 1 {
            numerator = numerator.neg();
        }
        if let Some(&v) = set.iter().find(|&&v| numerator.depends_on(v)) {
            return Err(SpaceError::NotInKernelSA {
                component: i as usize,
                monomial: alloc::format!("quotient still depends on x{v}"),
            });
        }
        parts.push(numerator);
    }
    let mut rebuilt = Polynomial::zero(basis);
    for (i, g) in parts.iter().enumerate() {
        rebuilt = &rebuilt + &g.left_mul_imaginary_power(set, i as u32);
    }
    if rebuilt != *f {
        let diff = &rebuilt - f;
        return Err(SpaceError::NotInKernelSA {
            component: diff.degree_in(set) as usize,
            monomial: diff.leading_term_text().unwrap_or_default(),
        });
    }
    // trailing zero parts carry no information
    while parts.len() > 1 && parts.last().is_some_and(Polynomial::is_zero) {
        parts.pop();
    }
    Ok(parts)
}

fn random_element(ctx: &OperatorContext, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let spec = ctx.basis().spec();
    let mut coords = vec![Rational::from_integer(0.into()); spec.dim()];
    let count = rng.gen_range(1..=3usize);
    for _ in 0..count {
        let p = rng.gen_range(0..spec.dim());
        coords[p] = crate::poly::random::small_rational(rng);
    }
    AlgebraElement::from_coords(spec, coords).expect("dimension")
}

/// A seeded random element of `F_P` of degree at most `degree`: the
/// CK-extension of a sum of ordered products `[x_P^d, a]` with random
/// compositions `d` and random coefficients `a`, always including degree
/// `degree` itself.
pub fn random_fp_element(ctx: &OperatorContext, degree: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = ctx.partition().len();
    let mut g = Polynomial::zero(ctx.basis());
    for e in 0..=degree {
        if e != degree && rng.gen_range(0..3) != 0 {
            continue;
        }
        let comps = compositions(e, parts);
        let picks = rng.gen_range(1..=2usize);
        for _ in 0..picks {
            let d = &comps[rng.gen_range(0..comps.len())];
            let a = random_element(ctx, &mut rng);
            g = &g + &ordered_imaginary_power(ctx, d, &a).expect("composition length matches");
        }
    }
    ck_unchecked(ctx, &g)
}

/// A polynomial in one of the two spaces but not the other, searched among
/// basis polynomials of degree `1..=max_degree`. The flag is `true` when the
/// witness lies in `F_P` and outside `F_Q`.
pub fn separating_witness(
    ctx_p: &OperatorContext,
    ctx_q: &OperatorContext,
    max_degree: u32,
) -> Option<(bool, Polynomial)> {
    for d in 1..=max_degree {
        for (first, a, b) in [(true, ctx_p, ctx_q), (false, ctx_q, ctx_p)] {
            let spec = a.basis().spec();
            for comp in compositions(d, a.partition().len()) {
                for p in 0..spec.dim() {
                    let f = basis_polynomial(a, &comp, &spec.basis_element(p)).expect("length matches");
                    if !is_member_fp(b, &f) {
                        return Some((first, f));
                    }
                }
            }
        }
    }
    None
}

/// Convenience for `OperatorContext::canonical` on a partition of the same basis.
pub fn context_for(ctx: &OperatorContext, p: SetPartition) -> Result<OperatorContext, SpaceError> {
    Ok(ctx.for_partition(p)?)
}

#[cfg(test)]
mod tests;
