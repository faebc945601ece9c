//! Sparse polynomials in `x0, .., xn` with left algebra coefficients.
//!
//! A term `(m, a)` stands for the real monomial `m` times the algebra element
//! `a`. There is no general polynomial product: only left actions by algebra
//! elements and products with real polynomials are defined.

pub(crate) mod random;
pub(crate) mod text;

pub use random::RandomPolySpec;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{AlgebraElement, HypercomplexBasis};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    BasisMismatch,
    /// Some term is not a multiple of the requested divisor.
    NotDivisible { var: Option<usize>, monomial: String },
    NotReal,
    WrongPointLength { expected: usize, found: usize },
    Parse { position: usize, message: String },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::BasisMismatch => f.write_str("polynomials over different hypercomplex bases"),
            PolyError::NotDivisible { var: Some(i), monomial } => {
                write!(f, "monomial {monomial} is not divisible by x{i}")
            }
            PolyError::NotDivisible { var: None, monomial } => {
                write!(f, "division leaves remainder at monomial {monomial}")
            }
            PolyError::NotReal => f.write_str("expected a polynomial with real coefficients"),
            PolyError::WrongPointLength { expected, found } => {
                write!(f, "point has {found} coordinates, expected {expected}")
            }
            PolyError::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// Exponent vector for `x0, .., xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut m = Self::one(vars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree in the variables listed in `vars`.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.0[i]).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub(crate) fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if text::write_monomial(f, &self.0, false)? {
            Ok(())
        } else {
            f.write_str("1")
        }
    }
}

/// An evaluation site `x0 + sum xi vi`, given by its real coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    basis: Arc<HypercomplexBasis>,
    terms: BTreeMap<Monomial, Vec<Rational>>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_basis(a: &Arc<HypercomplexBasis>, b: &Arc<HypercomplexBasis>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn is_zero_coords(c: &[Rational]) -> bool {
    c.iter().all(Zero::is_zero)
}

impl Polynomial {
    pub fn zero(basis: &Arc<HypercomplexBasis>) -> Self {
        Polynomial {
            basis: Arc::clone(basis),
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(monomial, coordinates)` pairs, summing repeats.
    pub(crate) fn from_terms<I>(basis: &Arc<HypercomplexBasis>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Vec<Rational>)>,
    {
        let mut p = Self::zero(basis);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn term(basis: &Arc<HypercomplexBasis>, monomial: Monomial, coefficient: &AlgebraElement) -> Self {
        Self::from_terms(basis, [(monomial, coefficient.coords().to_vec())])
    }

    pub fn constant(basis: &Arc<HypercomplexBasis>, a: &AlgebraElement) -> Self {
        Self::term(basis, Monomial::one(basis.n() + 1), a)
    }

    pub fn real_constant(basis: &Arc<HypercomplexBasis>, r: Rational) -> Self {
        Self::constant(basis, &AlgebraElement::real(basis.spec(), r))
    }

    pub fn one(basis: &Arc<HypercomplexBasis>) -> Self {
        Self::real_constant(basis, Rational::one())
    }

    /// The real coordinate function `xi`.
    pub fn variable(basis: &Arc<HypercomplexBasis>, i: usize) -> Self {
        Self::term(
            basis,
            Monomial::var(basis.n() + 1, i),
            &AlgebraElement::one(basis.spec()),
        )
    }

    /// `x = x0 + sum_i xi vi`.
    pub fn paravector(basis: &Arc<HypercomplexBasis>) -> Self {
        let all: Vec<usize> = (1..=basis.n()).collect();
        &Self::variable(basis, 0) + &Self::imaginary(basis, &all)
    }

    /// `x^c = x0 - sum_i xi vi`.
    pub fn paravector_conj(basis: &Arc<HypercomplexBasis>) -> Self {
        let all: Vec<usize> = (1..=basis.n()).collect();
        &Self::variable(basis, 0) - &Self::imaginary(basis, &all)
    }

    /// `x_A = sum_{i in A} xi vi`.
    pub fn imaginary(basis: &Arc<HypercomplexBasis>, set: &[usize]) -> Self {
        let vars = basis.n() + 1;
        Self::from_terms(
            basis,
            set.iter()
                .map(|&i| (Monomial::var(vars, i), basis.element(i).coords().to_vec())),
        )
    }

    /// `q_A = sum_{i in A} xi^2`, the squared norm of `x_A`.
    pub fn norm_sq(basis: &Arc<HypercomplexBasis>, set: &[usize]) -> Self {
        let vars = basis.n() + 1;
        let one = AlgebraElement::one(basis.spec());
        Self::from_terms(
            basis,
            set.iter().map(|&i| {
                (Monomial::var(vars, i).with_exponent(i, 2), one.coords().to_vec())
            }),
        )
    }

    /// `x_A^m`, with `x_A^2 = -q_A`.
    pub fn pow_imaginary(basis: &Arc<HypercomplexBasis>, set: &[usize], m: u32) -> Self {
        Self::one(basis).left_mul_imaginary_power(set, m)
    }

    /// `x^m` by repeated left multiplication by `x`.
    pub fn power_of_x(basis: &Arc<HypercomplexBasis>, m: u32) -> Self {
        let mut acc = Self::one(basis);
        for _ in 0..m {
            acc = acc.left_mul_x();
        }
        acc
    }

    pub fn basis(&self) -> &Arc<HypercomplexBasis> {
        &self.basis
    }

    /// Number of variables, `n + 1`.
    pub fn vars(&self) -> usize {
        self.basis.n() + 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &[Rational])> + '_ {
        self.terms.iter().map(|(m, c)| (m, c.as_slice()))
    }

    pub fn coefficient(&self, m: &Monomial) -> AlgebraElement {
        match self.terms.get(m) {
            Some(c) => AlgebraElement::from_coords(self.basis.spec(), c.clone()).expect("dimension"),
            None => AlgebraElement::zero(self.basis.spec()),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Vec<Rational>) {
        if is_zero_coords(&c) {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                for (a, b) in e.get_mut().iter_mut().zip(c) {
                    *a += b;
                }
                if is_zero_coords(e.get()) {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled_term(&mut self, m: Monomial, c: &[Rational], s: &Rational) {
        if s.is_zero() {
            return;
        }
        self.add_term(m, c.iter().map(|x| x * s).collect());
    }

    /// Applies `g` to every coefficient vector.
    fn map_coeffs(&self, mut g: impl FnMut(&[Rational]) -> Vec<Rational>) -> Self {
        Self::from_terms(&self.basis, self.terms.iter().map(|(m, c)| (m.clone(), g(c))))
    }

    /// Replaces each term by a scaled term with a new monomial.
    fn map_terms(&self, mut g: impl FnMut(&Monomial) -> Option<(Monomial, Rational)>) -> Self {
        let mut out = Self::zero(&self.basis);
        for (m, c) in &self.terms {
            if let Some((m2, s)) = g(m) {
                out.add_scaled_term(m2, c, &s);
            }
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(PolyError::BasisMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.basis);
        }
        self.map_coeffs(|c| c.iter().map(|x| x * s).collect())
    }

    /// Coefficientwise `a -> v a`.
    pub fn left_mul_const(&self, v: &AlgebraElement) -> Self {
        let spec = self.basis.spec();
        assert!(v.spec() == spec, "algebra mismatch");
        self.map_coeffs(|c| spec.mul_coords(v.coords(), c))
    }

    /// Coefficientwise `a -> a v`.
    pub fn right_mul_const(&self, v: &AlgebraElement) -> Self {
        let spec = self.basis.spec();
        assert!(v.spec() == spec, "algebra mismatch");
        self.map_coeffs(|c| spec.mul_coords(c, v.coords()))
    }

    /// Coefficientwise `a -> vi a`, with `v0 = 1`.
    pub fn left_mul_unit(&self, i: usize) -> Self {
        if i == 0 {
            return self.clone();
        }
        self.map_coeffs(|c| self.basis.left_unit(i, c))
    }

    /// `x_A f = sum_{i in A} xi (vi f)`.
    pub fn left_mul_imaginary(&self, set: &[usize]) -> Self {
        let mut out = Self::zero(&self.basis);
        for &i in set {
            for (m, c) in &self.terms {
                let e = m.exponent(i);
                out.add_term(m.with_exponent(i, e + 1), self.basis.left_unit(i, c));
            }
        }
        out
    }

    /// `x_A^m f`: `(-q_A)^(m/2)` times `f`, with one extra `x_A` for odd `m`.
    pub fn left_mul_imaginary_power(&self, set: &[usize], m: u32) -> Self {
        let base = if m % 2 == 1 { self.left_mul_imaginary(set) } else { self.clone() };
        let neg_q = Self::norm_sq(&self.basis, set).neg();
        let mut acc = base;
        for _ in 0..m / 2 {
            acc = acc.mul_real(&neg_q).expect("q_A is real");
        }
        acc
    }

    /// `x f = x0 f + x_[n] f`.
    pub fn left_mul_x(&self) -> Self {
        let all: Vec<usize> = (1..=self.basis.n()).collect();
        &self.mul_var(0) + &self.left_mul_imaginary(&all)
    }

    /// `x^c f = x0 f - x_[n] f`.
    pub fn left_mul_x_conj(&self) -> Self {
        let all: Vec<usize> = (1..=self.basis.n()).collect();
        &self.mul_var(0) - &self.left_mul_imaginary(&all)
    }

    /// `xi f`.
    pub fn mul_var(&self, i: usize) -> Self {
        self.map_terms(|m| Some((m.with_exponent(i, m.exponent(i) + 1), Rational::one())))
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        self.map_terms(|m| Some((m.mul(mono), Rational::one())))
    }

    /// Product with a polynomial whose coefficients are real.
    pub fn mul_real(&self, g: &Self) -> Result<Self, PolyError> {
        if !same_basis(&self.basis, &g.basis) {
            return Err(PolyError::BasisMismatch);
        }
        let g_terms = g.real_terms().ok_or(PolyError::NotReal)?;
        let mut out = Self::zero(&self.basis);
        for (m, c) in &self.terms {
            for (gm, gc) in &g_terms {
                out.add_scaled_term(m.mul(gm), c, gc);
            }
        }
        Ok(out)
    }

    fn real_terms(&self) -> Option<Vec<(Monomial, Rational)>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                c[1..].iter().all(Zero::is_zero).then(|| (m.clone(), c[0].clone()))
            })
            .collect()
    }

    pub fn is_real(&self) -> bool {
        self.real_terms().is_some()
    }

    pub fn derivative(&self, i: usize) -> Self {
        self.map_terms(|m| {
            let e = m.exponent(i);
            (e > 0).then(|| (m.with_exponent(i, e - 1), int(e as i64)))
        })
    }

    /// `ri f`: substitutes `xi -> -xi`, coefficients untouched.
    pub fn reflect(&self, i: usize) -> Self {
        self.reflect_set(&[i])
    }

    /// `r_A f`.
    pub fn reflect_set(&self, set: &[usize]) -> Self {
        self.map_terms(|m| {
            let odd = set.iter().map(|&i| m.exponent(i)).sum::<u32>() % 2 == 1;
            Some((m.clone(), if odd { -Rational::one() } else { Rational::one() }))
        })
    }

    /// `r = r1 .. rn`.
    pub fn reflect_all(&self) -> Self {
        let all: Vec<usize> = (1..=self.basis.n()).collect();
        self.reflect_set(&all)
    }

    /// `E_A f = sum_{i in A} xi di f`.
    pub fn euler(&self, set: &[usize]) -> Self {
        self.map_terms(|m| Some((m.clone(), int(m.degree_in(set) as i64))))
    }

    /// Quotient by `xi^power`.
    pub fn divide_exact(&self, i: usize, power: u32) -> Result<Self, PolyError> {
        let mut out = Self::zero(&self.basis);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e < power {
                return Err(PolyError::NotDivisible {
                    var: Some(i),
                    monomial: alloc::format!("{m}"),
                });
            }
            out.terms.insert(m.with_exponent(i, e - power), c.clone());
        }
        Ok(out)
    }

    /// Quotient by a real polynomial `g`, by leading-term division in
    /// lexicographic order; fails unless the remainder is zero.
    pub fn divide_exact_real(&self, g: &Self) -> Result<Self, PolyError> {
        if !same_basis(&self.basis, &g.basis) {
            return Err(PolyError::BasisMismatch);
        }
        let g_terms = g.real_terms().ok_or(PolyError::NotReal)?;
        let (lead_m, lead_c) = match g_terms.last() {
            Some(t) => t.clone(),
            None => {
                return Err(PolyError::NotDivisible {
                    var: None,
                    monomial: String::from("(division by zero)"),
                })
            }
        };
        let mut rest = self.clone();
        let mut quotient = Self::zero(&self.basis);
        while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !lead_m.divides(&m) {
                return Err(PolyError::NotDivisible {
                    var: None,
                    monomial: alloc::format!("{m}"),
                });
            }
            let qm = m.div(&lead_m);
            let qc: Vec<Rational> = c.iter().map(|x| x / &lead_c).collect();
            for (gm, gc) in &g_terms {
                rest.add_scaled_term(qm.mul(gm), &qc, &-gc);
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    pub fn evaluate(&self, p: &Point) -> Result<AlgebraElement, PolyError> {
        if p.coords.len() != self.vars() {
            return Err(PolyError::WrongPointLength {
                expected: self.vars(),
                found: p.coords.len(),
            });
        }
        let dim = self.basis.spec().dim();
        let mut acc = vec![Rational::zero(); dim];
        for (m, c) in &self.terms {
            let mut value = Rational::one();
            for (x, &e) in p.coords.iter().zip(m.exponents()) {
                for _ in 0..e {
                    value *= x;
                }
            }
            if value.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(c) {
                *a += b * &value;
            }
        }
        Ok(AlgebraElement::from_coords(self.basis.spec(), acc).expect("dimension"))
    }

    /// `f` with `x0 = 0`.
    pub fn restrict_x0(&self) -> Self {
        self.restrict_zero(0)
    }

    /// `f` with `xi = 0`.
    pub fn restrict_zero(&self, i: usize) -> Self {
        self.map_terms(|m| (m.exponent(i) == 0).then(|| (m.clone(), Rational::one())))
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        self.map_terms(|m| (m.degree() == d).then(|| (m.clone(), Rational::one())))
    }

    /// Component of degree `d` in the variables of `set`.
    pub fn component_in(&self, set: &[usize], d: u32) -> Self {
        self.map_terms(|m| (m.degree_in(set) == d).then(|| (m.clone(), Rational::one())))
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, set: &[usize]) -> u32 {
        self.terms.keys().map(|m| m.degree_in(set)).max().unwrap_or(0)
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Scales the term with exponent `e` in `xi` by `weight(e)` and lowers
    /// that exponent by `shift`; terms with zero weight are dropped.
    pub(crate) fn reweight_in(&self, i: usize, shift: u32, weight: impl Fn(u32) -> Rational) -> Self {
        self.map_terms(|m| {
            let e = m.exponent(i);
            let w = weight(e);
            if w.is_zero() {
                return None;
            }
            debug_assert!(e >= shift);
            Some((m.with_exponent(i, e - shift), w))
        })
    }

    /// The first term in descending order, as text.
    pub fn leading_term_text(&self) -> Option<String> {
        self.terms.iter().next_back().map(|(m, c)| {
            let single = Self::from_terms(&self.basis, [(m.clone(), c.clone())]);
            alloc::format!("{single}")
        })
    }

    /// Largest absolute value of any numerator or denominator, for sizing.
    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .flat_map(|c| c.iter())
            .map(|x| x.abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on mismatched bases; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("basis mismatch")
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("basis mismatch")
    }
}

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.basis.spec();
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            text::write_terms(f, spec, m.exponents(), c, &mut first)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the text grammar, e.g. `3/2*x0^2*x1*e12 - x2`.
    pub fn parse(basis: &Arc<HypercomplexBasis>, input: &str) -> Result<Self, PolyError> {
        text::parse(basis, input)
    }
}
