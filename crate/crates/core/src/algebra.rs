//! Real alternative *-algebras given by structure tables.
//!
//! Two families are supported: Clifford algebras of signature `(0, n)` and the
//! octonions. In both cases the product of two basis elements is a signed basis
//! element, so the table stores a [`SignedIndex`] per ordered pair.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Largest Clifford generator count accepted by [`AlgebraSpec::clifford`].
pub const MAX_CLIFFORD_GENERATORS: u8 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// Clifford algebra with `n` anticommuting generators squaring to `-1`.
    Clifford(u8),
    Octonion,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Clifford(n) => write!(f, "clifford:{n}"),
            AlgebraKind::Octonion => f.write_str("octonion"),
        }
    }
}

/// A basis index together with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedIndex {
    pub index: usize,
    pub negative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    SpecMismatch { left: AlgebraKind, right: AlgebraKind },
    UnknownAlgebra(String),
    UnsupportedGenerators(u8),
    UnknownBasisName(String),
    WrongLength { expected: usize, found: usize },
    EmptyBasis,
    FirstElementNotOne,
    /// `t(v) != 0` or `n(v) != 1` for the element at this position.
    NotImaginaryUnit { index: usize },
    /// `v_i (v_j a) != -v_j (v_i a)` for the named algebra basis element `a`.
    NotAnticommuting { i: usize, j: usize, a: String },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::SpecMismatch { left, right } => {
                write!(f, "algebra mismatch: {left} vs {right}")
            }
            AlgebraError::UnknownAlgebra(s) => {
                write!(f, "unknown algebra `{s}` (expected clifford:N or octonion)")
            }
            AlgebraError::UnsupportedGenerators(n) => write!(
                f,
                "clifford:{n} not supported (1 <= N <= {MAX_CLIFFORD_GENERATORS})"
            ),
            AlgebraError::UnknownBasisName(s) => write!(f, "unknown basis element `{s}`"),
            AlgebraError::WrongLength { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            AlgebraError::EmptyBasis => f.write_str("hypercomplex basis needs 1 and at least one unit"),
            AlgebraError::FirstElementNotOne => f.write_str("first basis element must be 1"),
            AlgebraError::NotImaginaryUnit { index } => {
                write!(f, "basis element v{index} is not an imaginary unit (t = 0, n = 1)")
            }
            AlgebraError::NotAnticommuting { i, j, a } => {
                write!(f, "v{i}(v{j} a) != -v{j}(v{i} a) for a = {a}")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Structure constants and involution of a finite-dimensional algebra.
#[derive(Debug)]
pub struct AlgebraSpec {
    kind: AlgebraKind,
    names: Vec<String>,
    /// Row-major `dim x dim` table of basis products.
    table: Vec<SignedIndex>,
    /// `true` where the *-involution negates the basis element.
    conjugation: Vec<bool>,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for AlgebraSpec {}

impl AlgebraSpec {
    /// Clifford algebra `R_n` of signature `(0, n)`.
    ///
    /// Blades are bitsets over `{1..n}`, ordered by grade and then
    /// lexicographically: `1, e1, .., en, e12, e13, ..`.
    pub fn clifford(n: u8) -> Result<Arc<Self>, AlgebraError> {
        if n == 0 || n > MAX_CLIFFORD_GENERATORS {
            return Err(AlgebraError::UnsupportedGenerators(n));
        }
        let dim = 1usize << n;
        let mut masks: Vec<u32> = (0..dim as u32).collect();
        masks.sort_by_key(|&m| (m.count_ones(), blade_indices(m)));
        let mut position = vec![0usize; dim];
        for (p, &m) in masks.iter().enumerate() {
            position[m as usize] = p;
        }

        let names = masks
            .iter()
            .map(|&m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    let mut s = String::from("e");
                    for i in blade_indices(m) {
                        s.push(char::from_digit(i, 10).expect("generator index is a digit"));
                    }
                    s
                }
            })
            .collect();

        let mut table = Vec::with_capacity(dim * dim);
        for &a in &masks {
            for &b in &masks {
                table.push(SignedIndex {
                    index: position[(a ^ b) as usize],
                    negative: blade_product_negative(a, b),
                });
            }
        }

        let conjugation = masks
            .iter()
            .map(|&m| {
                let k = m.count_ones();
                (k * (k + 1) / 2) % 2 == 1
            })
            .collect();

        Ok(Arc::new(AlgebraSpec {
            kind: AlgebraKind::Clifford(n),
            names,
            table,
            conjugation,
        }))
    }

    /// Octonions by Cayley-Dickson doubling of the quaternions,
    /// `(a, b)(c, d) = (ac - d^c b, da + b c^c)` with `l = (0, 1)`.
    ///
    /// The basis is `1, i, j, k, l, li, lj, lk`, where `li` is the literal
    /// product `l * i` under this rule.
    pub fn octonion() -> Arc<Self> {
        let generators: [Octo; 5] = [
            cd::unit(0),
            cd::unit(1),
            cd::unit(2),
            cd::unit(3),
            cd::unit(4),
        ];
        let l = generators[4];
        let mut basis: Vec<Octo> = generators.to_vec();
        for q in 1..4 {
            basis.push(cd::mul(&l, &generators[q]));
        }
        // Each basis element is +/- one pair coordinate; invert that map.
        let mut coordinate_owner = [SignedIndex { index: 0, negative: false }; 8];
        for (p, v) in basis.iter().enumerate() {
            let (slot, value) = v
                .iter()
                .enumerate()
                .find(|(_, c)| **c != 0)
                .expect("nonzero basis element");
            debug_assert_eq!(value.abs(), 1);
            coordinate_owner[slot] = SignedIndex { index: p, negative: *value < 0 };
        }
        let mut table = Vec::with_capacity(64);
        for a in &basis {
            for b in &basis {
                let prod = cd::mul(a, b);
                let (slot, value) = prod
                    .iter()
                    .enumerate()
                    .find(|(_, c)| **c != 0)
                    .expect("octonion basis products are nonzero");
                let owner = coordinate_owner[slot];
                table.push(SignedIndex {
                    index: owner.index,
                    negative: owner.negative != (*value < 0),
                });
            }
        }
        let names = ["1", "i", "j", "k", "l", "li", "lj", "lk"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let conjugation = (0..8).map(|p| p != 0).collect();
        Arc::new(AlgebraSpec {
            kind: AlgebraKind::Octonion,
            names,
            table,
            conjugation,
        })
    }

    /// Parses `clifford:N` or `octonion`.
    pub fn parse(text: &str) -> Result<Arc<Self>, AlgebraError> {
        let text = text.trim();
        if text == "octonion" {
            return Ok(Self::octonion());
        }
        if let Some(rest) = text.strip_prefix("clifford:") {
            let n: u8 = rest
                .trim()
                .parse()
                .map_err(|_| AlgebraError::UnknownAlgebra(text.to_string()))?;
            return Self::clifford(n);
        }
        Err(AlgebraError::UnknownAlgebra(text.to_string()))
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn is_associative(&self) -> bool {
        matches!(self.kind, AlgebraKind::Clifford(_))
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn basis_name(&self, p: usize) -> &str {
        &self.names[p]
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Product of basis elements `p * q`.
    pub fn product(&self, p: usize, q: usize) -> SignedIndex {
        self.table[p * self.dim() + q]
    }

    /// Whether the *-involution maps basis element `p` to its negative.
    pub fn conjugation_negates(&self, p: usize) -> bool {
        self.conjugation[p]
    }

    pub fn basis_element(self: &Arc<Self>, p: usize) -> AlgebraElement {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[p] = Rational::one();
        AlgebraElement { spec: Arc::clone(self), coords }
    }

    pub fn element_by_name(self: &Arc<Self>, name: &str) -> Result<AlgebraElement, AlgebraError> {
        self.basis_index(name)
            .map(|p| self.basis_element(p))
            .ok_or_else(|| AlgebraError::UnknownBasisName(name.to_string()))
    }

    pub(crate) fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = vec![Rational::zero(); dim];
        for (p, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let s = self.product(p, q);
                let term = x * y;
                if s.negative {
                    out[s.index] -= term;
                } else {
                    out[s.index] += term;
                }
            }
        }
        out
    }

    /// `(+/- e_p) * a`, a signed permutation of the coordinates of `a`.
    pub(crate) fn left_basis_action(&self, unit: SignedIndex, a: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (q, y) in a.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let s = self.product(unit.index, q);
            out[s.index] = if s.negative != unit.negative { -y } else { y.clone() };
        }
        out
    }

    pub(crate) fn conjugate_coords(&self, a: &[Rational]) -> Vec<Rational> {
        a.iter()
            .zip(&self.conjugation)
            .map(|(x, &neg)| if neg { -x } else { x.clone() })
            .collect()
    }
}

fn blade_indices(mask: u32) -> Vec<u32> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}

/// Sign of `e_A e_B` for ascending blades: one transposition for every pair
/// `(i in A, j in B)` with `j < i`, and `e_i e_i = -1` for each shared index.
fn blade_product_negative(a: u32, b: u32) -> bool {
    let mut swaps = 0u32;
    for bit in 0..32 {
        if a & (1 << bit) != 0 {
            swaps += (b & ((1u32 << bit) - 1)).count_ones();
        }
    }
    swaps += (a & b).count_ones();
    swaps % 2 == 1
}

type Octo = [i64; 8];

/// Integer Cayley-Dickson arithmetic used to build the octonion table.
mod cd {
    use super::Octo;

    type Quat = [i64; 4];

    pub(super) fn unit(slot: usize) -> Octo {
        let mut v = [0; 8];
        v[slot] = 1;
        v
    }

    fn qmul(a: &Quat, b: &Quat) -> Quat {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }

    fn qconj(a: &Quat) -> Quat {
        [a[0], -a[1], -a[2], -a[3]]
    }

    fn split(x: &Octo) -> (Quat, Quat) {
        ([x[0], x[1], x[2], x[3]], [x[4], x[5], x[6], x[7]])
    }

    pub(super) fn mul(x: &Octo, y: &Octo) -> Octo {
        let (a, b) = split(x);
        let (c, d) = split(y);
        let ac = qmul(&a, &c);
        let db = qmul(&qconj(&d), &b);
        let da = qmul(&d, &a);
        let bc = qmul(&b, &qconj(&c));
        let mut out = [0; 8];
        for t in 0..4 {
            out[t] = ac[t] - db[t];
            out[4 + t] = da[t] + bc[t];
        }
        out
    }
}

/// An element of an algebra as a dense vector of rational coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    spec: Arc<AlgebraSpec>,
    coords: Vec<Rational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coords == other.coords
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        AlgebraElement {
            spec: Arc::clone(spec),
            coords: vec![Rational::zero(); spec.dim()],
        }
    }

    pub fn one(spec: &Arc<AlgebraSpec>) -> Self {
        spec.basis_element(0)
    }

    pub fn real(spec: &Arc<AlgebraSpec>, value: Rational) -> Self {
        let mut e = Self::zero(spec);
        e.coords[0] = value;
        e
    }

    pub fn from_coords(spec: &Arc<AlgebraSpec>, coords: Vec<Rational>) -> Result<Self, AlgebraError> {
        if coords.len() != spec.dim() {
            return Err(AlgebraError::WrongLength {
                expected: spec.dim(),
                found: coords.len(),
            });
        }
        Ok(AlgebraElement { spec: Arc::clone(spec), coords })
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The real value if every non-scalar coordinate vanishes.
    pub fn as_real(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    fn check_spec(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(AlgebraError::SpecMismatch {
                left: self.spec.kind,
                right: other.spec.kind,
            })
        }
    }

    /// The literal binary product `self * rhs`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_spec(rhs)?;
        Ok(AlgebraElement {
            spec: Arc::clone(&self.spec),
            coords: self.spec.mul_coords(&self.coords, &rhs.coords),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_spec(rhs)?;
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        Ok(AlgebraElement { spec: Arc::clone(&self.spec), coords })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_spec(rhs)?;
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        Ok(AlgebraElement { spec: Arc::clone(&self.spec), coords })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AlgebraElement {
            spec: Arc::clone(&self.spec),
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    /// The *-involution `x -> x^c`.
    pub fn conjugate(&self) -> Self {
        AlgebraElement {
            spec: Arc::clone(&self.spec),
            coords: self.spec.conjugate_coords(&self.coords),
        }
    }

    /// `t(x) = x + x^c`.
    pub fn trace(&self) -> Self {
        self.try_add(&self.conjugate()).expect("same spec")
    }

    /// `n(x) = x x^c`.
    pub fn norm_form(&self) -> Self {
        self.try_mul(&self.conjugate()).expect("same spec")
    }

    /// Membership in the set of imaginary units: `t(x) = 0` and `n(x) = 1`.
    pub fn is_imaginary_unit(&self) -> bool {
        self.trace().is_zero() && self.norm_form() == Self::one(&self.spec)
    }

    /// Single signed basis element view, if this element is one.
    pub(crate) fn as_signed_basis(&self) -> Option<SignedIndex> {
        let mut found = None;
        for (p, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if found.is_some() {
                return None;
            }
            if c.is_one() {
                found = Some(SignedIndex { index: p, negative: false });
            } else if (-c).is_one() {
                found = Some(SignedIndex { index: p, negative: true });
            } else {
                return None;
            }
        }
        found
    }
}

impl core::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;

    /// Panics on mismatched algebras; see [`AlgebraElement::try_mul`].
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl core::ops::Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            spec: Arc::clone(&self.spec),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        crate::poly::text::write_terms(f, &self.spec, &[], &self.coords, &mut first)?;
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Right-nested product `u_1 (u_2 ( .. (u_l a) .. ))`.
pub fn ordered_product(units: &[AlgebraElement], a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    let mut acc = a.clone();
    for u in units.iter().rev() {
        acc = u.try_mul(&acc)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
enum LeftAction {
    Signed(SignedIndex),
    General(Vec<Rational>),
}

/// A validated hypercomplex basis `(1, v_1, .., v_n)` of a subspace `M`.
#[derive(Debug)]
pub struct HypercomplexBasis {
    spec: Arc<AlgebraSpec>,
    elements: Vec<AlgebraElement>,
    actions: Vec<LeftAction>,
}

impl PartialEq for HypercomplexBasis {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self, other) || self.elements == other.elements
    }
}

impl Eq for HypercomplexBasis {}

impl HypercomplexBasis {
    /// Checks the unit conditions and `v_i (v_j a) = -v_j (v_i a)` against
    /// every algebra basis element `a`.
    pub fn validate(spec: &Arc<AlgebraSpec>, elements: Vec<AlgebraElement>) -> Result<Arc<Self>, AlgebraError> {
        if elements.len() < 2 {
            return Err(AlgebraError::EmptyBasis);
        }
        for e in &elements {
            if e.spec != *spec {
                return Err(AlgebraError::SpecMismatch {
                    left: spec.kind,
                    right: e.spec.kind,
                });
            }
        }
        if elements[0] != AlgebraElement::one(spec) {
            return Err(AlgebraError::FirstElementNotOne);
        }
        for (i, v) in elements.iter().enumerate().skip(1) {
            if !v.is_imaginary_unit() {
                return Err(AlgebraError::NotImaginaryUnit { index: i });
            }
        }
        let n = elements.len() - 1;
        for i in 1..=n {
            for j in (i + 1)..=n {
                for p in 0..spec.dim() {
                    let a = spec.basis_element(p);
                    let lhs = elements[i].try_mul(&elements[j].try_mul(&a)?)?;
                    let rhs = elements[j].try_mul(&elements[i].try_mul(&a)?)?;
                    if !lhs.try_add(&rhs)?.is_zero() {
                        return Err(AlgebraError::NotAnticommuting {
                            i,
                            j,
                            a: spec.basis_name(p).to_string(),
                        });
                    }
                }
            }
        }
        let actions = elements
            .iter()
            .map(|v| match v.as_signed_basis() {
                Some(s) => LeftAction::Signed(s),
                None => LeftAction::General(v.coords.clone()),
            })
            .collect();
        Ok(Arc::new(HypercomplexBasis {
            spec: Arc::clone(spec),
            elements,
            actions,
        }))
    }

    /// Basis given by algebra basis names, e.g. `["1", "e1", "e2"]`.
    pub fn from_names<S: AsRef<str>>(spec: &Arc<AlgebraSpec>, names: &[S]) -> Result<Arc<Self>, AlgebraError> {
        let elements = names
            .iter()
            .map(|s| spec.element_by_name(s.as_ref().trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::validate(spec, elements)
    }

    /// Paravectors `(1, e1, .., en)` for Clifford algebras, the full algebra
    /// `(1, i, j, k, l, li, lj, lk)` for octonions.
    pub fn standard(spec: &Arc<AlgebraSpec>) -> Arc<Self> {
        let count = match spec.kind {
            AlgebraKind::Clifford(n) => n as usize + 1,
            AlgebraKind::Octonion => 8,
        };
        let elements = (0..count).map(|p| spec.basis_element(p)).collect();
        Self::validate(spec, elements).expect("standard bases are hypercomplex")
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    /// Number of imaginary units.
    pub fn n(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn elements(&self) -> &[AlgebraElement] {
        &self.elements
    }

    /// `v_i`, with `v_0 = 1`.
    pub fn element(&self, i: usize) -> &AlgebraElement {
        &self.elements[i]
    }

    /// Coordinates of `v_i a`.
    pub(crate) fn left_unit(&self, i: usize, a: &[Rational]) -> Vec<Rational> {
        match &self.actions[i] {
            LeftAction::Signed(s) => self.spec.left_basis_action(*s, a),
            LeftAction::General(v) => self.spec.mul_coords(v, a),
        }
    }

    /// Comma-separated basis names, when every `v_i` is a signed basis element.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&e.to_string());
        }
        out
    }
}
