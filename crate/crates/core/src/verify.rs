//! Reference checks: worked examples with their closed forms, and seeded
//! property suites over random polynomials.
//!
//! Each check returns a [`CriterionReport`]; [`run_all`] runs the ten checks
//! in order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraSpec, HypercomplexBasis};
use crate::fueter::{
    count_fueter_trees, even_case_descent, laplacian_decomposition, tau, verify_general_fueter, FueterTree, PairPolicy,
};
use crate::operators::{
    cauchy_riemann, casimir_s, conj_cauchy_riemann, delta1, delta2, dirac_set, dunkl_dirac, laplacian,
    spherical_dirac, spherical_dunkl_dirac, MultiplicityMode, OperatorContext,
};
use crate::partitions::{
    bell, enumerate_set_partitions, odd_integer_partitions, odd_partition_count, partition_count, MultiplicitySeq,
    SetPartition,
};
use crate::poly::{Monomial, Polynomial, RandomPolySpec};
use crate::rational::{factorial, int, ratio, Rational};
use crate::spaces::{
    basis_polynomial, ck_extension, compositions, expected_dimension, homogeneous_fp_basis, is_member_fp, is_p_slice,
    ordered_imaginary_power, random_fp_element, separating_witness,
};

/// Explicit polynomials of the worked examples.
pub mod reference {
    use super::*;

    /// `clifford(6)` with the hypercomplex basis `1, e1..e6, e123456`.
    pub fn r6_basis() -> Arc<HypercomplexBasis> {
        let spec = AlgebraSpec::clifford(6).expect("supported");
        HypercomplexBasis::from_names(&spec, &["1", "e1", "e2", "e3", "e4", "e5", "e6", "e123456"]).expect("valid basis")
    }

    /// `{1}|{2,3,4}|{5,6,7}`.
    pub fn r6_partition() -> SetPartition {
        SetPartition::new(7, vec![vec![1], vec![2, 3, 4], vec![5, 6, 7]]).expect("valid")
    }

    pub fn octonion_basis() -> Arc<HypercomplexBasis> {
        HypercomplexBasis::standard(&AlgebraSpec::octonion())
    }

    /// `{1,2,3}|{4}|{5,6,7}`.
    pub fn octonion_partition() -> SetPartition {
        SetPartition::new(7, vec![vec![1, 2, 3], vec![4], vec![5, 6, 7]]).expect("valid")
    }

    pub(crate) fn x0_pow(b: &Arc<HypercomplexBasis>, e: u32) -> Polynomial {
        Polynomial::one(b).mul_monomial(&Monomial::one(b.n() + 1).with_exponent(0, e))
    }

    fn real_mul(f: &Polynomial, g: &Polynomial) -> Polynomial {
        f.mul_real(g).expect("real factor")
    }

    fn sum(b: &Arc<HypercomplexBasis>, terms: &[Polynomial]) -> Polynomial {
        terms.iter().fold(Polynomial::zero(b), |acc, t| &acc + t)
    }

    fn real_const(b: &Arc<HypercomplexBasis>, r: Rational) -> Polynomial {
        Polynomial::real_constant(b, r)
    }

    struct R6 {
        b: Arc<HypercomplexBasis>,
        xa1: Polynomial,
        xa2: Polynomial,
        xa3: Polynomial,
        q2: Polynomial,
        q3: Polynomial,
    }

    fn r6_pieces() -> R6 {
        let b = r6_basis();
        R6 {
            xa1: Polynomial::imaginary(&b, &[1]),
            xa2: Polynomial::imaginary(&b, &[2, 3, 4]),
            xa3: Polynomial::imaginary(&b, &[5, 6, 7]),
            q2: Polynomial::norm_sq(&b, &[2, 3, 4]),
            q3: Polynomial::norm_sq(&b, &[5, 6, 7]),
            b,
        }
    }

    /// The degree 5 element of shape `(1,2,2)` written out term by term.
    pub fn p122() -> Polynomial {
        let R6 { b, xa1, xa2, xa3, q2, q3 } = r6_pieces();
        let x = |e| x0_pow(&b, e);
        let q23 = &q2 + &q3;
        let inner = &(&xa2 + &xa3).left_mul_imaginary(&[1]).scale(&int(2)) + &q23;
        let mixed = &real_mul(&xa2, &q3) + &real_mul(&xa3, &q2);
        let t5 = &mixed.left_mul_imaginary(&[1]).scale(&int(2)) + &real_mul(&q2, &q3);
        sum(
            &b,
            &[
                x(5).scale(&ratio(1, 15)),
                real_mul(&xa1, &x(4)).scale(&ratio(1, 3)),
                real_mul(&inner, &x(3)).scale(&ratio(-1, 3)),
                real_mul(&real_mul(&xa1, &q23), &x(2)).neg(),
                real_mul(&t5, &x(1)),
                real_mul(&real_mul(&xa1, &q2), &q3),
            ],
        )
    }

    /// `f'_{s,A2}` and `f'_{s,A3}` of [`p122`].
    pub fn p122_spherical_derivatives() -> (Polynomial, Polynomial) {
        let R6 { b, xa1, q2, q3, .. } = r6_pieces();
        let cubic = real_mul(&xa1, &x0_pow(&b, 3)).scale(&ratio(2, 3));
        let lin = real_mul(&xa1, &x0_pow(&b, 1)).scale(&int(2));
        (&cubic - &real_mul(&lin, &q3), &cubic - &real_mul(&lin, &q2))
    }

    /// `dbar f = -8/3 x0^3 x1 e1 + 4 x0 x1 e1 (q2 + q3)`.
    pub fn p122_dbar() -> Polynomial {
        let R6 { b, xa1, q2, q3, .. } = r6_pieces();
        &real_mul(&xa1, &x0_pow(&b, 3)).scale(&ratio(-8, 3))
            + &real_mul(&real_mul(&xa1, &x0_pow(&b, 1)), &(&q2 + &q3)).scale(&int(4))
    }

    /// `32 x0 x1 e1`.
    pub fn p122_dbar_laplacian() -> Polynomial {
        let R6 { b, xa1, .. } = r6_pieces();
        real_mul(&xa1, &x0_pow(&b, 1)).scale(&int(32))
    }

    fn r6_g(xa_other: &Polynomial, q_other: &Polynomial) -> Polynomial {
        let R6 { b, xa1, .. } = r6_pieces();
        let x = |e| x0_pow(&b, e);
        let inner = &xa_other.left_mul_imaginary(&[1]).scale(&int(2)) + q_other;
        sum(
            &b,
            &[
                x(3).scale(&ratio(-4, 3)),
                real_mul(&xa1, &x(2)).scale(&int(-4)),
                real_mul(&inner, &x(1)).scale(&int(4)),
                real_mul(&xa1, q_other).scale(&int(4)),
            ],
        )
    }

    /// `g2 = -delta2^2 f` and `g3 = -delta2^5 f` of [`p122`].
    pub fn p122_g() -> (Polynomial, Polynomial) {
        let R6 { xa2, xa3, q2, q3, .. } = r6_pieces();
        (r6_g(&xa3, &q3), r6_g(&xa2, &q2))
    }

    /// `16 (x0 + x1 e1)`.
    pub fn p122_g_laplacian() -> Polynomial {
        let R6 { b, xa1, .. } = r6_pieces();
        (&x0_pow(&b, 1) + &xa1).scale(&int(16))
    }

    /// `-12 (3 x0^2 - |Im x|^2 + 2 x0 Im x)` on `clifford(4)`.
    pub fn r5_laplacian_x4() -> Polynomial {
        let b = HypercomplexBasis::standard(&AlgebraSpec::clifford(4).expect("supported"));
        let all = [1, 2, 3, 4];
        let q = Polynomial::norm_sq(&b, &all);
        let im = Polynomial::imaginary(&b, &all);
        sum(&b, &[x0_pow(&b, 2).scale(&int(3)), q.neg(), im.mul_var(0).scale(&int(2))]).scale(&int(-12))
    }

    /// `-12 (3 x0 + Im x)` on the octonions.
    pub fn octonion_laplacian_x3() -> Polynomial {
        let b = octonion_basis();
        let im = Polynomial::imaginary(&b, &[1, 2, 3, 4, 5, 6, 7]);
        (&x0_pow(&b, 1).scale(&int(3)) + &im).scale(&int(-12))
    }

    /// The two Laplacian components of `P_(2,1,2)` for blocks `{1,2,3}` and
    /// `{5,6,7}`, with `x = x' + l x''`.
    pub fn octonion_t() -> (Polynomial, Polynomial) {
        let b = octonion_basis();
        let x = |e| x0_pow(&b, e);
        let x4 = Polynomial::variable(&b, 4);
        // Im x' = x1 i + x2 j + x3 k, Im x'' = x5 i + x6 j + x7 k
        let im1 = Polynomial::imaginary(&b, &[1, 2, 3]);
        let im2 = sum(&b, &[5usize, 6, 7].map(|i| Polynomial::variable(&b, i).left_mul_unit(i - 4)));
        let n1 = Polynomial::norm_sq(&b, &[1, 2, 3]);
        let n2 = Polynomial::norm_sq(&b, &[5, 6, 7]);
        let l = |f: &Polynomial| f.left_mul_unit(4);
        let t1 = sum(
            &b,
            &[
                x(3).scale(&ratio(-4, 3)),
                real_mul(&(&n2 - &real_mul(&im2, &x4).scale(&int(2))), &x(1)).scale(&int(4)),
                l(&real_mul(&x4, &(&n2 - &x(2))).scale(&int(4))),
            ],
        );
        let t3 = sum(
            &b,
            &[
                x(3).scale(&ratio(-4, 3)),
                real_mul(&n1, &x(1)).scale(&int(4)),
                l(&real_mul(&sum(&b, &[n1, real_mul(&im1, &x(1)).scale(&int(2)), x(2).neg()]), &x4).scale(&int(4))),
            ],
        );
        (t1, t3)
    }

    /// `32 (x0 + x4 l)`.
    pub fn octonion_t_laplacian() -> Polynomial {
        let b = octonion_basis();
        (&x0_pow(&b, 1) + &Polynomial::imaginary(&b, &[4])).scale(&int(32))
    }

    /// The counting table: `n`, `p(n)`, `q(n)`, `B_n` as tabulated.
    pub const COUNT_TABLE: [(usize, u128, u128, u128); 6] =
        [(1, 1, 1, 1), (2, 2, 1, 2), (3, 3, 2, 5), (4, 5, 3, 15), (5, 7, 4, 52), (7, 15, 5, 877)];

    pub(crate) fn real(b: &Arc<HypercomplexBasis>, r: i64) -> Polynomial {
        real_const(b, int(r))
    }
}

use reference::*;

/// One pass/fail line.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: usize,
    /// Failed identities, each naming the first offending term.
    pub failures: Vec<String>,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {verdict}: {} ({} checks)", self.id, self.title, self.checks)?;
        for failure in self.failures.iter().take(3) {
            write!(f, "; {failure}")?;
        }
        if self.failures.len() > 3 {
            write!(f, "; and {} more", self.failures.len() - 3)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Random cases per property suite.
    pub property_cases: usize,
    /// Random members per partition shape in the Fueter checks.
    pub fueter_members: usize,
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { property_cases: 200, fueter_members: 20, max_degree: 5, seed: 0x5eed }
    }
}

struct Checker {
    checks: usize,
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(String::from(name));
        }
    }

    fn eq(&mut self, name: &str, lhs: &Polynomial, rhs: &Polynomial) {
        self.checks += 1;
        if lhs != rhs {
            let t = (lhs - rhs).leading_term_text().unwrap_or_default();
            self.failures.push(format!("{name} differs at {t}"));
        }
    }

    fn zero(&mut self, name: &str, f: &Polynomial) {
        self.eq(name, f, &Polynomial::zero(f.basis()));
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }

    fn report(self, id: u8, title: &'static str) -> CriterionReport {
        CriterionReport { id, title, passed: self.failures.is_empty(), checks: self.checks, failures: self.failures }
    }
}

fn ctx(b: &Arc<HypercomplexBasis>, p: SetPartition) -> OperatorContext {
    OperatorContext::canonical(b, p).expect("partition matches basis")
}

/// Element `x_A1 x_A2^2 x_A3^2` extended to `F_P`.
pub fn p122_by_extension() -> Result<Polynomial, crate::spaces::SpaceError> {
    let c = ctx(&r6_basis(), r6_partition());
    let one = crate::algebra::AlgebraElement::one(c.basis().spec());
    ck_extension(&c, &ordered_imaginary_power(&c, &[1, 2, 2], &one)?)
}

pub fn criterion_1() -> CriterionReport {
    let mut ch = Checker::new();
    match p122_by_extension() {
        Ok(f) => {
            ch.eq("CK extension vs explicit polynomial", &f, &p122());
            ch.check("term count", f.len() == p122().len());
        }
        Err(e) => ch.fail(format!("CK extension failed: {e}")),
    }
    ch.report(1, "P_(1,2,2) by CK extension in clifford(6)")
}

pub fn criterion_2() -> CriterionReport {
    let mut ch = Checker::new();
    let c = ctx(&r6_basis(), r6_partition());
    let f = p122();
    ch.check("f in F_P", is_member_fp(&c, &f));
    let (d2, d3) = p122_spherical_derivatives();
    match (c.spherical_derivative(&f, 1), c.spherical_derivative(&f, 2)) {
        (Ok(a), Ok(b)) => {
            ch.eq("f'_(s,A2)", &a, &d2);
            ch.eq("f'_(s,A3)", &b, &d3);
        }
        (Err(e), _) | (_, Err(e)) => ch.fail(format!("spherical derivative: {e}")),
    }
    let dbar = cauchy_riemann(&f);
    ch.eq("dbar f = -2 f'_A2 - 2 f'_A3", &dbar, &(&d2 + &d3).scale(&int(-2)));
    ch.eq("dbar f", &dbar, &p122_dbar());
    ch.eq("Delta dbar f", &laplacian(&dbar), &p122_dbar_laplacian());
    let (g2, g3) = p122_g();
    ch.eq("g2 = -delta2^2 f", &delta2(&f, 2).neg(), &g2);
    ch.eq("g3 = -delta2^5 f", &delta2(&f, 5).neg(), &g3);
    match laplacian_decomposition(&c, &f) {
        Ok(parts) => {
            let blocks: Vec<usize> = parts.iter().map(|(j, _)| *j).collect();
            ch.check("decomposition blocks", blocks == [1, 2]);
            if parts.len() == 2 {
                ch.eq("tau_2 f", &parts[0].1, &g2);
                ch.eq("tau_3 f", &parts[1].1, &g3);
            }
        }
        Err(e) => ch.fail(format!("Laplacian decomposition: {e}")),
    }
    let lap = laplacian(&f);
    ch.eq("Delta f = g2 + g3", &lap, &(&g2 + &g3));
    ch.eq("Delta g2", &laplacian(&g2), &p122_g_laplacian());
    ch.eq("Delta g3", &laplacian(&g3), &p122_g_laplacian());
    ch.eq("Delta g2 = -delta2^5 g2", &delta2(&g2, 5).neg(), &p122_g_laplacian());
    ch.eq("Delta g3 = -delta2^2 g3", &delta2(&g3, 2).neg(), &p122_g_laplacian());
    let lap2 = laplacian(&lap);
    ch.eq("Delta^2 f", &lap2, &p122_g_laplacian().scale(&int(2)));
    ch.zero("dbar Delta^2 f", &cauchy_riemann(&lap2));
    ch.report(2, "Fueter chain of P_(1,2,2)")
}

pub fn criterion_3() -> CriterionReport {
    let mut ch = Checker::new();
    let b = HypercomplexBasis::standard(&AlgebraSpec::clifford(4).expect("supported"));
    let x4 = Polynomial::power_of_x(&b, 4);
    let lap = laplacian(&x4);
    ch.eq("Delta x^4", &lap, &r5_laplacian_x4());
    let p = SetPartition::new(4, vec![vec![1], vec![2], vec![3, 4]]).expect("valid");
    let c = ctx(&b, p);
    ch.zero("Dunkl Laplacian of Delta x^4", &c.dunkl_laplacian(&lap));
    ch.zero("D_P D^c_P Delta x^4", &c.dunkl_laplacian_composed(&lap));
    ch.eq("Delta^2 x^4", &laplacian(&lap), &real(&b, 24));
    ch.report(3, "Delta x^4 on R^5 in clifford(4)")
}

pub fn criterion_4() -> CriterionReport {
    let mut ch = Checker::new();
    let b = octonion_basis();
    let lap = laplacian(&Polynomial::power_of_x(&b, 3));
    ch.eq("Delta_8 x^3", &lap, &octonion_laplacian_x3());
    let p = SetPartition::new(7, vec![vec![1], vec![2], vec![3, 4, 5, 6, 7]]).expect("valid");
    let c = ctx(&b, p);
    let expected_k: Vec<Rational> = (1..=7).map(|i| if i >= 4 { ratio(-1, 2) } else { ratio(0, 1) }).collect();
    ch.check("k = -1/2 on 4..7", c.multiplicities().values() == &expected_k[..]);
    ch.zero("D_P Delta_8 x^3", &c.dunkl_cr(&lap));
    ch.check("Delta_8 x^3 in F_P", is_member_fp(&c, &lap));

    let c = ctx(&b, octonion_partition());
    let one = crate::algebra::AlgebraElement::one(b.spec());
    match basis_polynomial(&c, &[2, 1, 2], &one) {
        Ok(f) => {
            ch.check("P_(2,1,2) in F_P", is_member_fp(&c, &f));
            let (t1, t3) = octonion_t();
            match (tau(&c, &f, 0, None), tau(&c, &f, 1, None), tau(&c, &f, 2, None)) {
                (Ok(a), Ok(z), Ok(d)) => {
                    ch.eq("T1 f", &a, &t1);
                    ch.zero("T2 f", &z);
                    ch.eq("T3 f", &d, &t3);
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => ch.fail(format!("tau: {e}")),
            }
            ch.eq("T1 f = -delta2^1 f", &delta2(&f, 1).neg(), &t1);
            ch.eq("T3 f = -delta2^5 f", &delta2(&f, 5).neg(), &t3);
            let lap = laplacian(&f);
            ch.eq("Delta f = T1 f + T3 f", &lap, &(&t1 + &t3));
            ch.eq("Delta^2 f", &laplacian(&lap), &octonion_t_laplacian());
        }
        Err(e) => ch.fail(format!("P_(2,1,2): {e}")),
    }
    ch.report(4, "octonion Delta x^3 and P_(2,1,2)")
}

pub fn criterion_5() -> CriterionReport {
    let mut ch = Checker::new();
    for (n, p, q, b) in COUNT_TABLE {
        let got = (partition_count(n), odd_partition_count(n), bell(n));
        if got != (p, q, b) {
            ch.fail(format!("n = {n}: computed (p, q, B) = {got:?}, tabulated ({p}, {q}, {b})"));
        } else {
            ch.check("", true);
        }
        // enumeration oracle for q(n) and B_n
        ch.check("q(n) by enumeration", odd_integer_partitions(n).len() as u128 == got.1);
        ch.check("B_n by enumeration", enumerate_set_partitions(n).len() as u128 == got.2);
    }
    ch.check("count_fueter_trees(7) = 4", count_fueter_trees(7) == 4);
    ch.check("count_fueter_trees(3) = 1", count_fueter_trees(3) == 1);
    ch.report(5, "counting table and Fueter tree counts")
}

pub fn criterion_6() -> CriterionReport {
    let mut ch = Checker::new();
    let b = HypercomplexBasis::standard(&AlgebraSpec::clifford(3).expect("supported"));
    for p in ["{1,2,3}", "{1}|{2,3}", "{1}|{2}|{3}"] {
        let part = SetPartition::parse(p, Some(3)).expect("valid");
        let c = ctx(&b, part.clone());
        for d in 0..=3 {
            match homogeneous_fp_basis(&c, d) {
                Ok(basis) => {
                    let expect = expected_dimension(part.len(), d, 8);
                    if basis.len() as u128 != expect {
                        ch.fail(format!("{p}, d = {d}: {} members, expected {expect}", basis.len()));
                    } else {
                        ch.check("", true);
                    }
                }
                Err(e) => ch.fail(format!("{p}, d = {d}: {e}")),
            }
        }
    }
    ch.report(6, "dimension of homogeneous F_P over clifford(3)")
}

/// Random admissible multiplicities: nonnegative weights per block with at
/// most one zero.
pub fn random_admissible(p: &SetPartition, rng: &mut ChaCha8Rng) -> MultiplicitySeq {
    let mut values = vec![Rational::from_integer(0.into()); p.n()];
    for block in p.blocks() {
        let zero_at = if rng.gen_bool(0.5) { Some(rng.gen_range(0..block.len())) } else { None };
        let w: Vec<i64> = (0..block.len()).map(|t| if Some(t) == zero_at { 0 } else { rng.gen_range(1..4) }).collect();
        let total: i64 = w.iter().sum();
        let target = ratio(1 - block.len() as i64, 2);
        for (&i, &wi) in block.iter().zip(&w) {
            values[i - 1] = if total == 0 { target.clone() } else { &target * ratio(wi, total) };
        }
    }
    MultiplicitySeq::new(values)
}

fn property_bases() -> Vec<Arc<HypercomplexBasis>> {
    let cl = |n| HypercomplexBasis::standard(&AlgebraSpec::clifford(n).expect("supported"));
    vec![cl(2), cl(3), cl(4), cl(5), octonion_basis(), r6_basis()]
}

struct Case {
    basis: Arc<HypercomplexBasis>,
    partition: SetPartition,
    k: MultiplicitySeq,
    f: Polynomial,
}

fn random_case(bases: &[Arc<HypercomplexBasis>], rng: &mut ChaCha8Rng, max_degree: u32) -> Case {
    let basis = bases[rng.gen_range(0..bases.len())].clone();
    let all = enumerate_set_partitions(basis.n());
    let partition = all[rng.gen_range(0..all.len())].clone();
    let k = random_admissible(&partition, rng);
    let shape = RandomPolySpec { max_degree, max_terms: 4, use_x0: true };
    let f = Polynomial::random(&basis, shape, rng.gen());
    Case { basis, partition, k, f }
}

/// A `P`-slice polynomial that is usually not in `F_P`: a sum of
/// `x0^e [x_P^d, a]`.
fn random_p_slice(c: &OperatorContext, rng: &mut ChaCha8Rng, max_degree: u32) -> Polynomial {
    let spec = c.basis().spec();
    let mut out = Polynomial::zero(c.basis());
    for _ in 0..rng.gen_range(1..=3) {
        let total = rng.gen_range(0..=max_degree);
        let e0 = rng.gen_range(0..=total);
        let comps = compositions(total - e0, c.partition().len());
        let d = &comps[rng.gen_range(0..comps.len())];
        let a = spec.basis_element(rng.gen_range(0..spec.dim())).scale(&ratio(rng.gen_range(1..5), rng.gen_range(1..3)));
        let g = ordered_imaginary_power(c, d, &a).expect("lengths match");
        out = &out + &g.mul_monomial(&Monomial::one(c.basis().n() + 1).with_exponent(0, e0));
    }
    out
}

fn prop_commutation(ch: &mut Checker, case: &Case, rng: &mut ChaCha8Rng) {
    let n = case.basis.n();
    let units: Vec<usize> = (1..=n).collect();
    let k = random_admissible(&SetPartition::whole(n), rng);
    let f = &case.f;
    let sb = |g: &Polynomial| casimir_s(g, &units, &k);
    let d = |g: &Polynomial| dunkl_dirac(g, &k);
    let xm = |g: &Polynomial| g.left_mul_imaginary(&units);
    let gt = |g: &Polynomial| spherical_dunkl_dirac(g, &k);
    let r = |g: &Polynomial| g.reflect_all();
    ch.zero("{S, D}", &(&sb(&d(f)) + &d(&sb(f))));
    ch.zero("{S, x}", &(&sb(&xm(f)) + &xm(&sb(f))));
    ch.eq("[Gamma~, D]", &gt(&d(f)), &d(&gt(f)));
    ch.eq("[Gamma~, x]", &gt(&xm(f)), &xm(&gt(f)));
    ch.zero("{D, r}", &(&d(&r(f)) + &r(&d(f))));
    ch.zero("{x, r}", &(&xm(&r(f)) + &r(&xm(f))));
    ch.eq("[E, r]", &r(&f.euler(&units)), &r(f).euler(&units));
    ch.eq("[S, r]", &sb(&r(f)), &r(&sb(f)));
}

fn prop_laplacians(ch: &mut Checker, case: &Case) {
    let f = &case.f;
    let lap = laplacian(f);
    ch.eq("Delta = d dbar", &lap, &conj_cauchy_riemann(&cauchy_riemann(f)));
    ch.eq("Delta = dbar d", &lap, &cauchy_riemann(&conj_cauchy_riemann(f)));
    let c = OperatorContext::new(&case.basis, case.partition.clone(), case.k.clone()).expect("admissible");
    let dl = c.dunkl_laplacian(f);
    ch.eq("Delta_D = D_P D^c_P", &dl, &c.dunkl_cr(&c.conj_dunkl_cr(f)));
    ch.eq("Delta_D = D^c_P D_P", &dl, &c.conj_dunkl_cr(&c.dunkl_cr(f)));
    ch.eq("D_P reflection form", &c.dunkl_cr(f), &c.dunkl_cr_reflection(f));
}

fn prop_deltas(ch: &mut Checker, case: &Case, rng: &mut ChaCha8Rng) {
    let f = &case.f;
    let i = rng.gen_range(1..=case.basis.n());
    ch.eq("xi delta2 = delta1 - 2 di", &delta2(f, i).mul_var(i), &(&delta1(f, i) - &f.derivative(i).scale(&int(2))));
    let comm = &delta2(f, i).derivative(i) - &delta2(&f.derivative(i), i);
    ch.zero("delta2 delta1 + [di, delta2]", &(&delta2(&delta1(f, i), i) + &comm));
}

fn prop_global(ch: &mut Checker, case: &Case) {
    let units: Vec<usize> = (1..=case.basis.n()).collect();
    let zero = MultiplicitySeq::zeros(case.basis.n());
    let f = &case.f;
    let lhs = &(&dirac_set(f, &units, &zero).left_mul_imaginary(&units) + &f.euler(&units)) + &spherical_dirac(f);
    ch.zero("x (sum vi di f) + E f + Gamma f", &lhs);
}

fn prop_slice_identities(ch: &mut Checker, c: &OperatorContext, rng: &mut ChaCha8Rng, max_degree: u32) {
    let f = random_p_slice(c, rng, max_degree);
    let blocks = c.partition().blocks();
    let mut dp = cauchy_riemann(&f);
    let mut dunkl_lap = laplacian(&f);
    for (j, block) in blocks.iter().enumerate() {
        match c.spherical_derivative(&f, j) {
            Ok(d) => dp = &dp + &d.scale(&int(block.len() as i64 - 1)),
            Err(e) => {
                ch.fail(format!("spherical derivative of a P-slice input: {e}"));
                return;
            }
        }
        let alpha = block[rng.gen_range(0..block.len())];
        dunkl_lap = &dunkl_lap + &delta2(&f, alpha).scale(&ratio(block.len() as i64 - 1, 2));
    }
    ch.eq("D_P f on P-slice f", &c.dunkl_cr(&f), &dp);
    ch.eq("Delta_D f on P-slice f", &c.dunkl_laplacian(&f), &dunkl_lap);

    let seed = rng.gen();
    let g = random_fp_element(c, rng.gen_range(0..=max_degree), seed);
    let mut dm = Polynomial::zero(c.basis());
    for (j, block) in blocks.iter().enumerate() {
        if let Ok(d) = c.spherical_derivative(&g, j) {
            dm = &dm + &d.scale(&int(1 - block.len() as i64));
        } else {
            ch.fail(String::from("spherical derivative of an F_P element"));
        }
    }
    ch.eq("dbar f on F_P", &cauchy_riemann(&g), &dm);
}

fn prop_ck(ch: &mut Checker, c: &OperatorContext, rng: &mut ChaCha8Rng, max_degree: u32) {
    let f = random_fp_element(c, rng.gen_range(0..=max_degree), rng.gen());
    let g = f.restrict_x0();
    match ck_extension(c, &g) {
        Ok(h) => ch.eq("CK[f at x0 = 0] = f", &h, &f),
        Err(e) => ch.fail(format!("CK extension: {e}")),
    }
    ch.check("f in F_P", is_member_fp(c, &f));
    // Taylor: f = sum x0^k / k! (-1)^k D_P^k g
    let mut taylor = Polynomial::zero(c.basis());
    let mut dk = g.clone();
    let mut d0k = f.clone();
    for k in 0..=f.degree() {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let term = dk.scale(&(sign / factorial(k)));
        ch.eq("d0^k f at x0 = 0", &d0k.restrict_x0(), &term.scale(&factorial(k)));
        taylor = &taylor + &term.mul_monomial(&Monomial::one(c.basis().n() + 1).with_exponent(0, k));
        dk = c.dirac(&dk);
        d0k = d0k.derivative(0);
    }
    ch.eq("Taylor expansion", &taylor, &f);
    ch.check("CK injective", !g.is_zero() || f.is_zero());
}

fn prop_appell_and_powers(ch: &mut Checker, c: &OperatorContext, rng: &mut ChaCha8Rng, max_degree: u32) {
    let l = c.partition().len();
    let j = rng.gen_range(0..l);
    let m = rng.gen_range(0..=max_degree);
    let one = crate::algebra::AlgebraElement::one(c.basis().spec());
    let unit = |e: u32| {
        let mut d = vec![0u32; l];
        d[j] = e;
        basis_polynomial(c, &d, &one).expect("lengths match")
    };
    let pm = unit(m);
    let expect = if m == 0 { Polynomial::zero(c.basis()) } else { unit(m - 1).scale(&int(m as i64)) };
    ch.eq("Appell", &c.conj_dunkl_cr(&pm).scale(&ratio(1, 2)), &expect);
    let block = c.partition().blocks()[j].clone();
    let mut lit = Polynomial::one(c.basis());
    for _ in 0..m {
        lit = &lit.mul_var(0) + &lit.left_mul_imaginary(&block);
    }
    ch.eq("P_(m e_j) = (x0 + x_A)^m", &pm, &lit);
    let k = rng.gen_range(0..=m);
    let paravector_power = |e: u32| {
        let mut acc = Polynomial::one(c.basis());
        for _ in 0..e {
            acc = &acc.mul_var(0) + &acc.left_mul_imaginary(&block);
        }
        acc
    };
    let sign = if k % 2 == 0 { int(1) } else { int(-1) };
    let coeff = sign * factorial(m) / factorial(m - k);
    let pairs = [
        (Polynomial::pow_imaginary(c.basis(), &block, m), Polynomial::pow_imaginary(c.basis(), &block, m - k)),
        (lit, paravector_power(m - k)),
    ];
    for (base, lower) in pairs {
        let mut power = base;
        for _ in 0..k {
            power = dirac_set(&power, &block, c.multiplicities());
        }
        ch.eq("D_A^k x_A^m", &power, &lower.scale(&coeff));
    }
}

pub fn criterion_7(cfg: &VerifyConfig) -> CriterionReport {
    let mut ch = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bases = property_bases();
    let degree = cfg.max_degree.min(5);
    for _ in 0..cfg.property_cases {
        let case = random_case(&bases, &mut rng, degree);
        prop_commutation(&mut ch, &case, &mut rng);
        prop_laplacians(&mut ch, &case);
        prop_deltas(&mut ch, &case, &mut rng);
        prop_global(&mut ch, &case);
        let c = ctx(&case.basis, case.partition.clone());
        let c = if rng.gen_bool(0.5) { c.switched(MultiplicityMode::Uniform) } else { c };
        prop_slice_identities(&mut ch, &c, &mut rng, degree.min(4));
        prop_ck(&mut ch, &c, &mut rng, degree.min(4));
        prop_appell_and_powers(&mut ch, &c, &mut rng, degree);
    }
    ch.report(7, "randomized operator identities")
}

/// Basis used for the Fueter checks on `n` units.
pub fn fueter_basis(n: usize) -> Arc<HypercomplexBasis> {
    match n {
        3 => HypercomplexBasis::from_names(&AlgebraSpec::clifford(2).expect("supported"), &["1", "e1", "e2", "e12"])
            .expect("quaternions"),
        7 => octonion_basis(),
        _ => HypercomplexBasis::standard(&AlgebraSpec::clifford(n as u8).expect("supported")),
    }
}

pub fn criterion_8(cfg: &VerifyConfig) -> CriterionReport {
    let mut ch = Checker::new();
    let mut seed = cfg.seed;
    for n in [3usize, 5, 7] {
        let b = fueter_basis(n);
        for shape in odd_integer_partitions(n) {
            let p = SetPartition::from_sizes(&shape).expect("valid");
            let c = ctx(&b, p.clone());
            let tree = match FueterTree::build(&p, PairPolicy::default()) {
                Ok(t) => t,
                Err(e) => {
                    ch.fail(format!("tree for {p}: {e}"));
                    continue;
                }
            };
            ch.check("tree height", tree.height() == (n - p.len()) / 2);
            for m in 0..cfg.fueter_members {
                seed = seed.wrapping_add(1);
                let degree = 1 + (m as u32) % cfg.max_degree.max(1);
                let f = random_fp_element(&c, degree, seed);
                match verify_general_fueter(&c, &f) {
                    Ok(r) => {
                        ch.check(&format!("{p}: iterates P-slice"), r.first_non_slice.is_none());
                        ch.check(&format!("{p}: top iterate monogenic"), r.top_monogenic);
                        ch.check(&format!("{p}: top iterate P-slice"), is_p_slice(&c, &r.top));
                        ch.check(&format!("{p}: polyharmonic"), r.polyharmonic);
                    }
                    Err(e) => ch.fail(format!("{p}: {e}")),
                }
                if let Err(e) = tree.verify_edges(&c, &f) {
                    ch.fail(format!("{p}: tree edge: {e}"));
                } else {
                    ch.check("", true);
                }
            }
        }
    }
    ch.report(8, "general Fueter theorem on random members")
}

pub fn criterion_9() -> CriterionReport {
    let mut ch = Checker::new();
    let b = fueter_basis(3);
    let all = enumerate_set_partitions(3);
    for (a, p) in all.iter().enumerate() {
        for q in &all[a + 1..] {
            let (cp, cq) = (ctx(&b, p.clone()), ctx(&b, q.clone()));
            match separating_witness(&cp, &cq, 3) {
                Some((in_p, w)) => {
                    let (inside, outside) = if in_p { (&cp, &cq) } else { (&cq, &cp) };
                    ch.check(
                        &format!("witness for {p} vs {q}"),
                        is_member_fp(inside, &w) && !is_member_fp(outside, &w),
                    );
                }
                None => ch.fail(format!("no witness separating {p} and {q}")),
            }
        }
    }
    ch.report(9, "distinct partitions of [3] give distinct spaces")
}

pub fn criterion_10() -> CriterionReport {
    let mut ch = Checker::new();
    let b = HypercomplexBasis::standard(&AlgebraSpec::clifford(4).expect("supported"));
    let c = ctx(&b, SetPartition::whole(4));
    match even_case_descent(&c, &Polynomial::power_of_x(&b, 4)) {
        Ok(r) => {
            ch.check("target {1}|{2}|{3,4}", r.target.to_string() == "{1}|{2}|{3,4}");
            ch.check("Delta x^4 in F_{1}|{2}|{3,4}", r.in_target);
            ch.eq("image", &r.image, &r5_laplacian_x4());
        }
        Err(e) => ch.fail(format!("{e}")),
    }
    ch.report(10, "even-dimensional descent of x^4")
}

pub fn run(id: u8, cfg: &VerifyConfig) -> Option<CriterionReport> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => return None,
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionReport> {
    (1..=10).filter_map(|id| run(id, cfg)).collect()
}
