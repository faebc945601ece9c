use super::*;
use crate::algebra::{AlgebraSpec, HypercomplexBasis};
use crate::partitions::enumerate_set_partitions;
use crate::poly::RandomPolySpec;
use crate::verify::reference;
use alloc::sync::Arc;
use proptest::prelude::*;

fn cl(n: u8) -> Arc<HypercomplexBasis> {
    HypercomplexBasis::standard(&AlgebraSpec::clifford(n).unwrap())
}

fn p(b: &Arc<HypercomplexBasis>, s: &str) -> Polynomial {
    Polynomial::parse(b, s).unwrap()
}

fn canonical(b: &Arc<HypercomplexBasis>, part: &str) -> OperatorContext {
    OperatorContext::canonical(b, SetPartition::parse(part, Some(b.n())).unwrap()).unwrap()
}

#[test]
fn slice_examples() {
    for b in [cl(3), HypercomplexBasis::standard(&AlgebraSpec::octonion())] {
        let n = b.n();
        let whole = OperatorContext::canonical(&b, SetPartition::whole(n)).unwrap();
        let singles = OperatorContext::canonical(&b, SetPartition::singletons(n)).unwrap();
        for m in 0..5 {
            assert!(is_p_slice(&whole, &Polynomial::power_of_x(&b, m)));
        }
        for seed in 0..5 {
            assert!(is_p_slice(&singles, &Polynomial::random(&b, RandomPolySpec::default(), seed)));
        }
        let f = p(&b, "x1").left_mul_unit(2);
        let w = p_slice_witness(&whole, &f).unwrap_err();
        assert_eq!(w.operator, 0);
        assert!(!w.image.is_zero());
        assert!(!is_p_slice(&whole, &f));
        assert_eq!(is_p_slice_strict(&whole, &f), Ok(false));
    }
}

#[test]
fn membership_examples() {
    let b = cl(4);
    let whole = OperatorContext::canonical(&b, SetPartition::whole(4)).unwrap();
    let a = b.spec().element_by_name("e13").unwrap();
    for j in 0..5 {
        assert!(is_member_fp(&whole, &Polynomial::power_of_x(&b, j).right_mul_const(&a)));
    }
    let xc = Polynomial::paravector_conj(&b);
    let m = membership(&whole, &xc);
    assert!(m.is_p_slice());
    assert!(!m.is_dunkl_monogenic());
    assert!(!m.in_fp());
    assert_eq!(m.dunkl_image, Polynomial::real_constant(&b, crate::rational::int(2)));

    let r6 = reference::r6_basis();
    let ctx = OperatorContext::canonical(&r6, reference::r6_partition()).unwrap();
    assert!(is_member_fp(&ctx, &reference::p122()));
    let singles = OperatorContext::canonical(&b, SetPartition::singletons(4)).unwrap();
    assert!(is_dunkl_monogenic(&singles, &p(&b, "x0 + x1*e1")));
}

#[test]
fn ck_examples() {
    let r6 = reference::r6_basis();
    let ctx = OperatorContext::canonical(&r6, reference::r6_partition()).unwrap();
    let one = Polynomial::one(&r6);
    assert_eq!(ck_extension(&ctx, &one).unwrap(), one);
    for block in ctx.partition().blocks() {
        let xa = Polynomial::imaginary(&r6, block);
        let expect = &p(&r6, "x0") + &xa;
        assert_eq!(ck_extension(&ctx, &xa).unwrap(), expect);
    }
    assert_eq!(crate::verify::p122_by_extension().unwrap(), reference::p122());

    assert_eq!(ck_extension(&ctx, &p(&r6, "x0")), Err(SpaceError::InputDependsOnX0));
    let b = cl(3);
    let whole = OperatorContext::canonical(&b, SetPartition::whole(3)).unwrap();
    assert!(matches!(
        ck_extension(&whole, &p(&b, "x1").left_mul_unit(2)),
        Err(SpaceError::InputNotPSlice(_))
    ));
}

#[test]
fn basis_polynomial_examples() {
    let o = reference::octonion_basis();
    let ctx = OperatorContext::canonical(&o, reference::octonion_partition()).unwrap();
    let one = crate::algebra::AlgebraElement::one(o.spec());
    let f = basis_polynomial(&ctx, &[2, 1, 2], &one).unwrap();
    assert!(is_member_fp(&ctx, &f));
    assert_eq!(f.degree(), 5);
    let a = o.spec().element_by_name("lj").unwrap();
    assert_eq!(basis_polynomial(&ctx, &[0, 0, 0], &a).unwrap(), Polynomial::constant(&o, &a));
    assert!(matches!(
        basis_polynomial(&ctx, &[1, 1], &a),
        Err(SpaceError::WrongExponentCount { expected: 3, found: 2 })
    ));
    for (j, block) in ctx.partition().blocks().iter().enumerate() {
        let mut d = [0u32; 3];
        d[j] = 3;
        let mut lit = Polynomial::one(&o);
        for _ in 0..3 {
            lit = &lit.mul_var(0) + &lit.left_mul_imaginary(block);
        }
        assert_eq!(basis_polynomial(&ctx, &d, &one).unwrap(), lit);
    }
}

#[test]
fn homogeneous_basis_r6_degree_two() {
    let r6 = reference::r6_basis();
    let ctx = OperatorContext::canonical(&r6, reference::r6_partition()).unwrap();
    let basis = homogeneous_fp_basis(&ctx, 2).unwrap();
    assert_eq!(basis.len(), 384);
    assert_eq!(expected_dimension(3, 2, 64), 384);
    let zero = homogeneous_fp_basis(&ctx, 0).unwrap();
    assert_eq!(zero.len(), 64);
    for (p_idx, f) in zero.iter().enumerate() {
        assert_eq!(*f, Polynomial::constant(&r6, &r6.spec().basis_element(p_idx)));
    }
}

#[test]
fn associative_right_module_structure() {
    let b = cl(3);
    let ctx = canonical(&b, "{1}|{2,3}");
    let spec = b.spec().clone();
    let one = crate::algebra::AlgebraElement::one(&spec);
    for d in compositions(3, 2) {
        let pd = basis_polynomial(&ctx, &d, &one).unwrap();
        for q in 0..spec.dim() {
            let v = spec.basis_element(q);
            assert_eq!(pd.right_mul_const(&v), basis_polynomial(&ctx, &d, &v).unwrap());
        }
    }
}

#[test]
fn slice_decompose_examples() {
    let b = cl(3);
    let set = [1, 2];
    let f = Polynomial::pow_imaginary(&b, &set, 2);
    let one = Polynomial::one(&b);
    let zero = Polynomial::zero(&b);
    assert_eq!(slice_decompose(&f, &set).unwrap(), vec![zero.clone(), zero.clone(), one.clone()]);
    assert_eq!(slice_decompose(&Polynomial::imaginary(&b, &set), &set).unwrap(), vec![zero.clone(), one]);
    assert!(matches!(
        slice_decompose(&p(&b, "x1").left_mul_unit(2), &set),
        Err(SpaceError::NotInKernelSA { .. })
    ));
    assert_eq!(slice_decompose(&p(&b, "x0"), &set), Err(SpaceError::InputDependsOnX0));
    // g_i may depend on the remaining variables
    let g = p(&b, "x3^2*e3 + 2");
    let f = &g.left_mul_imaginary_power(&set, 3) + &g.left_mul_imaginary_power(&set, 0);
    assert_eq!(slice_decompose(&f, &set).unwrap(), vec![g.clone(), zero.clone(), zero, g]);
}

#[test]
fn compositions_are_complete() {
    assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    assert_eq!(compositions(3, 1), vec![vec![3]]);
    for (d, l) in [(3u32, 3usize), (4, 2), (2, 5)] {
        assert_eq!(compositions(d, l).len() as u128, expected_dimension(l, d, 1));
    }
}

#[test]
fn random_members_are_members() {
    let o = reference::octonion_basis();
    let ctx = OperatorContext::canonical(&o, reference::octonion_partition()).unwrap();
    for seed in 0..6 {
        let f = random_fp_element(&ctx, 4, seed);
        assert!(is_member_fp(&ctx, &f));
        assert_eq!(f, random_fp_element(&ctx, 4, seed));
    }
    assert_ne!(random_fp_element(&ctx, 4, 1), random_fp_element(&ctx, 4, 2));
}

#[test]
fn distinct_partitions_of_four_have_distinct_spaces() {
    let b = cl(4);
    let all = enumerate_set_partitions(4);
    for (i, p1) in all.iter().enumerate() {
        for p2 in &all[i + 1..] {
            let c1 = OperatorContext::canonical(&b, p1.clone()).unwrap();
            let c2 = OperatorContext::canonical(&b, p2.clone()).unwrap();
            let (in_first, w) = separating_witness(&c1, &c2, 3).expect("spaces differ");
            let (inside, outside) = if in_first { (&c1, &c2) } else { (&c2, &c1) };
            assert!(is_member_fp(inside, &w) && !is_member_fp(outside, &w), "{p1} vs {p2}");
        }
    }
}

#[test]
fn membership_does_not_depend_on_multiplicities() {
    let b = cl(3);
    for part in enumerate_set_partitions(3) {
        let ctx = OperatorContext::canonical(&b, part).unwrap();
        let uniform = ctx.switched(MultiplicityMode::Uniform);
        for d in 0..=4 {
            for f in homogeneous_fp_basis_unchecked(&ctx, d) {
                assert!(is_member_fp(&uniform, &f));
                assert_eq!(is_p_slice_strict(&ctx, &f), Ok(true));
            }
        }
        for seed in 0..10 {
            let f = Polynomial::random(&b, RandomPolySpec::default(), seed);
            assert_eq!(is_member_fp(&ctx, &f), is_member_fp(&uniform, &f));
            assert!(is_p_slice_strict(&ctx, &f).is_ok());
        }
    }
}

fn arb_context() -> impl Strategy<Value = OperatorContext> {
    (0usize..3, any::<u64>()).prop_map(|(which, pick)| {
        let b = [cl(3), cl(4), reference::octonion_basis()][which].clone();
        let all = enumerate_set_partitions(b.n());
        let part = all[(pick % all.len() as u64) as usize].clone();
        OperatorContext::canonical(&b, part).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ck_round_trip(ctx in arb_context(), seed in any::<u64>(), d in 0u32..5) {
        let f = random_fp_element(&ctx, d, seed);
        let g = f.restrict_x0();
        let h = ck_extension(&ctx, &g).unwrap();
        prop_assert_eq!(h.restrict_x0(), g.clone());
        prop_assert!(ctx.dunkl_cr(&h).is_zero());
        prop_assert!(is_p_slice(&ctx, &h));
        prop_assert_eq!(h.degree(), g.degree());
        prop_assert_eq!(&h, &f);
    }

    #[test]
    fn spherical_split(ctx in arb_context(), seed in any::<u64>(), d in 0u32..5) {
        let f = random_fp_element(&ctx, d, seed);
        for j in 0..ctx.partition().len() {
            let block = ctx.partition().blocks()[j].clone();
            let value = ctx.spherical_value(&f, j).unwrap();
            let deriv = ctx.spherical_derivative(&f, j).unwrap();
            prop_assert_eq!(&value + &deriv.left_mul_imaginary(&block), f.clone());
        }
    }

    #[test]
    fn laplacians_keep_slice_property(ctx in arb_context(), seed in any::<u64>(), d in 0u32..5) {
        let f = random_fp_element(&ctx, d, seed);
        let dbar = crate::operators::cauchy_riemann(&f);
        let del = crate::operators::conj_cauchy_riemann(&f);
        prop_assert!(is_p_slice(&ctx, &dbar));
        prop_assert!(is_p_slice(&ctx, &del));
        prop_assert!(is_p_slice(&ctx, &crate::operators::laplacian(&f)));
    }

    #[test]
    fn slice_decomposition_of_restrictions(ctx in arb_context(), seed in any::<u64>(), d in 0u32..5) {
        let g = random_fp_element(&ctx, d, seed).restrict_x0();
        for block in ctx.partition().blocks() {
            let parts = slice_decompose(&g, block).unwrap();
            let mut rebuilt = Polynomial::zero(ctx.basis());
            for (i, gi) in parts.iter().enumerate() {
                prop_assert!(block.iter().all(|&v| !gi.depends_on(v)));
                rebuilt = &rebuilt + &gi.left_mul_imaginary_power(block, i as u32);
            }
            prop_assert_eq!(rebuilt, g.clone());
        }
    }

    #[test]
    fn slice_generated_polynomials(seed in any::<u64>(), alpha in 0u32..4, beta in 0u32..4) {
        let b = [cl(3), reference::octonion_basis()][(seed % 2) as usize].clone();
        let whole = OperatorContext::canonical(&b, SetPartition::whole(b.n())).unwrap();
        let k = whole.multiplicities().clone();
        let a = b.spec().basis_element((seed as usize / 2) % b.spec().dim());
        let mut f = Polynomial::one(&b);
        for _ in 0..beta {
            f = f.left_mul_x_conj();
        }
        for _ in 0..alpha {
            f = f.left_mul_x();
        }
        let f = f.right_mul_const(&a);
        let units: Vec<usize> = (1..=b.n()).collect();
        prop_assert!(crate::operators::casimir_s(&f, &units, &k).is_zero());
        prop_assert!(crate::operators::spherical_dunkl_dirac(&f, &k).is_zero());
        if beta == 0 {
            prop_assert!(whole.dunkl_cr(&f).is_zero());
        }
    }
}
