use fueter::{CliConfig, Operator, PolyInput};
use fueter_core::{AlgebraSpec, HypercomplexBasis, Polynomial};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = String> {
    (0i64..=9, 1i64..=4, prop::collection::vec(0u32..3, 4), 0usize..8).prop_map(|(n, d, exps, b)| {
        let names = ["", "e1", "e2", "e3", "e12", "e13", "e23", "e123"];
        let mut s = format!("{n}/{d}");
        for (i, e) in exps.iter().enumerate() {
            if *e > 0 {
                s.push_str(&format!("*x{i}^{e}"));
            }
        }
        if b > 0 {
            s.push('*');
            s.push_str(names[b]);
        }
        s
    })
}

fn ops() -> impl Strategy<Value = Operator> {
    prop::sample::select(vec![
        Operator::Id,
        Operator::Cr,
        Operator::CrConj,
        Operator::Laplacian,
        Operator::Dirac,
        Operator::DunklCr,
        Operator::DunklLaplacian,
        Operator::Gamma,
        Operator::GammaDunkl,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_output_parses_back(terms in prop::collection::vec(term(), 1..5), op in ops()) {
        let cfg = CliConfig { algebra: "clifford:3".into(), ..CliConfig::default() };
        let input = PolyInput { text: Some(terms.join(" - ")), power: None };
        let out = fueter::commands::cmd_ops(&cfg, op, &input, None, None).unwrap();
        let basis = HypercomplexBasis::standard(&AlgebraSpec::clifford(3).unwrap());
        let printed = out.stdout.trim();
        let parsed = Polynomial::parse(&basis, printed).unwrap();
        prop_assert_eq!(parsed.to_string(), printed);
    }
}
