use fueter_core::verify::{self, CriterionReport, VerifyConfig};

fn check(report: CriterionReport) {
    println!("{report}");
    assert!(report.passed, "{report}");
}

fn config() -> VerifyConfig {
    VerifyConfig::default()
}

#[test]
fn criterion_01_p122_extension() {
    check(verify::criterion_1());
}

#[test]
fn criterion_02_r6_fueter_chain() {
    check(verify::criterion_2());
}

#[test]
fn criterion_03_clifford_laplacian_of_x4() {
    check(verify::criterion_3());
}

#[test]
fn criterion_04_octonion_examples() {
    check(verify::criterion_4());
}

#[test]
fn criterion_05_counting_table() {
    check(verify::criterion_5());
}

#[test]
fn criterion_06_dimension_formula() {
    check(verify::criterion_6());
}

#[test]
fn criterion_07_property_suites() {
    check(verify::criterion_7(&config()));
}

#[test]
fn criterion_08_general_fueter_theorem() {
    check(verify::criterion_8(&config()));
}

#[test]
fn criterion_09_space_distinctness() {
    check(verify::criterion_9());
}

#[test]
fn criterion_10_even_case() {
    check(verify::criterion_10());
}
