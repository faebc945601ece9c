use clap::ValueEnum;
use serde_json::{json, Map, Value};

use fueter_core::fueter::{self, FueterTree, PairPolicy};
use fueter_core::operators::{self, OperatorContext};
use fueter_core::spaces::{self, SLICE_OPERATORS};
use fueter_core::verify::{self, VerifyConfig};
use fueter_core::{partitions, Polynomial};

use crate::config::{CliConfig, Format};
use crate::dot;
use crate::error::CliError;

/// Printed output plus, for a failed verification, a one-line diagnostic.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, failure: None }
    }

    /// 0 when verified, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.failure.is_some())
    }
}

/// Operators reachable through `ops`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    /// Reprints the input in normal form.
    Id,
    /// `d0 + sum v_i d_i`.
    Cr,
    /// `d0 - sum v_i d_i`.
    CrConj,
    Laplacian,
    /// Dunkl Dirac operator `sum v_i T_i`.
    Dirac,
    /// `d0 + D`.
    DunklCr,
    DunklCrConj,
    DunklLaplacian,
    /// Spherical Dirac operator with zero multiplicities.
    Gamma,
    GammaDunkl,
    /// Dunkl operator `T_i`; needs `--index`.
    T,
    Delta1,
    Delta2,
    /// `S_A` of a block; needs `--block`.
    Casimir,
    STilde,
    SPrime,
    SDprime,
    SphericalValue,
    SphericalDerivative,
    /// Fueter step on a block of an odd partition.
    Tau,
    /// `f = sum_i x_A^i g_i` for `f` free of `x0`.
    SliceDecompose,
}

impl Operator {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

/// A polynomial given as text or as `x^m`.
#[derive(Clone, Debug, Default)]
pub struct PolyInput {
    pub text: Option<String>,
    pub power: Option<u32>,
}

impl PolyInput {
    fn resolve(&self, ctx: &OperatorContext) -> Result<Polynomial, CliError> {
        match (&self.text, self.power) {
            (Some(_), Some(_)) => Err(CliError::Usage("give a polynomial or --power, not both".into())),
            (Some(t), None) => Ok(Polynomial::parse(ctx.basis(), t)?),
            (None, Some(m)) => Ok(Polynomial::power_of_x(ctx.basis(), m)),
            (None, None) => Err(CliError::Usage("missing polynomial (or --power)".into())),
        }
    }
}

fn provenance(cfg: &CliConfig, ctx: &OperatorContext, command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("algebra".into(), json!(cfg.algebra));
    m.insert("basis".into(), json!(ctx.basis().describe()));
    m.insert("partition".into(), json!(ctx.partition().to_string()));
    m.insert("multiplicities".into(), json!(cfg.mode_name()));
    let k: Vec<String> = ctx.multiplicities().values().iter().map(|v| v.to_string()).collect();
    m.insert("k".into(), json!(k));
    m
}

fn line(record: Map<String, Value>) -> String {
    let mut s = Value::Object(record).to_string();
    s.push('\n');
    s
}

fn no_dot(cfg: &CliConfig, command: &str) -> Result<(), CliError> {
    if cfg.format == Format::Dot {
        return Err(CliError::Usage(format!("--format dot is only available for `tree`, not `{command}`")));
    }
    Ok(())
}

fn variable(ctx: &OperatorContext, index: Option<usize>, op: Operator) -> Result<usize, CliError> {
    let n = ctx.basis().n();
    match index {
        Some(i) if (1..=n).contains(&i) => Ok(i),
        Some(i) => Err(CliError::Usage(format!("--index {i} is outside 1..={n}"))),
        None => Err(CliError::Usage(format!("`{}` needs --index", op.name()))),
    }
}

/// 1-based on the command line, 0-based in the library.
fn block(ctx: &OperatorContext, block: Option<usize>, op: Operator) -> Result<usize, CliError> {
    let len = ctx.partition().len();
    match block {
        Some(j) if (1..=len).contains(&j) => Ok(j - 1),
        Some(j) => Err(CliError::Usage(format!("--block {j} is outside 1..={len}"))),
        None => Err(CliError::Usage(format!("`{}` needs --block", op.name()))),
    }
}

pub fn cmd_ops(
    cfg: &CliConfig,
    op: Operator,
    input: &PolyInput,
    index: Option<usize>,
    block_arg: Option<usize>,
) -> Result<Outcome, CliError> {
    no_dot(cfg, "ops")?;
    let ctx = cfg.context()?;
    let f = input.resolve(&ctx)?;
    let k = ctx.multiplicities();
    let single = |p: Polynomial| vec![p];
    let results = match op {
        Operator::Id => single(f.clone()),
        Operator::Cr => single(operators::cauchy_riemann(&f)),
        Operator::CrConj => single(operators::conj_cauchy_riemann(&f)),
        Operator::Laplacian => single(operators::laplacian(&f)),
        Operator::Dirac => single(ctx.dirac(&f)),
        Operator::DunklCr => single(ctx.dunkl_cr(&f)),
        Operator::DunklCrConj => single(ctx.conj_dunkl_cr(&f)),
        Operator::DunklLaplacian => single(ctx.dunkl_laplacian(&f)),
        Operator::Gamma => single(operators::spherical_dirac(&f)),
        Operator::GammaDunkl => single(operators::spherical_dunkl_dirac(&f, k)),
        Operator::T => {
            let i = variable(&ctx, index, op)?;
            single(operators::dunkl_t(&f, i, k.get(i)))
        }
        Operator::Delta1 => single(operators::delta1(&f, variable(&ctx, index, op)?)),
        Operator::Delta2 => single(operators::delta2(&f, variable(&ctx, index, op)?)),
        Operator::Casimir => single(ctx.casimir_s(&f, block(&ctx, block_arg, op)?)?),
        Operator::STilde => single(operators::s_tilde(&f, ctx.block(block(&ctx, block_arg, op)?)?, k)),
        Operator::SPrime => single(operators::s_prime(&f, ctx.block(block(&ctx, block_arg, op)?)?, k)),
        Operator::SDprime => single(operators::s_dprime(&f, ctx.block(block(&ctx, block_arg, op)?)?, k)),
        Operator::SphericalValue => single(ctx.spherical_value(&f, block(&ctx, block_arg, op)?)?),
        Operator::SphericalDerivative => single(ctx.spherical_derivative(&f, block(&ctx, block_arg, op)?)?),
        Operator::Tau => single(fueter::tau(&ctx, &f, block(&ctx, block_arg, op)?, None)?),
        Operator::SliceDecompose => spaces::slice_decompose(&f, ctx.block(block(&ctx, block_arg, op)?)?)?,
    };
    let stdout = match cfg.format {
        Format::Jsonl => {
            let mut m = provenance(cfg, &ctx, "ops");
            m.insert("operator".into(), json!(op.name()));
            m.insert("input".into(), json!(f.to_string()));
            if let Some(i) = index {
                m.insert("index".into(), json!(i));
            }
            if let Some(j) = block_arg {
                m.insert("block".into(), json!(j));
            }
            if op == Operator::SliceDecompose {
                let parts: Vec<String> = results.iter().map(|p| p.to_string()).collect();
                m.insert("result".into(), json!(parts));
            } else {
                m.insert("result".into(), json!(results[0].to_string()));
            }
            line(m)
        }
        _ if op == Operator::SliceDecompose => {
            results.iter().enumerate().map(|(i, p)| format!("g{i} = {p}\n")).collect()
        }
        _ => format!("{}\n", results[0]),
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_ck(cfg: &CliConfig, input: &PolyInput) -> Result<Outcome, CliError> {
    no_dot(cfg, "ck")?;
    let ctx = cfg.context()?;
    let g = input.resolve(&ctx)?;
    let f = spaces::ck_extension(&ctx, &g)?;
    let stdout = match cfg.format {
        Format::Jsonl => {
            let mut m = provenance(cfg, &ctx, "ck");
            m.insert("input".into(), json!(g.to_string()));
            m.insert("result".into(), json!(f.to_string()));
            line(m)
        }
        _ => format!("{f}\n"),
    };
    Ok(Outcome::ok(stdout))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_member(cfg: &CliConfig, input: &PolyInput) -> Result<Outcome, CliError> {
    no_dot(cfg, "member")?;
    let ctx = cfg.context()?;
    let f = input.resolve(&ctx)?;
    let m = spaces::membership(&ctx, &f);
    let failure = if let Some(w) = &m.slice_witness {
        Some(format!(
            "not P-slice: {} on block {} leaves {}",
            SLICE_OPERATORS[w.operator],
            w.block + 1,
            w.image.leading_term_text().unwrap_or_default()
        ))
    } else if !m.is_dunkl_monogenic() {
        Some(format!(
            "not Dunkl-monogenic: (d0 + D) f leaves {}",
            m.dunkl_image.leading_term_text().unwrap_or_default()
        ))
    } else {
        None
    };
    let stdout = match cfg.format {
        Format::Jsonl => {
            let mut r = provenance(cfg, &ctx, "member");
            r.insert("input".into(), json!(f.to_string()));
            r.insert("p_slice".into(), json!(m.is_p_slice()));
            r.insert("dunkl_monogenic".into(), json!(m.is_dunkl_monogenic()));
            r.insert("in_fp".into(), json!(m.in_fp()));
            line(r)
        }
        _ => format!(
            "P-slice: {}\nDunkl-monogenic: {}\nin F_P: {}\n",
            yes_no(m.is_p_slice()),
            yes_no(m.is_dunkl_monogenic()),
            yes_no(m.in_fp())
        ),
    };
    Ok(Outcome { stdout, failure })
}

pub fn cmd_basis(cfg: &CliConfig, degree: u32) -> Result<Outcome, CliError> {
    no_dot(cfg, "basis")?;
    let ctx = cfg.context()?;
    let basis = spaces::homogeneous_fp_basis(&ctx, degree)?;
    let mut stdout = String::new();
    for (i, p) in basis.iter().enumerate() {
        match cfg.format {
            Format::Jsonl => {
                let mut m = provenance(cfg, &ctx, "basis");
                m.insert("degree".into(), json!(degree));
                m.insert("index".into(), json!(i));
                m.insert("result".into(), json!(p.to_string()));
                stdout.push_str(&line(m));
            }
            _ => {
                stdout.push_str(&p.to_string());
                stdout.push('\n');
            }
        }
    }
    Ok(Outcome::ok(stdout))
}

pub fn cmd_tree(cfg: &CliConfig, policy: PairPolicy, split_leaves: bool) -> Result<Outcome, CliError> {
    let n = cfg.basis()?.n();
    let root = cfg.partition(n)?;
    let tree = FueterTree::build_with(&root, policy, !split_leaves)?;
    let stdout = match cfg.format {
        Format::Dot => dot::export_dot(&tree),
        Format::Jsonl => {
            let mut out = String::new();
            let mut head = Map::new();
            head.insert("command".into(), json!("tree"));
            head.insert("algebra".into(), json!(cfg.algebra));
            head.insert("partition".into(), json!(root.to_string()));
            head.insert("height".into(), json!(tree.height()));
            head.insert("root_weight".into(), json!(tree.root_weight().to_string()));
            head.insert("merged_leaves".into(), json!(tree.merges_leaves()));
            out.push_str(&line(head));
            for (i, node) in tree.nodes().iter().enumerate() {
                let mut m = Map::new();
                m.insert("node".into(), json!(i));
                m.insert("depth".into(), json!(node.depth));
                m.insert("partition".into(), json!(node.partition.to_string()));
                m.insert("label".into(), json!(dot::node_label(&node.partition)));
                out.push_str(&line(m));
            }
            for e in tree.edges() {
                let mut m = Map::new();
                m.insert("edge".into(), json!([e.parent, e.child]));
                m.insert("block".into(), json!(e.block + 1));
                m.insert("pair".into(), json!([e.pair.0, e.pair.1]));
                m.insert("alpha".into(), json!(e.alpha));
                m.insert("label".into(), json!(dot::edge_label(e)));
                out.push_str(&line(m));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "height {}, root weight {}, {} nodes\n",
                tree.height(),
                tree.root_weight(),
                tree.nodes().len()
            );
            for (i, node) in tree.nodes().iter().enumerate() {
                out.push_str(&format!("node {i} depth {}: {}\n", node.depth, dot::node_label(&node.partition)));
            }
            for e in tree.edges() {
                out.push_str(&format!(
                    "edge {} -> {}: {}, pair ({},{})\n",
                    e.parent,
                    e.child,
                    dot::edge_label(e),
                    e.pair.0,
                    e.pair.1
                ));
            }
            out
        }
    };
    Ok(Outcome::ok(stdout))
}

pub fn cmd_count(cfg: &CliConfig, n: usize) -> Result<Outcome, CliError> {
    no_dot(cfg, "count")?;
    let stdout = match cfg.format {
        Format::Jsonl => {
            let mut m = Map::new();
            m.insert("command".into(), json!("count"));
            m.insert("n".into(), json!(n));
            // u128 is not a JSON number; the counts are exact decimal strings.
            m.insert("partitions".into(), json!(partitions::partition_count(n).to_string()));
            m.insert("odd_partitions".into(), json!(partitions::odd_partition_count(n).to_string()));
            m.insert("bell".into(), json!(partitions::bell(n).to_string()));
            m.insert("fueter_trees".into(), json!(fueter::count_fueter_trees(n).to_string()));
            line(m)
        }
        _ => format!("{}\n", partitions::count_row(n)),
    };
    Ok(Outcome::ok(stdout))
}

/// `suite` is `all` or a list of criterion numbers.
pub fn cmd_verify(cfg: &CliConfig, suite: &[String], vcfg: &VerifyConfig) -> Result<Outcome, CliError> {
    no_dot(cfg, "verify")?;
    let mut ids = Vec::new();
    for s in suite {
        if s == "all" {
            ids.extend(1..=10u8);
            continue;
        }
        match s.parse::<u8>() {
            Ok(id) if (1..=10).contains(&id) => ids.push(id),
            _ => return Err(CliError::Usage(format!("unknown suite `{s}`; use `all` or 1..10"))),
        }
    }
    if ids.is_empty() {
        ids.extend(1..=10u8);
    }
    let mut stdout = String::new();
    let mut failure = None;
    for id in ids {
        let report = verify::run(id, vcfg).expect("id in range");
        match cfg.format {
            Format::Jsonl => {
                let mut m = Map::new();
                m.insert("command".into(), json!("verify"));
                m.insert("criterion".into(), json!(report.id));
                m.insert("title".into(), json!(report.title));
                m.insert("passed".into(), json!(report.passed));
                m.insert("checks".into(), json!(report.checks));
                m.insert("failures".into(), json!(report.failures));
                stdout.push_str(&line(m));
            }
            _ => {
                stdout.push_str(&report.to_string());
                stdout.push('\n');
            }
        }
        if !report.passed && failure.is_none() {
            let first = report.failures.first().cloned().unwrap_or_default();
            failure = Some(format!("criterion {} failed: {first}", report.id));
        }
    }
    Ok(Outcome { stdout, failure })
}
