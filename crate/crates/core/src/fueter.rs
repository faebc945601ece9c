//! The operators `tau_j`, the Laplacian decomposition of `F_P`, iterated
//! Laplacians on odd partitions and Fueter trees.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::operators::{cauchy_riemann, delta2, laplacian, OperatorContext, OperatorError};
use crate::partitions::{odd_partition_count, PartitionError, SetPartition};
use crate::poly::Polynomial;
use crate::rational::{ratio, Rational};
use crate::spaces::{is_member_fp, is_p_slice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FueterError {
    Operator(OperatorError),
    /// Block `j` (0-based) has exactly two elements.
    BlockSizeTwo(usize),
    NotInFP,
    NotOddPartition(String),
    /// Odd `n` where the even-dimensional descent was requested.
    NotEvenDimension(usize),
    /// `tau_j` gave different images for the two indices.
    AlphaDependence { block: usize, alphas: (usize, usize) },
    /// `tau_j f` is not in `F` of the refined partition.
    ImageNotInFPj { block: usize, target: String },
    /// `Delta f` differs from the sum of the `tau_j f`; carries the first
    /// offending term.
    DecompositionMismatch(String),
}

impl fmt::Display for FueterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FueterError::Operator(e) => write!(f, "{e}"),
            FueterError::BlockSizeTwo(j) => write!(f, "block {} has two elements", j + 1),
            FueterError::NotInFP => f.write_str("input is not in F_P"),
            FueterError::NotOddPartition(p) => write!(f, "partition {p} has a block of even size"),
            FueterError::NotEvenDimension(n) => write!(f, "n = {n} is odd"),
            FueterError::AlphaDependence { block, alphas } => write!(
                f,
                "tau_{} differs between alpha = {} and alpha = {}",
                block + 1,
                alphas.0,
                alphas.1
            ),
            FueterError::ImageNotInFPj { block, target } => {
                write!(f, "tau_{} image is not in F for {target}", block + 1)
            }
            FueterError::DecompositionMismatch(t) => {
                write!(f, "Laplacian differs from the tau sum at {t}")
            }
        }
    }
}

impl core::error::Error for FueterError {}

impl From<OperatorError> for FueterError {
    fn from(e: OperatorError) -> Self {
        FueterError::Operator(e)
    }
}

impl From<PartitionError> for FueterError {
    fn from(e: PartitionError) -> Self {
        FueterError::Operator(OperatorError::Partition(e))
    }
}

/// `(1 - |A_j|)/2 delta2^alpha f` without checks.
pub fn tau_unchecked(f: &Polynomial, block: &[usize], alpha: usize) -> Polynomial {
    if block.len() == 1 {
        return Polynomial::zero(f.basis());
    }
    delta2(f, alpha).scale(&ratio(1 - block.len() as i64, 2))
}

/// Two indices of `block` used to test independence of `alpha`.
fn alpha_pair(block: &[usize], alpha: usize) -> usize {
    *block.iter().rev().find(|&&i| i != alpha).unwrap_or(&alpha)
}

fn check_block(ctx: &OperatorContext, j: usize) -> Result<&[usize], FueterError> {
    let block = ctx.block(j)?;
    if block.len() == 2 {
        return Err(FueterError::BlockSizeTwo(j));
    }
    Ok(block)
}

/// `tau_j` for `f` already known to be in `F_P`, refining block `j` at
/// `pair`. Checks independence of `alpha` and membership of the image.
pub fn tau_with_pair(
    ctx: &OperatorContext,
    f: &Polynomial,
    j: usize,
    alpha: Option<usize>,
    pair: (usize, usize),
) -> Result<Polynomial, FueterError> {
    let block = check_block(ctx, j)?;
    if block.len() == 1 {
        return Ok(Polynomial::zero(f.basis()));
    }
    let alpha = alpha.unwrap_or(ctx.alphas()[j]);
    if !block.contains(&alpha) {
        return Err(PartitionError::AlphaNotInBlock { block: j, alpha }.into());
    }
    let image = tau_unchecked(f, block, alpha);
    let other = alpha_pair(block, alpha);
    if tau_unchecked(f, block, other) != image {
        return Err(FueterError::AlphaDependence { block: j, alphas: (alpha, other) });
    }
    let target = ctx.partition().refine(j, pair.0, pair.1)?;
    let target_ctx = ctx.for_partition(target.clone())?;
    if !is_member_fp(&target_ctx, &image) {
        return Err(FueterError::ImageNotInFPj { block: j, target: target.to_string() });
    }
    Ok(image)
}

/// `tau_j f`, checking that `f` is in `F_P` and that the image lies in `F`
/// of the partition splitting off the first two elements of `A_j`.
pub fn tau(ctx: &OperatorContext, f: &Polynomial, j: usize, alpha: Option<usize>) -> Result<Polynomial, FueterError> {
    let block = check_block(ctx, j)?;
    if !is_member_fp(ctx, f) {
        return Err(FueterError::NotInFP);
    }
    if block.len() == 1 {
        return Ok(Polynomial::zero(f.basis()));
    }
    let pair = (block[0], block[1]);
    tau_with_pair(ctx, f, j, alpha, pair)
}

/// `Delta f = sum_j tau_j f` over the blocks with more than two elements.
pub fn laplacian_decomposition(ctx: &OperatorContext, f: &Polynomial) -> Result<Vec<(usize, Polynomial)>, FueterError> {
    if let Some(j) = ctx.partition().blocks().iter().position(|b| b.len() == 2) {
        return Err(FueterError::BlockSizeTwo(j));
    }
    if !is_member_fp(ctx, f) {
        return Err(FueterError::NotInFP);
    }
    let mut parts = Vec::new();
    let mut sum = Polynomial::zero(f.basis());
    for (j, block) in ctx.partition().blocks().iter().enumerate() {
        if block.len() < 3 {
            continue;
        }
        let g = tau_with_pair(ctx, f, j, None, (block[0], block[1]))?;
        sum = &sum + &g;
        parts.push((j, g));
    }
    let diff = &laplacian(f) - &sum;
    if let Some(t) = diff.leading_term_text() {
        return Err(FueterError::DecompositionMismatch(t));
    }
    Ok(parts)
}

/// Iterated Laplacians `Delta^i f` for `i = 0..=steps`.
pub fn iterated_laplacians(f: &Polynomial, steps: usize) -> Vec<Polynomial> {
    let mut out = vec![f.clone()];
    for _ in 0..steps {
        let next = laplacian(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// Outcome of the iterated-Laplacian checks on an odd partition.
#[derive(Clone, Debug)]
pub struct FueterReport {
    /// `(n - l)/2`.
    pub steps: usize,
    /// `Delta^steps f`.
    pub top: Polynomial,
    /// First `i` with `Delta^i f` not `P`-slice.
    pub first_non_slice: Option<usize>,
    pub top_monogenic: bool,
    /// `Delta^(steps + 1) f = 0`.
    pub polyharmonic: bool,
}

impl FueterReport {
    pub fn passed(&self) -> bool {
        self.first_non_slice.is_none() && self.top_monogenic && self.polyharmonic
    }
}

fn fueter_steps(p: &SetPartition) -> Result<usize, FueterError> {
    if !p.is_odd() {
        return Err(FueterError::NotOddPartition(p.to_string()));
    }
    Ok((p.n() - p.len()) / 2)
}

/// Checks that `Delta^((n-l)/2) f` is monogenic and `P`-slice, that every
/// intermediate iterate is `P`-slice and that one more Laplacian vanishes.
pub fn verify_general_fueter(ctx: &OperatorContext, f: &Polynomial) -> Result<FueterReport, FueterError> {
    let steps = fueter_steps(ctx.partition())?;
    if !is_member_fp(ctx, f) {
        return Err(FueterError::NotInFP);
    }
    let mut iterates = iterated_laplacians(f, steps + 1);
    let after = iterates.pop().expect("steps + 2 entries");
    let first_non_slice = iterates.iter().position(|g| !is_p_slice(ctx, g));
    let top = iterates.pop().expect("steps + 1 entries");
    Ok(FueterReport {
        steps,
        top_monogenic: cauchy_riemann(&top).is_zero(),
        top,
        first_non_slice,
        polyharmonic: after.is_zero(),
    })
}

/// `Delta^((n-l)/2 + 1) f = 0` for odd `P`.
pub fn verify_polyharmonic(ctx: &OperatorContext, f: &Polynomial) -> Result<bool, FueterError> {
    let steps = fueter_steps(ctx.partition())?;
    Ok(iterated_laplacians(f, steps + 1).last().is_some_and(Polynomial::is_zero))
}

/// Outcome of the even-dimensional descent.
#[derive(Clone, Debug)]
pub struct EvenDescentReport {
    /// `{1}|..|{n-2}|{n-1,n}`.
    pub target: SetPartition,
    /// `Delta^((n-2)/2) f`.
    pub image: Polynomial,
    pub in_target: bool,
}

/// For slice-regular `f` with `n` even, checks `Delta^((n-2)/2) f` against
/// `F` of `{1}|..|{n-2}|{n-1,n}`.
pub fn even_case_descent(ctx: &OperatorContext, f: &Polynomial) -> Result<EvenDescentReport, FueterError> {
    let n = ctx.basis().n();
    if n % 2 == 1 {
        return Err(FueterError::NotEvenDimension(n));
    }
    let whole = ctx.for_partition(SetPartition::whole(n))?;
    if !is_member_fp(&whole, f) {
        return Err(FueterError::NotInFP);
    }
    let mut blocks: Vec<Vec<usize>> = (1..n - 1).map(|i| vec![i]).collect();
    blocks.push(vec![n - 1, n]);
    let target = SetPartition::new(n, blocks)?;
    let image = iterated_laplacians(f, (n - 2) / 2).pop().expect("nonempty");
    let target_ctx = ctx.for_partition(target.clone())?;
    Ok(EvenDescentReport { in_target: is_member_fp(&target_ctx, &image), image, target })
}

/// Which two elements of a block a Fueter step splits off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairPolicy {
    #[default]
    Smallest,
    Largest,
    SmallestAndLargest,
}

impl PairPolicy {
    pub fn pair(self, block: &[usize]) -> (usize, usize) {
        let n = block.len();
        match self {
            PairPolicy::Smallest => (block[0], block[1]),
            PairPolicy::Largest => (block[n - 2], block[n - 1]),
            PairPolicy::SmallestAndLargest => (block[0], block[n - 1]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub partition: SetPartition,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: usize,
    pub child: usize,
    /// 0-based block of the parent partition.
    pub block: usize,
    pub pair: (usize, usize),
    /// Index used in `delta2`, the smallest element of the block.
    pub alpha: usize,
    /// The parent has a single block of size above one, so `tau_j = Delta`.
    pub unary: bool,
}

/// Spaces `F_P` reachable from an odd partition by Fueter steps.
#[derive(Clone, Debug)]
pub struct FueterTree {
    nodes: Vec<TreeNode>,
    edges: Vec<TreeEdge>,
    merge_leaves: bool,
}

impl FueterTree {
    /// Nodes are identified by partition; the all-singletons leaf is shared.
    pub fn build(root: &SetPartition, policy: PairPolicy) -> Result<Self, FueterError> {
        Self::build_with(root, policy, true)
    }

    /// With `merge_leaves = false` every edge ending at the all-singletons
    /// partition gets its own leaf node.
    pub fn build_with(root: &SetPartition, policy: PairPolicy, merge_leaves: bool) -> Result<Self, FueterError> {
        fueter_steps(root)?;
        let mut tree = FueterTree { nodes: Vec::new(), edges: Vec::new(), merge_leaves };
        let mut index: BTreeMap<SetPartition, usize> = BTreeMap::new();
        tree.nodes.push(TreeNode { partition: root.clone(), depth: 0 });
        index.insert(root.clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(parent) = frontier.pop() {
            let TreeNode { partition, depth } = tree.nodes[parent].clone();
            let big: Vec<usize> = (0..partition.len()).filter(|&j| partition.blocks()[j].len() > 1).collect();
            for &j in &big {
                let block = &partition.blocks()[j];
                let pair = policy.pair(block);
                let child_partition = partition.refine(j, pair.0, pair.1)?;
                let leaf = child_partition.is_all_singletons();
                let existing = if leaf && !merge_leaves { None } else { index.get(&child_partition).copied() };
                let child = match existing {
                    Some(c) => c,
                    None => {
                        tree.nodes.push(TreeNode { partition: child_partition.clone(), depth: depth + 1 });
                        let c = tree.nodes.len() - 1;
                        if !(leaf && !merge_leaves) {
                            index.insert(child_partition, c);
                        }
                        if !leaf {
                            frontier.push(c);
                        }
                        c
                    }
                };
                tree.edges.push(TreeEdge { parent, child, block: j, pair, alpha: block[0], unary: big.len() == 1 });
            }
        }
        tree.edges.sort_by_key(|e| (e.parent, e.child, e.block));
        Ok(tree)
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn root(&self) -> &SetPartition {
        &self.nodes[0].partition
    }

    pub fn merges_leaves(&self) -> bool {
        self.merge_leaves
    }

    /// `(n - l)/2` for the root.
    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    pub fn root_weight(&self) -> Rational {
        self.root().dunkl_weight()
    }

    pub fn children(&self, node: usize) -> impl Iterator<Item = &TreeEdge> + '_ {
        self.edges.iter().filter(move |e| e.parent == node)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.children(i).next().is_none()).collect()
    }

    /// Largest number of children of a node.
    pub fn arity(&self) -> usize {
        (0..self.nodes.len()).map(|i| self.children(i).count()).max().unwrap_or(0)
    }

    /// The tree quotiented by partition shape: each shape with the shapes of
    /// its children.
    pub fn reduced(&self) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
        let mut out: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
        for node in &self.nodes {
            out.entry(node.partition.shape()).or_default();
        }
        for e in &self.edges {
            let children = out.entry(self.nodes[e.parent].partition.shape()).or_default();
            let shape = self.nodes[e.child].partition.shape();
            if !children.contains(&shape) {
                children.push(shape);
            }
        }
        out
    }

    /// Pushes `f` from the root along every edge with `tau_j`, checking the
    /// weight step, `alpha`-independence and membership of each image.
    /// Returns the number of edge traversals.
    pub fn verify_edges(&self, ctx: &OperatorContext, f: &Polynomial) -> Result<usize, FueterError> {
        if ctx.partition() != self.root() {
            return Err(FueterError::NotInFP);
        }
        if !is_member_fp(ctx, f) {
            return Err(FueterError::NotInFP);
        }
        let mut count = 0;
        let mut stack = vec![(0usize, f.clone())];
        while let Some((node, g)) = stack.pop() {
            let node_ctx = ctx.for_partition(self.nodes[node].partition.clone())?;
            for e in self.children(node) {
                let parent_w = self.nodes[e.parent].partition.dunkl_weight();
                let child_w = self.nodes[e.child].partition.dunkl_weight();
                if child_w != parent_w + Rational::from_integer(1.into()) {
                    return Err(FueterError::ImageNotInFPj {
                        block: e.block,
                        target: self.nodes[e.child].partition.to_string(),
                    });
                }
                let image = tau_with_pair(&node_ctx, &g, e.block, Some(e.alpha), e.pair)?;
                count += 1;
                stack.push((e.child, image));
            }
        }
        Ok(count)
    }
}

/// Non-trivial Fueter trees on an `(n+1)`-dimensional subspace, `q(n) - 1`.
pub fn count_fueter_trees(n: usize) -> u128 {
    odd_partition_count(n).saturating_sub(1)
}
