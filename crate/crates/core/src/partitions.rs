//! Set partitions of `{1..n}`, admissible Dunkl multiplicities and the
//! counting functions `p(n)`, `q(n)` and `B_n`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{int, ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    EmptyBlock,
    IndexOutOfRange { index: usize, n: usize },
    Duplicate(usize),
    Missing(usize),
    Parse(String),
    NoSuchBlock(usize),
    AlphaNotInBlock { block: usize, alpha: usize },
    /// Refinement needs a block with more than two elements.
    BlockTooSmall { block: usize, size: usize },
    BadPair { i1: usize, i2: usize },
    WrongLength { expected: usize, found: usize },
    NotAdmissible(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::EmptyBlock => f.write_str("partition has an empty block"),
            PartitionError::IndexOutOfRange { index, n } => {
                write!(f, "index {index} outside 1..={n}")
            }
            PartitionError::Duplicate(i) => write!(f, "index {i} appears in two blocks"),
            PartitionError::Missing(i) => write!(f, "index {i} is not covered"),
            PartitionError::Parse(s) => write!(f, "cannot parse partition: {s}"),
            PartitionError::NoSuchBlock(j) => write!(f, "no block with index {j}"),
            PartitionError::AlphaNotInBlock { block, alpha } => {
                write!(f, "alpha {alpha} is not in block {block}")
            }
            PartitionError::BlockTooSmall { block, size } => {
                write!(f, "block {block} has {size} elements, refinement needs more than 2")
            }
            PartitionError::BadPair { i1, i2 } => {
                write!(f, "({i1}, {i2}) is not a pair of distinct elements of the block")
            }
            PartitionError::WrongLength { expected, found } => {
                write!(f, "expected {expected} multiplicities, found {found}")
            }
            PartitionError::NotAdmissible(why) => write!(f, "multiplicities not admissible: {why}"),
        }
    }
}

impl core::error::Error for PartitionError {}

/// A partition of `{1..n}` into blocks, each sorted, blocks sorted by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block.sort_unstable();
            for &i in block.iter() {
                if i == 0 || i > n {
                    return Err(PartitionError::IndexOutOfRange { index: i, n });
                }
                if seen[i] {
                    return Err(PartitionError::Duplicate(i));
                }
                seen[i] = true;
            }
        }
        if let Some(i) = (1..=n).find(|&i| !seen[i]) {
            return Err(PartitionError::Missing(i));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// `{1}|{2}|..|{n}`.
    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// The single block `{1..n}`.
    pub fn whole(n: usize) -> Self {
        SetPartition { n, blocks: vec![(1..=n).collect()] }
    }

    /// Consecutive blocks with the given sizes: `[1, 3, 3]` gives
    /// `{1}|{2,3,4}|{5,6,7}`.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, PartitionError> {
        let mut next = 1;
        let mut blocks = Vec::new();
        for &s in sizes {
            if s == 0 {
                return Err(PartitionError::EmptyBlock);
            }
            blocks.push((next..next + s).collect());
            next += s;
        }
        Self::new(next - 1, blocks)
    }

    /// Parses `{1}|{2,3,4}|{5,6,7}`; `n` is the largest index unless given.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, PartitionError> {
        let mut blocks = Vec::new();
        for part in text.split('|') {
            let part = part.trim();
            let inner = part
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| PartitionError::Parse(alloc::format!("block `{part}` is not braced")))?;
            let mut block = Vec::new();
            for item in inner.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                let i: usize = item
                    .parse()
                    .map_err(|_| PartitionError::Parse(alloc::format!("bad index `{item}`")))?;
                block.push(i);
            }
            blocks.push(block);
        }
        let n = n.unwrap_or_else(|| blocks.iter().flatten().copied().max().unwrap_or(0));
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks `l`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block `j`, 0-based.
    pub fn block(&self, j: usize) -> Result<&[usize], PartitionError> {
        self.blocks.get(j).map(Vec::as_slice).ok_or(PartitionError::NoSuchBlock(j))
    }

    /// Index of the block containing `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&i))
    }

    pub fn is_all_singletons(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_odd(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 1)
    }

    /// Block sizes in ascending order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    /// Same integer partition of `n`.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.n == other.n && self.shape() == other.shape()
    }

    /// `(l - n) / 2`.
    pub fn dunkl_weight(&self) -> Rational {
        ratio(self.len() as i64 - self.n as i64, 2)
    }

    /// Replaces block `j` by `{i1}`, `{i2}` and the rest of the block.
    pub fn refine(&self, j: usize, i1: usize, i2: usize) -> Result<Self, PartitionError> {
        let block = self.block(j)?;
        if block.len() <= 2 {
            return Err(PartitionError::BlockTooSmall { block: j, size: block.len() });
        }
        if i1 == i2 || !block.contains(&i1) || !block.contains(&i2) {
            return Err(PartitionError::BadPair { i1, i2 });
        }
        let rest: Vec<usize> = block.iter().copied().filter(|&i| i != i1 && i != i2).collect();
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != j)
            .map(|(_, b)| b.clone())
            .collect();
        blocks.push(vec![i1]);
        blocks.push(vec![i2]);
        blocks.push(rest);
        Self::new(self.n, blocks)
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.n == coarser.n
            && self
                .blocks
                .iter()
                .all(|b| coarser.blocks.iter().any(|c| b.iter().all(|i| c.contains(i))))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, block) in self.blocks.iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (t, i) in block.iter().enumerate() {
                if t > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Dunkl multiplicities `k_1..k_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySeq {
    values: Vec<Rational>,
}

impl MultiplicitySeq {
    pub fn new(values: Vec<Rational>) -> Self {
        MultiplicitySeq { values }
    }

    /// All zero.
    pub fn zeros(n: usize) -> Self {
        MultiplicitySeq { values: vec![Rational::zero(); n] }
    }

    /// `k_alpha = 0` for one `alpha` per block (default: the block minimum),
    /// `-1/2` elsewhere. `alphas[j]` overrides block `j`.
    pub fn canonical(p: &SetPartition, alphas: Option<&[usize]>) -> Result<Self, PartitionError> {
        let mut values = vec![ratio(-1, 2); p.n()];
        for (j, block) in p.blocks().iter().enumerate() {
            let alpha = match alphas {
                Some(a) => *a.get(j).ok_or(PartitionError::WrongLength {
                    expected: p.len(),
                    found: a.len(),
                })?,
                None => block[0],
            };
            if !block.contains(&alpha) {
                return Err(PartitionError::AlphaNotInBlock { block: j, alpha });
            }
            values[alpha - 1] = Rational::zero();
        }
        Ok(MultiplicitySeq { values })
    }

    /// `k_i = -1/2 + 1/(2 |A_j|)` for `i` in `A_j`.
    pub fn uniform(p: &SetPartition) -> Self {
        let mut values = vec![Rational::zero(); p.n()];
        for block in p.blocks() {
            let k = ratio(-1, 2) + ratio(1, 2 * block.len() as i64);
            for &i in block {
                values[i - 1] = k.clone();
            }
        }
        MultiplicitySeq { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `k_i`, 1-based.
    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i - 1]
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn check_admissible(&self, p: &SetPartition) -> Result<(), PartitionError> {
        if self.values.len() != p.n() {
            return Err(PartitionError::WrongLength { expected: p.n(), found: self.values.len() });
        }
        if let Some(i) = self.values.iter().position(|k| k.is_positive()) {
            return Err(PartitionError::NotAdmissible(alloc::format!("k{} > 0", i + 1)));
        }
        for (j, block) in p.blocks().iter().enumerate() {
            let sum = block.iter().fold(Rational::zero(), |a, &i| a + self.get(i));
            if sum * int(2) != int(1 - block.len() as i64) {
                return Err(PartitionError::NotAdmissible(alloc::format!(
                    "block {j} sums to the wrong value"
                )));
            }
            if block.iter().filter(|&&i| self.get(i).is_zero()).count() > 1 {
                return Err(PartitionError::NotAdmissible(alloc::format!(
                    "block {j} has more than one zero"
                )));
            }
        }
        Ok(())
    }

    pub fn is_admissible(&self, p: &SetPartition) -> bool {
        self.check_admissible(p).is_ok()
    }
}

impl fmt::Display for MultiplicitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, k) in self.values.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

/// Bell number by the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("row is nonempty"));
        for v in &row {
            let last = *next.last().expect("row is nonempty");
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

/// Number of integer partitions, by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u128 {
    let mut p: Vec<i128> = vec![0; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u128
}

/// Number of partitions of `n` into odd parts.
pub fn odd_partition_count(n: usize) -> u128 {
    let mut ways: Vec<u128> = vec![0; n + 1];
    ways[0] = 1;
    for part in (1..=n).step_by(2) {
        for m in part..=n {
            ways[m] += ways[m - part];
        }
    }
    ways[n]
}

/// Integer partitions of `n` as descending size lists, in reverse
/// lexicographic order.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for s in (1..=max.min(rest)).rev() {
            cur.push(s);
            go(rest - s, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Integer partitions of `n` into odd parts.
pub fn odd_integer_partitions(n: usize) -> Vec<Vec<usize>> {
    integer_partitions(n)
        .into_iter()
        .filter(|p| p.iter().all(|s| s % 2 == 1))
        .collect()
}

/// All set partitions of `{1..n}`, via restricted growth strings.
pub fn enumerate_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let blocks_count = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); blocks_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition::new(n, blocks).expect("restricted growth strings give partitions"));
        // next restricted growth string
        let mut pos = n;
        loop {
            if pos == 1 {
                return out;
            }
            pos -= 1;
            let prefix_max = rgs[..pos].iter().copied().max().unwrap_or(0);
            if rgs[pos] <= prefix_max {
                rgs[pos] += 1;
                for r in rgs.iter_mut().skip(pos + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// Text row `n | p(n) | q(n) | B_n | q(n) - 1`.
pub fn count_row(n: usize) -> String {
    let q = odd_partition_count(n);
    let mut s = n.to_string();
    for v in [partition_count(n), q, bell(n), q.saturating_sub(1)] {
        s.push_str(" | ");
        s.push_str(&v.to_string());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s, None).unwrap()
    }

    #[test]
    fn canonical_multiplicities_examples() {
        let k = MultiplicitySeq::canonical(&sp("{1,2,3}"), Some(&[1])).unwrap();
        assert_eq!(k.values(), &[int(0), ratio(-1, 2), ratio(-1, 2)]);
        assert_eq!(MultiplicitySeq::canonical(&SetPartition::singletons(4), None).unwrap(), MultiplicitySeq::zeros(4));
        let k = MultiplicitySeq::canonical(&sp("{1}|{2,3,4}|{5,6,7}"), None).unwrap();
        let h = ratio(-1, 2);
        assert_eq!(k.values(), &[int(0), int(0), h.clone(), h.clone(), int(0), h.clone(), h]);
        assert_eq!(
            MultiplicitySeq::canonical(&sp("{1,2}|{3}"), Some(&[3, 3])),
            Err(PartitionError::AlphaNotInBlock { block: 0, alpha: 3 })
        );
    }

    #[test]
    fn uniform_multiplicities_examples() {
        assert_eq!(MultiplicitySeq::uniform(&sp("{1,2,3}")).values(), &vec![ratio(-1, 3); 3][..]);
        assert_eq!(MultiplicitySeq::uniform(&sp("{1}|{2,3}")).get(1), &int(0));
        assert_eq!(MultiplicitySeq::uniform(&SetPartition::whole(5)).values(), &vec![ratio(-2, 5); 5][..]);
    }

    #[test]
    fn weights_and_oddness() {
        assert_eq!(sp("{1,2,3}|{4}|{5,6,7}").dunkl_weight(), int(-2));
        assert_eq!(SetPartition::whole(6).dunkl_weight(), ratio(-5, 2));
        assert_eq!(SetPartition::singletons(6).dunkl_weight(), int(0));
        assert!(sp("{1,2,3}|{4}|{5,6,7}").is_odd());
        assert!(!sp("{1,2}").is_odd());
        assert!(SetPartition::singletons(3).is_odd());
    }

    #[test]
    fn refinement_examples() {
        assert_eq!(SetPartition::whole(7).refine(0, 1, 2).unwrap(), sp("{1}|{2}|{3,4,5,6,7}"));
        assert_eq!(
            sp("{1,2,3}|{4}|{5,6,7}").refine(0, 1, 2).unwrap(),
            sp("{1}|{2}|{3}|{4}|{5,6,7}")
        );
        assert_eq!(sp("{1,2,3}").refine(0, 3, 1).unwrap(), SetPartition::singletons(3));
        assert!(matches!(sp("{1,2}|{3}").refine(0, 1, 2), Err(PartitionError::BlockTooSmall { .. })));
        assert!(matches!(sp("{1,2,3}").refine(0, 1, 1), Err(PartitionError::BadPair { .. })));
    }

    #[test]
    fn shapes() {
        assert_eq!(sp("{1}|{2,3,4}|{5,6,7}").shape(), vec![1, 3, 3]);
        assert!(sp("{1,2}|{3}").equivalent(&sp("{1}|{2,3}")));
        assert!(!sp("{1,2}|{3}").equivalent(&sp("{1,2,3}")));
    }

    #[test]
    fn parse_and_print() {
        let p = sp(" {5,6,7} | {1} |{4,2,3}");
        assert_eq!(p.to_string(), "{1}|{2,3,4}|{5,6,7}");
        assert!(matches!(SetPartition::parse("{1}|{3}", None), Err(PartitionError::Missing(2))));
        assert!(matches!(SetPartition::parse("{1}|{1,2}", None), Err(PartitionError::Duplicate(1))));
        assert!(SetPartition::parse("{1}|{2}", Some(3)).is_err());
        assert!(SetPartition::parse("1,2", None).is_err());
        assert!(SetPartition::parse("{1}|{0}", None).is_err());
    }

    #[test]
    fn counting_table() {
        let expected = [(1, 1, 1, 1), (2, 2, 1, 2), (3, 3, 2, 5), (4, 5, 2, 15), (5, 7, 3, 52), (7, 15, 5, 877)];
        for (n, p, q, b) in expected {
            assert_eq!((partition_count(n), odd_partition_count(n), bell(n)), (p, q, b), "n = {n}");
        }
        assert_eq!(count_row(7), "7 | 15 | 5 | 877 | 4");
    }

    #[test]
    fn integer_partition_lists() {
        assert_eq!(odd_integer_partitions(7), vec![vec![7], vec![5, 1, 1], vec![3, 3, 1], vec![3, 1, 1, 1, 1], vec![1; 7]]);
        for n in 0..15 {
            assert_eq!(integer_partitions(n).len() as u128, partition_count(n));
            assert_eq!(odd_integer_partitions(n).len() as u128, odd_partition_count(n));
        }
    }

    #[test]
    fn set_partition_enumeration_matches_bell() {
        for n in 1..=9 {
            let all = enumerate_set_partitions(n);
            assert_eq!(all.len() as u128, bell(n), "n = {n}");
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }

    fn arb_partition() -> impl Strategy<Value = SetPartition> {
        (1usize..=10).prop_flat_map(|n| {
            proptest::collection::vec(0usize..n, n).prop_map(move |labels| {
                let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
                for (i, &l) in labels.iter().enumerate() {
                    blocks[l].push(i + 1);
                }
                blocks.retain(|b| !b.is_empty());
                SetPartition::new(n, blocks).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn standard_multiplicities_are_admissible(p in arb_partition()) {
            let c = MultiplicitySeq::canonical(&p, None).unwrap();
            let u = MultiplicitySeq::uniform(&p);
            prop_assert!(c.is_admissible(&p));
            prop_assert!(u.is_admissible(&p));
            prop_assert_eq!(c.sum(), p.dunkl_weight());
            prop_assert_eq!(u.sum(), p.dunkl_weight());
        }

        #[test]
        fn odd_partitions_have_integer_weight(p in arb_partition()) {
            if p.is_odd() {
                prop_assert!(p.dunkl_weight().is_integer());
                prop_assert!(!p.dunkl_weight().is_positive());
            }
        }

        #[test]
        fn refinement_bookkeeping(p in arb_partition()) {
            for (j, block) in p.blocks().iter().enumerate() {
                if block.len() > 2 {
                    let r = p.refine(j, block[0], block[1]).unwrap();
                    prop_assert_eq!(r.len(), p.len() + 2);
                    prop_assert_eq!(r.dunkl_weight(), p.dunkl_weight() + int(1));
                    prop_assert!(r.refines(&p));
                }
            }
        }

        #[test]
        fn parse_print_round_trip(p in arb_partition()) {
            prop_assert_eq!(SetPartition::parse(&p.to_string(), Some(p.n())).unwrap(), p);
        }
    }
}
