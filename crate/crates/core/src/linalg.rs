//! Exact rank computations over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

/// Rank of a dense matrix.
pub fn rank(rows: Vec<Vec<Rational>>) -> usize {
    let mut echelon = Echelon::default();
    for row in rows {
        let sparse: SparseRow = row
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        echelon.insert(sparse);
    }
    echelon.rank()
}

type SparseRow = BTreeMap<usize, Rational>;

/// Incremental row echelon form over sparse rows.
#[derive(Default)]
struct Echelon {
    /// Pivot column to its row, normalized to leading coefficient 1.
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Reduces `row` against the pivots; returns whether it added to the span.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((&lead, lead_value)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    let factor = lead_value.clone();
                    for (c, x) in pivot {
                        let entry = row.entry(*c).or_insert_with(Rational::zero);
                        *entry -= &factor * x;
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = Rational::from_integer(1.into()) / lead_value;
                    for x in row.values_mut() {
                        *x *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Coefficient matrix of `polys`, one row per polynomial, columns indexed by
/// `(monomial, algebra coordinate)`.
pub fn coefficient_matrix(polys: &[Polynomial]) -> Vec<Vec<Rational>> {
    let mut columns: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
    for p in polys {
        for (m, c) in p.iter() {
            for (t, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    let next = columns.len();
                    columns.entry((m.clone(), t)).or_insert(next);
                }
            }
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); columns.len()];
            for (m, c) in p.iter() {
                for (t, x) in c.iter().enumerate() {
                    if !x.is_zero() {
                        row[columns[&(m.clone(), t)]] = x.clone();
                    }
                }
            }
            row
        })
        .collect()
}

/// Dimension of the real span of `polys`.
pub fn polynomial_rank(polys: &[Polynomial]) -> usize {
    let mut columns: BTreeMap<(Monomial, usize), usize> = BTreeMap::new();
    let mut echelon = Echelon::default();
    for p in polys {
        let mut row = SparseRow::new();
        for (m, c) in p.iter() {
            for (t, x) in c.iter().enumerate() {
                if !x.is_zero() {
                    let next = columns.len();
                    let col = *columns.entry((m.clone(), t)).or_insert(next);
                    row.insert(col, x.clone());
                }
            }
        }
        echelon.insert(row);
    }
    echelon.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraSpec, HypercomplexBasis};
    use crate::rational::int;

    #[test]
    fn small_ranks() {
        let m = |v: &[&[i64]]| v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>();
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(Vec::new()), 0);
    }

    #[test]
    fn polynomial_spans() {
        let b = HypercomplexBasis::standard(&AlgebraSpec::clifford(2).unwrap());
        let ps: Vec<Polynomial> = ["x1*e1 + x2", "x2", "x1*e1", "x0*e12"]
            .iter()
            .map(|s| Polynomial::parse(&b, s).unwrap())
            .collect();
        assert_eq!(polynomial_rank(&ps), 3);
    }
}
