//! Exact rank of sparse rational vectors indexed by monomials, via
//! fraction-free (Bareiss) elimination over the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::superpoly::{SuperMonomial, SuperPolynomial};

/// Rank of the span of the given polynomials as vectors over the monomial
/// basis.  Denominators are cleared per row, so elimination stays in the
/// integers throughout.
pub fn rank_of_polynomials(polys: &[SuperPolynomial]) -> usize {
    // index the union of monomials
    let mut columns: BTreeMap<&SuperMonomial, usize> = BTreeMap::new();
    for p in polys {
        for (mono, _) in p.terms() {
            let next = columns.len();
            columns.entry(mono).or_insert(next);
        }
    }
    let width = columns.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let mut lcm = BigInt::one();
        for (_, c) in p.terms() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let mut row = vec![BigInt::zero(); width];
        for (mono, c) in p.terms() {
            row[columns[mono]] = c.numer() * (&lcm / c.denom());
        }
        rows.push(row);
    }
    rank_integer(rows)
}

/// Bareiss fraction-free Gaussian elimination; every division is exact.
pub fn rank_integer(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            for c in col + 1..width {
                let val = (&pivot * &rows[r][c] - &rows[r][col] * &rows[rank][c]) / &prev;
                rows[r][c] = val;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
