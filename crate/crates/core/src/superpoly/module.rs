//! Explicit monomial bases of homogeneous components, permutation traces,
//! and brute-force irreducible multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::combinat::{enumerate_partitions, z_mu, Partition, Permutation};
use crate::symfunc::character;
use crate::Rational;

use super::algebra::{Dims, SuperMonomial};

/// Default ceiling on the number of monomials in a component basis.
pub const DEFAULT_BASIS_CAP: usize = 10_000_000;

/// Error when a requested component basis would exceed the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTooLarge {
    pub dimension: BigUint,
    pub cap: usize,
}

impl fmt::Display for ComponentTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "component has {} monomials, above the cap of {}",
            self.dimension, self.cap
        )
    }
}

impl std::error::Error for ComponentTooLarge {}

/// Dimension of the component of degree `alpha` in the commuting columns and
/// `beta` in the anticommuting columns, computed without enumeration.
pub fn component_dim(dims: Dims, alpha: &[u32], beta: &[u32]) -> BigUint {
    // trailing zero degrees beyond the declared columns are harmless
    assert!(alpha.iter().skip(dims.m).all(|&a| a == 0), "alpha too long");
    assert!(
        beta.iter().skip(dims.m_bar).all(|&b| b == 0),
        "beta too long"
    );
    let mut total = BigUint::one();
    for &a in alpha {
        total *= binomial(dims.n as u64 + a as u64 - 1, a as u64);
    }
    for &b in beta {
        if (b as usize) > dims.n {
            return BigUint::zero();
        }
        total *= binomial(dims.n as u64, b as u64);
    }
    total
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// All normal-form monomials of the given multidegree, sorted.
pub fn component_basis(
    dims: Dims,
    alpha: &[u32],
    beta: &[u32],
    cap: usize,
) -> Result<Vec<SuperMonomial>, ComponentTooLarge> {
    let dimension = component_dim(dims, alpha, beta);
    if dimension > BigUint::from(cap) {
        return Err(ComponentTooLarge { dimension, cap });
    }
    // Compositions of alpha_j into n parts, per commuting column.
    let mut x_choices: Vec<Vec<Vec<u32>>> = Vec::new();
    for j in 0..dims.m {
        let a = alpha.get(j).copied().unwrap_or(0);
        x_choices.push(compositions(a, dims.n));
    }
    // Row subsets of size beta_j, per anticommuting column.
    let mut t_choices: Vec<Vec<Vec<usize>>> = Vec::new();
    for j in 0..dims.m_bar {
        let b = beta.get(j).copied().unwrap_or(0) as usize;
        t_choices.push(subsets(dims.n, b));
    }
    if x_choices.iter().any(Vec::is_empty) || t_choices.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut x_pick = vec![0usize; dims.m];
    let mut t_pick = vec![0usize; dims.m_bar];
    loop {
        let mut x_exp = vec![0u32; dims.n * dims.m];
        for (j, &pick) in x_pick.iter().enumerate() {
            for (i, &e) in x_choices[j][pick].iter().enumerate() {
                x_exp[i * dims.m + j] = e;
            }
        }
        let mut thetas: Vec<u32> = Vec::new();
        for (j, &pick) in t_pick.iter().enumerate() {
            for &i in &t_choices[j][pick] {
                thetas.push((i * dims.m_bar + j) as u32);
            }
        }
        thetas.sort_unstable();
        out.push(SuperMonomial::from_raw(x_exp, thetas));
        // advance the mixed-radix counter
        let x_lens = x_choices.iter().map(Vec::len);
        let t_lens = t_choices.iter().map(Vec::len);
        let mut done = true;
        for (pick, len) in x_pick
            .iter_mut()
            .chain(t_pick.iter_mut())
            .zip(x_lens.chain(t_lens))
        {
            *pick += 1;
            if *pick < len {
                done = false;
                break;
            }
            *pick = 0;
        }
        if done {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn compositions(total: u32, slots: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; slots];
    fn rec(slot: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == current.len() {
            current[slot] = remaining;
            out.push(current.clone());
            return;
        }
        for v in 0..=remaining {
            current[slot] = v;
            rec(slot + 1, remaining - v, current, out);
        }
        current[slot] = 0;
    }
    if slots == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut current, &mut out);
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Trace of the canonical permutation of cycle type `mu` on the component of
/// multidegree `(alpha, beta)`.  Each basis monomial contributes the sign it
/// acquires when the permutation fixes it, and nothing otherwise.
pub fn trace_character(dims: Dims, alpha: &[u32], beta: &[u32], mu: &Partition) -> i64 {
    trace_character_capped(dims, alpha, beta, mu, DEFAULT_BASIS_CAP).expect("within default cap")
}

pub fn trace_character_capped(
    dims: Dims,
    alpha: &[u32],
    beta: &[u32],
    mu: &Partition,
    cap: usize,
) -> Result<i64, ComponentTooLarge> {
    assert_eq!(mu.size(), dims.n, "cycle type must be a partition of n");
    let sigma = Permutation::of_cycle_type(mu, dims.n);
    let basis = component_basis(dims, alpha, beta, cap)?;
    let mut trace = 0i64;
    for mono in &basis {
        let (image, sign) = mono.permute_rows(dims, &sigma);
        if image == *mono {
            trace += sign;
        }
    }
    Ok(trace)
}

/// Traces on all cycle types at once: the full character of the component.
pub fn module_character(dims: Dims, alpha: &[u32], beta: &[u32]) -> BTreeMap<Partition, i64> {
    enumerate_partitions(dims.n, None)
        .into_iter()
        .map(|mu| {
            let t = trace_character(dims, alpha, beta, &mu);
            (mu, t)
        })
        .collect()
}

/// Multiplicity of the irreducible indexed by `lambda` from a character
/// given as traces per cycle type: `sum_mu chi^lambda(mu) tr(mu) / z_mu`.
///
/// Panics if the result is not a non-negative integer, which would mean the
/// traces do not form a genuine character.
pub fn multiplicity_from_traces(traces: &BTreeMap<Partition, i64>, lambda: &Partition) -> i64 {
    let mut acc = Rational::zero();
    for (mu, &t) in traces {
        let chi = character(lambda, mu).expect("trace keys are partitions of n");
        acc += Rational::new(chi * num_bigint::BigInt::from(t), z_mu(mu));
    }
    assert!(
        acc.is_integer() && !acc.is_negative(),
        "character inner product must be a non-negative integer, got {acc} at lambda={lambda}"
    );
    i64::try_from(&acc.to_integer()).expect("multiplicity fits in i64")
}

/// Brute-force multiplicity of the irreducible `lambda` in the component of
/// multidegree `(alpha, beta)`: explicit traces paired against characters.
pub fn brute_multiplicity(dims: Dims, lambda: &Partition, alpha: &[u32], beta: &[u32]) -> i64 {
    assert_eq!(lambda.size(), dims.n, "lambda must be a partition of n");
    let traces = module_character(dims, alpha, beta);
    multiplicity_from_traces(&traces, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basis_examples() {
        let b = component_basis(Dims::new(2, 1, 0), &[1], &[], 100).unwrap();
        assert_eq!(b.len(), 2); // x[1,1], x[2,1]
        let b = component_basis(Dims::new(2, 0, 1), &[], &[2], 100).unwrap();
        assert_eq!(b.len(), 1); // th[1,1] th[2,1]
        let b = component_basis(Dims::new(2, 1, 1), &[1], &[1], 100).unwrap();
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn dimension_formula_matches_enumeration() {
        let dims = Dims::new(3, 2, 2);
        for alpha in [&[0u32, 0][..], &[1, 0], &[2, 1], &[3, 0]] {
            for beta in [&[0u32, 0][..], &[1, 0], &[2, 2], &[3, 1]] {
                let d = component_dim(dims, alpha, beta);
                let b = component_basis(dims, alpha, beta, 100_000).unwrap();
                assert_eq!(d, BigUint::from(b.len()), "alpha={alpha:?} beta={beta:?}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = component_basis(Dims::new(10, 2, 0), &[10, 10], &[], 100).unwrap_err();
        assert!(err.dimension > BigUint::from(100u32));
    }

    #[test]
    fn trace_examples() {
        // the swap negates th[1,1] th[2,1]
        assert_eq!(
            trace_character(Dims::new(2, 0, 1), &[], &[2], &pt("[2]")),
            -1
        );
        // identity on a 2-dimensional space
        assert_eq!(
            trace_character(Dims::new(2, 1, 0), &[1], &[], &pt("[1,1]")),
            2
        );
    }

    #[test]
    fn brute_multiplicity_examples() {
        let dims = Dims::new(2, 0, 1);
        assert_eq!(brute_multiplicity(dims, &pt("[1,1]"), &[], &[2]), 1);
        assert_eq!(brute_multiplicity(dims, &pt("[2]"), &[], &[2]), 0);
        assert_eq!(brute_multiplicity(dims, &pt("[2]"), &[], &[]), 1);
    }
}
