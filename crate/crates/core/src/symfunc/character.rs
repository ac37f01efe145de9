//! Irreducible symmetric group characters via the Murnaghan-Nakayama rule.
//!
//! `chi^lambda(mu)` is computed by recursively stripping border ribbons of
//! the sizes in `mu` from `lambda`, working on the set of first-column hook
//! lengths: removing a ribbon of length `r` replaces a hook length `b` by
//! `b - r` (allowed when `b - r` is not already present), with sign given by
//! the number of hook lengths strictly between them.  Values are memoized in
//! a process-wide table that is safe for concurrent use.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{enumerate_partitions, z_mu, Partition};

/// Error from the symmetric function layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    /// A character value `chi^lambda(mu)` was requested with `|lambda| != |mu|`.
    DegreeMismatch { lambda: Partition, mu: Partition },
    /// A Frobenius image was requested without a value for some cycle type.
    MissingCycleType(Partition),
}

impl std::fmt::Display for SymFuncError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymFuncError::DegreeMismatch { lambda, mu } => {
                write!(
                    f,
                    "character requires |lambda| = |mu|, got {lambda} and {mu}"
                )
            }
            SymFuncError::MissingCycleType(mu) => {
                write!(f, "no character value supplied for cycle type {mu}")
            }
        }
    }
}

impl std::error::Error for SymFuncError {}

fn memo() -> &'static Mutex<HashMap<(Partition, Partition), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The irreducible character value `chi^lambda(mu)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt, SymFuncError> {
    if lambda.size() != mu.size() {
        return Err(SymFuncError::DegreeMismatch {
            lambda: lambda.clone(),
            mu: mu.clone(),
        });
    }
    Ok(character_rec(lambda, mu))
}

fn character_rec(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = memo().lock().unwrap().get(&key) {
        return v.clone();
    }
    let r = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec());
    // First-column hook lengths, strictly decreasing.
    let ell = lambda.len();
    let hooks: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (ell - 1 - i) as u32)
        .collect();
    let mut total = BigInt::zero();
    for (pos, &b) in hooks.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if hooks.contains(&target) {
            continue;
        }
        // Hook lengths strictly between target and b give the ribbon height.
        let between = hooks.iter().filter(|&&h| h > target && h < b).count();
        let sign = if between % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let mut new_hooks = hooks.clone();
        new_hooks[pos] = target;
        new_hooks.sort_unstable_by(|a, b| b.cmp(a));
        let reduced = partition_from_hooks(&new_hooks);
        total += sign * character_rec(&reduced, &rest);
    }
    memo().lock().unwrap().insert(key, total.clone());
    total
}

/// Rebuild a partition from a strictly decreasing hook length vector,
/// dropping the rows that became empty.
fn partition_from_hooks(hooks: &[u32]) -> Partition {
    let ell = hooks.len();
    let parts: Vec<u32> = hooks
        .iter()
        .enumerate()
        .map(|(i, &h)| h - (ell - 1 - i) as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts)
}

/// The full character table of `S_n`, with rows and columns indexed by the
/// partitions of `n` in the standard enumeration order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    values: BTreeMap<(Partition, Partition), BigInt>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let parts = enumerate_partitions(n, None);
        let mut values = BTreeMap::new();
        for lam in &parts {
            for mu in &parts {
                values.insert((lam.clone(), mu.clone()), character_rec(lam, mu));
            }
        }
        CharacterTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> &BigInt {
        &self.values[&(lambda.clone(), mu.clone())]
    }

    /// Column orthogonality: `sum_lambda chi^lambda(mu) chi^lambda(nu)` is
    /// `z_mu` when `mu = nu` and zero otherwise.
    pub fn check_column_orthogonality(&self) -> bool {
        let parts = enumerate_partitions(self.n, None);
        for mu in &parts {
            for nu in &parts {
                let sum: BigInt = parts
                    .iter()
                    .map(|lam| self.value(lam, mu) * self.value(lam, nu))
                    .sum();
                let expected = if mu == nu { z_mu(mu) } else { BigInt::zero() };
                if sum != expected {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn chi(l: &str, m: &str) -> BigInt {
        character(&pt(l), &pt(m)).unwrap()
    }

    #[test]
    fn trivial_character_is_one() {
        for mu in enumerate_partitions(5, None) {
            assert_eq!(character(&pt("[5]"), &mu).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn sign_character() {
        // chi^{(1^n)}(mu) = (-1)^{n - l(mu)}
        for n in 1..=6usize {
            let column = Partition::new(vec![1; n]);
            for mu in enumerate_partitions(n, None) {
                let expected = if (n - mu.len()) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                assert_eq!(character(&column, &mu).unwrap(), expected, "mu={mu}");
            }
        }
        assert_eq!(chi("[1,1,1]", "[2,1]"), -BigInt::one());
    }

    #[test]
    fn dimension_counts_standard_tableaux() {
        // chi^lambda(1^n) equals the number of standard tableaux of shape
        // lambda, counted here by brute-force growth of the shape.
        fn standard_tableaux(lambda: &Partition) -> u64 {
            if lambda.is_empty() {
                return 1;
            }
            // remove each outer corner and recurse
            let mut total = 0;
            let parts = lambda.parts();
            for i in 0..parts.len() {
                let is_corner = i + 1 == parts.len() || parts[i] > parts[i + 1];
                if is_corner {
                    let mut v = parts.to_vec();
                    v[i] -= 1;
                    total += standard_tableaux(&Partition::from_unsorted(&v));
                }
            }
            total
        }
        for n in 1..=7usize {
            let ones = Partition::new(vec![1; n]);
            for lam in enumerate_partitions(n, None) {
                assert_eq!(
                    character(&lam, &ones).unwrap(),
                    BigInt::from(standard_tableaux(&lam)),
                    "lambda={lam}"
                );
            }
        }
        assert_eq!(chi("[2,1]", "[1,1,1]"), BigInt::from(2));
    }

    #[test]
    fn mismatched_degrees_rejected() {
        assert!(character(&pt("[2]"), &pt("[3]")).is_err());
    }

    #[test]
    fn column_orthogonality_small() {
        for n in 1..=7 {
            assert!(CharacterTable::new(n).check_column_orthogonality(), "n={n}");
        }
    }
}
